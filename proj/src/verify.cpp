#include "podles/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

namespace podles {

bool all_pass(const std::vector<Report>& reports) {
  return std::all_of(reports.begin(), reports.end(), [](const Report& r) { return r.pass; });
}

nlohmann::json to_json(const Report& r) {
  return nlohmann::json{{"relation_id", r.relation_id},
                        {"max_residual", r.max_residual},
                        {"vectors_checked", r.vectors_checked},
                        {"vectors_skipped", r.vectors_skipped},
                        {"tolerance", r.tolerance},
                        {"pass", r.pass}};
}

nlohmann::json to_json(const std::vector<Report>& reports) {
  auto arr = nlohmann::json::array();
  for (const auto& r : reports) arr.push_back(to_json(r));
  return arr;
}

namespace {

Real column_norm(const Operator& m, Eigen::Index col) {
  Real s = 0;
  for (Operator::InnerIterator it(m, col); it; ++it) s += std::norm(it.value());
  return std::sqrt(s);
}

bool inside(const Rep& r, std::size_t i, std::array<int, 2> reach) {
  const auto& lv = r.levels[i];
  return lv[0] + reach[0] <= r.cutoff[0] && lv[1] + reach[1] <= r.cutoff[1];
}

/// Largest upward level shift actually present in a matrix.
std::array<int, 2> measured_reach(const Rep& r, const Operator& m) {
  std::array<int, 2> reach{0, 0};
  for (int k = 0; k < m.outerSize(); ++k) {
    for (Operator::InnerIterator it(m, k); it; ++it) {
      const auto& to = r.levels[static_cast<std::size_t>(it.row())];
      const auto& from = r.levels[static_cast<std::size_t>(it.col())];
      reach[0] = std::max(reach[0], to[0] - from[0]);
      reach[1] = std::max(reach[1], to[1] - from[1]);
    }
  }
  return reach;
}

/// Resolves generator letters to tagged matrices, inverting diagonals for
/// inverse letters the representation does not carry.
class LetterTable {
 public:
  explicit LetterTable(const Rep& r) : r_(r) {}

  bool available(Generator g) {
    try {
      (void)get(g);
      return true;
    } catch (const ParameterError&) {
      return false;
    }
  }

  const TaggedOperator& get(Generator g) {
    if (r_.has(g)) return r_.op(g);
    if (auto it = derived_.find(g); it != derived_.end()) return it->second;
    if (auto inv = inverse_letter(g); inv && r_.has(*inv)) {
      try {
        Operator m = diagonal_inverse(r_.op(*inv).matrix);
        return derived_.emplace(g, TaggedOperator{std::move(m), {0, 0}}).first->second;
      } catch (const ConstructionError&) {
      }
    }
    throw ParameterError("representation '" + r_.kind + "' does not provide " +
                         std::string(to_string(g)));
  }

 private:
  const Rep& r_;
  std::map<Generator, TaggedOperator> derived_;
};

std::vector<OperatorTerm> terms_of(const AlgebraElement& x, const Rep& r, LetterTable& letters) {
  std::vector<OperatorTerm> terms;
  const EvalPoint at = r.params.point();
  for (const auto& [w, c] : x.terms()) {
    OperatorTerm t;
    t.coeff = Complex(eval(c, at));
    for (Generator g : w) t.factors.push_back(&letters.get(g));
    terms.push_back(std::move(t));
  }
  return terms;
}

Operator product(const Rep& r, const OperatorTerm& t) {
  Operator m = identity_operator(r.dim());
  for (const TaggedOperator* f : t.factors) m = Operator(m * f->matrix);
  return t.coeff * m;
}

std::array<int, 2> term_reach(const OperatorTerm& t) {
  std::array<int, 2> reach{0, 0};
  for (const TaggedOperator* f : t.factors) reach = reach_sum(reach, f->reach);
  return reach;
}

Report finish(Report rep) {
  rep.pass = rep.vectors_checked >= 1 && rep.max_residual <= rep.tolerance;
  return rep;
}

}  // namespace

Report check_identity(const Rep& r, std::string id, const std::vector<OperatorTerm>& terms, Real tol) {
  Report rep;
  rep.relation_id = std::move(id);
  rep.tolerance = tol;
  std::vector<Operator> products;
  std::array<int, 2> reach{0, 0};
  for (const auto& t : terms) {
    products.push_back(product(r, t));
    reach = reach_max(reach, term_reach(t));
  }
  Operator total(r.dim(), r.dim());
  for (const auto& p : products) total += p;
  for (std::size_t i = 0; i < r.basis.size(); ++i) {
    if (!inside(r, i, reach)) {
      ++rep.vectors_skipped;
      continue;
    }
    ++rep.vectors_checked;
    const auto col = static_cast<Eigen::Index>(i);
    Real scale = 0;
    for (const auto& p : products) scale += column_norm(p, col);
    const Real res = column_norm(total, col) / std::max<Real>(1, scale);
    if (!std::isfinite(res)) rep.max_residual = std::numeric_limits<Real>::infinity();
    else rep.max_residual = std::max(rep.max_residual, res);
  }
  return finish(rep);
}

Operator evaluate(const AlgebraElement& x, const Rep& r) {
  LetterTable letters(r);
  Operator total(r.dim(), r.dim());
  for (const auto& t : terms_of(x, r, letters)) total += product(r, t);
  return total;
}

std::vector<Report> check_relations(const Rep& r, const Presentation& p, Real tol) {
  LetterTable letters(r);
  std::vector<Report> out;
  for (const auto& rel : p.relations())
    out.push_back(check_identity(r, p.name() + ":" + rel.id, terms_of(rel.difference(), r, letters), tol));
  return out;
}

std::vector<Report> check_star(const Rep& r, const Presentation& p, Real tol) {
  LetterTable letters(r);
  std::vector<Report> out;
  std::vector<TaggedOperator> adjoints;
  adjoints.reserve(p.alphabet().size() + 1);
  for (Generator g : p.alphabet()) {
    if (!letters.available(g)) continue;
    const AlgebraElement& s = p.star_of(g);
    bool ok = true;
    for (const auto& [w, c] : s.terms())
      for (Generator h : w) ok = ok && letters.available(h);
    if (!ok) continue;
    Operator adj = letters.get(g).matrix.adjoint();
    const auto reach = measured_reach(r, adj);
    adjoints.push_back(TaggedOperator{std::move(adj), reach});
    auto terms = terms_of(s, r, letters);
    terms.push_back(OperatorTerm{Complex(-1), {&adjoints.back()}});
    out.push_back(check_identity(r, "star:" + std::string(to_string(g)), terms, tol));
  }
  if (r.has("x1") && r.has("x-1")) {
    const Real q = r.params.q_value();
    Operator adj = r.op("x1").matrix.adjoint();
    const auto reach = measured_reach(r, adj);
    adjoints.push_back(TaggedOperator{std::move(adj), reach});
    out.push_back(check_identity(
        r, "star:x-1",
        {OperatorTerm{Complex(1), {&r.op("x-1")}}, OperatorTerm{Complex(1 / q), {&adjoints.back()}}},
        tol));
  }
  return out;
}

std::vector<Report> check_star(const Rep& r, Real tol) {
  return check_star(r, make_presentation(r.presentation, r.regime), tol);
}

std::vector<Report> check_commutant(const Rep& r, const std::vector<NamedOperator>& set_a,
                                    const std::vector<NamedOperator>& set_b, Real tol) {
  std::vector<Report> out;
  for (const auto& [na, a] : set_a)
    for (const auto& [nb, b] : set_b)
      out.push_back(check_identity(r, "[" + na + "," + nb + "]",
                                   {OperatorTerm{Complex(1), {a, b}}, OperatorTerm{Complex(-1), {b, a}}},
                                   tol));
  return out;
}

Report check_restriction_decomposition(const Rep& r, HalfInt l0, Real tol) {
  Report rep;
  rep.relation_id = "restriction:T(l0+n)";
  rep.tolerance = tol;
  rep.vectors_checked = r.dim();
  if (r.basis_kind != BasisKind::lj || r.basis.empty() || r.basis.front().first != l0.doubled) {
    rep.max_residual = std::numeric_limits<Real>::infinity();
    rep.pass = false;
    return rep;
  }
  // Expected E, F, K from the spin representations, placed blockwise.
  std::map<std::string, std::vector<Eigen::Triplet<Complex>>> expected;
  int offset = 0;
  while (offset < r.dim()) {
    const int L = r.basis[static_cast<std::size_t>(offset)].first;
    const Rep spin = build_spin(HalfInt::from_doubled(L), r.params.q);
    for (int k = 0; k < spin.dim(); ++k) {
      const auto idx = static_cast<std::size_t>(offset + k);
      if (idx >= r.basis.size() || !(r.basis[idx] == spin.basis[static_cast<std::size_t>(k)])) {
        rep.max_residual = std::numeric_limits<Real>::infinity();
        rep.pass = false;
        return rep;
      }
    }
    for (const char* name : {"E", "F", "K"}) {
      const Operator& m = spin.op(name).matrix;
      for (int k = 0; k < m.outerSize(); ++k)
        for (Operator::InnerIterator it(m, k); it; ++it)
          expected[name].emplace_back(offset + it.row(), offset + it.col(), it.value());
    }
    offset += spin.dim();
  }
  for (const char* name : {"E", "F", "K"}) {
    Operator want(r.dim(), r.dim());
    want.setFromTriplets(expected[name].begin(), expected[name].end());
    const Operator diff = r.op(name).matrix - want;
    for (int k = 0; k < diff.outerSize(); ++k)
      for (Operator::InnerIterator it(diff, k); it; ++it)
        rep.max_residual = std::max(rep.max_residual, std::abs(it.value()));
  }
  return finish(rep);
}

Report check_morphism(const Rep& r, const Presentation& p, int trials, int max_len, Real tol,
                      std::uint64_t seed) {
  LetterTable letters(r);
  std::vector<Generator> alphabet;
  for (Generator g : p.alphabet())
    if (letters.available(g)) alphabet.push_back(g);
  Report rep;
  rep.relation_id = "morphism:" + p.name();
  rep.tolerance = tol;
  if (alphabet.empty() || max_len < 1) {
    rep.vectors_skipped = r.dim();
    return finish(rep);
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> len_dist(1, max_len);
  std::uniform_int_distribution<std::size_t> letter_dist(0, alphabet.size() - 1);
  Rewriter rewriter(p);
  std::vector<bool> seen(r.basis.size(), false);
  for (int t = 0; t < trials; ++t) {
    Word w(static_cast<std::size_t>(len_dist(rng)));
    for (auto& g : w) g = alphabet[letter_dist(rng)];
    std::vector<OperatorTerm> terms;
    OperatorTerm direct;
    for (Generator g : w) direct.factors.push_back(&letters.get(g));
    terms.push_back(direct);
    for (auto& term : terms_of(rewriter.reduce(AlgebraElement(w)), r, letters)) {
      term.coeff = -term.coeff;
      terms.push_back(std::move(term));
    }
    const Report one = check_identity(r, to_string(w), terms, tol);
    if (one.vectors_checked == 0) continue;
    rep.max_residual = std::max(rep.max_residual, one.max_residual);
    std::array<int, 2> reach{0, 0};
    for (const auto& term : terms) reach = reach_max(reach, term_reach(term));
    for (std::size_t i = 0; i < r.basis.size(); ++i)
      if (inside(r, i, reach)) seen[i] = true;
  }
  rep.vectors_checked = static_cast<int>(std::count(seen.begin(), seen.end(), true));
  rep.vectors_skipped = r.dim() - rep.vectors_checked;
  return finish(rep);
}

std::vector<Report> check_decoupling(const Rep& r, Real tol) {
  std::vector<Report> out;
  auto add = [&](std::vector<Report> more) { out.insert(out.end(), more.begin(), more.end()); };
  const Real q = r.params.q_value();
  const Rep d = attach_decoupling(r);

  Presentation yc = make_presentation(PresentationId::Yc, r.regime);
  if (!d.has(Generator::Yinv)) yc = yc.restricted_to({Generator::X, Generator::Xstar, Generator::Y});
  add(check_relations(d, yc, tol));

  const TaggedOperator& X = d.op(Generator::X);
  const TaggedOperator& Xs = d.op(Generator::Xstar);
  const TaggedOperator& Y = d.op(Generator::Y);
  const TaggedOperator& K = d.op(Generator::K);
  add(check_commutant(d, {{"X", &X}, {"X*", &Xs}, {"Y", &Y}},
                      {{"A", &d.op(Generator::A)}, {"B", &d.op(Generator::B)}, {"B*", &d.op(Generator::Bstar)}},
                      tol));
  out.push_back(check_identity(d, "XK-qKX",
                               {OperatorTerm{Complex(1), {&X, &K}}, OperatorTerm{Complex(-q), {&K, &X}}}, tol));
  out.push_back(check_identity(d, "YK-KY",
                               {OperatorTerm{Complex(1), {&Y, &K}}, OperatorTerm{Complex(-1), {&K, &Y}}}, tol));

  Operator xadj = X.matrix.adjoint();
  const TaggedOperator Xadj{xadj, measured_reach(d, xadj)};
  out.push_back(check_identity(d, "X*=adjoint(X)",
                               {OperatorTerm{Complex(1), {&Xs}}, OperatorTerm{Complex(-1), {&Xadj}}}, tol));

  // Recovery divides by A; a singular truncation makes it unevaluable.
  auto unevaluable = [&](const std::string& id, const std::string& why) {
    Report rep;
    rep.relation_id = id + " (" + why + ")";
    rep.max_residual = std::numeric_limits<Real>::infinity();
    rep.vectors_skipped = d.dim();
    rep.tolerance = tol;
    rep.pass = false;
    return rep;
  };
  try {
    const EFOperators ef = recover_EF(X, d.op(Generator::B), K, d.op(Generator::A), r.params.q);
    out.push_back(check_identity(d, "recover:F",
                                 {OperatorTerm{Complex(1), {&ef.F}}, OperatorTerm{Complex(-1), {&d.op(Generator::F)}}},
                                 tol));
    out.push_back(check_identity(d, "recover:E",
                                 {OperatorTerm{Complex(1), {&ef.E}}, OperatorTerm{Complex(-1), {&d.op(Generator::E)}}},
                                 tol));
  } catch (const EvaluationError& e) {
    out.push_back(unevaluable("recover:F", e.what()));
    out.push_back(unevaluable("recover:E", e.what()));
  }

  const Rep efk = attach_efk(r);
  add(check_relations(efk, make_presentation(PresentationId::UqPrime, r.regime), tol));
  add(check_star(efk, make_presentation(PresentationId::UqPrime, r.regime), tol));
  try {
    const TaggedOperator f_alt = f_from_X(r);
    out.push_back(check_identity(d, "f=efdef",
                                 {OperatorTerm{Complex(1), {&efk.op(Generator::f)}}, OperatorTerm{Complex(-1), {&f_alt}}},
                                 tol));
  } catch (const EvaluationError& e) {
    out.push_back(unevaluable("f=efdef", e.what()));
  }
  return out;
}

std::vector<Report> run_suite(const Rep& r, Real tol, std::uint64_t seed) {
  std::vector<Report> out;
  auto add = [&](std::vector<Report> more) { out.insert(out.end(), more.begin(), more.end()); };
  const Presentation p = make_presentation(r.presentation, r.regime);
  add(check_relations(r, p, tol));
  add(check_star(r, p, tol));
  out.push_back(check_morphism(r, p, 200, 4, std::max(tol, 1e-8), seed));
  const bool cross = r.presentation == PresentationId::Cross && r.has(Generator::E) &&
                     r.has(Generator::F) && r.has(Generator::K) && r.has(Generator::A);
  if (cross) {
    if (r.has(Generator::Ainv))
      add(check_relations(r, make_presentation(PresentationId::CrossHat, r.regime), tol));
    add(check_decoupling(r, tol));
  }
  if (r.kind == "cross2") out.push_back(check_restriction_decomposition(r, r.params.l0, tol));
  return out;
}

}  // namespace podles

#include "podles/algebra.hpp"

#include <algorithm>
#include <cctype>

namespace podles {

std::string_view to_string(PresentationId id) {
  switch (id) {
    case PresentationId::Uq: return "Uq";
    case PresentationId::UqPrime: return "UqPrime";
    case PresentationId::Podles: return "Podles";
    case PresentationId::Cross: return "Cross";
    case PresentationId::CrossHat: return "CrossHat";
    case PresentationId::Yc: return "Yc";
    case PresentationId::Decoupled: return "Decoupled";
    case PresentationId::CrossHatK: return "CrossHatK";
  }
  return "?";
}

std::string_view to_string(Regime r) { return r == Regime::c_finite ? "c-finite" : "c-infinite"; }

PresentationId presentation_from_name(std::string_view name) {
  auto lower = [](std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
    return out;
  };
  const std::string key = lower(name);
  for (auto id : {PresentationId::Uq, PresentationId::UqPrime, PresentationId::Podles,
                  PresentationId::Cross, PresentationId::CrossHat, PresentationId::Yc,
                  PresentationId::Decoupled, PresentationId::CrossHatK})
    if (lower(to_string(id)) == key) return id;
  throw ParameterError("unknown presentation: " + std::string(name));
}

// ---------------------------------------------------------------- Presentation

Presentation::Presentation(PresentationId id, Regime regime, std::vector<Generator> alphabet,
                           std::map<Generator, AlgebraElement> star_table,
                           std::vector<Relation> relations, std::vector<RewriteRule> rules)
    : id_(id),
      regime_(regime),
      alphabet_(std::move(alphabet)),
      star_(std::move(star_table)),
      relations_(std::move(relations)),
      rules_(std::move(rules)) {
  std::sort(alphabet_.begin(), alphabet_.end());
  table_.fill(-1);
  auto slot = [](Generator a, Generator b) {
    return static_cast<std::size_t>(a) * kGeneratorCount + static_cast<std::size_t>(b);
  };
  for (const auto& r : rules_) {
    table_[slot(r.first, r.second)] = static_cast<int>(expanded_.size());
    expanded_.push_back(r);
  }
  // Inverse-letter variants of monomial q-commutations x y -> mu y x:
  // x^{e} y^{d} -> mu^{e d} y^{d} x^{e} for e, d = +-1.
  for (const auto& r : rules_) {
    if (r.rhs.size() != 1) continue;
    const auto& [w, mu] = *r.rhs.terms().begin();
    if (w != Word{r.second, r.first}) continue;
    for (int ex : {1, -1}) {
      for (int ey : {1, -1}) {
        if (ex == 1 && ey == 1) continue;
        auto x = ex == 1 ? std::optional<Generator>(r.first) : inverse_letter(r.first);
        auto y = ey == 1 ? std::optional<Generator>(r.second) : inverse_letter(r.second);
        if (!x || !y || !contains(*x) || !contains(*y)) continue;
        if (table_[slot(*x, *y)] >= 0) continue;
        const Scalar coeff = ex * ey == 1 ? mu : mu.inverse();
        table_[slot(*x, *y)] = static_cast<int>(expanded_.size());
        expanded_.push_back(RewriteRule{*x, *y, AlgebraElement(Word{*y, *x}, coeff), true});
      }
    }
  }
}

std::string Presentation::name() const {
  std::string n(to_string(id_));
  if (id_ != PresentationId::Uq && id_ != PresentationId::UqPrime)
    n += regime_ == Regime::c_finite ? "[c<inf]" : "[c=inf]";
  return n;
}

bool Presentation::contains(Generator g) const {
  return std::binary_search(alphabet_.begin(), alphabet_.end(), g);
}

const AlgebraElement* Presentation::rule_for(Generator first, Generator second) const {
  const int idx =
      table_[static_cast<std::size_t>(first) * kGeneratorCount + static_cast<std::size_t>(second)];
  return idx < 0 ? nullptr : &expanded_[static_cast<std::size_t>(idx)].rhs;
}

const AlgebraElement& Presentation::star_of(Generator g) const {
  auto it = star_.find(g);
  if (it == star_.end())
    throw ParameterError("generator " + std::string(to_string(g)) + " not in presentation " + name());
  return it->second;
}

Presentation Presentation::restricted_to(const std::vector<Generator>& keep) const {
  auto uses_only_kept = [&](const AlgebraElement& x) {
    for (const auto& [w, c] : x.terms())
      for (Generator g : w)
        if (std::find(keep.begin(), keep.end(), g) == keep.end()) return false;
    return true;
  };
  std::vector<Relation> kept;
  for (const auto& r : relations_)
    if (uses_only_kept(r.lhs) && uses_only_kept(r.rhs)) kept.push_back(r);
  return Presentation(id_, regime_, alphabet_, star_, std::move(kept), rules_);
}

// ---------------------------------------------------------------- catalog

namespace {

using G = Generator;

AlgebraElement w(std::initializer_list<G> letters) { return AlgebraElement(Word(letters)); }
Scalar q(int n) { return Scalar::q_pow(n); }
/// q^{k/2}
Scalar qh(int k) { return Scalar::s_pow(k); }

struct Builder {
  std::vector<G> alphabet;
  std::map<G, AlgebraElement> star;
  std::vector<Relation> relations;
  std::vector<RewriteRule> rules;

  void letters(std::initializer_list<G> gs) {
    for (G g : gs)
      if (std::find(alphabet.begin(), alphabet.end(), g) == alphabet.end()) alphabet.push_back(g);
  }
  void rel(std::string id, AlgebraElement lhs, AlgebraElement rhs) {
    relations.push_back(Relation{std::move(id), std::move(lhs), std::move(rhs)});
  }
  void rule(G a, G b, AlgebraElement rhs) { rules.push_back(RewriteRule{a, b, std::move(rhs)}); }
  void self_adjoint(std::initializer_list<G> gs) {
    for (G g : gs) star[g] = AlgebraElement(g);
  }
  void adjoint_pair(G a, G b) {
    star[a] = AlgebraElement(b);
    star[b] = AlgebraElement(a);
  }
  void inverse_pair(G g, G ginv, const std::string& name) {
    rel(name + name + "^-1", w({g, ginv}), AlgebraElement::one());
    rel(name + "^-1" + name, w({ginv, g}), AlgebraElement::one());
    rule(g, ginv, AlgebraElement::one());
    rule(ginv, g, AlgebraElement::one());
  }
  Presentation build(PresentationId id, Regime r) {
    return Presentation(id, r, alphabet, star, relations, rules);
  }
};

void add_uq(Builder& b) {
  b.letters({G::E, G::F, G::K, G::Kinv});
  b.adjoint_pair(G::E, G::F);
  b.self_adjoint({G::K, G::Kinv});
  b.inverse_pair(G::K, G::Kinv, "K");
  const Scalar linv = lambda().inverse();
  b.rel("KE", w({G::K, G::E}), q(1) * w({G::E, G::K}));
  b.rel("FK", w({G::F, G::K}), q(1) * w({G::K, G::F}));
  b.rel("EF-FE", w({G::E, G::F}) - w({G::F, G::E}),
        linv * (w({G::K, G::K}) - w({G::Kinv, G::Kinv})));
  b.rule(G::K, G::F, q(-1) * w({G::F, G::K}));
  b.rule(G::E, G::K, q(-1) * w({G::K, G::E}));
  b.rule(G::E, G::F,
         w({G::F, G::E}) + linv * w({G::K, G::K}) - linv * w({G::Kinv, G::Kinv}));
}

void add_podles(Builder& b, Regime r) {
  b.letters({G::A, G::B, G::Bstar});
  b.self_adjoint({G::A});
  b.adjoint_pair(G::B, G::Bstar);
  const bool fin = r == Regime::c_finite;
  const AlgebraElement c = fin ? AlgebraElement(Scalar::c()) : AlgebraElement();
  const AlgebraElement one = AlgebraElement::one();
  const AlgebraElement a1 = fin ? w({G::A}) : AlgebraElement();
  // B*B = A - A^2 + c (finite) or 1 - A^2 (infinite); same for BB*.
  const AlgebraElement bsb = fin ? a1 - w({G::A, G::A}) + c : one - w({G::A, G::A});
  const AlgebraElement bbs =
      fin ? q(2) * a1 - q(4) * w({G::A, G::A}) + c : one - q(4) * w({G::A, G::A});
  b.rel("AB", w({G::A, G::B}), q(-2) * w({G::B, G::A}));
  b.rel("AB*", w({G::A, G::Bstar}), q(2) * w({G::Bstar, G::A}));
  b.rel("B*B", w({G::Bstar, G::B}), bsb);
  b.rel("BB*", w({G::B, G::Bstar}), bbs);
  b.rule(G::A, G::B, q(-2) * w({G::B, G::A}));
  b.rule(G::A, G::Bstar, q(2) * w({G::Bstar, G::A}));
  b.rule(G::Bstar, G::B, bsb);
  b.rule(G::B, G::Bstar, bbs);
}

void add_cross_relations(Builder& b, Regime r) {
  const bool fin = r == Regime::c_finite;
  const Scalar one_q2 = Scalar(1) + q(2);
  const AlgebraElement ak = w({G::A, G::K});
  const AlgebraElement k = w({G::K});
  const AlgebraElement eb_rhs = q(1) * w({G::B, G::E}) - qh(1) * one_q2 * ak +
                                (fin ? qh(1) * k : AlgebraElement());
  const AlgebraElement fbs_rhs = q(-1) * w({G::Bstar, G::F}) + qh(-1) * one_q2 * ak -
                                 (fin ? qh(-1) * k : AlgebraElement());
  b.rel("KA", w({G::K, G::A}), w({G::A, G::K}));
  b.rel("EA", w({G::E, G::A}), w({G::A, G::E}) + qh(-1) * w({G::Bstar, G::K}));
  b.rel("FA", w({G::F, G::A}), w({G::A, G::F}) - qh(-3) * w({G::B, G::K}));
  b.rel("KB", w({G::K, G::B}), q(-1) * w({G::B, G::K}));
  b.rel("EB", w({G::E, G::B}), eb_rhs);
  b.rel("FB", w({G::F, G::B}), q(1) * w({G::B, G::F}));
  b.rel("KB*", w({G::K, G::Bstar}), q(1) * w({G::Bstar, G::K}));
  b.rel("EB*", w({G::E, G::Bstar}), q(-1) * w({G::Bstar, G::E}));
  b.rel("FB*", w({G::F, G::Bstar}), fbs_rhs);
  // The relations are already oriented with sphere generators on the left.
  for (std::size_t i = b.relations.size() - 9; i < b.relations.size(); ++i) {
    const Relation& rel = b.relations[i];
    const Word& lhs = rel.lhs.terms().begin()->first;
    b.rule(lhs[0], lhs[1], rel.rhs);
  }
}

void add_yc(Builder& b, Regime r, bool include_y_inverse = true) {
  b.letters({G::X, G::Xstar, G::Y});
  b.adjoint_pair(G::X, G::Xstar);
  b.self_adjoint({G::Y});
  // c -> 1 in the third relation when c is infinite.
  const AlgebraElement c =
      r == Regime::c_finite ? AlgebraElement(Scalar::c()) : AlgebraElement::one();
  const Scalar one_q2 = Scalar(1) - q(2);
  const AlgebraElement rhs3 = one_q2 * (w({G::Y, G::Y}) + c);
  b.rel("YX", w({G::Y, G::X}), q(2) * w({G::X, G::Y}));
  b.rel("YX*", w({G::Y, G::Xstar}), q(-2) * w({G::Xstar, G::Y}));
  b.rel("X*X-q^2XX*", w({G::Xstar, G::X}) - q(2) * w({G::X, G::Xstar}), rhs3);
  b.rule(G::Y, G::X, q(2) * w({G::X, G::Y}));
  b.rule(G::Xstar, G::Y, q(2) * w({G::Y, G::Xstar}));
  b.rule(G::Xstar, G::X, q(2) * w({G::X, G::Xstar}) + rhs3);
  if (include_y_inverse) {
    b.letters({G::Yinv});
    b.self_adjoint({G::Yinv});
    b.inverse_pair(G::Y, G::Yinv, "Y");
  }
}

void add_a_inverse(Builder& b) {
  b.letters({G::Ainv});
  b.self_adjoint({G::Ainv});
  b.inverse_pair(G::A, G::Ainv, "A");
}

/// Generators of one set commute with the sphere generators A, B, B*.
void add_commuting(Builder& b, std::initializer_list<G> others) {
  for (G x : others) {
    for (G a : {G::A, G::B, G::Bstar}) {
      b.rel(std::string("[") + std::string(to_string(x)) + "," + std::string(to_string(a)) + "]",
            w({x, a}), w({a, x}));
      const G hi = std::max(x, a), lo = std::min(x, a);
      b.rule(hi, lo, w({lo, hi}));
    }
  }
}

}  // namespace

Presentation make_presentation(PresentationId id, Regime regime) {
  Builder b;
  switch (id) {
    case PresentationId::Uq:
      add_uq(b);
      break;
    case PresentationId::UqPrime: {
      b.letters({G::e, G::f, G::k, G::kinv});
      b.self_adjoint({G::k, G::kinv});
      // e = EK, f = K^-1 F, so e* = KF = k f and f* = E K^-1 = e k^-1.
      b.star[G::e] = w({G::k, G::f});
      b.star[G::f] = w({G::e, G::kinv});
      b.inverse_pair(G::k, G::kinv, "k");
      const Scalar linv = lambda().inverse();
      b.rel("ke", w({G::k, G::e}), q(2) * w({G::e, G::k}));
      b.rel("kf", w({G::k, G::f}), q(-2) * w({G::f, G::k}));
      b.rel("ef-fe", w({G::e, G::f}) - w({G::f, G::e}), linv * (w({G::k}) - w({G::kinv})));
      b.rule(G::e, G::k, q(-2) * w({G::k, G::e}));
      b.rule(G::k, G::f, q(-2) * w({G::f, G::k}));
      b.rule(G::e, G::f, w({G::f, G::e}) + linv * w({G::k}) - linv * w({G::kinv}));
      break;
    }
    case PresentationId::Podles:
      add_podles(b, regime);
      break;
    case PresentationId::Cross:
      add_uq(b);
      add_podles(b, regime);
      add_cross_relations(b, regime);
      break;
    case PresentationId::CrossHat: {
      add_uq(b);
      add_podles(b, regime);
      add_cross_relations(b, regime);
      add_a_inverse(b);
      // Left action E|>A^-1 = -q^{-5/2} B* A^-2, F|>A^-1 = q^{1/2} B A^-2,
      // K|>A^-1 = A^-1, inserted into f x = (f_(1)|>x) f_(2).
      const AlgebraElement bs_a2k = w({G::Bstar, G::Ainv, G::Ainv, G::K});
      const AlgebraElement b_a2k = w({G::B, G::Ainv, G::Ainv, G::K});
      b.rel("EA^-1", w({G::E, G::Ainv}), w({G::Ainv, G::E}) - qh(-5) * bs_a2k);
      b.rel("FA^-1", w({G::F, G::Ainv}), w({G::Ainv, G::F}) + qh(1) * b_a2k);
      b.rel("KA^-1", w({G::K, G::Ainv}), w({G::Ainv, G::K}));
      b.rule(G::E, G::Ainv, w({G::Ainv, G::E}) - qh(-5) * bs_a2k);
      b.rule(G::F, G::Ainv, w({G::Ainv, G::F}) + qh(1) * b_a2k);
      break;
    }
    case PresentationId::Yc:
      add_yc(b, regime);
      break;
    case PresentationId::Decoupled:
      add_podles(b, regime);
      add_a_inverse(b);
      add_yc(b, regime);
      add_commuting(b, {G::X, G::Xstar, G::Y});
      break;
    case PresentationId::CrossHatK: {
      add_podles(b, regime);
      add_a_inverse(b);
      b.letters({G::X, G::Xstar, G::K, G::Kinv});
      b.adjoint_pair(G::X, G::Xstar);
      b.self_adjoint({G::K, G::Kinv});
      b.inverse_pair(G::K, G::Kinv, "K");
      add_commuting(b, {G::X, G::Xstar});
      const AlgebraElement c =
          regime == Regime::c_finite ? AlgebraElement(Scalar::c()) : AlgebraElement::one();
      const AlgebraElement k4a2 = q(2) * w({G::A, G::A, G::Kinv, G::Kinv, G::Kinv, G::Kinv});
      const AlgebraElement rhs3 = (Scalar(1) - q(2)) * (k4a2 + c);
      b.rel("KA", w({G::K, G::A}), w({G::A, G::K}));
      b.rel("BK", w({G::B, G::K}), q(1) * w({G::K, G::B}));
      b.rel("KB*", w({G::K, G::Bstar}), q(1) * w({G::Bstar, G::K}));
      b.rel("X*X-q^2XX*", w({G::Xstar, G::X}) - q(2) * w({G::X, G::Xstar}), rhs3);
      b.rel("XK", w({G::X, G::K}), q(1) * w({G::K, G::X}));
      b.rel("KX*", w({G::K, G::Xstar}), q(1) * w({G::Xstar, G::K}));
      b.rule(G::K, G::A, w({G::A, G::K}));
      b.rule(G::K, G::B, q(-1) * w({G::B, G::K}));
      b.rule(G::K, G::Bstar, q(1) * w({G::Bstar, G::K}));
      b.rule(G::K, G::X, q(-1) * w({G::X, G::K}));
      b.rule(G::Xstar, G::K, q(-1) * w({G::K, G::Xstar}));
      b.rule(G::Xstar, G::X, q(2) * w({G::X, G::Xstar}) + rhs3);
      break;
    }
  }
  return b.build(id, regime);
}

}  // namespace podles

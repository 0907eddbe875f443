#include "podles/reps.hpp"

#include "reps_internal.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>

namespace podles {

std::string_view to_string(Sign s) { return s == Sign::plus ? "+" : "-"; }

Sign sign_from_string(std::string_view text) {
  if (text == "+" || text == "plus" || text == "1" || text == "+1") return Sign::plus;
  if (text == "-" || text == "minus" || text == "-1") return Sign::minus;
  throw ParameterError("sign must be + or -, got \"" + std::string(text) + "\"");
}

void ParamSet::validate() const {
  if (q <= 0 || q >= 1) throw ParameterError("q must lie in (0,1), got " + to_string(q));
  if (!c_infinite && c < 0) throw ParameterError("c must be >= 0, got " + to_string(c));
  if (!(h > 0) || !std::isfinite(h)) throw ParameterError("h must be positive");
  if (y0 == 0 || !std::isfinite(y0)) throw ParameterError("y0 must be nonzero");
  if (std::abs(std::abs(u_phase) - 1.0) > 1e-12) throw ParameterError("u_phase must have modulus 1");
  if (cutoff < 1) throw ParameterError("cutoff must be >= 1");
  if (l0.doubled < 0) throw ParameterError("l0 must be >= 0");
}

Real ParamSet::c_value() const {
  if (c_infinite) throw ParameterError("c is infinite here");
  return c.get_d();
}

Real ParamSet::lambda_sign() const {
  return 0.5 + sign_value(sign) * std::sqrt(c_value() + 0.25);
}

Real ParamSet::lambda_other() const {
  return 0.5 - sign_value(sign) * std::sqrt(c_value() + 0.25);
}

const TaggedOperator& Rep::op(const std::string& name) const {
  auto it = operators.find(name);
  if (it == operators.end())
    throw ParameterError("representation '" + kind + "' has no operator " + name);
  return it->second;
}

void Rep::set(const std::string& name, Operator m, std::array<int, 2> reach) {
  m.makeCompressed();
  operators[name] = TaggedOperator{std::move(m), reach};
}

int Rep::index_of(BasisLabel label) const {
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (basis[i] == label) return static_cast<int>(i);
  return -1;
}

Operator identity_operator(int dim) {
  Operator id(dim, dim);
  id.setIdentity();
  return id;
}

Operator diagonal_inverse(const Operator& m) {
  std::vector<Eigen::Triplet<Complex>> trip;
  for (int k = 0; k < m.outerSize(); ++k) {
    for (Operator::InnerIterator it(m, k); it; ++it) {
      if (it.value() == Complex(0)) continue;
      if (it.row() != it.col()) throw ConstructionError("diagonal_inverse: matrix is not diagonal");
      trip.emplace_back(it.row(), it.col(), Complex(1) / it.value());
    }
  }
  if (static_cast<Eigen::Index>(trip.size()) != m.rows())
    throw ConstructionError("diagonal_inverse: zero on the diagonal");
  Operator inv(m.rows(), m.cols());
  inv.setFromTriplets(trip.begin(), trip.end());
  return inv;
}

namespace detail {

Real checked_sqrt(Real radicand, const std::string& where) {
  if (radicand < -1e-13)
    throw ConstructionError("negative radicand " + std::to_string(radicand) + " at " + where);
  return std::sqrt(std::max(radicand, Real(0)));
}

Real qn(int n, Real q) { return q_number<Real>(n, q); }

Real sqrt_qn(int n, Real q) { return n <= 0 ? 0.0 : std::sqrt(qn(n, q)); }

OperatorBuilder::OperatorBuilder(const Rep& r) : rep_(r) {
  for (std::size_t i = 0; i < r.basis.size(); ++i)
    index_.emplace(key(r.basis[i]), static_cast<int>(i));
}

void OperatorBuilder::put(const std::string& name, BasisLabel from, BasisLabel to, Complex value) {
  auto& trip = entries_[name];
  if (value == Complex(0)) return;
  auto f = index_.find(key(from));
  auto t = index_.find(key(to));
  if (f == index_.end() || t == index_.end()) return;
  trip.emplace_back(t->second, f->second, value);
}

Operator OperatorBuilder::build(const std::string& name) const {
  const int d = rep_.dim();
  Operator m(d, d);
  auto it = entries_.find(name);
  if (it != entries_.end()) m.setFromTriplets(it->second.begin(), it->second.end());
  m.makeCompressed();
  return m;
}

}  // namespace detail

// ---------------------------------------------------------------- JSON

namespace {

nlohmann::json params_json(const ParamSet& p) {
  return nlohmann::json{{"q", to_string(p.q)},
                        {"c", p.c_infinite ? std::string("inf") : to_string(p.c)},
                        {"sign", std::string(to_string(p.sign))},
                        {"l0", to_string(p.l0)},
                        {"h", p.h},
                        {"y0", p.y0},
                        {"u_phase", {p.u_phase.real(), p.u_phase.imag()}},
                        {"cutoff", p.cutoff}};
}

ParamSet params_from_json(const nlohmann::json& j) {
  ParamSet p;
  p.q = parse_rational(j.at("q").get<std::string>());
  const std::string c = j.at("c").get<std::string>();
  p.c_infinite = c == "inf";
  if (!p.c_infinite) p.c = parse_rational(c);
  p.sign = sign_from_string(j.at("sign").get<std::string>());
  p.l0 = HalfInt::parse(j.at("l0").get<std::string>());
  p.h = j.at("h").get<Real>();
  p.y0 = j.at("y0").get<Real>();
  p.u_phase = Complex(j.at("u_phase").at(0).get<Real>(), j.at("u_phase").at(1).get<Real>());
  p.cutoff = j.at("cutoff").get<int>();
  return p;
}

std::string_view basis_kind_name(BasisKind k) {
  switch (k) {
    case BasisKind::n: return "n";
    case BasisKind::nj: return "nj";
    case BasisKind::lj: return "lj";
  }
  return "?";
}

BasisKind basis_kind_from(std::string_view s) {
  if (s == "n") return BasisKind::n;
  if (s == "nj") return BasisKind::nj;
  if (s == "lj") return BasisKind::lj;
  throw ParameterError("unknown basis kind " + std::string(s));
}

}  // namespace

nlohmann::json to_json(const Rep& r) {
  nlohmann::json doc;
  doc["kind"] = r.kind;
  doc["params"] = params_json(r.params);
  doc["presentation"] = std::string(to_string(r.presentation));
  doc["regime"] = std::string(to_string(r.regime));
  doc["basis_kind"] = std::string(basis_kind_name(r.basis_kind));
  auto& basis = doc["basis"] = nlohmann::json::array();
  for (const auto& b : r.basis) {
    if (r.basis_kind == BasisKind::lj) basis.push_back({0.5 * b.first, 0.5 * b.second});
    else if (r.basis_kind == BasisKind::nj) basis.push_back({b.first, b.second});
    else basis.push_back(b.first);
  }
  doc["levels"] = r.levels;
  doc["cutoff"] = r.cutoff;
  auto& ops = doc["operators"] = nlohmann::json::object();
  auto& reach = doc["reach"] = nlohmann::json::object();
  for (const auto& [name, t] : r.operators) {
    auto entries = nlohmann::json::array();
    // Column-major traversal, then sorted by (row, col) for a stable layout.
    std::vector<std::tuple<Eigen::Index, Eigen::Index, Complex>> cells;
    for (int k = 0; k < t.matrix.outerSize(); ++k)
      for (Operator::InnerIterator it(t.matrix, k); it; ++it)
        cells.emplace_back(it.row(), it.col(), it.value());
    std::sort(cells.begin(), cells.end(), [](const auto& a, const auto& b) {
      return std::tie(std::get<0>(a), std::get<1>(a)) < std::tie(std::get<0>(b), std::get<1>(b));
    });
    for (const auto& [row, col, v] : cells) entries.push_back({row, col, v.real(), v.imag()});
    ops[name] = std::move(entries);
    reach[name] = t.reach;
  }
  return doc;
}

Rep rep_from_json(const nlohmann::json& doc) {
  try {
    Rep r;
    r.kind = doc.at("kind").get<std::string>();
    r.params = params_from_json(doc.at("params"));
    r.params.validate();
    r.presentation = presentation_from_name(doc.at("presentation").get<std::string>());
    r.regime = doc.at("regime").get<std::string>() == "c-infinite" ? Regime::c_infinite
                                                                   : Regime::c_finite;
    r.basis_kind = basis_kind_from(doc.at("basis_kind").get<std::string>());
    for (const auto& b : doc.at("basis")) {
      if (r.basis_kind == BasisKind::lj)
        r.basis.push_back({static_cast<int>(std::lround(2 * b.at(0).get<Real>())),
                           static_cast<int>(std::lround(2 * b.at(1).get<Real>()))});
      else if (r.basis_kind == BasisKind::nj)
        r.basis.push_back({b.at(0).get<int>(), b.at(1).get<int>()});
      else
        r.basis.push_back({b.get<int>(), 0});
    }
    r.levels = doc.at("levels").get<std::vector<std::array<int, 2>>>();
    r.cutoff = doc.at("cutoff").get<std::array<int, 2>>();
    if (r.levels.size() != r.basis.size()) throw ParameterError("levels/basis size mismatch");
    const int d = r.dim();
    for (const auto& [name, entries] : doc.at("operators").items()) {
      std::vector<Eigen::Triplet<Complex>> trip;
      for (const auto& e : entries) {
        const auto row = e.at(0).get<int>(), col = e.at(1).get<int>();
        if (row < 0 || col < 0 || row >= d || col >= d)
          throw ParameterError("operator " + name + " entry out of range");
        const Complex v(e.at(2).get<Real>(), e.at(3).get<Real>());
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
          throw ParameterError("operator " + name + " has a non-finite entry");
        trip.emplace_back(row, col, v);
      }
      Operator m(d, d);
      m.setFromTriplets(trip.begin(), trip.end());
      std::array<int, 2> reach{0, 0};
      if (doc.contains("reach") && doc["reach"].contains(name))
        reach = doc["reach"][name].get<std::array<int, 2>>();
      r.set(name, std::move(m), reach);
    }
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw ParameterError(std::string("malformed representation document: ") + e.what());
  }
}

}  // namespace podles

#pragma once

// Shared fixtures for the test binaries: parameter grids and operators
// assembled directly from a coefficient table.

#include "podles/verify.hpp"

#include <string>
#include <vector>

namespace podles::testing {

inline ParamSet params(const std::string& c, Sign sign = Sign::plus, const std::string& l0 = "0",
                       Real h = 1, int cutoff = 8) {
  ParamSet p;
  p.q = Rational(1, 2);
  p.c_infinite = c == "inf";
  if (!p.c_infinite) p.c = parse_rational(c);
  p.sign = sign;
  p.l0 = HalfInt::parse(l0);
  p.h = h;
  p.cutoff = cutoff;
  return p;
}

inline Real max_abs(const Operator& m) {
  Real out = 0;
  for (int k = 0; k < m.outerSize(); ++k)
    for (Operator::InnerIterator it(m, k); it; ++it) out = std::max(out, std::abs(it.value()));
  return out;
}

inline Complex entry(const Operator& m, int row, int col) { return m.coeff(row, col); }

struct Labelled {
  std::string label;
  ParamSet params;
};

/// First cross construction: (c, sign) in {(1,+), (1,-), (0,+)} with h in {1, 2}.
inline std::vector<Labelled> cross_I_grid() {
  std::vector<Labelled> out;
  for (Real h : {1.0, 2.0})
    for (auto [c, s] : {std::pair{"1", Sign::plus}, std::pair{"1", Sign::minus}, std::pair{"0", Sign::plus}})
      out.push_back({std::string("cross1 c=") + c + " sign=" + std::string(to_string(s)) +
                         " h=" + std::to_string(static_cast<int>(h)),
                     params(c, s, "0", h)});
  return out;
}

/// Spin-tower construction: l0 in {0, 1/2, 1}, both signs, c in {0, 1, inf}.
inline std::vector<Labelled> cross_II_grid() {
  std::vector<Labelled> out;
  for (const char* l0 : {"0", "1/2", "1"})
    for (Sign s : {Sign::plus, Sign::minus})
      for (const char* c : {"0", "1", "inf"})
        out.push_back({std::string("cross2 l0=") + l0 + " sign=" + std::string(to_string(s)) + " c=" + c,
                       params(c, s, l0)});
  return out;
}

inline HalfInt tower_top(const ParamSet& p) { return p.l0 + HalfInt::integer(6); }

struct XFromTable {
  Operator x1;
  Operator x0;
  Operator xm1;
};

/// x_1 v^l_j = a+(l,j) v^{l+1}_{j+1} + a0(l,j) v^l_{j+1} + a-(l,j) v^{l-1}_{j+1},
/// x_0 v^l_j = b+(l,j) v^{l+1}_j + b0(l,j) v^l_j + b+(l-1,j) v^{l-1}_j,
/// x_{-1} = -q^{-1} x_1^*, on the basis of r.
inline XFromTable x_from_table(const Rep& r, const CoeffTable& t) {
  const Real q = r.params.q_value();
  std::vector<Eigen::Triplet<Complex>> t1, t0;
  auto put = [&](std::vector<Eigen::Triplet<Complex>>& trip, BasisLabel from, BasisLabel to, Real v) {
    const int f = r.index_of(from), g = r.index_of(to);
    if (f >= 0 && g >= 0 && v != 0) trip.emplace_back(g, f, Complex(v));
  };
  for (const auto& row : t.rows) {
    const int L = row.l.doubled, J = row.j.doubled;
    put(t1, {L, J}, {L + 2, J + 2}, row.alpha_plus);
    put(t1, {L, J}, {L, J + 2}, row.alpha_zero);
    put(t1, {L, J}, {L - 2, J + 2}, row.alpha_minus);
    put(t0, {L, J}, {L + 2, J}, row.beta_plus);
    put(t0, {L, J}, {L, J}, row.beta_zero);
    put(t0, {L + 2, J}, {L, J}, row.beta_plus);
  }
  XFromTable x;
  x.x1 = Operator(r.dim(), r.dim());
  x.x1.setFromTriplets(t1.begin(), t1.end());
  x.x0 = Operator(r.dim(), r.dim());
  x.x0.setFromTriplets(t0.begin(), t0.end());
  x.xm1 = Operator(x.x1.adjoint()) * Complex(-1 / q);
  return x;
}

}  // namespace podles::testing

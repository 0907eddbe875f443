#include "podles/reps.hpp"

#include "reps_internal.hpp"

#include <cmath>

namespace podles {

using detail::checked_sqrt;
using detail::OperatorBuilder;

namespace {

void n_basis(Rep& r, int cutoff) {
  r.basis_kind = BasisKind::n;
  for (int n = 0; n <= cutoff; ++n) {
    r.basis.push_back({n, 0});
    r.levels.push_back({n, 0});
  }
  r.cutoff = {cutoff, 0};
}

}  // namespace

Rep build_podles(const ParamSet& p, Sector sector) {
  p.validate();
  Rep r;
  r.kind = "podles";
  r.params = p;
  r.presentation = PresentationId::Podles;
  r.regime = p.regime();
  const Real q = p.q_value();

  if (sector == Sector::zero) {
    // One-dimensional piece on ker A: B = c^{1/2} u (B = u when c is infinite).
    r.basis_kind = BasisKind::n;
    r.basis = {{0, 0}};
    r.levels = {{0, 0}};
    const Real scale = p.c_infinite ? 1.0 : std::sqrt(p.c_value());
    Operator a(1, 1), b(1, 1), bs(1, 1);
    b.insert(0, 0) = scale * p.u_phase;
    bs.insert(0, 0) = scale * std::conj(p.u_phase);
    r.set(Generator::A, a);
    r.set(Generator::B, b);
    r.set(Generator::Bstar, bs);
    return r;
  }

  if (sector == Sector::minus && !p.c_infinite && p.c == 0)
    throw ParameterError("the sector - does not exist for c = 0");
  r.params.sign = sector == Sector::plus ? Sign::plus : Sign::minus;
  n_basis(r, p.cutoff);
  OperatorBuilder ob(r);
  const int sgn = sector == Sector::plus ? 1 : -1;
  for (int n = 0; n <= p.cutoff + 1; ++n) {
    Real a = 0, cn = 0;
    const std::string where = "n=" + std::to_string(n);
    if (p.c_infinite) {
      a = sgn * std::pow(q, 2 * n);
      cn = checked_sqrt(1 - std::pow(q, 4 * n), where);
    } else {
      const Real lam = r.params.lambda_sign();
      a = lam * std::pow(q, 2 * n);
      cn = checked_sqrt(p.c_value() + a - a * a, where);
    }
    if (n <= p.cutoff) ob.put("A", {n, 0}, {n, 0}, a);
    ob.put("B", {n, 0}, {n - 1, 0}, cn);
    ob.put("B*", {n - 1, 0}, {n, 0}, cn);
  }
  r.set(Generator::A, ob.build("A"));
  r.set(Generator::B, ob.build("B"));
  r.set(Generator::Bstar, ob.build("B*"), {1, 0});
  return r;
}

Rep build_spin(HalfInt l, const Rational& q_exact) {
  if (l.doubled < 0) throw ParameterError("spin must be >= 0");
  ParamSet p;
  p.q = q_exact;
  p.l0 = l;
  p.validate();
  const Real q = p.q_value();
  Rep r;
  r.kind = "spin";
  r.params = p;
  r.presentation = PresentationId::Uq;
  r.regime = Regime::c_finite;
  r.basis_kind = BasisKind::lj;
  const int L = l.doubled;
  for (int j = -L; j <= L; j += 2) {
    r.basis.push_back({L, j});
    r.levels.push_back({0, 0});
  }
  OperatorBuilder ob(r);
  for (int j = -L; j <= L; j += 2) {
    // Doubled labels: l - j = (L - J)/2 and so on, always integers.
    const int lmj = (L - j) / 2, lpj = (L + j) / 2;
    ob.put("K", {L, j}, {L, j}, std::pow(q, 0.5 * j));
    ob.put("K^-1", {L, j}, {L, j}, std::pow(q, -0.5 * j));
    ob.put("E", {L, j}, {L, j + 2}, detail::sqrt_qn(lmj, q) * detail::sqrt_qn(lpj + 1, q));
    ob.put("F", {L, j}, {L, j - 2}, detail::sqrt_qn(lmj + 1, q) * detail::sqrt_qn(lpj, q));
  }
  for (const char* g : {"K", "K^-1", "E", "F"}) r.set(g, ob.build(g));
  return r;
}

Rep build_yc(const ParamSet& p) {
  p.validate();
  if (p.cutoff < 2) throw ParameterError("build_yc needs cutoff >= 2");
  Rep r;
  r.kind = "yc";
  r.params = p;
  r.presentation = PresentationId::Yc;
  r.regime = p.regime();
  n_basis(r, p.cutoff);
  const Real q = p.q_value();
  const Real c = p.c_infinite ? 1.0 : p.c_value();
  const Real y0 = p.y0;
  OperatorBuilder ob(r);
  for (int n = 0; n <= p.cutoff; ++n) {
    const std::string where = "n=" + std::to_string(n);
    const Real lam_next = checked_sqrt(1 - std::pow(q, 2 * (n + 1)), where);
    const Real lam_n = checked_sqrt(1 - std::pow(q, 2 * n), where);
    ob.put("X", {n, 0}, {n + 1, 0},
           lam_next * checked_sqrt(std::pow(q, 2 * n) * y0 * y0 + c, where));
    ob.put("X*", {n, 0}, {n - 1, 0},
           lam_n * checked_sqrt(std::pow(q, 2 * n - 2) * y0 * y0 + c, where));
    ob.put("Y", {n, 0}, {n, 0}, std::pow(q, 2 * n) * y0);
    ob.put("Y^-1", {n, 0}, {n, 0}, 1.0 / (std::pow(q, 2 * n) * y0));
  }
  r.set(Generator::X, ob.build("X"), {1, 0});
  r.set(Generator::Xstar, ob.build("X*"));
  r.set(Generator::Y, ob.build("Y"));
  r.set(Generator::Yinv, ob.build("Y^-1"));
  return r;
}

}  // namespace podles

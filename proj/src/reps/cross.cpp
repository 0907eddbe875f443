#include "podles/reps.hpp"

#include "reps_internal.hpp"

#include <cmath>

namespace podles {

using detail::checked_sqrt;
using detail::OperatorBuilder;
using detail::qn;
using detail::sqrt_qn;

// ---------------------------------------------------------------- first approach

Rep build_cross_I(const ParamSet& p) {
  p.validate();
  if (p.c_infinite) throw ParameterError("build_cross_I needs a finite c");
  if (p.c == 0 && p.sign == Sign::minus)
    throw ParameterError("for c = 0 only the sign + exists");
  Rep r;
  r.kind = "cross1";
  r.params = p;
  r.presentation = PresentationId::Cross;
  r.regime = Regime::c_finite;
  r.basis_kind = BasisKind::nj;
  const int N = p.cutoff;
  for (int n = 0; n <= N; ++n) {
    for (int j = 0; j <= N; ++j) {
      r.basis.push_back({n, j});
      r.levels.push_back({n, j});
    }
  }
  r.cutoff = {N, N};

  const Real q = p.q_value(), c = p.c_value(), h = p.h;
  const Real lam = q - 1 / q;
  const Real lp = p.lambda_sign();
  // For the - sign the displayed E and F carry an extra factor sign(lambda_-).
  const Real esign = lp > 0 ? 1.0 : -1.0;
  const Real pre = esign * std::pow(q, -0.5) / lam;
  auto lam_n = [&](int n) { return checked_sqrt(1 - std::pow(q, 2 * n), "lambda_n"); };
  auto c_pm = [&](int n) {
    const Real a = lp * std::pow(q, 2 * n);
    return checked_sqrt(c + a - a * a, "c(" + std::to_string(n) + ")");
  };

  OperatorBuilder ob(r);
  for (int n = 0; n <= N; ++n) {
    for (int j = 0; j <= N; ++j) {
      const std::string at = "(n,j)=(" + std::to_string(n) + "," + std::to_string(j) + ")";
      ob.put("A", {n, j}, {n, j}, lp * std::pow(q, 2 * n));
      ob.put("A^-1", {n, j}, {n, j}, 1 / (lp * std::pow(q, 2 * n)));
      ob.put("B", {n, j}, {n - 1, j}, c_pm(n));
      ob.put("B*", {n, j}, {n + 1, j}, c_pm(n + 1));
      ob.put("K", {n, j}, {n, j}, std::pow(q, n - j) * h);
      ob.put("K^-1", {n, j}, {n, j}, 1 / (std::pow(q, n - j) * h));
      const Real e1 = std::pow(q, -n) * lam_n(j) *
                      checked_sqrt(std::pow(lp, -2) * std::pow(q, -2 * j) * c + std::pow(h, -4), at) * h;
      const Real e2 = -std::pow(q, -j) *
                      checked_sqrt(std::pow(lp, -2) * std::pow(q, -2 * n - 2) * c + 1 / lp -
                                       std::pow(q, 2 * n + 2),
                                   at) *
                      h;
      ob.put("E", {n, j}, {n, j - 1}, pre * e1);
      ob.put("E", {n, j}, {n + 1, j}, pre * e2);
      const Real f1 = std::pow(q, -n) * lam_n(j + 1) *
                      checked_sqrt(std::pow(lp, -2) * std::pow(q, -2 * j - 2) * c + std::pow(h, -4), at) *
                      h;
      const Real f2 = -std::pow(q, -j) *
                      checked_sqrt(std::pow(lp, -2) * std::pow(q, -2 * n) * c + 1 / lp -
                                       std::pow(q, 2 * n),
                                   at) *
                      h;
      ob.put("F", {n, j}, {n, j + 1}, pre * f1);
      ob.put("F", {n, j}, {n - 1, j}, pre * f2);
    }
  }
  r.set(Generator::A, ob.build("A"));
  r.set(Generator::Ainv, ob.build("A^-1"));
  r.set(Generator::B, ob.build("B"));
  r.set(Generator::Bstar, ob.build("B*"), {1, 0});
  r.set(Generator::K, ob.build("K"));
  r.set(Generator::Kinv, ob.build("K^-1"));
  r.set(Generator::E, ob.build("E"), {1, 0});
  r.set(Generator::F, ob.build("F"), {0, 1});
  return r;
}

// ---------------------------------------------------------------- coefficients

namespace {

void require_tower_label(HalfInt l, const ParamSet& p) {
  if (l < p.l0 || !(l - p.l0).is_integer())
    throw ParameterError("l must satisfy l >= l0 with l - l0 integral");
}

}  // namespace

Real coeff_beta0_ll(HalfInt l, const ParamSet& p) {
  p.validate();
  require_tower_label(l, p);
  const Real q = p.q_value();
  const int L = l.doubled, L0 = p.l0.doubled;
  const int n = (L - L0) / 2;           // l - l0
  const int m = (L + L0) / 2 + 1;       // l + l0 + 1
  const Real q2l0 = qn(L0, q), q2l2 = qn(L + 2, q);
  if (p.c_infinite) {
    // Limit of the finite-c family under A -> A/sqrt(c): no n-dependent term.
    return sign_value(p.sign) * qn(2, q) * q2l0 / (q * q2l2);
  }
  const Real ls = p.lambda_sign(), lo = p.lambda_other();
  return (q2l0 * (ls / (q * q) - lo) - (1 - 1 / (q * q)) * qn(n, q) * qn(m, q)) / q2l2;
}

Real coeff_alpha_plus_ll(HalfInt l, const ParamSet& p) {
  p.validate();
  require_tower_label(l, p);
  const Real q = p.q_value();
  const Real lam = q - 1 / q;
  const int L = l.doubled, L0 = p.l0.doubled;
  const int n1 = (L - L0) / 2 + 1;  // l - l0 + 1
  const int m = (L + L0) / 2 + 1;   // l + l0 + 1
  const Real q2l2 = qn(L + 2, q), q2l0 = qn(L0, q);
  const int sgn = sign_value(p.sign);
  Real rad = 0;
  if (p.c_infinite) {
    rad = q2l2 * q2l2 - q2l0 * q2l0;
  } else {
    const Real r = std::sqrt(p.c_value() + 0.25);
    const Real t = -lam / 2 * qn(n1, q) * qn(m, q) + sgn * q2l0 * r;
    rad = q2l2 * q2l2 * (r * r) - t * t;
  }
  if (!(rad > 0))
    throw ConstructionError("alpha+(l,l) radicand " + std::to_string(rad) + " <= 0 at l=" +
                            to_string(l));
  return std::sqrt(qn(2, q)) / std::sqrt(qn(L + 3, q)) / std::sqrt(q2l2) * std::sqrt(rad);
}

CoeffRow CoeffTable::at(HalfInt l, HalfInt j) const {
  for (const auto& row : rows)
    if (row.l == l && row.j == j) return row;
  return CoeffRow{l, j};
}

CoeffTable coeff_table(const ParamSet& p, HalfInt l_max) {
  p.validate();
  if (l_max < p.l0 || !(l_max - p.l0).is_integer())
    throw ParameterError("l_max must satisfy l_max >= l0 with l_max - l0 integral");
  const Real q = p.q_value();
  const Real s2 = std::sqrt(qn(2, q));
  CoeffTable t;
  t.l0 = p.l0;
  t.l_max = l_max;
  for (int L = p.l0.doubled; L <= l_max.doubled; L += 2) {
    const HalfInt l = HalfInt::from_doubled(L);
    const Real ap = coeff_alpha_plus_ll(l, p);
    const Real b0 = coeff_beta0_ll(l, p);
    const Real ap_prev =
        L - 2 >= p.l0.doubled ? coeff_alpha_plus_ll(HalfInt::from_doubled(L - 2), p) : 0.0;
    // Seeds alpha0(l,l-1) and alpha-(l,l-2).
    const Real a0_seed = L > 0 ? -s2 / std::sqrt(qn(L, q)) * std::pow(q, 0.5 * L + 1) * b0 : 0.0;
    const Real am_seed = L > 1 ? -std::pow(q, L - 1) * s2 / std::sqrt(qn(L - 1, q)) /
                                     std::sqrt(qn(L, q)) * ap_prev
                               : 0.0;
    for (int J = -L; J <= L; J += 2) {
      const int lmj = (L - J) / 2, lpj = (L + J) / 2;
      const Real lj = 0.5 * (J - L);  // j - l
      CoeffRow row{l, HalfInt::from_doubled(J)};
      row.alpha_plus = std::pow(q, lj) * sqrt_qn(lpj + 1, q) * sqrt_qn(lpj + 2, q) /
                       std::sqrt(qn(L + 1, q)) / std::sqrt(qn(L + 2, q)) * ap;
      row.alpha_zero = L > 0 ? std::pow(q, lj + 1) * sqrt_qn(lmj, q) * sqrt_qn(lpj + 1, q) /
                                   std::sqrt(qn(L, q)) * a0_seed
                             : 0.0;
      row.alpha_minus = std::pow(q, lj + 2) * sqrt_qn(lmj - 1, q) * sqrt_qn(lmj, q) / s2 * am_seed;
      row.beta_plus = std::pow(q, 0.5 * J) * sqrt_qn(lmj + 1, q) * sqrt_qn(lpj + 1, q) * s2 /
                      std::sqrt(qn(L + 1, q)) / std::sqrt(qn(L + 2, q)) * ap;
      const Real ratio = L > 0 ? qn(lmj, q) * qn(2, q) / qn(L, q) : 0.0;
      row.beta_zero = (1 - std::pow(q, lpj + 1) * ratio) * b0;
      t.rows.push_back(row);
    }
  }
  return t;
}

// ---------------------------------------------------------------- second approach

Rep build_cross_II(const ParamSet& p, HalfInt l_max) {
  p.validate();
  if (l_max.doubled < p.l0.doubled + 4 || !(l_max - p.l0).is_integer())
    throw ParameterError("build_cross_II needs l_max >= l0 + 2 with l_max - l0 integral");
  Rep r;
  r.kind = "cross2";
  r.params = p;
  r.presentation = PresentationId::Cross;
  r.regime = p.regime();
  r.basis_kind = BasisKind::lj;
  const int L0 = p.l0.doubled, LM = l_max.doubled;
  for (int L = L0; L <= LM; L += 2) {
    for (int J = -L; J <= L; J += 2) {
      r.basis.push_back({L, J});
      r.levels.push_back({(L - L0) / 2, 0});
    }
  }
  r.cutoff = {(LM - L0) / 2, 0};

  const Real q = p.q_value();
  const Real s2 = std::sqrt(qn(2, q));
  std::vector<Real> ap, b0;  // indexed by l - l0
  for (int L = L0; L <= LM; L += 2) {
    ap.push_back(coeff_alpha_plus_ll(HalfInt::from_doubled(L), p));
    b0.push_back(coeff_beta0_ll(HalfInt::from_doubled(L), p));
  }
  auto sq = [&](int n) { return sqrt_qn(n, q); };

  OperatorBuilder ob(r);
  for (int L = L0; L <= LM; L += 2) {
    const std::size_t k = static_cast<std::size_t>((L - L0) / 2);
    const Real a = ap[k], b = b0[k];
    const Real am = k > 0 ? ap[k - 1] : 0.0;
    const Real lval = 0.5 * L;
    for (int J = -L; J <= L; J += 2) {
      const Real jval = 0.5 * J;
      const int lmj = (L - J) / 2, lpj = (L + J) / 2;
      const BasisLabel v{L, J};
      ob.put("K", v, v, std::pow(q, jval));
      ob.put("K^-1", v, v, std::pow(q, -jval));
      ob.put("E", v, {L, J + 2}, sq(lmj) * sq(lpj + 1));
      ob.put("F", v, {L, J - 2}, sq(lmj + 1) * sq(lpj));
      const Real up = std::sqrt(qn(L + 1, q)) * std::sqrt(qn(L + 2, q));
      const Real down = L >= 2 ? std::sqrt(qn(L - 1, q)) * std::sqrt(qn(L, q)) : 1.0;
      // x_1
      ob.put("x1", v, {L + 2, J + 2}, std::pow(q, -lval + jval) * sq(lpj + 1) * sq(lpj + 2) / up * a);
      if (L > 0)
        ob.put("x1", v, {L, J + 2}, -std::pow(q, jval + 2) * sq(lmj) * sq(lpj + 1) * s2 / qn(L, q) * b);
      if (L >= 2)
        ob.put("x1", v, {L - 2, J + 2},
               -std::pow(q, lval + jval + 1) * sq(lmj - 1) * sq(lmj) / down * am);
      // x_0
      ob.put("x0", v, {L + 2, J}, std::pow(q, jval) * sq(lmj + 1) * sq(lpj + 1) * s2 / up * a);
      const Real ratio = L > 0 ? qn(lmj, q) * qn(2, q) / qn(L, q) : 0.0;
      ob.put("x0", v, v, (1 - std::pow(q, lval + jval + 1) * ratio) * b);
      if (L >= 2)
        ob.put("x0", v, {L - 2, J}, std::pow(q, jval) * sq(lmj) * sq(lpj) * s2 / down * am);
      // x_{-1}
      ob.put("x-1", v, {L + 2, J - 2},
             std::pow(q, lval + jval) * sq(lmj + 1) * sq(lmj + 2) / up * a);
      if (L > 0)
        ob.put("x-1", v, {L, J - 2}, std::pow(q, jval) * sq(lmj + 1) * sq(lpj) * s2 / qn(L, q) * b);
      if (L >= 2)
        ob.put("x-1", v, {L - 2, J - 2},
               -std::pow(q, -lval + jval - 1) * sq(lpj - 1) * sq(lpj) / down * am);
    }
  }
  for (const char* g : {"K", "K^-1", "E", "F"}) r.set(g, ob.build(g));
  for (const char* x : {"x1", "x0", "x-1"}) r.set(x, ob.build(x), {1, 0});
  const SphereGenerators s = x_to_ABB(r);
  r.set(Generator::A, s.A, {1, 0});
  r.set(Generator::B, s.B, {1, 0});
  r.set(Generator::Bstar, s.Bstar, {1, 0});
  return r;
}

SphereGenerators x_to_ABB(const Rep& r) {
  const Real q = r.params.q_value();
  const Real w = std::sqrt(1 + q * q);
  const Operator& x0 = r.op("x0").matrix;
  SphereGenerators s;
  const Operator base =
      r.regime == Regime::c_infinite ? Operator(-x0) : Operator(identity_operator(r.dim()) - x0);
  s.A = base * Complex(1 / (1 + q * q));
  s.B = r.op("x-1").matrix * Complex(q / w);
  s.Bstar = r.op("x1").matrix * Complex(-1 / w);
  s.A.prune(Complex(0));
  return s;
}

}  // namespace podles

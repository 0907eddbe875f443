#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

using namespace podles;
using namespace podles::testing;

namespace {

const Real q = 0.5;
Real qi(int n) { return q_number<Real>(n, q); }

int idx(const Rep& r, int a, int b) {
  const int i = r.index_of({a, b});
  REQUIRE(i >= 0);
  return i;
}

}  // namespace

TEST_CASE("sphere representations") {
  SUBCASE("c = 0, sector +: A = q^{2n}") {
    const Rep r = build_podles(params("0"), Sector::plus);
    CHECK(r.dim() == 9);
    for (int n = 0; n <= 8; ++n)
      CHECK(entry(r.op(Generator::A).matrix, n, n).real() == doctest::Approx(std::pow(q, 2 * n)).epsilon(1e-15));
  }
  SUBCASE("B annihilates the lowest vector") {
    for (auto [c, s] : {std::pair{"0", Sector::plus}, std::pair{"1", Sector::plus},
                        std::pair{"1", Sector::minus}, std::pair{"inf", Sector::minus}}) {
      const Rep r = build_podles(params(c), s);
      const Operator& b = r.op(Generator::B).matrix;
      Real col0 = 0;
      for (int i = 0; i < r.dim(); ++i) col0 += std::abs(entry(b, i, 0));
      CHECK(col0 <= 1e-15);
    }
  }
  SUBCASE("c = infinity: B eta_2 = (1 - q^8)^{1/2} eta_1") {
    const Rep r = build_podles(params("inf"), Sector::plus);
    CHECK(entry(r.op(Generator::B).matrix, 1, 2).real() == doctest::Approx(std::sqrt(1 - std::pow(q, 8))));
    const Rep m = build_podles(params("inf"), Sector::minus);
    CHECK(entry(m.op(Generator::A).matrix, 1, 1).real() == doctest::Approx(-q * q));
  }
  SUBCASE("sector 0 is one-dimensional") {
    ParamSet p = params("1");
    p.u_phase = Complex(0, 1);
    const Rep r = build_podles(p, Sector::zero);
    CHECK(r.dim() == 1);
    CHECK(entry(r.op(Generator::B).matrix, 0, 0) == Complex(0, 1));
    CHECK(entry(r.op(Generator::A).matrix, 0, 0) == Complex(0));
    p.c = 4;
    CHECK(std::abs(entry(build_podles(p, Sector::zero).op(Generator::B).matrix, 0, 0)) == doctest::Approx(2));
  }
  SUBCASE("parameter validation") {
    CHECK_THROWS_AS(build_podles(params("0"), Sector::minus), ParameterError);
    ParamSet p = params("1");
    p.q = Rational(3, 2);
    CHECK_THROWS_AS(build_podles(p, Sector::plus), ParameterError);
    p = params("1");
    p.u_phase = Complex(2, 0);
    CHECK_THROWS_AS(build_podles(p, Sector::plus), ParameterError);
  }
}

TEST_CASE("spin representations") {
  const Rep r0 = build_spin(HalfInt::integer(0), Rational(1, 2));
  CHECK(r0.dim() == 1);
  CHECK(max_abs(r0.op(Generator::E).matrix) == 0);
  CHECK(entry(r0.op(Generator::K).matrix, 0, 0) == Complex(1));

  const Rep half = build_spin(HalfInt::from_doubled(1), Rational(1, 2));
  CHECK(entry(half.op(Generator::E).matrix, idx(half, 1, 1), idx(half, 1, -1)).real() == doctest::Approx(1));

  const Rep one = build_spin(HalfInt::integer(1), Rational(1, 2));
  for (int j = -1; j <= 1; ++j)
    CHECK(entry(one.op(Generator::K).matrix, idx(one, 2, 2 * j), idx(one, 2, 2 * j)).real() ==
          doctest::Approx(std::pow(q, j)).epsilon(1e-15));

  const Rep three = build_spin(HalfInt::from_doubled(3), Rational(1, 2));
  CHECK(max_abs(Operator(three.op(Generator::E).matrix.adjoint()) - three.op(Generator::F).matrix) == 0);
}

TEST_CASE("auxiliary algebra representations") {
  ParamSet p = params("1");
  p.y0 = -2;
  const Rep r = build_yc(p);
  const Operator& x = r.op(Generator::X).matrix;
  const Operator& xs = r.op(Generator::Xstar).matrix;
  const Operator& y = r.op(Generator::Y).matrix;
  Real xs_col0 = 0;
  for (int i = 0; i < r.dim(); ++i) xs_col0 += std::abs(entry(xs, i, 0));
  CHECK(xs_col0 == 0);
  CHECK(entry(x, 1, 0).real() == doctest::Approx(std::sqrt(1 - q * q) * std::sqrt(4 + 1)));
  CHECK(entry(y, 2, 2).real() == doctest::Approx(std::pow(q, 4) * -2));
  for (int n = 0; n < 8; ++n) {
    CHECK(entry(x, n + 1, n).real() > 0);
    for (int m = 0; m <= 8; ++m)
      if (m != n + 1) CHECK(entry(x, m, n) == Complex(0));
  }
  std::vector<Real> spectrum;
  for (int n = 0; n <= 8; ++n) spectrum.push_back(entry(y, n, n).real());
  for (int n = 0; n <= 8; ++n) CHECK(spectrum[n] == std::pow(q, 2 * n) * -2);
  const Rep inf = build_yc(params("inf"));
  CHECK(entry(inf.op(Generator::X).matrix, 1, 0).real() == doctest::Approx(std::sqrt(1 - q * q) * std::sqrt(2)));
  ParamSet small = params("1");
  small.cutoff = 1;
  CHECK_THROWS_AS(build_yc(small), ParameterError);
}

TEST_CASE("first cross construction") {
  const Rep r = build_cross_I(params("1", Sign::plus, "0", 1));
  const Real lp = 0.5 + std::sqrt(1.25);
  CHECK(r.dim() == 81);
  CHECK(entry(r.op(Generator::A).matrix, idx(r, 2, 3), idx(r, 2, 3)).real() == doctest::Approx(lp * std::pow(q, 4)));
  const Rep h2 = build_cross_I(params("1", Sign::plus, "0", 2));
  CHECK(entry(h2.op(Generator::K).matrix, idx(h2, 0, 0), idx(h2, 0, 0)).real() == doctest::Approx(2));

  // (EA - AE - q^{-1/2} B* K) eta_11.
  const Operator& E = r.op(Generator::E).matrix;
  const Operator& A = r.op(Generator::A).matrix;
  const Operator& Bs = r.op(Generator::Bstar).matrix;
  const Operator& K = r.op(Generator::K).matrix;
  const Operator d = Operator(E * A) - Operator(A * E) - Operator(Bs * K) * Complex(std::pow(q, -0.5));
  Real res = 0;
  for (Operator::InnerIterator it(d, idx(r, 1, 1)); it; ++it) res += std::norm(it.value());
  CHECK(std::sqrt(res) <= 1e-9);

  CHECK_THROWS_AS(build_cross_I(params("0", Sign::minus)), ParameterError);
  CHECK_THROWS_AS(build_cross_I(params("inf")), ParameterError);
}

TEST_CASE("diagonal seeds") {
  for (const char* c : {"0", "1", "inf"}) {
    const ParamSet plus = params(c, Sign::plus, "0"), minus = params(c, Sign::minus, "0");
    CHECK(coeff_beta0_ll(HalfInt::integer(0), plus) == 0);
    for (int l = 0; l <= 6; ++l) {
      CHECK(coeff_beta0_ll(HalfInt::integer(l), plus) == doctest::Approx(coeff_beta0_ll(HalfInt::integer(l), minus)));
      CHECK(coeff_alpha_plus_ll(HalfInt::integer(l), plus) ==
            doctest::Approx(coeff_alpha_plus_ll(HalfInt::integer(l), minus)));
    }
  }
  for (int c : {0, 1}) {
    const Real rho = 1 + (q + 1 / q) * (q + 1 / q) * c;
    const ParamSet p = params(std::to_string(c));
    const Real a = coeff_alpha_plus_ll(HalfInt::integer(0), p);
    CHECK(std::abs(a * a * qi(3) - rho) <= 1e-12);
  }
}

TEST_CASE("seed identities") {
  for (const char* l0 : {"1/2", "1"})
    for (const char* c : {"0", "1"})
      for (Sign s : {Sign::plus, Sign::minus}) {
        const ParamSet p = params(c, s, l0);
        const int L0 = p.l0.doubled;
        const Real rho = 1 + (q + 1 / q) * (q + 1 / q) * std::stod(c);
        const Real t = qi(L0 + 2) / qi(L0) * coeff_beta0_ll(p.l0, p);
        CHECK(std::abs(q * q * t * t - (1 - q * q) * t - rho) < 1e-12);
      }
  for (const char* l0 : {"0", "1/2", "1"})
    for (const char* c : {"0", "1"})
      for (Sign s : {Sign::plus, Sign::minus}) {
        const ParamSet p = params(c, s, l0);
        const Real rho = 1 + (q + 1 / q) * (q + 1 / q) * std::stod(c);
        for (int k = 0; k <= 6; ++k) {
          const HalfInt l = p.l0 + HalfInt::integer(k);
          const Real a = coeff_alpha_plus_ll(l, p), b = coeff_beta0_ll(l, p);
          const Real lhs = (1 + q * q) * q * qi(l.doubled + 3) / qi(l.doubled + 2) * a * a;
          const Real rhs = q * q * rho - (1 - q * q) * q * q * b - std::pow(q, 4) * b * b;
          CHECK(std::abs(lhs - rhs) < 1e-10);
        }
      }
}

TEST_CASE("sign separation") {
  for (const char* l0 : {"1/2", "1"})
    for (const char* c : {"1", "inf"}) {
      const Real plus = coeff_beta0_ll(HalfInt::parse(l0), params(c, Sign::plus, l0));
      const Real minus = coeff_beta0_ll(HalfInt::parse(l0), params(c, Sign::minus, l0));
      CHECK(plus > 0);
      CHECK(minus < 0);
    }
}

TEST_CASE("coefficient table") {
  const ParamSet p = params("1", Sign::plus, "0");
  const CoeffTable t = coeff_table(p, HalfInt::integer(4));
  CHECK(t.rows.size() == 25);
  const CoeffRow r00 = t.at(HalfInt::integer(0), HalfInt::integer(0));
  CHECK(r00.beta_zero == 0);
  CHECK(r00.beta_plus == doctest::Approx(r00.alpha_plus));
  for (int l = 0; l <= 4; ++l) {
    const HalfInt L = HalfInt::integer(l);
    const CoeffRow top = t.at(L, L);
    CHECK(top.alpha_plus > 0);
    CHECK(top.beta_plus == doctest::Approx(std::pow(q, l) * std::sqrt(qi(2)) / std::sqrt(qi(2 * l + 2)) *
                                           coeff_alpha_plus_ll(L, p)));
    if (l > 0) {
      const CoeffRow below = t.at(L, L - HalfInt::integer(1));
      CHECK(below.alpha_zero == doctest::Approx(-std::sqrt(qi(2)) / std::sqrt(qi(2 * l)) * std::pow(q, l + 1) *
                                                coeff_beta0_ll(L, p)));
    }
  }
  CHECK(t.at(HalfInt::integer(0), HalfInt::integer(1)).alpha_plus == 0);
  CHECK_THROWS_AS(coeff_table(params("1", Sign::plus, "1/2"), HalfInt::integer(2)), ParameterError);
}

TEST_CASE("tower matrices agree with the table and satisfy the tensor rules") {
  for (const auto& [label, p] : cross_II_grid()) {
    INFO(label);
    const Rep r = build_cross_II(p, tower_top(p));
    const XFromTable x = x_from_table(r, coeff_table(p, tower_top(p)));
    CHECK(max_abs(x.x1 - r.op("x1").matrix) < 1e-10);
    CHECK(max_abs(x.x0 - r.op("x0").matrix) < 1e-10);
    CHECK(max_abs(x.xm1 - r.op("x-1").matrix) < 1e-10);

    // E x_1 = q^-1 x_1 E, E x_0 = x_0 E + q^{-1/2}(1+q^2)^{1/2} x_1 K and
    // E x_{-1} = q x_{-1} E + q^{-1/2}(1+q^2)^{1/2} x_0 K, with K x_i = q^i x_i K.
    const Operator& E = r.op(Generator::E).matrix;
    const Operator& K = r.op(Generator::K).matrix;
    const Complex w(std::pow(q, -0.5) * std::sqrt(1 + q * q));
    CHECK(max_abs(Operator(E * x.x1) - Operator(x.x1 * E) * Complex(1 / q)) < 1e-10);
    CHECK(max_abs(Operator(E * x.x0) - Operator(x.x0 * E) - Operator(x.x1 * K) * w) < 1e-10);
    CHECK(max_abs(Operator(E * x.xm1) - Operator(x.xm1 * E) * Complex(q) - Operator(x.x0 * K) * w) < 1e-10);
    CHECK(max_abs(Operator(K * x.x1) - Operator(x.x1 * K) * Complex(q)) < 1e-10);
    CHECK(max_abs(Operator(K * x.x0) - Operator(x.x0 * K)) < 1e-10);
    CHECK(max_abs(Operator(K * x.xm1) - Operator(x.xm1 * K) * Complex(1 / q)) < 1e-10);

    const int top = r.index_of({p.l0.doubled, p.l0.doubled});
    CHECK(entry(r.op("x0").matrix, top, top).real() == doctest::Approx(coeff_beta0_ll(p.l0, p)));
  }
}

TEST_CASE("x to sphere generators") {
  const ParamSet p = params("1", Sign::plus, "1/2");
  const Rep r = build_cross_II(p, tower_top(p));
  const SphereGenerators s = x_to_ABB(r);
  const Real w = std::sqrt(1 + q * q);
  const Operator id = identity_operator(r.dim());
  CHECK(max_abs(id - Operator(s.A * Complex(1 + q * q)) - r.op("x0").matrix) < 1e-12);
  CHECK(max_abs(Operator(s.Bstar * Complex(-w)) - r.op("x1").matrix) < 1e-12);
  CHECK(max_abs(Operator(s.B * Complex(w / q)) - r.op("x-1").matrix) < 1e-12);

  Rep fake = r;
  fake.set("x0", identity_operator(r.dim()));
  fake.set("x-1", Operator(r.dim(), r.dim()));
  const SphereGenerators z = x_to_ABB(fake);
  CHECK(max_abs(z.A) == 0);
  CHECK(max_abs(z.B) == 0);

  const ParamSet pi = params("inf", Sign::minus, "1");
  const Rep ri = build_cross_II(pi, tower_top(pi));
  CHECK(max_abs(Operator(x_to_ABB(ri).A * Complex(-(1 + q * q))) - ri.op("x0").matrix) < 1e-12);
}

TEST_CASE("tower basis and validation") {
  const ParamSet p = params("0", Sign::plus, "1/2");
  const Rep r = build_cross_II(p, HalfInt::from_doubled(5));
  CHECK(r.dim() == 2 + 4 + 6);
  CHECK(r.basis.front() == BasisLabel{1, -1});
  CHECK(r.basis.back() == BasisLabel{5, 5});
  CHECK_THROWS_AS(build_cross_II(p, HalfInt::from_doubled(3)), ParameterError);
  CHECK_THROWS_AS(build_cross_II(p, HalfInt::integer(3)), ParameterError);
}

TEST_CASE("JSON round trip") {
  for (const Rep& r : {build_podles(params("1"), Sector::minus), build_cross_I(params("1", Sign::minus)),
                       build_cross_II(params("inf", Sign::plus, "1/2"), HalfInt::from_doubled(7)),
                       build_spin(HalfInt::from_doubled(3), Rational(1, 2))}) {
    const nlohmann::json doc = to_json(r);
    const Rep back = rep_from_json(nlohmann::json::parse(doc.dump()));
    CHECK(back.kind == r.kind);
    CHECK(back.basis == r.basis);
    CHECK(back.levels == r.levels);
    CHECK(back.cutoff == r.cutoff);
    CHECK(back.presentation == r.presentation);
    CHECK(back.regime == r.regime);
    CHECK(back.operators.size() == r.operators.size());
    for (const auto& [name, t] : r.operators) {
      CHECK(max_abs(back.op(name).matrix - t.matrix) == 0);
      CHECK(back.op(name).reach == t.reach);
    }
    CHECK(to_json(back).dump() == doc.dump());
  }
  nlohmann::json bad = to_json(build_podles(params("1"), Sector::plus));
  bad["operators"]["A"][0][0] = 99;
  CHECK_THROWS_AS(rep_from_json(bad), ParameterError);
  bad = to_json(build_podles(params("1"), Sector::plus));
  bad.erase("basis");
  CHECK_THROWS_AS(rep_from_json(bad), ParameterError);
}

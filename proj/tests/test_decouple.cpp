#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

using namespace podles;
using namespace podles::testing;

namespace {

const Real q = 0.5;

/// Max interior deviation of two operators, using the combined reach.
Real interior_gap(const Rep& r, const TaggedOperator& a, const TaggedOperator& b) {
  const Report rep = check_identity(r, "gap", {OperatorTerm{Complex(1), {&a}}, OperatorTerm{Complex(-1), {&b}}}, 0);
  REQUIRE(rep.vectors_checked > 0);
  return rep.max_residual;
}

}  // namespace

TEST_CASE("Y and k on the first cross construction are the displayed diagonals") {
  for (Sign s : {Sign::plus, Sign::minus}) {
    const ParamSet p = params("1", s, "0", 2);
    const Rep r = build_cross_I(p);
    const Real lp = p.lambda_sign();
    const XYOperators xy = build_XY(r);
    const EFKOperators efk = build_efk(r);
    for (int n = 0; n <= 8; ++n)
      for (int j = 0; j <= 8; ++j) {
        const int i = r.index_of({n, j});
        CHECK(entry(xy.Y.matrix, i, i).real() ==
              doctest::Approx(std::pow(q, 2 * j + 1) * lp / 4).epsilon(1e-13));
        CHECK(entry(efk.k.matrix, i, i).real() == doctest::Approx(std::pow(q, 2 * (n - j)) * 4).epsilon(1e-13));
      }
  }
}

TEST_CASE("X and Y restricted to a column match the auxiliary representation") {
  for (auto [c, s] : {std::pair{"1", Sign::plus}, std::pair{"1", Sign::minus}, std::pair{"0", Sign::plus}}) {
    const ParamSet p = params(c, s, "0", 2);
    const Rep r = build_cross_I(p);
    const XYOperators xy = build_XY(r);
    ParamSet yp = p;
    yp.y0 = q * p.lambda_sign() / (p.h * p.h);
    const Rep y = build_yc(yp);
    for (int n = 0; n <= 2; ++n) {
      INFO("c=" << c << " n=" << n);
      for (int j = 0; j < 8; ++j) {
        const int from = r.index_of({n, j}), to = r.index_of({n, j + 1});
        CHECK(entry(xy.X.matrix, to, from).real() ==
              doctest::Approx(entry(y.op(Generator::X).matrix, j + 1, j).real()).epsilon(1e-10));
        CHECK(entry(xy.Y.matrix, from, from).real() == doctest::Approx(entry(y.op(Generator::Y).matrix, j, j).real()));
      }
    }
  }
}

TEST_CASE("round trip on both cross constructions") {
  std::vector<Rep> reps;
  for (const auto& [label, p] : cross_I_grid()) reps.push_back(build_cross_I(p));
  for (const auto& [label, p] : cross_II_grid())
    if (!(p.l0.doubled == 0 && p.c_infinite)) reps.push_back(build_cross_II(p, tower_top(p)));
  for (const Rep& r : reps) {
    INFO(r.kind << " l0=" << to_string(r.params.l0) << " c=" << (r.params.c_infinite ? "inf" : to_string(r.params.c))
                << " sign=" << to_string(r.params.sign));
    const XYOperators xy = build_XY(r);
    const EFOperators ef = recover_EF(xy.X, r.op(Generator::B), r.op(Generator::K), r.op(Generator::A), r.params.q);
    CHECK(interior_gap(r, ef.F, r.op(Generator::F)) <= 1e-9);
    CHECK(interior_gap(r, ef.E, r.op(Generator::E)) <= 1e-9);
    CHECK(interior_gap(r, f_from_X(r), build_efk(r).f) <= 1e-9);
    const TaggedOperator adj{Operator(xy.X.matrix.adjoint()), xy.X.reach};
    CHECK(interior_gap(r, xy.Xstar, adj) <= 1e-9);
  }
}

TEST_CASE("zero F-part gives zero F") {
  const Rep r = build_cross_I(params("1"));
  const TaggedOperator& B = r.op(Generator::B);
  const TaggedOperator X{Operator(B.matrix * Complex(q)), B.reach};
  const EFOperators ef = recover_EF(X, B, r.op(Generator::K), r.op(Generator::A), r.params.q);
  CHECK(max_abs(ef.F.matrix) == 0);
  CHECK(max_abs(ef.E.matrix) == 0);
}

TEST_CASE("singular A is reported") {
  const ParamSet p = params("inf", Sign::plus, "0");
  const Rep r = build_cross_II(p, tower_top(p));
  const XYOperators xy = build_XY(r);
  CHECK_THROWS_AS(recover_EF(xy.X, r.op(Generator::B), r.op(Generator::K), r.op(Generator::A), p.q), EvaluationError);
  CHECK_THROWS_AS(f_from_X(r), EvaluationError);
  CHECK_THROWS_AS(inverse_operator(Operator(3, 3)), EvaluationError);
}

TEST_CASE("attached generators claim the right presentations") {
  const Rep r = build_cross_I(params("1", Sign::minus));
  const Rep d = attach_decoupling(r);
  CHECK(d.presentation == PresentationId::Decoupled);
  CHECK(d.has(Generator::Yinv));
  CHECK(d.has(Generator::Ainv));
  CHECK(all_pass(check_relations(d, make_presentation(PresentationId::Decoupled, Regime::c_finite))));
  const Rep e = attach_efk(r);
  CHECK(e.presentation == PresentationId::UqPrime);
  CHECK(all_pass(check_relations(e, make_presentation(PresentationId::UqPrime, Regime::c_finite))));
  CHECK(all_pass(check_star(e, make_presentation(PresentationId::UqPrime, Regime::c_finite))));
}

TEST_CASE("reach bookkeeping") {
  CHECK(reach_sum({1, 0}, {0, 1}) == std::array<int, 2>{1, 1});
  CHECK(reach_max({2, 0}, {1, 3}) == std::array<int, 2>{2, 3});
  const Rep r = build_cross_I(params("1"));
  const XYOperators xy = build_XY(r);
  CHECK(xy.X.reach == std::array<int, 2>{0, 1});
  CHECK(xy.Y.reach == std::array<int, 2>{0, 0});
}

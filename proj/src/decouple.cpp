#include "podles/decouple.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>

namespace podles {

std::array<int, 2> reach_sum(std::array<int, 2> a, std::array<int, 2> b) {
  return {a[0] + b[0], a[1] + b[1]};
}

std::array<int, 2> reach_max(std::array<int, 2> a, std::array<int, 2> b) {
  return {std::max(a[0], b[0]), std::max(a[1], b[1])};
}

namespace {

bool is_diagonal(const Operator& m) {
  for (int k = 0; k < m.outerSize(); ++k)
    for (Operator::InnerIterator it(m, k); it; ++it)
      if (it.row() != it.col() && it.value() != Complex(0)) return false;
  return true;
}

TaggedOperator tagged(Operator m, std::array<int, 2> reach) {
  m.prune(Complex(0));
  m.makeCompressed();
  return TaggedOperator{std::move(m), reach};
}

Operator adjoint(const Operator& m) { return Operator(m.adjoint()); }

}  // namespace

Operator inverse_operator(const Operator& m) {
  if (is_diagonal(m)) {
    try {
      return diagonal_inverse(m);
    } catch (const ConstructionError&) {
      throw EvaluationError("operator is singular");
    }
  }
  const Eigen::MatrixXcd dense(m);
  Eigen::FullPivLU<Eigen::MatrixXcd> lu(dense);
  lu.setThreshold(1e-12);
  if (!lu.isInvertible()) throw EvaluationError("operator is numerically singular");
  Eigen::MatrixXcd inv = lu.inverse();
  return inv.sparseView();
}

XYOperators build_XY(const Rep& r) {
  const Real q = r.params.q_value();
  const Real lam = q - 1 / q;
  const Complex pre(std::pow(q, 1.5) * lam);
  const TaggedOperator& A = r.op(Generator::A);
  const TaggedOperator& B = r.op(Generator::B);
  const TaggedOperator& Bs = r.op(Generator::Bstar);
  const TaggedOperator& E = r.op(Generator::E);
  const TaggedOperator& F = r.op(Generator::F);
  const TaggedOperator& K = r.op(Generator::K);
  const Operator Kinv = r.has(Generator::Kinv) ? r.op(Generator::Kinv).matrix : inverse_operator(K.matrix);
  const std::array<int, 2> kinv_reach =
      r.has(Generator::Kinv) ? r.op(Generator::Kinv).reach : K.reach;

  XYOperators out;
  const Operator x = pre * (F.matrix * Kinv * A.matrix) + Complex(q) * B.matrix;
  out.X = tagged(x, reach_max(reach_sum(reach_sum(F.reach, kinv_reach), A.reach), B.reach));
  const Operator xs = pre * (A.matrix * Kinv * E.matrix) + Complex(q) * Bs.matrix;
  out.Xstar = tagged(xs, reach_max(reach_sum(reach_sum(A.reach, kinv_reach), E.reach), Bs.reach));
  const Operator y = Complex(q) * (Kinv * Kinv * A.matrix);
  out.Y = tagged(y, reach_sum(reach_sum(kinv_reach, kinv_reach), A.reach));
  return out;
}

Rep attach_decoupling(const Rep& r) {
  Rep out = r;
  const XYOperators xy = build_XY(r);
  out.operators[std::string(to_string(Generator::X))] = xy.X;
  out.operators[std::string(to_string(Generator::Xstar))] = xy.Xstar;
  out.operators[std::string(to_string(Generator::Y))] = xy.Y;
  if (is_diagonal(xy.Y.matrix))
    out.operators[std::string(to_string(Generator::Yinv))] = tagged(diagonal_inverse(xy.Y.matrix), {0, 0});
  if (!out.has(Generator::Ainv) && is_diagonal(r.op(Generator::A).matrix))
    out.set(Generator::Ainv, diagonal_inverse(r.op(Generator::A).matrix));
  out.kind = r.kind + "+XY";
  out.presentation = PresentationId::Decoupled;
  return out;
}

EFOperators recover_EF(const TaggedOperator& X, const TaggedOperator& B, const TaggedOperator& K,
                       const TaggedOperator& A, const Rational& q_exact) {
  const Real q = q_exact.get_d();
  const Real lam = q - 1 / q;
  const Complex pre(std::pow(q, -1.5) / lam);
  // A^{-1} is tagged like A: the recovered operators equal E and F exactly in
  // the algebra, so only the direct factors decide truncation contamination.
  const Operator Ainv = inverse_operator(A.matrix);
  const Operator xs = adjoint(X.matrix);
  const Operator bs = adjoint(B.matrix);
  EFOperators out;
  out.F = tagged(pre * ((X.matrix - Complex(q) * B.matrix) * K.matrix * Ainv),
                 reach_sum(reach_sum(reach_max(X.reach, B.reach), K.reach), A.reach));
  out.E = tagged(pre * (Ainv * K.matrix * (xs - Complex(q) * bs)),
                 reach_sum(reach_sum(A.reach, K.reach), reach_max(X.reach, B.reach)));
  return out;
}

EFKOperators build_efk(const Rep& r) {
  const TaggedOperator& E = r.op(Generator::E);
  const TaggedOperator& F = r.op(Generator::F);
  const TaggedOperator& K = r.op(Generator::K);
  const Operator Kinv = r.has(Generator::Kinv) ? r.op(Generator::Kinv).matrix : inverse_operator(K.matrix);
  EFKOperators out;
  out.e = tagged(E.matrix * K.matrix, reach_sum(E.reach, K.reach));
  out.f = tagged(Kinv * F.matrix, reach_sum(K.reach, F.reach));
  out.k = tagged(K.matrix * K.matrix, reach_sum(K.reach, K.reach));
  out.kinv = tagged(Kinv * Kinv, reach_sum(K.reach, K.reach));
  return out;
}

TaggedOperator f_from_X(const Rep& r) {
  const Real q = r.params.q_value();
  const Real lam = q - 1 / q;
  const XYOperators xy = build_XY(r);
  const TaggedOperator& A = r.op(Generator::A);
  const TaggedOperator& B = r.op(Generator::B);
  const Operator Ainv = inverse_operator(A.matrix);
  return tagged(Complex(std::pow(q, -0.5) / lam) * ((xy.X.matrix - Complex(q) * B.matrix) * Ainv),
                reach_sum(reach_max(xy.X.reach, B.reach), A.reach));
}

Rep attach_efk(const Rep& r) {
  Rep out = r;
  const EFKOperators efk = build_efk(r);
  out.operators[std::string(to_string(Generator::e))] = efk.e;
  out.operators[std::string(to_string(Generator::f))] = efk.f;
  out.operators[std::string(to_string(Generator::k))] = efk.k;
  out.operators[std::string(to_string(Generator::kinv))] = efk.kinv;
  out.kind = r.kind + "+efk";
  out.presentation = PresentationId::UqPrime;
  return out;
}

}  // namespace podles

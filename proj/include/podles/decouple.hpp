#pragma once

// Matrix-level decoupling: the auxiliary generators X, X*, Y built from a
// cross product representation, the inverse map back to E and F, and the
// generators e, f, k of the smaller symmetry algebra.

#include "podles/reps.hpp"

namespace podles {

/// Reach of a product is the sum of the factors' reaches; of a sum, the max.
std::array<int, 2> reach_sum(std::array<int, 2> a, std::array<int, 2> b);
std::array<int, 2> reach_max(std::array<int, 2> a, std::array<int, 2> b);

/// Inverse of a diagonal or a small dense-invertible operator. Throws
/// EvaluationError when the matrix is numerically singular.
Operator inverse_operator(const Operator& m);

struct XYOperators {
  TaggedOperator X;
  /// X* from its own formula, independent of X.
  TaggedOperator Xstar;
  TaggedOperator Y;
};

XYOperators build_XY(const Rep& r);

/// Copy of r with X, X*, Y (and Y^-1 when Y is diagonal) attached, claiming
/// the decoupled presentation.
Rep attach_decoupling(const Rep& r);

struct EFOperators {
  TaggedOperator E;
  TaggedOperator F;
};

/// E and F recovered from X, B, K, A, with X* taken as the adjoint of X and
/// B* as the adjoint of B.
EFOperators recover_EF(const TaggedOperator& X, const TaggedOperator& B, const TaggedOperator& K,
                       const TaggedOperator& A, const Rational& q);

struct EFKOperators {
  TaggedOperator e;
  TaggedOperator f;
  TaggedOperator k;
  TaggedOperator kinv;
};

EFKOperators build_efk(const Rep& r);

/// f = q^{-1/2} lambda^{-1} (X - qB) A^{-1}; must agree with K^{-1} F.
/// Throws EvaluationError when A is numerically singular.
TaggedOperator f_from_X(const Rep& r);

/// Copy of r carrying e, f, k, k^-1 and claiming the primed symmetry algebra.
Rep attach_efk(const Rep& r);

}  // namespace podles

#pragma once

// Numeric checks on truncated representations with interior-vector
// accounting, and the bridge between normal forms and matrices.

#include "podles/decouple.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace podles {

/// Result of one identity check. A basis vector is checked when every word of
/// the identity keeps it inside the truncation; the residual of a vector xi is
/// |(lhs - rhs) xi| / max(1, sum_w |coef_w| |pi(w) xi|).
struct Report {
  std::string relation_id;
  Real max_residual = 0;
  int vectors_checked = 0;
  int vectors_skipped = 0;
  Real tolerance = 0;
  bool pass = false;
};

inline constexpr Real kDefaultTolerance = 1e-9;

bool all_pass(const std::vector<Report>& reports);
nlohmann::json to_json(const Report& r);
nlohmann::json to_json(const std::vector<Report>& reports);

/// One weighted product of tagged operators.
struct OperatorTerm {
  Complex coeff{1, 0};
  std::vector<const TaggedOperator*> factors;
};

/// Checks sum(terms) == 0 on the interior of r's grading.
Report check_identity(const Rep& r, std::string id, const std::vector<OperatorTerm>& terms, Real tol);

/// Every defining relation of p, evaluated in r. Inverse letters missing from
/// r are supplied by inverting diagonal matrices; other missing letters throw
/// ParameterError.
std::vector<Report> check_relations(const Rep& r, const Presentation& p, Real tol = kDefaultTolerance);

/// Compares the matrix of star(g) with the adjoint of the matrix of g for each
/// generator of p carried by r; for the spin-tower construction also checks
/// x_{-1} = -q^{-1} x_1^*.
std::vector<Report> check_star(const Rep& r, const Presentation& p, Real tol = kDefaultTolerance);
/// Uses r's own presentation.
std::vector<Report> check_star(const Rep& r, Real tol = kDefaultTolerance);

using NamedOperator = std::pair<std::string, const TaggedOperator*>;

/// All pairwise commutators [a, b] for a in set_a, b in set_b.
std::vector<Report> check_commutant(const Rep& r, const std::vector<NamedOperator>& set_a,
                                    const std::vector<NamedOperator>& set_b, Real tol = kDefaultTolerance);

/// E, F, K block-diagonal across l, each block equal to the spin-l matrices.
Report check_restriction_decomposition(const Rep& r, HalfInt l0, Real tol = kDefaultTolerance);

/// Random words of length 1..max_len over the letters of p carried by r:
/// direct matrix products against the matrices of their normal forms.
Report check_morphism(const Rep& r, const Presentation& p, int trials, int max_len,
                      Real tol = 1e-8, std::uint64_t seed = 20190101);

/// Matrix of an algebra element in r (letters resolved as in check_relations).
Operator evaluate(const AlgebraElement& x, const Rep& r);

/// Decoupling identities for a cross product representation: the Y_c
/// relations, commutation with A, B, B*, XK = qKX, YK = KY, the two X*
/// constructions, and the recovery of E and F.
std::vector<Report> check_decoupling(const Rep& r, Real tol = kDefaultTolerance);

/// Everything applicable to r: relations, star, and for cross product
/// representations the decoupling loop, e/f/k checks and, for the spin-tower
/// construction, the restriction decomposition.
std::vector<Report> run_suite(const Rep& r, Real tol = kDefaultTolerance, std::uint64_t seed = 20190101);

}  // namespace podles

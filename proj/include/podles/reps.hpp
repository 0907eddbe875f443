#pragma once

// Truncated matrix representations of the sphere, the symmetry algebra, the
// auxiliary algebra Y_c and the cross product, together with the closed-form
// coefficient families of the spin-tower construction.

#include "podles/algebra.hpp"

#include <Eigen/Sparse>
#include <json.hpp>

#include <array>
#include <complex>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace podles {

using Real = double;
using Complex = std::complex<Real>;
using Operator = Eigen::SparseMatrix<Complex>;

struct ConstructionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Sign { plus, minus };
enum class Sector { plus, minus, zero };

inline int sign_value(Sign s) { return s == Sign::plus ? 1 : -1; }
std::string_view to_string(Sign s);
Sign sign_from_string(std::string_view text);

struct ParamSet {
  Rational q{1, 2};
  Rational c{0};
  bool c_infinite = false;
  Sign sign = Sign::plus;
  HalfInt l0{};
  Real h = 1;
  Real y0 = 1;
  Complex u_phase{1, 0};
  int cutoff = 8;

  /// Throws ParameterError unless q in (0,1), c >= 0, h > 0, y0 != 0,
  /// |u_phase| = 1, cutoff >= 1 and l0 >= 0.
  void validate() const;
  Real q_value() const { return q.get_d(); }
  /// Numeric c; throws ParameterError when c is infinite.
  Real c_value() const;
  Regime regime() const { return c_infinite ? Regime::c_infinite : Regime::c_finite; }
  EvalPoint point() const { return EvalPoint{q, c, c_infinite}; }
  /// lambda_+ or lambda_- for the stored sign (c finite only).
  Real lambda_sign() const;
  Real lambda_other() const;
};

/// Matrix of one generator with its upward reach along each grading axis:
/// applying it to a vector at level v yields components at levels <= v + reach.
struct TaggedOperator {
  Operator matrix;
  std::array<int, 2> reach{0, 0};
};

enum class BasisKind { n, nj, lj };

/// Basis label. n: (n, 0); nj: (n, j); lj: (2l, 2j), doubled.
struct BasisLabel {
  int first = 0;
  int second = 0;
  bool operator==(const BasisLabel&) const = default;
};

struct Rep {
  std::string kind;
  BasisKind basis_kind = BasisKind::n;
  std::vector<BasisLabel> basis;
  /// Grading coordinates of each basis vector, and the largest level kept.
  std::vector<std::array<int, 2>> levels;
  std::array<int, 2> cutoff{0, 0};
  std::map<std::string, TaggedOperator> operators;
  ParamSet params;
  PresentationId presentation = PresentationId::Podles;
  Regime regime = Regime::c_finite;

  int dim() const { return static_cast<int>(basis.size()); }
  bool has(const std::string& name) const { return operators.count(name) != 0; }
  bool has(Generator g) const { return has(std::string(to_string(g))); }
  const TaggedOperator& op(const std::string& name) const;
  const TaggedOperator& op(Generator g) const { return op(std::string(to_string(g))); }
  void set(const std::string& name, Operator m, std::array<int, 2> reach = {0, 0});
  void set(Generator g, Operator m, std::array<int, 2> reach = {0, 0}) {
    set(std::string(to_string(g)), std::move(m), reach);
  }
  /// Index of a label, or -1.
  int index_of(BasisLabel label) const;
};

Rep build_podles(const ParamSet& p, Sector sector);
Rep build_spin(HalfInt l, const Rational& q);
Rep build_yc(const ParamSet& p);
Rep build_cross_I(const ParamSet& p);
Rep build_cross_II(const ParamSet& p, HalfInt l_max);

Real coeff_beta0_ll(HalfInt l, const ParamSet& p);
Real coeff_alpha_plus_ll(HalfInt l, const ParamSet& p);

struct CoeffRow {
  HalfInt l;
  HalfInt j;
  Real alpha_plus = 0;
  Real alpha_zero = 0;
  Real alpha_minus = 0;
  Real beta_plus = 0;
  Real beta_zero = 0;
};

/// Rows ordered by l ascending, then j ascending.
struct CoeffTable {
  HalfInt l0;
  HalfInt l_max;
  std::vector<CoeffRow> rows;
  /// Row for (l, j); zero row outside the range |j| <= l, l0 <= l <= l_max.
  CoeffRow at(HalfInt l, HalfInt j) const;
};

CoeffTable coeff_table(const ParamSet& p, HalfInt l_max);

struct SphereGenerators {
  Operator A;
  Operator B;
  Operator Bstar;
};

/// Inverts x_0 = 1 - (1+q^2)A (c finite) or x_0 = -(1+q^2)A (c infinite),
/// x_1 = -(1+q^2)^{1/2} B*, x_{-1} = q^{-1}(1+q^2)^{1/2} B.
SphereGenerators x_to_ABB(const Rep& r);

/// Diagonal inverse; throws ConstructionError if the matrix is not diagonal
/// or has a zero on the diagonal.
Operator diagonal_inverse(const Operator& m);
Operator identity_operator(int dim);

nlohmann::json to_json(const Rep& r);
Rep rep_from_json(const nlohmann::json& doc);

}  // namespace podles

#pragma once

// Exact scalars: rational functions in s = q^{1/2} and the sphere parameter c
// with rational coefficients, plus the q-number helpers used everywhere else.

#include <gmpxx.h>

#include <cmath>
#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace podles {

using Rational = mpq_class;

struct ParameterError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct EvaluationError : std::domain_error {
  using std::domain_error::domain_error;
};

/// Parses "3", "-1/2" (exact); throws ParameterError on malformed input.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& r);

/// A half-integer stored as twice its value.
struct HalfInt {
  int doubled = 0;

  static constexpr HalfInt from_doubled(int d) { return HalfInt{d}; }
  static constexpr HalfInt integer(int n) { return HalfInt{2 * n}; }
  /// Accepts "2", "3/2", "-1/2"; anything that is not a half-integer throws.
  static HalfInt parse(std::string_view text);

  constexpr bool is_integer() const { return doubled % 2 == 0; }
  constexpr double value() const { return 0.5 * doubled; }

  constexpr HalfInt operator+(HalfInt o) const { return {doubled + o.doubled}; }
  constexpr HalfInt operator-(HalfInt o) const { return {doubled - o.doubled}; }
  constexpr HalfInt operator-() const { return {-doubled}; }
  constexpr auto operator<=>(const HalfInt&) const = default;
};

std::string to_string(HalfInt h);

/// Dense univariate polynomial over Q in s; coefficient i multiplies s^i.
/// Trailing zeros are trimmed, so the zero polynomial has no coefficients.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(Rational constant);
  static UPoly monomial(Rational coeff, int degree);

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Rational& lead() const { return coeffs_.back(); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational coeff(int i) const;
  bool is_constant() const { return coeffs_.size() <= 1; }

  UPoly operator-() const;
  friend UPoly operator+(const UPoly& a, const UPoly& b);
  friend UPoly operator-(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  UPoly scaled(const Rational& r) const;
  bool operator==(const UPoly&) const = default;

  /// Euclidean division; divisor must be nonzero.
  static void divmod(const UPoly& a, const UPoly& b, UPoly& quot, UPoly& rem);
  /// Monic gcd; gcd(0, 0) = 0.
  static UPoly gcd(const UPoly& a, const UPoly& b);
  UPoly monic() const;

  template <typename Real>
  Real eval(Real s) const {
    Real acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
      acc = acc * s + static_cast<Real>(it->get_d());
    return acc;
  }

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Polynomial in c whose coefficients are UPoly in s, i.e. an element of Q[s][c].
class Poly {
 public:
  Poly() = default;
  explicit Poly(UPoly constant_in_c);
  explicit Poly(Rational constant) : Poly(UPoly(std::move(constant))) {}
  static Poly s_power(int degree);
  static Poly c_power(int degree);

  bool is_zero() const { return coeffs_.empty(); }
  int degree_c() const { return static_cast<int>(coeffs_.size()) - 1; }
  const UPoly& lead() const { return coeffs_.back(); }
  const std::vector<UPoly>& coeffs() const { return coeffs_; }
  bool depends_on_c() const { return coeffs_.size() > 1; }
  /// Leading rational coefficient (highest c-degree, then highest s-degree).
  const Rational& lead_rational() const { return coeffs_.back().lead(); }

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly scaled(const Rational& r) const;
  Poly scaled(const UPoly& u) const;
  bool operator==(const Poly&) const = default;

  /// Monic gcd of the c-coefficients.
  UPoly content() const;
  /// Exact quotient; the division must leave no remainder.
  static Poly divexact(const Poly& a, const Poly& b);
  /// gcd in Q[s][c], normalized so that lead_rational() == 1.
  static Poly gcd(const Poly& a, const Poly& b);

  template <typename Real>
  Real eval(Real s, Real c) const {
    Real acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
      acc = acc * c + it->eval(s);
    return acc;
  }

  std::string to_string() const;

 private:
  void trim();
  static Poly pseudo_remainder(const Poly& a, const Poly& b);
  static Poly primitive_part(const Poly& p);
  std::vector<UPoly> coeffs_;
};

/// Sample point of the numeric tier: exact q in (0,1) and c >= 0 or infinity.
struct EvalPoint {
  Rational q{1, 2};
  Rational c{0};
  bool c_infinite = false;
};

/// Element of Q(s, c) in canonical form: numerator and denominator coprime,
/// denominator with leading rational coefficient 1.
class Scalar {
 public:
  Scalar() : num_(), den_(Rational(1)) {}
  Scalar(long n) : Scalar(Rational(n)) {}  // NOLINT(google-explicit-constructor)
  Scalar(int n) : Scalar(Rational(n)) {}   // NOLINT(google-explicit-constructor)
  Scalar(Rational r);                      // NOLINT(google-explicit-constructor)
  Scalar(Poly num, Poly den);

  static Scalar s() { return s_pow(1); }
  static Scalar c() { return Scalar(Poly::c_power(1), Poly(Rational(1))); }
  /// s^k for any integer k.
  static Scalar s_pow(int k);
  /// q^n = s^{2n}.
  static Scalar q_pow(int n) { return s_pow(2 * n); }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const;
  bool depends_on_c() const { return num_.depends_on_c() || den_.depends_on_c(); }
  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  Scalar operator-() const;
  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar inverse() const;
  Scalar pow(int n) const;
  /// Substitutes a rational value for c.
  Scalar substitute_c(const Rational& value) const;
  bool operator==(const Scalar&) const = default;

  /// Monomial ±r s^k, if the scalar has that shape.
  bool as_monomial(Rational& coeff, int& s_exponent) const;

  /// Canonical fraction string in "s" and "c", e.g. "(s^4 - 1)/(s^2)".
  std::string to_string() const;

 private:
  void normalize();
  Poly num_;
  Poly den_;
};

/// λ = q - q^{-1}.
Scalar lambda();
/// [n] = (q^n - q^{-n}) / (q - q^{-1}).
Scalar q_int(int n);
/// λ_n^2 = 1 - q^{2n}.
Scalar lambda_n_sq(int n);
/// ρ = 1 + (q + q^{-1})^2 c.
Scalar rho();

/// Value at s = sqrt(q), c = c. Throws EvaluationError when the denominator
/// vanishes and ParameterError when x depends on c but c is infinite.
double eval(const Scalar& x, const EvalPoint& at);

// Numeric q-numbers, templated on the floating type.

template <typename Real>
Real q_number(int n, Real q) {
  if (n == 0) return Real(0);
  return (std::pow(q, Real(n)) - std::pow(q, Real(-n))) / (q - Real(1) / q);
}

/// [n] at a half-integer argument supplied doubled (argument must be an integer).
template <typename Real>
Real q_number(HalfInt n, Real q) {
  if (!n.is_integer()) throw ParameterError("q-number needs an integer argument");
  return q_number<Real>(n.doubled / 2, q);
}

}  // namespace podles

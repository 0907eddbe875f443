#include "podles/qrat.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <utility>

namespace podles {

Rational parse_rational(std::string_view text) {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char ch) { return std::isspace(ch); }),
          s.end());
  if (s.empty()) throw ParameterError("empty rational");
  if (s.front() == '+') s.erase(s.begin());
  const auto valid = std::all_of(s.begin(), s.end(), [](char ch) {
    return std::isdigit(static_cast<unsigned char>(ch)) || ch == '/' || ch == '-';
  });
  if (!valid || std::count(s.begin(), s.end(), '/') > 1)
    throw ParameterError("malformed rational: " + std::string(text));
  const auto slash = s.find('/');
  if (slash != std::string::npos) {
    const auto den = s.substr(slash + 1);
    if (den.empty() || den.find('-') != std::string::npos ||
        std::all_of(den.begin(), den.end(), [](char ch) { return ch == '0'; }))
      throw ParameterError("bad denominator: " + std::string(text));
  }
  Rational r;
  if (r.set_str(s, 10) != 0) throw ParameterError("malformed rational: " + std::string(text));
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

HalfInt HalfInt::parse(std::string_view text) {
  Rational twice = parse_rational(text) * 2;
  if (twice.get_den() != 1) throw ParameterError("not a half-integer: " + std::string(text));
  if (!twice.get_num().fits_sint_p()) throw ParameterError("half-integer out of range");
  return HalfInt{static_cast<int>(twice.get_num().get_si())};
}

std::string to_string(HalfInt h) {
  if (h.is_integer()) return std::to_string(h.doubled / 2);
  return std::to_string(h.doubled) + "/2";
}

// ---------------------------------------------------------------- UPoly

UPoly::UPoly(Rational constant) {
  if (constant != 0) coeffs_.push_back(std::move(constant));
}

UPoly UPoly::monomial(Rational coeff, int degree) {
  UPoly p;
  if (coeff == 0) return p;
  p.coeffs_.assign(static_cast<std::size_t>(degree) + 1, Rational(0));
  p.coeffs_.back() = std::move(coeff);
  return p;
}

Rational UPoly::coeff(int i) const {
  if (i < 0 || i > degree()) return Rational(0);
  return coeffs_[static_cast<std::size_t>(i)];
}

void UPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

UPoly UPoly::operator-() const {
  UPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

UPoly operator+(const UPoly& a, const UPoly& b) {
  UPoly r = a.coeffs_.size() >= b.coeffs_.size() ? a : b;
  const UPoly& other = a.coeffs_.size() >= b.coeffs_.size() ? b : a;
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) r.coeffs_[i] += other.coeffs_[i];
  r.trim();
  return r;
}

UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }

UPoly operator*(const UPoly& a, const UPoly& b) {
  UPoly r;
  if (a.is_zero() || b.is_zero()) return r;
  r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  r.trim();
  return r;
}

UPoly UPoly::scaled(const Rational& r) const {
  if (r == 0) return UPoly();
  UPoly out = *this;
  for (auto& c : out.coeffs_) c *= r;
  return out;
}

void UPoly::divmod(const UPoly& a, const UPoly& b, UPoly& quot, UPoly& rem) {
  if (b.is_zero()) throw EvaluationError("polynomial division by zero");
  quot = UPoly();
  rem = a;
  if (rem.degree() < b.degree()) return;
  quot.coeffs_.assign(static_cast<std::size_t>(rem.degree() - b.degree()) + 1, Rational(0));
  const Rational inv_lead = 1 / b.lead();
  while (!rem.is_zero() && rem.degree() >= b.degree()) {
    const int shift = rem.degree() - b.degree();
    const Rational t = rem.lead() * inv_lead;
    quot.coeffs_[static_cast<std::size_t>(shift)] = t;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      rem.coeffs_[j + static_cast<std::size_t>(shift)] -= t * b.coeffs_[j];
    rem.coeffs_.back() = 0;  // exact cancellation of the leading term
    rem.trim();
  }
  quot.trim();
}

UPoly UPoly::monic() const {
  if (is_zero()) return *this;
  return scaled(1 / lead());
}

UPoly UPoly::gcd(const UPoly& a, const UPoly& b) {
  UPoly x = a, y = b;
  while (!y.is_zero()) {
    UPoly q, r;
    divmod(x, y, q, r);
    x = std::move(y);
    y = r.monic();
  }
  return x.monic();
}

// ---------------------------------------------------------------- Poly

Poly::Poly(UPoly constant_in_c) {
  if (!constant_in_c.is_zero()) coeffs_.push_back(std::move(constant_in_c));
}

Poly Poly::s_power(int degree) { return Poly(UPoly::monomial(Rational(1), degree)); }

Poly Poly::c_power(int degree) {
  Poly p;
  p.coeffs_.assign(static_cast<std::size_t>(degree) + 1, UPoly());
  p.coeffs_.back() = UPoly(Rational(1));
  return p;
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Poly operator+(const Poly& a, const Poly& b) {
  Poly r = a.coeffs_.size() >= b.coeffs_.size() ? a : b;
  const Poly& other = a.coeffs_.size() >= b.coeffs_.size() ? b : a;
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) r.coeffs_[i] = r.coeffs_[i] + other.coeffs_[i];
  r.trim();
  return r;
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
  Poly r;
  if (a.is_zero() || b.is_zero()) return r;
  r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, UPoly());
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      r.coeffs_[i + j] = r.coeffs_[i + j] + a.coeffs_[i] * b.coeffs_[j];
  r.trim();
  return r;
}

Poly Poly::scaled(const Rational& r) const {
  if (r == 0) return Poly();
  Poly out = *this;
  for (auto& c : out.coeffs_) c = c.scaled(r);
  return out;
}

Poly Poly::scaled(const UPoly& u) const {
  if (u.is_zero()) return Poly();
  Poly out = *this;
  for (auto& c : out.coeffs_) c = c * u;
  out.trim();
  return out;
}

UPoly Poly::content() const {
  UPoly g;
  for (const auto& c : coeffs_) {
    g = UPoly::gcd(g, c);
    if (g.degree() == 0) break;
  }
  return g;
}

Poly Poly::primitive_part(const Poly& p) {
  if (p.is_zero()) return p;
  const UPoly cont = p.content();
  Poly out;
  out.coeffs_.reserve(p.coeffs_.size());
  for (const auto& c : p.coeffs_) {
    UPoly q, r;
    UPoly::divmod(c, cont, q, r);
    out.coeffs_.push_back(std::move(q));
  }
  return out.scaled(1 / out.lead_rational());
}

Poly Poly::pseudo_remainder(const Poly& a, const Poly& b) {
  Poly rem = a;
  const int m = b.degree_c();
  const UPoly lb = b.lead();
  while (!rem.is_zero() && rem.degree_c() >= m) {
    const int shift = rem.degree_c() - m;
    const UPoly lr = rem.lead();
    Poly shifted_b = b.scaled(lr) * c_power(shift);
    rem = rem.scaled(lb) - shifted_b;
  }
  return rem;
}

Poly Poly::divexact(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw EvaluationError("polynomial division by zero");
  Poly quot, rem = a;
  while (!rem.is_zero()) {
    const int shift = rem.degree_c() - b.degree_c();
    if (shift < 0) throw std::logic_error("Poly::divexact: inexact division");
    UPoly t, r;
    UPoly::divmod(rem.lead(), b.lead(), t, r);
    if (!r.is_zero()) throw std::logic_error("Poly::divexact: inexact division");
    Poly term = Poly(t) * c_power(shift);
    quot = quot + term;
    rem = rem - b * term;
  }
  return quot;
}

Poly Poly::gcd(const Poly& a, const Poly& b) {
  if (a.is_zero() && b.is_zero()) return Poly();
  if (a.is_zero()) return b.scaled(1 / b.lead_rational());
  if (b.is_zero()) return a.scaled(1 / a.lead_rational());
  const UPoly g = UPoly::gcd(a.content(), b.content());
  Poly x = primitive_part(a), y = primitive_part(b);
  if (x.degree_c() < y.degree_c()) std::swap(x, y);
  while (!y.is_zero()) {
    if (y.degree_c() == 0) {
      x = Poly(Rational(1));
      break;
    }
    Poly r = pseudo_remainder(x, y);
    x = std::move(y);
    y = r.is_zero() ? r : primitive_part(r);
  }
  Poly out = x.scaled(g);
  return out.scaled(1 / out.lead_rational());
}

namespace {

std::string monomial_string(const Rational& coeff, int s_deg, int c_deg, bool leading) {
  std::ostringstream os;
  Rational mag = abs(coeff);
  if (!leading) os << (coeff < 0 ? " - " : " + ");
  else if (coeff < 0) os << "-";
  const bool has_var = s_deg > 0 || c_deg > 0;
  if (mag != 1 || !has_var) {
    os << mag.get_str();
    if (has_var) os << "*";
  }
  if (s_deg > 0) {
    os << "s";
    if (s_deg > 1) os << "^" << s_deg;
    if (c_deg > 0) os << "*";
  }
  if (c_deg > 0) {
    os << "c";
    if (c_deg > 1) os << "^" << c_deg;
  }
  return os.str();
}

std::size_t term_count(const Poly& p) {
  std::size_t n = 0;
  for (const auto& u : p.coeffs())
    for (const auto& r : u.coeffs()) n += (r != 0);
  return n;
}

}  // namespace

std::string Poly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  bool leading = true;
  for (int cd = degree_c(); cd >= 0; --cd) {
    const UPoly& u = coeffs_[static_cast<std::size_t>(cd)];
    for (int sd = u.degree(); sd >= 0; --sd) {
      const Rational& r = u.coeffs()[static_cast<std::size_t>(sd)];
      if (r == 0) continue;
      out += monomial_string(r, sd, cd, leading);
      leading = false;
    }
  }
  return out;
}

// ---------------------------------------------------------------- Scalar

Scalar::Scalar(Rational r) : num_(std::move(r)), den_(Rational(1)) {}

Scalar::Scalar(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw EvaluationError("Scalar with zero denominator");
  normalize();
}

void Scalar::normalize() {
  if (num_.is_zero()) {
    den_ = Poly(Rational(1));
    return;
  }
  Poly g = Poly::gcd(num_, den_);
  if (!(g == Poly(Rational(1)))) {
    num_ = Poly::divexact(num_, g);
    den_ = Poly::divexact(den_, g);
  }
  const Rational lead = den_.lead_rational();
  if (lead != 1) {
    const Rational inv = 1 / lead;
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

Scalar Scalar::s_pow(int k) {
  if (k >= 0) return Scalar(Poly::s_power(k), Poly(Rational(1)));
  return Scalar(Poly(Rational(1)), Poly::s_power(-k));
}

bool Scalar::is_one() const { return num_ == den_; }

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.num_ = -r.num_;
  return r;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) return Scalar(a.num_ + b.num_, a.den_);
  const Poly g = Poly::gcd(a.den_, b.den_);
  const Poly bd = Poly::divexact(b.den_, g);
  const Poly ad = Poly::divexact(a.den_, g);
  return Scalar(a.num_ * bd + b.num_ * ad, a.den_ * bd);
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
  if (a.is_zero() || b.is_zero()) return Scalar();
  const Poly g1 = Poly::gcd(a.num_, b.den_);
  const Poly g2 = Poly::gcd(b.num_, a.den_);
  Scalar r;
  r.num_ = Poly::divexact(a.num_, g1) * Poly::divexact(b.num_, g2);
  r.den_ = Poly::divexact(a.den_, g2) * Poly::divexact(b.den_, g1);
  const Rational lead = r.den_.lead_rational();
  if (lead != 1) {
    const Rational inv = 1 / lead;
    r.num_ = r.num_.scaled(inv);
    r.den_ = r.den_.scaled(inv);
  }
  return r;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw EvaluationError("inverse of zero Scalar");
  return Scalar(den_, num_);
}

Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

Scalar Scalar::pow(int n) const {
  Scalar base = n >= 0 ? *this : inverse();
  Scalar acc(1);
  for (int k = std::abs(n); k > 0; k >>= 1) {
    if (k & 1) acc *= base;
    base *= base;
  }
  return acc;
}

Scalar Scalar::substitute_c(const Rational& value) const {
  auto sub = [&](const Poly& p) {
    UPoly acc;
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) acc = acc.scaled(value) + *it;
    return Poly(acc);
  };
  return Scalar(sub(num_), sub(den_));
}

bool Scalar::as_monomial(Rational& coeff, int& s_exponent) const {
  if (is_zero() || depends_on_c()) return false;
  if (term_count(num_) != 1 || term_count(den_) != 1) return false;
  const UPoly& n = num_.coeffs().front();
  const UPoly& d = den_.coeffs().front();
  coeff = n.lead();
  s_exponent = n.degree() - d.degree();
  return true;
}

std::string Scalar::to_string() const {
  const std::string n = num_.to_string();
  if (den_ == Poly(Rational(1))) return n;
  auto wrap = [](const Poly& p, const std::string& s) {
    return term_count(p) > 1 ? "(" + s + ")" : s;
  };
  return wrap(num_, n) + "/" + wrap(den_, den_.to_string());
}

Scalar lambda() { return Scalar::q_pow(1) - Scalar::q_pow(-1); }

Scalar q_int(int n) { return (Scalar::q_pow(n) - Scalar::q_pow(-n)) / lambda(); }

Scalar lambda_n_sq(int n) { return Scalar(1) - Scalar::q_pow(2 * n); }

Scalar rho() {
  const Scalar qq = Scalar::q_pow(1) + Scalar::q_pow(-1);
  return Scalar(1) + qq * qq * Scalar::c();
}

namespace {

double eval_abs(const Poly& p, double s, double c) {
  double acc = 0;
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
    double inner = 0;
    for (auto jt = it->coeffs().rbegin(); jt != it->coeffs().rend(); ++jt)
      inner = inner * s + std::abs(jt->get_d());
    acc = acc * c + inner;
  }
  return acc;
}

}  // namespace

double eval(const Scalar& x, const EvalPoint& at) {
  if (at.q <= 0 || at.q >= 1) throw ParameterError("q must lie in (0,1)");
  if (x.depends_on_c() && at.c_infinite)
    throw ParameterError("scalar depends on c but c is infinite");
  const double s = std::sqrt(at.q.get_d());
  const double c = at.c_infinite ? 0.0 : at.c.get_d();
  const double d = x.den().eval(s, c);
  if (std::abs(d) <= 1e-14 * eval_abs(x.den(), s, std::abs(c)))
    throw EvaluationError("denominator vanishes at the sample point: " + x.to_string());
  return x.num().eval(s, c) / d;
}

}  // namespace podles

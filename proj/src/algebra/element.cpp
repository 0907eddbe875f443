#include "podles/algebra.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace podles {

namespace {

constexpr std::array<std::string_view, kGeneratorCount> kNames = {
    "B", "B*", "A", "A^-1", "X", "Y", "Y^-1", "F", "f", "K", "K^-1", "k", "k^-1", "X*", "E", "e"};

}  // namespace

std::string_view to_string(Generator g) { return kNames[static_cast<std::size_t>(g)]; }

std::optional<Generator> generator_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kNames.size(); ++i)
    if (kNames[i] == name) return static_cast<Generator>(i);
  return std::nullopt;
}

std::optional<Generator> inverse_letter(Generator g) {
  switch (g) {
    case Generator::A: return Generator::Ainv;
    case Generator::Ainv: return Generator::A;
    case Generator::K: return Generator::Kinv;
    case Generator::Kinv: return Generator::K;
    case Generator::Y: return Generator::Yinv;
    case Generator::Yinv: return Generator::Y;
    case Generator::k: return Generator::kinv;
    case Generator::kinv: return Generator::k;
    default: return std::nullopt;
  }
}

std::string to_string(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += to_string(w[i]);
  }
  return out;
}

AlgebraElement::AlgebraElement(Scalar coeff) {
  if (!coeff.is_zero()) terms_.emplace(Word{}, std::move(coeff));
}

AlgebraElement::AlgebraElement(Generator g) { terms_.emplace(Word{g}, Scalar(1)); }

AlgebraElement::AlgebraElement(Word w, Scalar coeff) {
  if (!coeff.is_zero()) terms_.emplace(std::move(w), std::move(coeff));
}

std::size_t AlgebraElement::degree() const {
  std::size_t d = 0;
  for (const auto& [w, c] : terms_) d = std::max(d, w.size());
  return d;
}

void AlgebraElement::add_term(const Word& w, const Scalar& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, coeff);
  if (inserted) return;
  it->second += coeff;
  if (it->second.is_zero()) terms_.erase(it);
}

AlgebraElement AlgebraElement::operator-() const {
  AlgebraElement r = *this;
  for (auto& [w, c] : r.terms_) c = -c;
  return r;
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b) {
  AlgebraElement r = a;
  r += b;
  return r;
}

AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b) { return a + (-b); }

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
  AlgebraElement r;
  for (const auto& [wa, ca] : a.terms_) {
    for (const auto& [wb, cb] : b.terms_) {
      Word w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      r.add_term(w, ca * cb);
    }
  }
  return r;
}

AlgebraElement operator*(const Scalar& s, const AlgebraElement& a) {
  AlgebraElement r;
  if (s.is_zero()) return r;
  for (const auto& [w, c] : a.terms_) r.terms_.emplace(w, s * c);
  return r;
}

namespace {

// "q^-2", "q^(1/2)", "3/2*q" for monomials; parenthesized fraction otherwise.
// The returned string carries no leading sign; `negative` reports it.
std::string coefficient_string(const Scalar& c, bool& negative) {
  Rational r;
  int sexp = 0;
  if (c.as_monomial(r, sexp)) {
    negative = r < 0;
    const Rational mag = abs(r);
    std::string qpart;
    if (sexp != 0) {
      if (sexp == 2) qpart = "q";
      else if (sexp % 2 == 0) qpart = "q^" + std::to_string(sexp / 2);
      else qpart = "q^(" + std::to_string(sexp) + "/2)";
    }
    if (qpart.empty()) return mag.get_str();
    if (mag == 1) return qpart;
    return mag.get_str() + "*" + qpart;
  }
  negative = false;
  return "(" + c.to_string() + ")";
}

}  // namespace

std::string to_string(const AlgebraElement& x) {
  if (x.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : x.terms()) {
    bool negative = false;
    const std::string coeff = coefficient_string(c, negative);
    if (first) os << (negative ? "-" : "");
    else os << (negative ? " - " : " + ");
    first = false;
    if (w.empty()) {
      os << coeff;
    } else if (coeff == "1") {
      os << to_string(w);
    } else {
      os << coeff << " * " << to_string(w);
    }
  }
  return os.str();
}

// ---------------------------------------------------------------- parser

namespace {

class ElementParser {
 public:
  ElementParser(std::string_view text, const Presentation& p) : text_(text), p_(p) {}

  AlgebraElement parse() {
    AlgebraElement x = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character");
    return x;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParameterError("element syntax: " + what + " at offset " + std::to_string(pos_) +
                         " in \"" + std::string(text_) + "\"");
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek_is(char ch) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == ch;
  }

  AlgebraElement expr() {
    skip_ws();
    bool negative = false;
    if (peek_is('+') || peek_is('-')) negative = text_[pos_++] == '-';
    AlgebraElement acc = term();
    if (negative) acc = -acc;
    while (peek_is('+') || peek_is('-')) {
      const bool minus = text_[pos_++] == '-';
      AlgebraElement t = term();
      acc = minus ? acc - t : acc + t;
    }
    return acc;
  }

  bool factor_starts() {
    skip_ws();
    if (pos_ >= text_.size()) return false;
    const char ch = text_[pos_];
    return std::isalnum(static_cast<unsigned char>(ch)) || ch == '(';
  }

  AlgebraElement term() {
    AlgebraElement acc = factor();
    for (;;) {
      if (peek_is('*')) {
        ++pos_;
        acc = acc * factor();
      } else if (factor_starts()) {
        acc = acc * factor();
      } else {
        return acc;
      }
    }
  }

  long integer() {
    skip_ws();
    const std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    const std::string digits(text_.substr(start, pos_ - start));
    if (digits.empty() || digits == "-" || digits == "+") fail("expected integer");
    return std::stol(digits);
  }

  // Exponent after '^': integer, or a parenthesized integer / half-integer.
  // Returns twice the exponent.
  long doubled_exponent() {
    skip_ws();
    if (peek_is('(')) {
      ++pos_;
      long num = integer();
      long den = 1;
      if (peek_is('/')) {
        ++pos_;
        den = integer();
      }
      if (!peek_is(')')) fail("expected ')'");
      ++pos_;
      if (den == 1) return 2 * num;
      if (den == 2) return num;
      fail("exponent must be an integer or a half-integer");
    }
    return 2 * integer();
  }

  long integer_exponent() {
    const long d = doubled_exponent();
    if (d % 2 != 0) fail("half-integer exponent only allowed on q");
    return d / 2;
  }

  std::string identifier() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  AlgebraElement factor() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char ch = text_[pos_];
    if (ch == '(') {
      ++pos_;
      AlgebraElement inner = expr();
      if (!peek_is(')')) fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '/'))
        ++pos_;
      return AlgebraElement(Scalar(parse_rational(text_.substr(start, pos_ - start))));
    }
    const std::string id = identifier();
    if (id.empty()) fail("expected a factor");
    const bool has_power = peek_is('^') && (++pos_, true);
    if (id == "q") return AlgebraElement(Scalar::s_pow(static_cast<int>(has_power ? doubled_exponent() : 2)));
    if (id == "s") return AlgebraElement(Scalar::s_pow(static_cast<int>(has_power ? integer_exponent() : 1)));
    if (id == "c") {
      const long n = has_power ? integer_exponent() : 1;
      return AlgebraElement(Scalar::c().pow(static_cast<int>(n)));
    }
    if (id == "lambda" || id == "lam") {
      const long n = has_power ? integer_exponent() : 1;
      return AlgebraElement(podles::lambda().pow(static_cast<int>(n)));
    }
    return generator_power(id, has_power);
  }

  AlgebraElement generator_power(const std::string& id, bool has_power) {
    std::string name = id;
    // A trailing '*' glued to the letter is the adjoint (B*, X*).
    if (!has_power && pos_ < text_.size() && text_[pos_] == '*' && (id == "B" || id == "X")) {
      ++pos_;
      name += '*';
      if (peek_is('^')) {
        ++pos_;
        has_power = true;
      }
    }
    auto g = generator_from_name(name);
    if (!g) fail("unknown symbol '" + name + "'");
    long n = has_power ? integer_exponent() : 1;
    if (n < 0) {
      auto inv = inverse_letter(*g);
      if (!inv) fail("generator '" + name + "' has no inverse");
      g = inv;
      n = -n;
    }
    if (!p_.contains(*g))
      fail("generator '" + std::string(to_string(*g)) + "' not in presentation " + p_.name());
    return AlgebraElement(Word(static_cast<std::size_t>(n), *g));
  }

  std::string_view text_;
  const Presentation& p_;
  std::size_t pos_ = 0;
};

}  // namespace

AlgebraElement parse_element(std::string_view text, const Presentation& p) {
  return ElementParser(text, p).parse();
}

}  // namespace podles

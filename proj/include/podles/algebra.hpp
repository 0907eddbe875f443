#pragma once

// Free *-algebra over Scalar, the catalog of presentations as oriented
// rewrite systems, normal-form reduction, and empirical confluence checks.

#include "podles/qrat.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace podles {

/// Generator symbols. The enumerator order is the global monomial order:
/// sphere generators left of the symmetry generators, and every presentation's
/// alphabet inherits its order from here.
enum class Generator : std::uint8_t {
  B,
  Bstar,
  A,
  Ainv,
  X,
  Y,
  Yinv,
  F,
  f,
  K,
  Kinv,
  k,
  kinv,
  Xstar,
  E,
  e,
};

inline constexpr std::size_t kGeneratorCount = 16;

std::string_view to_string(Generator g);
std::optional<Generator> generator_from_name(std::string_view name);
/// The formal inverse letter (A <-> A^-1, K <-> K^-1, ...), if any.
std::optional<Generator> inverse_letter(Generator g);

using Word = std::vector<Generator>;

struct WordLess {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (Generator g : w) h = (h ^ static_cast<std::size_t>(g)) * 1099511628211ull;
    return h;
  }
};

std::string to_string(const Word& w);

/// Finite linear combination of words; zero coefficients are never stored.
class AlgebraElement {
 public:
  using Terms = std::map<Word, Scalar, WordLess>;

  AlgebraElement() = default;
  AlgebraElement(Scalar coeff);  // NOLINT(google-explicit-constructor): scalar times identity
  AlgebraElement(Generator g);   // NOLINT(google-explicit-constructor)
  AlgebraElement(Word w, Scalar coeff = Scalar(1));

  static AlgebraElement one() { return AlgebraElement(Scalar(1)); }

  bool is_zero() const { return terms_.empty(); }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  /// Largest word length among the terms.
  std::size_t degree() const;

  void add_term(const Word& w, const Scalar& coeff);

  AlgebraElement operator-() const;
  friend AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b);
  friend AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b);
  friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);
  friend AlgebraElement operator*(const Scalar& s, const AlgebraElement& a);
  AlgebraElement& operator+=(const AlgebraElement& o);
  bool operator==(const AlgebraElement&) const = default;

 private:
  Terms terms_;
};

/// Readable form, e.g. "q^-2 * B A + (s^4 - 1)/(s^2) * K".
std::string to_string(const AlgebraElement& x);

enum class PresentationId { Uq, UqPrime, Podles, Cross, CrossHat, Yc, Decoupled, CrossHatK };
enum class Regime { c_finite, c_infinite };

std::string_view to_string(PresentationId id);
std::string_view to_string(Regime r);
/// Case-insensitive lookup of the names above; throws ParameterError.
PresentationId presentation_from_name(std::string_view name);

struct Relation {
  std::string id;
  AlgebraElement lhs;
  AlgebraElement rhs;
  AlgebraElement difference() const { return lhs - rhs; }
};

/// Oriented rewrite first·second -> rhs.
struct RewriteRule {
  Generator first;
  Generator second;
  AlgebraElement rhs;
  bool derived = false;
};

class Presentation {
 public:
  Presentation(PresentationId id, Regime regime, std::vector<Generator> alphabet,
               std::map<Generator, AlgebraElement> star_table, std::vector<Relation> relations,
               std::vector<RewriteRule> rules);

  PresentationId id() const { return id_; }
  Regime regime() const { return regime_; }
  std::string name() const;
  const std::vector<Generator>& alphabet() const { return alphabet_; }
  bool contains(Generator g) const;
  const std::vector<Relation>& relations() const { return relations_; }
  /// Declared rules, as listed by the presentation.
  const std::vector<RewriteRule>& rules() const { return rules_; }
  /// Declared rules plus the inverse-letter variants of monomial q-commutations.
  const std::vector<RewriteRule>& expanded_rules() const { return expanded_; }
  const AlgebraElement* rule_for(Generator first, Generator second) const;
  const AlgebraElement& star_of(Generator g) const;

  /// Same rules; keeps only the relations whose words use generators in `keep`.
  Presentation restricted_to(const std::vector<Generator>& keep) const;

 private:
  PresentationId id_;
  Regime regime_;
  std::vector<Generator> alphabet_;
  std::map<Generator, AlgebraElement> star_;
  std::vector<Relation> relations_;
  std::vector<RewriteRule> rules_;
  std::vector<RewriteRule> expanded_;
  std::array<int, kGeneratorCount * kGeneratorCount> table_{};
};

Presentation make_presentation(PresentationId id, Regime regime);

/// Memoizing normal-form engine for one presentation. Not thread-safe; use
/// one instance per thread.
class Rewriter {
 public:
  explicit Rewriter(const Presentation& p) : p_(&p) {}

  AlgebraElement reduce(const AlgebraElement& x);
  const AlgebraElement& reduce_word(const Word& w);
  /// Leftmost position i such that w[i] w[i+1] is a rule left-hand side.
  static std::optional<std::size_t> leftmost_redex(const Word& w, const Presentation& p);
  /// Result of one rewrite step at position i (no further reduction).
  static AlgebraElement rewrite_at(const Word& w, std::size_t i, const Presentation& p);

 private:
  const Presentation* p_;
  std::unordered_map<Word, AlgebraElement, WordHash> cache_;
  int depth_ = 0;
};

/// Unique fixed point of exhaustive leftmost rule application.
AlgebraElement normal_form(const AlgebraElement& x, const Presentation& p);

/// Anti-linear anti-homomorphism extending the presentation's star table.
/// Coefficients are real, so conjugation acts trivially on them.
AlgebraElement star(const AlgebraElement& x, const Presentation& p);

struct ConfluenceDiscrepancy {
  Word word;
  std::size_t first_position;
  std::size_t second_position;
  AlgebraElement difference;
};

struct ConfluenceReport {
  std::string presentation;
  int max_len = 0;
  std::size_t words_examined = 0;
  std::size_t ambiguous_words = 0;
  std::vector<ConfluenceDiscrepancy> discrepancies;
  bool confluent() const { return discrepancies.empty(); }
};

/// Reduces every word of length <= max_len with at least two redexes along
/// each first-step choice and records distinct normal forms.
ConfluenceReport check_local_confluence(const Presentation& p, int max_len);

/// Parses the textual element syntax, e.g. "q^(1/2) * E A - 2 K^-1 B*".
/// Throws ParameterError on syntax errors or letters outside the alphabet.
AlgebraElement parse_element(std::string_view text, const Presentation& p);

}  // namespace podles

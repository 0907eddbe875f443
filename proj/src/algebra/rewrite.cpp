#include "podles/algebra.hpp"

#include <stdexcept>

namespace podles {

std::optional<std::size_t> Rewriter::leftmost_redex(const Word& w, const Presentation& p) {
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (p.rule_for(w[i], w[i + 1])) return i;
  return std::nullopt;
}

AlgebraElement Rewriter::rewrite_at(const Word& w, std::size_t i, const Presentation& p) {
  const AlgebraElement* rhs = p.rule_for(w[i], w[i + 1]);
  if (!rhs) throw std::logic_error("rewrite_at: no rule at position " + std::to_string(i));
  AlgebraElement out;
  for (const auto& [mid, coeff] : rhs->terms()) {
    Word v(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
    v.insert(v.end(), mid.begin(), mid.end());
    v.insert(v.end(), w.begin() + static_cast<std::ptrdiff_t>(i + 2), w.end());
    out.add_term(v, coeff);
  }
  return out;
}

const AlgebraElement& Rewriter::reduce_word(const Word& w) {
  if (auto it = cache_.find(w); it != cache_.end()) return it->second;
  if (++depth_ > 100000) throw std::runtime_error("rewriting did not terminate");
  AlgebraElement result;
  if (auto i = leftmost_redex(w, *p_)) result = reduce(rewrite_at(w, *i, *p_));
  else result = AlgebraElement(w);
  --depth_;
  return cache_.emplace(w, std::move(result)).first->second;
}

AlgebraElement Rewriter::reduce(const AlgebraElement& x) {
  AlgebraElement out;
  for (const auto& [w, coeff] : x.terms()) {
    for (Generator g : w)
      if (!p_->contains(g))
        throw ParameterError("generator " + std::string(to_string(g)) +
                             " not in presentation " + p_->name());
    const AlgebraElement& nf = reduce_word(w);
    for (const auto& [v, c] : nf.terms()) out.add_term(v, coeff * c);
  }
  return out;
}

AlgebraElement normal_form(const AlgebraElement& x, const Presentation& p) {
  Rewriter r(p);
  return r.reduce(x);
}

AlgebraElement star(const AlgebraElement& x, const Presentation& p) {
  AlgebraElement out;
  for (const auto& [w, coeff] : x.terms()) {
    AlgebraElement term(coeff);
    for (auto it = w.rbegin(); it != w.rend(); ++it) term = term * p.star_of(*it);
    out += term;
  }
  return normal_form(out, p);
}

ConfluenceReport check_local_confluence(const Presentation& p, int max_len) {
  ConfluenceReport report;
  report.presentation = p.name();
  report.max_len = max_len;
  Rewriter rw(p);
  const auto& letters = p.alphabet();
  const std::size_t n = letters.size();
  for (int len = 2; len <= max_len; ++len) {
    std::vector<std::size_t> digits(static_cast<std::size_t>(len), 0);
    for (;;) {
      Word w(static_cast<std::size_t>(len));
      for (int i = 0; i < len; ++i) w[static_cast<std::size_t>(i)] = letters[digits[static_cast<std::size_t>(i)]];
      ++report.words_examined;
      std::vector<std::size_t> redexes;
      for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (p.rule_for(w[i], w[i + 1])) redexes.push_back(i);
      if (redexes.size() >= 2) {
        ++report.ambiguous_words;
        const AlgebraElement ref = rw.reduce(Rewriter::rewrite_at(w, redexes[0], p));
        for (std::size_t k = 1; k < redexes.size(); ++k) {
          AlgebraElement other = rw.reduce(Rewriter::rewrite_at(w, redexes[k], p));
          if (!(other == ref))
            report.discrepancies.push_back({w, redexes[0], redexes[k], ref - other});
        }
      }
      // Odometer increment.
      int pos = len - 1;
      while (pos >= 0 && ++digits[static_cast<std::size_t>(pos)] == n) {
        digits[static_cast<std::size_t>(pos)] = 0;
        --pos;
      }
      if (pos < 0) break;
    }
  }
  return report;
}

}  // namespace podles

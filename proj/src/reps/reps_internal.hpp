#pragma once

#include "podles/reps.hpp"

#include <string>
#include <unordered_map>
#include <vector>

namespace podles::detail {

/// Square root of a radicand that may carry round-off below zero; anything
/// under -1e-13 is a construction error naming `where`.
Real checked_sqrt(Real radicand, const std::string& where);

/// [n] at the numeric q.
Real qn(int n, Real q);
/// [n]^{1/2}, zero for n <= 0 (those factors only multiply vanishing targets).
Real sqrt_qn(int n, Real q);

/// Collects matrix entries addressed by basis labels; entries whose source
/// or target lies outside the basis are dropped (truncation).
class OperatorBuilder {
 public:
  explicit OperatorBuilder(const Rep& r);
  void put(const std::string& name, BasisLabel from, BasisLabel to, Complex value);
  Operator build(const std::string& name) const;

 private:
  static long long key(BasisLabel b) {
    return (static_cast<long long>(b.first) << 32) ^ static_cast<unsigned>(b.second);
  }
  const Rep& rep_;
  std::unordered_map<long long, int> index_;
  std::unordered_map<std::string, std::vector<Eigen::Triplet<Complex>>> entries_;
};

}  // namespace podles::detail

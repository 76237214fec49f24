#pragma once

#include <span>
#include <string>
#include <vector>

#include "thetagw/rational.hpp"

namespace thetagw {

/// C(n, k); zero when k < 0 or k > n. Requires n >= 0.
BigInt binomial(long n, long k);

BigInt factorial(long n);

/// A partition of a positive integer, parts stored weakly increasing.
class Partition {
 public:
  /// Sorts `parts`; throws std::invalid_argument if empty or any part is < 1.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }

  /// m(eta): product of the parts.
  const BigInt& weight() const { return weight_; }
  /// |Aut(eta)|: product of factorials of the part multiplicities.
  const BigInt& automorphisms() const { return automorphisms_; }

  /// m(eta) / |Aut(eta)|, the weight a partition carries in a gluing sum.
  Rational gluing_coefficient() const { return Rational(weight_, automorphisms_); }

  /// "(1,1)" style rendering.
  std::string to_string() const;

  friend bool operator==(const Partition& lhs, const Partition& rhs) { return lhs.parts_ == rhs.parts_; }
  friend auto operator<=>(const Partition& lhs, const Partition& rhs) { return lhs.parts_ <=> rhs.parts_; }

 private:
  std::vector<int> parts_;
  int size_ = 0;
  BigInt weight_;
  BigInt automorphisms_;
};

/// All partitions of d in lexicographic order of their (increasing) part lists.
/// Throws std::invalid_argument for d <= 0.
std::vector<Partition> partitions_of(int d);

/// Euler characteristic forced by the dimension constraint
/// -chi = d * K^2 + sum(alphas), where K^2 = h - 1 on a theta-characteristic surface.
long required_chi(int degree, int genus, std::span<const int> alphas);

}  // namespace thetagw

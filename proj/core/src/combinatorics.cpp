#include "thetagw/combinatorics.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace thetagw {

BigInt binomial(long n, long k) {
  if (n < 0) throw std::invalid_argument("binomial: n must be nonnegative");
  if (k < 0 || k > n) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

BigInt factorial(long n) {
  if (n < 0) throw std::invalid_argument("factorial: n must be nonnegative");
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw std::invalid_argument("Partition: no parts");
  if (std::any_of(parts_.begin(), parts_.end(), [](int p) { return p < 1; })) {
    throw std::invalid_argument("Partition: parts must be positive");
  }
  std::sort(parts_.begin(), parts_.end());
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
  weight_ = 1;
  for (int p : parts_) weight_ *= p;
  automorphisms_ = 1;
  for (auto run = parts_.begin(); run != parts_.end();) {
    auto end = std::find_if(run, parts_.end(), [&](int p) { return p != *run; });
    automorphisms_ *= factorial(end - run);
    run = end;
  }
}

std::string Partition::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out + ")";
}

namespace {

void extend(int remaining, int min_part, std::vector<int>& prefix, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int part = min_part; part <= remaining; ++part) {
    // a part larger than remaining/2 must be the last one
    if (part != remaining && 2 * part > remaining) continue;
    prefix.push_back(part);
    extend(remaining - part, part, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int d) {
  if (d <= 0) throw std::invalid_argument("partitions_of: degree must be positive");
  std::vector<Partition> out;
  std::vector<int> prefix;
  extend(d, 1, prefix, out);
  return out;
}

long required_chi(int degree, int genus, std::span<const int> alphas) {
  long total = static_cast<long>(degree) * (genus - 1);
  for (int a : alphas) total += a;
  return -total;
}

}  // namespace thetagw

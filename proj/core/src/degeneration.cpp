#include "thetagw/degeneration.hpp"

#include <cstdint>
#include <stdexcept>

#include "thetagw/invariants.hpp"

namespace thetagw {

std::optional<Rational> Channel::contribution() const {
  if (!bubble_value) return std::nullopt;
  return coefficient * cap_value * *bubble_value;
}

Rational relative_split_channel(std::span<const int> alphas) {
  const std::size_t n = alphas.size();
  if (n > 24) throw std::invalid_argument("relative_split_channel: at most 24 insertions");
  std::vector<Rational> blocks;
  blocks.reserve(n);
  for (int a : alphas) blocks.push_back(degree1_block(a));

  Rational total(0);
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    Rational first(1);   // component with the insertions whose bit is set
    Rational second(1);  // an empty component contributes <1>_{(1)} * [pt] = 1
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (1U << i)) {
        first *= blocks[i];
      } else {
        second *= blocks[i];
      }
    }
    total += first * second;
  }
  return total;
}

Rational relative_tangent_channel(std::span<const int> alphas) {
  const Partition split({1, 1});
  const Partition tangent({2});
  // at genus zero the cap invariant of the split channel is 1
  return (degree2_over_p1(alphas) - split.gluing_coefficient() * relative_split_channel(alphas)) /
         tangent.gluing_coefficient();
}

std::vector<Channel> degree2_channels(int h, Parity parity, std::span<const int> alphas) {
  const Rational scaling = parity_sign(parity) * pow2(h);
  std::vector<Channel> out;
  for (const Partition& eta : partitions_of(2)) {
    Channel c{eta, eta.gluing_coefficient(), scaling, std::nullopt};
    c.bubble_value = (eta.length() == 2) ? relative_split_channel(alphas) : relative_tangent_channel(alphas);
    out.push_back(std::move(c));
  }
  return out;
}

Rational glued_degree2(int h, Parity parity, std::span<const int> alphas) {
  if (h < 0) throw std::invalid_argument("glued_degree2: genus must be nonnegative");
  Rational total(0);
  for (const Channel& c : degree2_channels(h, parity, alphas)) total += *c.contribution();
  return total;
}

bool check_degree2_gluing(int h, Parity parity, std::span<const int> alphas) {
  const InvariantQuery q{2, h, parity, std::vector<int>(alphas.begin(), alphas.end())};
  return degree2(q) == glued_degree2(h, parity, alphas);
}

long chi_constraint(long chi1, long chi2, const Partition& eta) { return chi1 + chi2 - eta.length(); }

std::vector<GluingSplit> enumerate_gluing_splits(int degree, long chi, long chi1_min, long chi1_max) {
  std::vector<GluingSplit> out;
  for (const Partition& eta : partitions_of(degree)) {
    for (long chi1 = chi1_min; chi1 <= chi1_max; ++chi1) {
      const long chi2 = chi - chi1 + eta.length();
      out.push_back({eta, chi1, chi2});
    }
  }
  return out;
}

}  // namespace thetagw

#ifndef BRAIDCOUNT_FUZZ_HPP
#define BRAIDCOUNT_FUZZ_HPP

// Random generators for property checks.

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "braidcount/coords.hpp"

namespace braidcount {

/// Uniform composition of k into n-1 parts (stars and bars).
template <typename Rng>
SVector random_s_vector(int n, int k, Rng& rng) {
  if (n == 1) return make_s_vector(1, {});
  const int slots = k + n - 2;
  std::vector<int> pos(static_cast<std::size_t>(slots));
  std::iota(pos.begin(), pos.end(), 0);
  std::shuffle(pos.begin(), pos.end(), rng);
  std::vector<int> bars(pos.begin(), pos.begin() + (n - 2));
  std::sort(bars.begin(), bars.end());
  std::vector<int> s;
  int prev = -1;
  for (int b : bars) {
    s.push_back(b - prev - 1);
    prev = b;
  }
  s.push_back(slots - prev - 1);
  return make_s_vector(n, std::move(s));
}

/// Random virtual coordinates with 1 <= n <= nmax and k <= kmax; a-values
/// uniform in their admissible ranges.
template <typename Rng>
VirtualCoordinates random_coordinates(int nmax, int kmax, Rng& rng) {
  const int n = std::uniform_int_distribution<int>(1, nmax)(rng);
  const int k = n == 1 ? 0 : std::uniform_int_distribution<int>(0, kmax)(rng);
  const SVector sv = random_s_vector(n, k, rng);
  const std::vector<int> s = sv.full();
  std::vector<int> a(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    const int hi = a_max(s[static_cast<std::size_t>(i - 1)], s[static_cast<std::size_t>(i)]);
    a[static_cast<std::size_t>(i - 1)] = std::uniform_int_distribution<int>(0, hi)(rng);
  }
  return make_unchecked(s, std::move(a));
}

}  // namespace braidcount

#endif  // BRAIDCOUNT_FUZZ_HPP

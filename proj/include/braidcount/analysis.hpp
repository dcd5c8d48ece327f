#ifndef BRAIDCOUNT_ANALYSIS_HPP
#define BRAIDCOUNT_ANALYSIS_HPP

// Bounds on g_{n,k} for n >= 4, explicit actual-coordinate witnesses, and
// normalised ratio series for growth-rate inspection.

#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "braidcount/census.hpp"
#include "braidcount/closedform.hpp"
#include "braidcount/coords.hpp"

namespace braidcount {

using BigInt = boost::multiprecision::cpp_int;

/// Exact non-negative rational, kept reduced.
struct Rational {
  BigInt num = 0;
  BigInt den = 1;

  static Rational make(BigInt num, BigInt den) {
    if (den == 0) throw std::domain_error("zero denominator");
    const BigInt d = boost::multiprecision::gcd(num, den);
    return Rational{num / d, den / d};
  }

  std::string to_string() const {
    return den == 1 ? num.str() : num.str() + "/" + den.str();
  }
  double to_double() const { return num.convert_to<double>() / den.convert_to<double>(); }

  friend bool operator<=(std::int64_t x, const Rational& r) { return BigInt(x) * r.den <= r.num; }
};

inline BigInt binomial(int top, int bottom) {
  if (bottom < 0 || top < 0 || bottom > top) return 0;
  BigInt out = 1;
  for (int i = 1; i <= bottom; ++i) out = out * (top - bottom + i) / i;
  return out;
}

/// binom(k+n-2, n-2); the number of s-vectors, each of which has at least
/// one actual completion.
inline std::int64_t lower_bound(int n, int k) {
  if (n < 1 || k < 0) throw std::invalid_argument("lower_bound needs n >= 1, k >= 0");
  const BigInt v = n == 1 ? BigInt(k == 0 ? 1 : 0) : binomial(k + n - 2, n - 2);
  if (v > BigInt(INT64_MAX)) throw std::overflow_error("lower bound exceeds 64 bits");
  return v.convert_to<std::int64_t>();
}

/// 2^n ((k+n-1)/(n-1))^{n-2} binom(k+n-2, n-2), exactly.
inline Rational upper_bound(int n, int k) {
  if (n < 2 || k < 0) throw std::invalid_argument("upper_bound needs n >= 2, k >= 0");
  const BigInt num = (BigInt(1) << n) * boost::multiprecision::pow(BigInt(k + n - 1), n - 2) *
                     binomial(k + n - 2, n - 2);
  return Rational::make(num, boost::multiprecision::pow(BigInt(n - 1), n - 2));
}

struct BoundReport {
  int n = 2;
  int k = 0;
  std::int64_t lower = 0;
  std::optional<std::int64_t> g;
  Rational upper;

  /// "ok", "violated", or "unchecked" when g is absent.
  std::string verdict() const {
    if (!g) return "unchecked";
    return (lower <= *g && *g <= upper) ? "ok" : "violated";
  }
};

inline BoundReport bound_report(int n, int k, std::optional<std::int64_t> g = std::nullopt) {
  return BoundReport{n, k, lower_bound(n, k), g, upper_bound(n, k)};
}

/// a_i = s_{i-1} if s_{i-1} <= s_i, else s_i + 1.
inline VirtualCoordinates witness_a_for_s(const SVector& sv) {
  const std::vector<int> s = sv.full();
  std::vector<int> a(static_cast<std::size_t>(sv.n));
  for (int i = 1; i <= sv.n; ++i) {
    const int left = s[static_cast<std::size_t>(i - 1)];
    const int right = s[static_cast<std::size_t>(i)];
    a[static_cast<std::size_t>(i - 1)] = left <= right ? left : right + 1;
  }
  return make_unchecked(s, std::move(a));
}

enum class RatioSource { census, closedform };

struct RatioPoint {
  int n = 0;
  int k = 0;
  std::int64_t g = 0;
  double ratio_k = 0;      // g / k^{2(n-2)}
  double ratio_shift = 0;  // g / (k+n)^{2(n-2)}
  int residue = 0;         // k mod rho
  std::optional<double> normalized;  // n = 3 only: pi^2 g / k^2
};

/// Residue classes in which the ratios cluster.
constexpr int default_rho(int n) noexcept {
  switch (n) {
    case 3: return 2;
    case 4: return 6;
    case 5: return 2;
    default: return 1;
  }
}

inline RatioPoint make_ratio_point(int n, int k, std::int64_t g, int rho) {
  const double e = 2.0 * (n - 2);
  RatioPoint p{n, k, g, static_cast<double>(g) / std::pow(static_cast<double>(k), e),
               static_cast<double>(g) / std::pow(static_cast<double>(k + n), e), k % rho, std::nullopt};
  if (n == 3) p.normalized = std::numbers::pi * std::numbers::pi * static_cast<double>(g) / (double(k) * k);
  return p;
}

/// Ratio points for 1 <= k <= kmax. The closed-form source covers n = 2, 3.
inline std::vector<RatioPoint> ratio_series(int n, int kmax, RatioSource source, int rho = 0,
                                            const CensusOptions& options = {}) {
  if (n < 2) throw std::invalid_argument("ratio series needs n >= 2");
  if (rho <= 0) rho = default_rho(n);
  if (source == RatioSource::closedform && n != 2 && n != 3) {
    throw std::invalid_argument("closed-form ratios exist only for n = 2 and n = 3");
  }
  std::vector<RatioPoint> out;
  if (kmax < 1) return out;
  std::optional<TotientTable> phi;
  if (source == RatioSource::closedform && n == 3) phi.emplace(kmax + 3);
  for (int k = 1; k <= kmax; ++k) {
    std::int64_t g = 0;
    if (source == RatioSource::closedform) {
      g = n == 2 ? g2(k) : g3_totient(k, *phi);
    } else {
      g = count_actual(n, k, options).g;
    }
    out.push_back(make_ratio_point(n, k, g, rho));
  }
  return out;
}

}  // namespace braidcount

#endif  // BRAIDCOUNT_ANALYSIS_HPP

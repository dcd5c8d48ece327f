#ifndef BRAIDCOUNT_CLOSEDFORM_HPP
#define BRAIDCOUNT_CLOSEDFORM_HPP

// Exact closed forms for the 2- and 3-strand growth series:
//   g_{2,k} = [k=0] + 2 [k>=1]
//   g_{3,k} = [k=0] + 2 (phi(k+2) - [k even] + 2 sum_{i=1}^{k/2} phi(k+3-2i)) [k>=1]
// together with two further evaluators of g_{3,k} and exact truncated
// power-series expansions of G_2, G_3, B_2, B_3.

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "braidcount/checked.hpp"
#include "braidcount/permcheck.hpp"

namespace braidcount {

/// Euler totient phi(1..N), linear-time sieve.
class TotientTable {
 public:
  static constexpr std::int64_t max_capacity = 200'000'000;

  explicit TotientTable(std::int64_t capacity) {
    if (capacity < 1) throw std::invalid_argument("totient table needs N >= 1");
    if (capacity > max_capacity) {
      throw std::length_error("totient table capacity " + std::to_string(capacity) +
                              " exceeds " + std::to_string(max_capacity));
    }
    const auto n = static_cast<std::size_t>(capacity);
    phi_.assign(n + 1, 0);
    phi_[1] = 1;
    std::vector<std::int64_t> primes;
    for (std::size_t i = 2; i <= n; ++i) {
      if (phi_[i] == 0) {
        phi_[i] = static_cast<std::int64_t>(i) - 1;
        primes.push_back(static_cast<std::int64_t>(i));
      }
      for (std::int64_t p : primes) {
        const std::size_t ip = i * static_cast<std::size_t>(p);
        if (ip > n) break;
        if (i % static_cast<std::size_t>(p) == 0) {
          phi_[ip] = phi_[i] * p;
          break;
        }
        phi_[ip] = phi_[i] * (p - 1);
      }
    }
  }

  std::int64_t capacity() const noexcept { return static_cast<std::int64_t>(phi_.size()) - 1; }

  std::int64_t operator()(std::int64_t i) const {
    if (i < 1 || i > capacity()) {
      throw std::out_of_range("phi(" + std::to_string(i) + ") outside table of size " +
                              std::to_string(capacity()));
    }
    return phi_[static_cast<std::size_t>(i)];
  }

 private:
  std::vector<std::int64_t> phi_;
};

inline TotientTable totient_sieve(std::int64_t n) { return TotientTable(n); }

constexpr std::int64_t g2(std::int64_t k) noexcept { return k == 0 ? 1 : 2; }

inline std::int64_t g3_totient(int k, const TotientTable& phi) {
  if (k < 0) throw std::invalid_argument("k must be >= 0");
  if (k == 0) return 1;
  std::int64_t inner = phi(k + 2) - (k % 2 == 0 ? 1 : 0);
  for (int i = 1; i <= k / 2; ++i) inner = checked_add(inner, checked_mul(2, phi(k + 3 - 2 * i)));
  return checked_mul(2, inner);
}

inline std::int64_t g3_totient(int k) { return g3_totient(k, TotientTable(k + 3)); }

/// Sum of C_{k',l'} over k' + l' = k.
inline std::int64_t g3_via_c(int k) {
  if (k < 0) throw std::invalid_argument("k must be >= 0");
  std::int64_t out = 0;
  for (int kk = 0; kk <= k; ++kk) out = checked_add(out, c_pair(kk, k - kk));
  return out;
}

/// gamma_i = [i=0] - 3[i=2] + 2 phi(i+2)[i>=1] + 4 phi(i+1)[i>=2] - 2 phi(i)[i>=3]
inline std::int64_t gamma_term(int i, const TotientTable& phi) {
  std::int64_t out = (i == 0 ? 1 : 0) - (i == 2 ? 3 : 0);
  if (i >= 1) out += 2 * phi(i + 2);
  if (i >= 2) out += 4 * phi(i + 1);
  if (i >= 3) out -= 2 * phi(i);
  return out;
}

inline std::int64_t g3_via_gamma(int k, const TotientTable& phi) {
  if (k < 0) throw std::invalid_argument("k must be >= 0");
  std::int64_t out = 0;
  for (int i = 0; i <= k / 2; ++i) out = checked_add(out, gamma_term(k - 2 * i, phi));
  return out;
}

inline std::int64_t g3_via_gamma(int k) { return g3_via_gamma(k, TotientTable(k + 3)); }

/// phi_hat_k = phi(k) + phi(k-2) + ... (down to phi(1) or phi(2)).
inline std::int64_t phi_hat(std::int64_t k, const TotientTable& phi) {
  std::int64_t out = 0;
  for (std::int64_t j = k; j >= 1; j -= 2) out = checked_add(out, phi(j));
  return out;
}

inline std::int64_t totient_sum(std::int64_t n, const TotientTable& phi) {
  std::int64_t out = 0;
  for (std::int64_t j = 1; j <= n; ++j) out = checked_add(out, phi(j));
  return out;
}

/// Integer power series truncated after z^degree.
class PowerSeries {
 public:
  explicit PowerSeries(int degree) : c_(static_cast<std::size_t>(degree + 1), 0) {
    if (degree < 0) throw std::invalid_argument("negative truncation degree");
  }
  PowerSeries(int degree, const std::vector<std::int64_t>& poly) : PowerSeries(degree) {
    for (std::size_t i = 0; i < poly.size() && i < c_.size(); ++i) c_[i] = poly[i];
  }

  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  std::int64_t operator[](int i) const { return c_.at(static_cast<std::size_t>(i)); }
  std::int64_t& operator[](int i) { return c_.at(static_cast<std::size_t>(i)); }
  const std::vector<std::int64_t>& coefficients() const noexcept { return c_; }

  friend PowerSeries operator+(const PowerSeries& x, const PowerSeries& y) {
    PowerSeries out(std::min(x.degree(), y.degree()));
    for (int i = 0; i <= out.degree(); ++i) out[i] = checked_add(x[i], y[i]);
    return out;
  }

  friend PowerSeries operator*(std::int64_t s, const PowerSeries& x) {
    PowerSeries out(x.degree());
    for (int i = 0; i <= x.degree(); ++i) out[i] = checked_mul(s, x[i]);
    return out;
  }

  friend PowerSeries operator*(const PowerSeries& x, const PowerSeries& y) {
    PowerSeries out(std::min(x.degree(), y.degree()));
    for (int i = 0; i <= out.degree(); ++i) {
      if (x[i] == 0) continue;
      for (int j = 0; i + j <= out.degree(); ++j) {
        out[i + j] = checked_add(out[i + j], checked_mul(x[i], y[j]));
      }
    }
    return out;
  }

  /// x / y for y with constant term +-1, by the Cauchy-product recurrence.
  friend PowerSeries operator/(const PowerSeries& x, const PowerSeries& y) {
    if (y[0] != 1 && y[0] != -1) throw std::domain_error("divisor must have unit constant term");
    PowerSeries out(std::min(x.degree(), y.degree()));
    for (int i = 0; i <= out.degree(); ++i) {
      std::int64_t acc = x[i];
      for (int j = 1; j <= i; ++j) acc = checked_sub(acc, checked_mul(y[j], out[i - j]));
      out[i] = acc * y[0];
    }
    return out;
  }

 private:
  std::vector<std::int64_t> c_;
};

/// Coefficient table of one generating function; coefficients[i] is the
/// coefficient of z^i.
struct SeriesTable {
  std::string label;
  std::vector<std::int64_t> coefficients;
  std::string index_semantics;
};

namespace detail {

/// sum_{n>=3} phi(n) z^{step*n - shift}, truncated after z^degree.
inline PowerSeries totient_series(int degree, int step, int shift, const TotientTable& phi) {
  PowerSeries out(degree);
  for (int n = 3;; ++n) {
    const int e = step * n - shift;
    if (e > degree) break;
    if (e >= 0) out[e] = phi(n);
  }
  return out;
}

}  // namespace detail

/// Exact expansion of G2, G3 (coefficients z^0..z^kmax) or B2, B3
/// (coefficients z^0..z^{2 kmax + n - 1}).
inline SeriesTable series(const std::string& label, int kmax) {
  if (kmax < 0) throw std::invalid_argument("kmax must be >= 0");
  SeriesTable t;
  t.label = label;
  const TotientTable phi(2 * kmax + 8);
  if (label == "G2") {
    const int d = kmax;
    const PowerSeries s = PowerSeries(d, {1, 1}) / PowerSeries(d, {1, -1});
    t.coefficients = s.coefficients();
    t.index_semantics = "coefficient of z^k = g_{2,k}";
  } else if (label == "G3") {
    const int d = kmax;
    // 2 (1+2z-z^2) / (z^2 (1-z^2)) * sum phi(n) z^n + (1-3z^2)/(1-z^2)
    const PowerSeries p = detail::totient_series(d, 1, 2, phi);
    const PowerSeries one_minus_z2(d, {1, 0, -1});
    const PowerSeries s = (2 * (PowerSeries(d, {1, 2, -1}) * p)) / one_minus_z2 +
                          PowerSeries(d, {1, 0, -3}) / one_minus_z2;
    t.coefficients = s.coefficients();
    t.index_semantics = "coefficient of z^k = g_{3,k}";
  } else if (label == "B2") {
    const int d = 2 * kmax + 1;
    const PowerSeries s = PowerSeries(d, {0, 1, 0, 1}) / PowerSeries(d, {1, 0, -1});
    t.coefficients = s.coefficients();
    t.index_semantics = "coefficient of z^m = number of 2-strand braids of norm m";
  } else if (label == "B3") {
    const int d = 2 * kmax + 2;
    // 2 (1+2z^2-z^4) / (z^2 (1-z^4)) * sum phi(n) z^{2n} + z^2 (1-3z^4)/(1-z^4)
    const PowerSeries q = detail::totient_series(d, 2, 2, phi);
    const PowerSeries one_minus_z4(d, {1, 0, 0, 0, -1});
    const PowerSeries s = (2 * (PowerSeries(d, {1, 0, 2, 0, -1}) * q)) / one_minus_z4 +
                          PowerSeries(d, {0, 0, 1, 0, 0, 0, -3}) / one_minus_z4;
    t.coefficients = s.coefficients();
    t.index_semantics = "coefficient of z^m = number of 3-strand braids of norm m";
  } else {
    throw std::invalid_argument("unknown series label '" + label + "' (G2, G3, B2, B3)");
  }
  return t;
}

/// 2 f_n = phi(n) for 3 <= n <= nmax (index n), zero below 3.
inline SeriesTable f_half_totient(int nmax) {
  if (nmax < 3) throw std::invalid_argument("nmax must be >= 3");
  const TotientTable phi(nmax);
  SeriesTable t{"2F", std::vector<std::int64_t>(static_cast<std::size_t>(nmax + 1), 0),
                "coefficient of z^n = 2 f_n"};
  for (int n = 3; n <= nmax; ++n) t.coefficients[static_cast<std::size_t>(n)] = phi(n);
  return t;
}

/// Twice the number of coprime pairs (alpha, beta >= 1) with 2 alpha + beta = n,
/// i.e. the coefficients of 2F(z) from its defining double sum.
inline SeriesTable f_pair_oracle(int nmax) {
  if (nmax < 3) throw std::invalid_argument("nmax must be >= 3");
  SeriesTable t{"2F-pairs", std::vector<std::int64_t>(static_cast<std::size_t>(nmax + 1), 0),
                "coefficient of z^n = 2 f_n"};
  for (int alpha = 1; 2 * alpha + 1 <= nmax; ++alpha) {
    for (int beta = 1; 2 * alpha + beta <= nmax; ++beta) {
      if (signed_gcd(alpha, beta) == 1) t.coefficients[static_cast<std::size_t>(2 * alpha + beta)] += 2;
    }
  }
  return t;
}

}  // namespace braidcount

#endif  // BRAIDCOUNT_CLOSEDFORM_HPP

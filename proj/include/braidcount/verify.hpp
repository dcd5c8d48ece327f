#ifndef BRAIDCOUNT_VERIFY_HPP
#define BRAIDCOUNT_VERIFY_HPP

// Named self-check suites run by `braidcount verify`. Each stops recording
// at the first counterexample, which it reports verbatim.

#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "braidcount/analysis.hpp"
#include "braidcount/census.hpp"
#include "braidcount/closedform.hpp"
#include "braidcount/coords.hpp"
#include "braidcount/diagram.hpp"
#include "braidcount/fuzz.hpp"
#include "braidcount/permcheck.hpp"

namespace braidcount {

struct VerifyReport {
  std::string suite;
  bool passed = true;
  std::int64_t checks = 0;
  std::string counterexample;

  /// Counts one check; records the first failure.
  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok && passed) {
      passed = false;
      counterexample = what;
    }
  }
};

struct VerifyOptions {
  std::optional<int> kmax;
  int threads = 0;
  std::uint64_t seed = 0x5eed2024;
  int fuzz_samples = 10'000;
};

inline const std::vector<std::string>& verify_suites() {
  static const std::vector<std::string> names = {"b2",        "b3-closed-form", "cyclicity",
                                                 "bounds",    "witnesses",      "tightness",
                                                 "symmetry",  "prune-consistency"};
  return names;
}

namespace detail {

inline std::string show(const std::vector<int>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out + ")";
}

inline void verify_b2(VerifyReport& r, const VerifyOptions& o) {
  const int kmax = o.kmax.value_or(200);
  CensusOptions co;
  co.threads = o.threads;
  const SeriesTable gs = series("G2", kmax);
  const SeriesTable bs = series("B2", kmax);
  for (int k = 0; k <= kmax && r.passed; ++k) {
    const std::int64_t g = count_actual(2, k, co).g;
    r.expect(g == g2(k), "census g_{2," + std::to_string(k) + "}=" + std::to_string(g) +
                             " != " + std::to_string(g2(k)));
    r.expect(gs.coefficients[static_cast<std::size_t>(k)] == g, "G2 series at k=" + std::to_string(k));
    r.expect(bs.coefficients[static_cast<std::size_t>(2 * k + 1)] == g,
             "B2 series at norm " + std::to_string(2 * k + 1));
  }
}

inline void verify_b3(VerifyReport& r, const VerifyOptions& o) {
  const int kmax = o.kmax.value_or(30);
  CensusOptions co;
  co.threads = o.threads;
  const TotientTable phi(kmax + 3);
  const SeriesTable gs = series("G3", kmax);
  const SeriesTable bs = series("B3", kmax);
  for (int k = 0; k <= kmax && r.passed; ++k) {
    const std::int64_t g = count_actual(3, k, co).g;
    const std::int64_t t = g3_totient(k, phi);
    const std::string at = " at k=" + std::to_string(k);
    r.expect(g == t, "census " + std::to_string(g) + " != totient formula " + std::to_string(t) + at);
    r.expect(g3_via_c(k) == t, "C-sum disagrees" + at);
    r.expect(g3_via_gamma(k, phi) == t, "gamma expansion disagrees" + at);
    r.expect(gs.coefficients[static_cast<std::size_t>(k)] == t, "G3 series disagrees" + at);
    r.expect(bs.coefficients[static_cast<std::size_t>(2 * k + 2)] == t, "B3 series disagrees" + at);
  }
  const int cmax = std::min(kmax, 25);
  for (int k = 0; k <= cmax && r.passed; ++k) {
    for (int l = 0; l <= cmax && r.passed; ++l) {
      std::int64_t brute = 0;
      for (ATupleOdometer it(make_s_vector(3, {k, l})); !it.done(); it.advance()) {
        brute += is_actual(it.value()) ? 1 : 0;
      }
      r.expect(brute == c_pair(k, l), "C_{" + std::to_string(k) + "," + std::to_string(l) +
                                          "}: brute force " + std::to_string(brute) +
                                          " != formula " + std::to_string(c_pair(k, l)));
    }
  }
}

inline void verify_cyclicity(VerifyReport& r, const VerifyOptions& o) {
  const int nmax = o.kmax.value_or(40);
  for (int n = 1; n <= nmax && r.passed; ++n) {
    for (int a = 0; a <= n; ++a) {
      r.expect(is_cyclic_translation(n, a) == (orbit_count(PermSpec::translation(n, a)) == 1),
               PermSpec::translation(n, a).to_string());
    }
    for (int a = 0; a <= n; ++a) {
      for (int b = 0; a + b <= n; ++b) {
        for (int c = 0; a + b + c <= n; ++c) {
          const PermSpec p = PermSpec::translated_cut(n, a, b, c);
          const auto perm = materialize(p);
          r.expect(is_cyclic_translated_cut(n, a, b, c) == (orbit_count(perm) == 1), p.to_string());
          r.expect(cycle_type(perm) == cycle_type(materialize(PermSpec::translated_cut(n, 0, b, c))),
                   "conjugacy " + p.to_string());
        }
      }
    }
  }
  const int lmax = std::min(nmax, 20);
  for (int l = 2; l <= lmax && r.passed; ++l) {
    for (int k = 1; k < l; ++k) {
      for (int a2 = 0; a2 <= 2 * k + 1; ++a2) {
        for (int a3 = 0; a3 <= 1; ++a3) {
          const B3Regime reg{k, l, a2, a3};
          const bool actual = is_actual(validate(3, {0, 1, k, a2, l, a3, 0}));
          r.expect(theta(reg).cyclic() == actual,
                   "theta bridge at " + show({0, 1, k, a2, l, a3, 0}));
        }
      }
    }
  }
}

inline void verify_bounds(VerifyReport& r, const VerifyOptions& o) {
  const int kmax = o.kmax.value_or(20);
  CensusOptions co;
  co.threads = o.threads;
  for (int n : {4, 5}) {
    const int top = n == 4 ? kmax : std::min(kmax, 12);
    for (int k = 0; k <= top && r.passed; ++k) {
      const BoundReport b = bound_report(n, k, count_actual(n, k, co).g);
      r.expect(b.verdict() == "ok", "sandwich fails at n=" + std::to_string(n) + ", k=" +
                                        std::to_string(k) + ": " + std::to_string(b.lower) +
                                        " <= " + std::to_string(*b.g) + " <= " + b.upper.to_string());
    }
  }
}

inline void verify_witnesses(VerifyReport& r, const VerifyOptions& o) {
  const int kmax = o.kmax.value_or(30);
  std::mt19937_64 rng(o.seed);
  ActualityKernel kernel;
  for (int t = 0; t < o.fuzz_samples && r.passed; ++t) {
    const int n = std::uniform_int_distribution<int>(1, 8)(rng);
    const int k = n == 1 ? 0 : std::uniform_int_distribution<int>(0, kmax)(rng);
    const SVector sv = random_s_vector(n, k, rng);
    const VirtualCoordinates w = witness_a_for_s(sv);
    r.expect(kernel.is_actual(w), "witness not actual: " + w.to_string());
  }
}

inline void verify_tightness(VerifyReport& r, const VerifyOptions& o) {
  const int kmax = o.kmax.value_or(12);
  std::mt19937_64 rng(o.seed ^ 0x7167u);
  for (int t = 0; t < o.fuzz_samples && r.passed; ++t) {
    const VirtualCoordinates c = random_coordinates(6, kmax, rng);
    const ArcGraph open = build_arc_graph(c, false);
    const ArcGraph closed = build_arc_graph(c, true);
    const std::string at = " at " + c.to_string();
    r.expect(tightness_check(open), "tightness" + at);
    r.expect(degree_check(open), "open degrees" + at);
    r.expect(degree_check(closed), "closed degrees" + at);
    r.expect(non_interleaving(open) && non_interleaving(closed), "interleaving arcs" + at);
    r.expect(component_count(open) == component_count(closed), "closing changed components" + at);
  }
}

inline void verify_symmetry(VerifyReport& r, const VerifyOptions& o) {
  const int kmax = o.kmax.value_or(12);
  std::mt19937_64 rng(o.seed ^ 0x5e77u);
  ActualityKernel kernel;
  for (int t = 0; t < o.fuzz_samples && r.passed; ++t) {
    const VirtualCoordinates c = random_coordinates(6, kmax, rng);
    const std::string at = " at " + c.to_string();
    const auto h = sym_h(c);
    const auto v = sym_v(c);
    r.expect(sym_h(h) == c && sym_v(v) == c, "not an involution" + at);
    r.expect(sym_h(v) == sym_v(h) && sym_c(c) == sym_h(v), "symmetries do not commute" + at);
    bool valid = true;
    try {
      validate(c.n(), h.flat());
      validate(c.n(), v.flat());
    } catch (const CoordinateError&) {
      valid = false;
    }
    r.expect(valid, "image not valid" + at);
    const bool act = kernel.is_actual(c);
    r.expect(act == kernel.is_actual(h) && act == kernel.is_actual(v), "actuality not invariant" + at);
  }
}

inline void verify_prune(VerifyReport& r, const VerifyOptions& o) {
  const int kmax = o.kmax.value_or(12);
  for (int n = 1; n <= 5 && r.passed; ++n) {
    for (int k = 0; k <= kmax && r.passed; ++k) {
      CensusOptions plain;
      plain.threads = o.threads;
      CensusOptions pruned = plain;
      pruned.pruning = true;
      const auto a = count_actual(n, k, plain).g;
      const auto b = count_actual(n, k, pruned).g;
      r.expect(a == b, "plain " + std::to_string(a) + " != pruned " + std::to_string(b) +
                           " at n=" + std::to_string(n) + ", k=" + std::to_string(k));
    }
  }
}

}  // namespace detail

inline VerifyReport run_verify_suite(const std::string& suite, const VerifyOptions& options = {}) {
  VerifyReport r;
  r.suite = suite;
  if (suite == "b2") {
    detail::verify_b2(r, options);
  } else if (suite == "b3-closed-form") {
    detail::verify_b3(r, options);
  } else if (suite == "cyclicity") {
    detail::verify_cyclicity(r, options);
  } else if (suite == "bounds") {
    detail::verify_bounds(r, options);
  } else if (suite == "witnesses") {
    detail::verify_witnesses(r, options);
  } else if (suite == "tightness") {
    detail::verify_tightness(r, options);
  } else if (suite == "symmetry") {
    detail::verify_symmetry(r, options);
  } else if (suite == "prune-consistency") {
    detail::verify_prune(r, options);
  } else {
    throw std::invalid_argument("unknown verify suite '" + suite + "'");
  }
  return r;
}

}  // namespace braidcount

#endif  // BRAIDCOUNT_VERIFY_HPP

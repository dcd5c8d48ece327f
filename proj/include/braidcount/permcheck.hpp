#ifndef BRAIDCOUNT_PERMCHECK_HPP
#define BRAIDCOUNT_PERMCHECK_HPP

// Translations and translated cuts of Z_n, their cyclicity criteria, and
// the closed-form actuality test for 3-strand coordinates
// (0, a_1, k, a_2, l, a_3, 0) that they lead to.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "braidcount/coords.hpp"
#include "braidcount/diagram.hpp"

namespace braidcount {

/// gcd with the conventions a^b = |a|^|b| and 0^b = |b|; so gcd(0,0) = 0.
constexpr std::int64_t signed_gcd(std::int64_t a, std::int64_t b) noexcept {
  return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b);
}

struct PermSpec {
  enum class Kind { translation, cut, translated_cut };

  Kind kind = Kind::translation;
  int n = 1;
  int a = 0;
  int b = 0;
  int c = 0;

  /// T_{n,a}: u -> u - a.
  static PermSpec translation(int n, int a) {
    if (n < 1) throw std::invalid_argument("modulus must be >= 1");
    if (a < 0 || a > n) throw std::invalid_argument("translation needs 0 <= a <= n");
    return PermSpec{Kind::translation, n, a, 0, 0};
  }
  /// Cut_{n,a,b,c}: swaps the adjacent blocks [a, a+b) and [a+b, a+b+c).
  static PermSpec cut(int n, int a, int b, int c) {
    check_cut(n, a, b, c);
    return PermSpec{Kind::cut, n, a, b, c};
  }
  /// TCut_{n,a,b,c} = T_{n,1} o Cut_{n,a,b,c}.
  static PermSpec translated_cut(int n, int a, int b, int c) {
    check_cut(n, a, b, c);
    return PermSpec{Kind::translated_cut, n, a, b, c};
  }

  std::string to_string() const {
    const std::string args = std::to_string(n) + "," + std::to_string(a);
    switch (kind) {
      case Kind::translation: return "T_{" + args + "}";
      case Kind::cut: return "Cut_{" + args + "," + std::to_string(b) + "," + std::to_string(c) + "}";
      case Kind::translated_cut:
        return "TCut_{" + args + "," + std::to_string(b) + "," + std::to_string(c) + "}";
    }
    return "?";
  }

  friend bool operator==(const PermSpec&, const PermSpec&) = default;

 private:
  static void check_cut(int n, int a, int b, int c) {
    if (n < 1) throw std::invalid_argument("modulus must be >= 1");
    if (a < 0 || b < 0 || c < 0 || a + b + c > n) {
      throw std::invalid_argument("cut needs a,b,c >= 0 and a+b+c <= n");
    }
  }
};

inline int apply(const PermSpec& p, int u) {
  if (u < 0 || u >= p.n) throw std::out_of_range("residue outside Z_n");
  auto cut = [&](int x) {
    if (x >= p.a && x < p.a + p.b) return x + p.c;
    if (x >= p.a + p.b && x < p.a + p.b + p.c) return x - p.b;
    return x;
  };
  switch (p.kind) {
    case PermSpec::Kind::translation: return ((u - p.a) % p.n + p.n) % p.n;
    case PermSpec::Kind::cut: return cut(u);
    case PermSpec::Kind::translated_cut: return (cut(u) - 1 + p.n) % p.n;
  }
  return u;
}

/// The permutation as an array: out[u] = p(u).
inline std::vector<int> materialize(const PermSpec& p) {
  std::vector<int> out(static_cast<std::size_t>(p.n));
  for (int u = 0; u < p.n; ++u) out[static_cast<std::size_t>(u)] = apply(p, u);
  return out;
}

/// Sorted cycle lengths of an explicit permutation.
inline std::vector<int> cycle_type(const std::vector<int>& perm) {
  std::vector<char> seen(perm.size(), 0);
  std::vector<int> lengths;
  for (std::size_t start = 0; start < perm.size(); ++start) {
    if (seen[start]) continue;
    int len = 0;
    for (std::size_t x = start; !seen[x]; x = static_cast<std::size_t>(perm[x])) {
      seen[x] = 1;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

inline int orbit_count(const std::vector<int>& perm) {
  return static_cast<int>(cycle_type(perm).size());
}

inline int orbit_count(const PermSpec& p) { return orbit_count(materialize(p)); }

inline bool is_cyclic_translation(int n, int a) {
  if (n < 1 || a < 0 || a > n) throw std::invalid_argument("translation needs 0 <= a <= n, n >= 1");
  return signed_gcd(a, n) == 1;
}

inline bool is_cyclic_translated_cut(int n, int a, int b, int c) {
  if (n < 1 || a < 0 || b < 0 || c < 0 || a + b + c > n) {
    throw std::invalid_argument("cut needs a,b,c >= 0 and a+b+c <= n");
  }
  return signed_gcd(c - 1, b + 1) == 1;
}

inline bool is_cyclic(const PermSpec& p) {
  switch (p.kind) {
    case PermSpec::Kind::translation: return is_cyclic_translation(p.n, p.a);
    case PermSpec::Kind::translated_cut: return is_cyclic_translated_cut(p.n, p.a, p.b, p.c);
    case PermSpec::Kind::cut: return orbit_count(p) == 1;
  }
  return false;
}

/// Parameters of the a_1 = 1 branch with 1 <= k < l; m = l - k and
/// alpha = a_2 / 2 is carried as (floor, ceil).
struct B3Regime {
  int k = 1;
  int l = 2;
  int a2 = 0;
  int a3 = 0;

  int m() const noexcept { return l - k; }
  int alpha_floor() const noexcept { return a2 / 2; }
  int alpha_ceil() const noexcept { return (a2 + 1) / 2; }

  void check() const {
    if (k < 1 || l <= k) throw std::invalid_argument("regime needs 1 <= k < l");
    if (a2 < 0 || a2 > 2 * k + 1) throw std::invalid_argument("regime needs 0 <= a2 <= 2k+1");
    if (a3 != 0 && a3 != 1) throw std::invalid_argument("regime needs a3 in {0,1}");
  }
};

/// The orbit map of the closed-by-above diagram, as a permutation of
/// Z_{l+1}. When a_2 > 0 and a_3 = 1 only the fixed point 0 -> 0 is known,
/// which already rules out cyclicity.
struct Theta {
  bool fixed_point = false;
  PermSpec spec;

  bool cyclic() const { return !fixed_point && is_cyclic(spec); }
};

inline Theta theta(const B3Regime& r) {
  r.check();
  const int size = r.l + 1;
  if (r.a2 == 0) return Theta{false, PermSpec::translation(size, r.m() + 1 - r.a3)};
  if (r.a3 == 1) return Theta{true, PermSpec::translation(size, 0)};
  if (r.a2 <= r.k + 1) {
    return Theta{false, PermSpec::translated_cut(size, r.alpha_ceil(), r.m(), r.k + 1 - r.a2)};
  }
  return Theta{false,
               PermSpec::translated_cut(size, r.k + 1 - r.alpha_floor(), r.a2 - r.k - 1, r.m())};
}

/// theta read off the closed-by-above diagram of (0,1,k,a2,l,a3,0): from
/// c_{2,2u+1} follow the curve left of L_2 back to L_2, then right of L_2
/// back to L_2 again, landing on c_{2,2v+1}; theta(u) = v.
inline std::vector<int> theta_from_diagram(const B3Regime& r) {
  r.check();
  const auto c = validate(3, {0, 1, r.k, r.a2, r.l, r.a3, 0});
  const ArcGraph g = build_arc_graph(c, true);
  std::vector<std::vector<int>> incident(static_cast<std::size_t>(g.node_count()));
  for (std::size_t e = 0; e < g.arcs.size(); ++e) {
    incident[static_cast<std::size_t>(g.arcs[e].u)].push_back(static_cast<int>(e));
    incident[static_cast<std::size_t>(g.arcs[e].v)].push_back(static_cast<int>(e));
  }
  auto other_end = [&](int arc, int from) {
    const Arc& x = g.arcs[static_cast<std::size_t>(arc)];
    return x.u == from ? x.v : x.u;
  };
  // leave node x on L_2 through its arc in `zone`, return the next L_2 node
  auto walk = [&](int x, int zone) {
    int arc = -1;
    for (int e : incident[static_cast<std::size_t>(x)]) {
      if (g.arcs[static_cast<std::size_t>(e)].zone == zone) arc = e;
    }
    if (arc < 0) throw std::logic_error("node without arc in zone");
    int cur = other_end(arc, x);
    while (g.nodes[static_cast<std::size_t>(cur)].line != 2) {
      const auto& inc = incident[static_cast<std::size_t>(cur)];
      const int next_arc = inc[0] == arc ? inc[1] : inc[0];
      arc = next_arc;
      cur = other_end(arc, cur);
    }
    return g.nodes[static_cast<std::size_t>(cur)].index;
  };
  std::vector<int> out(static_cast<std::size_t>(r.l + 1));
  for (int u = 0; u <= r.l; ++u) {
    const int w = walk(g.node(2, 2 * u + 1), 2);
    const int y = walk(g.node(2, w), 3);
    if (y % 2 == 0) throw std::logic_error("theta walk landed on an even point");
    out[static_cast<std::size_t>(u)] = (y - 1) / 2;
  }
  return out;
}

/// Closed-form actuality of (0, a1, k, a2, l, a3, 0).
inline bool b3_actual(int k, int l, int a1, int a2, int a3) {
  validate(3, {0, a1, k, a2, l, a3, 0});
  if (k == 0 && l == 0) return true;
  if (k == 0) return a2 != a3;
  if (l == 0) return a1 != a2;
  if (k == l) return a1 != a3;
  if (k > l) return b3_actual(l, k, a3, a2, a1);  // horizontal symmetry
  if (a1 == 0) {
    // vertical symmetry moves a_1 = 0 onto the a_1 = 1 branch
    return b3_actual(k, l, 1, 2 * k + 1 - a2, 1 - a3);
  }
  const int m = l - k;
  if (a2 == 0) {
    return a3 == 0 ? signed_gcd(k, m + 1) == 1 : signed_gcd(k + 1, m) == 1;
  }
  if (a3 == 1) return false;
  if (a2 <= k + 1) return signed_gcd(k - a2, m + 1) == 1;
  return signed_gcd(a2 - k, m - 1) == 1;
}

/// C_{k,l}: number of (a1,a2,a3) making (0,a1,k,a2,l,a3,0) actual.
inline std::int64_t c_pair(int k, int l) {
  if (k < 0 || l < 0) throw std::invalid_argument("c_pair needs k, l >= 0");
  if (k == 0 && l == 0) return 1;
  if (k == 0 || l == 0) return 2;
  if (k == l) return 2 * (2 * static_cast<std::int64_t>(k) + 1);
  const int lo = std::min(k, l);
  const int m = std::max(k, l) - lo;
  std::int64_t half = signed_gcd(lo + 1, m) == 1 ? 1 : 0;
  for (int a = 1; a <= lo; ++a) half += signed_gcd(a, m + 1) == 1 ? 1 : 0;
  for (int a = 1; a <= lo + 1; ++a) half += signed_gcd(a, m - 1) == 1 ? 1 : 0;
  return 2 * half;
}

}  // namespace braidcount

#endif  // BRAIDCOUNT_PERMCHECK_HPP

#ifndef BRAIDCOUNT_DIAGRAM_HPP
#define BRAIDCOUNT_DIAGRAM_HPP

// Reconstruction of the generalised curve diagram drawn from virtual
// coordinates, and the connectivity test deciding whether the coordinates
// belong to a braid.
//
// Node c_{i,j} (0 <= i <= n, 1 <= j <= 2 s_i + 1) has flat index
// base[i] + j - 1. When the diagram is closed by above, the extra point on
// L_i (1 <= i <= n-1), sitting above c_{i,2s_i+1}, gets index
// open_node_count + i - 1.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "braidcount/coords.hpp"

namespace braidcount {

enum class ArcRule { straight, left_box, right_box, cross, closure };

inline const char* to_string(ArcRule r) noexcept {
  switch (r) {
    case ArcRule::straight: return "straight";
    case ArcRule::left_box: return "left-box";
    case ArcRule::right_box: return "right-box";
    case ArcRule::cross: return "cross";
    case ArcRule::closure: return "closure";
  }
  return "?";
}

/// A point of the diagram on line L_line; index is 1-based from the bottom.
/// The closing point on L_i has index 2 s_i + 2.
struct NodeRef {
  int line = 0;
  int index = 1;
  friend bool operator==(const NodeRef&, const NodeRef&) = default;
};

namespace detail {

/// Calls emit(zone, NodeRef u, NodeRef v, ArcRule) for every arc of zone i,
/// in rule order 1..4. Returns the position (0-based, within the zone's
/// emission order) of the arc carrying puncture p_i.
template <typename Emit>
int emit_zone_arcs(int i, int left, int right, int a, Emit&& emit) {
  const int diff = left > right ? left - right : right - left;
  const int b = a + diff;
  int emitted = 0;
  int puncture = -1;
  for (int j = 1; j <= a; ++j, ++emitted) {
    emit(i, NodeRef{i - 1, j}, NodeRef{i, j}, ArcRule::straight);
  }
  if (left > right) {
    for (int j = a + 1; j <= b; ++j, ++emitted) {
      if (j == b) puncture = emitted;
      emit(i, NodeRef{i - 1, j}, NodeRef{i - 1, 2 * b + 1 - j}, ArcRule::left_box);
    }
  } else if (right > left) {
    for (int j = a + 1; j <= b; ++j, ++emitted) {
      if (j == b) puncture = emitted;
      emit(i, NodeRef{i, j}, NodeRef{i, 2 * b + 1 - j}, ArcRule::right_box);
    }
  }
  if (left >= right) {
    const int shift = 2 * (left - right);
    for (int k = a + 1; k <= 2 * right + 1; ++k, ++emitted) {
      if (left == right && k == a + 1) puncture = emitted;
      emit(i, NodeRef{i - 1, k + shift}, NodeRef{i, k}, ArcRule::cross);
    }
  } else {
    const int shift = 2 * (right - left);
    for (int j = a + 1; j <= 2 * left + 1; ++j, ++emitted) {
      emit(i, NodeRef{i - 1, j}, NodeRef{i, j + shift}, ArcRule::cross);
    }
  }
  return puncture;
}

}  // namespace detail

struct Arc {
  int u = 0;
  int v = 0;
  int zone = 1;
  ArcRule rule = ArcRule::straight;
};

struct ArcGraph {
  VirtualCoordinates coords;
  bool closed = false;
  std::vector<int> base;        // base[i] = flat index of c_{i,1}
  int open_node_count = 0;
  std::vector<NodeRef> nodes;   // flat index -> (line, index)
  std::vector<Arc> arcs;
  std::vector<int> punctures;   // punctures[i-1] = arc index carrying p_i

  int n() const noexcept { return coords.n(); }
  int node_count() const noexcept { return static_cast<int>(nodes.size()); }

  int node(int line, int index) const {
    const int s = coords.s(line);
    if (index == 2 * s + 2 && closed && line >= 1 && line <= n() - 1) {
      return open_node_count + line - 1;
    }
    return base[static_cast<std::size_t>(line)] + index - 1;
  }
  int node(NodeRef r) const { return node(r.line, r.index); }
};

/// Draws the diagram of c following the four linking rules and the three
/// puncture rules. With closed_by_above, adds the path
/// c_{0,1} - top_1 - ... - top_{n-1} - c_{n,1} above every other point.
inline ArcGraph build_arc_graph(const VirtualCoordinates& c, bool closed_by_above = false) {
  ArcGraph g;
  g.coords = c;
  g.closed = closed_by_above;
  const int n = c.n();
  g.base.resize(static_cast<std::size_t>(n + 1));
  int next = 0;
  for (int i = 0; i <= n; ++i) {
    g.base[static_cast<std::size_t>(i)] = next;
    for (int j = 1; j <= 2 * c.s(i) + 1; ++j) g.nodes.push_back(NodeRef{i, j});
    next += 2 * c.s(i) + 1;
  }
  g.open_node_count = next;
  if (closed_by_above) {
    for (int i = 1; i <= n - 1; ++i) g.nodes.push_back(NodeRef{i, 2 * c.s(i) + 2});
  }
  g.arcs.reserve(static_cast<std::size_t>(g.node_count()));
  g.punctures.resize(static_cast<std::size_t>(n), -1);
  for (int i = 1; i <= n; ++i) {
    const int first = static_cast<int>(g.arcs.size());
    const int p = detail::emit_zone_arcs(
        i, c.s(i - 1), c.s(i), c.a(i), [&](int zone, NodeRef u, NodeRef v, ArcRule rule) {
          g.arcs.push_back(Arc{g.node(u), g.node(v), zone, rule});
        });
    g.punctures[static_cast<std::size_t>(i - 1)] = first + p;
  }
  if (closed_by_above) {
    int prev = g.node(0, 1);
    for (int i = 1; i <= n - 1; ++i) {
      const int top = g.node(i, 2 * c.s(i) + 2);
      g.arcs.push_back(Arc{prev, top, i, ArcRule::closure});
      prev = top;
    }
    g.arcs.push_back(Arc{prev, g.node(n, 1), n, ArcRule::closure});
  }
  return g;
}

/// Disjoint sets over node indices; path halving and union by size.
class Partition {
 public:
  Partition() = default;
  explicit Partition(int size) { reset(size); }

  void reset(int size) {
    const auto sz = static_cast<std::size_t>(size);
    if (parent_.size() < sz) {
      parent_.resize(sz);
      size_.resize(sz);
    }
    std::iota(parent_.begin(), parent_.begin() + size, 0);
    std::fill(size_.begin(), size_.begin() + size, 1);
    components_ = size;
  }

  int find(int x) noexcept {
    auto* p = parent_.data();
    while (p[x] != x) {
      p[x] = p[p[x]];
      x = p[x];
    }
    return x;
  }

  /// Returns false when x and y were already in one class.
  bool unite(int x, int y) noexcept {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    if (size_[static_cast<std::size_t>(x)] < size_[static_cast<std::size_t>(y)]) std::swap(x, y);
    parent_[static_cast<std::size_t>(y)] = x;
    size_[static_cast<std::size_t>(x)] += size_[static_cast<std::size_t>(y)];
    --components_;
    return true;
  }

  int components() const noexcept { return components_; }

 private:
  std::vector<int> parent_;
  std::vector<int> size_;
  int components_ = 0;
};

/// Number of classes of the neighbour relation's closure, i.e. the number
/// of curves of the generalised diagram.
inline int component_count(const ArcGraph& g) {
  Partition part(g.node_count());
  for (const Arc& arc : g.arcs) part.unite(arc.u, arc.v);
  return part.components();
}

inline bool is_actual(const VirtualCoordinates& c) {
  return component_count(build_arc_graph(c)) == 1;
}

/// Every arc joining two consecutive points of one line must carry exactly
/// one puncture, and each zone must hold exactly one puncture.
inline bool tightness_check(const ArcGraph& g) {
  std::vector<int> load(g.arcs.size(), 0);
  for (std::size_t i = 0; i < g.punctures.size(); ++i) {
    const int arc = g.punctures[i];
    if (arc < 0 || static_cast<std::size_t>(arc) >= g.arcs.size()) return false;
    if (g.arcs[static_cast<std::size_t>(arc)].zone != static_cast<int>(i) + 1) return false;
    ++load[static_cast<std::size_t>(arc)];
  }
  for (std::size_t e = 0; e < g.arcs.size(); ++e) {
    if (load[e] > 1) return false;
    const Arc& arc = g.arcs[e];
    if (arc.rule == ArcRule::closure) {
      if (load[e] != 0) return false;
      continue;
    }
    const NodeRef u = g.nodes[static_cast<std::size_t>(arc.u)];
    const NodeRef v = g.nodes[static_cast<std::size_t>(arc.v)];
    const bool minimal_box = u.line == v.line && (u.index - v.index == 1 || v.index - u.index == 1);
    if (minimal_box && load[e] != 1) return false;
  }
  return true;
}

/// Open graphs: c_{0,1} and c_{n,1} have degree 1, every other node has one
/// arc on each side. Closed graphs: every node has degree 2.
inline bool degree_check(const ArcGraph& g) {
  const int n = g.n();
  std::vector<int> left(static_cast<std::size_t>(g.node_count()), 0);
  std::vector<int> right(static_cast<std::size_t>(g.node_count()), 0);
  for (const Arc& arc : g.arcs) {
    for (int end : {arc.u, arc.v}) {
      const int line = g.nodes[static_cast<std::size_t>(end)].line;
      // zone i lies right of L_{i-1} and left of L_i
      if (arc.zone == line) {
        ++left[static_cast<std::size_t>(end)];
      } else if (arc.zone == line + 1) {
        ++right[static_cast<std::size_t>(end)];
      } else {
        return false;
      }
    }
  }
  for (int x = 0; x < g.node_count(); ++x) {
    const NodeRef r = g.nodes[static_cast<std::size_t>(x)];
    const int l = left[static_cast<std::size_t>(x)];
    const int rr = right[static_cast<std::size_t>(x)];
    if (r.line == 0) {
      if (l != 0 || rr != (g.closed ? 2 : 1)) return false;
    } else if (r.line == n) {
      if (rr != 0 || l != (g.closed ? 2 : 1)) return false;
    } else if (l != 1 || rr != 1) {
      return false;
    }
  }
  return true;
}

/// Position of a zone-i endpoint along the boundary of the zone, walking up
/// L_{i-1} and then down L_i.
inline int zone_boundary_position(const ArcGraph& g, int zone, NodeRef r) {
  const int left_points = 2 * g.coords.s(zone - 1) + 2;
  const int right_points = 2 * g.coords.s(zone) + 2;
  if (r.line == zone - 1) return r.index;
  return left_points + (right_points + 1 - r.index);
}

/// No two arcs of one zone interleave along the zone boundary.
inline bool non_interleaving(const ArcGraph& g) {
  for (int zone = 1; zone <= g.n(); ++zone) {
    std::vector<std::pair<int, int>> chords;
    for (const Arc& arc : g.arcs) {
      if (arc.zone != zone) continue;
      NodeRef ru = g.nodes[static_cast<std::size_t>(arc.u)];
      NodeRef rv = g.nodes[static_cast<std::size_t>(arc.v)];
      // the closing path leaves the outer endpoints from above
      if (arc.rule == ArcRule::closure) {
        for (NodeRef* r : {&ru, &rv}) {
          if (r->line == 0 || r->line == g.n()) r->index = 2;
        }
      }
      int p = zone_boundary_position(g, zone, ru);
      int q = zone_boundary_position(g, zone, rv);
      if (p > q) std::swap(p, q);
      chords.emplace_back(p, q);
    }
    std::sort(chords.begin(), chords.end());
    // chords sorted by left end must nest or be disjoint: stack check
    std::vector<int> open_ends;
    for (const auto& [p, q] : chords) {
      while (!open_ends.empty() && open_ends.back() <= p) open_ends.pop_back();
      if (!open_ends.empty() && q > open_ends.back()) return false;
      open_ends.push_back(q);
    }
  }
  return true;
}

/// Connectivity test used by the census: no graph is materialised and the
/// union-find arena is reused between calls. An open diagram has one arc
/// fewer than points, so it is connected iff no arc closes a cycle.
class ActualityKernel {
 public:
  bool is_actual(std::span<const int> s, std::span<const int> a) {
    const int n = static_cast<int>(a.size());
    base_.resize(static_cast<std::size_t>(n + 1));
    int total = 0;
    for (int i = 0; i <= n; ++i) {
      base_[static_cast<std::size_t>(i)] = total;
      total += 2 * s[static_cast<std::size_t>(i)] + 1;
    }
    part_.reset(total);
    bool ok = true;
    for (int i = 1; i <= n && ok; ++i) {
      detail::emit_zone_arcs(i, s[static_cast<std::size_t>(i - 1)], s[static_cast<std::size_t>(i)],
                             a[static_cast<std::size_t>(i - 1)],
                             [&](int, NodeRef u, NodeRef v, ArcRule) {
                               if (ok && !part_.unite(index(u), index(v))) ok = false;
                             });
    }
    return ok;
  }

  bool is_actual(const VirtualCoordinates& c) { return is_actual(c.s(), c.a()); }

 private:
  int index(NodeRef r) const noexcept { return base_[static_cast<std::size_t>(r.line)] + r.index - 1; }

  std::vector<int> base_;
  Partition part_;
};

}  // namespace braidcount

#endif  // BRAIDCOUNT_DIAGRAM_HPP

#ifndef BRAIDCOUNT_COORDS_HPP
#define BRAIDCOUNT_COORDS_HPP

// Integer coordinates of tight generalised curve diagrams.
//
// A diagram on n punctures is described by the tuple
//   (s_0, a_1, s_1, a_2, ..., a_n, s_n)
// where 2 s_i + 1 is the number of points where the diagram meets the
// vertical line L_i, and a_i locates the diagram inside the zone between
// L_{i-1} and L_i. Tuples obeying the range constraints below are called
// virtual coordinates; those whose diagram is connected are actual
// coordinates, i.e. coordinates of a braid.

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace braidcount {

/// Thrown by validate()/parse_coordinates(). index() is the offending
/// position in the flat tuple (s_0, a_1, s_1, ...), or -1 for shape errors.
class CoordinateError : public std::invalid_argument {
 public:
  CoordinateError(const std::string& what, int index)
      : std::invalid_argument(what), index_(index) {}
  int index() const noexcept { return index_; }

 private:
  int index_;
};

/// Largest admissible a_i given the neighbouring half-counts.
constexpr int a_max(int s_left, int s_right) noexcept {
  return 2 * std::min(s_left, s_right) + (s_left != s_right ? 1 : 0);
}

class VirtualCoordinates {
 public:
  VirtualCoordinates() = default;

  int n() const noexcept { return static_cast<int>(a_.size()); }
  /// s_0 ... s_n
  const std::vector<int>& s() const noexcept { return s_; }
  /// a_1 ... a_n, stored zero-based: a()[i-1] is a_i.
  const std::vector<int>& a() const noexcept { return a_; }

  int s(int i) const { return s_[static_cast<std::size_t>(i)]; }
  int a(int i) const { return a_[static_cast<std::size_t>(i - 1)]; }

  /// Sum of the interior half-counts s_1 + ... + s_{n-1}.
  int k() const noexcept { return std::accumulate(s_.begin(), s_.end(), 0); }

  /// Flat tuple (s_0, a_1, s_1, ..., a_n, s_n).
  std::vector<int> flat() const {
    std::vector<int> out;
    out.reserve(2 * a_.size() + 1);
    out.push_back(s_.front());
    for (std::size_t i = 0; i < a_.size(); ++i) {
      out.push_back(a_[i]);
      out.push_back(s_[i + 1]);
    }
    return out;
  }

  std::string to_string() const {
    std::string out = "(";
    bool first = true;
    for (int v : flat()) {
      if (!first) out += ',';
      out += std::to_string(v);
      first = false;
    }
    return out + ")";
  }

  friend bool operator==(const VirtualCoordinates&,
                         const VirtualCoordinates&) = default;

 private:
  VirtualCoordinates(std::vector<int> s, std::vector<int> a)
      : s_(std::move(s)), a_(std::move(a)) {}

  friend VirtualCoordinates validate(int n, const std::vector<int>& raw);
  friend VirtualCoordinates make_unchecked(std::vector<int> s,
                                           std::vector<int> a);

  std::vector<int> s_{0, 0};
  std::vector<int> a_{0};
};

/// Checks the shape and the range constraints
///   s_0 = s_n = 0,  0 <= a_i <= 2 min(s_{i-1}, s_i) + [s_{i-1} != s_i].
inline VirtualCoordinates validate(int n, const std::vector<int>& raw) {
  if (n < 1) throw CoordinateError("strand count must be >= 1", -1);
  const auto expected = static_cast<std::size_t>(2 * n + 1);
  if (raw.size() != expected) {
    throw CoordinateError("expected " + std::to_string(expected) +
                              " entries for n=" + std::to_string(n) +
                              ", got " + std::to_string(raw.size()),
                          -1);
  }
  for (std::size_t p = 0; p < raw.size(); ++p) {
    if (raw[p] < 0) {
      throw CoordinateError("negative entry at position " + std::to_string(p),
                            static_cast<int>(p));
    }
  }
  if (raw.front() != 0) throw CoordinateError("s_0 must be 0", 0);
  if (raw.back() != 0) {
    throw CoordinateError("s_" + std::to_string(n) + " must be 0",
                          static_cast<int>(raw.size() - 1));
  }
  std::vector<int> s(static_cast<std::size_t>(n + 1));
  std::vector<int> a(static_cast<std::size_t>(n));
  for (int i = 0; i <= n; ++i) s[static_cast<std::size_t>(i)] = raw[2 * static_cast<std::size_t>(i)];
  for (int i = 1; i <= n; ++i) {
    const int pos = 2 * i - 1;
    const int v = raw[static_cast<std::size_t>(pos)];
    const int hi = a_max(s[static_cast<std::size_t>(i - 1)], s[static_cast<std::size_t>(i)]);
    if (v > hi) {
      throw CoordinateError("a_" + std::to_string(i) + "=" + std::to_string(v) +
                                " out of range [0," + std::to_string(hi) + "]",
                            pos);
    }
    a[static_cast<std::size_t>(i - 1)] = v;
  }
  return VirtualCoordinates(std::move(s), std::move(a));
}

/// Builds coordinates from already-checked vectors (enumeration hot paths).
inline VirtualCoordinates make_unchecked(std::vector<int> s, std::vector<int> a) {
  return VirtualCoordinates(std::move(s), std::move(a));
}

/// Parses "(0,0,2,3,1,0,0)"; whitespace is ignored, parentheses optional.
inline std::vector<int> parse_tuple(std::string_view text) {
  std::string compact;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) compact += ch;
  }
  if (!compact.empty() && compact.front() == '(') {
    if (compact.back() != ')') throw CoordinateError("unbalanced parenthesis", -1);
    compact = compact.substr(1, compact.size() - 2);
  }
  std::vector<int> out;
  if (compact.empty()) throw CoordinateError("empty coordinate tuple", -1);
  std::size_t pos = 0;
  while (pos <= compact.size()) {
    const std::size_t comma = compact.find(',', pos);
    const std::string item =
        compact.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (item.empty()) throw CoordinateError("empty entry in tuple", static_cast<int>(out.size()));
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(item, &used);
    } catch (const std::exception&) {
      throw CoordinateError("not an integer: '" + item + "'", static_cast<int>(out.size()));
    }
    if (used != item.size() || v > 1'000'000'000LL || v < -1'000'000'000LL) {
      throw CoordinateError("not an integer: '" + item + "'", static_cast<int>(out.size()));
    }
    out.push_back(static_cast<int>(v));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

/// Parses and validates; n is inferred from the tuple length.
inline VirtualCoordinates parse_coordinates(std::string_view text) {
  const auto raw = parse_tuple(text);
  if (raw.size() % 2 == 0) {
    throw CoordinateError("tuple length must be odd (2n+1)", -1);
  }
  return validate(static_cast<int>(raw.size() / 2), raw);
}

/// Diagrammatic norm n - 1 + 2 (s_1 + ... + s_{n-1}).
inline int norm(const VirtualCoordinates& c) noexcept { return c.n() - 1 + 2 * c.k(); }

/// Horizontal symmetry: reverse the tuple.
inline VirtualCoordinates sym_h(const VirtualCoordinates& c) {
  std::vector<int> s(c.s().rbegin(), c.s().rend());
  std::vector<int> a(c.a().rbegin(), c.a().rend());
  return make_unchecked(std::move(s), std::move(a));
}

/// Vertical symmetry: reflect each a_i inside its admissible range.
inline VirtualCoordinates sym_v(const VirtualCoordinates& c) {
  std::vector<int> s = c.s();
  std::vector<int> a = c.a();
  for (int i = 1; i <= c.n(); ++i) {
    auto& ai = a[static_cast<std::size_t>(i - 1)];
    ai = a_max(c.s(i - 1), c.s(i)) - ai;
  }
  return make_unchecked(std::move(s), std::move(a));
}

/// Central symmetry, sym_h o sym_v.
inline VirtualCoordinates sym_c(const VirtualCoordinates& c) { return sym_h(sym_v(c)); }

/// Interior half-counts (s_1, ..., s_{n-1}) of one diagram; the unit of
/// work of the census.
struct SVector {
  int n = 1;
  std::vector<int> s;
  int k = 0;

  /// Full (s_0, ..., s_n) with the zero boundary values.
  std::vector<int> full() const {
    std::vector<int> out;
    out.reserve(s.size() + 2);
    out.push_back(0);
    out.insert(out.end(), s.begin(), s.end());
    out.push_back(0);
    return out;
  }

  friend bool operator==(const SVector&, const SVector&) = default;
};

inline SVector make_s_vector(int n, std::vector<int> interior) {
  if (n < 1) throw std::invalid_argument("strand count must be >= 1");
  if (interior.size() != static_cast<std::size_t>(n - 1)) {
    throw std::invalid_argument("s-vector for n=" + std::to_string(n) + " needs " +
                                std::to_string(n - 1) + " entries");
  }
  int k = 0;
  for (int v : interior) {
    if (v < 0) throw std::invalid_argument("s-vector entries must be >= 0");
    k += v;
  }
  return SVector{n, std::move(interior), k};
}

/// Number of compositions of k into n-1 non-negative parts.
inline std::uint64_t s_vector_count(int n, int k) {
  if (n < 1 || k < 0) return 0;
  if (n == 1) return k == 0 ? 1 : 0;
  // binom(k + n - 2, n - 2), exact by the multiplicative formula
  const std::uint64_t r = static_cast<std::uint64_t>(n - 2);
  std::uint64_t out = 1;
  for (std::uint64_t i = 1; i <= r; ++i) {
    out = out * (static_cast<std::uint64_t>(k) + i) / i;
  }
  return out;
}

/// Lexicographic stream over the compositions of k into n-1 parts:
/// (0,..,0,k) first, (k,0,..,0) last.
class SVectorStream {
 public:
  SVectorStream(int n, int k) : n_(n), k_(k) {
    if (n < 1 || k < 0) {
      done_ = true;
      return;
    }
    if (n == 1) {
      done_ = k != 0;
      return;
    }
    cur_.assign(static_cast<std::size_t>(n - 1), 0);
    cur_.back() = k;
  }

  bool done() const noexcept { return done_; }
  const std::vector<int>& current() const noexcept { return cur_; }
  SVector value() const { return SVector{n_, cur_, k_}; }

  void advance() {
    if (done_) return;
    const std::size_t last = cur_.size();
    if (last <= 1) {
      done_ = true;
      return;
    }
    // rightmost i < last-1 with a positive entry somewhere to its right
    std::size_t i = last - 1;
    int suffix = 0;
    while (i > 0) {
      suffix += cur_[i];
      --i;
      if (suffix > 0) break;
    }
    if (suffix == 0) {
      done_ = true;
      return;
    }
    ++cur_[i];
    for (std::size_t j = i + 1; j < last; ++j) cur_[j] = 0;
    cur_[last - 1] = suffix - 1;
  }

 private:
  int n_;
  int k_;
  std::vector<int> cur_;
  bool done_ = false;
};

inline std::vector<SVector> enumerate_s_vectors(int n, int k) {
  std::vector<SVector> out;
  for (SVectorStream it(n, k); !it.done(); it.advance()) out.push_back(it.value());
  return out;
}

/// Odometer over every admissible a-tuple for fixed s; the last index
/// (a_n) varies fastest.
class ATupleOdometer {
 public:
  explicit ATupleOdometer(const SVector& sv) : s_(sv.full()) {
    const int n = sv.n;
    hi_.resize(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
      hi_[static_cast<std::size_t>(i - 1)] =
          a_max(s_[static_cast<std::size_t>(i - 1)], s_[static_cast<std::size_t>(i)]);
    }
    a_.assign(static_cast<std::size_t>(n), 0);
  }

  bool done() const noexcept { return done_; }
  const std::vector<int>& s() const noexcept { return s_; }
  const std::vector<int>& a() const noexcept { return a_; }
  const std::vector<int>& upper() const noexcept { return hi_; }
  VirtualCoordinates value() const { return make_unchecked(s_, a_); }

  /// Product of the range sizes.
  std::uint64_t size() const {
    std::uint64_t out = 1;
    for (int h : hi_) out *= static_cast<std::uint64_t>(h + 1);
    return out;
  }

  void advance() noexcept {
    for (std::size_t p = a_.size(); p-- > 0;) {
      if (a_[p] < hi_[p]) {
        ++a_[p];
        return;
      }
      a_[p] = 0;
    }
    done_ = true;
  }

 private:
  std::vector<int> s_;
  std::vector<int> hi_;
  std::vector<int> a_;
  bool done_ = false;
};

inline std::vector<VirtualCoordinates> enumerate_a_tuples(const SVector& sv) {
  std::vector<VirtualCoordinates> out;
  for (ATupleOdometer it(sv); !it.done(); it.advance()) out.push_back(it.value());
  return out;
}

}  // namespace braidcount

#endif  // BRAIDCOUNT_COORDS_HPP

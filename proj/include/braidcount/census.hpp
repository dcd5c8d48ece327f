#ifndef BRAIDCOUNT_CENSUS_HPP
#define BRAIDCOUNT_CENSUS_HPP

// Exhaustive count of g_{n,k}: the number of actual coordinate tuples with
// s_1 + ... + s_{n-1} = k. Work is split by s-vector; each worker walks the
// a-tuples of its s-vector with an odometer and a reusable union-find arena.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include <json.hpp>

#include "braidcount/checked.hpp"
#include "braidcount/coords.hpp"
#include "braidcount/diagram.hpp"

namespace braidcount {

inline constexpr const char* engine_version = "braidcount-census/1";

enum class CensusMode { plain, pruned };

inline const char* to_string(CensusMode m) noexcept {
  return m == CensusMode::pruned ? "pruned" : "plain";
}

inline CensusMode census_mode_from_string(const std::string& s) {
  if (s == "plain") return CensusMode::plain;
  if (s == "pruned") return CensusMode::pruned;
  throw std::invalid_argument("unknown census mode '" + s + "'");
}

struct CensusRecord {
  int n = 1;
  int k = 0;
  std::int64_t g = 0;
  CensusMode mode = CensusMode::plain;
  double elapsed_ms = 0.0;
  std::string engine = engine_version;
  std::int64_t tuples_examined = 0;
  bool from_cache = false;
};

inline nlohmann::ordered_json to_json(const CensusRecord& r) {
  nlohmann::ordered_json j;
  j["n"] = r.n;
  j["k"] = r.k;
  j["g"] = r.g;
  j["mode"] = to_string(r.mode);
  j["engine_version"] = r.engine;
  j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

inline CensusRecord record_from_json(const nlohmann::json& j) {
  CensusRecord r;
  r.n = j.at("n").get<int>();
  r.k = j.at("k").get<int>();
  r.g = j.at("g").get<std::int64_t>();
  r.mode = census_mode_from_string(j.at("mode").get<std::string>());
  r.engine = j.at("engine_version").get<std::string>();
  r.elapsed_ms = j.at("elapsed_ms").get<double>();
  if (r.n < 1 || r.k < 0 || r.g < 0) throw std::invalid_argument("malformed census record");
  return r;
}

class CacheConflict : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Append-only JSON-lines store of census results keyed by (n, k).
class CensusCache {
 public:
  CensusCache() = default;

  /// Loads path if it exists; later store() calls append to it.
  explicit CensusCache(std::string path) : path_(std::move(path)) {
    std::ifstream in(path_);
    if (!in) return;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      CensusRecord r;
      try {
        r = record_from_json(nlohmann::json::parse(line));
      } catch (const std::exception& e) {
        throw std::runtime_error(path_ + ":" + std::to_string(lineno) + ": " + e.what());
      }
      insert(r);
    }
  }

  const std::string& path() const noexcept { return path_; }
  std::size_t size() const noexcept { return records_.size(); }

  std::optional<CensusRecord> find(int n, int k) const {
    const auto it = records_.find({n, k});
    if (it == records_.end()) return std::nullopt;
    return it->second;
  }

  /// Records r, appending it to the backing file when it is new. A stored
  /// value different from r.g is a CacheConflict.
  void store(const CensusRecord& r) {
    if (insert(r) && !path_.empty()) {
      std::ofstream out(path_, std::ios::app);
      if (!out) throw std::runtime_error("cannot write cache file " + path_);
      out << to_json(r).dump() << '\n';
    }
  }

  /// Stores every record of other; returns the number of new records.
  std::size_t merge(const CensusCache& other) {
    std::size_t added = 0;
    for (const auto& [key, r] : other.records_) {
      const bool fresh = !records_.contains(key);
      store(r);
      added += fresh ? 1 : 0;
    }
    return added;
  }

  std::vector<CensusRecord> records() const {
    std::vector<CensusRecord> out;
    for (const auto& [key, r] : records_) out.push_back(r);
    return out;
  }

 private:
  bool insert(const CensusRecord& r) {
    const auto [it, fresh] = records_.emplace(std::make_pair(r.n, r.k), r);
    if (!fresh && it->second.g != r.g) {
      throw CacheConflict("cache conflict for (n=" + std::to_string(r.n) + ", k=" +
                          std::to_string(r.k) + "): stored g=" + std::to_string(it->second.g) +
                          ", new g=" + std::to_string(r.g));
    }
    return fresh;
  }

  std::string path_;
  std::map<std::pair<int, int>, CensusRecord> records_;
};

struct CensusProgress {
  int n = 0;
  int k = 0;
  std::size_t done = 0;
  std::size_t total = 0;
  const SVector* s_vector = nullptr;
  std::int64_t count = 0;
};

struct CensusOptions {
  int threads = 0;  // 0: CENSUS_THREADS, else hardware concurrency
  bool pruning = false;
  CensusCache* cache = nullptr;
  std::function<void(const CensusProgress&)> progress;
};

/// CLI value if given, else CENSUS_THREADS, else the hardware concurrency.
inline int resolve_threads(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("CENSUS_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0 && v <= 4096) return static_cast<int>(v);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

struct SVectorCount {
  std::int64_t count = 0;
  std::int64_t examined = 0;
};

/// Counts the actual a-tuples of one s-vector. With pruning, only one
/// tuple of each vertical-symmetry pair is tested.
inline SVectorCount count_for_s_vector(const SVector& sv, ActualityKernel& kernel, bool pruning = false) {
  SVectorCount out;
  std::vector<int> mirror(static_cast<std::size_t>(sv.n));
  for (ATupleOdometer it(sv); !it.done(); it.advance()) {
    std::int64_t weight = 1;
    if (pruning) {
      const auto& a = it.a();
      const auto& hi = it.upper();
      for (std::size_t p = 0; p < a.size(); ++p) mirror[p] = hi[p] - a[p];
      const auto cmp = std::lexicographical_compare_three_way(a.begin(), a.end(), mirror.begin(),
                                                              mirror.end());
      if (cmp > 0) continue;
      weight = cmp == 0 ? 1 : 2;
    }
    ++out.examined;
    if (kernel.is_actual(it.s(), it.a())) out.count = checked_add(out.count, weight);
  }
  return out;
}

inline std::int64_t count_for_s_vector(const SVector& sv, bool pruning = false) {
  ActualityKernel kernel;
  return count_for_s_vector(sv, kernel, pruning).count;
}

/// Exact g_{n,k}. The result does not depend on the thread count: each
/// s-vector's count lands in its own slot and the slots are summed in order.
inline CensusRecord count_actual(int n, int k, const CensusOptions& options = {}) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (k < 0) throw std::invalid_argument("k must be >= 0");
  const CensusMode mode = options.pruning ? CensusMode::pruned : CensusMode::plain;
  if (options.cache) {
    if (auto hit = options.cache->find(n, k)) {
      hit->from_cache = true;
      return *hit;
    }
  }
  const auto start = std::chrono::steady_clock::now();

  std::vector<SVector> work;
  std::vector<std::int64_t> weight;
  for (SVectorStream it(n, k); !it.done(); it.advance()) {
    const auto& s = it.current();
    std::int64_t w = 1;
    if (options.pruning) {
      const auto cmp = std::lexicographical_compare_three_way(s.begin(), s.end(), s.rbegin(), s.rend());
      if (cmp > 0) continue;
      w = cmp == 0 ? 1 : 2;
    }
    work.push_back(it.value());
    weight.push_back(w);
  }

  std::vector<SVectorCount> results(work.size());
  const int threads = std::max(1, std::min<int>(resolve_threads(options.threads),
                                                static_cast<int>(std::max<std::size_t>(work.size(), 1))));
  std::atomic<std::size_t> next{0};
  std::size_t done = 0;
  std::mutex progress_mutex;
  std::exception_ptr failure;
  auto worker = [&] {
    ActualityKernel kernel;
    try {
      for (std::size_t idx = next++; idx < work.size(); idx = next++) {
        results[idx] = count_for_s_vector(work[idx], kernel, options.pruning);
        if (options.progress) {
          std::lock_guard lock(progress_mutex);
          options.progress(CensusProgress{n, k, ++done, work.size(), &work[idx], results[idx].count});
        }
      }
    } catch (...) {
      std::lock_guard lock(progress_mutex);
      if (!failure) failure = std::current_exception();
      next = work.size();
    }
  };
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);

  CensusRecord rec;
  rec.n = n;
  rec.k = k;
  rec.mode = mode;
  for (std::size_t i = 0; i < results.size(); ++i) {
    rec.g = checked_add(rec.g, checked_mul(weight[i], results[i].count));
    rec.tuples_examined = checked_add(rec.tuples_examined, results[i].examined);
  }
  rec.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  if (options.cache) options.cache->store(rec);
  return rec;
}

inline std::vector<CensusRecord> count_table(int n, int kmax, const CensusOptions& options = {}) {
  if (kmax < 0) throw std::invalid_argument("kmax must be >= 0");
  std::vector<CensusRecord> out;
  out.reserve(static_cast<std::size_t>(kmax + 1));
  for (int k = 0; k <= kmax; ++k) out.push_back(count_actual(n, k, options));
  return out;
}

}  // namespace braidcount

#endif  // BRAIDCOUNT_CENSUS_HPP

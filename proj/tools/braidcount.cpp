// braidcount: command-line front end.
// Exit status: 0 success, 1 failed verification or runtime error, 2 usage error.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "braidcount/braidcount.hpp"

using namespace braidcount;
using ojson = nlohmann::ordered_json;

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void print_json(const ojson& j) { std::cout << j.dump(2) << '\n'; }

std::string csv_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

ojson record_json(const CensusRecord& r) {
  ojson j = to_json(r);
  j["tuples_examined"] = r.tuples_examined;
  j["from_cache"] = r.from_cache;
  return j;
}

// Progress lines on stderr, at most one per second plus the final one.
std::function<void(const CensusProgress&)> progress_printer(bool quiet) {
  if (quiet) return {};
  auto last = std::make_shared<std::chrono::steady_clock::time_point>();
  return [last](const CensusProgress& p) {
    const auto now = std::chrono::steady_clock::now();
    if (p.done != p.total && now - *last < std::chrono::seconds(1)) return;
    *last = now;
    std::string s;
    for (int v : p.s_vector->s) s += (s.empty() ? "" : ",") + std::to_string(v);
    std::fprintf(stderr, "[n=%d k=%d] %zu/%zu s-vectors, last (%s) -> %lld\n", p.n, p.k, p.done,
                 p.total, s.c_str(), static_cast<long long>(p.count));
  };
}

struct CensusFlags {
  int threads = 0;
  bool prune = false;
  std::string cache;
  bool quiet = false;
};

void add_census_flags(CLI::App* app, CensusFlags& f) {
  app->add_option("--threads", f.threads, "worker threads (default: CENSUS_THREADS or hardware)")
      ->check(CLI::NonNegativeNumber);
  app->add_flag("--prune", f.prune, "evaluate one tuple per symmetry pair");
  app->add_option("--cache", f.cache, "JSON-lines result cache");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Counts braids by geometric norm from integer diagram coordinates"};
  app.require_subcommand(1);

  int n = 0, k = 0, kmax = 0;
  std::string format = "json";
  CensusFlags cf;

  auto* count = app.add_subcommand("count", "exact g_{n,k}");
  count->add_option("--n", n, "strands")->required()->check(CLI::PositiveNumber);
  count->add_option("--k", k, "norm index")->required()->check(CLI::NonNegativeNumber);
  add_census_flags(count, cf);

  auto* table = app.add_subcommand("table", "g_{n,k} for 0 <= k <= kmax");
  table->add_option("--n", n, "strands")->required()->check(CLI::PositiveNumber);
  table->add_option("--kmax", kmax, "largest k")->required()->check(CLI::NonNegativeNumber);
  table->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
  table->add_flag("--quiet", cf.quiet, "no progress on stderr");
  add_census_flags(table, cf);

  std::string suite;
  VerifyOptions vo;
  int vkmax = -1;
  auto* verify = app.add_subcommand("verify", "run a self-check suite");
  std::vector<std::string> suite_names = verify_suites();
  suite_names.push_back("all");
  verify->add_option("--suite", suite, "suite name or 'all'")->required()->check(CLI::IsMember(suite_names));
  verify->add_option("--kmax", vkmax, "size bound of the suite")->check(CLI::NonNegativeNumber);
  verify->add_option("--threads", vo.threads)->check(CLI::NonNegativeNumber);
  verify->add_option("--seed", vo.seed, "fuzzing seed");
  verify->add_option("--samples", vo.fuzz_samples, "fuzzed cases per property")->check(CLI::PositiveNumber);

  std::string coords_text, out_path;
  bool closed = false;
  auto* render = app.add_subcommand("render", "write an SVG drawing of a diagram");
  render->add_option("--coords", coords_text, "tuple such as \"(0,0,2,3,1,0,0)\"")->required();
  render->add_flag("--closed", closed, "close the diagram by above");
  render->add_option("--out", out_path, "output file")->required();

  bool with_census = false;
  auto* bounds = app.add_subcommand("bounds", "lower and upper bounds on g_{n,k}");
  bounds->add_option("--n", n, "strands")->required()->check(CLI::Range(2, 1000));
  bounds->add_option("--kmax", kmax, "largest k")->required()->check(CLI::NonNegativeNumber);
  bounds->add_flag("--with-census", with_census, "also count and check the sandwich");
  bounds->add_option("--threads", cf.threads)->check(CLI::NonNegativeNumber);

  std::string source = "census";
  int rho = 0;
  auto* ratios = app.add_subcommand("ratios", "normalised growth ratios");
  ratios->add_option("--n", n, "strands")->required()->check(CLI::Range(2, 1000));
  ratios->add_option("--kmax", kmax, "largest k")->required()->check(CLI::NonNegativeNumber);
  ratios->add_option("--source", source)->check(CLI::IsMember({"census", "closedform"}));
  ratios->add_option("--rho", rho, "residue modulus")->check(CLI::PositiveNumber);
  ratios->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
  ratios->add_option("--threads", cf.threads)->check(CLI::NonNegativeNumber);

  std::string cache_path, merge_from;
  auto* cache = app.add_subcommand("cache", "inspect or merge result caches");
  cache->require_subcommand(1);
  auto* show = cache->add_subcommand("show", "print cached records");
  show->add_option("--path", cache_path)->required();
  show->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
  auto* merge = cache->add_subcommand("merge", "append records of another cache");
  merge->add_option("--path", cache_path, "destination cache")->required();
  merge->add_option("--from", merge_from, "source cache")->required()->check(CLI::ExistingFile);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    CensusOptions co;
    co.threads = cf.threads;
    co.pruning = cf.prune;
    std::optional<CensusCache> store;
    if (!cf.cache.empty()) {
      store.emplace(cf.cache);
      co.cache = &*store;
    }

    if (*count) {
      print_json(record_json(count_actual(n, k, co)));
      return 0;
    }

    if (*table) {
      co.progress = progress_printer(cf.quiet);
      const auto rows = count_table(n, kmax, co);
      if (format == "csv") {
        std::cout << "n,k,g\n";
        for (const auto& r : rows) std::cout << r.n << ',' << r.k << ',' << r.g << '\n';
      } else {
        ojson arr = ojson::array();
        for (const auto& r : rows) arr.push_back(record_json(r));
        print_json(arr);
      }
      return 0;
    }

    if (*verify) {
      if (vkmax >= 0) vo.kmax = vkmax;
      std::vector<std::string> run = suite == "all" ? verify_suites() : std::vector<std::string>{suite};
      bool ok = true;
      ojson arr = ojson::array();
      for (const auto& name : run) {
        const VerifyReport r = run_verify_suite(name, vo);
        ok = ok && r.passed;
        ojson j;
        j["suite"] = r.suite;
        j["passed"] = r.passed;
        j["checks"] = r.checks;
        j["counterexample"] = r.passed ? ojson(nullptr) : ojson(r.counterexample);
        arr.push_back(j);
      }
      print_json(run.size() == 1 ? arr[0] : arr);
      return ok ? 0 : kExitFailure;
    }

    if (*render) {
      VirtualCoordinates c;
      try {
        c = parse_coordinates(coords_text);
      } catch (const CoordinateError& e) {
        throw UsageError(std::string("invalid coordinates: ") + e.what());
      }
      SvgOptions so;
      so.closed = closed;
      const std::string svg = render_svg(c, so);
      std::ofstream out(out_path, std::ios::binary);
      if (!out || !(out << svg)) throw std::runtime_error("cannot write " + out_path);
      ojson j;
      j["coords"] = c.to_string();
      j["closed"] = closed;
      j["out"] = out_path;
      j["bytes"] = svg.size();
      j["components"] = component_count(build_arc_graph(c));
      print_json(j);
      return 0;
    }

    if (*bounds) {
      bool ok = true;
      ojson arr = ojson::array();
      for (int kk = 0; kk <= kmax; ++kk) {
        std::optional<std::int64_t> g;
        if (with_census) g = count_actual(n, kk, co).g;
        const BoundReport b = bound_report(n, kk, g);
        ok = ok && b.verdict() != "violated";
        ojson j;
        j["n"] = b.n;
        j["k"] = b.k;
        j["lower"] = b.lower;
        j["g"] = b.g ? ojson(*b.g) : ojson(nullptr);
        j["upper"] = b.upper.to_string();
        j["upper_approx"] = b.upper.to_double();
        j["verdict"] = b.verdict();
        arr.push_back(j);
      }
      print_json(arr);
      return ok ? 0 : kExitFailure;
    }

    if (*ratios) {
      const auto src = source == "closedform" ? RatioSource::closedform : RatioSource::census;
      if (src == RatioSource::closedform && n > 3) {
        throw UsageError("--source closedform needs n = 2 or n = 3");
      }
      const auto pts = ratio_series(n, kmax, src, rho, co);
      if (format == "csv") {
        std::cout << "n,k,g,ratio_k,ratio_shift,residue\n";
        for (const auto& p : pts) {
          std::cout << p.n << ',' << p.k << ',' << p.g << ',' << csv_double(p.ratio_k) << ','
                    << csv_double(p.ratio_shift) << ',' << p.residue << '\n';
        }
      } else {
        ojson arr = ojson::array();
        for (const auto& p : pts) {
          ojson j;
          j["n"] = p.n;
          j["k"] = p.k;
          j["g"] = p.g;
          j["ratio_k"] = p.ratio_k;
          j["ratio_shift"] = p.ratio_shift;
          j["residue"] = p.residue;
          if (p.normalized) j["normalized"] = *p.normalized;
          arr.push_back(j);
        }
        print_json(arr);
      }
      return 0;
    }

    if (*show) {
      const CensusCache c(cache_path);
      if (format == "csv") {
        std::cout << "n,k,g\n";
        for (const auto& r : c.records()) std::cout << r.n << ',' << r.k << ',' << r.g << '\n';
      } else {
        ojson arr = ojson::array();
        for (const auto& r : c.records()) arr.push_back(to_json(r));
        print_json(arr);
      }
      return 0;
    }

    if (*merge) {
      CensusCache dst(cache_path);
      const CensusCache src(merge_from);
      const std::size_t added = dst.merge(src);
      ojson j;
      j["path"] = cache_path;
      j["added"] = added;
      j["records"] = dst.size();
      print_json(j);
      return 0;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}

// qpi: build an index over a text and answer quasiperiodicity queries.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include "qpi/oracle.hpp"
#include "qpi/periods.hpp"
#include "qpi/quasiperiod.hpp"
#include "qpi/query.hpp"
#include "qpi/serialize.hpp"
#include "textgen.hpp"

namespace {

using namespace qpi;
using Clock = std::chrono::steady_clock;

void setup_logging() {
  auto logger = spdlog::stderr_color_mt("qpi");
  spdlog::set_default_logger(logger);
  spdlog::set_level(spdlog::level::warn);
  if (const char* env = std::getenv("QPI_LOG")) spdlog::set_level(spdlog::level::from_str(env));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<std::string> read_lines(std::istream& in) {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  return lines;
}

struct Source {
  std::string index_path;
  std::string text_path;

  void add(CLI::App* cmd) {
    cmd->add_option("--index", index_path, "Index file written by 'qpi build'");
    cmd->add_option("--text", text_path, "Raw text file; the index is built in memory");
  }

  std::unique_ptr<Index> open() const {
    if (!index_path.empty() == !text_path.empty()) throw Error(ErrorCode::Io, "give exactly one of --index or --text");
    const auto t0 = Clock::now();
    std::unique_ptr<Index> idx = index_path.empty() ? std::make_unique<Index>(read_file(text_path)) : load_index(index_path);
    spdlog::info("index ready: n={} in {:.3f}s", idx->n(), std::chrono::duration<double>(Clock::now() - t0).count());
    return idx;
  }
};

// --- selftest -----------------------------------------------------------------

struct Tally {
  std::string name;
  long checks = 0;
  long mismatches = 0;

  void check(bool ok, const std::string& what) {
    ++checks;
    if (!ok && mismatches++ < 5) spdlog::error("selftest {}: mismatch on {}", name, what);
  }
};

int run_selftest(std::uint64_t seed, int strings, int max_n, int queries) {
  std::mt19937_64 rng(seed);
  std::vector<Tally> t = {{"borders"}, {"periods"}, {"runs"}, {"seeds"},     {"is_cover"},
                          {"covered_pref"}, {"min_cover"}, {"all_covers"}};
  for (int r = 0; r < strings; ++r) {
    const auto n = static_cast<std::size_t>(1 + rng() % static_cast<std::uint64_t>(max_n));
    const std::string text = r % 3 == 2 ? tools::covered_text(rng, n) : tools::random_text(rng, n, 2 + r % 2);
    const Index idx(text);

    std::vector<oracle::NaiveRun> runs;
    for (const auto& run : idx.runs().runs()) runs.push_back({run.a, run.b, run.p});
    std::sort(runs.begin(), runs.end());
    t[2].check(runs == oracle::naive_runs(text), "runs of text " + std::to_string(r));

    for (const auto& level : idx.seeds().levels()) {
      for (const auto& node : level) {
        const auto b = node.interval;
        std::vector<std::string> got;
        for (const auto& s : idx.seeds().seeds_of(b)) got.push_back(s.text);
        const std::string f = text.substr(static_cast<std::size_t>(b.a - 1), static_cast<std::size_t>(b.length()));
        t[3].check(got == oracle::naive_seeds(f, static_cast<std::size_t>(b.length() / 2)), "seeds of " + f);
      }
    }

    for (int q = 0; q < queries; ++q) {
      Pos i = 1 + static_cast<Pos>(rng() % n);
      Pos j = 1 + static_cast<Pos>(rng() % n);
      if (i > j) std::swap(i, j);
      const FactorRef s{i, j};
      const std::string str = text.substr(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(s.length()));
      const std::string where = "T[" + std::to_string(i) + ".." + std::to_string(j) + "] of text " + std::to_string(r);
      const Pos l = 1 + static_cast<Pos>(rng() % static_cast<std::uint64_t>(s.length()));
      t[0].check(borders(idx.ipm(), s).lengths() == oracle::naive_borders(str), where);
      t[1].check(expand(periods(idx.ipm(), s)) == oracle::naive_periods(str), where);
      t[4].check(is_cover(idx, l, s) == oracle::naive_is_cover(str, l), where);
      t[5].check(covered_pref(idx, l, s) == oracle::naive_covered_pref(str, l), where);
      t[6].check(min_cover(idx, s) == oracle::naive_min_cover(str), where);
      t[7].check(all_covers(idx, s).lengths() == oracle::naive_covers(str), where);
    }
  }
  long bad = 0;
  for (const auto& x : t) {
    std::cout << "selftest " << x.name << ": " << x.checks << " checks, " << x.mismatches << " mismatches\n";
    bad += x.mismatches;
  }
  std::cout << (bad == 0 ? "selftest PASS" : "selftest FAIL") << "\n";
  return bad == 0 ? 0 : 1;
}

// --- bench --------------------------------------------------------------------

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  return v.empty() ? 0.0 : v[v.size() / 2];
}

int run_bench(std::uint64_t seed, const std::vector<std::size_t>& sizes, int queries, const std::string& csv_path) {
  std::mt19937_64 rng(seed);
  struct Row {
    std::size_t n;
    double build_s;
    double min_cover_us, all_covers_us, is_cover_us, covered_pref_us;
  };
  std::vector<Row> rows;
  for (std::size_t n : sizes) {
    const std::string text = tools::random_text(rng, n, 2);
    const auto t0 = Clock::now();
    const Index idx(text);
    const double build = std::chrono::duration<double>(Clock::now() - t0).count();
    std::vector<double> lat[4];
    for (int q = 0; q < queries; ++q) {
      Pos i = 1 + static_cast<Pos>(rng() % n);
      Pos j = 1 + static_cast<Pos>(rng() % n);
      if (i > j) std::swap(i, j);
      const FactorRef s{i, j};
      const Pos l = 1 + static_cast<Pos>(rng() % static_cast<std::uint64_t>(s.length()));
      auto time = [&](int k, auto&& fn) {
        const auto a = Clock::now();
        fn();
        lat[k].push_back(std::chrono::duration<double, std::micro>(Clock::now() - a).count());
      };
      time(0, [&] { (void)min_cover(idx, s); });
      time(1, [&] { (void)all_covers(idx, s); });
      time(2, [&] { (void)is_cover(idx, l, s); });
      time(3, [&] { (void)covered_pref(idx, l, s); });
    }
    rows.push_back({n, build, median(lat[0]), median(lat[1]), median(lat[2]), median(lat[3])});
  }

  std::printf("%10s %10s %14s %14s %14s %14s\n", "n", "build_s", "mincover_us", "allcovers_us", "iscover_us", "coveredpref_us");
  for (const auto& r : rows) {
    std::printf("%10zu %10.3f %14.2f %14.2f %14.2f %14.2f\n", r.n, r.build_s, r.min_cover_us, r.all_covers_us, r.is_cover_us,
                r.covered_pref_us);
  }
  if (!csv_path.empty()) {
    std::ofstream csv(csv_path);
    if (!csv) throw Error(ErrorCode::Io, "cannot write " + csv_path);
    csv << "n,build_s,mincover_median_us,allcovers_median_us,iscover_median_us,coveredpref_median_us\n";
    for (const auto& r : rows) {
      csv << r.n << ',' << r.build_s << ',' << r.min_cover_us << ',' << r.all_covers_us << ',' << r.is_cover_us << ','
          << r.covered_pref_us << '\n';
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  setup_logging();
  CLI::App app{"Internal quasiperiodicity queries over a fixed text"};
  app.require_subcommand(1);

  std::string text_path, out_path;
  auto* build = app.add_subcommand("build", "Build an index and write it to a file");
  build->add_option("--text", text_path, "Raw text file")->required();
  build->add_option("--out", out_path, "Output index file")->required();

  Source query_src;
  bool query_json = false;
  std::vector<std::string> query_lines;
  auto* query = app.add_subcommand("query", "Answer queries given with -q, or one per stdin line");
  query_src.add(query);
  query->add_flag("--json", query_json, "One JSON object per answer");
  query->add_option("-q,--query", query_lines, "Query line, e.g. \"MINCOVER 1 13\"");

  Source batch_src;
  bool batch_json = false;
  std::string batch_file, batch_out;
  unsigned threads = 1;
  auto* batch = app.add_subcommand("batch", "Answer a file of queries, one answer line per query line");
  batch_src.add(batch);
  batch->add_option("--queries", batch_file, "Query file")->required();
  batch->add_option("--out", batch_out, "Write answers here instead of stdout");
  batch->add_option("--threads", threads, "Worker threads (0 = all cores)");
  batch->add_flag("--json", batch_json, "One JSON object per answer");

  std::uint64_t seed = 1;
  int st_strings = 60, st_max_n = 200, st_queries = 200;
  auto* selftest = app.add_subcommand("selftest", "Compare all queries with brute-force oracles on random texts");
  selftest->add_option("--seed", seed, "Random seed");
  selftest->add_option("--strings", st_strings, "Number of random texts");
  selftest->add_option("--max-n", st_max_n, "Maximum text length (oracle cap 4096)")->check(CLI::Range(1, 4096));
  selftest->add_option("--queries", st_queries, "Random factors per text");

  std::vector<std::size_t> sizes = {1024, 4096, 16384};
  int bench_queries = 2000;
  std::string csv_path;
  auto* bench = app.add_subcommand("bench", "Median query latency and build time on random binary texts");
  bench->add_option("--seed", seed, "Random seed");
  bench->add_option("--sizes", sizes, "Text lengths");
  bench->add_option("--queries", bench_queries, "Queries per size");
  bench->add_option("--csv", csv_path, "Also write the table as CSV");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*build) {
      const auto t0 = Clock::now();
      const Index idx(read_file(text_path));
      save_index(idx, out_path);
      spdlog::info("built n={} in {:.3f}s", idx.n(), std::chrono::duration<double>(Clock::now() - t0).count());
      return 0;
    }
    if (*query) {
      const auto idx = query_src.open();
      if (query_lines.empty()) query_lines = read_lines(std::cin);
      for (const auto& line : query_lines) std::cout << answer_query(*idx, line, query_json) << '\n';
      return 0;
    }
    if (*batch) {
      const auto idx = batch_src.open();
      std::ifstream in(batch_file);
      if (!in) throw Error(ErrorCode::Io, "cannot open " + batch_file);
      const auto answers = answer_batch(*idx, read_lines(in), batch_json, threads);
      std::ofstream file;
      if (!batch_out.empty()) {
        file.open(batch_out, std::ios::binary);
        if (!file) throw Error(ErrorCode::Io, "cannot write " + batch_out);
      }
      std::ostream& out = batch_out.empty() ? std::cout : file;
      for (const auto& a : answers) out << a << '\n';
      return 0;
    }
    if (*selftest) return run_selftest(seed, st_strings, st_max_n, st_queries);
    if (*bench) return run_bench(seed, sizes, bench_queries, csv_path);
  } catch (const Error& e) {
    std::cerr << "ERR " << error_code_name(e.code()) << ' ' << e.what() << '\n';
    return 2;
  }
  return 0;
}

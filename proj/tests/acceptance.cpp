// Acceptance run: one PASS/FAIL line per criterion, exit status 1 on any FAIL.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include <unistd.h>

#include "qpi/oracle.hpp"
#include "qpi/periods.hpp"
#include "qpi/quasiperiod.hpp"
#include "qpi/query.hpp"
#include "textgen.hpp"

using namespace qpi;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int id, bool ok, const std::string& detail) {
  std::printf("[%s] criterion %d: %s\n", ok ? "PASS" : "FAIL", id, detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

// Structural checks shared by criteria 3-5.
struct Structure {
  long runs_over_n = 0;
  long too_many_progressions = 0;
  long overlapping = 0;
  long invariant_errors = 0;
  long texts = 0;
  long answers = 0;

  void text(const Index& idx) {
    ++texts;
    if (static_cast<Pos>(idx.runs().runs().size()) > idx.n()) ++runs_over_n;
  }

  void answer(const CoverAnswer& a, Pos len) {
    ++answers;
    const int logn = len <= 1 ? 0 : static_cast<int>(std::bit_width(static_cast<std::uint64_t>(len - 1)));
    if (static_cast<long>(a.progressions.size()) > 2L * logn + 2) ++too_many_progressions;
    std::set<Pos> seen;
    Pos total = 0;
    for (const auto& p : a.progressions) {
      total += p.count;
      for (Pos x : p.elements()) seen.insert(x);
    }
    if (static_cast<Pos>(seen.size()) != total) ++overlapping;
  }

  // Chain-prefix and cut-progression violations surface as Error(Invariant).
  template <class F>
  auto guarded(F&& f) -> decltype(f()) {
    try {
      return f();
    } catch (const Error& e) {
      if (e.code() == ErrorCode::Invariant) ++invariant_errors;
      throw;
    }
  }
};

Structure structure;

void criterion1() {
  const Index idx("abaababaababa");
  bool ok = true;
  double worst = 0;
  for (int rep = 0; rep < 3; ++rep) {
    auto t0 = Clock::now();
    const Pos a = min_cover(idx, {1, 13});
    worst = std::max(worst, seconds_since(t0));
    t0 = Clock::now();
    const Pos b = min_cover(idx, {2, 13});
    worst = std::max(worst, seconds_since(t0));
    ok = ok && a == 3 && b == 7;
  }
  ok = ok && worst < 1e-3;
  char buf[160];
  std::snprintf(buf, sizeof buf, "T=abaababaababa: MinCover(T)=%d MinCover(T[2..13])=%d, slowest %.1f us",
                static_cast<int>(min_cover(idx, {1, 13})), static_cast<int>(min_cover(idx, {2, 13})), worst * 1e6);
  report(1, ok, buf);
}

void criterion2() {
  const Index idx("aabaababababaaba");
  auto texts = [&](BasicInterval b) {
    std::vector<std::string> out;
    for (const auto& s : idx.seeds().seeds_of(b)) out.push_back(s.text);
    return out;
  };
  const bool abab = texts({5, 2}) == std::vector<std::string>{"ab", "ba"};
  const bool aaba = texts({1, 2}).empty();
  const bool aa = texts({1, 1}) == std::vector<std::string>{"a"};
  const bool basic = idx.seeds().seeded_basic({6, 7}, {5, 2});
  const bool concat = idx.seeds().test_concat({6, 7}, 5, 8, 12);
  std::string detail = "T=aabaababababaaba: seeds abab:{ab,ba} ";
  detail += abab ? "ok" : "bad";
  detail += ", aaba:{} " + std::string(aaba ? "ok" : "bad");
  detail += ", aa:{a} " + std::string(aa ? "ok" : "bad");
  detail += ", seeded_basic(ba,T[5..8]) " + std::string(basic ? "true" : "false");
  detail += ", test_concat(ba,T[5..12]) " + std::string(concat ? "true" : "false");
  report(2, abab && aaba && aa && basic && concat, detail);
}

void criterion3() {
  // Small texts are cheap enough to also run the internal self-checks.
  set_invariant_checks(true);
  const auto t0 = Clock::now();
  long factors = 0, mismatches = 0;
  for (int n = 1; n <= 12; ++n) {
    for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
      std::string t(static_cast<std::size_t>(n), 'a');
      for (int b = 0; b < n; ++b) if (mask >> b & 1U) t[static_cast<std::size_t>(b)] = 'b';
      const Index idx(t);
      structure.text(idx);
      for (Pos i = 1; i <= n; ++i) {
        for (Pos j = i; j <= n; ++j) {
          ++factors;
          const auto want = oracle::naive_covers(std::string_view(t).substr(i - 1, j - i + 1));
          try {
            const auto all = structure.guarded([&] { return all_covers(idx, {i, j}); });
            structure.answer(all, j - i + 1);
            if (structure.guarded([&] { return min_cover(idx, {i, j}); }) != want.front() || all.lengths() != want) ++mismatches;
          } catch (const Error&) {
            ++mismatches;
          }
        }
      }
    }
  }
  set_invariant_checks(false);
  const double secs = seconds_since(t0);
  char buf[160];
  std::snprintf(buf, sizeof buf, "exhaustive {a,b}^n, n<=12: %ld factors, %ld mismatches, %.1f s", factors, mismatches, secs);
  report(3, mismatches == 0 && secs < 300, buf);
}

void criterion4() {
  const auto t0 = Clock::now();
  std::mt19937_64 rng(2024);
  long queries = 0, mismatches = 0;
  const Pos n = 1000;
  for (int r = 0; r < 100; ++r) {
    const std::string t = tools::random_text(rng, n, r < 50 ? 2 : 3);
    const Index idx(t);
    structure.text(idx);
    for (int q = 0; q < 1000; ++q) {
      Pos i = 1 + static_cast<Pos>(rng() % n), j = 1 + static_cast<Pos>(rng() % n);
      if (i > j) std::swap(i, j);
      const std::string_view s = std::string_view(t).substr(i - 1, j - i + 1);
      const Pos l = 1 + static_cast<Pos>(rng() % s.size());
      ++queries;
      try {
        const auto covers = oracle::naive_covers(s);
        const auto all = structure.guarded([&] { return all_covers(idx, {i, j}); });
        structure.answer(all, j - i + 1);
        bool ok = all.lengths() == covers;
        ok = ok && structure.guarded([&] { return min_cover(idx, {i, j}); }) == covers.front();
        ok = ok && borders(idx.ipm(), {i, j}).lengths() == oracle::naive_borders(s);
        ok = ok && expand(periods(idx.ipm(), {i, j})) == oracle::naive_periods(s);
        ok = ok && is_cover(idx, l, {i, j}) == oracle::naive_is_cover(s, l);
        ok = ok && covered_pref(idx, l, {i, j}) == oracle::naive_covered_pref(s, l);
        if (!ok) ++mismatches;
      } catch (const Error&) {
        ++mismatches;
      }
    }
  }
  const double secs = seconds_since(t0);
  char buf[200];
  std::snprintf(buf, sizeof buf,
                "random n=1000 over {a,b} and {a,b,c}: 100 texts, %ld factors x 6 queries, %ld mismatches, %.1f s", queries,
                mismatches, secs);
  report(4, mismatches == 0 && secs < 600, buf);
}

void criterion5() {
  // Cover-rich texts exercise long chains and periodic progressions.
  std::mt19937_64 rng(77);
  for (int r = 0; r < 200; ++r) {
    const std::string t = tools::covered_text(rng, 64 + rng() % 1000);
    const Index idx(t);
    structure.text(idx);
    for (int q = 0; q < 200; ++q) {
      const Pos n = idx.n();
      Pos i = 1 + static_cast<Pos>(rng() % n), j = 1 + static_cast<Pos>(rng() % n);
      if (i > j) std::swap(i, j);
      try {
        structure.answer(structure.guarded([&] { return all_covers(idx, {i, j}); }), j - i + 1);
      } catch (const Error&) {
      }
    }
  }
  const auto& s = structure;
  const bool ok = s.runs_over_n == 0 && s.too_many_progressions == 0 && s.overlapping == 0 && s.invariant_errors == 0;
  char buf[240];
  std::snprintf(buf, sizeof buf,
                "%ld texts with |R(T)|>n: %ld; %ld AllCovers answers: over 2ceil(log2|S|)+2 progressions %ld, "
                "overlapping %ld; chain-prefix violations %ld",
                s.texts, s.runs_over_n, s.answers, s.too_many_progressions, s.overlapping, s.invariant_errors);
  report(5, ok, buf);
}

double median_min_cover_us(std::size_t n, std::mt19937_64& rng) {
  const std::string t = tools::random_text(rng, n, 2);
  const Index idx(t);
  std::vector<FactorRef> fs;
  for (int q = 0; q < 4000; ++q) {
    Pos i = 1 + static_cast<Pos>(rng() % n), j = 1 + static_cast<Pos>(rng() % n);
    if (i > j) std::swap(i, j);
    fs.push_back({i, j});
  }
  double best = 1e18;
  for (int rep = 0; rep < 3; ++rep) {
    std::vector<double> lat;
    for (const auto& f : fs) {
      const auto t0 = Clock::now();
      volatile Pos c = min_cover(idx, f);
      (void)c;
      lat.push_back(seconds_since(t0) * 1e6);
    }
    std::nth_element(lat.begin(), lat.begin() + lat.size() / 2, lat.end());
    best = std::min(best, lat[lat.size() / 2]);
  }
  return best;
}

void criterion6() {
  std::mt19937_64 rng(99);
  const std::size_t sizes[] = {1U << 10, 1U << 12, 1U << 14};
  double med[3];
  for (int k = 0; k < 3; ++k) med[k] = median_min_cover_us(sizes[k], rng);
  const double r1 = med[1] / med[0], r2 = med[2] / med[1];
  const auto t0 = Clock::now();
  const Index big(tools::random_text(rng, 10000, 2));
  const double build = seconds_since(t0);
  char buf[220];
  std::snprintf(buf, sizeof buf,
                "median MinCover %.2f/%.2f/%.2f us at n=2^10/2^12/2^14, ratios %.2f %.2f (< 2.0); build n=10^4 %.2f s (< 60)",
                med[0], med[1], med[2], r1, r2, build);
  report(6, r1 < 2.0 && r2 < 2.0 && build < 60, buf);
}

void criterion7() {
  std::mt19937_64 rng(7);
  const std::string t = tools::covered_text(rng, 3000);
  const Index idx(t);
  const auto dir = std::filesystem::temp_directory_path();
  const auto path = dir / ("qpi_acceptance_batch_" + std::to_string(::getpid()) + ".txt");
  {
    std::ofstream out(path);
    const char* ops[] = {"MINCOVER", "ALLCOVERS", "BORDERS", "PERIODS", "ISCOVER", "COVEREDPREF"};
    for (int q = 0; q < 3000; ++q) {
      Pos i = 1 + static_cast<Pos>(rng() % 3000), j = 1 + static_cast<Pos>(rng() % 3000);
      if (i > j) std::swap(i, j);
      out << ops[q % 6] << ' ' << i << ' ' << j;
      if (q % 6 >= 4) out << ' ' << 1 + static_cast<Pos>(rng() % static_cast<std::uint64_t>(j - i + 1));
      out << '\n';
    }
    out << "MINCOVER 0 5\nBOGUS\nRUNS\n";
  }
  auto run = [&](unsigned threads, bool as_json) {
    std::ifstream in(path);
    std::vector<std::string> lines;
    for (std::string line; std::getline(in, line);) lines.push_back(line);
    std::string out;
    for (const auto& a : answer_batch(idx, lines, as_json, threads)) out += a + '\n';
    return out;
  };
  bool ok = true;
  for (bool as_json : {false, true}) {
    const std::string ref = run(1, as_json);
    for (unsigned threads : {1U, 2U, 4U, 8U, 0U}) ok = ok && run(threads, as_json) == ref;
  }
  std::filesystem::remove(path);
  report(7, ok, "3003-line batch, text and JSON output, threads 1/2/4/8/auto: byte-identical");
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  std::printf("%s: %d of 7 criteria failed\n", failures == 0 ? "ALL PASS" : "FAILED", failures);
  return failures == 0 ? 0 : 1;
}

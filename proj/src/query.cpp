#include "qpi/query.hpp"

#include <atomic>
#include <charconv>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "qpi/periods.hpp"
#include "qpi/quasiperiod.hpp"

namespace qpi {

namespace {

using nlohmann::json;

struct Parsed {
  std::string op;
  std::vector<Pos> args;
};

Parsed parse(std::string_view line) {
  std::istringstream in{std::string(line)};
  Parsed q;
  if (!(in >> q.op)) throw Error(ErrorCode::Parse, "empty query");
  std::string tok;
  while (in >> tok) {
    Pos v = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) throw Error(ErrorCode::Parse, "bad integer '" + tok + "'");
    q.args.push_back(v);
  }
  return q;
}

void expect_args(const Parsed& q, std::size_t count) {
  if (q.args.size() != count) {
    throw Error(ErrorCode::Parse, q.op + " takes " + std::to_string(count) + " arguments, got " + std::to_string(q.args.size()));
  }
}

json progressions_json(const std::vector<ArithProg>& ps) {
  json out = json::array();
  for (const auto& p : ps) out.push_back({{"start", p.start}, {"diff", p.diff}, {"count", p.count}});
  return out;
}

struct Answer {
  std::string text;
  json value;
};

Answer evaluate(const Index& idx, const Parsed& q) {
  const auto& ti = idx.text_index();
  auto factor = [&]() {
    const FactorRef s{q.args[0], q.args[1]};
    ti.check_factor(s);
    return s;
  };
  auto length = [&](FactorRef s) {
    const Pos l = q.args[2];
    if (l < 1 || l > s.length()) {
      throw Error(ErrorCode::OutOfRange, "length " + std::to_string(l) + " outside [1, " + std::to_string(s.length()) + "]");
    }
    return l;
  };

  if (q.op == "MINCOVER") {
    expect_args(q, 2);
    const Pos c = min_cover(idx, factor());
    return {std::to_string(c), c};
  }
  if (q.op == "ALLCOVERS") {
    expect_args(q, 2);
    const auto ps = all_covers(idx, factor()).progressions;
    return {format_progressions(ps), progressions_json(ps)};
  }
  if (q.op == "ISCOVER") {
    expect_args(q, 3);
    const FactorRef s = factor();
    const bool b = is_cover(idx, length(s), s);
    return {b ? "true" : "false", b};
  }
  if (q.op == "COVEREDPREF") {
    expect_args(q, 3);
    const FactorRef s = factor();
    const Pos c = covered_pref(idx, length(s), s);
    return {std::to_string(c), c};
  }
  if (q.op == "BORDERS") {
    expect_args(q, 2);
    const auto ps = borders(idx.ipm(), factor()).progressions;
    return {format_progressions(ps), progressions_json(ps)};
  }
  if (q.op == "PERIODS") {
    expect_args(q, 2);
    const auto ps = periods(idx.ipm(), factor());
    return {format_progressions(ps), progressions_json(ps)};
  }
  if (q.op == "RUNS") {
    expect_args(q, 0);
    std::string text;
    json value = json::array();
    for (const auto& r : idx.runs().runs()) {
      if (!text.empty()) text += ' ';
      text += std::to_string(r.a) + ':' + std::to_string(r.b) + ':' + std::to_string(r.p);
      value.push_back({{"a", r.a}, {"b", r.b}, {"p", r.p}});
    }
    return {text, value};
  }
  throw Error(ErrorCode::Parse, "unknown query '" + q.op + "'");
}

}  // namespace

std::string answer_query(const Index& idx, std::string_view line, bool as_json) {
  try {
    const Answer a = evaluate(idx, parse(line));
    if (!as_json) return a.text;
    return json{{"query", std::string(line)}, {"ok", true}, {"result", a.value}}.dump();
  } catch (const Error& e) {
    if (!as_json) return std::string("ERR ") + error_code_name(e.code()) + ' ' + e.what();
    return json{{"query", std::string(line)}, {"ok", false}, {"error", {{"code", error_code_name(e.code())}, {"message", e.what()}}}}.dump();
  }
}

std::vector<std::string> answer_batch(const Index& idx, const std::vector<std::string>& lines, bool as_json, unsigned threads) {
  std::vector<std::string> out(lines.size());
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(lines.size(), 1)));
  std::atomic<std::size_t> next{0};
  auto work = [&]() {
    for (std::size_t t = next++; t < lines.size(); t = next++) out[t] = answer_query(idx, lines[t], as_json);
  };
  if (threads <= 1) {
    work();
    return out;
  }
  std::vector<std::jthread> pool;
  for (unsigned w = 0; w < threads; ++w) pool.emplace_back(work);
  pool.clear();  // joins
  return out;
}

}  // namespace qpi

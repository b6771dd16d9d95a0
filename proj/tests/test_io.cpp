#include <doctest.h>

#include <random>
#include <sstream>

#include "qpi/oracle.hpp"
#include "qpi/quasiperiod.hpp"
#include "qpi/query.hpp"
#include "qpi/serialize.hpp"
#include "textgen.hpp"

using namespace qpi;

TEST_CASE("query protocol") {
  const Index sample("abaababaababa");
  CHECK(answer_query(sample, "MINCOVER 1 13") == "3");
  CHECK(answer_query(sample, "ISCOVER 1 13 2") == "false");
  CHECK(answer_query(sample, "ISCOVER 1 13 3") == "true");
  CHECK(answer_query(sample, "COVEREDPREF 1 13 3") == "13");
  CHECK(answer_query(sample, "BORDERS 1 13").rfind("1:", 0) == 0);
  CHECK(answer_query(Index("aaaa"), "ALLCOVERS 1 4") == "1:1:4");
  CHECK(answer_query(Index("aaaa"), "RUNS") == "1:4:1");
  CHECK(answer_query(sample, "MINCOVER 0 13").rfind("ERR ERANGE", 0) == 0);
  CHECK(answer_query(sample, "MINCOVER 1").rfind("ERR EPARSE", 0) == 0);
  CHECK(answer_query(sample, "MINCOVER 1 x").rfind("ERR EPARSE", 0) == 0);
  CHECK(answer_query(sample, "FOO 1 2").rfind("ERR EPARSE", 0) == 0);
  CHECK(answer_query(sample, "ISCOVER 1 13 14").rfind("ERR ERANGE", 0) == 0);
}

TEST_CASE("json answers") {
  const Index sample("abaababaababa");
  CHECK(answer_query(sample, "MINCOVER 1 13", true) == R"({"ok":true,"query":"MINCOVER 1 13","result":3})");
  const std::string err = answer_query(sample, "MINCOVER 9 3", true);
  CHECK(err.find(R"("ok":false)") != std::string::npos);
  CHECK(err.find(R"("code":"ERANGE")") != std::string::npos);
}

TEST_CASE("batch answers do not depend on the thread count") {
  std::mt19937_64 rng(31);
  const std::string t = tools::covered_text(rng, 500);
  const Index idx(t);
  std::vector<std::string> lines;
  const char* ops[] = {"MINCOVER", "ALLCOVERS", "BORDERS", "PERIODS"};
  for (int q = 0; q < 400; ++q) {
    Pos i = 1 + static_cast<Pos>(rng() % 500), j = 1 + static_cast<Pos>(rng() % 500);
    if (i > j) std::swap(i, j);
    lines.push_back(std::string(ops[q % 4]) + ' ' + std::to_string(i) + ' ' + std::to_string(j));
  }
  lines.push_back("garbage");
  const auto one = answer_batch(idx, lines, false, 1);
  CHECK(answer_batch(idx, lines, false, 4) == one);
  CHECK(answer_batch(idx, lines, false, 0) == one);
}

TEST_CASE("index round trip") {
  std::mt19937_64 rng(37);
  for (int rep = 0; rep < 5; ++rep) {
    const std::string t = tools::covered_text(rng, 100 + rng() % 200);
    const Index idx(t);
    std::stringstream buf;
    save_index(idx, buf);
    const auto back = load_index(buf);
    REQUIRE(back->n() == idx.n());
    CHECK(back->text_index().text().bytes() == t);
    CHECK(back->runs().runs().size() == idx.runs().runs().size());
    for (Pos i = 1; i <= idx.n(); i += 7) {
      for (Pos j = i; j <= idx.n(); j += 11) {
        REQUIRE(min_cover(*back, {i, j}) == min_cover(idx, {i, j}));
        REQUIRE(all_covers(*back, {i, j}).progressions == all_covers(idx, {i, j}).progressions);
      }
    }
  }
}

TEST_CASE("corrupt index files are rejected") {
  const Index idx("abaababaababa");
  std::stringstream buf;
  save_index(idx, buf);
  const std::string good = buf.str();

  std::stringstream bad_magic("XXXX" + good.substr(4));
  CHECK_THROWS_AS((void)load_index(bad_magic), Error);

  std::stringstream truncated(good.substr(0, good.size() / 2));
  CHECK_THROWS_AS((void)load_index(truncated), Error);

  // Swap two suffix-array entries; validation must notice.
  std::string swapped = good;
  const std::size_t sa0 = 5 + 8 + 13 + 8;
  std::swap_ranges(swapped.begin() + sa0, swapped.begin() + sa0 + 8, swapped.begin() + sa0 + 8);
  std::stringstream s(swapped);
  try {
    (void)load_index(s);
    FAIL("loaded a corrupt index");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Format);
  }
}

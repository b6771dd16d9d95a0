#include <doctest.h>

#include <random>

#include "qpi/index.hpp"
#include "qpi/oracle.hpp"
#include "textgen.hpp"

using namespace qpi;

namespace {

std::vector<std::string> seed_texts(const Index& idx, BasicInterval b) {
  std::vector<std::string> out;
  for (const auto& s : idx.seeds().seeds_of(b)) out.push_back(s.text);
  return out;
}

}  // namespace

TEST_CASE("seed sets of aabaababababaaba") {
  const Index idx("aabaababababaaba");
  CHECK(seed_texts(idx, {5, 2}) == std::vector<std::string>{"ab", "ba"});
  CHECK(seed_texts(idx, {1, 2}).empty());
  CHECK(seed_texts(idx, {1, 1}) == std::vector<std::string>{"a"});
}

TEST_CASE("seeded basic factors") {
  const Index idx("aabaababababaaba");
  CHECK(idx.seeds().seeded_basic({6, 7}, {5, 2}));   // "ba"
  CHECK(idx.seeds().seeded_basic({5, 6}, {5, 2}));   // "ab"
  CHECK_FALSE(idx.seeds().seeded_basic({1, 1}, {1, 2}));
}

TEST_CASE("concatenation test") {
  const Index idx("aabaababababaaba");
  CHECK(idx.seeds().test_concat({6, 7}, 5, 8, 12));
  const Index unary("aaaaaaaa");
  CHECK(unary.seeds().test_concat({1, 2}, 1, 4, 8));
  // "ab" is a seed of "abab" and of "baba" but leaves position 5 of "ababbaba" uncovered.
  const Index t("ababbaba");
  CHECK_FALSE(t.seeds().test_concat({1, 2}, 1, 4, 8));
}

TEST_CASE("rank of a position") {
  const Index idx("aabaababababaaba");
  CHECK(idx.seeds().rank(1) == 4);
  CHECK(idx.seeds().rank(2) == 0);
  CHECK(idx.seeds().rank(5) == 2);
  CHECK(idx.seeds().rank(9) == 3);
}

TEST_CASE("seeded prefix of aligned blocks") {
  const Index idx("aabaababababaaba");
  CHECK(idx.seeds().seeded_basic_pref({6, 7}, 2, {5, 12}) == 8);
  CHECK(idx.seeds().seeded_basic_pref({2, 3}, 2, {1, 4}) == 0);
  const Index unary("aaaaaaaaaaaaaaaa");
  CHECK(unary.seeds().seeded_basic_pref({1, 2}, 2, {1, 16}) == 16);
}

TEST_CASE("covered prefix") {
  const Index fig1("abaababaababa");
  CHECK(fig1.seeds().covered_pref(3, {1, 13}) == 13);
  CHECK(fig1.seeds().covered_pref(13, {1, 13}) == 13);
  const Index t("aab");
  CHECK(t.seeds().covered_pref(1, {1, 3}) == 2);
}

TEST_CASE("seed sets agree with the naive seed enumerator") {
  std::mt19937_64 rng(19);
  for (int rep = 0; rep < 60; ++rep) {
    const std::string t = rep % 3 == 2 ? tools::covered_text(rng, 64) : tools::random_text(rng, 1 + rng() % 64, 2 + rep % 2);
    const Index idx(t);
    for (const auto& level : idx.seeds().levels()) {
      for (const auto& node : level) {
        const BasicInterval b = node.interval;
        const std::string f = t.substr(b.a - 1, b.length());
        REQUIRE(seed_texts(idx, b) == oracle::naive_seeds(f, b.length() / 2));
      }
    }
  }
}

TEST_CASE("naive seed oracle") {
  CHECK(oracle::naive_seeds("abab", 2) == std::vector<std::string>{"ab", "ba"});
  CHECK(oracle::naive_is_seed("aba", "babababa"));
}

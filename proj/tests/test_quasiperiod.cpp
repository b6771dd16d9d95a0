#include <doctest.h>

#include <random>

#include "qpi/oracle.hpp"
#include "qpi/quasiperiod.hpp"
#include "textgen.hpp"

using namespace qpi;

TEST_CASE("covers of abaababaababa") {
  const Index idx("abaababaababa");
  CHECK(min_cover(idx, {1, 13}) == 3);
  CHECK(min_cover(idx, {2, 13}) == 7);
  CHECK(min_cover_simple(idx, {2, 13}) == 7);
  CHECK(is_cover(idx, 3, {1, 13}));
  CHECK(is_cover(idx, 13, {1, 13}));
  CHECK_FALSE(is_cover(idx, 2, {1, 13}));
  CHECK(covered_pref(idx, 3, {1, 13}) == 13);
  CHECK(all_covers(idx, {1, 13}).lengths() == std::vector<Pos>{3, 8, 13});
}

TEST_CASE("small cover answers") {
  const Index unary("aaaa");
  const auto all = all_covers(unary, {1, 4});
  CHECK(all.progressions == std::vector<ArithProg>{{1, 1, 4}});
  const Index ab("ab");
  CHECK(all_covers(ab, {1, 2}).lengths() == std::vector<Pos>{2});
  const Index distinct("abcdefg");
  CHECK(min_cover(distinct, {2, 6}) == 5);
  CHECK(covered_pref(Index("aab"), 1, {1, 3}) == 2);
}

TEST_CASE("candidate verification") {
  const Index idx("abaababaababa");
  CHECK(covers_of_candidates(idx, {13}, {1, 13}) == std::vector<Pos>{13});
  CHECK(covers_of_candidates(idx, {1, 3, 8, 13}, {1, 13}) == std::vector<Pos>{3, 8, 13});
}

TEST_CASE("candidate verification agrees with filtering by the oracle") {
  std::mt19937_64 rng(23);
  for (int rep = 0; rep < 40; ++rep) {
    const std::string t = tools::covered_text(rng, 200);
    const Index idx(t);
    for (int q = 0; q < 50; ++q) {
      Pos i = 1 + static_cast<Pos>(rng() % 200), j = 1 + static_cast<Pos>(rng() % 200);
      if (i > j) std::swap(i, j);
      const std::string s = t.substr(i - 1, j - i + 1);
      const auto b = oracle::naive_borders(s);
      std::vector<Pos> want;
      for (Pos x : b) if (oracle::naive_is_cover(s, x)) want.push_back(x);
      REQUIRE(covers_of_candidates(idx, b, {i, j}) == want);
    }
  }
}

TEST_CASE("quasiperiod queries agree with oracles on random factors") {
  std::mt19937_64 rng(29);
  for (int rep = 0; rep < 60; ++rep) {
    const Pos n = 1 + static_cast<Pos>(rng() % 300);
    const std::string t = rep % 3 == 2 ? tools::covered_text(rng, n) : tools::random_text(rng, n, 2 + rep % 2);
    const Index idx(t);
    for (int q = 0; q < 150; ++q) {
      Pos i = 1 + static_cast<Pos>(rng() % n), j = 1 + static_cast<Pos>(rng() % n);
      if (i > j) std::swap(i, j);
      const std::string s = t.substr(i - 1, j - i + 1);
      const auto covers = oracle::naive_covers(s);
      const Pos l = rng() % 2 ? covers[rng() % covers.size()] : 1 + static_cast<Pos>(rng() % s.size());
      REQUIRE(min_cover(idx, {i, j}) == covers.front());
      REQUIRE(all_covers(idx, {i, j}).lengths() == covers);
      REQUIRE(is_cover(idx, l, {i, j}) == oracle::naive_is_cover(s, l));
      REQUIRE(covered_pref(idx, l, {i, j}) == oracle::naive_covered_pref(s, l));
    }
  }
}

TEST_CASE("invalid arguments") {
  const Index idx("abaab");
  CHECK_THROWS_AS((void)min_cover(idx, {0, 3}), Error);
  CHECK_THROWS_AS((void)min_cover(idx, {3, 2}), Error);
  CHECK_THROWS_AS((void)is_cover(idx, 0, {1, 3}), Error);
  CHECK_THROWS_AS((void)covered_pref(idx, 4, {1, 3}), Error);
}

TEST_CASE("oracle cap") {
  const std::string big(5000, 'a');
  CHECK_THROWS_AS((void)oracle::naive_min_cover(big), Error);
  CHECK(oracle::naive_min_cover("abaababaababa") == 3);
  CHECK(oracle::naive_covers("aaaa") == std::vector<Pos>{1, 2, 3, 4});
}

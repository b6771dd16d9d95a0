#include <doctest.h>

#include <random>

#include "qpi/text_index.hpp"
#include "textgen.hpp"

using namespace qpi;

namespace {

Pos scan_lcp(const std::string& t, Pos i, Pos j) {
  Pos l = 0;
  while (i + l <= static_cast<Pos>(t.size()) && j + l <= static_cast<Pos>(t.size()) && t[i + l - 1] == t[j + l - 1]) ++l;
  return l;
}

Pos scan_lcs(const std::string& t, Pos i, Pos j) {
  Pos l = 0;
  while (i - l >= 1 && j - l >= 1 && t[i - l - 1] == t[j - l - 1]) ++l;
  return l;
}

}  // namespace

TEST_CASE("suffix array of tiny texts") {
  CHECK(TextIndex(Text("ab")).forward().sa == std::vector<std::int32_t>{0, 1});
  CHECK(TextIndex(Text("aa")).forward().sa == std::vector<std::int32_t>{1, 0});
  const TextIndex ti(Text("abaababaababa"));
  for (Pos r = 1; r <= ti.n(); ++r) CHECK(ti.isa(ti.sa(r)) == r);
}

TEST_CASE("lcp and lcs on abaababaababa") {
  const TextIndex ti(Text("abaababaababa"));
  CHECK(ti.lcp(1, 1) == 13);
  CHECK(ti.lcp(1, 4) == 3);
  CHECK(ti.lcp(1, 2) == 0);
  CHECK(ti.lcs(13, 13) == 13);
  CHECK(ti.lcs(3, 13) == 3);
  CHECK(ti.lcs(1, 2) == 0);
  CHECK_THROWS_AS((void)ti.lcp(0, 1), Error);
  CHECK_THROWS_AS((void)ti.lcs(1, 14), Error);
}

TEST_CASE("lcp and lcs agree with scans on random texts") {
  std::mt19937_64 rng(3);
  for (int rep = 0; rep < 20; ++rep) {
    const std::string t = tools::random_text(rng, 1 + rng() % 120, 1 + rep % 3);
    const TextIndex ti{Text(t)};
    for (Pos i = 1; i <= ti.n(); ++i) {
      for (Pos j = 1; j <= ti.n(); ++j) {
        REQUIRE(ti.lcp(i, j) == scan_lcp(t, i, j));
        REQUIRE(ti.lcs(i, j) == scan_lcs(t, i, j));
      }
    }
  }
}

TEST_CASE("range minimum") {
  CHECK(RangeMin({5}).query(1, 1) == RmqResult{5, 1});
  CHECK(RangeMin({3, 1, 2}).query(1, 3) == RmqResult{1, 2});
  std::mt19937_64 rng(5);
  std::vector<Pos> v(200);
  for (auto& x : v) x = static_cast<Pos>(rng() % 50);
  const RangeMin rm(v);
  for (Pos l = 1; l <= 200; l += 7) {
    for (Pos r = l; r <= 200; r += 3) {
      const auto it = std::min_element(v.begin() + (l - 1), v.begin() + r);
      CHECK(rm.query(l, r) == RmqResult{*it, static_cast<Pos>(it - v.begin()) + 1});
    }
  }
}

TEST_CASE("empty text is rejected") {
  CHECK_THROWS_AS(TextIndex(Text("")), Error);
}

TEST_CASE("raw bytes are accepted") {
  const std::string t = std::string("\x00\xff\x00\xff", 4);
  const TextIndex ti{Text(t)};
  CHECK(ti.lcp(1, 3) == 2);
}

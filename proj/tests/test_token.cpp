#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "cohrealiz/json_io.hpp"
#include "cohrealiz/token.hpp"

using namespace coh;

namespace {

Token tok(Context& c, std::vector<Entry> es) { return c.make(std::move(es)); }

}  // namespace

TEST_CASE("project reads off one index") {
  Context c;
  Token e = c.empty(), n0 = c.nu(0);
  CHECK(c.project(e, 5).empty());
  CHECK(c.project(tok(c, {{3, e}}), 3) == std::vector<Token>{e});
  Token a = tok(c, {{0, n0}, {1, n0}});
  CHECK(c.project(a, 1) == std::vector<Token>{n0});
  // brute force over the entries
  std::vector<Token> scan;
  for (const Entry& x : c.entries(a))
    if (x.index == 1) scan.push_back(x.child);
  CHECK(c.project(a, 1) == scan);
}

TEST_CASE("interning gives canonical handles") {
  Context c;
  Token e = c.empty();
  Token a = tok(c, {{1, e}, {0, e}, {1, e}});
  Token b = tok(c, {{0, e}, {1, e}});
  CHECK(a == b);
  CHECK(c.size(a) == 2);
  CHECK(c.to_text(a) == "[[0,[]],[1,[]]]");
  CHECK(c.to_text(c.nu(2)) == "[[2,[]]]");
}

TEST_CASE("web membership") {
  Context c;
  CHECK(c.in_web(c.empty()).in_web);
  for (std::uint32_t n = 0; n < 5; ++n) CHECK(c.web(c.nu(n)));

  Token bad = tok(c, {{0, c.nu(0)}, {0, c.nu(1)}});
  WebVerdict v = c.in_web(bad);
  CHECK_FALSE(v.in_web);
  REQUIRE(v.witness.has_value());
  CHECK(v.witness->first == 0);
  auto pair = v.witness->second;
  CHECK(((pair.first == c.nu(0) && pair.second == c.nu(1)) || (pair.first == c.nu(1) && pair.second == c.nu(0))));
  CHECK_FALSE(c.in_web(c.empty()).witness.has_value());
}

TEST_CASE("coherence") {
  Context c;
  Token e = c.empty(), n0 = c.nu(0), n1 = c.nu(1);
  CHECK(c.coherent(n0, n0));
  CHECK_FALSE(c.coherent(n0, n1));
  Token g0 = tok(c, {{0, n0}, {1, e}}), g1 = tok(c, {{0, n1}, {2, e}});
  CHECK(c.coherent(g0, g1));
  CHECK_FALSE(c.web(c.unite(g0, g1)));
  // the empty token is incoherent with every other token
  CHECK_FALSE(c.coherent(e, n0));
  CHECK(c.incoherent_strict(e, n1));
  CHECK_FALSE(c.incoherent_strict(n1, n1));
  Token bad = tok(c, {{0, n0}, {0, n1}});
  CHECK_THROWS_AS(c.coherent(bad, e), TokenError);
}

TEST_CASE("levels") {
  Context c;
  CHECK(c.level(c.empty()) == 1);
  CHECK(c.level(c.nu(3)) == 2);
  CHECK(c.level(c.hat(c.nu(0))) == 3);
  CHECK_THROWS_AS(c.level(c.make({{0, c.nu(0)}, {0, c.nu(1)}})), TokenError);
}

TEST_CASE("grades") {
  Context c;
  CHECK(c.grade(c.empty()) == 0);
  for (std::uint32_t n = 0; n < 4; ++n) CHECK(c.grade(c.nu(n)) == 1);
  CHECK(c.grade(c.hat(c.nu(0))) == 0);
  CHECK(c.grade(c.hat(c.hat(c.nu(0)))) == 1);
  CHECK_THROWS_AS(c.grade(c.make({{0, c.nu(0)}, {0, c.nu(1)}})), TokenError);
}

TEST_CASE("enumeration of small universes") {
  Context c;
  CHECK(c.enumerate(0, 3).empty());
  CHECK(c.enumerate(1, 5) == std::vector<Token>{c.empty()});
  Token e = c.empty();
  std::vector<Token> want{e, c.nu(0), c.nu(1), tok(c, {{0, e}, {1, e}})};
  CHECK(c.enumerate(2, 2) == want);
  CHECK(c.enumerate(3, 2).size() == 25);
  // deterministic: a second context lists the same texts
  Context d;
  const auto& a = c.enumerate(3, 2);
  const auto& b = d.enumerate(3, 2);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(c.to_text(a[i]) == d.to_text(b[i]));
}

TEST_CASE("enumerated tokens respect the bounds") {
  Context c;
  for (Token t : c.enumerate(3, 2)) {
    CHECK(c.level(t) <= 3);
    CHECK(c.max_index_plus_one(t) <= 2);
    CHECK(c.size(t) <= 2);
  }
}

TEST_CASE("cons, head and tail") {
  Context c;
  Token e = c.empty(), n0 = c.nu(0), n1 = c.nu(1);
  Token a = c.cons({n0}, n1);
  CHECK(a == c.make({{0, n0}, {2, e}}));
  CHECK(c.head(a) == std::vector<Token>{n0});
  CHECK(c.tail(a) == n1);
  CHECK(c.cons({}, e) == e);
  CHECK(c.hat(n0) == c.make({{0, n0}}));
}

TEST_CASE("subtokens") {
  Context c;
  Token e = c.empty();
  Token a = c.make({{0, e}, {1, e}});
  std::vector<Token> s = c.subtokens(a);
  CHECK(s.size() == 4);
  CHECK(std::find(s.begin(), s.end(), e) != s.end());
  CHECK(c.subtokens(a, 1).size() == 3);
  for (Token b : s) CHECK(c.subset(b, a));
}

TEST_CASE("json round trip") {
  Context c, d;
  for (Token t : c.enumerate(3, 2)) {
    json j = token_to_json(c, t);
    Token u = token_from_json(d, j);
    CHECK(d.to_text(u) == c.to_text(t));
    CHECK(token_to_json(d, u) == j);
  }
  CHECK(token_to_json(c, c.nu(2)).dump() == "[[2,[]]]");
  CHECK_THROWS_AS(token_from_json(c, json::parse("[[1]]")), FormatError);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cohrealiz/term.hpp"

using namespace coh;

namespace {

bool fires(Eval& ev, const Term& t, const Stack& s) { return evaluate(ev, t, s).verdict == Verdict3::Top; }

TokenSet tokens_over(Eval& ev, const Term& t) {
  std::vector<Token> out;
  for (Token a : ev.ctx.enumerate(ev.u))
    if (t.contains(ev, a) == Tri::Yes) out.push_back(a);
  return make_set(out);
}

TokenSet restrict(Eval& ev, const TokenSet& ts) {
  const auto& w = ev.ctx.enumerate(ev.u);
  std::vector<Token> out;
  for (Token a : ts)
    if (std::find(w.begin(), w.end(), a) != w.end()) out.push_back(a);
  return make_set(out);
}

}  // namespace

TEST_CASE("is_clique") {
  Context c;
  CHECK(is_clique(c, {}));
  CHECK_FALSE(is_clique(c, make_set({c.nu(0), c.nu(1)})));
  Token g0 = c.cons({c.nu(0)}, c.nu(0)), g1 = c.cons({c.nu(1)}, c.nu(1));
  CHECK(is_clique(c, make_set({g0, g1})));
  CHECK_THROWS_AS(finite(c, {c.nu(0), c.nu(1)}), CliqueError);
  CHECK_THROWS(is_clique(c, {c.make({{0, c.nu(0)}, {0, c.nu(1)}})}));
}

TEST_CASE("cons") {
  Context c;
  Token e = c.empty(), n0 = c.nu(0);
  CHECK(c.cons({}, e) == e);
  CHECK(c.cons({e}, e) == n0);
  CHECK(c.cons({n0}, n0) == c.make({{0, n0}, {1, e}}));
  Token a = c.cons({n0}, c.nu(1));
  CHECK(c.project(a, 0) == std::vector<Token>{n0});
  CHECK(c.project(a, 2) == std::vector<Token>{e});
}

TEST_CASE("push") {
  Context c;
  Eval ev(c, Universe{});
  Stack bottom = Stack::seq({});
  Stack p = push(c, bot(), bottom);
  REQUIRE(p.is_seq());
  CHECK(p.items().size() == 1);
  for (Token a : c.enumerate(ev.u)) CHECK((p.contains(ev, a) == Tri::Yes) == (a == c.empty()));

  Stack q = push(c, top(c), bottom);
  for (Token a : c.enumerate(ev.u)) CHECK((q.contains(ev, a) == Tri::Yes) == (a == c.empty() || a == c.nu(0)));

  // cons({nu_5}, empty) lies in t.pi iff nu_5 in t
  Token probe = c.cons({c.nu(5)}, c.empty());
  CHECK(push(c, numeral(c, 5), bottom).contains(ev, probe) == Tri::Yes);
  CHECK(push(c, numeral(c, 4), bottom).contains(ev, probe) == Tri::No);

  // the two forms of push denote the same ideal
  Term t = finite(c, {c.nu(1)});
  Stack s = Stack::ideal(c, {c.make({{0, c.empty()}, {1, c.empty()}})});
  Stack via_ideal = push(c, t, s), via_seq = push(c, t, s.to_seq(c));
  for (Token a : c.enumerate(4, 2)) CHECK(via_ideal.contains(ev, a) == via_seq.contains(ev, a));
}

TEST_CASE("apply") {
  Context c;
  Eval ev(c, Universe{});
  std::vector<TokenSet> cl = cliques(c, c.enumerate(ev.u), 2);
  for (std::size_t i = 0; i < cl.size(); i += 7) {
    Term s = finite(c, cl[i]);
    CHECK(apply(ev, top(c), s).tokens() == top(c).tokens());
    CHECK(apply(ev, bot(), s).tokens().empty());
  }
  // i t = t, oracle by brute force over the universe
  for (const TokenSet& ts : cliques(c, c.enumerate(ev.u), 3)) {
    Term t = finite(c, ts);
    REQUIRE(tokens_over(ev, apply(ev, identity(), t)) == restrict(ev, ts));
  }
}

TEST_CASE("evaluate") {
  Context c;
  Eval ev(c, Universe{});
  Term t = top(c);
  std::vector<Term> comps{bot(), top(c), numeral(c, 0)};
  for (const Stack& s : stack_family(comps, 2)) {
    CHECK(fires(ev, t, s));
    CHECK_FALSE(fires(ev, bot(), s));
  }
  // n fires on s iff s_n = top_D
  for (std::uint32_t n = 0; n < 3; ++n)
    for (const Stack& s : stack_family(comps, 3)) {
      bool expect = s.component(c, n).contains(ev, c.empty()) == Tri::Yes;
      CHECK(fires(ev, numeral(c, n), s) == expect);
    }
  EvalResult r = evaluate(ev, numeral(c, 2), Stack::seq({bot(), bot(), top(c)}));
  CHECK(r.verdict == Verdict3::Top);
  REQUIRE(r.firing.has_value());
  CHECK(*r.firing == c.nu(2));
}

TEST_CASE("inconclusive when fuel runs out") {
  Context c;
  Eval ev(c, Universe{3, 2, 0});
  // a filtered lazy term meets an infinite ideal only through its enumeration
  Term t = r_P(ev, identity());
  CHECK(evaluate(ev, t, Stack::seq({}, Tail::Top)).verdict == Verdict3::Inconclusive);
  // finite terms never need fuel
  CHECK(evaluate(ev, numeral(c, 0), Stack::seq({top(c)})).verdict == Verdict3::Top);
  CHECK(evaluate(ev, numeral(c, 1), Stack::seq({top(c)})).verdict == Verdict3::Bot);
}

TEST_CASE("numerals and bar_I") {
  Context c;
  Eval ev(c, Universe{});
  CHECK(numeral(c, 3).tokens() == TokenSet{c.nu(3)});
  CHECK(bar_I(c, {}).tokens() == top(c).tokens());
  CHECK(bar_I(c, {2}).tokens() == numeral(c, 2).tokens());
  CHECK(numeral(c, 0).tokens() == TokenSet{c.cons({c.empty()}, c.empty())});
  Term i01 = bar_I(c, {0, 1});
  CHECK(fires(ev, i01, Stack::seq({top(c), top(c)})));
  CHECK_FALSE(fires(ev, i01, Stack::seq({top(c), bot()})));
  CHECK_FALSE(fires(ev, i01, Stack::seq({bot(), top(c)})));
}

TEST_CASE("k_of") {
  Context c;
  Eval ev(c, Universe{});
  Term k = k_of(Stack::seq({}));
  CHECK(tokens_over(ev, k) == TokenSet{c.nu(0)});
  // k_pi leaves P once pi holds a grade 1 token: nu_0 lies below top_D.bot
  CHECK(is_prooflike(ev, k_of(Stack::seq({top(c)}))).status == ProoflikeResult::No);
  // below 0.bot there are only the grade 0 tokens empty and {(0,nu_0)}
  CHECK(is_prooflike(ev, k_of(Stack::seq({numeral(c, 0)}))).status == ProoflikeResult::Yes);

  std::vector<Term> terms;
  for (const TokenSet& ts : cliques(c, c.enumerate(ev.u), 2)) terms.push_back(finite(c, ts));
  std::vector<Term> comps{bot(), top(c), numeral(c, 0), numeral(c, 1)};
  std::vector<Stack> stacks = stack_family(comps, 2);
  for (const Stack& pi : stacks) {
    Term kp = k_of(pi);
    for (const Term& t : terms)
      for (std::size_t j = 0; j < stacks.size(); j += 5) CHECK(fires(ev, kp, push(c, t, stacks[j])) == fires(ev, t, pi));
  }
}

TEST_CASE("cc") {
  Context c;
  Eval ev(c, Universe{});
  Token smallest = c.cons({c.cons({c.nu(0)}, c.empty())}, c.empty());
  CHECK(smallest == c.make({{0, c.make({{0, c.nu(0)}})}}));
  CHECK(cc().contains(ev, smallest) == Tri::Yes);
  CHECK(c.grade(smallest) == 1);
  for (Token b : cc().generate(ev)) REQUIRE(c.grade(b) == 1);

  std::vector<Term> comps{bot(), top(c), numeral(c, 0), numeral(c, 1)};
  for (const Stack& pi : stack_family(comps, 2))
    for (const TokenSet& ts : cliques(c, c.enumerate(ev.u), 2)) {
      Term t = finite(c, ts);
      CHECK(fires(ev, cc(), push(c, t, pi)) == fires(ev, t, push(c, k_of(pi), pi)));
    }
}

TEST_CASE("proof-likeness") {
  Context c;
  Eval ev(c, Universe{});
  ProoflikeResult t = is_prooflike(ev, top(c));
  CHECK(t.status == ProoflikeResult::No);
  REQUIRE(t.witness.has_value());
  CHECK(*t.witness == c.empty());
  CHECK(is_prooflike(ev, numeral(c, 2)).status == ProoflikeResult::Yes);
  ProoflikeResult i = is_prooflike(ev, identity());
  CHECK(i.status == ProoflikeResult::Yes);
  CHECK(i.bounded);
}

TEST_CASE("r_P and h") {
  Context c;
  Eval ev(c, Universe{});
  CHECK(tokens_over(ev, r_P(ev, top(c))).empty());
  CHECK(tokens_over(ev, r_P(ev, numeral(c, 1))) == TokenSet{c.nu(1)});

  std::vector<Term> comps{bot(), top(c), numeral(c, 0), finite(c, {c.hat(c.nu(0))})};
  std::vector<Stack> stacks = stack_family(comps, 2);
  for (const TokenSet& ts : cliques(c, c.enumerate(ev.u), 2)) {
    Term t = finite(c, ts);
    bool has_empty = set_contains(ts, c.empty());
    CHECK(tokens_over(ev, h(ev, 1, t)) == (has_empty ? TokenSet{c.empty()} : TokenSet{}));
    CHECK(tokens_over(ev, h(ev, 0, t)).empty());
    for (std::uint32_t n = 1; n <= 3; ++n) {
      Term hn = h(ev, n, t);
      for (Token a : tokens_over(ev, hn)) CHECK(set_contains(ts, a));
      // functional definition: (h_n t)(s) = t(h_{n-1} s_0, h_{n-1} s_1, ...)
      for (const Stack& s : stacks) {
        std::vector<Term> inner;
        for (const Term& x : s.items()) inner.push_back(h(ev, n - 1, x));
        Tail tail = s.tail() == Tail::Top && n >= 2 ? Tail::Top : Tail::Empty;
        CHECK(fires(ev, hn, s) == fires(ev, t, Stack::seq(inner, tail)));
      }
    }
  }
  for (std::uint32_t n = 2; n <= 3; ++n)
    for (std::uint32_t m = 0; m < ev.u.width; ++m) CHECK(tokens_over(ev, h(ev, n, numeral(c, m))) == TokenSet{c.nu(m)});
}

TEST_CASE("stack forms") {
  Context c;
  Eval ev(c, Universe{});
  Stack s = Stack::seq({numeral(c, 1), top(c)});
  Stack i = Stack::ideal(c, {c.make({{0, c.nu(1)}, {1, c.empty()}})});
  for (Token a : c.enumerate(ev.u)) CHECK(s.contains(ev, a) == i.contains(ev, a));
  CHECK(i.contains(ev, c.empty()) == Tri::Yes);
  Stack back = i.to_seq(c);
  REQUIRE(back.items().size() == 2);
  CHECK(back.items()[0].tokens() == TokenSet{c.nu(1)});
  CHECK(back.items()[1].tokens() == TokenSet{c.empty()});
  CHECK(i.principal(c).has_value());
}

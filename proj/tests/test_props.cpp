#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "cohrealiz/antichain.hpp"
#include "cohrealiz/arith.hpp"
#include "cohrealiz/stable.hpp"
#include "cohrealiz/witness.hpp"

using namespace coh;

namespace {

bool fires(Eval& ev, const Term& t, const Stack& s) { return evaluate(ev, t, s).verdict == Verdict3::Top; }

TokenSet tokens_over(Eval& ev, const Term& t) {
  std::vector<Token> out;
  for (Token a : ev.ctx.enumerate(ev.u))
    if (t.contains(ev, a) == Tri::Yes) out.push_back(a);
  return make_set(out);
}

std::vector<Stack> test_stacks(Context& c) {
  return stack_family({bot(), top(c), numeral(c, 0), numeral(c, 1)}, 2);
}

}  // namespace

TEST_CASE("orthogonality") {
  Context c;
  Eval ev(c, Universe{});
  BoundedUniverse u = bounded_universe(ev, 2);
  REQUIRE_FALSE(u.stacks.empty());
  CHECK(orthogonal(ev, {top(c)}, u.stacks).size() == u.stacks.size());
  CHECK(orthogonal(ev, {}, u.stacks).size() == u.stacks.size());
  CHECK(orthogonal(ev, {bot()}, u.stacks).empty());

  // the only finite term firing everywhere is top_D
  std::vector<Term> closure = biorth(ev, {top(c)}, u);
  REQUIRE(closure.size() == 1);
  CHECK(closure[0].tokens() == top(c).tokens());
  std::vector<Term> from_empty = biorth(ev, {}, u);
  REQUIRE(from_empty.size() == 1);
  CHECK(from_empty[0].tokens() == top(c).tokens());

  // extensive, and orthogonality is antitone
  for (std::size_t i = 0; i < u.terms.size(); i += 11) {
    std::vector<Term> a{u.terms[i]};
    std::vector<Term> cl = biorth(ev, a, u);
    CHECK(std::any_of(cl.begin(), cl.end(), [&](const Term& t) { return t.tokens() == u.terms[i].tokens(); }));
    std::vector<Term> ab{u.terms[i], numeral(c, 0)};
    CHECK(orthogonal(ev, ab, u.stacks).size() <= orthogonal(ev, a, u.stacks).size());
  }
}

TEST_CASE("prop constants") {
  Context c;
  Eval ev(c, Universe{});
  Prop t = top_prop(), b = bot_prop(), u = u_prop();
  for (const TokenSet& ts : cliques(c, c.enumerate(ev.u), 2)) {
    Term x = finite(c, ts);
    CHECK(member(ev, x, t) == Tri::Yes);
    bool is_top = ts == top(c).tokens();
    CHECK((member(ev, x, b) == Tri::Yes) == is_top);
    CHECK(member(ev, x, u) == member(ev, x, b));
  }
  Verdict v = check_realizer(ev, bot(), b);
  CHECK(v.kind == Verdict::Refuted);
  REQUIRE(v.counterexample.has_value());
  CHECK_FALSE(fires(ev, bot(), *v.counterexample));
  CHECK(check_realizer(ev, top(c), b).kind == Verdict::Realizes);
}

TEST_CASE("implication and intersection") {
  Context c;
  Eval ev(c, Universe{});
  Prop a = falsity_prop(c, {c.make({{0, c.nu(0)}})}, "A");
  Prop to_top = implies(ev, a, top_prop());
  CHECK(to_top.falsity.empty());
  for (const TokenSet& ts : cliques(c, c.enumerate(ev.u), 2)) CHECK(member(ev, finite(c, ts), to_top) == Tri::Yes);

  // top -> U holds of the terms returning top_D on every argument
  Prop tu = implies(ev, top_prop(), u_prop());
  CHECK(member(ev, top(c), tu) == Tri::Yes);
  Term konst = interpret(ev, lam("x", constant(Syntax::Kind::Top)));
  CHECK(member(ev, konst, tu) == Tri::Yes);
  CHECK(member(ev, identity(), tu) == Tri::No);

  Prop b = falsity_prop(c, {c.make({{1, c.nu(1)}})}, "B");
  Prop ab = forall({a, b});
  CHECK(ab.falsity.size() == a.falsity.size() + b.falsity.size());
  for (const TokenSet& ts : cliques(c, c.enumerate(ev.u), 2)) {
    Term x = finite(c, ts);
    bool both = member(ev, x, a) == Tri::Yes && member(ev, x, b) == Tri::Yes;
    CHECK((member(ev, x, ab) == Tri::Yes) == both);
  }
}

TEST_CASE("j_U constants") {
  Context c;
  Eval ev(c, Universe{});
  Prop j_empty = j_U(ev, truth_prop({}, "empty"));
  CHECK(member(ev, top(c), j_empty) == Tri::Yes);
  CHECK(member(ev, numeral(c, 0), j_empty) == Tri::No);
  Prop j_all = j_U(ev, top_prop());
  CHECK(member(ev, numeral(c, 0), j_all) == Tri::Yes);
  CHECK(member(ev, bot(), j_all) == Tri::No);
  CHECK(check_jU_constants(ev).passed());
}

TEST_CASE("realizers of j_U(A) <-> A") {
  Context c;
  Eval ev(c, Universe{});
  std::vector<Prop> family = generated_props(ev, 20);
  REQUIRE(family.size() >= 20);
  Report r = lemma1_suite(ev, family);
  for (const Check& k : r.checks) {
    CAPTURE(k.id);
    CHECK(k.status == Status::Pass);
  }
  for (const Prop& a : family) CHECK(check_realizer(ev, eta(ev), implies(ev, a, j_U(ev, a))).kind == Verdict::Realizes);
}

TEST_CASE("equality predicates") {
  Context c;
  Eval ev(c, Universe{});
  for (std::uint32_t n = 0; n < 2; ++n) {
    Prop same = eq_pred(c, EqKind::NK, n, n);
    CHECK(member(ev, numeral(c, n), same) == Tri::Yes);
    CHECK(member(ev, top(c), same) == Tri::Yes);
    CHECK(member(ev, numeral(c, 1 - n), same) == Tri::No);
    Prop other = eq_pred(c, EqKind::NK, n, 1 - n);
    for (const TokenSet& ts : cliques(c, c.enumerate(ev.u), 2))
      CHECK((member(ev, finite(c, ts), other) == Tri::Yes) == (ts == top(c).tokens()));
  }
  Prop u_same = eq_pred(c, EqKind::UTripos, 1, 1);
  CHECK(member(ev, numeral(c, 0), u_same) == Tri::Yes);
  CHECK(member(ev, numeral(c, 1), u_same) == Tri::No);
  CHECK(member(ev, bot(), eq_pred(c, EqKind::E, 0, 0)) == Tri::Yes);
  CHECK(member(ev, top(c), eq_pred(c, EqKind::E, 0, 1)) == Tri::No);
  CHECK(member(ev, numeral(c, 2), ne_pred(c, 2, 2)) == Tri::Yes);
  CHECK(member(ev, top(c), ne_pred(c, 2, 3)) == Tri::No);
  CHECK(check_NK_realizers(ev, 4).passed());
}

TEST_CASE("e swaps its arguments") {
  Context c;
  Eval ev(c, Universe{});
  Term e = e_term();
  CHECK(tokens_over(ev, apply(ev, e, top(c))) == tokens_over(ev, top(c)));
  std::vector<Term> ds{bot(), top(c), finite(c, {c.cons({c.nu(0)}, c.empty())}), finite(c, {c.cons({c.nu(1)}, c.nu(0))})};
  for (std::uint32_t n = 0; n < 2; ++n)
    for (const Term& d : ds)
      for (const Stack& s : test_stacks(c))
        CHECK(fires(ev, apply(ev, apply(ev, e, numeral(c, n)), d), s) == fires(ev, apply(ev, d, numeral(c, n)), s));
}

TEST_CASE("prop json round trip") {
  Context c;
  Eval ev(c, Universe{});
  Prop a = falsity_prop(c, {c.make({{0, c.nu(0)}}), c.make({{1, c.empty()}})}, "A");
  json j = prop_to_json(c, a);
  Prop b = prop_from_json(ev, j);
  CHECK(b.label == "A");
  CHECK(prop_to_json(c, b) == j);
  CHECK_THROWS_AS(prop_from_json(ev, json::parse(R"({"falsity": 3})")), FormatError);
}

TEST_CASE("arithmetic sentences") {
  Context c;
  Eval ev(c, Universe{});
  Sentence zero = parse_sentence("0 = 0");
  CHECK(truth(zero));
  ArithResult r0 = arith_realize(ev, zero);
  CHECK(r0.realizer.tokens() == numeral(c, 0).tokens());
  CHECK(r0.verdict.kind == Verdict::Realizes);

  ArithResult rf = arith_realize(ev, parse_sentence("forall x<=2. x+0 = x"));
  CHECK(rf.verdict.kind == Verdict::Realizes);
  CHECK(rf.prooflike.status == ProoflikeResult::Yes);
  CHECK(tokens_over(ev, apply(ev, rf.realizer, top(c))) == tokens_over(ev, top(c)));
  for (std::uint32_t n = 0; n <= 2; ++n)
    CHECK(tokens_over(ev, apply(ev, rf.realizer, numeral(c, n))) == tokens_over(ev, numeral(c, n)));

  ArithResult re = arith_realize(ev, parse_sentence("exists x<=2. x = 1"));
  CHECK(re.verdict.kind == Verdict::Realizes);
  CHECK(re.prooflike.status == ProoflikeResult::Yes);

  CHECK_FALSE(truth(parse_sentence("forall x<=2. x*x = x")));
  CHECK_THROWS_AS(arith_realize(ev, parse_sentence("1 = 2")), FalseSentence);
  CHECK_THROWS_AS(parse_sentence("forall x<=2. x = y"), ArithParseError);
  CHECK_THROWS_AS(parse_sentence("forall x<=2. forall x<=1. x = x"), ArithParseError);
  CHECK_THROWS_AS(parse_sentence("0 = "), ArithParseError);
}

TEST_CASE("arithmetic fixtures") {
  Context c;
  Eval ev(c, Universe{});
  for (const ArithFixture& f : arith_fixtures()) {
    CAPTURE(f.text);
    Sentence s = parse_sentence(f.text);
    REQUIRE(truth(s) == f.true_sentence);
    if (!f.true_sentence) continue;
    ev.fuel = Fuel(ev.u.fuel);
    ArithResult r = arith_realize(ev, s);
    CHECK(r.verdict.kind == Verdict::Realizes);
    CHECK(r.prooflike.status == ProoflikeResult::Yes);
  }
}

TEST_CASE("infinity witness") {
  Context c;
  Eval ev(c, Universe{});
  InfinityReport w = infinity_witness(ev);
  CHECK(tokens_over(ev, apply(ev, w.t, top(c))) == tokens_over(ev, top(c)));
  CHECK(tokens_over(ev, apply(ev, w.t, bar_I(c, {0, 1}))) == tokens_over(ev, numeral(c, 0)));
  CHECK(tokens_over(ev, apply(ev, w.t, bar_I(c, {1}))) == tokens_over(ev, numeral(c, 0)));
  CHECK(is_prooflike(ev, w.t).status == ProoflikeResult::Yes);
  for (const Check& k : w.report.checks) {
    CAPTURE(k.id);
    CHECK(k.status == Status::Pass);
  }
}

TEST_CASE("antichains") {
  Context c;
  Token g0 = c.cons({c.nu(0)}, c.nu(0)), g1 = c.cons({c.nu(1)}, c.nu(1));
  TokenSet x{g0}, y{g1};
  REQUIRE(compatible(c, x, y));
  Antichain ax = make_antichain(c, {x}), ay = make_antichain(c, {y});
  Antichain m = antichain_meet(c, ax, ay);
  CHECK(m == make_antichain(c, {make_set({g0, g1})}));
  CHECK(antichain_meet(c, ax, ax) == ax);
  CHECK(antichain_meet(c, std::vector<Antichain>{}) == make_antichain(c, {TokenSet{}}));

  // incompatible cones: the meet is empty, still an antichain
  TokenSet p{c.nu(0)}, q{c.nu(1)};
  REQUIRE_FALSE(compatible(c, p, q));
  CHECK(antichain_meet(c, make_antichain(c, {p}), make_antichain(c, {q})).min_elems.empty());

  // two points of each: several minimal elements survive
  Antichain pq = make_antichain(c, {p, q});
  Antichain r = antichain_meet(c, pq, make_antichain(c, {p, TokenSet{c.nu(2)}}));
  CHECK(r == make_antichain(c, {p}));

  CHECK_THROWS_AS(make_antichain(c, {x, y}), CliqueError);
  CHECK(in_up(ax, make_set({g0, g1})));
  CHECK_FALSE(in_up(ax, y));
  CHECK(below(x, make_set({g0, g1})));

  // conditions checked pointwise on a random family
  Eval ev(c, Universe{});
  std::vector<TokenSet> points = cliques(c, c.enumerate(ev.u), 2);
  std::mt19937_64 rng(7);
  for (int i = 0; i < 20; ++i) {
    Antichain a = random_antichain(c, points, rng, 3), b = random_antichain(c, points, rng, 3);
    Antichain ab = antichain_meet(c, a, b);
    Conditions k = check_conditions(c, ab, points, [&](const TokenSet& s) { return in_up(a, s) && in_up(b, s); });
    CHECK(k.ok());
  }
  CHECK(antichain_suite(ev, 30, 3).passed());
}

TEST_CASE("minimal element of an orthogonal") {
  Context c;
  Eval ev(c, Universe{});
  Term u = bar_I(c, {0});
  Term m = minimize_orthogonal(ev, u, {Stack::seq({top(c)})});
  CHECK(m.tokens() == u.tokens());
  // tokens below no stack of C are dropped
  Term two = finite(c, {c.make({{0, c.empty()}, {1, c.empty()}})});
  CHECK(minimize_orthogonal(ev, two, {Stack::seq({top(c)})}).tokens().empty());
}

TEST_CASE("countable witness") {
  Context c;
  Eval ev(c, Universe{});
  CountableResult top_only = countable_witness(ev, {top(c)});
  CHECK(top_only.verdict.kind == Verdict::Refuted);
  REQUIRE(top_only.verdict.counterexample.has_value());
  CHECK_THROWS_AS(countable_witness(ev, {}), std::invalid_argument);

  std::vector<std::vector<Term>> fx = countable_fixtures(c);
  REQUIRE(fx.size() == 3);
  for (std::size_t i = 0; i + 1 < fx.size(); ++i) {
    CAPTURE(i);
    CountableResult r = countable_witness(ev, fx[i]);
    CHECK(r.verdict.kind == Verdict::Realizes);
    REQUIRE(r.witness.has_value());
    CHECK(is_prooflike(ev, *r.witness).status == ProoflikeResult::Yes);
    CHECK(r.normalized.size() == fx[i].size());
    CHECK_FALSE(r.tree.empty());
  }
  CHECK(countable_suite(ev).passed());

  // stable meet against its definition
  Term a = finite(c, {c.nu(0)});
  CHECK(stable_meet(c, a, a).tokens() == a.tokens());
  CHECK(stable_meet(c, top(c), a).tokens() == a.tokens());
}

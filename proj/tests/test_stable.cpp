#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cohrealiz/stable.hpp"

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

TEST_CASE("trace of the identity") {
  Context c;
  Eval ev(c, Universe{});
  Trace tr = trace_of(ev, [](const Term& x) { return x; });
  CHECK(tr.withheld.empty());
  CHECK(tr.entries.size() == c.enumerate(ev.u).size());
  for (const TraceEntry& e : tr.entries) CHECK(e.argument == TokenSet{e.value});
  Term i = fun(c, tr.entries);
  CHECK(tokens_over(ev, i) == tokens_over(ev, identity()));
}

TEST_CASE("trace of a constant") {
  Context c;
  Eval ev(c, Universe{});
  Trace tr = trace_of(ev, [&](const Term&) { return top(c); });
  REQUIRE(tr.entries.size() == 1);
  CHECK(tr.entries[0].argument.empty());
  CHECK(tr.entries[0].value == c.empty());
  CHECK(fun(c, {}).tokens().empty());
}

TEST_CASE("trace of application splits heads") {
  Context c;
  Eval ev(c, Universe{});
  Token n0 = c.nu(0), n1 = c.nu(1);
  Term t = finite(c, {c.cons({n0}, n1), c.cons({n1}, n0)});
  Trace tr = trace_of(ev, [&](const Term& x) { return apply(ev, t, x); });
  std::vector<Token> rebuilt;
  for (const TraceEntry& e : tr.entries) rebuilt.push_back(c.cons(e.argument, e.value));
  CHECK(make_set(rebuilt) == t.tokens());
}

TEST_CASE("fun reports incoherent entries") {
  Context c;
  // (empty, nu_0) and (empty, nu_1) give incoherent tokens
  CHECK_THROWS_AS(fun(c, {{{}, c.nu(0)}, {{}, c.nu(1)}}), CliqueError);
}

TEST_CASE("fun and apply round trip") {
  Context c;
  Eval ev(c, Universe{});
  Term t = interpret(ev, lam("x", lam("y", var("x"))));
  auto f = [&](const Term& x) { return apply(ev, t, x); };
  Term back = fun(c, trace_of(ev, f).entries);
  for (const TokenSet& s : cliques(c, c.enumerate(ev.u), ev.u.width)) {
    Term a = finite(c, s);
    CHECK(tokens_over(ev, apply(ev, back, a)) == tokens_over(ev, f(a)));
  }
}

TEST_CASE("interpretation") {
  Context c;
  Eval ev(c, Universe{});
  CHECK(tokens_over(ev, interpret(ev, lam("x", var("x")))) == tokens_over(ev, identity()));
  Term in = interpret(ev, app(lam("x", var("x")), num(1)));
  for (const Stack& s : test_stacks(c)) CHECK(fires(ev, in, s) == fires(ev, numeral(c, 1), s));

  // eta x p = p x
  Term eta = interpret(ev, lam("x", lam("p", app(var("p"), var("x")))));
  Term p = finite(c, {c.cons({c.nu(0)}, c.empty())});
  for (const Stack& s : test_stacks(c))
    CHECK(fires(ev, apply(ev, apply(ev, eta, numeral(c, 0)), p), s) == fires(ev, apply(ev, p, numeral(c, 0)), s));

  CHECK_THROWS_AS(interpret(ev, var("z")), UnboundVariable);
}

TEST_CASE("parser") {
  Context c;
  Eval ev(c, Universe{});
  SyntaxPtr e = parse_term(c, "(lam x (app x (num 2)))");
  CHECK(to_text(*e) == "(lam x (app x (num 2)))");
  CHECK(is_closed(*e));
  CHECK(is_pure_lambda(*parse_term(c, "(lam x x)")));
  CHECK_FALSE(is_pure_lambda(*parse_term(c, "(lam x top)")));
  StackSyntax s = parse_stack(c, "(stack bot bot top)");
  CHECK(s.items.size() == 2);
  CHECK(s.tail == Tail::Top);
  CHECK(fires(ev, interpret(ev, parse_term(c, "(num 2)")), interpret_stack(ev, s)));
  CHECK_THROWS_AS(parse_term(c, "(lam x"), ParseError);
  try {
    parse_term(c, "(num x)");
    FAIL("expected a parse error");
  } catch (const ParseError& err) {
    CHECK(err.pos() > 0);
  }
}

TEST_CASE("lambda terms are proof-like") {
  Context c;
  Eval ev(c, Universe{});
  for (const auto& [name, e] : lambda_fixtures()) {
    CAPTURE(name);
    REQUIRE(is_pure_lambda(*e));
    CHECK(is_prooflike(ev, interpret(ev, e)).status == ProoflikeResult::Yes);
  }
}

TEST_CASE("no parallel or") {
  Context c;
  Eval ev(c, Universe{});
  Term t = top(c), b = bot();
  Stack empty = Stack::seq({});
  // top_D satisfies all three equations and is not proof-like
  CHECK(fires(ev, apply(ev, apply(ev, t, b), b), empty));
  CHECK(is_prooflike(ev, t).status == ProoflikeResult::No);
  // K fails the premise
  Term k = interpret(ev, lam("x", lam("y", var("x"))));
  CHECK_FALSE(fires(ev, apply(ev, apply(ev, k, b), t), empty));

  PorReport r = por_obstruction(ev, 3);
  CHECK(r.scanned == 1 + 25 + 228 + 1192);
  CHECK(r.premise >= 1);
  CHECK(r.counterexamples.empty());
}

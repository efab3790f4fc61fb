#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cohrealiz/barrec.hpp"

using namespace coh;

namespace {

// Y fires iff component 0 is top_D; G_0 asks the argument about one probe
BRInstance slot_zero(Context& c, Term probe) {
  BRInstance inst;
  inst.y = make_y(c, numeral(c, 0));
  inst.g.push_back(GFun{{std::move(probe)}, {{0}}});
  return inst;
}

}  // namespace

TEST_CASE("constant Y") {
  Context c;
  Eval ev(c, Universe{});
  BRInstance inst;
  inst.y = make_y(c, top(c));
  CHECK(inst.y.modulus == 0);
  BRResult r = br(ev, inst, {});
  CHECK(r.kind == BRResult::Top);
  CHECK(r.stage == 1);

  inst.y = make_y(c, bot());
  BRResult b = br(ev, inst, {});
  CHECK(b.kind == BRResult::Bot);
}

TEST_CASE("Y reading slot zero") {
  Context c;
  Eval ev(c, Universe{});
  // hand iteration: Psi(<x>) = Y(x) = [top_D in x], so Psi(<>) = G_0(Psi(<.>))
  BRInstance steer = slot_zero(c, top(c));
  CHECK(steer.y.modulus == 1);
  BRResult r = br(ev, steer, {});
  CHECK(r.kind == BRResult::Top);
  CHECK(r.table.at(SeqD{top(c).tokens()}));

  BRInstance miss = slot_zero(c, numeral(c, 0));
  BRResult m = br(ev, miss, {});
  CHECK(m.kind == BRResult::Bot);
  CHECK_FALSE(m.table.at(SeqD{numeral(c, 0).tokens()}));

  // a sequence already past the modulus is decided by Y alone
  CHECK(br(ev, miss, SeqD{top(c).tokens()}).kind == BRResult::Top);
  CHECK(br(ev, miss, SeqD{TokenSet{}}).kind == BRResult::Bot);
}

TEST_CASE("the table is a fixpoint") {
  Context c;
  Eval ev(c, Universe{});
  std::vector<BRInstance> insts{slot_zero(c, top(c)), slot_zero(c, bot()), constructed_instance(c)};
  for (BRInstance& g : generated_instances(ev, 6, 11)) insts.push_back(g);
  for (const BRInstance& inst : insts) {
    BRResult r = br(ev, inst, {});
    REQUIRE(r.kind != BRResult::Inconclusive);
    CHECK(r.monotone);
    CHECK_FALSE(r.table.empty());
    for (const auto& [s, v] : r.table)
      if (s.size() < inst.y.modulus) CHECK(br_rhs(ev, inst, s, r.table) == v);
  }
}

TEST_CASE("functionals") {
  Context c;
  Eval ev(c, Universe{});
  YFun y = make_y(c, bar_I(c, {0, 1}));
  CHECK(y.modulus == 2);
  CHECK(y(ev, {top(c), top(c), bot()}));
  CHECK_FALSE(y(ev, {top(c), bot(), top(c)}));
  CHECK_THROWS_AS(make_y(c, bar_I(c, {0, 1}), 1), FormatError);
  CHECK(make_y(c, bar_I(c, {0}), 3).modulus == 3);

  GFun g{{numeral(c, 0), numeral(c, 1)}, {{0, 1}, {1}}};
  CHECK(g([](const Term&) { return true; }));
  CHECK_FALSE(g([](const Term&) { return false; }));
  Context& cc = c;
  CHECK(g([&](const Term& x) { return x.tokens() == numeral(cc, 1).tokens(); }));
  CHECK_FALSE(g([&](const Term& x) { return x.tokens() == numeral(cc, 0).tokens(); }));

  BRInstance inst = slot_zero(c, top(c));
  CHECK(inst.g_at(0) == &inst.g[0]);
  CHECK(inst.g_at(5) == &inst.g[0]);
  BRInstance none;
  CHECK(none.g_at(0) == nullptr);
}

TEST_CASE("proof-likeness over finite types") {
  Context c;
  Eval ev(c, Universe{});
  CHECK(pl_sigma(false));
  CHECK_FALSE(pl_sigma(true));
  CHECK(pl_d(ev, numeral(c, 3)));
  CHECK_FALSE(pl_d(ev, top(c)));
  std::vector<Term> probes{numeral(c, 0), top(c)};
  CHECK_FALSE(pl_d_sigma(ev, [](const Term&) { return true; }, probes));
  CHECK(pl_d_sigma(ev, [&](const Term& x) { return x.tokens() == top(c).tokens(); }, probes));
  // the largest proof-like argument is top only off P, so G firing on top_D leaves PL
  CHECK_FALSE(pl_g(ev, GFun{{top(c)}, {{0}}}));
  CHECK(pl_g(ev, GFun{{numeral(c, 0)}, {{0}}}));
  CHECK(pl_g(ev, GFun{{numeral(c, 0), top(c)}, {{0, 1}}}));
  CHECK(br_prooflike(ev, 40, 5).passed());
}

TEST_CASE("double negation shift") {
  Context c;
  Eval ev(c, Universe{});
  DnsResult d = dns_check(ev, constructed_instance(c));
  CHECK(d.kind == Verdict::Realizes);
  REQUIRE(d.run.has_value());
  CHECK(d.run->kind == BRResult::Top);
  for (const Check& k : d.report.checks) {
    CAPTURE(k.id);
    CHECK(k.status == Status::Pass);
  }
  CHECK(modulus_samples(ev, constructed_instance(c).y, 50, 2).passed());

  BRInstance zero;
  zero.y = make_y(c, top(c));
  DnsResult z = dns_check(ev, zero);
  CHECK(z.kind == Verdict::Realizes);
  REQUIRE(z.run.has_value());
  CHECK(z.run->stage == 1);

  BRInstance broken = constructed_instance(c);
  broken.g[0].rows.clear();
  DnsResult b = dns_check(ev, broken);
  CHECK(b.kind == Verdict::Refuted);
  CHECK_FALSE(b.run.has_value());
  CHECK_FALSE(b.failure.empty());

  for (const BRInstance& inst : generated_instances(ev, 10, 1)) {
    Eval e(c, Universe{});
    CHECK(dns_check(e, inst).kind == Verdict::Realizes);
  }
}

TEST_CASE("instance json") {
  Context c, d;
  Eval ev(d, Universe{});
  BRInstance inst = constructed_instance(c);
  json j = instance_to_json(c, inst);
  BRInstance back = instance_from_json(ev, j);
  CHECK(back.n == inst.n);
  CHECK(back.y.modulus == inst.y.modulus);
  CHECK(back.g.size() == inst.g.size());
  CHECK(instance_to_json(d, back) == j);
  CHECK(dns_check(ev, back).kind == Verdict::Realizes);

  json bad = j;
  bad["Y"]["modulus"] = 0;
  CHECK_THROWS_AS(instance_from_json(ev, bad), FormatError);
  CHECK_THROWS_AS(instance_from_json(ev, json::parse("[]")), FormatError);
}

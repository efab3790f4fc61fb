#include "cohrealiz/witness.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "cohrealiz/stable.hpp"

namespace coh {

Term infinity_term(Context& ctx) {
  Token nu0 = ctx.nu(0);
  std::vector<TraceEntry> tr{{{ctx.empty()}, ctx.empty()}};
  for (std::vector<std::uint32_t> i : {std::vector<std::uint32_t>{0}, {1}, {0, 1}})
    tr.push_back({bar_I(ctx, i).tokens(), nu0});
  return fun(ctx, tr);
}

Prop boolean_arrow(Eval& ev, bool a, bool b, bool c) {
  auto p = [](bool v) { return v ? top_prop() : bot_prop(); };
  Prop r = implies(ev, p(a), implies(ev, p(b), p(c)));
  r.label = std::string(a ? "top" : "bot") + "," + (b ? "top" : "bot") + "->" + (c ? "top" : "bot");
  return r;
}

InfinityReport infinity_witness(Eval& ev) {
  Context& ctx = ev.ctx;
  InfinityReport out{infinity_term(ctx), {}};
  Report& rep = out.report;
  const Term& t = out.t;

  rep.add("t top_D = top_D", apply(ev, t, top(ctx)).tokens() == top(ctx).tokens());
  for (std::vector<std::uint32_t> i : {std::vector<std::uint32_t>{0}, {1}, {0, 1}}) {
    std::string name = i.size() == 2 ? "{0,1}" : "{" + std::to_string(i[0]) + "}";
    rep.add("t I = 0 for I = " + name, apply(ev, t, bar_I(ctx, i)).tokens() == numeral(ctx, 0).tokens());
  }
  ProoflikeResult pl = is_prooflike(ev, t);
  rep.add("t is proof-like", pl.status == ProoflikeResult::Yes);

  Prop a = forall({boolean_arrow(ev, true, false, false), boolean_arrow(ev, false, true, false)}, "A");
  Prop printed = forall({boolean_arrow(ev, true, false, false), boolean_arrow(ev, false, true, true)}, "A'");
  Prop ff = boolean_arrow(ev, false, false, false);
  std::vector<Token> bars;
  for (std::vector<std::uint32_t> i : {std::vector<std::uint32_t>{0}, {1}, {0, 1}}) bars.push_back(bar_I(ctx, i).tokens()[0]);

  std::vector<TokenSet> all = cliques(ctx, ctx.enumerate(ev.u), std::numeric_limits<std::size_t>::max());
  std::size_t bad1 = 0, bad2 = 0, printed_extra = 0;
  std::string printed_first;
  for (const TokenSet& c : all) {
    Term u = finite(ctx, c);
    bool above_top = set_contains(c, ctx.empty());
    if ((member(ev, u, a) == Tri::Yes) != above_top) ++bad1;
    if (member(ev, u, printed) == Tri::Yes && !above_top) {
      if (printed_extra++ == 0) printed_first = describe(ctx, u);
    }
    bool above_bar = above_top;
    for (Token b : bars) above_bar = above_bar || set_contains(c, b);
    if ((member(ev, u, ff) == Tri::Yes) != above_bar) ++bad2;
  }
  std::string n = std::to_string(all.size()) + " cliques";
  rep.add("(1) top_D <= u iff u in |top,bot->bot| n |bot,top->bot|", bad1 == 0, n + ", " + std::to_string(bad1) + " mismatches");
  rep.add("(1) with |bot,top->top| also admits terms above 1", printed_extra > 0,
          std::to_string(printed_extra) + " extra members, first " + printed_first);
  rep.add("(2) u realizes bot,bot->bot iff u = top_D or u above some I", bad2 == 0,
          n + ", " + std::to_string(bad2) + " mismatches");

  Verdict v1 = check_realizer(ev, t, implies(ev, a, implies(ev, top_prop(), bot_prop())));
  Verdict v2 = check_realizer(ev, t, implies(ev, ff, implies(ev, bot_prop(), bot_prop())));
  rep.add("t realizes A, top -> bot", v1.kind == Verdict::Realizes, to_string(v1.kind));
  rep.add("t realizes (bot,bot->bot), bot -> bot", v2.kind == Verdict::Realizes, to_string(v2.kind));
  return out;
}

Term stable_meet(Context& ctx, const Term& a, const Term& b) {
  std::vector<Token> joins;
  for (Token x : a.tokens())
    for (Token y : b.tokens()) {
      Token u = ctx.unite(x, y);
      if (ctx.web(u)) joins.push_back(u);
    }
  std::sort(joins.begin(), joins.end());
  joins.erase(std::unique(joins.begin(), joins.end()), joins.end());
  std::vector<Token> minimal;
  for (Token x : joins) {
    bool keep = true;
    for (Token y : joins)
      if (y != x && ctx.subset(y, x)) {
        keep = false;
        break;
      }
    if (keep) minimal.push_back(x);
  }
  return finite(ctx, minimal, "meet");
}

CountableResult countable_witness(Eval& ev, const std::vector<Term>& chain) {
  if (chain.empty()) throw std::invalid_argument("countable_witness: empty chain");
  Context& ctx = ev.ctx;
  CountableResult out;
  out.normalized.push_back(chain[0]);
  for (std::size_t i = 1; i < chain.size(); ++i) out.normalized.push_back(stable_meet(ctx, out.normalized.back(), chain[i]));

  // A^perp at the last stage: a proof-like principal stack refutes the premise
  std::vector<Token> last = out.normalized.back().tokens();
  ctx.sort_canonical(last);
  for (Token a : last)
    if (ctx.grade(a) == 0) {
      out.verdict.kind = Verdict::Refuted;
      out.verdict.counterexample = Stack::ideal(ctx, {a});
      return out;
    }

  std::vector<std::size_t> prev;
  for (std::size_t n = 0; n < out.normalized.size(); ++n) {
    std::vector<Token> level = out.normalized[n].tokens();
    ctx.sort_canonical(level);
    std::vector<std::size_t> cur;
    for (Token b : level) {
      TreeNode node{n, b, std::nullopt, ctx.grade(b) == 1};
      for (std::size_t p : prev)
        if (ctx.subset(out.tree[p].token, b)) {
          node.parent = p;
          break;
        }
      if (n > 0 && !node.parent) throw CliqueError("countable_witness: node without ancestor");
      cur.push_back(out.tree.size());
      out.tree.push_back(node);
    }
    prev = std::move(cur);
  }

  // frontier: nodes leaving P^omega whose ancestors all stay inside
  std::vector<Token> frontier;
  for (const TreeNode& node : out.tree) {
    if (!node.leaves_p) continue;
    bool first = true;
    for (auto p = node.parent; p && first; p = out.tree[*p].parent)
      if (out.tree[*p].leaves_p) first = false;
    if (first) frontier.push_back(node.token);
  }
  out.witness = finite(ctx, frontier);
  return out;
}

std::vector<std::vector<Term>> countable_fixtures(Context& ctx) {
  auto tok = [&](std::vector<Entry> es) { return ctx.make(std::move(es)); };
  Token e = ctx.empty(), n0 = ctx.nu(0), n1 = ctx.nu(1);
  Term t0 = top(ctx);
  Term mixed1 = finite(ctx, {n0, ctx.hat(n1)});
  Term mixed2 = finite(ctx, {tok({{0, e}, {1, e}}), tok({{0, n1}, {2, e}})});
  Term deep1 = finite(ctx, {ctx.hat(n0), ctx.hat(n1)});
  Term deep2 = finite(ctx, {tok({{0, n0}, {1, e}}), tok({{0, n1}, {2, e}})});
  return {{t0, mixed1, mixed2}, {t0, deep1, deep2}, {t0}};
}

Report countable_suite(Eval& ev) {
  Context& ctx = ev.ctx;
  Report rep;
  auto fixtures = countable_fixtures(ctx);
  BoundedUniverse u = bounded_universe(ev, 1);
  for (std::size_t f = 0; f < fixtures.size(); ++f) {
    const auto& chain = fixtures[f];
    std::string id = "chain " + std::to_string(f) + ": ";
    CountableResult r = countable_witness(ev, chain);
    bool premise = false;
    for (Token a : r.normalized.back().tokens()) premise = premise || ctx.grade(a) == 0;
    if (premise) {
      rep.add(id + "refuted with a proof-like stack of A^perp", r.verdict.kind == Verdict::Refuted && r.verdict.counterexample.has_value(),
              r.verdict.counterexample ? r.verdict.counterexample->describe(ctx) : "no stack");
      continue;
    }
    if (!r.witness) {
      rep.add(id + "witness emitted", false);
      continue;
    }
    const Term& w = *r.witness;
    rep.add(id + "witness is proof-like", is_prooflike(ev, w).status == ProoflikeResult::Yes, describe(ctx, w));
    // min(A^perp) at the bound: the principal stacks below the last stage
    std::size_t misses = 0;
    for (Token a : r.normalized.back().tokens())
      if (evaluate(ev, w, Stack::ideal(ctx, {a})).verdict != Verdict3::Top) ++misses;
    rep.add(id + "witness fires on min(A^perp)", misses == 0,
            std::to_string(r.normalized.back().tokens().size()) + " minimal stacks");
    // and on every bounded stack on which the whole chain fires
    std::size_t in_perp = 0, bad = 0;
    for (const Stack& s : u.stacks) {
      bool all = true;
      for (const Term& t : chain) all = all && evaluate(ev, t, s).verdict == Verdict3::Top;
      if (!all) continue;
      ++in_perp;
      if (evaluate(ev, w, s).verdict != Verdict3::Top) ++bad;
    }
    rep.add(id + "witness lies in A at the bound", bad == 0, std::to_string(in_perp) + " stacks of A^perp");
  }
  bool threw = false;
  try {
    countable_witness(ev, {});
  } catch (const std::invalid_argument&) {
    threw = true;
  }
  rep.add("empty chain rejected", threw);
  return rep;
}

}  // namespace coh

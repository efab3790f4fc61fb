#include "cohrealiz/suites.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <random>
#include <stdexcept>

#include "cohrealiz/antichain.hpp"
#include "cohrealiz/arith.hpp"
#include "cohrealiz/barrec.hpp"
#include "cohrealiz/json_io.hpp"
#include "cohrealiz/stable.hpp"
#include "cohrealiz/witness.hpp"

namespace coh {

namespace {

std::string count(std::size_t n, const std::string& what) { return std::to_string(n) + " " + what; }

std::vector<Term> as_terms(Context& ctx, const std::vector<TokenSet>& cs) {
  std::vector<Term> out;
  out.reserve(cs.size());
  for (const TokenSet& c : cs) out.push_back(finite(ctx, c));
  return out;
}

// stack components: cliques of W(level-1, width) with at most 4 tokens
std::vector<Term> components(Context& ctx, const SuiteConfig& cfg) {
  return as_terms(ctx, cliques(ctx, ctx.enumerate(cfg.level - 1, cfg.width), 4));
}

std::vector<Stack> stacks_upto(const std::vector<Term>& comps, std::size_t max_prefix, bool with_top) {
  std::vector<Stack> out;
  for (std::size_t p = 0; p <= max_prefix; ++p) {
    std::vector<Stack> f = stack_family(comps, p, with_top);
    out.insert(out.end(), f.begin(), f.end());
  }
  return out;
}

// evaluation with a fresh fuel budget
Verdict3 run(Eval& ev, const Term& t, const Stack& s) {
  ev.fuel = Fuel(ev.u.fuel);
  return evaluate(ev, t, s).verdict;
}

bool holds(Eval& ev, const Term& t, Token a) {
  ev.fuel = Fuel(ev.u.fuel);
  return t.contains(ev, a) == Tri::Yes;
}

bool prooflike(Eval& ev, const Term& t) {
  ev.fuel = Fuel(ev.u.fuel);
  return is_prooflike(ev, t).status == ProoflikeResult::Yes;
}

// pass, or inconclusive when the only disagreements were undecided
Status status_of(std::size_t bad, std::size_t undecided) {
  if (bad) return Status::Fail;
  return undecided ? Status::Inconclusive : Status::Pass;
}

// independent reading of the web: projections are cliques for the
// coherence beta coh gamma iff beta = gamma or beta u gamma is not a token
class RefWeb {
 public:
  explicit RefWeb(Context& ctx) : ctx_(ctx) {}

  bool web(Token t) {
    if (auto it = memo_.find(t.id); it != memo_.end()) return it->second;
    bool ok = true;
    const auto& es = ctx_.entries(t);
    for (const Entry& e : es) ok = ok && web(e.child);
    for (std::size_t i = 0; i < es.size() && ok; ++i)
      for (std::size_t j = i + 1; j < es.size() && ok; ++j)
        if (es[i].index == es[j].index && !coh(es[i].child, es[j].child)) ok = false;
    memo_.emplace(t.id, ok);
    return ok;
  }
  bool coh(Token a, Token b) { return a == b || !web(ctx_.unite(a, b)); }

 private:
  Context& ctx_;
  std::unordered_map<std::uint32_t, bool> memo_;
};

}  // namespace

// --- token_core -----------------------------------------------------------------------

Report web_laws(const SuiteConfig& cfg) {
  Context ctx;
  Report rep;
  const std::vector<Token> w = ctx.enumerate(cfg.level, cfg.width);
  const std::string n = count(w.size(), "tokens at (" + std::to_string(cfg.level) + "," + std::to_string(cfg.width) + ")");

  std::size_t bad_sub = 0, subs = 0;
  for (Token a : w)
    for (Token b : ctx.subtokens(a)) {
      ++subs;
      if (!ctx.web(b)) ++bad_sub;
    }
  rep.add("web is closed under subsets", bad_sub == 0, n + ", " + count(subs, "subtokens"));

  RefWeb ref(ctx);
  std::size_t bad3 = 0, bad4 = 0, bad_ref = 0;
  for (Token a : w) {
    if (!ref.web(a)) ++bad_ref;
    for (Token b : w) {
      // on the diagonal the union is a itself, so the law is about distinct tokens
      if (a != b && ctx.incoherent_strict(a, b) != ctx.web(ctx.unite(a, b))) ++bad3;
      if (ctx.coherent(a, b) != ref.coh(a, b)) ++bad4;
    }
  }
  rep.add("distinct tokens are incoherent iff their union is a token", bad3 == 0, count(w.size() * (w.size() - 1), "pairs"));
  rep.add("coherence matches the reference definition", bad4 == 0 && bad_ref == 0, count(w.size() * w.size(), "pairs"));

  std::size_t bad_mono = 0;
  for (std::uint32_t l = 0; l < cfg.level; ++l) {
    std::vector<Token> small = ctx.enumerate(l, cfg.width);
    std::vector<Token> big = ctx.enumerate(l + 1, cfg.width);
    if (l + 1 < cfg.level) big = ctx.enumerate(l + 1, cfg.width + 1);
    std::sort(big.begin(), big.end());
    for (Token a : small) {
      if (!std::binary_search(big.begin(), big.end(), a)) ++bad_mono;
      // prefix closed: subtokens stay in the smaller universe
      std::vector<Token> sorted_small = small;
      std::sort(sorted_small.begin(), sorted_small.end());
      for (Token b : ctx.subtokens(a))
        if (!std::binary_search(sorted_small.begin(), sorted_small.end(), b)) ++bad_mono;
    }
  }
  rep.add("universes grow monotonically and are subset closed", bad_mono == 0);

  Context other;
  std::size_t bad_grade = 0;
  for (Token a : w) {
    int g = ctx.grade(a);
    Token b = token_from_json(other, token_to_json(ctx, a));
    if ((g != 0 && g != 1) || other.grade(b) != g || other.to_text(b) != ctx.to_text(a)) ++bad_grade;
  }
  rep.add("grade is total and survives re-serialization", bad_grade == 0, n);
  rep.add("level of the empty token is 1", ctx.level(ctx.empty()) == 1 && ctx.enumerate(0, cfg.width).empty());
  return rep;
}

// --- cliques ---------------------------------------------------------------------------

Report numeral_semantics(const SuiteConfig& cfg) {
  Context ctx;
  Eval ev(ctx, cfg.universe());
  Report rep;
  std::vector<Stack> stacks = stacks_upto(components(ctx, cfg), 3, true);
  std::size_t bad = 0, undecided = 0, checked = 0;
  for (std::uint32_t n = 0; n < 4; ++n) {
    Term num = numeral(ctx, n);
    for (const Stack& s : stacks) {
      ++checked;
      bool expect = holds(ev, s.component(ctx, n), ctx.empty());
      Verdict3 v = run(ev, num, s);
      if (v == Verdict3::Inconclusive) ++undecided;
      else if ((v == Verdict3::Top) != expect) ++bad;
    }
  }
  rep.add("n fires on s iff s_n = top_D", status_of(bad, undecided),
          count(checked, "numeral/stack pairs") + ", " + count(stacks.size(), "stacks"));
  return rep;
}

Report stack_laws(const SuiteConfig& cfg) {
  Context ctx;
  Eval ev(ctx, cfg.universe());
  Report rep;
  const std::vector<Token>& w = ctx.enumerate(ev.u);
  std::vector<Term> terms = as_terms(ctx, cliques(ctx, w, 2));
  std::vector<Stack> seqs = stacks_upto(components(ctx, cfg), cfg.width, false);

  std::size_t bad_agree = 0, bad_ideal = 0, pairs = 0;
  for (const Stack& s : seqs) {
    std::vector<Entry> es;
    for (std::size_t i = 0; i < s.items().size(); ++i)
      for (Token b : s.items()[i].tokens()) es.push_back({static_cast<std::uint32_t>(i), b});
    Token g = ctx.make(es);
    Stack id = Stack::ideal(ctx, {g});
    for (const Term& t : terms) {
      ++pairs;
      if (run(ev, t, s) != run(ev, t, id)) ++bad_agree;
    }
    // the ideal holds the empty token, every subtoken of g and nothing else
    if (id.contains(ev, ctx.empty()) != Tri::Yes) ++bad_ideal;
    std::vector<Token> below = ctx.subtokens(g);
    for (Token a : below)
      for (Token b : below)
        if (id.contains(ev, ctx.unite(a, b)) != Tri::Yes) ++bad_ideal;
    for (Token a : w)
      if ((id.contains(ev, a) == Tri::Yes) != ctx.subset(a, g)) ++bad_ideal;
  }
  rep.add("sequence and ideal forms agree", bad_agree == 0, count(pairs, "term/stack pairs"));
  rep.add("ideals hold the empty token and are subset and union closed", bad_ideal == 0, count(seqs.size(), "ideals"));

  // stability of application in the function argument, sampled
  std::vector<TokenSet> cl = cliques(ctx, w, 2);
  std::mt19937_64 rng(cfg.seed);
  std::uniform_int_distribution<std::size_t> pick(0, cl.size() - 1);
  std::size_t tried = 0, bad_stable = 0;
  for (std::size_t i = 0; i < 4000 && tried < 500; ++i) {
    const TokenSet &t1 = cl[pick(rng)], &t2 = cl[pick(rng)];
    TokenSet u;
    std::set_union(t1.begin(), t1.end(), t2.begin(), t2.end(), std::back_inserter(u));
    if (!is_clique(ctx, u)) continue;
    ++tried;
    TokenSet both;
    std::set_intersection(t1.begin(), t1.end(), t2.begin(), t2.end(), std::back_inserter(both));
    Term s = finite(ctx, cl[pick(rng)]);
    Term a = apply(ev, finite(ctx, both), s), b1 = apply(ev, finite(ctx, t1), s), b2 = apply(ev, finite(ctx, t2), s);
    for (Token x : w)
      if (holds(ev, a, x) != (holds(ev, b1, x) && holds(ev, b2, x))) {
        ++bad_stable;
        break;
      }
  }
  rep.add("application is stable in the function", bad_stable == 0, count(tried, "compatible pairs"));

  std::size_t bad_id = 0;
  std::vector<Term> small_terms = as_terms(ctx, cliques(ctx, w, 3));
  for (const Term& t : small_terms) {
    Term it = apply(ev, identity(), t);
    for (Token x : w)
      if (holds(ev, it, x) != set_contains(t.tokens(), x)) {
        ++bad_id;
        break;
      }
  }
  rep.add("i t = t", bad_id == 0, count(small_terms.size(), "terms"));
  return rep;
}

Report control_laws(const SuiteConfig& cfg) {
  Context ctx;
  Eval ev(ctx, cfg.universe());
  Report rep;
  std::vector<Term> terms = as_terms(ctx, cliques(ctx, ctx.enumerate(ev.u), 3));
  std::vector<Stack> stacks = stacks_upto(components(ctx, cfg), cfg.width, true);
  const std::string n = count(terms.size(), "terms") + ", " + count(stacks.size(), "stacks");

  std::size_t bad = 0, undecided = 0, checked = 0;
  for (const Term& t : terms)
    for (const Term& s : terms) {
      Term ts = apply(ev, t, s);
      for (const Stack& r : stacks) {
        ++checked;
        Verdict3 l = run(ev, ts, r), rr = run(ev, t, push(ctx, s, r));
        if (l == Verdict3::Inconclusive || rr == Verdict3::Inconclusive) ++undecided;
        else if (l != rr) ++bad;
      }
    }
  rep.add("(ts) r = t (s.r)", status_of(bad, undecided), n + ", " + count(checked, "processes"));

  bad = undecided = checked = 0;
  for (const Stack& s : stacks) {
    Term k = k_of(s);
    for (const Term& t : terms) {
      Verdict3 rhs = run(ev, t, s);
      for (const Stack& r : stacks) {
        ++checked;
        Verdict3 l = run(ev, k, push(ctx, t, r));
        if (l == Verdict3::Inconclusive || rhs == Verdict3::Inconclusive) ++undecided;
        else if (l != rhs) ++bad;
      }
    }
  }
  rep.add("k_s(t.r) = t(s)", status_of(bad, undecided), count(checked, "processes"));

  bad = undecided = checked = 0;
  Term c = cc();
  for (const Stack& s : stacks)
    for (const Term& t : terms) {
      ++checked;
      Verdict3 l = run(ev, c, push(ctx, t, s)), r = run(ev, t, push(ctx, k_of(s), s));
      if (l == Verdict3::Inconclusive || r == Verdict3::Inconclusive) ++undecided;
      else if (l != r) ++bad;
    }
  rep.add("cc(t.s) = t(k_s.s)", status_of(bad, undecided), count(checked, "processes"));
  return rep;
}

Report prooflike_laws(const SuiteConfig& cfg) {
  Context ctx;
  Eval ev(ctx, cfg.universe());
  Report rep;
  rep.add("top_D is not proof-like", !prooflike(ev, top(ctx)));
  bool nums = true;
  for (std::uint32_t n = 0; n < 4; ++n) nums = nums && prooflike(ev, numeral(ctx, n));
  rep.add("numerals are proof-like", nums, "n < 4");
  rep.add("i is proof-like", prooflike(ev, identity()), "bounded");
  for (const auto& [name, e] : lambda_fixtures())
    rep.add("lambda term " + name + " is proof-like", prooflike(ev, interpret(ev, e)), to_text(*e));

  ev.fuel = Fuel(std::numeric_limits<std::uint64_t>::max());
  const std::vector<Token>& cct = cc().generate(ev);
  std::size_t grade0 = 0;
  for (Token b : cct) grade0 += ctx.grade(b) == 0;
  rep.add("every enumerated cc token has grade 1", grade0 == 0 && !cct.empty(), count(cct.size(), "tokens"));

  // Pitts consistency: P-terms never fire on P-stacks
  std::vector<Term> pl_comps;
  for (const Term& t : components(ctx, cfg))
    if (prooflike(ev, t)) pl_comps.push_back(t);
  std::vector<Stack> pl_stacks = stacks_upto(pl_comps, cfg.width, false);
  std::vector<TokenSet> all = cliques(ctx, ctx.enumerate(ev.u), 3);
  std::vector<Term> pl_terms, other;
  for (const TokenSet& c : all) {
    Term t = finite(ctx, c);
    (prooflike(ev, t) ? pl_terms : other).push_back(t);
  }
  std::size_t fired = 0, undecided = 0;
  for (const Term& t : pl_terms)
    for (const Stack& s : pl_stacks) {
      Verdict3 v = run(ev, t, s);
      if (v == Verdict3::Top) ++fired;
      if (v == Verdict3::Inconclusive) ++undecided;
    }
  rep.add("proof-like terms never fire on proof-like stacks", status_of(fired, undecided),
          count(pl_terms.size(), "terms") + ", " + count(pl_stacks.size(), "stacks"));

  // conversely a grade 0 token fires on the proof-like stack below it
  std::size_t missed = 0;
  for (const Term& t : other) {
    bool found = false;
    for (Token a : t.tokens()) {
      if (ctx.grade(a) != 0) continue;
      Stack s = Stack::ideal(ctx, {a}).to_seq(ctx);
      bool pl = true;
      for (const Term& item : s.items()) pl = pl && prooflike(ev, item);
      if (pl && run(ev, t, s) == Verdict3::Top) {
        found = true;
        break;
      }
    }
    if (!found) ++missed;
  }
  rep.add("terms outside P fire on some proof-like stack", missed == 0, count(other.size(), "terms"));

  // P is closed under application
  std::vector<Term> pl_small;
  for (const Term& t : pl_terms)
    if (t.tokens().size() <= 2) pl_small.push_back(t);
  fired = undecided = 0;
  for (const Term& t : pl_small)
    for (const Term& s : pl_small) {
      Term ts = apply(ev, t, s);
      for (const Stack& p : pl_stacks) {
        Verdict3 v = run(ev, ts, p);
        if (v == Verdict3::Top) ++fired;
        if (v == Verdict3::Inconclusive) ++undecided;
      }
    }
  rep.add("P is closed under application", status_of(fired, undecided), count(pl_small.size(), "proof-like terms"));
  return rep;
}

// --- stable_maps -----------------------------------------------------------------------

Report por_suite(const SuiteConfig& cfg) {
  Context ctx;
  Eval ev(ctx, cfg.universe());
  ev.fuel = Fuel(std::numeric_limits<std::uint64_t>::max());
  PorReport r = por_obstruction(ev);
  Report rep;
  std::string detail = count(r.scanned, "cliques") + ", " + count(r.premise, "with f top bot = f bot top = top");
  if (!r.counterexamples.empty()) detail += ", first " + describe(ctx, r.counterexamples[0]);
  rep.add("no stable parallel or", r.counterexamples.empty(), detail);
  return rep;
}

Report trace_laws(const SuiteConfig& cfg) {
  Context ctx;
  Eval ev(ctx, cfg.universe());
  Report rep;
  const std::vector<Token>& w = ctx.enumerate(ev.u);
  std::vector<Term> args = as_terms(ctx, cliques(ctx, w, cfg.width));

  std::vector<std::pair<std::string, Term>> maps{{"i", identity()}, {"infinity term", infinity_term(ctx)}};
  for (const auto& [name, e] : lambda_fixtures())
    if (name == "K" || name == "eta") maps.push_back({name, interpret(ev, e)});

  for (const auto& [name, t] : maps) {
    StableMap f = [&, t = t](const Term& x) { return apply(ev, t, x); };
    ev.fuel = Fuel(std::numeric_limits<std::uint64_t>::max());
    Trace tr = trace_of(ev, f);
    std::size_t bad_min = 0;
    for (const TraceEntry& e : tr.entries)
      for (const TokenSet& b : subsets(e.argument))
        if (b.size() < e.argument.size() && holds(ev, f(finite(ctx, b)), e.value)) ++bad_min;
    rep.add("trace of " + name + " is minimal", bad_min == 0 && tr.withheld.empty(),
            count(tr.entries.size(), "entries") + ", " + count(tr.withheld.size(), "withheld"));

    Term back = fun(ctx, tr.entries);
    std::size_t bad_rt = 0;
    for (const Term& s : args) {
      Term l = apply(ev, back, s), r = f(s);
      for (Token x : w)
        if (holds(ev, l, x) != holds(ev, r, x)) {
          ++bad_rt;
          break;
        }
    }
    rep.add("fun(trace " + name + ") agrees with " + name, bad_rt == 0, count(args.size(), "arguments"));
  }

  // interpretations are stable on compatible pairs
  std::vector<TokenSet> cl = cliques(ctx, w, 2);
  std::mt19937_64 rng(cfg.seed);
  std::uniform_int_distribution<std::size_t> pick(0, cl.size() - 1);
  for (const auto& [name, e] : lambda_fixtures()) {
    Term f = interpret(ev, e);
    std::size_t tried = 0, bad = 0;
    for (std::size_t i = 0; i < 2000 && tried < 60; ++i) {
      const TokenSet &x = cl[pick(rng)], &y = cl[pick(rng)];
      TokenSet u, both;
      std::set_union(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(u));
      if (!is_clique(ctx, u)) continue;
      ++tried;
      std::set_intersection(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(both));
      Term fb = apply(ev, f, finite(ctx, both)), fx = apply(ev, f, finite(ctx, x)), fy = apply(ev, f, finite(ctx, y));
      for (Token a : w)
        if (holds(ev, fb, a) != (holds(ev, fx, a) && holds(ev, fy, a))) {
          ++bad;
          break;
        }
    }
    rep.add(name + " preserves compatible meets", bad == 0, count(tried, "pairs"));
  }
  return rep;
}

// --- propositions ----------------------------------------------------------------------

Report tripos_constants(const SuiteConfig& cfg) {
  Context ctx;
  Eval ev(ctx, cfg.universe());
  return check_jU_constants(ev);
}

Report lemma1_laws(const SuiteConfig& cfg) {
  Context ctx;
  Eval ev(ctx, cfg.universe());
  std::vector<Prop> family = generated_props(ev, 24);
  Report rep = lemma1_suite(ev, family);
  rep.add("family size", family.size() >= 20, count(family.size(), "props"));
  return rep;
}

Report equality_lemma(const SuiteConfig& cfg) {
  Context ctx;
  Eval ev(ctx, cfg.universe());
  return check_NK_realizers(ev, 4);
}

Report closure_laws(const SuiteConfig& cfg) {
  Context ctx;
  Eval ev(ctx, cfg.universe());
  Report rep;
  BoundedUniverse u = bounded_universe(ev, 2);
  std::mt19937_64 rng(cfg.seed);
  auto subset_of = [&](std::size_t k) {
    std::vector<Term> a;
    std::sample(u.terms.begin(), u.terms.end(), std::back_inserter(a), k, rng);
    return a;
  };
  auto ids = [&](const std::vector<Term>& ts) {
    std::vector<TokenSet> out;
    for (const Term& t : ts) out.push_back(t.tokens());
    std::sort(out.begin(), out.end());
    return out;
  };
  auto stack_ids = [&](const std::vector<Stack>& ss) {
    std::vector<std::string> out;
    for (const Stack& s : ss) out.push_back(s.describe(ctx));
    std::sort(out.begin(), out.end());
    return out;
  };

  std::size_t bad_ext = 0, bad_triple = 0, bad_anti = 0;
  for (std::size_t i = 0; i < 20; ++i) {
    std::vector<Term> b = subset_of(1 + i % 4);
    std::vector<Term> a(b.begin(), b.begin() + static_cast<std::ptrdiff_t>(1 + (b.size() - 1) / 2));
    std::vector<Term> abb = biorth(ev, a, u);
    std::vector<TokenSet> abb_ids = ids(abb);
    for (const TokenSet& t : ids(a))
      if (!std::binary_search(abb_ids.begin(), abb_ids.end(), t)) ++bad_ext;
    std::vector<Stack> ap = orthogonal(ev, a, u.stacks);
    if (stack_ids(orthogonal(ev, abb, u.stacks)) != stack_ids(ap)) ++bad_triple;
    std::vector<std::string> ap_ids = stack_ids(ap);
    for (const std::string& s : stack_ids(orthogonal(ev, b, u.stacks)))
      if (!std::binary_search(ap_ids.begin(), ap_ids.end(), s)) ++bad_anti;
  }
  std::string n = count(u.terms.size(), "terms") + ", " + count(u.stacks.size(), "stacks");
  rep.add("A is contained in its biorthogonal", bad_ext == 0, n);
  rep.add("A^perp = A^perp-perp-perp", bad_triple == 0, n);
  rep.add("orthogonality is antitone", bad_anti == 0, n);

  std::vector<Prop> family = generated_props(ev, 12);
  std::size_t bad_forall = 0, bad_imp = 0;
  for (std::size_t i = 0; i + 1 < family.size(); i += 2) {
    const Prop &p = family[i], &q = family[i + 1];
    Prop pq = forall({p, q});
    for (const Term& t : u.terms)
      if ((member(ev, t, pq) == Tri::Yes) != (member(ev, t, p) == Tri::Yes && member(ev, t, q) == Tri::Yes))
        ++bad_forall;

    Prop c = implies(ev, p, q);
    std::vector<Term> m;
    for (const Term& t : u.terms)
      if (member(ev, t, c) == Tri::Yes) m.push_back(t);
    std::vector<Stack> stacks = u.stacks;
    stacks.insert(stacks.end(), c.falsity.begin(), c.falsity.end());
    if (ids(orthogonal_terms(ev, orthogonal(ev, m, stacks), u.terms)) != ids(m)) ++bad_imp;
  }
  rep.add("forall is the intersection", bad_forall == 0, count(family.size() / 2, "pairs"));
  rep.add("A -> B is biorthogonally closed", bad_imp == 0, count(family.size() / 2, "pairs"));
  return rep;
}

Report arith_suite(const SuiteConfig& cfg) {
  Context ctx;
  Report rep;
  std::size_t n_true = 0, n_false = 0;
  for (const ArithFixture& f : arith_fixtures()) {
    Eval ev(ctx, cfg.universe());
    Sentence s = parse_sentence(f.text);
    if (f.true_sentence) {
      ++n_true;
      ArithResult r = arith_realize(ev, s);
      bool ok = r.verdict.kind == Verdict::Realizes && r.prooflike.status == ProoflikeResult::Yes;
      rep.add("realizes: " + f.text, ok,
              std::string(to_string(r.verdict.kind)) + (r.verdict.bounded ? " (bounded)" : "") +
                  (r.prooflike.status == ProoflikeResult::Yes ? ", proof-like" : ", not proof-like"));
    } else {
      ++n_false;
      bool refused = false;
      try {
        arith_realize(ev, s);
      } catch (const FalseSentence&) {
        refused = true;
      }
      rep.add("refuses: " + f.text, refused && !truth(s));
    }
  }
  rep.add("fixture sizes", n_true >= 10 && n_false >= 3, count(n_true, "true") + ", " + count(n_false, "false"));
  return rep;
}

Report infinity_suite(const SuiteConfig& cfg) {
  Context ctx;
  Eval ev(ctx, cfg.universe());
  return infinity_witness(ev).report;
}

Report antichain_laws(const SuiteConfig& cfg) {
  Context ctx;
  Eval ev(ctx, cfg.universe());
  return antichain_suite(ev, 100, cfg.seed);
}

Report countable_laws(const SuiteConfig& cfg) {
  Context ctx;
  Eval ev(ctx, cfg.universe());
  return countable_suite(ev);
}

// --- bar_recursion ---------------------------------------------------------------------

Report barrec_suite(const SuiteConfig& cfg) {
  Context ctx;
  Report rep;
  {
    Eval ev(ctx, cfg.universe());
    BRInstance inst = constructed_instance(ctx);
    DnsResult d = dns_check(ev, inst);
    rep.merge(d.report, "N=2: ");
    rep.merge(modulus_samples(ev, inst.y, 100, cfg.seed), "N=2: ");
  }
  {
    Eval ev(ctx, cfg.universe());
    std::vector<BRInstance> family = generated_instances(ev, 10, cfg.seed);
    std::size_t good = 0;
    std::string first_bad;
    for (std::size_t i = 0; i < family.size(); ++i) {
      Eval e(ctx, cfg.universe());
      DnsResult d = dns_check(e, family[i]);
      if (d.kind == Verdict::Realizes) ++good;
      else if (first_bad.empty()) first_bad = "instance " + std::to_string(i) + ": " + d.failure;
    }
    rep.add("dns_check on the generated family", good == family.size(),
            std::to_string(good) + "/" + std::to_string(family.size()) + (first_bad.empty() ? "" : ", " + first_bad));
  }
  {
    Eval ev(ctx, cfg.universe());
    BRInstance broken = constructed_instance(ctx);
    broken.g[0].rows.clear();
    DnsResult d = dns_check(ev, broken);
    rep.add("broken G is refuted before running br", d.kind == Verdict::Refuted && !d.run, d.failure);
    BRInstance zero;
    zero.y = make_y(ctx, top(ctx));
    DnsResult z = dns_check(ev, zero);
    rep.add("N = 0 with Y = top_D", z.kind == Verdict::Realizes && z.run && z.run->stage == 1,
            z.run ? "stage " + std::to_string(z.run->stage) : "no run");
  }
  {
    Eval ev(ctx, cfg.universe());
    rep.merge(br_prooflike(ev, 100, cfg.seed));
  }
  return rep;
}

// --- named suites ----------------------------------------------------------------------

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"web", "cliques", "control", "props", "arith", "barrec", "all"};
  return names;
}

Report run_suite(const std::string& name, const SuiteConfig& cfg) {
  using Part = std::pair<const char*, Report (*)(const SuiteConfig&)>;
  static const std::map<std::string, std::vector<Part>> parts{
      {"web", {{"web", web_laws}}},
      {"cliques", {{"numerals", numeral_semantics}, {"stacks", stack_laws}}},
      {"control",
       {{"control", control_laws}, {"proof-like", prooflike_laws}, {"por", por_suite}, {"traces", trace_laws}}},
      {"props",
       {{"jU", tripos_constants},
        {"lemma1", lemma1_laws},
        {"equality", equality_lemma},
        {"closure", closure_laws},
        {"infinity", infinity_suite},
        {"antichains", antichain_laws},
        {"countable", countable_laws}}},
      {"arith", {{"arith", arith_suite}}},
      {"barrec", {{"barrec", barrec_suite}}},
  };
  Report rep;
  if (name == "all") {
    for (const std::string& n : suite_names())
      if (n != "all") rep.merge(run_suite(n, cfg), n + "/");
    return rep;
  }
  auto it = parts.find(name);
  if (it == parts.end()) throw std::invalid_argument("unknown suite: " + name);
  for (const auto& [prefix, fn] : it->second) rep.merge(fn(cfg), std::string(prefix) + ": ");
  return rep;
}

}  // namespace coh

#include "cohrealiz/barrec.hpp"

#include <algorithm>
#include <set>

namespace coh {

bool YFun::operator()(Eval& ev, const std::vector<Term>& alpha) const {
  std::vector<Term> items(alpha.begin(), alpha.begin() + static_cast<std::ptrdiff_t>(std::min(modulus, alpha.size())));
  return evaluate(ev, table, Stack::seq(std::move(items), Tail::Empty)).verdict == Verdict3::Top;
}

YFun make_y(Context& ctx, Term table, std::optional<std::size_t> declared) {
  if (!table.is_finite()) throw CliqueError("Y: the table must be a finite term");
  std::size_t need = 0;
  for (Token t : table.tokens()) need = std::max<std::size_t>(need, ctx.max_index_plus_one(t));
  if (declared && *declared < need)
    throw FormatError("Y: declared modulus " + std::to_string(*declared) + " but the table reads component " +
                      std::to_string(need - 1));
  return YFun{std::move(table), declared ? *declared : need};
}

bool GFun::operator()(const std::function<bool(const Term&)>& f) const {
  std::vector<std::optional<bool>> seen(probes.size());
  auto at = [&](std::size_t i) {
    if (!seen[i]) seen[i] = f(probes[i]);
    return *seen[i];
  };
  for (const auto& row : rows) {
    bool all = true;
    for (std::size_t i : row) {
      if (i >= probes.size()) throw CliqueError("G: row names probe " + std::to_string(i));
      if (!at(i)) {
        all = false;
        break;
      }
    }
    if (all) return true;
  }
  return false;
}

const GFun* BRInstance::g_at(std::size_t k) const {
  if (g.empty()) return nullptr;
  return &g[std::min(k, g.size() - 1)];
}

const char* to_string(BRResult::Kind k) {
  switch (k) {
    case BRResult::Top: return "top";
    case BRResult::Bot: return "bot";
    case BRResult::Inconclusive: return "inconclusive";
  }
  return "?";
}

namespace {

std::vector<Term> terms_of(Context& ctx, const SeqD& s) {
  std::vector<Term> out;
  for (const TokenSet& x : s) out.push_back(finite(ctx, x));
  return out;
}

// one unfolding of the equation with `next` standing for Psi(s*x)
bool unfold(Eval& ev, const BRInstance& inst, const SeqD& s, const std::function<bool(const SeqD&)>& next) {
  std::vector<Term> alpha = terms_of(ev.ctx, s);
  if (s.size() < inst.y.modulus) {
    const GFun* g = inst.g_at(s.size());
    bool c = g && (*g)([&](const Term& x) {
      SeqD sx = s;
      sx.push_back(x.tokens());
      return next(sx);
    });
    Term ext = c ? top(ev.ctx) : bot();
    while (alpha.size() < inst.y.modulus) alpha.push_back(ext);
  }
  return inst.y(ev, alpha);
}

class Iteration {
 public:
  Iteration(Eval& ev, const BRInstance& inst) : ev_(ev), inst_(inst) {}

  bool psi(std::size_t k, const SeqD& s) {
    if (k == 0 || exhausted_) return false;
    auto key = std::make_pair(k, s);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    if (!ev_.fuel.spend()) {
      exhausted_ = true;
      return false;
    }
    queried_.insert(s);
    bool v = unfold(ev_, inst_, s, [&](const SeqD& sx) { return psi(k - 1, sx); });
    memo_.emplace(key, v);
    return v;
  }

  bool exhausted() const { return exhausted_; }
  bool monotone() const {
    for (const auto& [key, v] : memo_) {
      if (!v) continue;
      auto next = memo_.find({key.first + 1, key.second});
      if (next != memo_.end() && !next->second) return false;
    }
    return true;
  }
  const std::set<SeqD>& queried() const { return queried_; }

 private:
  Eval& ev_;
  const BRInstance& inst_;
  std::map<std::pair<std::size_t, SeqD>, bool> memo_;
  std::set<SeqD> queried_;
  bool exhausted_ = false;
};

}  // namespace

BRResult br(Eval& ev, const BRInstance& inst, const SeqD& s) {
  if (inst.g.size() > 0)
    for (const GFun& g : inst.g)
      for (const Term& p : g.probes)
        if (!p.is_finite()) throw CliqueError("G: probes must be finite terms");
  Iteration it(ev, inst);
  // sequences of length >= modulus do not recurse, so the chain is stable
  // once the stage exceeds the remaining depth
  const std::size_t last = inst.y.modulus - std::min(inst.y.modulus, s.size()) + 1;
  BRResult r;
  for (std::size_t k = 1; k <= last; ++k) {
    bool v = it.psi(k, s);
    r.stage = k;
    if (it.exhausted()) {
      r.kind = BRResult::Inconclusive;
      return r;
    }
    if (v) {
      r.kind = BRResult::Top;
      break;
    }
  }
  std::vector<SeqD> queried(it.queried().begin(), it.queried().end());
  for (const SeqD& q : queried) {
    std::size_t depth = inst.y.modulus - std::min(inst.y.modulus, q.size()) + 1;
    r.table[q] = it.psi(depth, q);
  }
  r.monotone = it.monotone();
  if (it.exhausted()) r.kind = BRResult::Inconclusive;
  return r;
}

bool br_rhs(Eval& ev, const BRInstance& inst, const SeqD& s, const std::map<SeqD, bool>& table) {
  return unfold(ev, inst, s, [&](const SeqD& sx) {
    auto it = table.find(sx);
    return it != table.end() && it->second;
  });
}

namespace {

// every choice of one basis element per slot, capped
std::vector<SeqD> products(const std::vector<std::vector<Term>>& bases, std::size_t cap) {
  std::vector<SeqD> out{{}};
  for (const auto& b : bases) {
    std::vector<SeqD> next;
    for (const SeqD& s : out)
      for (const Term& x : b) {
        if (next.size() >= cap) break;
        SeqD t = s;
        t.push_back(x.tokens());
        next.push_back(std::move(t));
      }
    out = std::move(next);
  }
  return out;
}

bool in_s(Eval& ev, const BRInstance& inst, const SeqD& s) {
  for (std::size_t k = 0; k < s.size() && k < inst.n; ++k)
    if (member(ev, finite(ev.ctx, s[k]), inst.b[k]) != Tri::Yes) return false;
  return true;
}

}  // namespace

DnsResult dns_check(Eval& ev, const BRInstance& inst) {
  Context& ctx = ev.ctx;
  DnsResult out;
  Report& rep = out.report;
  if (inst.b.size() != inst.n) throw CliqueError("dns_check: B must have N members");

  std::vector<std::vector<Term>> bases;
  for (std::size_t k = 0; k < inst.n; ++k) bases.push_back(test_basis(ev, inst.b[k], 64).elems);

  // G_n realizes ~~B(n): it fires on the least test of ~B(n)
  for (std::size_t k = 0; k < inst.n; ++k) {
    const GFun* g = inst.g_at(k);
    auto f_min = [&](const Term& p) { return member(ev, p, inst.b[k]) == Tri::Yes; };
    if (!g || !(*g)(f_min)) {
      out.kind = Verdict::Refuted;
      out.failure = "G_" + std::to_string(k) + " does not fire on the least test of ~B(" + std::to_string(k) + ")";
      rep.add("hypothesis on G", false, out.failure);
      return out;
    }
  }
  rep.add("hypothesis on G", true, std::to_string(inst.n) + " components");

  // Y realizes ~forall n.B(n) on products of basis elements
  std::vector<SeqD> prods = products(bases, 4096);
  for (const SeqD& p : prods) {
    std::vector<Term> alpha = terms_of(ctx, p);
    if (!inst.y(ev, alpha)) {
      out.kind = Verdict::Refuted;
      out.failure = "Y is bot on a sequence of B";
      rep.add("hypothesis on Y", false, out.failure);
      return out;
    }
  }
  rep.add("hypothesis on Y", true, std::to_string(prods.size()) + " sequences of basis elements");

  BRResult run = br(ev, inst, {});
  out.run = run;
  rep.add("br(Y,G,<>) = top", run.kind == BRResult::Top,
          std::string(to_string(run.kind)) + " at stage " + std::to_string(run.stage));

  std::size_t bad_fix = 0, flips = 0;
  for (const auto& [s, v] : run.table) {
    if (br_rhs(ev, inst, s, run.table) != v) ++bad_fix;
    if (!v) {
      auto flipped = run.table;
      flipped[s] = true;
      if (!br_rhs(ev, inst, s, flipped)) ++flips;
    }
  }
  std::size_t bots = 0;
  for (const auto& e : run.table) bots += !e.second;
  rep.add("Kleene chain is monotone", run.monotone);
  rep.add("fixpoint re-check", bad_fix == 0, std::to_string(run.table.size()) + " memo entries");
  rep.add("flipping a bot entry breaks the equation", flips == bots, std::to_string(bots) + " bot entries");

  // (1) every sequence of B is barred at the modulus
  std::size_t bad1 = 0;
  for (const SeqD& p : prods) {
    SeqD prefix = p;
    if (prefix.size() > inst.y.modulus) prefix.resize(inst.y.modulus);
    while (prefix.size() < inst.y.modulus) prefix.push_back({});
    if (br(ev, inst, prefix).kind != BRResult::Top) ++bad1;
  }
  rep.add("bar induction (1)", bad1 == 0, std::to_string(prods.size()) + " sequences");

  // (2) on the queried tree: all extensions in B are barred, so s is
  std::size_t checked = 0, bad2 = 0;
  for (const auto& [s, v] : run.table) {
    if (s.size() >= inst.n || !in_s(ev, inst, s)) continue;
    bool all = true;
    for (const Term& x : bases[s.size()]) {
      SeqD sx = s;
      sx.push_back(x.tokens());
      all = all && br(ev, inst, sx).kind == BRResult::Top;
    }
    if (!all) continue;
    ++checked;
    if (!v) ++bad2;
  }
  rep.add("bar induction (2)", bad2 == 0, std::to_string(checked) + " premises");

  if (!rep.passed()) {
    out.kind = rep.failed() ? Verdict::Refuted : Verdict::Inconclusive;
    for (const Check& c : rep.checks)
      if (c.status != Status::Pass) {
        out.failure = c.id;
        break;
      }
  }
  return out;
}

// --- proof-likeness -----------------------------------------------------------------

bool pl_d(Eval& ev, const Term& t) { return is_prooflike(ev, t).status == ProoflikeResult::Yes; }

bool pl_d_sigma(Eval& ev, const std::function<bool(const Term&)>& f, const std::vector<Term>& probes) {
  for (const Term& p : probes)
    if (pl_d(ev, p) && !pl_sigma(f(p))) return false;
  return true;
}

bool pl_g(Eval& ev, const GFun& g) {
  return pl_sigma(g([&](const Term& p) { return !pl_d(ev, p); }));
}

Report modulus_samples(Eval& ev, const YFun& y, std::size_t samples, std::uint64_t seed) {
  Context& ctx = ev.ctx;
  std::vector<TokenSet> pool = cliques(ctx, ctx.enumerate(ev.u), 2);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::uniform_int_distribution<std::size_t> extra(1, 3);
  std::size_t changed = 0;
  for (std::size_t i = 0; i < samples; ++i) {
    std::vector<Term> a, b;
    for (std::size_t k = 0; k < y.modulus; ++k) {
      Term t = finite(ctx, pool[pick(rng)]);
      a.push_back(t);
      b.push_back(t);
    }
    std::size_t e = extra(rng);
    for (std::size_t k = 0; k < e; ++k) {
      a.push_back(finite(ctx, pool[pick(rng)]));
      b.push_back(finite(ctx, pool[pick(rng)]));
    }
    if (y(ev, a) != y(ev, b)) ++changed;
  }
  Report rep;
  rep.add("perturbation beyond the modulus keeps Y", changed == 0,
          std::to_string(samples) + " samples, modulus " + std::to_string(y.modulus));
  return rep;
}

Report br_prooflike(Eval& ev, std::size_t samples, std::uint64_t seed) {
  Context& ctx = ev.ctx;
  std::vector<TokenSet> pool = cliques(ctx, ctx.enumerate(ev.u), 2);
  std::vector<Term> pl_terms, all_terms;
  for (const TokenSet& c : pool) {
    Term t = finite(ctx, c);
    all_terms.push_back(t);
    if (!c.empty() && pl_d(ev, t)) pl_terms.push_back(t);
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick_pl(0, pl_terms.size() - 1), pick(0, all_terms.size() - 1);
  std::size_t tried = 0, bad = 0;
  for (std::size_t i = 0; i < samples; ++i) {
    BRInstance inst;
    inst.y = make_y(ctx, pl_terms[pick_pl(rng)]);
    for (std::size_t k = 0; k < std::max<std::size_t>(inst.y.modulus, 1); ++k) {
      // row {1} is proof-like only when the second probe is
      static const std::vector<std::vector<std::vector<std::size_t>>> shapes{{{0}}, {{0, 1}}, {{0}, {0, 1}}, {{1}}};
      inst.g.push_back(GFun{{pl_terms[pick_pl(rng)], all_terms[pick(rng)]}, shapes[rng() % shapes.size()]});
    }
    bool pl = true;
    for (const GFun& g : inst.g) pl = pl && pl_g(ev, g);
    if (!pl) continue;
    ++tried;
    BRResult r = br(ev, inst, {});
    if (r.kind != BRResult::Bot || !pl_sigma(false)) ++bad;
  }
  Report rep;
  rep.add("br(Y,G,<>) = bot for proof-like Y and G", bad == 0 && tried > 0,
          std::to_string(tried) + " proof-like instances of " + std::to_string(samples));
  return rep;
}

// --- instances ------------------------------------------------------------------------

BRInstance constructed_instance(Context& ctx) {
  BRInstance inst;
  inst.n = 2;
  for (std::uint32_t n = 0; n < 2; ++n) inst.b.push_back(eq_pred(ctx, EqKind::NK, n, n));
  std::vector<Token> y;
  for (Token a : {ctx.empty(), ctx.nu(0)})
    for (Token b : {ctx.empty(), ctx.nu(1)}) y.push_back(ctx.make({{0, a}, {1, b}}));
  inst.y = make_y(ctx, finite(ctx, y, "Y"));
  for (std::uint32_t n = 0; n < 2; ++n) inst.g.push_back(GFun{{numeral(ctx, n)}, {{0}}});
  return inst;
}

std::vector<BRInstance> generated_instances(Eval& ev, std::size_t count, std::uint64_t seed) {
  Context& ctx = ev.ctx;
  std::vector<Token> gens;
  for (Token t : ctx.enumerate(ev.u))
    if (ctx.size(t) <= 2) gens.push_back(t);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
  std::vector<BRInstance> out;
  for (std::size_t i = 0; i < count; ++i) {
    BRInstance inst;
    inst.n = 1 + i % 3;
    std::vector<std::vector<Token>> subs;
    for (std::size_t k = 0; k < inst.n; ++k) {
      Token g = gens[pick(rng)];
      inst.b.push_back(falsity_prop(ctx, {g}, "down" + ctx.to_text(g)));
      subs.push_back(ctx.subtokens(g));
    }
    // Y: one token per choice of subtokens, incoherent choices make a clique
    std::vector<std::vector<Entry>> choices{{}};
    for (std::size_t k = 0; k < inst.n; ++k) {
      std::vector<std::vector<Entry>> next;
      for (const auto& c : choices)
        for (Token x : subs[k]) {
          auto d = c;
          d.push_back({static_cast<std::uint32_t>(k), x});
          next.push_back(std::move(d));
        }
      choices = std::move(next);
    }
    std::vector<Token> y;
    for (auto& c : choices) y.push_back(ctx.make(std::move(c)));
    inst.y = make_y(ctx, finite(ctx, y, "Y"));
    for (std::size_t k = 0; k < inst.n; ++k) {
      std::vector<Term> basis = test_basis(ev, inst.b[k]).elems;
      // a decoy probe outside B(k) is tried first and leaves bot entries behind
      Term decoy = finite(ctx, {ctx.nu(static_cast<std::uint32_t>(k) + 2)});
      inst.g.push_back(GFun{{basis[rng() % basis.size()], decoy}, {{1}, {0}}});
    }
    out.push_back(std::move(inst));
  }
  return out;
}

json instance_to_json(Context& ctx, const BRInstance& inst) {
  json j;
  j["N"] = inst.n;
  json b = json::array();
  for (const Prop& p : inst.b) b.push_back(prop_to_json(ctx, p));
  j["B"] = b;
  j["Y"] = {{"modulus", inst.y.modulus}, {"table", term_to_json(ctx, inst.y.table)}};
  json g = json::array();
  for (const GFun& f : inst.g) {
    json probes = json::array();
    for (const Term& p : f.probes) probes.push_back(term_to_json(ctx, p));
    g.push_back({{"probes", probes}, {"table", f.rows}});
  }
  j["G"] = g;
  return j;
}

BRInstance instance_from_json(Eval& ev, const json& j) {
  if (!j.is_object()) throw FormatError("instance: expected an object");
  for (const char* k : {"N", "B", "Y", "G"})
    if (!j.contains(k)) throw FormatError(std::string("instance: missing ") + k);
  BRInstance inst;
  inst.n = j["N"].get<std::size_t>();
  for (const json& p : j["B"]) inst.b.push_back(prop_from_json(ev, p));
  if (inst.b.size() != inst.n) throw FormatError("instance: B must have N members");
  const json& y = j["Y"];
  std::optional<std::size_t> modulus;
  if (y.contains("modulus")) modulus = y["modulus"].get<std::size_t>();
  if (!y.contains("table")) throw FormatError("instance: Y needs a table");
  inst.y = make_y(ev.ctx, term_from_json(ev, y["table"]), modulus);
  for (const json& g : j["G"]) {
    GFun f;
    for (const json& p : g.at("probes")) {
      Term t = term_from_json(ev, p);
      if (!t.is_finite()) throw FormatError("instance: probes must be finite terms");
      f.probes.push_back(t);
    }
    f.rows = g.at("table").get<std::vector<std::vector<std::size_t>>>();
    for (const auto& row : f.rows)
      for (std::size_t i : row)
        if (i >= f.probes.size()) throw FormatError("instance: G row names probe " + std::to_string(i));
    inst.g.push_back(std::move(f));
  }
  return inst;
}

}  // namespace coh

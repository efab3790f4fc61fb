#include "cohrealiz/prop.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "cohrealiz/stable.hpp"

namespace coh {

Prop top_prop() { return Prop{{}, std::nullopt, "top"}; }

Prop bot_prop() { return Prop{{Stack::seq({}, Tail::Empty)}, std::nullopt, "bot"}; }

Prop u_prop() {
  Prop p = bot_prop();
  p.label = "U";
  return p;
}

Prop falsity_prop(Context& ctx, const std::vector<Token>& generators, std::string label) {
  Prop p;
  for (Token g : generators) p.falsity.push_back(Stack::ideal(ctx, {g}));
  p.label = std::move(label);
  return p;
}

Prop truth_prop(std::vector<Term> basis, std::string label) {
  Prop p;
  p.basis = std::move(basis);
  p.label = std::move(label);
  return p;
}

const char* to_string(Verdict::Kind k) {
  switch (k) {
    case Verdict::Realizes: return "Realizes";
    case Verdict::Refuted: return "Refuted";
    case Verdict::Inconclusive: return "Inconclusive";
  }
  return "?";
}

namespace {

Token generator_of(Eval& ev, const Stack& s) {
  auto g = s.principal(ev.ctx);
  if (!g) throw CliqueError("falsity stacks must be finite ideals, got " + s.describe(ev.ctx));
  return *g;
}

// does the term contain every token of b?
Tri above(Eval& ev, const Term& t, const Term& b) {
  Tri r = Tri::Yes;
  for (Token x : b.tokens()) {
    Tri c = t.contains(ev, x);
    if (c == Tri::No) return Tri::No;
    if (c == Tri::Unknown) r = Tri::Unknown;
  }
  return r;
}

}  // namespace

Tri member(Eval& ev, const Term& t, const Prop& a) {
  if (a.basis) {
    bool unknown = false;
    for (const Term& b : *a.basis) {
      Tri r = above(ev, t, b);
      if (r == Tri::Yes) return Tri::Yes;
      if (r == Tri::Unknown) unknown = true;
    }
    return unknown ? Tri::Unknown : Tri::No;
  }
  bool unknown = false;
  for (const Stack& s : a.falsity) {
    Verdict3 v = evaluate(ev, t, s).verdict;
    if (v == Verdict3::Bot) return Tri::No;
    if (v == Verdict3::Inconclusive) unknown = true;
  }
  return unknown ? Tri::Unknown : Tri::Yes;
}

namespace {
constexpr std::size_t kFullSubtokens = 12;
}

Basis test_basis(Eval& ev, const Prop& a, std::size_t cap) {
  if (a.basis) return {*a.basis, false};
  Context& ctx = ev.ctx;
  std::vector<Token> gens;
  for (const Stack& s : a.falsity) gens.push_back(generator_of(ev, s));
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  Basis out;
  // large generators only offer their small subtokens, which truncates the basis
  std::vector<std::vector<Token>> below;
  for (Token g : gens) {
    std::vector<Token> subs;
    if (ctx.size(g) <= kFullSubtokens) {
      subs = ctx.subtokens(g);
    } else {
      subs = ctx.subtokens(g, 2);
      out.truncated = true;
    }
    ctx.sort_canonical(subs);
    below.push_back(std::move(subs));
  }

  std::set<TokenSet> seen;
  std::vector<Token> chosen;
  auto hits = [&](Token x, std::size_t i) { return ctx.subset(x, gens[i]); };
  // every chosen token must be the only witness for some ideal
  auto irredundant = [&]() {
    for (std::size_t k = 0; k < chosen.size(); ++k) {
      bool needed = false;
      for (std::size_t i = 0; i < gens.size() && !needed; ++i) {
        if (!hits(chosen[k], i)) continue;
        bool other = false;
        for (std::size_t l = 0; l < chosen.size() && !other; ++l)
          if (l != k && hits(chosen[l], i)) other = true;
        if (!other) needed = true;
      }
      if (!needed) return false;
    }
    return true;
  };
  bool capped = false;
  std::function<void()> rec = [&]() {
    if (capped) return;
    std::size_t i = 0;
    for (; i < gens.size(); ++i) {
      bool hit = false;
      for (Token x : chosen)
        if (hits(x, i)) {
          hit = true;
          break;
        }
      if (!hit) break;
    }
    if (i == gens.size()) {
      if (!irredundant()) return;
      TokenSet s = make_set(chosen);
      if (!seen.insert(s).second) return;
      if (out.elems.size() >= cap) {
        capped = out.truncated = true;
        return;
      }
      out.elems.push_back(finite(ctx, s));
      return;
    }
    for (Token x : below[i]) {
      bool ok = true;
      for (Token y : chosen)
        if (!ctx.coherent(x, y) || x == y) {
          ok = false;
          break;
        }
      if (!ok) continue;
      chosen.push_back(x);
      rec();
      chosen.pop_back();
    }
  };
  rec();
  return out;
}

Prop implies(Eval& ev, const Prop& a, const Prop& b, std::size_t cap) {
  if (!b.closed()) throw CliqueError("implies: the consequent must be given by falsity stacks");
  Basis basis = test_basis(ev, a, cap);
  Prop out;
  out.label = "(" + a.label + " -> " + b.label + ")";
  out.truncated = a.truncated || b.truncated || basis.truncated;
  std::set<Token> seen;
  for (const Term& s : basis.elems)
    for (const Stack& pi : b.falsity) {
      Token g = ev.ctx.cons(s.tokens(), generator_of(ev, pi));
      if (seen.insert(g).second) out.falsity.push_back(Stack::ideal(ev.ctx, {g}));
    }
  return out;
}

Prop forall(const std::vector<Prop>& ps, std::string label) {
  Prop out;
  out.label = std::move(label);
  for (const Prop& p : ps) {
    if (!p.closed()) throw CliqueError("forall: every member must be given by falsity stacks");
    out.falsity.insert(out.falsity.end(), p.falsity.begin(), p.falsity.end());
    out.truncated = out.truncated || p.truncated;
  }
  return out;
}

Prop j_U(Eval& ev, const Prop& a) {
  Prop p = implies(ev, implies(ev, a, u_prop()), u_prop());
  p.label = "jU(" + a.label + ")";
  return p;
}

Verdict check_realizer(Eval& ev, const Term& t, const Prop& a) {
  Verdict v;
  v.bounded = a.truncated;
  if (!a.closed()) {
    Tri m = member(ev, t, a);
    v.kind = m == Tri::Yes ? Verdict::Realizes : m == Tri::No ? Verdict::Refuted : Verdict::Inconclusive;
    return v;
  }
  for (const Stack& s : a.falsity) {
    Verdict3 r = evaluate(ev, t, s).verdict;
    if (r == Verdict3::Bot) {
      v.kind = Verdict::Refuted;
      v.counterexample = s;
      return v;
    }
    if (r == Verdict3::Inconclusive && v.kind == Verdict::Realizes) {
      v.kind = Verdict::Inconclusive;
      v.counterexample = s;
    }
  }
  return v;
}

// --- bounded orthogonality ------------------------------------------------------

BoundedUniverse bounded_universe(Eval& ev, std::size_t max_tokens) {
  BoundedUniverse u;
  for (const TokenSet& c : cliques(ev.ctx, ev.ctx.enumerate(ev.u), max_tokens)) u.terms.push_back(finite(ev.ctx, c));
  std::vector<Term> comps;
  if (ev.u.level >= 1) {
    const auto& pool = ev.ctx.enumerate(ev.u.level - 1, ev.u.width);
    for (const TokenSet& c : cliques(ev.ctx, pool, pool.size())) comps.push_back(finite(ev.ctx, c));
  }
  u.stacks = stack_family(comps, ev.u.width, true);
  return u;
}

std::vector<Stack> orthogonal(Eval& ev, const std::vector<Term>& a, const std::vector<Stack>& stacks) {
  std::vector<Stack> out;
  for (const Stack& s : stacks) {
    bool all = true;
    for (const Term& t : a)
      if (evaluate(ev, t, s).verdict != Verdict3::Top) {
        all = false;
        break;
      }
    if (all) out.push_back(s);
  }
  return out;
}

std::vector<Term> orthogonal_terms(Eval& ev, const std::vector<Stack>& s, const std::vector<Term>& terms) {
  std::vector<Term> out;
  for (const Term& t : terms) {
    bool all = true;
    for (const Stack& pi : s)
      if (evaluate(ev, t, pi).verdict != Verdict3::Top) {
        all = false;
        break;
      }
    if (all) out.push_back(t);
  }
  return out;
}

std::vector<Term> biorth(Eval& ev, const std::vector<Term>& a, const BoundedUniverse& u) {
  return orthogonal_terms(ev, orthogonal(ev, a, u.stacks), u.terms);
}

bool stack_leq(Eval& ev, const Stack& a, const Stack& b) {
  if (a.tail() == Tail::Top && b.tail() != Tail::Top && b.is_seq()) return false;
  std::size_t n = std::max(a.prefix(ev.ctx), b.prefix(ev.ctx));
  for (std::size_t i = 0; i < n; ++i) {
    Term x = a.component(ev.ctx, i), y = b.component(ev.ctx, i);
    for (Token t : x.tokens())
      if (!set_contains(y.tokens(), t)) return false;
  }
  return true;
}

std::vector<Stack> minimal_stacks(Eval& ev, const std::vector<Stack>& s) {
  std::vector<Stack> out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    bool minimal = true;
    for (std::size_t j = 0; j < s.size() && minimal; ++j)
      if (j != i && stack_leq(ev, s[j], s[i]) && !stack_leq(ev, s[i], s[j])) minimal = false;
    // of mutually included duplicates keep the first
    for (std::size_t j = 0; j < i && minimal; ++j)
      if (stack_leq(ev, s[j], s[i]) && stack_leq(ev, s[i], s[j])) minimal = false;
    if (minimal) out.push_back(s[i]);
  }
  return out;
}

// --- equality predicates ----------------------------------------------------------

const char* to_string(EqKind k) {
  switch (k) {
    case EqKind::E: return "E";
    case EqKind::UTripos: return "U";
    case EqKind::NK: return "N_K";
    case EqKind::TwoK: return "2_K";
    case EqKind::DeltaK: return "Delta_K";
  }
  return "?";
}

Prop eq_pred(Context& ctx, EqKind kind, std::uint32_t i, std::uint32_t j) {
  std::string label = std::string("eq_") + to_string(kind) + "(" + std::to_string(i) + "," + std::to_string(j) + ")";
  switch (kind) {
    case EqKind::E:
      return i == j ? truth_prop({bot()}, label) : truth_prop({}, label);
    case EqKind::UTripos:
    case EqKind::DeltaK:
      if (i != j) break;
      return falsity_prop(ctx, {ctx.nu(0)}, label);
    case EqKind::TwoK:
      if (i > 1 || j > 1) throw CliqueError("eq_pred: 2_K indices must be 0 or 1");
      [[fallthrough]];
    case EqKind::NK:
      if (i != j) break;
      // {s | s_n = top_D}^perp
      return falsity_prop(ctx, {ctx.nu(i)}, label);
  }
  Prop p = bot_prop();
  p.label = label;
  return p;
}

Prop ne_pred(Context& ctx, std::uint32_t n, std::uint32_t m) {
  std::string label = "eq_N_E(" + std::to_string(n) + "," + std::to_string(m) + ")";
  if (n != m) return truth_prop({}, label);
  return truth_prop({numeral(ctx, n)}, label);
}

// --- constructed realizers -----------------------------------------------------------

namespace {

std::optional<std::uint32_t> nu_index(Context& ctx, Token t) {
  const auto& es = ctx.entries(t);
  if (es.size() == 1 && es[0].child == ctx.empty()) return es[0].index;
  return std::nullopt;
}

class ETermImpl final : public TermImpl {
 public:
  std::string name() const override { return "e"; }

  Tri contains(Eval& ev, Token b) const override {
    Context& ctx = ev.ctx;
    if (b == ctx.nu(0)) return Tri::Yes;
    auto h = ctx.head(b);
    if (h.size() != 1) return Tri::No;
    auto n = nu_index(ctx, h[0]);
    if (!n) return Tri::No;
    Token d = ctx.tail(b);
    auto hd = ctx.head(d);
    if (hd.size() != 1) return Tri::No;
    Token g = hd[0];
    auto a = ctx.head(g);
    if (a.size() > 1 || (a.size() == 1 && a[0] != h[0])) return Tri::No;
    return tri(ctx.tail(g) == ctx.tail(d));
  }

  Meet meets(Eval& ev, const Stack& s) const override {
    Context& ctx = ev.ctx;
    Term s0 = s.component(ctx, 0);
    Stack r1 = s.pop(ctx);
    Term s1 = r1.component(ctx, 0);
    if (!s0.is_finite() || !s1.is_finite()) return TermImpl::meets(ev, s);
    if (set_contains(s0.tokens(), ctx.empty())) return {Tri::Yes, ctx.nu(0)};
    Stack rest = r1.pop(ctx);
    bool unknown = false;
    for (Token x : s0.tokens()) {
      if (!nu_index(ctx, x)) continue;
      std::vector<Token> gs = s1.tokens();
      ctx.sort_canonical(gs);
      for (Token g : gs) {
        auto a = ctx.head(g);
        if (a.size() > 1 || (a.size() == 1 && a[0] != x)) continue;
        Token alpha = ctx.tail(g);
        Tri in = rest.contains(ev, alpha);
        if (in == Tri::Yes) return {Tri::Yes, ctx.cons({x}, ctx.cons({g}, alpha))};
        if (in == Tri::Unknown) unknown = true;
      }
    }
    return {unknown ? Tri::Unknown : Tri::No, std::nullopt};
  }

 protected:
  void produce(Eval& ev, std::vector<Token>& out) const override {
    Context& ctx = ev.ctx;
    out.push_back(ctx.nu(0));
    for (std::uint32_t n = 0; n < ev.u.width; ++n) {
      Token nu = ctx.nu(n);
      for (Token alpha : ctx.enumerate(ev.u)) {
        out.push_back(ctx.cons({nu}, ctx.cons({ctx.cons({}, alpha)}, alpha)));
        out.push_back(ctx.cons({nu}, ctx.cons({ctx.cons({nu}, alpha)}, alpha)));
      }
    }
  }
};

class ForallTermImpl final : public TermImpl {
 public:
  explicit ForallTermImpl(std::vector<Term> p) : p_(std::move(p)) {}
  std::string name() const override {
    std::string s = "(forall-term";
    for (const Term& t : p_) s += " " + t.name();
    return s + ")";
  }

  Tri contains(Eval& ev, Token b) const override {
    Context& ctx = ev.ctx;
    if (b == ctx.nu(0)) return Tri::Yes;
    auto h = ctx.head(b);
    if (h.size() != 1) return Tri::No;
    auto n = nu_index(ctx, h[0]);
    if (!n || *n >= p_.size()) return Tri::No;
    return p_[*n].contains(ev, ctx.tail(b));
  }

  Meet meets(Eval& ev, const Stack& s) const override {
    Context& ctx = ev.ctx;
    Term s0 = s.component(ctx, 0);
    Tri top_in = s0.contains(ev, ctx.empty());
    if (top_in == Tri::Yes) return {Tri::Yes, ctx.nu(0)};
    bool unknown = top_in == Tri::Unknown;
    Stack rest = s.pop(ctx);
    for (std::uint32_t n = 0; n < p_.size(); ++n) {
      Tri in = s0.contains(ev, ctx.nu(n));
      if (in == Tri::No) continue;
      if (in == Tri::Unknown) {
        unknown = true;
        continue;
      }
      Meet m = p_[n].meets(ev, rest);
      if (m.verdict == Tri::Yes) {
        if (m.witness) m.witness = ctx.cons({ctx.nu(n)}, *m.witness);
        return m;
      }
      if (m.verdict == Tri::Unknown) unknown = true;
    }
    return {unknown ? Tri::Unknown : Tri::No, std::nullopt};
  }

 protected:
  void produce(Eval& ev, std::vector<Token>& out) const override {
    out.push_back(ev.ctx.nu(0));
    for (std::uint32_t n = 0; n < p_.size(); ++n)
      for (Token b : p_[n].generate(ev)) out.push_back(ev.ctx.cons({ev.ctx.nu(n)}, b));
  }

 private:
  std::vector<Term> p_;
};

}  // namespace

Term e_term() {
  static const Term e(std::make_shared<ETermImpl>());
  return e;
}

Term forall_term(std::vector<Term> branches) { return Term(std::make_shared<ForallTermImpl>(std::move(branches))); }

Term eta(Eval& ev) { return interpret(ev, lam("x", lam("p", app(var("p"), var("x"))))); }

// --- suites -------------------------------------------------------------------------

Report check_jU_constants(Eval& ev) {
  Report rep;
  Context& ctx = ev.ctx;
  BoundedUniverse u = bounded_universe(ev);
  const Token nu0 = ctx.nu(0);
  Prop j_empty = j_U(ev, truth_prop({}, "empty"));
  Prop j_all = j_U(ev, truth_prop({bot()}, "D"));
  Prop j_u = j_U(ev, u_prop());

  std::size_t bad_empty = 0, bad_all = 0, pl_in_ju = 0, pl_app = 0, pl_count = 0;
  std::string first_bad;
  for (const Term& t : u.terms) {
    bool is_top = t.tokens().size() == 1 && t.tokens()[0] == ctx.empty();
    if ((member(ev, t, j_empty) == Tri::Yes) != is_top) {
      ++bad_empty;
      if (first_bad.empty()) first_bad = describe(ctx, t);
    }
    bool want_all = is_top || set_contains(t.tokens(), nu0);
    if ((member(ev, t, j_all) == Tri::Yes) != want_all) {
      ++bad_all;
      if (first_bad.empty()) first_bad = describe(ctx, t);
    }
    if (is_prooflike(ev, t).status != ProoflikeResult::Yes) continue;
    ++pl_count;
    if (member(ev, t, j_u) != Tri::No) ++pl_in_ju;
    // t i is proof-like, hence outside U, so t cannot send i in (U -> U) into U
    Term ti = apply(ev, t, identity());
    if (is_prooflike(ev, ti).status != ProoflikeResult::Yes || member(ev, ti, u_prop()) != Tri::No) ++pl_app;
  }
  std::string n = std::to_string(u.terms.size()) + " terms";
  rep.add("jU(empty) = {top_D}", bad_empty == 0, n + (bad_empty ? ", first mismatch " + first_bad : ""));
  rep.add("jU(D) = {top_D} u up(0)", bad_all == 0, n + (bad_all ? ", first mismatch " + first_bad : ""));
  rep.add("jU(U) has no proof-like member", pl_in_ju == 0,
          std::to_string(pl_count) + " proof-like terms, " + std::to_string(pl_in_ju) + " members");
  rep.add("proof-like t: t i is proof-like and outside U", pl_app == 0, std::to_string(pl_app) + " violations");
  return rep;
}

Report check_NK_realizers(Eval& ev, std::uint32_t n_max) {
  Report rep;
  Context& ctx = ev.ctx;
  Term e = e_term();
  Term t = top(ctx);
  BoundedUniverse u = bounded_universe(ev, 2);

  // defining equations of e
  std::size_t bad_top = 0, bad_app = 0, checked = 0;
  for (const Stack& pi : u.stacks)
    if (evaluate(ev, apply(ev, e, t), pi).verdict != evaluate(ev, t, pi).verdict) ++bad_top;
  for (std::uint32_t n = 0; n < n_max; ++n) {
    Term nb = numeral(ctx, n);
    Term en = apply(ev, e, nb);
    for (const Term& d : u.terms)
      for (const Stack& pi : u.stacks) {
        ++checked;
        if (evaluate(ev, apply(ev, en, d), pi).verdict != evaluate(ev, apply(ev, d, nb), pi).verdict) ++bad_app;
      }
  }
  rep.add("e top_D = top_D", bad_top == 0, std::to_string(u.stacks.size()) + " stacks");
  rep.add("e n d = d n", bad_app == 0, std::to_string(checked) + " cases, " + std::to_string(bad_app) + " failures");
  ProoflikeResult pl = is_prooflike(ev, e);
  rep.add("e is proof-like (bounded)", pl.status == ProoflikeResult::Yes);

  for (std::uint32_t n = 0; n < n_max; ++n)
    for (std::uint32_t m = 0; m < n_max; ++m) {
      Prop nk = eq_pred(ctx, EqKind::NK, n, m);
      Prop je = j_U(ev, ne_pred(ctx, n, m));
      Verdict a = check_realizer(ev, cc(), implies(ev, je, nk));
      Verdict b = check_realizer(ev, e, implies(ev, nk, je));
      std::string id = "(" + std::to_string(n) + "," + std::to_string(m) + ")";
      rep.add("cc: jU(N_E) -> N_K " + id, a.kind == Verdict::Realizes, to_string(a.kind));
      rep.add("e: N_K -> jU(N_E) " + id, b.kind == Verdict::Realizes, to_string(b.kind));
    }
  return rep;
}

Report lemma1_suite(Eval& ev, const std::vector<Prop>& family) {
  Report rep;
  Term h = eta(ev);
  for (const Prop& a : family) {
    Prop ja = j_U(ev, a);
    Verdict v1 = check_realizer(ev, h, implies(ev, a, ja));
    Verdict v2 = check_realizer(ev, cc(), implies(ev, ja, a));
    std::string b1 = v1.bounded ? " (bounded)" : "", b2 = v2.bounded ? " (bounded)" : "";
    rep.add("eta: " + a.label + " -> jU", v1.kind == Verdict::Realizes, to_string(v1.kind) + b1);
    rep.add("cc: jU -> " + a.label, v2.kind == Verdict::Realizes, to_string(v2.kind) + b2);
  }
  return rep;
}

std::vector<Prop> generated_props(Eval& ev, std::size_t count) {
  Context& ctx = ev.ctx;
  const auto& w = ctx.enumerate(ev.u);
  std::vector<Prop> out{top_prop(), u_prop()};
  for (Token g : w) {
    if (out.size() >= count) return out;
    out.push_back(falsity_prop(ctx, {g}, "down" + ctx.to_text(g)));
  }
  // two-generator props, pairs in canonical order
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j) {
      if (out.size() >= count) return out;
      out.push_back(falsity_prop(ctx, {w[i], w[j]}, "down" + ctx.to_text(w[i]) + "&" + ctx.to_text(w[j])));
    }
  return out;
}

json prop_to_json(Context& ctx, const Prop& p) {
  json j;
  json f = json::array();
  for (const Stack& s : p.falsity) f.push_back(stack_to_json(ctx, s));
  j["falsity"] = f;
  if (p.basis) {
    json b = json::array();
    for (const Term& t : *p.basis) b.push_back(term_to_json(ctx, t));
    j["basis"] = b;
  }
  j["label"] = p.label;
  return j;
}

Prop prop_from_json(Eval& ev, const json& j) {
  if (!j.is_object()) throw FormatError("prop: expected an object");
  Prop p;
  p.label = j.value("label", std::string{});
  if (j.contains("basis")) {
    std::vector<Term> b;
    for (const json& t : j["basis"]) b.push_back(term_from_json(ev, t));
    p.basis = std::move(b);
    return p;
  }
  if (!j.contains("falsity") || !j["falsity"].is_array()) throw FormatError("prop: missing falsity array");
  for (const json& s : j["falsity"]) {
    Stack st = stack_from_json(ev, s);
    if (!st.principal(ev.ctx)) throw FormatError("prop: falsity stacks must be finite ideals (finite items, empty tail)");
    p.falsity.push_back(std::move(st));
  }
  return p;
}

}  // namespace coh

#include "cohrealiz/term.hpp"

#include <algorithm>
#include <functional>

namespace coh {

TokenSet make_set(std::vector<Token> ts) {
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
  return ts;
}

bool set_contains(const TokenSet& s, Token t) { return std::binary_search(s.begin(), s.end(), t); }

std::vector<TokenSet> subsets(const TokenSet& s) {
  if (s.size() > 20) throw CliqueError("subsets: set too large");
  std::vector<TokenSet> out;
  const std::size_t n = s.size();
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    TokenSet sub;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1u << i)) sub.push_back(s[i]);
    out.push_back(std::move(sub));
  }
  std::stable_sort(out.begin(), out.end(), [](const TokenSet& a, const TokenSet& b) { return a.size() < b.size(); });
  return out;
}

const char* to_string(Verdict3 v) {
  switch (v) {
    case Verdict3::Top: return "Top";
    case Verdict3::Bot: return "Bot";
    case Verdict3::Inconclusive: return "Inconclusive";
  }
  return "?";
}

namespace {

Tri tri_and(Tri a, Tri b) {
  if (a == Tri::No || b == Tri::No) return Tri::No;
  if (a == Tri::Unknown || b == Tri::Unknown) return Tri::Unknown;
  return Tri::Yes;
}

// Is every token of a in the term s?
Tri all_in(Eval& ev, const TokenSet& a, const Term& s) {
  Tri r = Tri::Yes;
  for (Token x : a) {
    r = tri_and(r, s.contains(ev, x));
    if (r == Tri::No) return r;
  }
  return r;
}

class FiniteImpl final : public TermImpl {
 public:
  explicit FiniteImpl(std::string label) : label_(std::move(label)) {}
  FiniteImpl(Context& ctx, TokenSet ts, std::string label) : tokens_(std::move(ts)), label_(std::move(label)) {
    ordered_ = tokens_;
    ctx.sort_canonical(ordered_);
  }
  std::string name() const override { return label_; }
  const TokenSet* finite_tokens() const override { return &tokens_; }
  Tri contains(Eval&, Token t) const override { return tri(set_contains(tokens_, t)); }

  Meet meets(Eval& ev, const Stack& s) const override {
    bool unknown = false;
    for (Token t : ordered_) {
      Tri r = s.contains(ev, t);
      if (r == Tri::Yes) return {Tri::Yes, t};
      if (r == Tri::Unknown) unknown = true;
    }
    return {unknown ? Tri::Unknown : Tri::No, std::nullopt};
  }

  std::optional<std::vector<TokenSet>> heads(Eval& ev, Token tail) const override {
    std::vector<TokenSet> out;
    for (Token b : ordered_)
      if (ev.ctx.tail(b) == tail) out.push_back(make_set(ev.ctx.head(b)));
    return out;
  }

 protected:
  void produce(Eval&, std::vector<Token>& out) const override { out = ordered_; }

 private:
  TokenSet tokens_;
  std::vector<Token> ordered_;
  std::string label_;
};

class IdentityImpl final : public TermImpl {
 public:
  std::string name() const override { return "id"; }

  Tri contains(Eval& ev, Token b) const override {
    auto h = ev.ctx.head(b);
    return tri(h.size() == 1 && ev.ctx.tail(b) == h[0]);
  }

  // cons({a},a) lies in s0.rest iff a lies in s0 and in rest
  Meet meets(Eval& ev, const Stack& s) const override {
    Meet m = s.component(ev.ctx, 0).meets(ev, s.pop(ev.ctx));
    if (m.witness) m.witness = ev.ctx.cons({*m.witness}, *m.witness);
    return m;
  }

  std::optional<std::vector<TokenSet>> heads(Eval&, Token tail) const override {
    return std::vector<TokenSet>{{tail}};
  }

 protected:
  void produce(Eval& ev, std::vector<Token>& out) const override {
    for (Token a : ev.ctx.enumerate(ev.u)) out.push_back(ev.ctx.cons({a}, a));
  }
};

// The value a cc token returns for the head token g = {a1^,..,ak^}.a, i.e.
// a u a1 u .. u ak, when g has that shape and the union is a web token.
std::optional<Token> cc_result(Context& ctx, Token g) {
  std::vector<Token> parts{ctx.tail(g)};
  for (Token h : ctx.head(g)) {
    const auto& es = ctx.entries(h);
    if (es.size() != 1 || es[0].index != 0) return std::nullopt;
    parts.push_back(es[0].child);
  }
  Token r = ctx.unite(parts);
  if (!ctx.web(r)) return std::nullopt;
  return r;
}

class CcImpl final : public TermImpl {
 public:
  std::string name() const override { return "cc"; }

  Tri contains(Eval& ev, Token b) const override {
    auto h = ev.ctx.head(b);
    if (h.size() != 1) return Tri::No;
    auto r = cc_result(ev.ctx, h[0]);
    return tri(r && *r == ev.ctx.tail(b));
  }

  Meet meets(Eval& ev, const Stack& s) const override {
    Term s0 = s.component(ev.ctx, 0);
    if (!s0.is_finite()) return TermImpl::meets(ev, s);
    Stack rest = s.pop(ev.ctx);
    std::vector<Token> gs = s0.tokens();
    ev.ctx.sort_canonical(gs);
    bool unknown = false;
    for (Token g : gs) {
      auto r = cc_result(ev.ctx, g);
      if (!r) continue;
      Tri in = rest.contains(ev, *r);
      if (in == Tri::Yes) return {Tri::Yes, ev.ctx.cons({g}, *r)};
      if (in == Tri::Unknown) unknown = true;
    }
    return {unknown ? Tri::Unknown : Tri::No, std::nullopt};
  }

  // Every head {g} with cc_result(g) = tail: g = {a1^..ak^}.a' where a' and
  // the distinct ai are subtokens of tail whose union is tail.
  std::optional<std::vector<TokenSet>> heads(Eval& ev, Token tail) const override {
    Context& ctx = ev.ctx;
    if (ctx.size(tail) > 4) return std::nullopt;
    std::vector<Token> subs = ctx.subtokens(tail);
    std::vector<TokenSet> out;
    for (Token a : subs) {
      for (const TokenSet& as : subsets(make_set(subs))) {
        std::vector<Token> parts(as.begin(), as.end());
        parts.push_back(a);
        if (ctx.unite(parts) != tail) continue;
        std::vector<Token> hats;
        for (Token x : as) hats.push_back(ctx.hat(x));
        Token g = ctx.cons(hats, a);
        if (ctx.web(g)) out.push_back({g});
      }
    }
    return out;
  }

 protected:
  void produce(Eval& ev, std::vector<Token>& out) const override {
    Context& ctx = ev.ctx;
    const auto& w = ctx.enumerate(ev.u);
    std::vector<Token> cur;
    // {ai^, aj^} is a web token iff ai coh aj, so the head {a1^..ak^} is a
    // clique exactly when the ai are pairwise strictly incoherent
    std::function<void(std::size_t)> rec = [&](std::size_t from) {
      std::vector<Token> hats;
      for (Token x : cur) hats.push_back(ctx.hat(x));
      for (Token a : w) {
        std::vector<Token> parts = cur;
        parts.push_back(a);
        Token r = ctx.unite(parts);
        if (!ctx.web(r)) continue;
        out.push_back(ctx.cons({ctx.cons(hats, a)}, r));
      }
      if (cur.size() == ev.u.width) return;
      for (std::size_t k = from; k < w.size(); ++k) {
        bool ok = true;
        for (Token x : cur)
          if (!ctx.incoherent_strict(x, w[k])) ok = false;
        if (!ok) continue;
        cur.push_back(w[k]);
        rec(k + 1);
        cur.pop_back();
      }
    };
    rec(0);
  }
};

class KOfImpl final : public TermImpl {
 public:
  explicit KOfImpl(Stack s) : stack_(std::move(s)) {}
  std::string name() const override { return "k"; }

  Tri contains(Eval& ev, Token b) const override {
    const auto& es = ev.ctx.entries(b);
    if (es.size() != 1 || es[0].index != 0) return Tri::No;
    return stack_.contains(ev, es[0].child);
  }

  // a^ lies in s0.rest iff a lies in s0 (the empty tail is always in rest)
  Meet meets(Eval& ev, const Stack& s) const override {
    Meet m = s.component(ev.ctx, 0).meets(ev, stack_);
    if (m.witness) m.witness = ev.ctx.hat(*m.witness);
    return m;
  }

  std::optional<std::vector<TokenSet>> heads(Eval& ev, Token tail) const override {
    if (tail != ev.ctx.empty()) return std::vector<TokenSet>{};
    return std::nullopt;
  }

 protected:
  void produce(Eval& ev, std::vector<Token>& out) const override {
    if (auto g = stack_.principal(ev.ctx)) {
      for (Token a : ev.ctx.subtokens(*g)) out.push_back(ev.ctx.hat(a));
      return;
    }
    for (Token a : ev.ctx.enumerate(ev.u))
      if (stack_.contains(ev, a) == Tri::Yes) out.push_back(ev.ctx.hat(a));
  }

 private:
  Stack stack_;
};

class ApplyImpl final : public TermImpl {
 public:
  ApplyImpl(Term t, Term s) : t_(std::move(t)), s_(std::move(s)) {}
  std::string name() const override { return "(app " + t_.name() + " " + s_.name() + ")"; }

  Tri contains(Eval& ev, Token a) const override {
    if (auto hs = t_.impl().heads(ev, a)) {
      bool unknown = false;
      for (const TokenSet& h : *hs) {
        Tri r = all_in(ev, h, s_);
        if (r == Tri::Yes) return Tri::Yes;
        if (r == Tri::Unknown) unknown = true;
      }
      return unknown ? Tri::Unknown : Tri::No;
    }
    for (Token b : t_.generate(ev)) {
      if (!ev.fuel.spend()) return Tri::Unknown;
      if (ev.ctx.tail(b) == a && all_in(ev, make_set(ev.ctx.head(b)), s_) == Tri::Yes) return Tri::Yes;
    }
    return Tri::Unknown;
  }

  // (ts) meets r iff t meets s.r
  Meet meets(Eval& ev, const Stack& r) const override {
    Meet m = t_.meets(ev, push(ev.ctx, s_, r));
    if (m.witness) m.witness = ev.ctx.tail(*m.witness);
    return m;
  }

 protected:
  void produce(Eval& ev, std::vector<Token>& out) const override {
    for (Token b : t_.generate(ev))
      if (all_in(ev, make_set(ev.ctx.head(b)), s_) == Tri::Yes) out.push_back(ev.ctx.tail(b));
  }

 private:
  Term t_, s_;
};

class FilterImpl final : public TermImpl {
 public:
  FilterImpl(Term t, std::string label, std::function<bool(Context&, Token)> keep)
      : t_(std::move(t)), label_(std::move(label)), keep_(std::move(keep)) {}
  std::string name() const override { return label_ + "(" + t_.name() + ")"; }
  Tri contains(Eval& ev, Token b) const override {
    if (!ev.ctx.web(b) || !keep_(ev.ctx, b)) return Tri::No;
    return t_.contains(ev, b);
  }

 protected:
  void produce(Eval& ev, std::vector<Token>& out) const override {
    for (Token b : t_.generate(ev))
      if (keep_(ev.ctx, b)) out.push_back(b);
  }

 private:
  Term t_;
  std::string label_;
  std::function<bool(Context&, Token)> keep_;
};

const std::shared_ptr<const TermImpl>& bot_impl() {
  static const std::shared_ptr<const TermImpl> impl = std::make_shared<FiniteImpl>("bot");
  return impl;
}

}  // namespace

// --- TermImpl ---------------------------------------------------------------

Meet TermImpl::meets(Eval& ev, const Stack& s) const {
  Context& ctx = ev.ctx;
  if (auto g = s.principal(ctx); g && ctx.size(*g) <= 16) {
    std::vector<Token> cands = ctx.subtokens(*g);
    ctx.sort_canonical(cands);
    bool unknown = false;
    for (Token a : cands) {
      if (!ev.fuel.spend()) return {Tri::Unknown, std::nullopt};
      Tri r = contains(ev, a);
      if (r == Tri::Yes) return {Tri::Yes, a};
      if (r == Tri::Unknown) unknown = true;
    }
    return {unknown ? Tri::Unknown : Tri::No, std::nullopt};
  }
  // infinite ideal: only a positive answer can be established
  for (Token b : generate(ev)) {
    if (!ev.fuel.spend()) break;
    if (s.contains(ev, b) == Tri::Yes) return {Tri::Yes, b};
  }
  return {Tri::Unknown, std::nullopt};
}

std::optional<std::vector<TokenSet>> TermImpl::heads(Eval&, Token) const { return std::nullopt; }

const std::vector<Token>& TermImpl::generate(Eval& ev) const {
  auto key = std::make_tuple(ev.ctx.serial(), ev.u.level, ev.u.width);
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = generated_.find(key);
    if (it != generated_.end()) return it->second;
  }
  std::vector<Token> out;
  produce(ev, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  ev.ctx.sort_canonical(out);
  if (!finite_tokens()) {
    // incremental coherence check against the already accepted prefix
    for (std::size_t i = 0; i < out.size(); ++i) {
      if (!ev.ctx.web(out[i]))
        throw CliqueError(name() + ": produced non-web token " + ev.ctx.to_text(out[i]));
      for (std::size_t j = 0; j < i; ++j)
        if (!ev.ctx.coherent(out[j], out[i]))
          throw CliqueError(name() + ": produced incoherent tokens " + ev.ctx.to_text(out[j]) + " and " +
                            ev.ctx.to_text(out[i]));
    }
  }
  std::lock_guard<std::mutex> lock(mu_);
  return generated_.emplace(key, std::move(out)).first->second;
}

// --- Term -------------------------------------------------------------------

Term::Term() : impl_(bot_impl()) {}

bool Term::is_finite() const { return impl_->finite_tokens() != nullptr; }

const TokenSet& Term::tokens() const {
  const TokenSet* ts = impl_->finite_tokens();
  if (!ts) throw CliqueError("tokens(): term " + name() + " is lazy");
  return *ts;
}

std::string Term::name() const { return impl_->name(); }
Tri Term::contains(Eval& ev, Token t) const { return impl_->contains(ev, t); }
Meet Term::meets(Eval& ev, const Stack& s) const { return impl_->meets(ev, s); }
const std::vector<Token>& Term::generate(Eval& ev) const { return impl_->generate(ev); }

// --- Stack ------------------------------------------------------------------

Stack Stack::seq(std::vector<Term> items, Tail tail) { return Stack(Seq{std::move(items), tail}); }

Stack Stack::ideal(Context& ctx, std::vector<Token> generators) {
  Token g = ctx.unite(generators);
  if (!ctx.web(g)) throw CliqueError("ideal: generators have no common upper bound in the web");
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  return Stack(Ideal{std::move(generators), g});
}

const std::vector<Term>& Stack::items() const {
  static const std::vector<Term> none;
  return is_seq() ? std::get<Seq>(rep_).items : none;
}

Tail Stack::tail() const { return is_seq() ? std::get<Seq>(rep_).tail : Tail::Empty; }

const std::vector<Token>& Stack::generators() const {
  static const std::vector<Token> none;
  return is_seq() ? none : std::get<Ideal>(rep_).generators;
}

Token Stack::ideal_top() const { return std::get<Ideal>(rep_).top; }

Term Stack::component(Context& ctx, std::size_t n) const {
  if (const Seq* s = std::get_if<Seq>(&rep_)) {
    if (n < s->items.size()) return s->items[n];
    return s->tail == Tail::Top ? top(ctx) : bot();
  }
  return finite(ctx, ctx.project(std::get<Ideal>(rep_).top, static_cast<std::uint32_t>(n)));
}

Stack Stack::pop(Context& ctx) const {
  if (const Seq* s = std::get_if<Seq>(&rep_)) {
    if (s->items.empty()) return *this;
    return seq(std::vector<Term>(s->items.begin() + 1, s->items.end()), s->tail);
  }
  return ideal(ctx, {ctx.tail(std::get<Ideal>(rep_).top)});
}

std::size_t Stack::prefix(Context& ctx) const {
  if (const Seq* s = std::get_if<Seq>(&rep_)) return s->items.size();
  return ctx.max_index_plus_one(std::get<Ideal>(rep_).top);
}

std::optional<Token> Stack::principal(Context& ctx) const {
  if (const Ideal* i = std::get_if<Ideal>(&rep_)) return i->top;
  const Seq& s = std::get<Seq>(rep_);
  if (s.tail == Tail::Top) return std::nullopt;
  std::vector<Entry> es;
  for (std::size_t n = 0; n < s.items.size(); ++n) {
    if (!s.items[n].is_finite()) return std::nullopt;
    for (Token b : s.items[n].tokens()) es.push_back({static_cast<std::uint32_t>(n), b});
  }
  return ctx.make(std::move(es));
}

Tri Stack::contains(Eval& ev, Token t) const {
  if (const Ideal* i = std::get_if<Ideal>(&rep_)) return tri(ev.ctx.subset(t, i->top));
  const Seq& s = std::get<Seq>(rep_);
  Tri r = Tri::Yes;
  for (const Entry& e : ev.ctx.entries(t)) {
    Tri x;
    if (e.index < s.items.size())
      x = s.items[e.index].contains(ev, e.child);
    else
      x = tri(s.tail == Tail::Top && e.child == ev.ctx.empty());
    r = tri_and(r, x);
    if (r == Tri::No) return r;
  }
  return r;
}

Stack Stack::to_seq(Context& ctx) const {
  if (is_seq()) return *this;
  std::vector<Term> items;
  for (std::size_t n = 0; n < prefix(ctx); ++n) items.push_back(component(ctx, n));
  return seq(std::move(items), Tail::Empty);
}

std::string Stack::describe(Context& ctx) const {
  if (const Ideal* i = std::get_if<Ideal>(&rep_)) return "(ideal " + ctx.to_text(i->top) + ")";
  const Seq& s = std::get<Seq>(rep_);
  std::string out = "(stack";
  for (const Term& t : s.items) out += " " + coh::describe(ctx, t);
  if (s.tail == Tail::Top) out += " top";
  return out + ")";
}

// --- constructors -------------------------------------------------------------

bool is_clique(Context& ctx, const TokenSet& ts) {
  for (Token t : ts)
    if (!ctx.web(t)) throw CliqueError("is_clique: token " + ctx.to_text(t) + " is not in the web");
  for (std::size_t i = 0; i < ts.size(); ++i)
    for (std::size_t j = i + 1; j < ts.size(); ++j)
      if (!ctx.coherent(ts[i], ts[j])) return false;
  return true;
}

Term finite(Context& ctx, std::vector<Token> ts, std::string name) {
  TokenSet s = make_set(std::move(ts));
  if (!is_clique(ctx, s)) throw CliqueError("finite: tokens are not pairwise coherent");
  return Term(std::make_shared<FiniteImpl>(ctx, std::move(s), std::move(name)));
}

Term bot() { return Term(); }
Term top(Context& ctx) { return finite(ctx, {ctx.empty()}, "top"); }
Term numeral(Context& ctx, std::uint32_t n) { return finite(ctx, {ctx.nu(n)}, "(num " + std::to_string(n) + ")"); }

Term bar_I(Context& ctx, const std::vector<std::uint32_t>& indices) {
  std::vector<Entry> es;
  std::string label = "(barI";
  for (auto i : indices) {
    es.push_back({i, ctx.empty()});
    label += " " + std::to_string(i);
  }
  return finite(ctx, {ctx.make(std::move(es))}, label + ")");
}

Term identity() {
  static const Term i(std::make_shared<IdentityImpl>());
  return i;
}

Term cc() {
  static const Term c(std::make_shared<CcImpl>());
  return c;
}

Term k_of(const Stack& s) { return Term(std::make_shared<KOfImpl>(s)); }

// --- operations ---------------------------------------------------------------

Stack push(Context& ctx, const Term& t, const Stack& s) {
  if (s.is_seq()) {
    std::vector<Term> items;
    items.reserve(s.items().size() + 1);
    items.push_back(t);
    items.insert(items.end(), s.items().begin(), s.items().end());
    return Stack::seq(std::move(items), s.tail());
  }
  if (t.is_finite()) return Stack::ideal(ctx, {ctx.cons(t.tokens(), s.ideal_top())});
  return push(ctx, t, s.to_seq(ctx));
}

Term apply(Eval& ev, const Term& t, const Term& s) {
  if (const TokenSet* ts = t.impl().finite_tokens()) {
    std::vector<Token> out;
    for (Token b : *ts) {
      Tri r = all_in(ev, make_set(ev.ctx.head(b)), s);
      if (r == Tri::Unknown) return Term(std::make_shared<ApplyImpl>(t, s));
      if (r == Tri::Yes) out.push_back(ev.ctx.tail(b));
    }
    // the tails of a clique's tokens with heads in a common clique are coherent
    return Term(std::make_shared<FiniteImpl>(ev.ctx, make_set(std::move(out)), "(app " + t.name() + " " + s.name() + ")"));
  }
  if (auto r = t.impl().apply_to(ev, s)) return *r;
  return Term(std::make_shared<ApplyImpl>(t, s));
}

EvalResult evaluate(Eval& ev, const Process& p) {
  Meet m = p.term.meets(ev, p.stack);
  switch (m.verdict) {
    case Tri::Yes: return {Verdict3::Top, m.witness};
    case Tri::No: return {Verdict3::Bot, std::nullopt};
    case Tri::Unknown: break;
  }
  return {Verdict3::Inconclusive, std::nullopt};
}

ProoflikeResult is_prooflike(Eval& ev, const Term& t) {
  ProoflikeResult r;
  if (t.is_finite()) {
    std::vector<Token> ts = t.tokens();
    ev.ctx.sort_canonical(ts);
    for (Token b : ts)
      if (ev.ctx.grade(b) == 0) return {ProoflikeResult::No, false, b};
    return r;
  }
  r.bounded = true;
  for (Token b : t.generate(ev)) {
    if (!ev.fuel.spend()) return {ProoflikeResult::InconclusiveLazy, true, std::nullopt};
    if (ev.ctx.grade(b) == 0) return {ProoflikeResult::No, false, b};
  }
  return r;
}

namespace {
Term filtered(Eval& ev, const Term& t, const std::string& label, std::function<bool(Context&, Token)> keep) {
  if (t.is_finite()) {
    std::vector<Token> out;
    for (Token b : t.tokens())
      if (keep(ev.ctx, b)) out.push_back(b);
    return Term(std::make_shared<FiniteImpl>(ev.ctx, make_set(std::move(out)), label + "(" + t.name() + ")"));
  }
  return Term(std::make_shared<FilterImpl>(t, label, std::move(keep)));
}
}  // namespace

Term r_P(Eval& ev, const Term& t) {
  return filtered(ev, t, "rP", [](Context& c, Token b) { return c.grade(b) == 1; });
}

Term h(Eval& ev, std::uint32_t n, const Term& t) {
  return filtered(ev, t, "h" + std::to_string(n), [n](Context& c, Token b) { return c.level(b) <= n; });
}

std::vector<TokenSet> cliques(Context& ctx, const std::vector<Token>& pool, std::size_t max_size) {
  std::vector<TokenSet> out;
  std::vector<Token> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    out.push_back(make_set(cur));
    if (cur.size() == max_size) return;
    for (std::size_t k = from; k < pool.size(); ++k) {
      bool ok = true;
      for (Token x : cur)
        if (!ctx.coherent(x, pool[k])) {
          ok = false;
          break;
        }
      if (!ok) continue;
      cur.push_back(pool[k]);
      rec(k + 1);
      cur.pop_back();
    }
  };
  rec(0);
  std::stable_sort(out.begin(), out.end(), [](const TokenSet& a, const TokenSet& b) { return a.size() < b.size(); });
  return out;
}

std::vector<Stack> stack_family(const std::vector<Term>& components, std::size_t prefix, bool with_top_tail) {
  std::vector<Stack> out;
  std::vector<Term> cur;
  std::function<void()> rec = [&]() {
    if (cur.size() == prefix) {
      out.push_back(Stack::seq(cur, Tail::Empty));
      if (with_top_tail) out.push_back(Stack::seq(cur, Tail::Top));
      return;
    }
    for (const Term& c : components) {
      cur.push_back(c);
      rec();
      cur.pop_back();
    }
  };
  rec();
  return out;
}

std::string describe(Context& ctx, const Term& t) {
  if (!t.is_finite() || !t.name().empty()) return t.name();
  std::vector<Token> ts = t.tokens();
  ctx.sort_canonical(ts);
  std::string out = "(lit {\"finite\":[";
  for (std::size_t i = 0; i < ts.size(); ++i) out += (i ? "," : "") + ctx.to_text(ts[i]);
  return out + "]})";
}

}  // namespace coh

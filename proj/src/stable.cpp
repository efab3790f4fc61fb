#include "cohrealiz/stable.hpp"

#include <cctype>

#include "cohrealiz/json_io.hpp"

namespace coh {

// --- syntax constructors -------------------------------------------------------

SyntaxPtr var(std::string x) {
  auto s = std::make_shared<Syntax>();
  s->kind = Syntax::Kind::Var;
  s->name = std::move(x);
  return s;
}

SyntaxPtr lam(std::string x, SyntaxPtr body) {
  auto s = std::make_shared<Syntax>();
  s->kind = Syntax::Kind::Lam;
  s->name = std::move(x);
  s->fn = std::move(body);
  return s;
}

SyntaxPtr app(SyntaxPtr f, SyntaxPtr a) {
  auto s = std::make_shared<Syntax>();
  s->kind = Syntax::Kind::App;
  s->fn = std::move(f);
  s->arg = std::move(a);
  return s;
}

SyntaxPtr app(SyntaxPtr f, SyntaxPtr a, SyntaxPtr b) { return app(app(std::move(f), std::move(a)), std::move(b)); }

SyntaxPtr constant(Syntax::Kind k) {
  auto s = std::make_shared<Syntax>();
  s->kind = k;
  return s;
}

SyntaxPtr num(std::uint32_t n) {
  auto s = std::make_shared<Syntax>();
  s->kind = Syntax::Kind::Num;
  s->n = n;
  return s;
}

SyntaxPtr lit(Term t) {
  auto s = std::make_shared<Syntax>();
  s->kind = Syntax::Kind::Lit;
  s->lit = std::move(t);
  return s;
}

std::string to_text(const Syntax& e) {
  using K = Syntax::Kind;
  switch (e.kind) {
    case K::Var: return e.name;
    case K::Lam: return "(lam " + e.name + " " + to_text(*e.fn) + ")";
    case K::App: return "(app " + to_text(*e.fn) + " " + to_text(*e.arg) + ")";
    case K::Cc: return "cc";
    case K::Num: return "(num " + std::to_string(e.n) + ")";
    case K::BarI: {
      std::string s = "(barI";
      for (auto i : e.index) s += " " + std::to_string(i);
      return s + ")";
    }
    case K::Top: return "top";
    case K::Bot: return "bot";
    case K::Id: return "id";
    case K::KOf: {
      std::string s = "(k (stack";
      for (const auto& i : e.stack.items) s += " " + to_text(*i);
      if (e.stack.tail == Tail::Top) s += " top";
      return s + "))";
    }
    case K::Lit: return "(lit " + e.lit->name() + ")";
  }
  return "?";
}

namespace {

bool closed_under(const Syntax& e, std::vector<std::string>& bound) {
  using K = Syntax::Kind;
  switch (e.kind) {
    case K::Var: return std::find(bound.begin(), bound.end(), e.name) != bound.end();
    case K::Lam: {
      bound.push_back(e.name);
      bool r = closed_under(*e.fn, bound);
      bound.pop_back();
      return r;
    }
    case K::App: return closed_under(*e.fn, bound) && closed_under(*e.arg, bound);
    case K::KOf:
      for (const auto& i : e.stack.items)
        if (!closed_under(*i, bound)) return false;
      return true;
    default: return true;
  }
}

}  // namespace

bool is_closed(const Syntax& e) {
  std::vector<std::string> bound;
  return closed_under(e, bound);
}

bool is_pure_lambda(const Syntax& e) {
  using K = Syntax::Kind;
  switch (e.kind) {
    case K::Var: return true;
    case K::Lam: return is_pure_lambda(*e.fn);
    case K::App: return is_pure_lambda(*e.fn) && is_pure_lambda(*e.arg);
    case K::Cc:
    case K::Id:
    case K::Num:
    case K::BarI: return true;
    default: return false;
  }
}

// --- parser -------------------------------------------------------------------

namespace {

class Parser {
 public:
  Parser(Context& ctx, const std::string& src) : ctx_(ctx), src_(src) {}

  SyntaxPtr term() {
    skip();
    if (at_end()) fail("expected a term");
    if (src_[pos_] != '(') {
      std::size_t at = pos_;
      std::string a = atom();
      if (a == "cc") return constant(Syntax::Kind::Cc);
      if (a == "top") return constant(Syntax::Kind::Top);
      if (a == "bot") return constant(Syntax::Kind::Bot);
      if (a == "id") return constant(Syntax::Kind::Id);
      if (a.empty() || std::isdigit(static_cast<unsigned char>(a[0]))) fail("unexpected token '" + a + "'", at);
      return var(a);
    }
    std::size_t open = pos_++;
    skip();
    std::string head = atom();
    SyntaxPtr out;
    if (head == "lam") {
      std::vector<std::string> xs;
      xs.push_back(identifier());
      // (lam x y b) abbreviates (lam x (lam y b))
      while (true) {
        skip();
        std::size_t save = pos_;
        if (at_end() || src_[pos_] == '(') break;
        std::string a = atom();
        skip();
        if (!at_end() && src_[pos_] == ')') {
          pos_ = save;
          break;
        }
        xs.push_back(a);
      }
      out = term();
      for (auto it = xs.rbegin(); it != xs.rend(); ++it) out = lam(*it, out);
    } else if (head == "app") {
      out = term();
      SyntaxPtr a = term();
      out = app(out, a);
      while (skip(), !at_end() && src_[pos_] != ')') out = app(out, term());
    } else if (head == "num") {
      out = num(natural());
    } else if (head == "barI") {
      auto s = std::make_shared<Syntax>();
      s->kind = Syntax::Kind::BarI;
      while (skip(), !at_end() && src_[pos_] != ')') s->index.push_back(natural());
      out = s;
    } else if (head == "k") {
      auto s = std::make_shared<Syntax>();
      s->kind = Syntax::Kind::KOf;
      s->stack = stack();
      out = s;
    } else if (head == "lit") {
      auto s = std::make_shared<Syntax>();
      s->kind = Syntax::Kind::Lit;
      s->lit = literal();
      out = s;
    } else {
      fail("unknown form '" + head + "'", open + 1);
    }
    expect(')');
    return out;
  }

  StackSyntax stack() {
    skip();
    std::size_t open = pos_;
    expect('(');
    skip();
    if (atom() != "stack") fail("expected (stack ...)", open);
    StackSyntax s;
    while (skip(), !at_end() && src_[pos_] != ')') s.items.push_back(term());
    expect(')');
    // a trailing bare `top` is the tail marker
    if (!s.items.empty() && s.items.back()->kind == Syntax::Kind::Top) {
      s.items.pop_back();
      s.tail = Tail::Top;
    }
    return s;
  }

  void finish() {
    skip();
    if (!at_end()) fail("trailing input");
  }

 private:
  [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, pos_); }
  [[noreturn]] void fail(const std::string& msg, std::size_t at) { throw ParseError(msg, at); }
  bool at_end() const { return pos_ >= src_.size(); }

  void skip() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  void expect(char c) {
    skip();
    if (at_end() || src_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::string atom() {
    skip();
    std::size_t b = pos_;
    while (!at_end() && !std::isspace(static_cast<unsigned char>(src_[pos_])) && src_[pos_] != '(' &&
           src_[pos_] != ')')
      ++pos_;
    return src_.substr(b, pos_ - b);
  }

  std::string identifier() {
    std::size_t at = (skip(), pos_);
    std::string a = atom();
    if (a.empty() || !std::isalpha(static_cast<unsigned char>(a[0]))) fail("expected a variable name", at);
    return a;
  }

  std::uint32_t natural() {
    std::size_t at = (skip(), pos_);
    std::string a = atom();
    if (a.empty() || a.size() > 9 || a.find_first_not_of("0123456789") != std::string::npos)
      fail("expected a natural number", at);
    return static_cast<std::uint32_t>(std::stoul(a));
  }

  // a JSON term embedded in the s-expression: the balanced {...} span
  Term literal() {
    skip();
    std::size_t b = pos_;
    if (at_end() || src_[pos_] != '{') fail("expected a JSON term");
    int depth = 0;
    bool in_str = false;
    for (; !at_end(); ++pos_) {
      char c = src_[pos_];
      if (in_str) {
        if (c == '\\') ++pos_;
        else if (c == '"') in_str = false;
        continue;
      }
      if (c == '"') in_str = true;
      else if (c == '{' || c == '[') ++depth;
      else if (c == '}' || c == ']') {
        if (--depth == 0) {
          ++pos_;
          break;
        }
      }
    }
    if (depth != 0) fail("unbalanced JSON literal", b);
    try {
      Eval ev(ctx_, Universe{});
      return term_from_json(ev, json::parse(src_.substr(b, pos_ - b)));
    } catch (const json::exception& e) {
      fail(std::string("bad JSON literal: ") + e.what(), b);
    } catch (const FormatError& e) {
      fail(e.what(), b);
    }
  }

  Context& ctx_;
  const std::string& src_;
  std::size_t pos_ = 0;
};

}  // namespace

SyntaxPtr parse_term(Context& ctx, const std::string& src) {
  Parser p(ctx, src);
  SyntaxPtr e = p.term();
  p.finish();
  return e;
}

StackSyntax parse_stack(Context& ctx, const std::string& src) {
  Parser p(ctx, src);
  StackSyntax s = p.stack();
  p.finish();
  return s;
}

// --- interpretation -----------------------------------------------------------

namespace {

/// fun(a -> [[body]] env[x := a]), with denotations memoized per finite argument.
class ClosureImpl final : public TermImpl {
 public:
  ClosureImpl(std::string x, SyntaxPtr body, Env env, std::string label)
      : x_(std::move(x)), body_(std::move(body)), env_(std::move(env)), label_(std::move(label)) {}

  std::string name() const override { return label_; }

  Term instantiate(Eval& ev, const Term& a) const {
    if (!a.is_finite()) {
      Env e = env_;
      e[x_] = a;
      return interpret(ev, body_, e);
    }
    auto it = memo_.find(a.tokens());
    if (it != memo_.end()) return it->second;
    Env e = env_;
    e[x_] = a;
    Term r = interpret(ev, body_, e);
    memo_.emplace(a.tokens(), r);
    return r;
  }

  Term at(Eval& ev, const TokenSet& a) const {
    auto it = memo_.find(a);
    if (it != memo_.end()) return it->second;
    return instantiate(ev, finite(ev.ctx, a));
  }

  // b is in the trace iff tail(b) in f(head b) and in no f(c) for c a
  // maximal proper subset of the head (monotonicity covers the rest)
  Tri contains(Eval& ev, Token b) const override {
    TokenSet a = make_set(ev.ctx.head(b));
    Token alpha = ev.ctx.tail(b);
    Tri r = at(ev, a).contains(ev, alpha);
    if (r != Tri::Yes) return r;
    return minimal(ev, a, alpha);
  }

  Meet meets(Eval& ev, const Stack& s) const override {
    Term s0 = s.component(ev.ctx, 0);
    Meet m = instantiate(ev, s0).meets(ev, s.pop(ev.ctx));
    if (!m.witness) return m;
    if (!s0.is_finite()) {
      m.witness.reset();
      return m;
    }
    // shrink the argument while the witness survives; stability makes the
    // result the minimal argument
    TokenSet a = s0.tokens();
    if (at(ev, a).contains(ev, *m.witness) != Tri::Yes) {
      m.witness.reset();
      return m;
    }
    for (std::size_t i = 0; i < a.size();) {
      TokenSet b = a;
      b.erase(b.begin() + static_cast<std::ptrdiff_t>(i));
      if (at(ev, b).contains(ev, *m.witness) == Tri::Yes)
        a = std::move(b);
      else
        ++i;
    }
    m.witness = ev.ctx.cons(a, *m.witness);
    return m;
  }

  std::optional<Term> apply_to(Eval& ev, const Term& s) const override { return instantiate(ev, s); }

 protected:
  void produce(Eval& ev, std::vector<Token>& out) const override {
    for (const TokenSet& a : cliques(ev.ctx, ev.ctx.enumerate(ev.u), ev.u.width)) {
      Term fa = at(ev, a);
      for (Token alpha : fa.generate(ev))
        if (minimal(ev, a, alpha) == Tri::Yes) out.push_back(ev.ctx.cons(a, alpha));
    }
  }

 private:
  Tri minimal(Eval& ev, const TokenSet& a, Token alpha) const {
    bool unknown = false;
    for (std::size_t i = 0; i < a.size(); ++i) {
      TokenSet b = a;
      b.erase(b.begin() + static_cast<std::ptrdiff_t>(i));
      Tri r = at(ev, b).contains(ev, alpha);
      if (r == Tri::Yes) return Tri::No;
      if (r == Tri::Unknown) unknown = true;
    }
    return unknown ? Tri::Unknown : Tri::Yes;
  }

  std::string x_;
  SyntaxPtr body_;
  Env env_;
  std::string label_;
  mutable std::map<TokenSet, Term> memo_;
};

}  // namespace

Term interpret(Eval& ev, const SyntaxPtr& e, const Env& env) {
  using K = Syntax::Kind;
  switch (e->kind) {
    case K::Var: {
      auto it = env.find(e->name);
      if (it == env.end()) throw UnboundVariable("unbound variable " + e->name);
      return it->second;
    }
    case K::Lam: return Term(std::make_shared<ClosureImpl>(e->name, e->fn, env, to_text(*e)));
    case K::App: return apply(ev, interpret(ev, e->fn, env), interpret(ev, e->arg, env));
    case K::Cc: return cc();
    case K::Num: return numeral(ev.ctx, e->n);
    case K::BarI: return bar_I(ev.ctx, e->index);
    case K::Top: return top(ev.ctx);
    case K::Bot: return bot();
    case K::Id: return identity();
    case K::KOf: return k_of(interpret_stack(ev, e->stack, env));
    case K::Lit: return *e->lit;
  }
  return bot();
}

Stack interpret_stack(Eval& ev, const StackSyntax& s, const Env& env) {
  std::vector<Term> items;
  for (const auto& i : s.items) items.push_back(interpret(ev, i, env));
  return Stack::seq(std::move(items), s.tail);
}

// --- traces -------------------------------------------------------------------

Trace trace_of(Eval& ev, const StableMap& f) {
  Trace tr;
  std::map<TokenSet, Term> values;
  auto value = [&](const TokenSet& a) -> const Term& {
    auto it = values.find(a);
    if (it == values.end()) it = values.emplace(a, f(finite(ev.ctx, a))).first;
    return it->second;
  };
  for (const TokenSet& a : cliques(ev.ctx, ev.ctx.enumerate(ev.u), ev.u.width)) {
    Term fa = value(a);
    std::vector<Token> alphas = fa.is_finite() ? fa.tokens() : fa.generate(ev);
    ev.ctx.sort_canonical(alphas);
    for (Token alpha : alphas) {
      bool minimal = true, unknown = false;
      for (std::size_t i = 0; i < a.size() && minimal; ++i) {
        TokenSet b = a;
        b.erase(b.begin() + static_cast<std::ptrdiff_t>(i));
        if (!ev.fuel.spend()) {
          unknown = true;
          break;
        }
        Tri r = value(b).contains(ev, alpha);
        if (r == Tri::Yes) minimal = false;
        if (r == Tri::Unknown) unknown = true;
      }
      if (!minimal) continue;
      (unknown ? tr.withheld : tr.entries).push_back({a, alpha});
    }
  }
  return tr;
}

Term fun(Context& ctx, const std::vector<TraceEntry>& entries) {
  std::vector<Token> ts;
  for (const TraceEntry& e : entries) ts.push_back(ctx.cons(e.argument, e.value));
  for (std::size_t i = 0; i < ts.size(); ++i)
    for (std::size_t j = i + 1; j < ts.size(); ++j)
      if (!ctx.coherent(ts[i], ts[j]))
        throw CliqueError("fun: trace entries " + std::to_string(i) + " and " + std::to_string(j) +
                          " give incoherent tokens " + ctx.to_text(ts[i]) + " and " + ctx.to_text(ts[j]));
  return finite(ctx, std::move(ts));
}

PorReport por_obstruction(Eval& ev, std::size_t max_tokens) {
  PorReport rep;
  Context& ctx = ev.ctx;
  const Term t = top(ctx), b = bot();
  const Stack empty = Stack::seq({});
  auto is_top = [&](const Term& x) { return evaluate(ev, x, empty).verdict == Verdict3::Top; };
  for (const TokenSet& f : cliques(ctx, ctx.enumerate(ev.u), max_tokens)) {
    ++rep.scanned;
    Term ft = finite(ctx, f);
    if (!is_top(apply(ev, apply(ev, ft, t), b)) || !is_top(apply(ev, apply(ev, ft, b), t))) continue;
    ++rep.premise;
    bool bb = is_top(apply(ev, apply(ev, ft, b), b));
    if (!bb || is_prooflike(ev, ft).status == ProoflikeResult::Yes) rep.counterexamples.push_back(ft);
  }
  return rep;
}

std::vector<std::pair<std::string, SyntaxPtr>> lambda_fixtures() {
  auto x = var("x"), y = var("y"), f = var("f"), p = var("p");
  return {
      {"I", lam("x", x)},
      {"K", lam("x", lam("y", x))},
      {"KI", lam("x", lam("y", y))},
      {"eta", lam("x", lam("p", app(p, x)))},
      {"apply", lam("f", lam("x", app(f, x)))},
      {"twice", lam("f", lam("x", app(f, app(f, x))))},
      {"self", lam("x", app(x, x))},
      {"II", app(lam("x", x), lam("y", y))},
      {"K-I", app(lam("x", lam("y", x)), lam("y", y))},
  };
}

}  // namespace coh

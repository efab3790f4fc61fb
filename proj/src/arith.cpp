#include "cohrealiz/arith.hpp"

#include <cctype>
#include <map>
#include <set>

#include "cohrealiz/stable.hpp"

namespace coh {

namespace {

using ExprPtr = std::shared_ptr<const Expr>;
using Assignment = std::map<std::string, std::uint64_t>;

class SentenceParser {
 public:
  explicit SentenceParser(const std::string& s) : src_(s) {}

  Sentence sentence() {
    Sentence out;
    out.text = src_;
    std::set<std::string> bound;
    for (;;) {
      skip();
      std::size_t save = pos_;
      std::string w = word();
      if (w != "forall" && w != "exists") {
        pos_ = save;
        break;
      }
      Quantifier q;
      q.universal = w == "forall";
      skip();
      q.var = word();
      if (q.var.empty()) fail("expected a variable");
      if (!bound.insert(q.var).second) fail("variable " + q.var + " bound twice");
      expect("<=");
      q.bound = static_cast<std::uint32_t>(number());
      expect(".");
      out.prefix.push_back(q);
    }
    out.lhs = sum(bound);
    expect("=");
    out.rhs = sum(bound);
    skip();
    if (pos_ != src_.size()) fail("trailing input");
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ArithParseError(msg + " at offset " + std::to_string(pos_));
  }
  void skip() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < src_.size() && src_[pos_] == c;
  }
  void expect(const std::string& s) {
    skip();
    if (src_.compare(pos_, s.size(), s) != 0) fail("expected '" + s + "'");
    pos_ += s.size();
  }
  std::string word() {
    std::size_t b = pos_;
    while (pos_ < src_.size() && (std::isalpha(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) ++pos_;
    return src_.substr(b, pos_ - b);
  }
  std::uint64_t number() {
    skip();
    std::size_t b = pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    if (b == pos_) fail("expected a number");
    if (pos_ - b > 9) fail("number too large");
    return std::stoull(src_.substr(b, pos_ - b));
  }

  ExprPtr sum(const std::set<std::string>& vars) {
    ExprPtr e = product(vars);
    while (peek('+')) {
      ++pos_;
      e = std::make_shared<Expr>(Expr{Expr::Kind::Add, {}, 0, e, product(vars)});
    }
    return e;
  }
  ExprPtr product(const std::set<std::string>& vars) {
    ExprPtr e = atom(vars);
    while (peek('*')) {
      ++pos_;
      e = std::make_shared<Expr>(Expr{Expr::Kind::Mul, {}, 0, e, atom(vars)});
    }
    return e;
  }
  ExprPtr atom(const std::set<std::string>& vars) {
    if (peek('(')) {
      ++pos_;
      ExprPtr e = sum(vars);
      expect(")");
      return e;
    }
    skip();
    if (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
      return std::make_shared<Expr>(Expr{Expr::Kind::Const, {}, number(), nullptr, nullptr});
    std::string w = word();
    if (w.empty()) fail("expected a term");
    if (!vars.count(w)) fail("unbound variable " + w);
    return std::make_shared<Expr>(Expr{Expr::Kind::Var, w, 0, nullptr, nullptr});
  }

  const std::string& src_;
  std::size_t pos_ = 0;
};

std::uint64_t value(const Expr& e, const Assignment& env) {
  switch (e.kind) {
    case Expr::Kind::Var: return env.at(e.name);
    case Expr::Kind::Const: return e.value;
    case Expr::Kind::Add: return value(*e.l, env) + value(*e.r, env);
    case Expr::Kind::Mul: return value(*e.l, env) * value(*e.r, env);
  }
  return 0;
}

std::uint32_t small(std::uint64_t v) {
  if (v > 1000) throw ArithParseError("term value " + std::to_string(v) + " exceeds the numeral range");
  return static_cast<std::uint32_t>(v);
}

bool holds(const Sentence& s, std::size_t i, Assignment& env) {
  if (i == s.prefix.size()) return value(*s.lhs, env) == value(*s.rhs, env);
  const Quantifier& q = s.prefix[i];
  for (std::uint32_t n = 0; n <= q.bound; ++n) {
    env[q.var] = n;
    bool h = holds(s, i + 1, env);
    if (q.universal && !h) return false;
    if (!q.universal && h) return true;
  }
  return q.universal;
}

// basis cap inside existential encodings, where bases multiply
constexpr std::size_t kBasisCap = 256;

// the test family standing in for the second order quantifier over X
std::vector<Prop> test_family(Context& ctx) {
  return {bot_prop(), eq_pred(ctx, EqKind::NK, 0, 0), eq_pred(ctx, EqKind::NK, 1, 1)};
}

Prop prop_at(Eval& ev, const Sentence& s, std::size_t i, Assignment& env) {
  Context& ctx = ev.ctx;
  if (i == s.prefix.size()) return eq_pred(ctx, EqKind::NK, small(value(*s.lhs, env)), small(value(*s.rhs, env)));
  const Quantifier& q = s.prefix[i];
  std::vector<Prop> body;
  for (std::uint32_t n = 0; n <= q.bound; ++n) {
    env[q.var] = n;
    body.push_back(prop_at(ev, s, i + 1, env));
  }
  std::string label = (q.universal ? "forall " : "exists ") + q.var;
  if (q.universal) {
    std::vector<Prop> parts;
    for (std::uint32_t n = 0; n <= q.bound; ++n) parts.push_back(implies(ev, eq_pred(ctx, EqKind::NK, n, n), body[n]));
    return forall(parts, label);
  }
  std::vector<Prop> parts;
  for (const Prop& x : test_family(ctx)) {
    std::vector<Prop> fx;
    for (std::uint32_t n = 0; n <= q.bound; ++n)
      fx.push_back(implies(ev, eq_pred(ctx, EqKind::NK, n, n), implies(ev, body[n], x, kBasisCap), kBasisCap));
    parts.push_back(implies(ev, forall(fx), x, kBasisCap));
  }
  return forall(parts, label);
}

Term realizer_at(Eval& ev, const Sentence& s, std::size_t i, Assignment& env) {
  if (i == s.prefix.size()) return numeral(ev.ctx, small(value(*s.lhs, env)));
  const Quantifier& q = s.prefix[i];
  if (q.universal) {
    std::vector<Term> branches;
    for (std::uint32_t n = 0; n <= q.bound; ++n) {
      env[q.var] = n;
      branches.push_back(realizer_at(ev, s, i + 1, env));
    }
    return forall_term(std::move(branches));
  }
  for (std::uint32_t n = 0; n <= q.bound; ++n) {
    env[q.var] = n;
    if (!holds(s, i + 1, env)) continue;
    Term p = realizer_at(ev, s, i + 1, env);
    return interpret(ev, lam("f", app(var("f"), num(n), lit(p))));
  }
  throw FalseSentence("no witness for " + q.var);
}

}  // namespace

Sentence parse_sentence(const std::string& text) { return SentenceParser(text).sentence(); }

bool truth(const Sentence& s) {
  Assignment env;
  return holds(s, 0, env);
}

Prop sentence_prop(Eval& ev, const Sentence& s) {
  Assignment env;
  Prop p = prop_at(ev, s, 0, env);
  p.label = s.text;
  return p;
}

ArithResult arith_realize(Eval& ev, const Sentence& s) {
  if (!truth(s)) throw FalseSentence("false sentence: " + s.text);
  Assignment env;
  ArithResult r{realizer_at(ev, s, 0, env), {}, {}};
  r.verdict = check_realizer(ev, r.realizer, sentence_prop(ev, s));
  r.prooflike = is_prooflike(ev, r.realizer);
  return r;
}

const std::vector<ArithFixture>& arith_fixtures() {
  static const std::vector<ArithFixture> f = {
      {"0 = 0", true},
      {"2*3 = 6", true},
      {"forall x<=2. x+0 = x", true},
      {"exists x<=2. x = 1", true},
      {"forall x<=3. x*1 = x", true},
      {"exists x<=3. x*x = 4", true},
      {"forall x<=3. forall y<=3. x+y = y+x", true},
      {"forall x<=3. exists y<=3. x*y = 0", true},
      {"exists x<=3. exists y<=3. x+y = 5", true},
      {"forall x<=2. exists y<=3. y = x+1", true},
      {"exists x<=3. forall y<=3. x*y = 0", true},
      {"forall x<=3. forall y<=2. (x+y)*2 = 2*x+2*y", true},
      {"1 = 0", false},
      {"forall x<=3. x+1 = 2", false},
      {"exists x<=3. x*x = 2", false},
      {"forall x<=2. exists y<=2. y = x+1", false},
  };
  return f;
}

}  // namespace coh

// Stable maps as traces, lambda abstraction and a small term language.

#ifndef COHREALIZ_STABLE_HPP
#define COHREALIZ_STABLE_HPP

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "cohrealiz/term.hpp"

namespace coh {

struct Syntax;
using SyntaxPtr = std::shared_ptr<const Syntax>;

struct StackSyntax {
  std::vector<SyntaxPtr> items;
  Tail tail = Tail::Empty;
};

struct Syntax {
  enum class Kind { Var, Lam, App, Cc, Num, BarI, Top, Bot, Id, KOf, Lit };
  Kind kind = Kind::Bot;
  std::string name;                  // Var, Lam
  SyntaxPtr fn, arg;                 // App (fn arg), Lam (fn = body)
  std::uint32_t n = 0;               // Num
  std::vector<std::uint32_t> index;  // BarI
  StackSyntax stack;                 // KOf
  std::optional<Term> lit;           // Lit
};

SyntaxPtr var(std::string x);
SyntaxPtr lam(std::string x, SyntaxPtr body);
SyntaxPtr app(SyntaxPtr f, SyntaxPtr a);
SyntaxPtr app(SyntaxPtr f, SyntaxPtr a, SyntaxPtr b);
SyntaxPtr constant(Syntax::Kind k);
SyntaxPtr num(std::uint32_t n);
SyntaxPtr lit(Term t);

std::string to_text(const Syntax& e);
bool is_closed(const Syntax& e);
/// no k, top, bot or literal constants anywhere
bool is_pure_lambda(const Syntax& e);

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, std::size_t pos)
      : std::runtime_error(msg + " at offset " + std::to_string(pos)), pos_(pos) {}
  std::size_t pos() const { return pos_; }

 private:
  std::size_t pos_;
};

/// Parses the textual syntax: (lam x b), (app f a ...), cc, (num n),
/// (barI i ...), top, bot, id, (k <stack>), (lit <json-term>).
SyntaxPtr parse_term(Context& ctx, const std::string& src);
/// (stack e1 ... en [top])
StackSyntax parse_stack(Context& ctx, const std::string& src);

using Env = std::map<std::string, Term>;

class UnboundVariable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Term interpret(Eval& ev, const SyntaxPtr& e, const Env& env = {});
Stack interpret_stack(Eval& ev, const StackSyntax& s, const Env& env = {});

// --- traces -------------------------------------------------------------------

struct TraceEntry {
  TokenSet argument;
  Token value;
};

using StableMap = std::function<Term(const Term&)>;

struct Trace {
  std::vector<TraceEntry> entries;
  // entries whose minimality could not be settled within fuel
  std::vector<TraceEntry> withheld;
};

/// Minimal pairs (a, alpha) with alpha in f(a), a ranging over the cliques
/// of W(u) with at most u.width tokens.
Trace trace_of(Eval& ev, const StableMap& f);
/// {a.alpha | (a, alpha) in entries}; throws CliqueError naming the
/// offending pair when two entries are not coherent.
Term fun(Context& ctx, const std::vector<TraceEntry>& entries);

struct PorReport {
  std::size_t scanned = 0;
  std::size_t premise = 0;  // terms with f top bot = top = f bot top
  std::vector<Term> counterexamples;
};

/// Scans the finite cliques f of W(u) with at most max_tokens tokens.
PorReport por_obstruction(Eval& ev, std::size_t max_tokens = 64);

/// Closed pure lambda terms used as proof-likeness fixtures.
std::vector<std::pair<std::string, SyntaxPtr>> lambda_fixtures();

}  // namespace coh

#endif  // COHREALIZ_STABLE_HPP

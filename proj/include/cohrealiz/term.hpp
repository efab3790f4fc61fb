// Cliques of D (terms), downward closed ideals (stacks) and the pole.

#ifndef COHREALIZ_TERM_HPP
#define COHREALIZ_TERM_HPP

#include <map>
#include <memory>
#include <mutex>
#include <tuple>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cohrealiz/token.hpp"

namespace coh {

/// Finite set of tokens, sorted by handle and duplicate free.
using TokenSet = std::vector<Token>;

TokenSet make_set(std::vector<Token> ts);
bool set_contains(const TokenSet& s, Token t);
/// all subsets of s (s is small), smallest first
std::vector<TokenSet> subsets(const TokenSet& s);

class Stack;
class TermImpl;

/// Evaluation environment: the interning context, the universe bounding
/// lazy enumerations and the fuel for semidecidable searches.
struct Eval {
  Context& ctx;
  Universe u;
  Fuel fuel;

  Eval(Context& c, Universe uu) : ctx(c), u(uu), fuel(uu.fuel) {}
};

struct Meet {
  Tri verdict = Tri::No;
  std::optional<Token> witness;
};

class CliqueError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An element of D: a clique of web tokens. Finite terms carry their
/// tokens; lazy terms decide membership structurally and enumerate their
/// tokens over a Universe.
class Term {
 public:
  Term();  // bot_D
  explicit Term(std::shared_ptr<const TermImpl> impl) : impl_(std::move(impl)) {}

  const TermImpl& impl() const { return *impl_; }
  std::shared_ptr<const TermImpl> ptr() const { return impl_; }

  bool is_finite() const;
  /// tokens of a finite term; throws on lazy terms
  const TokenSet& tokens() const;
  std::string name() const;

  Tri contains(Eval& ev, Token t) const;
  /// Does the term meet the ideal? The witness, when present, is a token
  /// of the term lying in the ideal.
  Meet meets(Eval& ev, const Stack& s) const;
  /// Tokens produced over ev.u in canonical order (memoized per universe).
  const std::vector<Token>& generate(Eval& ev) const;

 private:
  std::shared_ptr<const TermImpl> impl_;
};

enum class Tail { Empty, Top };

/// An element of Pi_D. Sequence form lists s_0..s_{m-1} and fills the rest
/// with bot_D (Empty) or top_D (Top); ideal form is the least ideal
/// containing a finite set of pairwise compatible generators, i.e. the
/// principal ideal below their union.
class Stack {
 public:
  static Stack seq(std::vector<Term> items, Tail tail = Tail::Empty);
  static Stack ideal(Context& ctx, std::vector<Token> generators);
  Stack() : Stack(seq({})) {}

  bool is_seq() const { return std::holds_alternative<Seq>(rep_); }
  const std::vector<Term>& items() const;
  Tail tail() const;
  const std::vector<Token>& generators() const;
  Token ideal_top() const;

  /// s_n
  Term component(Context& ctx, std::size_t n) const;
  /// the stack without its head component
  Stack pop(Context& ctx) const;
  /// number of explicitly listed components (sequence form) or
  /// max index + 1 of the generator union (ideal form)
  std::size_t prefix(Context& ctx) const;

  /// g with ideal = {alpha | alpha subset of g}, when the ideal is finite
  std::optional<Token> principal(Context& ctx) const;
  Tri contains(Eval& ev, Token t) const;
  /// equivalent sequence form s_n = U_{alpha in I} alpha_n
  Stack to_seq(Context& ctx) const;

  std::string describe(Context& ctx) const;

 private:
  struct Seq {
    std::vector<Term> items;
    Tail tail = Tail::Empty;
  };
  struct Ideal {
    std::vector<Token> generators;
    Token top;
  };
  explicit Stack(std::variant<Seq, Ideal> r) : rep_(std::move(r)) {}
  std::variant<Seq, Ideal> rep_;
};

struct Process {
  Term term;
  Stack stack;
};

enum class Verdict3 { Top, Bot, Inconclusive };
const char* to_string(Verdict3 v);

struct EvalResult {
  Verdict3 verdict = Verdict3::Bot;
  std::optional<Token> firing;
};

class TermImpl {
 public:
  virtual ~TermImpl() = default;
  virtual std::string name() const = 0;
  virtual const TokenSet* finite_tokens() const { return nullptr; }
  virtual Tri contains(Eval& ev, Token t) const = 0;
  virtual Meet meets(Eval& ev, const Stack& s) const;
  /// Finite list of heads a with a.tail in the term, if computable.
  virtual std::optional<std::vector<TokenSet>> heads(Eval& ev, Token tail) const;
  /// Direct application for terms that know their function (closures).
  virtual std::optional<Term> apply_to(Eval&, const Term&) const { return std::nullopt; }
  const std::vector<Token>& generate(Eval& ev) const;

 protected:
  virtual void produce(Eval& ev, std::vector<Token>& out) const = 0;

 private:
  // keyed by context serial and universe; terms such as cc() are shared
  // between contexts and threads
  mutable std::mutex mu_;
  mutable std::map<std::tuple<std::uint64_t, std::uint32_t, std::uint32_t>, std::vector<Token>> generated_;
};

// --- operations -----------------------------------------------------------

bool is_clique(Context& ctx, const TokenSet& ts);
/// Finite term; throws CliqueError when ts is not a clique of web tokens.
Term finite(Context& ctx, std::vector<Token> ts, std::string name = {});

Term bot();
Term top(Context& ctx);
Term numeral(Context& ctx, std::uint32_t n);
Term bar_I(Context& ctx, const std::vector<std::uint32_t>& indices);
Term identity();
Term cc();
Term k_of(const Stack& s);

Stack push(Context& ctx, const Term& t, const Stack& s);
/// ts = { alpha | exists finite a subset of s with a.alpha in t }
Term apply(Eval& ev, const Term& t, const Term& s);
EvalResult evaluate(Eval& ev, const Process& p);
inline EvalResult evaluate(Eval& ev, const Term& t, const Stack& s) { return evaluate(ev, Process{t, s}); }

struct ProoflikeResult {
  enum Status { Yes, No, InconclusiveLazy } status = Yes;
  bool bounded = false;  // Yes only established up to the universe bound
  std::optional<Token> witness;
};
ProoflikeResult is_prooflike(Eval& ev, const Term& t);

/// greatest proof-like term below t
Term r_P(Eval& ev, const Term& t);
/// level filter standing in for the retraction h_n
Term h(Eval& ev, std::uint32_t n, const Term& t);

/// finite cliques of W(u) with at most max_size tokens, canonical order
std::vector<TokenSet> cliques(Context& ctx, const std::vector<Token>& pool, std::size_t max_size);

/// Stacks with exactly `prefix` listed components drawn from `components`,
/// each with an Empty tail and optionally a Top tail; deterministic order.
std::vector<Stack> stack_family(const std::vector<Term>& components, std::size_t prefix, bool with_top_tail = true);

std::string describe(Context& ctx, const Term& t);

}  // namespace coh

#endif  // COHREALIZ_TERM_HPP

// Hereditarily finite tokens V = P_fin(w x V), the web |D| and its levels.

#ifndef COHREALIZ_TOKEN_HPP
#define COHREALIZ_TOKEN_HPP

#include <cstdint>
#include <deque>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace coh {

/// Handle to an interned token. Only meaningful together with the
/// Context that produced it; equal handles denote equal tokens.
struct Token {
  std::uint32_t id = 0;

  friend bool operator==(Token a, Token b) { return a.id == b.id; }
  friend bool operator!=(Token a, Token b) { return a.id != b.id; }
  friend bool operator<(Token a, Token b) { return a.id < b.id; }
};

struct Entry {
  std::uint32_t index = 0;
  Token child;

  friend bool operator==(const Entry& a, const Entry& b) {
    return a.index == b.index && a.child == b.child;
  }
};

/// Three-valued answer of a semidecision.
enum class Tri : std::uint8_t { No, Yes, Unknown };

inline Tri tri(bool b) { return b ? Tri::Yes : Tri::No; }
const char* to_string(Tri t);

/// Budget for semidecidable searches. Every call to spend() consumes one
/// unit; once exhausted the search reports Tri::Unknown.
class Fuel {
 public:
  explicit Fuel(std::uint64_t budget = 100000) : remaining_(budget) {}
  bool spend(std::uint64_t n = 1) {
    if (remaining_ < n) {
      remaining_ = 0;
      exhausted_ = true;
      return false;
    }
    remaining_ -= n;
    return true;
  }
  bool exhausted() const { return exhausted_; }
  std::uint64_t remaining() const { return remaining_; }

 private:
  std::uint64_t remaining_;
  bool exhausted_ = false;
};

struct WebVerdict {
  bool in_web = true;
  // index n and the two incoherent members of the n-th projection
  std::optional<std::pair<std::uint32_t, std::pair<Token, Token>>> witness;
};

/// Finite truncation W(level, width) of the web.
struct Universe {
  std::uint32_t level = 3;
  std::uint32_t width = 2;
  std::uint64_t fuel = 100000;
};

class TokenError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Interning table plus memo tables for web membership, coherence, level
/// and grade. A Context is confined to one thread; give each thread its own.
/// Tokens are immutable once interned and handles stay valid for the
/// lifetime of the Context.
class Context {
 public:
  Context();
  Context(const Context&) = delete;
  Context& operator=(const Context&) = delete;

  /// Interns an entry set given in any order; duplicates are removed.
  Token make(std::vector<Entry> entries);
  Token empty() const { return empty_; }

  const std::vector<Entry>& entries(Token t) const { return nodes_[t.id].entries; }
  std::size_t size(Token t) const { return entries(t).size(); }

  /// alpha_n = { beta | (n, beta) in alpha }
  std::vector<Token> project(Token t, std::uint32_t n) const;
  std::uint32_t max_index_plus_one(Token t) const;

  /// Entry-set union in canonical form (the result need not be in the web).
  Token unite(Token a, Token b);
  Token unite(const std::vector<Token>& ts);
  /// a is an entry-subset of b
  bool subset(Token a, Token b) const;

  WebVerdict in_web(Token t);
  bool web(Token t);
  /// beta coh gamma  iff  beta u gamma in |D|  implies  beta = gamma.
  /// Both arguments must be web tokens.
  bool coherent(Token a, Token b);
  /// strict incoherence: distinct tokens whose union is a token
  bool incoherent_strict(Token a, Token b) { return a != b && !coherent(a, b); }

  /// least n with t in |D_n|; level(empty) = 1
  std::uint32_t level(Token t);
  /// |t| = 1 iff some child has grade 0
  int grade(Token t);

  /// Structural total order: level, entry count, then entries
  /// lexicographically by (index, child order).
  int compare(Token a, Token b);
  void sort_canonical(std::vector<Token>& ts);

  /// JSON-style text: sorted array of [index, token] pairs.
  std::string to_text(Token t) const;

  /// a.alpha = ({0} x a) u {(n+1, beta) | (n, beta) in alpha}; a must be a
  /// clique and alpha a web token.
  Token cons(const std::vector<Token>& head, Token tail);
  /// inverse of cons: the head a = alpha_0 and the tail with indices shifted down
  std::vector<Token> head(Token t) const { return project(t, 0); }
  Token tail(Token t);

  /// nu_n = {(n, empty)}
  Token nu(std::uint32_t n);
  /// alpha-hat = {(0, alpha)}
  Token hat(Token a);

  /// All web tokens of W(level, width), sorted canonically. Memoized.
  const std::vector<Token>& enumerate(std::uint32_t level, std::uint32_t width);
  const std::vector<Token>& enumerate(const Universe& u) { return enumerate(u.level, u.width); }

  /// Every entry-subset of t (including empty and t itself).
  std::vector<Token> subtokens(Token t);
  /// entry-subsets of t with at most max_entries entries
  std::vector<Token> subtokens(Token t, std::size_t max_entries);

  std::size_t interned() const { return nodes_.size(); }
  /// distinct for every Context created in the process; keys caches that
  /// outlive a single Context
  std::uint64_t serial() const { return serial_; }

 private:
  struct Node {
    std::vector<Entry> entries;
    std::int8_t web = -1;
    std::int8_t grade = -1;
    std::uint32_t level = 0;
    std::uint32_t depth = 0;
  };
  struct KeyHash {
    std::size_t operator()(const std::vector<Entry>& es) const noexcept;
  };
  struct PairHash {
    std::size_t operator()(std::uint64_t k) const noexcept { return std::hash<std::uint64_t>{}(k); }
  };

  void canonicalize(std::vector<Entry>& es);
  void require_web(Token t, const char* op);

  std::deque<Node> nodes_;
  std::unordered_map<std::vector<Entry>, std::uint32_t, KeyHash> index_;
  std::unordered_map<std::uint64_t, bool, PairHash> coh_memo_;
  std::unordered_map<std::uint64_t, std::vector<Token>> universe_memo_;
  Token empty_;
  std::uint64_t serial_;
};

}  // namespace coh

#endif  // COHREALIZ_TOKEN_HPP

// Modified bar recursion BR(Y,G) as a least fixpoint, and the double
// negation shift harness built on it.

#ifndef COHREALIZ_BARREC_HPP
#define COHREALIZ_BARREC_HPP

#include <map>
#include <optional>
#include <random>
#include <vector>

#include "cohrealiz/json_io.hpp"
#include "cohrealiz/prop.hpp"

namespace coh {

/// A finite list of finite terms.
using SeqD = std::vector<TokenSet>;

/// Y : D^omega -> Sigma given by a finite term y, Y(a) = y * a. Its
/// modulus is the number of components y can inspect.
struct YFun {
  Term table;
  std::size_t modulus = 0;

  bool operator()(Eval& ev, const std::vector<Term>& alpha) const;
};
YFun make_y(Context& ctx, Term table, std::optional<std::size_t> declared = std::nullopt);

/// G_n : (D -> Sigma) -> Sigma. G_n(f) = top iff for some row, f is top on
/// every probe the row lists. It only looks at f on its probes.
struct GFun {
  std::vector<Term> probes;
  std::vector<std::vector<std::size_t>> rows;

  bool operator()(const std::function<bool(const Term&)>& f) const;
};

struct BRInstance {
  std::size_t n = 0;  // N, the length of the family B
  std::vector<Prop> b;
  YFun y;
  std::vector<GFun> g;  // G_k for k >= g.size() is G_{g.size()-1}; empty means never top
  const GFun* g_at(std::size_t k) const;
};

struct BRResult {
  enum Kind { Top, Bot, Inconclusive } kind = Bot;
  std::size_t stage = 0;
  std::map<SeqD, bool> table;  // Psi at the final stage on every queried sequence
  bool monotone = true;        // Psi_k(s) = top implied Psi_{k+1}(s) = top wherever both were computed
};
const char* to_string(BRResult::Kind k);

/// Kleene iteration of Psi(s) = Y(s * lambda n. G_|s|(lambda x. Psi(s*x)))
/// from Psi_0 = bot, memoized per stage on the queried sequences. The
/// extension is constant: G's verdict embedded as top_D or bot_D.
BRResult br(Eval& ev, const BRInstance& inst, const SeqD& s);

/// Psi(s) recomputed from the equation using the table for Psi(s*x)
bool br_rhs(Eval& ev, const BRInstance& inst, const SeqD& s, const std::map<SeqD, bool>& table);

struct DnsResult {
  Verdict::Kind kind = Verdict::Realizes;
  std::string failure;  // hypothesis or obligation that failed
  std::optional<BRResult> run;
  Report report;
};
/// Checks the hypotheses on G and Y, runs br at the empty sequence and
/// replays the two bar induction obligations on the queried tree.
DnsResult dns_check(Eval& ev, const BRInstance& inst);

// --- proof-likeness over finite types ---------------------------------------------

inline bool pl_sigma(bool v) { return !v; }
bool pl_d(Eval& ev, const Term& t);
/// PL_{D -> Sigma} checked on the proof-like members of `probes`
bool pl_d_sigma(Eval& ev, const std::function<bool(const Term&)>& f, const std::vector<Term>& probes);
/// PL_{(D -> Sigma) -> Sigma}: g(f) = bot for the largest proof-like f on
/// g's probes
bool pl_g(Eval& ev, const GFun& g);

/// perturbing components beyond the modulus never changes Y
Report modulus_samples(Eval& ev, const YFun& y, std::size_t samples, std::uint64_t seed);
/// br at the empty sequence is bot for proof-like Y and G drawn from the universe
Report br_prooflike(Eval& ev, std::size_t samples, std::uint64_t seed);

// --- instances ------------------------------------------------------------------------

/// N = 2, B(n) = [[n ~ n]], Y the product test on both slots, G_n probing n
BRInstance constructed_instance(Context& ctx);
/// B(k) = down g_k over small generators, Y the product of their subtokens,
/// G_n probing one basis element
std::vector<BRInstance> generated_instances(Eval& ev, std::size_t count, std::uint64_t seed);

json instance_to_json(Context& ctx, const BRInstance& inst);
BRInstance instance_from_json(Eval& ev, const json& j);

}  // namespace coh

#endif  // COHREALIZ_BARREC_HPP

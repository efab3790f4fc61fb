// Two constructed witnesses: the term showing that Delta_K(2) has no atoms,
// and the proof-like element of a countably generated biorthogonal.

#ifndef COHREALIZ_WITNESS_HPP
#define COHREALIZ_WITNESS_HPP

#include <optional>
#include <vector>

#include "cohrealiz/prop.hpp"

namespace coh {

/// t with t top_D = top_D and t I = 0 for nonempty I of {0,1}
Term infinity_term(Context& ctx);

/// |a, b -> c| over the constants top and bot
Prop boolean_arrow(Eval& ev, bool a, bool b, bool c);

struct InfinityReport {
  Term t;
  Report report;
};
/// Equations, proof-likeness and both conditions, scanning every clique of W(u).
InfinityReport infinity_witness(Eval& ev);

struct TreeNode {
  std::size_t depth = 0;
  Token token;
  std::optional<std::size_t> parent;
  bool leaves_p = false;  // the principal stack below token is not in P^omega
};

struct CountableResult {
  Verdict verdict;
  std::optional<Term> witness;
  std::vector<Term> normalized;  // t_0, t_0 meet t_1, ...
  std::vector<TreeNode> tree;
};

/// stable meet: the minimal unions of a token of a with a token of b
Term stable_meet(Context& ctx, const Term& a, const Term& b);

/// Builds the tree over the normalized chain and the witness from its
/// frontier. Refuted carries a proof-like stack of A^perp when the premise
/// fails; an empty chain is rejected with std::invalid_argument.
CountableResult countable_witness(Eval& ev, const std::vector<Term>& chain);

/// the fixture chains: one satisfying the premise with a frontier at two
/// depths, one with the frontier at depth 2, and t_0 = top_D alone
std::vector<std::vector<Term>> countable_fixtures(Context& ctx);

Report countable_suite(Eval& ev);

}  // namespace coh

#endif  // COHREALIZ_WITNESS_HPP

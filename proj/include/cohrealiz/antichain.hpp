// Antichains of D ordered a la Smyth, their meets, and the minimal
// elements of an orthogonal.

#ifndef COHREALIZ_ANTICHAIN_HPP
#define COHREALIZ_ANTICHAIN_HPP

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "cohrealiz/report.hpp"
#include "cohrealiz/term.hpp"

namespace coh {

/// An up-closed set of finite cliques presented by its minimal elements.
/// Elements are kept sorted, so equal antichains have equal
/// representations.
struct Antichain {
  std::vector<TokenSet> min_elems;

  friend bool operator==(const Antichain& a, const Antichain& b) { return a.min_elems == b.min_elems; }
};

/// x u y is again a clique
bool compatible(Context& ctx, const TokenSet& x, const TokenSet& y);
bool below(const TokenSet& x, const TokenSet& y);

/// Minimizes the given cliques; throws CliqueError when two distinct
/// minimal elements are compatible.
Antichain make_antichain(Context& ctx, std::vector<TokenSet> elems);
bool in_up(const Antichain& a, const TokenSet& point);

/// Intersection of the up-sets, with recomputed minimal elements. The
/// empty family gives the whole space, up{{}}.
Antichain antichain_meet(Context& ctx, const Antichain& a, const Antichain& b);
Antichain antichain_meet(Context& ctx, const std::vector<Antichain>& family);

struct Conditions {
  bool upward = true;      // every point of the set is above a minimal element
  bool incoherent = true;  // compatible minimal elements are equal
  bool minimal = true;     // minimal elements are pairwise incomparable
  bool ok() const { return upward && incoherent && minimal; }
};
/// Checks the conditions against the given points, where `member` is the
/// pointwise oracle for the set.
Conditions check_conditions(Context& ctx, const Antichain& a, const std::vector<TokenSet>& points,
                            const std::function<bool(const TokenSet&)>& member);

/// Random antichain over the given points: greedy incoherent pick.
Antichain random_antichain(Context& ctx, const std::vector<TokenSet>& points, std::mt19937_64& rng, std::size_t max_size);

/// m(t): the tokens of t lying in some stack of C. For t in C^perp this is
/// the least element of C^perp below t.
Term minimize_orthogonal(Eval& ev, const Term& t, const std::vector<Stack>& c);

/// meets of `families` random families, checked pointwise
Report antichain_suite(Eval& ev, std::size_t families, std::uint64_t seed);

}  // namespace coh

#endif  // COHREALIZ_ANTICHAIN_HPP

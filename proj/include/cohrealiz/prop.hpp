// Propositions of the realizability triposes over (D, P).

#ifndef COHREALIZ_PROP_HPP
#define COHREALIZ_PROP_HPP

#include <optional>
#include <string>
#include <vector>

#include "cohrealiz/json_io.hpp"
#include "cohrealiz/report.hpp"
#include "cohrealiz/term.hpp"

namespace coh {

/// A predicate on D. The usual form is falsity-first: |A| = falsity^perp,
/// where every falsity stack is a finite (principal) ideal, so membership of
/// any term is decidable. A Prop may instead carry an explicit basis, in
/// which case |A| is the up-closure of the basis; this covers predicates
/// that are not biorthogonally closed (the empty set, {n}, eq_E), which only
/// ever occur as antecedents.
struct Prop {
  std::vector<Stack> falsity;
  std::optional<std::vector<Term>> basis;
  std::string label;
  bool truncated = false;  // some test basis hit the cap while building this

  bool closed() const { return !basis.has_value(); }
};

Prop top_prop();
/// |bot| = |U| = {top_D}: the single falsity ideal {empty}
Prop bot_prop();
Prop u_prop();
/// falsity ideals below each generator
Prop falsity_prop(Context& ctx, const std::vector<Token>& generators, std::string label = {});
Prop truth_prop(std::vector<Term> basis, std::string label = {});

Tri member(Eval& ev, const Term& t, const Prop& a);

struct Basis {
  std::vector<Term> elems;  // the minimal members of |A|, canonical order
  bool truncated = false;
};

/// Minimal members of |A|. For a falsity prop these are the irredundant
/// cliques choosing one token below each falsity generator.
Basis test_basis(Eval& ev, const Prop& a, std::size_t cap = 50000);

/// A -> B = {s.r | s in |A|, r in ||B||}^perp; B must be closed. The
/// basis of |A| is capped at `cap` elements (the result is then truncated).
Prop implies(Eval& ev, const Prop& a, const Prop& b, std::size_t cap = 50000);
/// intersection of closed props: union of falsity sets
Prop forall(const std::vector<Prop>& ps, std::string label = {});
/// (A -> U) -> U
Prop j_U(Eval& ev, const Prop& a);

struct Verdict {
  enum Kind { Realizes, Refuted, Inconclusive } kind = Realizes;
  std::optional<Stack> counterexample;
  bool bounded = false;  // Realizes only relative to a truncated basis
};
const char* to_string(Verdict::Kind k);

Verdict check_realizer(Eval& ev, const Term& t, const Prop& a);

// --- bounded orthogonality ------------------------------------------------------

struct BoundedUniverse {
  std::vector<Term> terms;    // finite cliques of W(u) with at most max_tokens tokens
  std::vector<Stack> stacks;  // u.width components over cliques of W(u.level - 1), both tails
};
BoundedUniverse bounded_universe(Eval& ev, std::size_t max_tokens = 3);

/// stacks of the universe on which every term of A fires
std::vector<Stack> orthogonal(Eval& ev, const std::vector<Term>& a, const std::vector<Stack>& stacks);
/// terms of the universe firing on every stack of S
std::vector<Term> orthogonal_terms(Eval& ev, const std::vector<Stack>& s, const std::vector<Term>& terms);
/// A^perp-perp restricted to the universe terms
std::vector<Term> biorth(Eval& ev, const std::vector<Term>& a, const BoundedUniverse& u);
/// minimal stacks under ideal inclusion (sequence stacks with finite items)
std::vector<Stack> minimal_stacks(Eval& ev, const std::vector<Stack>& s);
bool stack_leq(Eval& ev, const Stack& a, const Stack& b);

// --- equality predicates and the realizers built on them --------------------------

enum class EqKind { E, UTripos, NK, TwoK, DeltaK };
const char* to_string(EqKind k);
/// eq_E(i,j) = D or empty; U-tripos and Delta_K: {top_D} u up{0 | i = j};
/// N_K and 2_K: {top_D} u up{n | n = m}. N_E's equality {n | n = m} is
/// ne_pred.
Prop eq_pred(Context& ctx, EqKind kind, std::uint32_t i, std::uint32_t j);
/// [[n ~_{N_E} m]] = {n} if n = m, else empty
Prop ne_pred(Context& ctx, std::uint32_t n, std::uint32_t m);

/// e with e top_D = top_D and e n d = d n:
///   {nu_0} u {nu_n . ((a.alpha) . alpha) | a in {{}, {nu_n}}}
Term e_term();
/// t with t top_D = top_D and t n = p_n: {nu_0} u {{nu_n}.beta | beta in p_n}
Term forall_term(std::vector<Term> branches);

Report check_jU_constants(Eval& ev);
Report check_NK_realizers(Eval& ev, std::uint32_t n_max = 4);
/// eta realizes A -> j_U(A) and cc realizes j_U(A) -> A for each A
Report lemma1_suite(Eval& ev, const std::vector<Prop>& family);
/// deterministic family of falsity props over small generators of W(u)
std::vector<Prop> generated_props(Eval& ev, std::size_t count);
Term eta(Eval& ev);

json prop_to_json(Context& ctx, const Prop& p);
Prop prop_from_json(Eval& ev, const json& j);

}  // namespace coh

#endif  // COHREALIZ_PROP_HPP

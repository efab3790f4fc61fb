#include "cohrealiz/antichain.hpp"

#include <algorithm>

#include "cohrealiz/prop.hpp"

namespace coh {

namespace {

TokenSet unite(const TokenSet& x, const TokenSet& y) {
  TokenSet u;
  std::set_union(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(u));
  return u;
}

}  // namespace

bool below(const TokenSet& x, const TokenSet& y) { return std::includes(y.begin(), y.end(), x.begin(), x.end()); }

bool compatible(Context& ctx, const TokenSet& x, const TokenSet& y) { return is_clique(ctx, unite(x, y)); }

Antichain make_antichain(Context& ctx, std::vector<TokenSet> elems) {
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  Antichain a;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    bool minimal = true;
    for (std::size_t j = 0; j < elems.size() && minimal; ++j)
      if (j != i && below(elems[j], elems[i])) minimal = false;
    if (minimal) a.min_elems.push_back(elems[i]);
  }
  for (std::size_t i = 0; i < a.min_elems.size(); ++i)
    for (std::size_t j = i + 1; j < a.min_elems.size(); ++j)
      if (compatible(ctx, a.min_elems[i], a.min_elems[j]))
        throw CliqueError("antichain: minimal elements " + std::to_string(i) + " and " + std::to_string(j) +
                          " are compatible");
  return a;
}

bool in_up(const Antichain& a, const TokenSet& point) {
  for (const TokenSet& m : a.min_elems)
    if (below(m, point)) return true;
  return false;
}

Antichain antichain_meet(Context& ctx, const Antichain& a, const Antichain& b) {
  std::vector<TokenSet> joins;
  for (const TokenSet& x : a.min_elems)
    for (const TokenSet& y : b.min_elems) {
      TokenSet u = unite(x, y);
      if (is_clique(ctx, u)) joins.push_back(std::move(u));
    }
  return make_antichain(ctx, std::move(joins));
}

Antichain antichain_meet(Context& ctx, const std::vector<Antichain>& family) {
  Antichain acc{{TokenSet{}}};
  for (const Antichain& a : family) acc = antichain_meet(ctx, acc, a);
  return acc;
}

Conditions check_conditions(Context& ctx, const Antichain& a, const std::vector<TokenSet>& points,
                            const std::function<bool(const TokenSet&)>& member) {
  Conditions c;
  for (const TokenSet& p : points)
    if (member(p) && !in_up(a, p)) c.upward = false;
  // the minimal elements must themselves belong to the set
  for (const TokenSet& m : a.min_elems)
    if (!member(m)) c.upward = false;
  for (std::size_t i = 0; i < a.min_elems.size(); ++i)
    for (std::size_t j = i + 1; j < a.min_elems.size(); ++j) {
      if (compatible(ctx, a.min_elems[i], a.min_elems[j])) c.incoherent = false;
      if (below(a.min_elems[i], a.min_elems[j]) || below(a.min_elems[j], a.min_elems[i])) c.minimal = false;
    }
  return c;
}

Antichain random_antichain(Context& ctx, const std::vector<TokenSet>& points, std::mt19937_64& rng,
                           std::size_t max_size) {
  std::uniform_int_distribution<std::size_t> pick(0, points.size() - 1);
  std::uniform_int_distribution<std::size_t> size(1, max_size);
  std::size_t want = size(rng);
  std::vector<TokenSet> chosen;
  for (std::size_t tries = 0; chosen.size() < want && tries < 8 * max_size; ++tries) {
    const TokenSet& p = points[pick(rng)];
    bool ok = true;
    for (const TokenSet& q : chosen)
      if (compatible(ctx, p, q)) {
        ok = false;
        break;
      }
    if (ok) chosen.push_back(p);
  }
  return make_antichain(ctx, std::move(chosen));
}

Term minimize_orthogonal(Eval& ev, const Term& t, const std::vector<Stack>& c) {
  std::vector<Token> keep;
  for (Token a : t.tokens())
    for (const Stack& s : c)
      if (s.contains(ev, a) == Tri::Yes) {
        keep.push_back(a);
        break;
      }
  return finite(ev.ctx, keep, "m(" + t.name() + ")");
}

Report antichain_suite(Eval& ev, std::size_t families, std::uint64_t seed) {
  Context& ctx = ev.ctx;
  Report rep;
  std::vector<TokenSet> points = cliques(ctx, ctx.enumerate(ev.u), 3);
  std::vector<TokenSet> small = cliques(ctx, ctx.enumerate(ev.u), 2);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> fam_size(2, 3);

  std::size_t bad_cond = 0, bad_point = 0, bad_idem = 0, bad_comm = 0, bad_assoc = 0, min_total = 0;
  for (std::size_t f = 0; f < families; ++f) {
    std::vector<Antichain> fam;
    std::size_t k = fam_size(rng);
    for (std::size_t i = 0; i < k; ++i) fam.push_back(random_antichain(ctx, small, rng, 4));
    Antichain m = antichain_meet(ctx, fam);
    min_total += m.min_elems.size();
    auto oracle = [&](const TokenSet& p) {
      for (const Antichain& a : fam)
        if (!in_up(a, p)) return false;
      return true;
    };
    if (!check_conditions(ctx, m, points, oracle).ok()) ++bad_cond;
    for (const TokenSet& p : points)
      if (in_up(m, p) != oracle(p)) {
        ++bad_point;
        break;
      }
    const Antichain &a = fam[0], &b = fam[1];
    if (!(antichain_meet(ctx, a, a) == a)) ++bad_idem;
    if (!(antichain_meet(ctx, a, b) == antichain_meet(ctx, b, a))) ++bad_comm;
    if (k == 3) {
      const Antichain& c = fam[2];
      if (!(antichain_meet(ctx, antichain_meet(ctx, a, b), c) == antichain_meet(ctx, a, antichain_meet(ctx, b, c))))
        ++bad_assoc;
    }
  }
  std::string n = std::to_string(families) + " families over " + std::to_string(points.size()) + " points";
  rep.add("meet satisfies conditions (1) and (2)", bad_cond == 0, n + ", " + std::to_string(min_total) + " minimal elements");
  rep.add("meet is the pointwise intersection", bad_point == 0, std::to_string(bad_point) + " mismatches");
  rep.add("meet is idempotent", bad_idem == 0);
  rep.add("meet is commutative", bad_comm == 0);
  rep.add("meet is associative", bad_assoc == 0);

  // m(t) on the orthogonal of a few stacks
  BoundedUniverse u = bounded_universe(ev, 2);
  // C: up to three stacks keeping C^perp reasonably large
  std::vector<Stack> c;
  for (const Stack& s : u.stacks) {
    if (c.size() == 3) break;
    c.push_back(s);
    if (orthogonal_terms(ev, c, u.terms).size() < 20) c.pop_back();
  }
  std::size_t checked = 0, bad_m = 0;
  for (const Term& t : orthogonal_terms(ev, c, u.terms)) {
    ++checked;
    Term m = minimize_orthogonal(ev, t, c);
    bool in_perp = orthogonal_terms(ev, c, {m}).size() == 1;
    bool idem = minimize_orthogonal(ev, m, c).tokens() == m.tokens();
    if (!in_perp || !idem || !below(m.tokens(), t.tokens())) ++bad_m;
  }
  rep.add("m(t) is in C^perp, below t and idempotent", bad_m == 0, std::to_string(checked) + " terms");
  return rep;
}

}  // namespace coh

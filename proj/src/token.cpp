#include "cohrealiz/token.hpp"

#include <algorithm>
#include <atomic>

namespace coh {

const char* to_string(Tri t) {
  switch (t) {
    case Tri::No: return "no";
    case Tri::Yes: return "yes";
    case Tri::Unknown: return "unknown";
  }
  return "?";
}

std::size_t Context::KeyHash::operator()(const std::vector<Entry>& es) const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ULL ^ es.size();
  for (const auto& e : es) {
    std::uint64_t k = (std::uint64_t(e.index) << 32) | e.child.id;
    h ^= std::hash<std::uint64_t>{}(k) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

Context::Context() {
  static std::atomic<std::uint64_t> next{0};
  serial_ = next++;
  Node n;
  n.level = 1;
  n.depth = 1;
  n.web = 1;
  n.grade = 0;
  nodes_.push_back(n);
  index_.emplace(std::vector<Entry>{}, 0);
  empty_ = Token{0};
}

int Context::compare(Token a, Token b) {
  if (a == b) return 0;
  const Node& na = nodes_[a.id];
  const Node& nb = nodes_[b.id];
  if (na.depth != nb.depth) return na.depth < nb.depth ? -1 : 1;
  if (na.entries.size() != nb.entries.size()) return na.entries.size() < nb.entries.size() ? -1 : 1;
  for (std::size_t i = 0; i < na.entries.size(); ++i) {
    const Entry& x = na.entries[i];
    const Entry& y = nb.entries[i];
    if (x.index != y.index) return x.index < y.index ? -1 : 1;
    int c = compare(x.child, y.child);
    if (c != 0) return c;
  }
  return 0;
}

void Context::sort_canonical(std::vector<Token>& ts) {
  std::sort(ts.begin(), ts.end(), [this](Token a, Token b) { return compare(a, b) < 0; });
}

void Context::canonicalize(std::vector<Entry>& es) {
  std::sort(es.begin(), es.end(), [this](const Entry& x, const Entry& y) {
    if (x.index != y.index) return x.index < y.index;
    return compare(x.child, y.child) < 0;
  });
  es.erase(std::unique(es.begin(), es.end()), es.end());
}

Token Context::make(std::vector<Entry> entries) {
  canonicalize(entries);
  auto it = index_.find(entries);
  if (it != index_.end()) return Token{it->second};
  Node n;
  std::uint32_t d = 0;
  for (const auto& e : entries) d = std::max(d, nodes_[e.child.id].depth);
  n.depth = d + 1;
  n.entries = entries;
  auto id = static_cast<std::uint32_t>(nodes_.size());
  nodes_.push_back(std::move(n));
  index_.emplace(std::move(entries), id);
  return Token{id};
}

std::vector<Token> Context::project(Token t, std::uint32_t n) const {
  std::vector<Token> out;
  for (const auto& e : entries(t))
    if (e.index == n) out.push_back(e.child);
  return out;
}

std::uint32_t Context::max_index_plus_one(Token t) const {
  const auto& es = entries(t);
  return es.empty() ? 0 : es.back().index + 1;
}

Token Context::unite(Token a, Token b) {
  if (a == b) return a;
  std::vector<Entry> es = entries(a);
  const auto& eb = entries(b);
  es.insert(es.end(), eb.begin(), eb.end());
  return make(std::move(es));
}

Token Context::unite(const std::vector<Token>& ts) {
  std::vector<Entry> es;
  for (Token t : ts) {
    const auto& e = entries(t);
    es.insert(es.end(), e.begin(), e.end());
  }
  return make(std::move(es));
}

bool Context::subset(Token a, Token b) const {
  if (a == b) return true;
  const auto& ea = entries(a);
  const auto& eb = entries(b);
  if (ea.size() > eb.size()) return false;
  for (const auto& e : ea)
    if (std::find(eb.begin(), eb.end(), e) == eb.end()) return false;
  return true;
}

WebVerdict Context::in_web(Token t) {
  Node& n = nodes_[t.id];
  if (n.web == 1) return {};
  // children are structurally smaller, so the recursion is well founded
  std::vector<Entry> es = n.entries;
  WebVerdict v;
  for (const auto& e : es) {
    WebVerdict c = in_web(e.child);
    if (!c.in_web) {
      v = c;  // report the innermost failing projection
      break;
    }
  }
  for (std::size_t i = 0; v.in_web && i < es.size(); ++i) {
    for (std::size_t j = i + 1; j < es.size() && es[j].index == es[i].index; ++j) {
      if (!coherent(es[i].child, es[j].child)) {
        v.in_web = false;
        v.witness = {es[i].index, {es[i].child, es[j].child}};
        break;
      }
    }
  }
  nodes_[t.id].web = v.in_web ? 1 : 0;
  if (v.in_web) {
    std::uint32_t lvl = 0;
    for (const auto& e : es) lvl = std::max(lvl, nodes_[e.child.id].level);
    nodes_[t.id].level = lvl + 1;
  }
  return v;
}

bool Context::web(Token t) {
  std::int8_t w = nodes_[t.id].web;
  if (w >= 0) return w == 1;
  return in_web(t).in_web;
}

bool Context::coherent(Token a, Token b) {
  if (a == b) {
    require_web(a, "coherent");
    return true;
  }
  if (a.id > b.id) std::swap(a, b);
  std::uint64_t key = (std::uint64_t(a.id) << 32) | b.id;
  auto it = coh_memo_.find(key);
  if (it != coh_memo_.end()) return it->second;
  require_web(a, "coherent");
  require_web(b, "coherent");
  bool r = !web(unite(a, b));
  coh_memo_.emplace(key, r);
  return r;
}

void Context::require_web(Token t, const char* op) {
  if (!web(t)) throw TokenError(std::string(op) + ": token " + to_text(t) + " is not in the web");
}

std::uint32_t Context::level(Token t) {
  require_web(t, "level");
  return nodes_[t.id].level;
}

int Context::grade(Token t) {
  require_web(t, "grade");
  Node& n = nodes_[t.id];
  if (n.grade >= 0) return n.grade;
  int g = 0;
  std::vector<Entry> es = n.entries;
  for (const auto& e : es) {
    if (grade(e.child) == 0) {
      g = 1;
      break;
    }
  }
  nodes_[t.id].grade = static_cast<std::int8_t>(g);
  return g;
}

std::string Context::to_text(Token t) const {
  std::string s = "[";
  bool first = true;
  for (const auto& e : entries(t)) {
    if (!first) s += ",";
    first = false;
    s += "[" + std::to_string(e.index) + "," + to_text(e.child) + "]";
  }
  return s + "]";
}

Token Context::cons(const std::vector<Token>& head, Token tail) {
  std::vector<Entry> es;
  es.reserve(head.size() + size(tail));
  for (Token a : head) es.push_back({0, a});
  for (const auto& e : entries(tail)) es.push_back({e.index + 1, e.child});
  return make(std::move(es));
}

Token Context::tail(Token t) {
  std::vector<Entry> es;
  for (const auto& e : entries(t))
    if (e.index > 0) es.push_back({e.index - 1, e.child});
  return make(std::move(es));
}

Token Context::nu(std::uint32_t n) { return make({{n, empty_}}); }

Token Context::hat(Token a) { return make({{0, a}}); }

std::vector<Token> Context::subtokens(Token t) {
  const std::vector<Entry> es = entries(t);
  std::vector<Token> out;
  const std::size_t n = es.size();
  if (n > 20) throw TokenError("subtokens: token too large");
  out.reserve(std::size_t(1) << n);
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    std::vector<Entry> sub;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1u << i)) sub.push_back(es[i]);
    out.push_back(make(std::move(sub)));
  }
  return out;
}

std::vector<Token> Context::subtokens(Token t, std::size_t max_entries) {
  const std::vector<Entry> es = entries(t);
  std::vector<Token> out;
  std::vector<Entry> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    out.push_back(make(cur));
    if (cur.size() == max_entries) return;
    for (std::size_t i = from; i < es.size(); ++i) {
      cur.push_back(es[i]);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

const std::vector<Token>& Context::enumerate(std::uint32_t level, std::uint32_t width) {
  std::uint64_t key = (std::uint64_t(level) << 32) | width;
  auto it = universe_memo_.find(key);
  if (it != universe_memo_.end()) return it->second;

  std::vector<Token> out;
  if (level == 1) {
    out.push_back(empty_);
  } else if (level > 1) {
    const std::vector<Token> below = enumerate(level - 1, width);
    std::vector<Entry> cands;
    for (std::uint32_t i = 0; i < width; ++i)
      for (Token b : below) cands.push_back({i, b});
    // subsets of at most `width` candidate entries whose projections are cliques
    std::vector<Entry> cur;
    std::function<void(std::size_t)> rec = [&](std::size_t from) {
      out.push_back(make(cur));
      if (cur.size() == width) return;
      for (std::size_t k = from; k < cands.size(); ++k) {
        bool ok = true;
        for (const auto& e : cur)
          if (e.index == cands[k].index && !coherent(e.child, cands[k].child)) {
            ok = false;
            break;
          }
        if (!ok) continue;
        cur.push_back(cands[k]);
        rec(k + 1);
        cur.pop_back();
      }
    };
    rec(0);
    for (Token t : out) (void)web(t);
    sort_canonical(out);
  }
  return universe_memo_.emplace(key, std::move(out)).first->second;
}

}  // namespace coh

#include "cohrealiz/json_io.hpp"

namespace coh {

json token_to_json(const Context& ctx, Token t) {
  json a = json::array();
  for (const Entry& e : ctx.entries(t)) a.push_back(json::array({e.index, token_to_json(ctx, e.child)}));
  return a;
}

Token token_from_json(Context& ctx, const json& j) {
  if (!j.is_array()) throw FormatError("token: expected an array of [index, token] pairs, got " + j.dump());
  std::vector<Entry> es;
  for (const json& p : j) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_number_unsigned())
      throw FormatError("token: malformed entry " + p.dump());
    es.push_back({p[0].get<std::uint32_t>(), token_from_json(ctx, p[1])});
  }
  return ctx.make(std::move(es));
}

std::string token_text(const Context& ctx, Token t) { return token_to_json(ctx, t).dump(); }

json term_to_json(Context& ctx, const Term& t) {
  if (!t.is_finite()) {
    if (t.name() == "cc" || t.name() == "id") return {{"named", t.name()}};
    throw FormatError("term " + t.name() + " has no JSON encoding");
  }
  std::vector<Token> ts = t.tokens();
  ctx.sort_canonical(ts);
  json a = json::array();
  for (Token b : ts) a.push_back(token_to_json(ctx, b));
  return {{"finite", a}};
}

namespace {

Term named_from_json(Eval& ev, const json& n) {
  if (n.is_string()) {
    const std::string s = n.get<std::string>();
    if (s == "cc") return cc();
    if (s == "id") return identity();
    if (s == "top") return top(ev.ctx);
    if (s == "bot") return bot();
    throw FormatError("unknown named term \"" + s + "\"");
  }
  if (n.is_object() && n.contains("num") && n["num"].is_number_unsigned())
    return numeral(ev.ctx, n["num"].get<std::uint32_t>());
  if (n.is_object() && n.contains("barI") && n["barI"].is_array())
    return bar_I(ev.ctx, n["barI"].get<std::vector<std::uint32_t>>());
  throw FormatError("malformed named term " + n.dump());
}

}  // namespace

Term term_from_json(Eval& ev, const json& j) {
  if (!j.is_object() || j.size() != 1) throw FormatError("term: expected a one-key object, got " + j.dump());
  if (j.contains("finite")) {
    std::vector<Token> ts;
    for (const json& t : j["finite"]) {
      Token b = token_from_json(ev.ctx, t);
      WebVerdict v = ev.ctx.in_web(b);
      if (!v.in_web) throw FormatError("term: token " + t.dump() + " is not in the web");
      ts.push_back(b);
    }
    try {
      return finite(ev.ctx, std::move(ts));
    } catch (const CliqueError& e) {
      throw FormatError(std::string("term: ") + e.what());
    }
  }
  if (j.contains("named")) return named_from_json(ev, j["named"]);
  if (j.contains("apply")) {
    const json& a = j["apply"];
    if (!a.is_array() || a.size() != 2) throw FormatError("apply: expected [term, term]");
    return apply(ev, term_from_json(ev, a[0]), term_from_json(ev, a[1]));
  }
  throw FormatError("term: unknown form " + j.dump());
}

json stack_to_json(Context& ctx, const Stack& s) {
  if (!s.is_seq()) {
    json g = json::array();
    for (Token t : s.generators()) g.push_back(token_to_json(ctx, t));
    return {{"ideal", g}};
  }
  json items = json::array();
  for (const Term& t : s.items()) items.push_back(term_to_json(ctx, t));
  return {{"seq", {{"items", items}, {"tail", s.tail() == Tail::Top ? "top" : "empty"}}}};
}

Stack stack_from_json(Eval& ev, const json& j) {
  if (j.is_object() && j.contains("seq")) {
    const json& s = j["seq"];
    std::vector<Term> items;
    for (const json& t : s.value("items", json::array())) items.push_back(term_from_json(ev, t));
    const std::string tail = s.value("tail", "empty");
    if (tail != "empty" && tail != "top") throw FormatError("stack: tail must be \"empty\" or \"top\"");
    return Stack::seq(std::move(items), tail == "top" ? Tail::Top : Tail::Empty);
  }
  if (j.is_object() && j.contains("ideal")) {
    std::vector<Token> gs;
    for (const json& t : j["ideal"]) gs.push_back(token_from_json(ev.ctx, t));
    try {
      return Stack::ideal(ev.ctx, std::move(gs));
    } catch (const CliqueError& e) {
      throw FormatError(std::string("stack: ") + e.what());
    }
  }
  throw FormatError("stack: unknown form " + j.dump());
}

}  // namespace coh

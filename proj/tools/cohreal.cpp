// cohreal: evaluate processes, enumerate the bounded universe, check
// proof-likeness, realizers and bar recursion instances, and run the
// property suites.
//
// Exit codes: 0 pass, 1 a check failed, 2 usage or parse error,
// 3 only inconclusive results.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <limits>

#include "cohrealiz/arith.hpp"
#include "cohrealiz/barrec.hpp"
#include "cohrealiz/json_io.hpp"
#include "cohrealiz/stable.hpp"
#include "cohrealiz/suites.hpp"

using namespace coh;

namespace {

constexpr int kPass = 0, kFail = 1, kUsage = 2, kInconclusive = 3;

struct Options {
  SuiteConfig cfg;
  std::string format = "text";
  bool json() const { return format == "json"; }
};

void print(const Options& o, const json& j, const std::string& text) {
  if (o.json())
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

json config_json(const Options& o) {
  return {{"level", o.cfg.level}, {"width", o.cfg.width}, {"fuel", o.cfg.fuel}, {"seed", o.cfg.seed}};
}

int report_exit(const Report& r) {
  if (r.failed()) return kFail;
  return r.passed() ? kPass : kInconclusive;
}

void require_level(const Options& o) {
  if (o.cfg.level < 1) throw CLI::ValidationError("--level", "must be at least 1 for this command");
}

int cmd_eval(const Options& o, const std::string& term_src, const std::string& stack_src) {
  require_level(o);
  Context ctx;
  Eval ev(ctx, o.cfg.universe());
  Term t = interpret(ev, parse_term(ctx, term_src));
  Stack s = interpret_stack(ev, parse_stack(ctx, stack_src));
  EvalResult r = evaluate(ev, t, s);
  std::string v = to_string(r.verdict);
  json j{{"term", term_src}, {"stack", stack_src}, {"verdict", v}};
  std::string text = v;
  if (r.firing) {
    j["firing"] = token_to_json(ctx, *r.firing);
    text += " firing " + token_text(ctx, *r.firing);
  }
  if (r.verdict == Verdict3::Inconclusive) text += " (fuel exhausted)";
  print(o, j, text + "\n");
  return r.verdict == Verdict3::Inconclusive ? kInconclusive : kPass;
}

int cmd_suite(const Options& o, const std::string& name) {
  require_level(o);
  Report r = run_suite(name, o.cfg);
  std::size_t pass = 0, fail = 0, inc = 0;
  json checks = json::array();
  std::string text;
  for (const Check& c : r.checks) {
    pass += c.status == Status::Pass;
    fail += c.status == Status::Fail;
    inc += c.status == Status::Inconclusive;
    checks.push_back({{"id", c.id}, {"status", to_string(c.status)}, {"detail", c.detail}});
    text += std::string(to_string(c.status)) + "  " + c.id + (c.detail.empty() ? "" : "  [" + c.detail + "]") + "\n";
  }
  text += name + ": " + std::to_string(pass) + " passed, " + std::to_string(fail) + " failed, " +
          std::to_string(inc) + " inconclusive\n";
  json j{{"suite", name}, {"config", config_json(o)}, {"checks", checks},
         {"passed", pass}, {"failed", fail}, {"inconclusive", inc}};
  print(o, j, text);
  return report_exit(r);
}

int cmd_enumerate(const Options& o, const std::string& kind, std::size_t max_tokens) {
  Context ctx;
  Eval ev(ctx, o.cfg.universe());
  const std::vector<Token>& w = ctx.enumerate(o.cfg.level, o.cfg.width);
  json items = json::array();
  std::string text;
  if (kind == "tokens") {
    for (Token t : w) {
      items.push_back(token_to_json(ctx, t));
      text += token_text(ctx, t) + "\n";
    }
  } else {
    for (const TokenSet& c : cliques(ctx, w, max_tokens)) {
      Term t = finite(ctx, c);
      if (kind == "prooflike" && is_prooflike(ev, t).status != ProoflikeResult::Yes) continue;
      json tj = term_to_json(ctx, t);
      items.push_back(tj);
      text += tj.dump() + "\n";
    }
  }
  text += "count " + std::to_string(items.size()) + "\n";
  json j{{"kind", kind}, {"level", o.cfg.level}, {"width", o.cfg.width}, {"count", items.size()}, {"items", items}};
  if (kind != "tokens") j["max_tokens"] = max_tokens;
  print(o, j, text);
  return kPass;
}

int cmd_prooflike(const Options& o, const std::string& term_src) {
  require_level(o);
  Context ctx;
  Eval ev(ctx, o.cfg.universe());
  ProoflikeResult r = is_prooflike(ev, interpret(ev, parse_term(ctx, term_src)));
  const char* v = r.status == ProoflikeResult::Yes ? "yes" : r.status == ProoflikeResult::No ? "no" : "inconclusive";
  json j{{"term", term_src}, {"prooflike", v}, {"bounded", r.bounded}};
  std::string text = std::string(v) + (r.bounded ? " (bounded)" : "");
  if (r.witness) {
    j["witness"] = token_to_json(ctx, *r.witness);
    text += " grade 0 token " + token_text(ctx, *r.witness);
  }
  print(o, j, text + "\n");
  if (r.status == ProoflikeResult::InconclusiveLazy) return kInconclusive;
  return kPass;
}

int cmd_realize(const Options& o, const std::string& sentence) {
  require_level(o);
  Context ctx;
  Eval ev(ctx, o.cfg.universe());
  Sentence s = parse_sentence(sentence);
  if (!truth(s)) {
    print(o, json{{"sentence", sentence}, {"true", false}}, "false sentence, no realizer\n");
    return kFail;
  }
  ArithResult r = arith_realize(ev, s);
  bool pl = r.prooflike.status == ProoflikeResult::Yes;
  json j{{"sentence", sentence}, {"true", true}, {"verdict", to_string(r.verdict.kind)},
         {"bounded", r.verdict.bounded}, {"prooflike", pl}};
  print(o, j, std::string(to_string(r.verdict.kind)) + (r.verdict.bounded ? " (bounded)" : "") +
                  (pl ? ", proof-like\n" : ", not proof-like\n"));
  if (r.verdict.kind == Verdict::Inconclusive) return kInconclusive;
  return r.verdict.kind == Verdict::Realizes && pl ? kPass : kFail;
}

int cmd_br(const Options& o, const std::string& path) {
  require_level(o);
  std::ifstream in(path);
  if (!in) throw FormatError("cannot read " + path);
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw FormatError(e.what());
  }
  Context ctx;
  Eval ev(ctx, o.cfg.universe());
  BRInstance inst = instance_from_json(ev, doc);
  DnsResult d = dns_check(ev, inst);
  json checks = json::array();
  std::string text;
  for (const Check& c : d.report.checks) {
    checks.push_back({{"id", c.id}, {"status", to_string(c.status)}, {"detail", c.detail}});
    text += std::string(to_string(c.status)) + "  " + c.id + (c.detail.empty() ? "" : "  [" + c.detail + "]") + "\n";
  }
  json j{{"verdict", to_string(d.kind)}, {"checks", checks}};
  if (!d.failure.empty()) j["failure"] = d.failure;
  if (d.run) j["br"] = {{"result", to_string(d.run->kind)}, {"stage", d.run->stage}};
  text += std::string("dns_check: ") + to_string(d.kind) + (d.failure.empty() ? "" : " (" + d.failure + ")") + "\n";
  print(o, j, text);
  if (d.kind == Verdict::Inconclusive) return kInconclusive;
  return d.kind == Verdict::Realizes ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coherence-space realizability: evaluation, enumeration and property suites"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--level", o.cfg.level, "universe level")->capture_default_str()->check(CLI::Range(0u, 8u));
  app.add_option("--width", o.cfg.width, "universe width")->capture_default_str()->check(CLI::Range(1u, 8u));
  app.add_option("--fuel", o.cfg.fuel, "fuel per evaluation")->capture_default_str()->check(CLI::PositiveNumber);
  app.add_option("--seed", o.cfg.seed, "seed for sampled properties")->capture_default_str();
  app.add_option("--format", o.format, "output format")->capture_default_str()->check(CLI::IsMember({"text", "json"}));

  std::string term_src, stack_src, name, kind, sentence, path;
  std::size_t max_tokens = 3;
  CLI::App* eval = app.add_subcommand("eval", "evaluate a process t * pi");
  eval->add_option("term", term_src, "term expression")->required();
  eval->add_option("stack", stack_src, "stack expression, (stack e1 ... en [top])")->required();

  CLI::App* suite = app.add_subcommand("suite", "run a property suite");
  suite->add_option("name", name)->required()->check(CLI::IsMember(suite_names()));

  CLI::App* enumerate = app.add_subcommand("enumerate", "list tokens, terms or proof-like terms of the universe");
  enumerate->add_option("kind", kind)->required()->check(CLI::IsMember({"tokens", "terms", "prooflike"}));
  enumerate->add_option("--max-tokens", max_tokens, "largest clique listed")->capture_default_str();

  CLI::App* pl = app.add_subcommand("prooflike", "check whether a term is proof-like");
  pl->add_option("term", term_src)->required();

  CLI::App* realize = app.add_subcommand("realize", "build and check the realizer of a bounded arithmetic sentence");
  realize->add_option("sentence", sentence)->required();

  CLI::App* br = app.add_subcommand("br", "run dns_check on an instance file");
  br->add_option("file", path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (*eval) return cmd_eval(o, term_src, stack_src);
    if (*suite) return cmd_suite(o, name);
    if (*enumerate) return cmd_enumerate(o, kind, max_tokens);
    if (*pl) return cmd_prooflike(o, term_src);
    if (*realize) return cmd_realize(o, sentence);
    if (*br) return cmd_br(o, path);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const ArithParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const FormatError& e) {
    std::cerr << "format error: " << e.what() << "\n";
    return kUsage;
  } catch (const UnboundVariable& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const CliqueError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const TokenError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

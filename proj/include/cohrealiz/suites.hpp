// Property suites shared by the command line tool and the acceptance
// binary. Each function builds its own Context, so suites are independent.

#ifndef COHREALIZ_SUITES_HPP
#define COHREALIZ_SUITES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "cohrealiz/report.hpp"
#include "cohrealiz/token.hpp"

namespace coh {

struct SuiteConfig {
  std::uint32_t level = 3;
  std::uint32_t width = 2;
  std::uint64_t fuel = 100000;  // per evaluation
  std::uint64_t seed = 1;

  Universe universe() const { return {level, width, fuel}; }
};

// token_core
Report web_laws(const SuiteConfig& cfg);
// cliques
Report numeral_semantics(const SuiteConfig& cfg);
Report stack_laws(const SuiteConfig& cfg);
Report control_laws(const SuiteConfig& cfg);
Report prooflike_laws(const SuiteConfig& cfg);
// stable_maps
Report por_suite(const SuiteConfig& cfg);
Report trace_laws(const SuiteConfig& cfg);
// propositions
Report tripos_constants(const SuiteConfig& cfg);
Report lemma1_laws(const SuiteConfig& cfg);
Report equality_lemma(const SuiteConfig& cfg);
Report closure_laws(const SuiteConfig& cfg);
Report arith_suite(const SuiteConfig& cfg);
Report infinity_suite(const SuiteConfig& cfg);
Report antichain_laws(const SuiteConfig& cfg);
Report countable_laws(const SuiteConfig& cfg);
// bar_recursion
Report barrec_suite(const SuiteConfig& cfg);

/// web, cliques, control, props, arith, barrec, all
const std::vector<std::string>& suite_names();
/// throws std::invalid_argument on an unknown name
Report run_suite(const std::string& name, const SuiteConfig& cfg);

}  // namespace coh

#endif  // COHREALIZ_SUITES_HPP

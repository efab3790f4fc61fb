// Check reports shared by the verification suites and the CLI.

#ifndef COHREALIZ_REPORT_HPP
#define COHREALIZ_REPORT_HPP

#include <string>
#include <vector>

namespace coh {

enum class Status { Pass, Fail, Inconclusive };

inline const char* to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Inconclusive: return "inconclusive";
  }
  return "?";
}

struct Check {
  std::string id;
  Status status = Status::Pass;
  std::string detail;
};

struct Report {
  std::vector<Check> checks;

  void add(std::string id, bool ok, std::string detail = {}) {
    checks.push_back({std::move(id), ok ? Status::Pass : Status::Fail, std::move(detail)});
  }
  void add(std::string id, Status s, std::string detail = {}) {
    checks.push_back({std::move(id), s, std::move(detail)});
  }
  void merge(const Report& r, const std::string& prefix = {}) {
    for (const Check& c : r.checks) checks.push_back({prefix + c.id, c.status, c.detail});
  }
  bool passed() const {
    for (const Check& c : checks)
      if (c.status != Status::Pass) return false;
    return true;
  }
  bool failed() const {
    for (const Check& c : checks)
      if (c.status == Status::Fail) return true;
    return false;
  }
};

}  // namespace coh

#endif  // COHREALIZ_REPORT_HPP

#include "symsing/report.hpp"

namespace symsing {

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass:
      return "PASS";
    case Status::Fail:
      return "FAIL";
    case Status::Inconclusive:
      return "INCONCLUSIVE";
    case Status::Skipped:
      return "SKIPPED";
  }
  return "?";
}

// Severity order: Fail dominates, then Inconclusive, then Skipped.
static int severity(Status s) {
  switch (s) {
    case Status::Fail:
      return 3;
    case Status::Inconclusive:
      return 2;
    case Status::Skipped:
      return 1;
    case Status::Pass:
      return 0;
  }
  return 0;
}

void Report::fail(std::string line) {
  lines.push_back("FAIL: " + std::move(line));
  if (severity(Status::Fail) > severity(status)) status = Status::Fail;
}

void Report::inconclusive(std::string line) {
  lines.push_back("INCONCLUSIVE: " + std::move(line));
  if (severity(Status::Inconclusive) > severity(status))
    status = Status::Inconclusive;
}

void Report::skip(std::string line) {
  lines.push_back("SKIPPED: " + std::move(line));
  if (severity(Status::Skipped) > severity(status)) status = Status::Skipped;
}

void Report::absorb(const Report& sub) {
  for (const auto& l : sub.lines) lines.push_back(l);
  if (severity(sub.status) > severity(status)) status = sub.status;
}

}  // namespace symsing

#pragma once

#include <string>
#include <vector>

namespace symsing {

// Outcome of a verification op. Inconclusive marks a budget exhaustion or a
// missing optional input, never a wrong value; wrong values are Fail.
enum class Status { Pass, Fail, Inconclusive, Skipped };

std::string to_string(Status s);

struct Report {
  Status status = Status::Pass;
  std::vector<std::string> lines;

  void note(std::string line) { lines.push_back(std::move(line)); }
  void fail(std::string line);
  void inconclusive(std::string line);
  void skip(std::string line);
  void absorb(const Report& sub);
  bool ok() const { return status == Status::Pass; }
};

}  // namespace symsing

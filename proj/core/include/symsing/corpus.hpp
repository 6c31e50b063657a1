#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "symsing/poly.hpp"

namespace symsing {

// Ordered collection of named expressions read from a definitions file.
class NamedExprs {
 public:
  const std::vector<std::string>& names() const { return names_; }
  bool has(const std::string& name) const { return map_.count(name) != 0; }
  const FracPoly& frac(const std::string& name) const;  // throws if absent
  Polynomial poly(const std::string& name) const;       // also requires denpow 0
  std::vector<Polynomial> polys() const;                // all entries, file order

  void add(const std::string& name, FracPoly value);    // throws on duplicate

  // Resolver over these entries: looks up names and conj_<name> forms, then
  // falls back to `next`. Suitable for ParseEnv::resolve of dependent files.
  std::function<std::optional<FracPoly>(std::string_view)> resolver(
      std::function<std::optional<FracPoly>(std::string_view)> next = nullptr)
      const;

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, FracPoly> map_;
};

// Parse a file of "name = expression" lines; '#' starts a comment, blank
// lines are skipped. Each entry may refer to earlier entries in the same
// file, to conj_<earlier entry> (coefficient conjugation, polynomial entries
// only), and to anything env.resolve supplies.
NamedExprs load_named_exprs(const std::string& path, const ParseEnv& env);

// Ring homomorphism into a localization: variable i of p maps to images[i].
// All images must share one base (or carry none).
FracPoly substitute_frac(const Polynomial& p, std::span<const FracPoly> images);

// FNV-1a checksum of the raw file bytes; pins corpus files in tests.
uint64_t file_fnv64(const std::string& path);

}  // namespace symsing

#include "symsing/corpus.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace symsing {

const FracPoly& NamedExprs::frac(const std::string& name) const {
  auto it = map_.find(name);
  if (it == map_.end())
    throw std::out_of_range("NamedExprs: no entry named " + name);
  return it->second;
}

Polynomial NamedExprs::poly(const std::string& name) const {
  const FracPoly& f = frac(name);
  if (!f.is_polynomial())
    throw std::runtime_error("NamedExprs: entry " + name +
                             " has a denominator");
  return f.num();
}

std::vector<Polynomial> NamedExprs::polys() const {
  std::vector<Polynomial> out;
  out.reserve(names_.size());
  for (const auto& n : names_) out.push_back(poly(n));
  return out;
}

void NamedExprs::add(const std::string& name, FracPoly value) {
  if (has(name)) throw std::runtime_error("NamedExprs: duplicate " + name);
  names_.push_back(name);
  map_.emplace(name, std::move(value));
}

std::function<std::optional<FracPoly>(std::string_view)> NamedExprs::resolver(
    std::function<std::optional<FracPoly>(std::string_view)> next) const {
  return [this, next](std::string_view name) -> std::optional<FracPoly> {
    std::string key(name);
    auto it = map_.find(key);
    if (it != map_.end()) return it->second;
    if (key.rfind("conj_", 0) == 0) {
      auto base = map_.find(key.substr(5));
      if (base != map_.end()) {
        if (!base->second.is_polynomial())
          throw std::runtime_error("corpus: conj_ of a non-polynomial entry");
        return FracPoly(base->second.num().conj_coeffs());
      }
    }
    if (next) return next(name);
    return std::nullopt;
  };
}

NamedExprs load_named_exprs(const std::string& path, const ParseEnv& env) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("corpus: cannot open " + path);
  NamedExprs out;
  ParseEnv scoped = env;
  scoped.resolve = out.resolver(env.resolve);
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw std::runtime_error("corpus: missing '=' at " + path + ":" +
                               std::to_string(lineno));
    std::string name = line.substr(0, eq);
    name.erase(0, name.find_first_not_of(" \t"));
    name.erase(name.find_last_not_of(" \t") + 1);
    if (name.empty())
      throw std::runtime_error("corpus: empty name at " + path + ":" +
                               std::to_string(lineno));
    try {
      out.add(name, parse_fracpoly(scoped, line.substr(eq + 1)));
    } catch (const std::exception& e) {
      throw std::runtime_error("corpus: " + path + ":" +
                               std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

FracPoly substitute_frac(const Polynomial& p, std::span<const FracPoly> images) {
  if (p.is_zero()) return FracPoly(p);
  if (images.size() != p.vars()->size())
    throw std::invalid_argument("substitute_frac: image count mismatch");
  const Polynomial& model =
      images.empty() ? p : images[0].num();
  FracPoly acc(Polynomial::from_terms(model.vars(), model.ord(), {}));
  for (const Term& t : p.terms()) {
    FracPoly term(Polynomial::from_terms(
        model.vars(), model.ord(),
        {{Monomial(model.vars()->size()), t.coef}}));
    for (size_t i = 0; i < images.size(); ++i)
      if (int32_t e = t.mono.exp(i); e != 0) term *= images[i].pow(e);
    acc += term;
  }
  acc.normalize();
  return acc;
}

uint64_t file_fnv64(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("corpus: cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  std::string bytes = ss.str();
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace symsing

#include "symsing/varset.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace symsing {

VarTable::VarTable(std::vector<std::string> names)
    : VarTable(std::move(names), {}) {}

VarTable::VarTable(std::vector<std::string> names, std::vector<long> weights)
    : names_(std::move(names)), weights_(std::move(weights)) {
  if (weights_.empty()) weights_.assign(names_.size(), 1);
  if (weights_.size() != names_.size())
    throw std::invalid_argument("variable/weight count mismatch");
  for (size_t i = 0; i < names_.size(); ++i) {
    if (names_[i].empty()) throw std::invalid_argument("empty variable name");
    // reserved by the expression syntax for field constants
    if (names_[i] == "z" || names_[i] == "i" || names_[i] == "s2" || names_[i] == "s3")
      throw std::invalid_argument("reserved variable name: " + names_[i]);
    if (!index_.emplace(names_[i], i).second)
      throw std::invalid_argument("duplicate variable name: " + names_[i]);
  }
}

std::optional<size_t> VarTable::index_of(std::string_view name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

void VarTable::set_bigrading(std::vector<std::array<long, 2>> bi) {
  if (bi.size() != names_.size())
    throw std::invalid_argument("bigrading size mismatch");
  bi_ = std::move(bi);
}

bool VarTable::same_as(const VarTable& o) const {
  return names_ == o.names_ && weights_ == o.weights_ && bi_ == o.bi_;
}

Monomial Monomial::var(size_t nvars, size_t idx, int32_t e) {
  Monomial m(nvars);
  m.set_exp(idx, e);
  return m;
}

long Monomial::weighted_degree(const std::vector<long>& w) const {
  long d = 0;
  for (size_t i = 0; i < e_.size(); ++i)
    if (e_[i] != 0) d += w[i] * e_[i];
  return d;
}

std::array<long, 2> Monomial::bidegree(const VarTable& t) const {
  if (!t.has_bigrading()) throw std::logic_error("variable table has no bigrading");
  std::array<long, 2> d{0, 0};
  for (size_t i = 0; i < e_.size(); ++i)
    if (e_[i] != 0) {
      d[0] += t.bigrade(i)[0] * e_[i];
      d[1] += t.bigrade(i)[1] * e_[i];
    }
  return d;
}

Monomial Monomial::mul(const Monomial& a, const Monomial& b) {
  Monomial m = a;
  for (size_t i = 0; i < m.e_.size(); ++i) m.e_[i] += b.e_[i];
  m.total_ += b.total_;
  return m;
}

bool Monomial::divides(const Monomial& b) const {
  if (total_ > b.total_) return false;
  for (size_t i = 0; i < e_.size(); ++i)
    if (e_[i] > b.e_[i]) return false;
  return true;
}

std::optional<Monomial> Monomial::div(const Monomial& a, const Monomial& b) {
  if (!b.divides(a)) return std::nullopt;
  Monomial m = a;
  for (size_t i = 0; i < m.e_.size(); ++i) m.e_[i] -= b.e_[i];
  m.total_ -= b.total_;
  return m;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  Monomial m(a.nvars());
  long tot = 0;
  for (size_t i = 0; i < a.e_.size(); ++i) {
    m.e_[i] = std::max(a.e_[i], b.e_[i]);
    tot += m.e_[i];
  }
  m.total_ = tot;
  return m;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
  Monomial m(a.nvars());
  long tot = 0;
  for (size_t i = 0; i < a.e_.size(); ++i) {
    m.e_[i] = std::min(a.e_[i], b.e_[i]);
    tot += m.e_[i];
  }
  m.total_ = tot;
  return m;
}

bool Monomial::coprime(const Monomial& b) const {
  for (size_t i = 0; i < e_.size(); ++i)
    if (e_[i] > 0 && b.e_[i] > 0) return false;
  return true;
}

int Monomial::lex_cmp(const Monomial& a, const Monomial& b) {
  for (size_t i = 0; i < a.e_.size(); ++i)
    if (a.e_[i] != b.e_[i]) return a.e_[i] < b.e_[i] ? -1 : 1;
  return 0;
}

size_t Monomial::hash() const {
  size_t h = 1469598103934665603ull;
  for (int32_t v : e_) {
    h ^= static_cast<uint32_t>(v);
    h *= 1099511628211ull;
  }
  return h;
}

MonomialOrder MonomialOrder::lex(size_t nvars) {
  MonomialOrder o;
  o.nvars_ = nvars;
  o.segs_.push_back({Kind::Lex, 0, nvars, {}});
  return o;
}

MonomialOrder MonomialOrder::grevlex(size_t nvars) {
  MonomialOrder o;
  o.nvars_ = nvars;
  o.segs_.push_back({Kind::Grevlex, 0, nvars, {}});
  return o;
}

MonomialOrder MonomialOrder::wgrevlex(std::vector<long> weights) {
  MonomialOrder o;
  o.nvars_ = weights.size();
  o.segs_.push_back({Kind::WGrevlex, 0, weights.size(), std::move(weights)});
  return o;
}

MonomialOrder MonomialOrder::block_elim(size_t nelim, size_t nvars) {
  if (nelim == 0 || nelim >= nvars) throw std::invalid_argument("bad elimination block");
  MonomialOrder o;
  o.nvars_ = nvars;
  o.segs_.push_back({Kind::Grevlex, 0, nelim, {}});
  o.segs_.push_back({Kind::Grevlex, nelim, nvars - nelim, {}});
  return o;
}

int MonomialOrder::compare_segment(const Segment& s, const Monomial& a, const Monomial& b) {
  long da = 0, db = 0;
  switch (s.kind) {
    case Kind::Lex:
      for (size_t i = s.start; i < s.start + s.len; ++i)
        if (a.exp(i) != b.exp(i)) return a.exp(i) < b.exp(i) ? -1 : 1;
      return 0;
    case Kind::Grevlex:
      for (size_t i = s.start; i < s.start + s.len; ++i) {
        da += a.exp(i);
        db += b.exp(i);
      }
      break;
    case Kind::WGrevlex:
      for (size_t i = s.start; i < s.start + s.len; ++i) {
        da += s.w[i - s.start] * a.exp(i);
        db += s.w[i - s.start] * b.exp(i);
      }
      break;
  }
  if (da != db) return da < db ? -1 : 1;
  // Graded reverse lex tie-break: scanning from the last variable of the
  // segment, the monomial with the smaller exponent at the first difference
  // is the larger one.
  for (size_t i = s.start + s.len; i-- > s.start;)
    if (a.exp(i) != b.exp(i)) return a.exp(i) < b.exp(i) ? 1 : -1;
  return 0;
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  for (const Segment& s : segs_) {
    int c = compare_segment(s, a, b);
    if (c != 0) return c;
  }
  return 0;
}

std::string MonomialOrder::descriptor() const {
  std::ostringstream os;
  for (size_t k = 0; k < segs_.size(); ++k) {
    const Segment& s = segs_[k];
    if (k) os << '|';
    switch (s.kind) {
      case Kind::Lex:
        os << "lex";
        break;
      case Kind::Grevlex:
        os << "grevlex";
        break;
      case Kind::WGrevlex: {
        os << "wgrevlex[";
        for (size_t i = 0; i < s.w.size(); ++i) {
          if (i) os << ',';
          os << s.w[i];
        }
        os << ']';
        break;
      }
    }
    os << '(' << s.start << ':' << s.len << ')';
  }
  return os.str();
}

}  // namespace symsing

#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace symsing {

// Named variables with an integer weight per variable and an optional second
// grading channel (a pair of integers per variable, used for bidegrees).
class VarTable {
 public:
  explicit VarTable(std::vector<std::string> names);
  VarTable(std::vector<std::string> names, std::vector<long> weights);

  size_t size() const { return names_.size(); }
  const std::string& name(size_t i) const { return names_[i]; }
  long weight(size_t i) const { return weights_[i]; }
  const std::vector<long>& weights() const { return weights_; }
  std::optional<size_t> index_of(std::string_view name) const;

  void set_bigrading(std::vector<std::array<long, 2>> bi);
  bool has_bigrading() const { return !bi_.empty(); }
  const std::array<long, 2>& bigrade(size_t i) const { return bi_[i]; }

  bool same_as(const VarTable& o) const;

 private:
  std::vector<std::string> names_;
  std::vector<long> weights_;
  std::vector<std::array<long, 2>> bi_;
  std::map<std::string, size_t, std::less<>> index_;
};

// Exponent vector with a cached total degree.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(size_t nvars) : e_(nvars, 0) {}
  static Monomial var(size_t nvars, size_t idx, int32_t e = 1);

  size_t nvars() const { return e_.size(); }
  int32_t exp(size_t i) const { return e_[i]; }
  void set_exp(size_t i, int32_t v) {
    total_ += v - e_[i];
    e_[i] = v;
  }
  const std::vector<int32_t>& exps() const { return e_; }

  long total_degree() const { return total_; }
  long weighted_degree(const std::vector<long>& w) const;
  std::array<long, 2> bidegree(const VarTable& t) const;
  bool is_one() const { return total_ == 0; }

  static Monomial mul(const Monomial& a, const Monomial& b);
  // Componentwise a <= b.
  bool divides(const Monomial& b) const;
  static std::optional<Monomial> div(const Monomial& a, const Monomial& b);
  static Monomial lcm(const Monomial& a, const Monomial& b);
  static Monomial gcd(const Monomial& a, const Monomial& b);
  bool coprime(const Monomial& b) const;

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }
  static int lex_cmp(const Monomial& a, const Monomial& b);
  size_t hash() const;

 private:
  std::vector<int32_t> e_;
  long total_ = 0;
};

// Term order built from consecutive variable segments; each segment is
// compared in turn, so a leading segment forms an elimination block.
class MonomialOrder {
 public:
  enum class Kind { Lex, Grevlex, WGrevlex };

  static MonomialOrder lex(size_t nvars);
  static MonomialOrder grevlex(size_t nvars);
  static MonomialOrder wgrevlex(std::vector<long> weights);
  // First nelim variables form a grevlex elimination block ahead of the rest.
  static MonomialOrder block_elim(size_t nelim, size_t nvars);

  // >0 when a is larger, 0 on equal exponents, <0 otherwise.
  int compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  size_t nvars() const { return nvars_; }
  // Stable text key, used for cache addressing and compatibility checks.
  std::string descriptor() const;
  // Number of leading variables that form an elimination block (0 if none).
  size_t elim_block() const { return segs_.size() > 1 ? segs_[0].len : 0; }

 private:
  struct Segment {
    Kind kind;
    size_t start = 0;
    size_t len = 0;
    std::vector<long> w;
  };
  std::vector<Segment> segs_;
  size_t nvars_ = 0;

  static int compare_segment(const Segment& s, const Monomial& a, const Monomial& b);
};

}  // namespace symsing

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "symsing/cyclo.hpp"

namespace symsing {

// Dense univariate polynomial over Q(zeta_24); coefficient i belongs to t^i.
class UniPoly {
 public:
  UniPoly() = default;
  UniPoly(const Cyclo& c);
  UniPoly(long v) : UniPoly(Cyclo(v)) {}
  static UniPoly t(long e = 1);
  static UniPoly from_coeffs(std::vector<Cyclo> coeffs);

  bool is_zero() const { return c_.empty(); }
  long degree() const { return static_cast<long>(c_.size()) - 1; }  // -1 for zero
  Cyclo coeff(long i) const;
  const Cyclo& lead() const;
  const std::vector<Cyclo>& coeffs() const { return c_; }

  UniPoly operator-() const;
  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }
  UniPoly& operator*=(const Cyclo& c);
  friend UniPoly operator*(UniPoly a, const Cyclo& c) { return a *= c; }
  UniPoly pow(long e) const;
  UniPoly shifted(long e) const;  // multiply by t^e

  UniPoly& make_monic();
  static std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
  static UniPoly gcd(UniPoly a, UniPoly b);  // monic

  Cyclo eval(const Cyclo& x) const;
  UniPoly derivative() const;

  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

  std::string to_string(const std::string& var = "t") const;

 private:
  std::vector<Cyclo> c_;
  void trim();
};

// Univariate rational function kept gcd-reduced with a monic denominator.
class RatFun {
 public:
  RatFun() : num_(), den_(Cyclo(1)) {}
  RatFun(UniPoly num, UniPoly den);
  explicit RatFun(UniPoly num) : num_(std::move(num)), den_(Cyclo(1)) {}

  const UniPoly& num() const { return num_; }
  const UniPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RatFun& operator+=(const RatFun& o);
  RatFun& operator-=(const RatFun& o);
  RatFun& operator*=(const RatFun& o);
  friend RatFun operator+(RatFun a, const RatFun& b) { return a += b; }
  friend RatFun operator-(RatFun a, const RatFun& b) { return a -= b; }
  friend RatFun operator*(RatFun a, const RatFun& b) { return a *= b; }
  RatFun& operator*=(const Cyclo& c);

  friend bool operator==(const RatFun& a, const RatFun& b);
  friend bool operator!=(const RatFun& a, const RatFun& b) { return !(a == b); }

  std::string to_string(const std::string& var = "t") const;

 private:
  UniPoly num_;
  UniPoly den_;
  void reduce();
};

// Graded Hilbert series: num / prod_i (1 - t^den[i]).
struct HilbertSeries {
  UniPoly num;
  std::vector<long> den;

  RatFun ratfun() const;
  bool same_series(const HilbertSeries& o) const;  // equality after clearing
  std::string to_string() const;
};

}  // namespace symsing

#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "symsing/cyclo.hpp"
#include "symsing/varset.hpp"

namespace symsing {

using TablePtr = std::shared_ptr<const VarTable>;
using OrderPtr = std::shared_ptr<const MonomialOrder>;

class Polynomial;

// Lightweight ring handle: a shared variable table plus the active term order.
struct Ring {
  TablePtr vars;
  OrderPtr ord;

  static Ring make(VarTable table);
  static Ring make(VarTable table, MonomialOrder order);
  Ring with_order(MonomialOrder order) const;

  size_t nvars() const { return vars->size(); }
  bool compatible(const Ring& o) const;

  Polynomial zero() const;
  Polynomial one() const;
  Polynomial constant(const Cyclo& c) const;
  Polynomial var(size_t i) const;
  Polynomial var(std::string_view name) const;
  Polynomial monomial(Monomial m, Cyclo c) const;
  Polynomial parse(const std::string& text) const;
};

struct Term {
  Monomial mono;
  Cyclo coef;
};

// Sparse multivariate polynomial over Q(zeta_24); terms are kept sorted in
// strictly descending order under the ring's active term order.
class Polynomial {
 public:
  Polynomial() = default;

  static Polynomial from_terms(TablePtr vars, OrderPtr ord, std::vector<Term> terms);

  const TablePtr& vars() const { return vars_; }
  const OrderPtr& ord() const { return ord_; }
  const std::vector<Term>& terms() const { return t_; }

  bool is_zero() const { return t_.empty(); }
  size_t nterms() const { return t_.size(); }
  const Term& lead() const;
  const Monomial& lead_mono() const { return lead().mono; }
  const Cyclo& lead_coef() const { return lead().coef; }

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
  Polynomial& operator*=(const Cyclo& c);
  friend Polynomial operator*(Polynomial a, const Cyclo& c) { return a *= c; }
  friend Polynomial operator*(const Cyclo& c, Polynomial a) { return a *= c; }
  Polynomial pow(long e) const;

  // *this += c * x^m * q; the workhorse of polynomial reduction.
  void add_scaled(const Cyclo& c, const Monomial& m, const Polynomial& q);

  // Removes the leading term.
  void drop_lead();

  Polynomial& make_monic();
  Polynomial derivative(size_t var) const;
  Polynomial conj_coeffs() const;
  Polynomial map_coeffs(const std::function<Cyclo(const Cyclo&)>& f) const;

  // Ring homomorphism: variable i maps to images[i] (all in the target ring).
  Polynomial substitute(const Ring& target, std::span<const Polynomial> images) const;
  Cyclo eval(std::span<const Cyclo> point) const;

  long total_degree() const;  // throws on zero
  long weighted_degree(const std::vector<long>& w) const;
  long weighted_degree() const;  // table weights
  bool is_homogeneous(const std::vector<long>& w) const;
  bool is_bihomogeneous() const;
  std::array<long, 2> bidegree() const;  // throws unless bihomogeneous, nonzero

  // Minimal-weighted-degree homogeneous part; the zero polynomial has empty
  // lowest form and an absent order (the +infinity sentinel).
  Polynomial lowest_form(const std::vector<long>& w) const;
  std::optional<long> order_at_origin(const std::vector<long>& w) const;

  Polynomial with_order(OrderPtr ord) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }
  size_t hash() const;

  std::string to_string() const;

 private:
  TablePtr vars_;
  OrderPtr ord_;
  std::vector<Term> t_;

  friend struct Ring;
  void normalize_full();
};

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

// Exact division: returns p / q when q divides p exactly, nullopt otherwise.
std::optional<Polynomial> divide_exact(const Polynomial& p, const Polynomial& q);

// Element of the localization C[vars][1/base]: num / base^denpow for one
// fixed base polynomial. Supports the ratio bookkeeping used by blow-up
// charts, where denominators are powers of a single chart divisor.
class FracPoly {
 public:
  FracPoly() = default;
  explicit FracPoly(Polynomial num) : num_(std::move(num)) {}
  FracPoly(Polynomial num, long denpow, std::shared_ptr<const Polynomial> base);

  const Polynomial& num() const { return num_; }
  long denpow() const { return denpow_; }
  const std::shared_ptr<const Polynomial>& base() const { return base_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return denpow_ == 0; }

  FracPoly operator-() const;
  FracPoly& operator+=(const FracPoly& o);
  FracPoly& operator-=(const FracPoly& o);
  FracPoly& operator*=(const FracPoly& o);
  friend FracPoly operator+(FracPoly a, const FracPoly& b) { return a += b; }
  friend FracPoly operator-(FracPoly a, const FracPoly& b) { return a -= b; }
  friend FracPoly operator*(FracPoly a, const FracPoly& b) { return a *= b; }
  FracPoly& operator*=(const Cyclo& c);
  friend FracPoly operator*(FracPoly a, const Cyclo& c) { return a *= c; }
  friend FracPoly operator*(const Cyclo& c, FracPoly a) { return a *= c; }
  FracPoly pow(long e) const;
  // Division requires the divisor to be constant * base^k.
  FracPoly& operator/=(const FracPoly& o);
  friend FracPoly operator/(FracPoly a, const FracPoly& b) { return a /= b; }

  friend bool operator==(const FracPoly& a, const FracPoly& b);
  friend bool operator!=(const FracPoly& a, const FracPoly& b) { return !(a == b); }

  // Strips exact base factors from the numerator.
  void normalize();

 private:
  Polynomial num_;
  long denpow_ = 0;
  std::shared_ptr<const Polynomial> base_;

  void align(FracPoly& o);
  const Polynomial& base_poly() const;
};

// Shared expression parser: +, -, *, ^, parentheses, '/'; atoms are rational
// literals, the field symbols z/i/s2/s3, ring variables, and names handled by
// the resolver. Division is only valid by constants or by constant multiples
// of base powers.
struct ParseEnv {
  Ring ring;
  std::shared_ptr<const Polynomial> base;  // may be null
  std::function<std::optional<FracPoly>(std::string_view)> resolve;  // may be null
};

FracPoly parse_fracpoly(const ParseEnv& env, const std::string& text);

}  // namespace symsing

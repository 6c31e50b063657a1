#include "symsing/unipoly.hpp"

#include <sstream>
#include <stdexcept>

namespace symsing {

UniPoly::UniPoly(const Cyclo& c) {
  if (!c.is_zero()) c_.push_back(c);
}

UniPoly UniPoly::t(long e) {
  if (e < 0) throw std::invalid_argument("negative power of t");
  UniPoly p;
  p.c_.assign(static_cast<size_t>(e) + 1, Cyclo());
  p.c_.back() = Cyclo(1);
  return p;
}

UniPoly UniPoly::from_coeffs(std::vector<Cyclo> coeffs) {
  UniPoly p;
  p.c_ = std::move(coeffs);
  p.trim();
  return p;
}

void UniPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Cyclo UniPoly::coeff(long i) const {
  if (i < 0 || static_cast<size_t>(i) >= c_.size()) return Cyclo();
  return c_[static_cast<size_t>(i)];
}

const Cyclo& UniPoly::lead() const {
  if (c_.empty()) throw std::domain_error("zero polynomial has no leading coefficient");
  return c_.back();
}

UniPoly UniPoly::operator-() const {
  UniPoly p = *this;
  for (Cyclo& c : p.c_) c = -c;
  return p;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return UniPoly();
  UniPoly p;
  p.c_.assign(a.c_.size() + b.c_.size() - 1, Cyclo());
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) {
      if (b.c_[j].is_zero()) continue;
      p.c_[i + j] += a.c_[i] * b.c_[j];
    }
  }
  p.trim();
  return p;
}

UniPoly& UniPoly::operator*=(const Cyclo& c) {
  if (c.is_zero()) {
    c_.clear();
    return *this;
  }
  for (Cyclo& x : c_) x *= c;
  return *this;
}

UniPoly UniPoly::pow(long e) const {
  if (e < 0) throw std::domain_error("negative power");
  UniPoly acc(Cyclo(1));
  UniPoly base = *this;
  while (e > 0) {
    if (e & 1) acc *= base;
    if (e >>= 1) base *= base;
  }
  return acc;
}

UniPoly UniPoly::shifted(long e) const {
  if (e < 0) throw std::invalid_argument("negative shift");
  if (is_zero()) return *this;
  UniPoly p;
  p.c_.assign(static_cast<size_t>(e), Cyclo());
  p.c_.insert(p.c_.end(), c_.begin(), c_.end());
  return p;
}

UniPoly& UniPoly::make_monic() {
  if (is_zero()) return *this;
  if (c_.back() == Cyclo(1)) return *this;
  Cyclo inv = c_.back().inverse();
  for (Cyclo& c : c_) c *= inv;
  return *this;
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  UniPoly rem = a;
  if (a.degree() < b.degree()) return {UniPoly(), rem};
  UniPoly quot;
  quot.c_.assign(static_cast<size_t>(a.degree() - b.degree()) + 1, Cyclo());
  const Cyclo lead_inv = b.lead().inverse();
  while (!rem.is_zero() && rem.degree() >= b.degree()) {
    long shift = rem.degree() - b.degree();
    Cyclo c = rem.lead() * lead_inv;
    quot.c_[static_cast<size_t>(shift)] = c;
    for (size_t i = 0; i < b.c_.size(); ++i)
      rem.c_[i + static_cast<size_t>(shift)] -= c * b.c_[i];
    rem.trim();
  }
  quot.trim();
  return {std::move(quot), std::move(rem)};
}

UniPoly UniPoly::gcd(UniPoly a, UniPoly b) {
  while (!b.is_zero()) {
    UniPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  a.make_monic();
  return a;
}

Cyclo UniPoly::eval(const Cyclo& x) const {
  Cyclo acc;
  for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

UniPoly UniPoly::derivative() const {
  if (c_.size() <= 1) return UniPoly();
  UniPoly p;
  p.c_.resize(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) p.c_[i - 1] = c_[i] * Cyclo(static_cast<long>(i));
  p.trim();
  return p;
}

std::string UniPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = c_.size(); i-- > 0;) {
    const Cyclo& c = c_[i];
    if (c.is_zero()) continue;
    if (auto q = c.as_rational()) {
      bool neg = *q < 0;
      Rational a = neg ? Rational(-*q) : *q;
      if (first) {
        if (neg) os << '-';
      } else {
        os << (neg ? " - " : " + ");
      }
      if (i == 0) os << a.get_str();
      else {
        if (a != 1) os << a.get_str() << '*';
        os << var;
        if (i > 1) os << '^' << i;
      }
    } else {
      if (!first) os << " + ";
      os << '(' << c.to_string() << ')';
      if (i > 0) {
        os << '*' << var;
        if (i > 1) os << '^' << i;
      }
    }
    first = false;
  }
  return os.str();
}

RatFun::RatFun(UniPoly num, UniPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("zero denominator");
  reduce();
}

void RatFun::reduce() {
  if (num_.is_zero()) {
    den_ = UniPoly(Cyclo(1));
    return;
  }
  UniPoly g = UniPoly::gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = UniPoly::divmod(num_, g).first;
    den_ = UniPoly::divmod(den_, g).first;
  }
  Cyclo inv = den_.lead().inverse();
  num_ *= inv;
  den_ *= inv;
}

RatFun& RatFun::operator+=(const RatFun& o) {
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ = den_ * o.den_;
  reduce();
  return *this;
}

RatFun& RatFun::operator-=(const RatFun& o) {
  num_ = num_ * o.den_ - o.num_ * den_;
  den_ = den_ * o.den_;
  reduce();
  return *this;
}

RatFun& RatFun::operator*=(const RatFun& o) {
  num_ = num_ * o.num_;
  den_ = den_ * o.den_;
  reduce();
  return *this;
}

RatFun& RatFun::operator*=(const Cyclo& c) {
  num_ *= c;
  if (num_.is_zero()) den_ = UniPoly(Cyclo(1));
  return *this;
}

bool operator==(const RatFun& a, const RatFun& b) {
  return a.num_ * b.den_ == b.num_ * a.den_;
}

std::string RatFun::to_string(const std::string& var) const {
  return "(" + num_.to_string(var) + ") / (" + den_.to_string(var) + ")";
}

RatFun HilbertSeries::ratfun() const {
  UniPoly d(Cyclo(1));
  for (long w : den) {
    UniPoly f = UniPoly(Cyclo(1)) - UniPoly::t(w);
    d *= f;
  }
  return RatFun(num, d);
}

bool HilbertSeries::same_series(const HilbertSeries& o) const {
  return ratfun() == o.ratfun();
}

std::string HilbertSeries::to_string() const {
  std::ostringstream os;
  os << '(' << num.to_string() << ")";
  if (!den.empty()) {
    os << " / (";
    for (size_t i = 0; i < den.size(); ++i) {
      if (i) os << '*';
      os << "(1-t^" << den[i] << ')';
    }
    os << ')';
  }
  return os.str();
}

}  // namespace symsing

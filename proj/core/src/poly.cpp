#include "symsing/poly.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace symsing {

namespace {

struct MonoHash {
  size_t operator()(const Monomial& m) const { return m.hash(); }
};

void require(bool ok, const char* what) {
  if (!ok) throw std::logic_error(std::string("polynomial invariant violated: ") + what);
}

bool tables_match(const TablePtr& a, const TablePtr& b) {
  if (a == b) return true;
  return a && b && a->same_as(*b);
}

bool orders_match(const OrderPtr& a, const OrderPtr& b) {
  if (a == b) return true;
  return a && b && a->descriptor() == b->descriptor();
}

}  // namespace

Ring Ring::make(VarTable table) {
  size_t n = table.size();
  return Ring{std::make_shared<VarTable>(std::move(table)),
              std::make_shared<MonomialOrder>(MonomialOrder::grevlex(n))};
}

Ring Ring::make(VarTable table, MonomialOrder order) {
  if (order.nvars() != table.size())
    throw std::invalid_argument("order arity does not match variable table");
  return Ring{std::make_shared<VarTable>(std::move(table)),
              std::make_shared<MonomialOrder>(std::move(order))};
}

Ring Ring::with_order(MonomialOrder order) const {
  if (order.nvars() != vars->size())
    throw std::invalid_argument("order arity does not match variable table");
  return Ring{vars, std::make_shared<MonomialOrder>(std::move(order))};
}

bool Ring::compatible(const Ring& o) const { return tables_match(vars, o.vars); }

Polynomial Ring::zero() const { return Polynomial::from_terms(vars, ord, {}); }

Polynomial Ring::one() const { return constant(Cyclo(1)); }

Polynomial Ring::constant(const Cyclo& c) const {
  std::vector<Term> terms;
  if (!c.is_zero()) terms.push_back({Monomial(vars->size()), c});
  return Polynomial::from_terms(vars, ord, std::move(terms));
}

Polynomial Ring::var(size_t i) const {
  if (i >= vars->size()) throw std::out_of_range("variable index");
  return Polynomial::from_terms(vars, ord, {{Monomial::var(vars->size(), i), Cyclo(1)}});
}

Polynomial Ring::var(std::string_view name) const {
  auto idx = vars->index_of(name);
  if (!idx) throw std::invalid_argument("unknown variable: " + std::string(name));
  return var(*idx);
}

Polynomial Ring::monomial(Monomial m, Cyclo c) const {
  if (m.nvars() != vars->size()) throw std::invalid_argument("monomial arity mismatch");
  std::vector<Term> terms;
  if (!c.is_zero()) terms.push_back({std::move(m), std::move(c)});
  return Polynomial::from_terms(vars, ord, std::move(terms));
}

Polynomial Ring::parse(const std::string& text) const {
  FracPoly f = parse_fracpoly(ParseEnv{*this, nullptr, nullptr}, text);
  if (!f.is_polynomial())
    throw std::invalid_argument("expression is not polynomial: " + text);
  return f.num();
}

Polynomial Polynomial::from_terms(TablePtr vars, OrderPtr ord, std::vector<Term> terms) {
  Polynomial p;
  p.vars_ = std::move(vars);
  p.ord_ = std::move(ord);
  p.t_ = std::move(terms);
  require(p.vars_ != nullptr && p.ord_ != nullptr, "null ring");
  for (const Term& t : p.t_) require(t.mono.nvars() == p.vars_->size(), "term arity");
  p.normalize_full();
  return p;
}

void Polynomial::normalize_full() {
  std::sort(t_.begin(), t_.end(), [this](const Term& a, const Term& b) {
    return ord_->compare(a.mono, b.mono) > 0;
  });
  std::vector<Term> out;
  out.reserve(t_.size());
  for (Term& t : t_) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coef += t.coef;
      if (out.back().coef.is_zero()) out.pop_back();
    } else if (!t.coef.is_zero()) {
      out.push_back(std::move(t));
    }
  }
  t_ = std::move(out);
}

const Term& Polynomial::lead() const {
  if (t_.empty()) throw std::domain_error("zero polynomial has no leading term");
  return t_.front();
}

void Polynomial::drop_lead() {
  if (t_.empty()) throw std::domain_error("zero polynomial has no leading term");
  t_.erase(t_.begin());
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (Term& t : p.t_) t.coef = -t.coef;
  return p;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.is_zero()) return *this;
  if (!vars_) return *this = o;
  add_scaled(Cyclo(1), Monomial(vars_->size()), o);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.is_zero()) return *this;
  if (!vars_) return *this = -o;
  add_scaled(Cyclo(-1), Monomial(vars_->size()), o);
  return *this;
}

void Polynomial::add_scaled(const Cyclo& c, const Monomial& m, const Polynomial& q) {
  require(tables_match(vars_, q.vars_) || vars_ == nullptr, "ring mismatch in add_scaled");
  if (vars_ == nullptr) {
    vars_ = q.vars_;
    ord_ = q.ord_;
  }
  if (c.is_zero() || q.is_zero()) return;
  const Polynomial* rhs = &q;
  Polynomial converted;
  if (!orders_match(ord_, q.ord_)) {
    converted = q.with_order(ord_);
    rhs = &converted;
  }
  const bool shift = !m.is_one();
  std::vector<Term> out;
  out.reserve(t_.size() + rhs->t_.size());
  size_t i = 0, j = 0;
  while (i < t_.size() || j < rhs->t_.size()) {
    if (j >= rhs->t_.size()) {
      out.push_back(std::move(t_[i++]));
      continue;
    }
    Monomial shifted = shift ? Monomial::mul(m, rhs->t_[j].mono) : rhs->t_[j].mono;
    if (i >= t_.size()) {
      Cyclo nc = c * rhs->t_[j].coef;
      if (!nc.is_zero()) out.push_back({std::move(shifted), std::move(nc)});
      ++j;
      continue;
    }
    int cmp = ord_->compare(t_[i].mono, shifted);
    if (cmp > 0) {
      out.push_back(std::move(t_[i++]));
    } else if (cmp < 0) {
      Cyclo nc = c * rhs->t_[j].coef;
      if (!nc.is_zero()) out.push_back({std::move(shifted), std::move(nc)});
      ++j;
    } else {
      Cyclo nc = t_[i].coef + c * rhs->t_[j].coef;
      if (!nc.is_zero()) out.push_back({std::move(shifted), std::move(nc)});
      ++i;
      ++j;
    }
  }
  t_ = std::move(out);
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() && a.vars_) return a;
  if (b.is_zero() && b.vars_) return b;
  if (a.is_zero()) return b.vars_ ? Polynomial::from_terms(b.vars_, b.ord_, {}) : a;
  if (b.is_zero()) return a.vars_ ? Polynomial::from_terms(a.vars_, a.ord_, {}) : b;
  require(tables_match(a.vars_, b.vars_), "ring mismatch in mul");
  const Polynomial* small = &a;
  const Polynomial* big = &b;
  if (small->t_.size() > big->t_.size()) std::swap(small, big);
  std::unordered_map<Monomial, Cyclo, MonoHash> acc;
  acc.reserve(big->t_.size() * 2);
  for (const Term& s : small->t_)
    for (const Term& t : big->t_) {
      Cyclo c = s.coef * t.coef;
      if (c.is_zero()) continue;
      Monomial m = Monomial::mul(s.mono, t.mono);
      auto [it, fresh] = acc.try_emplace(std::move(m), c);
      if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) acc.erase(it);
      }
    }
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (auto& [m, c] : acc) terms.push_back({m, std::move(c)});
  return Polynomial::from_terms(a.vars_, a.ord_, std::move(terms));
}

Polynomial& Polynomial::operator*=(const Cyclo& c) {
  if (c.is_zero()) {
    t_.clear();
    return *this;
  }
  for (Term& t : t_) t.coef *= c;
  return *this;
}

Polynomial Polynomial::pow(long e) const {
  if (e < 0) throw std::domain_error("negative polynomial power");
  require(vars_ != nullptr, "pow on uninitialized polynomial");
  Polynomial acc = Polynomial::from_terms(vars_, ord_, {{Monomial(vars_->size()), Cyclo(1)}});
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    if (e >>= 1) base = base * base;
  }
  return acc;
}

Polynomial& Polynomial::make_monic() {
  if (is_zero()) return *this;
  if (lead_coef() == Cyclo(1)) return *this;
  Cyclo inv = lead_coef().inverse();
  for (Term& t : t_) t.coef *= inv;
  return *this;
}

Polynomial Polynomial::derivative(size_t var) const {
  std::vector<Term> out;
  out.reserve(t_.size());
  for (const Term& t : t_) {
    int32_t e = t.mono.exp(var);
    if (e == 0) continue;
    Monomial m = t.mono;
    m.set_exp(var, e - 1);
    out.push_back({std::move(m), t.coef * Cyclo(e)});
  }
  return from_terms(vars_, ord_, std::move(out));
}

Polynomial Polynomial::conj_coeffs() const {
  return map_coeffs([](const Cyclo& c) { return c.conj(); });
}

Polynomial Polynomial::map_coeffs(const std::function<Cyclo(const Cyclo&)>& f) const {
  std::vector<Term> out;
  out.reserve(t_.size());
  for (const Term& t : t_) {
    Cyclo c = f(t.coef);
    if (!c.is_zero()) out.push_back({t.mono, std::move(c)});
  }
  return from_terms(vars_, ord_, std::move(out));
}

Polynomial Polynomial::substitute(const Ring& target, std::span<const Polynomial> images) const {
  require(images.size() == vars_->size(), "substitute image count");
  std::vector<std::vector<Polynomial>> powers(images.size());
  auto get_pow = [&](size_t i, int32_t e) -> const Polynomial& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(target.one());
    while (cache.size() <= static_cast<size_t>(e))
      cache.push_back(cache.back() * images[i]);
    return cache[static_cast<size_t>(e)];
  };
  Polynomial sum = target.zero();
  for (const Term& t : t_) {
    Polynomial prod = target.constant(t.coef);
    for (size_t i = 0; i < images.size(); ++i) {
      int32_t e = t.mono.exp(i);
      if (e > 0) prod = prod * get_pow(i, e);
    }
    sum += prod;
  }
  return sum;
}

Cyclo Polynomial::eval(std::span<const Cyclo> point) const {
  require(point.size() == vars_->size(), "eval point arity");
  std::vector<std::vector<Cyclo>> powers(point.size());
  auto get_pow = [&](size_t i, int32_t e) -> const Cyclo& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(Cyclo(1));
    while (cache.size() <= static_cast<size_t>(e)) cache.push_back(cache.back() * point[i]);
    return cache[static_cast<size_t>(e)];
  };
  Cyclo sum;
  for (const Term& t : t_) {
    Cyclo prod = t.coef;
    for (size_t i = 0; i < point.size(); ++i) {
      int32_t e = t.mono.exp(i);
      if (e > 0) prod *= get_pow(i, e);
    }
    sum += prod;
  }
  return sum;
}

long Polynomial::total_degree() const {
  if (is_zero()) throw std::domain_error("degree of zero polynomial");
  long d = 0;
  for (const Term& t : t_) d = std::max(d, t.mono.total_degree());
  return d;
}

long Polynomial::weighted_degree(const std::vector<long>& w) const {
  if (is_zero()) throw std::domain_error("degree of zero polynomial");
  long d = std::numeric_limits<long>::min();
  for (const Term& t : t_) d = std::max(d, t.mono.weighted_degree(w));
  return d;
}

long Polynomial::weighted_degree() const { return weighted_degree(vars_->weights()); }

bool Polynomial::is_homogeneous(const std::vector<long>& w) const {
  if (is_zero()) return true;
  long d = t_.front().mono.weighted_degree(w);
  for (const Term& t : t_)
    if (t.mono.weighted_degree(w) != d) return false;
  return true;
}

bool Polynomial::is_bihomogeneous() const {
  if (is_zero()) return true;
  auto d = t_.front().mono.bidegree(*vars_);
  for (const Term& t : t_)
    if (t.mono.bidegree(*vars_) != d) return false;
  return true;
}

std::array<long, 2> Polynomial::bidegree() const {
  if (is_zero()) throw std::domain_error("bidegree of zero polynomial");
  if (!is_bihomogeneous()) throw std::domain_error("bidegree of non-bihomogeneous polynomial");
  return t_.front().mono.bidegree(*vars_);
}

Polynomial Polynomial::lowest_form(const std::vector<long>& w) const {
  if (is_zero()) return *this;
  long dmin = std::numeric_limits<long>::max();
  for (const Term& t : t_) dmin = std::min(dmin, t.mono.weighted_degree(w));
  std::vector<Term> out;
  for (const Term& t : t_)
    if (t.mono.weighted_degree(w) == dmin) out.push_back(t);
  return from_terms(vars_, ord_, std::move(out));
}

std::optional<long> Polynomial::order_at_origin(const std::vector<long>& w) const {
  if (is_zero()) return std::nullopt;  // +infinity
  long dmin = std::numeric_limits<long>::max();
  for (const Term& t : t_) dmin = std::min(dmin, t.mono.weighted_degree(w));
  return dmin;
}

Polynomial Polynomial::with_order(OrderPtr ord) const {
  require(ord != nullptr && ord->nvars() == vars_->size(), "order arity");
  return from_terms(vars_, std::move(ord), t_);
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() && b.is_zero()) return true;
  if (a.is_zero() != b.is_zero()) return false;
  require(tables_match(a.vars_, b.vars_), "ring mismatch in equality");
  if (orders_match(a.ord_, b.ord_)) {
    if (a.t_.size() != b.t_.size()) return false;
    for (size_t k = 0; k < a.t_.size(); ++k)
      if (a.t_[k].mono != b.t_[k].mono || a.t_[k].coef != b.t_[k].coef) return false;
    return true;
  }
  return a.with_order(b.ord_) == b;
}

size_t Polynomial::hash() const {
  size_t h = 14695981039346656037ull;
  for (const Term& t : t_) {
    h ^= t.mono.hash();
    h *= 1099511628211ull;
    h ^= t.coef.hash();
    h *= 1099511628211ull;
  }
  return h;
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  auto mono_str = [this](const Monomial& m) {
    std::ostringstream ms;
    bool first = true;
    for (size_t i = 0; i < m.nvars(); ++i) {
      if (m.exp(i) == 0) continue;
      if (!first) ms << '*';
      first = false;
      ms << vars_->name(i);
      if (m.exp(i) > 1) ms << '^' << m.exp(i);
    }
    return ms.str();
  };
  bool first = true;
  for (const Term& t : t_) {
    const bool unit_mono = t.mono.is_one();
    if (auto q = t.coef.as_rational()) {
      int s = sgn(*q);
      Rational a = abs(*q);
      if (first) {
        if (s < 0) os << '-';
      } else {
        os << (s < 0 ? " - " : " + ");
      }
      if (unit_mono) os << a.get_str();
      else {
        if (a != 1) os << a.get_str() << '*';
        os << mono_str(t.mono);
      }
    } else {
      if (!first) os << " + ";
      os << '(' << t.coef.to_string() << ')';
      if (!unit_mono) os << '*' << mono_str(t.mono);
    }
    first = false;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

std::optional<Polynomial> divide_exact(const Polynomial& p, const Polynomial& q) {
  if (q.is_zero()) return std::nullopt;
  if (p.is_zero()) return p;
  Polynomial rem = p;
  std::vector<Term> quot;
  const Cyclo lead_inv = q.lead_coef().inverse();
  while (!rem.is_zero()) {
    auto m = Monomial::div(rem.lead_mono(), q.lead_mono());
    if (!m) return std::nullopt;
    Cyclo c = rem.lead_coef() * lead_inv;
    rem.add_scaled(-c, *m, q);
    quot.push_back({std::move(*m), std::move(c)});
  }
  return Polynomial::from_terms(p.vars(), p.ord(), std::move(quot));
}

FracPoly::FracPoly(Polynomial num, long denpow, std::shared_ptr<const Polynomial> base)
    : num_(std::move(num)), denpow_(denpow), base_(std::move(base)) {
  if (denpow_ < 0) throw std::invalid_argument("negative denominator power");
  if (denpow_ > 0 && !base_) throw std::invalid_argument("denominator power without base");
}

const Polynomial& FracPoly::base_poly() const {
  if (!base_) throw std::logic_error("fraction has no base");
  return *base_;
}

void FracPoly::align(FracPoly& o) {
  if (!base_ && o.base_) base_ = o.base_;
  if (o.base_ == nullptr && base_) o.base_ = base_;
  if (base_ && o.base_ && base_ != o.base_ && !(*base_ == *o.base_))
    throw std::invalid_argument("fraction bases differ");
  while (denpow_ < o.denpow_) {
    num_ = num_ * base_poly();
    ++denpow_;
  }
  while (o.denpow_ < denpow_) {
    o.num_ = o.num_ * o.base_poly();
    ++o.denpow_;
  }
}

FracPoly FracPoly::operator-() const {
  FracPoly f = *this;
  f.num_ = -f.num_;
  return f;
}

FracPoly& FracPoly::operator+=(const FracPoly& o) {
  FracPoly rhs = o;
  align(rhs);
  num_ += rhs.num_;
  return *this;
}

FracPoly& FracPoly::operator-=(const FracPoly& o) {
  FracPoly rhs = o;
  align(rhs);
  num_ -= rhs.num_;
  return *this;
}

FracPoly& FracPoly::operator*=(const FracPoly& o) {
  if (!base_ && o.base_) base_ = o.base_;
  if (base_ && o.base_ && base_ != o.base_ && !(*base_ == *o.base_))
    throw std::invalid_argument("fraction bases differ");
  num_ = num_ * o.num_;
  denpow_ += o.denpow_;
  return *this;
}

FracPoly& FracPoly::operator*=(const Cyclo& c) {
  num_ *= c;
  return *this;
}

FracPoly FracPoly::pow(long e) const {
  if (!num_.vars()) throw std::logic_error("pow on uninitialized fraction");
  FracPoly one(Polynomial::from_terms(num_.vars(), num_.ord(),
                                      {{Monomial(num_.vars()->size()), Cyclo(1)}}));
  one.base_ = base_;
  if (e < 0) {
    // Only values of the form constant * base^k can be inverted.
    one /= *this;
    return one.pow(-e);
  }
  FracPoly acc = std::move(one);
  FracPoly b = *this;
  while (e > 0) {
    if (e & 1) acc *= b;
    if (e >>= 1) b *= b;
  }
  return acc;
}

FracPoly& FracPoly::operator/=(const FracPoly& o) {
  if (o.is_zero()) throw std::domain_error("division by zero fraction");
  FracPoly d = o;
  if (!base_ && d.base_) base_ = d.base_;
  if (!d.base_ && base_) d.base_ = base_;
  d.normalize();
  // Strip base powers from the divisor numerator: d.num == c * base^j needed.
  long j = 0;
  Polynomial n = d.num_;
  if (d.base_) {
    while (n.nterms() > 1 || (n.nterms() == 1 && !n.lead_mono().is_one())) {
      auto q = divide_exact(n, *d.base_);
      if (!q) break;
      n = *q;
      ++j;
    }
  }
  if (!(n.nterms() == 1 && n.lead_mono().is_one()))
    throw std::invalid_argument("division only by constants times base powers");
  const Cyclo c = n.lead_coef();
  // this / (c * base^{j - d.denpow}) = this * c^{-1} * base^{d.denpow - j}.
  num_ *= c.inverse();
  long shift = d.denpow_ - j;
  if (shift >= 0) {
    for (long k = 0; k < shift; ++k) num_ = num_ * *base_;
  } else {
    denpow_ += -shift;
    if (denpow_ > 0 && !base_) throw std::logic_error("fraction base missing");
  }
  return *this;
}

bool operator==(const FracPoly& a, const FracPoly& b) {
  FracPoly x = a, y = b;
  x.align(y);
  return x.num_ == y.num_;
}

void FracPoly::normalize() {
  while (denpow_ > 0) {
    auto q = divide_exact(num_, base_poly());
    if (!q) return;
    num_ = std::move(*q);
    --denpow_;
  }
}

namespace {

struct PolyParser {
  const ParseEnv& env;
  const std::string& s;
  size_t pos = 0;

  PolyParser(const ParseEnv& e, const std::string& text) : env(e), s(text) {}

  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("expression parse error at offset " + std::to_string(pos) +
                                ": " + what + " in \"" + s + "\"");
  }

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }

  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  long parse_int() {
    skip_ws();
    bool neg = eat('-');
    skip_ws();
    if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos]))) fail("expected integer");
    long v = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      v = v * 10 + (s[pos] - '0');
      if (v > 100000) fail("exponent too large");
      ++pos;
    }
    return neg ? -v : v;
  }

  FracPoly constant(const Cyclo& c) const {
    FracPoly f(env.ring.constant(c));
    return f;
  }

  FracPoly atom() {
    skip_ws();
    if (pos >= s.size()) fail("expected operand");
    if (s[pos] == '(') {
      ++pos;
      FracPoly v = expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(s[pos]))) {
      std::string num;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) num += s[pos++];
      // A slash directly between digit groups is a rational literal.
      size_t save = pos;
      if (pos < s.size() && s[pos] == '/' && pos + 1 < s.size() &&
          std::isdigit(static_cast<unsigned char>(s[pos + 1]))) {
        ++pos;
        num += '/';
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) num += s[pos++];
      } else {
        pos = save;
      }
      return constant(Cyclo(parse_rational(num)));
    }
    if (std::isalpha(static_cast<unsigned char>(s[pos])) || s[pos] == '_') {
      std::string name;
      while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
        name += s[pos++];
      if (auto idx = env.ring.vars->index_of(name)) {
        FracPoly f(env.ring.var(*idx));
        return f;
      }
      if (env.resolve) {
        if (auto r = env.resolve(name)) return *r;
      }
      if (name == "z") return constant(Cyclo::omega());
      if (name == "i") return constant(Cyclo::i());
      if (name == "s2") return constant(Cyclo::sqrt2());
      if (name == "s3") return constant(Cyclo::sqrt3());
      fail("unknown name '" + name + "'");
    }
    fail("unexpected character");
  }

  FracPoly factor() {
    FracPoly v = atom();
    // Attach the chart base eagerly so division by it works mid-expression.
    if (env.base && !v.base()) v = FracPoly(v.num(), 0, env.base);
    skip_ws();
    if (eat('^')) v = v.pow(parse_int());
    return v;
  }

  FracPoly term() {
    FracPoly v = factor();
    while (true) {
      skip_ws();
      if (eat('*')) {
        v *= factor();
      } else if (eat('/')) {
        v /= factor();
      } else {
        break;
      }
    }
    return v;
  }

  FracPoly expr() {
    skip_ws();
    bool neg = false;
    if (eat('-')) neg = true;
    else (void)eat('+');
    FracPoly v = term();
    if (neg) v = -v;
    while (true) {
      skip_ws();
      if (eat('+')) v += term();
      else if (eat('-')) v -= term();
      else break;
    }
    return v;
  }
};

}  // namespace

FracPoly parse_fracpoly(const ParseEnv& env, const std::string& text) {
  PolyParser p(env, text);
  FracPoly v = p.expr();
  p.skip_ws();
  if (p.pos != text.size()) p.fail("trailing input");
  if (env.base && !v.base()) return FracPoly(v.num(), 0, env.base);
  return v;
}

}  // namespace symsing

#include "symsing/cyclo.hpp"

#include <cctype>
#include <functional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace symsing {
namespace {

// Coordinates of z^k for k = 0..23, reduced modulo z^8 = z^4 - 1.
const std::array<std::array<Rational, 8>, 24>& zeta_table() {
  static const std::array<std::array<Rational, 8>, 24> table = [] {
    std::array<std::array<Rational, 8>, 24> t{};
    t[0][0] = 1;
    for (int k = 1; k < 24; ++k) {
      // Multiply t[k-1] by z, then fold z^8 back to z^4 - 1.
      std::array<Rational, 9> raw{};
      for (int j = 0; j < 8; ++j) raw[static_cast<size_t>(j) + 1] = t[k - 1][static_cast<size_t>(j)];
      if (sgn(raw[8]) != 0) {
        raw[4] += raw[8];
        raw[0] -= raw[8];
      }
      for (int j = 0; j < 8; ++j) t[k][static_cast<size_t>(j)] = raw[static_cast<size_t>(j)];
    }
    return t;
  }();
  return table;
}

void check(bool ok, const char* what) {
  if (!ok) throw std::logic_error(std::string("cyclo constant self-check failed: ") + what);
}

}  // namespace

Cyclo Cyclo::zeta_power(long k) {
  long r = k % 24;
  if (r < 0) r += 24;
  return Cyclo(zeta_table()[static_cast<size_t>(r)]);
}

const Cyclo& Cyclo::i() {
  static const Cyclo v = [] {
    Cyclo c = zeta_power(6);
    check(c * c == Cyclo(-1), "i^2 == -1");
    return c;
  }();
  return v;
}

const Cyclo& Cyclo::sqrt2() {
  static const Cyclo v = [] {
    Cyclo c = zeta_power(3) + zeta_power(21);
    check(c * c == Cyclo(2), "sqrt2^2 == 2");
    return c;
  }();
  return v;
}

const Cyclo& Cyclo::sqrt3() {
  static const Cyclo v = [] {
    Cyclo c = zeta_power(2) + zeta_power(22);
    check(c * c == Cyclo(3), "sqrt3^2 == 3");
    return c;
  }();
  return v;
}

const Cyclo& Cyclo::omega() {
  static const Cyclo v = [] {
    Cyclo c = zeta_power(1);
    check(c.pow(12) == Cyclo(-1) && c.pow(24) == Cyclo(1), "omega primitive 24th root");
    return c;
  }();
  return v;
}

const Cyclo& Cyclo::sigma() {
  static const Cyclo v = [] {
    Cyclo c = zeta_power(8);
    check(c != Cyclo(1) && c.pow(3) == Cyclo(1), "sigma primitive cube root");
    return c;
  }();
  return v;
}

bool Cyclo::is_zero() const {
  for (const auto& q : c_)
    if (sgn(q) != 0) return false;
  return true;
}

bool Cyclo::is_rational() const {
  for (int k = 1; k < 8; ++k)
    if (sgn(c_[static_cast<size_t>(k)]) != 0) return false;
  return true;
}

std::optional<Rational> Cyclo::as_rational() const {
  if (!is_rational()) return std::nullopt;
  return c_[0];
}

Cyclo Cyclo::conj() const {
  Cyclo out;
  for (int k = 0; k < 8; ++k) {
    const Rational& q = c_[static_cast<size_t>(k)];
    if (sgn(q) == 0) continue;
    const auto& img = zeta_table()[static_cast<size_t>((24 - k) % 24)];
    for (int j = 0; j < 8; ++j)
      if (sgn(img[static_cast<size_t>(j)]) != 0) out.c_[static_cast<size_t>(j)] += q * img[static_cast<size_t>(j)];
  }
  return out;
}

Cyclo Cyclo::operator-() const {
  Cyclo out = *this;
  for (auto& q : out.c_) q = -q;
  return out;
}

Cyclo& Cyclo::operator+=(const Cyclo& o) {
  for (int k = 0; k < 8; ++k) c_[static_cast<size_t>(k)] += o.c_[static_cast<size_t>(k)];
  return *this;
}

Cyclo& Cyclo::operator-=(const Cyclo& o) {
  for (int k = 0; k < 8; ++k) c_[static_cast<size_t>(k)] -= o.c_[static_cast<size_t>(k)];
  return *this;
}

Cyclo& Cyclo::operator*=(const Cyclo& o) {
  // Fast path: multiplication by a rational scalar.
  if (o.is_rational()) {
    const Rational& s = o.c_[0];
    if (sgn(s) == 0) {
      *this = Cyclo();
      return *this;
    }
    for (auto& q : c_) q *= s;
    return *this;
  }
  if (is_rational()) {
    const Rational s = c_[0];
    *this = o;
    if (sgn(s) == 0) *this = Cyclo();
    else
      for (auto& q : c_) q *= s;
    return *this;
  }
  std::array<Rational, 15> raw{};
  for (int a = 0; a < 8; ++a) {
    if (sgn(c_[static_cast<size_t>(a)]) == 0) continue;
    for (int b = 0; b < 8; ++b) {
      if (sgn(o.c_[static_cast<size_t>(b)]) == 0) continue;
      raw[static_cast<size_t>(a + b)] += c_[static_cast<size_t>(a)] * o.c_[static_cast<size_t>(b)];
    }
  }
  for (int k = 14; k >= 8; --k) {
    if (sgn(raw[static_cast<size_t>(k)]) == 0) continue;
    raw[static_cast<size_t>(k - 4)] += raw[static_cast<size_t>(k)];
    raw[static_cast<size_t>(k - 8)] -= raw[static_cast<size_t>(k)];
  }
  for (int k = 0; k < 8; ++k) c_[static_cast<size_t>(k)] = raw[static_cast<size_t>(k)];
  return *this;
}

Cyclo Cyclo::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero in Q(zeta_24)");
  if (is_rational()) return Cyclo(Rational(1) / c_[0]);
  // Column j of m is (this * z^j); solve m * x = e_0 by Gaussian elimination.
  std::array<std::array<Rational, 9>, 8> m{};
  for (int j = 0; j < 8; ++j) {
    Cyclo col = *this * zeta_power(j);
    for (int r = 0; r < 8; ++r) m[static_cast<size_t>(r)][static_cast<size_t>(j)] = col.c_[static_cast<size_t>(r)];
  }
  m[0][8] = 1;
  for (int col = 0, row = 0; col < 8 && row < 8; ++col) {
    int piv = -1;
    for (int r = row; r < 8; ++r)
      if (sgn(m[static_cast<size_t>(r)][static_cast<size_t>(col)]) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[static_cast<size_t>(piv)], m[static_cast<size_t>(row)]);
    const Rational p = m[static_cast<size_t>(row)][static_cast<size_t>(col)];
    for (int c = col; c <= 8; ++c) m[static_cast<size_t>(row)][static_cast<size_t>(c)] /= p;
    for (int r = 0; r < 8; ++r) {
      if (r == row || sgn(m[static_cast<size_t>(r)][static_cast<size_t>(col)]) == 0) continue;
      const Rational f = m[static_cast<size_t>(r)][static_cast<size_t>(col)];
      for (int c = col; c <= 8; ++c)
        m[static_cast<size_t>(r)][static_cast<size_t>(c)] -= f * m[static_cast<size_t>(row)][static_cast<size_t>(c)];
    }
    ++row;
  }
  Cyclo out;
  for (int r = 0; r < 8; ++r) out.c_[static_cast<size_t>(r)] = m[static_cast<size_t>(r)][8];
  if (!((*this) * out == Cyclo(1)))
    throw std::logic_error("inverse verification failed in Q(zeta_24)");
  return out;
}

int Cyclo::cmp(const Cyclo& a, const Cyclo& b) {
  for (int k = 0; k < 8; ++k) {
    int c = ::cmp(a.c_[static_cast<size_t>(k)], b.c_[static_cast<size_t>(k)]);
    if (c != 0) return c;
  }
  return 0;
}

Cyclo Cyclo::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Cyclo base = *this, acc = 1;
  while (e > 0) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

std::string Cyclo::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (int k = 7; k >= 0; --k) {
    const Rational& q = c_[static_cast<size_t>(k)];
    if (sgn(q) == 0) continue;
    Rational a = abs(q);
    if (first) {
      if (sgn(q) < 0) os << '-';
      first = false;
    } else {
      os << (sgn(q) < 0 ? " - " : " + ");
    }
    if (k == 0) {
      os << a.get_str();
    } else {
      if (a != 1) os << a.get_str() << '*';
      os << 'z';
      if (k > 1) os << '^' << k;
    }
  }
  if (first) return "0";
  return os.str();
}

namespace {

struct FieldParser {
  const std::string& s;
  size_t pos = 0;

  explicit FieldParser(const std::string& text) : s(text) {}

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("field expression parse error at offset " +
                                std::to_string(pos) + ": " + what + " in \"" + s + "\"");
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
      if (v > 1000000) fail("integer exponent too large");
      ++pos;
    }
    return neg ? -v : v;
  }

  Cyclo parse_factor() {
    skip_ws();
    if (pos >= s.size()) fail("expected factor");
    if (s[pos] == '(') {
      ++pos;
      Cyclo v = parse_expr();
      if (!eat(')')) fail("expected ')'");
      return apply_power(v);
    }
    if (std::isdigit(static_cast<unsigned char>(s[pos]))) {
      std::string num;
      while (pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '/')) {
        num += s[pos];
        ++pos;
      }
      return apply_power(Cyclo(parse_rational(num)));
    }
    // Symbol: z, i, s2, s3.
    std::string name;
    while (pos < s.size() &&
           (std::isalnum(static_cast<unsigned char>(s[pos])))) {
      name += s[pos];
      ++pos;
    }
    Cyclo base;
    if (name == "z") base = Cyclo::omega();
    else if (name == "i") base = Cyclo::i();
    else if (name == "s2") base = Cyclo::sqrt2();
    else if (name == "s3") base = Cyclo::sqrt3();
    else fail("unknown symbol '" + name + "'");
    return apply_power(base);
  }

  Cyclo apply_power(Cyclo base) {
    skip_ws();
    if (eat('^')) return base.pow(parse_int());
    return base;
  }

  Cyclo parse_term() {
    Cyclo v = parse_factor();
    while (true) {
      skip_ws();
      if (eat('*')) v *= parse_factor();
      else break;
    }
    return v;
  }

  Cyclo parse_expr() {
    skip_ws();
    bool neg = false;
    if (eat('-')) neg = true;
    else (void)eat('+');
    Cyclo v = parse_term();
    if (neg) v = -v;
    while (true) {
      skip_ws();
      if (eat('+')) v += parse_term();
      else if (eat('-')) v -= parse_term();
      else break;
    }
    return v;
  }
};

}  // namespace

Cyclo Cyclo::parse(const std::string& text) {
  FieldParser p(text);
  Cyclo v = p.parse_expr();
  p.skip_ws();
  if (p.pos != text.size()) p.fail("trailing input");
  return v;
}

size_t Cyclo::hash() const {
  size_t h = 1469598103934665603ull;
  auto mix = [&h](const std::string& s) {
    for (char ch : s) {
      h ^= static_cast<unsigned char>(ch);
      h *= 1099511628211ull;
    }
  };
  for (const auto& q : c_) {
    mix(q.get_str());
    mix("|");
  }
  return h;
}

std::ostream& operator<<(std::ostream& os, const Cyclo& v) { return os << v.to_string(); }

}  // namespace symsing

#pragma once

#include <array>
#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>

#include "symsing/rational.hpp"

namespace symsing {

// Element of the cyclotomic field Q(zeta_24), stored on the power basis
// 1, z, ..., z^7 modulo Phi_24(z) = z^8 - z^4 + 1 with rational coordinates.
// The stored form is canonical: two elements are equal iff their coordinate
// arrays are equal.
//
// The field contains the constants used throughout the toolkit:
//   i = z^6,  sqrt2 = z^3 + z^21,  sqrt3 = z^2 + z^22,  sigma = z^8.
class Cyclo {
 public:
  Cyclo() = default;
  Cyclo(long n) { c_[0] = n; }  // NOLINT: implicit by design
  Cyclo(const Rational& r) { c_[0] = r; }
  explicit Cyclo(std::array<Rational, 8> coords) : c_(std::move(coords)) {}

  // z^k for any integer k (reduced mod 24, then mod Phi_24).
  static Cyclo zeta_power(long k);

  // Named constants, each checked against its defining equation once at
  // first use (i^2 = -1, sqrt2^2 = 2, sqrt3^2 = 3, omega^24 = 1 primitive,
  // sigma^3 = 1 primitive).
  static const Cyclo& i();
  static const Cyclo& sqrt2();
  static const Cyclo& sqrt3();
  static const Cyclo& omega();
  static const Cyclo& sigma();

  const Rational& coord(int k) const { return c_[static_cast<size_t>(k)]; }

  bool is_zero() const;
  bool is_rational() const;
  std::optional<Rational> as_rational() const;
  bool is_real() const { return *this == conj(); }

  // Complex conjugation z -> z^{-1}; a ring automorphism of the field.
  Cyclo conj() const;

  // Multiplicative inverse via an exact 8x8 rational solve.
  // Throws std::domain_error on zero.
  Cyclo inverse() const;

  Cyclo operator-() const;
  Cyclo& operator+=(const Cyclo& o);
  Cyclo& operator-=(const Cyclo& o);
  Cyclo& operator*=(const Cyclo& o);
  Cyclo& operator/=(const Cyclo& o) { return *this *= o.inverse(); }

  friend Cyclo operator+(Cyclo a, const Cyclo& b) { return a += b; }
  friend Cyclo operator-(Cyclo a, const Cyclo& b) { return a -= b; }
  friend Cyclo operator*(Cyclo a, const Cyclo& b) { return a *= b; }
  friend Cyclo operator/(Cyclo a, const Cyclo& b) { return a /= b; }

  friend bool operator==(const Cyclo& a, const Cyclo& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Cyclo& a, const Cyclo& b) { return !(a == b); }

  // Deterministic total order on canonical forms (for tie-breaking only;
  // carries no arithmetic meaning).
  static int cmp(const Cyclo& a, const Cyclo& b);

  Cyclo pow(long e) const;  // e may be negative for nonzero elements

  // Canonical text form, e.g. "1/2*z^6 - 3*z^2"; parse(to_string()) is exact.
  std::string to_string() const;

  // Accepts rational-coefficient expressions in z ("1/2*z^6 - 3*z^2") and
  // additionally the symbols i, s2, s3 for the named constants.
  static Cyclo parse(const std::string& text);

  size_t hash() const;

 private:
  std::array<Rational, 8> c_{};
};

std::ostream& operator<<(std::ostream& os, const Cyclo& v);

}  // namespace symsing

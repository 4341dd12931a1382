#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "cdtwist/rational.hpp"

namespace cdtwist {

/// Element a + b*sqrt(d) of the quadratic extension Q(sqrt(d)), with the
/// involution sigma(a + b*sqrt(d)) = a - b*sqrt(d) (the nontrivial field
/// automorphism fixing Q).
///
/// The radicand d is carried per value; d = 0 marks a plain rational with no
/// field context yet, so zeros and ones are context-free and arithmetic
/// adopts the radicand of whichever operand has one.  Mixing two different
/// nonzero radicands is a field-context error.
class QuadExt {
 public:
  QuadExt() = default;
  QuadExt(const Rational& a) : a_(a) {}  // NOLINT(google-explicit-constructor)
  QuadExt(long n) : a_(n) {}             // NOLINT(google-explicit-constructor)
  QuadExt(int n) : a_(n) {}              // NOLINT(google-explicit-constructor)
  QuadExt(Rational a, Rational b, long long d);

  /// The generator sqrt(d) itself; validates that d is not a rational square.
  static QuadExt sqrt_of(long long d);

  /// Throws unless d is a valid radicand (nonzero, not a perfect square).
  static void validate_radicand(long long d);

  static QuadExt zero() { return QuadExt(); }
  static QuadExt one() { return QuadExt(1); }

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  long long d() const { return d_; }

  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  bool is_one() const { return a_.is_one() && b_.is_zero(); }
  bool is_rational() const { return b_.is_zero(); }

  /// The involution sigma: a + b*sqrt(d) -> a - b*sqrt(d).
  QuadExt sigma() const { return QuadExt(a_, -b_, d_); }

  /// Field norm down to Q: x * sigma(x) = a^2 - d*b^2.
  Rational norm_to_base() const;

  /// Multiplicative inverse, computed as sigma(x) / norm(x).
  QuadExt inverse() const;

  QuadExt operator-() const { return QuadExt(-a_, -b_, d_); }
  QuadExt& operator+=(const QuadExt& o);
  QuadExt& operator-=(const QuadExt& o);
  QuadExt& operator*=(const QuadExt& o);
  QuadExt& operator/=(const QuadExt& o);

  friend QuadExt operator+(QuadExt x, const QuadExt& y) { return x += y; }
  friend QuadExt operator-(QuadExt x, const QuadExt& y) { return x -= y; }
  friend QuadExt operator*(QuadExt x, const QuadExt& y) { return x *= y; }
  friend QuadExt operator/(QuadExt x, const QuadExt& y) { return x /= y; }

  friend bool operator==(const QuadExt& x, const QuadExt& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }
  friend bool operator!=(const QuadExt& x, const QuadExt& y) { return !(x == y); }

  /// Canonical text form: "0", "3/2", "sqrt(2)", "-2*sqrt(2)", "1-sqrt(2)".
  std::string str() const;

  friend std::ostream& operator<<(std::ostream& os, const QuadExt& x);

 private:
  // Returns the shared radicand of two operands, throwing on a mismatch.
  static long long unify(const QuadExt& x, const QuadExt& y);

  Rational a_;
  Rational b_;
  long long d_ = 0;
};

}  // namespace cdtwist

#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "cdtwist/rational.hpp"

namespace cdtwist {

/// Monomial in the doubling parameters g1, g2, ...: a map from parameter
/// index (1-based) to a positive exponent.  The empty map is the monomial 1.
/// Basis products only ever produce squarefree monomials, but products of
/// general elements raise higher powers, so full exponents are stored.
class GammaMonomial {
 public:
  GammaMonomial() = default;

  /// Monomial g_m for a single parameter index m >= 1.
  static GammaMonomial param(int m);

  /// Squarefree monomial from a bitmask (bit m-1 set means g_m appears).
  static GammaMonomial from_mask(std::uint64_t mask);

  bool is_one() const { return exps_.empty(); }
  bool squarefree() const;

  /// Squarefree monomial back to its bitmask; throws if any exponent > 1.
  std::uint64_t mask() const;

  /// Largest parameter index used, 0 for the constant monomial.
  int max_param() const { return exps_.empty() ? 0 : exps_.rbegin()->first; }

  const std::map<int, int>& exponents() const { return exps_; }

  GammaMonomial operator*(const GammaMonomial& o) const;

  friend bool operator==(const GammaMonomial& x, const GammaMonomial& y) {
    return x.exps_ == y.exps_;
  }
  friend bool operator!=(const GammaMonomial& x, const GammaMonomial& y) { return !(x == y); }
  friend bool operator<(const GammaMonomial& x, const GammaMonomial& y) {
    return x.exps_ < y.exps_;
  }

  /// "1", "g1", "g1*g3", "g2^2".
  std::string str() const;

 private:
  std::map<int, int> exps_;
};

/// Sparse polynomial in g1, g2, ... over the rationals, in canonical
/// zero-pruned form so that equality is structural.  This is the scalar type
/// used when a doubling tower is built with symbolic parameters.
class SparsePoly {
 public:
  SparsePoly() = default;
  SparsePoly(const Rational& c) {  // NOLINT(google-explicit-constructor)
    if (!c.is_zero()) terms_[GammaMonomial()] = c;
  }
  SparsePoly(int c) : SparsePoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  SparsePoly(const GammaMonomial& m, const Rational& c = Rational::one()) {
    if (!c.is_zero()) terms_[m] = c;
  }

  static SparsePoly zero() { return SparsePoly(); }
  static SparsePoly one() { return SparsePoly(Rational::one()); }
  static SparsePoly param(int m) { return SparsePoly(GammaMonomial::param(m)); }

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;

  /// True iff the polynomial is c * m for a single monomial m.
  bool is_term() const { return terms_.size() == 1; }

  const std::map<GammaMonomial, Rational>& terms() const { return terms_; }

  /// Largest parameter index appearing in any term, 0 if none.
  int max_param() const;

  SparsePoly operator-() const;
  SparsePoly& operator+=(const SparsePoly& o);
  SparsePoly& operator-=(const SparsePoly& o);
  SparsePoly& operator*=(const SparsePoly& o) { return *this = *this * o; }
  SparsePoly operator*(const SparsePoly& o) const;

  friend SparsePoly operator+(SparsePoly x, const SparsePoly& y) { return x += y; }
  friend SparsePoly operator-(SparsePoly x, const SparsePoly& y) { return x -= y; }

  friend bool operator==(const SparsePoly& x, const SparsePoly& y) {
    return x.terms_ == y.terms_;
  }
  friend bool operator!=(const SparsePoly& x, const SparsePoly& y) { return !(x == y); }

  /// Ring-homomorphic substitution g_m := gammas[m-1].  Every parameter used
  /// by the polynomial must be provided, and every provided value must be
  /// nonzero (a zero doubling parameter is never admissible).
  Rational eval(const std::vector<Rational>& gammas) const;

  /// "0", "1", "-g1*g2", "g1 - 2*g2", "g1^2 + 1/2".
  std::string str() const;

  friend std::ostream& operator<<(std::ostream& os, const SparsePoly& p);

 private:
  std::map<GammaMonomial, Rational> terms_;
};

}  // namespace cdtwist

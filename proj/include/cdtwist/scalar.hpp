#pragma once

#include <string>

#include "cdtwist/gamma_poly.hpp"
#include "cdtwist/quadext.hpp"
#include "cdtwist/rational.hpp"

namespace cdtwist {

/// Uniform interface over the three exact scalar kinds used by the doubling
/// tower templates.  `conj` is the scalar involution the base field carries
/// into a doubling: the identity on Q and on polynomial scalars, and sigma on
/// a quadratic extension (which is what makes E + E a twisted doubling).
template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
  static Rational zero() { return Rational::zero(); }
  static Rational one() { return Rational::one(); }
  static Rational conj(const Rational& x) { return x; }
  static bool is_zero(const Rational& x) { return x.is_zero(); }
  static std::string str(const Rational& x) { return x.str(); }
  static constexpr const char* kind_name = "rational";
};

template <>
struct ScalarTraits<QuadExt> {
  static QuadExt zero() { return QuadExt::zero(); }
  static QuadExt one() { return QuadExt::one(); }
  static QuadExt conj(const QuadExt& x) { return x.sigma(); }
  static bool is_zero(const QuadExt& x) { return x.is_zero(); }
  static std::string str(const QuadExt& x) { return x.str(); }
  static constexpr const char* kind_name = "quadratic-extension";
};

template <>
struct ScalarTraits<SparsePoly> {
  static SparsePoly zero() { return SparsePoly::zero(); }
  static SparsePoly one() { return SparsePoly::one(); }
  static SparsePoly conj(const SparsePoly& x) { return x; }
  static bool is_zero(const SparsePoly& x) { return x.is_zero(); }
  static std::string str(const SparsePoly& x) { return x.str(); }
  static constexpr const char* kind_name = "symbolic";
};

}  // namespace cdtwist

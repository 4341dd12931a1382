#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cdtwist/gamma_poly.hpp"
#include "cdtwist/rational.hpp"

namespace cdtwist {

/// Levels above 62 would overflow the 64-bit index space used throughout.
inline constexpr int kMaxLevel = 62;

/// Index of a basis vector f_p of the level-t doubling tower.  The binary
/// digits of `value` are read i_t i_{t-1} ... i_1 with i_1 the least
/// significant bit; bit m tells whether the vector came from the second half
/// of the m-th doubling, which is exactly when parameter g_m can appear in a
/// product.
struct BasisIndex {
  std::uint64_t value = 0;
  int level = 0;

  BasisIndex() = default;
  BasisIndex(std::uint64_t v, int t);
};

/// One basis-times-basis product: f_p f_q = sign * (product of g_m over the
/// set bits of gamma_mask) * f_index.
struct TwistTerm {
  int sign = 1;                  // +1 or -1
  std::uint64_t gamma_mask = 0;  // bit m-1 set  <=>  g_m appears
  std::uint64_t index = 0;       // p XOR q

  friend bool operator==(const TwistTerm& a, const TwistTerm& b) {
    return a.sign == b.sign && a.gamma_mask == b.gamma_mask && a.index == b.index;
  }

  /// "+g1 * f6", "-g2*g3 * f1", "+1 * f0".
  std::string str() const;
};

/// Group operation on basis indices: f_p f_q lands on f_{p XOR q}.  Both
/// indices must live at the same level.
BasisIndex xor_index(const BasisIndex& p, const BasisIndex& q);

/// Bitmask of doubling parameters appearing in f_p f_q: p AND q.
std::uint64_t gamma_mask_of(const BasisIndex& p, const BasisIndex& q);

/// The sign of f_p f_q at level t, by direct recursion on the doubling
/// layers (depth t, no tables).  Levels 0 and 1 are identically +1.
int theta(int t, std::uint64_t p, std::uint64_t q);

/// Dense sign table for one level, laid out as table[p * 2^t + q]; only
/// sensible for small t (exhaustive verification), hence the hard cap t <= 8.
std::vector<signed char> theta_table(int t);

/// The full fast-path product rule: sign from theta, monomial from p AND q,
/// index from p XOR q.
TwistTerm basis_product(int t, std::uint64_t p, std::uint64_t q);

/// One step of the theta recursion trace: the sign accumulated so far and
/// the subproblem it was reduced to.
struct ThetaStep {
  int accumulated_sign;
  int level;
  std::uint64_t p;
  std::uint64_t q;
};

/// Full reduction trace of theta(t, p, q) down to a decided base case, e.g.
/// "theta_3(3,5) = -theta_2(3,1) = +theta_1(1,1) = +1".
struct ThetaChain {
  std::vector<ThetaStep> steps;  // steps[0] is the original call, sign +1
  int value;                     // final sign

  std::string str() const;
};

ThetaChain theta_chain(int t, std::uint64_t p, std::uint64_t q);

/// Full twist coefficient of f_p f_q as a symbolic polynomial (always a
/// single signed squarefree monomial).
SparsePoly alpha_eval(int t, std::uint64_t p, std::uint64_t q);

/// Twist coefficient evaluated at concrete parameters; `gammas` must supply
/// all t values and contain no zeros.
Rational alpha_eval(int t, std::uint64_t p, std::uint64_t q,
                    const std::vector<Rational>& gammas);

/// The same twist term computed by the case-by-case recursion on doubling
/// layers (the derivation route), rather than by the closed sign/AND/XOR
/// rule.  Used to cross-check that the two routes agree.
TwistTerm alpha_recursive(int t, std::uint64_t p, std::uint64_t q);

}  // namespace cdtwist

#include "cdtwist/twist.hpp"

#include <sstream>
#include <stdexcept>

namespace cdtwist {

namespace {

void check_level(int t) {
  if (t < 0 || t > kMaxLevel) {
    throw std::out_of_range("level must be in [0, " + std::to_string(kMaxLevel) +
                            "], got " + std::to_string(t));
  }
}

void check_index(int t, std::uint64_t v, const char* which) {
  check_level(t);
  if (t < 64 && v >= (std::uint64_t(1) << t)) {
    throw std::out_of_range(std::string(which) + " index " + std::to_string(v) +
                            " out of range for level " + std::to_string(t));
  }
}

}  // namespace

BasisIndex::BasisIndex(std::uint64_t v, int t) : value(v), level(t) {
  check_index(t, v, "basis");
}

BasisIndex xor_index(const BasisIndex& p, const BasisIndex& q) {
  if (p.level != q.level) {
    throw std::invalid_argument("basis indices live at different levels: " +
                                std::to_string(p.level) + " vs " + std::to_string(q.level));
  }
  return BasisIndex(p.value ^ q.value, p.level);
}

std::uint64_t gamma_mask_of(const BasisIndex& p, const BasisIndex& q) {
  if (p.level != q.level) {
    throw std::invalid_argument("basis indices live at different levels: " +
                                std::to_string(p.level) + " vs " + std::to_string(q.level));
  }
  return p.value & q.value;
}

// The sign recursion, one doubling layer at a time, run as an iterative
// reduction with an accumulated sign.  The case split follows how f_p and
// f_q sit in the top doubling E_t = E_{t-1} + E_{t-1}: below the halfway
// point H = 2^(t-1) a vector is (f, 0), at or above it is (0, f).  Subcases
// touching the identity f_0 decide the subproblem outright as +1 or -1; the
// others reduce to level t-1, possibly flipping the sign.
int theta(int t, std::uint64_t p, std::uint64_t q) {
  check_index(t, p, "left");
  check_index(t, q, "right");
  int sign = 1;
  while (t > 1) {
    const std::uint64_t H = std::uint64_t(1) << (t - 1);
    --t;
    if (p < H && q < H) continue;  // both in the low copy: unchanged one level down
    if (p < H) {                   // f_p (0, f_r)
      const std::uint64_t r = q - H;
      if (p == 0 || r == 0) return sign;  // identity row, or f_p (0,1) = (0, f_p)
      if (r == p) { q = p; continue; }    // f_p (0,f_p) = (0, f_p^2)
      sign = -sign;
      q = r;
      continue;
    }
    const std::uint64_t r = p - H;
    if (q < H) {               // (0, f_r) f_q
      if (q == 0) return sign;  // identity column
      sign = -sign;             // conj(f_q) = -f_q; covers r == q as well
      p = r;
      continue;
    }
    const std::uint64_t s = q - H;  // (0, f_r)(0, f_s) = (g conj(f_s) f_r, 0)
    if (s == 0) return sign;        // conj(f_0) = f_0, subproduct is +g f_r
    if (r == 0) return -sign;       // conj(f_s) = -f_s against f_0
    if (r == s) { sign = -sign; p = q = r; continue; }
    p = r;
    q = s;
  }
  return sign;  // theta_0 and theta_1 are identically +1
}

std::vector<signed char> theta_table(int t) {
  if (t < 0 || t > 8) throw std::out_of_range("dense sign table limited to levels 0..8");
  const std::uint64_t n = std::uint64_t(1) << t;
  std::vector<signed char> table(n * n);
  for (std::uint64_t p = 0; p < n; ++p) {
    for (std::uint64_t q = 0; q < n; ++q) {
      table[p * n + q] = static_cast<signed char>(theta(t, p, q));
    }
  }
  return table;
}

TwistTerm basis_product(int t, std::uint64_t p, std::uint64_t q) {
  check_index(t, p, "left");
  check_index(t, q, "right");
  return TwistTerm{theta(t, p, q), p & q, p ^ q};
}

std::string TwistTerm::str() const {
  std::ostringstream os;
  os << (sign < 0 ? "-" : "+");
  os << GammaMonomial::from_mask(gamma_mask).str();
  os << " * f" << index;
  return os.str();
}

ThetaChain theta_chain(int t, std::uint64_t p, std::uint64_t q) {
  check_index(t, p, "left");
  check_index(t, q, "right");
  ThetaChain chain;
  chain.steps.push_back({1, t, p, q});
  int acc = 1;
  while (true) {
    const ThetaStep& cur = chain.steps.back();
    if (cur.level <= 1 || cur.p == 0 || cur.q == 0) {
      chain.value = acc;  // theta of a base level or of an identity row/column
      return chain;
    }
    const std::uint64_t H = std::uint64_t(1) << (cur.level - 1);
    int factor = 1;
    std::uint64_t np;
    std::uint64_t nq;
    if (cur.p < H && cur.q < H) {
      np = cur.p;
      nq = cur.q;
    } else if (cur.p < H) {
      const std::uint64_t r = cur.q - H;
      np = cur.p;
      if (r == 0) {
        nq = 0;
      } else if (r == cur.p) {
        nq = cur.p;
      } else {
        factor = -1;
        nq = r;
      }
    } else if (cur.q < H) {
      const std::uint64_t r = cur.p - H;
      factor = -1;
      np = r;
      nq = cur.q;
    } else {
      const std::uint64_t r = cur.p - H;
      const std::uint64_t s = cur.q - H;
      np = r;
      nq = s;
      if (r == s && r != 0) factor = -1;
      if (r == 0 && s != 0) factor = -1;
    }
    acc *= factor;
    chain.steps.push_back({acc, cur.level - 1, np, nq});
  }
}

std::string ThetaChain::str() const {
  std::ostringstream os;
  bool seen_minus = false;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const ThetaStep& s = steps[i];
    if (i > 0) {
      os << " = ";
      if (s.accumulated_sign < 0) {
        os << "-";
        seen_minus = true;
      } else if (seen_minus) {
        os << "+";
      }
    }
    os << "theta_" << s.level << "(" << s.p << "," << s.q << ")";
  }
  os << " = " << (value < 0 ? "-1" : "+1");
  return os.str();
}

SparsePoly alpha_eval(int t, std::uint64_t p, std::uint64_t q) {
  TwistTerm term = basis_product(t, p, q);
  SparsePoly poly(GammaMonomial::from_mask(term.gamma_mask));
  return term.sign < 0 ? -poly : poly;
}

Rational alpha_eval(int t, std::uint64_t p, std::uint64_t q,
                    const std::vector<Rational>& gammas) {
  if (static_cast<int>(gammas.size()) != t) {
    throw std::invalid_argument("expected " + std::to_string(t) + " parameter values, got " +
                                std::to_string(gammas.size()));
  }
  return alpha_eval(t, p, q).eval(gammas);
}

// Case-by-case derivation route.  The sign logic matches theta(); the
// monomial bookkeeping is carried explicitly: descending into the top layer
// contributes g_t exactly when both vectors came from the high copy.
TwistTerm alpha_recursive(int t, std::uint64_t p, std::uint64_t q) {
  check_index(t, p, "left");
  check_index(t, q, "right");
  const std::uint64_t index = p ^ q;
  if (t == 0) return TwistTerm{1, 0, 0};
  const std::uint64_t H = std::uint64_t(1) << (t - 1);
  if (p < H && q < H) {
    TwistTerm sub = alpha_recursive(t - 1, p, q);
    return TwistTerm{sub.sign, sub.gamma_mask, index};
  }
  if (p < H) {
    const std::uint64_t r = q - H;
    if (p == 0 || r == 0) return TwistTerm{1, 0, index};
    if (r == p) {
      TwistTerm sub = alpha_recursive(t - 1, p, p);
      return TwistTerm{sub.sign, sub.gamma_mask, index};
    }
    TwistTerm sub = alpha_recursive(t - 1, p, r);
    return TwistTerm{-sub.sign, sub.gamma_mask, index};
  }
  const std::uint64_t r = p - H;
  if (q < H) {
    if (q == 0) return TwistTerm{1, 0, index};
    TwistTerm sub = alpha_recursive(t - 1, r, q);
    return TwistTerm{-sub.sign, sub.gamma_mask, index};
  }
  const std::uint64_t s = q - H;
  const std::uint64_t top = H;  // contributes g_t: bit t-1 of the mask
  if (r == 0 && s == 0) return TwistTerm{1, top, index};
  if (s == 0) return TwistTerm{1, top, index};
  if (r == 0) return TwistTerm{-1, top, index};
  if (r == s) {
    TwistTerm sub = alpha_recursive(t - 1, r, r);
    return TwistTerm{-sub.sign, sub.gamma_mask | top, index};
  }
  TwistTerm sub = alpha_recursive(t - 1, r, s);
  return TwistTerm{sub.sign, sub.gamma_mask | top, index};
}

}  // namespace cdtwist

#include "cdtwist/gamma_poly.hpp"

#include <ostream>
#include <sstream>

namespace cdtwist {

GammaMonomial GammaMonomial::param(int m) {
  if (m < 1) throw std::invalid_argument("parameter index must be >= 1");
  GammaMonomial g;
  g.exps_[m] = 1;
  return g;
}

GammaMonomial GammaMonomial::from_mask(std::uint64_t mask) {
  GammaMonomial g;
  for (int m = 1; mask != 0; ++m, mask >>= 1) {
    if (mask & 1u) g.exps_[m] = 1;
  }
  return g;
}

bool GammaMonomial::squarefree() const {
  for (const auto& [m, e] : exps_) {
    if (e != 1) return false;
  }
  return true;
}

std::uint64_t GammaMonomial::mask() const {
  std::uint64_t mask = 0;
  for (const auto& [m, e] : exps_) {
    if (e != 1 || m > 64) throw std::domain_error("monomial is not squarefree: " + str());
    mask |= std::uint64_t(1) << (m - 1);
  }
  return mask;
}

GammaMonomial GammaMonomial::operator*(const GammaMonomial& o) const {
  GammaMonomial out = *this;
  for (const auto& [m, e] : o.exps_) out.exps_[m] += e;
  return out;
}

std::string GammaMonomial::str() const {
  if (exps_.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, e] : exps_) {
    if (!first) os << "*";
    first = false;
    os << "g" << m;
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

bool SparsePoly::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first.is_one() &&
         terms_.begin()->second.is_one();
}

int SparsePoly::max_param() const {
  int mx = 0;
  for (const auto& [m, c] : terms_) mx = std::max(mx, m.max_param());
  return mx;
}

SparsePoly SparsePoly::operator-() const {
  SparsePoly out;
  for (const auto& [m, c] : terms_) out.terms_[m] = -c;
  return out;
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& o) {
  for (const auto& [m, c] : o.terms_) {
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(m, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  return *this;
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& o) { return *this += -o; }

SparsePoly SparsePoly::operator*(const SparsePoly& o) const {
  SparsePoly out;
  for (const auto& [m1, c1] : terms_) {
    for (const auto& [m2, c2] : o.terms_) {
      GammaMonomial m = m1 * m2;
      Rational c = c1 * c2;
      auto it = out.terms_.find(m);
      if (it == out.terms_.end()) {
        if (!c.is_zero()) out.terms_.emplace(std::move(m), std::move(c));
      } else {
        it->second += c;
        if (it->second.is_zero()) out.terms_.erase(it);
      }
    }
  }
  return out;
}

Rational SparsePoly::eval(const std::vector<Rational>& gammas) const {
  for (std::size_t i = 0; i < gammas.size(); ++i) {
    if (gammas[i].is_zero()) {
      throw std::invalid_argument("doubling parameter g" + std::to_string(i + 1) +
                                  " must be nonzero");
    }
  }
  Rational total;
  for (const auto& [m, c] : terms_) {
    Rational term = c;
    for (const auto& [idx, e] : m.exponents()) {
      if (idx > static_cast<int>(gammas.size())) {
        throw std::invalid_argument("no value supplied for parameter g" + std::to_string(idx));
      }
      for (int k = 0; k < e; ++k) term *= gammas[idx - 1];
    }
    total += term;
  }
  return total;
}

std::string SparsePoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational mag = c.sign() < 0 ? -c : c;
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    if (m.is_one()) {
      os << mag.str();
    } else {
      if (!mag.is_one()) os << mag.str() << "*";
      os << m.str();
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const SparsePoly& p) { return os << p.str(); }

}  // namespace cdtwist

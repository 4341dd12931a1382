#include "cdtwist/quadext.hpp"

#include <ostream>
#include <sstream>

namespace cdtwist {

QuadExt::QuadExt(Rational a, Rational b, long long d) : a_(std::move(a)), b_(std::move(b)), d_(d) {
  if (b_.is_zero()) {
    d_ = 0;  // canonical: rationals carry no field context
  } else if (d_ != 0) {
    validate_radicand(d_);
  } else {
    throw std::invalid_argument("sqrt coefficient given without a radicand");
  }
}

void QuadExt::validate_radicand(long long d) {
  if (d == 0) throw std::invalid_argument("radicand must be nonzero");
  if (d > 0 && is_rational_square(Rational(static_cast<long>(d)))) {
    throw std::invalid_argument("radicand " + std::to_string(d) +
                                " is a perfect square; the extension would be trivial");
  }
}

QuadExt QuadExt::sqrt_of(long long d) {
  validate_radicand(d);
  return QuadExt(Rational::zero(), Rational::one(), d);
}

long long QuadExt::unify(const QuadExt& x, const QuadExt& y) {
  if (x.d_ == 0) return y.d_;
  if (y.d_ == 0 || y.d_ == x.d_) return x.d_;
  throw std::invalid_argument("quadratic field mismatch: sqrt(" + std::to_string(x.d_) +
                              ") vs sqrt(" + std::to_string(y.d_) + ")");
}

QuadExt& QuadExt::operator+=(const QuadExt& o) {
  d_ = unify(*this, o);
  a_ += o.a_;
  b_ += o.b_;
  if (b_.is_zero()) d_ = 0;
  return *this;
}

QuadExt& QuadExt::operator-=(const QuadExt& o) {
  d_ = unify(*this, o);
  a_ -= o.a_;
  b_ -= o.b_;
  if (b_.is_zero()) d_ = 0;
  return *this;
}

QuadExt& QuadExt::operator*=(const QuadExt& o) {
  long long d = unify(*this, o);
  Rational rad(static_cast<long>(d));
  Rational na = a_ * o.a_ + rad * b_ * o.b_;
  Rational nb = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(na);
  b_ = std::move(nb);
  d_ = b_.is_zero() ? 0 : d;
  return *this;
}

Rational QuadExt::norm_to_base() const {
  return a_ * a_ - Rational(static_cast<long>(d_)) * b_ * b_;
}

QuadExt QuadExt::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  Rational n = norm_to_base();
  // In Q(sqrt(d)) with d not a square the norm of a nonzero element is nonzero.
  QuadExt s = sigma();
  return QuadExt(s.a_ / n, s.b_ / n, d_);
}

QuadExt& QuadExt::operator/=(const QuadExt& o) { return *this *= o.inverse(); }

std::string QuadExt::str() const {
  if (b_.is_zero()) return a_.str();
  std::ostringstream os;
  std::string root = "sqrt(" + std::to_string(d_) + ")";
  if (!a_.is_zero()) {
    os << a_.str();
    os << (b_.sign() < 0 ? "-" : "+");
    Rational mag = b_.sign() < 0 ? -b_ : b_;
    if (!mag.is_one()) os << mag.str() << "*";
    os << root;
  } else {
    if (b_.is_one()) {
      os << root;
    } else if ((-b_).is_one()) {
      os << "-" << root;
    } else {
      os << b_.str() << "*" << root;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const QuadExt& x) { return os << x.str(); }

}  // namespace cdtwist

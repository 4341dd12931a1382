#include "cdtwist/rational.hpp"

#include <ostream>

namespace cdtwist {

Rational Rational::parse(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  mpq_class q;
  if (q.set_str(text, 10) != 0) {
    throw std::invalid_argument("bad rational literal: '" + text + "'");
  }
  if (q.get_den() == 0) {
    throw std::domain_error("rational with zero denominator: '" + text + "'");
  }
  q.canonicalize();
  return Rational(q);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.v_.get_str();
}

bool is_rational_square(const Rational& q) {
  if (q.sign() < 0) return false;
  if (q.is_zero()) return true;
  mpz_class num = q.num();
  mpz_class den = q.den();
  return mpz_perfect_square_p(num.get_mpz_t()) != 0 &&
         mpz_perfect_square_p(den.get_mpz_t()) != 0;
}

}  // namespace cdtwist

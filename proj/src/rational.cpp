#include "lcmsim/rational.hpp"

namespace lcmsim {

Rational Rational::parse(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("Rational::parse: empty string");
  auto slash = s.find('/');
  mpz_class num, den(1);
  std::string num_part = (slash == std::string::npos) ? s : s.substr(0, slash);
  if (mpz_set_str(num.get_mpz_t(), num_part.c_str(), 10) != 0)
    throw std::invalid_argument("Rational::parse: bad numerator in '" + s + "'");
  if (slash != std::string::npos) {
    std::string den_part = s.substr(slash + 1);
    if (den_part.empty() ||
        mpz_set_str(den.get_mpz_t(), den_part.c_str(), 10) != 0)
      throw std::invalid_argument("Rational::parse: bad denominator in '" + s + "'");
    if (den == 0) throw std::domain_error("Rational::parse: zero denominator");
  }
  return Rational(num, den);
}

std::string Rational::str() const {
  // Always "num/den", so serialized forms are uniform and diffable.
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::optional<Rational> sqrt_exact(const Rational& x) {
  if (x.sign() < 0) return std::nullopt;
  mpz_class n = x.num(), d = x.den();
  if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return std::nullopt;
  if (mpz_perfect_square_p(d.get_mpz_t()) == 0) return std::nullopt;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  return Rational(rn, rd);
}

}  // namespace lcmsim

#include "dgahom/rational.hpp"

#include <cstdlib>

#include "dgahom/error.hpp"

namespace dgahom {

Rational rational_pow(const Rational& base, long exponent) {
  if (exponent < 0) {
    if (is_zero(base)) throw Error(ErrorKind::PreconditionViolated, "zero raised to a negative power");
    return rational_pow(Rational(1) / base, -exponent);
  }
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  Rational out(num, den);
  out.canonicalize();
  return out;
}

Rational parse_rational(const std::string& text) {
  Rational q;
  if (q.set_str(text, 10) != 0) throw Error(ErrorKind::Parse, "not a rational number: " + text);
  if (sgn(q.get_den()) == 0) throw Error(ErrorKind::Parse, "zero denominator: " + text);
  q.canonicalize();
  return q;
}

}  // namespace dgahom

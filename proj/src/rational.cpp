#include "tornheim/arith/rational.hpp"

#include <stdexcept>

#include "tornheim/error.hpp"

namespace tornheim {

Rational make_rational(long num, long den) {
  if (den == 0) throw UsageError("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational pow(const Rational& base, long exponent) {
  if (exponent < 0) {
    if (base == 0) throw DomainError("zero to a negative power");
    Rational inv = 1 / base;
    return pow(inv, -exponent);
  }
  BigInt num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  Rational out(num, den);
  out.canonicalize();
  return out;
}

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(std::string_view text) {
  Rational q;
  if (text.empty() || q.set_str(std::string(text), 10) != 0)
    throw UsageError("malformed rational: " + std::string(text));
  if (q.get_den() == 0) throw UsageError("zero denominator: " + std::string(text));
  q.canonicalize();
  return q;
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

Rational mod_one(const Rational& q) {
  BigInt floor_part;
  mpz_fdiv_q(floor_part.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  Rational r = q - Rational(floor_part);
  r.canonicalize();
  return r;
}

}  // namespace tornheim

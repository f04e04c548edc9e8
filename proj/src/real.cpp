#include "tornheim/numeric/real.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <sstream>

#include "tornheim/error.hpp"

namespace tornheim::numeric {

int Precision::tolerance_digits() const { return static_cast<int>(std::ceil(-std::log10(tolerance) - 1e-9)); }

void Precision::validate() const {
  if (!(tolerance > 0 && tolerance < 1)) throw UsageError("tolerance must lie in (0, 1)");
  if (digits < tolerance_digits() + 10)
    throw UsageError("precision of " + std::to_string(digits) + " digits is too low for tolerance 1e-" +
                     std::to_string(tolerance_digits()) + " (need at least " +
                     std::to_string(tolerance_digits() + 10) + ")");
}

Precision Precision::from_env() {
  Precision p;
  if (const char* env = std::getenv("TORNHEIM_PREC"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (*end != '\0' || v < 1 || v > 10000) throw UsageError(std::string("TORNHEIM_PREC is not a digit count: ") + env);
    p.digits = static_cast<int>(v);
  }
  return p;
}

PrecisionScope::PrecisionScope(int digits) : active_(omp_in_parallel() == 0), saved_(Real::default_precision()) {
  if (active_) Real::default_precision(static_cast<unsigned>(digits));
}

PrecisionScope::~PrecisionScope() {
  if (active_) Real::default_precision(saved_);
}

Real to_real(const BigInt& z) { return Real(z.get_str()); }

Real to_real(const Rational& q) { return to_real(q.get_num()) / to_real(q.get_den()); }

std::string to_string(const Real& x, int digits) {
  return x.str(static_cast<std::streamsize>(std::max(digits - 1, 0)), std::ios_base::scientific);
}

Real pow10_neg(int e) { return boost::multiprecision::pow(Real(10), -e); }

}  // namespace tornheim::numeric

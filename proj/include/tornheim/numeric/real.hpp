#pragma once

#include <boost/multiprecision/mpfr.hpp>
#include <string>

#include "tornheim/arith/rational.hpp"

namespace tornheim::numeric {

using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                           boost::multiprecision::et_off>;

/// Working precision in decimal digits and the relative tolerance identities
/// are checked against.
struct Precision {
  int digits = 30;
  double tolerance = 1e-10;

  /// ceil(-log10(tolerance)).
  int tolerance_digits() const;
  /// Throws UsageError unless digits >= tolerance_digits() + 10 and
  /// 0 < tolerance < 1.
  void validate() const;
  /// Defaults, with digits taken from TORNHEIM_PREC when it is set.
  static Precision from_env();
};

/// Sets the default precision of newly created Reals for its lifetime.
/// The setting is process-wide: inside an OpenMP parallel region the scope
/// does nothing, and the precision set before the region (which should be
/// at least the largest one the workers need) stays in force.
class PrecisionScope {
 public:
  explicit PrecisionScope(int digits);
  ~PrecisionScope();
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  bool active_;
  unsigned saved_;
};

Real to_real(const Rational& q);
Real to_real(const BigInt& z);

/// Scientific notation with the given number of significant digits.
std::string to_string(const Real& x, int digits = 20);

/// 10^-e as a Real at the current precision.
Real pow10_neg(int e);

}  // namespace tornheim::numeric

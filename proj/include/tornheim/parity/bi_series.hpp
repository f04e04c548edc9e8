#pragma once

#include <vector>

#include "tornheim/arith/rational.hpp"

namespace tornheim::parity {

/// Exact coefficients c(r, s) of t1^r t2^s for r + s <= degree.
/// Products truncate at the smaller degree bound of the two operands.
class TruncatedBiSeries {
 public:
  explicit TruncatedBiSeries(int degree);

  int degree() const { return degree_; }

  /// Zero outside 0 <= r, s and r + s <= degree.
  const Rational& at(int r, int s) const;
  void set(int r, int s, const Rational& value);

  friend TruncatedBiSeries operator*(const TruncatedBiSeries& a, const TruncatedBiSeries& b);
  friend TruncatedBiSeries operator+(const TruncatedBiSeries& a, const TruncatedBiSeries& b);
  friend TruncatedBiSeries operator-(const TruncatedBiSeries& a, const TruncatedBiSeries& b);
  friend bool operator==(const TruncatedBiSeries& a, const TruncatedBiSeries& b) {
    return a.degree_ == b.degree_ && a.coeffs_ == b.coeffs_;
  }

 private:
  static std::size_t slot(int r, int s) {
    const auto d = static_cast<std::size_t>(r + s);
    return d * (d + 1) / 2 + static_cast<std::size_t>(s);
  }

  int degree_;
  std::vector<Rational> coeffs_;
};

/// t1/(e^t1 - 1) * (-t2)/(e^(-t2) - 1) * (e^(b t1 - t2) - 1)/(b t1 - t2),
/// expanded exactly up to total degree `degree`.
TruncatedBiSeries alpha_coeffs(int b, int degree);

/// -t1 e^(-c t1) * (-t2)/(e^(-t2) - 1) * (e^(b t1 - t2) - 1)/(b t1 - t2),
/// for 1 <= c <= b - 1.
TruncatedBiSeries alpha_tilde_coeffs(int b, int c, int degree);

/// Memoized alpha_coeffs / alpha_tilde_coeffs, safe to call concurrently.
const TruncatedBiSeries& cached_alpha(int b, int degree);
const TruncatedBiSeries& cached_alpha_tilde(int b, int c, int degree);

}  // namespace tornheim::parity

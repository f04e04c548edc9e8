#pragma once

#include <array>
#include <vector>

#include "tornheim/numeric/real.hpp"

namespace tornheim::numeric {

/// One factor (cm*m + cn*n)^exponent of the lattice summand.
struct LatticeFactor {
  long cm = 1;
  long cn = 0;
  int exponent = 1;
};

/// sum_{m,n>=1} prod 1/(cm*m + cn*n)^exponent.
using LatticeSpec = std::vector<LatticeFactor>;

/// Zero fields are derived from the precision.
struct LatticeOptions {
  int cutoff = 0;      // direct block is [1, cutoff]^2
  int em_order = 0;    // Euler-Maclaurin correction terms per direction
  int quad_order = 0;  // Gauss-Legendre order; a second rule of order * 3/2 checks it
};

struct LatticeResult {
  Real value;
  /// Estimated absolute error: last Euler-Maclaurin correction plus the
  /// disagreement between the two quadrature rules.
  Real error_bound;
  int cutoff = 0;
  int em_order = 0;
  int quad_order = 0;
  int digits = 0;
};

enum class Execution { Serial, Parallel };

/// The full lattice sum: an exact block over [1, M]^2 plus Euler-Maclaurin
/// tails along both edges and over the corner quadrant. Serial and parallel
/// runs reduce per-row partial sums in the same fixed order, so they agree
/// bit for bit. Throws UsageError for divergent specs and NumericFailure
/// when the error estimate exceeds tolerance * |value|.
LatticeResult lattice_sum(const LatticeSpec& spec, const Precision& prec, Execution exec = Execution::Parallel,
                          const LatticeOptions& options = {});

/// zeta_{a,b}(k1, k2, k3) = sum 1/(m^k1 n^k2 (a m + b n)^k3).
LatticeResult eval_tornheim(int a, int b, int k1, int k2, int k3, const Precision& prec,
                            Execution exec = Execution::Parallel, const LatticeOptions& options = {});

/// zeta(k; G2) = sum 1/(m^k1 n^k2 (m+n)^k3 (m+2n)^k4 (m+3n)^k5 (2m+3n)^k6).
LatticeResult eval_g2_series(const std::array<int, 6>& k, const Precision& prec,
                             Execution exec = Execution::Parallel, const LatticeOptions& options = {});

}  // namespace tornheim::numeric

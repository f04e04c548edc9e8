#pragma once

#include <vector>

#include "tornheim/constants/symbolic.hpp"
#include "tornheim/numeric/real.hpp"

namespace tornheim::numeric {

/// Gauss-Legendre rule on [0, 1] at the current Real precision. Cached per
/// (order, precision); safe to call concurrently.
struct QuadratureRule {
  std::vector<Real> nodes;
  std::vector<Real> weights;
};
const QuadratureRule& gauss_legendre(int order);

/// Hurwitz zeta(s, a) = sum_{k>=0} (k + a)^-s for integer s >= 2 and
/// 0 < a <= 1, by Euler-Maclaurin after a direct head of the series.
/// Throws NumericFailure if the remainder term does not fall below
/// 10^-(digits+2) within the term budget.
Real hurwitz_zeta(int s, const Rational& a, int digits);

Real riemann_zeta(int s, int digits);

/// psi(a) for rational a > 0.
Real digamma(const Rational& a, int digits);

/// C_j(q) = sum cos(2 pi m q)/m^j and S_j(q) = sum sin(2 pi m q)/m^j for
/// j >= 2, summed over one period of denom(q) as Hurwitz zeta values.
Real clausen_c(int j, const Rational& q, int digits);
Real clausen_s(int j, const Rational& q, int digits);

/// L(j, chi_3) for j >= 1; j = 1 through digamma values.
Real dirichlet_l3(int j, int digits);

/// Numeric value of a single basis constant. ImagUnit is rejected with
/// DomainError.
Real eval_constant(const sym::BaseConstant& c, const Precision& prec);

inline constexpr int kGuardDigits = 10;

/// sum coefficient * prod constants, evaluated with kGuardDigits extra digits. Monomials carrying i are rejected
/// with DomainError; the empty value evaluates to 0.
Real eval_symbolic(const sym::SymbolicValue& v, const Precision& prec);

}  // namespace tornheim::numeric

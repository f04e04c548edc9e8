#pragma once

#include "tornheim/constants/reduce.hpp"
#include "tornheim/constants/symbolic.hpp"
#include "tornheim/numeric/real.hpp"

namespace tornheim::testing {

inline sym::SymbolicValue zeta(int j) { return sym::SymbolicValue::of(sym::BaseConstant::zeta(j)); }
inline sym::SymbolicValue pi(int e = 1) { return sym::SymbolicValue::of(sym::BaseConstant::pi(), e); }
inline sym::SymbolicValue imag(int e = 1) { return sym::SymbolicValue::of(sym::BaseConstant::imag_unit(), e); }
inline sym::SymbolicValue sqrt3() { return sym::SymbolicValue::of(sym::BaseConstant::sqrt3()); }
inline sym::SymbolicValue cl_s(int j, Rational q) { return sym::SymbolicValue::of(sym::BaseConstant::clausen_s(j, q)); }
inline sym::SymbolicValue cl_c(int j, Rational q) { return sym::SymbolicValue::of(sym::BaseConstant::clausen_c(j, q)); }
inline sym::SymbolicValue l3(int j) { return sym::SymbolicValue::of(sym::BaseConstant::dirichlet_l3(j)); }
inline Rational q(long n, long d = 1) { return make_rational(n, d); }

/// |a - b| <= tol * max(|b|, floor)
inline bool close(const numeric::Real& a, const numeric::Real& b, double tol, double floor = 1e-40) {
  using numeric::Real;
  return abs(a - b) <= Real(tol) * std::max(Real(abs(b)), Real(floor));
}

}  // namespace tornheim::testing

#pragma once

#include "tornheim/constants/symbolic.hpp"

namespace tornheim::parity {

/// zeta_{a,b}(k1,k2,k3) = sum_{m,n>0} 1 / (m^k1 n^k2 (a m + b n)^k3).
struct EvalRequest {
  int a = 1;
  int b = 1;
  int k1 = 1;
  int k2 = 1;
  int k3 = 1;

  int weight() const { return k1 + k2 + k3; }

  /// Throws UsageError unless all parameters are >= 1 and the weight is odd.
  void validate() const;

  /// The same series with (m, n) relabeled: zeta_{b,a}(k2,k1,k3).
  EvalRequest swapped() const { return {b, a, k2, k1, k3}; }
};

/// Coefficient of t1^r t2^s in the gamma-beta integral generating function:
/// gcd(a,b)^(r+s) / (a^s b^r) zeta(r+s) when r+s is odd, zero otherwise.
sym::SymbolicValue zeta_integral_coeff(int a, int b, int r, int s);

/// Contribution of the alpha_b part to the t1^k1 t2^k2 t3^k3 coefficient of
/// (1/2 pi i) F_{a,b}(2 pi i t). Carries explicit powers of i.
sym::SymbolicValue term1_coeff(const EvalRequest& req);

/// Contribution of the sum over c of alpha~_{b,c} parts. Zero when b = 1.
sym::SymbolicValue term2_coeff(const EvalRequest& req);

/// term1_coeff + term2_coeff. The boundary integral part of the expansion
/// involves only (t1,t2) or (t1,t3) and so never reaches a monomial with
/// k2, k3 >= 1.
sym::SymbolicValue generating_coeff(const EvalRequest& req);

struct ClosedFormDetail {
  sym::SymbolicValue value;      // -1/2 Re(G_{a,b} + G_{b,a}), canonical
  sym::SymbolicValue combined;   // G_{a,b}(k1,k2,k3) + G_{b,a}(k2,k1,k3), i-powers intact
  sym::SymbolicValue imaginary;  // what real_part discarded, as a real value
};

ClosedFormDetail closed_form_detail(const EvalRequest& req);

/// Exact value of zeta_{a,b}(k1,k2,k3) at odd weight as a Q-combination of
/// pi^2n zeta(k-2n), pi^2n C_{k-2n}(d/N), pi^(2n+1) S_{k-2n-1}(d/N).
sym::SymbolicValue closed_form(const EvalRequest& req);

}  // namespace tornheim::parity

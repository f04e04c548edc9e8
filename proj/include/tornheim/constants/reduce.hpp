#pragma once

#include <string>

#include "tornheim/constants/symbolic.hpp"

namespace tornheim::sym {

enum class ClausenKind { C, S };

/// Canonical form of C_j(q) or S_j(q) (j >= 2). Rules, in order:
///   q -> q mod 1;  C_j(1-q) = C_j(q), S_j(1-q) = -S_j(q);
///   S_j(0) = S_j(1/2) = 0;  C_j(0) = zeta(j);  C_j(1/2) = (2^(1-j) - 1) zeta(j);
///   C_j(1/3) = (1 - 3^(j-1)) / (2 3^(j-1)) zeta(j);
///   C_j(1/6) = (2^(1-j) - 1) C_j(1/3),  S_j(1/6) = (1 + 2^(1-j)) S_j(1/3)
/// (the last two are the duplication relation at x = 1/3).
/// Stored angles land in (0, 1/2]. Throws UsageError for j < 2.
SymbolicValue reduce_angle(ClausenKind kind, int j, const Rational& q);

/// Applies reduce_angle to every Clausen factor of every monomial.
SymbolicValue canonicalize(const SymbolicValue& v);

/// True iff every C/S factor is already in reduced form.
bool is_canonical(const SymbolicValue& v);

/// Terms with even / odd exponent of i. even + odd == v exactly.
struct ImagParitySplit {
  SymbolicValue even;
  SymbolicValue odd;
};
ImagParitySplit split_by_imag_parity(const SymbolicValue& v);

/// Keeps even-i terms with i^2 -> -1; drops odd-i terms.
SymbolicValue real_part(const SymbolicValue& v);

/// The imaginary component as a real SymbolicValue: odd-i terms with
/// i -> 1, i^3 -> -1.
SymbolicValue imaginary_part(const SymbolicValue& v);

/// L(j, chi_3) = l_j sqrt(3) pi^j for odd j >= 1; returns l_j sqrt(3) pi^j.
SymbolicValue exact_L_value(int j);

/// The rational r_n with zeta(2n) = r_n pi^(2n), n >= 1.
Rational zeta_even_ratio(int n);

/// Rewrites a real odd-weight value from the pi^a zeta / pi^a C / pi^a S
/// basis into products zeta(2n)zeta(k-2n) and L(2n+1,chi_3)L(k-2n-1,chi_3).
/// The n = 0 zeta product (zeta(0) zeta(k) with zeta(0) = -1/2) is kept as
/// the bare monomial zeta(k). Throws DomainError on constants outside the
/// G2 field.
SymbolicValue to_dirichlet_basis(const SymbolicValue& v, int weight);

/// True iff every monomial is zeta(k), zeta(2n)zeta(k-2n) or
/// L(2n+1)L(k-2n-1) with 0 <= n <= (k-3)/2.
bool is_dirichlet_basis(const SymbolicValue& v, int weight);

/// Stable fingerprint of the canonicalization rule set.
std::string ruleset_hash();

}  // namespace tornheim::sym

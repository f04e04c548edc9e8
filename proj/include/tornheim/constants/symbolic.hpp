#pragma once

#include <compare>
#include <map>
#include <string>
#include <utility>

#include "tornheim/arith/rational.hpp"

namespace tornheim::sym {

enum class ConstantKind { Pi, ImagUnit, Sqrt3, Zeta, ClausenC, ClausenS, DirichletL3 };

/// One basis constant: pi, i, sqrt(3), zeta(j), C_j(q), S_j(q) or L(j, chi_3).
/// The factory functions store exactly what they are given; canonical
/// angles are the job of reduce_angle().
struct BaseConstant {
  ConstantKind kind = ConstantKind::Pi;
  int index = 0;         // j for zeta, C, S and L; unused otherwise
  Rational angle = 0;    // q for C and S; zero otherwise

  static BaseConstant pi() { return {ConstantKind::Pi, 0, 0}; }
  static BaseConstant imag_unit() { return {ConstantKind::ImagUnit, 0, 0}; }
  static BaseConstant sqrt3() { return {ConstantKind::Sqrt3, 0, 0}; }
  static BaseConstant zeta(int j) { return {ConstantKind::Zeta, j, 0}; }
  static BaseConstant clausen_c(int j, Rational q) { return {ConstantKind::ClausenC, j, std::move(q)}; }
  static BaseConstant clausen_s(int j, Rational q) { return {ConstantKind::ClausenS, j, std::move(q)}; }
  static BaseConstant dirichlet_l3(int j) { return {ConstantKind::DirichletL3, j, 0}; }

  /// pi counts 1, i and sqrt(3) count 0, everything else counts its index.
  int weight() const;

  friend bool operator==(const BaseConstant& a, const BaseConstant& b) {
    return a.kind == b.kind && a.index == b.index && a.angle == b.angle;
  }
  friend bool operator<(const BaseConstant& a, const BaseConstant& b) {
    if (a.kind != b.kind) return a.kind < b.kind;
    if (a.index != b.index) return a.index < b.index;
    return cmp(a.angle, b.angle) < 0;
  }
};

/// A product of basis constants with positive exponents. The exponent of i
/// is kept mod 4 and sqrt(3)^2 is folded out (see multiply()).
class ConstMonomial {
 public:
  ConstMonomial() = default;
  explicit ConstMonomial(const BaseConstant& c, int exponent = 1);

  int exponent(const BaseConstant& c) const;
  int pi_power() const { return exponent(BaseConstant::pi()); }
  int imag_power() const { return exponent(BaseConstant::imag_unit()); }
  int weight() const;
  bool is_one() const { return factors_.empty(); }

  const std::map<BaseConstant, int>& factors() const { return factors_; }

  /// Copy with the given constant removed entirely.
  ConstMonomial without(const BaseConstant& c) const;

  friend bool operator==(const ConstMonomial& a, const ConstMonomial& b) { return a.factors_ == b.factors_; }
  friend bool operator<(const ConstMonomial& a, const ConstMonomial& b) { return a.factors_ < b.factors_; }

  /// Product of two monomials; the rational is 3^k from sqrt(3) pairs.
  friend std::pair<Rational, ConstMonomial> multiply(const ConstMonomial& a, const ConstMonomial& b);

 private:
  void raw_mul(const BaseConstant& c, int exponent, Rational& scalar);
  std::map<BaseConstant, int> factors_;
};

/// A Q-linear combination of ConstMonomials. Zero coefficients are never
/// stored, so structural equality is value equality for canonical inputs.
class SymbolicValue {
 public:
  SymbolicValue() = default;
  SymbolicValue(const Rational& scalar);  // NOLINT(google-explicit-constructor)
  SymbolicValue(long scalar) : SymbolicValue(Rational(scalar)) {}  // NOLINT

  static SymbolicValue of(const BaseConstant& c, int exponent = 1);
  static SymbolicValue term(const Rational& coefficient, const ConstMonomial& m);

  void add_term(const Rational& coefficient, const ConstMonomial& m);

  const std::map<ConstMonomial, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Rational coefficient(const ConstMonomial& m) const;

  SymbolicValue& operator+=(const SymbolicValue& o);
  SymbolicValue& operator-=(const SymbolicValue& o);
  SymbolicValue& operator*=(const Rational& s);

  friend SymbolicValue operator+(SymbolicValue a, const SymbolicValue& b) { return a += b; }
  friend SymbolicValue operator-(SymbolicValue a, const SymbolicValue& b) { return a -= b; }
  friend SymbolicValue operator*(SymbolicValue a, const Rational& s) { return a *= s; }
  friend SymbolicValue operator*(const Rational& s, SymbolicValue a) { return a *= s; }
  friend SymbolicValue operator*(const SymbolicValue& a, const SymbolicValue& b);
  friend SymbolicValue operator-(SymbolicValue a) { return a *= Rational(-1); }

  friend bool operator==(const SymbolicValue& a, const SymbolicValue& b) { return a.terms_ == b.terms_; }

 private:
  std::map<ConstMonomial, Rational> terms_;
};

}  // namespace tornheim::sym

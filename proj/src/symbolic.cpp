#include "tornheim/constants/symbolic.hpp"

#include <stdexcept>

namespace tornheim::sym {

int BaseConstant::weight() const {
  switch (kind) {
    case ConstantKind::Pi: return 1;
    case ConstantKind::ImagUnit:
    case ConstantKind::Sqrt3: return 0;
    default: return index;
  }
}

ConstMonomial::ConstMonomial(const BaseConstant& c, int exponent) {
  // sqrt(3)^2 = 3 is a scalar; only SymbolicValue::of can carry it
  if (c.kind == ConstantKind::Sqrt3 && exponent > 1)
    throw std::invalid_argument("ConstMonomial: sqrt(3) exponent must be 1; use SymbolicValue::of");
  Rational scalar = 1;
  raw_mul(c, exponent, scalar);
}

void ConstMonomial::raw_mul(const BaseConstant& c, int exponent, Rational& scalar) {
  if (exponent <= 0) return;
  int e = factors_[c] + exponent;
  if (c.kind == ConstantKind::ImagUnit) {
    e %= 4;
  } else if (c.kind == ConstantKind::Sqrt3) {
    for (int k = 0; k < e / 2; ++k) scalar *= 3;
    e %= 2;
  }
  if (e == 0) {
    factors_.erase(c);
  } else {
    factors_[c] = e;
  }
}

int ConstMonomial::exponent(const BaseConstant& c) const {
  auto it = factors_.find(c);
  return it == factors_.end() ? 0 : it->second;
}

int ConstMonomial::weight() const {
  int w = 0;
  for (const auto& [c, e] : factors_) w += c.weight() * e;
  return w;
}

ConstMonomial ConstMonomial::without(const BaseConstant& c) const {
  ConstMonomial out = *this;
  out.factors_.erase(c);
  return out;
}

std::pair<Rational, ConstMonomial> multiply(const ConstMonomial& a, const ConstMonomial& b) {
  Rational scalar = 1;
  ConstMonomial out = a;
  for (const auto& [c, e] : b.factors_) out.raw_mul(c, e, scalar);
  return {scalar, out};
}

SymbolicValue::SymbolicValue(const Rational& scalar) {
  if (scalar != 0) terms_[ConstMonomial()] = scalar;
}

SymbolicValue SymbolicValue::of(const BaseConstant& c, int exponent) {
  Rational coef = 1;
  ConstMonomial m;
  for (int k = 0; k < exponent; ++k) {
    auto [s, prod] = multiply(m, ConstMonomial(c));
    coef *= s;
    m = std::move(prod);
  }
  return term(coef, m);
}

SymbolicValue SymbolicValue::term(const Rational& coefficient, const ConstMonomial& m) {
  SymbolicValue out;
  out.add_term(coefficient, m);
  return out;
}

void SymbolicValue::add_term(const Rational& coefficient, const ConstMonomial& m) {
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational SymbolicValue::coefficient(const ConstMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

SymbolicValue& SymbolicValue::operator+=(const SymbolicValue& o) {
  for (const auto& [m, c] : o.terms_) add_term(c, m);
  return *this;
}

SymbolicValue& SymbolicValue::operator-=(const SymbolicValue& o) {
  for (const auto& [m, c] : o.terms_) add_term(-c, m);
  return *this;
}

SymbolicValue& SymbolicValue::operator*=(const Rational& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= s;
  return *this;
}

SymbolicValue operator*(const SymbolicValue& a, const SymbolicValue& b) {
  SymbolicValue out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      auto [s, m] = multiply(ma, mb);
      out.add_term(ca * cb * s, m);
    }
  }
  return out;
}

}  // namespace tornheim::sym

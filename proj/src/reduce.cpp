#include "tornheim/constants/reduce.hpp"

#include <cstdint>
#include <algorithm>
#include <cstdio>
#include <string_view>

#include "tornheim/arith/bernoulli.hpp"
#include "tornheim/error.hpp"

namespace tornheim::sym {
namespace {

using arith::BernoulliConvention;

// Bump the text whenever a rule in reduce_angle or to_dirichlet_basis changes.
constexpr std::string_view kRuleSet =
    "mod1;reflect(0,1/2];S(0)=S(1/2)=0;C(0)=zeta;C(1/2)=(2^(1-j)-1)zeta;"
    "C(1/3)=(1-3^(j-1))/(2*3^(j-1))zeta;dup2@1/3:C(1/6),S(1/6);"
    "dirichlet:S(1/3)=sqrt3/2*L;zeta(2n)=r_n*pi^2n;L(2n+1)=l_n*sqrt3*pi^(2n+1);zeta(0)zeta(k)->zeta(k)";

Rational two_pow(int e) { return pow(Rational(2), e); }

Rational c_third_factor(int j) {
  Rational t = pow(Rational(3), j - 1);
  return (1 - t) / (2 * t);
}

bool is_clausen(const BaseConstant& c) {
  return c.kind == ConstantKind::ClausenC || c.kind == ConstantKind::ClausenS;
}

}  // namespace

SymbolicValue reduce_angle(ClausenKind kind, int j, const Rational& q_in) {
  if (j < 2) throw UsageError("Clausen index must be >= 2 (got " + std::to_string(j) + ")");
  Rational q = mod_one(q_in);
  Rational sign = 1;
  const Rational half(1, 2);
  if (q > half) {
    q = 1 - q;
    if (kind == ClausenKind::S) sign = -1;
  }
  const Rational third(1, 3), sixth(1, 6);
  if (kind == ClausenKind::S) {
    if (q == 0 || q == half) return {};
    if (q == sixth) {
      return SymbolicValue::of(BaseConstant::clausen_s(j, third)) * (sign * (1 + two_pow(1 - j)));
    }
    return SymbolicValue::of(BaseConstant::clausen_s(j, q)) * sign;
  }
  const SymbolicValue zeta = SymbolicValue::of(BaseConstant::zeta(j));
  if (q == 0) return zeta;
  if (q == half) return zeta * (two_pow(1 - j) - 1);
  if (q == third) return zeta * c_third_factor(j);
  if (q == sixth) return zeta * ((two_pow(1 - j) - 1) * c_third_factor(j));
  return SymbolicValue::of(BaseConstant::clausen_c(j, q));
}

SymbolicValue canonicalize(const SymbolicValue& v) {
  SymbolicValue out;
  for (const auto& [mono, coef] : v.terms()) {
    SymbolicValue piece(coef);
    for (const auto& [c, e] : mono.factors()) {
      SymbolicValue factor;
      if (is_clausen(c)) {
        factor = reduce_angle(c.kind == ConstantKind::ClausenC ? ClausenKind::C : ClausenKind::S, c.index, c.angle);
        SymbolicValue p(1);
        for (int k = 0; k < e; ++k) p = p * factor;
        factor = p;
      } else if (c.kind == ConstantKind::Sqrt3) {
        factor = SymbolicValue::of(c, e);
      } else {
        factor = SymbolicValue::term(1, ConstMonomial(c, e));
      }
      piece = piece * factor;
    }
    out += piece;
  }
  return out;
}

bool is_canonical(const SymbolicValue& v) {
  const Rational half(1, 2), third(1, 3), sixth(1, 6);
  for (const auto& [mono, coef] : v.terms()) {
    for (const auto& [c, e] : mono.factors()) {
      if (!is_clausen(c)) continue;
      if (c.index < 2 || c.angle <= 0 || c.angle > half) return false;
      if (c.kind == ConstantKind::ClausenS && (c.angle == half || c.angle == sixth)) return false;
      if (c.kind == ConstantKind::ClausenC && (c.angle == half || c.angle == third || c.angle == sixth))
        return false;
    }
  }
  return true;
}

ImagParitySplit split_by_imag_parity(const SymbolicValue& v) {
  ImagParitySplit out;
  for (const auto& [mono, coef] : v.terms()) {
    (mono.imag_power() % 2 == 0 ? out.even : out.odd).add_term(coef, mono);
  }
  return out;
}

SymbolicValue real_part(const SymbolicValue& v) {
  const BaseConstant i = BaseConstant::imag_unit();
  SymbolicValue out;
  for (const auto& [mono, coef] : v.terms()) {
    const int e = mono.imag_power();
    if (e % 2 != 0) continue;
    out.add_term(e == 2 ? Rational(-coef) : coef, mono.without(i));
  }
  return out;
}

SymbolicValue imaginary_part(const SymbolicValue& v) {
  const BaseConstant i = BaseConstant::imag_unit();
  SymbolicValue out;
  for (const auto& [mono, coef] : v.terms()) {
    const int e = mono.imag_power();
    if (e % 2 == 0) continue;
    out.add_term(e == 3 ? Rational(-coef) : coef, mono.without(i));
  }
  return out;
}

SymbolicValue exact_L_value(int j) {
  if (j < 1 || j % 2 == 0) throw UsageError("exact_L_value needs an odd index >= 1 (got " + std::to_string(j) + ")");
  // L(j, chi_3) = (2/sqrt 3) S_j(1/3) and, for odd j, the Fourier series of
  // the Bernoulli polynomial gives S_j(x) = -(-1)^((j-1)/2) (2 pi)^j B_j(x) / (2 j!).
  const Rational sign = ((j + 1) / 2) % 2 == 0 ? 1 : -1;
  const Rational ratio = sign * pow(Rational(2), j) * arith::bernoulli_poly(j, Rational(1, 3)) /
                         (3 * Rational(arith::factorial(j)));
  return SymbolicValue::of(BaseConstant::sqrt3()) * SymbolicValue::of(BaseConstant::pi(), j) * ratio;
}

Rational zeta_even_ratio(int n) {
  if (n < 1) throw UsageError("zeta_even_ratio needs n >= 1");
  const Rational b = arith::bernoulli_number(2 * n, BernoulliConvention::AtZero);
  const Rational sign = (n + 1) % 2 == 0 ? 1 : -1;
  return sign * b * pow(Rational(2), 2 * n) / (2 * Rational(arith::factorial(2 * n)));
}

namespace {

Rational l_ratio(int j) {
  const SymbolicValue l = exact_L_value(j);
  return l.terms().begin()->second;
}

// Returns true and accumulates if `mono` already has the target shape.
bool is_dirichlet_monomial(const ConstMonomial& mono, int weight) {
  const auto& f = mono.factors();
  if (mono.weight() != weight) return false;
  int zetas = 0, ls = 0, other = 0, zeta_min = weight + 1, l_min = weight + 1;
  for (const auto& [c, e] : f) {
    if (c.kind == ConstantKind::Zeta) {
      zetas += e;
      zeta_min = std::min(zeta_min, c.index);
    } else if (c.kind == ConstantKind::DirichletL3) {
      ls += e;
      l_min = std::min(l_min, c.index);
    } else {
      ++other;
    }
  }
  if (other != 0) return false;
  const int n_max = (weight - 3) / 2;
  if (zetas == 1 && ls == 0) return true;
  if (zetas == 2 && ls == 0 && f.size() == 2) {
    return zeta_min % 2 == 0 && zeta_min / 2 >= 1 && zeta_min / 2 <= n_max;
  }
  if (ls == 2 && zetas == 0 && f.size() == 2) {
    return l_min % 2 == 1 && (l_min - 1) / 2 <= n_max;
  }
  return false;
}

}  // namespace

SymbolicValue to_dirichlet_basis(const SymbolicValue& v, int weight) {
  if (weight % 2 == 0) throw UsageError("to_dirichlet_basis needs an odd weight");
  const BaseConstant pi = BaseConstant::pi();
  const BaseConstant root3 = BaseConstant::sqrt3();
  SymbolicValue out;
  for (const auto& [mono_in, coef_in] : v.terms()) {
    if (is_dirichlet_monomial(mono_in, weight)) {
      out.add_term(coef_in, mono_in);
      continue;
    }
    // S_j(1/3) -> (sqrt 3 / 2) L(j, chi_3), then classify by pi and sqrt 3.
    SymbolicValue piece(coef_in);
    for (const auto& [c, e] : mono_in.factors()) {
      if (c.kind == ConstantKind::ClausenS && c.angle == Rational(1, 3) && e == 1) {
        piece = piece * SymbolicValue::of(root3) * SymbolicValue::of(BaseConstant::dirichlet_l3(c.index)) *
                Rational(1, 2);
      } else if (c.kind == ConstantKind::Sqrt3) {
        piece = piece * SymbolicValue::of(c, e);
      } else {
        piece = piece * SymbolicValue::term(1, ConstMonomial(c, e));
      }
    }
    for (const auto& [mono, coef] : piece.terms()) {
      const int p = mono.pi_power();
      const int s = mono.exponent(root3);
      const ConstMonomial rest = mono.without(pi).without(root3);
      const auto& rf = rest.factors();
      const bool single = rf.size() == 1 && rf.begin()->second == 1;
      if (single && rf.begin()->first.kind == ConstantKind::Zeta && s == 0 && p % 2 == 0) {
        if (p == 0) {
          out.add_term(coef, rest);
        } else {
          ConstMonomial prod = ConstMonomial(BaseConstant::zeta(p));
          prod = multiply(prod, rest).second;
          out.add_term(coef / zeta_even_ratio(p / 2), prod);
        }
        continue;
      }
      if (single && rf.begin()->first.kind == ConstantKind::DirichletL3 && s == 1 && p % 2 == 1) {
        ConstMonomial prod = multiply(ConstMonomial(BaseConstant::dirichlet_l3(p)), rest).second;
        out.add_term(coef / l_ratio(p), prod);
        continue;
      }
      throw DomainError("not in G2 constant field: monomial outside {pi^2n zeta, pi^(2n+1) S(1/3)}");
    }
  }
  if (!is_dirichlet_basis(out, weight)) throw DomainError("not in G2 constant field: result has foreign indices");
  return out;
}

bool is_dirichlet_basis(const SymbolicValue& v, int weight) {
  for (const auto& [mono, coef] : v.terms()) {
    if (!is_dirichlet_monomial(mono, weight)) return false;
  }
  return true;
}

std::string ruleset_hash() {
  std::uint64_t h = 1469598103934665603ULL;  // FNV-1a
  for (unsigned char ch : kRuleSet) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace tornheim::sym

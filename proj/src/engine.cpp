#include "tornheim/parity/engine.hpp"

#include <numeric>
#include <string>

#include "tornheim/arith/bernoulli.hpp"
#include "tornheim/constants/reduce.hpp"
#include "tornheim/error.hpp"
#include "tornheim/parity/bi_series.hpp"

namespace tornheim::parity {
namespace {

using arith::BernoulliConvention;
using arith::bernoulli_number;
using arith::bernoulli_poly;
using arith::binomial;
using arith::factorial;
using sym::BaseConstant;
using sym::ConstMonomial;
using sym::SymbolicValue;

// (2 pi i)^m stored as 2^m pi^m i^(m mod 4).
SymbolicValue two_pi_i_power(int m) {
  SymbolicValue out = SymbolicValue::of(BaseConstant::pi(), m) * SymbolicValue::of(BaseConstant::imag_unit(), m % 4);
  return out * pow(Rational(2), m);
}

Rational signed_one(int e) { return e % 2 == 0 ? 1 : -1; }

}  // namespace

void EvalRequest::validate() const {
  if (a < 1 || b < 1 || k1 < 1 || k2 < 1 || k3 < 1)
    throw UsageError("a, b, k1, k2, k3 must all be positive integers");
  if (weight() % 2 == 0)
    throw UsageError("weight must be odd: the parity theorem applies to odd weight only (got weight " +
                     std::to_string(weight()) + ")");
}

SymbolicValue zeta_integral_coeff(int a, int b, int r, int s) {
  if (r < 1 || s < 1) throw UsageError("zeta_integral_coeff needs r, s >= 1");
  if ((r + s) % 2 == 0) return {};
  const Rational g = std::gcd(a, b);
  const Rational coef = pow(g, r + s) / (pow(Rational(a), s) * pow(Rational(b), r));
  return SymbolicValue::of(BaseConstant::zeta(r + s)) * coef;
}

SymbolicValue term1_coeff(const EvalRequest& req) {
  const int D = req.k2 + req.k3;
  const TruncatedBiSeries& alpha = cached_alpha(req.b, D);
  SymbolicValue out;
  for (int n2 = 0; n2 <= req.k2; ++n2) {
    for (int n3 = 0; n3 <= req.k3; ++n3) {
      const Rational& A = alpha.at(n2, n3);
      if (A == 0) continue;
      // (t3 - b t2)^s supplies t2^j t3^(s-j).
      const int j = req.k2 - n2;
      const int s = j + req.k3 - n3;
      if (s < 1) continue;
      const SymbolicValue z = zeta_integral_coeff(req.a, 1, req.k1, s);
      if (z.is_zero()) continue;
      const Rational expand = Rational(binomial(s, j)) * pow(Rational(-req.b), j);
      out += two_pi_i_power(n2 + n3) * z * (A * expand);
    }
  }
  return out;
}

SymbolicValue term2_coeff(const EvalRequest& req) {
  SymbolicValue out;
  if (req.b == 1) return out;
  const int p = req.k1 - 1;
  const int D = req.k2 + req.k3;
  const SymbolicValue minus_i = SymbolicValue::of(BaseConstant::imag_unit()) * Rational(-1);
  for (int c = 1; c <= req.b - 1; ++c) {
    const TruncatedBiSeries& tilde = cached_alpha_tilde(req.b, c, D);
    const Rational x = make_rational(req.a * c, req.b);
    const Rational cb = make_rational(c, req.b);
    for (int n2 = 1; n2 <= req.k2; ++n2) {
      for (int n3 = 0; n3 <= req.k3; ++n3) {
        const Rational& At = tilde.at(n2, n3);
        if (At == 0) continue;
        // (b t2 - t3)^(q+s-1) supplies t2^j t3^(deg-j).
        const int deg = req.k2 + req.k3 - n2 - n3;
        const int j = req.k2 - n2;
        const Rational expand = Rational(binomial(deg, j)) * pow(Rational(req.b), j) * signed_one(deg - j);
        for (int s = 1; s <= deg + 1; ++s) {
          const int q = deg + 1 - s;
          const int index = p + s + 1;
          const Rational base = At * expand * signed_one(s) /
                                (Rational(factorial(static_cast<unsigned>(q))) * pow(Rational(req.a), s));
          const SymbolicValue power = two_pi_i_power(n2 + n3 + q - 1);
          const Rational bq = bernoulli_poly(static_cast<unsigned>(q), cb);
          if ((p + s) % 2 == 1) {
            out += minus_i * power * sym::reduce_angle(sym::ClausenKind::S, index, x) * (base * bq);
          } else {
            const Rational bq1 = bernoulli_number(static_cast<unsigned>(q), BernoulliConvention::AtOne);
            SymbolicValue bracket = SymbolicValue::of(BaseConstant::zeta(index)) * bq1 -
                                    sym::reduce_angle(sym::ClausenKind::C, index, x) * bq;
            out += power * bracket * base;
          }
        }
      }
    }
  }
  return out;
}

SymbolicValue generating_coeff(const EvalRequest& req) { return term1_coeff(req) + term2_coeff(req); }

ClosedFormDetail closed_form_detail(const EvalRequest& req) {
  req.validate();
  ClosedFormDetail out;
  out.combined = generating_coeff(req) + generating_coeff(req.swapped());
  out.value = sym::real_part(out.combined) * Rational(-1, 2);
  out.imaginary = sym::imaginary_part(out.combined) * Rational(-1, 2);
  return out;
}

SymbolicValue closed_form(const EvalRequest& req) { return closed_form_detail(req).value; }

}  // namespace tornheim::parity

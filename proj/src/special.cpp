#include "tornheim/numeric/special.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

#include "tornheim/arith/bernoulli.hpp"
#include "tornheim/error.hpp"

namespace tornheim::numeric {
namespace {

using arith::BernoulliConvention;
using arith::bernoulli_number;
using arith::factorial;
using sym::BaseConstant;
using sym::ConstantKind;

Real ipow(Real base, unsigned e) {
  Real out = 1;
  while (e != 0) {
    if (e & 1U) out *= base;
    e >>= 1U;
    if (e != 0) base *= base;
  }
  return out;
}

Real pi_value() {
  Real p;
  mpfr_const_pi(p.backend().data(), MPFR_RNDN);
  return p;
}

// B_{2j}/(2j)! at the current precision.
Real bernoulli_ratio(int j) {
  const unsigned k = static_cast<unsigned>(2 * j);
  return to_real(bernoulli_number(k, BernoulliConvention::AtZero) / Rational(factorial(k)));
}

int head_length(int digits) { return digits + 10; }

int term_budget(int digits) { return 4 * digits + 40; }

}  // namespace

const QuadratureRule& gauss_legendre(int order) {
  static std::mutex mutex;
  static std::map<std::pair<int, unsigned>, QuadratureRule> cache;
  if (order < 2) throw UsageError("Gauss-Legendre order must be at least 2");
  const unsigned digits = Real::default_precision();
  std::lock_guard lock(mutex);
  auto [it, inserted] = cache.try_emplace({order, digits});
  if (!inserted) return it->second;

  QuadratureRule& rule = it->second;
  const Real eps = pow10_neg(static_cast<int>(digits) + 2);
  const int n = order;
  for (int i = 1; i <= n; ++i) {
    Real x = std::cos(std::numbers::pi * (i - 0.25) / (n + 0.5));
    Real dp = 0;
    for (int iter = 0; iter < 200; ++iter) {
      Real p0 = 1;
      Real p1 = x;
      for (int k = 2; k <= n; ++k) {
        Real p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = std::move(p1);
        p1 = std::move(p2);
      }
      dp = n * (x * p1 - p0) / (x * x - 1);
      const Real dx = p1 / dp;
      x -= dx;
      if (abs(dx) < eps) break;
    }
    rule.nodes.push_back((1 - x) / 2);
    rule.weights.push_back(1 / ((1 - x * x) * dp * dp));
  }
  return rule;
}

Real hurwitz_zeta(int s, const Rational& a, int digits) {
  if (s < 2) throw UsageError("hurwitz_zeta needs s >= 2");
  if (a <= 0 || a > 1) throw UsageError("hurwitz_zeta needs 0 < a <= 1");
  const Real ar = to_real(a);
  const int n = head_length(digits);
  Real sum = 0;
  for (int k = n - 1; k >= 0; --k) sum += 1 / ipow(ar + k, static_cast<unsigned>(s));
  const Real x = ar + n;
  const Real x2 = x * x;
  Real xp = 1 / ipow(x, static_cast<unsigned>(s));  // x^-s
  sum += x * xp / (s - 1) + xp / 2;
  xp /= x;  // x^-(s+1)
  Real rising = s;  // (s)_{2j-1}
  const Real eps = pow10_neg(digits + 2) * abs(sum);
  for (int j = 1; j <= term_budget(digits); ++j) {
    const Real term = bernoulli_ratio(j) * rising * xp;
    sum += term;
    if (abs(term) < eps) return sum;
    rising *= Real(s + 2 * j - 1) * (s + 2 * j);
    xp /= x2;
  }
  throw NumericFailure("hurwitz_zeta(" + std::to_string(s) + ", " + tornheim::to_string(a) + ") did not converge");
}

Real riemann_zeta(int s, int digits) { return hurwitz_zeta(s, 1, digits); }

Real digamma(const Rational& a, int digits) {
  if (a <= 0) throw UsageError("digamma needs a > 0");
  const Real ar = to_real(a);
  const int n = head_length(digits);
  const Real x = ar + n;
  const Real x2 = x * x;
  Real sum = log(x) - 1 / (2 * x);
  Real xp = 1 / x2;
  const Real eps = pow10_neg(digits + 2);
  bool converged = false;
  for (int j = 1; j <= term_budget(digits); ++j) {
    const Real term = to_real(bernoulli_number(static_cast<unsigned>(2 * j), BernoulliConvention::AtZero)) * xp / (2 * j);
    sum -= term;
    if (abs(term) < eps) {
      converged = true;
      break;
    }
    xp /= x2;
  }
  if (!converged) throw NumericFailure("digamma(" + tornheim::to_string(a) + ") did not converge");
  for (int k = n - 1; k >= 0; --k) sum -= 1 / (ar + k);
  return sum;
}

namespace {

// sum_{r=1}^{N} trig(2 pi r d / N) zeta(j, r/N) / N^j for q = d/N.
template <typename Trig>
Real periodic_sum(int j, const Rational& q, int digits, Trig trig) {
  if (j < 2) throw UsageError("Clausen index must be at least 2");
  const Rational x = mod_one(q);
  const long den = x.get_den().get_si();
  const long num = x.get_num().get_si();
  const Real two_pi = 2 * pi_value();
  Real sum = 0;
  for (long r = 1; r <= den; ++r) {
    const long phase = (r * num) % den;
    const Real t = trig(two_pi * phase / den);
    if (t == 0) continue;
    sum += t * hurwitz_zeta(j, make_rational(r, den), digits);
  }
  return sum / ipow(Real(den), static_cast<unsigned>(j));
}

}  // namespace

Real clausen_c(int j, const Rational& q, int digits) {
  return periodic_sum(j, q, digits, [](const Real& t) { return Real(cos(t)); });
}

Real clausen_s(int j, const Rational& q, int digits) {
  // sin(pi) would leave a rounding residue; exact zeros keep S_j(0) = S_j(1/2) = 0.
  const Rational x = mod_one(q);
  if (x == 0 || x == Rational(1, 2)) return 0;
  return periodic_sum(j, q, digits, [](const Real& t) { return Real(sin(t)); });
}

Real dirichlet_l3(int j, int digits) {
  if (j < 1) throw UsageError("L(j, chi_3) needs j >= 1");
  if (j == 1) return (digamma(make_rational(2, 3), digits) - digamma(make_rational(1, 3), digits)) / 3;
  return (hurwitz_zeta(j, make_rational(1, 3), digits) - hurwitz_zeta(j, make_rational(2, 3), digits)) /
         ipow(Real(3), static_cast<unsigned>(j));
}

Real eval_constant(const BaseConstant& c, const Precision& prec) {
  PrecisionScope scope(prec.digits);
  switch (c.kind) {
    case ConstantKind::Pi: return pi_value();
    case ConstantKind::Sqrt3: return sqrt(Real(3));
    case ConstantKind::Zeta: return riemann_zeta(c.index, prec.digits);
    case ConstantKind::ClausenC: return clausen_c(c.index, c.angle, prec.digits);
    case ConstantKind::ClausenS: return clausen_s(c.index, c.angle, prec.digits);
    case ConstantKind::DirichletL3: return dirichlet_l3(c.index, prec.digits);
    case ConstantKind::ImagUnit: break;
  }
  throw DomainError("the imaginary unit has no real value");
}

Real eval_symbolic(const sym::SymbolicValue& v, const Precision& prec) {
  // Guard digits absorb cancellation between large terms.
  Precision guarded = prec;
  guarded.digits += kGuardDigits;
  PrecisionScope scope(guarded.digits);
  std::map<BaseConstant, Real> values;
  Real total = 0;
  for (const auto& [mono, coef] : v.terms()) {
    if (mono.imag_power() != 0) throw DomainError("eval_symbolic: value carries a power of i");
    Real term = to_real(coef);
    for (const auto& [c, e] : mono.factors()) {
      auto it = values.find(c);
      if (it == values.end()) it = values.emplace(c, eval_constant(c, guarded)).first;
      term *= ipow(it->second, static_cast<unsigned>(e));
    }
    total += term;
  }
  return total;
}

}  // namespace tornheim::numeric

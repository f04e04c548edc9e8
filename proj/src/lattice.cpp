#include "tornheim/numeric/lattice.hpp"

#include <omp.h>

#include <cmath>
#include <functional>

#include "tornheim/arith/bernoulli.hpp"
#include "tornheim/error.hpp"
#include "tornheim/numeric/special.hpp"

namespace tornheim::numeric {
namespace {

using arith::BernoulliConvention;
using arith::bernoulli_number;
using arith::factorial;
using Series = std::vector<Real>;

Real ipow(Real base, unsigned e) {
  Real out = 1;
  while (e != 0) {
    if (e & 1U) out *= base;
    e >>= 1U;
    if (e != 0) base *= base;
  }
  return out;
}

void validate_spec(const LatticeSpec& spec) {
  int along_m = 0;
  int along_n = 0;
  int total = 0;
  for (const auto& f : spec) {
    if (f.cm < 0 || f.cn < 0 || (f.cm == 0 && f.cn == 0) || f.exponent < 1)
      throw UsageError("lattice factor needs nonnegative coefficients, not both zero, and exponent >= 1");
    if (f.cm > 0) along_m += f.exponent;
    if (f.cn > 0) along_n += f.exponent;
    total += f.exponent;
  }
  if (along_m < 2 || along_n < 2 || total < 3) throw UsageError("lattice sum diverges for these exponents");
}

LatticeOptions resolve(const LatticeOptions& in, int digits) {
  LatticeOptions out = in;
  if (out.cutoff <= 0) out.cutoff = std::max(20, static_cast<int>(std::ceil(1.45 * digits)) - 14);
  if (out.em_order <= 0) out.em_order = out.cutoff / 3 + 2;
  if (out.quad_order <= 0) out.quad_order = digits + 20;
  return out;
}

void run_indexed(int count, Execution exec, const std::function<void(int)>& body) {
  if (exec == Execution::Parallel) {
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < count; ++i) body(i);
  } else {
    for (int i = 0; i < count; ++i) body(i);
  }
}

class Kernel {
 public:
  Kernel(const LatticeSpec& spec, const LatticeOptions& opt)
      : spec_(spec),
        x0_(opt.cutoff + 1),
        order_(2 * opt.em_order),
        rule_lo_(gauss_legendre(opt.quad_order)),
        rule_hi_(gauss_legendre(opt.quad_order + opt.quad_order / 2)) {
    for (const auto& f : spec_) weight_ += f.exponent;
    for (int r = 0; r < order_; ++r) fact_.push_back(to_real(Rational(factorial(static_cast<unsigned>(r)))));
    // E[h] = int h + h(x0)/2 - sum_j B_2j/(2j)! h^(2j-1)(x0): weights on r! * Taylor coefficient r.
    em_.emplace_back(0, Real(1) / 2);
    for (int j = 1; j <= opt.em_order; ++j) {
      const unsigned k = static_cast<unsigned>(2 * j);
      const Real b = to_real(bernoulli_number(k, BernoulliConvention::AtZero) / Rational(factorial(k)));
      em_.emplace_back(2 * j - 1, -b * fact_[2 * j - 1]);
    }
  }

  Real f(const Real& x, const Real& y) const {
    Real den = 1;
    for (const auto& fac : spec_) den *= ipow(fac.cm * x + fac.cn * y, static_cast<unsigned>(fac.exponent));
    return 1 / den;
  }

  // Taylor coefficients in h of f(x + dx h, y + dy h) up to h^(len-1).
  Series taylor(const Real& x, const Real& y, int dx, int dy, int len) const {
    Series s(len, Real(0));
    s[0] = 1;
    Series fs(len);
    for (const auto& fac : spec_) {
      const Real base = fac.cm * x + fac.cn * y;
      const long slope = fac.cm * dx + fac.cn * dy;
      const Real lead = 1 / ipow(base, static_cast<unsigned>(fac.exponent));
      if (slope == 0) {
        for (auto& v : s) v *= lead;
        continue;
      }
      const Real g = slope / base;
      fs[0] = lead;
      for (int k = 1; k < len; ++k) fs[k] = fs[k - 1] * g * (-(fac.exponent + k - 1)) / k;
      for (int k = len - 1; k >= 0; --k) {
        Real acc = 0;
        for (int i = 0; i <= k; ++i) acc += s[i] * fs[k - i];
        s[k] = std::move(acc);
      }
    }
    return s;
  }

  // Euler-Maclaurin boundary terms from a Taylor series; `last` gets the
  // magnitude of the highest-order term.
  Real boundary(const Series& s, Real* last = nullptr) const {
    Real out = 0;
    for (const auto& [r, w] : em_) out += w * s[r];
    if (last != nullptr) *last = abs(em_.back().second * s[em_.back().first]);
    return out;
  }

  // int_{x0}^inf h(t) dt with t = x0/u, for both quadrature rules.
  template <typename H>
  std::pair<Real, Real> tail_integral(H&& h) const {
    auto run = [&](const QuadratureRule& rule) {
      Real acc = 0;
      for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        const Real& u = rule.nodes[i];
        acc += rule.weights[i] * h(x0_ / u) * x0_ / (u * u);
      }
      return acc;
    };
    return {run(rule_lo_), run(rule_hi_)};
  }

  struct Partial {
    Real value = 0;
    Real error = 0;
  };

  // Row m: the direct block, plus tails in n at x = m and in m at y = m.
  Partial row(int m) const {
    Partial out;
    const Real xm = m;
    for (int n = 1; n < x0_; ++n) out.value += f(xm, Real(n));
    const Real x0 = x0_;
    for (int side = 0; side < 2; ++side) {
      auto [lo, hi] = side == 0 ? tail_integral([&](const Real& t) { return f(xm, t); })
                                : tail_integral([&](const Real& t) { return f(t, xm); });
      Real last;
      const Series s = side == 0 ? taylor(xm, x0, 0, 1, order_) : taylor(x0, xm, 1, 0, order_);
      out.value += hi + boundary(s, &last);
      out.error += abs(hi - lo) + last;
    }
    return out;
  }

  // Corner quadrant [x0, inf)^2 split into per-node line-integral pieces
  // (index < 2 * nodes) and the closed part (computed once).
  int line_nodes() const { return static_cast<int>(rule_lo_.nodes.size() + rule_hi_.nodes.size()); }

  // Contribution of one quadrature node to the two corner line integrals.
  Real corner_line_node(int index) const {
    const bool hi = index >= static_cast<int>(rule_lo_.nodes.size());
    const QuadratureRule& rule = hi ? rule_hi_ : rule_lo_;
    const std::size_t i = hi ? index - rule_lo_.nodes.size() : index;
    const Real& u = rule.nodes[i];
    const Real t = x0_ / u;
    const Real x0 = x0_;
    const Real jac = rule.weights[i] * x0 / (u * u);
    return jac * (boundary(taylor(t, x0, 0, 1, order_)) + boundary(taylor(x0, t, 1, 0, order_)));
  }

  bool corner_node_is_hi(int index) const { return index >= static_cast<int>(rule_lo_.nodes.size()); }

  Partial corner_closed() const {
    Partial out;
    const int k = weight_;
    auto quad01 = [&](const QuadratureRule& rule, bool swap) {
      Real acc = 0;
      for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        const Real& t = rule.nodes[i];
        acc += rule.weights[i] * (swap ? f(t, Real(1)) : f(Real(1), t)) * ipow(t, static_cast<unsigned>(k - 2));
      }
      return acc;
    };
    const Real scale = ipow(Real(x0_), static_cast<unsigned>(k - 2));
    const Real q_lo = (quad01(rule_lo_, false) + quad01(rule_lo_, true)) / (k - 2) / scale;
    const Real q_hi = (quad01(rule_hi_, false) + quad01(rule_hi_, true)) / (k - 2) / scale;
    out.value = q_hi;
    out.error = abs(q_hi - q_lo);

    // Mixed boundary terms from the bivariate Taylor series at (x0, x0).
    const int K = order_;
    std::vector<Series> s(K, Series(K, Real(0)));
    s[0][0] = 1;
    for (const auto& fac : spec_) {
      const Real base = Real(fac.cm + fac.cn) * x0_;
      std::vector<Series> fs(K, Series(K, Real(0)));
      Real coef = 1 / ipow(base, static_cast<unsigned>(fac.exponent));
      for (int d = 0; d < 2 * K - 1; ++d) {
        if (d > 0) coef *= Real(-(fac.exponent + d - 1)) / (Real(d) * base);
        for (int i = std::max(0, d - K + 1); i <= std::min(d, K - 1); ++i) {
          const BigInt c = arith::binomial(d, i);
          const mpz_class pm = pow_ui(fac.cm, i);
          const mpz_class pn = pow_ui(fac.cn, d - i);
          if (c * pm * pn == 0) continue;
          fs[i][d - i] = coef * to_real(BigInt(c * pm * pn));
        }
      }
      std::vector<Series> t(K, Series(K, Real(0)));
      for (int i1 = 0; i1 < K; ++i1)
        for (int j1 = 0; j1 < K; ++j1) {
          if (s[i1][j1] == 0) continue;
          for (int i2 = 0; i1 + i2 < K; ++i2)
            for (int j2 = 0; j1 + j2 < K; ++j2)
              if (fs[i2][j2] != 0) t[i1 + i2][j1 + j2] += s[i1][j1] * fs[i2][j2];
        }
      s = std::move(t);
    }
    for (const auto& [rx, wx] : em_)
      for (const auto& [ry, wy] : em_) out.value += wx * wy * s[rx][ry];
    const auto& [rl, wl] = em_.back();
    out.error += abs(wl * em_.front().second * (s[rl][0] + s[0][rl]));
    return out;
  }

 private:
  static mpz_class pow_ui(long base, int e) {
    mpz_class out;
    mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(e));
    return out;
  }

  const LatticeSpec& spec_;
  int x0_;
  int order_;
  int weight_ = 0;
  const QuadratureRule& rule_lo_;
  const QuadratureRule& rule_hi_;
  std::vector<Real> fact_;
  std::vector<std::pair<int, Real>> em_;
};

}  // namespace

LatticeResult lattice_sum(const LatticeSpec& spec, const Precision& prec, Execution exec,
                          const LatticeOptions& options) {
  prec.validate();
  validate_spec(spec);
  const LatticeOptions opt = resolve(options, prec.digits);
  PrecisionScope scope(prec.digits);
  const Kernel kernel(spec, opt);

  const int rows = opt.cutoff;
  std::vector<Kernel::Partial> row_parts(rows);
  run_indexed(rows, exec, [&](int i) { row_parts[i] = kernel.row(i + 1); });

  const int nodes = kernel.line_nodes();
  std::vector<Real> node_parts(nodes);
  run_indexed(nodes, exec, [&](int i) { node_parts[i] = kernel.corner_line_node(i); });

  Kernel::Partial total = kernel.corner_closed();
  Real line_lo = 0;
  Real line_hi = 0;
  for (int i = 0; i < nodes; ++i) (kernel.corner_node_is_hi(i) ? line_hi : line_lo) += node_parts[i];
  total.value += line_hi;
  total.error += abs(line_hi - line_lo);
  for (const auto& p : row_parts) {
    total.value += p.value;
    total.error += p.error;
  }

  LatticeResult out;
  out.value = total.value;
  out.error_bound = total.error + pow10_neg(prec.digits - 2) * abs(total.value);
  out.cutoff = opt.cutoff;
  out.em_order = opt.em_order;
  out.quad_order = opt.quad_order;
  out.digits = prec.digits;
  if (out.error_bound > prec.tolerance * abs(out.value))
    throw NumericFailure("lattice sum error estimate " + to_string(out.error_bound, 3) +
                         " exceeds tolerance; raise the cutoff or precision");
  return out;
}

LatticeResult eval_tornheim(int a, int b, int k1, int k2, int k3, const Precision& prec, Execution exec,
                            const LatticeOptions& options) {
  if (a < 1 || b < 1 || k1 < 1 || k2 < 1 || k3 < 1) throw UsageError("eval_tornheim needs positive parameters");
  return lattice_sum({{1, 0, k1}, {0, 1, k2}, {a, b, k3}}, prec, exec, options);
}

LatticeResult eval_g2_series(const std::array<int, 6>& k, const Precision& prec, Execution exec,
                             const LatticeOptions& options) {
  static constexpr std::array<std::pair<long, long>, 6> forms{{{1, 0}, {0, 1}, {1, 1}, {1, 2}, {1, 3}, {2, 3}}};
  LatticeSpec spec;
  for (std::size_t i = 0; i < 6; ++i) {
    if (k[i] < 1) throw UsageError("G2 exponents must be positive");
    spec.push_back({forms[i].first, forms[i].second, k[i]});
  }
  return lattice_sum(spec, prec, exec, options);
}

}  // namespace tornheim::numeric

#include <chrono>

#include "doctest.h"
#include "support.hpp"
#include "tornheim/error.hpp"
#include "tornheim/numeric/check.hpp"
#include "tornheim/numeric/lattice.hpp"
#include "tornheim/numeric/special.hpp"

using namespace tornheim;
using namespace tornheim::testing;
using namespace tornheim::numeric;
using sym::BaseConstant;

TEST_CASE("precision invariants") {
  CHECK(Precision{}.tolerance_digits() == 10);
  CHECK_NOTHROW(Precision{}.validate());
  CHECK_THROWS_AS((Precision{19, 1e-10}.validate()), UsageError);
  CHECK_THROWS_AS((Precision{30, 0}.validate()), UsageError);
  {
    PrecisionScope scope(60);
    CHECK(Real::default_precision() == 60);
  }
}

TEST_CASE("basic constants") {
  const Precision prec;
  PrecisionScope scope(prec.digits);
  const Real pi = eval_constant(BaseConstant::pi(), prec);
  CHECK(close(eval_constant(BaseConstant::zeta(2), prec), pi * pi / 6, 1e-29));
  CHECK(to_string(eval_constant(BaseConstant::zeta(2), prec), 13) == "1.644934066848e+00");
  CHECK(close(eval_constant(BaseConstant::zeta(4), prec), pi * pi * pi * pi / 90, 1e-29));
  CHECK(eval_constant(BaseConstant::clausen_s(4, q(1, 2)), prec) == 0);
  CHECK(close(eval_constant(BaseConstant::clausen_c(5, q(1, 3)), prec),
              eval_constant(BaseConstant::zeta(5), prec) * Real(-40) / 81, 1e-29));
  CHECK(close(eval_constant(BaseConstant::dirichlet_l3(1), prec), pi / (3 * sqrt(Real(3))), 1e-29));
  CHECK(close(eval_constant(BaseConstant::clausen_c(2, q(1, 4)), prec), -pi * pi / 48, 1e-29));
  CHECK_THROWS_AS(eval_constant(BaseConstant::imag_unit(), prec), DomainError);
  CHECK_THROWS_AS(clausen_c(1, q(1, 3), 30), UsageError);
}

TEST_CASE("Clausen self-consistency") {
  const int digits = 40;
  PrecisionScope scope(digits);
  for (int j = 2; j <= 7; ++j) {
    CHECK(close(clausen_c(j, 0, digits), riemann_zeta(j, digits), 1e-38));
    const Real z = riemann_zeta(j, digits);
    for (const Rational x : {q(1, 5), q(2, 7), q(5, 12), q(1, 8), q(3, 4)}) {
      const Real c = clausen_c(j, x, digits);
      const Real s = clausen_s(j, x, digits);
      CHECK(c * c + s * s <= z * z);
      // distribution relations with M = 2 and 3
      for (int m : {2, 3}) {
        Real sc = 0;
        Real ss = 0;
        for (int c0 = 0; c0 < m; ++c0) {
          sc += clausen_c(j, (x + c0) / m, digits);
          ss += clausen_s(j, (x + c0) / m, digits);
        }
        const Real scale = to_real(pow(Rational(m), 1 - j));
        CHECK(close(sc, scale * c, 1e-34, 1e-30));
        CHECK(close(ss, scale * s, 1e-34, 1e-30));
      }
    }
  }
}

TEST_CASE("eval_symbolic") {
  const Precision prec;
  const auto v = zeta(5) * Rational(4) - pi(2) * zeta(3) * q(1, 3);
  CHECK(to_string(eval_symbolic(v, prec), 5) == "1.9310e-01");
  CHECK(eval_symbolic(sym::SymbolicValue(), prec) == 0);
  CHECK(abs(eval_symbolic(pi() * sqrt3() - l3(1) * Rational(9), prec)) < Real("1e-29"));
  CHECK_THROWS_AS(eval_symbolic(imag() * zeta(3), prec), DomainError);
}

TEST_CASE("Tornheim lattice sums") {
  const Precision prec;
  const auto r = eval_tornheim(1, 1, 1, 1, 3, prec);
  CHECK(to_string(r.value, 4) == "1.931e-01");
  CHECK(close(r.value, eval_symbolic(zeta(5) * Rational(4) - zeta(2) * zeta(3) * Rational(2), prec), 1e-28));
  CHECK(r.error_bound < Real("1e-25"));
  const auto ab = eval_tornheim(2, 5, 1, 3, 1, prec);
  const auto ba = eval_tornheim(5, 2, 3, 1, 1, prec);
  CHECK(close(ab.value, ba.value, 1e-28));
  CHECK_THROWS_AS(eval_tornheim(1, 1, 0, 1, 3, prec), UsageError);
  CHECK_THROWS_AS(lattice_sum({{1, 0, 1}, {0, 1, 1}}, prec), UsageError);  // diverges
}

TEST_CASE("a product of zeta values as a lattice sum") {
  const Precision prec;
  const auto r = lattice_sum({{1, 0, 2}, {0, 1, 3}}, prec);
  CHECK(close(r.value, eval_symbolic(zeta(2) * zeta(3), prec), 1e-28));
}

TEST_CASE("doubling the cutoff stays within the error estimate") {
  const Precision prec;
  for (auto [a, b] : {std::pair{1, 1}, {1, 3}, {3, 4}}) {
    const auto base = eval_tornheim(a, b, 2, 1, 2, prec);
    LatticeOptions doubled;
    doubled.cutoff = 2 * base.cutoff;
    const auto wide = eval_tornheim(a, b, 2, 1, 2, prec, Execution::Parallel, doubled);
    CHECK(abs(wide.value - base.value) <= base.error_bound);
  }
}

TEST_CASE("serial and parallel kernels agree bit for bit") {
  const Precision prec;
  for (const LatticeSpec& spec : {LatticeSpec{{1, 0, 1}, {0, 1, 2}, {2, 3, 2}},
                                  LatticeSpec{{1, 0, 2}, {0, 1, 1}, {1, 1, 1}, {1, 2, 1}, {1, 3, 1}, {2, 3, 1}}}) {
    const auto s = lattice_sum(spec, prec, Execution::Serial);
    const auto p = lattice_sum(spec, prec, Execution::Parallel);
    CHECK(s.value == p.value);
    CHECK(s.error_bound == p.error_bound);
  }
}

TEST_CASE("results at P and P + 10 digits agree") {
  for (int digits : {30, 40}) {
    const auto lo = eval_tornheim(1, 2, 1, 2, 2, {digits, 1e-10});
    const auto hi = eval_tornheim(1, 2, 1, 2, 2, {digits + 10, 1e-10});
    CHECK(close(lo.value, hi.value, std::pow(10.0, -digits + 5)));
  }
}

TEST_CASE("G2 lattice sums") {
  const Precision prec;
  const auto v = eval_g2_series({2, 1, 1, 1, 1, 1}, prec);
  CHECK(close(v.value, eval_symbolic(zeta(7) * q(-109, 1296) + zeta(2) * zeta(5) * q(1, 18), prec), 1e-28));
  // increasing any exponent lowers the sum
  const auto base = eval_g2_series({1, 1, 1, 1, 1, 2}, prec);
  for (std::size_t i = 0; i < 6; ++i) {
    std::array<int, 6> k{1, 1, 1, 1, 1, 2};
    ++k[i];
    CHECK(eval_g2_series(k, prec).value < base.value);
  }
}

TEST_CASE("an unreachable tolerance fails loudly") {
  LatticeOptions tiny;
  tiny.cutoff = 2;
  tiny.em_order = 1;
  tiny.quad_order = 4;
  CHECK_THROWS_AS(eval_tornheim(1, 1, 1, 1, 3, Precision{30, 1e-15}, Execution::Serial, tiny), NumericFailure);
}

TEST_CASE("check records") {
  const Precision prec;
  const auto oracle = eval_tornheim(1, 1, 1, 1, 3, prec);
  const auto good = make_check(eval_symbolic(zeta(5) * Rational(4) - pi(2) * zeta(3) * q(1, 3), prec), oracle, prec);
  CHECK(good.pass);
  CHECK(good.rel_residual < 1e-25);
  const auto bad = make_check(eval_symbolic(zeta(5) * Rational(4), prec), oracle, prec);
  CHECK_FALSE(bad.pass);
  const auto round = check_from_json(nlohmann::json::parse(to_json(good).dump()));
  CHECK(to_json(round) == to_json(good));
}

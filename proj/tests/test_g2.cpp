#include "doctest.h"
#include "support.hpp"
#include "tornheim/constants/format.hpp"
#include "tornheim/error.hpp"
#include "tornheim/g2/evaluate.hpp"
#include "tornheim/numeric/lattice.hpp"
#include "tornheim/numeric/special.hpp"

using namespace tornheim;
using namespace tornheim::testing;

TEST_CASE("zeta(2,1,1,1,1,1; G2)") {
  const auto r = g2::evaluate_g2({{2, 1, 1, 1, 1, 1}}, {});
  CHECK(r.clausen == zeta(7) * q(-109, 1296) + pi(2) * zeta(5) * q(1, 108));
  CHECK(r.dirichlet == zeta(7) * q(-109, 1296) + zeta(2) * zeta(5) * q(1, 18));
  CHECK(r.check.pass);
  CHECK(r.dirichlet_check.pass);
  CHECK(r.check.rel_residual < 1e-25);
}

TEST_CASE("zeta(1,1,1,1,1,2; G2)") {
  const auto r = g2::evaluate_g2({{1, 1, 1, 1, 1, 2}}, {});
  CHECK(r.clausen == zeta(7) * q(2507, 1296) - pi(2) * zeta(5) * q(505, 648) + pi() * cl_s(6, q(1, 3)) * q(9, 4));
  CHECK(r.dirichlet ==
        zeta(7) * q(2507, 1296) - zeta(2) * zeta(5) * q(505, 108) + l3(1) * l3(6) * q(81, 8));
  CHECK(r.check.pass);
  CHECK(r.dirichlet_check.pass);
  CHECK(numeric::to_string(numeric::eval_symbolic(r.clausen, {}), 16) == "1.999532659664545e-03");
  CHECK(r.terms.size() == 5);
}

TEST_CASE("G2 requests") {
  CHECK(g2::G2Request{{1, 1, 1, 1, 1, 2}}.weight() == 7);
  CHECK_THROWS_AS((g2::G2Request{{1, 1, 1, 1, 1, 1}}.validate()), UsageError);
  CHECK_THROWS_AS((g2::G2Request{{0, 1, 1, 1, 1, 3}}.validate()), UsageError);
  CHECK_THROWS_AS(g2::evaluate_g2({{1, 1, 1, 1, 1, 1}}, {}), UsageError);
}

TEST_CASE("G2 results are deterministic and serialize") {
  const auto a = g2::evaluate_g2({{1, 2, 1, 1, 1, 1}}, {});
  const auto b = g2::evaluate_g2({{1, 2, 1, 1, 1, 1}}, {});
  CHECK(a.clausen == b.clausen);
  CHECK(a.dirichlet == b.dirichlet);
  CHECK(a.check.pass);
  const auto j = g2::to_json(a);
  CHECK(j.dump() == g2::to_json(b).dump());
  CHECK(sym::symbolic_from_json(j.at("clausen").at("value")) == a.clausen);
}

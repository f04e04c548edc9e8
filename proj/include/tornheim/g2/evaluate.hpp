#pragma once

#include <array>

#include "json.hpp"
#include "tornheim/constants/symbolic.hpp"
#include "tornheim/numeric/check.hpp"
#include "tornheim/pfd/rewrite.hpp"

namespace tornheim::g2 {

/// zeta(k1, ..., k6; G2) = sum 1/(m^k1 n^k2 (m+n)^k3 (m+2n)^k4 (m+3n)^k5 (2m+3n)^k6).
struct G2Request {
  std::array<int, 6> k{1, 1, 1, 1, 1, 1};

  int weight() const;
  /// Throws UsageError unless all k_i >= 1 and the weight is odd.
  void validate() const;
  pfd::TermProduct as_term() const;
};

struct G2ClosedForm {
  G2Request request;
  sym::SymbolicValue clausen;    // pi^a zeta(b) and pi^a S_b(1/3) monomials
  sym::SymbolicValue dirichlet;  // zeta(2n)zeta(k-2n) and L(2n+1)L(k-2n-1) products
  std::vector<pfd::TornheimTerm> terms;
  pfd::ReductionTrace trace;
  numeric::NumericCheckRecord check;            // clausen basis vs the lattice sum
  numeric::NumericCheckRecord dirichlet_check;  // dirichlet basis vs the lattice sum
};

/// Reduces to Tornheim series, evaluates each with the parity engine and
/// converts to the Dirichlet basis. Both forms are checked against the
/// G2 lattice sum; a failed check throws VerificationFailure, so every
/// returned value is verified.
G2ClosedForm evaluate_g2(const G2Request& req, const numeric::Precision& prec);

nlohmann::json to_json(const G2ClosedForm& r);

}  // namespace tornheim::g2

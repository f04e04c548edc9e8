#pragma once

#include <string>

#include "json.hpp"
#include "tornheim/numeric/lattice.hpp"

namespace tornheim::numeric {

/// Comparison of a symbolic value (lhs) against the lattice oracle (rhs).
/// pass iff |lhs - rhs| <= tolerance * max(|rhs|, absolute_floor).
struct NumericCheckRecord {
  std::string lhs;
  std::string rhs;
  double abs_residual = 0;
  double rel_residual = 0;
  double tolerance = 0;
  double absolute_floor = 0;
  double oracle_error_bound = 0;
  int digits = 0;
  int cutoff = 0;
  int em_order = 0;
  int quad_order = 0;
  bool pass = false;
};

inline constexpr double kAbsoluteFloor = 1e-30;

NumericCheckRecord make_check(const Real& lhs, const LatticeResult& rhs, const Precision& prec);

nlohmann::json to_json(const NumericCheckRecord& r);
NumericCheckRecord check_from_json(const nlohmann::json& j);

}  // namespace tornheim::numeric

#include "tornheim/numeric/check.hpp"

#include <algorithm>

namespace tornheim::numeric {

NumericCheckRecord make_check(const Real& lhs, const LatticeResult& rhs, const Precision& prec) {
  PrecisionScope scope(prec.digits);
  NumericCheckRecord r;
  const Real diff = abs(lhs - rhs.value);
  const Real scale = abs(rhs.value);
  r.lhs = to_string(lhs, prec.digits);
  r.rhs = to_string(rhs.value, prec.digits);
  r.abs_residual = static_cast<double>(diff);
  r.rel_residual = scale == 0 ? r.abs_residual : static_cast<double>(diff / scale);
  r.tolerance = prec.tolerance;
  r.absolute_floor = kAbsoluteFloor;
  r.oracle_error_bound = static_cast<double>(rhs.error_bound);
  r.digits = prec.digits;
  r.cutoff = rhs.cutoff;
  r.em_order = rhs.em_order;
  r.quad_order = rhs.quad_order;
  r.pass = diff <= Real(prec.tolerance) * std::max(scale, Real(kAbsoluteFloor));
  return r;
}

nlohmann::json to_json(const NumericCheckRecord& r) {
  return {{"lhs", r.lhs},
          {"rhs", r.rhs},
          {"abs_residual", r.abs_residual},
          {"rel_residual", r.rel_residual},
          {"tolerance", r.tolerance},
          {"absolute_floor", r.absolute_floor},
          {"oracle_error_bound", r.oracle_error_bound},
          {"digits", r.digits},
          {"cutoff", r.cutoff},
          {"em_order", r.em_order},
          {"quad_order", r.quad_order},
          {"pass", r.pass}};
}

NumericCheckRecord check_from_json(const nlohmann::json& j) {
  NumericCheckRecord r;
  r.lhs = j.at("lhs").get<std::string>();
  r.rhs = j.at("rhs").get<std::string>();
  r.abs_residual = j.at("abs_residual").get<double>();
  r.rel_residual = j.at("rel_residual").get<double>();
  r.tolerance = j.at("tolerance").get<double>();
  r.absolute_floor = j.at("absolute_floor").get<double>();
  r.oracle_error_bound = j.at("oracle_error_bound").get<double>();
  r.digits = j.at("digits").get<int>();
  r.cutoff = j.at("cutoff").get<int>();
  r.em_order = j.at("em_order").get<int>();
  r.quad_order = j.at("quad_order").get<int>();
  r.pass = j.at("pass").get<bool>();
  return r;
}

}  // namespace tornheim::numeric

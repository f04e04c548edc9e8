#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "tornheim/constants/symbolic.hpp"

namespace tornheim::sym {

/// Terms in display order: zeta-only monomials first, then C, S and L
/// families; within a family by ascending pi power, then by the weight
/// carried outside the leading constant.
std::vector<std::pair<ConstMonomial, Rational>> display_order(const SymbolicValue& v);

/// "-109/1296 ζ(7) + 1/18 ζ(2)ζ(5)"
std::string to_text(const SymbolicValue& v);

/// "4\zeta(5)-\frac{\pi^2}{3}\zeta(3)"
std::string to_latex(const SymbolicValue& v);

nlohmann::json to_json(const Rational& q);
Rational rational_from_json(const nlohmann::json& j);

/// {"terms":[{"coefficient":{"num":..,"den":..},"factors":[...]}]} with
/// terms in display order.
nlohmann::json to_json(const SymbolicValue& v);
SymbolicValue symbolic_from_json(const nlohmann::json& j);

}  // namespace tornheim::sym

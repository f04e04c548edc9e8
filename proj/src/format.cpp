#include "tornheim/constants/format.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace tornheim::sym {
namespace {

int family(const ConstMonomial& m) {
  int f = 0;
  for (const auto& [c, e] : m.factors()) {
    switch (c.kind) {
      case ConstantKind::ClausenC: f = std::max(f, 1); break;
      case ConstantKind::ClausenS: f = std::max(f, 2); break;
      case ConstantKind::DirichletL3: f = std::max(f, 3); break;
      default: break;
    }
  }
  return f;
}

int secondary_weight(const ConstMonomial& m) {
  int top = 0, total = 0;
  for (const auto& [c, e] : m.factors()) {
    if (c.kind == ConstantKind::Pi) continue;
    total += c.weight() * e;
    top = std::max(top, c.weight());
  }
  return total - top;
}

std::string angle_text(const Rational& q) { return q.get_num().get_str() + "/" + q.get_den().get_str(); }

std::string factor_text(const BaseConstant& c) {
  const std::string j = std::to_string(c.index);
  switch (c.kind) {
    case ConstantKind::Pi: return "π";
    case ConstantKind::ImagUnit: return "i";
    case ConstantKind::Sqrt3: return "√3";
    case ConstantKind::Zeta: return "ζ(" + j + ")";
    case ConstantKind::ClausenC: return "C_" + j + "(" + angle_text(c.angle) + ")";
    case ConstantKind::ClausenS: return "S_" + j + "(" + angle_text(c.angle) + ")";
    case ConstantKind::DirichletL3: return "L(" + j + ",χ3)";
  }
  return "?";
}

std::string latex_index(int j) { return j < 10 ? std::to_string(j) : "{" + std::to_string(j) + "}"; }

std::string factor_latex(const BaseConstant& c) {
  switch (c.kind) {
    case ConstantKind::Pi: return "\\pi";
    case ConstantKind::ImagUnit: return "i";
    case ConstantKind::Sqrt3: return "\\sqrt{3}";
    case ConstantKind::Zeta: return "\\zeta(" + std::to_string(c.index) + ")";
    case ConstantKind::ClausenC:
    case ConstantKind::ClausenS:
      return std::string(c.kind == ConstantKind::ClausenC ? "C_" : "S_") + latex_index(c.index) + "(\\tfrac{" +
             c.angle.get_num().get_str() + "}{" + c.angle.get_den().get_str() + "})";
    case ConstantKind::DirichletL3: return "L(" + std::to_string(c.index) + ",\\chi_3)";
  }
  return "?";
}

std::string power_suffix_text(int e) { return e == 1 ? "" : "^" + std::to_string(e); }
std::string power_suffix_latex(int e) { return e == 1 ? "" : "^" + latex_index(e); }

const char* kind_name(ConstantKind k) {
  switch (k) {
    case ConstantKind::Pi: return "pi";
    case ConstantKind::ImagUnit: return "i";
    case ConstantKind::Sqrt3: return "sqrt3";
    case ConstantKind::Zeta: return "zeta";
    case ConstantKind::ClausenC: return "C";
    case ConstantKind::ClausenS: return "S";
    case ConstantKind::DirichletL3: return "L_chi3";
  }
  return "?";
}

ConstantKind kind_from_name(const std::string& s) {
  for (auto k : {ConstantKind::Pi, ConstantKind::ImagUnit, ConstantKind::Sqrt3, ConstantKind::Zeta,
                 ConstantKind::ClausenC, ConstantKind::ClausenS, ConstantKind::DirichletL3}) {
    if (s == kind_name(k)) return k;
  }
  throw std::invalid_argument("unknown constant symbol: " + s);
}

}  // namespace

std::vector<std::pair<ConstMonomial, Rational>> display_order(const SymbolicValue& v) {
  std::vector<std::pair<ConstMonomial, Rational>> out(v.terms().begin(), v.terms().end());
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    const auto ka = std::make_tuple(family(a.first), a.first.pi_power(), secondary_weight(a.first));
    const auto kb = std::make_tuple(family(b.first), b.first.pi_power(), secondary_weight(b.first));
    return ka < kb;
  });
  return out;
}

std::string to_text(const SymbolicValue& v) {
  if (v.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [mono, coef] : display_order(v)) {
    const Rational mag = abs(coef);
    if (first) {
      if (coef < 0) out += "-";
    } else {
      out += coef < 0 ? " - " : " + ";
    }
    first = false;
    std::string factors;
    for (const auto& [c, e] : mono.factors()) {
      if (c.kind == ConstantKind::Pi) factors = factor_text(c) + power_suffix_text(e) + factors;
    }
    for (const auto& [c, e] : mono.factors()) {
      if (c.kind != ConstantKind::Pi) factors += factor_text(c) + power_suffix_text(e);
    }
    if (factors.empty()) {
      out += mag.get_str();
    } else if (mag == 1) {
      out += factors;
    } else {
      out += mag.get_str() + " " + factors;
    }
  }
  return out;
}

std::string to_latex(const SymbolicValue& v) {
  if (v.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [mono, coef] : display_order(v)) {
    if (coef < 0) {
      out += "-";
    } else if (!first) {
      out += "+";
    }
    first = false;
    const BigInt num = abs(coef.get_num());
    const BigInt den = coef.get_den();
    std::string pi_part, rest;
    for (const auto& [c, e] : mono.factors()) {
      if (c.kind == ConstantKind::Pi) {
        pi_part = factor_latex(c) + power_suffix_latex(e);
      } else {
        rest += factor_latex(c) + power_suffix_latex(e);
      }
    }
    const bool bare = pi_part.empty() && rest.empty();
    std::string numerator = (num == 1 && !bare && !(den != 1 && pi_part.empty())) ? "" : num.get_str();
    numerator += pi_part;
    if (den == 1) {
      out += numerator + rest;
    } else {
      out += "\\frac{" + numerator + "}{" + den.get_str() + "}" + rest;
    }
  }
  return out;
}

nlohmann::json to_json(const Rational& q) {
  return {{"num", q.get_num().get_str()}, {"den", q.get_den().get_str()}};
}

Rational rational_from_json(const nlohmann::json& j) {
  return parse_rational(j.at("num").get<std::string>() + "/" + j.at("den").get<std::string>());
}

nlohmann::json to_json(const SymbolicValue& v) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [mono, coef] : display_order(v)) {
    nlohmann::json factors = nlohmann::json::array();
    for (const auto& [c, e] : mono.factors()) {
      nlohmann::json f = {{"symbol", kind_name(c.kind)}, {"exponent", e}};
      if (c.kind == ConstantKind::Zeta || c.kind == ConstantKind::ClausenC || c.kind == ConstantKind::ClausenS ||
          c.kind == ConstantKind::DirichletL3)
        f["index"] = c.index;
      if (c.kind == ConstantKind::ClausenC || c.kind == ConstantKind::ClausenS) f["q"] = to_json(c.angle);
      factors.push_back(std::move(f));
    }
    terms.push_back({{"coefficient", to_json(coef)}, {"factors", std::move(factors)}});
  }
  return {{"terms", std::move(terms)}};
}

SymbolicValue symbolic_from_json(const nlohmann::json& j) {
  SymbolicValue out;
  for (const auto& t : j.at("terms")) {
    SymbolicValue piece(rational_from_json(t.at("coefficient")));
    for (const auto& f : t.at("factors")) {
      BaseConstant c;
      c.kind = kind_from_name(f.at("symbol").get<std::string>());
      if (f.contains("index")) c.index = f.at("index").get<int>();
      if (f.contains("q")) c.angle = rational_from_json(f.at("q"));
      piece = piece * SymbolicValue::of(c, f.at("exponent").get<int>());
    }
    out += piece;
  }
  return out;
}

}  // namespace tornheim::sym

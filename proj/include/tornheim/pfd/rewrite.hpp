#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "tornheim/arith/rational.hpp"

namespace tornheim::pfd {

/// The form cm*m + cn*n with nonnegative, coprime coefficients.
struct LinearForm {
  long cm = 1;
  long cn = 0;

  /// Primitive form of (cm, cn) and the scalar it was divided by.
  static std::pair<Rational, LinearForm> make(long cm, long cn);

  static LinearForm m() { return {1, 0}; }
  static LinearForm n() { return {0, 1}; }
  bool is_basis() const { return cm == 0 || cn == 0; }

  friend auto operator<=>(const LinearForm&, const LinearForm&) = default;
};

std::string to_string(const LinearForm& f);

/// coefficient / prod_f f^e.
struct TermProduct {
  Rational coefficient = 1;
  std::map<LinearForm, int> exponents;

  int weight() const;
  int exponent(const LinearForm& f) const;
  /// Distinct forms that are neither m nor n, in form order.
  std::vector<LinearForm> non_basis_forms() const;

  friend bool operator==(const TermProduct&, const TermProduct&) = default;
};

/// Builds a TermProduct from (form, exponent) pairs; non-primitive forms
/// have their scalar folded into the coefficient.
TermProduct make_term(const Rational& coefficient, const std::vector<std::pair<std::pair<long, long>, int>>& factors);

struct TermSum {
  std::vector<TermProduct> terms;

  /// Merges terms with identical exponent maps, drops zeros, sorts.
  TermSum normalized() const;
  friend bool operator==(const TermSum&, const TermSum&) = default;
};

/// alpha*u + beta*w = c*v.
struct Relation {
  Rational alpha;
  Rational beta;
  Rational c;
  LinearForm v;

  bool holds(const LinearForm& u, const LinearForm& w) const;
};

/// Rewrites the (u, w) pair of t into terms supported on (v, u) or (v, w):
/// with x = alpha u, y = beta w and x + y = c v,
///   1/(x^r y^s) = sum_{p+q=r+s, p,q>=1} (x+y)^-p (C(p-1,s-1) x^-q + C(p-1,r-1) y^-q).
/// Throws DomainError if the relation does not hold or t lacks u or w.
TermSum split_pair(const TermProduct& t, const LinearForm& u, const LinearForm& w, const Relation& relation);

/// True iff before and after are the same rational function of (m, n),
/// decided by comparing numerators over a common denominator.
bool verify_step(const TermSum& before, const TermSum& after);

/// The six positive roots of G2 written as forms in (m, n).
const std::vector<LinearForm>& g2_forms();

/// Fixed relation for an unordered pair of non-basis G2 forms, with u < w.
/// Every relation has v = m.
std::optional<Relation> g2_relation(const LinearForm& u, const LinearForm& w);

struct TraceStep {
  TermProduct before;
  LinearForm u;
  LinearForm w;
  Relation relation;
  TermSum after;
};

struct ReductionTrace {
  std::vector<TraceStep> steps;
};

struct ReduceOptions {
  bool verify_steps = true;
  ReductionTrace* trace = nullptr;
};

/// Splits every term until its support is {m, n, L} for a single
/// L in {m+n, m+2n, m+3n, 2m+3n}. Throws DomainError("unsupported form
/// system") for forms outside the G2 set or terms lacking m or n, and
/// VerificationFailure if a step fails verify_step.
TermSum reduce_to_tornheim(const TermSum& input, const ReduceOptions& options = {});

/// coefficient * zeta_{a,b}(k1, k2, k3), read off a reduced term.
struct TornheimTerm {
  Rational coefficient;
  int a = 1;
  int b = 1;
  int k1 = 1;
  int k2 = 1;
  int k3 = 1;

  friend bool operator==(const TornheimTerm&, const TornheimTerm&) = default;
};

/// Throws DomainError unless every term has support exactly {m, n, L}.
std::vector<TornheimTerm> as_tornheim_terms(const TermSum& reduced);

nlohmann::json to_json(const LinearForm& f);
nlohmann::json to_json(const TermProduct& t);
nlohmann::json to_json(const TermSum& s);
nlohmann::json to_json(const ReductionTrace& trace);
nlohmann::json to_json(const TornheimTerm& t);

}  // namespace tornheim::pfd

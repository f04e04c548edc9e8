#pragma once

#include "tornheim/arith/rational.hpp"

namespace tornheim::arith {

/// Which normalization of the Bernoulli numbers a call site wants.
/// They differ only at k = 1: B_1(0) = -1/2, B_1(1) = +1/2.
enum class BernoulliConvention { AtZero, AtOne };

/// B_k(0) or B_k(1) = (-1)^k B_k(0). Results are cached process-wide.
Rational bernoulli_number(unsigned k, BernoulliConvention convention);

/// The Bernoulli polynomial B_k(x) = sum_j C(k,j) B_j(0) x^(k-j).
Rational bernoulli_poly(unsigned k, const Rational& x);

/// C(n, r); zero when r < 0 or r > n.
BigInt binomial(long n, long r);

BigInt factorial(unsigned n);

}  // namespace tornheim::arith

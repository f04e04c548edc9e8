#include "tornheim/arith/bernoulli.hpp"

#include "tornheim/arith/append_only_table.hpp"

namespace tornheim::arith {
namespace {

AppendOnlyTable<Rational>& bernoulli_table() {
  static AppendOnlyTable<Rational> table;
  return table;
}

AppendOnlyTable<BigInt>& factorial_table() {
  static AppendOnlyTable<BigInt> table;
  return table;
}

// sum_{j=0}^{k} C(k+1, j) B_j = 0 for k >= 1.
Rational next_bernoulli(const AppendOnlyTable<Rational>& table, std::size_t k) {
  if (k == 0) return Rational(1);
  if (k > 1 && k % 2 == 1) return Rational(0);
  Rational acc = 0;
  for (std::size_t j = 0; j < k; ++j) {
    if (table.at(j) == 0) continue;
    acc += Rational(binomial(static_cast<long>(k + 1), static_cast<long>(j))) * table.at(j);
  }
  Rational out = -acc / static_cast<long>(k + 1);
  out.canonicalize();
  return out;
}

}  // namespace

Rational bernoulli_number(unsigned k, BernoulliConvention convention) {
  const Rational& at_zero = bernoulli_table().get(k, next_bernoulli);
  if (convention == BernoulliConvention::AtOne && k == 1) return -at_zero;
  return at_zero;
}

Rational bernoulli_poly(unsigned k, const Rational& x) {
  // Horner over descending powers of x.
  Rational acc = 0;
  for (unsigned j = 0; j <= k; ++j) {
    acc = acc * x + Rational(binomial(k, j)) * bernoulli_number(j, BernoulliConvention::AtZero);
  }
  acc.canonicalize();
  return acc;
}

BigInt binomial(long n, long r) {
  if (n < 0 || r < 0 || r > n) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(r));
  return out;
}

BigInt factorial(unsigned n) {
  return factorial_table().get(n, [](const AppendOnlyTable<BigInt>& t, std::size_t i) {
    return i == 0 ? BigInt(1) : BigInt(t.at(i - 1) * static_cast<unsigned long>(i));
  });
}

}  // namespace tornheim::arith

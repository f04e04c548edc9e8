#include <thread>
#include <vector>

#include "doctest.h"
#include "tornheim/arith/append_only_table.hpp"
#include "tornheim/arith/bernoulli.hpp"
#include "tornheim/arith/rational.hpp"
#include "tornheim/error.hpp"

using namespace tornheim;
using arith::BernoulliConvention;
using arith::bernoulli_number;
using arith::bernoulli_poly;
using arith::binomial;

namespace {

// Coefficients of t/(e^t - 1) by inverting the series of (e^t - 1)/t.
std::vector<Rational> brute_bernoulli(int n) {
  std::vector<Rational> e(n + 1);
  for (int k = 0; k <= n; ++k) e[k] = Rational(1) / Rational(arith::factorial(k + 1));
  std::vector<Rational> inv(n + 1);
  inv[0] = 1;
  for (int k = 1; k <= n; ++k) {
    Rational acc = 0;
    for (int j = 1; j <= k; ++j) acc += e[j] * inv[k - j];
    inv[k] = -acc;
  }
  for (int k = 0; k <= n; ++k) inv[k] *= Rational(arith::factorial(k));
  return inv;
}

}  // namespace

TEST_CASE("rational values are kept in lowest terms") {
  const Rational r = make_rational(6, -4);
  CHECK(r.get_num() == -3);
  CHECK(r.get_den() == 2);
  CHECK(to_string(make_rational(10, 5)) == "2");
  CHECK(parse_rational("-14/21") == make_rational(-2, 3));
  CHECK(pow(make_rational(2, 3), -2) == make_rational(9, 4));
  CHECK(mod_one(make_rational(-1, 3)) == make_rational(2, 3));
  CHECK(is_integer(make_rational(8, 4)));
  CHECK_THROWS_AS(make_rational(1, 0), UsageError);
  CHECK_THROWS_AS(pow(Rational(0), -1), DomainError);
  CHECK_THROWS_AS(parse_rational("1/x"), UsageError);
}

TEST_CASE("bernoulli numbers under both conventions") {
  CHECK(bernoulli_number(0, BernoulliConvention::AtZero) == 1);
  CHECK(bernoulli_number(1, BernoulliConvention::AtZero) == make_rational(-1, 2));
  CHECK(bernoulli_number(1, BernoulliConvention::AtOne) == make_rational(1, 2));
  CHECK(bernoulli_number(12, BernoulliConvention::AtZero) == make_rational(-691, 2730));
  for (unsigned k = 3; k < 30; k += 2) CHECK(bernoulli_number(k, BernoulliConvention::AtZero) == 0);
}

TEST_CASE("bernoulli numbers agree with the expansion of t/(e^t - 1)") {
  const auto brute = brute_bernoulli(24);
  for (unsigned k = 0; k <= 24; ++k) CHECK(bernoulli_number(k, BernoulliConvention::AtZero) == brute[k]);
}

TEST_CASE("bernoulli recurrence sums vanish") {
  for (long k = 1; k <= 20; ++k) {
    Rational acc = 0;
    for (long j = 0; j <= k; ++j)
      acc += Rational(binomial(k + 1, j)) * bernoulli_number(static_cast<unsigned>(j), BernoulliConvention::AtZero);
    CHECK(acc == 0);
  }
}

TEST_CASE("bernoulli polynomials") {
  CHECK(bernoulli_poly(1, make_rational(1, 3)) == make_rational(-1, 6));
  CHECK(bernoulli_poly(2, make_rational(1, 2)) == make_rational(-1, 12));
  for (unsigned k = 0; k <= 10; ++k) CHECK(bernoulli_poly(k, 1) == bernoulli_number(k, BernoulliConvention::AtOne));
  const Rational xs[] = {0, make_rational(1, 2), make_rational(-1, 2), make_rational(1, 3), make_rational(-1, 3), 2};
  for (unsigned k = 1; k <= 12; ++k)
    for (const auto& x : xs)
      CHECK(bernoulli_poly(k, x + 1) - bernoulli_poly(k, x) == Rational(k) * pow(x, static_cast<long>(k) - 1));
}

TEST_CASE("binomial coefficients") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(3, -1) == 0);
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(4, 5) == 0);
  CHECK(binomial(60, 30) == BigInt("118264581564861424"));
}

TEST_CASE("results are identical across repeated runs") {
  const Rational first = bernoulli_poly(17, make_rational(5, 7));
  for (int i = 0; i < 5; ++i) CHECK(bernoulli_poly(17, make_rational(5, 7)) == first);
}

TEST_CASE("append-only table serves concurrent readers and one writer") {
  arith::AppendOnlyTable<long, 8, 64> table;
  auto square = [](const auto&, std::size_t n) { return static_cast<long>(n * n); };
  std::vector<std::thread> threads;
  std::vector<int> bad(8, 0);
  for (int t = 0; t < 8; ++t) {
    threads.emplace_back([&, t] {
      for (std::size_t i = 0; i < 400; ++i) {
        const std::size_t idx = (i * 37 + static_cast<std::size_t>(t) * 11) % 500;
        if (table.get(idx, square) != static_cast<long>(idx * idx)) ++bad[t];
      }
    });
  }
  for (auto& th : threads) th.join();
  for (int b : bad) CHECK(b == 0);
  CHECK(table.size() >= 499);
  CHECK_THROWS_AS(table.get(8 * 64, square), std::out_of_range);
}

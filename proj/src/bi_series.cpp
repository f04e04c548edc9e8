#include "tornheim/parity/bi_series.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <tuple>

#include "tornheim/arith/bernoulli.hpp"
#include "tornheim/error.hpp"

namespace tornheim::parity {
namespace {

using arith::BernoulliConvention;
using arith::bernoulli_number;
using arith::factorial;

const Rational kZero = 0;

Rational inv_factorial(int n) { return Rational(1) / Rational(factorial(static_cast<unsigned>(n))); }

// t/(e^t - 1) in t1, or (-t)/(e^(-t) - 1) in t2.
TruncatedBiSeries bernoulli_factor(int degree, bool second_variable) {
  TruncatedBiSeries out(degree);
  for (int p = 0; p <= degree; ++p) {
    Rational v = bernoulli_number(static_cast<unsigned>(p), BernoulliConvention::AtZero) * inv_factorial(p);
    if (second_variable) {
      if (p % 2 == 1) v = -v;
      out.set(0, p, v);
    } else {
      out.set(p, 0, v);
    }
  }
  return out;
}

// (e^(b t1 - t2) - 1)/(b t1 - t2) = sum b^p1 (-1)^p2 t1^p1 t2^p2 / (p1! p2! (p1+p2+1)).
TruncatedBiSeries difference_quotient_factor(int b, int degree) {
  TruncatedBiSeries out(degree);
  for (int p1 = 0; p1 <= degree; ++p1) {
    const Rational bp = pow(Rational(b), p1);
    for (int p2 = 0; p1 + p2 <= degree; ++p2) {
      Rational v = bp * inv_factorial(p1) * inv_factorial(p2) / (p1 + p2 + 1);
      if (p2 % 2 == 1) v = -v;
      out.set(p1, p2, v);
    }
  }
  return out;
}

}  // namespace

TruncatedBiSeries::TruncatedBiSeries(int degree) : degree_(degree) {
  if (degree < 0) throw UsageError("TruncatedBiSeries degree must be >= 0");
  coeffs_.assign(slot(0, degree) + 1, Rational(0));
}

const Rational& TruncatedBiSeries::at(int r, int s) const {
  if (r < 0 || s < 0 || r + s > degree_) return kZero;
  return coeffs_[slot(r, s)];
}

void TruncatedBiSeries::set(int r, int s, const Rational& value) {
  if (r < 0 || s < 0 || r + s > degree_) throw std::out_of_range("TruncatedBiSeries::set outside degree bound");
  coeffs_[slot(r, s)] = value;
}

TruncatedBiSeries operator*(const TruncatedBiSeries& a, const TruncatedBiSeries& b) {
  const int d = std::min(a.degree_, b.degree_);
  TruncatedBiSeries out(d);
  for (int r1 = 0; r1 <= d; ++r1) {
    for (int s1 = 0; r1 + s1 <= d; ++s1) {
      const Rational& x = a.at(r1, s1);
      if (x == 0) continue;
      for (int r2 = 0; r1 + s1 + r2 <= d; ++r2) {
        for (int s2 = 0; r1 + s1 + r2 + s2 <= d; ++s2) {
          const Rational& y = b.at(r2, s2);
          if (y == 0) continue;
          out.coeffs_[TruncatedBiSeries::slot(r1 + r2, s1 + s2)] += x * y;
        }
      }
    }
  }
  return out;
}

TruncatedBiSeries operator+(const TruncatedBiSeries& a, const TruncatedBiSeries& b) {
  const int d = std::min(a.degree_, b.degree_);
  TruncatedBiSeries out(d);
  for (int r = 0; r <= d; ++r)
    for (int s = 0; r + s <= d; ++s) out.set(r, s, a.at(r, s) + b.at(r, s));
  return out;
}

TruncatedBiSeries operator-(const TruncatedBiSeries& a, const TruncatedBiSeries& b) {
  const int d = std::min(a.degree_, b.degree_);
  TruncatedBiSeries out(d);
  for (int r = 0; r <= d; ++r)
    for (int s = 0; r + s <= d; ++s) out.set(r, s, a.at(r, s) - b.at(r, s));
  return out;
}

TruncatedBiSeries alpha_coeffs(int b, int degree) {
  if (b < 1) throw UsageError("alpha_coeffs needs b >= 1");
  return bernoulli_factor(degree, false) * bernoulli_factor(degree, true) * difference_quotient_factor(b, degree);
}

TruncatedBiSeries alpha_tilde_coeffs(int b, int c, int degree) {
  if (b < 2 || c < 1 || c > b - 1) throw UsageError("alpha_tilde_coeffs needs 1 <= c <= b - 1");
  // -t1 e^(-c t1) = sum_{q >= 1} (-1)^q c^(q-1) t1^q / (q-1)!
  TruncatedBiSeries shift(degree);
  for (int q = 1; q <= degree; ++q) {
    Rational v = pow(Rational(c), q - 1) * inv_factorial(q - 1);
    if (q % 2 == 1) v = -v;
    shift.set(q, 0, v);
  }
  return shift * bernoulli_factor(degree, true) * difference_quotient_factor(b, degree);
}

namespace {

template <typename Key>
class SeriesCache {
 public:
  template <typename Make>
  const TruncatedBiSeries& get(const Key& key, Make&& make) {
    {
      std::lock_guard lock(mutex_);
      auto it = map_.find(key);
      if (it != map_.end()) return *it->second;
    }
    auto fresh = std::make_unique<TruncatedBiSeries>(make());
    std::lock_guard lock(mutex_);
    auto [it, inserted] = map_.try_emplace(key, std::move(fresh));
    return *it->second;
  }

 private:
  std::mutex mutex_;
  std::map<Key, std::unique_ptr<TruncatedBiSeries>> map_;
};

}  // namespace

const TruncatedBiSeries& cached_alpha(int b, int degree) {
  static SeriesCache<std::pair<int, int>> cache;
  return cache.get({b, degree}, [&] { return alpha_coeffs(b, degree); });
}

const TruncatedBiSeries& cached_alpha_tilde(int b, int c, int degree) {
  static SeriesCache<std::tuple<int, int, int>> cache;
  return cache.get({b, c, degree}, [&] { return alpha_tilde_coeffs(b, c, degree); });
}

}  // namespace tornheim::parity

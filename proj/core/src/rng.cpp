#include "dirmincut/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace dirmincut {
namespace {

std::uint64_t mix64(std::uint64_t z) {
  z ^= z >> 30;
  z *= 0xbf58476d1ce4e5b9ULL;
  z ^= z >> 27;
  z *= 0x94d049bb133111ebULL;
  z ^= z >> 31;
  return z;
}

// Acklam's rational approximation of the standard normal quantile.
double inverse_normal_cdf(double p) {
  static const double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                             -2.759285104469687e+02, 1.383577518672690e+02,
                             -3.066479806614716e+01, 2.506628277459239e+00};
  static const double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                             -1.556989798598866e+02, 6.680131188771972e+01,
                             -1.328068155288572e+01};
  static const double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                             -2.400758277161838e+00, -2.549732539343734e+00,
                             4.374664141464968e+00,  2.938163982698783e+00};
  static const double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                             2.445134137142996e+00, 3.754408661907416e+00};
  const double plow = 0.02425;
  if (p < plow) {
    double q = std::sqrt(-2 * std::log(p));
    return (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
           ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1);
  }
  if (p > 1 - plow) {
    double q = std::sqrt(-2 * std::log(1 - p));
    return -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
           ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1);
  }
  double q = p - 0.5, r = q * q;
  return (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
         (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1);
}

}  // namespace

SplitRng::SplitRng(std::uint64_t seed, std::uint64_t stream)
    : state_(mix64(seed + 0x9e3779b97f4a7c15ULL)),
      gamma_(mix64(stream ^ 0xd1b54a32d192ed03ULL) | 1ULL) {}

std::uint64_t SplitRng::next_u64() {
  state_ += gamma_;
  return mix64(state_);
}

std::uint64_t SplitRng::next_below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("next_below: bound must be positive");
  std::uint64_t threshold = -bound % bound;
  for (;;) {
    std::uint64_t r = next_u64();
    if (r >= threshold) return r % bound;
  }
}

double SplitRng::next_double() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

bool SplitRng::bernoulli(double p) {
  if (p <= 0) return false;
  if (p >= 1) return true;
  return next_double() < p;
}

std::int64_t SplitRng::binomial(std::int64_t trials, double p, bool exact) {
  if (trials < 0) throw std::invalid_argument("binomial: negative trial count");
  if (trials == 0 || p <= 0) return 0;
  if (p >= 1) return trials;
  if (trials <= 64) {
    // Inverse transform via the pmf recurrence.
    double u = next_double();
    double pmf = std::pow(1.0 - p, static_cast<double>(trials));
    double cdf = pmf;
    std::int64_t k = 0;
    while (u >= cdf && k < trials) {
      pmf *= (static_cast<double>(trials - k) / static_cast<double>(k + 1)) *
             (p / (1.0 - p));
      ++k;
      cdf += pmf;
    }
    return k;
  }
  if (exact) {
    std::int64_t hits = 0;
    for (std::int64_t i = 0; i < trials; ++i) hits += bernoulli(p) ? 1 : 0;
    return hits;
  }
  double mu = static_cast<double>(trials) * p;
  double sigma = std::sqrt(mu * (1.0 - p));
  double u = next_double();
  // next_double() can return exactly 0, which the quantile can't take.
  if (u <= 0) u = 0x1.0p-53;
  double draw = mu + sigma * inverse_normal_cdf(u);
  std::int64_t k = static_cast<std::int64_t>(std::llround(draw));
  if (k < 0) k = 0;
  if (k > trials) k = trials;
  return k;
}

SplitRng SplitRng::split() {
  std::uint64_t seed = next_u64();
  std::uint64_t stream = next_u64();
  return SplitRng(seed, stream);
}

}  // namespace dirmincut

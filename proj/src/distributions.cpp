#include "solar/distributions.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace solar {

namespace {

// Continued-fraction evaluation of the incomplete beta (modified Lentz).
double beta_cf(double a, double b, double x) {
  constexpr int kMaxIter = 500;
  constexpr double kEps = 3e-16;
  constexpr double kFpMin = 1e-300;

  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::abs(d) < kFpMin) d = kFpMin;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= kMaxIter; ++m) {
    const int m2 = 2 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < kFpMin) d = kFpMin;
    c = 1.0 + aa / c;
    if (std::abs(c) < kFpMin) c = kFpMin;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < kFpMin) d = kFpMin;
    c = 1.0 + aa / c;
    if (std::abs(c) < kFpMin) c = kFpMin;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::abs(del - 1.0) <= kEps) break;
  }
  return h;
}

}  // namespace

double reg_incomplete_beta(double a, double b, double x) {
  if (!(a > 0) || !(b > 0)) throw std::invalid_argument("beta: a,b must be > 0");
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  const double ln_front = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                          a * std::log(x) + b * std::log1p(-x);
  const double front = std::exp(ln_front);
  // the continued fraction converges fast for x < (a+1)/(a+b+2)
  if (x < (a + 1.0) / (a + b + 2.0))
    return front * beta_cf(a, b, x) / a;
  return 1.0 - front * beta_cf(b, a, 1.0 - x) / b;
}

double two_sided_t_pvalue(double t, double df) {
  if (df <= 0) throw std::invalid_argument("t p-value: df must be > 0");
  if (!std::isfinite(t)) return 0.0;
  const double x = df / (df + t * t);
  return reg_incomplete_beta(df / 2.0, 0.5, x);
}

double f_upper_tail(double f, double df1, double df2) {
  if (df1 <= 0 || df2 <= 0)
    throw std::invalid_argument("F tail: degrees of freedom must be > 0");
  if (f <= 0) return 1.0;
  if (!std::isfinite(f)) return 0.0;
  const double x = df2 / (df2 + df1 * f);
  return reg_incomplete_beta(df2 / 2.0, df1 / 2.0, x);
}

}  // namespace solar

#include "lorentz/comparison.hpp"

#include <cmath>
#include <limits>

namespace lorentz {

namespace {

constexpr double kSeriesThreshold = 1e-8; // on |c|*t^2
constexpr double kPi = 3.14159265358979323846;

bool in_series_regime(double c, double t) {
  return std::abs(c) * t * t < kSeriesThreshold;
}

} // namespace

double generalized_sine(double c, double t) {
  if (in_series_regime(c, t)) {
    const double y = c * t * t;
    return t * (1.0 + y / 6.0 + y * y / 120.0 + y * y * y / 5040.0 +
                y * y * y * y / 362880.0);
  }
  if (c > 0.0) {
    const double r = std::sqrt(c);
    return std::sinh(r * t) / r;
  }
  const double r = std::sqrt(-c);
  return std::sin(r * t) / r;
}

double generalized_cosine(double c, double t) {
  if (in_series_regime(c, t)) {
    const double y = c * t * t;
    return 1.0 + y / 2.0 + y * y / 24.0 + y * y * y / 720.0 +
           y * y * y * y / 40320.0;
  }
  if (c > 0.0) return std::cosh(std::sqrt(c) * t);
  return std::cos(std::sqrt(-c) * t);
}

double sphere_mean_curvature(double c, double s) {
  if (!(s > 0.0))
    throw ComparisonDomainError("sphere_mean_curvature", c, s, 0.0,
                                "requires s > 0");
  if (c < 0.0 && s >= kPi / std::sqrt(-c))
    throw ComparisonDomainError("sphere_mean_curvature", c, s, 0.0,
                                "requires s < pi/sqrt(-c)");
  if (in_series_regime(c, s)) {
    // (1/s) * x*coth-type series in x = c*s^2, shared by all branches.
    const double x = c * s * s;
    return (1.0 + x / 3.0 - x * x / 45.0 + 2.0 * x * x * x / 945.0 -
            x * x * x * x / 4725.0) / s;
  }
  if (c > 0.0) {
    const double r = std::sqrt(c);
    return r / std::tanh(r * s); // avoids cosh/sinh overflow for large s
  }
  if (c == 0.0) return 1.0 / s;
  const double r = std::sqrt(-c);
  return r / std::tan(r * s);
}

double sphere_radius(double c, double h) {
  if (c > 0.0) {
    const double r = std::sqrt(c);
    if (!(h > r))
      throw ComparisonDomainError("sphere_radius", c, h, 0.0,
                                  "requires h > sqrt(c)");
    return std::atanh(r / h) / r;
  }
  if (c == 0.0) {
    if (!(h > 0.0))
      throw ComparisonDomainError("sphere_radius", c, h, 0.0,
                                  "requires h > 0 when c = 0");
    return 1.0 / h;
  }
  const double r = std::sqrt(-c);
  if (!std::isfinite(h))
    throw ComparisonDomainError("sphere_radius", c, h, 0.0,
                                "requires finite h");
  // cot(r*s) = h/r with r*s in (0, pi)
  return (kPi / 2.0 - std::atan(h / r)) / r;
}

double equidistant_mean_curvature(double c, double s) {
  if (!(s > 0.0))
    throw ComparisonDomainError("equidistant_mean_curvature", c, s, 0.0,
                                "requires s > 0");
  if (c < 0.0 && s >= kPi / (2.0 * std::sqrt(-c)))
    throw ComparisonDomainError("equidistant_mean_curvature", c, s, 0.0,
                                "requires s < pi/(2*sqrt(-c))");
  if (c == 0.0) return 0.0;
  if (in_series_regime(c, s)) {
    const double x = c * s * s;
    return c * s * (1.0 - x / 3.0 + 2.0 * x * x / 15.0 -
                    17.0 * x * x * x / 315.0);
  }
  if (c > 0.0) {
    const double r = std::sqrt(c);
    return r * std::tanh(r * s);
  }
  const double r = std::sqrt(-c);
  return -r * std::tan(r * s);
}

double jacobi_ratio_point(double c, double s, double t) {
  if (!(s > 0.0) || t < 0.0 || t > s)
    throw ComparisonDomainError("jacobi_ratio_point", c, s, t,
                                "requires 0 <= t <= s and s > 0");
  if (c < 0.0 && s >= kPi / std::sqrt(-c))
    throw ComparisonDomainError("jacobi_ratio_point", c, s, t,
                                "requires s < pi/sqrt(-c)");
  return generalized_sine(c, t) / generalized_sine(c, s);
}

double jacobi_ratio_slice(double c, double s, double t) {
  if (s < 0.0 || t < 0.0 || t > s)
    throw ComparisonDomainError("jacobi_ratio_slice", c, s, t,
                                "requires 0 <= t <= s");
  if (c < 0.0 && s >= kPi / (2.0 * std::sqrt(-c)))
    throw ComparisonDomainError("jacobi_ratio_slice", c, s, t,
                                "requires s < pi/(2*sqrt(-c))");
  return generalized_cosine(c, t) / generalized_cosine(c, s);
}

double hyperbolicity_weight(int n, double x) {
  if (n < 2)
    throw ComparisonDomainError("hyperbolicity_weight", double(n), x, 0.0,
                                "requires n >= 2");
  if (x < 0.0)
    throw ComparisonDomainError("hyperbolicity_weight", double(n), x, 0.0,
                                "requires x >= 0");
  return (n + x * x) / (n * std::sqrt(1.0 + x * x));
}

} // namespace lorentz

#pragma once

#include "lorentz/error.hpp"

namespace lorentz {

// Scalar comparison functions for a curvature bound c (geometrized units).
//
// All of them are assembled from the two solutions of y'' = c*y:
//
//   generalized_sine   S_c(t):  S(0) = 0, S'(0) = 1   (sinh / t / sin)
//   generalized_cosine C_c(t):  C(0) = 1, C'(0) = 0   (cosh / 1 / cos)
//
// Near c*t^2 = 0 both switch to truncated power series in c*t^2 so that the
// three sign branches agree smoothly; the switch threshold is chosen so the
// truncation error is far below double roundoff.

// Solution of y'' = c*y with y(0)=0, y'(0)=1; analytic in (c, t).
double generalized_sine(double c, double t);

// Solution of y'' = c*y with y(0)=1, y'(0)=0; analytic in (c, t).
double generalized_cosine(double c, double t);

// Future mean curvature of the Lorentzian sphere of radius s in the space
// form of curvature c: sqrt(c)*coth(sqrt(c)s) / 1/s / sqrt(-c)*cot(sqrt(-c)s).
// Strictly decreasing in s; > sqrt(c) for c >= 0.
// Domain: s > 0, and s < pi/sqrt(-c) when c < 0.
double sphere_mean_curvature(double c, double s);

// Inverse of sphere_mean_curvature in s (closed form per branch).
// Domain: h > sqrt(c) for c >= 0; any finite h for c < 0.
double sphere_radius(double c, double h);

// Mean curvature of the hypersurface at distance s from a totally geodesic
// spacelike slice in the space form of curvature c:
// sqrt(c)*tanh(sqrt(c)s) / 0 / -sqrt(-c)*tan(sqrt(-c)s).
// Domain: s > 0, and s < pi/(2*sqrt(-c)) when c < 0.
double equidistant_mean_curvature(double c, double s);

// Amplitude of the normal Jacobi field along a unit timelike geodesic in the
// space form of curvature c with J(0) = 0, normalized to 1 at parameter s.
// Equals S_c(t)/S_c(s). Domain: 0 <= t <= s, s > 0, s < pi/sqrt(-c) if c < 0.
double jacobi_ratio_point(double c, double s, double t);

// Amplitude of the N-Jacobi field leaving a totally geodesic slice
// orthogonally, normalized to 1 at parameter s. Equals C_c(t)/C_c(s).
// Domain: 0 <= t <= s, and s < pi/(2*sqrt(-c)) when c < 0.
double jacobi_ratio_slice(double c, double s, double t);

// The gradient weight (n + x^2) / (n*sqrt(1 + x^2)) controlling when a mean
// curvature bound forces superharmonicity of the restricted distance.
// Global minimum over x >= 0 at x = sqrt(n-2), value 2*sqrt(n-1)/n.
// Domain: n >= 2, x >= 0.
double hyperbolicity_weight(int n, double x);

} // namespace lorentz

#pragma once

#include <functional>
#include <string>

#include "lorentz/distance.hpp"
#include "lorentz/geodesic.hpp"
#include "lorentz/sampling.hpp"
#include "lorentz/spacetime.hpp"

namespace lorentz {

// A parametrized spacelike hypersurface: chart box in R^n mapped into the
// model chart. The declared flags drive which theorem checks are applicable
// to the complete surface the patch samples.
struct Immersion {
  const Spacetime* model = nullptr;
  Box chart;                                 // sampling box in R^n
  std::function<Vec(const Vec&)> psi;        // chart -> model coordinates
  std::function<Mat(const Vec&)> jacobian;   // optional closed form
  double fd_scale = 1e-5;
  std::string label;

  bool constant_H = false;
  bool extrema_exact = false;  // sampled extrema of the restricted distance
                               // equal the true extrema over the surface
  bool complete = false;       // the full surface satisfies the global
                               // hypotheses (completeness + containment)
  bool bounded_above_by_level_set = false;

  double fd_step(const Vec& x) const { return fd_scale * (1.0 + x.norm()); }
  Mat differential(const Vec& x) const; // (n+1) x n
};

// First and second fundamental data at one chart point.
struct InducedGeometry {
  Vec chart_point;
  Vec position;
  Mat dpsi;     // (n+1) x n
  Mat g;        // induced metric
  Mat g_inv;
  Vec nu;       // future-directed unit normal
  Mat shape;    // mixed-index shape operator A^i_j
  double H;     // future mean curvature -(1/n) tr A
};

InducedGeometry induced_geometry(const Immersion& imm, const Vec& x);

// Christoffel symbols of the induced metric by chart differencing.
Christoffels induced_christoffels(const Immersion& imm, const Vec& x);

// Intrinsic Riemann tensor of the hypersurface (three finite-difference
// layers; noisier than the ambient kernels).
RiemannTensor intrinsic_riemann(const Immersion& imm, const Vec& x);

// The restricted distance u = d o psi with intrinsic derivatives at one
// chart point.
struct RestrictedSample {
  Vec chart_point;
  double u = 0.0;
  Vec du;              // chart partials of u (lowered)
  Vec grad;            // intrinsic gradient components (raised)
  double grad_norm2 = 0.0;
  Mat hess;            // intrinsic Hessian (lowered)
  double laplacian = 0.0;
  Vec ambient_grad;    // gradient of the ambient field at psi(x)
  InducedGeometry geo;
};

RestrictedSample restricted_distance(const Immersion& imm,
                                     const DistanceField& field, const Vec& x);

// N-Jacobi data: the normal geodesic from psi(x0) with gamma'(0) = nu and
// the Jacobi field with J(0) = dpsi * xi0 and J'(0) = -A(J(0)).
struct NJacobi {
  Geodesic geodesic;
  TransportedField field;
};

NJacobi n_jacobi_field(const Immersion& imm, const Vec& x0, const Vec& xi0,
                       double s, int steps);

// <A x, y> boundary form of the index form I_N in the frame components of
// the normal geodesic at t = 0.
Mat shape_boundary_form(const InducedGeometry& geo, const Geodesic& g);

// I_N(X, X) for a geodesic leaving the immersion orthogonally at chart
// point x0.
IndexFormResult index_form_hypersurface(const Immersion& imm, const Vec& x0,
                                        const Geodesic& g,
                                        const TransportedField& X);

// -------------------------------------------------------------------------
// Immersion catalog

// Level set d_p = s of the Minkowski distance from p (upper hyperboloid
// sheet), as a graph over the spatial chart box |x| <= radius.
Immersion make_hyperboloid(const Minkowski& M, const Vec& p, double s,
                           double radius);

// Hyperboloid of radius s centered at p + tau * e_{n+1}; still constant mean
// curvature 1/s but not a level set of d_p.
Immersion make_shifted_hyperboloid(const Minkowski& M, const Vec& p, double s,
                                   double tau, double radius);

// Spacelike plane x_{n+1} = height + <slope, x>, |slope| < 1. Maximal (H=0).
Immersion make_tilted_plane(const Minkowski& M, double height, const Vec& slope,
                            double radius);

// Graph x_{n+1} = height + <slope, x> + eps * sum_i sin(x_i).
Immersion make_minkowski_graph(const Minkowski& M, double height,
                               const Vec& slope, double eps, double radius);

// Slice {t = t0} (or {x_{n+1} = t0} in the Minkowski chart).
Immersion make_slice(const Spacetime& M, double t0, double radius);

// Graph t = t0 + eps * sum_i sin(x_i) over the fiber chart of a GRW or
// de Sitter model.
Immersion make_warped_graph(const Spacetime& M, double t0, double eps,
                            double radius);

// Level set d_p = s in de Sitter, centered at the chart point p.
Immersion make_de_sitter_level_set(const DeSitter& M, const Vec& p, double s,
                                   double radius);

// Totally geodesic (H = 0) spacelike hypersurface of de Sitter obtained by
// boosting the slice {t = 0} with rapidity chi; the patch lies strictly in
// the future of that slice for chi > 0.
Immersion make_boosted_totally_geodesic(const DeSitter& M, double chi,
                                        double radius);

} // namespace lorentz

#pragma once

#include <functional>
#include <optional>

#include "lorentz/spacetime.hpp"

namespace lorentz {

// Lorentzian distance function from a point or from a spacelike slice, with
// finite-difference evaluators for the ambient gradient, Hessian and
// Laplacian in chart coordinates.
//
// Supported sources:
//   from_point: Minkowski (exact formula), de Sitter (embedding formula),
//               GRW (symmetry reduction: conserved spatial momentum plus 1-d
//               quadrature and a monotone root-find). Anti-de Sitter distance
//               from a point is infinite and rejected.
//   from_slice: {t = t0} slices of GRW / de Sitter / Minkowski charts, where
//               d_N = t - t0; the totally geodesic slice {tau = 0} of
//               anti-de Sitter via the embedding exponential map.
class DistanceField {
public:
  enum class SourceKind { Point, Slice };

  static DistanceField from_point(const Spacetime& M, const Vec& p,
                                  double fd_scale = 1e-4);
  static DistanceField from_slice(const Spacetime& M, double t0,
                                  double fd_scale = 1e-4);

  const Spacetime& model() const { return *model_; }
  SourceKind kind() const { return kind_; }
  const Vec& source_point() const { return p_; }
  double slice_t0() const { return t0_; }
  double fd_scale() const { return fd_scale_; }
  double fd_step(double d) const { return fd_scale_ * (1.0 + d); }

  bool domain_contains(const Vec& q) const;
  double value(const Vec& q) const;

  // Raised-index central finite-difference gradient. Checks the eikonal
  // postcondition <grad, grad> = -1 (1e-6) and past orientation.
  Vec gradient(const Vec& q, bool richardson = false) const;

  // Lowered ambient Hessian matrix H_ab = (d^2 d - Gamma^c_ab d_c d).
  Mat hessian(const Vec& q) const;
  double hessian_dir(const Vec& q, const Vec& x, const Vec& y) const;

  // Trace of the Hessian over an orthonormal frame (1 timelike + n
  // spacelike); the default frame has its timelike leg along the gradient.
  double laplacian(const Vec& q) const;
  double laplacian_frame(const Vec& q, const Mat& frame) const;

private:
  DistanceField() = default;
  void require_interior(const Vec& q, double h) const;
  Vec lowered_gradient(const Vec& q, double h) const;

  const Spacetime* model_ = nullptr;
  SourceKind kind_ = SourceKind::Point;
  Vec p_;
  double t0_ = 0.0;
  double fd_scale_ = 1e-4;

  std::function<double(const Vec&)> value_fn_;
  std::function<bool(const Vec&)> domain_fn_;
};

// Proper time of the maximizing geodesic between chart events of a GRW
// model, reduced to quadrature; also used as the d_p evaluator there.
double grw_point_distance(const Grw& M, const Vec& p, const Vec& q);

// Conformal spatial reach integral(dt / a) from t_p to t_q; the chronological
// future of p in a flat-fiber GRW chart is |x_q - x_p| < reach.
double grw_conformal_reach(const Grw& M, double t_p, double t_q);

} // namespace lorentz

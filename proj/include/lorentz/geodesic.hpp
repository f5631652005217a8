#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "lorentz/report.hpp"
#include "lorentz/rng.hpp"
#include "lorentz/spacetime.hpp"

namespace lorentz {

// An affinely parametrized timelike geodesic integrated with classical
// fixed-step RK4, together with a parallel orthonormal frame
// { E_1, ..., E_n, gamma' } transported along it. Node spacing is uniform;
// cubic Hermite interpolation provides dense output between nodes.
class Geodesic {
public:
  const Spacetime& model() const { return *model_; }
  int nodes() const { return int(ts_.size()); } // N+1 sample points
  int intervals() const { return int(ts_.size()) - 1; }
  double step() const { return h_; }
  double length() const { return ts_.back(); }

  double parameter(int k) const { return ts_[k]; }
  const Vec& position(int k) const { return xs_[k]; }
  const Vec& velocity(int k) const { return vs_[k]; }
  // Spacelike parallel legs E_1..E_n as columns.
  const Mat& frame(int k) const { return frames_[k]; }

  Vec position_at(double t) const;
  Vec velocity_at(double t) const;

  // Reconstruct a coordinate vector at node k from normal frame components.
  Vec from_frame(int k, const Vec& lambda) const { return frames_[k] * lambda; }
  // Normal frame components <w, E_i> of a coordinate vector at node k.
  Vec to_frame(int k, const Vec& w) const;

  // <R(E_i, gamma')gamma', E_j> at every node; built on first use.
  const std::vector<Mat>& curvature_forms() const;

  // max_t |<gamma',gamma'> + 1| over the nodes
  double conservation_drift() const;

  friend Geodesic integrate_geodesic(const Spacetime&, const Vec&, const Vec&,
                                     double, int);

private:
  const Spacetime* model_ = nullptr;
  double h_ = 0.0;
  std::vector<double> ts_;
  std::vector<Vec> xs_, vs_, as_;
  std::vector<Mat> frames_;
  mutable std::vector<Mat> curv_; // lazy; not synchronized
};

int default_steps(double t_end);

// Solve gamma''^a + Gamma^a_{bc} gamma'^b gamma'^c = 0 from p with unit
// future timelike initial velocity v. steps is rounded up to an even count.
Geodesic integrate_geodesic(const Spacetime& M, const Vec& p, const Vec& v,
                            double t_end, int steps);

// A vector field along a geodesic stored as scalar components in the
// parallel frame: tangential part lt * gamma' plus normal part
// sum_i lam_i E_i, with parameter derivatives alongside.
struct TransportedField {
  const Geodesic* gamma = nullptr;
  std::vector<Vec> lam, dlam;      // normal components and derivatives
  std::vector<double> lt, dlt;     // tangential component and derivative

  Vec value(int k) const;
  Vec derivative(int k) const; // covariant derivative as coordinate vector
  double normal_sup() const;   // max_k |lam(k)|
  double tangential_sup() const;
};

// Parallel field with Y(0) = x0.
TransportedField parallel_transport(const Geodesic& g, const Vec& x0);

// Solution of the Jacobi equation J'' = -R(J, gamma')gamma' with the given
// initial data (coordinate vectors at gamma(0)).
TransportedField integrate_jacobi(const Geodesic& g, const Vec& J0,
                                  const Vec& J0_prime);

// Normal field phi(t) * Y(t) for a parallel Y with Y(0) = x0 (x0 must be
// orthogonal to gamma'(0)); dphi is the exact derivative of phi.
TransportedField scaled_parallel_field(const Geodesic& g, const Vec& x0,
                                       const std::function<double(double)>& phi,
                                       const std::function<double(double)>& dphi);

struct IndexFormResult {
  double value = 0.0;
  double quadrature_error_estimate = 0.0;
};

// I(X,X) = -int_0^s (<X',X'> - <R(X,gamma')gamma',X>) dt by composite
// Simpson quadrature over the node grid. X must be normal to gamma.
IndexFormResult index_form_geodesic(const Geodesic& g,
                                    const TransportedField& X);

// Same integral plus a boundary form at t = 0: lam(0)^T B lam(0), with B the
// shape operator form of the hypersurface the geodesic leaves orthogonally,
// expressed in frame components.
IndexFormResult index_form_with_boundary(const Geodesic& g,
                                         const TransportedField& X,
                                         const Mat& boundary_form);

struct MaximalityOptions {
  int perturbations = 100;
  std::uint64_t seed = 42;
  double tolerance = 1e-8;
  // boundary form in frame components (slice case); nullopt = point case
  std::optional<Mat> boundary_form;
  // point case: perturbations vanish at both ends; slice case adds a family
  // that is free at t = 0
  bool free_initial_endpoint = false;
};

// Margins I(J,J) - I(X,X) over random constraint-exact bump perturbations X
// of the (N-)Jacobi field J. Skipped with explicit status if a conjugate
// point is detected (normal amplitude below 1e-8 after t > 1e-3).
CheckReport check_index_maximality(const Geodesic& g,
                                   const TransportedField& J,
                                   const MaximalityOptions& opts);

// log-log slope of the maximality defect against perturbation size; the
// second-order optimality exponent (2 for a true maximizer).
double maximality_defect_slope(const Geodesic& g, const TransportedField& J,
                               const std::vector<double>& epsilons,
                               std::uint64_t seed,
                               const std::optional<Mat>& boundary_form);

} // namespace lorentz

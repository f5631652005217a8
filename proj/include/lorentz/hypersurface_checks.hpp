#pragma once

#include "lorentz/distance_checks.hpp"
#include "lorentz/hypersurface.hpp"

namespace lorentz {

// Chart-point sampling for checks on an immersed hypersurface. The box is
// the immersion chart inset by the margin fraction so all finite-difference
// layers stay inside.
struct SurfaceSampleSpec {
  int points = 150;
  int directions = 4;
  std::uint64_t seed = 1;
  double tolerance = 1e-4;
  double inset = 0.12;
};

// --- identity suite (equality checks; margin = -residual) ----------------

MarginReport check_gradient_decomposition(const Immersion& imm,
                                          const DistanceField& field,
                                          const SurfaceSampleSpec& spec);

MarginReport check_hessian_identity(const Immersion& imm,
                                    const DistanceField& field,
                                    const SurfaceSampleSpec& spec);

MarginReport check_laplacian_identity(const Immersion& imm,
                                      const DistanceField& field,
                                      const SurfaceSampleSpec& spec);

// --- restricted comparison bounds -----------------------------------------

enum class PropositionKind {
  LaplacianLower,      // Delta u >= -f_c(u)(n+|grad|^2)+nH sqrt(1+|grad|^2), K <= c
  LaplacianUpper,      // mirrored under K >= c
  LaplacianRicci,      // Delta u >= -n f_c(u) + Hess d(nu,nu) + ..., Ric >= -nc
  HessianLower,        // per-direction form under K <= c
  HessianUpper,        // per-direction form under K >= c
  AchroLaplacianLower, // slice-field analogue with F_c, A_N >= 0
  AchroLaplacianUpper, // slice-field analogue with F_c, A_N <= 0
  AchroLaplacianRicci  // slice-field analogue with the c_c(0)^2 H_N term
};

MarginReport check_proposition_bounds(const Immersion& imm,
                                      const DistanceField& field,
                                      PropositionKind kind,
                                      const CurvatureHypothesis& hyp,
                                      const SurfaceSampleSpec& spec);

// --- intrinsic curvature checks -------------------------------------------

MarginReport check_gauss_equation(const Immersion& imm,
                                  const SurfaceSampleSpec& spec);

// Ric >= ((n-1)c - n^2 H^2/4) |X|^2 in a space form of curvature c.
MarginReport check_ricci_lower_bound(const Immersion& imm, double c,
                                     const SurfaceSampleSpec& spec);

// --- mean curvature theorems on the constant-H catalog --------------------

enum class MeanCurvatureTheorem {
  PointUpper, // inf H <= f_c(sup u)
  PointLower, // sup H >= f_c(inf u)
  SliceUpper, // inf H <= F_c(sup v) + c_c(0)^2 sup H_N
  SliceLower  // sup H >= F_c(inf v)
};

MarginReport check_mean_curvature_theorem(const Immersion& imm,
                                          const DistanceField& field,
                                          MeanCurvatureTheorem which, double c,
                                          const SurfaceSampleSpec& spec);

// Constant-H surface with bounded H stays outside the ball of radius
// f_c^{-1}(H): margin = inf u - f_c^{-1}(H).
MarginReport check_outer_ball(const Immersion& imm, const DistanceField& field,
                              double c, const SurfaceSampleSpec& spec);

// Level-set rigidity: f_c^{-1}(H) lies between the sampled extrema of u, and
// declared level sets have sup u - inf u <= 1e-8.
MarginReport check_bernstein_rigidity(const Immersion& imm,
                                      const DistanceField& field, double c,
                                      const SurfaceSampleSpec& spec);

// --- hyperbolicity mechanism ----------------------------------------------

enum class HyperbolicityVariant { Point, Slice };

// Verifies, per sample, the mean-curvature hypothesis, the gradient chain
// inequality, and the superharmonicity conclusion Delta u <= 0.
MarginReport check_hyperbolicity_superharmonic(const Immersion& imm,
                                               const DistanceField& field,
                                               HyperbolicityVariant variant,
                                               double c,
                                               const SurfaceSampleSpec& spec);

// Inset sampling box of an immersion chart.
Box inset_box(const Immersion& imm, double inset);

} // namespace lorentz

#include "lorentz/hypersurface_checks.hpp"

#include <cmath>

#include "lorentz/comparison.hpp"

namespace lorentz {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Random unit tangent vector in chart components (unit for the induced metric).
Vec random_unit_tangent(const InducedGeometry& geo, Rng& rng) {
  const int n = int(geo.g.rows());
  Vec xi(n);
  double norm2 = 0.0;
  do {
    for (int i = 0; i < n; ++i) xi[i] = rng.normal();
    norm2 = xi.dot(geo.g * xi);
  } while (norm2 < 1e-12);
  return xi / std::sqrt(norm2);
}

double sqrt1p(double grad_norm2) { return std::sqrt(1.0 + grad_norm2); }

} // namespace

Box inset_box(const Immersion& imm, double inset) {
  Box b = imm.chart;
  const Vec span = b.hi - b.lo;
  b.lo += inset * span;
  b.hi -= inset * span;
  return b;
}

MarginReport check_gradient_decomposition(const Immersion& imm,
                                          const DistanceField& field,
                                          const SurfaceSampleSpec& spec) {
  MarginReport report;
  report.check_id = "gradient-decomposition";
  report.seed = spec.seed;
  report.tolerance = spec.tolerance;
  report.fd_step = field.fd_scale();
  Rng rng(spec.seed);
  const Box box = inset_box(imm, spec.inset);
  int rejected = 0;
  for (int i = 0; i < spec.points; ++i) {
    const Vec x = box.sample(rng);
    if (!field.domain_contains(imm.psi(x))) {
      ++rejected;
      continue;
    }
    const RestrictedSample s = restricted_distance(imm, field, x);
    const Vec pushed = s.geo.dpsi * s.grad;
    const Vec residual =
        s.ambient_grad - (pushed - sqrt1p(s.grad_norm2) * s.geo.nu);
    report.margins.push_back(-residual.norm());
  }
  if (rejected)
    report.notes += std::to_string(rejected) + " samples outside the field domain; ";
  report.finalize();
  return report;
}

MarginReport check_hessian_identity(const Immersion& imm,
                                    const DistanceField& field,
                                    const SurfaceSampleSpec& spec) {
  MarginReport report;
  report.check_id = "hessian-identity";
  report.seed = spec.seed;
  report.tolerance = spec.tolerance;
  report.fd_step = field.fd_scale();
  Rng rng(spec.seed);
  const Box box = inset_box(imm, spec.inset);
  int rejected = 0;
  for (int i = 0; i < spec.points; ++i) {
    const Vec xc = box.sample(rng);
    if (!field.domain_contains(imm.psi(xc))) {
      ++rejected;
      continue;
    }
    const RestrictedSample s = restricted_distance(imm, field, xc);
    const Mat Hamb = field.hessian(s.geo.position);
    const double w = sqrt1p(s.grad_norm2);
    for (int j = 0; j < spec.directions; ++j) {
      const Vec xi = random_unit_tangent(s.geo, rng);
      const Vec X = s.geo.dpsi * xi;
      const double lhs = xi.dot(s.hess * xi);
      const double rhs =
          X.dot(Hamb * X) - w * (s.geo.shape * xi).dot(s.geo.g * xi);
      report.margins.push_back(-std::abs(lhs - rhs));
    }
  }
  if (rejected)
    report.notes += std::to_string(rejected) + " samples outside the field domain; ";
  report.finalize();
  return report;
}

MarginReport check_laplacian_identity(const Immersion& imm,
                                      const DistanceField& field,
                                      const SurfaceSampleSpec& spec) {
  MarginReport report;
  report.check_id = "laplacian-identity";
  report.seed = spec.seed;
  report.tolerance = spec.tolerance;
  report.fd_step = field.fd_scale();
  Rng rng(spec.seed);
  const Box box = inset_box(imm, spec.inset);
  const int n = imm.model->surface_dim();
  int rejected = 0;
  for (int i = 0; i < spec.points; ++i) {
    const Vec xc = box.sample(rng);
    if (!field.domain_contains(imm.psi(xc))) {
      ++rejected;
      continue;
    }
    const RestrictedSample s = restricted_distance(imm, field, xc);
    const Mat Hamb = field.hessian(s.geo.position);
    const double lap_amb = field.laplacian(s.geo.position);
    const double rhs = lap_amb + s.geo.nu.dot(Hamb * s.geo.nu) +
                       n * s.geo.H * sqrt1p(s.grad_norm2);
    report.margins.push_back(-std::abs(s.laplacian - rhs));
  }
  if (rejected)
    report.notes += std::to_string(rejected) + " samples outside the field domain; ";
  report.finalize();
  return report;
}

namespace {

std::optional<double> resolve_bound_for_kind(const Spacetime& M,
                                             PropositionKind kind,
                                             const CurvatureHypothesis& hyp,
                                             MarginReport& report) {
  if (hyp.c && !hyp.verify) {
    report.notes += "declared bound accepted without sampling; ";
    return *hyp.c;
  }
  switch (kind) {
    case PropositionKind::LaplacianLower:
    case PropositionKind::HessianLower:
    case PropositionKind::AchroLaplacianLower: {
      const SampledRange r = sample_sectional_range(M, hyp.box, hyp.samples,
                                                    hyp.beta_max, hyp.seed);
      report.notes += "K max sampled " + std::to_string(r.max) + "; ";
      if (hyp.c) {
        if (r.max > *hyp.c + 1e-6) {
          report.status = CheckStatus::HypothesisViolation;
          return std::nullopt;
        }
        return *hyp.c;
      }
      return r.max + hyp.pad;
    }
    case PropositionKind::LaplacianUpper:
    case PropositionKind::HessianUpper:
    case PropositionKind::AchroLaplacianUpper: {
      const SampledRange r = sample_sectional_range(M, hyp.box, hyp.samples,
                                                    hyp.beta_max, hyp.seed);
      report.notes += "K min sampled " + std::to_string(r.min) + "; ";
      if (hyp.c) {
        if (r.min < *hyp.c - 1e-6) {
          report.status = CheckStatus::HypothesisViolation;
          return std::nullopt;
        }
        return *hyp.c;
      }
      return r.min - hyp.pad;
    }
    case PropositionKind::LaplacianRicci:
    case PropositionKind::AchroLaplacianRicci: {
      const int n = M.surface_dim();
      const SampledRange r =
          sample_ricci_range(M, hyp.box, hyp.samples, hyp.beta_max, hyp.seed);
      report.notes += "Ric min sampled " + std::to_string(r.min) + "; ";
      if (hyp.c) {
        if (r.min < -n * (*hyp.c) - 1e-6) {
          report.status = CheckStatus::HypothesisViolation;
          return std::nullopt;
        }
        return *hyp.c;
      }
      return -r.min / n + hyp.pad;
    }
  }
  return std::nullopt;
}

bool is_achro(PropositionKind kind) {
  return kind == PropositionKind::AchroLaplacianLower ||
         kind == PropositionKind::AchroLaplacianUpper ||
         kind == PropositionKind::AchroLaplacianRicci;
}

} // namespace

MarginReport check_proposition_bounds(const Immersion& imm,
                                      const DistanceField& field,
                                      PropositionKind kind,
                                      const CurvatureHypothesis& hyp,
                                      const SurfaceSampleSpec& spec) {
  MarginReport report;
  switch (kind) {
    case PropositionKind::LaplacianLower: report.check_id = "prop-laplacian-lower"; break;
    case PropositionKind::LaplacianUpper: report.check_id = "prop-laplacian-upper"; break;
    case PropositionKind::LaplacianRicci: report.check_id = "prop-laplacian-ricci"; break;
    case PropositionKind::HessianLower: report.check_id = "prop-hessian-lower"; break;
    case PropositionKind::HessianUpper: report.check_id = "prop-hessian-upper"; break;
    case PropositionKind::AchroLaplacianLower: report.check_id = "prop-achro-laplacian-lower"; break;
    case PropositionKind::AchroLaplacianUpper: report.check_id = "prop-achro-laplacian-upper"; break;
    case PropositionKind::AchroLaplacianRicci: report.check_id = "prop-achro-laplacian-ricci"; break;
  }
  report.seed = spec.seed;
  report.tolerance = spec.tolerance;
  report.fd_step = field.fd_scale();

  const bool achro = is_achro(kind);
  if (achro && field.kind() != DistanceField::SourceKind::Slice)
    throw PreconditionError(report.check_id + ": needs a slice field");
  if (!achro && field.kind() != DistanceField::SourceKind::Point)
    throw PreconditionError(report.check_id + ": needs a point field");

  const Spacetime& M = *imm.model;
  const int n = M.surface_dim();
  const auto c = resolve_bound_for_kind(M, kind, hyp, report);
  if (!c) return report;
  report.curvature_bound = *c;

  // semi-definiteness of the source slice for the achro Hessian-based bounds
  if (kind == PropositionKind::AchroLaplacianLower ||
      kind == PropositionKind::AchroLaplacianUpper) {
    const Immersion N = make_slice(M, field.slice_t0(), 2.0);
    Rng srng(spec.seed + 13);
    double lo = 1e300, hi = -1e300;
    for (int i = 0; i < 25; ++i) {
      const InducedGeometry geo = induced_geometry(N, N.chart.sample(srng));
      const Mat A_low = geo.g * geo.shape;
      Eigen::GeneralizedSelfAdjointEigenSolver<Mat> es(
          0.5 * (A_low + A_low.transpose()), geo.g);
      lo = std::min(lo, es.eigenvalues().minCoeff());
      hi = std::max(hi, es.eigenvalues().maxCoeff());
    }
    const bool ok =
        kind == PropositionKind::AchroLaplacianLower ? lo >= -1e-8 : hi <= 1e-8;
    if (!ok) {
      report.status = CheckStatus::HypothesisViolation;
      report.notes += "slice shape operator fails the semi-definiteness hypothesis; ";
      return report;
    }
  }

  const Immersion N = achro ? make_slice(M, field.slice_t0(), 2.0) : Immersion{};
  const double domain_cap =
      *c < 0.0 ? (achro ? kPi / (2.0 * std::sqrt(-*c)) : kPi / std::sqrt(-*c))
               : std::numeric_limits<double>::infinity();

  Rng rng(spec.seed);
  const Box box = inset_box(imm, spec.inset);
  int rejected = 0;
  for (int i = 0; i < spec.points; ++i) {
    const Vec x = box.sample(rng);
    if (!field.domain_contains(imm.psi(x))) {
      ++rejected;
      continue;
    }
    const RestrictedSample s = restricted_distance(imm, field, x);
    if (s.u >= domain_cap) {
      ++rejected;
      continue;
    }
    const double w = sqrt1p(s.grad_norm2);
    const double fc = achro ? equidistant_mean_curvature(*c, s.u)
                            : sphere_mean_curvature(*c, s.u);
    switch (kind) {
      case PropositionKind::LaplacianLower:
      case PropositionKind::AchroLaplacianLower:
        report.margins.push_back(s.laplacian + fc * (n + s.grad_norm2) -
                                 n * s.geo.H * w);
        break;
      case PropositionKind::LaplacianUpper:
      case PropositionKind::AchroLaplacianUpper:
        report.margins.push_back(-s.laplacian - fc * (n + s.grad_norm2) +
                                 n * s.geo.H * w);
        break;
      case PropositionKind::LaplacianRicci: {
        const Mat Hamb = field.hessian(s.geo.position);
        report.margins.push_back(s.laplacian + n * fc -
                                 s.geo.nu.dot(Hamb * s.geo.nu) -
                                 n * s.geo.H * w);
        break;
      }
      case PropositionKind::AchroLaplacianRicci: {
        const Mat Hamb = field.hessian(s.geo.position);
        const double H_N =
            induced_geometry(N, slice_projection(field, s.geo.position)).H;
        const double cc0 = jacobi_ratio_slice(*c, s.u, 0.0);
        report.margins.push_back(s.laplacian + n * fc -
                                 s.geo.nu.dot(Hamb * s.geo.nu) -
                                 n * s.geo.H * w + n * cc0 * cc0 * H_N);
        break;
      }
      case PropositionKind::HessianLower:
      case PropositionKind::HessianUpper: {
        for (int j = 0; j < spec.directions; ++j) {
          const Vec xi = random_unit_tangent(s.geo, rng);
          const double xgrad = xi.dot(s.du);
          const double lhs = xi.dot(s.hess * xi);
          const double rhs = -fc * (1.0 + xgrad * xgrad) -
                             w * (s.geo.shape * xi).dot(s.geo.g * xi);
          report.margins.push_back(kind == PropositionKind::HessianLower
                                       ? lhs - rhs
                                       : rhs - lhs);
        }
        break;
      }
    }
  }
  if (rejected)
    report.notes += std::to_string(rejected) +
                    " chart samples outside the field domain were skipped; ";
  report.finalize();
  return report;
}

MarginReport check_gauss_equation(const Immersion& imm,
                                  const SurfaceSampleSpec& spec) {
  MarginReport report;
  report.check_id = "gauss-equation";
  report.seed = spec.seed;
  report.tolerance = spec.tolerance;
  Rng rng(spec.seed);
  const Box box = inset_box(imm, spec.inset);
  const Spacetime& M = *imm.model;
  for (int i = 0; i < spec.points; ++i) {
    const Vec x = box.sample(rng);
    const InducedGeometry geo = induced_geometry(imm, x);
    const RiemannTensor Rs = intrinsic_riemann(imm, x);
    const RiemannTensor Rm = riemann_tensor(M, geo.position);
    for (int j = 0; j < spec.directions; ++j) {
      const Vec xi = random_unit_tangent(geo, rng);
      const Vec eta = random_unit_tangent(geo, rng);
      const Vec zeta = random_unit_tangent(geo, rng);
      const Vec lhs = geo.dpsi * Rs.apply(xi, eta, zeta);
      const Vec X = geo.dpsi * xi, Y = geo.dpsi * eta, Z = geo.dpsi * zeta;
      Vec V = Rm.apply(X, Y, Z);
      V += M.inner(geo.position, V, geo.nu) * geo.nu; // tangential part
      const double axz = (geo.shape * xi).dot(geo.g * zeta);
      const double ayz = (geo.shape * eta).dot(geo.g * zeta);
      V += axz * (geo.dpsi * (geo.shape * eta));
      V -= ayz * (geo.dpsi * (geo.shape * xi));
      report.margins.push_back(-(lhs - V).norm());
    }
  }
  report.finalize();
  return report;
}

MarginReport check_ricci_lower_bound(const Immersion& imm, double c,
                                     const SurfaceSampleSpec& spec) {
  MarginReport report;
  report.check_id = "ricci-lower-bound";
  report.seed = spec.seed;
  report.tolerance = spec.tolerance;
  report.curvature_bound = c;
  Rng rng(spec.seed);
  const Box box = inset_box(imm, spec.inset);
  const int n = imm.model->surface_dim();
  for (int i = 0; i < spec.points; ++i) {
    const Vec x = box.sample(rng);
    const InducedGeometry geo = induced_geometry(imm, x);
    const RiemannTensor Rs = intrinsic_riemann(imm, x);
    Mat ric = Mat::Zero(n, n);
    for (int l = 0; l < n; ++l)
      for (int j = 0; j < n; ++j) {
        double s = 0.0;
        for (int k = 0; k < n; ++k) s += Rs(k, l, k, j);
        ric(l, j) = s;
      }
    const double bound = (n - 1) * c - n * n * geo.H * geo.H / 4.0;
    for (int j = 0; j < spec.directions; ++j) {
      const Vec xi = random_unit_tangent(geo, rng);
      report.margins.push_back(xi.dot(ric * xi) - bound);
    }
  }
  report.finalize();
  return report;
}

namespace {

struct ConstantHSummary {
  double H = 0.0;
  double u_min = 0.0, u_max = 0.0;
  bool constant = true;
};

ConstantHSummary sample_constant_H(const Immersion& imm,
                                   const DistanceField& field,
                                   const SurfaceSampleSpec& spec) {
  Rng rng(spec.seed);
  Box box = inset_box(imm, spec.inset);
  ConstantHSummary out;
  double H_min = 1e300, H_max = -1e300;
  out.u_min = 1e300;
  out.u_max = -1e300;
  for (int i = 0; i < spec.points; ++i) {
    const Vec x = box.sample(rng);
    const InducedGeometry geo = induced_geometry(imm, x);
    const double u = field.value(geo.position);
    H_min = std::min(H_min, geo.H);
    H_max = std::max(H_max, geo.H);
    out.u_min = std::min(out.u_min, u);
    out.u_max = std::max(out.u_max, u);
  }
  // pin down attained extrema at the chart center as well (the catalog's
  // shifted hyperboloid attains inf u there)
  Vec center = 0.5 * (imm.chart.lo + imm.chart.hi);
  const InducedGeometry geoc = induced_geometry(imm, center);
  if (field.domain_contains(geoc.position)) {
    const double uc = field.value(geoc.position);
    out.u_min = std::min(out.u_min, uc);
    out.u_max = std::max(out.u_max, uc);
    H_min = std::min(H_min, geoc.H);
    H_max = std::max(H_max, geoc.H);
  }
  out.H = 0.5 * (H_min + H_max);
  out.constant = (H_max - H_min) <= 1e-6;
  return out;
}

} // namespace

MarginReport check_mean_curvature_theorem(const Immersion& imm,
                                          const DistanceField& field,
                                          MeanCurvatureTheorem which, double c,
                                          const SurfaceSampleSpec& spec) {
  MarginReport report;
  switch (which) {
    case MeanCurvatureTheorem::PointUpper: report.check_id = "mean-curvature-point-upper"; break;
    case MeanCurvatureTheorem::PointLower: report.check_id = "mean-curvature-point-lower"; break;
    case MeanCurvatureTheorem::SliceUpper: report.check_id = "mean-curvature-slice-upper"; break;
    case MeanCurvatureTheorem::SliceLower: report.check_id = "mean-curvature-slice-lower"; break;
  }
  report.seed = spec.seed;
  report.tolerance = spec.tolerance;
  report.curvature_bound = c;

  if (!imm.constant_H)
    throw PreconditionError(report.check_id + ": immersion not declared constant-H");
  const ConstantHSummary s = sample_constant_H(imm, field, spec);
  if (!s.constant)
    throw PreconditionError(report.check_id + ": sampled H is not constant");
  report.notes += "H=" + std::to_string(s.H) + ", sampled u in [" +
                  std::to_string(s.u_min) + ", " + std::to_string(s.u_max) +
                  "]; ";

  if (!imm.complete) {
    report.status = CheckStatus::NotCheckable;
    report.notes += "completeness/containment hypothesis unmet for the full surface; ";
    return report;
  }

  switch (which) {
    case MeanCurvatureTheorem::PointUpper:
      if (!imm.bounded_above_by_level_set) {
        report.status = CheckStatus::NotCheckable;
        report.notes +=
            "u unbounded above: the sampled sup cannot bound f_c(sup u); "
            "one-sided not checkable; ";
        return report;
      }
      report.margins.push_back(sphere_mean_curvature(c, s.u_max) - s.H);
      break;
    case MeanCurvatureTheorem::PointLower:
      report.margins.push_back(s.H - sphere_mean_curvature(c, s.u_min));
      break;
    case MeanCurvatureTheorem::SliceLower:
      if (!imm.extrema_exact) {
        report.status = CheckStatus::NotCheckable;
        report.notes += "F_c is increasing: sampled inf v cannot bound F_c(inf v); ";
        return report;
      }
      report.margins.push_back(s.H - equidistant_mean_curvature(c, s.u_min));
      break;
    case MeanCurvatureTheorem::SliceUpper: {
      if (!imm.extrema_exact || !imm.bounded_above_by_level_set) {
        report.status = CheckStatus::NotCheckable;
        report.notes += "sampled sup v cannot bound F_c(sup v); ";
        return report;
      }
      const Immersion N = make_slice(*imm.model, field.slice_t0(), 2.0);
      Rng rng(spec.seed + 3);
      double H_N = -1e300;
      for (int i = 0; i < 25; ++i)
        H_N = std::max(H_N, induced_geometry(N, N.chart.sample(rng)).H);
      const double cc0 = jacobi_ratio_slice(c, s.u_max, 0.0);
      report.margins.push_back(equidistant_mean_curvature(c, s.u_max) +
                               cc0 * cc0 * H_N - s.H);
      report.notes += "sup H_N=" + std::to_string(H_N) + "; ";
      break;
    }
  }
  report.finalize();
  return report;
}

MarginReport check_outer_ball(const Immersion& imm, const DistanceField& field,
                              double c, const SurfaceSampleSpec& spec) {
  MarginReport report;
  report.check_id = "outer-ball";
  report.seed = spec.seed;
  report.tolerance = spec.tolerance;
  report.curvature_bound = c;
  if (!imm.constant_H)
    throw PreconditionError("check_outer_ball: immersion not declared constant-H");
  const ConstantHSummary s = sample_constant_H(imm, field, spec);
  if (!s.constant)
    throw PreconditionError("check_outer_ball: sampled H is not constant");
  if (!imm.complete) {
    report.status = CheckStatus::NotCheckable;
    report.notes += "completeness hypothesis unmet; out of scope; ";
    return report;
  }
  const double delta = sphere_radius(c, s.H);
  report.notes += "H=" + std::to_string(s.H) +
                  ", ball radius=" + std::to_string(delta) + "; ";
  report.margins.push_back(s.u_min - delta);
  report.finalize();
  return report;
}

MarginReport check_bernstein_rigidity(const Immersion& imm,
                                      const DistanceField& field, double c,
                                      const SurfaceSampleSpec& spec) {
  MarginReport report;
  report.check_id = "bernstein-rigidity";
  report.seed = spec.seed;
  report.tolerance = 0.0;
  report.curvature_bound = c;
  if (!imm.constant_H)
    throw PreconditionError("check_bernstein_rigidity: not constant-H");
  const ConstantHSummary s = sample_constant_H(imm, field, spec);
  if (!s.constant)
    throw PreconditionError("check_bernstein_rigidity: sampled H not constant");
  if (!imm.complete || !imm.bounded_above_by_level_set) {
    report.status = CheckStatus::NotCheckable;
    report.notes += "not bounded above by a level set; hypothesis unmet; ";
    return report;
  }
  const double radius = sphere_radius(c, s.H);
  // radius must land inside the sampled band (slack 1e-6 per side) and a
  // true level set must be flat to 1e-8
  report.margins.push_back(radius - s.u_min + 1e-6);
  report.margins.push_back(s.u_max - radius + 1e-6);
  if (imm.extrema_exact)
    report.margins.push_back(1e-8 - (s.u_max - s.u_min));
  report.notes += "f_c^{-1}(H)=" + std::to_string(radius) + ", spread=" +
                  std::to_string(s.u_max - s.u_min) + "; ";
  report.finalize();
  return report;
}

MarginReport check_hyperbolicity_superharmonic(const Immersion& imm,
                                               const DistanceField& field,
                                               HyperbolicityVariant variant,
                                               double c,
                                               const SurfaceSampleSpec& spec) {
  MarginReport report;
  report.check_id = variant == HyperbolicityVariant::Point
                        ? "hyperbolicity-point"
                        : "hyperbolicity-slice";
  report.seed = spec.seed;
  report.tolerance = spec.tolerance;
  report.curvature_bound = c;
  report.fd_step = field.fd_scale();
  const int n = imm.model->surface_dim();
  if (variant == HyperbolicityVariant::Slice) {
    if (c < 0.0) throw PreconditionError("hyperbolicity-slice: needs c >= 0");
    if (field.kind() != DistanceField::SourceKind::Slice)
      throw PreconditionError("hyperbolicity-slice: needs a slice field");
    // the slice theorem assumes a negative semi-definite shape operator on N
    const SampledRange shape = slice_shape_eigenvalue_range(field, spec.seed + 5);
    if (shape.max > 1e-8) {
      report.status = CheckStatus::HypothesisViolation;
      report.notes += "source slice shape operator is not negative semi-definite; ";
      return report;
    }
  }

  const double weight_min = 2.0 * std::sqrt(double(n - 1)) / n;
  Rng rng(spec.seed);
  const Box box = inset_box(imm, spec.inset);
  for (int i = 0; i < spec.points; ++i) {
    const Vec x = box.sample(rng);
    if (!field.domain_contains(imm.psi(x))) continue;
    const RestrictedSample s = restricted_distance(imm, field, x);
    if (c < 0.0 && s.u > kPi / (2.0 * std::sqrt(-c))) continue;

    double fc, bound;
    if (variant == HyperbolicityVariant::Point) {
      fc = sphere_mean_curvature(c, s.u);
      bound = weight_min * fc;
    } else {
      fc = equidistant_mean_curvature(c, s.u);
      bound = c > 0.0 ? weight_min * fc : 0.0;
    }
    if (s.geo.H > bound + 1e-9) {
      report.status = CheckStatus::HypothesisViolation;
      report.notes += "mean-curvature hypothesis fails at a sample: H=" +
                      std::to_string(s.geo.H) + " > " + std::to_string(bound) +
                      "; ";
      return report;
    }
    const double w = sqrt1p(s.grad_norm2);
    report.margins.push_back(fc * (n + s.grad_norm2) - n * s.geo.H * w);
    report.margins.push_back(-s.laplacian);
  }
  report.notes += "two margins per sample: chain inequality, then -Delta u; ";
  report.finalize();
  return report;
}

} // namespace lorentz

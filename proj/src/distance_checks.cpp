#include "lorentz/distance_checks.hpp"

#include <cmath>

#include "lorentz/comparison.hpp"
#include "lorentz/hypersurface.hpp"

namespace lorentz {

namespace {

constexpr double kPi = 3.14159265358979323846;

Vec sample_event(const DistanceField& field, const SampleSpec& spec,
                 Rng& rng) {
  for (int tries = 0; tries < 100000; ++tries) {
    const Vec q = spec.box.sample(rng);
    if (!field.domain_contains(q)) continue;
    const double d = field.value(q);
    if (d < spec.d_min || d > spec.d_max) continue;
    return q;
  }
  throw PreconditionError(
      "sample_event: could not draw events in the field domain; check the "
      "sampling box");
}

std::string range_note(const char* what, const SampledRange& r) {
  return std::string(what) + " sampled in [" + std::to_string(r.min) + ", " +
         std::to_string(r.max) + "] over " + std::to_string(r.samples) +
         " draws";
}

// Resolve the sectional-curvature bound for a check needing K <= c (upper =
// false) or K >= c (upper = true); returns nullopt and sets the report
// status if the explicit hypothesis fails against sampling.
std::optional<double> resolve_sectional_bound(const Spacetime& M,
                                              const CurvatureHypothesis& hyp,
                                              bool lower_bound_on_K,
                                              MarginReport& report) {
  if (hyp.c && !hyp.verify) {
    report.notes += "declared bound accepted without sampling; ";
    return *hyp.c;
  }
  const SampledRange r =
      sample_sectional_range(M, hyp.box, hyp.samples, hyp.beta_max, hyp.seed);
  report.notes += range_note("K", r) + "; ";
  if (hyp.c) {
    const bool ok = lower_bound_on_K ? r.min >= *hyp.c - 1e-6
                                     : r.max <= *hyp.c + 1e-6;
    if (!ok) {
      report.status = CheckStatus::HypothesisViolation;
      report.notes += "declared bound c=" + std::to_string(*hyp.c) +
                      " violated by sampling; ";
      return std::nullopt;
    }
    return *hyp.c;
  }
  return lower_bound_on_K ? r.min - hyp.pad : r.max + hyp.pad;
}

std::optional<double> resolve_ricci_bound(const Spacetime& M,
                                          const CurvatureHypothesis& hyp,
                                          MarginReport& report) {
  if (hyp.c && !hyp.verify) {
    report.notes += "declared bound accepted without sampling; ";
    return *hyp.c;
  }
  const int n = M.surface_dim();
  const SampledRange r =
      sample_ricci_range(M, hyp.box, hyp.samples, hyp.beta_max, hyp.seed);
  report.notes += range_note("Ric", r) + "; ";
  if (hyp.c) {
    if (r.min < -n * (*hyp.c) - 1e-6) {
      report.status = CheckStatus::HypothesisViolation;
      report.notes += "declared bound Ric >= -n c with c=" +
                      std::to_string(*hyp.c) + " violated by sampling; ";
      return std::nullopt;
    }
    return *hyp.c;
  }
  return -r.min / n + hyp.pad;
}

} // namespace

SampledRange slice_shape_eigenvalue_range(const DistanceField& field,
                                          std::uint64_t seed) {
  const Spacetime& M = field.model();
  const Immersion N = make_slice(M, field.slice_t0(), 2.0);
  Rng rng(seed);
  SampledRange out;
  for (int i = 0; i < 40; ++i) {
    const Vec x = N.chart.sample(rng);
    const InducedGeometry geo = induced_geometry(N, x);
    const Mat A_low = geo.g * geo.shape;
    Eigen::GeneralizedSelfAdjointEigenSolver<Mat> es(
        0.5 * (A_low + A_low.transpose()), geo.g);
    const double lo = es.eigenvalues().minCoeff();
    const double hi = es.eigenvalues().maxCoeff();
    if (out.samples == 0 || lo < out.min) out.min = lo;
    if (out.samples == 0 || hi > out.max) out.max = hi;
    ++out.samples;
  }
  return out;
}

Vec slice_projection(const DistanceField& field, const Vec& q) {
  const Spacetime& M = field.model();
  const int n = M.surface_dim();
  if (const auto* ads = dynamic_cast<const AntiDeSitter*>(&M)) {
    const double k = std::sqrt(-ads->curvature());
    const Vec X = ads->embed(q);
    const double s = std::asin(k * X[0]) / k;
    Vec P = X;
    P[0] = 0.0;
    P.tail(n + 1) = X.tail(n + 1) / std::cos(k * s);
    return ads->chart_from_embedding(P);
  }
  // warped charts and Minkowski slices: same fiber coordinates
  return M.time_index() == 0 ? q.tail(n).eval() : q.head(n).eval();
}

MarginReport check_hessian_lower_point(const DistanceField& field,
                                       const CurvatureHypothesis& hyp,
                                       const SampleSpec& spec) {
  MarginReport report;
  report.check_id = "hessian-lower-point";
  report.seed = spec.seed;
  report.tolerance = spec.tolerance;
  const auto c = resolve_sectional_bound(field.model(), hyp, false, report);
  if (!c) return report;
  report.curvature_bound = *c;

  Rng rng(spec.seed);
  int fallback = 0;
  for (int e = 0; e < spec.events; ++e) {
    const Vec q = sample_event(field, spec, rng);
    const double d = field.value(q);
    report.fd_step = field.fd_step(d);
    const Mat H = field.hessian(q);
    const Vec grad = field.gradient(q);
    for (int j = 0; j < spec.directions; ++j) {
      const Vec x = random_unit_spacelike_orthogonal(field.model(), q, grad, rng);
      const double hxx = x.dot(H * x);
      if (*c < 0.0 && d >= kPi / std::sqrt(-*c)) {
        report.margins.push_back(hxx + 1.0 / d); // past the cot domain
        ++fallback;
      } else {
        report.margins.push_back(hxx + sphere_mean_curvature(*c, d));
      }
    }
  }
  if (fallback)
    report.notes += std::to_string(fallback) + " samples used the 1/d fallback bound; ";
  report.finalize();
  return report;
}

MarginReport check_hessian_upper_point(const DistanceField& field,
                                       const CurvatureHypothesis& hyp,
                                       const SampleSpec& spec) {
  MarginReport report;
  report.check_id = "hessian-upper-point";
  report.seed = spec.seed;
  report.tolerance = spec.tolerance;
  const auto c = resolve_sectional_bound(field.model(), hyp, true, report);
  if (!c) return report;
  report.curvature_bound = *c;

  SampleSpec guarded = spec;
  if (*c < 0.0)
    guarded.d_max = std::min(spec.d_max, kPi / std::sqrt(-*c) - 10.0 * field.fd_scale());

  Rng rng(spec.seed);
  for (int e = 0; e < spec.events; ++e) {
    const Vec q = sample_event(field, guarded, rng);
    const double d = field.value(q);
    report.fd_step = field.fd_step(d);
    const Mat H = field.hessian(q);
    const Vec grad = field.gradient(q);
    for (int j = 0; j < spec.directions; ++j) {
      const Vec x = random_unit_spacelike_orthogonal(field.model(), q, grad, rng);
      report.margins.push_back(-sphere_mean_curvature(*c, d) - x.dot(H * x));
    }
  }
  report.finalize();
  return report;
}

MarginReport check_laplacian_lower_point(const DistanceField& field,
                                         const CurvatureHypothesis& hyp,
                                         const SampleSpec& spec) {
  MarginReport report;
  report.check_id = "laplacian-lower-point";
  report.seed = spec.seed;
  report.tolerance = spec.tolerance;
  const auto c = resolve_ricci_bound(field.model(), hyp, report);
  if (!c) return report;
  report.curvature_bound = *c;
  const int n = field.model().surface_dim();

  Rng rng(spec.seed);
  int fallback = 0;
  for (int e = 0; e < spec.events; ++e) {
    const Vec q = sample_event(field, spec, rng);
    const double d = field.value(q);
    report.fd_step = field.fd_step(d);
    const double lap = field.laplacian(q);
    if (*c < 0.0 && d >= kPi / std::sqrt(-*c)) {
      report.margins.push_back(lap + n / d);
      ++fallback;
    } else {
      report.margins.push_back(lap + n * sphere_mean_curvature(*c, d));
    }
  }
  if (fallback)
    report.notes += std::to_string(fallback) + " samples used the n/d fallback bound; ";
  report.finalize();
  return report;
}

MarginReport check_hessian_from_slice(const DistanceField& field,
                                      SliceBound direction,
                                      const CurvatureHypothesis& hyp,
                                      const SampleSpec& spec) {
  MarginReport report;
  report.check_id = direction == SliceBound::Lower ? "hessian-from-slice-lower"
                                                   : "hessian-from-slice-upper";
  report.seed = spec.seed;
  report.tolerance = spec.tolerance;
  if (field.kind() != DistanceField::SourceKind::Slice)
    throw PreconditionError(report.check_id + ": needs a slice field");

  const SampledRange shape = slice_shape_eigenvalue_range(field, spec.seed + 7);
  report.notes += range_note("A_N eigenvalues", shape) + "; ";
  const bool semidef_ok = direction == SliceBound::Lower ? shape.min >= -1e-8
                                                         : shape.max <= 1e-8;
  if (!semidef_ok) {
    report.status = CheckStatus::HypothesisViolation;
    report.notes += "slice shape operator fails the semi-definiteness hypothesis; ";
    return report;
  }
  const auto c = resolve_sectional_bound(field.model(), hyp,
                                         direction == SliceBound::Upper, report);
  if (!c) return report;
  report.curvature_bound = *c;

  SampleSpec guarded = spec;
  if (*c < 0.0 && direction == SliceBound::Upper)
    guarded.d_max =
        std::min(spec.d_max, kPi / (2.0 * std::sqrt(-*c)) - 10.0 * field.fd_scale());

  Rng rng(spec.seed);
  int fallback = 0;
  for (int e = 0; e < spec.events; ++e) {
    const Vec q = sample_event(field, guarded, rng);
    const double v = field.value(q);
    report.fd_step = field.fd_step(v);
    const Mat H = field.hessian(q);
    const Vec grad = field.gradient(q);
    for (int j = 0; j < spec.directions; ++j) {
      const Vec x = random_unit_spacelike_orthogonal(field.model(), q, grad, rng);
      const double hxx = x.dot(H * x);
      if (direction == SliceBound::Lower) {
        if (*c < 0.0 && v >= kPi / (2.0 * std::sqrt(-*c))) {
          report.margins.push_back(hxx); // fallback: Hessian >= 0
          ++fallback;
        } else {
          report.margins.push_back(hxx + equidistant_mean_curvature(*c, v));
        }
      } else {
        report.margins.push_back(-equidistant_mean_curvature(*c, v) - hxx);
      }
    }
  }
  if (fallback)
    report.notes += std::to_string(fallback) + " samples used the >= 0 fallback bound; ";
  report.finalize();
  return report;
}

MarginReport check_laplacian_from_slice(const DistanceField& field,
                                        const CurvatureHypothesis& hyp,
                                        const SampleSpec& spec) {
  MarginReport report;
  report.check_id = "laplacian-from-slice";
  report.seed = spec.seed;
  report.tolerance = spec.tolerance;
  if (field.kind() != DistanceField::SourceKind::Slice)
    throw PreconditionError(report.check_id + ": needs a slice field");
  const auto c = resolve_ricci_bound(field.model(), hyp, report);
  if (!c) return report;
  report.curvature_bound = *c;

  const Spacetime& M = field.model();
  const int n = M.surface_dim();
  const Immersion N = make_slice(M, field.slice_t0(), 2.0);

  Rng rng(spec.seed);
  int fallback = 0;
  for (int e = 0; e < spec.events; ++e) {
    const Vec q = sample_event(field, spec, rng);
    const double v = field.value(q);
    report.fd_step = field.fd_step(v);
    const double lap = field.laplacian(q);
    const double H_N = induced_geometry(N, slice_projection(field, q)).H;
    if (*c < 0.0 && v >= kPi / (2.0 * std::sqrt(-*c))) {
      report.margins.push_back(lap + n * H_N);
      ++fallback;
    } else {
      const double cc0 = jacobi_ratio_slice(*c, v, 0.0);
      report.margins.push_back(lap + n * equidistant_mean_curvature(*c, v) +
                               n * cc0 * cc0 * H_N);
    }
  }
  if (fallback)
    report.notes += std::to_string(fallback) +
                    " samples used the -n H_N fallback bound; ";
  report.finalize();
  return report;
}

} // namespace lorentz

#include "lorentz/distance.hpp"

#include <cmath>

namespace lorentz {

namespace {

constexpr int kQuadIntervals = 512; // fixed Simpson grid; adaptivity would
                                    // make d(q) jumpy under differencing

// Simpson rule for f on [a, b] with the fixed grid.
template <class F>
double simpson(F&& f, double a, double b) {
  const double h = (b - a) / kQuadIntervals;
  double s = f(a) + f(b);
  for (int k = 1; k < kQuadIntervals; ++k) s += f(a + k * h) * (k % 2 ? 4.0 : 2.0);
  return s * h / 3.0;
}

} // namespace

double grw_conformal_reach(const Grw& M, double t_p, double t_q) {
  const Warping& w = M.warping();
  return simpson([&](double t) { return 1.0 / w.a(t); }, t_p, t_q);
}

double grw_point_distance(const Grw& M, const Vec& p, const Vec& q) {
  const Warping& w = M.warping();
  const double tp = p[0], tq = q[0];
  if (!(tq > tp))
    throw ChartDomainError("grw_point_distance: q not above p in time");
  const double dx = (q.tail(q.size() - 1) - p.tail(p.size() - 1)).norm();

  auto displacement = [&](double kappa) {
    return simpson(
        [&](double t) {
          const double a = w.a(t);
          return kappa / (a * std::sqrt(a * a + kappa * kappa));
        },
        tp, tq);
  };
  auto d_displacement = [&](double kappa) {
    return simpson(
        [&](double t) {
          const double a = w.a(t);
          return a / std::pow(a * a + kappa * kappa, 1.5);
        },
        tp, tq);
  };
  auto proper_time = [&](double kappa) {
    return simpson(
        [&](double t) {
          const double a = w.a(t);
          return a / std::sqrt(a * a + kappa * kappa);
        },
        tp, tq);
  };

  if (dx < 1e-300) return tq - tp;

  // bracket the conserved momentum: displacement is increasing in kappa
  double lo = 0.0, hi = 1.0;
  int grow = 0;
  while (displacement(hi) < dx) {
    lo = hi;
    hi *= 2.0;
    if (++grow > 60)
      throw ChartDomainError("grw_point_distance: q not in I+(p)");
  }
  double kappa = 0.5 * (lo + hi);
  const double tol = 1e-14 * (1.0 + dx);
  for (int it = 0; it < 100; ++it) {
    const double f = displacement(kappa) - dx;
    if (std::abs(f) <= tol) break;
    if (f > 0.0)
      hi = kappa;
    else
      lo = kappa;
    const double step = f / d_displacement(kappa);
    double next = kappa - step;
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    kappa = next;
  }
  return proper_time(kappa);
}

// -------------------------------------------------------------------------
// Field construction

DistanceField DistanceField::from_point(const Spacetime& M, const Vec& p,
                                        double fd_scale) {
  DistanceField f;
  f.model_ = &M;
  f.kind_ = SourceKind::Point;
  f.p_ = p;
  f.fd_scale_ = fd_scale;

  if (const auto* mink = dynamic_cast<const Minkowski*>(&M)) {
    f.value_fn_ = [&M, p](const Vec& q) {
      const Vec d = q - p;
      const double dd = M.inner(p, d, d);
      if (!(dd < 0.0))
        throw ChartDomainError("distance: q not in the chronological future");
      return std::sqrt(-dd);
    };
    f.domain_fn_ = [&M, p](const Vec& q) {
      return chronological_future_contains(M, p, q);
    };
    (void)mink;
    return f;
  }
  if (const auto* ds = dynamic_cast<const DeSitter*>(&M)) {
    const double c = ds->curvature();
    const Vec P = ds->embed(p);
    const Vec Temb = ds->embed_differential(p) * ds->time_orientation(p);
    auto future_factor = [ds, P, Temb, c](const Vec& q) {
      // cosh(sqrt(c) d) on I+(p); <= 1 outside the timelike region
      const Vec Q = ds->embed(q);
      const double kappa = c * ds->embedding_inner(P, Q);
      if (kappa <= 1.0) return -1.0;
      const Vec w = Q - kappa * P; // along the initial velocity
      return ds->embedding_inner(w, Temb) < 0.0 ? kappa : -1.0;
    };
    f.value_fn_ = [ds, future_factor, c](const Vec& q) {
      const double kappa = future_factor(q);
      if (kappa <= 1.0)
        throw ChartDomainError("distance: q not in the chronological future");
      return std::acosh(kappa) / std::sqrt(c);
    };
    f.domain_fn_ = [ds, future_factor](const Vec& q) {
      return ds->chart_contains(q) && future_factor(q) > 1.0;
    };
    return f;
  }
  if (const auto* grw = dynamic_cast<const Grw*>(&M)) {
    f.value_fn_ = [grw, p](const Vec& q) { return grw_point_distance(*grw, p, q); };
    f.domain_fn_ = [grw, p](const Vec& q) {
      if (!grw->chart_contains(q) || !(q[0] > p[0])) return false;
      const double dx = (q.tail(q.size() - 1) - p.tail(p.size() - 1)).norm();
      return dx < grw_conformal_reach(*grw, p[0], q[0]);
    };
    return f;
  }
  throw UnsupportedModelError(
      "DistanceField::from_point: the Lorentzian distance from a point is "
      "not finite on " +
      M.label() + " (timelike geodesics are closed)");
}

DistanceField DistanceField::from_slice(const Spacetime& M, double t0,
                                        double fd_scale) {
  DistanceField f;
  f.model_ = &M;
  f.kind_ = SourceKind::Slice;
  f.t0_ = t0;
  f.fd_scale_ = fd_scale;

  if (const auto* ads = dynamic_cast<const AntiDeSitter*>(&M)) {
    if (t0 != 0.0)
      throw UnsupportedModelError(
          "DistanceField::from_slice: anti-de Sitter supports only the "
          "totally geodesic slice t0 = 0");
    const double k = std::sqrt(-ads->curvature());
    f.value_fn_ = [ads, k](const Vec& q) {
      const Vec X = ads->embed(q);
      if (!(X[0] > 0.0) || !(k * X[0] < 1.0) || !(X[1] > 0.0))
        throw ChartDomainError("distance: q outside the normal tube of the slice");
      return std::asin(k * X[0]) / k;
    };
    f.domain_fn_ = [ads, k](const Vec& q) {
      if (!ads->chart_contains(q)) return false;
      const Vec X = ads->embed(q);
      return X[0] > 0.0 && k * X[0] < 1.0 && X[1] > 0.0;
    };
    return f;
  }

  // warped charts (-dt^2 + ...) and the Minkowski chart: proper time of any
  // causal curve from the slice is at most the coordinate-time gain, so
  // d_N = t - t0 with the vertical geodesics attaining it.
  const int ti = M.time_index();
  f.value_fn_ = [&M, t0, ti](const Vec& q) {
    if (!(q[ti] > t0))
      throw ChartDomainError("distance: q not strictly above the slice");
    return q[ti] - t0;
  };
  f.domain_fn_ = [&M, t0, ti](const Vec& q) {
    return M.chart_contains(q) && q[ti] > t0;
  };
  return f;
}

// -------------------------------------------------------------------------
// Evaluators

bool DistanceField::domain_contains(const Vec& q) const {
  return domain_fn_(q);
}

double DistanceField::value(const Vec& q) const { return value_fn_(q); }

void DistanceField::require_interior(const Vec& q, double h) const {
  if (!domain_fn_(q))
    throw ChartDomainError("distance: q outside the field domain");
  if (!(value_fn_(q) >= 10.0 * h))
    throw ChartDomainError(
        "distance: q closer than 10 fd steps to the domain boundary");
}

Vec DistanceField::lowered_gradient(const Vec& q, double h) const {
  const int dim = model_->dimension();
  Vec dl(dim);
  for (int a = 0; a < dim; ++a) {
    Vec qp = q, qpp = q, qm = q, qmm = q;
    qp[a] += h;
    qpp[a] += 2.0 * h;
    qm[a] -= h;
    qmm[a] -= 2.0 * h;
    dl[a] = (-value_fn_(qpp) + 8.0 * value_fn_(qp) - 8.0 * value_fn_(qm) +
             value_fn_(qmm)) /
            (12.0 * h);
  }
  return dl;
}

Vec DistanceField::gradient(const Vec& q, bool richardson) const {
  const double d = value_fn_(q);
  const double h = fd_step(d);
  require_interior(q, h);
  Vec dl = lowered_gradient(q, h);
  if (richardson) {
    const Vec dl2 = lowered_gradient(q, h / 2.0);
    dl = (16.0 * dl2 - dl) / 15.0;
  }
  const Mat g = model_->metric(q);
  const Vec grad = g.inverse() * dl;

  const double norm2 = grad.dot(g * grad);
  if (std::abs(norm2 + 1.0) > 1e-6)
    throw std::runtime_error(
        "distance gradient: eikonal postcondition violated, <grad,grad> = " +
        std::to_string(norm2));
  if (!(model_->inner(q, grad, model_->time_orientation(q)) > 0.0))
    throw std::runtime_error("distance gradient: not past-directed");
  return grad;
}

Mat DistanceField::hessian(const Vec& q) const {
  const int dim = model_->dimension();
  const double d0 = value_fn_(q);
  const double h = fd_step(d0);
  require_interior(q, h);

  Mat dd(dim, dim);
  for (int a = 0; a < dim; ++a) {
    Vec qp = q, qm = q;
    qp[a] += h;
    qm[a] -= h;
    dd(a, a) = (value_fn_(qp) - 2.0 * d0 + value_fn_(qm)) / (h * h);
    for (int b = a + 1; b < dim; ++b) {
      Vec qpp = q, qpm = q, qmp = q, qmm = q;
      qpp[a] += h; qpp[b] += h;
      qpm[a] += h; qpm[b] -= h;
      qmp[a] -= h; qmp[b] += h;
      qmm[a] -= h; qmm[b] -= h;
      dd(a, b) = dd(b, a) =
          (value_fn_(qpp) - value_fn_(qpm) - value_fn_(qmp) + value_fn_(qmm)) /
          (4.0 * h * h);
    }
  }

  const Vec dl = lowered_gradient(q, h);
  const Christoffels G = christoffel(*model_, q);
  for (int a = 0; a < dim; ++a)
    for (int b = 0; b < dim; ++b)
      for (int c = 0; c < dim; ++c) dd(a, b) -= G[c](a, b) * dl[c];
  return dd;
}

double DistanceField::hessian_dir(const Vec& q, const Vec& x,
                                  const Vec& y) const {
  return x.dot(hessian(q) * y);
}

double DistanceField::laplacian_frame(const Vec& q, const Mat& frame) const {
  const Mat H = hessian(q);
  double sum = -frame.col(0).dot(H * frame.col(0));
  for (int i = 1; i < frame.cols(); ++i)
    sum += frame.col(i).dot(H * frame.col(i));
  return sum;
}

double DistanceField::laplacian(const Vec& q) const {
  const Vec grad = gradient(q);
  return laplacian_frame(q, orthonormal_frame(*model_, q, grad));
}

} // namespace lorentz

#include "lorentz/hypersurface.hpp"

#include <cmath>

namespace lorentz {

namespace {

// Derivative-layer steps. The induced-curvature layers sit on top of one or
// two finite-difference layers already, so they use larger steps where the
// truncation/roundoff balance actually lies.
constexpr double kMetricDerivStep = 1e-2;    // chart step for d(induced g)
constexpr double kChristoffelDerivStep = 2e-2; // chart step for d(induced Gamma)
constexpr double kRestrictedStep = 1e-4;     // chart step for u derivatives
constexpr double kShapeStep = 2e-4; // chart step for the Weingarten map: the
                                    // normal itself may sit on one FD layer

double sinhc(double r) {
  if (r < 1e-4) {
    const double r2 = r * r;
    return 1.0 + r2 / 6.0 + r2 * r2 / 120.0;
  }
  return std::sinh(r) / r;
}

} // namespace

Mat Immersion::differential(const Vec& x) const {
  if (jacobian) return jacobian(x);
  const int n = int(x.size());
  const double h = fd_step(x);
  Mat d(model->dimension(), n);
  for (int j = 0; j < n; ++j) {
    Vec xp = x, xpp = x, xm = x, xmm = x;
    xp[j] += h;
    xpp[j] += 2.0 * h;
    xm[j] -= h;
    xmm[j] -= 2.0 * h;
    d.col(j) =
        (-psi(xpp) + 8.0 * psi(xp) - 8.0 * psi(xm) + psi(xmm)) / (12.0 * h);
  }
  return d;
}

namespace {

// Canonical future unit normal: any kernel vector of dpsi^T G, normalized
// and oriented; unique for a spacelike immersion, hence smooth in x.
Vec unit_normal(const Immersion& imm, const Vec& x, const Vec& pos,
                const Mat& dpsi) {
  const Spacetime& M = *imm.model;
  const Mat G = M.metric(pos);
  Eigen::FullPivLU<Mat> lu((dpsi.transpose() * G).eval());
  const Mat ker = lu.kernel();
  if (ker.cols() < 1)
    throw PreconditionError(imm.label + ": degenerate tangent space");
  Vec w = ker.col(0);
  const double ww = w.dot(G * w);
  if (!(ww < 0.0))
    throw PreconditionError(imm.label + ": normal direction is not timelike");
  w /= std::sqrt(-ww);
  if (M.inner(pos, w, M.time_orientation(pos)) > 0.0) w = -w;
  return w;
}

} // namespace

InducedGeometry induced_geometry(const Immersion& imm, const Vec& x) {
  const Spacetime& M = *imm.model;
  const int n = int(x.size());
  InducedGeometry geo;
  geo.chart_point = x;
  geo.position = imm.psi(x);
  geo.dpsi = imm.differential(x);
  const Mat G = M.metric(geo.position);
  geo.g = geo.dpsi.transpose() * G * geo.dpsi;

  Eigen::SelfAdjointEigenSolver<Mat> es(geo.g);
  if (es.eigenvalues().minCoeff() <= 0.0)
    throw PreconditionError(imm.label + ": immersion is not spacelike at " +
                            std::to_string(x[0]));
  geo.g_inv = geo.g.inverse();
  geo.nu = unit_normal(imm, x, geo.position, geo.dpsi);

  // Weingarten: A X = -(ambient derivative of nu along X), projected
  const double h = kShapeStep * (1.0 + x.norm());
  const Christoffels Gamma = christoffel(M, geo.position);
  Mat A_low(n, n);
  for (int j = 0; j < n; ++j) {
    Vec xp = x, xm = x;
    xp[j] += h;
    xm[j] -= h;
    const Vec psip = imm.psi(xp), psim = imm.psi(xm);
    const Vec nup = unit_normal(imm, xp, psip, imm.differential(xp));
    const Vec num = unit_normal(imm, xm, psim, imm.differential(xm));
    Vec dnu = (nup - num) / (2.0 * h);
    for (int a = 0; a < M.dimension(); ++a)
      dnu[a] += geo.dpsi.col(j).dot(Gamma[a] * geo.nu);
    for (int i = 0; i < n; ++i) A_low(i, j) = -geo.dpsi.col(i).dot(G * dnu);
  }
  geo.shape = geo.g_inv * A_low;
  geo.H = -geo.shape.trace() / n;
  return geo;
}

Christoffels induced_christoffels(const Immersion& imm, const Vec& x) {
  const int n = int(x.size());
  const double h = kMetricDerivStep * (1.0 + x.norm());
  auto metric_at = [&](const Vec& xc) {
    const Mat d = imm.differential(xc);
    return (d.transpose() * imm.model->metric(imm.psi(xc)) * d).eval();
  };
  std::vector<Mat> dg(n);
  for (int e = 0; e < n; ++e) {
    Vec xp = x, xpp = x, xm = x, xmm = x;
    xp[e] += h;
    xpp[e] += 2.0 * h;
    xm[e] -= h;
    xmm[e] -= 2.0 * h;
    dg[e] = (-metric_at(xpp) + 8.0 * metric_at(xp) - 8.0 * metric_at(xm) +
             metric_at(xmm)) /
            (12.0 * h);
  }
  const Mat ginv = metric_at(x).inverse();
  Christoffels Gamma(n);
  for (auto& m : Gamma) m = Mat::Zero(n, n);
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) {
        double s = 0.0;
        for (int l = 0; l < n; ++l)
          s += ginv(k, l) * (dg[i](l, j) + dg[j](l, i) - dg[l](i, j));
        Gamma[k](i, j) = Gamma[k](j, i) = 0.5 * s;
      }
  return Gamma;
}

RiemannTensor intrinsic_riemann(const Immersion& imm, const Vec& x) {
  const int n = int(x.size());
  const double h = kChristoffelDerivStep * (1.0 + x.norm());
  const Christoffels G0 = induced_christoffels(imm, x);
  std::vector<Christoffels> dG(n);
  for (int e = 0; e < n; ++e) {
    Vec xp = x, xpp = x, xm = x, xmm = x;
    xp[e] += h;
    xpp[e] += 2.0 * h;
    xm[e] -= h;
    xmm[e] -= 2.0 * h;
    const Christoffels Gp = induced_christoffels(imm, xp);
    const Christoffels Gpp = induced_christoffels(imm, xpp);
    const Christoffels Gm = induced_christoffels(imm, xm);
    const Christoffels Gmm = induced_christoffels(imm, xmm);
    dG[e].resize(n);
    for (int a = 0; a < n; ++a)
      dG[e][a] = (-Gpp[a] + 8.0 * Gp[a] - 8.0 * Gm[a] + Gmm[a]) / (12.0 * h);
  }
  RiemannTensor R;
  R.dim = n;
  R.comp.assign(std::size_t(n) * n * n * n, 0.0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          double v = dG[c][a](d, b) - dG[d][a](c, b);
          for (int e = 0; e < n; ++e)
            v += G0[a](c, e) * G0[e](d, b) - G0[a](d, e) * G0[e](c, b);
          R.comp[((std::size_t(a) * n + b) * n + c) * n + d] = v;
        }
  return R;
}

RestrictedSample restricted_distance(const Immersion& imm,
                                     const DistanceField& field, const Vec& x) {
  const int n = int(x.size());
  RestrictedSample s;
  s.chart_point = x;
  s.geo = induced_geometry(imm, x);

  auto u_at = [&](const Vec& xc) { return field.value(imm.psi(xc)); };
  const double h = kRestrictedStep * (1.0 + x.norm());
  s.u = u_at(x);

  s.du.resize(n);
  Mat d2(n, n);
  for (int i = 0; i < n; ++i) {
    Vec xp = x, xm = x;
    xp[i] += h;
    xm[i] -= h;
    const double up = u_at(xp), um = u_at(xm);
    s.du[i] = (up - um) / (2.0 * h);
    d2(i, i) = (up - 2.0 * s.u + um) / (h * h);
    for (int j = i + 1; j < n; ++j) {
      Vec qpp = x, qpm = x, qmp = x, qmm = x;
      qpp[i] += h; qpp[j] += h;
      qpm[i] += h; qpm[j] -= h;
      qmp[i] -= h; qmp[j] += h;
      qmm[i] -= h; qmm[j] -= h;
      d2(i, j) = d2(j, i) =
          (u_at(qpp) - u_at(qpm) - u_at(qmp) + u_at(qmm)) / (4.0 * h * h);
    }
  }

  const Christoffels Gamma = induced_christoffels(imm, x);
  s.hess = d2;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) s.hess(i, j) -= Gamma[k](i, j) * s.du[k];

  s.grad = s.geo.g_inv * s.du;
  s.grad_norm2 = s.du.dot(s.grad);
  s.laplacian = (s.geo.g_inv * s.hess).trace();
  s.ambient_grad = field.gradient(s.geo.position);
  return s;
}

NJacobi n_jacobi_field(const Immersion& imm, const Vec& x0, const Vec& xi0,
                       double s, int steps) {
  const InducedGeometry geo = induced_geometry(imm, x0);
  Geodesic g = integrate_geodesic(*imm.model, geo.position, geo.nu, s, steps);
  const Vec J0 = geo.dpsi * xi0;
  const Vec J0p = -geo.dpsi * (geo.shape * xi0);
  TransportedField J = integrate_jacobi(g, J0, J0p);
  return {std::move(g), std::move(J)};
}

Mat shape_boundary_form(const InducedGeometry& geo, const Geodesic& g) {
  const Spacetime& M = g.model();
  const Mat G = M.metric(geo.position);
  const int n = int(g.frame(0).cols());
  Mat B(n, n);
  std::vector<Vec> xi(n);
  for (int k = 0; k < n; ++k)
    xi[k] = geo.g_inv * (geo.dpsi.transpose() * G * g.frame(0).col(k));
  for (int k = 0; k < n; ++k)
    for (int l = 0; l < n; ++l)
      B(k, l) = (geo.shape * xi[k]).dot(geo.g * xi[l]);
  return B;
}

IndexFormResult index_form_hypersurface(const Immersion& imm, const Vec& x0,
                                        const Geodesic& g,
                                        const TransportedField& X) {
  const InducedGeometry geo = induced_geometry(imm, x0);
  if ((g.position(0) - geo.position).norm() > 1e-8 ||
      (g.velocity(0) - geo.nu).norm() > 1e-8)
    throw PreconditionError(
        "index_form_hypersurface: geodesic must leave the immersion "
        "orthogonally at x0");
  return index_form_with_boundary(g, X, shape_boundary_form(geo, g));
}

// -------------------------------------------------------------------------
// Catalog

namespace {

Box centered_box(int n, double radius) {
  return {Vec::Constant(n, -radius), Vec::Constant(n, radius)};
}

} // namespace

Immersion make_hyperboloid(const Minkowski& M, const Vec& p, double s,
                           double radius) {
  const int n = M.surface_dim();
  Immersion imm;
  imm.model = &M;
  imm.chart = centered_box(n, radius);
  imm.label = "hyperboloid(s=" + std::to_string(s) + ")";
  imm.psi = [p, s, n](const Vec& x) {
    Vec q(n + 1);
    q.head(n) = x;
    q[n] = std::sqrt(s * s + x.squaredNorm());
    return (p + q).eval();
  };
  imm.jacobian = [s, n](const Vec& x) {
    Mat d = Mat::Zero(n + 1, n);
    d.topRows(n) = Mat::Identity(n, n);
    const double m = std::sqrt(s * s + x.squaredNorm());
    for (int j = 0; j < n; ++j) d(n, j) = x[j] / m;
    return d;
  };
  imm.constant_H = true;
  imm.extrema_exact = true;
  imm.complete = true;
  imm.bounded_above_by_level_set = true;
  return imm;
}

Immersion make_shifted_hyperboloid(const Minkowski& M, const Vec& p, double s,
                                   double tau, double radius) {
  Immersion imm = make_hyperboloid(M, p, s, radius);
  const int n = M.surface_dim();
  imm.label = "shifted-hyperboloid(s=" + std::to_string(s) +
              ",tau=" + std::to_string(tau) + ")";
  imm.psi = [p, s, tau, n](const Vec& x) {
    Vec q(n + 1);
    q.head(n) = x;
    q[n] = tau + std::sqrt(s * s + x.squaredNorm());
    return (p + q).eval();
  };
  imm.extrema_exact = false; // inf u is attained at x = 0, sup is not
  imm.bounded_above_by_level_set = false;
  return imm;
}

Immersion make_tilted_plane(const Minkowski& M, double height, const Vec& slope,
                            double radius) {
  const int n = M.surface_dim();
  if (!(slope.norm() < 1.0))
    throw PreconditionError("make_tilted_plane: |slope| must be < 1");
  Immersion imm;
  imm.model = &M;
  imm.chart = centered_box(n, radius);
  imm.label = "tilted-plane(|b|=" + std::to_string(slope.norm()) + ")";
  imm.psi = [height, slope, n](const Vec& x) {
    Vec q(n + 1);
    q.head(n) = x;
    q[n] = height + slope.dot(x);
    return q;
  };
  imm.jacobian = [slope, n](const Vec&) {
    Mat d = Mat::Zero(n + 1, n);
    d.topRows(n) = Mat::Identity(n, n);
    d.row(n) = slope.transpose();
    return d;
  };
  imm.constant_H = true; // H = 0
  imm.complete = false;  // the complete plane leaves I+(p) / crosses slices
  return imm;
}

Immersion make_minkowski_graph(const Minkowski& M, double height,
                               const Vec& slope, double eps, double radius) {
  const int n = M.surface_dim();
  if (!(slope.norm() + eps * std::sqrt(double(n)) <= 0.95))
    throw PreconditionError("make_minkowski_graph: gradient bound too large");
  Immersion imm;
  imm.model = &M;
  imm.chart = centered_box(n, radius);
  imm.label = "minkowski-graph(eps=" + std::to_string(eps) + ")";
  imm.psi = [height, slope, eps, n](const Vec& x) {
    Vec q(n + 1);
    q.head(n) = x;
    double f = height + slope.dot(x);
    for (int i = 0; i < n; ++i) f += eps * std::sin(x[i]);
    q[n] = f;
    return q;
  };
  imm.jacobian = [slope, eps, n](const Vec& x) {
    Mat d = Mat::Zero(n + 1, n);
    d.topRows(n) = Mat::Identity(n, n);
    for (int j = 0; j < n; ++j) d(n, j) = slope[j] + eps * std::cos(x[j]);
    return d;
  };
  return imm;
}

Immersion make_slice(const Spacetime& M, double t0, double radius) {
  const int n = M.surface_dim();
  const int ti = M.time_index();
  Immersion imm;
  imm.model = &M;
  imm.chart = centered_box(n, radius);
  imm.label = M.label() + "-slice(t0=" + std::to_string(t0) + ")";
  imm.psi = [t0, ti, n](const Vec& x) {
    Vec q(n + 1);
    if (ti == 0) {
      q[0] = t0;
      q.tail(n) = x;
    } else {
      q.head(n) = x;
      q[n] = t0;
    }
    return q;
  };
  imm.jacobian = [ti, n](const Vec&) {
    Mat d = Mat::Zero(n + 1, n);
    if (ti == 0)
      d.bottomRows(n) = Mat::Identity(n, n);
    else
      d.topRows(n) = Mat::Identity(n, n);
    return d;
  };
  imm.constant_H = true;
  imm.extrema_exact = true;
  imm.complete = true;
  imm.bounded_above_by_level_set = true;
  return imm;
}

Immersion make_warped_graph(const Spacetime& M, double t0, double eps,
                            double radius) {
  if (M.time_index() != 0)
    throw PreconditionError("make_warped_graph: needs a (t, x) chart");
  const int n = M.surface_dim();
  Immersion imm;
  imm.model = &M;
  imm.chart = centered_box(n, radius);
  imm.label = M.label() + "-graph(t0=" + std::to_string(t0) +
              ",eps=" + std::to_string(eps) + ")";
  imm.psi = [t0, eps, n](const Vec& x) {
    Vec q(n + 1);
    double f = t0;
    for (int i = 0; i < n; ++i) f += eps * std::sin(x[i]);
    q[0] = f;
    q.tail(n) = x;
    return q;
  };
  imm.jacobian = [eps, n](const Vec& x) {
    Mat d = Mat::Zero(n + 1, n);
    for (int j = 0; j < n; ++j) d(0, j) = eps * std::cos(x[j]);
    d.bottomRows(n) = Mat::Identity(n, n);
    return d;
  };
  imm.complete = true;
  imm.bounded_above_by_level_set = true;
  imm.extrema_exact = radius >= 6.3; // box covers a full period of sin
  return imm;
}

Immersion make_de_sitter_level_set(const DeSitter& M, const Vec& p, double s,
                                   double radius) {
  const int n = M.surface_dim();
  const double r = std::sqrt(M.curvature());
  const Vec P = M.embed(p);
  const Mat F = orthonormal_frame(M, p, M.time_orientation(p));
  const Mat dX = M.embed_differential(p);
  const Vec Temb = dX * F.col(0);
  Mat Semb(int(P.size()), n);
  for (int i = 0; i < n; ++i) Semb.col(i) = dX * F.col(i + 1);

  Immersion imm;
  imm.model = &M;
  imm.chart = centered_box(n, radius);
  imm.label = "de-sitter-level-set(s=" + std::to_string(s) + ")";
  imm.psi = [&M, P, Temb, Semb, r, s](const Vec& w) {
    const double rho = w.norm();
    const Vec V = std::cosh(rho) * Temb + sinhc(rho) * (Semb * w);
    const Vec Q = std::cosh(r * s) * P + (std::sinh(r * s) / r) * V;
    return M.chart_from_embedding(Q);
  };
  imm.constant_H = true;
  imm.extrema_exact = true;
  imm.complete = true;
  imm.bounded_above_by_level_set = true;
  return imm;
}

Immersion make_boosted_totally_geodesic(const DeSitter& M, double chi,
                                        double radius) {
  const int n = M.surface_dim();
  if (!(radius <= 0.8))
    throw PreconditionError(
        "make_boosted_totally_geodesic: radius must stay on the upper "
        "hemisphere (<= 0.8)");
  const int edim = M.dimension() + 1;
  const double rc = std::sqrt(M.curvature());
  // orthonormal spacelike basis of the boosted hyperplane w^perp,
  // w = cosh(chi) e0 + sinh(chi) e1
  Mat f = Mat::Zero(edim, n + 1);
  for (int i = 0; i < n; ++i) f(2 + i, i) = 1.0;
  f(0, n) = std::sinh(chi);
  f(1, n) = std::cosh(chi);

  Immersion imm;
  imm.model = &M;
  imm.chart = centered_box(n, radius);
  imm.label = "de-sitter-boosted-geodesic(chi=" + std::to_string(chi) + ")";
  imm.psi = [&M, f, rc, n](const Vec& u) {
    const double D = 1.0 + u.squaredNorm();
    Vec omega(n + 1);
    omega.head(n) = 2.0 * u / D;
    omega[n] = (2.0 - D) / D;
    const Vec X = (f * omega) / rc;
    return M.chart_from_embedding(X);
  };
  imm.constant_H = true; // totally geodesic
  return imm;
}

} // namespace lorentz

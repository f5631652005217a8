#include "lorentz/geodesic.hpp"

#include <cmath>

namespace lorentz {

namespace {

struct State {
  Vec x, v;
  Mat E; // spacelike frame legs as columns
};

State operator+(const State& a, const State& b) {
  return {a.x + b.x, a.v + b.v, a.E + b.E};
}
State operator*(double s, const State& a) { return {s * a.x, s * a.v, s * a.E}; }

State rhs(const Spacetime& M, const State& s) {
  const Christoffels G = christoffel(M, s.x);
  const int dim = M.dimension();
  const int n = int(s.E.cols());
  State d{s.v, Vec(dim), Mat(dim, n)};
  for (int a = 0; a < dim; ++a) {
    d.v[a] = -s.v.dot(G[a] * s.v);
    for (int i = 0; i < n; ++i) d.E(a, i) = -s.v.dot(G[a] * s.E.col(i));
  }
  return d;
}

double cubic_hermite(double p0, double m0, double p1, double m1, double tau,
                     double h) {
  const double t2 = tau * tau, t3 = t2 * tau;
  return (2 * t3 - 3 * t2 + 1) * p0 + (t3 - 2 * t2 + tau) * h * m0 +
         (-2 * t3 + 3 * t2) * p1 + (t3 - t2) * h * m1;
}

Vec hermite_vec(const Vec& p0, const Vec& m0, const Vec& p1, const Vec& m1,
                double tau, double h) {
  Vec out(p0.size());
  for (int i = 0; i < p0.size(); ++i)
    out[i] = cubic_hermite(p0[i], m0[i], p1[i], m1[i], tau, h);
  return out;
}

double simpson(const std::vector<double>& f, double h) {
  const int N = int(f.size()) - 1;
  double s = f[0] + f[N];
  for (int k = 1; k < N; ++k) s += f[k] * (k % 2 ? 4.0 : 2.0);
  return s * h / 3.0;
}

} // namespace

int default_steps(double t_end) {
  int steps = int(std::ceil(t_end / 1e-3));
  steps = std::max(steps, 8);
  while (steps % 4) ++steps;
  return steps;
}

Geodesic integrate_geodesic(const Spacetime& M, const Vec& p, const Vec& v,
                            double t_end, int steps) {
  if (!(t_end > 0.0)) throw PreconditionError("integrate_geodesic: t_end <= 0");
  while (steps % 4) ++steps;

  const double vv = M.inner(p, v, v);
  if (std::abs(vv + 1.0) > 1e-10)
    throw PreconditionError(
        "integrate_geodesic: initial velocity must be unit timelike");
  if (!(M.inner(p, v, M.time_orientation(p)) < 0.0))
    throw PreconditionError(
        "integrate_geodesic: initial velocity must be future-directed");
  if (!M.chart_contains(p))
    throw ChartDomainError("integrate_geodesic: start outside chart");

  Geodesic g;
  g.model_ = &M;
  g.h_ = t_end / steps;
  g.ts_.reserve(steps + 1);
  g.xs_.reserve(steps + 1);
  g.vs_.reserve(steps + 1);
  g.as_.reserve(steps + 1);
  g.frames_.reserve(steps + 1);

  State s{p, v, orthonormal_frame(M, p, v).rightCols(M.surface_dim())};
  const double h = g.h_;
  for (int k = 0; k <= steps; ++k) {
    if (!M.chart_contains(s.x))
      throw ChartDomainError("integrate_geodesic: left the chart at t=" +
                             std::to_string(k * h));
    const State d = rhs(M, s);
    g.ts_.push_back(k * h);
    g.xs_.push_back(s.x);
    g.vs_.push_back(s.v);
    g.as_.push_back(d.v);
    g.frames_.push_back(s.E);
    if (k == steps) break;
    const State k1 = d;
    const State k2 = rhs(M, s + (h / 2) * k1);
    const State k3 = rhs(M, s + (h / 2) * k2);
    const State k4 = rhs(M, s + h * k3);
    s = s + (h / 6) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  }
  return g;
}

Vec Geodesic::position_at(double t) const {
  const int N = intervals();
  int k = std::min(std::max(int(t / h_), 0), N - 1);
  const double tau = (t - ts_[k]) / h_;
  return hermite_vec(xs_[k], vs_[k], xs_[k + 1], vs_[k + 1], tau, h_);
}

Vec Geodesic::velocity_at(double t) const {
  const int N = intervals();
  int k = std::min(std::max(int(t / h_), 0), N - 1);
  const double tau = (t - ts_[k]) / h_;
  return hermite_vec(vs_[k], as_[k], vs_[k + 1], as_[k + 1], tau, h_);
}

Vec Geodesic::to_frame(int k, const Vec& w) const {
  const Mat g = model_->metric(xs_[k]);
  const int n = int(frames_[k].cols());
  Vec lam(n);
  for (int i = 0; i < n; ++i) lam[i] = w.dot(g * frames_[k].col(i));
  return lam;
}

const std::vector<Mat>& Geodesic::curvature_forms() const {
  if (curv_.empty()) {
    const int n = int(frames_[0].cols());
    curv_.reserve(ts_.size());
    for (std::size_t k = 0; k < ts_.size(); ++k) {
      const RiemannTensor R = riemann_tensor(*model_, xs_[k]);
      const Mat g = model_->metric(xs_[k]);
      Mat Mk(n, n);
      for (int i = 0; i < n; ++i) {
        const Vec Ri = R.apply(frames_[k].col(i), vs_[k], vs_[k]);
        for (int j = 0; j < n; ++j) Mk(i, j) = frames_[k].col(j).dot(g * Ri);
      }
      curv_.push_back(Mk);
    }
  }
  return curv_;
}

double Geodesic::conservation_drift() const {
  double worst = 0.0;
  for (std::size_t k = 0; k < ts_.size(); ++k)
    worst = std::max(worst,
                     std::abs(model_->inner(xs_[k], vs_[k], vs_[k]) + 1.0));
  return worst;
}

// -------------------------------------------------------------------------
// Transported fields

Vec TransportedField::value(int k) const {
  return lt[k] * gamma->velocity(k) + gamma->from_frame(k, lam[k]);
}

Vec TransportedField::derivative(int k) const {
  return dlt[k] * gamma->velocity(k) + gamma->from_frame(k, dlam[k]);
}

double TransportedField::normal_sup() const {
  double s = 0.0;
  for (const Vec& l : lam) s = std::max(s, l.norm());
  return s;
}

double TransportedField::tangential_sup() const {
  double s = 0.0;
  for (double v : lt) s = std::max(s, std::abs(v));
  return s;
}

TransportedField parallel_transport(const Geodesic& g, const Vec& x0) {
  const int nodes = g.nodes();
  TransportedField f;
  f.gamma = &g;
  const Vec lam0 = g.to_frame(0, x0);
  const double lt0 = -g.model().inner(g.position(0), x0, g.velocity(0));
  f.lam.assign(nodes, lam0);
  f.dlam.assign(nodes, Vec::Zero(lam0.size()));
  f.lt.assign(nodes, lt0);
  f.dlt.assign(nodes, 0.0);
  return f;
}

TransportedField scaled_parallel_field(const Geodesic& g, const Vec& x0,
                                       const std::function<double(double)>& phi,
                                       const std::function<double(double)>& dphi) {
  const double tang = g.model().inner(g.position(0), x0, g.velocity(0));
  if (std::abs(tang) > 1e-8)
    throw PreconditionError("scaled_parallel_field: x0 must be normal to gamma'");
  const int nodes = g.nodes();
  TransportedField f;
  f.gamma = &g;
  const Vec lam0 = g.to_frame(0, x0);
  f.lam.resize(nodes);
  f.dlam.resize(nodes);
  f.lt.assign(nodes, 0.0);
  f.dlt.assign(nodes, 0.0);
  for (int k = 0; k < nodes; ++k) {
    const double t = g.parameter(k);
    f.lam[k] = phi(t) * lam0;
    f.dlam[k] = dphi(t) * lam0;
  }
  return f;
}

TransportedField integrate_jacobi(const Geodesic& g, const Vec& J0,
                                  const Vec& J0_prime) {
  const auto& cf = g.curvature_forms();
  const int nodes = g.nodes();
  const int n = int(g.frame(0).cols());
  const double H = 2.0 * g.step(); // Jacobi RK4 runs on even nodes

  TransportedField f;
  f.gamma = &g;
  f.lam.assign(nodes, Vec::Zero(n));
  f.dlam.assign(nodes, Vec::Zero(n));
  f.lt.assign(nodes, 0.0);
  f.dlt.assign(nodes, 0.0);

  // tangential part is affine: <R(J,gamma')gamma', gamma'> = 0
  const double lt0 = -g.model().inner(g.position(0), J0, g.velocity(0));
  const double dlt0 = -g.model().inner(g.position(0), J0_prime, g.velocity(0));
  for (int k = 0; k < nodes; ++k) {
    f.lt[k] = lt0 + dlt0 * g.parameter(k);
    f.dlt[k] = dlt0;
  }

  Vec lam = g.to_frame(0, J0);
  Vec mu = g.to_frame(0, J0_prime);
  f.lam[0] = lam;
  f.dlam[0] = mu;
  auto acc = [&](int node, const Vec& l) -> Vec { return -cf[node].transpose() * l; };

  for (int k = 0; k + 2 <= nodes - 1; k += 2) {
    // RK4 for (lam, mu) over [t_k, t_{k+2}] with midpoint at node k+1
    const Vec a1 = acc(k, lam);
    const Vec l2 = lam + (H / 2) * mu, m2 = mu + (H / 2) * a1;
    const Vec a2 = acc(k + 1, l2);
    const Vec l3 = lam + (H / 2) * m2, m3 = mu + (H / 2) * a2;
    const Vec a3 = acc(k + 1, l3);
    const Vec l4 = lam + H * m3, m4 = mu + H * a3;
    const Vec a4 = acc(k + 2, l4);
    const Vec lam_next = lam + (H / 6) * (mu + 2.0 * m2 + 2.0 * m3 + m4);
    const Vec mu_next = mu + (H / 6) * (a1 + 2.0 * a2 + 2.0 * a3 + a4);
    // midpoint by Hermite interpolation of (lam, mu)
    const Vec an = acc(k + 2, lam_next);
    f.lam[k + 1] = hermite_vec(lam, mu, lam_next, mu_next, 0.5, H);
    f.dlam[k + 1] = hermite_vec(mu, a1, mu_next, an, 0.5, H);
    f.lam[k + 2] = lam_next;
    f.dlam[k + 2] = mu_next;
    lam = lam_next;
    mu = mu_next;
  }
  return f;
}

// -------------------------------------------------------------------------
// Index forms

namespace {

std::vector<double> index_integrand(const Geodesic& g,
                                    const TransportedField& X) {
  if (X.tangential_sup() > 1e-8)
    throw PreconditionError("index form: field must be normal to gamma");
  const auto& cf = g.curvature_forms();
  std::vector<double> f(g.nodes());
  for (int k = 0; k < g.nodes(); ++k)
    f[k] = X.dlam[k].squaredNorm() - X.lam[k].dot(cf[k] * X.lam[k]);
  return f;
}

} // namespace

IndexFormResult index_form_geodesic(const Geodesic& g,
                                    const TransportedField& X) {
  const std::vector<double> f = index_integrand(g, X);
  const double fine = simpson(f, g.step());
  std::vector<double> coarse;
  for (std::size_t k = 0; k < f.size(); k += 2) coarse.push_back(f[k]);
  const double rough = simpson(coarse, 2.0 * g.step());
  return {-fine, std::abs(fine - rough) / 15.0};
}

IndexFormResult index_form_with_boundary(const Geodesic& g,
                                         const TransportedField& X,
                                         const Mat& boundary_form) {
  IndexFormResult r = index_form_geodesic(g, X);
  r.value += X.lam[0].dot(boundary_form * X.lam[0]);
  return r;
}

// -------------------------------------------------------------------------
// Index maximality

namespace {

IndexFormResult eval_index(const Geodesic& g, const TransportedField& X,
                           const std::optional<Mat>& B) {
  return B ? index_form_with_boundary(g, X, *B) : index_form_geodesic(g, X);
}

TransportedField perturb(const Geodesic& g, const TransportedField& J,
                         const Vec& dir, double eps, bool free_start) {
  const double s = g.length();
  TransportedField X = J;
  for (int k = 0; k < g.nodes(); ++k) {
    const double t = g.parameter(k);
    double b, db;
    if (free_start) {
      const double w = (s - t) / s;
      b = w * w;
      db = -2.0 * w / s;
    } else {
      b = 16.0 * t * t * (s - t) * (s - t) / (s * s * s * s);
      db = 16.0 * (2.0 * t * (s - t) * (s - t) - 2.0 * t * t * (s - t)) /
           (s * s * s * s);
    }
    X.lam[k] += eps * b * dir;
    X.dlam[k] += eps * db * dir;
  }
  return X;
}

} // namespace

CheckReport check_index_maximality(const Geodesic& g,
                                   const TransportedField& J,
                                   const MaximalityOptions& opts) {
  CheckReport report;
  report.check_id = opts.boundary_form ? "index-maximality-slice"
                                       : "index-maximality-point";
  report.seed = opts.seed;
  report.tolerance = opts.tolerance;
  report.fd_step = g.step();

  // conjugate/focal monitor: the Jacobi amplitude must stay away from zero.
  // A crossing between nodes shows up as a direction reversal, so both a
  // small amplitude and a sign flip of lam(k).lam(k+1) trigger the skip.
  for (int k = 0; k < g.nodes(); ++k) {
    const bool tiny = g.parameter(k) > 1e-3 && J.lam[k].norm() < 1e-8;
    const bool flipped = g.parameter(k) > 1e-3 && k + 1 < g.nodes() &&
                         J.lam[k].dot(J.lam[k + 1]) < 0.0;
    if (tiny || flipped) {
      report.status = CheckStatus::Skipped;
      report.notes = "conjugate point detected at t=" +
                     std::to_string(g.parameter(k)) + "; check skipped";
      return report;
    }
  }

  const double IJ = eval_index(g, J, opts.boundary_form).value;
  Rng rng(opts.seed);
  const int n = int(g.frame(0).cols());
  const double scale = std::max(1.0, J.normal_sup());
  for (int i = 0; i < opts.perturbations; ++i) {
    Vec dir(n);
    double nd = 0.0;
    do {
      for (int j = 0; j < n; ++j) dir[j] = rng.normal();
      nd = dir.norm();
    } while (nd < 1e-12);
    dir /= nd;
    const double eps = rng.uniform(0.02, 0.4) * scale;
    const bool free_start =
        opts.free_initial_endpoint && opts.boundary_form && (i % 2 == 1);
    const TransportedField X = perturb(g, J, dir, eps, free_start);
    const double IX = eval_index(g, X, opts.boundary_form).value;
    report.margins.push_back(IJ - IX);
  }
  report.finalize();
  return report;
}

double maximality_defect_slope(const Geodesic& g, const TransportedField& J,
                               const std::vector<double>& epsilons,
                               std::uint64_t seed,
                               const std::optional<Mat>& boundary_form) {
  Rng rng(seed);
  const int n = int(g.frame(0).cols());
  Vec dir(n);
  for (int j = 0; j < n; ++j) dir[j] = rng.normal();
  dir /= dir.norm();

  const double IJ = eval_index(g, J, boundary_form).value;
  std::vector<double> lx, ly;
  for (double eps : epsilons) {
    const TransportedField X = perturb(g, J, dir, eps, false);
    const double defect = IJ - eval_index(g, X, boundary_form).value;
    lx.push_back(std::log(eps));
    ly.push_back(std::log(std::max(defect, 1e-300)));
  }
  // least-squares slope
  const int m = int(lx.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (int i = 0; i < m; ++i) {
    sx += lx[i];
    sy += ly[i];
    sxx += lx[i] * lx[i];
    sxy += lx[i] * ly[i];
  }
  return (m * sxy - sx * sy) / (m * sxx - sx * sx);
}

} // namespace lorentz

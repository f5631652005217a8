#include "lorentz/spacetime.hpp"

#include <cmath>

namespace lorentz {

namespace {

constexpr double kGammaDerivScale = 1e-3; // step scale for dGamma in Riemann

Christoffels zero_christoffels(int dim) {
  Christoffels G(dim);
  for (auto& m : G) m = Mat::Zero(dim, dim);
  return G;
}

// Fourth-order central difference of the metric in coordinate direction e.
Mat metric_derivative(const Spacetime& M, const Vec& x, int e, double h) {
  Vec xp = x, xpp = x, xm = x, xmm = x;
  xp[e] += h;
  xpp[e] += 2.0 * h;
  xm[e] -= h;
  xmm[e] -= 2.0 * h;
  return (-M.metric(xpp) + 8.0 * M.metric(xp) - 8.0 * M.metric(xm) +
          M.metric(xmm)) /
         (12.0 * h);
}

Christoffels christoffel_fd(const Spacetime& M, const Vec& x) {
  const int dim = M.dimension();
  const double h = M.metric_fd_step(x);
  std::vector<Mat> dg(dim);
  for (int e = 0; e < dim; ++e) dg[e] = metric_derivative(M, x, e, h);
  const Mat ginv = M.metric(x).inverse();
  Christoffels G = zero_christoffels(dim);
  for (int a = 0; a < dim; ++a)
    for (int b = 0; b < dim; ++b)
      for (int c = b; c < dim; ++c) {
        double sum = 0.0;
        for (int d = 0; d < dim; ++d)
          sum += ginv(a, d) * (dg[b](d, c) + dg[c](d, b) - dg[d](b, c));
        G[a](b, c) = 0.5 * sum;
        G[a](c, b) = G[a](b, c);
      }
  return G;
}

} // namespace

// -------------------------------------------------------------------------
// Minkowski

Minkowski::Minkowski(int n)
    : Spacetime(n + 1, "minkowski(n=" + std::to_string(n) + ")",
                ChristoffelMode::ClosedForm, 1e-5) {
  if (n < 1) throw PreconditionError("Minkowski: requires n >= 1");
}

Mat Minkowski::metric(const Vec& x) const {
  Mat g = Mat::Identity(dim_, dim_);
  g(dim_ - 1, dim_ - 1) = -1.0;
  return g;
}

Vec Minkowski::time_orientation(const Vec& x) const {
  Vec t = Vec::Zero(dim_);
  t[dim_ - 1] = 1.0;
  return t;
}

Christoffels Minkowski::christoffel_closed_form(const Vec& x) const {
  return zero_christoffels(dim_);
}

// -------------------------------------------------------------------------
// Warping catalog

Warping Warping::constant(double a0) {
  Warping w;
  w.kind = Kind::Constant;
  w.value = a0;
  return w;
}

Warping Warping::exponential() {
  Warping w;
  w.kind = Kind::Exponential;
  return w;
}

Warping Warping::sin_perturbed(double eps) {
  Warping w;
  w.kind = Kind::SinPerturbed;
  w.eps = eps;
  return w;
}

Warping Warping::from_name(const std::string& name, double param) {
  if (name == "const") return constant(param);
  if (name == "exp") return exponential();
  if (name == "sinp") return sin_perturbed(param);
  throw PreconditionError("unknown warping function: " + name);
}

double Warping::a(double t) const {
  switch (kind) {
    case Kind::Constant: return value;
    case Kind::Exponential: return std::exp(t);
    case Kind::SinPerturbed: return 1.0 + eps * std::sin(t);
  }
  return 1.0;
}

double Warping::da(double t) const {
  switch (kind) {
    case Kind::Constant: return 0.0;
    case Kind::Exponential: return std::exp(t);
    case Kind::SinPerturbed: return eps * std::cos(t);
  }
  return 0.0;
}

double Warping::dda(double t) const {
  switch (kind) {
    case Kind::Constant: return 0.0;
    case Kind::Exponential: return std::exp(t);
    case Kind::SinPerturbed: return -eps * std::sin(t);
  }
  return 0.0;
}

std::string Warping::describe() const {
  switch (kind) {
    case Kind::Constant: return "const(" + std::to_string(value) + ")";
    case Kind::Exponential: return "exp";
    case Kind::SinPerturbed: return "sinp(" + std::to_string(eps) + ")";
  }
  return "?";
}

// -------------------------------------------------------------------------
// GRW

Grw::Grw(int n, Warping w, double t_lo, double t_hi, ChristoffelMode mode)
    : Spacetime(n + 1, "grw(n=" + std::to_string(n) + "," + w.describe() + ")",
                mode, 1e-5),
      warp_(w), t_lo_(t_lo), t_hi_(t_hi) {
  if (n < 1) throw PreconditionError("Grw: requires n >= 1");
  // a > 0 on the declared interval, probed on a grid
  for (int i = 0; i <= 64; ++i) {
    const double t = t_lo + (t_hi - t_lo) * i / 64.0;
    if (!(warp_.a(t) > 0.0))
      throw PreconditionError("Grw: warping must be positive on [t_lo, t_hi]");
  }
}

Mat Grw::metric(const Vec& x) const {
  const double a = warp_.a(x[0]);
  Mat g = Mat::Identity(dim_, dim_) * (a * a);
  g(0, 0) = -1.0;
  return g;
}

Vec Grw::time_orientation(const Vec& x) const {
  Vec t = Vec::Zero(dim_);
  t[0] = 1.0;
  return t;
}

bool Grw::chart_contains(const Vec& x) const {
  return x[0] >= t_lo_ && x[0] <= t_hi_ && x.tail(dim_ - 1).norm() < 100.0;
}

Christoffels Grw::christoffel_closed_form(const Vec& x) const {
  const double a = warp_.a(x[0]);
  const double ap = warp_.da(x[0]);
  Christoffels G = zero_christoffels(dim_);
  for (int i = 1; i < dim_; ++i) {
    G[0](i, i) = a * ap;
    G[i](0, i) = G[i](i, 0) = ap / a;
  }
  return G;
}

// -------------------------------------------------------------------------
// de Sitter

namespace {

// Stereographic parametrization of S^n in R^{n+1}: y -> (2y, 1-|y|^2)/(1+|y|^2).
Vec sphere_point(const Vec& y) {
  const int n = int(y.size());
  const double D = 1.0 + y.squaredNorm();
  Vec w(n + 1);
  w.head(n) = 2.0 * y / D;
  w[n] = (2.0 - D) / D; // (1 - |y|^2)/(1 + |y|^2)
  return w;
}

Mat sphere_differential(const Vec& y) {
  const int n = int(y.size());
  const double D = 1.0 + y.squaredNorm();
  Mat dw(n + 1, n);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i)
      dw(i, j) = 2.0 * ((i == j ? 1.0 : 0.0) / D - 2.0 * y[i] * y[j] / (D * D));
    dw(n, j) = -4.0 * y[j] / (D * D);
  }
  return dw;
}

Vec sphere_inverse(const Vec& w) {
  const int n = int(w.size()) - 1;
  return w.head(n) / (1.0 + w[n]);
}

} // namespace

DeSitter::DeSitter(int n, double c, ChristoffelMode mode)
    : Spacetime(n + 1, "de_sitter(n=" + std::to_string(n) +
                           ",c=" + std::to_string(c) + ")",
                mode, 1e-5),
      c_(c) {
  if (!(c > 0.0)) throw PreconditionError("DeSitter: requires c > 0");
  if (n < 1) throw PreconditionError("DeSitter: requires n >= 1");
}

Mat DeSitter::metric(const Vec& x) const {
  const int n = dim_ - 1;
  const double ch = std::cosh(std::sqrt(c_) * x[0]);
  const double rho = 2.0 / (1.0 + x.tail(n).squaredNorm());
  const double w2 = (ch * ch / c_) * rho * rho;
  Mat g = Mat::Identity(dim_, dim_) * w2;
  g(0, 0) = -1.0;
  return g;
}

Vec DeSitter::time_orientation(const Vec& x) const {
  Vec t = Vec::Zero(dim_);
  t[0] = 1.0;
  return t;
}

bool DeSitter::chart_contains(const Vec& x) const {
  return std::abs(x[0]) < 20.0 && x.tail(dim_ - 1).norm() < 6.0;
}

Christoffels DeSitter::christoffel_closed_form(const Vec& x) const {
  const int n = dim_ - 1;
  const double r = std::sqrt(c_);
  const double W = std::cosh(r * x[0]) / r;
  const double Wp = std::sinh(r * x[0]);
  const Vec y = x.tail(n);
  const double D = 1.0 + y.squaredNorm();
  const double rho = 2.0 / D;         // conformal factor e^lambda
  const Vec dl = -2.0 * y / D;        // d(log rho)

  Christoffels G = zero_christoffels(dim_);
  for (int i = 0; i < n; ++i) {
    G[0](i + 1, i + 1) = W * Wp * rho * rho;
    G[i + 1](0, i + 1) = G[i + 1](i + 1, 0) = Wp / W;
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        double v = 0.0;
        if (i == j) v += dl[k];
        if (i == k) v += dl[j];
        if (j == k) v -= dl[i];
        G[i + 1](j + 1, k + 1) = v;
      }
  }
  return G;
}

Vec DeSitter::embed(const Vec& x) const {
  const int n = dim_ - 1;
  const double r = std::sqrt(c_);
  Vec X(dim_ + 1);
  X[0] = std::sinh(r * x[0]) / r;
  X.tail(n + 1) = (std::cosh(r * x[0]) / r) * sphere_point(x.tail(n));
  return X;
}

Mat DeSitter::embed_differential(const Vec& x) const {
  const int n = dim_ - 1;
  const double r = std::sqrt(c_);
  const double ch = std::cosh(r * x[0]);
  const double sh = std::sinh(r * x[0]);
  Mat dX = Mat::Zero(dim_ + 1, dim_);
  dX(0, 0) = ch;
  dX.block(1, 0, n + 1, 1) = sh * sphere_point(x.tail(n));
  dX.block(1, 1, n + 1, n) = (ch / r) * sphere_differential(x.tail(n));
  return dX;
}

Vec DeSitter::chart_from_embedding(const Vec& X) const {
  const int n = dim_ - 1;
  const double r = std::sqrt(c_);
  Vec x(dim_);
  x[0] = std::asinh(r * X[0]) / r;
  const Vec w = (r / std::cosh(r * x[0])) * X.tail(n + 1);
  x.tail(n) = sphere_inverse(w);
  return x;
}

double DeSitter::embedding_inner(const Vec& X1, const Vec& X2) const {
  return -X1[0] * X2[0] + X1.tail(dim_).dot(X2.tail(dim_));
}

// -------------------------------------------------------------------------
// anti-de Sitter

AntiDeSitter::AntiDeSitter(int n, double c, ChristoffelMode mode)
    : Spacetime(n + 1, "anti_de_sitter(n=" + std::to_string(n) +
                           ",c=" + std::to_string(c) + ")",
                mode, 1e-5),
      c_(c), k_(std::sqrt(-c)) {
  if (!(c < 0.0)) throw PreconditionError("AntiDeSitter: requires c < 0");
  if (n < 1) throw PreconditionError("AntiDeSitter: requires n >= 1");
}

Mat AntiDeSitter::metric(const Vec& x) const {
  const int n = dim_ - 1;
  const Vec z = x.tail(n);
  const double phi = 1.0 + k_ * k_ * z.squaredNorm();
  Mat g = Mat::Identity(dim_, dim_);
  g(0, 0) = -phi;
  g.block(1, 1, n, n) -= (k_ * k_ / phi) * z * z.transpose();
  return g;
}

Vec AntiDeSitter::time_orientation(const Vec& x) const {
  Vec t = Vec::Zero(dim_);
  t[0] = 1.0;
  return t;
}

bool AntiDeSitter::chart_contains(const Vec& x) const {
  return x.tail(dim_ - 1).norm() < 6.0 && std::abs(x[0]) < 50.0;
}

Christoffels AntiDeSitter::christoffel_closed_form(const Vec& x) const {
  const int n = dim_ - 1;
  const Vec z = x.tail(n);
  const double k2 = k_ * k_;
  const double phi = 1.0 + k2 * z.squaredNorm();
  const Mat gsp = Mat::Identity(n, n) - (k2 / phi) * z * z.transpose();
  Christoffels G = zero_christoffels(dim_);
  for (int i = 0; i < n; ++i) {
    G[0](0, i + 1) = G[0](i + 1, 0) = k2 * z[i] / phi;
    G[i + 1](0, 0) = k2 * phi * z[i];
    for (int j = 0; j < n; ++j)
      for (int l = 0; l < n; ++l)
        G[i + 1](j + 1, l + 1) = -k2 * z[i] * gsp(j, l);
  }
  return G;
}

Vec AntiDeSitter::embed(const Vec& x) const {
  const int n = dim_ - 1;
  const Vec z = x.tail(n);
  const double W = std::sqrt(1.0 + k_ * k_ * z.squaredNorm()) / k_;
  Vec X(dim_ + 1);
  X[0] = W * std::sin(k_ * x[0]);
  X[1] = W * std::cos(k_ * x[0]);
  X.tail(n) = z;
  return X;
}

Mat AntiDeSitter::embed_differential(const Vec& x) const {
  const int n = dim_ - 1;
  const Vec z = x.tail(n);
  const double phi = 1.0 + k_ * k_ * z.squaredNorm();
  const double W = std::sqrt(phi) / k_;
  const double s = std::sin(k_ * x[0]);
  const double c = std::cos(k_ * x[0]);
  Mat dX = Mat::Zero(dim_ + 1, dim_);
  dX(0, 0) = W * k_ * c;
  dX(1, 0) = -W * k_ * s;
  for (int j = 0; j < n; ++j) {
    const double Wj = k_ * z[j] / std::sqrt(phi);
    dX(0, j + 1) = Wj * s;
    dX(1, j + 1) = Wj * c;
    dX(2 + j, j + 1) = 1.0;
  }
  return dX;
}

Vec AntiDeSitter::chart_from_embedding(const Vec& X) const {
  const int n = dim_ - 1;
  Vec x(dim_);
  x[0] = std::atan2(X[0], X[1]) / k_;
  x.tail(n) = X.tail(n);
  return x;
}

double AntiDeSitter::embedding_inner(const Vec& X1, const Vec& X2) const {
  return -X1[0] * X2[0] - X1[1] * X2[1] + X1.tail(dim_ - 1).dot(X2.tail(dim_ - 1));
}

// -------------------------------------------------------------------------
// Factories

std::unique_ptr<Minkowski> make_minkowski(int n) {
  return std::make_unique<Minkowski>(n);
}
std::unique_ptr<DeSitter> make_de_sitter(int n, double c) {
  return std::make_unique<DeSitter>(n, c);
}
std::unique_ptr<AntiDeSitter> make_anti_de_sitter(int n, double c) {
  return std::make_unique<AntiDeSitter>(n, c);
}
std::unique_ptr<Grw> make_grw(int n, Warping w, double t_lo, double t_hi) {
  return std::make_unique<Grw>(n, w, t_lo, t_hi);
}

// -------------------------------------------------------------------------
// Curvature kernels

Christoffels christoffel(const Spacetime& M, const Vec& x) {
  if (!M.chart_contains(x))
    throw ChartDomainError(M.label() + ": event outside chart domain");
  if (M.christoffel_mode() == ChristoffelMode::ClosedForm &&
      M.has_closed_form_christoffels())
    return M.christoffel_closed_form(x);
  return christoffel_fd(M, x);
}

Vec RiemannTensor::apply(const Vec& x, const Vec& y, const Vec& z) const {
  Vec out = Vec::Zero(dim);
  for (int a = 0; a < dim; ++a) {
    double s = 0.0;
    for (int b = 0; b < dim; ++b)
      for (int c = 0; c < dim; ++c)
        for (int d = 0; d < dim; ++d)
          s += (*this)(a, b, c, d) * z[b] * x[c] * y[d];
    out[a] = s;
  }
  return out;
}

RiemannTensor riemann_tensor(const Spacetime& M, const Vec& x) {
  const int dim = M.dimension();
  const double h = kGammaDerivScale * (1.0 + x.norm());
  const Christoffels G = christoffel(M, x);
  std::vector<Christoffels> dG(dim);
  for (int e = 0; e < dim; ++e) {
    Vec xp = x, xpp = x, xm = x, xmm = x;
    xp[e] += h;
    xpp[e] += 2.0 * h;
    xm[e] -= h;
    xmm[e] -= 2.0 * h;
    const Christoffels Gp = christoffel(M, xp), Gpp = christoffel(M, xpp);
    const Christoffels Gm = christoffel(M, xm), Gmm = christoffel(M, xmm);
    dG[e].resize(dim);
    for (int a = 0; a < dim; ++a)
      dG[e][a] = (-Gpp[a] + 8.0 * Gp[a] - 8.0 * Gm[a] + Gmm[a]) / (12.0 * h);
  }

  RiemannTensor R;
  R.dim = dim;
  R.comp.assign(std::size_t(dim) * dim * dim * dim, 0.0);
  for (int a = 0; a < dim; ++a)
    for (int b = 0; b < dim; ++b)
      for (int c = 0; c < dim; ++c)
        for (int d = 0; d < dim; ++d) {
          double v = dG[c][a](d, b) - dG[d][a](c, b);
          for (int e = 0; e < dim; ++e)
            v += G[a](c, e) * G[e](d, b) - G[a](d, e) * G[e](c, b);
          R.comp[((std::size_t(a) * dim + b) * dim + c) * dim + d] = v;
        }
  return R;
}

Vec riemann(const Spacetime& M, const Vec& x, const Vec& xv, const Vec& yv,
            const Vec& zv) {
  return riemann_tensor(M, x).apply(xv, yv, zv);
}

double sectional_timelike(const Spacetime& M, const Vec& x, const Vec& v,
                          const Vec& xdir) {
  const Mat g = M.metric(x);
  const double vv = v.dot(g * v);
  const double xx = xdir.dot(g * xdir);
  const double xv = xdir.dot(g * v);
  if (std::abs(vv + 1.0) > 1e-10 || std::abs(xx - 1.0) > 1e-10 ||
      std::abs(xv) > 1e-10)
    throw PreconditionError(
        "sectional_timelike: requires unit timelike v, unit spacelike x, "
        "x orthogonal to v");
  const Vec Rxvv = riemann(M, x, xdir, v, v);
  return -xdir.dot(g * Rxvv);
}

double ricci_timelike(const Spacetime& M, const Vec& x, const Vec& Z) {
  const Mat g = M.metric(x);
  if (std::abs(Z.dot(g * Z) + 1.0) > 1e-10)
    throw PreconditionError("ricci_timelike: requires unit timelike Z");
  const RiemannTensor R = riemann_tensor(M, x);
  const int dim = R.dim;

  // (a) trace of the Riemann tensor
  double trace = 0.0;
  for (int b = 0; b < dim; ++b)
    for (int d = 0; d < dim; ++d) {
      double s = 0.0;
      for (int a = 0; a < dim; ++a) s += R(a, b, a, d);
      trace += s * Z[b] * Z[d];
    }

  // (b) frame sum -sum_i K(E_i ^ Z) = sum_i <R(E_i, Z)Z, E_i>
  const Mat frame = orthonormal_frame(M, x, Z);
  double framesum = 0.0;
  for (int i = 1; i < dim; ++i) {
    const Vec Ei = frame.col(i);
    framesum += Ei.dot(g * R.apply(Ei, Z, Z));
  }

  if (std::abs(trace - framesum) > 1e-8)
    throw std::runtime_error("ricci_timelike: trace/frame-sum mismatch " +
                             std::to_string(std::abs(trace - framesum)));
  return trace;
}

CausalClass classify_causal(const Spacetime& M, const Vec& x, const Vec& v) {
  const double q = M.inner(x, v, v);
  const double band = 1e-12 * v.squaredNorm();
  CausalClass out{CausalKind::Null, CausalOrientation::None};
  if (std::abs(q) <= band)
    out.kind = CausalKind::Null;
  else if (q < 0.0)
    out.kind = CausalKind::Timelike;
  else
    out.kind = CausalKind::Spacelike;
  if (out.kind != CausalKind::Spacelike) {
    const double tproj = M.inner(x, v, M.time_orientation(x));
    if (tproj < 0.0)
      out.orientation = CausalOrientation::Future;
    else if (tproj > 0.0)
      out.orientation = CausalOrientation::Past;
  }
  return out;
}

bool chronological_future_contains(const Spacetime& M, const Vec& p,
                                   const Vec& q) {
  const auto* mink = dynamic_cast<const Minkowski*>(&M);
  if (!mink)
    throw UnsupportedModelError(
        "chronological_future_contains: exact predicate only in Minkowski");
  const Vec d = q - p;
  const double dd = M.inner(p, d, d);
  const double dt = M.inner(p, d, M.time_orientation(p));
  return dd < 0.0 && dt < 0.0;
}

Mat orthonormal_frame(const Spacetime& M, const Vec& x, const Vec& e0) {
  const int dim = M.dimension();
  const Mat g = M.metric(x);
  const double e00 = e0.dot(g * e0);
  if (!(e00 < 0.0))
    throw PreconditionError("orthonormal_frame: e0 must be timelike");
  Mat frame(dim, dim);
  frame.col(0) = e0 / std::sqrt(-e00);

  int filled = 1;
  for (int b = 0; b < dim && filled < dim; ++b) {
    Vec w = Vec::Zero(dim);
    w[b] = 1.0;
    // project out the timelike leg (sign: <e0,e0> = -1)
    w += w.dot(g * frame.col(0)) * frame.col(0);
    for (int j = 1; j < filled; ++j)
      w -= w.dot(g * frame.col(j)) * frame.col(j);
    const double ww = w.dot(g * w);
    if (ww > 1e-10) {
      frame.col(filled++) = w / std::sqrt(ww);
    }
  }
  if (filled < dim)
    throw std::runtime_error("orthonormal_frame: failed to complete frame");
  return frame;
}

bool signature_is_lorentzian(const Spacetime& M, const Vec& x) {
  Eigen::SelfAdjointEigenSolver<Mat> es(M.metric(x));
  const Vec ev = es.eigenvalues();
  int neg = 0, pos = 0;
  for (int i = 0; i < ev.size(); ++i) {
    if (ev[i] < 0.0) ++neg;
    if (ev[i] > 0.0) ++pos;
  }
  return neg == 1 && pos == M.dimension() - 1;
}

} // namespace lorentz

#pragma once

#include <Eigen/Dense>

#include <memory>
#include <string>
#include <vector>

#include "lorentz/error.hpp"

namespace lorentz {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

// Christoffel symbols Gamma^a_{bc}: G[a](b, c), symmetric in (b, c).
using Christoffels = std::vector<Mat>;

enum class ChristoffelMode { ClosedForm, FiniteDifference };

enum class CausalKind { Timelike, Null, Spacelike };
enum class CausalOrientation { Future, Past, None };

struct CausalClass {
  CausalKind kind;
  CausalOrientation orientation;
};

// A spacetime presented in a single chart: Lorentzian metric evaluator,
// Christoffel symbols (closed form or finite differences of the metric),
// and a future-directed timelike orientation field.
class Spacetime {
public:
  virtual ~Spacetime() = default;

  int dimension() const { return dim_; }        // n+1
  int surface_dim() const { return dim_ - 1; }  // n
  const std::string& label() const { return label_; }

  virtual Mat metric(const Vec& x) const = 0;
  virtual Vec time_orientation(const Vec& x) const = 0;
  virtual bool chart_contains(const Vec& x) const = 0;

  // Index of the chart coordinate used by slice constructions (the cosmic
  // time of GRW-type charts, the last coordinate in the Minkowski chart).
  virtual int time_index() const = 0;

  virtual bool has_closed_form_christoffels() const { return false; }
  virtual Christoffels christoffel_closed_form(const Vec& x) const {
    throw UnsupportedModelError(label_ + ": no closed-form Christoffels");
  }

  ChristoffelMode christoffel_mode() const { return mode_; }
  double metric_fd_step(const Vec& x) const {
    return metric_fd_scale_ * (1.0 + x.norm());
  }

  double inner(const Vec& x, const Vec& u, const Vec& w) const {
    return u.dot(metric(x) * w);
  }

protected:
  Spacetime(int dim, std::string label, ChristoffelMode mode,
            double metric_fd_scale)
      : dim_(dim), label_(std::move(label)), mode_(mode),
        metric_fd_scale_(metric_fd_scale) {}

  int dim_;
  std::string label_;
  ChristoffelMode mode_;
  double metric_fd_scale_;
};

// -------------------------------------------------------------------------
// Models

class Minkowski : public Spacetime {
public:
  // Chart (x_1, ..., x_n, x_{n+1}) with metric dx_1^2+...+dx_n^2 - dx_{n+1}^2
  // and time orientation e_{n+1}.
  explicit Minkowski(int n);

  Mat metric(const Vec& x) const override;
  Vec time_orientation(const Vec& x) const override;
  bool chart_contains(const Vec& x) const override { return true; }
  int time_index() const override { return dim_ - 1; }
  bool has_closed_form_christoffels() const override { return true; }
  Christoffels christoffel_closed_form(const Vec& x) const override;
};

// Warping functions a(t) for GRW models, selected from a named catalog.
struct Warping {
  enum class Kind { Constant, Exponential, SinPerturbed };
  Kind kind = Kind::Constant;
  double value = 1.0; // Constant: a0
  double eps = 0.1;   // SinPerturbed: a(t) = 1 + eps*sin(t)

  static Warping constant(double a0);
  static Warping exponential();
  static Warping sin_perturbed(double eps);
  static Warping from_name(const std::string& name, double param);

  double a(double t) const;
  double da(double t) const;
  double dda(double t) const;
  std::string describe() const;
};

// Generalized Robertson-Walker chart (t, x_1, ..., x_n) with flat fiber:
// metric -dt^2 + a(t)^2 (dx_1^2 + ... + dx_n^2).
class Grw : public Spacetime {
public:
  Grw(int n, Warping w, double t_lo, double t_hi,
      ChristoffelMode mode = ChristoffelMode::ClosedForm);

  Mat metric(const Vec& x) const override;
  Vec time_orientation(const Vec& x) const override;
  bool chart_contains(const Vec& x) const override;
  int time_index() const override { return 0; }
  bool has_closed_form_christoffels() const override { return true; }
  Christoffels christoffel_closed_form(const Vec& x) const override;

  const Warping& warping() const { return warp_; }
  double t_lo() const { return t_lo_; }
  double t_hi() const { return t_hi_; }

private:
  Warping warp_;
  double t_lo_, t_hi_;
};

// De Sitter space of curvature c > 0 in the global chart (t, y_1, ..., y_n):
// metric -dt^2 + (cosh^2(sqrt(c) t)/c) * (round metric on S^n in
// stereographic coordinates y). Carries the flat embedding
// { <X,X> = 1/c } in R^{n+2} with signature (-,+,...,+), used as the oracle
// for curvature, geodesics and distance.
class DeSitter : public Spacetime {
public:
  DeSitter(int n, double c, ChristoffelMode mode = ChristoffelMode::ClosedForm);

  Mat metric(const Vec& x) const override;
  Vec time_orientation(const Vec& x) const override;
  bool chart_contains(const Vec& x) const override;
  int time_index() const override { return 0; }
  bool has_closed_form_christoffels() const override { return true; }
  Christoffels christoffel_closed_form(const Vec& x) const override;

  double curvature() const { return c_; }

  // Embedding (time component first, then the n+1 sphere components).
  Vec embed(const Vec& x) const;
  Mat embed_differential(const Vec& x) const; // (n+2) x (n+1)
  Vec chart_from_embedding(const Vec& X) const;
  double embedding_inner(const Vec& X1, const Vec& X2) const;

private:
  double c_;
};

// Anti-de Sitter space of curvature c < 0 in the static-type chart
// (tau, z_1, ..., z_n):
//   g_tautau = -(1 + k^2 |z|^2),  g_ij = delta_ij - k^2 z_i z_j/(1+k^2|z|^2),
// k = sqrt(-c). Embedded as { <X,X> = 1/c } in R^{n+2} with signature
// (-,-,+,...,+); timelike geodesics are closed with period 2*pi/k.
class AntiDeSitter : public Spacetime {
public:
  AntiDeSitter(int n, double c,
               ChristoffelMode mode = ChristoffelMode::ClosedForm);

  Mat metric(const Vec& x) const override;
  Vec time_orientation(const Vec& x) const override;
  bool chart_contains(const Vec& x) const override;
  int time_index() const override { return 0; }
  bool has_closed_form_christoffels() const override { return true; }
  Christoffels christoffel_closed_form(const Vec& x) const override;

  double curvature() const { return c_; }

  Vec embed(const Vec& x) const;
  Mat embed_differential(const Vec& x) const;
  Vec chart_from_embedding(const Vec& X) const;
  double embedding_inner(const Vec& X1, const Vec& X2) const;

private:
  double c_;
  double k_; // sqrt(-c)
};

std::unique_ptr<Minkowski> make_minkowski(int n);
std::unique_ptr<DeSitter> make_de_sitter(int n, double c);
std::unique_ptr<AntiDeSitter> make_anti_de_sitter(int n, double c);
std::unique_ptr<Grw> make_grw(int n, Warping w, double t_lo, double t_hi);

// -------------------------------------------------------------------------
// Curvature kernels

Christoffels christoffel(const Spacetime& M, const Vec& x);

// Riemann tensor R^a_{bcd} with the convention pinned by the space-form
// calibration -<R(x,v)v, x> = c for unit timelike v and unit spacelike
// x orthogonal to it.
struct RiemannTensor {
  int dim = 0;
  std::vector<double> comp; // a*dim^3 + b*dim^2 + c*dim + d

  double operator()(int a, int b, int c, int d) const {
    return comp[((a * dim + b) * dim + c) * dim + d];
  }
  // R(x, y)z, contracting x with the c slot and y with the d slot.
  Vec apply(const Vec& x, const Vec& y, const Vec& z) const;
};

RiemannTensor riemann_tensor(const Spacetime& M, const Vec& x);

Vec riemann(const Spacetime& M, const Vec& x, const Vec& xv, const Vec& yv,
            const Vec& zv);

// Sectional curvature of the timelike plane spanned by unit timelike v and
// unit spacelike xdir orthogonal to v: K = -<R(x,v)v, x>.
double sectional_timelike(const Spacetime& M, const Vec& x, const Vec& v,
                          const Vec& xdir);

// Ricci curvature Ric(Z, Z) for unit timelike Z, computed as the trace of the
// Riemann tensor and cross-checked against the frame sum
// -sum_i K(E_i ^ Z); the two routes must agree to 1e-8.
double ricci_timelike(const Spacetime& M, const Vec& x, const Vec& Z);

CausalClass classify_causal(const Spacetime& M, const Vec& x, const Vec& v);

// Exact chronological-future predicate; Minkowski only.
bool chronological_future_contains(const Spacetime& M, const Vec& p,
                                   const Vec& q);

// Orthonormal frame [e0 | E_1 ... E_n] at x with e0 the given unit timelike
// vector and E_i unit spacelike, built by metric Gram-Schmidt over the
// coordinate basis.
Mat orthonormal_frame(const Spacetime& M, const Vec& x, const Vec& e0);

// True if the metric at x has Lorentzian signature (-,+,...,+).
bool signature_is_lorentzian(const Spacetime& M, const Vec& x);

} // namespace lorentz

#include <doctest.h>

#include <cmath>

#include "lorentz/sampling.hpp"
#include "lorentz/spacetime.hpp"

using namespace lorentz;

namespace {

Box model_box(const Spacetime& M) {
  const int dim = M.dimension();
  Box b{Vec::Constant(dim, -1.0), Vec::Constant(dim, 1.0)};
  if (dynamic_cast<const DeSitter*>(&M) || dynamic_cast<const AntiDeSitter*>(&M)) {
    b.lo.tail(dim - 1).setConstant(-0.6);
    b.hi.tail(dim - 1).setConstant(0.6);
  }
  return b;
}

// Closed-form timelike sectional curvature of a flat-fiber GRW model for the
// plane spanned by a boosted observer and an orthogonal spatial direction:
//   K = a''/a + sinh^2(beta) * (a''/a - (a'/a)^2).
double grw_sectional_oracle(const Warping& w, double t, double beta) {
  const double a = w.a(t), ap = w.da(t), app = w.dda(t);
  const double radial = app / a;
  const double spatial = ap * ap / (a * a);
  return radial + std::sinh(beta) * std::sinh(beta) * (radial - spatial);
}

} // namespace

TEST_CASE("Minkowski: metric, Christoffels, causal classes") {
  auto M = make_minkowski(3);
  Vec x = Vec::Zero(4);
  Mat g = M->metric(x);
  CHECK(g(0, 0) == 1.0);
  CHECK(g(3, 3) == -1.0);
  CHECK(g(0, 1) == 0.0);

  const auto G = christoffel(*M, x);
  for (const auto& m : G) CHECK(m.norm() == 0.0);

  Vec e4 = Vec::Zero(4);
  e4[3] = 1.0;
  auto c1 = classify_causal(*M, x, e4);
  CHECK(c1.kind == CausalKind::Timelike);
  CHECK(c1.orientation == CausalOrientation::Future);

  Vec e1 = Vec::Zero(4);
  e1[0] = 1.0;
  CHECK(classify_causal(*M, x, e1).kind == CausalKind::Spacelike);

  Vec nullv = e1 + e4;
  auto c3 = classify_causal(*M, x, nullv);
  CHECK(c3.kind == CausalKind::Null);
  CHECK(c3.orientation == CausalOrientation::Future);
}

TEST_CASE("Minkowski: chronological future predicate") {
  auto M = make_minkowski(3);
  Vec p = Vec::Zero(4);
  Vec q1 = Vec::Zero(4);
  q1[3] = 1.0;
  CHECK(chronological_future_contains(*M, p, q1));
  Vec q2 = Vec::Zero(4);
  q2[0] = 2.0;
  q2[3] = 1.0;
  CHECK_FALSE(chronological_future_contains(*M, p, q2));
  Vec q3 = Vec::Zero(4);
  q3[3] = -1.0;
  CHECK_FALSE(chronological_future_contains(*M, p, q3));

  auto dS = make_de_sitter(2, 1.0);
  CHECK_THROWS_AS(chronological_future_contains(*dS, Vec::Zero(3), Vec::Zero(3)),
                  UnsupportedModelError);
}

TEST_CASE("signature check at 1e3 random chart events per model") {
  auto mink = make_minkowski(3);
  auto ds = make_de_sitter(2, 1.0);
  auto ads = make_anti_de_sitter(2, -1.0);
  auto grw = make_grw(2, Warping::sin_perturbed(0.1), -3.0, 3.0);
  for (const Spacetime* M :
       {(const Spacetime*)mink.get(), (const Spacetime*)ds.get(),
        (const Spacetime*)ads.get(), (const Spacetime*)grw.get()}) {
    Rng rng(3);
    const Box box = model_box(*M);
    for (int i = 0; i < 1000; ++i)
      CHECK(signature_is_lorentzian(*M, box.sample(rng)));
  }
}

TEST_CASE("de Sitter: chart metric is the pullback of the flat embedding") {
  auto M = make_de_sitter(3, 2.0);
  Rng rng(5);
  const Box box = model_box(*M);
  Mat eta = Mat::Identity(5, 5);
  eta(0, 0) = -1.0;
  for (int i = 0; i < 50; ++i) {
    const Vec x = box.sample(rng);
    const Mat dX = M->embed_differential(x);
    const Mat pullback = dX.transpose() * eta * dX;
    CHECK((pullback - M->metric(x)).norm() < 1e-11);
    // embedding constraint and chart round trip
    const Vec X = M->embed(x);
    CHECK(std::abs(M->embedding_inner(X, X) - 0.5) < 1e-12);
    CHECK((M->chart_from_embedding(X) - x).norm() < 1e-10);
  }
}

TEST_CASE("anti-de Sitter: pullback consistency and round trip") {
  auto M = make_anti_de_sitter(2, -1.0);
  Rng rng(5);
  const Box box = model_box(*M);
  Mat eta = Mat::Identity(4, 4);
  eta(0, 0) = eta(1, 1) = -1.0;
  for (int i = 0; i < 50; ++i) {
    const Vec x = box.sample(rng);
    const Mat dX = M->embed_differential(x);
    CHECK((dX.transpose() * eta * dX - M->metric(x)).norm() < 1e-11);
    const Vec X = M->embed(x);
    CHECK(std::abs(M->embedding_inner(X, X) + 1.0) < 1e-12);
    CHECK((M->chart_from_embedding(X) - x).norm() < 1e-10);
  }
}

TEST_CASE("space forms: timelike sectional curvature is constant = c") {
  struct Case {
    std::unique_ptr<Spacetime> M;
    double c;
  };
  std::vector<Case> cases;
  cases.push_back({make_de_sitter(2, 1.0), 1.0});
  cases.push_back({make_de_sitter(2, 2.0), 2.0});
  cases.push_back({make_de_sitter(3, 1.0), 1.0});
  cases.push_back({make_anti_de_sitter(2, -1.0), -1.0});
  for (auto& cs : cases) {
    const Box box = model_box(*cs.M);
    const SampledRange r = sample_sectional_range(*cs.M, box, 1000, 1.5, 17);
    CHECK(std::abs(r.min - cs.c) < 1e-6);
    CHECK(std::abs(r.max - cs.c) < 1e-6);
  }
}

TEST_CASE("Riemann: Minkowski vanishes; antisymmetry; first Bianchi") {
  auto mink = make_minkowski(3);
  auto ds = make_de_sitter(2, 1.0);
  auto ads = make_anti_de_sitter(2, -1.0);
  auto grw = make_grw(2, Warping::sin_perturbed(0.1), -3.0, 3.0);

  {
    Rng rng(2);
    Vec x = model_box(*mink).sample(rng);
    const RiemannTensor R = riemann_tensor(*mink, x);
    double mx = 0.0;
    for (double v : R.comp) mx = std::max(mx, std::abs(v));
    CHECK(mx < 1e-12);
  }

  for (const Spacetime* M :
       {(const Spacetime*)mink.get(), (const Spacetime*)ds.get(),
        (const Spacetime*)ads.get(), (const Spacetime*)grw.get()}) {
    Rng rng(23);
    const Box box = model_box(*M);
    for (int i = 0; i < 10; ++i) {
      const Vec x = box.sample(rng);
      const int dim = M->dimension();
      Vec a(dim), b(dim), c(dim);
      for (int j = 0; j < dim; ++j) {
        a[j] = rng.uniform(-1.0, 1.0);
        b[j] = rng.uniform(-1.0, 1.0);
        c[j] = rng.uniform(-1.0, 1.0);
      }
      const RiemannTensor R = riemann_tensor(*M, x);
      CHECK((R.apply(a, b, c) + R.apply(b, a, c)).norm() <= 1e-10);
      const Vec bianchi =
          R.apply(a, b, c) + R.apply(b, c, a) + R.apply(c, a, b);
      CHECK(bianchi.norm() <= 1e-8);
    }
  }
}

TEST_CASE("de Sitter calibration: -<R(x,v)v,x> = c for random timelike pairs") {
  auto M = make_de_sitter(2, 1.0);
  Rng rng(29);
  const Box box = model_box(*M);
  for (int i = 0; i < 40; ++i) {
    const Vec x = box.sample(rng);
    const Vec v = random_unit_timelike(*M, x, rng, 1.0);
    const Vec xd = random_unit_spacelike_orthogonal(*M, x, v, rng);
    const Vec Rxvv = riemann(*M, x, xd, v, v);
    const double val = -xd.dot(M->metric(x) * Rxvv);
    CHECK(std::abs(val - 1.0) < 1e-6);
  }
}

TEST_CASE("ricci_timelike: de Sitter value and internal cross-check") {
  auto M = make_de_sitter(2, 1.0); // n = 2: Ric(Z,Z) = -n c = -2
  Rng rng(31);
  const Box box = model_box(*M);
  for (int i = 0; i < 20; ++i) {
    const Vec x = box.sample(rng);
    const Vec Z = random_unit_timelike(*M, x, rng, 1.2);
    CHECK(std::abs(ricci_timelike(*M, x, Z) + 2.0) < 1e-6);
  }
}

TEST_CASE("ricci frame independence: random frames agree") {
  auto M = make_grw(2, Warping::sin_perturbed(0.1), -3.0, 3.0);
  Rng rng(37);
  const Box box = model_box(*M);
  for (int i = 0; i < 10; ++i) {
    const Vec x = box.sample(rng);
    const Vec Z = random_unit_timelike(*M, x, rng, 1.0);
    const RiemannTensor R = riemann_tensor(*M, x);
    const Mat g = M->metric(x);
    double sums[2];
    for (int k = 0; k < 2; ++k) {
      const Mat frame = random_orthonormal_frame(*M, x, Z, rng);
      double s = 0.0;
      for (int j = 1; j < M->dimension(); ++j) {
        const Vec Ej = frame.col(j);
        s += Ej.dot(g * R.apply(Ej, Z, Z));
      }
      sums[k] = s;
    }
    CHECK(std::abs(sums[0] - sums[1]) <= 1e-8);
  }
}

TEST_CASE("GRW with a == 1 matches Minkowski: curvature vanishes") {
  auto M = make_grw(3, Warping::constant(1.0), -5.0, 5.0);
  Rng rng(41);
  const Box box = model_box(*M);
  for (int i = 0; i < 10; ++i) {
    const RiemannTensor R = riemann_tensor(*M, box.sample(rng));
    double mx = 0.0;
    for (double v : R.comp) mx = std::max(mx, std::abs(v));
    CHECK(mx <= 1e-8);
  }
}

TEST_CASE("GRW exp warping: empirically constant timelike curvature") {
  auto M = make_grw(2, Warping::exponential(), -2.0, 2.0);
  const Box box = model_box(*M);
  const SampledRange r = sample_sectional_range(*M, box, 1000, 1.5, 43);
  CHECK(std::abs(r.max - r.min) < 1e-6);
  CHECK(std::abs(r.min - 1.0) < 1e-6); // e^t slice of the c=1 space form
}

TEST_CASE("GRW sin-perturbed: sampled K range matches the warped oracle") {
  const Warping w = Warping::sin_perturbed(0.1);
  auto M = make_grw(2, w, -4.0, 4.0);
  Rng rng(47);
  for (int i = 0; i < 200; ++i) {
    const double t = rng.uniform(-3.0, 3.0);
    const double beta = rng.uniform(0.0, 1.5);
    Vec x(3);
    x[0] = t;
    x[1] = rng.uniform(-1.0, 1.0);
    x[2] = rng.uniform(-1.0, 1.0);
    // plane spanned by boost in the x1 direction and the x2 axis
    Vec v = Vec::Zero(3), xd = Vec::Zero(3);
    const double a = w.a(t);
    v[0] = std::cosh(beta);
    v[1] = std::sinh(beta) / a;
    xd[2] = 1.0 / a;
    const double K = sectional_timelike(*M, x, v, xd);
    CHECK(std::abs(K - grw_sectional_oracle(w, t, beta)) < 1e-6);
  }
  // the empirical range is an output; it must cover the unboosted values
  const Box box = model_box(*M);
  const SampledRange r = sample_sectional_range(*M, box, 500, 1.5, 49);
  CHECK(r.min < 0.0);
  CHECK(r.max > 0.0);
}

TEST_CASE("christoffel: finite-difference path agrees with closed form") {
  const Warping w = Warping::exponential();
  Grw closed(2, w, -2.0, 2.0, ChristoffelMode::ClosedForm);
  Grw fd(2, w, -2.0, 2.0, ChristoffelMode::FiniteDifference);
  Rng rng(53);
  for (int i = 0; i < 20; ++i) {
    Vec x(3);
    x[0] = rng.uniform(-1.5, 1.5);
    x[1] = rng.uniform(-1.0, 1.0);
    x[2] = rng.uniform(-1.0, 1.0);
    const auto Gc = christoffel(closed, x);
    const auto Gf = christoffel(fd, x);
    double diff = 0.0, asym = 0.0;
    for (int a = 0; a < 3; ++a) {
      diff = std::max(diff, (Gc[a] - Gf[a]).cwiseAbs().maxCoeff());
      asym = std::max(asym, (Gf[a] - Gf[a].transpose()).cwiseAbs().maxCoeff());
    }
    CHECK(diff <= 1e-7);
    CHECK(asym == 0.0);
  }
}

TEST_CASE("sectional_timelike rejects bad input") {
  auto M = make_minkowski(2);
  Vec x = Vec::Zero(3);
  Vec v = Vec::Zero(3);
  v[2] = 1.0;
  Vec sp = Vec::Zero(3);
  sp[0] = 1.0;
  CHECK_NOTHROW(sectional_timelike(*M, x, v, sp));
  Vec bad = sp * 1.5;
  CHECK_THROWS_AS(sectional_timelike(*M, x, v, bad), PreconditionError);
  CHECK_THROWS_AS(sectional_timelike(*M, x, sp, v), PreconditionError);
}

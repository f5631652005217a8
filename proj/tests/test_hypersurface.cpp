#include <doctest.h>

#include <cmath>

#include "lorentz/comparison.hpp"
#include "lorentz/hypersurface.hpp"
#include "lorentz/hypersurface_checks.hpp"

using namespace lorentz;

namespace {

SurfaceSampleSpec small_spec(std::uint64_t seed, double tol) {
  SurfaceSampleSpec s;
  s.points = 40;
  s.directions = 3;
  s.seed = seed;
  s.tolerance = tol;
  return s;
}

} // namespace

TEST_CASE("induced geometry: slices and hyperboloids") {
  auto M = make_minkowski(2);

  const Immersion slice = make_slice(*M, 0.0, 1.5);
  Rng rng(3);
  for (int i = 0; i < 10; ++i) {
    const InducedGeometry geo = induced_geometry(slice, slice.chart.sample(rng));
    CHECK(geo.shape.norm() <= 1e-8);
    CHECK(std::abs(geo.H) <= 1e-8);
    CHECK(std::abs(M->inner(geo.position, geo.nu, geo.nu) + 1.0) <= 1e-8);
  }

  const Immersion hyp = make_hyperboloid(*M, Vec::Zero(3), 2.0, 2.0);
  for (int i = 0; i < 20; ++i) {
    const Vec x = hyp.chart.sample(rng);
    const InducedGeometry geo = induced_geometry(hyp, x);
    CHECK(std::abs(geo.H - 0.5) <= 1e-6);
    // normal consistency
    CHECK(std::abs(M->inner(geo.position, geo.nu, geo.nu) + 1.0) <= 1e-8);
    for (int j = 0; j < 2; ++j)
      CHECK(std::abs(M->inner(geo.position, geo.nu, geo.dpsi.col(j))) <= 1e-8);
    CHECK(M->inner(geo.position, geo.nu, M->time_orientation(geo.position)) < 0.0);
    // shape self-adjointness
    const Mat A_low = geo.g * geo.shape;
    CHECK((A_low - A_low.transpose()).norm() <= 1e-6);
  }
}

TEST_CASE("level-set principle anchors the H sign convention") {
  // Minkowski hyperboloid of radius 2: H = f_0(2) = 0.5 (spec anchor)
  auto M = make_minkowski(2);
  const Immersion hyp = make_hyperboloid(*M, Vec::Zero(3), 2.0, 1.5);
  const InducedGeometry geo = induced_geometry(hyp, Vec::Zero(2));
  CHECK(std::abs(geo.H - 0.5) <= 1e-6);

  // de Sitter level sets: H = sqrt(c) coth(sqrt(c) s)
  auto dS = make_de_sitter(2, 1.0);
  Vec p = Vec::Zero(3);
  for (double s : {0.5, 1.0}) {
    const Immersion ls = make_de_sitter_level_set(*dS, p, s, 0.8);
    Rng rng(5);
    for (int i = 0; i < 8; ++i) {
      const InducedGeometry geo2 = induced_geometry(ls, ls.chart.sample(rng));
      CHECK(std::abs(geo2.H - sphere_mean_curvature(1.0, s)) <= 1e-5);
    }
  }

  // warped slices: H = F_c(t0) in de Sitter, a'/a in GRW
  const Immersion dslice = make_slice(*dS, 0.8, 1.0);
  const InducedGeometry sg = induced_geometry(dslice, Vec::Zero(2));
  CHECK(std::abs(sg.H - equidistant_mean_curvature(1.0, 0.8)) <= 1e-6);

  auto E = make_grw(2, Warping::exponential(), -2.0, 2.0);
  const Immersion eslice = make_slice(*E, 0.3, 1.0);
  CHECK(std::abs(induced_geometry(eslice, Vec::Zero(2)).H - 1.0) <= 1e-6);
}

TEST_CASE("non-spacelike immersion is a hard error") {
  auto M = make_minkowski(2);
  CHECK_THROWS_AS(make_tilted_plane(*M, 2.0, Vec::Constant(2, 0.8), 1.0),
                  PreconditionError); // |slope| = 1.13 > 1
  Immersion bad;
  bad.model = M.get();
  bad.chart = {Vec::Constant(2, -1.0), Vec::Constant(2, 1.0)};
  bad.label = "null-ish graph";
  bad.psi = [](const Vec& x) {
    Vec q(3);
    q << x[0], x[1], 1.2 * x[0] + 3.0;
    return q;
  };
  CHECK_THROWS_AS(induced_geometry(bad, Vec::Constant(2, 0.3)),
                  PreconditionError);
}

TEST_CASE("restricted distance: level sets, planes, eikonal consistency") {
  auto M = make_minkowski(2);
  const Vec p = Vec::Zero(3);
  const DistanceField f = DistanceField::from_point(*M, p);

  // level set: u == s exactly, gradient and Laplacian vanish
  const Immersion hyp = make_hyperboloid(*M, p, 2.0, 1.5);
  Rng rng(7);
  for (int i = 0; i < 6; ++i) {
    const RestrictedSample s =
        restricted_distance(hyp, f, inset_box(hyp, 0.12).sample(rng));
    CHECK(std::abs(s.u - 2.0) <= 1e-12);
    CHECK(std::sqrt(s.grad_norm2) <= 1e-7);
    CHECK(std::abs(s.laplacian) <= 1e-6);
  }

  // tilted plane: closed-form restriction
  Vec b(2);
  b << 0.3, -0.2;
  const Immersion plane = make_tilted_plane(*M, 2.0, b, 0.5);
  for (int i = 0; i < 10; ++i) {
    const Vec x = inset_box(plane, 0.12).sample(rng);
    const RestrictedSample s = restricted_distance(plane, f, x);
    const double F = 2.0 + b.dot(x);
    const double expect = std::sqrt(F * F - x.squaredNorm());
    CHECK(std::abs(s.u - expect) <= 1e-8);
    // eikonal consistency <grad r, nu> = sqrt(1 + |grad u|^2)
    const double lhs = M->inner(s.geo.position, s.ambient_grad, s.geo.nu);
    CHECK(std::abs(lhs - std::sqrt(1.0 + s.grad_norm2)) <= 1e-6);
  }

  // Minkowski graph: eikonal consistency through the full pipeline
  const Immersion graph = make_minkowski_graph(*M, 2.2, b, 0.1, 0.6);
  for (int i = 0; i < 6; ++i) {
    const RestrictedSample s =
        restricted_distance(graph, f, inset_box(graph, 0.12).sample(rng));
    const double lhs = M->inner(s.geo.position, s.ambient_grad, s.geo.nu);
    CHECK(std::abs(lhs - std::sqrt(1.0 + s.grad_norm2)) <= 1e-6);
  }
}

TEST_CASE("identity suite across the catalog in Minkowski and de Sitter") {
  auto M = make_minkowski(2);
  const DistanceField f = DistanceField::from_point(*M, Vec::Zero(3));
  Vec b(2);
  b << 0.25, -0.15;
  std::vector<Immersion> catalog;
  catalog.push_back(make_hyperboloid(*M, Vec::Zero(3), 2.0, 1.2));
  catalog.push_back(make_shifted_hyperboloid(*M, Vec::Zero(3), 2.0, 1.0, 1.2));
  catalog.push_back(make_tilted_plane(*M, 2.0, b, 0.5));
  catalog.push_back(make_minkowski_graph(*M, 2.2, b, 0.1, 0.6));
  for (const Immersion& imm : catalog) {
    const MarginReport g =
        check_gradient_decomposition(imm, f, small_spec(11, 1e-5));
    CHECK(g.status == CheckStatus::Pass);
    const MarginReport h = check_hessian_identity(imm, f, small_spec(13, 1e-4));
    CHECK(h.status == CheckStatus::Pass);
    const MarginReport l =
        check_laplacian_identity(imm, f, small_spec(17, 1e-4));
    CHECK(l.status == CheckStatus::Pass);
  }

  auto dS = make_de_sitter(2, 1.0);
  const DistanceField fd = DistanceField::from_point(*dS, Vec::Zero(3));
  std::vector<Immersion> dcat;
  dcat.push_back(make_de_sitter_level_set(*dS, Vec::Zero(3), 1.0, 0.7));
  dcat.push_back(make_warped_graph(*dS, 1.0, 0.05, 0.4));
  for (const Immersion& imm : dcat) {
    CHECK(check_gradient_decomposition(imm, fd, small_spec(19, 1e-5)).pass());
    CHECK(check_hessian_identity(imm, fd, small_spec(23, 1e-4)).pass());
    CHECK(check_laplacian_identity(imm, fd, small_spec(29, 1e-4)).pass());
  }

  // slice-field identities (v = d_N) on a GRW graph
  auto G = make_grw(2, Warping::sin_perturbed(0.1), -4.0, 4.0);
  const DistanceField fs = DistanceField::from_slice(*G, 0.0);
  const Immersion gg = make_warped_graph(*G, 1.2, 0.1, 1.0);
  CHECK(check_gradient_decomposition(gg, fs, small_spec(31, 1e-5)).pass());
  CHECK(check_hessian_identity(gg, fs, small_spec(37, 1e-4)).pass());
  CHECK(check_laplacian_identity(gg, fs, small_spec(41, 1e-4)).pass());
}

TEST_CASE("proposition bounds: space-form pinching and analytic plane") {
  auto dS = make_de_sitter(2, 1.0);
  const DistanceField fd = DistanceField::from_point(*dS, Vec::Zero(3));
  const Immersion graph = make_warped_graph(*dS, 1.0, 0.05, 0.4);
  CurvatureHypothesis hyp;
  hyp.c = 1.0;
  hyp.box.lo = Vec::Constant(3, -0.3);
  hyp.box.hi = Vec::Constant(3, 0.3);
  hyp.box.lo[0] = 0.3;
  hyp.box.hi[0] = 1.3;

  const auto spec = small_spec(43, 1e-4);
  const MarginReport p1 = check_proposition_bounds(
      graph, fd, PropositionKind::LaplacianLower, hyp, spec);
  const MarginReport p2 = check_proposition_bounds(
      graph, fd, PropositionKind::LaplacianUpper, hyp, spec);
  CHECK(p1.pass());
  CHECK(p2.pass());
  REQUIRE(p1.margins.size() == p2.margins.size());
  for (std::size_t i = 0; i < p1.margins.size(); ++i) {
    CHECK(p1.margins[i] >= -1e-4);
    CHECK(p2.margins[i] >= -1e-4);
    CHECK(p1.margins[i] + p2.margins[i] <= 2e-4); // pinched equality
  }
  CHECK(check_proposition_bounds(graph, fd, PropositionKind::LaplacianRicci,
                                 hyp, spec)
            .pass());
  CHECK(check_proposition_bounds(graph, fd, PropositionKind::HessianLower, hyp,
                                 spec)
            .pass());
  CHECK(check_proposition_bounds(graph, fd, PropositionKind::HessianUpper, hyp,
                                 spec)
            .pass());

  // Minkowski tilted plane with c = 0: margin has the closed form
  // f_0(u)(n + |grad u|^2) - 0 >= 0, checked against the analytic value
  auto M = make_minkowski(2);
  const DistanceField fm = DistanceField::from_point(*M, Vec::Zero(3));
  Vec b(2);
  b << 0.3, -0.2;
  const Immersion plane = make_tilted_plane(*M, 2.0, b, 0.5);
  CurvatureHypothesis hyp0;
  hyp0.c = 0.0;
  hyp0.box.lo = Vec::Constant(3, -0.6);
  hyp0.box.hi = Vec::Constant(3, 0.6);
  hyp0.box.lo[2] = 1.4;
  hyp0.box.hi[2] = 2.4;
  const MarginReport pp = check_proposition_bounds(
      plane, fm, PropositionKind::LaplacianLower, hyp0, small_spec(47, 1e-5));
  CHECK(pp.pass());
  CHECK(pp.worst_margin >= -1e-5);
}

TEST_CASE("proposition bounds: GRW with empirical bounds, point and slice") {
  auto G = make_grw(2, Warping::sin_perturbed(0.1), -4.0, 4.0);
  Vec p = Vec::Zero(3);
  p[0] = -1.5;
  const DistanceField fp = DistanceField::from_point(*G, p);
  const Immersion graph = make_warped_graph(*G, 0.6, 0.08, 1.0);

  CurvatureHypothesis hyp; // empirical
  hyp.box.lo = Vec::Constant(3, -1.2);
  hyp.box.hi = Vec::Constant(3, 1.2);
  hyp.box.lo[0] = -1.6;
  hyp.box.hi[0] = 1.0;
  hyp.beta_max = 1.6;

  const auto spec = small_spec(53, 1e-4);
  for (auto kind :
       {PropositionKind::LaplacianLower, PropositionKind::LaplacianUpper,
        PropositionKind::LaplacianRicci, PropositionKind::HessianLower,
        PropositionKind::HessianUpper}) {
    const MarginReport r = check_proposition_bounds(graph, fp, kind, hyp, spec);
    CHECK(r.pass());
    CHECK(r.worst_margin >= -1e-4);
  }

  // achro variants against the contracting slice t0 = pi (A_N >= 0)
  auto G2 = make_grw(2, Warping::sin_perturbed(0.1), -4.0, 8.0);
  const double t0 = 3.14159265358979323846;
  const DistanceField fs = DistanceField::from_slice(*G2, t0);
  const Immersion above = make_warped_graph(*G2, t0 + 1.0, 0.08, 1.0);
  CurvatureHypothesis hs = hyp;
  hs.box.lo[0] = t0;
  hs.box.hi[0] = t0 + 1.3;
  CHECK(check_proposition_bounds(above, fs, PropositionKind::AchroLaplacianLower,
                                 hs, spec)
            .pass());
  CHECK(check_proposition_bounds(above, fs, PropositionKind::AchroLaplacianRicci,
                                 hs, spec)
            .pass());
  // the expanding-side variant must flag the semi-definiteness hypothesis
  CHECK(check_proposition_bounds(above, fs, PropositionKind::AchroLaplacianUpper,
                                 hs, spec)
            .status == CheckStatus::HypothesisViolation);
}

TEST_CASE("Gauss equation and intrinsic curvature of the hyperboloid") {
  auto M = make_minkowski(2);

  const Immersion slice = make_slice(*M, 0.0, 1.2);
  const MarginReport flat = check_gauss_equation(slice, small_spec(59, 1e-6));
  CHECK(flat.pass());

  const Immersion hyp = make_hyperboloid(*M, Vec::Zero(3), 1.0, 0.8);
  const MarginReport gr = check_gauss_equation(hyp, small_spec(61, 1e-3));
  CHECK(gr.pass());

  // the level set d_p = s is hyperbolic space of curvature -1/s^2
  const Vec x0 = Vec::Constant(2, 0.15);
  const InducedGeometry geo = induced_geometry(hyp, x0);
  const RiemannTensor Rs = intrinsic_riemann(hyp, x0);
  Vec e1(2), e2(2);
  e1 << 1.0, 0.0;
  e2 << 0.0, 1.0;
  const double num = (Rs.apply(e1, e2, e2)).dot(geo.g * e1);
  const double den = geo.g(0, 0) * geo.g(1, 1) - geo.g(0, 1) * geo.g(1, 0);
  CHECK(std::abs(num / den + 1.0) <= 1e-3);

  auto dS = make_de_sitter(2, 1.0);
  const Immersion ls = make_de_sitter_level_set(*dS, Vec::Zero(3), 1.0, 0.6);
  CHECK(check_gauss_equation(ls, small_spec(67, 1e-3)).pass());
}

TEST_CASE("Ricci lower bound on space-form hypersurfaces") {
  // n = 3 hyperboloid: margin = (n-2)^2/(4 s^2) = 1/(4 s^2)
  auto M3 = make_minkowski(3);
  const Immersion hyp = make_hyperboloid(*M3, Vec::Zero(4), 2.0, 1.0);
  const MarginReport r = check_ricci_lower_bound(hyp, 0.0, small_spec(71, 1e-3));
  CHECK(r.pass());
  for (double m : r.margins) CHECK(std::abs(m - 1.0 / 16.0) <= 2e-3);

  // flat plane: both sides vanish
  auto M2 = make_minkowski(2);
  const Immersion plane = make_tilted_plane(*M2, 2.0, Vec::Zero(2), 0.8);
  const MarginReport rp =
      check_ricci_lower_bound(plane, 0.0, small_spec(73, 1e-6));
  CHECK(rp.pass());
  for (double m : rp.margins) CHECK(std::abs(m) <= 1e-6);

  // de Sitter level set through the full pipeline
  auto dS = make_de_sitter(2, 1.0);
  const Immersion ls = make_de_sitter_level_set(*dS, Vec::Zero(3), 1.0, 0.6);
  CHECK(check_ricci_lower_bound(ls, 1.0, small_spec(79, 1e-3)).pass());
}

TEST_CASE("mean curvature theorems on the constant-H catalog") {
  auto M = make_minkowski(2);
  const Vec p = Vec::Zero(3);
  const DistanceField f = DistanceField::from_point(*M, p);

  // level set: equality in both directions, rigidity
  const Immersion hyp = make_hyperboloid(*M, p, 2.0, 1.2);
  const auto spec = small_spec(83, 1e-6);
  const MarginReport t41 = check_mean_curvature_theorem(
      hyp, f, MeanCurvatureTheorem::PointUpper, 0.0, spec);
  const MarginReport t42 = check_mean_curvature_theorem(
      hyp, f, MeanCurvatureTheorem::PointLower, 0.0, spec);
  CHECK(t41.pass());
  CHECK(t42.pass());
  CHECK(std::abs(t41.worst_margin) <= 1e-6);
  CHECK(std::abs(t42.worst_margin) <= 1e-6);

  // shifted hyperboloid: T42 margin >= 1/6 (attained at the chart center)
  const Immersion shifted = make_shifted_hyperboloid(*M, p, 2.0, 1.0, 1.2);
  const MarginReport s42 = check_mean_curvature_theorem(
      shifted, f, MeanCurvatureTheorem::PointLower, 0.0, spec);
  CHECK(s42.pass());
  CHECK(s42.worst_margin >= 1.0 / 6.0 - 1e-4);
  CHECK(s42.worst_margin <= 1.0 / 6.0 + 1e-4);
  const MarginReport s41 = check_mean_curvature_theorem(
      shifted, f, MeanCurvatureTheorem::PointUpper, 0.0, spec);
  CHECK(s41.status == CheckStatus::NotCheckable);

  // tilted plane: the complete surface leaves I+(p)
  const Immersion plane = make_tilted_plane(*M, 2.0, Vec::Zero(2), 0.5);
  CHECK(check_mean_curvature_theorem(plane, f, MeanCurvatureTheorem::PointLower,
                                     0.0, spec)
            .status == CheckStatus::NotCheckable);

  // de Sitter level set: equality at c = 1
  auto dS = make_de_sitter(2, 1.0);
  const DistanceField fd = DistanceField::from_point(*dS, Vec::Zero(3));
  const Immersion ls = make_de_sitter_level_set(*dS, Vec::Zero(3), 1.0, 0.6);
  const auto dspec = small_spec(89, 1e-5);
  CHECK(std::abs(check_mean_curvature_theorem(
                     ls, fd, MeanCurvatureTheorem::PointUpper, 1.0, dspec)
                     .worst_margin) <= 1e-5);
  CHECK(std::abs(check_mean_curvature_theorem(
                     ls, fd, MeanCurvatureTheorem::PointLower, 1.0, dspec)
                     .worst_margin) <= 1e-5);

  // non-constant-H immersion is rejected
  const Immersion graph = make_minkowski_graph(*M, 2.2, Vec::Zero(2), 0.1, 0.6);
  CHECK_THROWS_AS(check_mean_curvature_theorem(
                      graph, f, MeanCurvatureTheorem::PointLower, 0.0, spec),
                  PreconditionError);
}

TEST_CASE("achro mean curvature theorems on slices") {
  // de Sitter slice over the totally geodesic N_c: equality both ways
  auto dS = make_de_sitter(2, 1.0);
  const DistanceField fN = DistanceField::from_slice(*dS, 0.0);
  const Immersion sl = make_slice(*dS, 0.8, 0.8);
  const auto spec = small_spec(97, 1e-5);
  const MarginReport lo = check_mean_curvature_theorem(
      sl, fN, MeanCurvatureTheorem::SliceLower, 1.0, spec);
  CHECK(lo.pass());
  CHECK(std::abs(lo.worst_margin) <= 1e-5);
  const MarginReport up = check_mean_curvature_theorem(
      sl, fN, MeanCurvatureTheorem::SliceUpper, 1.0, spec);
  CHECK(up.pass());
  CHECK(std::abs(up.worst_margin) <= 1e-4);

  // GRW exponential warping: strict margins with the closed-form values
  auto E = make_grw(2, Warping::exponential(), -3.0, 3.0);
  const DistanceField fE = DistanceField::from_slice(*E, 0.0);
  const Immersion esl = make_slice(*E, 0.5, 0.8);
  const double v = 0.5;
  const MarginReport elo = check_mean_curvature_theorem(
      esl, fE, MeanCurvatureTheorem::SliceLower, 1.0, spec);
  CHECK(elo.pass());
  CHECK(std::abs(elo.worst_margin - (1.0 - std::tanh(v))) <= 1e-6);
  const MarginReport eup = check_mean_curvature_theorem(
      esl, fE, MeanCurvatureTheorem::SliceUpper, 1.0, spec);
  CHECK(eup.pass());
  const double sech = 1.0 / std::cosh(v);
  CHECK(std::abs(eup.worst_margin - (std::tanh(v) + sech * sech - 1.0)) <= 1e-6);
}

TEST_CASE("outer ball confinement and level-set rigidity") {
  auto M = make_minkowski(2);
  const Vec p = Vec::Zero(3);
  const DistanceField f = DistanceField::from_point(*M, p);
  const auto spec = small_spec(101, 1e-6);

  const Immersion hyp = make_hyperboloid(*M, p, 2.0, 1.2);
  const MarginReport ob = check_outer_ball(hyp, f, 0.0, spec);
  CHECK(ob.pass());
  CHECK(std::abs(ob.worst_margin) <= 1e-6);

  const Immersion shifted = make_shifted_hyperboloid(*M, p, 2.0, 1.0, 1.2);
  const MarginReport obs = check_outer_ball(shifted, f, 0.0, spec);
  CHECK(obs.pass());
  CHECK(std::abs(obs.worst_margin - 1.0) <= 1e-6);

  const Immersion plane = make_tilted_plane(*M, 2.0, Vec::Zero(2), 0.5);
  CHECK(check_outer_ball(plane, f, 0.0, spec).status ==
        CheckStatus::NotCheckable);

  // rigidity: level sets are exactly flat in u
  const MarginReport rig = check_bernstein_rigidity(hyp, f, 0.0, spec);
  CHECK(rig.pass());
  CHECK(rig.notes.find("spread") != std::string::npos);

  auto dS = make_de_sitter(2, 1.0);
  const DistanceField fd = DistanceField::from_point(*dS, Vec::Zero(3));
  const Immersion ls = make_de_sitter_level_set(*dS, Vec::Zero(3), 1.0, 0.6);
  CHECK(check_bernstein_rigidity(ls, fd, 1.0, small_spec(103, 1e-6)).pass());

  CHECK(check_bernstein_rigidity(shifted, f, 0.0, spec).status ==
        CheckStatus::NotCheckable);
}

TEST_CASE("hyperbolicity mechanism: maximal surfaces and guards") {
  auto M = make_minkowski(2);
  const DistanceField f = DistanceField::from_point(*M, Vec::Zero(3));
  Vec b(2);
  b << 0.3, -0.1;
  const Immersion plane = make_tilted_plane(*M, 2.0, b, 0.5);
  const auto spec = small_spec(107, 1e-5);
  const MarginReport r =
      check_hyperbolicity_superharmonic(plane, f, HyperbolicityVariant::Point,
                                        0.0, spec);
  CHECK(r.pass());
  CHECK(r.worst_margin >= -1e-5); // includes -Delta u >= -tol

  // chain margin ties to the weight function phi
  {
    Rng rng(3);
    const Vec x = inset_box(plane, 0.12).sample(rng);
    const RestrictedSample s = restricted_distance(plane, f, x);
    const int n = 2;
    const double fc = sphere_mean_curvature(0.0, s.u);
    const double chain = fc * (n + s.grad_norm2) - n * s.geo.H * std::sqrt(1.0 + s.grad_norm2);
    const double viaphi =
        n * std::sqrt(1.0 + s.grad_norm2) *
        (fc * hyperbolicity_weight(n, std::sqrt(s.grad_norm2)) - s.geo.H);
    CHECK(std::abs(chain - viaphi) <= 1e-10);
  }

  // guard: a level set with H = f_c(s) violates the hypothesis for n = 3
  auto M3 = make_minkowski(3);
  const DistanceField f3 = DistanceField::from_point(*M3, Vec::Zero(4));
  const Immersion hyp3 = make_hyperboloid(*M3, Vec::Zero(4), 2.0, 0.8);
  CHECK(check_hyperbolicity_superharmonic(hyp3, f3, HyperbolicityVariant::Point,
                                          0.0, small_spec(109, 1e-5))
            .status == CheckStatus::HypothesisViolation);

  // slice variant: planes over the Minkowski slice (c = 0, H = 0)
  const DistanceField fs = DistanceField::from_slice(*M, 0.0);
  const MarginReport rs = check_hyperbolicity_superharmonic(
      plane, fs, HyperbolicityVariant::Slice, 0.0, spec);
  CHECK(rs.pass());

  // slice variant in de Sitter: boosted totally geodesic surface over N_c
  auto dS = make_de_sitter(2, 1.0);
  const DistanceField fN = DistanceField::from_slice(*dS, 0.0);
  const Immersion boosted = make_boosted_totally_geodesic(*dS, 0.8, 0.5);
  const MarginReport rb = check_hyperbolicity_superharmonic(
      boosted, fN, HyperbolicityVariant::Slice, 1.0, spec);
  CHECK(rb.pass());
  CHECK(rb.worst_margin >= -1e-5);
}

TEST_CASE("N-Jacobi fields match the slice profiles") {
  // Minkowski slice: A_N = 0, the N-Jacobi field is parallel (constant)
  auto M = make_minkowski(2);
  const Immersion slice = make_slice(*M, 0.0, 1.0);
  Vec xi(2);
  xi << 1.0, 0.0;
  const NJacobi nj = n_jacobi_field(slice, Vec::Zero(2), xi, 1.5, 300);
  const double amp0 = nj.field.lam[0].norm();
  for (int k = 0; k < nj.geodesic.nodes(); k += 50)
    CHECK(std::abs(nj.field.lam[k].norm() - amp0) <= 1e-8);

  // de Sitter N_c: amplitude follows cosh(sqrt(c) t) (slice ratio profile)
  auto dS = make_de_sitter(2, 1.0);
  const Immersion Nc = make_slice(*dS, 0.0, 1.0);
  const double s = 1.2;
  const NJacobi dj = n_jacobi_field(Nc, Vec::Constant(2, 0.1), xi, s, 600);
  const double end = dj.field.lam[dj.geodesic.nodes() - 1].norm();
  for (int k = 0; k < dj.geodesic.nodes(); k += 60) {
    const double expect = jacobi_ratio_slice(1.0, s, dj.geodesic.parameter(k));
    CHECK(std::abs(dj.field.lam[k].norm() / end - expect) <= 1e-6);
  }

  // GRW exponential slice: amplitude follows a(t0 + t)/a(t0)
  auto E = make_grw(2, Warping::exponential(), -2.0, 3.0);
  const Immersion esl = make_slice(*E, 0.4, 1.0);
  const NJacobi ej = n_jacobi_field(esl, Vec::Zero(2), xi, 1.0, 500);
  const double e0 = ej.field.lam[0].norm();
  for (int k = 0; k < ej.geodesic.nodes(); k += 50) {
    const double t = ej.geodesic.parameter(k);
    CHECK(std::abs(ej.field.lam[k].norm() / e0 - std::exp(t)) <= 1e-6);
  }
}

TEST_CASE("hypersurface index form: closed forms and maximality") {
  // de Sitter N_c: I_N on the c_c profile equals -F_c(s)
  auto dS = make_de_sitter(2, 1.0);
  const Immersion Nc = make_slice(*dS, 0.0, 1.0);
  const double s = 1.0;
  const Vec x0 = Vec::Constant(2, 0.1);
  const InducedGeometry geo = induced_geometry(Nc, x0);
  const Geodesic g = integrate_geodesic(*dS, geo.position, geo.nu, s, 1000);
  const TransportedField X = scaled_parallel_field(
      g, g.frame(0).col(0),
      [&](double t) { return jacobi_ratio_slice(1.0, s, t); },
      [&](double t) { return generalized_sine(1.0, t) / generalized_cosine(1.0, s); });
  const IndexFormResult r = index_form_hypersurface(Nc, x0, g, X);
  CHECK(std::abs(r.value + equidistant_mean_curvature(1.0, s)) <= 1e-6);

  // GRW exponential slice: I_N(J, J) = Hess d_N (J(s), J(s)) = -(a'/a)|J(s)|^2
  auto E = make_grw(2, Warping::exponential(), -2.0, 3.0);
  const Immersion esl = make_slice(*E, 0.0, 1.0);
  Vec xi(2);
  xi << 1.0, 0.0;
  const NJacobi ej = n_jacobi_field(esl, Vec::Zero(2), xi, 1.0, 1000);
  const IndexFormResult rj =
      index_form_hypersurface(esl, Vec::Zero(2), ej.geodesic, ej.field);
  const double Jend2 = ej.field.lam[ej.geodesic.nodes() - 1].squaredNorm();
  CHECK(std::abs(rj.value + 1.0 * Jend2) <= 1e-5);

  // slice-case maximality with the shape boundary form and free start point
  const InducedGeometry egeo = induced_geometry(esl, Vec::Zero(2));
  MaximalityOptions opts;
  opts.perturbations = 60;
  opts.seed = 42;
  opts.boundary_form = shape_boundary_form(egeo, ej.geodesic);
  opts.free_initial_endpoint = true;
  const CheckReport rep = check_index_maximality(ej.geodesic, ej.field, opts);
  CHECK(rep.status == CheckStatus::Pass);
  CHECK(rep.worst_margin >= -1e-8);

  const double slope = maximality_defect_slope(
      ej.geodesic, ej.field, {0.3, 0.1, 0.03, 0.01}, 7, opts.boundary_form);
  CHECK(std::abs(slope - 2.0) <= 0.1);
}

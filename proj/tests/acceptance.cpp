// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Criterion 10 drives the installed CLI binary end to end; its path
// comes from the LORENTZ_VERIFY_BIN environment variable set by ctest.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "lorentz/comparison.hpp"
#include "lorentz/distance_checks.hpp"
#include "lorentz/experiment.hpp"
#include "lorentz/geodesic.hpp"
#include "lorentz/hypersurface_checks.hpp"

using namespace lorentz;

namespace {

constexpr double kPi = 3.14159265358979323846;

struct Criterion {
  std::string name;
  std::function<bool(std::string&)> run;
};

std::unique_ptr<Spacetime> space_form(double c, int n = 2) {
  if (c > 0.0) return make_de_sitter(n, c);
  if (c == 0.0) return make_minkowski(n);
  return make_anti_de_sitter(n, c);
}

const ExperimentConfig& find_experiment(
    const std::vector<ExperimentConfig>& cat, const std::string& id) {
  for (const auto& c : cat)
    if (c.id == id) return c;
  throw std::runtime_error("missing builtin " + id);
}

const CheckReport* find_check(const std::vector<CheckReport>& checks,
                              const std::string& id) {
  for (const auto& c : checks)
    if (c.check_id == id) return &c;
  return nullptr;
}

// ---------------------------------------------------------------------
// A1: space-form pinched equalities at 1e3 events x 8 directions

bool criterion_space_form_equalities(std::string& detail) {
  const auto cat = builtin_experiments();
  const auto checks =
      run_experiment(find_experiment(cat, "space-form-equalities"), {});
  double worst_h = 0.0, worst_l = 0.0;
  for (const auto& c : checks) {
    if (!c.pass()) {
      detail = c.check_id + " " + to_string(c.status);
      return false;
    }
    for (double m : c.margins) {
      // both one-sided margins pass, so |margin| is the equality residual
      if (c.check_id.find("hessian") != std::string::npos)
        worst_h = std::max(worst_h, std::abs(m));
      else
        worst_l = std::max(worst_l, std::abs(m));
    }
  }
  std::ostringstream os;
  os << "max |Hessian residual| " << worst_h << " (tol 1e-5), max |Laplacian "
        "residual| " << worst_l << " (tol 1e-4)";
  detail = os.str();
  return worst_h <= 1e-5 && worst_l <= 1e-4;
}

// ---------------------------------------------------------------------
// A2: index-form closed forms over c in {-1,0,1,2}, s in {0.3,1,2}

bool criterion_index_forms(std::string& detail) {
  double worst = 0.0;
  for (double c : {-1.0, 0.0, 1.0, 2.0}) {
    for (double s : {0.3, 1.0, 2.0}) {
      if (!(c < 0.0 && s >= kPi / std::sqrt(-c))) {
        auto M = space_form(c);
        Vec p = Vec::Zero(3);
        p[1] = 0.1;
        Rng rng(19);
        const Vec v = random_unit_timelike(*M, p, rng, 0.4);
        const Geodesic g = integrate_geodesic(*M, p, v, s, default_steps(s));
        const TransportedField X = scaled_parallel_field(
            g, g.frame(0).col(0),
            [&](double t) { return jacobi_ratio_point(c, s, t); },
            [&](double t) {
              return generalized_cosine(c, t) / generalized_sine(c, s);
            });
        worst = std::max(worst, std::abs(index_form_geodesic(g, X).value +
                                         sphere_mean_curvature(c, s)));
      }
      if (!(c < 0.0 && s >= kPi / (2.0 * std::sqrt(-c)))) {
        auto M = space_form(c);
        const Immersion N = make_slice(*M, 0.0, 1.0);
        const Vec x0 = Vec::Constant(2, 0.15);
        const InducedGeometry geo = induced_geometry(N, x0);
        const Geodesic g =
            integrate_geodesic(*M, geo.position, geo.nu, s, default_steps(s));
        const TransportedField X = scaled_parallel_field(
            g, g.frame(0).col(0),
            [&](double t) { return jacobi_ratio_slice(c, s, t); },
            [&](double t) {
              return c * generalized_sine(c, t) / generalized_cosine(c, s);
            });
        worst = std::max(worst,
                         std::abs(index_form_hypersurface(N, x0, g, X).value +
                                  equidistant_mean_curvature(c, s)));
      }
    }
  }
  std::ostringstream os;
  os << "max closed-form residual " << worst << " (tol 1e-6)";
  detail = os.str();
  return worst <= 1e-6;
}

// ---------------------------------------------------------------------
// A3: Jacobi amplitude profiles and the closed anti-de Sitter geodesic

bool criterion_jacobi(std::string& detail) {
  double worst = 0.0;
  for (double c : {-1.0, 1.0, 2.0}) {
    auto M = space_form(c);
    Vec p = Vec::Zero(3);
    p[1] = 0.15;
    Rng rng(13);
    const Vec v = random_unit_timelike(*M, p, rng, 0.5);
    const double s = c < 0.0 ? 1.0 : 1.5;
    const Geodesic g = integrate_geodesic(*M, p, v, s, default_steps(s));
    const TransportedField J =
        integrate_jacobi(g, Vec::Zero(3), g.frame(0).col(0));
    const double end = J.lam[g.nodes() - 1].norm();
    for (int k = 0; k < g.nodes(); k += 25)
      worst = std::max(worst, std::abs(J.lam[k].norm() / end -
                                       jacobi_ratio_point(c, s, g.parameter(k))));

    const Immersion N = make_slice(*M, 0.0, 1.0);
    const double sN = c < 0.0 ? 1.0 : 1.5;
    Vec xi(2);
    xi << 1.0, 0.0;
    const NJacobi nj =
        n_jacobi_field(N, Vec::Constant(2, 0.1), xi, sN, default_steps(sN));
    const double endN = nj.field.lam[nj.geodesic.nodes() - 1].norm();
    for (int k = 0; k < nj.geodesic.nodes(); k += 25)
      worst = std::max(
          worst, std::abs(nj.field.lam[k].norm() / endN -
                          jacobi_ratio_slice(c, sN, nj.geodesic.parameter(k))));
  }

  auto ads = make_anti_de_sitter(2, -1.0);
  Vec p(3);
  p << 0.0, 0.3, 0.1;
  Rng rng(7);
  const Vec v = random_unit_timelike(*ads, p, rng, 0.6);
  const Geodesic g =
      integrate_geodesic(*ads, p, v, 2.0 * kPi, default_steps(2.0 * kPi));
  const double ret =
      (ads->embed(g.position(g.nodes() - 1)) - ads->embed(g.position(0))).norm();

  std::ostringstream os;
  os << "max profile deviation " << worst << " (tol 1e-6), closed-geodesic "
        "return distance " << ret << " (tol 1e-4)";
  detail = os.str();
  return worst <= 1e-6 && ret <= 1e-4;
}

// ---------------------------------------------------------------------
// A4: identity suite across the immersion catalog in Minkowski and de Sitter

bool criterion_identities(std::string& detail) {
  SurfaceSampleSpec spec;
  spec.points = 200;
  spec.directions = 4;
  spec.seed = 11;

  auto run_three = [&](const Immersion& imm, const DistanceField& f,
                       double& worst_g, double& worst_h, double& worst_l) {
    SurfaceSampleSpec sg = spec;
    sg.tolerance = 1e-5;
    const MarginReport g = check_gradient_decomposition(imm, f, sg);
    SurfaceSampleSpec sh = spec;
    sh.tolerance = 1e-4;
    const MarginReport h = check_hessian_identity(imm, f, sh);
    const MarginReport l = check_laplacian_identity(imm, f, sh);
    if (!g.pass() || !h.pass() || !l.pass()) return false;
    worst_g = std::max(worst_g, -g.worst_margin);
    worst_h = std::max(worst_h, -h.worst_margin);
    worst_l = std::max(worst_l, -l.worst_margin);
    return true;
  };

  double wg = 0.0, wh = 0.0, wl = 0.0;
  bool ok = true;

  auto Mk = make_minkowski(2);
  const DistanceField fm = DistanceField::from_point(*Mk, Vec::Zero(3));
  Vec b(2);
  b << 0.25, -0.15;
  std::vector<Immersion> mink_catalog;
  mink_catalog.push_back(make_hyperboloid(*Mk, Vec::Zero(3), 2.0, 1.2));
  mink_catalog.push_back(make_shifted_hyperboloid(*Mk, Vec::Zero(3), 2.0, 1.0, 1.2));
  mink_catalog.push_back(make_tilted_plane(*Mk, 2.0, b, 0.5));
  mink_catalog.push_back(make_minkowski_graph(*Mk, 2.2, b, 0.1, 0.6));
  for (const auto& imm : mink_catalog) ok = run_three(imm, fm, wg, wh, wl) && ok;

  auto dS = make_de_sitter(2, 1.0);
  const DistanceField fd = DistanceField::from_point(*dS, Vec::Zero(3));
  std::vector<Immersion> ds_catalog;
  ds_catalog.push_back(make_de_sitter_level_set(*dS, Vec::Zero(3), 1.0, 0.6));
  ds_catalog.push_back(make_warped_graph(*dS, 1.0, 0.05, 0.35));
  ds_catalog.push_back(make_slice(*dS, 1.0, 0.35));
  for (const auto& imm : ds_catalog) ok = run_three(imm, fd, wg, wh, wl) && ok;

  std::ostringstream os;
  os << "worst residuals: gradient " << wg << " (1e-5), Hessian " << wh
     << " (1e-4), Laplacian " << wl << " (1e-4)";
  detail = os.str();
  return ok;
}

// ---------------------------------------------------------------------
// A5: GRW inequality suite with empirical curvature bounds

bool criterion_grw(std::string& detail) {
  const auto cat = builtin_experiments();
  const auto checks = run_experiment(find_experiment(cat, "grw-inequalities"), {});
  double worst = 1e300;
  for (const auto& c : checks) {
    if (!c.pass()) {
      detail = c.check_id + " " + to_string(c.status);
      return false;
    }
    worst = std::min(worst, c.worst_margin);
    if (c.worst_margin < -1e-4) {
      detail = c.check_id + " margin " + std::to_string(c.worst_margin);
      return false;
    }
  }
  std::ostringstream os;
  os << checks.size() << " checks, least margin " << worst << " >= -1e-4";
  detail = os.str();
  return true;
}

// ---------------------------------------------------------------------
// A6: level-set principle

bool criterion_level_set_principle(std::string& detail) {
  double worst = 0.0;

  auto Mk = make_minkowski(2);
  const Immersion hyp = make_hyperboloid(*Mk, Vec::Zero(3), 2.0, 1.2);
  Rng rng(5);
  for (int i = 0; i < 30; ++i) {
    const double H = induced_geometry(hyp, hyp.chart.sample(rng)).H;
    worst = std::max(worst, std::abs(H - 0.5));
  }

  auto dS = make_de_sitter(2, 1.0);
  for (double s : {0.5, 1.0}) {
    const Immersion ls = make_de_sitter_level_set(*dS, Vec::Zero(3), s, 0.6);
    for (int i = 0; i < 20; ++i) {
      const double H = induced_geometry(ls, ls.chart.sample(rng)).H;
      worst = std::max(worst, std::abs(H - sphere_mean_curvature(1.0, s)));
    }
  }
  std::ostringstream os;
  os << "max |H - f_c(s)| " << worst << " (tol 1e-5); Minkowski s=2 gives H=0.5";
  detail = os.str();
  return worst <= 1e-5;
}

// ---------------------------------------------------------------------
// A7: mean curvature theorem checks on the constant-H catalog

bool criterion_theorems(std::string& detail) {
  const auto cat = builtin_experiments();
  const auto checks =
      run_experiment(find_experiment(cat, "mean-curvature-theorems"), {});
  int skips = 0;
  for (const auto& c : checks) {
    if (c.counts_as_skip()) {
      ++skips;
      continue;
    }
    if (!c.pass()) {
      detail = c.check_id + " " + to_string(c.status);
      return false;
    }
  }
  const CheckReport* t42 =
      find_check(checks, "minkowski-shifted/mean-curvature-point-lower");
  if (!t42 || t42->worst_margin < 0.1666 - 1e-4) {
    detail = "shifted-hyperboloid T42 margin missing or below 0.1666";
    return false;
  }
  // rigidity: the level-set reports carry the 1e-8 - (sup u - inf u) margin
  for (const char* id : {"minkowski-level-set/bernstein-rigidity",
                         "de-sitter-level-set/bernstein-rigidity"}) {
    const CheckReport* r = find_check(checks, id);
    if (!r || r->margins.size() != 3 || r->margins[2] < 0.0) {
      detail = std::string(id) + ": sup u - inf u exceeds 1e-8";
      return false;
    }
  }
  std::ostringstream os;
  os << "all monotone-direction checks pass (" << skips
     << " one-sided skips); shifted T42 margin " << t42->worst_margin;
  detail = os.str();
  return true;
}

// ---------------------------------------------------------------------
// A8: hyperbolicity mechanism

bool criterion_hyperbolicity(std::string& detail) {
  const auto cat = builtin_experiments();
  const auto checks = run_experiment(find_experiment(cat, "hyperbolicity"), {});
  int guards = 0;
  for (const auto& c : checks) {
    if (c.status == CheckStatus::HypothesisViolation) {
      ++guards;
      continue;
    }
    if (!c.pass()) {
      detail = c.check_id + " " + to_string(c.status);
      return false;
    }
  }
  if (guards != 1) {
    detail = "expected exactly one guard-path hypothesis violation";
    return false;
  }
  // superharmonicity margins on the maximal surfaces: -Delta u >= -1e-5
  for (const char* id : {"minkowski-maximal/hyperbolicity-point",
                         "minkowski-maximal-n3/hyperbolicity-point"}) {
    const CheckReport* r = find_check(checks, id);
    if (!r || r->worst_margin < -1e-5) {
      detail = std::string(id) + ": Delta u exceeds 1e-5";
      return false;
    }
  }
  // sampled phi minimizer within 1e-3 of sqrt(n-2) for n = 2..8
  double worst = 0.0;
  for (int n = 2; n <= 8; ++n) {
    double best_x = 0.0, best = hyperbolicity_weight(n, 0.0);
    for (int i = 1; i < 10000; ++i) {
      const double x = 10.0 * i / 10000.0;
      const double v = hyperbolicity_weight(n, x);
      if (v < best) {
        best = v;
        best_x = x;
      }
    }
    worst = std::max(worst, std::abs(best_x - std::sqrt(double(n - 2))));
  }
  std::ostringstream os;
  os << "maximal-surface superharmonicity holds; guard path exercised; phi "
        "minimizer off by at most " << worst << " (tol 1e-3)";
  detail = os.str();
  return worst <= 1e-3;
}

// ---------------------------------------------------------------------
// A9: index maximality with O(eps^2) defect scaling

bool criterion_maximality(std::string& detail) {
  auto dS = make_de_sitter(2, 1.0);
  Vec p = Vec::Zero(3);
  p[1] = 0.1;
  Rng rng(23);
  const Vec v = random_unit_timelike(*dS, p, rng, 0.5);
  const Geodesic g = integrate_geodesic(*dS, p, v, 1.0, 1000);
  const TransportedField J =
      integrate_jacobi(g, Vec::Zero(3), g.frame(0).col(0));
  MaximalityOptions opts;
  opts.perturbations = 100;
  opts.seed = 42;
  const CheckReport point = check_index_maximality(g, J, opts);

  const Immersion N = make_slice(*dS, 0.0, 1.0);
  Vec xi(2);
  xi << 1.0, 0.0;
  const Vec x0 = Vec::Constant(2, 0.1);
  const NJacobi nj = n_jacobi_field(N, x0, xi, 1.2, 1200);
  MaximalityOptions sopts;
  sopts.perturbations = 100;
  sopts.seed = 42;
  sopts.boundary_form = shape_boundary_form(induced_geometry(N, x0), nj.geodesic);
  sopts.free_initial_endpoint = true;
  const CheckReport slice = check_index_maximality(nj.geodesic, nj.field, sopts);

  const double slope_pt =
      maximality_defect_slope(g, J, {0.3, 0.1, 0.03, 0.01}, 42, std::nullopt);
  const double slope_sl = maximality_defect_slope(
      nj.geodesic, nj.field, {0.3, 0.1, 0.03, 0.01}, 42, sopts.boundary_form);

  std::ostringstream os;
  os << "point margins >= " << point.worst_margin << ", slice margins >= "
     << slice.worst_margin << " (tol -1e-8); defect slopes " << slope_pt << ", "
     << slope_sl << " (2 +- 0.1)";
  detail = os.str();
  return point.pass() && slice.pass() && point.samples >= 100 &&
         slice.samples >= 100 && std::abs(slope_pt - 2.0) <= 0.1 &&
         std::abs(slope_sl - 2.0) <= 0.1;
}

// ---------------------------------------------------------------------
// A10: infrastructure (determinism, exit codes, guard fixtures)

int run_cli(const std::string& bin, const std::string& args,
            const std::string& out_file) {
  const std::string cmd = bin + " " + args + " > " + out_file + " 2>/dev/null";
  const int raw = std::system(cmd.c_str());
  return WEXITSTATUS(raw);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

bool criterion_infrastructure(std::string& detail) {
  const char* bin = std::getenv("LORENTZ_VERIFY_BIN");
  if (!bin) {
    detail = "LORENTZ_VERIFY_BIN not set";
    return false;
  }

  // fixture configs
  const std::string okcfg = "/tmp/lorentz_accept_ok.json";
  {
    std::ofstream f(okcfg);
    f << R"json({"experiments": [{"id": "fixture-ok", "stages": [{
      "label": "mink",
      "model": {"kind": "minkowski", "n": 2},
      "field": {"kind": "slice", "t0": 0.0},
      "box": {"lo": [-0.8, -0.8, 0.4], "hi": [0.8, 0.8, 1.6]},
      "curvature": {"c": 0.0},
      "checks": [{"name": "hessian-from-slice-lower"},
                 {"name": "laplacian-from-slice"}],
      "samples": 25, "directions": 3, "seed": 7}]}]})json";
  }
  const std::string failcfg = "/tmp/lorentz_accept_fail.json";
  {
    std::ofstream f(failcfg);
    // an honest equality check driven below the FD noise floor must fail
    f << R"json({"experiments": [{"id": "fixture-fail", "stages": [{
      "label": "mink",
      "model": {"kind": "minkowski", "n": 2},
      "field": {"kind": "slice", "t0": 0.0},
      "box": {"lo": [-0.8, -0.8, 0.4], "hi": [0.8, 0.8, 1.8]},
      "curvature": {"c": 0.0},
      "checks": [{"name": "laplacian-from-slice", "tolerance": 0.0}],
      "samples": 500, "directions": 8, "seed": 101}]}]})json";
  }
  const std::string badcfg = "/tmp/lorentz_accept_bad.json";
  {
    std::ofstream f(badcfg);
    f << R"json({"experiments": [{"id": "fixture-bad", "stages": [{
      "model": {"kind": "minkowski", "n": 2},
      "field": {"kind": "slice", "t0": 0.0},
      "box": {"lo": [-0.8, -0.8, 0.4], "hi": [0.8, 0.8, 1.6]},
      "checks": [{"name": "laplacian-from-slice"}],
      "samples": -3}]}]})json";
  }
  const std::string guardcfg = "/tmp/lorentz_accept_guard.json";
  {
    std::ofstream f(guardcfg);
    // deliberately wrong curvature bound: hypothesis violation, not failure
    f << R"json({"experiments": [{"id": "fixture-guard", "stages": [{
      "label": "grw",
      "model": {"kind": "grw", "n": 2,
                 "warping": {"name": "sinp", "param": 0.1}, "t_range": [-4, 4]},
      "field": {"kind": "point", "p": [-1.5, 0, 0]},
      "box": {"lo": [-0.4, -0.4, -0.4], "hi": [0.6, 0.4, 0.4]},
      "curvature": {"c": 0.0, "beta_max": 1.6,
                     "box": {"lo": [-1.6, -0.5, -0.5], "hi": [0.6, 0.5, 0.5]}},
      "checks": [{"name": "hessian-lower-point"}],
      "samples": 10, "directions": 2, "seed": 3}]}]})json";
  }

  const std::string base = std::string(bin);
  // determinism: two identical runs are byte-identical
  int rc1 = run_cli(base, "--config " + okcfg + " --experiment fixture-ok --verbose",
                    "/tmp/lorentz_accept_run1.json");
  int rc2 = run_cli(base, "--config " + okcfg + " --experiment fixture-ok --verbose",
                    "/tmp/lorentz_accept_run2.json");
  if (rc1 != 0 || rc2 != 0) {
    detail = "fixture-ok exited " + std::to_string(rc1) + "/" + std::to_string(rc2);
    return false;
  }
  if (slurp("/tmp/lorentz_accept_run1.json") !=
      slurp("/tmp/lorentz_accept_run2.json")) {
    detail = "structured reports differ between identical runs";
    return false;
  }

  const int rc_fail = run_cli(base, "--config " + failcfg + " --experiment fixture-fail",
                              "/tmp/lorentz_accept_fail.out");
  if (rc_fail != 1) {
    detail = "failing fixture exited " + std::to_string(rc_fail) + ", want 1";
    return false;
  }
  const int rc_bad =
      run_cli(base, "--config " + badcfg, "/tmp/lorentz_accept_bad.out");
  if (rc_bad != 2) {
    detail = "malformed fixture exited " + std::to_string(rc_bad) + ", want 2";
    return false;
  }
  const int rc_guard = run_cli(base, "--config " + guardcfg + " --experiment fixture-guard --format tabular",
                               "/tmp/lorentz_accept_guard.csv");
  if (rc_guard != 0) {
    detail = "guard fixture exited " + std::to_string(rc_guard) + ", want 0";
    return false;
  }
  if (slurp("/tmp/lorentz_accept_guard.csv").find("hypothesis-violation") ==
      std::string::npos) {
    detail = "guard fixture did not report a hypothesis violation";
    return false;
  }

  detail = "byte-identical reports, exit codes 0/1/2, guard path skipped";
  return true;
}

} // namespace

int main() {
  std::vector<Criterion> criteria = {
      {"A1 space-form equality suite", criterion_space_form_equalities},
      {"A2 index-form closed forms", criterion_index_forms},
      {"A3 Jacobi profiles and closed geodesic", criterion_jacobi},
      {"A4 restriction identity suite", criterion_identities},
      {"A5 GRW inequality suite", criterion_grw},
      {"A6 level-set principle", criterion_level_set_principle},
      {"A7 mean curvature theorems", criterion_theorems},
      {"A8 hyperbolicity mechanism", criterion_hyperbolicity},
      {"A9 index maximality", criterion_maximality},
      {"A10 infrastructure contracts", criterion_infrastructure},
  };

  int failures = 0;
  for (auto& c : criteria) {
    std::string detail;
    bool ok = false;
    try {
      ok = c.run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    std::printf("[%s] %s%s%s\n", ok ? "PASS" : "FAIL", c.name.c_str(),
                detail.empty() ? "" : " - ", detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
  }
  return failures == 0 ? 0 : 1;
}

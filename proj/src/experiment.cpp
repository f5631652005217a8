#include "lorentz/experiment.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>

#include <json.hpp>

#include "lorentz/comparison.hpp"
#include "lorentz/distance_checks.hpp"
#include "lorentz/geodesic.hpp"
#include "lorentz/hypersurface_checks.hpp"

namespace lorentz {

namespace {

using Json = nlohmann::ordered_json;

constexpr double kPi = 3.14159265358979323846;

// ------------------------------------------------------------------ parsing

void require_keys(const Json& j, const std::string& where,
                  std::initializer_list<const char*> allowed) {
  if (!j.is_object()) throw ConfigError(where + ": expected an object");
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool ok = false;
    for (const char* k : allowed)
      if (it.key() == k) {
        ok = true;
        break;
      }
    if (!ok) throw ConfigError("unknown key '" + where + "." + it.key() + "'");
  }
}

std::vector<double> parse_array(const Json& j, const std::string& where) {
  if (!j.is_array()) throw ConfigError(where + ": expected an array of numbers");
  std::vector<double> out;
  for (const auto& v : j) {
    if (!v.is_number()) throw ConfigError(where + ": expected numbers");
    out.push_back(v.get<double>());
  }
  return out;
}

BoxConfig parse_box(const Json& j, const std::string& where) {
  require_keys(j, where, {"lo", "hi"});
  BoxConfig b;
  b.present = true;
  if (!j.contains("lo") || !j.contains("hi"))
    throw ConfigError(where + ": needs both 'lo' and 'hi'");
  b.lo = parse_array(j.at("lo"), where + ".lo");
  b.hi = parse_array(j.at("hi"), where + ".hi");
  if (b.lo.size() != b.hi.size())
    throw ConfigError(where + ": lo/hi size mismatch");
  return b;
}

ModelConfig parse_model(const Json& j, const std::string& where) {
  require_keys(j, where, {"kind", "n", "c", "warping", "t_range"});
  ModelConfig m;
  if (j.contains("kind")) m.kind = j.at("kind").get<std::string>();
  if (j.contains("n")) m.n = j.at("n").get<int>();
  if (j.contains("c")) m.c = j.at("c").get<double>();
  if (j.contains("warping")) {
    require_keys(j.at("warping"), where + ".warping", {"name", "param"});
    if (j.at("warping").contains("name"))
      m.warping = j.at("warping").at("name").get<std::string>();
    if (j.at("warping").contains("param"))
      m.warping_param = j.at("warping").at("param").get<double>();
  }
  if (j.contains("t_range")) {
    const auto r = parse_array(j.at("t_range"), where + ".t_range");
    if (r.size() != 2) throw ConfigError(where + ".t_range: expected [lo, hi]");
    m.t_lo = r[0];
    m.t_hi = r[1];
  }
  return m;
}

FieldConfig parse_field(const Json& j, const std::string& where) {
  require_keys(j, where, {"kind", "p", "t0", "fd_step"});
  FieldConfig f;
  f.present = true;
  if (j.contains("kind")) f.kind = j.at("kind").get<std::string>();
  if (j.contains("p")) f.p = parse_array(j.at("p"), where + ".p");
  if (j.contains("t0")) f.t0 = j.at("t0").get<double>();
  if (j.contains("fd_step")) f.fd_scale = j.at("fd_step").get<double>();
  if (f.kind != "point" && f.kind != "slice")
    throw ConfigError(where + ".kind: expected 'point' or 'slice'");
  return f;
}

ImmersionConfig parse_immersion(const Json& j, const std::string& where) {
  require_keys(j, where,
               {"catalog", "s", "tau", "radius", "height", "eps", "t0", "chi",
                "slope"});
  ImmersionConfig im;
  im.present = true;
  if (!j.contains("catalog")) throw ConfigError(where + ": needs 'catalog'");
  im.catalog = j.at("catalog").get<std::string>();
  if (j.contains("s")) im.s = j.at("s").get<double>();
  if (j.contains("tau")) im.tau = j.at("tau").get<double>();
  if (j.contains("radius")) im.radius = j.at("radius").get<double>();
  if (j.contains("height")) im.height = j.at("height").get<double>();
  if (j.contains("eps")) im.eps = j.at("eps").get<double>();
  if (j.contains("t0")) im.t0 = j.at("t0").get<double>();
  if (j.contains("chi")) im.chi = j.at("chi").get<double>();
  if (j.contains("slope")) im.slope = parse_array(j.at("slope"), where + ".slope");
  return im;
}

CheckConfig parse_check(const Json& j, const std::string& where) {
  require_keys(j, where,
               {"name", "tolerance", "d_min", "d_max", "s", "perturbations"});
  CheckConfig c;
  if (!j.contains("name")) throw ConfigError(where + ": needs 'name'");
  c.name = j.at("name").get<std::string>();
  if (j.contains("tolerance")) c.tolerance = j.at("tolerance").get<double>();
  if (j.contains("d_min")) c.d_min = j.at("d_min").get<double>();
  if (j.contains("d_max")) c.d_max = j.at("d_max").get<double>();
  if (j.contains("s")) c.s = j.at("s").get<double>();
  if (j.contains("perturbations"))
    c.perturbations = j.at("perturbations").get<int>();
  return c;
}

StageConfig parse_stage(const Json& j, const std::string& where) {
  require_keys(j, where,
               {"label", "model", "field", "immersion", "box", "curvature",
                "checks", "samples", "directions", "seed"});
  StageConfig s;
  if (j.contains("label")) s.label = j.at("label").get<std::string>();
  if (j.contains("model")) s.model = parse_model(j.at("model"), where + ".model");
  if (j.contains("field")) s.field = parse_field(j.at("field"), where + ".field");
  if (j.contains("immersion"))
    s.immersion = parse_immersion(j.at("immersion"), where + ".immersion");
  if (j.contains("box")) s.box = parse_box(j.at("box"), where + ".box");
  if (j.contains("curvature")) {
    const Json& c = j.at("curvature");
    require_keys(c, where + ".curvature",
                 {"c", "box", "samples", "beta_max", "pad"});
    if (c.contains("c")) s.curvature.c = c.at("c").get<double>();
    if (c.contains("box"))
      s.curvature.box = parse_box(c.at("box"), where + ".curvature.box");
    if (c.contains("samples"))
      s.curvature.samples = c.at("samples").get<int>();
    if (c.contains("beta_max"))
      s.curvature.beta_max = c.at("beta_max").get<double>();
    if (c.contains("pad")) s.curvature.pad = c.at("pad").get<double>();
  }
  if (j.contains("checks")) {
    int k = 0;
    for (const auto& cj : j.at("checks"))
      s.checks.push_back(
          parse_check(cj, where + ".checks[" + std::to_string(k++) + "]"));
  }
  if (j.contains("samples")) s.samples = j.at("samples").get<int>();
  if (j.contains("directions")) s.directions = j.at("directions").get<int>();
  if (j.contains("seed")) s.seed = j.at("seed").get<std::uint64_t>();
  if (s.samples <= 0)
    throw ConfigError(where + ".samples: must be positive");
  if (s.directions <= 0)
    throw ConfigError(where + ".directions: must be positive");
  if (s.checks.empty()) throw ConfigError(where + ".checks: must be nonempty");
  return s;
}

// ---------------------------------------------------------------- builders

std::unique_ptr<Spacetime> build_model(const ModelConfig& m) {
  if (m.kind == "minkowski") return make_minkowski(m.n);
  if (m.kind == "de_sitter") return make_de_sitter(m.n, m.c);
  if (m.kind == "anti_de_sitter") return make_anti_de_sitter(m.n, m.c);
  if (m.kind == "grw")
    return make_grw(m.n, Warping::from_name(m.warping, m.warping_param), m.t_lo,
                    m.t_hi);
  throw ConfigError("unknown model kind '" + m.kind + "'");
}

DistanceField build_field(const Spacetime& M, const FieldConfig& f) {
  if (f.kind == "point") {
    if (int(f.p.size()) != M.dimension())
      throw ConfigError("field.p: expected " + std::to_string(M.dimension()) +
                        " coordinates");
    Vec p(M.dimension());
    for (int i = 0; i < M.dimension(); ++i) p[i] = f.p[i];
    return DistanceField::from_point(M, p, f.fd_scale);
  }
  return DistanceField::from_slice(M, f.t0, f.fd_scale);
}

Immersion build_immersion(const Spacetime& M, const ImmersionConfig& im) {
  auto chart_point = [&](double fill) {
    return Vec::Constant(M.dimension(), fill).eval();
  };
  if (im.catalog == "hyperboloid" || im.catalog == "shifted-hyperboloid" ||
      im.catalog == "tilted-plane" || im.catalog == "minkowski-graph") {
    const auto* mink = dynamic_cast<const Minkowski*>(&M);
    if (!mink) throw ConfigError("immersion '" + im.catalog + "' needs a Minkowski model");
    Vec slope = Vec::Zero(M.surface_dim());
    for (std::size_t i = 0; i < im.slope.size() && int(i) < M.surface_dim(); ++i)
      slope[int(i)] = im.slope[i];
    if (im.catalog == "hyperboloid")
      return make_hyperboloid(*mink, chart_point(0.0), im.s, im.radius);
    if (im.catalog == "shifted-hyperboloid")
      return make_shifted_hyperboloid(*mink, chart_point(0.0), im.s, im.tau,
                                      im.radius);
    if (im.catalog == "tilted-plane")
      return make_tilted_plane(*mink, im.height, slope, im.radius);
    return make_minkowski_graph(*mink, im.height, slope, im.eps, im.radius);
  }
  if (im.catalog == "slice") return make_slice(M, im.t0, im.radius);
  if (im.catalog == "warped-graph")
    return make_warped_graph(M, im.t0, im.eps, im.radius);
  if (im.catalog == "de-sitter-level-set" || im.catalog == "boosted-geodesic") {
    const auto* ds = dynamic_cast<const DeSitter*>(&M);
    if (!ds) throw ConfigError("immersion '" + im.catalog + "' needs a de Sitter model");
    if (im.catalog == "de-sitter-level-set")
      return make_de_sitter_level_set(*ds, Vec::Zero(M.dimension()), im.s,
                                      im.radius);
    return make_boosted_totally_geodesic(*ds, im.chi, im.radius);
  }
  throw ConfigError("unknown immersion catalog '" + im.catalog + "'");
}

Box to_box(const BoxConfig& b, int dim, const std::string& what) {
  if (!b.present) throw ConfigError(what + ": sampling box required");
  if (int(b.lo.size()) != dim)
    throw ConfigError(what + ": box dimension must be " + std::to_string(dim));
  Box out{Vec(dim), Vec(dim)};
  for (int i = 0; i < dim; ++i) {
    out.lo[i] = b.lo[i];
    out.hi[i] = b.hi[i];
  }
  return out;
}

double default_tolerance(const std::string& name) {
  if (name == "hessian-lower-point" || name == "hessian-upper-point" ||
      name == "hessian-from-slice-lower" || name == "hessian-from-slice-upper")
    return 1e-5;
  if (name == "laplacian-lower-point" || name == "laplacian-from-slice")
    return 1e-4;
  if (name == "gradient-decomposition") return 1e-5;
  if (name == "hessian-identity" || name == "laplacian-identity") return 1e-4;
  if (name.rfind("prop-", 0) == 0) return 1e-4;
  if (name == "gauss-equation" || name == "ricci-lower-bound") return 1e-3;
  if (name.rfind("mean-curvature-", 0) == 0) return 1e-5;
  if (name == "outer-ball") return 1e-6;
  if (name == "bernstein-rigidity") return 0.0;
  if (name == "hyperbolicity-point" || name == "hyperbolicity-slice") return 1e-5;
  if (name == "index-maximality-point" || name == "index-maximality-slice")
    return 1e-8;
  if (name == "jacobi-profile-point" || name == "jacobi-profile-slice")
    return 1e-6;
  if (name == "closed-geodesic-return") return 1e-4;
  if (name == "phi-minimizer") return 0.0;
  return 1e-5;
}

// space-form curvature of a model, if it is one
std::optional<double> space_form_curvature(const Spacetime& M) {
  if (dynamic_cast<const Minkowski*>(&M)) return 0.0;
  if (const auto* ds = dynamic_cast<const DeSitter*>(&M)) return ds->curvature();
  if (const auto* ads = dynamic_cast<const AntiDeSitter*>(&M))
    return ads->curvature();
  if (const auto* g = dynamic_cast<const Grw*>(&M)) {
    if (g->warping().kind == Warping::Kind::Constant) return 0.0;
  }
  return std::nullopt;
}

// ------------------------------------------------------------ check runners

struct StageContext {
  const StageConfig& cfg;
  const RunOverrides& ov;
  const Spacetime& M;
  const std::optional<DistanceField>& field;
  const std::optional<Immersion>& imm;
};

SampleSpec make_sample_spec(const StageContext& ctx, const CheckConfig& chk) {
  SampleSpec s;
  s.box = to_box(ctx.cfg.box, ctx.M.dimension(), "box");
  s.events = ctx.ov.samples.value_or(ctx.cfg.samples);
  s.directions = ctx.cfg.directions;
  s.seed = ctx.ov.seed.value_or(ctx.cfg.seed);
  s.tolerance = ctx.ov.tolerance.value_or(
      chk.tolerance.value_or(default_tolerance(chk.name)));
  if (chk.d_min) s.d_min = *chk.d_min;
  if (chk.d_max) s.d_max = *chk.d_max;
  return s;
}

CurvatureHypothesis make_hypothesis(const StageContext& ctx) {
  CurvatureHypothesis h;
  h.c = ctx.cfg.curvature.c;
  const BoxConfig& bc =
      ctx.cfg.curvature.box.present ? ctx.cfg.curvature.box : ctx.cfg.box;
  h.box = to_box(bc, ctx.M.dimension(), "curvature.box");
  h.samples = ctx.cfg.curvature.samples;
  h.beta_max = ctx.cfg.curvature.beta_max;
  h.pad = ctx.cfg.curvature.pad;
  h.seed = ctx.ov.seed.value_or(ctx.cfg.seed) + 99;
  return h;
}

SurfaceSampleSpec make_surface_spec(const StageContext& ctx,
                                    const CheckConfig& chk) {
  SurfaceSampleSpec s;
  s.points = ctx.ov.samples.value_or(ctx.cfg.samples);
  s.directions = ctx.cfg.directions;
  s.seed = ctx.ov.seed.value_or(ctx.cfg.seed);
  s.tolerance = ctx.ov.tolerance.value_or(
      chk.tolerance.value_or(default_tolerance(chk.name)));
  return s;
}

const DistanceField& need_field(const StageContext& ctx,
                                const std::string& name,
                                DistanceField::SourceKind kind) {
  if (!ctx.field) throw ConfigError(name + ": stage needs a field");
  if (ctx.field->kind() != kind)
    throw ConfigError(name + ": field kind mismatch");
  return *ctx.field;
}

const Immersion& need_immersion(const StageContext& ctx,
                                const std::string& name) {
  if (!ctx.imm) throw ConfigError(name + ": stage needs an immersion");
  return *ctx.imm;
}

// resolve the constant used by theorem-level checks: an explicit curvature.c
// wins, otherwise the exact space-form value
double theorem_constant(const StageContext& ctx, const std::string& name) {
  if (ctx.cfg.curvature.c) return *ctx.cfg.curvature.c;
  const auto c = space_form_curvature(ctx.M);
  if (!c)
    throw ConfigError(name + ": non-space-form model needs curvature.c");
  return *c;
}

// sampling verification of the theorem-level curvature hypothesis on
// non-space-form models; returns a HypothesisViolation report when it fails
std::optional<CheckReport> verify_theorem_bound(const StageContext& ctx,
                                                const std::string& name,
                                                double c, bool need_K_lower,
                                                bool need_ricci) {
  if (space_form_curvature(ctx.M)) return std::nullopt;
  CurvatureHypothesis h = make_hypothesis(ctx);
  CheckReport rep;
  rep.check_id = name;
  rep.tolerance = 0.0;
  if (need_K_lower) {
    const SampledRange r =
        sample_sectional_range(ctx.M, h.box, h.samples, h.beta_max, h.seed);
    rep.notes = "K min sampled " + std::to_string(r.min) + "; ";
    if (r.min < c - 1e-6) {
      rep.status = CheckStatus::HypothesisViolation;
      rep.notes += "K >= c fails for c=" + std::to_string(c) + "; ";
      return rep;
    }
  }
  if (need_ricci) {
    const int n = ctx.M.surface_dim();
    const SampledRange r =
        sample_ricci_range(ctx.M, h.box, h.samples, h.beta_max, h.seed);
    rep.notes += "Ric min sampled " + std::to_string(r.min) + "; ";
    if (r.min < -n * c - 1e-6) {
      rep.status = CheckStatus::HypothesisViolation;
      rep.notes += "Ric >= -n c fails for c=" + std::to_string(c) + "; ";
      return rep;
    }
  }
  return std::nullopt;
}

CheckReport run_check(const StageContext& ctx, const CheckConfig& chk) {
  const std::string& name = chk.name;
  const auto Point = DistanceField::SourceKind::Point;
  const auto Slice = DistanceField::SourceKind::Slice;

  if (name == "hessian-lower-point")
    return check_hessian_lower_point(need_field(ctx, name, Point),
                                     make_hypothesis(ctx),
                                     make_sample_spec(ctx, chk));
  if (name == "hessian-upper-point")
    return check_hessian_upper_point(need_field(ctx, name, Point),
                                     make_hypothesis(ctx),
                                     make_sample_spec(ctx, chk));
  if (name == "laplacian-lower-point")
    return check_laplacian_lower_point(need_field(ctx, name, Point),
                                       make_hypothesis(ctx),
                                       make_sample_spec(ctx, chk));
  if (name == "hessian-from-slice-lower")
    return check_hessian_from_slice(need_field(ctx, name, Slice),
                                    SliceBound::Lower, make_hypothesis(ctx),
                                    make_sample_spec(ctx, chk));
  if (name == "hessian-from-slice-upper")
    return check_hessian_from_slice(need_field(ctx, name, Slice),
                                    SliceBound::Upper, make_hypothesis(ctx),
                                    make_sample_spec(ctx, chk));
  if (name == "laplacian-from-slice")
    return check_laplacian_from_slice(need_field(ctx, name, Slice),
                                      make_hypothesis(ctx),
                                      make_sample_spec(ctx, chk));
  if (name == "gradient-decomposition")
    return check_gradient_decomposition(need_immersion(ctx, name), *ctx.field,
                                        make_surface_spec(ctx, chk));
  if (name == "hessian-identity")
    return check_hessian_identity(need_immersion(ctx, name), *ctx.field,
                                  make_surface_spec(ctx, chk));
  if (name == "laplacian-identity")
    return check_laplacian_identity(need_immersion(ctx, name), *ctx.field,
                                    make_surface_spec(ctx, chk));

  const auto prop = [&](PropositionKind kind) {
    return check_proposition_bounds(need_immersion(ctx, name), *ctx.field, kind,
                                    make_hypothesis(ctx),
                                    make_surface_spec(ctx, chk));
  };
  if (name == "prop-laplacian-lower") return prop(PropositionKind::LaplacianLower);
  if (name == "prop-laplacian-upper") return prop(PropositionKind::LaplacianUpper);
  if (name == "prop-laplacian-ricci") return prop(PropositionKind::LaplacianRicci);
  if (name == "prop-hessian-lower") return prop(PropositionKind::HessianLower);
  if (name == "prop-hessian-upper") return prop(PropositionKind::HessianUpper);
  if (name == "prop-achro-laplacian-lower")
    return prop(PropositionKind::AchroLaplacianLower);
  if (name == "prop-achro-laplacian-upper")
    return prop(PropositionKind::AchroLaplacianUpper);
  if (name == "prop-achro-laplacian-ricci")
    return prop(PropositionKind::AchroLaplacianRicci);

  if (name == "gauss-equation")
    return check_gauss_equation(need_immersion(ctx, name),
                                make_surface_spec(ctx, chk));
  if (name == "ricci-lower-bound")
    return check_ricci_lower_bound(need_immersion(ctx, name),
                                   theorem_constant(ctx, name),
                                   make_surface_spec(ctx, chk));

  if (name.rfind("mean-curvature-", 0) == 0) {
    MeanCurvatureTheorem which;
    bool K_lower = false, ricci = false;
    if (name == "mean-curvature-point-upper") {
      which = MeanCurvatureTheorem::PointUpper;
      ricci = true;
    } else if (name == "mean-curvature-point-lower") {
      which = MeanCurvatureTheorem::PointLower;
      K_lower = true;
    } else if (name == "mean-curvature-slice-upper") {
      which = MeanCurvatureTheorem::SliceUpper;
      ricci = true;
    } else if (name == "mean-curvature-slice-lower") {
      which = MeanCurvatureTheorem::SliceLower;
      K_lower = true;
    } else {
      throw ConfigError("unknown check name '" + name + "'");
    }
    const double c = theorem_constant(ctx, name);
    if (auto rep = verify_theorem_bound(ctx, name, c, K_lower, ricci))
      return *rep;
    if (which == MeanCurvatureTheorem::SliceLower) {
      const SampledRange shape = slice_shape_eigenvalue_range(
          need_field(ctx, name, Slice), ctx.cfg.seed + 11);
      if (shape.max > 1e-8) {
        CheckReport rep;
        rep.check_id = name;
        rep.status = CheckStatus::HypothesisViolation;
        rep.notes = "source slice shape operator not negative semi-definite; ";
        return rep;
      }
    }
    return check_mean_curvature_theorem(need_immersion(ctx, name), *ctx.field,
                                        which, c, make_surface_spec(ctx, chk));
  }

  if (name == "outer-ball") {
    const double c = theorem_constant(ctx, name);
    if (auto rep = verify_theorem_bound(ctx, name, c, true, false)) return *rep;
    return check_outer_ball(need_immersion(ctx, name), *ctx.field, c,
                            make_surface_spec(ctx, chk));
  }
  if (name == "bernstein-rigidity")
    return check_bernstein_rigidity(need_immersion(ctx, name), *ctx.field,
                                    theorem_constant(ctx, name),
                                    make_surface_spec(ctx, chk));
  if (name == "hyperbolicity-point" || name == "hyperbolicity-slice") {
    const double c = theorem_constant(ctx, name);
    if (auto rep = verify_theorem_bound(ctx, name, c, true, false)) return *rep;
    return check_hyperbolicity_superharmonic(
        need_immersion(ctx, name), *ctx.field,
        name == "hyperbolicity-point" ? HyperbolicityVariant::Point
                                      : HyperbolicityVariant::Slice,
        c, make_surface_spec(ctx, chk));
  }

  if (name == "index-maximality-point") {
    const DistanceField& f = need_field(ctx, name, Point);
    Rng rng(ctx.ov.seed.value_or(ctx.cfg.seed) + 17);
    const Vec p = f.source_point();
    const Vec v = random_unit_timelike(ctx.M, p, rng, 0.5);
    const Geodesic g =
        integrate_geodesic(ctx.M, p, v, chk.s, default_steps(chk.s));
    const TransportedField J =
        integrate_jacobi(g, Vec::Zero(ctx.M.dimension()), g.frame(0).col(0));
    MaximalityOptions opts;
    opts.perturbations = chk.perturbations;
    opts.seed = ctx.ov.seed.value_or(ctx.cfg.seed);
    opts.tolerance = chk.tolerance.value_or(default_tolerance(name));
    return check_index_maximality(g, J, opts);
  }
  if (name == "index-maximality-slice") {
    const DistanceField& f = need_field(ctx, name, Slice);
    const Immersion N = make_slice(ctx.M, f.slice_t0(), 1.0);
    Vec x0 = Vec::Constant(ctx.M.surface_dim(), 0.1);
    Vec xi = Vec::Zero(ctx.M.surface_dim());
    xi[0] = 1.0;
    const NJacobi nj = n_jacobi_field(N, x0, xi, chk.s, default_steps(chk.s));
    MaximalityOptions opts;
    opts.perturbations = chk.perturbations;
    opts.seed = ctx.ov.seed.value_or(ctx.cfg.seed);
    opts.tolerance = chk.tolerance.value_or(default_tolerance(name));
    opts.boundary_form =
        shape_boundary_form(induced_geometry(N, x0), nj.geodesic);
    opts.free_initial_endpoint = true;
    return check_index_maximality(nj.geodesic, nj.field, opts);
  }

  if (name == "jacobi-profile-point") {
    const DistanceField& f = need_field(ctx, name, Point);
    const auto c = space_form_curvature(ctx.M);
    if (!c) throw ConfigError(name + ": needs a space-form model");
    Rng rng(ctx.ov.seed.value_or(ctx.cfg.seed) + 19);
    const Vec p = f.source_point();
    const Vec v = random_unit_timelike(ctx.M, p, rng, 0.5);
    const Geodesic g =
        integrate_geodesic(ctx.M, p, v, chk.s, default_steps(chk.s));
    const TransportedField J =
        integrate_jacobi(g, Vec::Zero(ctx.M.dimension()), g.frame(0).col(0));
    CheckReport rep;
    rep.check_id = name;
    rep.seed = ctx.ov.seed.value_or(ctx.cfg.seed);
    rep.tolerance = chk.tolerance.value_or(default_tolerance(name));
    const double end = J.lam[g.nodes() - 1].norm();
    for (int k = 0; k < g.nodes(); k += std::max(1, g.nodes() / 200))
      rep.margins.push_back(-std::abs(
          J.lam[k].norm() / end - jacobi_ratio_point(*c, chk.s, g.parameter(k))));
    rep.finalize();
    return rep;
  }
  if (name == "jacobi-profile-slice") {
    const DistanceField& f = need_field(ctx, name, Slice);
    const Immersion N = make_slice(ctx.M, f.slice_t0(), 1.0);
    Vec x0 = Vec::Constant(ctx.M.surface_dim(), 0.1);
    Vec xi = Vec::Zero(ctx.M.surface_dim());
    xi[0] = 1.0;
    const NJacobi nj = n_jacobi_field(N, x0, xi, chk.s, default_steps(chk.s));
    CheckReport rep;
    rep.check_id = name;
    rep.seed = ctx.ov.seed.value_or(ctx.cfg.seed);
    rep.tolerance = chk.tolerance.value_or(default_tolerance(name));
    const Geodesic& g = nj.geodesic;
    // expected amplitude: slice ratio in space forms, a(t0+t)/a(t0) in GRW
    const auto c = space_form_curvature(ctx.M);
    const auto* grw = dynamic_cast<const Grw*>(&ctx.M);
    const double amp0 = nj.field.lam[0].norm();
    const double ampEnd = nj.field.lam[g.nodes() - 1].norm();
    for (int k = 0; k < g.nodes(); k += std::max(1, g.nodes() / 200)) {
      const double t = g.parameter(k);
      double expect, actual;
      if (grw && !c) {
        const double t0 = f.slice_t0();
        expect = grw->warping().a(t0 + t) / grw->warping().a(t0);
        actual = nj.field.lam[k].norm() / amp0;
      } else if (c) {
        expect = jacobi_ratio_slice(*c, chk.s, t);
        actual = nj.field.lam[k].norm() / ampEnd;
      } else {
        throw ConfigError(name + ": needs a space-form or GRW model");
      }
      rep.margins.push_back(-std::abs(actual - expect));
    }
    rep.finalize();
    return rep;
  }

  if (name == "closed-geodesic-return") {
    const auto* ads = dynamic_cast<const AntiDeSitter*>(&ctx.M);
    if (!ads) throw ConfigError(name + ": needs an anti-de Sitter model");
    Rng rng(ctx.ov.seed.value_or(ctx.cfg.seed) + 23);
    Vec p = Vec::Zero(ctx.M.dimension());
    p[1] = 0.3;
    const Vec v = random_unit_timelike(ctx.M, p, rng, 0.6);
    const double period = 2.0 * kPi / std::sqrt(-ads->curvature());
    const Geodesic g =
        integrate_geodesic(ctx.M, p, v, period, default_steps(period));
    CheckReport rep;
    rep.check_id = name;
    rep.seed = ctx.ov.seed.value_or(ctx.cfg.seed);
    rep.tolerance = chk.tolerance.value_or(default_tolerance(name));
    rep.margins.push_back(
        -(ads->embed(g.position(g.nodes() - 1)) - ads->embed(g.position(0)))
             .norm());
    rep.finalize();
    return rep;
  }

  if (name == "phi-minimizer") {
    CheckReport rep;
    rep.check_id = name;
    rep.tolerance = chk.tolerance.value_or(default_tolerance(name));
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
      rep.margins.push_back(1e-3 - std::abs(best_x - std::sqrt(double(n - 2))));
    }
    rep.finalize();
    return rep;
  }

  throw ConfigError("unknown check name '" + name + "'");
}

} // namespace

// --------------------------------------------------------------- execution

std::vector<CheckReport> run_experiment(const ExperimentConfig& cfg,
                                        const RunOverrides& ov) {
  std::vector<CheckReport> out;
  for (const StageConfig& stage : cfg.stages) {
    auto model = build_model(stage.model);
    FieldConfig fc = stage.field;
    if (ov.fd_step) fc.fd_scale = *ov.fd_step;
    std::optional<DistanceField> field;
    if (fc.present) field.emplace(build_field(*model, fc));
    std::optional<Immersion> imm;
    if (stage.immersion.present)
      imm.emplace(build_immersion(*model, stage.immersion));
    StageContext ctx{stage, ov, *model, field, imm};
    for (const CheckConfig& chk : stage.checks) {
      CheckReport rep = run_check(ctx, chk);
      if (!stage.label.empty()) rep.check_id = stage.label + "/" + rep.check_id;
      out.push_back(std::move(rep));
    }
  }
  return out;
}

RunReport run_experiments(const std::vector<ExperimentConfig>& configs,
                          const std::vector<std::string>& selected_ids,
                          const RunOverrides& ov) {
  std::vector<const ExperimentConfig*> todo;
  if (selected_ids.empty()) {
    for (const auto& c : configs) todo.push_back(&c);
  } else {
    for (const std::string& id : selected_ids) {
      const ExperimentConfig* found = nullptr;
      for (const auto& c : configs)
        if (c.id == id) found = &c;
      if (!found) throw ConfigError("unknown experiment id '" + id + "'");
      todo.push_back(found);
    }
  }

  RunReport report;
  for (const ExperimentConfig* cfg : todo) {
    ExperimentResult result;
    result.id = cfg->id;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      result.checks = run_experiment(*cfg, ov);
    } catch (const std::exception& e) {
      result.error = e.what();
      report.had_error = true;
    }
    result.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    for (const CheckReport& c : result.checks) {
      if (c.counts_as_skip())
        ++report.skip_count;
      else if (c.pass())
        ++report.pass_count;
      else
        ++report.fail_count;
    }
    report.experiments.push_back(std::move(result));
  }
  return report;
}

std::vector<ExperimentConfig> load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw ConfigError(std::string("config parse error: ") + e.what());
  }
  require_keys(j, "config", {"experiments"});
  if (!j.contains("experiments"))
    throw ConfigError("config: needs 'experiments'");
  std::vector<ExperimentConfig> out;
  int i = 0;
  for (const auto& ej : j.at("experiments")) {
    const std::string where = "experiments[" + std::to_string(i++) + "]";
    require_keys(ej, where, {"id", "description", "stages"});
    ExperimentConfig cfg;
    if (!ej.contains("id")) throw ConfigError(where + ": needs 'id'");
    cfg.id = ej.at("id").get<std::string>();
    if (ej.contains("description"))
      cfg.description = ej.at("description").get<std::string>();
    if (!ej.contains("stages") || ej.at("stages").empty())
      throw ConfigError(where + ".stages: must be a nonempty array");
    int k = 0;
    for (const auto& sj : ej.at("stages"))
      cfg.stages.push_back(
          parse_stage(sj, where + ".stages[" + std::to_string(k++) + "]"));
    out.push_back(std::move(cfg));
  }
  return out;
}

std::string list_experiments(const std::vector<ExperimentConfig>& configs) {
  std::string out;
  for (const auto& c : configs) out += c.id + " - " + c.description + "\n";
  return out;
}

// ---------------------------------------------------------------- emission

namespace {

std::string fmt_double(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

Json check_to_json(const CheckReport& c, bool verbose) {
  Json j;
  j["check"] = c.check_id;
  j["status"] = to_string(c.status);
  j["samples"] = c.samples;
  if (std::isfinite(c.worst_margin))
    j["worst_margin"] = c.worst_margin;
  else
    j["worst_margin"] = nullptr;
  j["tolerance"] = c.tolerance;
  j["seed"] = c.seed;
  j["fd_step"] = c.fd_step;
  if (std::isfinite(c.curvature_bound))
    j["curvature_bound"] = c.curvature_bound;
  else
    j["curvature_bound"] = nullptr;
  j["notes"] = c.notes;
  if (verbose) j["margins"] = c.margins;
  return j;
}

} // namespace

void emit_structured(const RunReport& report, std::ostream& os, bool verbose,
                     bool timings) {
  Json j;
  j["tool"] = Json{{"name", kToolName}, {"version", kToolVersion}};
  j["experiments"] = Json::array();
  for (const auto& e : report.experiments) {
    Json ej;
    ej["id"] = e.id;
    if (!e.error.empty()) ej["error"] = e.error;
    ej["checks"] = Json::array();
    for (const auto& c : e.checks) ej["checks"].push_back(check_to_json(c, verbose));
    j["experiments"].push_back(std::move(ej));
  }
  j["aggregate"] = Json{{"pass", report.aggregate_pass()},
                        {"passed", report.pass_count},
                        {"failed", report.fail_count},
                        {"skipped", report.skip_count}};
  if (timings) {
    Json t;
    for (const auto& e : report.experiments) t[e.id] = e.wall_seconds;
    j["timing"] = std::move(t);
  }
  os << j.dump(2) << "\n";
}

void emit_tabular(const RunReport& report, std::ostream& os) {
  os << "experiment,check,samples,worst_margin,tolerance,status\n";
  for (const auto& e : report.experiments)
    for (const auto& c : e.checks)
      os << e.id << "," << c.check_id << "," << c.samples << ","
         << fmt_double(c.worst_margin) << "," << fmt_double(c.tolerance) << ","
         << to_string(c.status) << "\n";
}

// ----------------------------------------------------------------- builtins

namespace {

BoxConfig box_of(std::initializer_list<double> lo,
                 std::initializer_list<double> hi) {
  BoxConfig b;
  b.present = true;
  b.lo = lo;
  b.hi = hi;
  return b;
}

CheckConfig chk(const char* name) {
  CheckConfig c;
  c.name = name;
  return c;
}

CheckConfig chk_tol(const char* name, double tol) {
  CheckConfig c;
  c.name = name;
  c.tolerance = tol;
  return c;
}

ExperimentConfig space_form_equalities() {
  ExperimentConfig e;
  e.id = "space-form-equalities";
  e.description =
      "pinched Hessian/Laplacian equalities for the point distance in "
      "Minkowski and de Sitter";
  {
    StageConfig s;
    s.label = "minkowski";
    s.model.kind = "minkowski";
    s.model.n = 3;
    s.field.present = true;
    s.field.kind = "point";
    s.field.p = {0, 0, 0, 0};
    s.box = box_of({-0.5, -0.5, -0.5, 1.0}, {0.5, 0.5, 0.5, 2.2});
    s.curvature.c = 0.0;
    s.samples = 1000;
    s.directions = 8;
    s.seed = 2024;
    s.checks = {chk("hessian-lower-point"), chk("hessian-upper-point"),
                chk("laplacian-lower-point")};
    e.stages.push_back(s);
  }
  {
    StageConfig s;
    s.label = "de-sitter-c1";
    s.model.kind = "de_sitter";
    s.model.n = 2;
    s.model.c = 1.0;
    s.field.present = true;
    s.field.kind = "point";
    s.field.p = {0, 0, 0};
    s.box = box_of({0.7, -0.12, -0.12}, {1.6, 0.12, 0.12});
    s.curvature.c = 1.0;
    s.samples = 1000;
    s.directions = 8;
    s.seed = 2025;
    s.checks = {chk("hessian-lower-point"), chk("hessian-upper-point"),
                chk("laplacian-lower-point")};
    e.stages.push_back(s);
  }
  {
    StageConfig s;
    s.label = "de-sitter-c2";
    s.model.kind = "de_sitter";
    s.model.n = 2;
    s.model.c = 2.0;
    s.field.present = true;
    s.field.kind = "point";
    s.field.p = {0, 0, 0};
    s.box = box_of({0.6, -0.1, -0.1}, {1.2, 0.1, 0.1});
    s.curvature.c = 2.0;
    s.samples = 1000;
    s.directions = 8;
    s.seed = 2026;
    s.checks = {chk("hessian-lower-point"), chk("hessian-upper-point"),
                chk("laplacian-lower-point")};
    e.stages.push_back(s);
  }
  return e;
}

ExperimentConfig grw_inequalities() {
  ExperimentConfig e;
  e.id = "grw-inequalities";
  e.description =
      "comparison inequalities with empirically sampled curvature bounds in "
      "the sin-perturbed GRW model";
  {
    StageConfig s;
    s.label = "point";
    s.model.kind = "grw";
    s.model.n = 2;
    s.model.warping = "sinp";
    s.model.warping_param = 0.1;
    s.model.t_lo = -4.0;
    s.model.t_hi = 4.0;
    s.field.present = true;
    s.field.kind = "point";
    s.field.p = {-1.5, 0.0, 0.0};
    s.box = box_of({-0.4, -0.4, -0.4}, {0.6, 0.4, 0.4});
    s.curvature.box = box_of({-1.6, -0.5, -0.5}, {0.6, 0.5, 0.5});
    s.curvature.beta_max = 1.6;
    s.samples = 1000;
    s.directions = 8;
    s.seed = 31;
    s.checks = {chk("hessian-lower-point"), chk("hessian-upper-point"),
                chk("laplacian-lower-point")};
    e.stages.push_back(s);
  }
  {
    StageConfig s;
    s.label = "propositions";
    s.model.kind = "grw";
    s.model.n = 2;
    s.model.warping = "sinp";
    s.model.warping_param = 0.1;
    s.model.t_lo = -4.0;
    s.model.t_hi = 4.0;
    s.field.present = true;
    s.field.kind = "point";
    s.field.p = {-1.5, 0.0, 0.0};
    s.immersion.present = true;
    s.immersion.catalog = "warped-graph";
    s.immersion.t0 = 0.6;
    s.immersion.eps = 0.08;
    s.immersion.radius = 1.0;
    s.box = box_of({-0.4, -1.2, -1.2}, {1.0, 1.2, 1.2});
    s.curvature.box = box_of({-1.6, -1.2, -1.2}, {1.0, 1.2, 1.2});
    s.curvature.beta_max = 1.6;
    s.samples = 1000;
    s.directions = 4;
    s.seed = 37;
    s.checks = {chk("prop-laplacian-lower"), chk("prop-laplacian-upper"),
                chk("prop-laplacian-ricci"), chk("prop-hessian-lower"),
                chk("prop-hessian-upper")};
    e.stages.push_back(s);
  }
  {
    StageConfig s;
    s.label = "slice-contracting";
    s.model.kind = "grw";
    s.model.n = 2;
    s.model.warping = "sinp";
    s.model.warping_param = 0.1;
    s.model.t_lo = -4.0;
    s.model.t_hi = 8.0;
    s.field.present = true;
    s.field.kind = "slice";
    s.field.t0 = kPi;
    s.box = box_of({kPi + 0.4, -0.6, -0.6}, {kPi + 1.6, 0.6, 0.6});
    // curvature hypothesis over the whole normal tube from the slice
    s.curvature.box = box_of({kPi, -0.7, -0.7}, {kPi + 1.6, 0.7, 0.7});
    s.samples = 1000;
    s.directions = 8;
    s.seed = 41;
    s.checks = {chk("hessian-from-slice-lower"), chk("laplacian-from-slice")};
    e.stages.push_back(s);
  }
  {
    StageConfig s;
    s.label = "slice-expanding";
    s.model.kind = "grw";
    s.model.n = 2;
    s.model.warping = "sinp";
    s.model.warping_param = 0.1;
    s.model.t_lo = -4.0;
    s.model.t_hi = 8.0;
    s.field.present = true;
    s.field.kind = "slice";
    s.field.t0 = 0.0;
    s.box = box_of({0.4, -0.6, -0.6}, {1.6, 0.6, 0.6});
    s.curvature.box = box_of({0.0, -0.7, -0.7}, {1.6, 0.7, 0.7});
    s.samples = 1000;
    s.directions = 8;
    s.seed = 43;
    s.checks = {chk("hessian-from-slice-upper"), chk("laplacian-from-slice")};
    e.stages.push_back(s);
  }
  {
    StageConfig s;
    s.label = "achro-propositions";
    s.model.kind = "grw";
    s.model.n = 2;
    s.model.warping = "sinp";
    s.model.warping_param = 0.1;
    s.model.t_lo = -4.0;
    s.model.t_hi = 8.0;
    s.field.present = true;
    s.field.kind = "slice";
    s.field.t0 = kPi;
    s.immersion.present = true;
    s.immersion.catalog = "warped-graph";
    s.immersion.t0 = kPi + 1.0;
    s.immersion.eps = 0.08;
    s.immersion.radius = 1.0;
    s.box = box_of({kPi, -1.2, -1.2}, {kPi + 1.3, 1.2, 1.2});
    s.samples = 1000;
    s.directions = 4;
    s.seed = 47;
    s.checks = {chk("prop-achro-laplacian-lower"),
                chk("prop-achro-laplacian-ricci")};
    e.stages.push_back(s);
  }
  {
    StageConfig s;
    s.label = "achro-propositions-expanding";
    s.model.kind = "grw";
    s.model.n = 2;
    s.model.warping = "sinp";
    s.model.warping_param = 0.1;
    s.model.t_lo = -4.0;
    s.model.t_hi = 8.0;
    s.field.present = true;
    s.field.kind = "slice";
    s.field.t0 = 0.0; // a'(0) > 0: negative semi-definite shape operator
    s.immersion.present = true;
    s.immersion.catalog = "warped-graph";
    s.immersion.t0 = 1.0;
    s.immersion.eps = 0.08;
    s.immersion.radius = 1.0;
    s.box = box_of({0.0, -1.2, -1.2}, {1.3, 1.2, 1.2});
    s.samples = 1000;
    s.directions = 4;
    s.seed = 49;
    s.checks = {chk("prop-achro-laplacian-upper"),
                chk("prop-achro-laplacian-ricci")};
    e.stages.push_back(s);
  }
  return e;
}

ExperimentConfig mean_curvature_theorems() {
  ExperimentConfig e;
  e.id = "mean-curvature-theorems";
  e.description =
      "finite-sample monotone checks of the mean-curvature bounds on the "
      "constant-H catalog";
  {
    StageConfig s;
    s.label = "minkowski-level-set";
    s.model.kind = "minkowski";
    s.model.n = 2;
    s.field.present = true;
    s.field.kind = "point";
    s.field.p = {0, 0, 0};
    s.immersion.present = true;
    s.immersion.catalog = "hyperboloid";
    s.immersion.s = 2.0;
    s.immersion.radius = 1.2;
    s.samples = 200;
    s.seed = 53;
    s.checks = {chk_tol("mean-curvature-point-upper", 1e-6),
                chk_tol("mean-curvature-point-lower", 1e-6),
                chk("outer-ball"), chk("bernstein-rigidity")};
    e.stages.push_back(s);
  }
  {
    StageConfig s;
    s.label = "minkowski-shifted";
    s.model.kind = "minkowski";
    s.model.n = 2;
    s.field.present = true;
    s.field.kind = "point";
    s.field.p = {0, 0, 0};
    s.immersion.present = true;
    s.immersion.catalog = "shifted-hyperboloid";
    s.immersion.s = 2.0;
    s.immersion.tau = 1.0;
    s.immersion.radius = 1.2;
    s.samples = 200;
    s.seed = 59;
    s.checks = {chk_tol("mean-curvature-point-lower", 1e-4),
                chk("mean-curvature-point-upper"), chk("outer-ball"),
                chk("bernstein-rigidity")};
    e.stages.push_back(s);
  }
  {
    StageConfig s;
    s.label = "de-sitter-level-set";
    s.model.kind = "de_sitter";
    s.model.n = 2;
    s.model.c = 1.0;
    s.field.present = true;
    s.field.kind = "point";
    s.field.p = {0, 0, 0};
    s.immersion.present = true;
    s.immersion.catalog = "de-sitter-level-set";
    s.immersion.s = 1.0;
    s.immersion.radius = 0.6;
    s.samples = 200;
    s.seed = 61;
    s.checks = {chk("mean-curvature-point-upper"),
                chk("mean-curvature-point-lower"), chk("bernstein-rigidity")};
    e.stages.push_back(s);
  }
  {
    StageConfig s;
    s.label = "de-sitter-slices";
    s.model.kind = "de_sitter";
    s.model.n = 2;
    s.model.c = 1.0;
    s.field.present = true;
    s.field.kind = "slice";
    s.field.t0 = 0.0;
    s.immersion.present = true;
    s.immersion.catalog = "slice";
    s.immersion.t0 = 0.8;
    s.immersion.radius = 0.8;
    s.samples = 200;
    s.seed = 67;
    s.checks = {chk("mean-curvature-slice-lower"),
                chk_tol("mean-curvature-slice-upper", 1e-4)};
    e.stages.push_back(s);
  }
  {
    StageConfig s;
    s.label = "grw-exp-slices";
    s.model.kind = "grw";
    s.model.n = 2;
    s.model.warping = "exp";
    s.model.t_lo = -3.0;
    s.model.t_hi = 3.0;
    s.field.present = true;
    s.field.kind = "slice";
    s.field.t0 = 0.0;
    s.immersion.present = true;
    s.immersion.catalog = "slice";
    s.immersion.t0 = 0.5;
    s.immersion.radius = 0.8;
    s.box = box_of({0.0, -0.8, -0.8}, {1.0, 0.8, 0.8});
    s.curvature.c = 1.0;
    s.samples = 200;
    s.seed = 71;
    s.checks = {chk("mean-curvature-slice-lower"),
                chk("mean-curvature-slice-upper")};
    e.stages.push_back(s);
  }
  return e;
}

ExperimentConfig hyperbolicity() {
  ExperimentConfig e;
  e.id = "hyperbolicity";
  e.description =
      "superharmonicity of the restricted distance under the mean-curvature "
      "hypothesis, and the gradient-weight minimizer";
  {
    StageConfig s;
    s.label = "minkowski-maximal";
    s.model.kind = "minkowski";
    s.model.n = 2;
    s.field.present = true;
    s.field.kind = "point";
    s.field.p = {0, 0, 0};
    s.immersion.present = true;
    s.immersion.catalog = "tilted-plane";
    s.immersion.height = 2.0;
    s.immersion.slope = {0.3, -0.1};
    s.immersion.radius = 0.5;
    s.samples = 400;
    s.seed = 73;
    s.checks = {chk("hyperbolicity-point"), chk("phi-minimizer")};
    e.stages.push_back(s);
  }
  {
    StageConfig s;
    s.label = "minkowski-maximal-n3";
    s.model.kind = "minkowski";
    s.model.n = 3;
    s.field.present = true;
    s.field.kind = "point";
    s.field.p = {0, 0, 0, 0};
    s.immersion.present = true;
    s.immersion.catalog = "tilted-plane";
    s.immersion.height = 2.0;
    s.immersion.slope = {0.2, 0.1, -0.15};
    s.immersion.radius = 0.5;
    s.samples = 300;
    s.seed = 79;
    s.checks = {chk("hyperbolicity-point")};
    e.stages.push_back(s);
  }
  {
    StageConfig s;
    s.label = "minkowski-slice-variant";
    s.model.kind = "minkowski";
    s.model.n = 2;
    s.field.present = true;
    s.field.kind = "slice";
    s.field.t0 = 0.0;
    s.immersion.present = true;
    s.immersion.catalog = "tilted-plane";
    s.immersion.height = 2.0;
    s.immersion.slope = {0.3, -0.1};
    s.immersion.radius = 0.5;
    s.samples = 400;
    s.seed = 83;
    s.checks = {chk("hyperbolicity-slice")};
    e.stages.push_back(s);
  }
  {
    StageConfig s;
    s.label = "de-sitter-boosted";
    s.model.kind = "de_sitter";
    s.model.n = 2;
    s.model.c = 1.0;
    s.field.present = true;
    s.field.kind = "slice";
    s.field.t0 = 0.0;
    s.immersion.present = true;
    s.immersion.catalog = "boosted-geodesic";
    s.immersion.chi = 0.8;
    s.immersion.radius = 0.5;
    s.samples = 300;
    s.seed = 89;
    s.checks = {chk("hyperbolicity-slice")};
    e.stages.push_back(s);
  }
  {
    StageConfig s;
    s.label = "guard-level-set";
    s.model.kind = "de_sitter";
    s.model.n = 3;
    s.model.c = 1.0;
    s.field.present = true;
    s.field.kind = "point";
    s.field.p = {0, 0, 0, 0};
    s.immersion.present = true;
    s.immersion.catalog = "de-sitter-level-set";
    s.immersion.s = 1.0;
    s.immersion.radius = 0.5;
    s.samples = 60;
    s.seed = 97;
    s.checks = {chk("hyperbolicity-point")}; // hypothesis violation expected
    e.stages.push_back(s);
  }
  return e;
}

ExperimentConfig achronal_slice_suite() {
  ExperimentConfig e;
  e.id = "achronal-slice-suite";
  e.description =
      "distance-from-slice comparisons: totally geodesic equalities, GRW "
      "branches, N-Jacobi profiles and the closed anti-de Sitter geodesic";
  {
    StageConfig s;
    s.label = "minkowski-slice";
    s.model.kind = "minkowski";
    s.model.n = 2;
    s.field.present = true;
    s.field.kind = "slice";
    s.field.t0 = 0.0;
    s.box = box_of({-0.8, -0.8, 0.4}, {0.8, 0.8, 1.8});
    s.curvature.c = 0.0;
    s.samples = 500;
    s.directions = 8;
    s.seed = 101;
    CheckConfig prof = chk("jacobi-profile-slice");
    prof.s = 1.5;
    CheckConfig maxi = chk("index-maximality-slice");
    maxi.s = 1.5;
    s.checks = {chk("hessian-from-slice-lower"), chk("hessian-from-slice-upper"),
                chk("laplacian-from-slice"), prof, maxi};
    e.stages.push_back(s);
  }
  {
    StageConfig s;
    s.label = "de-sitter-Nc";
    s.model.kind = "de_sitter";
    s.model.n = 2;
    s.model.c = 1.0;
    s.field.present = true;
    s.field.kind = "slice";
    s.field.t0 = 0.0;
    s.box = box_of({0.4, -0.4, -0.4}, {1.5, 0.4, 0.4});
    s.curvature.c = 1.0;
    s.samples = 500;
    s.directions = 8;
    s.seed = 103;
    CheckConfig prof = chk("jacobi-profile-slice");
    prof.s = 1.2;
    CheckConfig maxi = chk("index-maximality-slice");
    maxi.s = 1.2;
    s.checks = {chk("hessian-from-slice-lower"), chk("hessian-from-slice-upper"),
                chk("laplacian-from-slice"), prof, maxi};
    e.stages.push_back(s);
  }
  {
    StageConfig s;
    s.label = "anti-de-sitter-Nc";
    s.model.kind = "anti_de_sitter";
    s.model.n = 2;
    s.model.c = -1.0;
    s.field.present = true;
    s.field.kind = "slice";
    s.field.t0 = 0.0;
    s.box = box_of({0.3, -0.35, -0.35}, {0.9, 0.35, 0.35});
    s.curvature.c = -1.0;
    s.samples = 400;
    s.directions = 6;
    s.seed = 107;
    CheckConfig lower = chk("hessian-from-slice-lower");
    lower.d_max = 1.1;
    CheckConfig upper = chk("hessian-from-slice-upper");
    upper.d_max = 1.1;
    CheckConfig prof = chk("jacobi-profile-slice");
    prof.s = 1.0;
    s.checks = {lower, upper, prof, chk("closed-geodesic-return")};
    e.stages.push_back(s);
  }
  {
    StageConfig s;
    s.label = "grw-exp-slice";
    s.model.kind = "grw";
    s.model.n = 2;
    s.model.warping = "exp";
    s.model.t_lo = -3.0;
    s.model.t_hi = 3.0;
    s.field.present = true;
    s.field.kind = "slice";
    s.field.t0 = 0.0;
    s.box = box_of({0.4, -0.6, -0.6}, {1.6, 0.6, 0.6});
    s.curvature.box = box_of({0.0, -0.7, -0.7}, {1.6, 0.7, 0.7});
    s.samples = 500;
    s.directions = 8;
    s.seed = 109;
    CheckConfig prof = chk("jacobi-profile-slice");
    prof.s = 1.0;
    s.checks = {chk("hessian-from-slice-upper"), chk("laplacian-from-slice"),
                prof};
    e.stages.push_back(s);
  }
  return e;
}

} // namespace

std::vector<ExperimentConfig> builtin_experiments() {
  return {space_form_equalities(), grw_inequalities(), mean_curvature_theorems(),
          hyperbolicity(), achronal_slice_suite()};
}

} // namespace lorentz

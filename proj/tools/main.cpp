// Command-line interface: spectra, wavefunction samples, verification
// suites, geometry tables, and flat-limit tables as deterministic CSV/JSON.
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "h3landau/assembly.hpp"
#include "h3landau/axial.hpp"
#include "h3landau/errors.hpp"
#include "h3landau/geometry.hpp"
#include "h3landau/halfint.hpp"
#include "h3landau/oracle.hpp"
#include "h3landau/output.hpp"
#include "h3landau/radial.hpp"
#include "h3landau/separation.hpp"

namespace {

using namespace h3landau;

// ---------------------------------------------------------------------------
// Shared plumbing

std::string resolve_output_path(const std::string& name) {
  if (name.empty() || name.front() == '/') return name;
  const char* dir = std::getenv("OUTPUT_DIR");
  if (dir != nullptr && *dir != '\0') return std::string(dir) + "/" + name;
  return name;
}

void emit(const OutputRecord& rec, const std::string& format, const std::string& out) {
  std::string text = format == "json" ? to_json(rec) : to_csv(rec);
  std::string path = resolve_output_path(out);
  if (path.empty()) {
    std::fwrite(text.data(), 1, text.size(), stdout);
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error(errc::bad_argument, "cannot open output file '" + path + "'");
  file << text;
}

std::vector<HalfInteger> parse_m_list(const std::vector<std::string>& raw) {
  std::vector<HalfInteger> out;
  out.reserve(raw.size());
  for (const std::string& s : raw) out.push_back(HalfInteger::parse(s));
  return out;
}

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ',';
    out += parts[i];
  }
  return out;
}

Branch parse_branch(const std::string& text) {
  if (text == "+" || text == "plus") return Branch::plus;
  if (text == "-" || text == "minus") return Branch::minus;
  throw Error(errc::bad_argument, "branch must be '+' or '-', got '" + text + "'");
}

// Deterministic uniform sampler (fixed engine, fixed mapping) so verify
// output is byte-identical across runs.
class Uniform {
 public:
  explicit Uniform(std::uint64_t seed) : eng_(seed) {}
  double in(double lo, double hi) {
    return lo + (hi - lo) * ((eng_() >> 11) * 0x1.0p-53);
  }

 private:
  std::mt19937_64 eng_;
};

ComplexFn memoized(ComplexFn f) {
  auto cache = std::make_shared<std::map<double, std::complex<double>>>();
  return [cache, f = std::move(f)](double x) {
    auto it = cache->find(x);
    if (it == cache->end()) it = cache->emplace(x, f(x)).first;
    return it->second;
  };
}

RealFn memoized(RealFn f) {
  auto cache = std::make_shared<std::map<double, double>>();
  return [cache, f = std::move(f)](double x) {
    auto it = cache->find(x);
    if (it == cache->end()) it = cache->emplace(x, f(x)).first;
    return it->second;
  };
}

double grid_max(const ComplexFn& f, const Grid1D& g) {
  double s = 0.0;
  for (int i = 0; i < g.count; ++i) s = std::max(s, std::abs(f(g.node(i))));
  return s;
}

double grid_max(const RealFn& f, const Grid1D& g) {
  double s = 0.0;
  for (int i = 0; i < g.count; ++i) s = std::max(s, std::fabs(f(g.node(i))));
  return s;
}

// ---------------------------------------------------------------------------
// verify suites

struct VerifyContext {
  double tol_override = 0.0;  // 0 keeps the per-check defaults
  double B = 5.0;
  HalfInteger m{1};

  struct Check {
    std::string name;
    double measured;
    double tolerance;
    bool pass() const { return measured < tolerance; }
  };
  std::vector<Check> checks;

  void add(const std::string& name, double measured, double default_tol) {
    double tol = tol_override > 0.0 ? tol_override : default_tol;
    checks.push_back({name, measured, tol});
  }
};

void run_suite_geometry(VerifyContext& ctx) {
  Uniform rng(0x9e0317u);
  double worst_h = 0.0, worst_t = 0.0, worst_c = 0.0;
  for (int i = 0; i < 200; ++i) {
    CylindricalPoint p = CylindricalPoint::make(rng.in(-1.0, 1.0), rng.in(0.05, 2.0),
                                                rng.in(0.0, 6.28), rng.in(-1.5, 1.5));
    worst_h = std::max(worst_h, geometry_defect_hyperboloid(p));
    worst_t = std::max(worst_t, geometry_defect_tetrad(p));
    worst_c = std::max(worst_c, geometry_defect_christoffel(p, 1e-5));
  }
  ctx.add("geometry/hyperboloid", worst_h, 1e-12);
  ctx.add("geometry/tetrad", worst_t, 1e-12);
  ctx.add("geometry/christoffel_fd", worst_c, 1e-6);
}

void run_suite_axial(VerifyContext& ctx) {
  Uniform rng(0xa71a1u);
  Grid1D grid = Grid1D::make(-5.0, 5.0, 81);
  for (int variant = 1; variant <= 4; ++variant) {
    double worst_ode = 0.0, worst_closure = 0.0;
    for (int k = 0; k < 3; ++k) {
      double p = rng.in(0.5, 4.0);
      double lam = rng.in(0.5, 4.0);
      AxialSpec spec = axial_spec(variant, p, lam);
      ComplexFn z1 = memoized(ComplexFn([spec](double z) { return eval_Z1(spec, z); }));
      ComplexFn z2 = memoized(ComplexFn([spec](double z) { return eval_Z2(spec, z); }));
      double scale = grid_max(z1, grid);
      double pair_scale = std::max(scale, grid_max(z2, grid));
      ComplexFn z1n = [z1, scale](double z) { return z1(z) / scale; };
      ComplexFn z1p = [z1, pair_scale](double z) { return z1(z) / pair_scale; };
      ComplexFn z2p = [z2, pair_scale](double z) { return z2(z) / pair_scale; };
      worst_ode = std::max(worst_ode, residual_axial_ode(z1n, p, lam, grid).max_abs);
      worst_closure = std::max(
          worst_closure, residual_first_order(z1p, z2p, AxialRelation{p, lam}, grid).max_abs);
    }
    std::string tag = std::to_string(variant);
    ctx.add("axial/ode_variant" + tag, worst_ode, 1e-6);
    ctx.add("axial/closure_variant" + tag, worst_closure, 1e-8);
  }
}

void run_suite_radial(VerifyContext& ctx) {
  auto states =
      enumerate_states(ctx.B, {ctx.m}, PhysicalParams::make(ctx.B, 1.0, 2.0));
  Grid1D grid = Grid1D::make(0.1, 8.0, 81);
  double worst_ode = 0.0, worst_closure = 0.0;
  for (const SpectralState& st : states) {
    RadialSpec spec = radial_spec(st.variant, st.m, ctx.B, st.lambda_sq);
    double lam = std::sqrt(st.lambda_sq);
    int n = st.n;
    RealFn r1 = memoized(RealFn([spec, n](double r) { return eval_R1(spec, n, r); }));
    RealFn r2 =
        memoized(RealFn([spec, n, lam](double r) { return eval_R2(spec, n, lam, r); }));
    double scale = grid_max(r1, grid);
    double pair_scale = std::max(scale, grid_max(r2, grid));
    RealFn r1n = [r1, scale](double r) { return r1(r) / scale; };
    RealFn r1p = [r1, pair_scale](double r) { return r1(r) / pair_scale; };
    RealFn r2p = [r2, pair_scale](double r) { return r2(r) / pair_scale; };
    worst_ode = std::max(
        worst_ode,
        residual_radial_ode(r1n, st.m, ctx.B, st.lambda_sq, grid).max_abs);
    worst_closure = std::max(
        worst_closure,
        residual_first_order(r1p, r2p, RadialRelation{st.m, ctx.B, lam}, grid).max_abs);
  }
  ctx.add("radial/ode", worst_ode, 1e-6);
  ctx.add("radial/closure", worst_closure, 1e-8);
}

void run_suite_dirac(VerifyContext& ctx) {
  Grid1D r_grid = Grid1D::make(0.2, 6.0, 16);
  Grid1D z_grid = Grid1D::make(-4.0, 4.0, 16);
  double worst = 0.0;
  for (Branch branch : {Branch::plus, Branch::minus}) {
    HalfInteger m(1);
    double B = 5.0;
    int n = 1, variant = 3, axial_variant = 1;
    PhysicalParams params = PhysicalParams::make(B, 3.0, 5.0);
    double lam_sq = quantized_lambda_sq(variant, B, m, n);
    SpectralState st{variant, m, n, lam_sq, true, 2.0 * B * n};
    SpinorField field(st, axial_variant, branch, params);
    auto fns = field.component_functions();
    double scale = 0.0;
    for (int ir = 0; ir < r_grid.count; ++ir)
      for (int iz = 0; iz < z_grid.count; ++iz)
        for (const auto& fn : fns)
          scale = std::max(scale, std::abs(fn(r_grid.node(ir), z_grid.node(iz))));
    std::array<ComplexFn2, 4> scaled;
    for (int a = 0; a < 4; ++a)
      scaled[a] = [fn = fns[a], scale](double r, double z) { return fn(r, z) / scale; };
    ResidualReport rep =
        residual_dirac_system(scaled, params.epsilon, params.M, m, B, r_grid, z_grid);
    worst = std::max(worst, rep.max_abs);
  }
  ctx.add("dirac/system", worst, 1e-6);
}

void run_suite_shooting(VerifyContext& ctx) {
  Grid1D grid = Grid1D::make(0.02, 12.0, 16385);
  std::vector<double> oracle;
  bool oracle_ready = false;
  for (int variant : {3, 4}) {
    std::string tag = "shooting/variant" + std::to_string(variant);
    if (auto why = radial_variant_rejection(variant, ctx.m, ctx.B)) {
      std::printf("# %s skipped: %s\n", tag.c_str(), why->c_str());
      continue;
    }
    auto formula = allowed_levels(variant, ctx.B, ctx.m);
    if (!oracle_ready) {
      oracle = shoot_radial_eigenvalues(ctx.B, ctx.m, ctx.B * ctx.B, grid);
      oracle_ready = true;
    }
    std::printf("# %s: B=%s m=%s levels(formula)=%zu levels(shooting)=%zu\n", tag.c_str(),
                format_double(ctx.B).c_str(), ctx.m.str().c_str(), formula.size(),
                oracle.size());
    std::printf("n,lambda_sq_formula,lambda_sq_shooting,rel_error\n");
    double worst_rel = 0.0;
    size_t common = std::min(formula.size(), oracle.size());
    for (size_t i = 0; i < common; ++i) {
      double want = formula[i].second;
      double got = oracle[i];
      double rel = std::fabs(got - want) / std::fabs(want);
      worst_rel = std::max(worst_rel, rel);
      std::printf("%d,%s,%s,%s\n", formula[i].first, format_double(want).c_str(),
                  format_double(got).c_str(), format_double(rel).c_str());
    }
    ctx.add(tag + "_count",
            std::fabs(static_cast<double>(formula.size()) -
                      static_cast<double>(oracle.size())),
            0.5);
    ctx.add(tag + "_match", worst_rel, 1e-6);
  }
}

int run_verify(const std::string& suite, double tol, double B, const std::string& m_text) {
  VerifyContext ctx;
  ctx.tol_override = tol;
  ctx.B = B;
  ctx.m = HalfInteger::parse(m_text);

  if (suite == "geometry" || suite == "all") run_suite_geometry(ctx);
  if (suite == "axial" || suite == "all") run_suite_axial(ctx);
  if (suite == "radial" || suite == "all") run_suite_radial(ctx);
  if (suite == "dirac" || suite == "all") run_suite_dirac(ctx);
  if (suite == "shooting" || suite == "all") run_suite_shooting(ctx);

  std::printf("check,measured,tolerance,status\n");
  const VerifyContext::Check* worst = nullptr;
  for (const auto& c : ctx.checks) {
    std::printf("%s,%s,%s,%s\n", c.name.c_str(), format_double(c.measured).c_str(),
                format_double(c.tolerance).c_str(), c.pass() ? "pass" : "FAIL");
    if (!c.pass() && (worst == nullptr || c.measured / c.tolerance > worst->measured / worst->tolerance))
      worst = &c;
  }
  if (worst != nullptr) {
    std::printf("verify: FAIL — worst offender %s measured %s vs tolerance %s\n",
                worst->name.c_str(), format_double(worst->measured).c_str(),
                format_double(worst->tolerance).c_str());
    return 1;
  }
  std::printf("verify: PASS (%zu checks)\n", ctx.checks.size());
  return 0;
}

// ---------------------------------------------------------------------------
// table-producing commands

void run_spectrum(double B, const std::vector<std::string>& m_raw,
                  const std::string& format, const std::string& out) {
  std::vector<HalfInteger> ms = parse_m_list(m_raw);
  auto states = enumerate_states(B, ms, PhysicalParams::make(B, 1.0, 2.0));
  OutputRecord rec;
  rec.schema_version = kSchemaVersion;
  rec.command = "spectrum";
  rec.parameters = {{"B", format_double(B)}, {"m", join(m_raw)}};
  rec.columns = {"variant", "m", "n", "lambda_sq", "constraint_margin"};
  for (const SpectralState& st : states)
    rec.rows.push_back({static_cast<double>(st.variant), st.m.value(),
                        static_cast<double>(st.n), st.lambda_sq,
                        constraint_margin(st.variant, B, st.m, st.n)});
  emit(rec, format, out);
}

void run_limit(double B0, int n, const std::string& m_text, int variant,
               const std::vector<double>& rhos, const std::string& format,
               const std::string& out) {
  HalfInteger m = HalfInteger::parse(m_text);
  OutputRecord rec;
  rec.schema_version = kSchemaVersion;
  rec.command = "limit";
  rec.parameters = {{"B0", format_double(B0)},
                    {"n", std::to_string(n)},
                    {"m", m.str()},
                    {"variant", std::to_string(variant)}};
  rec.columns = {"rho", "lambda0_sq_curved", "lambda0_sq_flat", "rel_error"};
  for (double rho : rhos) {
    FlatLimitResult res = flat_limit_check(B0, n, m, variant, rho);
    rec.rows.push_back({rho, res.lambda0_sq_curved, res.lambda0_sq_flat, res.rel_error});
  }
  emit(rec, format, out);
}

void run_geometry(const std::vector<double>& rs, const std::vector<double>& zs, double B,
                  const std::string& format, const std::string& out) {
  OutputRecord rec;
  rec.schema_version = kSchemaVersion;
  rec.command = "geometry";
  std::vector<std::string> r_text, z_text;
  for (double r : rs) r_text.push_back(format_double(r));
  for (double z : zs) z_text.push_back(format_double(z));
  rec.parameters = {{"r", join(r_text)}, {"z", join(z_text)}, {"B", format_double(B)}};
  rec.columns = {"r",
                 "z",
                 "u0",
                 "u1",
                 "u2",
                 "u3",
                 "hyperboloid_defect",
                 "g_rr",
                 "g_phiphi",
                 "g_zz",
                 "A_phi",
                 "Gamma_r_rz",
                 "Gamma_r_phiphi",
                 "Gamma_phi_rphi",
                 "Gamma_phi_phiz",
                 "Gamma_z_rr",
                 "Gamma_z_phiphi",
                 "ricci_122",
                 "ricci_311"};
  for (double r : rs)
    for (double z : zs) {
      CylindricalPoint p = CylindricalPoint::make(0.0, r, 0.0, z);
      EmbeddingVector u = embed(p);
      MetricComponents g = metric_at(p);
      ConnectionData conn = christoffel_at(p);
      rec.rows.push_back({r, z, u.u0, u.u1, u.u2, u.u3, geometry_defect_hyperboloid(p),
                          g.g_rr, g.g_phiphi, g.g_zz, vector_potential(p, B),
                          conn.christoffel[1][1][3], conn.christoffel[1][2][2],
                          conn.christoffel[2][1][2], conn.christoffel[2][2][3],
                          conn.christoffel[3][1][1], conn.christoffel[3][2][2],
                          conn.ricci_rotation.gamma_122, conn.ricci_rotation.gamma_311});
    }
  emit(rec, format, out);
}

struct WavefunctionArgs {
  double B = 5.0;
  std::string m_text = "1/2";
  int n = 1;
  int variant = 3;
  std::string table = "radial";
  int axial_variant = 1;
  std::string branch_text = "+";
  double epsilon = 2.0;
  double mass = 1.0;
  double r_min = 0.1, r_max = 8.0;
  int r_count = 161;
  double z_min = -5.0, z_max = 5.0;
  int z_count = 161;
  std::string format = "csv";
  std::string out;
};

void run_wavefunction(const WavefunctionArgs& a) {
  HalfInteger m = HalfInteger::parse(a.m_text);
  double lam_sq = quantized_lambda_sq(a.variant, a.B, m, a.n);
  if (!(lam_sq > 0.0))
    throw Error(errc::degenerate_separation,
                "state has lambda_sq = " + format_double(lam_sq) +
                    "; pick a level with positive lambda_sq");
  double lam = std::sqrt(lam_sq);

  OutputRecord rec;
  rec.schema_version = kSchemaVersion;
  rec.command = "wavefunction";
  rec.parameters = {{"B", format_double(a.B)},       {"m", m.str()},
                    {"n", std::to_string(a.n)},      {"variant", std::to_string(a.variant)},
                    {"table", a.table},              {"lambda_sq", format_double(lam_sq)}};

  if (a.table == "radial") {
    Grid1D grid = Grid1D::make(a.r_min, a.r_max, a.r_count);
    RadialSpec spec = radial_spec(a.variant, m, a.B, lam_sq);
    rec.columns = {"r", "R1", "R2"};
    for (int i = 0; i < grid.count; ++i) {
      double r = grid.node(i);
      rec.rows.push_back({r, eval_R1(spec, a.n, r), eval_R2(spec, a.n, lam, r)});
    }
    emit(rec, a.format, a.out);
    return;
  }

  Branch branch = parse_branch(a.branch_text);
  PhysicalParams params = PhysicalParams::make(a.B, a.mass, a.epsilon);
  rec.parameters.push_back({"axial_variant", std::to_string(a.axial_variant)});
  rec.parameters.push_back({"branch", a.branch_text});
  rec.parameters.push_back({"epsilon", format_double(a.epsilon)});
  rec.parameters.push_back({"mass", format_double(a.mass)});

  if (a.table == "axial") {
    Grid1D grid = Grid1D::make(a.z_min, a.z_max, a.z_count);
    AxialSpec spec = axial_spec(a.axial_variant, branch_momentum(branch, params), lam);
    rec.columns = {"z", "Z1_re", "Z1_im", "Z2_re", "Z2_im"};
    for (int i = 0; i < grid.count; ++i) {
      double z = grid.node(i);
      std::complex<double> z1 = eval_Z1(spec, z), z2 = eval_Z2(spec, z);
      rec.rows.push_back({z, z1.real(), z1.imag(), z2.real(), z2.imag()});
    }
    emit(rec, a.format, a.out);
    return;
  }

  if (a.table != "assembled")
    throw Error(errc::bad_argument,
                "table must be radial, axial, or assembled; got '" + a.table + "'");

  Grid1D r_grid = Grid1D::make(a.r_min, a.r_max, a.r_count);
  Grid1D z_grid = Grid1D::make(a.z_min, a.z_max, a.z_count);
  SpectralState st{a.variant, m, a.n, lam_sq, true, 0.0};
  SpinorField field(st, a.axial_variant, branch, params);
  rec.columns = {"r",     "z",     "f1_re", "f1_im", "f2_re", "f2_im",
                 "f3_re", "f3_im", "f4_re", "f4_im", "psi_scale"};
  for (int ir = 0; ir < r_grid.count; ++ir) {
    double r = r_grid.node(ir);
    for (int iz = 0; iz < z_grid.count; ++iz) {
      double z = z_grid.node(iz);
      std::complex<double> f1 = field.component(1, r, z), f2 = field.component(2, r, z);
      std::complex<double> f3 = field.component(3, r, z), f4 = field.component(4, r, z);
      double scale = 1.0 / (std::sqrt(std::sinh(r)) * std::cosh(z));
      rec.rows.push_back({r, z, f1.real(), f1.imag(), f2.real(), f2.imag(), f3.real(),
                          f3.imag(), f4.real(), f4.imag(), scale});
    }
  }
  emit(rec, a.format, a.out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dirac wavefunctions and Landau-level spectra in a uniform magnetic "
               "field on hyperbolic 3-space"};
  app.require_subcommand(1);

  // spectrum
  double sp_B = 0.0;
  std::vector<std::string> sp_m;
  std::string sp_format = "csv", sp_out;
  CLI::App* spectrum = app.add_subcommand("spectrum", "Enumerate quantized lambda^2 levels");
  spectrum->add_option("--B", sp_B, "field strength, > 0")->required();
  spectrum->add_option("--m", sp_m, "half-integer m values (e.g. 1/2, -3/2, 0.5)")
      ->required()
      ->delimiter(',');
  spectrum->add_option("--format", sp_format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  spectrum->add_option("--out", sp_out, "output file (under OUTPUT_DIR if relative)");

  // wavefunction
  WavefunctionArgs wf;
  CLI::App* wavefunction =
      app.add_subcommand("wavefunction", "Sample solution factors on a grid");
  wavefunction->add_option("--B", wf.B, "field strength, > 0")->required();
  wavefunction->add_option("--m", wf.m_text, "half-integer m")->required();
  wavefunction->add_option("--n", wf.n, "level index")->required();
  wavefunction->add_option("--variant", wf.variant, "radial channel, 3 or 4")
      ->check(CLI::IsMember({3, 4}));
  wavefunction->add_option("--table", wf.table, "radial, axial, or assembled")
      ->check(CLI::IsMember({"radial", "axial", "assembled"}));
  wavefunction->add_option("--axial-variant", wf.axial_variant, "axial substitution, 1..4")
      ->check(CLI::Range(1, 4));
  wavefunction->add_option("--branch", wf.branch_text, "+ or -");
  wavefunction->add_option("--epsilon", wf.epsilon, "energy (|epsilon| >= mass)");
  wavefunction->add_option("--mass", wf.mass, "mass, > 0");
  wavefunction->add_option("--r-min", wf.r_min, "radial grid start, > 0");
  wavefunction->add_option("--r-max", wf.r_max, "radial grid end");
  wavefunction->add_option("--r-count", wf.r_count, "radial grid nodes, >= 16");
  wavefunction->add_option("--z-min", wf.z_min, "axial grid start");
  wavefunction->add_option("--z-max", wf.z_max, "axial grid end");
  wavefunction->add_option("--z-count", wf.z_count, "axial grid nodes, >= 16");
  wavefunction->add_option("--format", wf.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  wavefunction->add_option("--out", wf.out, "output file (under OUTPUT_DIR if relative)");

  // verify
  std::string vf_suite = "all", vf_m = "1/2";
  double vf_tol = 0.0, vf_B = 5.0;
  CLI::App* verify = app.add_subcommand("verify", "Run residual/oracle suites");
  verify->add_option("--suite", vf_suite, "geometry, axial, radial, dirac, shooting, all")
      ->check(CLI::IsMember({"geometry", "axial", "radial", "dirac", "shooting", "all"}));
  verify->add_option("--tol", vf_tol, "override every tolerance in the suite");
  verify->add_option("--B", vf_B, "field strength for radial/shooting suites");
  verify->add_option("--m", vf_m, "half-integer m for radial/shooting suites");

  // limit
  double lm_B0 = 0.0;
  int lm_n = 1, lm_variant = 3;
  std::string lm_m = "1/2", lm_format = "csv", lm_out;
  std::vector<double> lm_rho;
  CLI::App* limit = app.add_subcommand("limit", "Flat-space limit of the levels");
  limit->add_option("--B0", lm_B0, "flat-space field strength, > 0")->required();
  limit->add_option("--n", lm_n, "level index")->required();
  limit->add_option("--m", lm_m, "half-integer m");
  limit->add_option("--variant", lm_variant, "radial channel, 3 or 4")
      ->check(CLI::IsMember({3, 4}));
  limit->add_option("--rho", lm_rho, "curvature radii, each > 0")
      ->required()
      ->delimiter(',');
  limit->add_option("--format", lm_format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  limit->add_option("--out", lm_out, "output file (under OUTPUT_DIR if relative)");

  // geometry
  std::vector<double> ge_r{1.0}, ge_z{0.0};
  double ge_B = 1.0;
  std::string ge_format = "csv", ge_out;
  CLI::App* geometry =
      app.add_subcommand("geometry", "Embedding, metric, potential, and connection table");
  geometry->add_option("--r", ge_r, "radial coordinates, each > 0")->delimiter(',');
  geometry->add_option("--z", ge_z, "axial coordinates")->delimiter(',');
  geometry->add_option("--B", ge_B, "field strength for the potential column");
  geometry->add_option("--format", ge_format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  geometry->add_option("--out", ge_out, "output file (under OUTPUT_DIR if relative)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(spectrum)) {
      run_spectrum(sp_B, sp_m, sp_format, sp_out);
      return 0;
    }
    if (app.got_subcommand(wavefunction)) {
      run_wavefunction(wf);
      return 0;
    }
    if (app.got_subcommand(verify)) return run_verify(vf_suite, vf_tol, vf_B, vf_m);
    if (app.got_subcommand(limit)) {
      run_limit(lm_B0, lm_n, lm_m, lm_variant, lm_rho, lm_format, lm_out);
      return 0;
    }
    if (app.got_subcommand(geometry)) {
      run_geometry(ge_r, ge_z, ge_B, ge_format, ge_out);
      return 0;
    }
  } catch (const Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 2;
}

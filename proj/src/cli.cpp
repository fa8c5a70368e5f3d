#include "weakmult/cli.hpp"

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "weakmult/chain.hpp"
#include "weakmult/families.hpp"
#include "weakmult/format.hpp"
#include "weakmult/multiplier.hpp"
#include "weakmult/multiplier_io.hpp"
#include "weakmult/report.hpp"
#include "weakmult/restriction.hpp"
#include "weakmult/sphere.hpp"
#include "weakmult/sweeps.hpp"

namespace weakmult::cli {

namespace {

using nlohmann::ordered_json;

// Errors that map to exit code 1 with a plain message.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string default_out_dir() {
  const char* env = std::getenv(kOutDirEnv);
  return (env != nullptr && *env != '\0') ? std::string(env) : std::string(".");
}

struct GridFlags {
  CLI::Option* length_opt = nullptr;
  CLI::Option* points_opt = nullptr;
  double length = 0.0;
  std::size_t points = 0;

  void add(CLI::App* app, const std::string& what) {
    length_opt = app->add_option("--grid-length", length, "extent L of the " + what + " grid");
    points_opt = app->add_option("--grid-points", points, "points per axis of the " + what + " grid (power of two)");
  }
  bool given() const { return length_opt->count() > 0 || points_opt->count() > 0; }
  std::optional<UniformGrid> grid(int dimension) const {
    if (!given()) return std::nullopt;
    if (length_opt->count() == 0 || points_opt->count() == 0) {
      throw UsageError("--grid-length and --grid-points must be given together");
    }
    return make_grid(dimension, length, points);
  }
  void to_json(ordered_json& j, const UniformGrid& g) const {
    j["grid_length"] = g.extent();
    j["grid_points"] = g.points_per_axis();
  }
};

struct Common {
  std::string out;
  std::uint64_t seed = 1;

  void add(CLI::App* app, bool with_seed = true) {
    out = default_out_dir();
    app->add_option("--out", out, std::string("output directory (default: $") + kOutDirEnv + " or .)");
    if (with_seed) app->add_option("--seed", seed, "64-bit seed");
  }
};

struct MultiplierFlags {
  std::string path;
  bool paper_example = false;
  CLI::Option* path_opt = nullptr;
  CLI::Option* paper_opt = nullptr;

  void add(CLI::App* app) {
    path_opt = app->add_option("--multiplier", path, "multiplier spec file (JSON)");
    paper_opt = app->add_flag("--paper-example", paper_example,
                              "the d = 1 example with kernel exp(-y^2) y^-2 1{y>1}");
    path_opt->excludes(paper_opt);
  }
  void require_one() const {
    if (path_opt->count() == 0 && !paper_example) {
      throw UsageError("one of --multiplier or --paper-example is required");
    }
  }
  ClassAMultiplier load() const {
    if (paper_example) return paper_example_multiplier(default_reference_grid(1));
    return load_multiplier_spec(path);
  }
  void to_json(ordered_json& j) const {
    if (paper_example) {
      j["multiplier"] = "paper-example";
    } else {
      j["multiplier"] = path;
    }
  }
};

std::string compact(const ordered_json& j) { return j.dump(); }

void write_file(const std::string& dir, const std::string& name, const std::string& content) {
  std::filesystem::create_directories(dir);
  const std::filesystem::path path = std::filesystem::path(dir) / name;
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out << content;
  out.close();
  if (!out) throw std::runtime_error("failed writing " + path.string());
  std::cout << "wrote " << path.string() << '\n';
}

std::string r_tag(double r) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", r);
  return buf;
}

// ---- sharpness ----

struct SharpnessCmd {
  Common common;
  std::vector<double> rs;
  double n_min = 1.0;
  double n_max = 4096.0;
  int n_count = 13;
  bool grid_auto = false;
  double grid_spacing = 1.0 / 256.0;
  GridFlags grid;
  int refinement = 2;
  double burn_in = 0.25;
  double gap_threshold = 0.01;
  double tolerance = 0.05;

  void add(CLI::App* app) {
    common.add(app);
    app->add_option("--r", rs, "Lorentz second index (repeatable; default 1 2 3)");
    app->add_option("--n-min", n_min, "smallest n");
    app->add_option("--n-max", n_max, "largest n");
    app->add_option("--n-count", n_count, "number of geometric n values");
    auto* a = app->add_flag("--grid-auto", grid_auto, "size the grid from n-max (default)");
    app->add_option("--grid-spacing", grid_spacing, "auto-grid spacing, a power-of-two fraction <= 1/32");
    grid.add(app, "base");
    a->excludes(grid.length_opt)->excludes(grid.points_opt);
    app->add_option("--refinement", refinement, "point-count factor of the refinement run");
    app->add_option("--burn-in", burn_in, "fraction of small n left out of the fit");
    app->add_option("--gap-threshold", gap_threshold, "largest accepted refinement gap");
    app->add_option("--tolerance", tolerance, "slope tolerance of the verdict");
  }

  int run(const std::string& command) {
    if (rs.empty()) rs = {1.0, 2.0, 3.0};
    for (double r : rs) {
      if (!(r >= 1.0) || !std::isfinite(r)) throw UsageError("r must be ≥ 1");
    }
    if (n_count < 3) throw UsageError("--n-count must be at least 3");
    if (!(n_min > 0.0) || !(n_max > n_min)) throw UsageError("need 0 < n-min < n-max");

    SweepConfig cfg;
    cfg.n_values = geometric_values(n_min, n_max, n_count);
    cfg.grid = grid.grid(1);
    if (!cfg.grid) cfg.grid = auto_grid(n_max, grid_spacing);
    cfg.refinement_factor = refinement;
    cfg.burn_in = burn_in;
    cfg.gap_threshold = gap_threshold;
    cfg.verdict_tolerance = tolerance;
    cfg.seed = common.seed;
    validate(cfg);

    ordered_json base;
    base["n_min"] = n_min;
    base["n_max"] = n_max;
    base["n_count"] = n_count;
    base["grid_mode"] = grid.given() ? "explicit" : "auto";
    grid.to_json(base, *cfg.grid);
    base["refinement"] = refinement;
    base["burn_in"] = burn_in;
    base["gap_threshold"] = gap_threshold;
    base["tolerance"] = tolerance;
    base["out"] = common.out;

    const auto reports = sharpness_sweeps(cfg, rs);
    bool converged = true;
    for (const auto& rep : reports) {
      ordered_json config;
      config["r"] = rep.r;
      for (const auto& [k, v] : base.items()) config[k] = v;
      const RunHeader header{command, compact(config), common.seed};
      std::ostringstream csv;
      write_sweep_csv(csv, header, rep);
      const std::string stem = "sharpness_r" + r_tag(rep.r);
      write_file(common.out, stem + ".csv", csv.str());
      write_file(common.out, stem + ".json", sweep_summary_json(header, rep));
      if (!rep.converged) {
        converged = false;
        std::cerr << "r = " << r_tag(rep.r) << ": unconverged rows (refinement gap >= "
                  << gap_threshold << ")\n";
      }
    }
    return converged ? kExitOk : kExitUnconverged;
  }
};

// ---- weak11 ----

struct Weak11Cmd {
  Common common;
  MultiplierFlags mult;
  std::vector<std::string> families;
  double n_min = 1.0;
  double n_max = 1024.0;
  int n_count = 11;
  double grid_spacing = 1.0 / 256.0;
  GridFlags grid;
  double threshold = 0.05;

  void add(CLI::App* app) {
    common.add(app);
    mult.add(app);
    app->add_option("--family", families, "input family (repeatable; default all)");
    app->add_option("--n-min", n_min, "smallest family parameter");
    app->add_option("--n-max", n_max, "largest family parameter");
    app->add_option("--n-count", n_count, "number of geometric parameters");
    app->add_option("--grid-spacing", grid_spacing, "auto-grid spacing");
    grid.add(app, "spatial");
    app->add_option("--threshold", threshold, "largest accepted top-half stabilization");
  }

  int run(const std::string& command) {
    mult.require_one();
    if (families.empty()) families = known_families();
    for (const auto& name : families) {
      bool known = false;
      for (const auto& k : known_families()) known = known || (k == name);
      if (!known) {
        std::string list;
        for (const auto& k : known_families()) list += (list.empty() ? "" : ", ") + k;
        throw UsageError("unknown family '" + name + "'; known families: " + list);
      }
    }
    if (n_count < 4) throw UsageError("--n-count must be at least 4");
    if (!(n_min > 0.0) || !(n_max > n_min)) throw UsageError("need 0 < n-min < n-max");

    const auto n_values = geometric_values(n_min, n_max, n_count);
    const UniformGrid g = grid.grid(1).value_or(auto_grid(n_max, grid_spacing));
    std::optional<KernelFunction> kernel;
    if (mult.paper_example) {
      kernel = paper_example_kernel(g);
    } else {
      const ClassAMultiplier m = mult.load();
      if (m.dimension() != 1) throw UsageError("weak11 needs a d = 1 multiplier");
      kernel = assemble_kernel(m, g);
    }

    ordered_json config;
    mult.to_json(config);
    config["families"] = families;
    config["n_min"] = n_min;
    config["n_max"] = n_max;
    config["n_count"] = n_count;
    grid.to_json(config, g);
    config["threshold"] = threshold;
    config["out"] = common.out;
    const RunHeader header{command, compact(config), common.seed};

    std::vector<Weak11Report> reports;
    for (const auto& name : families) {
      reports.push_back(weak11_sweep(*kernel, name, make_family(name, n_values, common.seed)));
    }
    std::ostringstream csv;
    write_weak11_csv(csv, header, reports);
    write_file(common.out, "weak11.csv", csv.str());
    write_file(common.out, "weak11.json", weak11_summary_json(header, reports));

    bool ok = true;
    for (const auto& rep : reports) {
      if (!std::isfinite(rep.max_ratio) || !(rep.tail_stabilization < threshold)) {
        ok = false;
        std::cerr << rep.family << ": ratios not stabilized (top-half metric "
                  << format_double(rep.tail_stabilization) << ")\n";
      }
    }
    return ok ? kExitOk : kExitUnconverged;
  }
};

// ---- shared pieces of the sphere commands ----

int parse_dim(const std::string& dim) {
  if (dim == "1") return 1;
  if (dim == "2") return 2;
  if (dim == "3" || dim == "3-sphere-ambient") return 3;
  throw UsageError("--dim must be 1, 2 or 3, got '" + dim + "'");
}

UniformGrid spatial_grid(const GridFlags& flags, int dimension) {
  if (auto g = flags.grid(dimension)) return *g;
  return default_reference_grid(dimension).dual();
}

ClassAMultiplier load_for_dim(const MultiplierFlags& mult, int dimension) {
  if (mult.paper_example && dimension != 1) throw UsageError("--paper-example is a d = 1 multiplier");
  ClassAMultiplier m = mult.load();
  if (m.dimension() != dimension) {
    throw UsageError("multiplier dimension " + std::to_string(m.dimension()) + " differs from --dim " +
                     std::to_string(dimension));
  }
  return m;
}

// Closed-form kernel sum_i f_i^v g_i^v for Gaussian factors.
SphereFunction closed_form_kernel(const ClassAMultiplier& m) {
  std::vector<std::pair<FunctionDescriptor, FunctionDescriptor>> factors;
  for (const auto& s : m.summands()) {
    const auto* f = std::get_if<FunctionDescriptor>(&s.f());
    const auto* g = std::get_if<FunctionDescriptor>(&s.g());
    if (f == nullptr || g == nullptr || !f->is_gaussian_mixture() || !g->is_gaussian_mixture()) {
      throw UsageError("closed-form evaluation needs Gaussian factors");
    }
    factors.emplace_back(*f, *g);
  }
  return [factors](std::span<const double> x) {
    Complex total{};
    for (const auto& [f, g] : factors) total += f.inverse_transform_at(x) * g.inverse_transform_at(x);
    return total;
  };
}

// ---- zygmund ----

struct ZygmundCmd {
  Common common;
  MultiplierFlags mult;
  std::string dim = "1";
  int quad_res = 64;
  GridFlags grid;

  void add(CLI::App* app) {
    common.add(app, false);
    mult.add(app);
    app->add_option("--dim", dim, "ambient dimension: 1, 2 or 3 (3-sphere-ambient)");
    app->add_option("--quad-res", quad_res, "sphere quadrature resolution");
    grid.add(app, "spatial");
  }

  int run(const std::string& command) {
    mult.require_one();
    const int d = parse_dim(dim);
    const ClassAMultiplier m = load_for_dim(mult, d);
    const SphereQuadrature quad(d - 1, quad_res);

    ordered_json config;
    mult.to_json(config);
    config["dim"] = d;
    config["quad_res"] = quad_res;

    double value = 0.0;
    if (mult.paper_example) {
      const FunctionDescriptor k = paper_example_kernel_descriptor();
      value = zygmund_functional([&k](std::span<const double> x) { return Complex(k(x)); }, quad);
      config["kernel"] = "closed-form";
    } else if (d == 3) {
      value = zygmund_functional(closed_form_kernel(m), quad);
      config["kernel"] = "closed-form";
    } else {
      const UniformGrid g = spatial_grid(grid, d);
      grid.to_json(config, g);
      config["kernel"] = "grid";
      value = zygmund_functional(assemble_kernel(m, g).samples(), quad);
    }
    config["out"] = common.out;
    const RunHeader header{command, compact(config), common.seed};

    ordered_json j;
    j["dimension"] = d;
    j["quadrature_nodes"] = quad.size();
    j["value"] = value;
    j["a_norm"] = a_norm(m);
    write_file(common.out, "zygmund.json", summary_json(header, j.dump()));
    return std::isfinite(value) ? kExitOk : kExitUnconverged;
  }
};

// ---- chain ----

struct ChainCmd {
  Common common;
  MultiplierFlags mult;
  std::string dim = "2";
  CLI::Option* q_opt = nullptr;
  double q = 1.0;
  int quad_res = 64;
  int probe_count = 20;
  GridFlags grid;

  void add(CLI::App* app) {
    common.add(app);
    mult.add(app);
    app->add_option("--dim", dim, "ambient dimension: 1 or 2");
    q_opt = app->add_option("--q", q, "exponent q (default: the spec file's)");
    app->add_option("--quad-res", quad_res, "sphere quadrature resolution");
    app->add_option("--probe-count", probe_count, "number of seeded bumps estimating the restriction constant");
    grid.add(app, "spatial");
  }

  int run(const std::string& command) {
    mult.require_one();
    const int d = parse_dim(dim);
    if (d == 3) throw UsageError("chain runs in d = 1 or 2");
    if (probe_count < 1) throw UsageError("--probe-count must be positive");
    ClassAMultiplier m = load_for_dim(mult, d);
    if (q_opt->count() > 0) m = m.with_exponent(q);
    if (!m.admissible()) {
      std::cerr << "warning: q = " << format_double(m.q()) << " is outside [1, "
                << format_double(m.admissible_bound()) << "]\n";
    }
    const SphereQuadrature quad(d - 1, quad_res);
    const UniformGrid g = spatial_grid(grid, d);
    const double probe =
        restriction_constant(restriction_table(dilated_bumps(d, probe_count, common.seed), m.q(), quad));
    const ChainReport report = proof_chain_check(m, quad, g, probe);

    ordered_json config;
    mult.to_json(config);
    config["dim"] = d;
    config["q"] = m.q();
    config["quad_res"] = quad_res;
    config["probe_count"] = probe_count;
    grid.to_json(config, g);
    config["out"] = common.out;
    const RunHeader header{command, compact(config), common.seed};
    write_file(common.out, "chain.json", chain_report_json(header, report));
    if (!report.passed()) {
      std::cerr << "chain step " << report.first_failure() << " failed\n";
      return kExitCheckFailed;
    }
    return kExitOk;
  }
};

// ---- restriction ----

struct RestrictionCmd {
  Common common;
  std::string dim = "2";
  CLI::Option* q_opt = nullptr;
  double q = 1.2;
  std::string family = "dilated-bumps";
  int count = 50;
  int quad_res = 64;
  double lambda_min = 0.125;
  double lambda_max = 8.0;
  double threshold = 0.02;

  void add(CLI::App* app) {
    common.add(app);
    app->add_option("--dim", dim, "ambient dimension: 1 or 2");
    q_opt = app->add_option("--q", q, "exponent q (default (2d+2)/(d+3))");
    app->add_option("--family", family, "test family (dilated-bumps)");
    app->add_option("--count", count, "number of bumps");
    app->add_option("--quad-res", quad_res, "sphere quadrature resolution");
    app->add_option("--lambda-min", lambda_min, "smallest dilation");
    app->add_option("--lambda-max", lambda_max, "largest dilation");
    app->add_option("--threshold", threshold, "largest accepted change of the max under doubled resolution");
  }

  int run(const std::string& command) {
    if (family != "dilated-bumps") {
      throw UsageError("unknown family '" + family + "'; known families: dilated-bumps");
    }
    const int d = parse_dim(dim);
    if (d == 3) throw UsageError("restriction runs in d = 1 or 2");
    if (q_opt->count() == 0) q = restriction_exponent_bound(d);
    if (!(q >= 1.0)) throw UsageError("q must be >= 1");
    if (count < 1) throw UsageError("--count must be positive");
    if (!(lambda_min > 0.0) || !(lambda_max >= lambda_min)) throw UsageError("need 0 < lambda-min <= lambda-max");

    const auto bumps = dilated_bumps(d, count, common.seed, lambda_min, lambda_max);
    const auto rows = restriction_table(bumps, q, SphereQuadrature(d - 1, quad_res));
    const auto refined = restriction_table(bumps, q, SphereQuadrature(d - 1, 2 * quad_res));

    double lo = rows.front().ratio;
    for (const auto& r : rows) lo = std::min(lo, r.ratio);
    const double hi = restriction_constant(rows);
    const double hi_refined = restriction_constant(refined);
    const double change = std::abs(hi_refined - hi) / hi;

    ordered_json config;
    config["dim"] = d;
    config["q"] = q;
    config["family"] = family;
    config["count"] = count;
    config["quad_res"] = quad_res;
    config["lambda_min"] = lambda_min;
    config["lambda_max"] = lambda_max;
    config["threshold"] = threshold;
    config["out"] = common.out;
    const RunHeader header{command, compact(config), common.seed};

    std::ostringstream csv;
    write_restriction_csv(csv, header, rows);
    write_file(common.out, "restriction.csv", csv.str());
    ordered_json j;
    j["max_ratio"] = hi;
    j["min_ratio"] = lo;
    j["spread"] = hi / lo;
    j["max_ratio_doubled_resolution"] = hi_refined;
    j["max_relative_change"] = change;
    j["stable"] = change < threshold;
    write_file(common.out, "restriction.json", summary_json(header, j.dump()));

    bool finite = true;
    for (const auto& r : rows) finite = finite && std::isfinite(r.ratio);
    if (!finite || !(change < threshold)) {
      std::cerr << "restriction maximum not stable under doubled resolution\n";
      return kExitUnconverged;
    }
    return kExitOk;
  }
};

// ---- probe-linfty ----

struct ProbeCmd {
  Common common;
  MultiplierFlags mult;
  int levels = 3;
  std::string mode = "refine";
  GridFlags grid;

  void add(CLI::App* app) {
    common.add(app, false);
    mult.add(app);
    app->add_option("--levels", levels, "number of grids");
    app->add_option("--mode", mode, "refine (halve spacing) or extend (double extent, same spacing)");
    grid.add(app, "base frequency");
  }

  int run(const std::string& command) {
    mult.require_one();
    if (mode != "refine" && mode != "extend") throw UsageError("--mode must be refine or extend");
    if (levels < 1 || levels > 8) throw UsageError("--levels must be in 1..8");
    const ClassAMultiplier m = mult.load();
    if (m.dimension() == 3) throw UsageError("probe-linfty needs a d = 1 or 2 multiplier");
    const int d = m.dimension();
    UniformGrid g = grid.grid(d).value_or(default_reference_grid(d));

    ordered_json config;
    mult.to_json(config);
    config["dim"] = d;
    config["levels"] = levels;
    config["mode"] = mode;
    grid.to_json(config, g);
    config["out"] = common.out;

    std::vector<UniformGrid> grids;
    for (int i = 0; i < levels; ++i) {
      grids.push_back(g);
      const double extent = mode == "refine" ? g.extent() : 2.0 * g.extent();
      g = make_grid(d, extent, 2 * g.points_per_axis());
    }
    const RunHeader header{command, compact(config), common.seed};
    std::ostringstream csv;
    write_linfty_csv(csv, header, linfty_probe(m, grids));
    write_file(common.out, "linfty.csv", csv.str());
    return kExitOk;
  }
};

std::string joined(const std::vector<std::string>& args) {
  std::string out;
  for (std::size_t i = 1; i < args.size(); ++i) {
    if (i > 1) out += ' ';
    out += args[i];
  }
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args) {
  CLI::App app{"weakmult: numerical experiments on weak-type Fourier multipliers", "weakmult"};
  app.set_version_flag("--version", tool_version());
  app.require_subcommand(1);

  SharpnessCmd sharpness;
  Weak11Cmd weak11;
  ZygmundCmd zygmund;
  ChainCmd chain;
  RestrictionCmd restriction;
  ProbeCmd probe;
  auto* sharp_app = app.add_subcommand("sharpness", "Lorentz norms of K * h_n against n");
  auto* weak_app = app.add_subcommand("weak11", "weak (1,1) ratios over input families");
  auto* zyg_app = app.add_subcommand("zygmund", "sphere functional int |K| log(1 + |K|)");
  auto* chain_app = app.add_subcommand("chain", "evaluate the six-step inequality chain");
  auto* restr_app = app.add_subcommand("restriction", "restriction ratios over dilated bumps");
  auto* probe_app = app.add_subcommand("probe-linfty", "sup |m| over refined or extended grids");
  sharpness.add(sharp_app);
  weak11.add(weak_app);
  zygmund.add(zyg_app);
  chain.add(chain_app);
  restriction.add(restr_app);
  probe.add(probe_app);

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const std::string command = joined(args);
  try {
    if (*sharp_app) return sharpness.run(command);
    if (*weak_app) return weak11.run(command);
    if (*zyg_app) return zygmund.run(command);
    if (*chain_app) return chain.run(command);
    if (*restr_app) return restriction.run(command);
    if (*probe_app) return probe.run(command);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "unconverged: " << e.what() << '\n';
    return kExitUnconverged;
  } catch (const WrapAroundError& e) {
    std::cerr << "unconverged: " << e.what() << '\n';
    return kExitUnconverged;
  } catch (const std::logic_error& e) {
    std::cerr << "check failed: " << e.what() << '\n';
    return kExitCheckFailed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return run(args);
}

}  // namespace weakmult::cli

// Command-line front end: every pipeline as a subcommand with reproducible
// configuration.  Exit codes: 0 success, 1 computation flagged untrusted (or
// failed verification), 2 usage error.
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "softedge/curves.hpp"
#include "softedge/histogram.hpp"
#include "softedge/io.hpp"
#include "softedge/kernels.hpp"
#include "softedge/lpp.hpp"
#include "softedge/painleve.hpp"
#include "softedge/samplers.hpp"
#include "softedge/threads.hpp"
#include "softedge/verify.hpp"
#include "softedge/version.hpp"

namespace {

using nlohmann::json;
using namespace softedge;

// All tunables of a run.  One struct for every subcommand keeps the
// config-file loader and the sidecar writer uniform.
struct JobConfig {
  // grid
  double t_min = -8.0, t_max = 4.0, t_step = 0.05;
  // law parameters
  double xi = 1.0;
  std::string variant = "gue";  // gue | lue | lue-alpha
  double alpha = 0.0;
  int N = 50;
  double a = 0.0;
  int n_cols = 0;  // lpp columns; 0 means "same as N"
  // numerics
  std::string route = "operator";  // operator | ode
  int order = 96;
  double h = 1e-3;
  double tail = 16.0;
  double y_start = 8.0;
  double checkpoint_tol = 1e-2;
  bool compare = false;
  bool scaled_diff = false;
  // sampling
  std::string model = "gue";  // gue | lue | wigner4 | lpp
  std::uint64_t seed = 42;
  std::uint64_t count = 10000;
  std::string scaling;  // raw | edge | edge-alpha | cc | cc2 (model default)
  int bins = 0;
  std::string histogram_path;
  // verification
  std::string suite;
  std::string report_path = "verify.json";
  // output
  std::string output;
  std::string format = "csv";  // csv | json
  std::string dump_sigma;
  std::string config_path;
  int threads = 0;
};

// Binds a CLI option to a JobConfig field, remembers how to override it from
// a config file (only when the flag was absent on the command line) and how
// to serialize it into the reproducibility sidecar.
struct Binding {
  CLI::Option* opt = nullptr;
  std::function<void(const json&)> load;
  std::function<json()> store;
};
using Bindings = std::map<std::string, Binding>;

template <typename T>
void bind_option(CLI::App* sub, Bindings& b, const std::string& flag, T& field,
                 const std::string& desc) {
  auto* opt = sub->add_option(flag, field, desc);
  b[flag.substr(2)] = Binding{
      opt, [&field](const json& v) { field = v.get<T>(); },
      [&field]() { return json(field); }};
}

void bind_flag(CLI::App* sub, Bindings& b, const std::string& flag, bool& field,
               const std::string& desc) {
  auto* opt = sub->add_flag(flag, field, desc);
  b[flag.substr(2)] = Binding{
      opt, [&field](const json& v) { field = v.get<bool>(); },
      [&field]() { return json(field); }};
}

// Shared option groups.
void bind_grid(CLI::App* sub, Bindings& b, JobConfig& cfg) {
  bind_option(sub, b, "--t-min", cfg.t_min, "left end of the t grid");
  bind_option(sub, b, "--t-max", cfg.t_max, "right end of the t grid");
  bind_option(sub, b, "--t-step", cfg.t_step, "t grid spacing");
}

void bind_output(CLI::App* sub, Bindings& b, JobConfig& cfg) {
  bind_option(sub, b, "--output", cfg.output,
              "output path (default <subcommand>.<format>)");
  bind_option(sub, b, "--format", cfg.format, "output format: csv or json");
  bind_option(sub, b, "--threads", cfg.threads,
              "worker threads (0: SOFTEDGE_THREADS or hardware)");
  bind_option(sub, b, "--config", cfg.config_path,
              "JSON config file; explicit flags override its keys");
}

void bind_quadrature(CLI::App* sub, Bindings& b, JobConfig& cfg) {
  bind_option(sub, b, "--order", cfg.order, "Gauss-Legendre nodes (>= 8)");
  bind_option(sub, b, "--h", cfg.h, "central-difference step for densities");
  bind_option(sub, b, "--tail", cfg.tail, "upper truncation of the window");
}

void bind_ode(CLI::App* sub, Bindings& b, JobConfig& cfg) {
  bind_option(sub, b, "--route", cfg.route,
              "computation route: operator or ode");
  bind_option(sub, b, "--y-start", cfg.y_start,
              "ODE boundary position (right tail)");
  bind_option(sub, b, "--checkpoint-tol", cfg.checkpoint_tol,
              "ODE-vs-operator checkpoint mismatch threshold");
  bind_option(sub, b, "--dump-sigma", cfg.dump_sigma,
              "also dump the Painleve solution table to this path (ode route)");
}

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<double> make_grid(const JobConfig& cfg) {
  if (!(cfg.t_min < cfg.t_max)) throw UsageError("need t-min < t-max");
  if (!(cfg.t_step > 0.0)) throw UsageError("need t-step > 0");
  const auto steps = static_cast<std::size_t>(
      std::floor((cfg.t_max - cfg.t_min) / cfg.t_step + 1e-9));
  std::vector<double> ts(steps + 1);
  for (std::size_t i = 0; i <= steps; ++i) ts[i] = cfg.t_min + double(i) * cfg.t_step;
  return ts;
}

void validate_common(const JobConfig& cfg) {
  if (!(cfg.xi >= 0.0 && cfg.xi <= 1.0))
    throw UsageError("xi must lie in [0, 1]");
  if (cfg.order < 8) throw UsageError("order must be at least 8");
  if (cfg.format != "csv" && cfg.format != "json")
    throw UsageError("format must be csv or json");
}

painleve::SigmaVariant sigma_variant(const std::string& variant) {
  if (variant == "gue") return painleve::SigmaVariant::GUE;
  if (variant == "lue") return painleve::SigmaVariant::LUE;
  if (variant == "lue-alpha") return painleve::SigmaVariant::LUEAlpha;
  throw UsageError("variant must be gue, lue or lue-alpha");
}

kernels::KernelSpec correction_spec(const JobConfig& cfg) {
  if (cfg.variant == "gue") return kernels::KernelSpec::correction_gue();
  if (cfg.variant == "lue") return kernels::KernelSpec::correction_lue();
  if (cfg.variant == "lue-alpha") {
    if (!(cfg.alpha > 0.0))
      throw UsageError("variant lue-alpha needs --alpha > 0");
    return kernels::KernelSpec::correction_lue_alpha(cfg.alpha);
  }
  throw UsageError("variant must be gue, lue or lue-alpha");
}

kernels::KernelSpec finite_spec(const JobConfig& cfg) {
  if (cfg.N < 1) throw UsageError("finite curves need --N >= 1");
  if (cfg.variant == "gue") return kernels::KernelSpec::finite_gue(cfg.N);
  if (cfg.variant == "lue") {
    if (cfg.a < 0.0) throw UsageError("need --a >= 0");
    return kernels::KernelSpec::finite_lue(cfg.N, cfg.a);
  }
  if (cfg.variant == "lue-alpha") {
    if (!(cfg.alpha > 0.0))
      throw UsageError("variant lue-alpha needs --alpha > 0");
    return kernels::KernelSpec::finite_lue_alpha(cfg.N, cfg.alpha);
  }
  throw UsageError("variant must be gue, lue or lue-alpha");
}

simulate::Scaling parse_scaling(const std::string& name) {
  if (name == "raw") return simulate::Scaling::Raw;
  if (name == "edge") return simulate::Scaling::Edge;
  if (name == "edge-alpha") return simulate::Scaling::EdgeAlpha;
  if (name == "cc") return simulate::Scaling::CC;
  if (name == "cc2") return simulate::Scaling::CC2;
  throw UsageError("scaling must be raw, edge, edge-alpha, cc or cc2");
}

fredholm::CurveOptions curve_options(const JobConfig& cfg) {
  fredholm::CurveOptions o;
  o.order = cfg.order;
  o.h = cfg.h;
  o.tail = cfg.tail;
  o.threads = resolve_threads(cfg.threads);
  return o;
}

painleve::OdeCurveOptions ode_options(const JobConfig& cfg, bool limit_only) {
  painleve::OdeCurveOptions o;
  o.boundary.y_start = cfg.y_start;
  o.limit_only = limit_only;
  o.checkpoint_tol = cfg.checkpoint_tol;
  o.operator_order = cfg.order;
  o.threads = resolve_threads(cfg.threads);
  return o;
}

std::string default_output(const JobConfig& cfg, const std::string& name) {
  if (!cfg.output.empty()) return cfg.output;
  return name + (cfg.format == "json" ? ".json" : ".csv");
}

json flags_json(const Bindings& b) {
  json flags;
  for (const auto& [key, binding] : b) flags[key] = binding.store();
  return flags;
}

void write_sidecar(const std::string& output, const std::string& command,
                   const Bindings& b, const json& extra) {
  json side;
  side["command"] = command;
  side["flags"] = flags_json(b);
  side["version"] = kVersion;
  if (!extra.is_null()) side["result"] = extra;
  io::write_text_file(output + ".meta.json", side.dump(2) + "\n");
}

// Applies config-file values to every flag the command line left untouched.
void apply_config(const JobConfig& cfg, Bindings& b) {
  if (cfg.config_path.empty()) return;
  json doc;
  try {
    doc = json::parse(io::read_text_file(cfg.config_path));
  } catch (const json::parse_error& e) {
    throw UsageError(std::string("config file is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw UsageError("config file must hold a JSON object");
  for (const auto& [key, value] : doc.items()) {
    auto it = b.find(key);
    if (it == b.end()) throw UsageError("unknown config key: " + key);
    try {
      if (it->second.opt->count() == 0) it->second.load(value);
    } catch (const json::exception& e) {
      throw UsageError("config key '" + key + "': " + e.what());
    }
  }
}

int finish_curve(const JobConfig& cfg, const Bindings& b,
                 const std::string& command,
                 const fredholm::DistributionCurve& curve) {
  const std::string out = default_output(cfg, command);
  if (cfg.format == "json")
    io::write_text_file(out, io::curve_json(curve) + "\n");
  else
    io::write_curve_csv(out, curve);
  json extra;
  extra = json::parse(io::curve_meta_json(curve.meta));
  write_sidecar(out, command, b, extra);

  std::size_t flagged = 0;
  for (auto u : curve.untrusted) flagged += u != 0;
  if (flagged > 0) {
    std::fprintf(stderr,
                 "warning: %zu of %zu points flagged untrusted "
                 "(checkpoint mismatch); see the untrusted column\n",
                 flagged, curve.ts.size());
    return 1;
  }
  return 0;
}

void maybe_dump_sigma(const JobConfig& cfg, bool with_sigma1) {
  if (cfg.dump_sigma.empty()) return;
  if (cfg.route != "ode") {
    std::fprintf(stderr, "note: --dump-sigma applies to --route ode only\n");
    return;
  }
  if (cfg.xi == 0.0) {
    std::fprintf(stderr, "note: xi = 0 has no ODE solution to dump\n");
    return;
  }
  painleve::BoundaryConfig bc;
  bc.y_start = cfg.y_start;
  const double y_min = std::min(-10.0, cfg.t_min);
  auto sol = painleve::solve_sigma0(cfg.xi, bc, y_min);
  if (with_sigma1)
    sol = painleve::solve_sigma1(sigma_variant(cfg.variant), sol, cfg.alpha);
  io::write_sigma_csv(cfg.dump_sigma, sol);
}

int cmd_limit(const JobConfig& cfg, Bindings& b) {
  validate_common(cfg);
  const auto ts = make_grid(cfg);
  fredholm::DistributionCurve curve;
  if (cfg.route == "operator") {
    curve = fredholm::limit_curve(cfg.xi, ts, curve_options(cfg));
  } else if (cfg.route == "ode") {
    curve = painleve::ode_curve(painleve::SigmaVariant::GUE, 0.0, cfg.xi, ts,
                                ode_options(cfg, /*limit_only=*/true));
    maybe_dump_sigma(cfg, /*with_sigma1=*/false);
  } else {
    throw UsageError("route must be operator or ode");
  }
  return finish_curve(cfg, b, "limit", curve);
}

int cmd_correction(const JobConfig& cfg, Bindings& b) {
  validate_common(cfg);
  const auto ts = make_grid(cfg);

  if (cfg.compare) {
    const auto op =
        fredholm::correction_curve(correction_spec(cfg), cfg.xi, ts,
                                   curve_options(cfg));
    const auto ode = painleve::ode_curve(sigma_variant(cfg.variant), cfg.alpha,
                                         cfg.xi, ts, ode_options(cfg, false));
    const std::string out = default_output(cfg, "correction");
    double sup = 0.0;
    for (std::size_t i = 0; i < ts.size(); ++i)
      sup = std::max(sup, std::abs(op.p1[i] - ode.p1[i]));
    if (cfg.format == "json") {
      json j;
      j["meta"] = json::parse(io::curve_meta_json(op.meta));
      j["meta"]["route"] = "compare";
      j["t"] = ts;
      j["p1_operator"] = op.p1;
      j["p1_ode"] = ode.p1;
      json diff = json::array();
      for (std::size_t i = 0; i < ts.size(); ++i)
        diff.push_back(op.p1[i] - ode.p1[i]);
      j["diff"] = diff;
      j["sup_diff"] = sup;
      io::write_text_file(out, j.dump(2) + "\n");
    } else {
      std::string text = "t,p1_operator,p1_ode,diff\n";
      for (std::size_t i = 0; i < ts.size(); ++i) {
        text += io::format_double(ts[i]) + "," + io::format_double(op.p1[i]) +
                "," + io::format_double(ode.p1[i]) + "," +
                io::format_double(op.p1[i] - ode.p1[i]) + "\n";
      }
      io::write_text_file(out, text);
    }
    json extra;
    extra["sup_diff"] = sup;
    write_sidecar(out, "correction", b, extra);
    std::printf("max |operator - ode| = %s\n", io::format_double(sup).c_str());
    maybe_dump_sigma(cfg, /*with_sigma1=*/true);
    std::size_t flagged = 0;
    for (auto u : ode.untrusted) flagged += u != 0;
    return flagged > 0 ? 1 : 0;
  }

  fredholm::DistributionCurve curve;
  if (cfg.route == "operator") {
    curve = fredholm::correction_curve(correction_spec(cfg), cfg.xi, ts,
                                       curve_options(cfg));
  } else if (cfg.route == "ode") {
    (void)correction_spec(cfg);  // validates variant/alpha pairing
    curve = painleve::ode_curve(sigma_variant(cfg.variant), cfg.alpha, cfg.xi,
                                ts, ode_options(cfg, false));
    maybe_dump_sigma(cfg, /*with_sigma1=*/true);
  } else {
    throw UsageError("route must be operator or ode");
  }
  return finish_curve(cfg, b, "correction", curve);
}

int cmd_finite(const JobConfig& cfg, Bindings& b) {
  validate_common(cfg);
  const auto ts = make_grid(cfg);
  const auto spec = finite_spec(cfg);
  const auto opts = curve_options(cfg);
  const auto curve = cfg.scaled_diff
                         ? fredholm::scaled_difference(spec, cfg.xi, ts, opts)
                         : fredholm::finite_curve(spec, cfg.xi, ts, opts);
  if (curve.meta.clipped_points > 0)
    std::fprintf(stderr,
                 "note: %d grid points below the Laguerre window were "
                 "dropped\n",
                 curve.meta.clipped_points);
  return finish_curve(cfg, b, "finite", curve);
}

int cmd_simulate(const JobConfig& cfg, Bindings& b) {
  if (cfg.format != "csv" && cfg.format != "json")
    throw UsageError("format must be csv or json");
  if (cfg.count == 0) throw UsageError("count must be positive");

  std::string scaling_name = cfg.scaling;
  if (scaling_name.empty())
    scaling_name = cfg.model == "wigner4" ? "cc"
                   : cfg.model == "lpp"   ? "raw"
                                          : "edge";
  const auto scaling = parse_scaling(scaling_name);
  const int threads = resolve_threads(cfg.threads);

  simulate::SampleBatch batch;
  if (cfg.model == "gue") {
    batch = simulate::sample_gue_max(cfg.N, cfg.count, cfg.seed, cfg.xi,
                                     scaling, threads);
  } else if (cfg.model == "lue") {
    batch = simulate::sample_lue_max(cfg.N, cfg.a, cfg.count, cfg.seed, cfg.xi,
                                     scaling, threads);
  } else if (cfg.model == "wigner4") {
    if (cfg.xi != 1.0)
      throw UsageError("thinning applies to gue/lue models only");
    batch = simulate::sample_wigner4_max(cfg.N, cfg.count, cfg.seed, scaling,
                                         threads);
  } else if (cfg.model == "lpp") {
    if (cfg.xi != 1.0)
      throw UsageError("thinning applies to gue/lue models only");
    const int cols = cfg.n_cols > 0 ? cfg.n_cols : cfg.N;
    batch = simulate::lpp_sample({cfg.N, cols}, cfg.count, cfg.seed, scaling,
                                 threads);
  } else {
    throw UsageError("model must be gue, lue, wigner4 or lpp");
  }

  const std::string out = default_output(cfg, "simulate");
  if (cfg.format == "json")
    io::write_text_file(out, io::batch_json(batch) + "\n");
  else
    io::write_batch_csv(out, batch);
  write_sidecar(out, "simulate", b, json::parse(io::batch_meta_json(batch)));

  if (!cfg.histogram_path.empty()) {
    const auto hist = simulate::build_histogram(batch, cfg.bins);
    if (cfg.format == "json")
      io::write_text_file(cfg.histogram_path, io::histogram_json(hist) + "\n");
    else
      io::write_histogram_csv(cfg.histogram_path, hist);
  }
  return 0;
}

int cmd_verify(const JobConfig& cfg, Bindings& b) {
  std::vector<int> indices;
  if (cfg.suite.empty()) {
    for (int i = 1; i <= 9; ++i) indices.push_back(i);
  } else {
    const int idx = verify::criterion_index(cfg.suite);
    if (idx == 0) {
      std::string names;
      for (const auto& n : verify::criterion_names()) names += " " + n;
      throw UsageError("unknown suite '" + cfg.suite + "'; expected one of:" +
                       names);
    }
    indices.push_back(idx);
  }

  json criteria = json::array();
  bool all_pass = true;
  for (int idx : indices) {
    const auto r = verify::run_criterion(idx, cfg.threads);
    std::printf("%s criterion %d [%s]: %s (%.1fs)\n",
                r.pass ? "PASS" : "FAIL", r.index, r.name.c_str(),
                r.detail.c_str(), r.seconds);
    std::fflush(stdout);
    all_pass = all_pass && r.pass;
    json jr;
    jr["index"] = r.index;
    jr["name"] = r.name;
    jr["pass"] = r.pass;
    jr["detail"] = r.detail;
    jr["seconds"] = r.seconds;
    criteria.push_back(jr);
  }

  if (!cfg.report_path.empty()) {
    json report;
    report["criteria"] = criteria;
    report["all_pass"] = all_pass;
    report["version"] = kVersion;
    io::write_text_file(cfg.report_path, report.dump(2) + "\n");
    write_sidecar(cfg.report_path, "verify", b, json());
  }
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "soft-edge distributions: limiting laws, finite-size corrections, "
      "finite-N references, Monte Carlo sampling and self-verification"};
  app.set_help_flag("--help", "print help and exit");
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  JobConfig cfg;
  Bindings b_limit, b_correction, b_finite, b_simulate, b_verify;

  auto* limit = app.add_subcommand(
      "limit", "limiting distribution (F, p0) under thinning");
  limit->set_help_flag("--help", "print help and exit");
  bind_option(limit, b_limit, "--xi", cfg.xi, "retention probability in [0,1]");
  bind_grid(limit, b_limit, cfg);
  bind_quadrature(limit, b_limit, cfg);
  bind_ode(limit, b_limit, cfg);
  bind_output(limit, b_limit, cfg);

  auto* correction = app.add_subcommand(
      "correction", "first-order finite-size correction density p1");
  correction->set_help_flag("--help", "print help and exit");
  bind_option(correction, b_correction, "--variant", cfg.variant,
              "kernel family: gue, lue or lue-alpha");
  bind_option(correction, b_correction, "--alpha", cfg.alpha,
              "proportional Laguerre parameter (lue-alpha)");
  bind_option(correction, b_correction, "--xi", cfg.xi,
              "retention probability in [0,1]");
  bind_flag(correction, b_correction, "--compare", cfg.compare,
            "write both routes plus their difference");
  bind_grid(correction, b_correction, cfg);
  bind_quadrature(correction, b_correction, cfg);
  bind_ode(correction, b_correction, cfg);
  bind_output(correction, b_correction, cfg);

  auto* finite = app.add_subcommand(
      "finite", "finite-N distribution under the canonical edge scaling");
  finite->set_help_flag("--help", "print help and exit");
  bind_option(finite, b_finite, "--variant", cfg.variant,
              "ensemble: gue, lue or lue-alpha");
  bind_option(finite, b_finite, "--N", cfg.N, "matrix size");
  bind_option(finite, b_finite, "--a", cfg.a, "Laguerre exponent (lue)");
  bind_option(finite, b_finite, "--alpha", cfg.alpha,
              "proportional parameter (lue-alpha)");
  bind_option(finite, b_finite, "--xi", cfg.xi,
              "retention probability in [0,1]");
  bind_flag(finite, b_finite, "--scaled-diff", cfg.scaled_diff,
            "emit p1 = N^{2/3}(p_N - p0) instead of the plain finite curve");
  bind_grid(finite, b_finite, cfg);
  bind_quadrature(finite, b_finite, cfg);
  bind_output(finite, b_finite, cfg);

  auto* sim = app.add_subcommand("simulate",
                                 "Monte Carlo batches and histograms");
  sim->set_help_flag("--help", "print help and exit");
  bind_option(sim, b_simulate, "--model", cfg.model,
              "gue, lue, wigner4 or lpp");
  bind_option(sim, b_simulate, "--N", cfg.N, "matrix size / grid rows");
  bind_option(sim, b_simulate, "--a", cfg.a, "Laguerre exponent (lue)");
  bind_option(sim, b_simulate, "--n", cfg.n_cols,
              "grid columns for lpp (default: N)");
  bind_option(sim, b_simulate, "--xi", cfg.xi,
              "retention probability (gue/lue)");
  bind_option(sim, b_simulate, "--count", cfg.count, "number of samples");
  bind_option(sim, b_simulate, "--seed", cfg.seed, "RNG seed");
  bind_option(sim, b_simulate, "--scaling", cfg.scaling,
              "raw, edge, edge-alpha, cc or cc2 (default per model)");
  bind_option(sim, b_simulate, "--bins", cfg.bins,
              "histogram bins (0: Freedman-Diaconis)");
  bind_option(sim, b_simulate, "--histogram", cfg.histogram_path,
              "also write a histogram to this path");
  bind_output(sim, b_simulate, cfg);

  auto* ver = app.add_subcommand("verify", "acceptance battery");
  ver->set_help_flag("--help", "print help and exit");
  bind_option(ver, b_verify, "--suite", cfg.suite,
              "run a single criterion by name (default: all nine)");
  bind_option(ver, b_verify, "--report", cfg.report_path,
              "JSON report path (empty: console only)");
  bind_option(ver, b_verify, "--threads", cfg.threads,
              "worker threads (0: SOFTEDGE_THREADS or hardware)");
  bind_option(ver, b_verify, "--config", cfg.config_path,
              "JSON config file; explicit flags override its keys");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (limit->parsed()) {
      apply_config(cfg, b_limit);
      return cmd_limit(cfg, b_limit);
    }
    if (correction->parsed()) {
      apply_config(cfg, b_correction);
      return cmd_correction(cfg, b_correction);
    }
    if (finite->parsed()) {
      apply_config(cfg, b_finite);
      return cmd_finite(cfg, b_finite);
    }
    if (sim->parsed()) {
      apply_config(cfg, b_simulate);
      return cmd_simulate(cfg, b_simulate);
    }
    apply_config(cfg, b_verify);
    return cmd_verify(cfg, b_verify);
  } catch (const UsageError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::domain_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "failure: %s\n", e.what());
    return 1;
  }
}

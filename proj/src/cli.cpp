#include "wavecas/cli.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "wavecas/acceptance.hpp"
#include "wavecas/casimir/casimir.hpp"
#include "wavecas/common.hpp"
#include "wavecas/io/table.hpp"
#include "wavecas/wavelets/wavelet_family.hpp"

namespace wavecas::cli {

namespace {

using casimir::BoundaryCondition;
using casimir::CasimirConfig;
using casimir::Method;
using wavelets::WaveletFamily;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNumeric = 3;

std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buffer[32];
  std::strftime(buffer, sizeof(buffer), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buffer;
}

struct OutputOptions {
  std::string format = "csv";
  std::string out_path;  // empty: stdout
  std::string unit = "cutoff";
  int workers = 0;  // 0: pick a small default
};

void add_output_options(CLI::App* cmd, OutputOptions& opts) {
  cmd->add_option("--format", opts.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--out", opts.out_path, "Output path (default: stdout)");
  cmd->add_option("--unit", opts.unit, "Report lengths in units of A and energies in A^-4, or raw")
      ->check(CLI::IsMember({"cutoff", "absolute"}));
  cmd->add_option("--workers", opts.workers, "Worker threads for sweeps")->check(CLI::Range(0, 64));
}

int worker_count(const OutputOptions& opts) {
  if (opts.workers > 0) return opts.workers;
  const unsigned hw = std::thread::hardware_concurrency();
  return static_cast<int>(std::min(4u, hw == 0 ? 1u : hw));
}

// Evaluates one row per grid index on a small worker pool.  Row order is by
// index and every point is internally deterministic, so the output does not
// depend on the worker count.
struct SweepOutcome {
  std::vector<std::optional<std::vector<double>>> rows;
  std::vector<std::string> failures;
};

SweepOutcome run_sweep(int points, int workers,
                       const std::function<std::vector<double>(int)>& evaluate) {
  SweepOutcome outcome;
  outcome.rows.resize(points);
  std::vector<std::string> failures(points);
  std::atomic<int> next{0};
  auto work = [&] {
    for (;;) {
      const int i = next.fetch_add(1);
      if (i >= points) return;
      try {
        outcome.rows[i] = evaluate(i);
      } catch (const std::exception& e) {
        failures[i] = e.what();
      }
    }
  };
  if (workers <= 1 || points <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < std::min(workers, points); ++t) pool.emplace_back(work);
    for (auto& thread : pool) thread.join();
  }
  for (int i = 0; i < points; ++i)
    if (!outcome.rows[i] && !failures[i].empty())
      outcome.failures.push_back("point " + std::to_string(i) + ": " + failures[i]);
  return outcome;
}

int emit(const OutputOptions& opts, const io::RunManifest& manifest, const io::CurveTable& table,
         const std::vector<std::string>& failures, std::ostream& out, std::ostream& err) {
  std::ostringstream buffer;
  if (opts.format == "json")
    io::write_json(buffer, manifest, table);
  else
    io::write_csv(buffer, manifest, table);

  if (opts.out_path.empty()) {
    out << buffer.str();
  } else {
    std::ofstream file(opts.out_path);
    if (!file) {
      err << "cannot open output path " << opts.out_path << "\n";
      return kExitNumeric;
    }
    file << buffer.str();
  }
  if (!failures.empty()) {
    // Failed sweep points are dropped, never zeroed; diagnostics go to a
    // sidecar next to the output (stderr when writing to stdout).
    if (opts.out_path.empty()) {
      for (const auto& f : failures) err << "dropped " << f << "\n";
    } else {
      std::ofstream diag(opts.out_path + ".diag.txt");
      for (const auto& f : failures) diag << f << "\n";
      err << failures.size() << " point(s) dropped; see " << opts.out_path << ".diag.txt\n";
    }
  }
  if (!table.rows.empty()) return kExitOk;
  err << "no point evaluated successfully\n";
  return kExitNumeric;
}

io::RunManifest make_manifest(const std::string& command, const std::string& family,
                              const OutputOptions& opts,
                              std::vector<std::pair<std::string, std::string>> params) {
  io::RunManifest manifest;
  manifest.command = command;
  manifest.family_spec = family;
  manifest.parameters = std::move(params);
  manifest.version = kVersion;
  manifest.unit_mode = opts.unit;
  const numerics::QuadratureSpec spec;
  std::ostringstream tol;
  tol << "abs=" << spec.abs_tol << " rel=" << spec.rel_tol << " tail=" << spec.tail_threshold;
  manifest.tolerances = tol.str();
  manifest.timestamp = utc_timestamp();
  return manifest;
}

std::string fmt(double v) {
  std::ostringstream out;
  out << v;
  return out.str();
}

// ---------------------------------------------------------------------------
// cutoff
// ---------------------------------------------------------------------------

struct CutoffArgs {
  std::string wavelet;
  double kmin = 0.0, kmax = 5.0, rmax = 5.0;
  int steps = 101;
  bool position = false;
  OutputOptions out;
};

int run_cutoff(const CutoffArgs& args, std::ostream& out, std::ostream& err) {
  const WaveletFamily family = wavelets::parse_family_spec(args.wavelet);
  io::CurveTable table;
  if (args.position) {
    table.columns = {"r", "w_position"};
    table.units = {"A", "arb"};
  } else {
    table.columns = {"k", "f_tilde", "w_tilde_momentum"};
    table.units = {"1/A", "1", "arb"};
  }
  const int points = args.steps;
  auto evaluate = [&](int i) -> std::vector<double> {
    if (args.position) {
      const double r = points == 1 ? 0.0 : args.rmax * i / (points - 1);
      return {r, wavelets::position_profile(family, r)};
    }
    const double k =
        points == 1 ? args.kmin : args.kmin + (args.kmax - args.kmin) * i / (points - 1);
    return {k, wavelets::cutoff(family, k), wavelets::momentum_profile(family, k)};
  };
  const auto outcome = run_sweep(points, worker_count(args.out), evaluate);
  for (const auto& row : outcome.rows)
    if (row) table.add_row(*row);
  const auto manifest = make_manifest("cutoff", family.name(), args.out,
                                      {{"kmin", fmt(args.kmin)},
                                       {"kmax", fmt(args.kmax)},
                                       {"steps", fmt(args.steps)},
                                       {"position", args.position ? "true" : "false"}});
  return emit(args.out, manifest, table, outcome.failures, out, err);
}

// ---------------------------------------------------------------------------
// force / energy
// ---------------------------------------------------------------------------

struct SweepArgs {
  std::string wavelet;
  std::string bc = "periodic";
  std::string method = "sum";
  double A = 1.0;
  double smin = 1.0, smax = 6.0;
  int steps = 100;
  std::optional<long> truncation;
  int order = 3;
  OutputOptions out;
};

BoundaryCondition parse_bc(const std::string& name) {
  return name == "dirichlet" ? BoundaryCondition::dirichlet : BoundaryCondition::periodic;
}

Method parse_method(const std::string& name) {
  if (name == "sum") return Method::direct_sum;
  if (name == "series") return Method::series;
  if (name == "exact") return Method::exact_closed_form;
  return Method::remainder;
}

CasimirConfig make_config(const SweepArgs& args, double s) {
  CasimirConfig config;
  config.s = s;
  config.A = args.A;
  config.bc = parse_bc(args.bc);
  config.method = parse_method(args.method);
  config.truncation = args.truncation;
  config.series_order = args.order;
  return config;
}

std::vector<std::pair<std::string, std::string>> sweep_params(const SweepArgs& args) {
  std::vector<std::pair<std::string, std::string>> params = {
      {"bc", args.bc},         {"method", args.method}, {"A", fmt(args.A)},
      {"smin", fmt(args.smin)}, {"smax", fmt(args.smax)}, {"steps", fmt(args.steps)},
      {"order", fmt(args.order)}};
  if (args.truncation) params.emplace_back("truncation", fmt(double(*args.truncation)));
  return params;
}

int check_sweep_args(const SweepArgs& args, const WaveletFamily& family, std::ostream& err) {
  if (args.smin <= 0.0 || args.smax < args.smin || args.steps < 1) {
    err << "invalid separation range\n";
    return kExitUsage;
  }
  if (parse_method(args.method) == Method::exact_closed_form &&
      family.kind() != WaveletFamily::Kind::exponential) {
    err << "--method exact is available for the exponential family only\n";
    return kExitUsage;
  }
  if (parse_method(args.method) != Method::series && args.A <= 0.0) {
    err << "A > 0 required except for the series method\n";
    return kExitUsage;
  }
  return kExitOk;
}

double sweep_point(const SweepArgs& args, int i) {
  return args.steps == 1 ? args.smin
                         : args.smin + (args.smax - args.smin) * i / (args.steps - 1);
}

int run_force(const SweepArgs& args, std::ostream& out, std::ostream& err) {
  const WaveletFamily family = wavelets::parse_family_spec(args.wavelet);
  if (int code = check_sweep_args(args, family, err); code != kExitOk) return code;
  const bool cutoff_units = args.out.unit == "cutoff";
  const double length_scale = cutoff_units ? args.A : 1.0;
  const double density_scale = cutoff_units ? std::pow(args.A, 4) : 1.0;

  io::CurveTable table;
  table.columns = {"s", "F", "F_continuum", "correction", "warning"};
  const std::string funit = cutoff_units ? "A^-4" : "1";
  table.units = {cutoff_units ? "A" : "1", funit, funit, funit, "1"};
  auto evaluate = [&](int i) -> std::vector<double> {
    const auto point = casimir::force_point(make_config(args, sweep_point(args, i)), family);
    return {point.s / length_scale, point.force * density_scale,
            point.force_continuum * density_scale, point.correction * density_scale,
            point.warning ? 1.0 : 0.0};
  };
  const auto outcome = run_sweep(args.steps, worker_count(args.out), evaluate);
  for (const auto& row : outcome.rows)
    if (row) table.add_row(*row);
  const auto manifest = make_manifest("force", family.name(), args.out, sweep_params(args));
  return emit(args.out, manifest, table, outcome.failures, out, err);
}

int run_energy(const SweepArgs& args, std::ostream& out, std::ostream& err) {
  const WaveletFamily family = wavelets::parse_family_spec(args.wavelet);
  if (int code = check_sweep_args(args, family, err); code != kExitOk) return code;
  const bool cutoff_units = args.out.unit == "cutoff";
  const double length_scale = cutoff_units ? args.A : 1.0;
  const double density_scale = cutoff_units ? std::pow(args.A, 4) : 1.0;

  io::CurveTable table;
  table.columns = {"s", "rho0", "bulk", "rho"};
  const std::string eunit = cutoff_units ? "A^-4" : "1";
  table.units = {cutoff_units ? "A" : "1", eunit, eunit, eunit};
  auto evaluate = [&](int i) -> std::vector<double> {
    const auto energy = casimir::rho_renormalized(make_config(args, sweep_point(args, i)), family);
    return {sweep_point(args, i) / length_scale, energy.rho0 * density_scale,
            energy.bulk * density_scale, energy.rho * density_scale};
  };
  const auto outcome = run_sweep(args.steps, worker_count(args.out), evaluate);
  for (const auto& row : outcome.rows)
    if (row) table.add_row(*row);
  const auto manifest = make_manifest("energy", family.name(), args.out, sweep_params(args));
  return emit(args.out, manifest, table, outcome.failures, out, err);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Casimir energies and forces for scale-limited scalar fields"};
  app.require_subcommand(1);

  CutoffArgs cutoff_args;
  auto* cutoff_cmd = app.add_subcommand("cutoff", "Tabulate a cutoff function and its profiles");
  cutoff_cmd->add_option("--wavelet", cutoff_args.wavelet,
                         "hermitian:n=<int> | exponential | bump | nonanalytic | custom:<path>")
      ->required();
  cutoff_cmd->add_option("--kmin", cutoff_args.kmin);
  cutoff_cmd->add_option("--kmax", cutoff_args.kmax);
  cutoff_cmd->add_option("--steps", cutoff_args.steps)->check(CLI::PositiveNumber);
  cutoff_cmd->add_flag("--position", cutoff_args.position,
                       "Emit the position-space profile (r, w_position) instead");
  cutoff_cmd->add_option("--rmax", cutoff_args.rmax);
  add_output_options(cutoff_cmd, cutoff_args.out);

  SweepArgs force_args;
  auto* force_cmd = app.add_subcommand("force", "Casimir force over a separation sweep");
  SweepArgs energy_args;
  auto* energy_cmd = app.add_subcommand("energy", "Energy densities over a separation sweep");
  for (auto [cmd, sweep] : {std::pair{force_cmd, &force_args}, std::pair{energy_cmd, &energy_args}}) {
    cmd->add_option("--wavelet", sweep->wavelet, "Wavelet family spec")->required();
    cmd->add_option("--bc", sweep->bc)->check(CLI::IsMember({"periodic", "dirichlet"}));
    cmd->add_option("--method", sweep->method)
        ->check(CLI::IsMember({"sum", "series", "exact", "remainder"}));
    cmd->add_option("--A", sweep->A, "Scale cutoff");
    cmd->add_option("--smin", sweep->smin);
    cmd->add_option("--smax", sweep->smax);
    cmd->add_option("--steps", sweep->steps)->check(CLI::PositiveNumber);
    cmd->add_option("--truncation", sweep->truncation, "Fixed mode count N (adaptive otherwise)");
    cmd->add_option("--order", sweep->order, "Series truncation M")->check(CLI::Range(2, 10));
    add_output_options(cmd, sweep->out);
  }

  std::vector<std::string> verify_only;
  bool verify_list = false;
  auto* verify_cmd = app.add_subcommand("verify", "Run the acceptance criteria");
  verify_cmd->add_option("--only", verify_only, "Run the named criteria only");
  verify_cmd->add_flag("--list", verify_list, "List criterion names without running");

  // CLI11 wants argv-style reversed input.
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      out << app.help();
      return kExitOk;
    }
    err << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (cutoff_cmd->parsed()) return run_cutoff(cutoff_args, out, err);
    if (force_cmd->parsed()) return run_force(force_args, out, err);
    if (energy_cmd->parsed()) return run_energy(energy_args, out, err);
    if (verify_cmd->parsed()) {
      if (verify_list) {
        acceptance::list(out);
        return kExitOk;
      }
      return acceptance::run(out, verify_only) == 0 ? kExitOk : kExitVerifyFailed;
    }
  } catch (const std::invalid_argument& e) {
    err << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << e.what() << "\n";
    return kExitNumeric;
  }
  return kExitUsage;
}

}  // namespace wavecas::cli

// morseband: command-line front end.
//
// Exit codes: 0 success, 1 verification or numerical failure, 2 configuration
// or argument error, 3 output error.

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "morseband/commands.hpp"
#include "morseband/config.hpp"
#include "morseband/errors.hpp"
#include "morseband/kernels.hpp"
#include "morseband/verify.hpp"

using namespace morseband;

namespace {

enum Exit { ok = 0, failed = 1, bad_config = 2, io = 3 };

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.output_path.empty()) {
    std::cout << text << std::flush;
    return;
  }
  std::ofstream f(cfg.output_path, std::ios::binary);
  if (!f) throw IoError("cannot open '" + cfg.output_path + "' for writing");
  f << text;
  f.close();
  if (!f) throw IoError("failed writing '" + cfg.output_path + "'");
}

void apply_thread_env() {
  const char* env = std::getenv("MORSEBAND_THREADS");
  if (env == nullptr || *env == '\0') return;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v < 0) throw ConfigError(std::string("MORSEBAND_THREADS must be a non-negative integer, got '") + env + "'");
  kernels::set_thread_limit(static_cast<int>(v));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Electron on a band in a Morse-like magnetic field: spectra, states and checks"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", std::string(report::version()));

  std::string config_path;
  std::string format;
  std::string out_path;
  std::vector<std::string> tol_overrides;
  app.add_option("--config", config_path, "key=value or JSON run configuration");
  app.add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--out", out_path, "output file (default stdout)");
  app.add_option("--tol", tol_overrides, "tolerance override NAME=VALUE (repeatable)");

  // The selected subcommand fills this with the text to emit and the exit code.
  std::function<int(RunConfig&, std::string&)> action;
  auto table_action = [&](std::function<report::Table(const RunConfig&)> build, std::string default_format = "csv") {
    action = [build, default_format](RunConfig& cfg, std::string& text) {
      std::ostringstream os;
      report::write(os, build(cfg), cfg.output_format.empty() ? default_format : cfg.output_format);
      text = os.str();
      return static_cast<int>(ok);
    };
  };

  int l_max = -1;
  int n_max = 5;
  auto* spectrum = app.add_subcommand("spectrum", "energy levels with their multiplicities");
  spectrum->add_option("--n-max", n_max, "largest n")->capture_default_str();
  spectrum->add_option("--l-max", l_max, "largest l (default n_max - 1)");
  spectrum->callback([&] { table_action([&](const RunConfig& c) { return commands::spectrum(c, l_max, n_max); }); });

  int deg_n_max = 200;
  int min_mult = 1;
  auto* degeneracy = app.add_subcommand("degeneracy", "energy classes sharing (2n-2l-1)(2n+2l+1)");
  degeneracy->add_option("--n-max", deg_n_max, "scan window")->capture_default_str();
  degeneracy->add_option("--min-multiplicity", min_mult, "only list classes at least this large")->capture_default_str();
  degeneracy->callback(
      [&] { table_action([&](const RunConfig& c) { return commands::degeneracy(c, deg_n_max, min_mult); }); });

  int l = 0;
  int n = 1;
  int nx = commands::kPlotNx;
  int ny = commands::kPlotNy;
  auto* wave = app.add_subcommand("wavefunction", "x profile of an eigenstate");
  wave->add_option("--l", l)->capture_default_str();
  wave->add_option("--n", n)->capture_default_str();
  wave->add_option("--nx", nx)->capture_default_str();
  wave->callback([&] { table_action([&](const RunConfig& c) { return commands::wavefunction(c, {l, n}, nx); }); });

  int ladder_n_max = 5;
  auto* ladder = app.add_subcommand("ladder-check", "L+- matrix elements and H, C residuals on the grid");
  ladder->add_option("--n-max", ladder_n_max)->capture_default_str();
  ladder->callback([&] { table_action([&](const RunConfig& c) { return commands::ladder_check(c, ladder_n_max); }); });

  double z_re = 1.0;
  double z_im = 0.0;
  bool measure = false;
  double r_max = 20.0;
  int points = 401;
  auto* coh = app.add_subcommand("coherent", "coherent-state density, or the measure density with --measure");
  coh->add_option("--l", l)->capture_default_str();
  coh->add_option("--z-re", z_re)->capture_default_str();
  coh->add_option("--z-im", z_im)->capture_default_str();
  coh->add_option("--nx", nx)->capture_default_str();
  coh->add_option("--ny", ny)->capture_default_str();
  coh->add_flag("--measure", measure, "emit (r, density) of the identity measure instead");
  coh->add_option("--r-max", r_max)->capture_default_str();
  coh->add_option("--points", points)->capture_default_str();
  coh->callback([&] {
    table_action([&](const RunConfig& c) {
      return measure ? commands::coherent_measure(c, l, r_max, points)
                     : commands::coherent_density(c, l, Complex(z_re, z_im), nx, ny);
    });
  });

  int unc_l_max = 6;
  std::vector<int> levels{0, 1, 2};
  bool no_quad = false;
  bool landau = false;
  auto* unc = app.add_subcommand("uncertainty", "Schrodinger-Robertson Delta in units of hbar^2");
  unc->add_option("--l-max", unc_l_max)->capture_default_str();
  unc->add_option("--N", levels, "levels (0, 1, 2)")->capture_default_str();
  unc->add_flag("--no-quadrature", no_quad, "closed forms only");
  unc->add_flag("--landau", landau, "uniform-field comparison states instead");
  unc->callback([&] {
    table_action([&](const RunConfig& c) {
      return landau ? commands::landau_uncertainty(c) : commands::uncertainty(c, unc_l_max, levels, !no_quad);
    });
  });

  int lim_N = 0;
  std::vector<int> schedule{10, 100, 1000, 10000};
  auto* lim = app.add_subcommand("landau-limit", "relative distance to the Landau level as l grows");
  lim->add_option("--N", lim_N)->capture_default_str();
  lim->add_option("--l", schedule, "l schedule")->capture_default_str();
  lim->callback([&] { table_action([&](const RunConfig& c) { return commands::landau_limit(c, lim_N, schedule); }); });

  std::string suite = "all";
  auto* ver = app.add_subcommand("verify", "run invariant suites; exit 1 if any check fails");
  ver->add_option("suite", suite, "specfun, model, states, algebra, coherent, moments or all")->capture_default_str();
  ver->callback([&] {
    action = [&](RunConfig& cfg, std::string& text) {
      const auto rep = verify::run(suite, cfg);
      std::ostringstream os;
      report::write(os, rep.table(cfg, suite), cfg.output_format.empty() ? "json" : cfg.output_format);
      text = os.str();
      return static_cast<int>(rep.passed() ? ok : failed);
    };
  });

  commands::ExportSpec ex;
  auto* exp = app.add_subcommand("export", "full sampled state as CSV (x, y, re_psi, im_psi, density, w)");
  exp->add_option("kind", ex.kind, "eigen, coherent, landau-asym, landau-sym")->capture_default_str();
  exp->add_option("--l", ex.l)->capture_default_str();
  exp->add_option("--n", ex.n)->capture_default_str();
  exp->add_option("--N", ex.N)->capture_default_str();
  exp->add_option("--ky", ex.k_y)->capture_default_str();
  exp->add_option("--z-re", z_re)->capture_default_str();
  exp->add_option("--z-im", z_im)->capture_default_str();
  exp->add_option("--nx", ex.nx)->capture_default_str();
  exp->add_option("--ny", ex.ny)->capture_default_str();
  exp->callback([&] {
    action = [&](RunConfig& cfg, std::string& text) {
      if (cfg.output_format == "json") throw ConfigError("export writes CSV only");
      ex.Z = Complex(z_re, z_im);
      std::ostringstream os;
      commands::write_export(os, cfg, ex, commands::export_state(cfg, ex));
      text = os.str();
      return static_cast<int>(ok);
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? ok : bad_config;
  }

  try {
    apply_thread_env();
    RunConfig cfg = config_path.empty() ? RunConfig{} : load_config(config_path);
    if (!format.empty()) cfg.output_format = format;
    if (!out_path.empty()) cfg.output_path = out_path;
    for (const auto& t : tol_overrides) apply_tolerance_override(cfg, t);
    cfg.validate();
    std::string text;
    const int code = action(cfg, text);
    emit(cfg, text);
    return code;
  } catch (const IoError& e) {
    std::cerr << "morseband: " << e.what() << "\n";
    return io;
  } catch (const ConfigError& e) {
    std::cerr << "morseband: configuration error: " << e.what() << "\n";
    return bad_config;
  } catch (const std::logic_error& e) {  // DomainError, GridMismatchError
    std::cerr << "morseband: " << e.what() << "\n";
    return bad_config;
  } catch (const std::exception& e) {  // range, accuracy, convergence failures
    std::cerr << "morseband: numerical failure: " << e.what() << "\n";
    return failed;
  }
}

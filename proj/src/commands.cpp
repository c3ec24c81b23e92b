#include "morseband/commands.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "morseband/algebra.hpp"
#include "morseband/coherent.hpp"
#include "morseband/errors.hpp"
#include "morseband/model.hpp"
#include "morseband/moments.hpp"
#include "morseband/quadrature.hpp"
#include "morseband/states.hpp"

namespace morseband::commands {

namespace {

using report::format_double;
using report::Table;

Table make_table(const RunConfig& cfg, std::string title, std::vector<std::string> columns) {
  Table t;
  t.title = std::move(title);
  report::add_params_meta(t, cfg.params);
  t.columns = std::move(columns);
  return t;
}

GridSpec plot_grid(const RunConfig& cfg, int nx, int ny) {
  return band_grid(cfg.params, nx, ny, cfg.u_lo, cfg.u_hi);
}

std::string complex_text(Complex z) { return format_double(z.real()) + " " + format_double(z.imag()) + "i"; }

}  // namespace

Table spectrum(const RunConfig& cfg, int l_max, int n_max) {
  if (n_max < 1) throw DomainError("spectrum: n_max must be >= 1");
  if (l_max < 0) l_max = n_max - 1;
  Table t = make_table(cfg, "spectrum", {"l", "n", "N", "product", "E", "multiplicity"});
  t.add_meta("n_max", std::to_string(n_max));
  t.add_meta("l_max", std::to_string(l_max));
  t.add_meta("energy_unit", format_double(model::energy_unit(cfg.params)));
  for (int n = 1; n <= n_max; ++n) {
    for (int l = 0; l < n && l <= l_max; ++l) {
      const QuantumNumbers q(l, n);
      const auto mult = static_cast<long long>(model::factor_pair_states(q.product()).size());
      t.add_row({static_cast<long long>(l), static_cast<long long>(n), static_cast<long long>(q.N()),
                 static_cast<long long>(q.product()), model::energy(q, cfg.params), mult});
    }
  }
  return t;
}

Table degeneracy(const RunConfig& cfg, int n_max, int min_multiplicity) {
  if (n_max < 1) throw DomainError("degeneracy: n_max must be >= 1");
  const auto scan = model::degeneracy_scan(n_max);
  Table t = make_table(cfg, "degeneracy",
                       {"product", "multiplicity", "total_multiplicity", "complete", "prime", "states"});
  t.add_meta("n_max", std::to_string(n_max));
  for (const auto& [m, count] : model::multiplicity_histogram(scan)) {
    t.add_meta("classes_with_multiplicity_" + std::to_string(m), std::to_string(count));
  }
  for (const auto& d : scan) {
    if (d.multiplicity < min_multiplicity) continue;
    std::string labels;
    for (const auto& q : d.states) {
      labels += (labels.empty() ? "" : " ") + std::string("(") + std::to_string(q.l) + "," + std::to_string(q.n) + ")";
    }
    t.add_row({static_cast<long long>(d.product), static_cast<long long>(d.multiplicity),
               static_cast<long long>(d.total_multiplicity), d.complete, model::is_prime(d.product), labels});
  }
  return t;
}

Table wavefunction(const RunConfig& cfg, const QuantumNumbers& q, int nx) {
  const PhysParams& p = cfg.params;
  const GridSpec g = plot_grid(cfg, nx, 8);  // only x is used
  Table t = make_table(cfg, "wavefunction", {"x", "xi", "u", "radial", "density", "w"});
  t.add_meta("l", std::to_string(q.l));
  t.add_meta("n", std::to_string(q.n));
  t.add_meta("energy", format_double(model::energy(q, p)));
  const double k = p.wavenumber();
  for (int i = 0; i < g.nx; ++i) {
    const double x = g.x(i);
    const double f = states::eigen_radial(q, p, x);
    t.add_row({x, std::exp(k * x), p.beta() * std::exp(-k * x), f, f * f, states::measure_weight(x, p)});
  }
  return t;
}

Table ladder_check(const RunConfig& cfg, int n_max) {
  if (n_max < 1) throw DomainError("ladder-check: n_max must be >= 1");
  const PhysParams& p = cfg.params;
  const GridSpec g = band_grid(p, cfg.nx, std::min(cfg.ny, 16), cfg.u_lo, cfg.u_hi);
  Table t = make_table(cfg, "ladder-check",
                       {"l", "n", "raise", "lower", "expected", "rel_error", "lowering_norm", "hamiltonian_residual",
                        "casimir_residual"});
  t.add_meta("grid", std::to_string(g.nx) + "x" + std::to_string(g.ny));
  for (int n = 1; n <= n_max; ++n) {
    for (int l = 0; l < n; ++l) {
      const SampledState s = states::wavefunction({l, n}, p, g);
      const SampledState up = states::wavefunction({l, n + 1}, p, g);
      const Complex raise = quadrature::grid_inner_product(up, algebra::apply_Lplus(s, p));
      const Complex lower = quadrature::grid_inner_product(s, algebra::apply_Lminus(up, p));
      const double expected = std::sqrt((n + 1.0 + l) * (n - l));
      const double err = std::max(std::abs(raise - expected), std::abs(lower - expected)) / expected;
      const double lnorm = n == l + 1 ? quadrature::weighted_norm(algebra::apply_Lminus(s, p)) /
                                            quadrature::weighted_norm(s)
                                      : NAN;
      t.add_row({static_cast<long long>(l), static_cast<long long>(n), raise.real(), lower.real(), expected, err,
                 lnorm, algebra::apply_hamiltonian(s, p).residual_norm, algebra::apply_casimir(s, p).residual_norm});
    }
  }
  return t;
}

Table coherent_density(const RunConfig& cfg, int l, Complex Z, int nx, int ny) {
  const auto spec = coherent::CoherentSpec::make(l, Z);
  const GridSpec g = plot_grid(cfg, nx, ny);
  const SampledState series = coherent::bg_state_series(spec, cfg.params, g);
  const SampledState closed = coherent::bg_state_closed(spec, cfg.params, g);
  Table t = make_table(cfg, "coherent", {"x", "y", "density_series", "density_closed", "w"});
  t.add_meta("l", std::to_string(l));
  t.add_meta("Z", complex_text(Z));
  t.add_meta("truncation", std::to_string(spec.truncation));
  for (int i = 0; i < g.nx; ++i) {
    for (int j = 0; j < g.ny; ++j) {
      t.add_row({g.x(i), g.y(j), std::norm(series.at(i, j)), std::norm(closed.at(i, j)), series.weight[i]});
    }
  }
  return t;
}

Table coherent_measure(const RunConfig& cfg, int l, double r_max, int points) {
  if (points < 2 || !(r_max > 0.0)) throw DomainError("coherent: need points >= 2 and r_max > 0");
  Table t = make_table(cfg, "coherent measure", {"r", "density"});
  t.add_meta("l", std::to_string(l));
  for (int i = 0; i < points; ++i) {
    const double r = r_max * i / (points - 1);
    t.add_row({r, i == 0 ? 0.0 : coherent::bg_measure_density(l, r)});
  }
  return t;
}

Table uncertainty(const RunConfig& cfg, int l_max, const std::vector<int>& levels, bool quadrature) {
  if (l_max < 0) throw DomainError("uncertainty: l_max must be >= 0");
  const PhysParams& p = cfg.params;
  const GridSpec g = cfg.grid();
  const double h2 = p.hbar * p.hbar;
  Table t = make_table(cfg, "uncertainty", {"l", "N", "delta_closed", "delta_quadrature", "delta_limit_target"});
  t.add_meta("units", "hbar^2");
  for (int N : levels) {
    if (N < 0 || N > 2) throw DomainError("uncertainty: closed forms exist for N = 0, 1, 2");
    for (int l = 0; l <= l_max; ++l) {
      const auto q = QuantumNumbers::from_level(l, N);
      const double dq = quadrature ? moments::moments_quadrature(q, p, g).delta / h2 : NAN;
      const double target = N == 0 ? 0.25 : moments::uncertainty_limit_target(N);
      t.add_row({static_cast<long long>(l), static_cast<long long>(N), moments::delta_closed(l, N), dq, target});
    }
  }
  return t;
}

Table landau_uncertainty(const RunConfig& cfg) {
  using moments::Gauge;
  Table t = make_table(cfg, "uncertainty landau", {"gauge", "N", "n", "l", "delta", "listed"});
  t.add_meta("units", "hbar^2");
  const moments::LandauLabel labels[] = {{Gauge::asymmetric, 0, 0, 0}, {Gauge::asymmetric, 1, 0, 0},
                                         {Gauge::asymmetric, 2, 0, 0}, {Gauge::symmetric, 0, 0, 0},
                                         {Gauge::symmetric, 0, 0, 1},  {Gauge::symmetric, 0, 0, 2},
                                         {Gauge::symmetric, 0, 1, 0},  {Gauge::symmetric, 0, 1, 1}};
  for (const auto& lab : labels) {
    double listed = NAN;
    try {
      listed = moments::landau_delta_reference(lab);
    } catch (const DomainError&) {
    }
    const bool sym = lab.gauge == Gauge::symmetric;
    t.add_row({std::string(sym ? "symmetric" : "asymmetric"), static_cast<long long>(lab.N),
               static_cast<long long>(lab.n), static_cast<long long>(lab.l), moments::landau_delta(lab, cfg.params),
               listed});
  }
  return t;
}

Table landau_limit(const RunConfig& cfg, int N, const std::vector<int>& l_schedule) {
  if (l_schedule.empty()) throw DomainError("landau-limit: empty l schedule");
  if (N < 0) throw DomainError("landau-limit: N must be >= 0");
  Table t = make_table(cfg, "landau-limit", {"l", "a0", "E_model", "E_landau", "rel_error", "predicted"});
  t.add_meta("N", std::to_string(N));
  for (int l : l_schedule) {
    if (l < 1) throw DomainError("landau-limit: l must be >= 1");
    const PhysParams pl = model::landau_limit_params(l, cfg.params);
    const double em = model::energy(QuantumNumbers::from_level(l, N), pl);
    const double el = model::landau_energy(N, pl);
    t.add_row({static_cast<long long>(l), pl.a0, em, el, std::abs(em - el) / el,
               model::landau_limit_error_predicted(N, l)});
  }
  return t;
}

SampledState export_state(const RunConfig& cfg, const ExportSpec& spec) {
  const PhysParams& p = cfg.params;
  if (spec.kind == "eigen") {
    return states::wavefunction({spec.l, spec.n}, p, plot_grid(cfg, spec.nx, spec.ny));
  }
  if (spec.kind == "coherent") {
    return coherent::bg_state_series(coherent::CoherentSpec::make(spec.l, spec.Z), p,
                                     plot_grid(cfg, spec.nx, spec.ny));
  }
  if (spec.kind == "landau-asym" || spec.kind == "landau-sym") {
    states::LandauParams lp{spec.N, spec.n, spec.l, spec.k_y};
    const double rc = states::LandauParams::r_c(p);
    const int extent = spec.kind == "landau-asym" ? spec.N : 2 * spec.n + spec.l;
    const double half = rc * (8.0 + 2.0 * std::sqrt(extent + 1.0)) + std::abs(lp.x0(p));
    const GridSpec g = plane_grid(half, spec.nx, spec.ny);
    return spec.kind == "landau-asym" ? states::landau_state_asym(lp, p, g) : states::landau_state_sym(lp, p, g);
  }
  throw ConfigError("export: unknown kind '" + spec.kind + "' (eigen, coherent, landau-asym, landau-sym)");
}

void write_export(std::ostream& os, const RunConfig& cfg, const ExportSpec& spec, const SampledState& s) {
  Table t = make_table(cfg, "export " + spec.kind, {});
  if (spec.kind == "eigen" || spec.kind == "coherent") t.add_meta("l", std::to_string(spec.l));
  if (spec.kind == "eigen") t.add_meta("n", std::to_string(spec.n));
  if (spec.kind == "coherent") t.add_meta("Z", complex_text(spec.Z));
  if (spec.kind == "landau-asym") t.add_meta("N", std::to_string(spec.N));
  if (spec.kind == "landau-sym") {
    t.add_meta("n", std::to_string(spec.n));
    t.add_meta("l", std::to_string(spec.l));
  }
  if (spec.kind.starts_with("landau")) t.add_meta("k_y", format_double(spec.k_y));
  t.add_meta("grid", std::to_string(s.grid.nx) + "x" + std::to_string(s.grid.ny));
  os << "# " << t.title << "\n# version: " << report::version() << "\n";
  for (const auto& [k, v] : t.meta) os << "# " << k << ": " << v << "\n";
  states::write_state_csv(os, s);
}

}  // namespace morseband::commands

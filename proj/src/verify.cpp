#include "morseband/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "morseband/algebra.hpp"
#include "morseband/coherent.hpp"
#include "morseband/errors.hpp"
#include "morseband/kernels.hpp"
#include "morseband/model.hpp"
#include "morseband/moments.hpp"
#include "morseband/quadrature.hpp"
#include "morseband/specfun.hpp"
#include "morseband/states.hpp"

namespace morseband::verify {

namespace {

constexpr double kPi = std::numbers::pi;

struct Recorder {
  std::string suite;
  std::vector<CheckResult>& out;

  // value <= bound
  void at_most(const std::string& name, double value, double bound, std::string note = {}) {
    out.push_back({suite, name, value, bound, std::isfinite(value) && value <= bound, std::move(note)});
  }
  // value > bound
  void above(const std::string& name, double value, double bound, std::string note = {}) {
    out.push_back({suite, name, value, bound, std::isfinite(value) && value > bound, std::move(note)});
  }
  // reported, never fails
  void info(const std::string& name, double value, std::string note) {
    out.push_back({suite, name, value, 0.0, true, std::move(note)});
  }
};

double rel(Complex a, Complex b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

GridSpec harmonic_grid(const RunConfig& cfg, int ny) {
  return band_grid(cfg.params, cfg.nx, ny, cfg.u_lo, cfg.u_hi);
}

void suite_specfun(const RunConfig& cfg, Recorder r) {
  using namespace specfun;
  const double xs[] = {0.1, 0.3, 1.0, 3.0, 10.0, 30.0, 50.0};
  double wr = 0.0;
  double rec = 0.0;
  for (double x : xs) {
    for (int nu = 0; nu <= 15; ++nu) {
      const double w = bessel_i(nu, x) * bessel_k(nu + 1, x) + bessel_i(nu + 1, x) * bessel_k(nu, x);
      wr = std::max(wr, std::abs(w - 1.0 / x) * x);
      if (nu >= 1) {
        const double im = bessel_i(nu - 1, x);
        rec = std::max(rec, std::abs(im - bessel_i(nu + 1, x) - (2.0 * nu / x) * bessel_i(nu, x)) / im);
      }
    }
  }
  r.at_most("wronskian_IK", wr, cfg.tol("wronskian"), "x * |I_nu K_nu+1 + I_nu+1 K_nu - 1/x|, nu <= 15");
  r.at_most("recurrence_I", rec, cfg.tol("recurrence"), "relative to I_nu-1");

  double gen = 0.0;
  const double uv[] = {0.5, 1.0, 2.5, 5.0};
  for (int alpha : {1, 3, 5}) {
    for (double u : uv) {
      for (double v : uv) {
        const double lhs = bessel_j(alpha, 2.0 * std::sqrt(u * v)).real() * std::exp(v) * std::pow(u * v, -0.5 * alpha);
        double rhs = 0.0;
        for (int n = 0; n < 40; ++n) rhs += std::exp(n * std::log(v) - ln_gamma(n + alpha + 1.0)) * laguerre(n, alpha, u);
        gen = std::max(gen, std::abs(lhs - rhs) / std::abs(lhs));
      }
    }
  }
  r.at_most("laguerre_generating_identity", gen, cfg.tol("generating"), "40 terms");

  double dg = 0.0;
  double tg = 0.0;
  for (double x : {0.5, 1.0, 2.0, 10.0, 100.0}) {
    const double h = 1e-5;
    dg = std::max(dg, std::abs((ln_gamma(x + h) - ln_gamma(x - h)) / (2 * h) - digamma(x)));
    tg = std::max(tg, std::abs((digamma(x + h) - digamma(x - h)) / (2 * h) - trigamma(x)));
  }
  r.at_most("digamma_vs_lngamma_difference", dg, 1e-6);
  r.at_most("trigamma_vs_digamma_difference", tg, 1e-6);

  double orth = 0.0;
  for (double alpha : {1.0, 3.0, 7.0}) {
    const auto& rule = quadrature::gauss_laguerre(40, alpha);
    for (int m = 0; m <= 10; ++m) {
      const double diag = std::exp(ln_gamma(m + alpha + 1.0) - ln_gamma(m + 1.0));
      for (int k = 0; k <= 10; ++k) {
        double s = 0.0;
        for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
          s += rule.weights[i] * laguerre(m, alpha, rule.nodes[i]) * laguerre(k, alpha, rule.nodes[i]);
        }
        orth = std::max(orth, std::abs(s - (m == k ? diag : 0.0)) / diag);
      }
    }
  }
  r.at_most("laguerre_orthogonality", orth, 1e-9);

  double e22 = 0.0;
  const double cases[][3] = {{1, 1, 1}, {1, 1, 2}, {3, 2, 1}, {3, 2, 2}, {2.5, 0.7, 2}, {7, 3, 1}};
  for (const auto& c : cases) {
    const auto [quad, closed] = moments::eq22_oracle(c[0], c[1], static_cast<int>(c[2]));
    e22 = std::max(e22, std::abs(quad - closed) / std::abs(closed));
  }
  r.at_most("log_moment_integrals", e22, cfg.tol("eq22"), "zeta(2,s) read as trigamma");
}

void suite_model(const RunConfig& cfg, Recorder r) {
  const PhysParams& p = cfg.params;
  double lim = 0.0;
  double ratio = 0.0;
  for (int N = 0; N <= 3; ++N) {
    double prev = 0.0;
    for (int l : {10, 100, 1000, 10000}) {
      const double e = model::landau_limit_error(N, l, p);
      lim = std::max(lim, std::abs(e - model::landau_limit_error_predicted(N, l)));
      if (prev > 0.0) ratio = std::max(ratio, std::abs(prev / e - 10.0));
      prev = e;
    }
  }
  r.at_most("landau_limit_error", lim, cfg.tol("landau_limit"), "|computed - (2N+3)/(4l)|, N <= 3");
  r.at_most("landau_limit_decade_ratio", ratio, 1e-9, "|e(l)/e(10l) - 10|");

  const double e01 = model::energy(QuantumNumbers(0, 1), p);
  const double want = 3.0 * kPi * kPi * p.hbar * p.hbar / (2.0 * p.mu * p.a0 * p.a0);
  r.at_most("ground_energy", std::abs(e01 / want - 1.0), 4.0 * 2.220446049250313e-16);

  const auto scan = model::degeneracy_scan(200);
  int prime_bad = 0;
  int primes = 0;
  int window_bad = 0;
  int max_mult = 0;
  for (const auto& d : scan) {
    if (model::is_prime(d.product)) {
      ++primes;
      if (d.multiplicity != 1 || d.total_multiplicity != 1) ++prime_bad;
    }
    if (d.complete && d.multiplicity != d.total_multiplicity) ++window_bad;
    max_mult = std::max(max_mult, d.multiplicity);
  }
  r.at_most("prime_products_nondegenerate", prime_bad, 0.0, std::to_string(primes) + " prime products, n <= 200");
  r.at_most("factor_pairs_match_scan", window_bad, 0.0);
  const auto c243 = model::factor_pair_states(243);
  r.above("multiplicity_3_at_243", static_cast<double>(c243.size()), 2.0,
          "states (4,9), (19,21), (60,61); the text claims at most two-fold");
  r.info("max_multiplicity_n200", max_mult, "largest class in the n <= 200 scan");
}

void suite_states(const RunConfig& cfg, Recorder r) {
  const PhysParams& p = cfg.params;
  const GridSpec g = harmonic_grid(cfg, 16);
  std::vector<SampledState> basis;
  for (int n = 1; n <= 6; ++n) {
    for (int l = 0; l < n; ++l) basis.push_back(states::wavefunction({l, n}, p, g));
  }
  double orth = 0.0;
  for (std::size_t a = 0; a < basis.size(); ++a) {
    for (std::size_t b = a; b < basis.size(); ++b) {
      const Complex ip = quadrature::grid_inner_product(basis[a], basis[b]);
      orth = std::max(orth, std::abs(ip - (a == b ? 1.0 : 0.0)));
    }
  }
  r.at_most("orthonormality_n6", orth, cfg.tol("orthonormality"));

  const double xi[] = {0.5, 1.0, 2.0, 5.0};
  double ode = 0.0;
  for (int n = 1; n <= 5; ++n) {
    for (int l = 0; l < n; ++l) ode = std::max(ode, states::ode_residual({l, n}, p, xi));
  }
  r.at_most("ode_residual_n5", ode, cfg.tol("ode"));
  double wrong = INFINITY;
  for (QuantumNumbers q : {QuantumNumbers(0, 1), QuantumNumbers(1, 3)}) {
    wrong = std::min(wrong, states::ode_residual(q, p, xi, 1.01 * model::energy(q, p)));
  }
  r.above("ode_residual_wrong_energy", wrong, 1e-3);

  double rod = 0.0;
  for (auto [l, n] : {std::pair{0, 1}, {0, 2}, {1, 2}, {1, 3}}) {
    for (double x : xi) {
      const double a = states::assoc_bessel(l, n, p.beta(), x);
      rod = std::max(rod, std::abs(states::assoc_bessel_rodrigues(l, n, p.beta(), x) - a) / std::abs(a));
    }
  }
  r.at_most("rodrigues_form", rod, cfg.tol("rodrigues"));

  double dy = 0.0;
  for (const auto& s : {basis[0], basis[4], basis.back()}) {
    SampledState dens = s.zeros_like();
    double peak = 0.0;
    for (std::size_t i = 0; i < s.values.size(); ++i) {
      dens.values[i] = std::norm(s.values[i]);
      peak = std::max(peak, dens.values[i].real());
    }
    const SampledState d = quadrature::fd_derivative(dens, kernels::Axis::y, 1);
    for (const Complex& v : d.values) dy = std::max(dy, std::abs(v) / peak);
  }
  r.at_most("density_y_independent", dy, cfg.tol("density_y"));
}

void suite_algebra(const RunConfig& cfg, Recorder r) {
  const PhysParams& p = cfg.params;
  const GridSpec g = harmonic_grid(cfg, 16);
  double ham = 0.0;
  double cas = 0.0;
  double ladder = 0.0;
  double annih = 0.0;
  for (int n = 1; n <= 5; ++n) {
    for (int l = 0; l < n; ++l) {
      const SampledState s = states::wavefunction({l, n}, p, g);
      ham = std::max(ham, algebra::apply_hamiltonian(s, p).residual_norm);
      cas = std::max(cas, algebra::apply_casimir(s, p).residual_norm);
      if (n == l + 1) {
        annih = std::max(annih, quadrature::weighted_norm(algebra::apply_Lminus(s, p)) / quadrature::weighted_norm(s));
      }
      if (n < 5) {
        const SampledState up = states::wavefunction({l, n + 1}, p, g);
        const double m = std::sqrt((n + 1.0 + l) * (n - l));
        ladder = std::max(ladder, rel(quadrature::grid_inner_product(up, algebra::apply_Lplus(s, p)), m));
        ladder = std::max(ladder, rel(quadrature::grid_inner_product(s, algebra::apply_Lminus(up, p)), m));
      }
    }
  }
  r.at_most("hamiltonian_residual_n5", ham, cfg.tol("hamiltonian"));
  r.at_most("casimir_residual_n5", cas, cfg.tol("casimir"));
  r.at_most("ladder_matrix_elements_n5", ladder, cfg.tol("ladder"));
  r.at_most("lowest_states_annihilated", annih, cfg.tol("ladder"), "l <= 4");

  const algebra::Operator Lp = [&](const SampledState& s) { return algebra::apply_Lplus(s, p); };
  const algebra::Operator Lm = [&](const SampledState& s) { return algebra::apply_Lminus(s, p); };
  const algebra::Operator L3 = [&](const SampledState& s) { return algebra::apply_L3(s, p); };
  const algebra::Operator H = [&](const SampledState& s) { return algebra::hamiltonian(s, p); };
  const algebra::Operator C = [&](const SampledState& s) { return algebra::casimir(s, p); };
  double comm = 0.0;
  double hcomm = 0.0;
  for (auto [l, n] : {std::pair{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}, {0, 3}}) {
    const SampledState s = states::wavefunction({l, n}, p, g);
    const double ns = quadrature::weighted_norm(s);
    auto norm = [](const SampledState& v) { return quadrature::weighted_norm(v); };
    comm = std::max(comm, norm(algebra::lincomb(1.0, algebra::commutator(Lp, Lm, s), 2.0, L3(s))) / ns);
    comm = std::max(comm, norm(algebra::lincomb(1.0, algebra::commutator(L3, Lp, s), -1.0, Lp(s))) / ns);
    comm = std::max(comm, norm(algebra::lincomb(1.0, algebra::commutator(L3, Lm, s), 1.0, Lm(s))) / ns);
    const double nh = norm(H(s));
    hcomm = std::max(hcomm, norm(algebra::commutator(H, L3, s)) / nh);
    hcomm = std::max(hcomm, norm(algebra::commutator(H, C, s)) / nh);
  }
  r.at_most("su11_commutators", comm, cfg.tol("commutator"));
  r.at_most("hamiltonian_commutes_L3_C", hcomm, cfg.tol("commutator"));
  const SampledState g01 = states::wavefunction({0, 1}, p, g);
  r.above("hamiltonian_L+_noncommuting", quadrature::weighted_norm(algebra::commutator(H, Lp, g01)) /
                                             quadrature::weighted_norm(H(g01)),
          0.01, "||[H,L+] psi_01|| / ||H psi_01||");
}

void suite_coherent(const RunConfig& cfg, Recorder r) {
  const PhysParams& p = cfg.params;
  const GridSpec g = cfg.grid();
  const Complex zs[] = {Complex(1.0, 0.0), std::polar(0.5, kPi / 3.0), Complex(-2.5, 1.0)};
  double csum = 0.0;
  double nrm = 0.0;
  double closed = 0.0;
  double eig = 0.0;
  long flips = 0;
  for (int l = 0; l <= 2; ++l) {
    for (Complex Z : zs) {
      const auto spec = coherent::CoherentSpec::make(l, Z);
      double s = 0.0;
      for (const Complex& c : coherent::bg_coefficients(spec)) s += std::norm(c);
      csum = std::max(csum, std::abs(s - 1.0));
      const SampledState ser = coherent::bg_state_series(spec, p, g);
      nrm = std::max(nrm, std::abs(quadrature::grid_inner_product(ser, ser) - 1.0));
      coherent::ClosedFormDiagnostics diag;
      closed = std::max(closed, coherent::weighted_sup_distance(
                                    coherent::bg_state_closed(spec, p, g, coherent::BranchPolicy::factored, &diag), ser));
      flips += diag.branch_flips;
      eig = std::max(eig, algebra::relative_residual(algebra::apply_Lminus(ser, p), ser, Z));
    }
  }
  r.at_most("coefficients_normalized", csum, 1e-12);
  r.at_most("coherent_norm", nrm, cfg.tol("coherent_norm"));
  r.at_most("closed_vs_series", closed, cfg.tol("coherent_closed"), "weighted sup norm, factored branch");
  r.at_most("lowering_eigenvalue", eig, cfg.tol("coherent_eigen"));
  r.info("principal_branch_flip_points", static_cast<double>(flips),
         "points where the unfactored principal root has the opposite sign");

  double rad = 0.0;
  double ident = 0.0;
  for (int l = 0; l <= 2; ++l) {
    const auto chk = coherent::identity_resolution_check(l, 4);
    rad = std::max(rad, chk.max_radial_rel_error);
    ident = std::max(ident, chk.max_deviation);
  }
  r.at_most("radial_moments", rad, cfg.tol("radial_moment"), "l <= 2, N <= 4");
  r.at_most("resolution_of_identity", ident, cfg.tol("identity"), "l <= 2, N <= 4");
}

void suite_moments(const RunConfig& cfg, Recorder r) {
  const PhysParams& p = cfg.params;
  const GridSpec g = cfg.grid();
  const double h2 = p.hbar * p.hbar;
  double agree = 0.0;
  for (int l = 0; l <= 4; ++l) {
    for (int N = 0; N <= 2; ++N) {
      const auto q = QuantumNumbers::from_level(l, N);
      const auto c = moments::moments_closed(q, p);
      const auto m = moments::moments_quadrature(q, p, g);
      agree = std::max({agree, rel(m.mean_x, c.mean_x), rel(m.mean_x2, c.mean_x2), rel(m.mean_p, c.mean_p),
                        rel(m.mean_p2, c.mean_p2), rel(m.mean_xp, c.mean_xp), rel(m.delta, c.delta)});
    }
  }
  r.at_most("closed_vs_quadrature", agree, cfg.tol("moments"), "l <= 4, N <= 2");

  double lowest = 0.0;
  double formula = 0.0;
  for (int l = 0; l <= 6; ++l) {
    for (int N = 0; N <= 2; ++N) {
      const auto c = moments::moments_closed(QuantumNumbers::from_level(l, N), p);
      if (N == 0) lowest = std::max(lowest, std::abs(c.delta / h2 - 0.25));
      formula = std::max(formula, std::abs(c.delta / h2 - moments::delta_closed(l, N)) / moments::delta_closed(l, N));
    }
  }
  r.at_most("lowest_states_minimal", lowest, cfg.tol("delta_lowest"), "l <= 6");
  r.at_most("assembled_vs_delta_formula", formula, 1e-9, "l <= 6");

  // Expanding the closed forms: 9/4 - Delta <= 1.5/l (N = 1), 25/4 - Delta <= 7.5/l (N = 2),
  // approached from below.
  double lim = 0.0;
  bool below = true;
  for (int N : {1, 2}) {
    for (const auto& [l, d] : moments::uncertainty_limit_curve(N, {100, 1000, 10000})) {
      lim = std::max(lim, std::abs(d - moments::uncertainty_limit_target(N)) * l / (N == 1 ? 1.5 : 7.5));
      below = below && d < moments::uncertainty_limit_target(N);
    }
  }
  r.at_most("limit_curve_bound", lim, 1.0, "|Delta - (N+1/2)^2| l / (1.5, 7.5), l in {100, 1000, 10000}");
  r.at_most("limit_curve_from_below", below ? 0.0 : 1.0, 0.0);

  double landau = 0.0;
  using moments::Gauge;
  const moments::LandauLabel listed[] = {{Gauge::asymmetric, 0, 0, 0}, {Gauge::asymmetric, 1, 0, 0},
                                         {Gauge::asymmetric, 2, 0, 0}, {Gauge::symmetric, 0, 0, 0},
                                         {Gauge::symmetric, 0, 1, 0},  {Gauge::symmetric, 0, 1, 1}};
  for (const auto& lab : listed) {
    landau = std::max(landau, std::abs(moments::landau_delta(lab, p) / moments::landau_delta_reference(lab) - 1.0));
  }
  r.at_most("uniform_field_delta", landau, cfg.tol("landau_delta"), "asymmetric N <= 2; symmetric (0,0), (1,0), (1,1)");
  const double d01 = moments::landau_delta({Gauge::symmetric, 0, 0, 1}, p);
  r.info("symmetric_0_1_delta", d01, "listed as 1/4 for all (0,l); canonical p_x gives ((l+1)/2)^2");
}

}  // namespace

bool VerifyReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

report::Table VerifyReport::table(const RunConfig& cfg, const std::string& suite) const {
  report::Table t;
  t.title = "verify " + suite;
  report::add_params_meta(t, cfg.params);
  t.add_meta("grid", std::to_string(cfg.nx) + "x" + std::to_string(cfg.ny));
  t.add_meta("pass", passed() ? "true" : "false");
  t.columns = {"suite", "check", "value", "bound", "pass", "note"};
  for (const auto& c : checks) t.add_row({c.suite, c.name, c.value, c.tolerance, c.pass, c.note});
  return t;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"specfun", "model", "states", "algebra", "coherent", "moments"};
  return names;
}

VerifyReport run(const std::string& suite, const RunConfig& cfg) {
  const auto& names = suite_names();
  if (suite != "all" && std::find(names.begin(), names.end(), suite) == names.end()) {
    throw ConfigError("unknown verify suite '" + suite + "'");
  }
  VerifyReport rep;
  for (const auto& name : names) {
    if (suite != "all" && suite != name) continue;
    Recorder r{name, rep.checks};
    if (name == "specfun") suite_specfun(cfg, r);
    if (name == "model") suite_model(cfg, r);
    if (name == "states") suite_states(cfg, r);
    if (name == "algebra") suite_algebra(cfg, r);
    if (name == "coherent") suite_coherent(cfg, r);
    if (name == "moments") suite_moments(cfg, r);
  }
  return rep;
}

}  // namespace morseband::verify

// feynkit: Gaussian/Wick calculus, Feynman graph expansions, Berezin
// integrals, Faddeev-Popov gauge fixing, and configuration-space knot
// invariants behind one command line. JSON reports on stdout, a short
// human summary on stderr.

#include "feynkit/conway.hpp"
#include "feynkit/cs_integrals.hpp"
#include "feynkit/gauss.hpp"
#include "feynkit/gaussmap.hpp"
#include "feynkit/gaugefix.hpp"
#include "feynkit/grassmann.hpp"
#include "feynkit/jacobi.hpp"
#include "feynkit/json_io.hpp"
#include "feynkit/perturb.hpp"
#include "feynkit/projection.hpp"
#include "feynkit/wick.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>

namespace {

using feynkit::Json;
using feynkit::Rat;

struct CommonOpts {
  std::string matrix_file;
  std::string potential_file;
  std::string link_spec;
  double samples = 1e6;
  std::uint64_t seed = 1;
  unsigned threads = 1;
  bool deterministic = false;
  double delta_cut = 1e-4;
  std::size_t order = 2;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--matrix", o.matrix_file, "matrix JSON file");
  cmd->add_option("--potential", o.potential_file, "potential JSON file");
  cmd->add_option("--link", o.link_spec, "link JSON file or builtin:<name>[?segments=N]");
  cmd->add_option("--samples", o.samples, "Monte Carlo sample budget");
  cmd->add_option("--seed", o.seed, "random seed");
  cmd->add_option("--threads", o.threads, "worker count for chunked Monte Carlo");
  cmd->add_flag("--deterministic", o.deterministic, "single-stream deterministic mode");
  cmd->add_option("--delta-cut", o.delta_cut, "near-diagonal collar width");
  cmd->add_option("--order", o.order, "series truncation order");
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  Json j;
  in >> j;
  return j;
}

feynkit::McConfig mc_config(const CommonOpts& o) {
  return {static_cast<std::uint64_t>(o.samples), o.seed, o.threads, o.deterministic};
}

feynkit::CsMcConfig cs_config(const CommonOpts& o) {
  feynkit::CsMcConfig cfg;
  cfg.samples = static_cast<std::uint64_t>(o.samples);
  cfg.seed = o.seed;
  cfg.threads = o.threads;
  cfg.deterministic = o.deterministic;
  cfg.delta_cut = o.delta_cut;
  return cfg;
}

Json series_to_json(const feynkit::PowerSeries& s) {
  Json out = Json::array();
  for (std::size_t k = 0; k <= s.order(); ++k) out.push_back(feynkit::rational_to_json(s[k]));
  return out;
}

Json estimate_to_json(const feynkit::IntegralEstimate& e) {
  return Json{{"value", e.value},
              {"std_error", e.std_error},
              {"samples", e.samples},
              {"seed", e.seed}};
}

Json cut_estimate_to_json(const feynkit::CutEstimate& c) {
  return Json{{"raw", estimate_to_json(c.raw)},
              {"half_cut", estimate_to_json(c.half_cut)},
              {"extrapolated", c.extrapolated}};
}

struct ReportTimer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
  }
};

void emit(Json& report, const CommonOpts& o, const ReportTimer& timer) {
  report["seed"] = o.seed;
  if (!o.deterministic) report["wall_ms"] = timer.ms();
  std::cout << report.dump(2) << std::endl;
}

std::vector<std::size_t> parse_index_list(const std::string& csv) {
  // 1-based in the interface, 0-based internally.
  std::vector<std::size_t> out;
  std::size_t pos = 0;
  while (pos < csv.size()) {
    std::size_t next = csv.find(',', pos);
    if (next == std::string::npos) next = csv.size();
    const std::string tok = csv.substr(pos, next - pos);
    if (!tok.empty()) {
      const long v = std::stol(tok);
      if (v < 1) throw std::invalid_argument("indices are 1-based");
      out.push_back(static_cast<std::size_t>(v - 1));
    }
    pos = next + 1;
  }
  return out;
}

feynkit::PolygonalLink framed_knot_for_v2(const feynkit::PolygonalLink& in, std::uint64_t seed) {
  if (in.component_count() != 1) throw std::invalid_argument("v2 expects a one-component link");
  feynkit::PolygonalLink knot = in;
  if (!knot.component(0).framed())
    knot = knot.with_framing(0, feynkit::reference_framing(knot.component(0)));
  return feynkit::normalize_framing_to_zero(knot, 0, seed);
}

// ---------------------------------------------------------------- commands

int cmd_wick(const CommonOpts& o, const std::string& indices_csv, bool mc_check) {
  ReportTimer timer;
  const Json mj = load_json_file(o.matrix_file);
  const feynkit::SymmetricForm a = feynkit::parse_symmetric_form(mj);
  feynkit::MomentRequest req{parse_index_list(indices_csv)};

  const Rat exact = feynkit::moment(a, req);
  const Rat recursive = feynkit::moment_via_recursion(a, req);

  Json report{{"subcommand", "wick"},
              {"inputs", Json{{"matrix", mj}, {"indices", indices_csv}}},
              {"value", feynkit::rational_to_json(exact)},
              {"value_decimal", feynkit::to_double(exact)},
              {"recursion_value", feynkit::rational_to_json(recursive)},
              {"routes_equal", exact == recursive}};
  if (mc_check) {
    const auto est = feynkit::moment_oracle_numeric(a, req, mc_config(o));
    report["mc"] = estimate_to_json(est);
    report["mc"]["sigma_distance"] =
        std::abs(est.value - feynkit::to_double(exact)) / est.std_error;
  }
  emit(report, o, timer);
  std::cerr << "<x^" << indices_csv << "> = " << feynkit::to_string(exact) << "\n";
  return 0;
}

int cmd_expand(const CommonOpts& o, const std::string& legs_csv) {
  ReportTimer timer;
  const Json mj = load_json_file(o.matrix_file);
  const Json pj = load_json_file(o.potential_file);
  const feynkit::SymmetricForm a = feynkit::parse_symmetric_form(mj);
  const feynkit::Potential u = feynkit::parse_potential(pj);
  const std::vector<std::size_t> legs = parse_index_list(legs_csv);

  const auto graphs = legs.empty() ? feynkit::partition_series_graphs(a, u, o.order)
                                   : feynkit::correlator_series(a, u, legs, o.order);
  const auto direct = legs.empty() ? feynkit::partition_series_direct(a, u, o.order)
                                   : feynkit::correlator_series_direct(a, u, legs, o.order);

  Json breakdown = Json::array();
  for (const auto& term : feynkit::graph_breakdown(a, u, legs, o.order)) {
    breakdown.push_back(Json{{"order", term.hbar_order},
                             {"graph", feynkit::graph_to_json(term.graph)},
                             {"multiplicity", term.multiplicity.str()},
                             {"aut", term.aut.str()},
                             {"weight", feynkit::rational_to_json(term.weight)},
                             {"contribution", feynkit::rational_to_json(term.contribution)},
                             {"vacuum", term.vacuum},
                             {"connected", term.connected}});
  }

  Json report{{"subcommand", "expand"},
              {"inputs", Json{{"matrix", mj}, {"potential", pj}, {"legs", legs_csv},
                              {"order", o.order}}},
              {"series_graphs", series_to_json(graphs)},
              {"series_direct", series_to_json(direct)},
              {"routes_equal", graphs == direct},
              {"per_graph", std::move(breakdown)}};
  emit(report, o, timer);
  std::cerr << "series (graph route) = " << graphs.str()
            << (graphs == direct ? "  [matches direct]" : "  [MISMATCH]") << "\n";
  return graphs == direct ? 0 : 2;
}

int cmd_freeenergy(const CommonOpts& o) {
  ReportTimer timer;
  const Json mj = load_json_file(o.matrix_file);
  const Json pj = load_json_file(o.potential_file);
  const feynkit::SymmetricForm a = feynkit::parse_symmetric_form(mj);
  const feynkit::Potential u = feynkit::parse_potential(pj);

  const auto log_series = feynkit::free_energy_series(a, u, o.order);
  const auto connected = feynkit::free_energy_series_connected(a, u, o.order);
  const auto full = feynkit::partition_series_graphs(a, u, o.order);

  Json report{{"subcommand", "freeenergy"},
              {"inputs", Json{{"matrix", mj}, {"potential", pj}, {"order", o.order}}},
              {"free_energy", series_to_json(log_series)},
              {"connected_sum", series_to_json(connected)},
              {"log_equals_connected", log_series == connected},
              {"exp_matches_partition", connected.exp() == full}};
  emit(report, o, timer);
  std::cerr << "free energy = " << log_series.str() << "\n";
  return log_series == connected ? 0 : 2;
}

int cmd_berezin(const CommonOpts& o) {
  ReportTimer timer;
  const Json mj = load_json_file(o.matrix_file);
  const feynkit::RatMatrix lambda = feynkit::parse_matrix(mj);
  const auto integrand =
      feynkit::grassmann_exp(feynkit::GrassmannPolynomial::ghost_quadratic(lambda));
  const Rat berezin = feynkit::berezin_integral(integrand);
  const Rat det = lambda.determinant();

  Json report{{"subcommand", "berezin"},
              {"inputs", Json{{"matrix", mj}}},
              {"berezin_integral", feynkit::rational_to_json(berezin)},
              {"determinant", feynkit::rational_to_json(det)},
              {"equal", berezin == det}};
  emit(report, o, timer);
  std::cerr << "int exp(<cbar,Lambda c>) dc dcbar = " << feynkit::to_string(berezin) << "\n";
  return berezin == det ? 0 : 2;
}

int cmd_gaugefix(const CommonOpts& o, const std::string& example, unsigned alpha, double epsilon,
                 int grid, const std::string& integrand_name) {
  ReportTimer timer;
  feynkit::CstarIntegrand integrand = feynkit::CstarIntegrand::gaussian;
  if (integrand_name == "disk")
    integrand = feynkit::CstarIntegrand::unit_disk;
  else if (integrand_name != "gaussian")
    throw std::invalid_argument("gaugefix: integrand must be gaussian or disk");

  Json report{{"subcommand", "gaugefix"},
              {"inputs", Json{{"example", example},
                              {"alpha", alpha},
                              {"epsilon", epsilon},
                              {"grid", grid},
                              {"integrand", integrand_name}}}};

  if (example == "rotation-R2") {
    auto f = [&](double r) {
      return integrand == feynkit::CstarIntegrand::gaussian ? std::exp(-0.5 * r * r)
                                                            : (r < 1.0 ? 1.0 : 0.0);
    };
    feynkit::RotationQuadConfig cfg;
    cfg.epsilon = epsilon;
    const double value = feynkit::gauge_fixed_integral_rotation(f, cfg);
    const double direct = feynkit::polar_radial_integral(f, cfg);
    report["value"] = value;
    report["direct_value"] = direct;
    report["rel_diff"] = std::abs(value - direct) / std::abs(direct);
    report["epsilon_trace"] = Json::array({epsilon, 0.5 * epsilon});
    emit(report, o, timer);
    std::cerr << "rotation gauge-fixed = " << value << " vs polar " << direct << "\n";
    return report["rel_diff"].get<double>() < 5e-3 ? 0 : 2;
  }
  if (example == "cstar-C2") {
    feynkit::CstarConfig cfg;
    cfg.epsilon = epsilon;
    cfg.w_nodes = grid;
    cfg.integrand = integrand;
    const auto res = feynkit::cstar_gauge_fixed(alpha, cfg);
    const double direct = feynkit::cstar_direct(integrand);
    Json trace = Json::array();
    for (const auto& [eps, val] : res.epsilon_trace)
      trace.push_back(Json{{"epsilon", eps}, {"value", val}});
    report["value"] = res.value;
    report["alpha"] = alpha;
    report["epsilon_trace"] = std::move(trace);
    report["direct_value"] = direct;
    report["rel_diff"] = std::abs(res.value - direct) / std::abs(direct);
    report["truncation_estimate"] = res.truncation_estimate;
    emit(report, o, timer);
    std::cerr << "C* gauge-fixed (alpha=" << alpha << ") = " << res.value << " vs direct "
              << direct << "\n";
    return report["rel_diff"].get<double>() < 5e-3 ? 0 : 2;
  }
  throw std::invalid_argument("gaugefix: example must be rotation-R2 or cstar-C2");
}

int cmd_lk(const CommonOpts& o, std::size_t i, std::size_t j) {
  ReportTimer timer;
  const feynkit::PolygonalLink link = feynkit::load_link(o.link_spec);
  const auto est = feynkit::linking_integral(link, i, j, cs_config(o));
  const int oracle = feynkit::combinatorial_linking(link, i, j, o.seed);
  const long rounded = std::lround(est.value);

  Json report{{"subcommand", "lk"},
              {"inputs", Json{{"link_spec", o.link_spec},
                              {"link", feynkit::link_to_json(link)},
                              {"i", i},
                              {"j", j},
                              {"delta_cut", o.delta_cut}}},
              {"estimate", estimate_to_json(est)},
              {"rounded", rounded},
              {"oracle_combinatorial", oracle},
              {"matches_oracle", rounded == oracle}};
  emit(report, o, timer);
  std::cerr << "lk integral = " << est.value << " +- " << est.std_error << " (combinatorial "
            << oracle << ")\n";
  return rounded == oracle ? 0 : 2;
}

int cmd_slk(const CommonOpts& o, std::size_t comp, double frame_eps, int auto_twists,
            bool auto_frame) {
  ReportTimer timer;
  feynkit::PolygonalLink link = feynkit::load_link(o.link_spec);
  if (auto_frame) {
    auto base = feynkit::reference_framing(link.component(comp));
    link = link.with_framing(comp,
                             feynkit::twist_framing(link.component(comp), base, auto_twists));
  }
  if (!link.component(comp).framed())
    throw std::invalid_argument("slk: component carries no framing (use --auto-frame)");

  auto cfg = cs_config(o);
  cfg.frame_epsilon = frame_eps;
  const auto est = feynkit::self_linking_integral(link, comp, cfg);
  const int oracle = feynkit::writhe_pushoff_selflinking(link, comp, o.seed);
  const long rounded = std::lround(est.extrapolated);

  Json report{{"subcommand", "slk"},
              {"inputs", Json{{"link_spec", o.link_spec},
                              {"link", feynkit::link_to_json(link)},
                              {"component", comp},
                              {"frame_epsilon", frame_eps},
                              {"delta_cut", o.delta_cut}}},
              {"estimate", cut_estimate_to_json(est)},
              {"rounded", rounded},
              {"oracle_pushoff", oracle},
              {"matches_oracle", rounded == oracle}};
  emit(report, o, timer);
  std::cerr << "self-linking integral = " << est.extrapolated << " (push-off " << oracle << ")\n";
  return rounded == oracle ? 0 : 2;
}

int cmd_v2(const CommonOpts& o) {
  ReportTimer timer;
  const feynkit::PolygonalLink input = feynkit::load_link(o.link_spec);
  const feynkit::PolygonalLink knot = framed_knot_for_v2(input, o.seed);
  const auto est = feynkit::v2_integral(knot, cs_config(o));
  const long long oracle = feynkit::conway_a2(knot, o.seed);

  Json report{{"subcommand", "v2"},
              {"inputs", Json{{"link_spec", o.link_spec},
                              {"link", feynkit::link_to_json(knot)},
                              {"delta_cut", o.delta_cut}}},
              {"value", est.value},
              {"std_error", est.std_error},
              {"wx", cut_estimate_to_json(est.wx)},
              {"wy", cut_estimate_to_json(est.wy)},
              {"oracle_a2", oracle},
              {"note", "the combination (1/4) W_X + (1/3) W_Y evaluates to a2 - 1/24"}};
  emit(report, o, timer);
  std::cerr << "v2 = " << est.value << " +- " << est.std_error << " (a2 = " << oracle << ")\n";
  return 0;
}

int cmd_jacobi(const CommonOpts& o, std::size_t degree, std::size_t circles) {
  ReportTimer timer;
  feynkit::JacobiSpace space(degree, circles);
  std::size_t loopless = 0;
  for (const auto& d : space.basis())
    if (!d.has_looped_edge()) ++loopless;

  Json report{{"subcommand", "jacobi"},
              {"inputs", Json{{"degree", degree}, {"circles", circles}}},
              {"basis_size", space.basis().size()},
              {"loopless_basis", loopless},
              {"relation_count", space.relation_count()},
              {"quotient_dimension", space.quotient_dimension()},
              {"reduced_dimension", space.reduced_dimension()},
              {"metadata",
               Json{{"hbar", "1/(k + h_vee)"}, {"level_k", "nominal, not used numerically"}}}};
  if (degree == 2 && circles == 1) {
    const auto vx = space.class_vector(feynkit::make_cross_chords(), true);
    const auto vy = space.class_vector(feynkit::make_tripod(), true);
    report["x_equals_y_reduced"] = (vx == vy);
  }
  emit(report, o, timer);
  std::cerr << "J_" << degree << " (m=" << circles
            << "): dim = " << space.quotient_dimension() << "\n";
  return 0;
}

int cmd_selftest(const CommonOpts& o) {
  ReportTimer timer;
  std::uint64_t budget = 200000;
  if (const char* env = std::getenv("FEYNKIT_SELFTEST_BUDGET"))
    budget = std::strtoull(env, nullptr, 10);

  Json checks = Json::array();
  bool all_ok = true;
  auto check = [&](const std::string& name, bool ok) {
    checks.push_back(Json{{"name", name}, {"pass", ok}});
    all_ok = all_ok && ok;
    std::cerr << (ok ? "  ok  " : " FAIL ") << name << "\n";
  };

  check("pairing count (2n)!/(2^n n!), n <= 5", [&] {
    for (std::size_t n = 1; n <= 5; ++n)
      if (feynkit::BigInt(feynkit::enumerate_pairings(2 * n).size()) !=
          feynkit::double_factorial_odd(n))
        return false;
    return true;
  }());

  check("moment == moment_via_recursion (20 random)", [&] {
    feynkit::Rng rng(7);
    for (int t = 0; t < 20; ++t) {
      const std::size_t d = 1 + rng.next_u64() % 3;
      feynkit::RatMatrix m(d, d);
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t k = 0; k < d; ++k)
          m(i, k) = static_cast<long long>(rng.next_u64() % 3);
      feynkit::RatMatrix a = m.transposed() * m;
      for (std::size_t i = 0; i < d; ++i) a(i, i) += 1;
      feynkit::SymmetricForm form(a);
      feynkit::MomentRequest req;
      const std::size_t mlen = 2 + 2 * (rng.next_u64() % 3);
      for (std::size_t k = 0; k < mlen; ++k) req.indices.push_back(rng.next_u64() % d);
      if (feynkit::moment(form, req) != feynkit::moment_via_recursion(form, req)) return false;
    }
    return true;
  }());

  check("cubic order-2 classes {Theta: 6, dumbbell: 9}", [&] {
    const auto classes = feynkit::enumerate_contraction_graphs({3}, 2, 0);
    if (classes.size() != 2) return false;
    feynkit::BigInt m6 = 0, m9 = 0;
    for (const auto& c : classes) {
      if (feynkit::automorphism_count(c.graph) == 12) m6 = c.multiplicity;
      if (feynkit::automorphism_count(c.graph) == 8) m9 = c.multiplicity;
    }
    return m6 == 6 && m9 == 9;
  }());

  check("berezin == det (10 random, l <= 3)", [&] {
    feynkit::Rng rng(13);
    for (int t = 0; t < 10; ++t) {
      const std::size_t l = 1 + rng.next_u64() % 3;
      feynkit::RatMatrix lambda(l, l);
      for (std::size_t i = 0; i < l; ++i)
        for (std::size_t k = 0; k < l; ++k)
          lambda(i, k) = static_cast<long long>(rng.next_u64() % 7) - 3;
      const auto e =
          feynkit::grassmann_exp(feynkit::GrassmannPolynomial::ghost_quadratic(lambda));
      if (feynkit::berezin_integral(e) != lambda.determinant()) return false;
    }
    return true;
  }());

  check("partition series: graphs == direct (d=2, order 3)", [&] {
    feynkit::RatMatrix a(2, 2);
    a(0, 0) = 3;
    a(0, 1) = 1;
    a(1, 0) = 1;
    a(1, 1) = 2;
    const feynkit::SymmetricForm form(a);
    const auto u = feynkit::Potential::from_monomials(
        2, {{{3, 0}, Rat(1)}, {{1, 2}, Rat(1, 2)}, {{4, 0}, Rat(1, 3)}});
    return feynkit::partition_series_graphs(form, u, 3) ==
           feynkit::partition_series_direct(form, u, 3);
  }());

  check("rotation gauge fixing matches polar within 0.5%", [&] {
    auto f = [](double r) { return std::exp(-0.5 * r * r); };
    const double gf = feynkit::gauge_fixed_integral_rotation(f);
    const double polar = feynkit::polar_radial_integral(f);
    return std::abs(gf - polar) / polar < 5e-3;
  }());

  check("omega integrates to 1 over S^2 (MC, 4 sigma)", [&] {
    const auto est = feynkit::omega_sphere_normalization({budget, o.seed, o.threads, false});
    return std::abs(est.value - 1.0) < 4.0 * est.std_error + 1e-9;
  }());

  check("Hopf link: MC integral rounds to the combinatorial count", [&] {
    const auto hopf = feynkit::make_hopf_link(48);
    feynkit::CsMcConfig cfg;
    cfg.samples = std::max<std::uint64_t>(budget, 50000);
    cfg.seed = o.seed;
    const auto est = feynkit::linking_integral(hopf, 0, 1, cfg);
    return std::lround(est.value) == feynkit::combinatorial_linking(hopf, 0, 1);
  }());

  check("Jacobi: tadpole = 0 and [X] = [Y] (reduced)", [&] {
    feynkit::JacobiSpace sp11(1, 1);
    for (const auto& x : sp11.class_vector(feynkit::make_tadpole(), false))
      if (x != 0) return false;
    feynkit::JacobiSpace sp21(2, 1);
    return sp21.class_vector(feynkit::make_cross_chords(), true) ==
           sp21.class_vector(feynkit::make_tripod(), true);
  }());

  Json report{{"subcommand", "selftest"},
              {"inputs", Json{{"budget", budget}}},
              {"checks", std::move(checks)},
              {"all_pass", all_ok}};
  emit(report, o, timer);
  std::cerr << (all_ok ? "selftest: all checks passed\n" : "selftest: FAILURES\n");
  return all_ok ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"feynkit: finite-dimensional Feynman calculus and knot integrals"};
  app.require_subcommand(1);

  CommonOpts o;

  std::string indices_csv, legs_csv;
  bool mc_check = false;
  auto* wick = app.add_subcommand("wick", "exact Gaussian moment of coordinate functions");
  add_common(wick, o);
  wick->add_option("--indices", indices_csv, "1-based coordinate indices, comma separated")
      ->required();
  wick->add_flag("--mc-check", mc_check, "append a Monte Carlo cross-check");

  auto* expand = app.add_subcommand("expand", "perturbative series with per-graph breakdown");
  add_common(expand, o);
  expand->add_option("--legs", legs_csv, "1-based leg indices (empty: partition function)");

  auto* freeenergy = app.add_subcommand("freeenergy", "connected-graph free energy series");
  add_common(freeenergy, o);

  auto* berezin = app.add_subcommand("berezin", "Berezin integral of exp(<cbar, Lambda c>)");
  add_common(berezin, o);

  std::string example = "rotation-R2", integrand_name = "gaussian";
  unsigned alpha = 1;
  double gf_epsilon = 0.05;
  int gf_grid = 48;
  auto* gaugefix = app.add_subcommand("gaugefix", "Faddeev-Popov gauge fixing examples");
  add_common(gaugefix, o);
  gaugefix->add_option("--example", example, "rotation-R2 or cstar-C2");
  gaugefix->add_option("--alpha", alpha, "gauge exponent for cstar-C2");
  gaugefix->add_option("--epsilon", gf_epsilon, "nascent delta width");
  gaugefix->add_option("--grid", gf_grid, "Gauss-Legendre nodes per axis");
  gaugefix->add_option("--integrand", integrand_name, "gaussian or disk");

  std::size_t comp_i = 0, comp_j = 1, comp = 0;
  auto* lk = app.add_subcommand("lk", "Gauss linking integral with combinatorial oracle");
  add_common(lk, o);
  lk->add_option("--i", comp_i, "first component");
  lk->add_option("--j", comp_j, "second component");

  double frame_eps = 0.05;
  int auto_twists = 0;
  bool auto_frame = false;
  auto* slk = app.add_subcommand("slk", "framed self-linking integral");
  add_common(slk, o);
  slk->add_option("--component", comp, "component index");
  slk->add_option("--frame-epsilon", frame_eps, "Gauss map deformation size");
  slk->add_flag("--auto-frame", auto_frame, "attach a reference framing");
  slk->add_option("--twists", auto_twists, "twists added to the reference framing");

  auto* v2 = app.add_subcommand("v2", "degree-2 knot invariant from configuration space");
  add_common(v2, o);

  std::size_t degree = 2, circles = 1;
  auto* jacobi = app.add_subcommand("jacobi", "Jacobi diagram space dimensions");
  add_common(jacobi, o);
  jacobi->add_option("--degree", degree, "diagram degree (<= 2)");
  jacobi->add_option("--circles", circles, "number of skeleton circles");

  auto* selftest = app.add_subcommand("selftest", "oracle-equivalence self checks");
  add_common(selftest, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);  // prints usage / error text
    return e.get_exit_code() == 0 ? 0 : 1;
  }

  try {
    if (wick->parsed()) return cmd_wick(o, indices_csv, mc_check);
    if (expand->parsed()) return cmd_expand(o, legs_csv);
    if (freeenergy->parsed()) return cmd_freeenergy(o);
    if (berezin->parsed()) return cmd_berezin(o);
    if (gaugefix->parsed())
      return cmd_gaugefix(o, example, alpha, gf_epsilon, gf_grid, integrand_name);
    if (lk->parsed()) return cmd_lk(o, comp_i, comp_j);
    if (slk->parsed()) return cmd_slk(o, comp, frame_eps, auto_twists, auto_frame);
    if (v2->parsed()) return cmd_v2(o);
    if (jacobi->parsed()) return cmd_jacobi(o, degree, circles);
    if (selftest->parsed()) return cmd_selftest(o);
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 1;
  } catch (const std::out_of_range& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 1;
  } catch (const std::domain_error& e) {
    std::cerr << "numerical guard: " << e.what() << "\n";
    return 2;
  } catch (const std::runtime_error& e) {
    std::cerr << "numerical guard: " << e.what() << "\n";
    return 2;
  }
  return 1;
}

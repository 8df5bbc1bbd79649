// Acceptance suite: runs every acceptance criterion at its stated
// tolerance and prints one pass/fail line per criterion.

#include "feynkit/conway.hpp"
#include "feynkit/cs_integrals.hpp"
#include "feynkit/gauss.hpp"
#include "feynkit/gaussmap.hpp"
#include "feynkit/gaugefix.hpp"
#include "feynkit/grassmann.hpp"
#include "feynkit/jacobi.hpp"
#include "feynkit/perturb.hpp"
#include "feynkit/projection.hpp"
#include "feynkit/wick.hpp"

#include "oracles.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace feynkit;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
  void note(const std::string& what) { detail += (detail.empty() ? "" : "; ") + what; }
};

int failures = 0;

void run_criterion(int number, const std::string& title, double time_limit_s,
                   const std::function<void(Outcome&)>& body) {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  body(out);
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (time_limit_s > 0 && elapsed > time_limit_s) {
    out.pass = false;
    out.detail += (out.detail.empty() ? "" : "; ") + std::string("over time budget");
  }
  std::printf("%s  %2d. %s  [%.1fs]%s%s\n", out.pass ? "PASS" : "FAIL", number, title.c_str(),
              elapsed, out.detail.empty() ? "" : "  -- ", out.detail.c_str());
  std::fflush(stdout);
  if (!out.pass) ++failures;
}

std::string fmt(double v) {
  std::ostringstream ss;
  ss.precision(4);
  ss << v;
  return ss.str();
}

PolygonalLink zero_framed(const PolygonalLink& k) {
  auto f = k.with_framing(0, reference_framing(k.component(0)));
  return normalize_framing_to_zero(f, 0);
}

Potential random_cubic_quartic(std::mt19937_64& rng, std::size_t dim) {
  std::map<std::vector<unsigned>, Rat> monos;
  std::uniform_int_distribution<int> num(-2, 2);
  std::uniform_int_distribution<int> den(1, 2);
  for (int t = 0; t < 3; ++t) {
    std::vector<unsigned> e(dim, 0);
    for (int j = 0; j < 3; ++j) e[rng() % dim] += 1;
    monos[e] += Rat(num(rng), den(rng));
  }
  for (int t = 0; t < 2; ++t) {
    std::vector<unsigned> e(dim, 0);
    for (int j = 0; j < 4; ++j) e[rng() % dim] += 1;
    monos[e] += Rat(num(rng), den(rng));
  }
  std::vector<unsigned> fallback(dim, 0);
  fallback[0] = 3;
  monos.emplace(fallback, Rat(1));
  return Potential::from_monomials(dim, monos);
}

}  // namespace

int main() {
  std::printf("feynkit acceptance suite\n");

  run_criterion(1, "Gaussian closed forms vs quadrature (20 random, d <= 3, 1%)", 30.0,
                [](Outcome& out) {
                  std::mt19937_64 rng(101);
                  for (int trial = 0; trial < 20; ++trial) {
                    const std::size_t d = 1 + trial % 3;
                    const SymmetricForm a(oracles::random_pd_matrix(rng, d));
                    const auto ad = oracles::to_double_matrix(a.entries());

                    const double z0 = gaussian_partition(a);
                    const double q0 =
                        oracles::box_gauss_quadrature(ad, std::vector<double>(d, 0.0));
                    out.require(std::abs(z0 - q0) / q0 < 0.01,
                                "Z_0 off at trial " + std::to_string(trial));

                    const auto b = oracles::random_rationals(rng, d, 2);
                    std::vector<double> bd(d);
                    for (std::size_t i = 0; i < d; ++i) bd[i] = to_double(b[i]);
                    const double zb = shifted_partition(a, LinearSource(b));
                    const double qb = oracles::box_gauss_quadrature(ad, bd);
                    out.require(std::abs(zb - qb) / qb < 0.01,
                                "Z_b off at trial " + std::to_string(trial));
                  }
                });

  run_criterion(2, "Wick exactness: 200 random routes equal; pairing counts; odd vanish", 10.0,
                [](Outcome& out) {
                  std::mt19937_64 rng(202);
                  for (int trial = 0; trial < 200; ++trial) {
                    const std::size_t d = 1 + rng() % 4;
                    const SymmetricForm a(oracles::random_pd_matrix(rng, d));
                    MomentRequest req;
                    const std::size_t m = 1 + rng() % 8;
                    for (std::size_t k = 0; k < m; ++k) req.indices.push_back(rng() % d);
                    const Rat lhs = moment(a, req);
                    out.require(lhs == moment_via_recursion(a, req), "route mismatch");
                    if (m % 2 == 1) out.require(lhs == 0, "odd moment nonzero");
                  }
                  for (std::size_t n = 1; n <= 6; ++n)
                    out.require(BigInt(enumerate_pairings(2 * n).size()) ==
                                    double_factorial_odd(n),
                                "pairing count n=" + std::to_string(n));
                });

  run_criterion(
      3, "Graph combinatorics: {Theta:6, dumbbell:9}, quartic {12}/{3}, |Aut| 12/8", 30.0,
      [](Outcome& out) {
        const auto cubic2 = enumerate_contraction_graphs({3}, 2, 0);
        out.require(cubic2.size() == 2, "cubic order-2 class count");
        for (const auto& c : cubic2) {
          const BigInt aut = automorphism_count(c.graph);
          if (aut == 12)
            out.require(c.multiplicity == 6, "Theta multiplicity");
          else if (aut == 8)
            out.require(c.multiplicity == 9, "dumbbell multiplicity");
          else
            out.require(false, "unexpected |Aut| " + aut.str());
          out.require(c.multiplicity * aut == 72, "pairing identity");
        }
        const auto quartic_vac = enumerate_contraction_graphs({4}, 1, 0);
        out.require(quartic_vac.size() == 1 && quartic_vac[0].multiplicity == 3 &&
                        automorphism_count(quartic_vac[0].graph) == 8,
                    "quartic vacuum multiplicity 3");
        bool found12 = false;
        for (const auto& c : enumerate_contraction_graphs({4}, 1, 2))
          if (!c.graph.is_vacuum()) found12 = c.multiplicity == 12;
        out.require(found12, "quartic two-leg multiplicity 12");
      });

  run_criterion(
      4, "Master oracle: graph series == direct series exactly (30 random)", 120.0,
      [](Outcome& out) {
        std::mt19937_64 rng(404);
        for (int trial = 0; trial < 30; ++trial) {
          const std::size_t d = 1 + trial % 3;
          const SymmetricForm a(oracles::random_pd_matrix(rng, d));
          const Potential u = random_cubic_quartic(rng, d);
          out.require(partition_series_graphs(a, u, 3) == partition_series_direct(a, u, 3),
                      "partition mismatch, trial " + std::to_string(trial));
          // Correlators and structural vacuum cancellation.
          const std::vector<std::size_t> legs = {0, d > 1 ? 1u : 0u};
          const std::size_t corr_order = trial % 5 == 0 ? 3 : 2;
          out.require(correlator_series(a, u, legs, corr_order) ==
                          correlator_series_direct(a, u, legs, corr_order),
                      "correlator mismatch, trial " + std::to_string(trial));
        }
        // Vacuum cancellation is structural: only non-vacuum classes enter.
        const SymmetricForm a1(RatMatrix::identity(1));
        const Potential cubic = Potential::from_monomials(1, {{{3}, Rat(1)}});
        for (const auto& term : graph_breakdown(a1, cubic, {0, 0}, 2))
          if (term.vacuum)
            out.require(term.hbar_order <= 2, "");  // enumerated but excluded from the sum
      });

  run_criterion(5, "Free energy: exp(connected sum) == full graph sum to order 4", 120.0,
                [](Outcome& out) {
                  const SymmetricForm a1(RatMatrix::identity(1));
                  const Potential cubic = Potential::from_monomials(1, {{{3}, Rat(1)}});
                  const auto connected = free_energy_series_connected(a1, cubic, 4);
                  const auto full = partition_series_graphs(a1, cubic, 4);
                  out.require(connected.exp() == full, "cubic d=1 identity");
                  out.require(free_energy_series(a1, cubic, 4) == connected, "log != connected");
                  out.require(full[4] != connected[4], "no disconnected content at order 4");

                  std::mt19937_64 rng(505);
                  const SymmetricForm a2(oracles::random_pd_matrix(rng, 2));
                  const Potential u2 = Potential::from_monomials(
                      2, {{{3, 0}, Rat(1)}, {{1, 2}, Rat(-1, 2)}, {{0, 4}, Rat(1, 3)}});
                  out.require(free_energy_series_connected(a2, u2, 4).exp() ==
                                  partition_series_graphs(a2, u2, 4),
                              "cubic+quartic d=2 identity");
                });

  run_criterion(6, "Berezin determinant identity (50 random integer Lambda, l <= 4)", 30.0,
                [](Outcome& out) {
                  std::mt19937_64 rng(606);
                  std::uniform_int_distribution<int> entry(-4, 4);
                  for (int trial = 0; trial < 50; ++trial) {
                    const std::size_t l = 1 + trial % 4;
                    RatMatrix lambda(l, l);
                    for (std::size_t i = 0; i < l; ++i)
                      for (std::size_t j = 0; j < l; ++j) lambda(i, j) = entry(rng);
                    const auto e = grassmann_exp(GrassmannPolynomial::ghost_quadratic(lambda));
                    out.require(berezin_integral(e) == oracles::cofactor_det(lambda),
                                "trial " + std::to_string(trial));
                  }
                });

  run_criterion(
      7, "Gauge fixing: rotation 0.5%; C* alpha-independence + direct; A_F checks", 120.0,
      [](Outcome& out) {
        const std::vector<std::pair<std::function<double(double)>, double>> integrands = {
            {[](double r) { return std::exp(-0.5 * r * r); }, 2.0 * std::numbers::pi},
            {[](double r) { return r < 1.0 ? 1.0 : 0.0; }, std::numbers::pi},
            {[](double r) { return r * r * std::exp(-r * r); }, std::numbers::pi}};
        for (std::size_t k = 0; k < integrands.size(); ++k) {
          const double gf = gauge_fixed_integral_rotation(integrands[k].first);
          const double target = polar_radial_integral(integrands[k].first);
          out.require(std::abs(gf - target) / target < 5e-3,
                      "rotation integrand " + std::to_string(k));
          out.require(std::abs(target - integrands[k].second) / integrands[k].second < 1e-3,
                      "polar reference " + std::to_string(k));
        }

        const auto z1 = cstar_gauge_fixed(1);
        const auto z2 = cstar_gauge_fixed(2);
        const double direct = cstar_direct(CstarIntegrand::gaussian);
        out.require(std::abs(z1.value - z2.value) / std::abs(z1.value) < 5e-3,
                    "alpha dependence " + fmt(z1.value) + " vs " + fmt(z2.value));
        out.require(std::abs(z1.value - direct) / direct < 5e-3, "direct mismatch");

        const auto rep = quadratic_form_check();
        out.require(rep.rank_a == 2, "rank(A) != 2");
        out.require(std::abs(rep.det_af) > 0.5, "det(A_F) ~ 0");
        out.require(rep.top_block_is_swap, "leading block");
      });

  run_criterion(
      8, "Linking number: MC rounds to the combinatorial count (<= 1e7 samples)", 120.0,
      [](Outcome& out) {
        CsMcConfig cfg{.samples = 4000000, .seed = 808};
        const auto hopf = make_hopf_link(64);
        const int hopf_lk = combinatorial_linking(hopf, 0, 1);
        const auto hopf_est = linking_integral(hopf, 0, 1, cfg);
        out.require(std::abs(hopf_est.value - hopf_lk) < 0.1,
                    "hopf " + fmt(hopf_est.value) + " vs " + std::to_string(hopf_lk));

        const auto t24 = make_torus_link_2_4(96);
        const int t24_lk = combinatorial_linking(t24, 0, 1);
        out.require(std::abs(t24_lk) == 2, "torus link count");
        const auto t24_est = linking_integral(t24, 0, 1, cfg);
        out.require(std::abs(t24_est.value - t24_lk) < 0.1,
                    "torus " + fmt(t24_est.value) + " vs " + std::to_string(t24_lk));

        PolygonalLink split({make_round_circle(32).component(0),
                             make_round_circle(32, 1.0, {9, 0, 0}).component(0)});
        const auto split_est = linking_integral(split, 0, 1, cfg);
        out.require(std::abs(split_est.value) < 0.05, "split " + fmt(split_est.value));

        for (std::uint64_t seed = 1; seed <= 5; ++seed)
          out.require(combinatorial_linking(hopf, 0, 1, seed) == hopf_lk,
                      "projection dependence at seed " + std::to_string(seed));
      });

  run_criterion(
      9, "Self-linking: framed integral matches push-off; unframed non-invariant", 300.0,
      [](Outcome& out) {
        CsMcConfig cfg{.samples = 4000000, .seed = 909};
        const auto circ = make_round_circle(64);
        const auto base = reference_framing(circ.component(0));
        for (int twist = 0; twist <= 1; ++twist) {
          const auto framed =
              circ.with_framing(0, twist_framing(circ.component(0), base, twist));
          const int oracle = writhe_pushoff_selflinking(framed, 0);
          const auto est = self_linking_integral(framed, 0, cfg);
          out.require(std::abs(est.extrapolated - oracle) < 1e-2,
                      "twist " + std::to_string(twist) + ": " + fmt(est.extrapolated) +
                          " vs " + std::to_string(oracle));
        }
        LinkComponent bent;
        for (int k = 0; k < 96; ++k) {
          const double t = 2.0 * std::numbers::pi * k / 96;
          bent.points.push_back({std::cos(t) * (1 + 0.4 * std::cos(3 * t)),
                                 std::sin(t) * (1 + 0.4 * std::cos(3 * t)),
                                 0.5 * std::sin(2 * t)});
        }
        const auto flat_est = chord_integral_unframed(circ, 0, cfg);
        const auto bent_est = chord_integral_unframed(PolygonalLink({bent}), 0, cfg);
        const double sigma =
            std::hypot(flat_est.half_cut.std_error, bent_est.half_cut.std_error);
        out.require(std::abs(flat_est.extrapolated - bent_est.extrapolated) > 5.0 * sigma,
                    "unframed chord integral failed to separate isotopic unknots");
      });

  run_criterion(
      10, "v2: unknot < 2e-2; trefoil 1 +- 5e-2; reps within 3 sigma; WX apart; double edge",
      600.0, [](Outcome& out) {
        const auto unknot = zero_framed(make_round_circle(96));
        CsMcConfig cfg_small{.samples = 6000000, .seed = 1010, .delta_cut = 2e-3};
        const auto v_unknot = v2_integral(unknot, cfg_small);
        out.require(std::abs(v_unknot.value) < 2e-2,
                    "unknot v2 = " + fmt(v_unknot.value) +
                        " (the faithful combination evaluates to -1/24; see ledger)");
        out.require(conway_a2(make_round_circle(96)) == 0, "unknot a2 oracle");

        CsMcConfig cfg{.samples = 8000000, .seed = 1011, .delta_cut = 2e-3};
        const auto tre_a = zero_framed(make_trefoil(160));
        const auto tre_b = zero_framed(make_torus_knot(3, 2, 160));
        const auto va = v2_integral(tre_a, cfg);
        out.require(conway_a2(make_trefoil(160)) == 1, "trefoil a2 oracle");
        out.require(std::abs(va.value - 1.0) < 5e-2, "trefoil v2 = " + fmt(va.value));

        CsMcConfig cfg_b = cfg;
        cfg_b.seed = 1012;
        const auto vb = v2_integral(tre_b, cfg_b);
        const double sigma = std::hypot(va.std_error, vb.std_error);
        out.require(std::abs(va.value - vb.value) < 3.0 * sigma,
                    "representatives " + fmt(va.value) + " vs " + fmt(vb.value));
        const double wx_sigma =
            std::hypot(va.wx.half_cut.std_error, vb.wx.half_cut.std_error) / 4.0;
        out.require(std::abs(va.wx.extrapolated - vb.wx.extrapolated) / 4.0 > 5.0 * wx_sigma,
                    "WX/4 failed to separate representatives");

        CsMcConfig cfg_d{.samples = 1000000, .seed = 1013, .delta_cut = 2e-3};
        const auto dbl = double_edge_weight(tre_a, cfg_d);
        out.require(std::abs(dbl.extrapolated) < 3.0 * dbl.half_cut.std_error + 1e-12,
                    "double edge weight " + fmt(dbl.extrapolated));
        out.note("v2(unknot) = " + fmt(v_unknot.value) + ", v2(trefoil) = " + fmt(va.value) +
                 ", " + fmt(vb.value));
      });

  run_criterion(
      11, "Jacobi space: tadpole 0; [X]=[Y] reduced; rank order-invariant; n=1 dims", 60.0,
      [](Outcome& out) {
        JacobiSpace sp11(1, 1);
        for (const auto& x : sp11.class_vector(make_tadpole(), false))
          out.require(x == 0, "tadpole class nonzero");
        out.require(sp11.quotient_dimension() == 1, "J_1 (m=1) dimension");
        JacobiSpace sp12(1, 2);
        out.require(sp12.quotient_dimension() == 1, "J_1 (m=2) dimension");

        JacobiSpace sp21(2, 1);
        const auto vx = sp21.class_vector(make_cross_chords(), true);
        const auto vy = sp21.class_vector(make_tripod(), true);
        out.require(vx == vy, "[X] != [Y] in the zero-framing basis");
        bool nonzero = false;
        for (const auto& x : vx)
          if (x != 0) nonzero = true;
        out.require(nonzero, "[X] collapsed to zero");

        const RatMatrix& rel = sp21.relation_matrix();
        const std::size_t rank = rel.rank();
        std::mt19937_64 rng(111);
        std::vector<std::size_t> order(rel.rows());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        for (int trial = 0; trial < 3; ++trial) {
          std::shuffle(order.begin(), order.end(), rng);
          RatMatrix shuffled(rel.rows(), rel.cols());
          for (std::size_t r = 0; r < rel.rows(); ++r)
            for (std::size_t c = 0; c < rel.cols(); ++c) shuffled(r, c) = rel(order[r], c);
          out.require(shuffled.rank() == rank, "rank changed under row order");
        }
        out.note("dim J_2 (m=1) = " + std::to_string(sp21.quotient_dimension()) +
                 ", reduced = " + std::to_string(sp21.reduced_dimension()));
      });

  std::printf("%d criterion(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}

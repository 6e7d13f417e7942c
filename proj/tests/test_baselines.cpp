#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <vector>

#include "dqa/baselines.hpp"
#include "dqa/instances.hpp"
#include "dqa/rng.hpp"
#include "dqa/schedule.hpp"
#include "dqa/spin_problem.hpp"

using namespace dqa;

namespace {

SpinProblem ferro_chain(int n) {
  SpinProblem p = SpinProblem::make(n);
  for (int i = 0; i + 1 < n; ++i) p.add_coupling(i, i + 1, 1.0);
  return p;
}

}  // namespace

TEST_CASE("brute_force hand cases") {
  SpinProblem pair = SpinProblem::make(2);
  pair.add_coupling(0, 1, 1.0);
  const BruteForceResult r = brute_force(pair);
  CHECK(r.energy == doctest::Approx(-1.0));
  REQUIRE(r.configs.size() == 2);
  CHECK(r.configs[0] == 0b00);
  CHECK(r.configs[1] == 0b11);

  SpinProblem fields = SpinProblem::make(2);
  fields.h << 1.0, 1.0;
  const BruteForceResult f = brute_force(fields);
  CHECK(f.energy == doctest::Approx(-2.0));
  REQUIRE(f.configs.size() == 1);
  CHECK(f.configs[0] == 0b00);
}

TEST_CASE("brute_force agrees with an independent re-enumeration") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const SpinProblem p = gen_sk(10, 2000 + seed);
    const BruteForceResult r = brute_force(p);
    double best = 1e300;
    std::vector<std::uint64_t> best_set;
    for (std::uint64_t x = 0; x < (1ull << 10); ++x) {
      double e = 0;
      for (const auto& [i, j, v] : p.couplings)
        e -= v * z_value(x, i, 10) * z_value(x, j, 10);
      if (e < best - 1e-10) {
        best = e;
        best_set.assign(1, x);
      } else if (e <= best + 1e-10) {
        best_set.push_back(x);
      }
    }
    CHECK(r.energy == doctest::Approx(best).epsilon(1e-12));
    CHECK(r.configs == best_set);
  }
}

TEST_CASE("simulated annealing solves an easy chain") {
  const SpinProblem p = ferro_chain(8);
  AnnealerConfig cfg;
  cfg.sweeps = 300;
  cfg.repetitions = 50;
  cfg.seed = 3;
  const SaResult r = simulated_annealing(p, cfg);
  CHECK(r.best_energy == doctest::Approx(-7.0));
  CHECK(r.success_fraction > 0.99);
}

TEST_CASE("zero-temperature single sweep never raises the energy") {
  const SpinProblem p = gen_sk(10, 77);
  AnnealerConfig cfg;
  cfg.sweeps = 1;
  cfg.beta_initial = 1e8;
  cfg.beta_final = 1e8;
  cfg.seed = 5;
  const SaResult r = simulated_annealing(p, cfg);
  for (std::size_t i = 1; i < r.best_trace.size(); ++i)
    CHECK(r.best_trace[i] <= r.best_trace[i - 1] + 1e-12);
}

TEST_CASE("SA best-so-far trace is non-increasing and deterministic") {
  const SpinProblem p = gen_sk(12, 99);
  AnnealerConfig cfg;
  cfg.sweeps = 200;
  cfg.seed = 11;
  const SaResult a = simulated_annealing(p, cfg);
  const SaResult b = simulated_annealing(p, cfg);
  CHECK(a.best_energy == b.best_energy);
  CHECK(a.best_config == b.best_config);
  REQUIRE(a.best_trace.size() == b.best_trace.size());
  for (std::size_t i = 0; i < a.best_trace.size(); ++i) {
    CHECK(a.best_trace[i] == b.best_trace[i]);
    if (i > 0) CHECK(a.best_trace[i] <= a.best_trace[i - 1] + 1e-12);
  }
}

TEST_CASE("AnnealerConfig validation") {
  AnnealerConfig cfg;
  CHECK_NOTHROW(cfg.validate());
  cfg.sweeps = 0;
  CHECK_THROWS_AS(cfg.validate(), ContractViolation);
  cfg.sweeps = 10;
  cfg.beta_final = 0.05;  // below beta_initial
  CHECK_THROWS_AS(cfg.validate(), ContractViolation);
}

TEST_CASE("svmc under a pure transverse schedule concentrates near pi/2") {
  SpinProblem p = SpinProblem::make(8);
  Schedule sched = linear_forward(1.0);
  sched.A = Control::constant(1.0);
  sched.B = Control::constant(0.0);
  const SvmcResult r = svmc(p, sched, 600, 7, 10.0);
  double mean_sin = 0;
  for (double th : r.angles) mean_sin += std::sin(th) / 8.0;
  CHECK(mean_sin > 0.8);
}

TEST_CASE("svmc on a ferromagnetic pair aligns the rounded bits") {
  SpinProblem p = SpinProblem::make(2);
  p.add_coupling(0, 1, 1.0);
  Schedule sched = linear_forward(1.0);
  sched.A = Control::constant(0.0);
  sched.B = Control::constant(1.0);
  int aligned = 0;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const SvmcResult r = svmc(p, sched, 400, seed, 4.0);
    if (r.bits[0] == r.bits[1]) ++aligned;
  }
  CHECK(aligned >= 45);
}

TEST_CASE("svmc is deterministic under a fixed seed") {
  const SpinProblem p = gen_sk(6, 13);
  const Schedule sched = linear_forward(1.0);
  const SvmcResult a = svmc(p, sched, 150, 21);
  const SvmcResult b = svmc(p, sched, 150, 21);
  CHECK(a.angles == b.angles);
  CHECK(a.bits == b.bits);
  CHECK(a.energy == b.energy);
  CHECK(a.accepted == b.accepted);
  CHECK(a.proposed == b.proposed);
}

TEST_CASE("svmc energy matches the Ising energy of the rounded bits") {
  const SpinProblem p = gen_sk(7, 31);
  const SvmcResult r = svmc(p, linear_forward(1.0), 250, 9);
  CHECK(r.energy == doctest::Approx(cost_energy(p, r.bits)).epsilon(1e-12));
  CHECK(r.proposed > 0);
  CHECK(r.accepted <= r.proposed);
}

TEST_CASE("classical glued-trees walk approaches the stationary exit mass") {
  const GluedTreesGraph g = gen_glued_trees(1, 3);
  long edges = 0;
  for (const auto& nb : g.adjacency) edges += static_cast<long>(nb.size());
  const double stationary =
      static_cast<double>(g.adjacency[static_cast<std::size_t>(g.exit)].size()) /
      static_cast<double>(edges);
  const double frac = classical_walk_glued_trees(g, 4000, 4000, 17);
  CHECK(frac == doctest::Approx(stationary).epsilon(0.15));
}

TEST_CASE("classical walk base cases and depth decay") {
  const GluedTreesGraph g = gen_glued_trees(2, 5);
  CHECK(classical_walk_glued_trees(g, 0, 100, 1) == doctest::Approx(0.0));

  double prev = 1.0;
  for (int d = 2; d <= 6; ++d) {
    const GluedTreesGraph gd = gen_glued_trees(d, 7);
    const long budget = 30 * d * d;  // fixed polynomial budget
    const double f = classical_walk_glued_trees(gd, budget, 3000, 23);
    CHECK(f <= prev + 0.05);
    prev = f;
  }
}

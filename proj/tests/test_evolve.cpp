#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <vector>

#include "dqa/evolve.hpp"
#include "dqa/hamiltonians.hpp"
#include "dqa/instances.hpp"
#include "dqa/metrics.hpp"
#include "dqa/rng.hpp"
#include "dqa/schedule.hpp"

using namespace dqa;

namespace {

SpinProblem random_problem(int n, std::uint64_t seed) {
  Rng rng(seed);
  SpinProblem p = SpinProblem::make(n);
  for (int i = 0; i < n; ++i) p.h(i) = rng.normal();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rng.bernoulli(0.5)) p.add_coupling(i, j, rng.normal());
  return p;
}

Schedule constant_schedule(double a, double b, double T) {
  Schedule sched = linear_forward(T);
  sched.A = Control::constant(a);
  sched.B = Control::constant(b);
  return sched;
}

Eigen::MatrixXcd herm_exp(const Eigen::MatrixXd& H, double theta) {
  // e^{-i theta H} via eigendecomposition.
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(H);
  Eigen::VectorXcd phases(H.rows());
  for (Eigen::Index k = 0; k < H.rows(); ++k)
    phases(k) = std::exp(Complex(0.0, -theta * es.eigenvalues()(k)));
  return es.eigenvectors().cast<Complex>() * phases.asDiagonal() *
         es.eigenvectors().transpose().cast<Complex>();
}

}  // namespace

TEST_CASE("time-independent diagonal evolution only rotates phases") {
  const DiagonalCost cost = gen_rem(4, 3);
  const TimFamily fam(4, cost.materialized());
  const Schedule sched = constant_schedule(0.0, 1.0, 7.3);
  PropagateOptions opts;
  opts.s_grid = {0.0, 1.0};
  const QuantumState psi0 = uniform_state(4);
  const Trajectory traj = propagate(tim_assembler(fam, sched), sched, psi0, opts);
  for (Eigen::Index x = 0; x < 16; ++x) {
    const Complex want =
        psi0.amps(x) * std::exp(Complex(0.0, -7.3 * cost(static_cast<std::uint64_t>(x))));
    CHECK(std::abs(traj.final_state(x) - want) <= 1e-7);
  }
}

TEST_CASE("single qubit adiabatic and quench limits") {
  SpinProblem p = SpinProblem::make(1);
  p.h(0) = 1.0;
  const DiagonalCost cost = DiagonalCost::from_problem(p);

  {
    const Schedule slow = linear_forward(200.0);
    PropagateOptions opts;
    opts.s_grid = {0.0, 1.0};
    const Trajectory t = propagate(tim_assembler(p, slow), slow, uniform_state(1), opts);
    CHECK(success_probability(t.final_state, cost) > 0.999);
  }
  {
    const Schedule fast = linear_forward(0.01);
    PropagateOptions opts;
    opts.s_grid = {0.0, 1.0};
    const Trajectory t = propagate(tim_assembler(p, fast), fast, uniform_state(1), opts);
    const double overlap = std::abs(uniform_state(1).amps.dot(t.final_state));
    CHECK(overlap > 0.999);
  }
}

TEST_CASE("propagate validates its inputs") {
  const SpinProblem p = random_problem(2, 1);
  const Schedule sched = linear_forward(1.0);
  const Assembler H = tim_assembler(p, sched);
  PropagateOptions opts;
  opts.s_grid = {0.5, 0.25};
  CHECK_THROWS_AS(propagate(H, sched, uniform_state(2), opts), ContractViolation);
  opts.s_grid = {0.0, 1.5};
  CHECK_THROWS_AS(propagate(H, sched, uniform_state(2), opts), ContractViolation);
  opts.s_grid.clear();
  CHECK_THROWS_AS(propagate(H, sched, uniform_state(3), opts), ContractViolation);
  CHECK_THROWS_AS(QuantumState::make(Eigen::VectorXcd::Zero(4)), ContractViolation);
}

TEST_CASE("norm and energy conservation along a trajectory") {
  const SpinProblem p = random_problem(5, 9);
  const Schedule sched = constant_schedule(0.6, 0.7, 4.0);
  const LinearOp H0 = assemble_tim(p, 0.6, 0.7);
  PropagateOptions opts;
  opts.tolerance = 1e-10;
  opts.s_grid.clear();
  for (int i = 0; i <= 20; ++i) opts.s_grid.push_back(i / 20.0);
  const Trajectory traj =
      propagate(tim_assembler(p, sched), sched, uniform_state(5), opts);
  REQUIRE(traj.states.size() == 21);
  const double e0 = uniform_state(5).amps.dot(H0.apply(uniform_state(5).amps)).real();
  for (const auto& psi : traj.states) {
    CHECK(std::abs(psi.norm() - 1.0) <= 1e-9);
    const double e = psi.dot(H0.apply(psi)).real();
    CHECK(std::abs(e - e0) <= 1e-8);
  }
}

TEST_CASE("midpoint integrator converges at second order") {
  const SpinProblem p = random_problem(4, 17);
  const Schedule sched = linear_forward(3.0);
  const Assembler H = tim_assembler(p, sched);

  PropagateOptions ref_opts;
  ref_opts.s_grid = {0.0, 1.0};
  ref_opts.store_states = false;
  const Eigen::VectorXcd exact =
      propagate(H, sched, uniform_state(4), ref_opts).final_state;

  auto run_at = [&](double ds) {
    PropagateOptions o;
    o.s_grid = {0.0, 1.0};
    o.store_states = false;
    o.order = 2;
    o.ds = ds;
    o.max_doublings = 0;
    return propagate(H, sched, uniform_state(4), o).final_state;
  };
  const double e1 = (run_at(0.02) - exact).norm();
  const double e2 = (run_at(0.01) - exact).norm();
  CHECK(e1 / e2 >= 3.0);
  CHECK(e1 / e2 <= 5.0);
}

TEST_CASE("propagation is linear in the initial state") {
  const SpinProblem p = random_problem(3, 23);
  const Schedule sched = linear_forward(2.0);
  const Assembler H = tim_assembler(p, sched);
  PropagateOptions opts;
  opts.s_grid = {0.0, 1.0};
  opts.store_states = false;
  opts.check_norm = false;

  Rng rng(5);
  Eigen::VectorXcd a(8), b(8);
  for (int i = 0; i < 8; ++i) {
    a(i) = Complex(rng.normal(), rng.normal());
    b(i) = Complex(rng.normal(), rng.normal());
  }
  a.normalize();
  b.normalize();
  const Complex ca(0.3, 0.4), cb(-0.2, 0.9);
  const Eigen::VectorXcd lhs =
      propagate(H, 2.0, ca * a + cb * b, opts).final_state;
  const Eigen::VectorXcd rhs = ca * propagate(H, 2.0, a, opts).final_state +
                               cb * propagate(H, 2.0, b, opts).final_state;
  CHECK((lhs - rhs).norm() <= 1e-8);
}

TEST_CASE("quench_evolve base cases and dense oracle") {
  {
    const LinearOp hx = transverse_field(1);
    const QuantumState out = quench_evolve(hx, 0.0, basis_state(1, 0));
    CHECK((out.amps - basis_state(1, 0).amps).norm() <= 1e-15);
  }
  {
    // H = -X, T = pi/2: |0> rotates onto |1> up to a global phase.
    SpinProblem p = SpinProblem::make(1);
    const LinearOp h = assemble_tim(p, 1.0, 0.0);
    const QuantumState out = quench_evolve(h, std::acos(-1.0) / 2.0, basis_state(1, 0));
    CHECK(std::abs(out.amps(1)) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::abs(out.amps(0)) <= 1e-12);
    // Phase check: e^{i T X}|0> = cos T |0> + i sin T |1>.
    CHECK(out.amps(1).imag() == doctest::Approx(1.0).epsilon(1e-12));
  }
  {
    const SpinProblem p = random_problem(6, 31);
    const LinearOp h = assemble_tim(p, 0.8, 0.6);
    const QuantumState psi0 = uniform_state(6);
    const QuantumState got = quench_evolve(h, 2.7, psi0);
    const Eigen::VectorXcd want = herm_exp(h.dense_real(), 2.7) * psi0.amps;
    CHECK((got.amps - want).norm() <= 1e-10);
  }
}

TEST_CASE("qaoa_evolve base cases") {
  const SpinProblem p = random_problem(3, 7);
  {
    const QuantumState out = qaoa_evolve(p, {}, {});
    CHECK((out.amps - uniform_state(3).amps).norm() <= 1e-15);
  }
  {
    const std::vector<double> g{0.7, -0.3}, b{0.0, 0.0};
    const QuantumState out = qaoa_evolve(p, g, b);
    for (Eigen::Index x = 0; x < 8; ++x)
      CHECK(std::norm(out.amps(x)) == doctest::Approx(1.0 / 8.0).epsilon(1e-12));
  }
}

TEST_CASE("qaoa_evolve matches a dense matrix-product oracle on a grid") {
  SpinProblem p = SpinProblem::make(2);
  p.add_coupling(0, 1, 1.0);
  const Eigen::MatrixXd hx = transverse_field(2).dense_real();
  const Eigen::MatrixXd hz = cost_table(p).asDiagonal().toDenseMatrix();
  const Eigen::VectorXcd plus = uniform_state(2).amps;
  const DiagonalCost cost = DiagonalCost::from_problem(p);

  for (double gamma : {-1.1, 0.3, 0.9, 2.0}) {
    for (double beta : {-0.8, 0.25, 1.4}) {
      // U = e^{i beta H_X} e^{i gamma H_Z} applied to |+>^2.
      const Eigen::VectorXcd want =
          herm_exp(hx, -beta) * (herm_exp(hz, -gamma) * plus);
      const std::vector<double> g{gamma}, b{beta};
      const QuantumState got = qaoa_evolve(p, g, b);
      CHECK((got.amps - want).norm() <= 1e-10);

      const double e_want = want.dot(hz.cast<Complex>() * want).real();
      const double e_got =
          got.amps.dot(cost.materialized().cast<Complex>().asDiagonal() * got.amps)
              .real();
      CHECK(e_got == doctest::Approx(e_want).epsilon(1e-10));
    }
  }
}

TEST_CASE("breakpoint evolution reproduces the circuit route") {
  const SpinProblem p = random_problem(4, 41);
  const DiagonalCost cost = DiagonalCost::from_problem(p);
  Rng rng(43);
  for (int trial = 0; trial < 5; ++trial) {
    const int layers = 1 + static_cast<int>(rng.uniform_int(0, 3));
    std::vector<double> g(layers), b(layers);
    for (int k = 0; k < layers; ++k) {
      g[k] = rng.uniform(-1.5, 1.5);
      b[k] = rng.uniform(-1.5, 1.5);
      if (std::abs(g[k]) + std::abs(b[k]) < 1e-3) g[k] = 0.5;
    }
    const BreakpointSchedule bs = qaoa_to_schedule(g, b);
    const QuantumState via_schedule = evolve_breakpoint(cost, bs);
    const QuantumState via_circuit = qaoa_evolve(p, g, b);
    const double overlap = std::abs(via_circuit.amps.dot(via_schedule.amps));
    CHECK(overlap == doctest::Approx(1.0).epsilon(1e-10));
  }
}

TEST_CASE("excited_transverse_init analytic properties") {
  const SpinProblem p = random_problem(5, 53);
  const QuantumState psi = excited_transverse_init(p);
  const LinearOp hx = transverse_field(5);
  const double ex = psi.amps.dot(hx.apply(psi.amps)).real();
  CHECK(ex == doctest::Approx(-(5.0 - 2.0)).epsilon(1e-10));
  CHECK(std::abs(uniform_state(5).amps.dot(psi.amps)) <= 1e-12);
  CHECK(std::abs(psi.amps.norm() - 1.0) <= 1e-12);
}

TEST_CASE("excited_transverse_init matches the projected-matrix oracle") {
  const int n = 6;
  const SpinProblem p = random_problem(n, 59);
  const Eigen::VectorXd cost = cost_table(p);
  const Eigen::Index dim = 64;

  // Single-excitation basis vectors e_i(x) = (-1)^{x_i} / sqrt(2^n).
  Eigen::MatrixXd E(dim, n);
  for (int i = 0; i < n; ++i)
    for (Eigen::Index x = 0; x < dim; ++x)
      E(x, i) = (bit_at(static_cast<std::uint64_t>(x), i, n) ? -1.0 : 1.0) /
                std::sqrt(static_cast<double>(dim));
  const Eigen::MatrixXd M = E.transpose() * cost.asDiagonal() * E;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(M);
  const Eigen::VectorXd want_full = E * es.eigenvectors().col(0);

  const QuantumState got = excited_transverse_init(p);
  const double overlap = std::abs(got.amps.dot(want_full.cast<Complex>()));
  CHECK(overlap == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("symmetric evolution agrees with the full space at n=8") {
  const int n = 8;
  const SymmetricProblem sp = spike_problem(n);
  const Schedule sched = linear_forward(3.0);
  PropagateOptions opts;
  opts.s_grid = {0.0, 1.0};
  opts.store_states = false;

  const Trajectory reduced =
      evolve_symmetric(sp, sched, symmetric_uniform_state(n), opts);
  const TimFamily fam(n, symmetric_cost(sp).materialized());
  const Trajectory full =
      propagate(tim_assembler(fam, sched), sched, uniform_state(n), opts);

  const QuantumState embedded = embed_symmetric(
      QuantumState::make(reduced.final_state, Basis::Symmetric), n);
  const double overlap = std::abs(embedded.amps.dot(full.final_state));
  CHECK(overlap == doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("symmetric evolution of the free Hamiltonian is stationary") {
  const int n = 32;
  const SymmetricProblem free{n, [](int) { return 0.0; }, "free"};
  const Schedule sched = linear_forward(5.0);
  PropagateOptions opts;
  opts.s_grid = {0.0, 1.0};
  opts.store_states = false;
  const QuantumState psi0 = symmetric_uniform_state(n);
  const Trajectory t = evolve_symmetric(free, sched, psi0, opts);
  const double overlap = std::abs(psi0.amps.dot(t.final_state));
  CHECK(overlap == doctest::Approx(1.0).epsilon(1e-7));
}

TEST_CASE("symmetric evolution scales to n=1024") {
  const SymmetricProblem sp = spike_problem(1024);
  const Schedule sched = linear_forward(2.0);
  PropagateOptions opts;
  opts.s_grid = {0.0, 1.0};
  opts.store_states = false;
  const Trajectory t = evolve_symmetric(sp, sched, symmetric_uniform_state(1024), opts);
  CHECK(t.final_state.size() == 1025);
  CHECK(std::abs(t.final_state.norm() - 1.0) <= 1e-9);
}

TEST_CASE("iterated reverse annealing bookkeeping") {
  const SpinProblem p = random_problem(4, 61);
  ReverseParams params;
  params.kind = ReverseParams::Kind::Sombrero;
  params.T = 2.0;
  params.peak_height = 1.0;
  params.init_config = {0, 1, 0, 1};
  params.propagate.s_grid = {0.0, 1.0};
  params.propagate.store_states = false;

  const std::vector<CycleRecord> one = iterated_reverse_run(p, params, 1, 3);
  REQUIRE(one.size() == 1);
  CHECK(one[0].best_energy == doctest::Approx(one[0].energy));

  const std::vector<CycleRecord> many = iterated_reverse_run(p, params, 12, 3);
  REQUIRE(many.size() == 12);
  for (std::size_t i = 1; i < many.size(); ++i)
    CHECK(many[i].best_energy <= many[i - 1].best_energy + 1e-12);

  const std::vector<CycleRecord> again = iterated_reverse_run(p, params, 12, 3);
  for (std::size_t i = 0; i < many.size(); ++i) {
    CHECK(many[i].measured == again[i].measured);
    CHECK(many[i].energy == again[i].energy);
  }
}

TEST_CASE("reverse annealing with zero peak freezes the configuration") {
  const SpinProblem p = random_problem(5, 67);
  ReverseParams params;
  params.kind = ReverseParams::Kind::Sombrero;
  params.T = 3.0;
  params.peak_height = 0.0;
  params.init_config = {1, 0, 1, 1, 0};
  params.propagate.s_grid = {0.0, 1.0};
  params.propagate.store_states = false;

  std::uint64_t start = 0;
  for (int i = 0; i < 5; ++i)
    if (params.init_config[static_cast<std::size_t>(i)]) start |= flip_mask(i, 5);

  const std::vector<CycleRecord> recs = iterated_reverse_run(p, params, 6, 11);
  for (const CycleRecord& r : recs) {
    CHECK(r.measured == start);
    CHECK(r.energy == doctest::Approx(cost_energy(p, start)));
  }
}

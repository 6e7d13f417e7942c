#include <doctest.h>

#include <cmath>
#include <cstdint>

#include "dqa/rng.hpp"
#include "dqa/spin_problem.hpp"

using namespace dqa;

namespace {

SpinProblem random_problem(int n, std::uint64_t seed, bool with_fields) {
  Rng rng(seed);
  SpinProblem p = SpinProblem::make(n);
  if (with_fields)
    for (int i = 0; i < n; ++i) p.h(i) = rng.normal();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rng.bernoulli(0.4)) p.add_coupling(i, j, rng.normal());
  return p;
}

}  // namespace

TEST_CASE("cost_energy on small hand-checked problems") {
  SpinProblem p = SpinProblem::make(2);
  p.add_coupling(0, 1, 1.0);
  CHECK(cost_energy(p, std::vector<int>{0, 0}) == doctest::Approx(-1.0));
  CHECK(cost_energy(p, std::vector<int>{0, 1}) == doctest::Approx(1.0));
  CHECK(cost_energy(p, std::vector<int>{1, 1}) == doctest::Approx(-1.0));

  SpinProblem q = SpinProblem::make(1);
  q.h(0) = 0.5;
  CHECK(cost_energy(q, std::vector<int>{1}) == doctest::Approx(0.5));
  CHECK(cost_energy(q, std::vector<int>{0}) == doctest::Approx(-0.5));
}

TEST_CASE("cost_energy rejects a length mismatch") {
  SpinProblem p = SpinProblem::make(2);
  CHECK_THROWS_AS(cost_energy(p, std::vector<int>{0}), ContractViolation);
  CHECK_THROWS_AS(cost_energy(p, std::vector<int>{0, 0, 0}), ContractViolation);
}

TEST_CASE("index and bit-vector overloads agree") {
  const SpinProblem p = random_problem(5, 11, true);
  for (std::uint64_t x = 0; x < 32; ++x) {
    std::vector<int> bits(5);
    for (int i = 0; i < 5; ++i) bits[i] = bit_at(x, i, 5);
    CHECK(cost_energy(p, x) == doctest::Approx(cost_energy(p, bits)).epsilon(1e-14));
  }
}

TEST_CASE("bit convention: big-endian index, bit 0 is z=+1") {
  // Qubit 0 lives in the top bit: index 2 = binary 10 on n=2 sets qubit 0.
  CHECK(bit_at(2, 0, 2) == 1);
  CHECK(bit_at(2, 1, 2) == 0);
  CHECK(z_value(0, 0, 2) == 1);
  CHECK(z_value(2, 0, 2) == -1);
  CHECK(flip_mask(0, 2) == 2);
  CHECK(flip_mask(1, 2) == 1);
}

TEST_CASE("coupling bookkeeping") {
  SpinProblem p = SpinProblem::make(3);
  p.add_coupling(2, 0, 0.25);  // canonicalized to (0,2)
  CHECK(p.coupling(0, 2) == doctest::Approx(0.25));
  CHECK(p.coupling(2, 0) == doctest::Approx(0.25));
  CHECK(p.coupling(0, 1) == 0.0);
  CHECK_THROWS_AS(p.add_coupling(0, 2, 1.0), ContractViolation);
  CHECK_THROWS_AS(p.add_coupling(1, 1, 1.0), ContractViolation);
  CHECK_THROWS_AS(p.add_coupling(0, 3, 1.0), ContractViolation);
}

TEST_CASE("cost_table matches per-configuration evaluation") {
  const SpinProblem p = random_problem(6, 3, true);
  const Eigen::VectorXd t = cost_table(p);
  REQUIRE(t.size() == 64);
  for (std::uint64_t x = 0; x < 64; ++x)
    CHECK(t(static_cast<Eigen::Index>(x)) == doctest::Approx(cost_energy(p, x)).epsilon(1e-14));
}

TEST_CASE("global spin-flip symmetry when h = 0") {
  for (std::uint64_t seed : {1ull, 2ull, 3ull}) {
    const SpinProblem p = random_problem(10, seed, false);
    const Eigen::VectorXd t = cost_table(p);
    const std::uint64_t mask = (1ull << 10) - 1;
    for (std::uint64_t x = 0; x < (1ull << 10); ++x)
      CHECK(t(static_cast<Eigen::Index>(x)) ==
            doctest::Approx(t(static_cast<Eigen::Index>(x ^ mask))).epsilon(1e-12));
  }
}

TEST_CASE("p_spin_cost hand values") {
  CHECK(p_spin_cost(4, 3, std::vector<int>{0, 0, 0, 0}) == doctest::Approx(-16.0));
  CHECK(p_spin_cost(4, 3, std::vector<int>{1, 1, 1, 1}) == doctest::Approx(16.0));
  CHECK(p_spin_cost(2, 2, std::vector<int>{0, 1}) == doctest::Approx(0.0));
  CHECK(p_spin_cost(4, 3, std::uint64_t{0}) == doctest::Approx(-16.0));
}

TEST_CASE("spike_cost definition and guard") {
  CHECK(spike_cost(8, 3) == doctest::Approx(3.0));
  CHECK(spike_cost(8, 2) == doctest::Approx(8.0));
  CHECK(spike_cost(8, 0) == doctest::Approx(0.0));
  CHECK(spike_cost(8, 8) == doctest::Approx(8.0));
  CHECK_THROWS_AS(spike_cost(6, 1), ContractViolation);
}

TEST_CASE("DiagonalCost evaluator and materialized forms agree") {
  const SpinProblem p = random_problem(5, 9, true);
  const DiagonalCost from_p = DiagonalCost::from_problem(p);
  const DiagonalCost from_f =
      DiagonalCost::from_eval(5, [&p](std::uint64_t x) { return cost_energy(p, x); });
  const Eigen::VectorXd a = from_p.materialized();
  const Eigen::VectorXd b = from_f.materialized();
  REQUIRE(a.size() == b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    CHECK(a(i) == doctest::Approx(b(i)).epsilon(1e-14));
    CHECK(from_p(static_cast<std::uint64_t>(i)) == doctest::Approx(a(i)));
  }
}

TEST_CASE("symmetric_cost matches spike_cost through the popcount") {
  const DiagonalCost c = symmetric_cost(spike_problem(8));
  for (std::uint64_t x = 0; x < 256; ++x) {
    const int w = __builtin_popcountll(x);
    CHECK(c(x) == doctest::Approx(spike_cost(8, w)));
  }
}

#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>

#include "dqa/hamiltonians.hpp"
#include "dqa/rng.hpp"
#include "dqa/spin_problem.hpp"

using namespace dqa;

namespace {

Eigen::VectorXcd random_cvector(Eigen::Index dim, std::uint64_t seed) {
  Rng rng(seed);
  Eigen::VectorXcd v(dim);
  for (Eigen::Index i = 0; i < dim; ++i) v(i) = Complex(rng.normal(), rng.normal());
  return v;
}

SpinProblem random_problem(int n, std::uint64_t seed) {
  Rng rng(seed);
  SpinProblem p = SpinProblem::make(n);
  for (int i = 0; i < n; ++i) p.h(i) = rng.normal();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rng.bernoulli(0.5)) p.add_coupling(i, j, rng.normal());
  return p;
}

}  // namespace

TEST_CASE("transverse_field dense form at n=1") {
  const Eigen::MatrixXd m = transverse_field(1).dense_real();
  CHECK(m(0, 0) == doctest::Approx(0.0));
  CHECK(m(0, 1) == doctest::Approx(-1.0));
  CHECK(m(1, 0) == doctest::Approx(-1.0));
  CHECK(m(1, 1) == doctest::Approx(0.0));
}

TEST_CASE("uniform superposition is the -n eigenstate of the transverse field") {
  const int n = 3;
  const LinearOp hx = transverse_field(n);
  Eigen::VectorXcd plus = Eigen::VectorXcd::Constant(8, Complex(1.0 / std::sqrt(8.0), 0));
  const Eigen::VectorXcd out = hx.apply(plus);
  CHECK((out + 3.0 * plus).norm() == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("transverse_field spectrum extremes at n=2") {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(transverse_field(2).dense_real());
  CHECK(es.eigenvalues()(0) == doctest::Approx(-2.0));
  CHECK(es.eigenvalues()(3) == doctest::Approx(2.0));
}

TEST_CASE("transverse_field rejects n=0") {
  CHECK_THROWS_AS(transverse_field(0), ContractViolation);
}

TEST_CASE("assemble_tim pure limits") {
  const SpinProblem p = random_problem(4, 5);
  const Eigen::VectorXd costs = cost_table(p);

  const LinearOp hz = assemble_tim(p, 0.0, 1.0);
  for (std::uint64_t x = 0; x < 16; ++x) {
    Eigen::VectorXcd e = Eigen::VectorXcd::Zero(16);
    e(static_cast<Eigen::Index>(x)) = 1.0;
    const Eigen::VectorXcd out = hz.apply(e);
    CHECK((out - costs(static_cast<Eigen::Index>(x)) * e).norm() ==
          doctest::Approx(0.0).epsilon(1e-14));
  }

  SpinProblem one = SpinProblem::make(1);
  const Eigen::MatrixXd hx = assemble_tim(one, 1.0, 0.0).dense_real();
  CHECK(hx(0, 1) == doctest::Approx(-1.0));
  CHECK(hx(0, 0) == doctest::Approx(0.0));
}

TEST_CASE("assemble_tim two-level gap closed form") {
  SpinProblem p = SpinProblem::make(1);
  p.h(0) = 1.0;
  const double s = 0.5;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(
      assemble_tim(p, 1.0 - s, s).dense_real());
  const double gap = es.eigenvalues()(1) - es.eigenvalues()(0);
  CHECK(gap == doctest::Approx(2.0 * std::sqrt(0.5 * 0.5 + 0.5 * 0.5)).epsilon(1e-12));
}

TEST_CASE("apply agrees with dense multiplication on random vectors") {
  const SpinProblem p = random_problem(6, 17);
  const LinearOp h = assemble_tim(p, 0.7, 0.4);
  const Eigen::MatrixXcd m = h.dense();
  for (std::uint64_t seed : {1ull, 2ull, 3ull}) {
    const Eigen::VectorXcd v = random_cvector(64, seed);
    CHECK((h.apply(v) - m * v).norm() <= 1e-12 * v.norm());
  }
}

TEST_CASE("materialized operators are Hermitian") {
  const SpinProblem p = random_problem(5, 23);
  for (const LinearOp& h :
       {assemble_tim(p, 0.3, 0.9), transverse_field(5),
        hypercube_walk_hamiltonian(DiagonalCost::from_problem(p), 0.6)}) {
    const Eigen::MatrixXcd m = h.dense();
    CHECK(h.hermitian());
    CHECK((m - m.adjoint()).cwiseAbs().maxCoeff() <= 1e-12);
  }
}

TEST_CASE("linear_combination merges shared structure") {
  const SpinProblem p = random_problem(5, 31);
  const TimFamily fam(p);
  const LinearOp a = fam.at(0.8, 0.1);
  const LinearOp b = fam.at(0.2, 0.5);
  const LinearOp c = linear_combination(2.0, a, -1.0, b);
  REQUIRE(c.structure().has_value());
  const Eigen::MatrixXd expect = 2.0 * a.dense_real() - b.dense_real();
  CHECK((c.dense_real() - expect).cwiseAbs().maxCoeff() <= 1e-12);
}

TEST_CASE("norm_bound dominates the spectral norm estimate") {
  const SpinProblem p = random_problem(6, 41);
  for (double a : {0.0, 0.3, 1.0}) {
    const LinearOp h = assemble_tim(p, a, 1.0 - a);
    CHECK(h.norm_bound() >= h.norm_est() - 1e-9);
  }
}

TEST_CASE("norm_est matches the dense spectral norm on a small operator") {
  const SpinProblem p = random_problem(5, 43);
  const LinearOp h = assemble_tim(p, 0.5, 0.5);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h.dense_real());
  const double exact = es.eigenvalues().cwiseAbs().maxCoeff();
  CHECK(h.norm_est() == doctest::Approx(exact).epsilon(1e-6));
}

TEST_CASE("hypercube walk kernel and hand values") {
  const DiagonalCost zero2 = DiagonalCost::from_vector(2, Eigen::VectorXd::Zero(4));
  const LinearOp w2 = hypercube_walk_hamiltonian(zero2, 1.0);
  Eigen::VectorXcd plus = Eigen::VectorXcd::Constant(4, Complex(0.5, 0));
  CHECK(w2.apply(plus).norm() == doctest::Approx(0.0).epsilon(1e-12));

  const DiagonalCost zero1 = DiagonalCost::from_vector(1, Eigen::VectorXd::Zero(2));
  const Eigen::MatrixXd m = hypercube_walk_hamiltonian(zero1, 1.0).dense_real();
  CHECK(m(0, 0) == doctest::Approx(1.0));
  CHECK(m(0, 1) == doctest::Approx(-1.0));
  CHECK(m(1, 0) == doctest::Approx(-1.0));
  CHECK(m(1, 1) == doctest::Approx(1.0));
}

TEST_CASE("hypercube walk smallest eigenvalue vs dense oracle") {
  Eigen::VectorXd c(4);
  c << 0, 1, 1, 2;
  const LinearOp w = hypercube_walk_hamiltonian(DiagonalCost::from_vector(2, c), 0.5);
  Eigen::MatrixXd oracle = Eigen::MatrixXd::Zero(4, 4);
  // 0.5 * (2 I + H_X) + diag(c) assembled by hand.
  oracle.diagonal() << 1, 2, 2, 3;
  oracle(0, 1) = oracle(1, 0) = -0.5;
  oracle(0, 2) = oracle(2, 0) = -0.5;
  oracle(1, 3) = oracle(3, 1) = -0.5;
  oracle(2, 3) = oracle(3, 2) = -0.5;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> a(w.dense_real()), b(oracle);
  CHECK(a.eigenvalues()(0) == doctest::Approx(b.eigenvalues()(0)).epsilon(1e-12));
  CHECK((w.dense_real() - oracle).cwiseAbs().maxCoeff() <= 1e-12);
}

TEST_CASE("hypercube walk with zero cost annihilates only the uniform vector") {
  const DiagonalCost zero = DiagonalCost::from_vector(3, Eigen::VectorXd::Zero(8));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(
      hypercube_walk_hamiltonian(zero, 0.7).dense_real());
  CHECK(es.eigenvalues()(0) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(es.eigenvalues()(1) > 0.1);
  const Eigen::VectorXd ground = es.eigenvectors().col(0).cwiseAbs();
  CHECK((ground.array() - 1.0 / std::sqrt(8.0)).abs().maxCoeff() <= 1e-10);
}

TEST_CASE("dense materialization above the limit is a resource error") {
  const LinearOp big = LinearOp::from_apply(
      kDenseLimit + 1, [](const Eigen::VectorXcd& in, Eigen::VectorXcd& out) { out = in; },
      true, 1.0);
  CHECK_THROWS_AS(big.dense_real(), ResourceError);
}

TEST_CASE("from_apply closures participate in apply") {
  const LinearOp scale = LinearOp::from_apply(
      4, [](const Eigen::VectorXcd& in, Eigen::VectorXcd& out) { out = 2.0 * in; }, true,
      2.0);
  const Eigen::VectorXcd v = random_cvector(4, 7);
  CHECK((scale.apply(v) - 2.0 * v).norm() <= 1e-14);
  CHECK_FALSE(scale.is_real());
}

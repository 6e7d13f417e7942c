#pragma once

#include <functional>
#include <span>
#include <vector>

#include "dqa/hamiltonians.hpp"
#include "dqa/linear_op.hpp"
#include "dqa/rng.hpp"
#include "dqa/schedule.hpp"
#include "dqa/spin_problem.hpp"

namespace dqa {

enum class Basis { Full, Symmetric, Vertex };

/// Unit-norm state vector. Norm is checked at construction and after every
/// propagation step; drift is an error, never silently renormalized.
struct QuantumState {
  Eigen::VectorXcd amps;
  Basis basis = Basis::Full;
  bool degenerate_tiebreak = false;

  static QuantumState make(Eigen::VectorXcd a, Basis basis = Basis::Full);
  Eigen::Index dim() const { return amps.size(); }
};

/// |+>^n.
QuantumState uniform_state(int n);
/// Computational basis state |index>.
QuantumState basis_state(int n, std::uint64_t index);
/// Ground state of H_X in the Hamming-weight basis (binomial amplitudes).
QuantumState symmetric_uniform_state(int n);
/// Embed a symmetric-basis state into the full 2^n basis.
QuantumState embed_symmetric(const QuantumState& sym, int n);

using Assembler = std::function<LinearOp(double)>;

Assembler tim_assembler(const SpinProblem& p, const Schedule& sched);
Assembler tim_assembler(const TimFamily& fam, const Schedule& sched);
/// Sombrero / reverse families: A*H_X + B*H_Z + C*H_init (C optional) and,
/// when lambda is present, the ARA combination
/// Gamma*lambda*A*H_X + B*H_Z + (1-lambda)*C*H_init.
Assembler reverse_assembler(const TimFamily& fam, const Schedule& sched,
                            double Gamma = 1.0);
Assembler symmetric_assembler(const SymmetricFamily& fam, const Schedule& sched);
Assembler glued_trees_assembler(const GluedTreesFamily& fam);

struct PropagateOptions {
  double ds = 0.01;          // initial step in s
  double tolerance = 1e-7;   // step-halving self-consistency, final-state norm
  int max_doublings = 12;
  bool store_states = true;
  std::vector<double> s_grid;  // default: 101 uniform points on [0,1]
  int order = 4;               // 4 = commutator-free Gauss pair, 2 = midpoint
  bool check_norm = true;
  double norm_tol = 1e-9;
  double exp_tol = 1e-14;      // truncation of the exponential series
};

struct Trajectory {
  std::vector<double> s;
  std::vector<Eigen::VectorXcd> states;  // empty unless store_states
  Eigen::VectorXcd final_state;
  double T = 0.0;
  long steps = 0;
  double self_consistency = 0.0;  // final-state difference of the last halving
  Basis basis = Basis::Full;
};

/// Schedule-driven Schroedinger propagation of psi' = -i T H(s) psi.
Trajectory propagate(const Assembler& H, const Schedule& sched,
                     const QuantumState& psi0, PropagateOptions opts = {});
Trajectory propagate(const Assembler& H, double T, const Eigen::VectorXcd& psi0,
                     PropagateOptions opts = {});

/// e^{-i theta H} psi via a chunked power series (exact up to tol).
void apply_exp_inplace(const LinearOp& H, double theta, Eigen::VectorXcd& psi,
                       double tol = 1e-14);

/// e^{-i T H} psi0 for time-independent H.
QuantumState quench_evolve(const LinearOp& H, double T, const QuantumState& psi0);

/// QAOA circuit prod_k e^{i beta_k H_X} e^{i gamma_k H_Z} |+>^n, layer 1
/// applied first. Mixer layers are exact single-qubit rotations; phase
/// layers are exact diagonal phases.
QuantumState qaoa_evolve(const SpinProblem& p, std::span<const double> gammas,
                         std::span<const double> betas);
QuantumState qaoa_evolve(const DiagonalCost& cost, std::span<const double> gammas,
                         std::span<const double> betas);

/// Exact bang-bang realization of a QAOA-derived breakpoint schedule,
/// computed through the generic exponential machinery (an independent route
/// from qaoa_evolve). Requires the schedule to carry its signed angles.
QuantumState evolve_breakpoint(const DiagonalCost& cost, const BreakpointSchedule& bs);

/// Lowest state of H_Z projected onto the single-excitation subspace of the
/// transverse field (degenerate first-order perturbation theory), embedded
/// in the full basis.
QuantumState excited_transverse_init(const SpinProblem& p);

/// Symmetric-subspace propagation (dimension n+1).
Trajectory evolve_symmetric(const SymmetricProblem& sp, const Schedule& sched,
                            const QuantumState& psi0, PropagateOptions opts = {});

struct ReverseParams {
  enum class Kind { Sombrero, DWave };
  Kind kind = Kind::Sombrero;
  double T = 10.0;
  double peak_height = 1.0;      // sombrero
  double s_target = 0.5;         // dwave
  double pause_fraction = 0.0;   // dwave
  bool reinitialize = true;
  std::vector<int> init_config;  // bits; empty = random
  PropagateOptions propagate;
};

struct CycleRecord {
  int cycle = 0;
  std::uint64_t measured = 0;
  double energy = 0.0;
  double best_energy = 0.0;
};

/// Iterated reverse annealing: per cycle build the reverse schedule around
/// the current classical configuration, propagate, Born-sample a basis
/// state, and keep best-so-far bookkeeping.
std::vector<CycleRecord> iterated_reverse_run(const SpinProblem& p,
                                              const ReverseParams& params,
                                              int cycles, std::uint64_t seed);

}  // namespace dqa

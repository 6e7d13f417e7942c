#include <benchmark/benchmark.h>

#include "dqa/evolve.hpp"
#include "dqa/instances.hpp"
#include "dqa/lanczos.hpp"
#include "dqa/spin_problem.hpp"

namespace {

void BM_TimApply(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const dqa::SpinProblem p = dqa::gen_sk(n, 11);
  const dqa::TimFamily fam(p);
  const dqa::LinearOp H = fam.at(0.5, 0.5);
  Eigen::VectorXcd psi = dqa::uniform_state(n).amps, out(psi.size());
  for (auto _ : state) {
    H.apply_into(psi, out);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * psi.size());
}
BENCHMARK(BM_TimApply)->Arg(10)->Arg(14)->Arg(16);

void BM_Propagate(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const dqa::SpinProblem p = dqa::gen_sk(n, 11);
  const dqa::Schedule sched = dqa::linear_forward(5.0);
  const dqa::Assembler H = dqa::tim_assembler(p, sched);
  dqa::PropagateOptions opts;
  opts.store_states = false;
  opts.s_grid = {0.0, 1.0};
  opts.max_doublings = 0;
  opts.ds = 0.02;
  for (auto _ : state) {
    const dqa::Trajectory t = dqa::propagate(H, sched, dqa::uniform_state(n), opts);
    benchmark::DoNotOptimize(t.final_state.data());
  }
}
BENCHMARK(BM_Propagate)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_SymmetricEvolve(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const dqa::SymmetricProblem sp = dqa::spike_problem(n);
  const dqa::Schedule sched = dqa::linear_forward(2.0);
  dqa::PropagateOptions opts;
  opts.store_states = false;
  opts.s_grid = {0.0, 1.0};
  opts.max_doublings = 0;
  const dqa::QuantumState psi0 = dqa::symmetric_uniform_state(n);
  for (auto _ : state) {
    const dqa::Trajectory t = dqa::evolve_symmetric(sp, sched, psi0, opts);
    benchmark::DoNotOptimize(t.final_state.data());
  }
}
BENCHMARK(BM_SymmetricEvolve)->Arg(64)->Arg(256)->Arg(1024)->Unit(benchmark::kMillisecond);

void BM_Lanczos(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const dqa::SpinProblem p = dqa::gen_sk(n, 11);
  const dqa::TimFamily fam(p);
  const dqa::LinearOp H = fam.at(0.5, 0.5);
  for (auto _ : state) {
    const dqa::LanczosResult r = dqa::lowest_eigs(H, 2);
    benchmark::DoNotOptimize(r.values.data());
  }
}
BENCHMARK(BM_Lanczos)->Arg(14)->Arg(16)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

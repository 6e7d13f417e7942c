#include "dqa/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <mutex>
#include <set>
#include <thread>

#include "dqa/baselines.hpp"
#include "dqa/evolve.hpp"
#include "dqa/instances.hpp"
#include "dqa/metrics.hpp"
#include "dqa/schedule_opt.hpp"
#include "dqa/spectral.hpp"

namespace dqa {

namespace {

const std::set<std::string> kKinds = {"anneal",   "reverse",  "walk",
                                      "gluedtrees", "qaoa",    "optimize",
                                      "baseline", "spectrum", "instance-gen"};

const std::set<std::string> kGenerators = {"max2sat", "sk", "rem", "maxcut3reg",
                                           "ferro_chain"};

void warn_unknown(const Json& obj, const std::set<std::string>& known,
                  const std::string& where, std::vector<ValidationIssue>& issues) {
  for (const auto& [key, value] : obj.items())
    if (!known.contains(key))
      issues.push_back({false, where + key, "unknown key (ignored)"});
}

void check_instance(const Json& j, const std::string& kind,
                    std::vector<ValidationIssue>& issues) {
  if (!j.contains("instance") || !j["instance"].is_object()) {
    issues.push_back({true, "instance", "required object field is missing"});
    return;
  }
  const Json& inst = j["instance"];
  warn_unknown(inst, {"file", "generator", "n", "m", "count"}, "instance.", issues);
  if (inst.contains("file")) {
    if (!inst["file"].is_string())
      issues.push_back({true, "instance.file", "must be a string path"});
    return;
  }
  if (!inst.contains("generator") || !inst["generator"].is_string()) {
    issues.push_back({true, "instance.generator", "need 'file' or 'generator'"});
    return;
  }
  const std::string gen = inst["generator"].get<std::string>();
  if (!kGenerators.contains(gen)) {
    issues.push_back({true, "instance.generator", "unknown generator '" + gen + "'"});
    return;
  }
  if (kind == "walk" && gen != "sk" && gen != "rem")
    issues.push_back({true, "instance.generator", "walk expects 'sk' or 'rem'"});
  if (!inst.contains("n") || !inst["n"].is_number_integer())
    issues.push_back({true, "instance.n", "required integer field is missing"});
  if (gen == "max2sat" && (!inst.contains("m") || !inst["m"].is_number_integer()))
    issues.push_back({true, "instance.m", "max2sat requires a clause count"});
}

void check_number_list(const Json& j, const std::string& field, bool required,
                       std::vector<ValidationIssue>& issues) {
  if (!j.contains(field)) {
    if (required) issues.push_back({true, field, "required list field is missing"});
    return;
  }
  if (!j[field].is_array() || j[field].empty()) {
    issues.push_back({true, field, "must be a nonempty array"});
    return;
  }
  for (const auto& v : j[field])
    if (!v.is_number()) {
      issues.push_back({true, field, "entries must be numeric"});
      return;
    }
}

}  // namespace

std::vector<ValidationIssue> validate_config(const Json& j) {
  std::vector<ValidationIssue> issues;
  if (!j.is_object()) {
    issues.push_back({true, "", "config root must be an object"});
    return issues;
  }
  if (!j.contains("kind") || !j["kind"].is_string()) {
    issues.push_back({true, "kind", "required string field is missing"});
    return issues;
  }
  const std::string kind = j["kind"].get<std::string>();
  if (!kKinds.contains(kind)) {
    issues.push_back({true, "kind", "unknown kind '" + kind + "'"});
    return issues;
  }
  if (j.contains("seed") && !j["seed"].is_number_unsigned())
    issues.push_back({true, "seed", "must be an unsigned integer"});

  std::set<std::string> known = {"kind", "seed", "label", "threads", "out"};

  if (kind == "anneal") {
    known.insert({"instance", "T", "schedule", "observables", "ds", "order", "tolerance"});
    check_instance(j, kind, issues);
    check_number_list(j, "T", true, issues);
    if (j.contains("schedule")) {
      if (!j["schedule"].is_object()) {
        issues.push_back({true, "schedule", "must be an object"});
      } else {
        warn_unknown(j["schedule"], {"family", "coeffs"}, "schedule.", issues);
        if (j["schedule"].contains("family")) {
          const auto fam = j["schedule"]["family"];
          if (!fam.is_string() ||
              (fam.get<std::string>() != "linear" && fam.get<std::string>() != "fourier"))
            issues.push_back({true, "schedule.family", "must be 'linear' or 'fourier'"});
        }
      }
    }
  } else if (kind == "reverse") {
    known.insert({"instance", "protocol", "cycles"});
    check_instance(j, kind, issues);
    if (!j.contains("protocol") || !j["protocol"].is_object()) {
      issues.push_back({true, "protocol", "required object field is missing"});
    } else {
      const Json& pr = j["protocol"];
      warn_unknown(pr, {"type", "T", "peak_height", "s_target", "pause_fraction",
                        "reinitialize"},
                   "protocol.", issues);
      if (!pr.contains("type") || !pr["type"].is_string() ||
          (pr["type"].get<std::string>() != "sombrero" &&
           pr["type"].get<std::string>() != "dwave"))
        issues.push_back({true, "protocol.type", "must be 'sombrero' or 'dwave'"});
      if (!pr.contains("T") || !pr["T"].is_number())
        issues.push_back({true, "protocol.T", "required numeric field is missing"});
    }
  } else if (kind == "walk") {
    known.insert({"instance", "gamma", "t_window", "samples"});
    check_instance(j, kind, issues);
    if (j.contains("t_window") &&
        (!j["t_window"].is_array() || j["t_window"].size() != 2))
      issues.push_back({true, "t_window", "must be [t_lo, t_hi]"});
  } else if (kind == "gluedtrees") {
    known.insert({"depth", "T", "steps", "walkers"});
    check_number_list(j, "depth", true, issues);
    if (!j.contains("T") || !j["T"].is_number())
      issues.push_back({true, "T", "required numeric field is missing"});
  } else if (kind == "qaoa") {
    known.insert({"instance", "layers", "restarts"});
    check_instance(j, kind, issues);
    if (!j.contains("layers") || !j["layers"].is_number_integer())
      issues.push_back({true, "layers", "required integer field is missing"});
  } else if (kind == "optimize") {
    known.insert({"instance", "T", "segments", "iters", "step"});
    check_instance(j, kind, issues);
    if (!j.contains("T") || !j["T"].is_number())
      issues.push_back({true, "T", "required numeric field is missing"});
    if (!j.contains("segments") || !j["segments"].is_number_integer())
      issues.push_back({true, "segments", "required integer field is missing"});
  } else if (kind == "baseline") {
    known.insert({"instance", "method", "sweeps", "repetitions", "beta_initial",
                  "beta_final", "beta"});
    check_instance(j, kind, issues);
    if (!j.contains("method") || !j["method"].is_string() ||
        (j["method"].get<std::string>() != "sa" &&
         j["method"].get<std::string>() != "svmc"))
      issues.push_back({true, "method", "must be 'sa' or 'svmc'"});
  } else if (kind == "spectrum") {
    known.insert({"instance", "d", "grid_points"});
    check_instance(j, kind, issues);
  } else if (kind == "instance-gen") {
    known.insert({"instance", "count"});
    check_instance(j, kind, issues);
  }
  warn_unknown(j, known, "", issues);
  return issues;
}

bool has_errors(const std::vector<ValidationIssue>& issues) {
  return std::any_of(issues.begin(), issues.end(),
                     [](const ValidationIssue& i) { return i.error; });
}

int resolve_threads(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("DQALAB_THREADS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

namespace {

struct NamedProblem {
  SpinProblem problem;
  DiagonalCost cost;
  std::string label;
  std::uint64_t seed = 0;
};

std::vector<NamedProblem> materialize_instances(const Json& j, std::uint64_t base_seed) {
  const Json& inst = j["instance"];
  std::vector<NamedProblem> out;
  if (inst.contains("file")) {
    SpinProblem p = load_spin_problem(inst["file"].get<std::string>());
    std::string label = p.name.empty() ? "file" : p.name;
    out.push_back({p, DiagonalCost::from_problem(p), std::move(label), base_seed});
    return out;
  }
  const std::string gen = inst["generator"].get<std::string>();
  const int n = inst["n"].get<int>();
  const int count = inst.value("count", 1);
  require(count >= 1, "instance.count: must be >= 1");
  for (int i = 0; i < count; ++i) {
    const std::uint64_t s = base_seed + static_cast<std::uint64_t>(i);
    NamedProblem np;
    np.seed = s;
    if (gen == "max2sat") {
      np.problem = gen_max2sat(n, inst["m"].get<int>(), s).problem;
    } else if (gen == "sk") {
      np.problem = gen_sk(n, s);
    } else if (gen == "rem") {
      np.problem = SpinProblem::make(n);
      np.problem.name = "rem";
      np.cost = gen_rem(n, s);
      np.label = "rem#" + std::to_string(i);
      out.push_back(std::move(np));
      continue;
    } else if (gen == "maxcut3reg") {
      np.problem = gen_maxcut_3reg(n, s);
    } else if (gen == "ferro_chain") {
      np.problem = SpinProblem::make(n);
      np.problem.name = "ferro_chain";
      for (int q = 0; q + 1 < n; ++q) np.problem.add_coupling(q, q + 1, 1.0);
    }
    np.cost = DiagonalCost::from_problem(np.problem);
    np.label = np.problem.name + "#" + std::to_string(i);
    out.push_back(std::move(np));
  }
  return out;
}

using Job = std::function<std::vector<ResultRow>()>;

std::vector<ResultRow> run_pool(const std::vector<Job>& jobs, int threads) {
  std::vector<std::vector<ResultRow>> slots(jobs.size());
  std::exception_ptr failure;
  std::mutex fail_mutex;
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= jobs.size()) return;
      try {
        slots[i] = jobs[i]();
      } catch (...) {
        std::lock_guard<std::mutex> lock(fail_mutex);
        if (!failure) failure = std::current_exception();
        return;
      }
    }
  };
  const int nt = std::max(1, std::min<int>(threads, static_cast<int>(jobs.size())));
  if (nt == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < nt; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);
  std::vector<ResultRow> rows;
  for (auto& s : slots)
    for (auto& r : s) rows.push_back(std::move(r));
  return rows;
}

void write_summary(const std::filesystem::path& path,
                   const std::vector<ResultRow>& rows) {
  std::map<std::string, std::vector<double>> by_metric;
  for (const auto& r : rows) by_metric[r.metric].push_back(r.value);
  std::ofstream out(path);
  if (!out) throw ResourceError("cannot write " + path.string());
  out << "metric count min median max\n";
  for (auto& [metric, vals] : by_metric) {
    std::sort(vals.begin(), vals.end());
    const std::size_t c = vals.size();
    const double median = c % 2 ? vals[c / 2] : 0.5 * (vals[c / 2 - 1] + vals[c / 2]);
    out << metric << ' ' << c << ' ' << format_double(vals.front()) << ' '
        << format_double(median) << ' ' << format_double(vals.back()) << '\n';
  }
}

Schedule anneal_schedule(const Json& j, double T) {
  if (j.contains("schedule") && j["schedule"].value("family", "linear") == "fourier") {
    std::vector<double> coeffs;
    if (j["schedule"].contains("coeffs"))
      for (const auto& c : j["schedule"]["coeffs"]) coeffs.push_back(c.get<double>());
    return fourier_schedule(coeffs, T);
  }
  return linear_forward(T);
}

std::vector<Job> build_jobs(const Json& j, const std::string& kind,
                            std::uint64_t seed, const std::filesystem::path& out_dir) {
  std::vector<Job> jobs;

  if (kind == "anneal") {
    auto instances = std::make_shared<std::vector<NamedProblem>>(
        materialize_instances(j, seed));
    std::vector<std::string> obs = {"success_probability", "residual_energy", "tts"};
    if (j.contains("observables")) {
      obs.clear();
      for (const auto& o : j["observables"]) obs.push_back(o.get<std::string>());
    }
    const double ds = j.value("ds", 0.01);
    const double tol = j.value("tolerance", 1e-7);
    const int order = j.value("order", 4);
    for (std::size_t i = 0; i < instances->size(); ++i)
      for (const auto& Tj : j["T"]) {
        const double T = Tj.get<double>();
        jobs.push_back([=]() {
          const NamedProblem& np = (*instances)[i];
          const Schedule sched = anneal_schedule(j, T);
          PropagateOptions po;
          po.ds = ds;
          po.tolerance = tol;
          po.order = order;
          po.store_states = false;
          po.s_grid = {0.0, 1.0};
          const Trajectory traj = propagate(tim_assembler(np.problem, sched), sched,
                                            uniform_state(np.problem.n), po);
          const double p = success_probability(traj.final_state, np.cost);
          std::vector<ResultRow> rows;
          for (const auto& metric : obs) {
            double v = 0.0;
            if (metric == "success_probability")
              v = p;
            else if (metric == "residual_energy")
              v = residual_energy(traj.final_state, np.cost);
            else if (metric == "tts")
              v = tts(T, p);
            else
              throw ContractViolation("unknown observable '" + metric + "'");
            rows.push_back({np.label, np.seed, T, metric, v});
          }
          return rows;
        });
      }
  } else if (kind == "reverse") {
    auto instances = std::make_shared<std::vector<NamedProblem>>(
        materialize_instances(j, seed));
    const Json& pr = j["protocol"];
    ReverseParams params;
    params.kind = pr["type"].get<std::string>() == "sombrero"
                      ? ReverseParams::Kind::Sombrero
                      : ReverseParams::Kind::DWave;
    params.T = pr["T"].get<double>();
    params.peak_height = pr.value("peak_height", 1.0);
    params.s_target = pr.value("s_target", 0.5);
    params.pause_fraction = pr.value("pause_fraction", 0.0);
    params.reinitialize = pr.value("reinitialize", true);
    const int cycles = j.value("cycles", 5);
    for (std::size_t i = 0; i < instances->size(); ++i)
      jobs.push_back([=]() {
        const NamedProblem& np = (*instances)[i];
        const auto recs = iterated_reverse_run(np.problem, params, cycles, np.seed);
        std::vector<ResultRow> rows;
        for (const auto& rec : recs)
          rows.push_back({np.label, np.seed, params.T,
                          "energy_cycle_" + std::to_string(rec.cycle), rec.energy});
        rows.push_back({np.label, np.seed, params.T, "best_energy",
                        recs.back().best_energy});
        return rows;
      });
  } else if (kind == "walk") {
    auto instances = std::make_shared<std::vector<NamedProblem>>(
        materialize_instances(j, seed));
    double t_lo = 100.0, t_hi = 200.0;
    if (j.contains("t_window")) {
      t_lo = j["t_window"][0].get<double>();
      t_hi = j["t_window"][1].get<double>();
    }
    const int samples = j.value("samples", 32);
    const bool has_gamma = j.contains("gamma");
    const double gamma_cfg = j.value("gamma", 0.0);
    for (std::size_t i = 0; i < instances->size(); ++i)
      jobs.push_back([=]() {
        const NamedProblem& np = (*instances)[i];
        const double gamma = has_gamma ? gamma_cfg : walk_gamma_heuristic(np.cost);
        const LinearOp H = hypercube_walk_hamiltonian(np.cost, gamma);
        const double p = late_time_success(H, uniform_state(np.cost.n),
                                           {t_lo, t_hi}, samples, np.cost);
        std::vector<ResultRow> rows;
        rows.push_back({np.label, np.seed, t_hi, "p_late", p});
        rows.push_back({np.label, np.seed, t_hi, "gamma", gamma});
        return rows;
      });
  } else if (kind == "gluedtrees") {
    const double T = j["T"].get<double>();
    const int walkers = j.value("walkers", 2000);
    const long steps = j.value("steps", static_cast<long>(std::ceil(T)));
    for (const auto& dj : j["depth"]) {
      const int d = dj.get<int>();
      jobs.push_back([=]() {
        const GluedTreesGraph g = gen_glued_trees(d, seed + static_cast<std::uint64_t>(d));
        GluedTreesFamily fam(g.adjacency, g.entrance, g.exit);
        PropagateOptions po;
        po.store_states = false;
        po.s_grid = {0.0, 1.0};
        Eigen::VectorXcd start = Eigen::VectorXcd::Zero(g.vertex_count());
        start(g.entrance) = 1.0;
        const Trajectory traj = propagate(glued_trees_assembler(fam), T, start, po);
        const double pq = std::norm(traj.final_state(g.exit));
        const double pc = classical_walk_glued_trees(
            g, steps, walkers, seed + static_cast<std::uint64_t>(d));
        const std::string label = "gluedtrees_d" + std::to_string(d);
        std::vector<ResultRow> rows;
        rows.push_back({label, seed, T, "p_exit_quantum", pq});
        rows.push_back({label, seed, T, "classical_hit_fraction", pc});
        return rows;
      });
    }
  } else if (kind == "qaoa") {
    auto instances = std::make_shared<std::vector<NamedProblem>>(
        materialize_instances(j, seed));
    const int layers = j["layers"].get<int>();
    const int restarts = j.value("restarts", 8);
    for (std::size_t i = 0; i < instances->size(); ++i)
      jobs.push_back([=]() {
        const NamedProblem& np = (*instances)[i];
        const QaoaOptimum opt = optimize_qaoa_angles(np.problem, layers, restarts, np.seed);
        std::vector<ResultRow> rows;
        rows.push_back({np.label, np.seed, 0.0, "C_star", opt.value});
        for (int k = 0; k < layers; ++k) {
          rows.push_back({np.label, np.seed, 0.0, "gamma_" + std::to_string(k),
                          opt.gammas[static_cast<std::size_t>(k)]});
          rows.push_back({np.label, np.seed, 0.0, "beta_" + std::to_string(k),
                          opt.betas[static_cast<std::size_t>(k)]});
        }
        return rows;
      });
  } else if (kind == "optimize") {
    auto instances = std::make_shared<std::vector<NamedProblem>>(
        materialize_instances(j, seed));
    const double T = j["T"].get<double>();
    const int m = j["segments"].get<int>();
    const int iters = j.value("iters", 200);
    const double step = j.value("step", 0.1);
    for (std::size_t i = 0; i < instances->size(); ++i)
      jobs.push_back([=]() {
        const NamedProblem& np = (*instances)[i];
        ControlVector init;
        init.u.resize(static_cast<std::size_t>(m));
        for (int k = 0; k < m; ++k)
          init.u[static_cast<std::size_t>(k)] = 1.0 - (k + 0.5) / m;
        const GdResult gd = optimize_schedule_gd(np.problem, T, m, init, iters, step);
        const BangReport br = bang_fraction(gd.control, 0.05);
        std::vector<std::vector<double>> cols(2);
        for (int k = 0; k < m; ++k) {
          cols[0].push_back((k + 0.5) * T / m);
          cols[1].push_back(gd.control.u[static_cast<std::size_t>(k)]);
        }
        write_columns_csv(out_dir / ("control_" + np.label + ".csv"), {"t", "u"}, cols);
        std::vector<ResultRow> rows;
        rows.push_back({np.label, np.seed, T, "objective", gd.trace.back()});
        rows.push_back({np.label, np.seed, T, "start_bang", br.start_bang ? 1.0 : 0.0});
        rows.push_back({np.label, np.seed, T, "end_bang", br.end_bang ? 1.0 : 0.0});
        rows.push_back({np.label, np.seed, T, "interior_smoothness",
                        br.interior_smoothness});
        return rows;
      });
  } else if (kind == "baseline") {
    auto instances = std::make_shared<std::vector<NamedProblem>>(
        materialize_instances(j, seed));
    const std::string method = j["method"].get<std::string>();
    for (std::size_t i = 0; i < instances->size(); ++i)
      jobs.push_back([=]() {
        const NamedProblem& np = (*instances)[i];
        std::vector<ResultRow> rows;
        if (method == "sa") {
          AnnealerConfig cfg;
          cfg.sweeps = j.value("sweeps", 1000L);
          cfg.repetitions = j.value("repetitions", 20);
          cfg.beta_initial = j.value("beta_initial", 0.1);
          cfg.beta_final = j.value("beta_final", 5.0);
          cfg.seed = np.seed;
          const SaResult r = simulated_annealing(np.problem, cfg);
          rows.push_back({np.label, np.seed, 0.0, "sa_best_energy", r.best_energy});
          rows.push_back({np.label, np.seed, 0.0, "sa_success_fraction",
                          r.success_fraction});
        } else {
          const SvmcResult r = svmc(np.problem, linear_forward(1.0),
                                    j.value("sweeps", 1000L), np.seed,
                                    j.value("beta", 3.0));
          rows.push_back({np.label, np.seed, 0.0, "svmc_energy", r.energy});
          rows.push_back({np.label, np.seed, 0.0, "svmc_acceptance",
                          static_cast<double>(r.accepted) / r.proposed});
        }
        return rows;
      });
  } else if (kind == "spectrum") {
    auto instances = std::make_shared<std::vector<NamedProblem>>(
        materialize_instances(j, seed));
    const int d = j.value("d", 1);
    const int points = j.value("grid_points", 101);
    for (std::size_t i = 0; i < instances->size(); ++i)
      jobs.push_back([=]() {
        const NamedProblem& np = (*instances)[i];
        const Schedule sched = linear_forward(1.0);
        TimFamily fam(np.problem);
        Assembler H = tim_assembler(fam, sched);
        std::vector<double> grid(static_cast<std::size_t>(points));
        for (int k = 0; k < points; ++k) grid[static_cast<std::size_t>(k)] = k / (points - 1.0);
        const GapProfile prof = gap_profile(H, grid, d);
        write_columns_csv(out_dir / ("gap_" + np.label + ".csv"),
                          {"s", "Delta", "band_width"},
                          {prof.s, prof.Delta, prof.band_width});
        const GapMinimum gm = global_minimum(min_gap(H, d, grid));
        std::vector<ResultRow> rows;
        rows.push_back({np.label, np.seed, 0.0, "min_gap", gm.gap});
        rows.push_back({np.label, np.seed, 0.0, "s_star", gm.s});
        return rows;
      });
  } else if (kind == "instance-gen") {
    auto instances = std::make_shared<std::vector<NamedProblem>>(
        materialize_instances(j, seed));
    for (std::size_t i = 0; i < instances->size(); ++i)
      jobs.push_back([=]() {
        const NamedProblem& np = (*instances)[i];
        save_spin_problem(np.problem, out_dir / (np.label + ".json"));
        std::vector<ResultRow> rows;
        rows.push_back({np.label, np.seed, 0.0, "n",
                        static_cast<double>(np.problem.n)});
        return rows;
      });
  }
  return jobs;
}

}  // namespace

int run_experiment(const Json& config, const RunOptions& opts) {
  const auto issues = validate_config(config);
  for (const auto& i : issues)
    std::cerr << (i.error ? "error" : "warning") << ": " << i.field << ": "
              << i.message << '\n';
  if (has_errors(issues)) return 2;

  const std::string kind = config["kind"].get<std::string>();
  const std::uint64_t seed =
      opts.seed_override ? *opts.seed_override : config.value("seed", 1ULL);

  std::error_code ec;
  std::filesystem::create_directories(opts.out_dir, ec);
  if (!std::filesystem::is_directory(opts.out_dir)) {
    std::cerr << "error: cannot create output directory " << opts.out_dir << '\n';
    return 2;
  }

  try {
    const std::vector<Job> jobs = build_jobs(config, kind, seed, opts.out_dir);
    const std::vector<ResultRow> rows =
        run_pool(jobs, resolve_threads(opts.threads));
    write_results_csv(opts.out_dir / "results.csv", rows);
    write_summary(opts.out_dir / "summary.txt", rows);
    Json manifest;
    manifest["artifact"] = "dqalab";
    manifest["version"] = kArtifactVersion;
    manifest["kind"] = kind;
    manifest["seed"] = seed;
    manifest["config"] = config;
    std::ofstream mf(opts.out_dir / "manifest.json");
    mf << manifest.dump(2) << '\n';
  } catch (const ContractViolation& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "numeric failure: " << e.what() << '\n';
    return 3;
  }
  return 0;
}

int run_experiment_file(const std::filesystem::path& config_path, RunOptions opts) {
  std::ifstream in(config_path);
  if (!in) {
    std::cerr << "error: cannot open " << config_path << '\n';
    return 2;
  }
  Json config;
  try {
    config = Json::parse(in);
  } catch (const Json::parse_error& e) {
    std::cerr << "error: " << config_path.string() << ": " << e.what() << '\n';
    return 2;
  }
  return run_experiment(config, opts);
}

}  // namespace dqa

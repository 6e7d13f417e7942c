#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "dqa/experiment.hpp"

namespace {

struct CommonFlags {
  std::string config;
  std::string out = "results";
  std::uint64_t seed = 0;
  bool seed_set = false;
  int threads = 0;
  bool validate_only = false;
};

void add_common(CLI::App* sub, CommonFlags& f) {
  sub->add_option("--config", f.config, "experiment config file (JSON)")
      ->required()
      ->check(CLI::ExistingFile);
  sub->add_option("--out", f.out, "output directory");
  sub->add_option("--seed", f.seed, "override the config seed")
      ->each([&f](const std::string&) { f.seed_set = true; });
  sub->add_option("--threads", f.threads,
                  "worker count (default: DQALAB_THREADS, then all cores)");
  sub->add_flag("--validate-only", f.validate_only, "schema check, no execution");
}

int dispatch(const std::string& kind, const CommonFlags& f) {
  std::ifstream in(f.config);
  if (!in) {
    std::cerr << "error: cannot open " << f.config << '\n';
    return 2;
  }
  dqa::Json config;
  try {
    config = dqa::Json::parse(in);
  } catch (const dqa::Json::parse_error& e) {
    std::cerr << "error: " << f.config << ": " << e.what() << '\n';
    return 2;
  }
  if (!config.is_object()) {
    std::cerr << "error: " << f.config << ": config root must be an object\n";
    return 2;
  }
  if (!config.contains("kind"))
    config["kind"] = kind;
  else if (config["kind"] != kind) {
    std::cerr << "error: config kind '" << config["kind"]
              << "' does not match subcommand '" << kind << "'\n";
    return 2;
  }

  if (f.validate_only) {
    const auto issues = dqa::validate_config(config);
    for (const auto& i : issues)
      std::cout << (i.error ? "error" : "warning") << ": " << i.field << ": "
                << i.message << '\n';
    return dqa::has_errors(issues) ? 2 : 0;
  }

  dqa::RunOptions opts;
  opts.out_dir = f.out;
  if (f.seed_set) opts.seed_override = f.seed;
  opts.threads = f.threads;
  return dqa::run_experiment(config, opts);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dqalab: exact small-scale quantum annealing experiments"};
  app.require_subcommand(1);

  const char* kinds[] = {"anneal",   "reverse",  "walk",
                         "gluedtrees", "qaoa",    "optimize",
                         "baseline", "spectrum", "instance-gen"};
  CommonFlags flags[9];
  std::string chosen;
  for (int i = 0; i < 9; ++i) {
    CLI::App* sub = app.add_subcommand(kinds[i], std::string("run a '") + kinds[i] +
                                                     "' experiment");
    add_common(sub, flags[i]);
    sub->callback([&chosen, i, &kinds] { chosen = kinds[i]; });
  }

  CLI11_PARSE(app, argc, argv);

  for (int i = 0; i < 9; ++i)
    if (chosen == kinds[i]) return dispatch(chosen, flags[i]);
  std::cerr << "error: no subcommand selected\n";
  return 2;
}

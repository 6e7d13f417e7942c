#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "dqa/serialize.hpp"

namespace dqa {

inline constexpr const char* kArtifactVersion = "0.1.0";

struct ValidationIssue {
  bool error = false;  // false: warning
  std::string field;
  std::string message;
};

/// Schema check without execution. Parse errors and missing/ill-typed
/// required fields are errors; unknown keys are warnings.
std::vector<ValidationIssue> validate_config(const Json& config);
bool has_errors(const std::vector<ValidationIssue>& issues);

struct RunOptions {
  std::filesystem::path out_dir = "results";
  std::optional<std::uint64_t> seed_override;
  int threads = 0;  // 0: DQALAB_THREADS, then hardware count
};

/// Executes the configured experiment. Writes results.csv, summary.txt and
/// manifest.json into out_dir. Returns 0 on success, 2 on schema violation,
/// 3 on numeric failure.
int run_experiment(const Json& config, const RunOptions& opts);
int run_experiment_file(const std::filesystem::path& config_path, RunOptions opts);

/// Resolved worker count: explicit > DQALAB_THREADS > hardware concurrency.
int resolve_threads(int requested);

}  // namespace dqa

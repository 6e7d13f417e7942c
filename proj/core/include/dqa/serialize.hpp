#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "dqa/instances.hpp"
#include "dqa/spin_problem.hpp"

namespace dqa {

using Json = nlohmann::json;

/// Schema: { "n": int, "h": [..n reals..], "J": [[i, j, value], ...],
///           "name": optional string }.
Json to_json(const SpinProblem& p);
SpinProblem spin_problem_from_json(const Json& j);

SpinProblem load_spin_problem(const std::filesystem::path& path);
void save_spin_problem(const SpinProblem& p, const std::filesystem::path& path);

/// Edge-list form: { "d": int, "entrance": int, "exit": int,
///                   "edges": [[u, v], ...] }.
Json to_json(const GluedTreesGraph& g);
GluedTreesGraph glued_trees_from_json(const Json& j);

/// Shortest representation that round-trips exactly (std::to_chars).
std::string format_double(double v);

struct ResultRow {
  std::string instance;
  std::uint64_t seed = 0;
  double T = 0.0;
  std::string metric;
  double value = 0.0;
};

/// Long-format CSV with header "instance,seed,T,metric,value".
void write_results_csv(const std::filesystem::path& path,
                       const std::vector<ResultRow>& rows);

/// Generic CSV of numeric columns.
void write_columns_csv(const std::filesystem::path& path,
                       const std::vector<std::string>& header,
                       const std::vector<std::vector<double>>& columns);

}  // namespace dqa

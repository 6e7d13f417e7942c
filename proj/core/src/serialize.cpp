#include "dqa/serialize.hpp"

#include <charconv>
#include <fstream>

namespace dqa {

Json to_json(const SpinProblem& p) {
  Json j;
  j["n"] = p.n;
  j["h"] = Json::array();
  for (int i = 0; i < p.n; ++i) j["h"].push_back(p.h(i));
  j["J"] = Json::array();
  for (const auto& [a, b, v] : p.couplings) j["J"].push_back(Json::array({a, b, v}));
  if (!p.name.empty()) j["name"] = p.name;
  return j;
}

SpinProblem spin_problem_from_json(const Json& j) {
  require(j.is_object(), "SpinProblem: expected an object");
  require(j.contains("n") && j["n"].is_number_integer(), "SpinProblem: missing integer field 'n'");
  const int n = j["n"].get<int>();
  require(n >= 1 && n <= 62, "SpinProblem: n out of range");
  SpinProblem p = SpinProblem::make(n);
  require(j.contains("h") && j["h"].is_array(), "SpinProblem: missing array field 'h'");
  require(static_cast<int>(j["h"].size()) == n, "SpinProblem: 'h' length must equal n");
  for (int i = 0; i < n; ++i) {
    require(j["h"][static_cast<std::size_t>(i)].is_number(), "SpinProblem: 'h' entries must be numeric");
    p.h(i) = j["h"][static_cast<std::size_t>(i)].get<double>();
  }
  require(j.contains("J") && j["J"].is_array(), "SpinProblem: missing array field 'J'");
  for (const auto& e : j["J"]) {
    require(e.is_array() && e.size() == 3, "SpinProblem: 'J' entries must be [i, j, value]");
    require(e[0].is_number_integer() && e[1].is_number_integer() && e[2].is_number(),
            "SpinProblem: 'J' entry types must be [int, int, real]");
    p.add_coupling(e[0].get<int>(), e[1].get<int>(), e[2].get<double>());
  }
  if (j.contains("name")) {
    require(j["name"].is_string(), "SpinProblem: 'name' must be a string");
    p.name = j["name"].get<std::string>();
  }
  p.validate();
  return p;
}

SpinProblem load_spin_problem(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ResourceError("cannot open " + path.string());
  Json j;
  try {
    in >> j;
  } catch (const Json::parse_error& e) {
    throw ContractViolation(path.string() + ": " + e.what());
  }
  return spin_problem_from_json(j);
}

void save_spin_problem(const SpinProblem& p, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw ResourceError("cannot write " + path.string());
  out << to_json(p).dump(2) << '\n';
}

Json to_json(const GluedTreesGraph& g) {
  Json j;
  j["d"] = g.d;
  j["entrance"] = g.entrance;
  j["exit"] = g.exit;
  j["edges"] = Json::array();
  for (int v = 0; v < g.vertex_count(); ++v)
    for (int u : g.adjacency[static_cast<std::size_t>(v)])
      if (v < u) j["edges"].push_back(Json::array({v, u}));
  return j;
}

GluedTreesGraph glued_trees_from_json(const Json& j) {
  require(j.is_object() && j.contains("d") && j.contains("entrance") &&
              j.contains("exit") && j.contains("edges"),
          "GluedTreesGraph: missing fields");
  GluedTreesGraph g;
  g.d = j["d"].get<int>();
  g.entrance = j["entrance"].get<int>();
  g.exit = j["exit"].get<int>();
  const int count = 2 * ((1 << (g.d + 1)) - 1);
  g.adjacency.assign(static_cast<std::size_t>(count), {});
  for (const auto& e : j["edges"]) {
    require(e.is_array() && e.size() == 2, "GluedTreesGraph: edges must be pairs");
    const int a = e[0].get<int>(), b = e[1].get<int>();
    require(a >= 0 && a < count && b >= 0 && b < count && a != b,
            "GluedTreesGraph: edge out of range");
    g.adjacency[static_cast<std::size_t>(a)].push_back(b);
    g.adjacency[static_cast<std::size_t>(b)].push_back(a);
  }
  g.validate();
  return g;
}

std::string format_double(double v) {
  char buf[40];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

void write_results_csv(const std::filesystem::path& path,
                       const std::vector<ResultRow>& rows) {
  std::ofstream out(path);
  if (!out) throw ResourceError("cannot write " + path.string());
  out << "instance,seed,T,metric,value\n";
  for (const auto& r : rows)
    out << r.instance << ',' << r.seed << ',' << format_double(r.T) << ','
        << r.metric << ',' << format_double(r.value) << '\n';
}

void write_columns_csv(const std::filesystem::path& path,
                       const std::vector<std::string>& header,
                       const std::vector<std::vector<double>>& columns) {
  require(!columns.empty() && header.size() == columns.size(),
          "write_columns_csv: header/column mismatch");
  const std::size_t rows = columns.front().size();
  for (const auto& c : columns)
    require(c.size() == rows, "write_columns_csv: ragged columns");
  std::ofstream out(path);
  if (!out) throw ResourceError("cannot write " + path.string());
  for (std::size_t i = 0; i < header.size(); ++i)
    out << (i ? "," : "") << header[i];
  out << '\n';
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < columns.size(); ++c)
      out << (c ? "," : "") << format_double(columns[c][r]);
    out << '\n';
  }
}

}  // namespace dqa

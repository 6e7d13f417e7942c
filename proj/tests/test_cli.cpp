#include <doctest.h>

#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <string>

#include "dqa/serialize.hpp"
#include "dqa/spin_problem.hpp"

using namespace dqa;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    static int counter = 0;
    path = fs::temp_directory_path() /
           ("dqalab_cli_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

struct RunOutput {
  int exit_code = -1;
  std::string output;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  return std::string((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
}

RunOutput run_cli(const std::string& args, const fs::path& log) {
  const std::string cmd =
      std::string(DQALAB_BIN) + " " + args + " > " + log.string() + " 2>&1";
  const int rc = std::system(cmd.c_str());
  RunOutput out;
  out.exit_code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  out.output = slurp(log);
  return out;
}

fs::path write_config(const fs::path& dir, const std::string& name, const Json& j) {
  const fs::path p = dir / name;
  std::ofstream out(p);
  out << j.dump(2) << '\n';
  return p;
}

Json anneal_config(const fs::path& instance_file) {
  Json j;
  j["kind"] = "anneal";
  j["seed"] = 7;
  j["instance"] = {{"file", instance_file.string()}};
  j["T"] = {1.0, 10.0, 100.0};
  return j;
}

fs::path write_single_qubit(const fs::path& dir) {
  SpinProblem p = SpinProblem::make(1);
  p.h(0) = 1.0;
  p.name = "onequbit";
  const fs::path f = dir / "onequbit.json";
  save_spin_problem(p, f);
  return f;
}

int count_lines(const std::string& text) {
  int n = 0;
  for (char c : text)
    if (c == '\n') ++n;
  return n;
}

}  // namespace

TEST_CASE("anneal run produces one row per metric per T") {
  TempDir tmp;
  const fs::path inst = write_single_qubit(tmp.path);
  const fs::path cfg = write_config(tmp.path, "cfg.json", anneal_config(inst));
  const fs::path out = tmp.path / "out";

  const RunOutput r = run_cli("anneal --config " + cfg.string() + " --out " +
                                  out.string(),
                              tmp.path / "log.txt");
  CHECK(r.exit_code == 0);

  const std::string csv = slurp(out / "results.csv");
  CHECK(count_lines(csv) == 1 + 9);  // header + 3 metrics x 3 T values
  CHECK(csv.rfind("instance,seed,T,metric,value", 0) == 0);
  for (const char* metric : {"success_probability", "residual_energy", "tts"})
    for (const char* T : {",1,", ",10,", ",100,"})
      CHECK(csv.find(std::string(T) + metric) != std::string::npos);

  CHECK(fs::exists(out / "summary.txt"));
  const Json manifest = Json::parse(slurp(out / "manifest.json"));
  CHECK(manifest.at("kind") == "anneal");
  CHECK(manifest.at("config").at("T").size() == 3);
  CHECK(manifest.contains("version"));
}

TEST_CASE("identical configs give byte-identical results") {
  TempDir tmp;
  const fs::path cfg = write_config(tmp.path, "cfg.json", [&] {
    Json j;
    j["kind"] = "baseline";
    j["seed"] = 11;
    j["method"] = "sa";
    j["sweeps"] = 120;
    j["repetitions"] = 4;
    j["instance"] = {{"generator", "sk"}, {"n", 8}, {"count", 3}};
    return j;
  }());
  const RunOutput r1 = run_cli("baseline --config " + cfg.string() + " --out " +
                                   (tmp.path / "o1").string(),
                               tmp.path / "l1.txt");
  const RunOutput r2 = run_cli("baseline --config " + cfg.string() + " --out " +
                                   (tmp.path / "o2").string(),
                               tmp.path / "l2.txt");
  CHECK(r1.exit_code == 0);
  CHECK(r2.exit_code == 0);
  const std::string a = slurp(tmp.path / "o1" / "results.csv");
  const std::string b = slurp(tmp.path / "o2" / "results.csv");
  CHECK(a == b);
  CHECK(!a.empty());
}

TEST_CASE("mismatched or invalid kind exits with status 2") {
  TempDir tmp;
  Json j;
  j["kind"] = "bogus";
  const fs::path cfg = write_config(tmp.path, "bad.json", j);
  const RunOutput r = run_cli("anneal --config " + cfg.string(), tmp.path / "log.txt");
  CHECK(r.exit_code == 2);
}

TEST_CASE("validate-only accepts a complete config") {
  TempDir tmp;
  const fs::path inst = write_single_qubit(tmp.path);
  const fs::path cfg = write_config(tmp.path, "cfg.json", anneal_config(inst));
  const RunOutput r = run_cli("anneal --config " + cfg.string() + " --validate-only",
                              tmp.path / "log.txt");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("error") == std::string::npos);
}

TEST_CASE("validate-only names a missing required field") {
  TempDir tmp;
  const fs::path inst = write_single_qubit(tmp.path);
  Json j = anneal_config(inst);
  j.erase("T");
  const fs::path cfg = write_config(tmp.path, "cfg.json", j);
  const RunOutput r = run_cli("anneal --config " + cfg.string() + " --validate-only",
                              tmp.path / "log.txt");
  CHECK(r.exit_code == 2);
  CHECK(r.output.find("error: T:") != std::string::npos);
}

TEST_CASE("unknown extra keys warn without failing") {
  TempDir tmp;
  const fs::path inst = write_single_qubit(tmp.path);
  Json j = anneal_config(inst);
  j["frobnicate"] = true;
  const fs::path cfg = write_config(tmp.path, "cfg.json", j);
  const RunOutput r = run_cli("anneal --config " + cfg.string() + " --validate-only",
                              tmp.path / "log.txt");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("warning: frobnicate") != std::string::npos);
}

TEST_CASE("numeric failure exits with status 3") {
  TempDir tmp;
  const fs::path inst = write_single_qubit(tmp.path);
  Json j = anneal_config(inst);
  j["T"] = {1.0};
  j["tolerance"] = 1e-300;  // unreachable self-consistency target
  j["ds"] = 0.5;
  const fs::path cfg = write_config(tmp.path, "cfg.json", j);
  const RunOutput r = run_cli("anneal --config " + cfg.string() + " --out " +
                                  (tmp.path / "out").string(),
                              tmp.path / "log.txt");
  CHECK(r.exit_code == 3);
}

TEST_CASE("a manifest reproduces the run that wrote it") {
  TempDir tmp;
  const fs::path inst = write_single_qubit(tmp.path);
  const fs::path cfg = write_config(tmp.path, "cfg.json", anneal_config(inst));
  const RunOutput r1 = run_cli("anneal --config " + cfg.string() + " --out " +
                                   (tmp.path / "o1").string(),
                               tmp.path / "l1.txt");
  REQUIRE(r1.exit_code == 0);

  const Json manifest = Json::parse(slurp(tmp.path / "o1" / "manifest.json"));
  const fs::path cfg2 = write_config(tmp.path, "replay.json", manifest.at("config"));
  const RunOutput r2 = run_cli("anneal --config " + cfg2.string() + " --out " +
                                   (tmp.path / "o2").string(),
                               tmp.path / "l2.txt");
  CHECK(r2.exit_code == 0);
  CHECK(slurp(tmp.path / "o1" / "results.csv") == slurp(tmp.path / "o2" / "results.csv"));
}

TEST_CASE("seed override lands in the manifest") {
  TempDir tmp;
  const fs::path inst = write_single_qubit(tmp.path);
  const fs::path cfg = write_config(tmp.path, "cfg.json", anneal_config(inst));
  const RunOutput r = run_cli("anneal --config " + cfg.string() + " --seed 123 --out " +
                                  (tmp.path / "out").string(),
                              tmp.path / "log.txt");
  CHECK(r.exit_code == 0);
  const Json manifest = Json::parse(slurp(tmp.path / "out" / "manifest.json"));
  CHECK(manifest.at("seed") == 123);
}

TEST_CASE("spectrum kind writes a gap profile") {
  TempDir tmp;
  const fs::path inst = write_single_qubit(tmp.path);
  Json j;
  j["kind"] = "spectrum";
  j["seed"] = 1;
  j["instance"] = {{"file", inst.string()}};
  j["d"] = 1;
  j["grid_points"] = 21;
  const fs::path cfg = write_config(tmp.path, "cfg.json", j);
  const RunOutput r = run_cli("spectrum --config " + cfg.string() + " --out " +
                                  (tmp.path / "out").string(),
                              tmp.path / "log.txt");
  CHECK(r.exit_code == 0);
  const std::string csv = slurp(tmp.path / "out" / "results.csv");
  CHECK(csv.find("min_gap") != std::string::npos);
  CHECK(csv.find("s_star") != std::string::npos);
  bool found_gap_csv = false;
  for (const auto& e : fs::directory_iterator(tmp.path / "out"))
    if (e.path().filename().string().rfind("gap_", 0) == 0) found_gap_csv = true;
  CHECK(found_gap_csv);
}

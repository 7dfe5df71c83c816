#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cli.hpp"
#include "schubert/schubert_schur.hpp"
#include "schubert/structure_constants.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  Run r;
  r.code = schubert::cli::run_cli(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string slurp(const fs::path &path) {
  std::ifstream file(path);
  std::stringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

fs::path scratch(const std::string &name) {
  const auto dir = fs::temp_directory_path() / ("schubert_cli_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

} // namespace

TEST_CASE("schubert subcommand") {
  CHECK(run({"schubert", "2,3,4,1,5"}).out == "x1*x2*x3\n");
  CHECK(run({"schubert", "1"}).out == "1\n");
  const auto h2 = run({"schubert", "1,2,5,3,4"});
  CHECK(h2.code == 0);
  CHECK(h2.out == "x3^2 + x2*x3 + x1*x3 + x2^2 + x1*x2 + x1^2\n");
  const auto json = nlohmann::json::parse(run({"schubert", "1,3,2", "--format", "json"}).out);
  CHECK(json["w"] == nlohmann::json::array({1, 3, 2}));
  CHECK(json["terms"].size() == 2);
  CHECK(run({"schubert", "2,2"}).code == 2);
}

TEST_CASE("schur subcommand") {
  CHECK(run({"schur", "--lambda", "1,1,1", "--k", "3"}).out == "x1*x2*x3\n");
  CHECK(run({"schur", "--lambda", "2,1", "--k", "2", "--method", "jacobi-trudi"}).out ==
        run({"schur", "--lambda", "2,1", "--k", "2"}).out);
  CHECK(run({"schur", "--lambda", "1,1,1", "--k", "2"}).code == 2);
}

TEST_CASE("pieri subcommand") {
  CHECK(run({"pieri", "--w", "1,4,3,2", "--m", "2", "--k", "3"}).out ==
        "{(1,4,6,2,3,5): 1, (1,6,3,2,4,5): 1, (2,4,5,1,3): 1, (2,5,3,1,4): 1}\n");
  const auto chains = run({"pieri", "--w", "1,4,3,2", "--m", "2", "--k", "3", "--chains"});
  CHECK(chains.out.find("w=1,4,3,2 k=3 steps=(3,5)(3,6) -> 1,4,6,2,3,5") != std::string::npos);
  CHECK(run({"pieri", "--w", "1,4,3,2", "--m", "2", "--k", "0"}).code == 2);
}

TEST_CASE("expand subcommand") {
  CHECK(run({"expand", "--w", "1,2,3,5,7,4,6", "--lambda", "2,1", "--k", "5"}).out ==
        "{(1,2,3,6,9,4,5,7,8): 1, (1,2,3,7,8,4,5,6): 1, (1,2,4,5,9,3,6,7,8): 1, "
        "(1,2,4,6,8,3,5,7): 2, (1,2,5,6,7,3,4): 1, (1,3,4,5,8,2,6,7): 1, (1,3,4,6,7,2,5): 1}\n");
  CHECK(run({"expand", "--w", "1,4,3,2", "--lambda", "2,0", "--k", "3"}).out ==
        "{(1,4,6,2,3,5): 1, (1,6,3,2,4,5): 1, (2,4,5,1,3): 1, (2,5,3,1,4): 1}\n");
  CHECK(run({"expand", "--w", "2,1", "--lambda", "0,0", "--k", "2"}).out == "{(2,1): 1}\n");
  CHECK(run({"expand", "--w", "1,4,3,2", "--lambda", "2,1", "--k", "3", "--method", "oracle"}).out ==
        run({"expand", "--w", "1,4,3,2", "--lambda", "2,1", "--k", "3"}).out);

  const auto json = nlohmann::json::parse(
      run({"expand", "--w", "1,4,3,2", "--lambda", "2,0", "--k", "3", "--format", "json"}).out);
  CHECK(json["lambda"] == nlohmann::json::array({2, 0}));
  CHECK(json["terms"][0]["v"] == nlohmann::json::array({1, 4, 6, 2, 3, 5}));

  const auto census = run({"expand", "--w", "1,2,3,5,7,4,6", "--lambda", "2,1", "--k", "5",
                           "--census", "1,2,4,6,8,3,5,7"});
  CHECK(census.code == 0);
  CHECK(std::count(census.out.begin(), census.out.end(), '\n') >= 2);

  CHECK(run({"expand", "--w", "2,1", "--lambda", "1,1,1", "--k", "3"}).code == 2);
  CHECK(run({"expand", "--w", "2,1", "--lambda", "1,1", "--k", "1"}).code == 2);
}

TEST_CASE("classify subcommand") {
  CHECK(run({"classify", "--w", "1,3,2", "--k", "2", "--steps", "(1,3)(2,4)(2,5)", "--n2", "3"}).out ==
        "(1,1,{1},[(1,3)])\n");
  CHECK(run({"classify", "--w", "1,3,2", "--k", "2", "--steps", "(2,4)(2,5)(2,6)", "--n2", "3"}).out ==
        "(0,0,{},[])\n");
  CHECK(run({"classify", "--w", "1,3,2", "--k", "2", "--steps", "(1,3)(2,4", "--n2", "3"}).code == 2);
  CHECK(run({"classify", "--w", "1,4,3,2", "--k", "3", "--steps", "(3,5)", "--n2", "3"}).code == 2);
}

TEST_CASE("usage errors and help") {
  CHECK(run({}).code == 2);
  CHECK(run({"bogus"}).code == 2);
  CHECK(run({"expand", "--w", "2,1"}).code == 2);
  const auto help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("scan") != std::string::npos);
  CHECK(run({"scan", "conjecture", "--n2", "5..2"}).code == 2);
  CHECK(run({"scan", "conjecture", "--n2", "x"}).code == 2);
}

TEST_CASE("scan writes reports") {
  const auto dir = scratch("scan");
  const auto path = dir / "r.json";
  const auto r = run({"scan", "conjecture", "--n2", "2..4", "--k-all", "--m1-max", "3", "--out",
                      path.string()});
  CHECK(r.code == 0);
  CHECK(r.out.find("violations: 0") != std::string::npos);
  const auto report = schubert::scan_report_from_json(slurp(path));
  CHECK(report.ok());
  CHECK(report.config.kind == "conjecture");
  CHECK(report.config.n2_min == 2);
  CHECK(report.config.n2_max == 4);
  for (const auto &cell : report.cells)
    CHECK(cell.max_coeff <= std::max<schubert::Coefficient>(1, cell.n2 - cell.k));

  // Identical runs give identical reports apart from timing.
  const auto again = dir / "again.json";
  CHECK(run({"scan", "conjecture", "--n2", "2..4", "--k-all", "--m1-max", "3", "--workers", "1",
             "--out", again.string()})
            .code == 0);
  auto strip = [](std::string text) {
    auto json = nlohmann::json::parse(text);
    json.erase("timing");
    return json.dump();
  };
  CHECK(strip(slurp(path)) == strip(slurp(again)));

  const auto t1 = run({"scan", "theorem1", "--n2", "2..4", "--m1-max", "3"});
  CHECK(t1.code == 0);
  CHECK(nlohmann::json::parse(t1.out)["violations"].empty());

  const auto t2 = run({"scan", "theorem2", "--n2", "3..4", "--m1-max", "3", "--format", "text"});
  CHECK(t2.code == 0);
  CHECK(t2.out.rfind("kind: theorem2", 0) == 0);
  CHECK(run({"scan", "theorem2", "--n2", "5", "--k", "3", "--lambda", "2,2"}).code == 2);

  const auto cell = run({"scan", "cell", "--w", "1,2,3,5,7,4,6", "--lambda", "2,1", "--k", "5",
                         "--format", "text"});
  CHECK(cell.out.find("terms: 7") != std::string::npos);
  CHECK(cell.out.find("global_max: 2") != std::string::npos);
  fs::remove_all(dir);
}

TEST_CASE("scan output directory must exist") {
  const auto r = run({"scan", "theorem1", "--n2", "2..3", "--out", "/nonexistent/dir/r.json"});
  CHECK(r.code == 4);
  CHECK(r.err.find("does not exist") != std::string::npos);
}

TEST_CASE("memo cache directory") {
  const auto dir = scratch("cache");
  ::setenv("SCHUBERT_CACHE_DIR", dir.string().c_str(), 1);
  schubert::default_schubert_table().clear();
  CHECK(run({"schubert", "2,5,1,4,3"}).code == 0);
  CHECK(fs::exists(dir / "schubert-memo.json"));
  schubert::default_schubert_table().clear();
  schubert::SchubertTable reloaded;
  CHECK(reloaded.load(dir / "schubert-memo.json"));
  CHECK(reloaded.size() > 1);

  // A corrupt cache is ignored.
  {
    std::ofstream bad(dir / "schubert-memo.json");
    bad << "garbage";
  }
  CHECK(run({"schubert", "2,3,4,1,5"}).out == "x1*x2*x3\n");
  ::unsetenv("SCHUBERT_CACHE_DIR");
  fs::remove_all(dir);
}

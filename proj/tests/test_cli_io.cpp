#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "commands.hpp"
#include "transurf/genesis.hpp"
#include "transurf/io.hpp"

using namespace transurf;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::vector<std::string>> csv_rows(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::istringstream l(line);
    std::string cell;
    while (std::getline(l, cell, ',')) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

int count_prefix(const std::string& text, const std::string& prefix) {
  int n = 0;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) n += line.rfind(prefix, 0) == 0;
  return n;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("transurf-test-" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_CASE("grid flag syntax") {
  const GridSpec g = cli::parse_grid("-1:1:5,0.5:2:3");
  CHECK(g.x_start == -1);
  CHECK(g.x_stop == 1);
  CHECK(g.x_count == 5);
  CHECK(g.y_start == 0.5);
  CHECK(g.y_count == 3);
  CHECK_THROWS_AS(cli::parse_grid("0:1:2"), std::invalid_argument);
  CHECK_THROWS_AS(cli::parse_grid("0:1,0:1:2"), std::invalid_argument);
  CHECK_THROWS_AS(cli::parse_grid("0:1:1,0:1:2"), std::invalid_argument);
  CHECK_THROWS_AS(cli::parse_grid("1:0:3,0:1:2"), std::invalid_argument);
  CHECK_THROWS_AS(cli::parse_grid("0:1:x,0:1:2"), std::invalid_argument);
}

TEST_CASE("curvature command") {
  const auto scherk = run({"curvature", "--family", "scherk", "--lambda", "1", "--grid", "-1:1:5,-1:1:5"});
  REQUIRE(scherk.code == 0);
  const auto rows = csv_rows(scherk.out);
  REQUIRE(rows.size() == 26);
  CHECK(rows[0] == std::vector<std::string>{"x", "y", "H", "K", "W", "valid"});
  for (std::size_t i = 1; i < rows.size(); ++i) {
    CHECK(std::abs(std::stod(rows[i][2])) < 1e-10);
    CHECK(rows[i][5] == "1");
  }

  const auto plane = run({"curvature", "--family", "plane", "--grid", "0:1:2,0:1:2"});
  REQUIRE(plane.code == 0);
  CHECK(plane.out == "x,y,H,K,W,valid\n0,0,0,0,1,1\n1,0,0,0,1,1\n0,1,0,0,1,1\n1,1,0,0,1,1\n");

  const auto cubic =
      run({"curvature", "--f", "t^3", "--g", "cos(t)", "--ambient", "euclidean", "--grid", "-1:1:4,-2:2:3"});
  REQUIRE(cubic.code == 0);
  TranslationSurface s;
  s.f = Profile::parse("t^3");
  s.g = Profile::parse("cos(t)");
  CHECK(cubic.out == io::samples_csv(sample_grid(s, GridSpec{-1, 1, 4, -2, 2, 3})));
}

TEST_CASE("error exit codes") {
  CHECK(run({"curvature", "--f", "t^", "--grid", "0:1:2,0:1:2"}).code == 2);
  CHECK(run({"curvature", "--f", "q(t)", "--grid", "0:1:2,0:1:2"}).code == 2);
  CHECK(run({"curvature", "--family", "plane", "--grid", "0:1:1,0:1:2"}).code == 2);
  CHECK(run({"curvature", "--family", "plane"}).code == 2);
  CHECK(run({"curvature", "--family", "plane", "--f", "t", "--grid", "0:1:2,0:1:2"}).code == 2);
  CHECK(run({"curvature", "--surface", "/nonexistent/surface.json", "--grid", "0:1:2,0:1:2"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({}).code == 2);
  const auto empty = run({"curvature", "--f", "t", "--ambient", "lorentz-spacelike", "--grid", "0:1:2,0:1:2"});
  CHECK(empty.code == 3);
  CHECK(empty.out.empty());
  CHECK(empty.err.find("no admissible samples") != std::string::npos);
  CHECK(run({"fit", "--f", "t", "--ambient", "lorentz-spacelike", "--grid", "0:1:2,0:1:2"}).code == 3);
  CHECK(run({"mesh", "--f", "t", "--ambient", "lorentz-spacelike", "--grid", "0:1:2,0:1:2"}).code == 3);
  const auto bad_lambda = run({"generate", "scherk", "--lambda", "0"});
  CHECK(bad_lambda.code == 2);
  CHECK_FALSE(bad_lambda.err.empty());
}

TEST_CASE("fit command") {
  auto verdict = [](const Run& r) { return io::Json::parse(r.out); };
  const auto para = run({"fit", "--family", "paraboloid", "--grid", "-1:1:21,-1:1:21"});
  CHECK(para.code == 0);
  const auto pj = verdict(para);
  CHECK(pj["verdict"] == "NotLinearWeingarten");
  CHECK(pj["rms_residual"].get<double>() == doctest::Approx(0.016376706774081845).epsilon(1e-9));
  for (const char* key : {"a", "b", "c", "rms_residual", "max_residual", "rank", "verdict", "samples_used",
                          "samples_invalid"}) {
    CHECK(pj.contains(key));
  }

  const auto cyl = verdict(run({"fit", "--family", "cylinder", "--grid", "-1:1:21,-1:1:3"}));
  CHECK(cyl["verdict"] == "ConstantGaussCurvature");
  CHECK(cyl["k"] == 0.0);
  const auto sch = verdict(run({"fit", "--family", "scherk", "--grid", "-1:1:11,-1:1:11"}));
  CHECK(sch["verdict"] == "ConstantMeanCurvature");
  CHECK(std::abs(sch["h"].get<double>()) < 1e-10);
}

TEST_CASE("verify command") {
  const auto all = run({"verify", "--suite", "all", "--seed", "42"});
  CHECK(all.code == 0);
  const auto doc = io::Json::parse(all.out);
  CHECK(doc["passed"] == true);
  CHECK(doc["seed"] == 42);
  for (const auto& r : doc["reports"]) {
    CHECK(r.contains("suite"));
    CHECK(r.contains("mode"));
    for (const auto& s : r["steps"]) CHECK(s["status"] == "pass");
  }

  const auto c0a = run({"verify", "--suite", "c0"}), c0b = run({"verify", "--suite", "c0"});
  CHECK(c0a.code == 0);
  CHECK(c0a.out == c0b.out);

  for (const char* m : {"f-definition", "eab-coefficient", "phi2-sign", "display-4w", "lambda-sign"}) {
    const auto r = run({"verify", "--suite", "all", "--inject-mutation", m});
    INFO(m);
    CHECK(r.code == 1);
    CHECK(io::Json::parse(r.out)["passed"] == false);
  }
  CHECK(run({"verify", "--suite", "c7"}).code == 2);
  CHECK(run({"verify", "--inject-mutation", "nope"}).code == 2);
}

TEST_CASE("mesh command") {
  const auto plane = run({"mesh", "--family", "plane", "--grid", "0:1:2,0:1:2"});
  REQUIRE(plane.code == 0);
  CHECK(plane.out.rfind("o translation_surface\n", 0) == 0);
  CHECK(count_prefix(plane.out, "v ") == 4);
  CHECK(count_prefix(plane.out, "f ") == 1);
  CHECK(plane.out.find("f 1 2 4 3\n") != std::string::npos);

  const auto scherk = run({"mesh", "--family", "scherk", "--grid", "-1.5:1.5:11,-1.5:1.5:11"});
  REQUIRE(scherk.code == 0);
  CHECK(count_prefix(scherk.out, "v ") == 121);
  CHECK(count_prefix(scherk.out, "f ") == 100);

  // spacelike z = x^2 is degenerate for |x| >= 1/2
  const GridSpec grid{-1, 1, 11, 0, 1, 3};
  const auto lor = run({"mesh", "--f", "t^2", "--g", "0", "--ambient", "lorentz-spacelike", "--grid", "-1:1:11,0:1:3"});
  REQUIRE(lor.code == 0);
  TranslationSurface s;
  s.f = Profile::parse("t^2");
  s.ambient = Ambient::LorentzSpacelike;
  const auto samples = sample_grid(s, grid);
  int valid = 0, cells = 0;
  for (const auto& c : samples) valid += c.valid;
  for (int j = 0; j + 1 < grid.y_count; ++j) {
    for (int i = 0; i + 1 < grid.x_count; ++i) {
      const auto at = [&](int di, int dj) { return samples[(j + dj) * grid.x_count + i + di].valid; };
      cells += at(0, 0) && at(1, 0) && at(0, 1) && at(1, 1);
    }
  }
  CHECK(valid == 15);  // x in {-0.4, ..., 0.4}
  CHECK(count_prefix(lor.out, "v ") == valid);
  CHECK(count_prefix(lor.out, "f ") == cells);
}

TEST_CASE("generate command") {
  const auto plane = run({"generate", "plane"});
  REQUIRE(plane.code == 0);
  const auto pj = io::Json::parse(plane.out);
  CHECK(pj["f"] == "0");
  CHECK(pj["g"] == "0");

  const auto check = run({"generate", "scherk", "--lambda", "1", "--check"});
  REQUIRE(check.code == 0);
  const auto cj = io::Json::parse(check.out);
  CHECK(cj["check"]["max_deviation"].get<double>() < 1e-9);
  // generated documents load back as surfaces
  const auto spec = io::parse_surface(cj);
  CHECK(spec.domain_f.has_value());
  CHECK(run({"generate", "plane", "--check"}).code == 2);
}

TEST_CASE("surface documents") {
  const auto spec = io::parse_surface(io::Json::parse(R"({"ambient": "lorentz-timelike-xz", "f": "t^2",
      "g": {"family": "scherk", "lambda": 2}, "domain_f": [-1, 1]})"));
  CHECK(spec.ambient == Ambient::LorentzTimelikeXZ);
  CHECK(spec.f == "t^2");
  CHECK(spec.g == family_profile_g({Family::Scherk, 2.0, ""}));
  REQUIRE(spec.domain_f.has_value());
  CHECK(spec.domain_f->hi == 1);
  REQUIRE(spec.domain_g.has_value());
  CHECK(spec.domain_g->hi == doctest::Approx(scherk_half_width(2.0)));

  CHECK_THROWS_AS(io::parse_surface(io::Json::parse(R"({"f": "t"})")), io::SpecError);
  CHECK_THROWS_AS(io::parse_surface(io::Json::parse(R"({"f": "t", "g": 3})")), io::SpecError);
  CHECK_THROWS_AS(io::parse_surface(io::Json::parse(R"({"f": "t", "g": "t", "ambient": "hyperbolic"})")),
                  io::SpecError);
  CHECK_THROWS_AS(io::parse_surface(io::Json::parse(R"({"f": "t", "g": "t", "domain_f": [1, 0]})")), io::SpecError);
  CHECK_THROWS_AS(io::parse_surface(io::Json::parse(R"({"f": {"family": "scherk", "lambda": -1}, "g": "0"})")),
                  io::SpecError);

  const auto round = io::parse_surface(io::to_json(spec));
  CHECK(round.f == spec.f);
  CHECK(round.g == spec.g);
  CHECK(round.ambient == spec.ambient);
}

TEST_CASE("output files and byte stability") {
  TempDir tmp;
  const fs::path surface = tmp.path / "surface.json";
  {
    std::ofstream out(surface);
    out << R"json({"ambient": "euclidean", "f": "sin(t)", "g": "t^2/3"})json";
  }
  const std::vector<std::vector<std::string>> commands = {
      {"curvature", "--surface", surface.string(), "--grid", "-1:1:7,-1:1:5"},
      {"fit", "--surface", surface.string(), "--grid", "-1:1:7,-1:1:5"},
      {"mesh", "--surface", surface.string(), "--grid", "-1:1:7,-1:1:5"},
      {"verify", "--suite", "c1", "--seed", "3"},
      {"generate", "scherk", "--lambda", "1.5", "--check", "--table", (tmp.path / "table.csv").string()},
  };
  int index = 0;
  for (auto args : commands) {
    const fs::path out = tmp.path / ("out" + std::to_string(index++));
    args.push_back("--out");
    args.push_back(out.string());
    const auto first = run(args);
    REQUIRE(first.code == 0);
    const std::string a = slurp(out);
    CHECK_FALSE(a.empty());
    const auto second = run(args);
    REQUIRE(second.code == 0);
    CHECK(slurp(out) == a);
    CHECK_FALSE(fs::exists(fs::path(out.string() + ".tmp")));
  }
  const std::string table = slurp(tmp.path / "table.csv");
  CHECK(table.rfind("x,f,fp\n", 0) == 0);

  // a failing command leaves no file behind
  const fs::path never = tmp.path / "never.csv";
  CHECK(run({"curvature", "--f", "t", "--ambient", "lorentz-spacelike", "--grid", "0:1:2,0:1:2", "--out",
             never.string()})
            .code == 3);
  CHECK_FALSE(fs::exists(never));
  CHECK_FALSE(fs::exists(fs::path(never.string() + ".tmp")));
}

TEST_CASE("number formatting round-trips") {
  for (double v : {0.1, 1.0 / 3, -2.5e-300, 6.02214076e23, 0.0}) CHECK(std::stod(io::format_double(v)) == v);
  CHECK(io::format_double(1.0) == "1");
}

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "corpus.hpp"
#include "doctest.h"
#include "json.hpp"
#include "tropnev/cli/parse.hpp"
#include "tropnev/cli/run.hpp"

using namespace tropnev;
using namespace tropnev::cli;
using namespace tropnev::testing;
using nlohmann::json;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::vector<std::string>> csv_rows(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

std::size_t column(const std::vector<std::string>& header, const std::string& name) {
  auto it = std::find(header.begin(), header.end(), name);
  REQUIRE(it != header.end());
  return static_cast<std::size_t>(it - header.begin());
}

std::filesystem::path temp_file(const std::string& name, const std::string& content) {
  auto p = std::filesystem::temp_directory_path() / ("tropnev_test_" + name);
  std::ofstream(p) << content;
  return p;
}

std::vector<double> pt(std::initializer_list<double> v) { return v; }

}  // namespace

TEST_CASE("parse_expr examples") {
  auto f = parse_expr("0:1|0:0/0:1|1:0");
  CHECK(f.dim() == 1);
  CHECK(f.eval(pt({-1})) == -1.0);
  CHECK(f.eval(pt({0.5})) == -0.5);
  CHECK(f.eval(pt({2})) == 0.0);

  auto g = parse_expr("0:1,0|0:-1,0/0:0,1|0:0,-1");
  CHECK(g.dim() == 2);
  std::mt19937_64 rng(81);
  std::uniform_real_distribution<double> u(-10, 10);
  for (int k = 0; k < 100; ++k) {
    double x = u(rng), y = u(rng);
    CHECK(g.eval(pt({x, y})) == std::abs(x) - std::abs(y));
  }

  auto c = parse_expr("3");
  CHECK(c.eval(pt({17})) == 3.0);
  CHECK(c.is_entire());
}

TEST_CASE("parse_expr spacing and the spaced example") {
  auto f = parse_expr("0:1 | 0:0 / 0:1 | 1:0");
  CHECK(f.eval(pt({0.5})) == -0.5);
}

TEST_CASE("parse errors carry a location") {
  try {
    (void)parse_expr("0:1 | 0:x", nullptr, 4);
    FAIL("no throw");
  } catch (const ParseError& e) {
    CHECK(e.line() == 4);
    CHECK(e.column() == 9);
    CHECK(e.code() == Errc::parse_error);
  }
  CHECK_THROWS_AS(parse_expr(""), ParseError);
  CHECK_THROWS_AS(parse_expr("0:1,2 | 0:1"), Error);
  CHECK_THROWS_AS(parse_expr("0:1 / 0:1 / 0:1"), ParseError);
}

TEST_CASE("-inf terms are dropped with a warning") {
  std::vector<std::string> warnings;
  auto f = parse_expr("-inf:2 | 0:1", &warnings);
  CHECK(f.num().size() == 1);
  CHECK(warnings.size() == 1);
}

TEST_CASE("print then parse round-trips") {
  std::mt19937_64 rng(82);
  std::uniform_real_distribution<double> u(-100, 100);
  for (auto c : {corpus_1d(20, 83), corpus_2d(20, 84)}) {
    for (const auto& f : c) {
      auto g = parse_expr(print_expr(f));
      std::vector<double> x(f.dim());
      for (int k = 0; k < 1000; ++k) {
        for (double& v : x) v = u(rng);
        CHECK(g.eval(x) == f.eval(x));
      }
    }
  }
}

TEST_CASE("grid and matrix parsing") {
  auto g = parse_grid("1:100:100");
  CHECK(g.points().size() == 100);
  CHECK(g.points().front() == 1.0);
  CHECK(g.points().back() == 100.0);
  auto l = parse_grid("1:10000:5:log");
  CHECK(l.points()[2] == doctest::Approx(100.0));
  CHECK_THROWS_AS(parse_grid("0:10:5"), Error);
  CHECK_THROWS_AS(parse_grid("1:10"), Error);
  auto m = parse_matrix(R"([[1, "-inf"], [0, 2]])");
  CHECK(m(0, 1).is_bottom());
  CHECK(m(1, 1) == TropicalNumber(2));
}

TEST_CASE("charfun reports T = max(0, (r-1)/2)") {
  auto o = invoke({"charfun", "-f", "0:1|0:0/0:1|1:0", "--r", "1:100:100"});
  REQUIRE(o.code == kOk);
  auto rows = csv_rows(o.out);
  REQUIRE(rows.size() == 101);
  auto r = column(rows[0], "r"), T = column(rows[0], "T");
  for (std::size_t k = 1; k < rows.size(); ++k) {
    double rv = std::stod(rows[k][r]);
    CHECK(std::abs(std::stod(rows[k][T]) - std::max(0.0, (rv - 1) / 2)) <= 1e-9);
  }
}

TEST_CASE("jensen on a 2-D corpus file") {
  std::string text = "# random 2-D corpus\n";
  for (const auto& f : corpus_2d(10, 85)) text += print_expr(f) + "\n";
  auto path = temp_file("corpus2d.txt", text);
  auto o = invoke({"jensen", "-f", path.string(), "--K", "4096", "--seed", "7", "--r", "1:50:50"});
  CHECK(o.code == kOk);
  auto rows = csv_rows(o.out);
  auto res = column(rows[0], "residual");
  CHECK(column(rows[0], "fn") == 0);
  for (std::size_t k = 1; k < rows.size(); ++k) CHECK(std::abs(std::stod(rows[k][res])) < 5.0 / 4096);
  std::filesystem::remove(path);
}

TEST_CASE("det prints the value") {
  auto o = invoke({"det", "-A", "[[1,2],[3,4]]"});
  CHECK(o.code == kOk);
  CHECK(o.out == "5\n");
  auto j = invoke({"det", "-A", R"([["-inf","-inf"],[0,0]])", "--format", "json"});
  CHECK(json::parse(j.out)["value"] == "-inf");
}

TEST_CASE("every table embeds the run configuration") {
  for (std::vector<std::string> args : {std::vector<std::string>{"charfun", "-f", "0:1|0:-1", "--r", "1:5:5"},
                                        {"eval", "-f", "0:1,0|0:0,1", "--at", "1,2"},
                                        {"classify", "-f", "0:1|0:0/0:1|1:0", "--at", "0"},
                                        {"growth", "-f", "0:1|0:0/0:1|1:0"},
                                        {"cartan", "-f", "0:1|0:0/0:1|1:0", "--r", "1:5:5"}}) {
    auto o = invoke(args);
    REQUIRE(o.code == kOk);
    auto header = csv_rows(o.out)[0];
    for (const char* key : {"scheme", "K", "seed", "tol"}) CHECK(std::count(header.begin(), header.end(), key) == 1);
  }
  auto j = invoke({"charfun", "-f", "0:1|0:-1", "--r", "1:5:5", "--format", "json", "--seed", "3"});
  auto doc = json::parse(j.out);
  CHECK(doc["meta"]["seed"] == "3");
  CHECK(doc["rows"].size() == 5);
}

TEST_CASE("identical arguments give byte-identical output") {
  std::vector<std::string> args{"charfun", "-f", "0:1,0|0:0,1|1:-1,-1/0:0,0|0:1,1", "--K", "512", "--r", "1:20:20"};
  CHECK(invoke(args).out == invoke(args).out);
  std::vector<std::string> mc{"charfun", "-f", "0:1,0,0|0:0,1,0/0:0,0,1|0:0,0,-1", "--K", "256", "--seed", "5"};
  CHECK(invoke(mc).out == invoke(mc).out);
}

TEST_CASE("exit codes") {
  CHECK(invoke({"bogus"}).code == kUsage);
  CHECK(invoke({}).code == kUsage);
  CHECK(invoke({"--help"}).code == kOk);
  CHECK(invoke({"charfun", "-f", "0:1 | oops"}).code == kUsage);
  CHECK(invoke({"charfun", "-f", "0:1", "--r", "5:1:3"}).code == kUsage);
  CHECK(invoke({"charfun", "-f", "0:1", "--K", "7"}).code == kUsage);
  CHECK(invoke({"charfun"}).code == kUsage);
  CHECK(invoke({"det", "-A", "[[1,2]]"}).code == kUsage);
  CHECK(invoke({"jensen", "-f", "0:1|0:0/0:1|1:0", "--threshold", "0"}).code == kCheckFailed);
  CHECK(invoke({"defect", "-f", "0", "--a", "0"}).code == kCheckFailed);
  auto e = invoke({"charfun", "-f", "0:1 | 0:x"});
  CHECK(e.err.find("column") != std::string::npos);
}

TEST_CASE("fmt warns above L_f") {
  auto o = invoke({"fmt", "-f", "0:1|0:0/0:1|1:0", "--a", "1"});
  CHECK(o.code == kOk);
  CHECK(o.err.find("warning") != std::string::npos);
  CHECK(invoke({"fmt", "-f", "0:1|0:0/0:1|1:0"}).code == kOk);
}

TEST_CASE("config file and environment seed") {
  auto cfg = temp_file("config.json", R"({"function": "0:1|0:0/0:1|1:0", "r": "1:3:3", "seed": 9})");
  auto o = invoke({"charfun", "--config", cfg.string()});
  REQUIRE(o.code == kOk);
  auto rows = csv_rows(o.out);
  CHECK(rows.size() == 4);
  CHECK(rows[1][column(rows[0], "seed")] == "9");

  // Flags win over the config file.
  auto o2 = invoke({"charfun", "--config", cfg.string(), "--r", "1:5:5"});
  CHECK(csv_rows(o2.out).size() == 6);

  ::setenv("TROPNEV_SEED", "13", 1);
  auto e = invoke({"charfun", "-f", "0:1,0,0|0:-1,0,0", "--K", "64", "--r", "1:2:2"});
  auto er = csv_rows(e.out);
  CHECK(er[1][column(er[0], "seed")] == "13");
  auto f = invoke({"charfun", "-f", "0:1,0,0|0:-1,0,0", "--K", "64", "--r", "1:2:2", "--seed", "4"});
  auto fr = csv_rows(f.out);
  CHECK(fr[1][column(fr[0], "seed")] == "4");
  ::unsetenv("TROPNEV_SEED");
  std::filesystem::remove(cfg);
}

TEST_CASE("--out writes the table to a file") {
  auto path = std::filesystem::temp_directory_path() / "tropnev_test_out.csv";
  auto o = invoke({"charfun", "-f", "0:1", "--r", "1:2:2", "--out", path.string()});
  CHECK(o.code == kOk);
  CHECK(o.out.empty());
  std::ifstream in(path);
  std::string header;
  std::getline(in, header);
  CHECK(header.rfind("r,m,n,N,T", 0) == 0);
  std::filesystem::remove(path);
}

TEST_CASE("commands over maps and hypersurfaces") {
  const std::string map = R"({"dim":1,"components":[[{"c":1,"m":[0]},{"c":0,"m":[1]}],[{"c":0,"m":[0]},{"c":0,"m":[1]}]]})";
  const std::string hypers =
      R"([{"m":1,"d":1,"coeffs":[{"I":[1,0],"c":0},{"I":[0,1],"c":0.25}]},)"
      R"({"m":1,"d":1,"coeffs":[{"I":[1,0],"c":0},{"I":[0,1],"c":0.5}]},)"
      R"({"m":1,"d":1,"coeffs":[{"I":[1,0],"c":0},{"I":[0,1],"c":0.75}]}])";
  CHECK(invoke({"cartan", "--map", map, "--r", "1:10:10"}).code == kOk);
  CHECK(invoke({"hyperfmt", "--map", map, "--hyper", hypers}).code == kOk);
  CHECK(invoke({"defect", "--map", map, "--hyper", hypers, "--r", "1:10000:41:log"}).code == kOk);
  auto s = invoke({"smt", "--map", map, "--hyper", hypers, "--c", "1", "--r", "10:100:10"});
  CHECK(s.code == kOk);
  auto sj = invoke({"qsmt", "--map", map, "--hyper", hypers, "--q", "2", "--format", "json"});
  CHECK(sj.code == kOk);
  auto doc = json::parse(sj.out);
  CHECK(doc.contains("report"));
  CHECK(doc["meta"]["scheme"] == "exact-pair");
  CHECK(invoke({"qsmt", "--map", map, "--hyper", hypers, "--q", "1"}).code == kUsage);
  CHECK(invoke({"casorati", "-f", "0:0", "-f", "0:1|-3:2", "--c", "1", "--r", "1:10:10"}).code == kOk);
  auto c = invoke({"casorati", "-f", "0:0", "-f", "0:1", "--c", "1", "--at", "2"});
  CHECK(csv_rows(c.out)[1][1] == "3");
  CHECK(invoke({"ldl", "-f", "0:1|0:0/0:1|1:0", "--c", "1", "--r", "1:10000:20"}).code == kOk);
  CHECK(invoke({"qldl", "-f", "0:1|0:0/0:1|1:0", "--q", "2"}).code == kOk);
  CHECK(invoke({"slice", "-f", "0:1,0|0:-1,0/0:0,1|0:0,-1", "--theta", "1,0", "--R", "5"}).code == kOk);
}

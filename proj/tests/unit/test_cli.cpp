#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "iris/error.hpp"
#include "iris//serialize.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
  iris::Json json() const { return iris::Json::parse(out); }
};

Run run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = iris::cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

const char* kGrid = "1 1 0\n1 1 1\n0 1 1\n";

std::string temp_file(const std::string& name, const std::string& body) {
  const std::string path = std::string(P_tmpdir) + "/" + name;
  std::ofstream(path) << body;
  return path;
}

}  // namespace

TEST_CASE("parse_matrix") {
  const auto j2 = iris::cli::parse_matrix(R"({"rows":[[1,1],[1,1]]})");
  CHECK(j2 == iris::ComplexIntMatrix::ones(2));
  CHECK(j2.bound() == 1);
  const auto c = iris::cli::parse_matrix(R"({"rows":[[[0,1],[1,0]],[[1,0],[0,1]]]})");
  CHECK(c.at(0, 0) == iris::GaussianBigInt(0, 1));
  CHECK(c.bound() == 1);
  const auto g = iris::cli::parse_matrix("1 1 0\n1 1 1\n0 1 1");
  CHECK(g == iris::ComplexIntMatrix::from_rows({{1, 1, 0}, {1, 1, 1}, {0, 1, 1}}));
  CHECK(iris::cli::parse_matrix("\n -3  4\n\n5 6 \n").bound() == 6);
  for (const char* bad : {"", "  \n", "1 2\n3", "1 2 3\n4 5 6", "1.5", "{\"rows\":", "a b\nc d"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(iris::cli::parse_matrix(bad), iris::IrisError);
  }
}

TEST_CASE("compute with theorem2") {
  const auto r = run({"compute", "--engine", "theorem2", "--mode", "sparse", "--p", "min", "--no-timing"}, kGrid);
  CHECK(r.code == 0);
  const auto j = r.json();
  CHECK(j["permanent"]["re"] == "3");
  CHECK(j["permanent"]["im"] == "0");
  CHECK(j["validated"] == true);
  CHECK(j["alpha"]["provenance"]["p"] == 11);
  CHECK_FALSE(j.contains("elapsed_ms"));
  CHECK(run({"compute", "--no-timing"}, kGrid).out == r.out);
  CHECK(run({"compute"}, kGrid).json().contains("elapsed_ms"));
}

TEST_CASE("compute with every engine") {
  for (const char* engine : {"naive", "ryser", "laplace"}) {
    const auto r = run({"compute", "--engine", engine}, kGrid);
    CHECK(r.code == 0);
    CHECK(r.json()["permanent"]["re"] == "3");
  }
  for (const char* engine : {"grid", "quadrature"}) {
    const auto r = run({"compute", "--engine", engine}, kGrid);
    CHECK(r.code == 0);
    CHECK(std::abs(r.json()["permanent"]["re"].get<double>() - 3.0) < 1e-6);
  }
  const auto big = run({"compute", "--engine", "theorem2", "--mode", "bigint", "--k", "8"}, kGrid);
  CHECK(big.code == 0);
  CHECK(big.json()["permanent"]["re"] == "3");
  CHECK(big.json()["report"]["k"] == 8);
  const std::string i5 = "1 0 0 0 0\n0 1 0 0 0\n0 0 1 0 0\n0 0 0 1 0\n0 0 0 0 1\n";
  CHECK(run({"compute", "--engine", "naive"}, i5).json()["permanent"]["re"] == "1");
}

TEST_CASE("compute reads a matrix file") {
  const auto path = temp_file("iris_cli_matrix.json", R"({"rows":[[[0,1],[1,0]],[[1,0],[0,1]]]})");
  const auto r = run({"compute", "--engine", "naive", "--matrix", path});
  CHECK(r.code == 0);
  CHECK(r.json()["permanent"]["re"] == "0");
  std::remove(path.c_str());
}

TEST_CASE("an invalid alpha exits 2 with the witness on stderr") {
  const auto path = temp_file("iris_cli_ones.json", R"({"t":1,"n":3,"rows":[[1,1,1]],"provenance":{"kind":"user"}})");
  const auto r = run({"compute", "--engine", "theorem2", "--validate", "brute", "--alpha-kind", "file", "--alpha-file", path},
                     kGrid);
  CHECK(r.code == 2);
  CHECK(r.json()["error"]["kind"] == "validation");
  const auto err = iris::Json::parse(r.err);
  CHECK(err["error"]["witness"] == iris::Json::parse("[3,0,0]"));
  std::remove(path.c_str());
}

TEST_CASE("theorem2 needs a one-row alpha") {
  const auto r = run({"compute", "--engine", "theorem2", "--alpha-kind", "identity"}, kGrid);
  CHECK(r.code == 3);
  CHECK(r.json()["error"]["kind"] == "input");
}

TEST_CASE("exit codes") {
  CHECK(run({"compute", "--validate", "skip"}, kGrid).code == 3);
  const auto unsafe = run({"compute", "--validate", "skip", "--unsafe"}, kGrid);
  CHECK(unsafe.code == 0);
  CHECK(unsafe.json()["validated"] == false);
  CHECK(run({"compute"}, "1 2\n3").code == 3);
  CHECK(run({"compute", "--engine", "warp"}, kGrid).code == 3);
  CHECK(run({"compute", "--bogus"}, kGrid).code == 3);
  CHECK(run({}, "").code == 3);
  const auto guard = run({"compute", "--engine", "naive"}, "1 0 0 0 0 0 0 0 0 0 0\n0 1 0 0 0 0 0 0 0 0 0\n"
                                                           "0 0 1 0 0 0 0 0 0 0 0\n0 0 0 1 0 0 0 0 0 0 0\n"
                                                           "0 0 0 0 1 0 0 0 0 0 0\n0 0 0 0 0 1 0 0 0 0 0\n"
                                                           "0 0 0 0 0 0 1 0 0 0 0\n0 0 0 0 0 0 0 1 0 0 0\n"
                                                           "0 0 0 0 0 0 0 0 1 0 0\n0 0 0 0 0 0 0 0 0 1 0\n"
                                                           "0 0 0 0 0 0 0 0 0 0 1\n");
  CHECK(guard.code == 4);
  CHECK(guard.json()["error"]["kind"] == "resource_guard");
  for (const auto& r : {run({"compute", "--validate", "skip"}, kGrid), run({"compute"}, "x")}) {
    CHECK(iris::Json::accept(r.out));
  }
}

TEST_CASE("alpha subcommand") {
  const auto r = run({"alpha", "--kind", "lemma1", "--n", "3", "--p", "min"});
  CHECK(r.code == 0);
  const auto j = r.json();
  CHECK(j["provenance"]["p"] == 11);
  CHECK(j["provenance"]["beta"] == 124);
  CHECK(j["rows"] == iris::Json::parse("[[119195,169793,208485]]"));
  CHECK(run({"alpha", "--kind", "theorem1", "--n", "3", "--p", "9"}).code == 3);
  CHECK(run({"alpha", "--kind", "theorem1", "--n", "3", "--p", "9", "--override-condition"}).json()["condition"] == false);
}

TEST_CASE("validate subcommand") {
  const auto r = run({"validate", "--kind", "theorem1", "--n", "3", "--p", "11", "--no-timing"});
  CHECK(r.code == 0);
  CHECK(r.json()["valid"] == true);
  CHECK(r.json()["checked"] == 10);
  const auto probe = run({"validate", "--kind", "theorem1", "--n", "4", "--method", "probe", "--no-timing"});
  CHECK(probe.code == 0);
  CHECK(probe.json()["combinations"] == 25);
  const auto path = temp_file("iris_cli_ones2.json", R"({"t":1,"n":3,"rows":[[1,1,1]]})");
  const auto bad = run({"validate", "--kind", "file", "--alpha-file", path, "--no-timing"});
  CHECK(bad.code == 2);
  CHECK(bad.json()["witness"] == iris::Json::parse("[3,0,0]"));
  std::remove(path.c_str());
}

TEST_CASE("crosscheck subcommand") {
  const std::vector<std::string> args{"crosscheck", "--engines", "ryser,theorem2", "--n", "4..8", "--trials", "50", "--seed", "1"};
  const auto r = run(args);
  CHECK(r.code == 0);
  const auto j = r.json();
  CHECK(j["type"] == "summary");
  CHECK(j["discrepant_trials"] == 0);
  CHECK(run(args).out == r.out);
  CHECK(run({"crosscheck", "--engines", "naive,grid", "--n", "3"}).code == 3);
  CHECK(run({"crosscheck", "--engines", "naive,grid", "--n", "3", "--tolerance", "1e-9"}).code == 0);
  CHECK(run({"crosscheck", "--engines", "ryser,theorem2-bigint", "--n", "6"}).code == 4);
}

TEST_CASE("bench subcommand") {
  const auto csv = std::string(P_tmpdir) + "/iris_cli_bench.csv";
  const auto r = run({"bench", "--engines", "ryser,theorem2", "--n", "3..5", "--trials", "2", "--csv", csv, "--no-timing"});
  CHECK(r.code == 0);
  const auto j = r.json();
  REQUIRE(j.size() == 6);
  CHECK_FALSE(j[0].contains("median_ms"));
  std::ifstream f(csv);
  std::string header;
  std::getline(f, header);
  CHECK(header.rfind("engine,n", 0) == 0);
  std::remove(csv.c_str());
}

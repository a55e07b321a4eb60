#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli/app.hpp"
#include "cli/commands.hpp"
#include "gincs/hilbert.hpp"
#include "gincs/multigrading.hpp"

namespace {

using gincs::cli::Json;

struct CliRun {
  int code;
  std::string out;
  std::string err;
  Json json() const { return Json::parse(out); }
};

std::string fixture(const std::string& name) { return std::string(GINCS_FIXTURE_DIR) + "/" + name; }

CliRun cli(std::vector<std::string> args) {
  args.insert(args.begin(), "gincs");
  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = gincs::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(CliGin, PathThreeStableWithThreeGenerators) {
  const CliRun r = cli({"gin", "--graph", fixture("path3.txt"), "--rows", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = r.json();
  EXPECT_EQ(j["schema"], gincs::cli::kSchema);
  EXPECT_EQ(j["status"], "ok");
  EXPECT_TRUE(j["result"]["report"]["stable"].get<bool>());
  EXPECT_EQ(j["result"]["report"]["gin"]["generators"].size(), 3u);
  const CliRun p = cli({"predict", "--graph", fixture("path3.txt"), "--rows", "2"});
  EXPECT_EQ(j["result"]["report"]["gin"]["rendered"], p.json()["result"]["predicted"]["rendered"]);
}

TEST(CliGin, SingleDeterminantIsPrincipal) {
  const CliRun r = cli({"gin", "--gens", fixture("single_det.txt")});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json gin = r.json()["result"]["report"]["gin"];
  ASSERT_EQ(gin["generators"].size(), 1u);
  EXPECT_EQ(gin["rendered"], "(x[1,1]*x[1,2])");
}

TEST(CliGin, FourTriplesNotSquarefree) {
  const CliRun r = cli({"gin", "--hypergraph", fixture("four_triples.txt"), "--rows", "3", "--samples", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json report = r.json()["result"]["report"];
  EXPECT_TRUE(report["stable"].get<bool>());
  EXPECT_FALSE(report["gin_squarefree"].get<bool>());
  EXPECT_TRUE(report["gin_borel_fixed"].is_null());
}

TEST(CliGin, MonomialsAreRowColumnPairs) {
  const CliRun r = cli({"gin", "--gens", fixture("single_det.txt")});
  const Json gen = r.json()["result"]["report"]["gin"]["generators"][0];
  EXPECT_EQ(gen, Json::parse("[[1,1],[1,2]]"));
}

TEST(CliCheckCs, ConnectedGraphsWithTwoRowsAreCertified) {
  for (const char* f : {"path3.txt", "single_edge.txt", "k4.txt"}) {
    const CliRun r = cli({"check-cs", "--graph", fixture(f), "--rows", "2"});
    EXPECT_EQ(r.code, 0) << f << r.err;
    EXPECT_EQ(r.json()["result"]["status"], "CS_CERTIFIED");
  }
}

TEST(CliCheckCs, ObstructionExitsTen) {
  const CliRun r = cli({"check-cs", "--hypergraph", fixture("obstruction_3_1_5.txt"), "--rows", "3"});
  EXPECT_EQ(r.code, 10) << r.err;
  const Json v = r.json()["result"]["verdict"];
  EXPECT_EQ(v["status"], "NOT_CS");
  // the witness is re-checkable from the report: some generator has a repeated variable
  bool repeated = false;
  for (const Json& g : v["witness"]["generators"])
    for (std::size_t k = 1; k < g.size(); ++k) repeated = repeated || g[k] == g[k - 1];
  EXPECT_TRUE(repeated);
}

TEST(CliCheckCs, RowGradingOfTwoDisjointEdges) {
  const CliRun r = cli({"check-cs", "--graph", fixture("two_edges.txt"), "--rows", "2", "--grading", "rows"});
  EXPECT_EQ(r.code, 10) << r.err;
  const CliRun cols = cli({"check-cs", "--graph", fixture("two_edges.txt"), "--rows", "2"});
  EXPECT_EQ(cols.code, 0) << cols.err;
}

TEST(CliCheckCs, CrossCheckPrimeReportsConsistency) {
  const CliRun r = cli({"check-cs", "--hypergraph", fixture("four_triples.txt"), "--rows", "3", "--samples", "1",
                     "--cross-check-prime", "1000003"});
  EXPECT_EQ(r.code, 10) << r.err;
  const Json j = r.json()["result"];
  EXPECT_TRUE(j["consistent"].get<bool>());
  EXPECT_EQ(j["cross_check"]["prime"], 1000003);
  EXPECT_EQ(j["verdict"]["prime"], 32003);
}

TEST(CliCheckCs, AllGraphsFansOut) {
  const CliRun r = cli({"check-cs", "--all-graphs", "3", "--rows", "2", "--samples", "1"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.json()["result"]["instances"].size(), 8u);
}

TEST(CliPredict, Examples) {
  const CliRun path = cli({"predict", "--graph", fixture("path3.txt"), "--rows", "2", "--verify"});
  EXPECT_EQ(path.code, 0) << path.err;
  EXPECT_EQ(path.json()["result"]["match"], "MATCH");
  const CliRun edge = cli({"predict", "--graph", fixture("single_edge.txt"), "--rows", "3"});
  EXPECT_EQ(edge.json()["result"]["predicted"]["generators"].size(), 3u);
  const CliRun empty = cli({"predict", "--graph", fixture("edgeless3.txt"), "--rows", "2"});
  EXPECT_EQ(empty.code, 0);
  EXPECT_TRUE(empty.json()["result"]["predicted"]["generators"].empty());
}

TEST(CliClassify, Examples) {
  const CliRun minors = cli({"classify", "--hypergraph", fixture("clusters_14.txt")});
  EXPECT_EQ(minors.json()["result"]["classification"]["classification"], "CS_BY_FOREST");
  const CliRun obs = cli({"classify", "--hypergraph", fixture("obstruction_3_1_5.txt"), "--verify"});
  EXPECT_EQ(obs.code, 0) << obs.err;
  EXPECT_EQ(obs.json()["result"]["classification"]["classification"], "NOT_CS_BY_CYCLE");
  EXPECT_TRUE(obs.json()["result"]["verification"]["agrees"].get<bool>());
}

TEST(CliClassify, FourTriplesAgreesWithCheckCs) {
  const CliRun r = cli({"classify", "--hypergraph", fixture("four_triples.txt"), "--verify", "--samples", "1"});
  EXPECT_EQ(r.code, 0) << r.err;
  const Json j = r.json()["result"];
  EXPECT_EQ(j["verification"]["check_cs"]["status"], "NOT_CS");
  // the four minors form a regular sequence whose supports carry a label cycle
  EXPECT_EQ(j["classification"]["classification"], "NOT_CS_BY_CYCLE");
  EXPECT_TRUE(j["classification"]["regular_sequence"]["certified"].get<bool>());
}

TEST(CliKpoly, SingleDeterminant) {
  const CliRun r = cli({"kpoly", "--gens", fixture("single_det.txt")});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json k = r.json()["result"]["k_polynomial"];
  EXPECT_EQ(k["terms"], Json::parse(R"([{"exponents":[0,0],"coeff":1},{"exponents":[1,1],"coeff":-1}])"));
}

TEST(CliPsi, ForwardRoundTrip) {
  const CliRun r = cli({"psi", "--t-ideal", "y1*y2", "--bounds", "2,2"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = r.json()["result"];
  EXPECT_TRUE(j["in_brad"].get<bool>());
  EXPECT_TRUE(j["roundtrip"].get<bool>());
  EXPECT_TRUE(j["jande"].get<bool>());
}

TEST(CliPsi, InverseRejectsNonBorel) {
  const CliRun r = cli({"psi", "--inverse", "--s-ideal", "x[2,1]*x[1,2]", "--blocks", "2,2"});
  EXPECT_EQ(r.code, 30) << r.err;
  EXPECT_FALSE(r.json()["result"]["in_brad"].get<bool>());
  const CliRun ok = cli({"psi", "--inverse", "--s-ideal", "x[1,1]*x[1,2]", "--blocks", "2,2"});
  EXPECT_EQ(ok.code, 0) << ok.err;
  EXPECT_EQ(ok.json()["result"]["psi_inverse"]["generators"], Json::parse("[[0,1],[1,0]]"));
}

TEST(CliReport, DeterministicBytes) {
  const std::vector<std::string> args{"check-cs", "--hypergraph", fixture("obstruction_3_3_9.txt"), "--rows", "3"};
  const CliRun a = cli(args), b = cli(args);
  EXPECT_EQ(a.out, b.out);
  const std::vector<std::string> all{"gin", "--all-graphs", "3", "--rows", "3", "--seed", "17"};
  EXPECT_EQ(cli(all).out, cli(all).out);
}

TEST(CliReport, ConfigEchoedVerbatim) {
  const CliRun r = cli({"gin", "--graph", fixture("path3.txt"), "--rows", "2", "--seed", "9", "--order", "lex"});
  const Json j = r.json();
  EXPECT_EQ(j["config"]["seed"], 9);
  EXPECT_EQ(j["config"]["order"], "lex");
  EXPECT_EQ(j["argv"][0], "gin");
  EXPECT_FALSE(j.contains("timings"));
  EXPECT_TRUE(cli({"gin", "--graph", fixture("path3.txt"), "--rows", "2", "--timings"}).json().contains("timings"));
}

TEST(CliReport, OutputFile) {
  const auto path = std::filesystem::temp_directory_path() / "gincs_cli_test_report.json";
  const CliRun r = cli({"kpoly", "--gens", fixture("single_det.txt"), "--output", path.string()});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  EXPECT_EQ(Json::parse(in)["command"], "kpoly");
  std::filesystem::remove(path);
}

TEST(CliErrors, UsageAndInputProblemsExitTwo) {
  EXPECT_EQ(cli({}).code, 2);
  EXPECT_EQ(cli({"frobnicate"}).code, 2);
  EXPECT_EQ(cli({"gin", "--graph", "/nonexistent/file.txt", "--rows", "2"}).code, 2);
  EXPECT_EQ(cli({"gin", "--graph", fixture("path3.txt"), "--rows", "-1"}).code, 2);
  EXPECT_EQ(cli({"gin", "--graph", fixture("path3.txt"), "--rows", "2", "--order", "grlex"}).code, 2);
  EXPECT_EQ(cli({"gin", "--graph", fixture("path3.txt"), "--rows", "2", "--prime", "32004"}).code, 2);
  EXPECT_EQ(cli({"gin", "--graph", fixture("path3.txt"), "--rows", "2", "--samples", "0"}).code, 2);
  EXPECT_EQ(cli({"gin", "--graph", fixture("path3.txt"), "--hypergraph", fixture("four_triples.txt"), "--rows", "2"}).code,
            2);
  EXPECT_EQ(cli({"check-cs", "--hypergraph", fixture("four_triples.txt"), "--rows", "2"}).code, 2);
  EXPECT_EQ(cli({"--help"}).code, 0);
}

TEST(CliErrors, TimeoutExitsTwenty) {
  const CliRun r = cli({"gin", "--hypergraph", fixture("windows_5x9.txt"), "--rows", "5", "--timeout", "0.05"});
  EXPECT_EQ(r.code, 20) << r.err;
  EXPECT_EQ(r.json()["status"], "TIMEOUT");
}

TEST(CliGensFile, RingInferredFromVariables) {
  const auto path = std::filesystem::temp_directory_path() / "gincs_cli_gens.txt";
  {
    std::ofstream f(path);
    f << "# two linear forms\nx[1,1] + x[2,1]\nx[1,3]\n";
  }
  const CliRun r = cli({"gin", "--gens", path.string(), "--samples", "1"});
  std::filesystem::remove(path);
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.json()["result"]["instance"]["blocks"], Json::parse("[2,1,1]"));
  EXPECT_EQ(r.json()["result"]["report"]["gin"]["rendered"], "(x[1,1], x[1,3])");
}

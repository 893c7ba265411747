#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "graver/enumerate.hpp"
#include "graver/error.hpp"
#include "graver/io.hpp"
#include "helpers.hpp"

using namespace graver;
using namespace graver::testing;

namespace {

const std::string kFixtures = GRAVER_FIXTURE_DIR;

std::vector<std::size_t> all_rows(const GraverTable& t) {
  std::vector<std::size_t> rows(t.rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = i;
  return rows;
}

struct CliRun {
  int code;
  std::string out;
};

CliRun run_cli(const std::string& args) {
  const std::string cmd = std::string(GRAVER_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed");
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

}  // namespace

TEST(ParseGraph, TextFourCycle) {
  const Graph g = load_graph(kFixtures + "/c4.txt");
  EXPECT_EQ(g.vertex_count(), 4);
  EXPECT_EQ(g.edge_count(), 4);
  EXPECT_EQ(g, builtin_fixture("c4"));
}

TEST(ParseGraph, JsonWorkedExample) {
  const Graph g = load_graph(kFixtures + "/ex416.json");
  EXPECT_EQ(g.vertex_count(), 10);
  EXPECT_EQ(g.edge_count(), 14);
  for (int e = 0; e < 14; ++e) EXPECT_EQ(g.label(e), "e" + std::to_string(e + 1));
  EXPECT_EQ(g, builtin_fixture("ex416"));
}

TEST(ParseGraph, Errors) {
  std::istringstream loop("vertices 2\n1 1\n");
  EXPECT_THROW(parse_graph(loop), GraphError);
  std::istringstream dup("vertices 2\n1 2\n2 1\n");
  EXPECT_THROW(parse_graph(dup), GraphError);
  std::istringstream bad("vertices 3\n1 2\n\n2 x\n");
  try {
    parse_graph(bad);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 4);
  }
  std::istringstream header("3 4\n");
  EXPECT_THROW(parse_graph(header), ParseError);
  EXPECT_THROW(parse_graph_json("{\"vertices\": 3, \"edges\": [[1]]}"), ParseError);
  EXPECT_THROW(parse_graph_json("{\"vertices\": 3"), ParseError);
  EXPECT_THROW(parse_graph_json(R"({"vertices": 3, "edges": [[1,2],[2,3]], "labels": ["a"]})"), ParseError);
  EXPECT_THROW(load_graph(kFixtures + "/missing.txt"), std::runtime_error);
}

TEST(ParseGraph, LabelsAndComments) {
  std::istringstream in("# triangle\nvertices 3\n1 2 a\n2 3 b  # second\n1 3 c\n");
  const Graph g = parse_graph(in);
  EXPECT_EQ(g.label(1), "b");
  EXPECT_EQ(g.edge_by_label("c"), 2);
  std::istringstream again(graph_to_text(g));
  EXPECT_EQ(parse_graph(again).label(2), "c");
  EXPECT_EQ(parse_graph_json(graph_to_json(g)).label(0), "a");
}

TEST(Serialize, JsonRoundTrip) {
  const Graph g = builtin_fixture("ex416");
  const GraverTable t = graver_basis(g);
  const auto rows = all_rows(t);
  const std::string text = table_json(g, t, rows, {"graver", "fixture:ex416", graph_digest(g)});
  const auto back = parse_table_json(text);
  ASSERT_EQ(back.size(), t.rows.size());
  for (std::size_t i = 0; i < back.size(); ++i) EXPECT_EQ(to_string(back[i]), to_string(t.rows[i].binomial));
  const auto j = nlohmann::json::parse(text);
  EXPECT_EQ(j["records"].size(), 28u);
  EXPECT_EQ(j["summary"]["minimal"], 16);
  EXPECT_EQ(j["records"][0]["label"], "B1");
}

TEST(Serialize, CsvSchema) {
  const Graph g = builtin_fixture("k4");
  const GraverTable t = graver_basis(g);
  const std::string csv = table_csv(g, t, all_rows(t));
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line,
            "label,binomial,degree,primitive,strongly_primitive,circuit,minimal,indispensable,fundamental,shape,"
            "circuit_kind,f4_count");
  std::getline(in, line);
  EXPECT_EQ(line, "B1,e1*e6 - e2*e5,2,true,true,true,true,false,false,even-cycle,even-cycle,2");
}

TEST(Serialize, DigestIsStable) {
  EXPECT_EQ(graph_digest(builtin_fixture("ex416")), graph_digest(load_graph(kFixtures + "/ex416.json")));
  EXPECT_NE(graph_digest(builtin_fixture("c4")), graph_digest(builtin_fixture("k4")));
  EXPECT_EQ(fnv1a64(""), 0xcbf29ce484222325ULL);
  EXPECT_EQ(fnv1a64("a"), 0xaf63dc4c8601ec8cULL);
}

TEST(Serialize, FormatNames) {
  EXPECT_EQ(parse_format("csv"), Format::Csv);
  EXPECT_THROW(parse_format("xml"), std::invalid_argument);
}

TEST(Cli, GraverJsonHasOneRecordPerElement) {
  const CliRun r = run_cli("graver " + kFixtures + "/ex416.json --format json");
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["records"].size(), j["summary"]["graver"].get<std::size_t>());
  EXPECT_EQ(j["records"].size(), 28u);
}

TEST(Cli, ClassifyFourCycle) {
  const CliRun r = run_cli("classify " + kFixtures + "/c4.txt --walk e1,e2,e3,e4 --format json");
  ASSERT_EQ(r.code, 0);
  const auto flags = nlohmann::json::parse(r.out)["flags"];
  for (const auto& [name, value] : flags.items()) EXPECT_TRUE(value.get<bool>()) << name;
}

TEST(Cli, OutputIsDeterministic) {
  const CliRun a = run_cli("graver fixture:ex416 --format csv");
  const CliRun b = run_cli("graver fixture:ex416 --format csv");
  EXPECT_EQ(a.out, b.out);
  EXPECT_FALSE(a.out.empty());
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run_cli("").code, 1);
  EXPECT_EQ(run_cli("graver").code, 1);
  EXPECT_EQ(run_cli("graver fixture:c4 --format xml").code, 1);
  EXPECT_EQ(run_cli("classify fixture:c4").code, 1);
  EXPECT_EQ(run_cli("graver " + kFixtures + "/missing.txt").code, 2);
  EXPECT_EQ(run_cli("classify fixture:c4 --walk e1,e3").code, 2);
  EXPECT_EQ(run_cli("graver fixture:ex416 --cap-supports 2").code, 3);
  EXPECT_EQ(run_cli("fixtures").code, 0);
}

TEST(Cli, VerifySmallSweep) {
  const CliRun r = run_cli("verify --max-edges 5 --random 10 --format json");
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["mismatches"], 0);
}

TEST(Cli, WritesToFile) {
  const std::string path = ::testing::TempDir() + "graver_cli_out.txt";
  ASSERT_EQ(run_cli("mu fixture:k4 --format csv --out " + path).code, 0);
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  EXPECT_EQ(ss.str(), "mu\n2\n");
}

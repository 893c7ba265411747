#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "graver/classify.hpp"
#include "graver/enumerate.hpp"
#include "graver/error.hpp"
#include "graver/fixtures.hpp"
#include "graver/io.hpp"
#include "graver/oracle.hpp"
#include "graver/verify.hpp"

namespace {

using namespace graver;

enum Exit { kOk = 0, kUsage = 1, kInput = 2, kCap = 3, kMismatch = 4 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string command;
  std::string input;
  std::string walk;
  std::string format = "human";
  std::string out;
  std::uint64_t seed = 20091;
  int max_edges = 7;
  int random_count = 200;
  int random_edges = 9;
  std::size_t cap_supports = EnumerationLimits{}.max_supports;
  std::optional<double> cap_seconds;
  bool timing = false;
};

EnumerationLimits limits_from(const Options& o) {
  EnumerationLimits lim;
  lim.max_supports = o.cap_supports;
  double seconds = 60.0;
  if (const char* env = std::getenv("GRAVER_CAP_SECONDS")) {
    try {
      seconds = std::stod(env);
    } catch (const std::exception&) {
      throw UsageError(std::string("GRAVER_CAP_SECONDS is not a number: ") + env);
    }
  }
  if (o.cap_seconds) seconds = *o.cap_seconds;
  if (seconds <= 0) throw UsageError("cap seconds must be positive");
  lim.time_budget = std::chrono::milliseconds(static_cast<long long>(seconds * 1000));
  return lim;
}

Graph read_graph(const std::string& input) {
  constexpr std::string_view prefix = "fixture:";
  Graph g = input.rfind(prefix, 0) == 0 ? builtin_fixture(std::string_view(input).substr(prefix.size()))
                                        : load_graph(input);
  if (!g.is_connected()) std::cerr << "warning: " << input << " is not connected\n";
  return g;
}

std::vector<std::size_t> select_rows(const GraverTable& t, const std::string& command) {
  std::vector<std::size_t> rows;
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    const ClassificationReport& r = t.rows[i].report;
    const bool keep = command == "graver" || (command == "circuits" && r.is_circuit) ||
                      (command == "minimal" && r.is_minimal) ||
                      (command == "indispensable" && r.is_indispensable) ||
                      (command == "fundamental" && r.is_fundamental);
    if (keep) rows.push_back(i);
  }
  return rows;
}

std::string run_table(const Options& o, Format fmt, const Graph& g, const RunInfo& info) {
  const GraverTable t = graver_basis(g, limits_from(o));
  const auto rows = select_rows(t, o.command);
  switch (fmt) {
    case Format::Json: return table_json(g, t, rows, info);
    case Format::Csv: return table_csv(g, t, rows);
    case Format::Human: break;
  }
  return table_human(g, t, rows, info);
}

std::string run_walk(const Options& o, Format fmt, const Graph& g, const RunInfo& info) {
  if (o.walk.empty()) throw UsageError(o.command + " needs --walk e1,e2,...");
  if (fmt == Format::Csv) throw UsageError("csv output is only available for table commands");
  const ClosedWalk w = ClosedWalk::parse(g, o.walk);
  const ClassificationReport r = classify_walk(g, w);
  if (fmt == Format::Json) return report_json(g, w, r, info);
  return o.command == "explain" ? explain_human(g, w, r) : report_human(g, w, r);
}

std::string run_generation(const Options& o, Format fmt, const Graph& g, const RunInfo& info) {
  const MinimalGeneration mg = minimal_generation(g);
  const bool mu = o.command == "mu";
  switch (fmt) {
    case Format::Json: return generation_json(mg, info);
    case Format::Csv:
      return mu ? "mu\n" + std::to_string(mg.mu) + "\n" : "systems_count\n" + std::to_string(mg.systems_count) + "\n";
    case Format::Human: break;
  }
  return mu ? generation_human(mg) : "minimal systems: " + std::to_string(mg.systems_count) + "\n";
}

std::string run_fixtures(Format fmt) {
  if (fmt == Format::Json) {
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    for (const std::string& name : fixture_names()) {
      const Graph g = builtin_fixture(name);
      j.push_back({{"name", name},
                   {"summary", fixture_summary(name)},
                   {"vertices", g.vertex_count()},
                   {"edges", g.edge_count()}});
    }
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  if (fmt == Format::Csv) os << "name,vertices,edges,summary\n";
  for (const std::string& name : fixture_names()) {
    const Graph g = builtin_fixture(name);
    if (fmt == Format::Csv)
      os << name << ',' << g.vertex_count() << ',' << g.edge_count() << ",\"" << fixture_summary(name) << "\"\n";
    else
      os << std::left << std::setw(24) << ("fixture:" + name) << std::right << std::setw(3) << g.vertex_count()
         << " vertices " << std::setw(3) << g.edge_count() << " edges  " << fixture_summary(name) << "\n";
  }
  return os.str();
}

std::string run_verify(const Options& o, Format fmt, int& exit_code) {
  if (fmt == Format::Csv) throw UsageError("csv output is only available for table commands");
  if (o.max_edges < 1 || o.max_edges > 12) throw UsageError("--max-edges must lie in 1..12");
  VerifyOptions vo;
  vo.limits = limits_from(o);
  SweepReport sweep = verify_sweep(o.max_edges, true, vo);
  VerifyOptions quick = vo;
  quick.oracles = false;
  quick.walk_sweep = false;
  const SweepReport random = verify_random(o.seed, o.random_count, o.random_edges, quick);
  for (const GraphCheck& c : random.failures) sweep.failures.push_back(c);
  for (const auto& [k, v] : random.mismatch_counts) sweep.mismatch_counts[k] += v;
  const std::size_t mismatches = sweep.mismatch_count();
  exit_code = mismatches == 0 ? kOk : kMismatch;

  if (fmt == Format::Json) {
    nlohmann::ordered_json j;
    j["command"] = "verify";
    j["max_edges"] = o.max_edges;
    j["seed"] = o.seed;
    j["graphs"] = sweep.graphs;
    j["elements"] = sweep.elements;
    j["walks"] = sweep.walks;
    j["flips"] = sweep.flips;
    j["random_graphs"] = random.graphs;
    j["random_elements"] = random.elements;
    j["mismatches"] = mismatches;
    j["mismatch_counts"] = sweep.mismatch_counts;
    j["findings"] = sweep.findings;
    if (!sweep.failures.empty()) {
      const GraphCheck& first = sweep.failures.front();
      nlohmann::ordered_json dump;
      dump["name"] = first.name;
      dump["graph"] = graph_to_text(first.graph);
      for (const Discrepancy& d : first.mismatches) dump["mismatches"].push_back({{"check", d.check}, {"detail", d.detail}});
      j["counterexample"] = dump;
    }
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "exhaustive: " << sweep.graphs << " graphs (up to " << o.max_edges << " edges, plus fixtures), "
     << sweep.elements << " primitive binomials, " << sweep.walks << " closed walks, " << sweep.flips
     << " F4 flips\n";
  os << "random: " << random.graphs << " graphs (seed " << o.seed << ", up to " << o.random_edges << " edges), "
     << random.elements << " primitive binomials\n";
  os << "mismatches: " << mismatches << "\n";
  for (const auto& [check, n] : sweep.mismatch_counts) os << "  " << check << ": " << n << "\n";
  for (const std::string& f : sweep.findings) os << "finding: " << f << "\n";
  if (!sweep.failures.empty()) {
    const GraphCheck& first = sweep.failures.front();
    os << "\nsmallest counterexample " << first.name << ":\n" << graph_to_text(first.graph);
    for (const Discrepancy& d : first.mismatches) os << "  " << d.check << ": " << d.detail << "\n";
  }
  return os.str();
}

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + o.out);
  f << text;
}

int dispatch(const Options& o) {
  const Format fmt = parse_format(o.format);
  const auto t0 = std::chrono::steady_clock::now();
  int code = kOk;
  std::string text;
  if (o.command == "fixtures") {
    text = run_fixtures(fmt);
  } else if (o.command == "verify") {
    text = run_verify(o, fmt, code);
  } else {
    const Graph g = read_graph(o.input);
    const RunInfo info{o.command, o.input, graph_digest(g)};
    if (o.command == "classify" || o.command == "explain")
      text = run_walk(o, fmt, g, info);
    else if (o.command == "mu" || o.command == "systems-count")
      text = run_generation(o, fmt, g, info);
    else
      text = run_table(o, fmt, g, info);
  }
  emit(o, text);
  if (o.timing)
    std::cerr << "elapsed " << std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count()
              << " s\n";
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Primitive binomials of toric ideals of graphs"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "human, json or csv")->check(CLI::IsMember({"human", "json", "csv"}));
    sub->add_option("--out", o.out, "write output to this file");
    sub->add_option("--cap-supports", o.cap_supports, "maximum number of candidate supports");
    sub->add_option("--cap-seconds", o.cap_seconds, "wall-clock budget in seconds (env GRAVER_CAP_SECONDS)");
    sub->add_flag("--timing", o.timing, "print elapsed time on stderr");
  };
  auto with_graph = [&](const std::string& name, const std::string& help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("graph", o.input, "graph file (text or JSON) or fixture:NAME")->required();
    common(sub);
    return sub;
  };

  with_graph("graver", "all primitive binomials with their classification");
  with_graph("circuits", "primitive binomials of minimal support");
  with_graph("minimal", "binomials in some minimal system of generators");
  with_graph("indispensable", "binomials in every minimal system of generators");
  with_graph("fundamental", "binomials generating the toric ideal of their induced subgraph");
  for (const char* name : {"classify", "explain"}) {
    CLI::App* sub = with_graph(name, std::string(name) == "classify" ? "classify one closed walk"
                                                                     : "step-by-step reasoning for one closed walk");
    sub->add_option("--walk", o.walk, "comma separated edge labels")->required();
  }
  with_graph("mu", "number of minimal generators");
  with_graph("systems-count", "number of distinct minimal systems of generators");
  CLI::App* verify = app.add_subcommand("verify", "cross-check the criteria against the definitional engines");
  common(verify);
  verify->add_option("--max-edges", o.max_edges, "exhaustive sweep bound")->capture_default_str();
  verify->add_option("--seed", o.seed, "seed of the random property sweep")->capture_default_str();
  verify->add_option("--random", o.random_count, "number of random graphs")->capture_default_str();
  verify->add_option("--random-edges", o.random_edges, "edge bound of the random graphs")->capture_default_str();
  CLI::App* fixtures = app.add_subcommand("fixtures", "list built-in graphs");
  fixtures->add_option("--format", o.format, "human, json or csv")->check(CLI::IsMember({"human", "json", "csv"}));
  fixtures->add_option("--out", o.out, "write output to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }
  o.command = app.get_subcommands().front()->get_name();

  try {
    return dispatch(o);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return kCap;
  } catch (const OracleBoundError& e) {
    std::cerr << "verification mismatch: " << e.what() << "\n";
    return kMismatch;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  }
}

#include "graver/io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <iomanip>
#include <istream>
#include <sstream>

#include <json.hpp>

#include "graver/error.hpp"

namespace graver {

using nlohmann::json;
using nlohmann::ordered_json;

Format parse_format(std::string_view name) {
  if (name == "human") return Format::Human;
  if (name == "json") return Format::Json;
  if (name == "csv") return Format::Csv;
  throw std::invalid_argument("unknown format '" + std::string(name) + "' (expected human, json or csv)");
}

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (start < i) out.push_back(line.substr(start, i - start));
  }
  return out;
}

int to_int(std::string_view tok, int line, const char* what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw ParseError(std::string("expected ") + what + ", got '" + std::string(tok) + "'", line);
  return value;
}

std::string edge_list(const Graph& g, std::span<const int> edges) {
  std::string out;
  for (int e : edges) {
    if (!out.empty()) out += ',';
    out += g.label(e);
  }
  return out;
}

std::string int_list(std::span<const int> xs) {
  std::string out;
  for (int x : xs) {
    if (!out.empty()) out += ' ';
    out += std::to_string(x);
  }
  return out;
}

ordered_json labels_json(const Graph& g, std::span<const int> edges) {
  ordered_json arr = ordered_json::array();
  for (int e : edges) arr.push_back(g.label(e));
  return arr;
}

ordered_json flags_json(const ClassificationReport& r) {
  return ordered_json{{"primitive", r.is_primitive},     {"strongly_primitive", r.is_strongly_primitive},
                      {"circuit", r.is_circuit},         {"minimal", r.is_minimal},
                      {"indispensable", r.is_indispensable}, {"fundamental", r.is_fundamental}};
}

ordered_json witness_json(const Graph& g, const Witness& w) {
  return ordered_json{{"violation", std::string(to_string(w.violation))},
                      {"description", std::string(describe(w.violation))},
                      {"edges", labels_json(g, w.edges)},
                      {"vertices", w.vertices},
                      {"blocks", w.blocks}};
}

ordered_json f4_json(const Graph& g, const F4& q) {
  return ordered_json{{"walk_edges", {g.label(q.walk_edge), g.label(q.other_walk_edge)}},
                      {"chords", {g.label(q.chord), g.label(q.other_chord)}},
                      {"side_a", q.side_a},
                      {"side_b", q.side_b}};
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

const char* yes_no(bool b) { return b ? "yes" : "no"; }

std::string flag_letters(const ClassificationReport& r) {
  std::string s;
  s += r.is_primitive ? 'P' : '-';
  s += r.is_strongly_primitive ? 'S' : '-';
  s += r.is_circuit ? 'C' : '-';
  s += r.is_minimal ? 'M' : '-';
  s += r.is_indispensable ? 'I' : '-';
  s += r.is_fundamental ? 'F' : '-';
  return s;
}

const Witness* witness_for(const ClassificationReport& r, std::string_view flag) {
  for (const FlagWitness& fw : r.witnesses)
    if (fw.flag == flag) return &fw.witness;
  return nullptr;
}

std::string witness_line(const Graph& g, const Witness& w) {
  std::string out = std::string(to_string(w.violation)) + ": " + std::string(describe(w.violation));
  if (!w.edges.empty()) out += "; edges " + edge_list(g, w.edges);
  if (!w.vertices.empty()) out += "; vertices " + int_list(w.vertices);
  if (!w.blocks.empty()) out += "; blocks " + int_list(w.blocks);
  return out;
}

}  // namespace

Graph parse_graph_text(std::istream& in) {
  std::string line;
  int line_no = 0;
  int vertices = -1;
  std::vector<Edge> edges;
  std::vector<std::string> labels;
  bool any_label = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    auto toks = split_ws(line);
    if (toks.empty()) continue;
    if (vertices < 0) {
      if (toks.size() != 2 || toks[0] != "vertices") throw ParseError("expected header 'vertices N'", line_no);
      vertices = to_int(toks[1], line_no, "a vertex count");
      if (vertices <= 0) throw ParseError("vertex count must be positive", line_no);
      continue;
    }
    if (toks.size() < 2 || toks.size() > 3) throw ParseError("expected 'u v [label]'", line_no);
    const int u = to_int(toks[0], line_no, "a vertex id");
    const int v = to_int(toks[1], line_no, "a vertex id");
    if (u == v) throw GraphError("line " + std::to_string(line_no) + ": loop at vertex " + std::to_string(u));
    edges.push_back({u, v});
    if (toks.size() == 3) {
      labels.emplace_back(toks[2]);
      any_label = true;
    } else {
      labels.push_back(default_edge_label(static_cast<int>(edges.size()) - 1));
    }
  }
  if (vertices < 0) throw ParseError("empty graph file: missing 'vertices N' header", line_no);
  if (edges.empty()) throw GraphError("graph has no edges");
  return Graph(vertices, std::move(edges), any_label ? std::move(labels) : std::vector<std::string>{});
}

Graph parse_graph_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  try {
    const int n = j.at("vertices").get<int>();
    std::vector<Edge> edges;
    for (const auto& pair : j.at("edges")) {
      if (!pair.is_array() || pair.size() != 2) throw ParseError("each edge must be a [u, v] pair");
      edges.push_back({pair[0].get<int>(), pair[1].get<int>()});
    }
    if (edges.empty()) throw GraphError("graph has no edges");
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = j["labels"].get<std::vector<std::string>>();
    if (!labels.empty() && labels.size() != edges.size())
      throw ParseError("labels must match the number of edges");
    return Graph(n, std::move(edges), std::move(labels));
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed graph JSON: ") + e.what());
  }
}

Graph parse_graph(std::istream& in) {
  std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  auto first = content.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && content[first] == '{') return parse_graph_json(content);
  std::istringstream ss(content);
  return parse_graph_text(ss);
}

Graph load_graph(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return parse_graph(in);
}

std::string graph_to_text(const Graph& g) {
  std::string out = "vertices " + std::to_string(g.vertex_count()) + "\n";
  const bool labelled = !g.has_default_labels();
  for (int e = 0; e < g.edge_count(); ++e) {
    out += std::to_string(g.edge(e).u) + " " + std::to_string(g.edge(e).v);
    if (labelled) out += " " + g.label(e);
    out += "\n";
  }
  return out;
}

std::string graph_to_json(const Graph& g) {
  // One edge pair per line keeps the file readable.
  std::string out = "{\n  \"vertices\": " + std::to_string(g.vertex_count()) + ",\n  \"edges\": [";
  for (int e = 0; e < g.edge_count(); ++e)
    out += std::string(e ? "," : "") + "\n    [" + std::to_string(g.edge(e).u) + ", " + std::to_string(g.edge(e).v) + "]";
  out += "\n  ]";
  if (!g.has_default_labels()) {
    out += ",\n  \"labels\": [";
    for (int e = 0; e < g.edge_count(); ++e) out += std::string(e ? ", " : "") + json(g.label(e)).dump();
    out += "]";
  }
  return out + "\n}\n";
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string graph_digest(const Graph& g) {
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << fnv1a64(graph_to_text(g));
  return os.str();
}

std::string table_json(const Graph& g, const GraverTable& table, std::span<const std::size_t> rows,
                       const RunInfo& info) {
  ordered_json j;
  j["command"] = info.command;
  j["input"] = info.input;
  j["digest"] = info.digest;
  j["cap_status"] = "ok";
  j["vertices"] = g.vertex_count();
  j["edge_count"] = g.edge_count();
  const TableSummary& s = table.summary;
  j["summary"] = {{"graver", s.graver},         {"circuits", s.circuits},
                  {"strongly_primitive", s.strongly_primitive}, {"minimal", s.minimal},
                  {"indispensable", s.indispensable}, {"fundamental", s.fundamental},
                  {"records", rows.size()}};
  ordered_json records = ordered_json::array();
  for (std::size_t i : rows) {
    const GraverRow& row = table.rows.at(i);
    ordered_json rec;
    rec["label"] = "B" + std::to_string(i + 1);
    rec["binomial"] = to_string(row.binomial);
    rec["degree"] = row.binomial.degree(g).counts;
    rec["total_degree"] = row.binomial.total_degree();
    rec["walk"] = row.walk.to_string(g);
    rec["flags"] = flags_json(row.report);
    rec["shape"] = std::string(to_string(row.report.shape));
    rec["circuit_kind"] = std::string(to_string(row.report.circuit));
    rec["f4_count"] = row.report.f4s.size();
    rec["f4_class_size"] = row.f4_class_size;
    ordered_json wit = ordered_json::object();
    for (const FlagWitness& fw : row.report.witnesses) wit[fw.flag] = witness_json(g, fw.witness);
    rec["witnesses"] = wit;
    records.push_back(std::move(rec));
  }
  j["records"] = std::move(records);
  j["findings"] = table.findings;
  return dump(j);
}

std::string table_csv(const Graph& g, const GraverTable& table, std::span<const std::size_t> rows) {
  std::string out =
      "label,binomial,degree,primitive,strongly_primitive,circuit,minimal,indispensable,fundamental,shape,"
      "circuit_kind,f4_count\n";
  auto b = [](bool x) { return x ? "true" : "false"; };
  for (std::size_t i : rows) {
    const GraverRow& row = table.rows.at(i);
    const ClassificationReport& r = row.report;
    std::ostringstream line;
    line << 'B' << (i + 1) << ',' << to_string(row.binomial) << ',' << row.binomial.total_degree() << ','
         << b(r.is_primitive) << ',' << b(r.is_strongly_primitive) << ',' << b(r.is_circuit) << ','
         << b(r.is_minimal) << ',' << b(r.is_indispensable) << ',' << b(r.is_fundamental) << ','
         << to_string(r.shape) << ',' << to_string(r.circuit) << ',' << r.f4s.size() << '\n';
    out += line.str();
  }
  (void)g;
  return out;
}

std::string table_human(const Graph& g, const GraverTable& table, std::span<const std::size_t> rows,
                        const RunInfo& info) {
  std::ostringstream os;
  const TableSummary& s = table.summary;
  os << info.command << ": " << info.input << " (" << g.vertex_count() << " vertices, " << g.edge_count()
     << " edges, digest " << info.digest << ")\n";
  os << "graver " << s.graver << ", circuits " << s.circuits << ", minimal " << s.minimal << ", indispensable "
     << s.indispensable << ", fundamental " << s.fundamental << "; showing " << rows.size() << "\n";
  os << "flags: P primitive, S strongly primitive, C circuit, M minimal, I indispensable, F fundamental\n\n";
  std::size_t width = 0;
  for (std::size_t i : rows) width = std::max(width, to_string(table.rows.at(i).binomial).size());
  for (std::size_t i : rows) {
    const GraverRow& row = table.rows.at(i);
    std::string label = "B" + std::to_string(i + 1);
    os << std::left << std::setw(5) << label << std::setw(static_cast<int>(width) + 2) << to_string(row.binomial)
       << flag_letters(row.report) << "  " << to_string(row.report.shape);
    if (!row.report.f4s.empty()) os << "  F4s " << row.report.f4s.size();
    if (row.f4_class_size > 1) os << "  class " << row.f4_class_size;
    os << "\n";
  }
  for (const std::string& f : table.findings) os << "finding: " << f << "\n";
  return os.str();
}

std::vector<Binomial> parse_table_json(std::string_view text) {
  try {
    const json j = json::parse(text);
    const auto m = j.at("edge_count").get<std::size_t>();
    std::vector<Binomial> out;
    for (const auto& rec : j.at("records")) out.push_back(parse_binomial(rec.at("binomial").get<std::string>(), m).canonical());
    return out;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed table JSON: ") + e.what());
  }
}

std::string report_json(const Graph& g, const ClosedWalk& w, const ClassificationReport& r, const RunInfo& info) {
  ordered_json j;
  j["command"] = info.command;
  j["input"] = info.input;
  j["digest"] = info.digest;
  j["walk"] = w.to_string(g);
  j["length"] = w.length();
  if (w.is_even() && is_irreducible(w)) j["binomial"] = to_string(binomial_of(g, w));
  j["flags"] = flags_json(r);
  j["shape"] = std::string(to_string(r.shape));
  j["circuit_kind"] = std::string(to_string(r.circuit));
  ordered_json sinks = ordered_json::array();
  for (const Sink& s : r.sinks) sinks.push_back({{"vertex", s.vertex}, {"block", s.block}});
  j["sinks"] = std::move(sinks);
  ordered_json chords = ordered_json::array();
  for (const Chord& c : r.chords)
    chords.push_back({{"edge", g.label(c.edge)}, {"endpoints", {c.u, c.v}}, {"kind", std::string(to_string(c.kind))},
                      {"positions", {c.first, c.second}}});
  j["chords"] = std::move(chords);
  ordered_json f4 = ordered_json::array();
  for (const F4& q : r.f4s) f4.push_back(f4_json(g, q));
  j["f4s"] = std::move(f4);
  ordered_json wit = ordered_json::object();
  for (const FlagWitness& fw : r.witnesses) wit[fw.flag] = witness_json(g, fw.witness);
  j["witnesses"] = std::move(wit);
  return dump(j);
}

std::string report_human(const Graph& g, const ClosedWalk& w, const ClassificationReport& r) {
  std::ostringstream os;
  os << "walk " << w.to_string(g) << " (length " << w.length() << ")\n";
  if (w.is_even() && is_irreducible(w)) os << "binomial " << to_string(binomial_of(g, w)) << "\n";
  os << "primitive " << yes_no(r.is_primitive) << "\n"
     << "strongly primitive " << yes_no(r.is_strongly_primitive) << "\n"
     << "circuit " << yes_no(r.is_circuit) << " (" << to_string(r.circuit) << ")\n"
     << "minimal " << yes_no(r.is_minimal) << "\n"
     << "indispensable " << yes_no(r.is_indispensable) << "\n"
     << "fundamental " << yes_no(r.is_fundamental) << "\n"
     << "shape " << to_string(r.shape) << "\n";
  for (const Chord& c : r.chords)
    os << "chord " << g.label(c.edge) << " {" << c.u << "," << c.v << "} " << to_string(c.kind) << "\n";
  for (const F4& q : r.f4s)
    os << "F4 (" << g.label(q.walk_edge) << "," << g.label(q.chord) << "," << g.label(q.other_walk_edge) << ","
       << g.label(q.other_chord) << ")\n";
  for (const FlagWitness& fw : r.witnesses) os << "  " << fw.flag << ": " << witness_line(g, fw.witness) << "\n";
  return os.str();
}

std::string explain_human(const Graph& g, const ClosedWalk& w, const ClassificationReport& r) {
  std::ostringstream os;
  os << "walk " << w.to_string(g) << ", length " << w.length() << "\n";
  if (!w.is_even()) {
    os << "odd length: an odd closed walk defines no binomial; every flag is false\n";
    return os.str();
  }
  const SignPartition sp = sign_partition(w);
  os << "odd positions  " << edge_list(g, sp.plus) << "\n";
  os << "even positions " << edge_list(g, sp.minus) << "\n";
  const BlockDecomposition wb = walk_blocks(g, w);
  for (std::size_t b = 0; b < wb.size(); ++b)
    os << "block " << b << ": " << edge_list(g, wb.blocks[b])
       << (wb.is_cycle(b) ? " (cycle)" : wb.is_single_edge(b) ? " (cut edge)" : " (neither cycle nor cut edge)") << "\n";
  os << "cut vertices: " << (wb.cut_vertices.empty() ? "none" : int_list(wb.cut_vertices)) << "\n";
  os << "sinks:";
  if (r.sinks.empty()) os << " none";
  for (const Sink& s : r.sinks) os << " " << s.vertex << "@" << s.block;
  os << "\n\n";

  auto verdict = [&](const char* flag, bool holds, const char* rule) {
    os << flag << ": " << yes_no(holds) << "\n    rule: " << rule << "\n";
    if (const Witness* wit = witness_for(r, flag); wit && !holds) os << "    fails: " << witness_line(g, *wit) << "\n";
  };
  verdict("primitive", r.is_primitive,
          "blocks are cycles or cut edges; repeated edges are doubled cut edges; each cut vertex lies in two "
          "blocks and sinks in both");
  if (!r.is_primitive) return os.str();
  os << "    shape: " << to_string(r.shape) << "\n";
  verdict("strongly_primitive", r.is_strongly_primitive, "no cyclic block holds two adjacent sinks");
  verdict("circuit", r.is_circuit,
          "an even cycle, two odd cycles sharing one vertex, or two disjoint odd cycles joined by a path");
  os << "\nchords:";
  if (r.chords.empty()) os << " none";
  os << "\n";
  for (const Chord& c : r.chords) {
    os << "  " << g.label(c.edge) << " {" << c.u << "," << c.v << "} " << to_string(c.kind);
    if (c.kind != ChordKind::Bridge) os << ", breaks the walk at positions " << c.first << " and " << c.second;
    os << "\n";
  }
  for (const F4& q : r.f4s)
    os << "  F4 (" << g.label(q.walk_edge) << "," << g.label(q.chord) << "," << g.label(q.other_walk_edge) << ","
       << g.label(q.other_chord) << ") splits the walk into {" << int_list(q.side_a) << "} and {"
       << int_list(q.side_b) << "}\n";
  os << "\n";
  verdict("minimal", r.is_minimal,
          "strongly primitive, every chord odd, no pair crossing strongly effectively, no chord crossing an F4");
  verdict("indispensable", r.is_indispensable,
          "strongly primitive, every chord odd, no pair of chords crossing effectively");
  verdict("fundamental", r.is_fundamental,
          "a circuit without chords, or an even cycle with no even chord and at most one odd chord");
  return os.str();
}

std::string generation_json(const MinimalGeneration& mg, const RunInfo& info) {
  ordered_json j;
  j["command"] = info.command;
  j["input"] = info.input;
  j["digest"] = info.digest;
  j["mu"] = mg.mu;
  j["systems_count"] = mg.systems_count;
  ordered_json minimal = ordered_json::array(), indisp = ordered_json::array(), gens = ordered_json::array();
  for (const Binomial& b : mg.minimal_set) minimal.push_back(to_string(b));
  for (const Binomial& b : mg.indispensable_set) indisp.push_back(to_string(b));
  for (const Binomial& b : mg.generators) gens.push_back(to_string(b));
  j["minimal"] = std::move(minimal);
  j["indispensable"] = std::move(indisp);
  j["generators"] = std::move(gens);
  ordered_json fibers = ordered_json::array();
  for (const FiberRecord& f : mg.fibers)
    fibers.push_back({{"degree", f.degree.counts}, {"size", f.monomials.size()}, {"components", f.component_count}});
  j["fibers"] = std::move(fibers);
  return dump(j);
}

std::string generation_human(const MinimalGeneration& mg) {
  std::ostringstream os;
  os << "minimal generators: " << mg.mu << "\n";
  os << "minimal systems: " << mg.systems_count << "\n";
  os << "minimal binomials: " << mg.minimal_set.size() << "\n";
  for (const Binomial& b : mg.minimal_set) os << "  " << to_string(b) << "\n";
  os << "indispensable binomials: " << mg.indispensable_set.size() << "\n";
  for (const Binomial& b : mg.indispensable_set) os << "  " << to_string(b) << "\n";
  os << "fibers with several components:\n";
  for (const FiberRecord& f : mg.fibers)
    if (f.component_count > 1) {
      std::vector<int> d = f.degree.counts;
      os << "  (" << int_list(d) << "): " << f.monomials.size() << " monomials, " << f.component_count
         << " components\n";
    }
  return os.str();
}

}  // namespace graver

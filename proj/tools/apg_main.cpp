#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "apg/classify.hpp"
#include "apg/constructive.hpp"
#include "apg/json_io.hpp"
#include "apg/oracle.hpp"
#include "apg/verify.hpp"

namespace {

enum Exit { kOk = 0, kFailure = 1, kInvalid = 2, kCap = 3, kUnclassifiable = 4 };

std::string slurp(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path);
  if (!in) throw apg::GraphError("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), {}};
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw apg::Error("cannot write " + path);
  out << text;
}

apg::CornerSet corner_set(const std::vector<std::string>& names) {
  apg::CornerSet c;
  for (const auto& s : names) {
    if (s == "ab") c.ab = true;
    else if (s == "bc") c.bc = true;
    else if (s == "ac") c.ac = true;
    else throw apg::InvalidSpec("unknown corner edge '" + s + "' (ab, bc, ac)");
  }
  return c;
}

struct GenOptions {
  std::string family;
  int k = 0, n = 0, p = 1, q = 1, r = 1;
  std::vector<int> remove_s, remove_t;
  std::vector<std::string> extra, deleted;
  std::string out;
  bool dot = false;
  bool allow_degenerate = false;
};

apg::FamilySpec spec_from(const GenOptions& o) {
  if (o.family == "mobius") return apg::MobiusSpec{o.k};
  if (o.family == "wheel") return apg::WheelSpec{o.n};
  if (o.family == "bicycle")
    return apg::BicycleSpec{o.n, {o.remove_s.begin(), o.remove_s.end()}, {o.remove_t.begin(), o.remove_t.end()}};
  if (o.family == "a") return apg::a_graph_spec(o.n);
  if (o.family == "k33") return apg::K33ChainSpec{corner_set(o.extra)};
  if (o.family == "h1" || o.family == "h2")
    return apg::HSpec{o.family == "h1" ? apg::HFamily::h1 : apg::HFamily::h2, o.p, o.q, o.r, corner_set(o.deleted)};
  throw apg::InvalidSpec("unknown family '" + o.family + "'");
}

int cmd_gen(const GenOptions& o) {
  const auto spec = spec_from(o);
  const auto inst = std::holds_alternative<apg::BicycleSpec>(spec)
                        ? apg::gen_bicycle(std::get<apg::BicycleSpec>(spec), !o.allow_degenerate)
                        : apg::generate(spec);
  for (const auto& w : inst.warnings) std::cerr << "warning: " << w << "\n";
  const auto edges = apg::to_edge_list(inst.graph);
  if (o.out.empty()) {
    std::cout << edges;
    if (o.dot) std::cerr << apg::to_dot(inst);
    return kOk;
  }
  write_file(o.out + ".edges", edges);
  write_file(o.out + ".roles.json", apg::roles_to_json(inst).dump(2) + "\n");
  if (o.dot) write_file(o.out + ".dot", apg::to_dot(inst));
  std::cerr << "wrote " << o.out << ".edges (" << inst.graph.order() << " vertices, " << inst.graph.size()
            << " edges)\n";
  return kOk;
}

int cmd_spectrum(const std::string& input, const std::string& method, bool witnesses) {
  const auto g = apg::parse_edge_list(slurp(input));
  apg::json out = {{"schema", apg::kJsonSchema}, {"method", method}};
  std::optional<apg::CycleSpectrum> oracle;
  std::optional<apg::CycleSpectrum> built;
  if (method == "oracle" || method == "both") {
    oracle = apg::cycle_spectrum(g, witnesses);
    out["oracle"] = apg::to_json(*oracle, witnesses);
  }
  if (method == "constructive" || method == "both") {
    const auto c = apg::classify(g);
    if (!c.matched_spec)
      throw apg::Unclassifiable("graph is not in a classified family (gate: " + apg::to_string(c.gate) + ")");
    auto spectrum = apg::constructive_spectrum(*c.matched_spec);
    // Witnesses live on the generated labelling; pull them back onto the input.
    std::vector<int> back(c.iso_map->size(), 0);
    for (std::size_t v = 1; v < c.iso_map->size(); ++v) back[static_cast<std::size_t>((*c.iso_map)[v])] = static_cast<int>(v);
    for (auto& [len, seq] : spectrum.witnesses)
      for (int& v : seq) v = back[static_cast<std::size_t>(v)];
    out["spec"] = apg::to_json(*c.matched_spec);
    out["constructive"] = apg::to_json(spectrum, witnesses);
    built = std::move(spectrum);
  }
  int rc = kOk;
  if (oracle && built) {
    const bool agree = oracle->lengths == built->lengths;
    out["agree"] = agree;
    if (!agree) rc = kFailure;
  }
  std::cout << out.dump(2) << "\n";
  return rc;
}

int cmd_verify(const std::string& suite, int max_n, const std::string& counterexample, const std::string& fault) {
  apg::VerifyConfig cfg;
  cfg.max_n = max_n;
  cfg.fault = apg::parse_fault(fault);
  const auto ids = apg::suite_criteria(suite);
  const int cap = apg::oracle_cap_from_env();
  if (max_n > cap)
    throw apg::OracleCapExceeded("--max-n " + std::to_string(max_n) + " exceeds oracle cap " + std::to_string(cap));
  bool all = true;
  bool wrote = false;
  for (int id : ids) {
    const auto r = apg::run_criterion(id, cfg);
    std::cout << (r.passed ? "PASS" : "FAIL") << "  " << r.id << "  " << r.title << ": " << r.detail << "\n"
              << std::flush;
    if (!r.passed) {
      all = false;
      if (r.counterexample && !wrote) {
        write_file(counterexample, *r.counterexample);
        std::cerr << "counterexample written to " << counterexample << "\n";
        wrote = true;
      }
    }
  }
  return all ? kOk : kFailure;
}

int cmd_classify(const std::string& input) {
  const auto g = apg::parse_edge_list(slurp(input));
  std::cout << apg::to_json(apg::classify(g)).dump(2) << "\n";
  return kOk;
}

int cmd_export(const std::string& input, const std::string& format) {
  const auto g = apg::parse_edge_list(slurp(input));
  if (format == "dot") {
    std::ostringstream os;
    os << "graph G {\n";
    for (int v = 1; v <= g.order(); ++v) os << "  " << v << ";\n";
    for (const auto& e : g.edges()) os << "  " << e.u << " -- " << e.v << ";\n";
    os << "}\n";
    std::cout << os.str();
  } else {
    apg::json edges = apg::json::array();
    for (const auto& e : g.edges()) edges.push_back({e.u, e.v});
    std::cout << apg::json{{"schema", apg::kJsonSchema}, {"n", g.order()}, {"m", g.size()}, {"edges", edges}}.dump(2)
              << "\n";
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Almost-planar graph toolkit: generators, cycle spectra, classification"};
  app.require_subcommand(1);

  GenOptions gen;
  auto* g = app.add_subcommand("gen", "Generate a family instance");
  g->add_option("--family", gen.family, "mobius | bicycle | a | wheel | k33 | h1 | h2")->required();
  g->add_option("--k", gen.k, "Mobius rungs (2k vertices)");
  g->add_option("--n", gen.n, "Vertex count (bicycle, a, wheel)");
  g->add_option("--remove-s", gen.remove_s, "Removed s-spokes, e.g. 2,4")->delimiter(',');
  g->add_option("--remove-t", gen.remove_t, "Removed t-spokes")->delimiter(',');
  g->add_option("--extra", gen.extra, "K3,3 corner edges: ab,bc,ac")->delimiter(',');
  g->add_option("--p", gen.p, "First fan length");
  g->add_option("--q", gen.q, "Second fan length");
  g->add_option("--r", gen.r, "Third fan length");
  g->add_option("--delete", gen.deleted, "Deleted corner edges: ab,bc,ac")->delimiter(',');
  g->add_option("--out", gen.out, "Output prefix (writes .edges, .roles.json, .dot)");
  g->add_flag("--dot", gen.dot, "Also emit Graphviz DOT");
  g->add_flag("--allow-degenerate", gen.allow_degenerate, "Permit rim vertices with no spoke (warning only)");

  std::string input = "-";
  std::string method = "oracle";
  bool witnesses = false;
  auto* s = app.add_subcommand("spectrum", "Cycle spectrum of an edge-list graph");
  s->add_option("input", input, "Edge-list file, - for stdin");
  s->add_option("--method", method, "oracle | constructive | both")
      ->check(CLI::IsMember({"oracle", "constructive", "both"}));
  s->add_flag("--witnesses", witnesses, "Include one cycle per length");

  std::string suite = "all";
  int max_n = 14;
  std::string counterexample = "counterexample.edges";
  std::string fault;
  auto* v = app.add_subcommand("verify", "Run the acceptance suites");
  v->add_option("--suite", suite, "mobius | bicycle | h | theorems | all")
      ->check(CLI::IsMember({"mobius", "bicycle", "h", "theorems", "all"}));
  v->add_option("--max-n", max_n, "Largest instance size")->check(CLI::Range(5, apg::kHardOracleCap));
  v->add_option("--counterexample", counterexample, "Where to write the first failing graph");
  v->add_option("--inject-fault", fault, "Corrupt a generator to exercise failure reporting")->group("");

  auto* c = app.add_subcommand("classify", "Gate and family match for an edge-list graph");
  c->add_option("input", input, "Edge-list file, - for stdin");

  std::string format = "dot";
  auto* x = app.add_subcommand("export", "Convert an edge list to DOT or JSON");
  x->add_option("input", input, "Edge-list file, - for stdin");
  x->add_option("--format", format, "dot | json")->check(CLI::IsMember({"dot", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kInvalid;
  }

  try {
    if (g->parsed()) return cmd_gen(gen);
    if (s->parsed()) return cmd_spectrum(input, method, witnesses);
    if (v->parsed()) return cmd_verify(suite, max_n, counterexample, fault);
    if (c->parsed()) return cmd_classify(input);
    if (x->parsed()) return cmd_export(input, format);
  } catch (const apg::OracleCapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kCap;
  } catch (const apg::Unclassifiable& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUnclassifiable;
  } catch (const apg::FalsificationError& e) {
    std::cerr << "falsified: " << e.what() << "\n";
    return kFailure;
  } catch (const apg::ConstructionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUnclassifiable;
  } catch (const apg::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  }
  return kInvalid;
}

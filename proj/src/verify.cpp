#include "apg/verify.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <random>
#include <sstream>

#include "apg/classify.hpp"
#include "apg/connectivity.hpp"
#include "apg/constructive.hpp"
#include "apg/isomorphism.hpp"
#include "apg/oracle.hpp"
#include "apg/planarity.hpp"

namespace apg {

Fault parse_fault(const std::string& name) {
  if (name.empty() || name == "none") return Fault::none;
  if (name == "mobius-chord") return Fault::mobius_chord;
  if (name == "bicycle-spoke") return Fault::bicycle_spoke;
  throw InvalidSpec("unknown fault '" + name + "'");
}

std::vector<int> suite_criteria(const std::string& suite) {
  if (suite == "mobius") return {1};
  if (suite == "bicycle") return {2, 3, 4, 8};
  if (suite == "h") return {5};
  if (suite == "theorems") return {6, 7, 9, 10};
  if (suite == "all") return {1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
  throw InvalidSpec("unknown suite '" + suite + "' (mobius, bicycle, h, theorems, all)");
}

namespace {

std::string set_text(const std::set<int>& s) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (int v : s) {
    os << (first ? "" : ",") << v;
    first = false;
  }
  os << "}";
  return os.str();
}

class Tally {
 public:
  Tally(int id, std::string title) { result_.id = id, result_.title = std::move(title); }

  bool expect(bool ok, const std::string& what, const Graph* g = nullptr) {
    ++checks_;
    if (ok) return true;
    ++failures_;
    if (failures_ == 1) {
      first_failure_ = what;
      if (g) result_.counterexample = to_edge_list(*g);
    }
    return false;
  }

  CriterionResult finish(const std::string& summary) {
    result_.passed = failures_ == 0;
    std::ostringstream os;
    if (result_.passed)
      os << summary << " (" << checks_ << " checks)";
    else
      os << failures_ << " of " << checks_ << " checks failed; first: " << first_failure_;
    result_.detail = os.str();
    return result_;
  }

 private:
  CriterionResult result_;
  int checks_ = 0;
  int failures_ = 0;
  std::string first_failure_;
};

LabeledInstance mobius(int k, const VerifyConfig& cfg) {
  auto inst = gen_mobius(k);
  if (cfg.fault == Fault::mobius_chord) inst.graph = add_edge(inst.graph, make_edge(1, 3));
  return inst;
}

LabeledInstance full_bicycle(int n, const VerifyConfig& cfg) {
  auto inst = gen_bicycle(BicycleSpec{n, {}, {}});
  if (cfg.fault == Fault::bicycle_spoke) inst.graph = delete_edge(inst.graph, make_edge(n, 1));
  return inst;
}

bool three_connected_nonplanar(const Graph& g) { return is_k_connected(g, 3) && !is_planar(g); }

// Builders validate internally; a throw means no witness.
template <class F>
bool witness_ok(F&& build, const Graph& g, int length) {
  try {
    return static_cast<bool>(validate_cycle(g, build(), length));
  } catch (const Error&) {
    return false;
  }
}

CriterionResult mobius_spectra(const VerifyConfig& cfg) {
  Tally t(1, "Mobius ladder spectra V_2k, k = 3..7");
  for (int k = 3; k <= 7 && 2 * k <= cfg.max_n; ++k) {
    const auto inst = mobius(k, cfg);
    const auto got = cycle_spectrum(inst.graph).lengths;
    const auto want = predict_spectrum(MobiusSpec{k}).lengths;
    t.expect(got == want, "V" + std::to_string(2 * k) + " spectrum " + set_text(got) + ", expected " + set_text(want),
             &inst.graph);
  }
  if (cfg.max_n >= 8) {
    const auto inst = mobius(4, cfg);
    t.expect(cycle_spectrum(inst.graph).lengths == std::set<int>{4, 5, 6, 7, 8}, "V8 spectrum is not {4..8}",
             &inst.graph);
  }
  return t.finish("oracle spectra equal the predicted sets");
}

CriterionResult four_connected(const VerifyConfig& cfg) {
  Tally t(2, "B_n, n = 5..9: 4-connected, pancyclic, Hamiltonian-connected");
  for (int n = 5; n <= 9 && n <= cfg.max_n; ++n) {
    const auto inst = full_bicycle(n, cfg);
    const Graph& g = inst.graph;
    const std::string name = "B" + std::to_string(n);
    t.expect(is_k_connected(g, 4), name + " is not 4-connected", &g);
    t.expect(is_pancyclic(g), name + " is not pancyclic", &g);
    const auto hc = is_hamiltonian_connected(g);
    t.expect(hc.connected, name + " is not Hamiltonian-connected", &g);
    for (int len = 3; len <= n; ++len)
      t.expect(witness_ok([&] { return bicycle_cycle(inst, len); }, g, len),
               name + " bicycle_cycle(" + std::to_string(len) + ") invalid", &g);
    for (int u = 1; u <= n; ++u)
      for (int v = 1; v <= n; ++v) {
        if (u == v) continue;
        bool ok = false;
        try {
          ok = static_cast<bool>(validate_path(g, bicycle_ham_path(inst, u, v), n));
        } catch (const Error&) {
        }
        t.expect(ok, name + " bicycle_ham_path(" + std::to_string(u) + "," + std::to_string(v) + ") invalid", &g);
      }
  }
  return t.finish("oracle and builders agree");
}

CriterionResult b_graph_hamiltonian(const VerifyConfig& cfg) {
  Tally t(3, "3-connected non-planar B_n minors, n = 6..10, are Hamiltonian");
  int graphs = 0;
  for (int n = 6; n <= 10 && n <= cfg.max_n; ++n) {
    for (const auto& spec : enumerate_b_minors(n, true, true)) {
      ++graphs;
      auto inst = gen_bicycle(spec);
      if (cfg.fault == Fault::bicycle_spoke && spec.removed_s.empty() && spec.removed_t.empty())
        inst.graph = delete_edge(inst.graph, make_edge(n, 1));
      const Graph& g = inst.graph;
      t.expect(is_hamiltonian(g), describe(spec) + " has no Hamiltonian cycle", &g);
      t.expect(witness_ok([&] { return b_graph_ham_cycle(inst); }, g, n),
               describe(spec) + " b_graph_ham_cycle invalid", &g);
    }
  }
  return t.finish(std::to_string(graphs) + " isomorphism classes Hamiltonian");
}

CriterionResult a_dichotomy(const VerifyConfig& cfg) {
  Tally t(4, "A_n: even n bipartite spectrum, odd n pancyclic, one added spoke pancyclic");
  for (int n = 6; n <= 12 && n <= cfg.max_n; n += 2) {
    const auto inst = gen_a_graph(n);
    std::set<int> want;
    for (int l = 4; l <= n; l += 2) want.insert(l);
    const auto got = cycle_spectrum(inst.graph).lengths;
    t.expect(got == want, "A" + std::to_string(n) + " spectrum " + set_text(got), &inst.graph);
    const auto& spec = std::get<BicycleSpec>(inst.spec);
    for (int i = 1; i <= n - 2; ++i) {
      BicycleSpec plus = spec;
      if (!plus.removed_s.erase(i)) plus.removed_t.erase(i);
      const auto g = gen_bicycle(plus).graph;
      t.expect(is_pancyclic(g), describe(plus) + " is not pancyclic", &g);
    }
  }
  for (int n = 7; n <= 13 && n <= cfg.max_n; n += 2) {
    const auto g = gen_a_graph(n).graph;
    t.expect(is_pancyclic(g), "A" + std::to_string(n) + " is not pancyclic", &g);
  }
  return t.finish("spectra match");
}

CriterionResult h_graphs(const VerifyConfig& cfg) {
  Tally t(5, "H1/H2 with p,q,r in 1..3: pancyclic unless K3,3; builders cover the spectrum");
  const Graph k33 = complete_bipartite(3, 3);
  int admissible = 0;
  for (HFamily family : {HFamily::h1, HFamily::h2})
    for (int p = 1; p <= 3; ++p)
      for (int q = 1; q <= 3; ++q)
        for (int r = 1; r <= 3; ++r)
          for (int mask = 0; mask < 8; ++mask) {
            const HSpec spec{family, p, q, r, CornerSet::from_mask(mask)};
            if (spec_order(spec) > cfg.max_n) continue;
            const auto inst = gen_h(spec);
            const Graph& g = inst.graph;
            if (!three_connected_nonplanar(g)) continue;
            ++admissible;
            const auto spectrum = cycle_spectrum(g);
            const bool is_k33 = are_isomorphic(g, k33);
            t.expect(spectrum.is_full() != is_k33, describe(spec) + " spectrum " + set_text(spectrum.lengths), &g);
            if (mask != 7) continue;
            for (int len : spectrum.lengths) {
              auto build = [&] { return family == HFamily::h1 ? h1_cycle(inst, len) : h2_cycle(inst, len); };
              t.expect(witness_ok(build, g, len), describe(spec) + " builder fails at length " + std::to_string(len),
                       &g);
            }
          }
  return t.finish(std::to_string(admissible) + " admissible H-graphs");
}

struct Admissible {
  FamilySpec spec;
  Graph graph;
};

const std::vector<Admissible>& admissible_cached(int max_n) {
  static std::mutex mu;
  static std::map<int, std::vector<Admissible>> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(max_n);
  if (it != cache.end()) return it->second;
  std::vector<Admissible> out;
  for (const auto& spec : admissible_specs(max_n)) out.push_back({spec, generate(spec).graph});
  return cache.emplace(max_n, std::move(out)).first->second;
}

CriterionResult main_equivalence(const VerifyConfig& cfg) {
  Tally t(6, "3-connected almost-planar, n <= 12: pancyclic iff triangle");
  int graphs = 0;
  for (const auto& [spec, g0] : admissible_cached(std::min(cfg.max_n, 12))) {
    Graph g = g0;
    if (cfg.fault == Fault::mobius_chord && std::holds_alternative<MobiusSpec>(spec)) g = add_edge(g, make_edge(1, 3));
    if (!is_almost_planar(g).verdict) continue;
    ++graphs;
    const auto s = cycle_spectrum(g);
    t.expect(s.is_full() == (s.lengths.count(3) > 0), describe(spec) + " spectrum " + set_text(s.lengths), &g);
  }
  return t.finish(std::to_string(graphs) + " graphs, zero exceptions");
}

CriterionResult almost_planarity(const VerifyConfig& cfg) {
  Tally t(7, "almost-planarity verdicts and classification round-trip, n <= 12");
  const int max_n = std::min(cfg.max_n, 12);
  int instances = 0;
  std::mt19937 rng(20240607);
  for (const auto& [spec, g0] : admissible_cached(max_n)) {
    Graph g = g0;
    if (cfg.fault == Fault::mobius_chord && std::holds_alternative<MobiusSpec>(spec)) g = add_edge(g, make_edge(1, 3));
    ++instances;
    t.expect(is_almost_planar(g).verdict, describe(spec) + " is not almost-planar", &g);
    std::vector<int> perm(static_cast<std::size_t>(g.order()));
    std::iota(perm.begin(), perm.end(), 1);
    std::shuffle(perm.begin(), perm.end(), rng);
    const Graph shuffled = relabel(g, perm);
    try {
      const auto c = classify(shuffled);
      const bool ok = c.gate == Gate::almost_planar && c.matched_spec &&
                      are_isomorphic(generate(*c.matched_spec).graph, shuffled);
      t.expect(ok, describe(spec) + " classified as " + to_string(c.gate), &shuffled);
    } catch (const Error& e) {
      t.expect(false, describe(spec) + ": " + e.what(), &shuffled);
    }
  }
  t.expect(!is_almost_planar(complete_graph(6)).verdict, "K6 reported almost-planar");

  std::vector<std::pair<std::string, Graph>> planar;
  for (int n = 4; n <= max_n; ++n) {
    planar.emplace_back("W" + std::to_string(n), gen_wheel(n).graph);
    planar.emplace_back("C" + std::to_string(n), cycle_graph(n));
    planar.emplace_back("P" + std::to_string(n), path_graph(n));
  }
  planar.emplace_back("K4", complete_graph(4));
  for (int n = 5; n <= std::min(max_n, 9); ++n)
    for (const auto& spec : enumerate_b_minors(n, false, false)) {
      Graph g = gen_bicycle(spec, false).graph;
      if (is_planar(g)) planar.emplace_back(describe(spec), std::move(g));
    }
  for (const auto& [name, g] : planar) {
    t.expect(is_planar(g), name + " expected planar", &g);
    t.expect(!is_almost_planar(g).verdict, name + " (planar) reported almost-planar", &g);
  }

  const std::vector<std::pair<std::string, Graph>> disconnected{
      {"K5+K5", disjoint_union(complete_graph(5), complete_graph(5))},
      {"K3,3+K3,3", disjoint_union(complete_bipartite(3, 3), complete_bipartite(3, 3))},
      {"K5+K3,3", disjoint_union(complete_graph(5), complete_bipartite(3, 3))},
      {"C4+C5", disjoint_union(cycle_graph(4), cycle_graph(5))},
      {"K4+K4", disjoint_union(complete_graph(4), complete_graph(4))},
  };
  for (const auto& [name, g] : disconnected) {
    t.expect(!is_connected(g), name + " expected disconnected", &g);
    t.expect(!is_almost_planar(g).verdict, name + " (disconnected) reported almost-planar", &g);
  }
  return t.finish(std::to_string(instances) + " family instances, " + std::to_string(planar.size()) + " planar and " +
                  std::to_string(disconnected.size()) + " disconnected graphs");
}

CriterionResult isomorphism_anchors(const VerifyConfig& cfg) {
  Tally t(8, "isomorphism anchors and B_n contraction identity");
  const Graph k33 = complete_bipartite(3, 3);
  t.expect(are_isomorphic(mobius(3, cfg).graph, k33), "V6 is not K3,3");
  t.expect(are_isomorphic(full_bicycle(5, cfg).graph, complete_graph(5)), "B5 is not K5");
  t.expect(are_isomorphic(gen_a_graph(6).graph, k33), "A6 is not K3,3");
  for (int n = 6; n <= 10 && n <= cfg.max_n; ++n) {
    const auto inst = full_bicycle(n, cfg);
    const Graph smaller = full_bicycle(n - 1, cfg).graph;
    const int rim = n - 2;
    for (int i = 1; i <= rim; ++i) {
      Graph g = delete_edge(inst.graph, make_edge(n, i));
      g = delete_edge(g, make_edge(n - 1, i));
      g = contract_edge(g, make_edge(rim_index(rim, i - 1), i));
      t.expect(are_isomorphic(g, smaller),
               "B" + std::to_string(n) + "/r" + std::to_string(rim_index(rim, i - 1)) + " minus s" +
                   std::to_string(i) + ",t" + std::to_string(i) + " is not B" + std::to_string(n - 1),
               &g);
    }
  }
  return t.finish("all anchors hold");
}

CriterionResult builder_equivalence(const VerifyConfig& cfg) {
  Tally t(9, "constructive spectrum equals oracle spectrum, n <= 12");
  const int max_n = std::min(cfg.max_n, 12);
  std::vector<FamilySpec> specs;
  for (const auto& a : admissible_cached(max_n)) specs.push_back(a.spec);
  for (int n = 4; n <= max_n; ++n) specs.emplace_back(WheelSpec{n});
  for (const auto& spec : specs) {
    auto inst = generate(spec);
    if (cfg.fault == Fault::mobius_chord && std::holds_alternative<MobiusSpec>(spec))
      inst.graph = add_edge(inst.graph, make_edge(1, 3));
    const auto oracle = cycle_spectrum(inst.graph).lengths;
    try {
      const auto built = constructive_spectrum(spec);
      t.expect(built.lengths == oracle,
               describe(spec) + " constructive " + set_text(built.lengths) + " vs oracle " + set_text(oracle),
               &inst.graph);
      for (const auto& [len, seq] : built.witnesses)
        t.expect(static_cast<bool>(validate_cycle(inst.graph, seq, len)),
                 describe(spec) + " witness of length " + std::to_string(len) + " invalid", &inst.graph);
    } catch (const Error& e) {
      t.expect(false, describe(spec) + ": " + e.what(), &inst.graph);
    }
  }
  return t.finish(std::to_string(specs.size()) + " specs");
}

CriterionResult errata(const VerifyConfig& cfg) {
  Tally t(10, "printed construction formulas fail, corrected forms pass");
  auto fails = [](const Graph& g, const VertexSeq& seq, int len) { return !validate_cycle(g, seq, len); };

  for (int k = 3; k <= 7 && 2 * k <= cfg.max_n; ++k) {
    const auto inst = mobius(k, cfg);
    const Graph& g = inst.graph;
    const std::string v = "V" + std::to_string(2 * k);
    for (int tt = 2; tt <= k; tt += 2) {
      t.expect(fails(g, naive::mobius_even_cycle(k, tt), 2 * tt), v + " printed even cycle t=" + std::to_string(tt) + " validates", &g);
      t.expect(witness_ok([&] { return mobius_cycle(inst, 2 * tt); }, g, 2 * tt),
               v + " corrected even cycle " + std::to_string(2 * tt) + " fails", &g);
    }
    t.expect(fails(g, naive::mobius_hamiltonian(k), 2 * k), v + " printed Hamiltonian cycle validates", &g);
    t.expect(witness_ok([&] { return mobius_cycle(inst, 2 * k); }, g, 2 * k), v + " corrected Hamiltonian fails", &g);
    if (k % 2 == 0) {
      t.expect(fails(g, naive::mobius_k_plus_one(k), k + 1), v + " printed (k+1)-cycle validates", &g);
      t.expect(witness_ok([&] { return mobius_cycle(inst, k + 1); }, g, k + 1), v + " corrected (k+1)-cycle fails",
               &g);
    }
  }

  for (int n = 6; n <= 10 && n <= cfg.max_n; ++n) {
    const auto inst = full_bicycle(n, cfg);
    const Graph& g = inst.graph;
    const int rim = n - 2;
    for (int i = 1; i <= rim; ++i)
      for (int j = i + 2; j <= rim; ++j) {
        if (i == 1 && j == rim) continue;  // adjacent around the rim
        const std::string what = "B" + std::to_string(n) + " path " + std::to_string(i) + "-" + std::to_string(j);
        t.expect(!validate_path(g, naive::bicycle_nonadjacent_path(n, i, j), n), what + " printed form validates", &g);
        bool ok = false;
        try {
          ok = static_cast<bool>(validate_path(g, bicycle_ham_path(inst, i, j), n));
        } catch (const Error&) {
        }
        t.expect(ok, what + " corrected form fails", &g);
        t.expect(hamiltonian_path(g, i, j).has_value(), what + " has no Hamiltonian path per oracle", &g);
      }
  }

  for (int n = 6; n <= 12 && n <= cfg.max_n; n += 2) {
    const auto inst = gen_a_graph(n);
    const Graph& g = inst.graph;
    const std::string a = "A" + std::to_string(n);
    t.expect(fails(g, naive::a_graph_hamiltonian(inst), n), a + " printed Hamiltonian validates", &g);
    t.expect(witness_ok([&] { return a_even_cycle(inst, n); }, g, n), a + " corrected Hamiltonian fails", &g);
  }

  for (int p = 2; p <= 3; ++p)
    for (int q = 1; q <= 3; ++q)
      for (int r = 1; r <= 3; ++r) {
        const auto inst = gen_h1(p, q, r, CornerSet::all());
        const Graph& g = inst.graph;
        const std::string h = describe(inst.spec);
        const int len = p + q + 1;
        t.expect(fails(g, naive::h1_p_plus_q_plus_one(inst), len), h + " printed p+q+1 row validates", &g);
        t.expect(witness_ok([&] { return h1_cycle(inst, len); }, g, len), h + " corrected p+q+1 row fails", &g);
        t.expect(find_cycle(g, len).has_value(), h + " has no (p+q+1)-cycle per oracle", &g);
      }

  for (int p = 1; p <= 3; ++p)
    for (int q = 3; q <= 4; ++q)
      for (int r = 1; r <= 3; ++r) {
        const auto inst = gen_h2(p, q, r, CornerSet::all());
        const Graph& g = inst.graph;
        const int n = g.order();
        const std::string h = describe(inst.spec);
        for (int j = 2; j <= q - 1; ++j) {
          t.expect(fails(g, naive::h2_j_avoidance(inst, j), n - j), h + " printed j-avoidance validates", &g);
          t.expect(witness_ok([&] { return h2_cycle(inst, n - j); }, g, n - j), h + " corrected j-avoidance fails", &g);
        }
      }
  return t.finish("every printed form rejected, every correction accepted");
}

}  // namespace

std::vector<FamilySpec> admissible_specs(int max_n) {
  max_n = std::min(max_n, kDefaultEnumerationCap);
  std::vector<FamilySpec> out;
  for (int k = 3; 2 * k <= max_n; ++k) out.emplace_back(MobiusSpec{k});
  for (int n = 5; n <= max_n; ++n)
    for (const auto& spec : enumerate_b_minors(n, true, true)) out.emplace_back(spec);
  for (int mask = 0; mask < 8; ++mask) out.emplace_back(K33ChainSpec{CornerSet::from_mask(mask)});
  for (HFamily family : {HFamily::h1, HFamily::h2})
    for (int p = 1; p + 5 <= max_n; ++p)
      for (int q = 1; p + q + 4 <= max_n; ++q)
        for (int r = 1; p + q + r + 3 <= max_n; ++r)
          for (int mask = 0; mask < 8; ++mask) {
            HSpec spec{family, p, q, r, CornerSet::from_mask(mask)};
            if (three_connected_nonplanar(gen_h(spec).graph)) out.emplace_back(spec);
          }
  return out;
}

CriterionResult run_criterion(int id, const VerifyConfig& config) {
  using Fn = CriterionResult (*)(const VerifyConfig&);
  static const Fn table[] = {mobius_spectra,   four_connected,   b_graph_hamiltonian, a_dichotomy,
                             h_graphs,         main_equivalence, almost_planarity,    isomorphism_anchors,
                             builder_equivalence, errata};
  if (id < 1 || id > kCriterionCount) throw InvalidSpec("no criterion " + std::to_string(id));
  try {
    return table[id - 1](config);
  } catch (const Error& e) {
    CriterionResult r;
    r.id = id;
    r.title = "criterion " + std::to_string(id);
    r.detail = std::string("aborted: ") + e.what();
    return r;
  }
}

}  // namespace apg

#include "apg/classify.hpp"

#include <map>
#include <mutex>

#include "apg/connectivity.hpp"
#include "apg/oracle.hpp"

namespace apg {

std::string to_string(Gate g) {
  switch (g) {
    case Gate::planar: return "planar";
    case Gate::not_3_connected: return "not-3-connected";
    case Gate::not_almost_planar: return "not-almost-planar";
    case Gate::almost_planar: return "almost-planar";
  }
  return "?";
}

bool has_triangle(const Graph& g) {
  for (const auto& e : g.edges())
    for (int w : g.neighbors(e.u))
      if (w != e.v && g.has_edge(w, e.v)) return true;
  return false;
}

namespace {

std::set<int> range_set(int lo, int hi, int step = 1) {
  std::set<int> out;
  for (int i = lo; i <= hi; i += step) out.insert(i);
  return out;
}

SpectrumPrediction exact(std::set<int> lengths, std::string note) {
  return {std::move(lengths), true, std::move(note)};
}

SpectrumPrediction k33_prediction(CornerSet extra) {
  if (extra.count() == 0) return exact({4, 6}, "K3,3 is bipartite");
  return exact(range_set(3, 6), "corner edge closes a triangle");
}

bool three_connected_nonplanar(const Graph& g) { return is_k_connected(g, 3) && !is_planar(g); }

// Every rim vertex has exactly one spoke and neighbours on the rim use
// different hubs.
bool alternating(const LabeledInstance& inst) {
  const Graph& g = inst.graph;
  const int n = g.order();
  const int rim = n - 2;
  auto hub = [&](int i) {
    const bool s = g.has_edge(n, i);
    const bool t = g.has_edge(n - 1, i);
    return s == t ? 0 : (s ? n : n - 1);
  };
  for (int i = 1; i <= rim; ++i)
    if (hub(i) == 0 || hub(i) == hub(i % rim + 1)) return false;
  return true;
}

const std::vector<BicycleSpec>& cached_b_minors(int n, int cap) {
  static std::mutex mu;
  static std::map<int, std::vector<BicycleSpec>> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, enumerate_b_minors(n, true, true, cap)).first;
  return it->second;
}

using Candidate = std::pair<FamilySpec, Graph>;

const std::vector<Candidate>& cached_candidates(int n, int cap) {
  static std::mutex mu;
  static std::map<int, std::vector<Candidate>> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  std::vector<Candidate> built;
  for (auto& spec : candidate_specs(n, cap)) {
    Graph g = generate(spec).graph;
    built.emplace_back(std::move(spec), std::move(g));
  }
  std::lock_guard lock(mu);
  return cache.emplace(n, std::move(built)).first->second;
}

}  // namespace

SpectrumPrediction predict_spectrum(const FamilySpec& spec) {
  if (const auto* s = std::get_if<MobiusSpec>(&spec)) {
    if (s->k < 3) throw InvalidSpec("mobius ladder needs k >= 3");
    auto lengths = range_set(4, 2 * s->k, 2);
    if (s->k % 2 == 0)
      for (int i = s->k + 1; i <= 2 * s->k; ++i) lengths.insert(i);
    return exact(std::move(lengths), s->k % 2 ? "even lengths only" : "even lengths plus k+1..2k");
  }
  if (const auto* s = std::get_if<WheelSpec>(&spec)) {
    if (s->n < 4) throw InvalidSpec("wheel needs n >= 4");
    return exact(range_set(3, s->n), "wheel");
  }
  if (const auto* s = std::get_if<K33ChainSpec>(&spec)) return k33_prediction(s->extra);
  if (const auto* s = std::get_if<BicycleSpec>(&spec)) {
    const auto inst = gen_bicycle(*s, false);
    if (!three_connected_nonplanar(inst.graph))
      return {{}, false, "spoke pattern is not a 3-connected non-planar B-graph"};
    if (alternating(inst)) return exact(range_set(4, s->n, 2), "alternating spokes, bipartite");
    return exact(range_set(3, s->n), "adjacent spokes on a common hub");
  }
  const auto& h = std::get<HSpec>(spec);
  if (h.p == 1 && h.q == 1 && h.r == 1) return k33_prediction(h.deleted.complement());
  const auto inst = gen_h(h);
  if (!three_connected_nonplanar(inst.graph)) return {{}, false, "H-graph is not 3-connected and non-planar"};
  return exact(range_set(3, inst.graph.order()), "H-graph");
}

std::vector<FamilySpec> candidate_specs(int n, int cap) {
  std::vector<FamilySpec> out;
  if (n > cap) throw OracleCapExceeded("n = " + std::to_string(n) + " exceeds classification cap " + std::to_string(cap));
  if (n >= 6 && n % 2 == 0) out.emplace_back(MobiusSpec{n / 2});
  if (n >= 5)
    for (const auto& s : cached_b_minors(n, cap)) out.emplace_back(s);
  if (n == 6)
    for (int mask = 0; mask < 8; ++mask) out.emplace_back(K33ChainSpec{CornerSet::from_mask(mask)});
  for (HFamily family : {HFamily::h1, HFamily::h2})
    for (int p = 1; p + 2 <= n - 3; ++p)
      for (int q = 1; p + q + 1 <= n - 3; ++q) {
        const int r = n - 3 - p - q;
        if (p == 1 && q == 1 && r == 1) continue;  // same graphs as the K3,3 chain
        for (int mask = 0; mask < 8; ++mask) out.emplace_back(HSpec{family, p, q, r, CornerSet::from_mask(mask)});
      }
  return out;
}

Classification classify(const Graph& g, int cap) {
  if (g.order() > cap)
    throw OracleCapExceeded("n = " + std::to_string(g.order()) + " exceeds classification cap " + std::to_string(cap));
  Classification out;
  if (is_planar(g)) {
    out.gate = Gate::planar;
    return out;
  }
  if (!is_k_connected(g, 3)) {
    out.gate = Gate::not_3_connected;
    return out;
  }
  out.evidence = is_almost_planar(g);
  if (!out.evidence->verdict) {
    out.gate = Gate::not_almost_planar;
    return out;
  }
  out.gate = Gate::almost_planar;

  const auto& candidates = cached_candidates(g.order(), cap);
  const auto degrees = g.degree_sequence();
  std::vector<std::optional<VertexMap>> maps(candidates.size());
  const long count = static_cast<long>(candidates.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < count; ++i) {
    const Graph& h = candidates[static_cast<std::size_t>(i)].second;
    if (h.size() != g.size() || h.degree_sequence() != degrees) continue;
    maps[static_cast<std::size_t>(i)] = find_isomorphism(g, h);
  }
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (!maps[i]) continue;
    out.all_matches.push_back(candidates[i].first);
    if (!out.matched_spec) {
      out.matched_spec = candidates[i].first;
      out.iso_map = maps[i];
    }
  }
  if (!out.matched_spec)
    throw FalsificationError("3-connected almost-planar graph on " + std::to_string(g.order()) +
                             " vertices matches no Mobius, B-graph or H-graph candidate");
  out.notes.push_back("matched " + std::to_string(out.all_matches.size()) + " of " +
                      std::to_string(candidates.size()) + " candidates");

  PredictedProperties pred;
  pred.hamiltonian = true;
  pred.pancyclic = has_triangle(g);
  if (is_k_connected(g, 4)) {
    pred.hamiltonian_connected = true;
    pred.pancyclic = true;
  }
  const auto spectrum = predict_spectrum(*out.matched_spec);
  if (spectrum.exact) {
    pred.spectrum = spectrum.lengths;
    if (pred.pancyclic != (spectrum.lengths.count(3) > 0))
      throw FalsificationError("triangle test and predicted spectrum disagree for " + describe(*out.matched_spec));
  }
  out.predicted = std::move(pred);
  return out;
}

}  // namespace apg

#include "apg/json_io.hpp"

namespace apg {

namespace {

json corners(CornerSet c) {
  json out = json::array();
  if (c.ab) out.push_back("ab");
  if (c.bc) out.push_back("bc");
  if (c.ac) out.push_back("ac");
  return out;
}

CornerSet corners_from(const json& j) {
  CornerSet c;
  for (const auto& name : j) {
    const auto s = name.get<std::string>();
    if (s == "ab") c.ab = true;
    else if (s == "bc") c.bc = true;
    else if (s == "ac") c.ac = true;
    else throw InvalidSpec("unknown corner edge '" + s + "'");
  }
  return c;
}

json edge_json(Edge e) { return json::array({e.u, e.v}); }

}  // namespace

json to_json(const FamilySpec& spec) {
  if (const auto* s = std::get_if<MobiusSpec>(&spec)) return {{"family", "mobius"}, {"k", s->k}};
  if (const auto* s = std::get_if<BicycleSpec>(&spec))
    return {{"family", "bicycle"}, {"n", s->n}, {"remove_s", s->removed_s}, {"remove_t", s->removed_t}};
  if (const auto* s = std::get_if<WheelSpec>(&spec)) return {{"family", "wheel"}, {"n", s->n}};
  if (const auto* s = std::get_if<K33ChainSpec>(&spec)) return {{"family", "k33"}, {"extra", corners(s->extra)}};
  const auto& h = std::get<HSpec>(spec);
  return {{"family", h.family == HFamily::h1 ? "h1" : "h2"},
          {"p", h.p},
          {"q", h.q},
          {"r", h.r},
          {"deleted", corners(h.deleted)}};
}

FamilySpec spec_from_json(const json& j) {
  try {
    const auto family = j.at("family").get<std::string>();
    if (family == "mobius") return MobiusSpec{j.at("k").get<int>()};
    if (family == "wheel") return WheelSpec{j.at("n").get<int>()};
    if (family == "bicycle")
      return BicycleSpec{j.at("n").get<int>(), j.value("remove_s", std::set<int>{}), j.value("remove_t", std::set<int>{})};
    if (family == "k33") return K33ChainSpec{corners_from(j.value("extra", json::array()))};
    if (family == "h1" || family == "h2")
      return HSpec{family == "h1" ? HFamily::h1 : HFamily::h2, j.at("p").get<int>(), j.at("q").get<int>(),
                   j.at("r").get<int>(), corners_from(j.value("deleted", json::array()))};
    throw InvalidSpec("unknown family '" + family + "'");
  } catch (const json::exception& e) {
    throw InvalidSpec(std::string("malformed spec: ") + e.what());
  }
}

json to_json(const AlmostPlanarEvidence& ev) {
  json edges = json::array();
  for (const auto& row : ev.per_edge)
    edges.push_back({{"u", row.edge.u}, {"v", row.edge.v}, {"del_planar", row.deletion_planar},
                     {"con_planar", row.contraction_planar}});
  return {{"verdict", ev.verdict},
          {"planar", ev.planar},
          {"edges", std::move(edges)},
          {"failing_edge", ev.failing_edge ? edge_json(*ev.failing_edge) : json(nullptr)}};
}

json to_json(const CycleSpectrum& s, bool witnesses) {
  json out = {{"n", s.n},
              {"lengths", s.lengths},
              {"pancyclic", s.is_full()},
              {"hamiltonian", s.lengths.count(s.n) > 0}};
  if (witnesses) {
    json w = json::object();
    for (const auto& [len, seq] : s.witnesses) w[std::to_string(len)] = seq;
    out["witnesses"] = std::move(w);
  }
  return out;
}

json to_json(const Classification& c) {
  json out = {{"schema", kJsonSchema}, {"gate", to_string(c.gate)}};
  out["spec"] = c.matched_spec ? to_json(*c.matched_spec) : json(nullptr);
  if (c.matched_spec) out["spec_text"] = describe(*c.matched_spec);
  if (c.iso_map) out["iso_map"] = json(std::vector<int>(c.iso_map->begin() + 1, c.iso_map->end()));
  if (c.predicted) {
    json pred = {{"pancyclic", c.predicted->pancyclic}, {"hamiltonian", c.predicted->hamiltonian}};
    pred["hamiltonian_connected"] =
        c.predicted->hamiltonian_connected ? json(*c.predicted->hamiltonian_connected) : json(nullptr);
    pred["spectrum"] = c.predicted->spectrum ? json(*c.predicted->spectrum) : json(nullptr);
    out["predicted"] = std::move(pred);
  } else {
    out["predicted"] = nullptr;
  }
  json all = json::array();
  for (const auto& s : c.all_matches) all.push_back(to_json(s));
  out["all_matches"] = std::move(all);
  if (c.evidence) out["evidence"] = to_json(*c.evidence);
  out["notes"] = c.notes;
  return out;
}

json roles_to_json(const LabeledInstance& inst) {
  json vertices = json::object();
  for (std::size_t v = 1; v < inst.vertex_roles.size(); ++v)
    vertices[std::to_string(v)] = role_name(inst.vertex_roles[v]);
  json edges = json::array();
  for (const auto& e : inst.graph.edges()) edges.push_back({{"u", e.u}, {"v", e.v}, {"role", role_name(inst.role_of(e))}});
  return {{"schema", kJsonSchema},
          {"spec", to_json(inst.spec)},
          {"description", describe(inst.spec)},
          {"n", inst.graph.order()},
          {"m", inst.graph.size()},
          {"vertices", std::move(vertices)},
          {"edges", std::move(edges)},
          {"warnings", inst.warnings}};
}

}  // namespace apg

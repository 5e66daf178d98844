#include "qmac/io.hpp"

#include <sstream>

namespace qmac {

using json = nlohmann::ordered_json;

json word_json(const WeylElt& w) {
  json out = json::array();
  for (int i : w.word()) out.push_back(std::to_string(i + 1));
  return out;
}

json weight_json(const Vec<std::int64_t>& v) {
  json out = json::array();
  for (Eigen::Index j = 0; j < v.size(); ++j) out.push_back(v[j]);
  return out;
}

json terms_json(const GradedChar& f) {
  json out = json::array();
  for (const auto& [m, c] : f.terms()) out.push_back({{"wt", m.wt}, {"q", m.q}, {"c", c}});
  return out;
}

json path_json(const QLSModel& model, const QLSPath& eta) {
  json dirs = json::array(), cuts = json::array();
  for (const auto& x : eta.dirs) dirs.push_back(word_json(x));
  for (const auto& t : eta.cuts) cuts.push_back(to_string(t));
  return {{"dirs", dirs}, {"cuts", cuts}, {"wt", weight_json(model.wt(eta))}, {"deg", model.deg(eta)}};
}

json chain_json(const RootDatum& datum, const LambdaChain& chain) {
  json out = json::array();
  for (const auto& e : chain.entries)
    out.push_back({{"gamma", weight_json(datum.root(e.root))}, {"b", e.b}, {"d", to_string(e.d)}});
  return out;
}

json admissible_json(const AlcoveModel& model, const AdmissibleSubset& A) {
  json indices = json::array();
  for (int j : A.indices) indices.push_back(j + 1);
  return {{"indices", indices},
          {"final_direction", word_json(A.final_direction())},
          {"wt", weight_json(model.wt(A))},
          {"height", model.height(A)},
          {"coheight", model.coheight(A)}};
}

json os_json(const OSModel& model, const OSPath& p) {
  json indices = json::array(), steps = json::array();
  for (std::size_t k = 0; k < p.indices.size(); ++k) {
    const auto& e = model.chain().entries[p.indices[k]];
    indices.push_back(p.indices[k] + 1);
    steps.push_back({{"gamma", weight_json(model.datum().root(e.root))},
                     {"a", model.a(p.indices[k])},
                     {"b", e.b},
                     {"quantum", static_cast<bool>(p.quantum[k])}});
  }
  return {{"indices", indices}, {"dir", word_json(p.dir())}, {"wt", weight_json(p.wt)},
          {"deg", p.deg},       {"steps", steps}};
}

json qbg_json(const QBGraph& graph) {
  json vertices = json::array(), edges = json::array();
  for (const auto& v : graph.vertices()) vertices.push_back(word_json(v));
  for (int v = 0; v < graph.num_vertices(); ++v) {
    for (int e : graph.out_edges(v)) {
      const auto& edge = graph.edge(e);
      edges.push_back({{"source", edge.source},
                       {"target", edge.target},
                       {"root", weight_json(graph.datum().root(edge.root))},
                       {"kind", edge.kind == EdgeKind::Bruhat ? "bruhat" : "quantum"}});
    }
  }
  return {{"vertices", vertices}, {"edges", edges}};
}

std::string qbg_dot(const QBGraph& graph) {
  std::ostringstream os;
  os << "digraph QB {\n";
  for (int v = 0; v < graph.num_vertices(); ++v)
    os << "  v" << v << " [label=\"" << word_string(graph.vertex(v)) << "\"];\n";
  for (int v = 0; v < graph.num_vertices(); ++v) {
    for (int e : graph.out_edges(v)) {
      const auto& edge = graph.edge(e);
      os << "  v" << edge.source << " -> v" << edge.target << " [label=\""
         << coords_string(graph.datum().root(edge.root)) << "\""
         << (edge.kind == EdgeKind::Quantum ? ", style=dashed" : "") << "];\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace qmac

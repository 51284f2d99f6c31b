#include <map>

#include "kgraph/kgraph.hpp"

namespace kgraph {

namespace {

std::string grid_name(const Degree& p) {
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += '_';
    out += std::to_string(p[i]);
  }
  return out;
}

}  // namespace

KGraph build_omega(std::size_t k, const Degree& m) {
  if (m.size() != k) throw Error(ErrorCode::DegreeMismatch, "extent " + m.to_string() + " is not in N^" + std::to_string(k));
  const auto points = degree_box(Degree::zero(k), m);
  std::map<Degree, VertexId> vertex_of;
  std::vector<std::string> names;
  for (const auto& p : points) {
    vertex_of.emplace(p, static_cast<VertexId>(names.size()));
    names.push_back(grid_name(p));
  }

  // edge_at[(p, i)] is the colour-i edge with range p and source p + e_i.
  std::map<std::pair<Degree, Colour>, EdgeId> edge_at;
  std::vector<Edge> edges;
  for (const auto& p : points) {
    for (Colour i = 1; i <= k; ++i) {
      if (p.at_colour(i) >= m.at_colour(i)) continue;
      Degree q = p + Degree::unit(k, i);
      edge_at.emplace(std::pair{p, i}, static_cast<EdgeId>(edges.size()));
      edges.push_back({"c" + std::to_string(i) + "@" + grid_name(p), i, vertex_of.at(q), vertex_of.at(p)});
    }
  }

  SquareTable squares;
  for (const auto& p : points) {
    for (Colour i = 1; i <= k; ++i) {
      for (Colour j = i + 1; j <= k; ++j) {
        if (p.at_colour(i) >= m.at_colour(i) || p.at_colour(j) >= m.at_colour(j)) continue;
        const Degree pi = p + Degree::unit(k, i);
        const Degree pj = p + Degree::unit(k, j);
        squares.push_back({edge_at.at({p, i}), edge_at.at({pi, j}), edge_at.at({p, j}), edge_at.at({pj, i})});
      }
    }
  }
  return validate(Skeleton(k, std::move(names), std::move(edges)), std::move(squares));
}

KGraph build_from_directed_graph(const DirectedGraph& e) {
  std::map<std::string, VertexId> index;
  for (VertexId v = 0; v < e.vertices.size(); ++v) index.emplace(e.vertices[v], v);
  auto lookup = [&](const std::string& name) {
    auto it = index.find(name);
    if (it == index.end()) throw Error(ErrorCode::UnknownVertex, "unknown vertex '" + name + "'");
    return it->second;
  };
  std::vector<Edge> edges;
  for (const auto& arrow : e.edges) edges.push_back({arrow.id, 1, lookup(arrow.source), lookup(arrow.range)});
  return validate(Skeleton(1, e.vertices, std::move(edges)), {});
}

}  // namespace kgraph

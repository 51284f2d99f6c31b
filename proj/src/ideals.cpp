#include "kgraph/ideals.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>

namespace kgraph {

VertexSet VertexSet::of(std::size_t vertex_count, std::initializer_list<VertexId> members) {
  return of(vertex_count, std::vector<VertexId>(members));
}

VertexSet VertexSet::of(std::size_t vertex_count, const std::vector<VertexId>& members) {
  VertexSet s(vertex_count);
  for (VertexId v : members) s.insert(v);
  return s;
}

std::size_t VertexSet::size() const noexcept { return static_cast<std::size_t>(std::count(mask_.begin(), mask_.end(), true)); }

std::vector<VertexId> VertexSet::members() const {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < mask_.size(); ++v)
    if (mask_[v]) out.push_back(v);
  return out;
}

VertexSet operator|(const VertexSet& a, const VertexSet& b) {
  VertexSet out(a.universe());
  for (VertexId v = 0; v < a.universe(); ++v) out.mask_[v] = a.mask_[v] || b.mask_.at(v);
  return out;
}

VertexSet operator&(const VertexSet& a, const VertexSet& b) {
  VertexSet out(a.universe());
  for (VertexId v = 0; v < a.universe(); ++v) out.mask_[v] = a.mask_[v] && b.mask_.at(v);
  return out;
}

bool VertexSet::subset_of(const VertexSet& other) const {
  for (VertexId v = 0; v < mask_.size(); ++v)
    if (mask_[v] && !other.mask_.at(v)) return false;
  return true;
}

std::string VertexSet::describe(const Skeleton& sk) const {
  std::string out;
  for (VertexId v : members()) {
    if (!out.empty()) out += ',';
    out += sk.vertex_name(v);
  }
  return out;
}

bool operator<(const VertexSet& a, const VertexSet& b) {
  const auto sa = a.size(), sb = b.size();
  if (sa != sb) return sa < sb;
  return a.members() < b.members();
}

ReachabilityMatrix reachability_geq(const KGraph& g) {
  const Skeleton& sk = g.skeleton();
  const auto n = static_cast<Eigen::Index>(g.vertex_count());
  ReachabilityMatrix geq = ReachabilityMatrix::Constant(n, n, false);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    std::vector<VertexId> stack{v};
    geq(v, v) = true;
    while (!stack.empty()) {
      const VertexId u = stack.back();
      stack.pop_back();
      for (Colour c = 1; c <= g.k(); ++c) {
        for (EdgeId e : sk.edges_into(u, c)) {
          const VertexId w = sk.edge(e).source;
          if (!geq(v, w)) {
            geq(v, w) = true;
            stack.push_back(w);
          }
        }
      }
    }
  }
  return geq;
}

VertexSet hereditary_closure(const KGraph& g, const VertexSet& h) {
  const auto geq = reachability_geq(g);
  VertexSet out = h;
  for (VertexId v : h.members())
    for (VertexId w = 0; w < g.vertex_count(); ++w)
      if (geq(v, w)) out.insert(w);
  return out;
}

bool is_hereditary(const KGraph& g, const VertexSet& h) { return hereditary_closure(g, h) == h; }

namespace {

// Sources of Lambda^{<=e_i}(v).
std::vector<VertexId> le_unit_sources(const Skeleton& sk, VertexId v, Colour i) {
  const auto into = sk.edges_into(v, i);
  if (into.empty()) return {v};
  std::vector<VertexId> out;
  for (EdgeId e : into) out.push_back(sk.edge(e).source);
  return out;
}

}  // namespace

VertexSet sigma(const KGraph& g, const VertexSet& h) {
  const Skeleton& sk = g.skeleton();
  VertexSet out = h;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (h.contains(v)) continue;
    for (Colour i = 1; i <= g.k(); ++i) {
      const auto sources = le_unit_sources(sk, v, i);
      if (std::all_of(sources.begin(), sources.end(), [&](VertexId w) { return h.contains(w); })) {
        out.insert(v);
        break;
      }
    }
  }
  return out;
}

VertexSet saturate(const KGraph& g, const VertexSet& h) {
  VertexSet current = h;
  while (true) {
    VertexSet next = sigma(g, current);
    if (next == current) return current;
    current = std::move(next);
  }
}

bool is_saturated(const KGraph& g, const VertexSet& h) { return sigma(g, h) == h; }

std::vector<VertexSet> enumerate_sat_hered(const KGraph& g) {
  const std::size_t n = g.vertex_count();
  if (n > 20) throw Error(ErrorCode::TooLarge, std::to_string(n) + " vertices; the lattice is enumerated only up to 20");
  const Skeleton& sk = g.skeleton();
  const auto geq = reachability_geq(g);

  using Mask = std::uint32_t;
  std::vector<Mask> below(n, 0);
  std::vector<std::vector<Mask>> absorbs(n);
  for (VertexId v = 0; v < n; ++v) {
    for (VertexId w = 0; w < n; ++w)
      if (geq(v, w)) below[v] |= Mask{1} << w;
    for (Colour i = 1; i <= g.k(); ++i) {
      Mask m = 0;
      for (VertexId w : le_unit_sources(sk, v, i)) m |= Mask{1} << w;
      absorbs[v].push_back(m);
    }
  }

  std::vector<VertexSet> out;
  const Mask end = Mask{1} << n;
  for (Mask h = 0; h < end; ++h) {
    bool ok = true;
    for (VertexId v = 0; v < n && ok; ++v) {
      if (h & (Mask{1} << v)) {
        ok = (below[v] & ~h) == 0;
      } else {
        for (Mask m : absorbs[v])
          if ((m & ~h) == 0) ok = false;
      }
    }
    if (!ok) continue;
    VertexSet s(n);
    for (VertexId v = 0; v < n; ++v)
      if (h & (Mask{1} << v)) s.insert(v);
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end());
  return out;
}

VertexSet lattice_meet(const VertexSet& a, const VertexSet& b) { return a & b; }

VertexSet lattice_join(const KGraph& g, const VertexSet& a, const VertexSet& b) {
  return saturate(g, hereditary_closure(g, a | b));
}

namespace {

// The subgraph on kept vertices with the edges accepted by keep_edge and the
// squares all of whose edges are kept, re-validated from scratch.
template <typename KeepEdge>
KGraph induced(const KGraph& g, const VertexSet& vertices, KeepEdge keep_edge) {
  const Skeleton& sk = g.skeleton();
  std::vector<VertexId> vertex_map(g.vertex_count(), 0);
  std::vector<std::string> names;
  for (VertexId v : vertices.members()) {
    vertex_map[v] = static_cast<VertexId>(names.size());
    names.push_back(sk.vertex_name(v));
  }
  constexpr EdgeId dropped = static_cast<EdgeId>(-1);
  std::vector<EdgeId> edge_map(sk.edge_count(), dropped);
  std::vector<Edge> edges;
  for (EdgeId e = 0; e < sk.edge_count(); ++e) {
    const Edge& edge = sk.edge(e);
    if (!keep_edge(edge)) continue;
    edge_map[e] = static_cast<EdgeId>(edges.size());
    edges.push_back({edge.id, edge.colour, vertex_map[edge.source], vertex_map[edge.range]});
  }
  SquareTable squares;
  for (const Square& s : g.squares()) {
    const Square mapped{edge_map[s.outer_lo], edge_map[s.inner_lo], edge_map[s.outer_hi], edge_map[s.inner_hi]};
    if (mapped.outer_lo != dropped && mapped.inner_lo != dropped && mapped.outer_hi != dropped &&
        mapped.inner_hi != dropped)
      squares.push_back(mapped);
  }
  return validate(Skeleton(g.k(), std::move(names), std::move(edges)), std::move(squares));
}

}  // namespace

KGraph quotient_graph(const KGraph& g, const VertexSet& h) {
  if (!is_hereditary(g, h)) throw Error(ErrorCode::NotHereditary, "{" + h.describe(g.skeleton()) + "}");
  if (!is_saturated(g, h)) throw Error(ErrorCode::NotSaturated, "{" + h.describe(g.skeleton()) + "}");
  VertexSet rest(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (!h.contains(v)) rest.insert(v);
  return induced(g, rest, [&](const Edge& e) { return !h.contains(e.source); });
}

KGraph restriction_graph(const KGraph& g, const VertexSet& h) {
  if (!is_hereditary(g, h)) throw Error(ErrorCode::NotHereditary, "{" + h.describe(g.skeleton()) + "}");
  return induced(g, h, [&](const Edge& e) { return h.contains(e.range); });
}

VertexSet parse_vertex_set(const KGraph& g, const std::string& text) {
  VertexSet out(g.vertex_count());
  std::stringstream in(text);
  std::string name;
  while (std::getline(in, name, ',')) {
    if (name.empty()) continue;
    auto v = g.skeleton().find_vertex(name);
    if (!v) throw Error(ErrorCode::UnknownVertex, "unknown vertex '" + name + "'");
    out.insert(*v);
  }
  return out;
}

}  // namespace kgraph

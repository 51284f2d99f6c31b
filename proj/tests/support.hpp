#pragma once

// Fixture loading, brute-force oracles and random generators shared by the
// unit tests and the acceptance suite. The oracles deliberately avoid the
// library's normal-form machinery.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "kgraph/io.hpp"
#include "kgraph/kgraph.hpp"

namespace kgraph::testing {

inline KGraph fixture(const std::string& name) {
  Document d = parse_file(std::string(KGRAPH_FIXTURE_DIR) + "/" + name + ".kgraph");
  return validate(std::move(d.skeleton), std::move(d.squares));
}

inline std::string fixture_path(const std::string& name) {
  return std::string(KGRAPH_FIXTURE_DIR) + "/" + name + ".kgraph";
}

inline VertexId vertex(const KGraph& g, const std::string& name) { return g.skeleton().find_vertex(name).value(); }
inline EdgeId edge(const KGraph& g, const std::string& id) { return g.skeleton().find_edge(id).value(); }

/// The unique edge of the given colour from source to range.
inline EdgeId edge_between(const KGraph& g, Colour c, const std::string& source, const std::string& range) {
  const VertexId s = vertex(g, source), r = vertex(g, range);
  for (EdgeId e = 0; e < g.skeleton().edge_count(); ++e) {
    const Edge& ed = g.skeleton().edge(e);
    if (ed.colour == c && ed.source == s && ed.range == r) return e;
  }
  throw std::logic_error("no such edge");
}

/// Short names for four G1 = Omega_{2,(3,2)} edges around v = (2,0): e and f
/// have range v in colours 1 and 2, s(e) = r(g) and s(f) = r(h), and
/// e g = f h.
struct G1Names {
  EdgeId e, f, g, h;
  VertexId v;
};
inline G1Names g1_names(const KGraph& g1) {
  return {edge_between(g1, 1, "3_0", "2_0"), edge_between(g1, 2, "2_1", "2_0"), edge_between(g1, 2, "3_1", "3_0"),
          edge_between(g1, 1, "3_1", "2_1"), vertex(g1, "2_0")};
}

// ---------------------------------------------------------------------------
// Oracles

/// Every composable edge word (outermost first) with range v and the given
/// colour counts, in any colour order.
inline std::vector<EdgeWord> all_words(const KGraph& g, VertexId v, const Degree& m) {
  const Skeleton& sk = g.skeleton();
  std::vector<EdgeWord> out;
  EdgeWord word;
  Degree used = Degree::zero(g.k());
  auto walk = [&](auto&& self, VertexId at) -> void {
    if (used == m) {
      out.push_back(word);
      return;
    }
    for (Colour c = 1; c <= g.k(); ++c) {
      if (used.at_colour(c) == m.at_colour(c)) continue;
      for (EdgeId e : sk.edges_into(at, c)) {
        word.push_back(e);
        ++used[c - 1];
        self(self, sk.edge(e).source);
        --used[c - 1];
        word.pop_back();
      }
    }
  };
  walk(walk, v);
  return out;
}

/// Classes of all_words(v, m) under single square moves at any position:
/// the paths of Lambda^m(v) computed without normal forms.
inline std::vector<std::set<EdgeWord>> path_classes(const KGraph& g, VertexId v, const Degree& m) {
  std::map<std::pair<EdgeId, EdgeId>, std::pair<EdgeId, EdgeId>> move;
  for (const Square& s : g.squares()) {
    move[{s.outer_lo, s.inner_lo}] = {s.outer_hi, s.inner_hi};
    move[{s.outer_hi, s.inner_hi}] = {s.outer_lo, s.inner_lo};
  }
  const auto words = all_words(g, v, m);
  std::map<EdgeWord, std::size_t> id;
  for (std::size_t i = 0; i < words.size(); ++i) id[words[i]] = i;
  std::vector<std::size_t> parent(words.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < words.size(); ++i) {
    for (std::size_t t = 0; t + 1 < words[i].size(); ++t) {
      auto it = move.find({words[i][t], words[i][t + 1]});
      if (it == move.end()) continue;
      EdgeWord w = words[i];
      w[t] = it->second.first;
      w[t + 1] = it->second.second;
      parent[find(i)] = find(id.at(w));
    }
  }
  std::map<std::size_t, std::set<EdgeWord>> classes;
  for (std::size_t i = 0; i < words.size(); ++i) classes[find(i)].insert(words[i]);
  std::vector<std::set<EdgeWord>> out;
  for (auto& [root, cls] : classes) out.push_back(std::move(cls));
  return out;
}

/// Lambda^{<=q}(v) straight from the definition, over the square-move oracle.
inline std::set<Path> le_oracle(const KGraph& g, VertexId v, const Degree& q) {
  std::set<Path> out;
  for (const Degree& m : degree_box(Degree::zero(g.k()), q)) {
    for (const auto& cls : path_classes(g, v, m)) {
      const Path p = m.is_zero() ? g.vertex(v) : g.path(*cls.begin());
      bool maximal = true;
      for (Colour i = 1; i <= g.k(); ++i)
        if (m.at_colour(i) < q.at_colour(i) && !g.skeleton().edges_into(p.source(), i).empty()) maximal = false;
      if (maximal) out.insert(p);
    }
  }
  return out;
}

/// Reachability by Floyd-Warshall over the colour-blind skeleton.
inline std::vector<std::vector<bool>> reach_oracle(const KGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
  for (std::size_t v = 0; v < n; ++v) r[v][v] = true;
  for (const Edge& e : g.skeleton().edges()) r[e.range][e.source] = true;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (r[i][k] && r[k][j]) r[i][j] = true;
  return r;
}

// ---------------------------------------------------------------------------
// Random 2-graphs

/// A random skeleton built from a few random commuting squares plus a few
/// loose edges, with a random compatible square table; nullopt when the
/// skeleton admits no table or too many to list. Loose edges make non-convex
/// graphs common.
inline std::optional<KGraph> random_two_graph(std::mt19937& rng, std::size_t max_vertices = 6) {
  std::uniform_int_distribution<std::size_t> nv(1, max_vertices);
  const std::size_t n = nv(rng);
  std::uniform_int_distribution<VertexId> pick(0, static_cast<VertexId>(n - 1));
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));
  std::vector<Edge> edges;
  auto add = [&](Colour c, VertexId s, VertexId r) {
    edges.push_back({"x" + std::to_string(edges.size()), c, s, r});
  };
  std::uniform_int_distribution<int> count(0, 2);
  const int squares = count(rng);
  for (int i = 0; i < squares; ++i) {
    const VertexId r = pick(rng), a = pick(rng), b = pick(rng), s = pick(rng);
    add(1, a, r);
    add(2, s, a);
    add(2, b, r);
    add(1, s, b);
  }
  const int loose = count(rng) + (squares == 0 ? 1 : 0);
  std::uniform_int_distribution<Colour> colour(1, 2);
  for (int i = 0; i < loose; ++i) add(colour(rng), pick(rng), pick(rng));

  Skeleton sk(2, names, edges);
  std::vector<SquareTable> tables;
  try {
    tables = enumerate_square_sets(sk);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::TooLarge) throw;
  }
  if (tables.empty()) return std::nullopt;
  std::uniform_int_distribution<std::size_t> which(0, tables.size() - 1);
  return validate(std::move(sk), tables[which(rng)]);
}

/// Retries random_two_graph until it produces a graph.
inline KGraph next_two_graph(std::mt19937& rng, std::size_t max_vertices = 6) {
  while (true)
    if (auto g = random_two_graph(rng, max_vertices)) return *g;
}

}  // namespace kgraph::testing

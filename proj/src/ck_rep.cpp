#include "kgraph/ck_rep.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <tuple>

#include "kgraph/linalg.hpp"
#include "kgraph/path_spaces.hpp"

namespace kgraph {

namespace {

using Entry = std::tuple<Eigen::Index, Eigen::Index, std::int64_t>;

std::vector<Entry> nonzeros(const RepMatrix& m) {
  if (!m.isCompressed()) {
    RepMatrix copy = m;
    copy.makeCompressed();
    return nonzeros(copy);
  }
  // Raw compressed arrays: per-column iterators dominate on mostly empty
  // matrices.
  std::vector<Entry> out;
  const auto* outer = m.outerIndexPtr();
  const auto* inner = m.innerIndexPtr();
  const auto* value = m.valuePtr();
  for (Eigen::Index c = 0; c < m.outerSize(); ++c)
    for (auto k = outer[c]; k < outer[c + 1]; ++k)
      if (value[k] != 0) out.emplace_back(c, inner[k], value[k]);
  std::sort(out.begin(), out.end());
  return out;
}

// Sorts by (column, row), sums repeated positions and drops zeros.
std::vector<Entry> normalised(std::vector<Entry> e) {
  std::sort(e.begin(), e.end());
  std::vector<Entry> out;
  for (const auto& [c, r, v] : e) {
    if (!out.empty() && std::get<0>(out.back()) == c && std::get<1>(out.back()) == r)
      std::get<2>(out.back()) += v;
    else
      out.emplace_back(c, r, v);
  }
  std::erase_if(out, [](const Entry& x) { return std::get<2>(x) == 0; });
  return out;
}

// Appends the entries of a b^*, given both as (column, row, value) sorted by
// column: (a b^*)(i, j) = sum_k a(i, k) b(j, k).
void times_adjoint(const std::vector<Entry>& a, const std::vector<Entry>& b, std::vector<Entry>& out) {
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    const auto ka = std::get<0>(a[i]), kb = std::get<0>(b[j]);
    if (ka < kb) {
      ++i;
    } else if (kb < ka) {
      ++j;
    } else {
      std::size_t i_end = i, j_end = j;
      while (i_end < a.size() && std::get<0>(a[i_end]) == ka) ++i_end;
      while (j_end < b.size() && std::get<0>(b[j_end]) == kb) ++j_end;
      for (std::size_t x = i; x < i_end; ++x)
        for (std::size_t y = j; y < j_end; ++y)
          out.emplace_back(std::get<1>(b[y]), std::get<1>(a[x]), std::get<2>(a[x]) * std::get<2>(b[y]));
      i = i_end;
      j = j_end;
    }
  }
}

RepMatrix adjoint(const RepMatrix& m) { return RepMatrix(m.transpose()); }

RepMatrix zero_matrix(std::size_t n) {
  return RepMatrix(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
}

Degree whole_window(const KGraph& g) {
  // In an acyclic skeleton every path has fewer edges than there are vertices.
  const auto n = static_cast<Degree::value_type>(std::max<std::size_t>(g.vertex_count(), 1));
  return Degree(std::vector<Degree::value_type>(g.k(), n));
}

std::vector<Path> all_paths(const KGraph& g, const Degree& window) {
  std::vector<Path> out;
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    for (Path& p : paths_up_to(g, v, window)) out.push_back(std::move(p));
  std::sort(out.begin(), out.end());
  return out;
}

// Paths of the rep with degree <= cap, bucketed by `key` (range or source).
template <typename Key>
std::vector<std::vector<const Path*>> bucket(const CKRep& rep, const Degree& cap, Key key) {
  std::vector<std::vector<const Path*>> out(rep.graph.vertex_count());
  for (const auto& [p, m] : rep.matrices)
    if (leq(p.degree(), cap)) out[key(p)].push_back(&p);
  return out;
}

void relation4_violations(const CKRep& rep, const Degree& cap, std::vector<RelationViolation>& out) {
  const KGraph& g = rep.graph;
  const std::size_t n = rep.dimension();
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    for (const Degree& m : degree_box(Degree::zero(g.k()), cap)) {
      RepMatrix sum = zero_matrix(n);
      for (const Path& lambda : le_paths(g, v, m)) {
        const RepMatrix& s = rep.S(lambda);
        sum += RepMatrix(s * adjoint(s));
      }
      if (!same_matrix(sum, rep.S_vertex(v)))
        out.push_back({4, "relation at " + g.skeleton().vertex_name(v) + " for m=" + m.to_string()});
    }
  }
}

}  // namespace

const RepMatrix& CKRep::S(const Path& lambda) const {
  auto it = matrices.find(lambda);
  if (it == matrices.end())
    throw Error(ErrorCode::PreconditionViolated, "no matrix for path " + graph.describe(lambda));
  return it->second;
}

bool same_matrix(const RepMatrix& a, const RepMatrix& b) {
  return a.rows() == b.rows() && a.cols() == b.cols() && nonzeros(a) == nonzeros(b);
}

Degree max_path_degree(const KGraph& g) {
  Degree out = Degree::zero(g.k());
  for (const Path& p : all_paths(g, whole_window(g))) out = join(out, p.degree());
  return out;
}

CKRep build_rep(const KGraph& g) {
  if (auto convex = is_locally_convex(g); !convex.locally_convex) {
    const auto& w = convex.witnesses.front();
    const Skeleton& sk = g.skeleton();
    throw Error(ErrorCode::NotLocallyConvex, "witness (" + sk.vertex_name(w.vertex) + "," + std::to_string(w.i) +
                                                 "," + std::to_string(w.j) + "," + sk.edge(w.lambda).id + "," +
                                                 sk.edge(w.mu).id + ")");
  }
  if (has_cycle(g)) throw Error(ErrorCode::InfiniteBoundary, "the skeleton has a directed cycle");

  const Degree window = whole_window(g);
  CKRep rep{g, {}, {}};
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    for (BoundaryPath& x : boundary_paths(g, v, window)) {
      if (!x.complete()) throw std::logic_error("truncated boundary path in an acyclic graph");
      rep.basis.push_back(std::move(x));
    }
  }
  std::sort(rep.basis.begin(), rep.basis.end());

  std::map<Path, Eigen::Index> index;
  std::vector<std::vector<Eigen::Index>> by_range(g.vertex_count());
  for (std::size_t i = 0; i < rep.basis.size(); ++i) {
    index.emplace(rep.basis[i].prefix, static_cast<Eigen::Index>(i));
    by_range[rep.basis[i].range()].push_back(static_cast<Eigen::Index>(i));
  }

  const auto n = static_cast<Eigen::Index>(rep.basis.size());
  for (Path& lambda : all_paths(g, window)) {
    std::vector<Eigen::Triplet<std::int64_t>> entries;
    for (Eigen::Index col : by_range[lambda.source()]) {
      auto it = index.find(compose(g, lambda, rep.basis[col].prefix));
      if (it == index.end()) throw std::logic_error("lambda x is not a boundary path");
      entries.emplace_back(it->second, col, 1);
    }
    RepMatrix m(n, n);
    m.setFromTriplets(entries.begin(), entries.end());
    rep.matrices.emplace(std::move(lambda), std::move(m));
  }
  return rep;
}

std::vector<RelationViolation> verify_ck_relations(const CKRep& rep, const Degree& cap) {
  const KGraph& g = rep.graph;
  std::vector<RelationViolation> out;
  const std::size_t n = rep.dimension();

  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const RepMatrix& p = rep.S_vertex(v);
    const std::string name = g.skeleton().vertex_name(v);
    if (!same_matrix(adjoint(p), p) || !same_matrix(RepMatrix(p * p), p))
      out.push_back({1, "S_" + name + " is not a projection"});
    for (VertexId w = v + 1; w < g.vertex_count(); ++w)
      if (!same_matrix(RepMatrix(p * rep.S_vertex(w)), zero_matrix(n)))
        out.push_back({1, "S_" + name + " S_" + g.skeleton().vertex_name(w) + " != 0"});
  }

  const auto by_range = bucket(rep, cap, [](const Path& p) { return p.range(); });
  for (const auto& [lambda, s_lambda] : rep.matrices) {
    if (!leq(lambda.degree(), cap)) continue;
    for (const Path* mu : by_range[lambda.source()]) {
      const Path joined = compose(g, lambda, *mu);
      if (!same_matrix(rep.S(joined), RepMatrix(s_lambda * rep.S(*mu))))
        out.push_back({2, "S_{" + g.describe(lambda) + "} S_{" + g.describe(*mu) + "} != S_{" +
                              g.describe(joined) + "}"});
    }
    if (!same_matrix(RepMatrix(adjoint(s_lambda) * s_lambda), rep.S_vertex(lambda.source())))
      out.push_back({3, "S_{" + g.describe(lambda) + "}^* S_{" + g.describe(lambda) + "} != S_s"});
  }

  relation4_violations(rep, cap, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<RelationViolation> verify_edge_level_relations(const CKRep& rep) {
  const KGraph& g = rep.graph;
  std::vector<RelationViolation> out;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    for (Colour i = 1; i <= g.k(); ++i) {
      const auto edges = g.skeleton().edges_into(v, i);
      if (edges.empty()) continue;
      RepMatrix sum = zero_matrix(rep.dimension());
      for (EdgeId e : edges) {
        const RepMatrix& s = rep.S(g.edge(e));
        sum += RepMatrix(s * adjoint(s));
      }
      if (!same_matrix(sum, rep.S_vertex(v)))
        out.push_back({0, "edge-level relation at " + g.skeleton().vertex_name(v) + " colour " + std::to_string(i)});
    }
  }
  return out;
}

bool verify_edge_level_equivalence(const CKRep& rep, const Degree& cap) {
  std::vector<RelationViolation> relation4;
  relation4_violations(rep, cap, relation4);
  return verify_edge_level_relations(rep).empty() == relation4.empty();
}

std::vector<RelationViolation> verify_spanning_formula(const CKRep& rep, const Degree& cap) {
  const KGraph& g = rep.graph;
  const std::size_t n = rep.dimension();
  std::vector<RelationViolation> out;

  // Entries of every matrix once, so the inner loop never touches the
  // n-wide column structure.
  std::map<Path, std::vector<Entry>> entries;
  for (const auto& [p, m] : rep.matrices) entries.emplace(p, nonzeros(m));

  const auto by_range = bucket(rep, cap, [](const Path& p) { return p.range(); });
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    std::map<Degree, std::vector<Path>> le_at;
    for (const Degree& q : degree_box(Degree::zero(g.k()), cap)) le_at.emplace(q, le_paths(g, v, q));
    for (const Path* lambda : by_range[v]) {
      for (const Path* mu : by_range[v]) {
        const std::vector<Entry> lhs = nonzeros(RepMatrix(adjoint(rep.S(*lambda)) * rep.S(*mu)));
        for (const Degree& q : degree_box(join(lambda->degree(), mu->degree()), cap)) {
          std::vector<Entry> rhs;
          for (const auto& [alpha, beta] : common_extensions_in(g, *lambda, *mu, le_at.at(q)))
            times_adjoint(entries.at(alpha), entries.at(beta), rhs);
          if (normalised(std::move(rhs)) != lhs)
            out.push_back({5, "S_{" + g.describe(*lambda) + "}^* S_{" + g.describe(*mu) + "} at q=" + q.to_string()});
        }
      }
    }
  }

  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    for (const Degree& q : degree_box(Degree::zero(g.k()), cap)) {
      const auto le = le_paths(g, v, q);
      for (const Path& lambda : le) {
        for (const Path& mu : le) {
          const RepMatrix lhs = adjoint(rep.S(lambda)) * rep.S(mu);
          const bool ok = lambda == mu ? same_matrix(lhs, rep.S_vertex(lambda.source()))
                                       : same_matrix(lhs, zero_matrix(n));
          if (!ok)
            out.push_back({6, "S_{" + g.describe(lambda) + "}^* S_{" + g.describe(mu) + "} in Lambda^{<=" +
                                  q.to_string() + "}"});
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Path> forced_zero_generators(const KGraph& g) {
  const Skeleton& sk = g.skeleton();
  std::vector<bool> edge_zero(sk.edge_count(), false);
  std::vector<bool> vertex_zero(sk.vertex_count(), false);
  auto all_zero = [&](std::span<const EdgeId> edges) {
    return std::all_of(edges.begin(), edges.end(), [&](EdgeId e) { return edge_zero[e]; });
  };

  bool changed = true;
  while (changed) {
    changed = false;
    for (EdgeId mu = 0; mu < sk.edge_count(); ++mu) {
      if (edge_zero[mu]) continue;
      const Edge& e = sk.edge(mu);
      bool zero = vertex_zero[e.range] || vertex_zero[e.source];
      for (Colour j = 1; j <= g.k() && !zero; ++j) {
        if (j == e.colour || sk.edges_into(e.range, j).empty()) continue;
        zero = all_zero(sk.edges_into(e.source, j));
      }
      if (zero) edge_zero[mu] = changed = true;
    }
    for (VertexId v = 0; v < sk.vertex_count(); ++v) {
      if (vertex_zero[v]) continue;
      for (Colour i = 1; i <= g.k(); ++i) {
        const auto into = sk.edges_into(v, i);
        if (!into.empty() && all_zero(into)) {
          vertex_zero[v] = changed = true;
          break;
        }
      }
    }
  }

  std::vector<Path> out;
  for (VertexId v = 0; v < sk.vertex_count(); ++v)
    if (vertex_zero[v]) out.push_back(g.vertex(v));
  for (EdgeId e = 0; e < sk.edge_count(); ++e)
    if (edge_zero[e]) out.push_back(g.edge(e));
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t span_dimension(const CKRep& rep) {
  const std::size_t n = rep.dimension();
  if (n == 0) return 0;
  const auto by_source = bucket(rep, max_path_degree(rep.graph), [](const Path& p) { return p.source(); });
  std::set<std::vector<Entry>> distinct;
  for (const auto& group : by_source)
    for (const Path* alpha : group)
      for (const Path* beta : group) distinct.insert(nonzeros(RepMatrix(rep.S(*alpha) * adjoint(rep.S(*beta)))));

  std::vector<SparseRow<Rational>> rows;
  rows.reserve(distinct.size());
  for (const auto& entries : distinct) {
    SparseRow<Rational> row;
    for (const auto& [col, r, value] : entries) row.emplace_back(col * static_cast<Eigen::Index>(n) + r, Rational(value));
    rows.push_back(std::move(row));
  }
  return sparse_exact_rank(rows);
}

}  // namespace kgraph

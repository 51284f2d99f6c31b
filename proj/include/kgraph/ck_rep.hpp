#pragma once

// The boundary-path representation: S_lambda u_x = u_{lambda x} when
// s(lambda) = r(x), and 0 otherwise, on the span of complete boundary paths.

#include <Eigen/SparseCore>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "kgraph/boundary.hpp"
#include "kgraph/kgraph.hpp"

namespace kgraph {

/// Column-major 0/1 matrix over the rep basis.
using RepMatrix = Eigen::SparseMatrix<std::int64_t>;

/// Plain data so that tests can build doubles with perturbed matrices.
struct CKRep {
  KGraph graph;
  /// Complete boundary paths in canonical order; index = basis position.
  std::vector<BoundaryPath> basis;
  /// One matrix per path of the graph.
  std::map<Path, RepMatrix> matrices;

  std::size_t dimension() const noexcept { return basis.size(); }
  /// Throws PreconditionViolated for a path with no matrix.
  const RepMatrix& S(const Path& lambda) const;
  const RepMatrix& S_vertex(VertexId v) const { return S(graph.vertex(v)); }
};

/// Throws NotLocallyConvex, or InfiniteBoundary when the skeleton has a
/// directed cycle.
CKRep build_rep(const KGraph& g);

/// Exact equality ignoring stored zeros.
bool same_matrix(const RepMatrix& a, const RepMatrix& b);

struct RelationViolation {
  /// 1 to 4 for the Cuntz-Krieger relations; 0 for the edge-level relation;
  /// 5 for the spanning formula; 6 for orthogonality of Lambda^{<=q} ranges.
  int relation;
  std::string description;

  friend bool operator==(const RelationViolation&, const RelationViolation&) = default;
  friend auto operator<=>(const RelationViolation&, const RelationViolation&) = default;
};

/// Relations (1)-(4) over every path and every m <= cap. Sorted.
std::vector<RelationViolation> verify_ck_relations(const CKRep& rep, const Degree& cap);

/// S_v = sum over Lambda^{e_i}(v) of S_e S_e^* whenever that set is nonempty.
std::vector<RelationViolation> verify_edge_level_relations(const CKRep& rep);

/// Whether the edge-level suite and the relation (4) suite up to cap give the
/// same answer. On a representation built by build_rep both pass.
bool verify_edge_level_equivalence(const CKRep& rep, const Degree& cap);

/// For every lambda, mu with a common range and every q with
/// d(lambda) v d(mu) <= q <= cap: S_lambda^* S_mu equals the sum of
/// S_alpha S_beta^* over common_extensions(lambda, mu, q). Also
/// S_lambda^* S_mu = delta S_{s(lambda)} on Lambda^{<=q}. Sorted.
std::vector<RelationViolation> verify_spanning_formula(const CKRep& rep, const Degree& cap);

/// Edges and vertices that vanish in every Cuntz-Krieger family, by fixpoint
/// of: an edge mu in Lambda^{e_i}(v) vanishes when some other colour j reaches
/// v and every colour-j edge into s(mu) already vanishes; an edge with a
/// vanishing endpoint vanishes; a vertex vanishes when, for some colour, the
/// edges into it are nonempty and all vanish. Sorted.
std::vector<Path> forced_zero_generators(const KGraph& g);

/// Dimension of span{S_alpha S_beta^* : s(alpha) = s(beta)}, by exact rank.
std::size_t span_dimension(const CKRep& rep);

/// Largest degree of any path, coordinatewise. Requires an acyclic skeleton.
Degree max_path_degree(const KGraph& g);

}  // namespace kgraph

#pragma once

// Path-space enumeration. Every set-valued result is sorted in canonical
// Path order.

#include <vector>

#include "kgraph/kgraph.hpp"

namespace kgraph {

/// Lambda^m(v).
std::vector<Path> paths_of_degree(const KGraph& g, VertexId v, const Degree& m);

/// Paths with range v and degree <= q.
std::vector<Path> paths_up_to(const KGraph& g, VertexId v, const Degree& q);

/// Paths with source v and degree <= q.
std::vector<Path> paths_with_source(const KGraph& g, VertexId v, const Degree& q);

/// Membership in Lambda^{<=q}: d(lambda) <= q, and lambda cannot be extended
/// by an edge of colour i whenever d(lambda) + e_i <= q.
bool in_le(const KGraph& g, const Path& lambda, const Degree& q);

/// Lambda^{<=q}(v). Never empty.
std::vector<Path> le_paths(const KGraph& g, VertexId v, const Degree& q);

/// All (alpha, beta) with lambda alpha = mu beta in Lambda^{<=q}(r(lambda)).
/// Throws PreconditionViolated unless r(lambda) = r(mu) and both degrees are
/// <= q.
std::vector<std::pair<Path, Path>> common_extensions(const KGraph& g, const Path& lambda, const Path& mu,
                                                     const Degree& q);

/// common_extensions with Lambda^{<=q}(r(lambda)) supplied by the caller, for
/// loops that reuse it across many pairs. `le` must be le_paths(g, r, q).
std::vector<std::pair<Path, Path>> common_extensions_in(const KGraph& g, const Path& lambda, const Path& mu,
                                                        const std::vector<Path>& le);

/// A vertex v with lambda in Lambda^{e_i}(v), mu in Lambda^{e_j}(v) (i < j)
/// where s(lambda) receives no colour-j edge or s(mu) no colour-i edge.
struct ConvexityWitness {
  VertexId vertex;
  Colour i;
  Colour j;
  EdgeId lambda;
  EdgeId mu;

  friend bool operator==(const ConvexityWitness&, const ConvexityWitness&) = default;
};

struct ConvexityReport {
  bool locally_convex = true;
  std::vector<ConvexityWitness> witnesses;
};

ConvexityReport is_locally_convex(const KGraph& g);

/// For each vertex, the colours i with Lambda^{e_i}(v) empty.
std::vector<std::vector<Colour>> source_report(const KGraph& g);

struct LemmaCounterexample {
  enum class Kind {
    /// lambda in Lambda^{<=m}, alpha in Lambda^{<=n}(s(lambda)), but
    /// lambda alpha is not in Lambda^{<=(m+n)}.
    ConcatenationEscapes,
    /// An element of Lambda^{<=m}(v) that does not factor through
    /// Lambda^{<=(m-e_j)}(v) Lambda^{<=e_j}.
    NotFactorisable,
    /// A product lambda' lambda'' outside Lambda^{<=m}(v).
    SpuriousProduct,
  };
  Kind kind;
  VertexId vertex;
  Degree m;
  /// n for ConcatenationEscapes; e_j for the factorisation kinds.
  Degree n;
  Path path;
};

/// Exhaustive check, for all m, n <= cap, of the concatenation property of
/// Lambda^{<=m} and of the factorisation Lambda^{<=m}(v) =
/// Lambda^{<=(m-e_j)}(v) Lambda^{<=e_j}. The second can fail when g is not
/// locally convex.
std::vector<LemmaCounterexample> check_le_lemmas(const KGraph& g, const Degree& cap);

}  // namespace kgraph

#pragma once

// Finite combinations of s_alpha s_beta^*, the gauge projection, and the
// block structure of the fixed-point core.

#include <algorithm>
#include <map>
#include <vector>

#include "kgraph/ck_rep.hpp"
#include "kgraph/kgraph.hpp"
#include "kgraph/linalg.hpp"

namespace kgraph {

/// sum of coefficient * s_alpha s_beta^* with s(alpha) = s(beta). Normalised:
/// sorted by (alpha, beta), no duplicate pairs, no zero coefficients.
template <typename Scalar>
class SpanElement {
 public:
  struct Term {
    Path alpha;
    Path beta;
    Scalar coefficient;
  };

  SpanElement() = default;

  /// Throws PreconditionViolated unless s(alpha) = s(beta).
  void add(const Path& alpha, const Path& beta, const Scalar& coefficient) {
    if (alpha.source() != beta.source())
      throw Error(ErrorCode::PreconditionViolated, "s_alpha s_beta^* needs s(alpha) = s(beta)");
    auto [it, fresh] = terms_.try_emplace(std::pair{alpha, beta}, coefficient);
    if (!fresh) it->second += coefficient;
    if (it->second == Scalar(0)) terms_.erase(it);
  }

  std::vector<Term> terms() const {
    std::vector<Term> out;
    for (const auto& [key, c] : terms_) out.push_back({key.first, key.second, c});
    return out;
  }
  std::size_t size() const noexcept { return terms_.size(); }
  bool empty() const noexcept { return terms_.empty(); }

  friend bool operator==(const SpanElement&, const SpanElement&) = default;

 private:
  std::map<std::pair<Path, Path>, Scalar> terms_;
};

/// Keeps exactly the terms with d(alpha) = d(beta).
template <typename Scalar>
SpanElement<Scalar> gauge_project(const SpanElement<Scalar>& e) {
  SpanElement<Scalar> out;
  for (const auto& t : e.terms())
    if (t.alpha.degree() == t.beta.degree()) out.add(t.alpha, t.beta, t.coefficient);
  return out;
}

/// The operator of e in the representation, as a dense matrix.
template <typename Scalar>
DenseMatrix<Scalar> evaluate(const CKRep& rep, const SpanElement<Scalar>& e) {
  const auto n = static_cast<Eigen::Index>(rep.dimension());
  DenseMatrix<Scalar> out = DenseMatrix<Scalar>::Zero(n, n);
  for (const auto& t : e.terms()) {
    const RepMatrix unit = rep.S(t.alpha) * RepMatrix(rep.S(t.beta).transpose());
    for (Eigen::Index c = 0; c < unit.outerSize(); ++c)
      for (RepMatrix::InnerIterator it(unit, c); it; ++it)
        out(it.row(), it.col()) += t.coefficient * Scalar(it.value());
  }
  return out;
}

struct CoreBlock {
  Degree p;
  VertexId vertex;
  std::size_t dimension;

  friend bool operator==(const CoreBlock&, const CoreBlock&) = default;
};

/// s_lambda s_mu^* at level `level` in block (from_p, from_vertex) equals the
/// sum over alpha in Lambda^{<=(q-level)}(from_vertex) of
/// s_{lambda alpha} s_{mu alpha}^*; multiplicity counts those alpha landing in
/// block (to_p, to_vertex) of level q.
struct CoreInclusion {
  Degree level;
  Degree from_p;
  VertexId from_vertex;
  Degree to_p;
  VertexId to_vertex;
  std::size_t multiplicity;

  friend bool operator==(const CoreInclusion&, const CoreInclusion&) = default;
};

struct CoreBlockReport {
  Degree q;
  /// Nonzero blocks F_{q,p}(v), sorted by (p, v); dimension counts
  /// lambda in Lambda^{<=q} with d(lambda) = p and s(lambda) = v.
  std::vector<CoreBlock> blocks;
  /// From every level p < q into level q, sorted.
  std::vector<CoreInclusion> inclusions;

  /// Sum of dimension^2.
  std::size_t total_dimension() const;
};

/// Blocks of level q, keyed (d(lambda), s(lambda)) over all
/// lambda in Lambda^{<=q}.
std::vector<CoreBlock> core_blocks(const KGraph& g, const Degree& q);

CoreBlockReport core_report(const KGraph& g, const Degree& q);

}  // namespace kgraph

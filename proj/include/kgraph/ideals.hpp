#pragma once

#include <Eigen/Core>
#include <initializer_list>
#include <string>
#include <vector>

#include "kgraph/kgraph.hpp"

namespace kgraph {

/// Subset of the vertices of one graph, as a membership mask.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t vertex_count) : mask_(vertex_count, false) {}
  static VertexSet of(std::size_t vertex_count, std::initializer_list<VertexId> members);
  static VertexSet of(std::size_t vertex_count, const std::vector<VertexId>& members);
  static VertexSet all(std::size_t vertex_count) {
    VertexSet s(vertex_count);
    s.mask_.assign(vertex_count, true);
    return s;
  }

  std::size_t universe() const noexcept { return mask_.size(); }
  bool contains(VertexId v) const { return mask_.at(v); }
  void insert(VertexId v) { mask_.at(v) = true; }
  std::size_t size() const noexcept;
  bool empty() const noexcept { return size() == 0; }
  std::vector<VertexId> members() const;

  friend VertexSet operator|(const VertexSet& a, const VertexSet& b);
  friend VertexSet operator&(const VertexSet& a, const VertexSet& b);
  bool subset_of(const VertexSet& other) const;

  /// Member names joined with ',' in vertex-id order.
  std::string describe(const Skeleton& sk) const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  /// Smaller sets first, then by member list.
  friend bool operator<(const VertexSet& a, const VertexSet& b);

 private:
  std::vector<bool> mask_;
};

using ReachabilityMatrix = Eigen::Matrix<bool, Eigen::Dynamic, Eigen::Dynamic>;

/// geq(v, w) iff some path has range v and source w. Reflexive.
ReachabilityMatrix reachability_geq(const KGraph& g);

bool is_hereditary(const KGraph& g, const VertexSet& h);
bool is_saturated(const KGraph& g, const VertexSet& h);

/// Smallest hereditary superset.
VertexSet hereditary_closure(const KGraph& g, const VertexSet& h);

/// One application of Sigma: h together with every v such that, for some
/// colour i, s(lambda) lies in h for all lambda in Lambda^{<=e_i}(v).
/// Lambda^{<=e_i}(v) is {v} when v receives no colour-i edge.
VertexSet sigma(const KGraph& g, const VertexSet& h);

/// Fixpoint of sigma: the smallest saturated superset.
VertexSet saturate(const KGraph& g, const VertexSet& h);

/// Every saturated hereditary set, sorted. Throws TooLarge above 20 vertices.
std::vector<VertexSet> enumerate_sat_hered(const KGraph& g);

VertexSet lattice_meet(const VertexSet& a, const VertexSet& b);
VertexSet lattice_join(const KGraph& g, const VertexSet& a, const VertexSet& b);

/// The graph on the vertices outside h, keeping edges whose source avoids h.
/// Throws NotHereditary or NotSaturated.
KGraph quotient_graph(const KGraph& g, const VertexSet& h);

/// The graph on h, keeping edges whose range lies in h. Throws NotHereditary.
KGraph restriction_graph(const KGraph& g, const VertexSet& h);

/// Parses comma-joined vertex names. Throws UnknownVertex.
VertexSet parse_vertex_set(const KGraph& g, const std::string& text);

}  // namespace kgraph

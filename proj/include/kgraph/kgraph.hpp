#pragma once

// Finite k-graphs given by a coloured 1-skeleton and a table of squares, and
// their paths in colour-block normal form.
//
// Composition convention: for paths mu, nu with s(mu) = r(nu), the composite
// mu nu traverses nu first. Edge words are always written outermost first, so
// the word {g, e} denotes the path "ge" (e traversed first).

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "kgraph/degree.hpp"
#include "kgraph/error.hpp"

namespace kgraph {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;
/// Colours are numbered 1..k.
using Colour = std::uint32_t;
/// A sequence of edges, outermost (last traversed) first.
using EdgeWord = std::vector<EdgeId>;

struct Edge {
  std::string id;
  Colour colour = 1;
  VertexId source = 0;
  VertexId range = 0;
};

/// Finite coloured directed graph. Immutable once constructed.
class Skeleton {
 public:
  Skeleton() = default;
  /// Throws Error(InvalidSkeleton / ColourOutOfRange / UnknownVertex) when an
  /// invariant fails.
  Skeleton(std::size_t k, std::vector<std::string> vertices, std::vector<Edge> edges);

  std::size_t k() const noexcept { return k_; }
  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  const std::string& vertex_name(VertexId v) const { return vertices_.at(v); }
  const std::vector<std::string>& vertex_names() const noexcept { return vertices_; }
  const Edge& edge(EdgeId e) const { return edges_.at(e); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  Colour colour(EdgeId e) const { return edges_[e].colour; }

  std::optional<VertexId> find_vertex(const std::string& name) const;
  std::optional<EdgeId> find_edge(const std::string& id) const;

  /// Lambda^{e_colour}(v): edges of the given colour with range v.
  std::span<const EdgeId> edges_into(VertexId v, Colour colour) const;
  /// Edges of the given colour with source v.
  std::span<const EdgeId> edges_out_of(VertexId v, Colour colour) const;

 private:
  std::size_t k_ = 0;
  std::vector<std::string> vertices_;
  std::vector<Edge> edges_;
  std::unordered_map<std::string, VertexId> vertex_index_;
  std::unordered_map<std::string, EdgeId> edge_index_;
  // Indexed by v * k + (colour - 1).
  std::vector<std::vector<EdgeId>> into_;
  std::vector<std::vector<EdgeId>> out_of_;
};

/// A commuting square: outer_lo * inner_lo == outer_hi * inner_hi, where
/// outer_lo and inner_hi have colour i, inner_lo and outer_hi colour j, i < j.
struct Square {
  EdgeId outer_lo = 0;
  EdgeId inner_lo = 0;
  EdgeId outer_hi = 0;
  EdgeId inner_hi = 0;

  friend bool operator==(const Square&, const Square&) = default;
  friend auto operator<=>(const Square&, const Square&) = default;
};

using SquareTable = std::vector<Square>;

/// Lookup from a bi-coloured composable pair (outer, inner) to the other
/// factorisation of the same degree e_i + e_j path.
class SquareIndex {
 public:
  SquareIndex() = default;
  /// Throws DuplicateSquare when a pair is claimed twice and EndpointMismatch
  /// when a square is malformed.
  SquareIndex(const Skeleton& skeleton, const SquareTable& squares);

  std::optional<std::pair<EdgeId, EdgeId>> find(EdgeId outer, EdgeId inner) const;
  std::size_t size() const noexcept { return map_.size(); }

 private:
  std::uint64_t key(EdgeId outer, EdgeId inner) const {
    return static_cast<std::uint64_t>(outer) * edge_count_ + inner;
  }
  std::uint64_t edge_count_ = 0;
  std::unordered_map<std::uint64_t, std::pair<EdgeId, EdgeId>> map_;
};

/// A morphism of the k-graph in colour-block normal form: the colour-1 block
/// is outermost, the colour-k block is traversed first.
class Path {
 public:
  const Degree& degree() const noexcept { return degree_; }
  VertexId range() const noexcept { return range_; }
  VertexId source() const noexcept { return source_; }
  /// The normal-form word, outermost first.
  std::span<const EdgeId> edges() const noexcept { return edges_; }
  const EdgeWord& word() const noexcept { return edges_; }
  /// The edges of one colour block, outermost first.
  std::span<const EdgeId> block(Colour colour) const;
  bool is_vertex() const noexcept { return edges_.empty(); }

  // Canonical order: degree (lexicographic), then edges, then range.
  friend bool operator==(const Path&, const Path&) = default;
  friend auto operator<=>(const Path&, const Path&) = default;

 private:
  friend class KGraph;
  Path(Degree degree, EdgeWord edges, VertexId range, VertexId source)
      : degree_(std::move(degree)), edges_(std::move(edges)), range_(range), source_(source) {}

  Degree degree_;
  EdgeWord edges_;
  VertexId range_ = 0;
  VertexId source_ = 0;
};

struct PathHash {
  std::size_t operator()(const Path& p) const noexcept;
};

/// A validated k-graph. Only `validate` constructs one.
class KGraph {
 public:
  const Skeleton& skeleton() const noexcept { return skeleton_; }
  const SquareTable& squares() const noexcept { return squares_; }
  std::size_t k() const noexcept { return skeleton_.k(); }
  std::size_t vertex_count() const noexcept { return skeleton_.vertex_count(); }
  Colour colour(EdgeId e) const { return skeleton_.colour(e); }

  /// The other factorisation of the bi-coloured pair (outer, inner).
  std::pair<EdgeId, EdgeId> swap(EdgeId outer, EdgeId inner) const;

  Path vertex(VertexId v) const;
  Path edge(EdgeId e) const;
  /// The path spelled by a composable word in any colour order. Throws
  /// NotComposable.
  Path path(const EdgeWord& word) const;
  /// Wraps a word already in normal form. Throws NotComposable or
  /// PreconditionViolated if it is not.
  Path from_normal_form(VertexId range, EdgeWord word) const;

  /// Rewrites a composable word into colour-block normal form in place,
  /// swapping the leftmost wrongly ordered adjacent pair first.
  void normalise(EdgeWord& word) const;
  /// Rearranges a composable word so that its colour sequence equals
  /// `colours` (a permutation of the word's colours), using square swaps.
  void respell(EdgeWord& word, const std::vector<Colour>& colours) const;

  std::string describe(const Path& p) const;

 private:
  friend KGraph validate(Skeleton skeleton, SquareTable squares);
  KGraph(Skeleton skeleton, SquareTable squares, SquareIndex index)
      : skeleton_(std::move(skeleton)), squares_(std::move(squares)), index_(std::move(index)) {}

  void check_composable(const EdgeWord& word) const;

  Skeleton skeleton_;
  SquareTable squares_;
  SquareIndex index_;
};

/// Checks the square table against the skeleton (exactly-once, endpoints,
/// and for k >= 3 the cube condition). Throws MissingSquare, DuplicateSquare,
/// EndpointMismatch or CubeViolation.
KGraph validate(Skeleton skeleton, SquareTable squares);

/// Normal form of outer * inner. Throws NotComposable unless
/// source(outer) == range(inner).
Path compose(const KGraph& g, const Path& outer, const Path& inner);

/// The unique (mu, nu) with lambda = mu nu, d(mu) = m, d(nu) = n. Throws
/// DegreeMismatch unless d(lambda) == m + n.
std::pair<Path, Path> factorise(const KGraph& g, const Path& lambda, const Degree& m, const Degree& n);

/// The segment lambda(0, p) with degree p ∧ d(lambda).
Path initial_segment(const KGraph& g, const Path& lambda, const Degree& p);

/// Every edge word (outermost first) spelling lambda, sorted.
std::vector<EdgeWord> edge_spellings(const KGraph& g, const Path& lambda);

/// Omega_{k,m}: vertices p <= m, one colour-i edge with range p and source
/// p + e_i, and the forced squares. Vertex names join coordinates with '_'.
KGraph build_omega(std::size_t k, const Degree& m);

struct DirectedGraph {
  struct Arrow {
    std::string id;
    std::string source;
    std::string range;
  };
  std::vector<std::string> vertices;
  std::vector<Arrow> edges;
};

/// The path category of a directed graph as a 1-graph.
KGraph build_from_directed_graph(const DirectedGraph& e);

inline constexpr std::size_t kMaxSquareTableCandidates = 1'000'000;

/// Every square table on the skeleton that satisfies the exactly-once and
/// endpoint constraints, and for k >= 3 the cube condition. Deterministic
/// order. Throws TooLarge when the product over factorisation classes of
/// |class|! exceeds kMaxSquareTableCandidates.
std::vector<SquareTable> enumerate_square_sets(const Skeleton& skeleton);

struct CubeViolation {
  /// The tri-coloured word x y z (outermost first, colours increasing).
  EdgeWord triple;
  /// Reversed-colour words reached by the two face orders.
  EdgeWord via_first_route;
  EdgeWord via_second_route;
};

/// Reports every composable tri-coloured triple whose two rewrites to the
/// reverse colour order disagree. Requires the table to pass the
/// exactly-once and endpoint checks; throws MissingSquare otherwise.
std::vector<CubeViolation> check_cube_condition(const Skeleton& skeleton, const SquareTable& squares);

/// "g e g h"
std::string spell(const Skeleton& skeleton, std::span<const EdgeId> word);

}  // namespace kgraph

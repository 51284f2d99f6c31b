#include "kgraph/kgraph.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace kgraph {

// ---------------------------------------------------------------------------
// Skeleton
// ---------------------------------------------------------------------------

Skeleton::Skeleton(std::size_t k, std::vector<std::string> vertices, std::vector<Edge> edges)
    : k_(k), vertices_(std::move(vertices)), edges_(std::move(edges)) {
  if (k_ == 0) throw Error(ErrorCode::InvalidSkeleton, "k must be positive");
  for (VertexId v = 0; v < vertices_.size(); ++v) {
    if (vertices_[v].empty()) throw Error(ErrorCode::InvalidSkeleton, "empty vertex name");
    if (!vertex_index_.emplace(vertices_[v], v).second)
      throw Error(ErrorCode::InvalidSkeleton, "duplicate vertex '" + vertices_[v] + "'");
  }
  into_.assign(vertices_.size() * k_, {});
  out_of_.assign(vertices_.size() * k_, {});
  for (EdgeId e = 0; e < edges_.size(); ++e) {
    const Edge& edge = edges_[e];
    if (edge.id.empty()) throw Error(ErrorCode::InvalidSkeleton, "empty edge id");
    if (!edge_index_.emplace(edge.id, e).second)
      throw Error(ErrorCode::InvalidSkeleton, "duplicate edge '" + edge.id + "'");
    if (edge.colour < 1 || edge.colour > k_)
      throw Error(ErrorCode::ColourOutOfRange,
                  "edge '" + edge.id + "' has colour " + std::to_string(edge.colour) + " but k = " +
                      std::to_string(k_));
    if (edge.source >= vertices_.size() || edge.range >= vertices_.size())
      throw Error(ErrorCode::UnknownVertex, "edge '" + edge.id + "' has an endpoint outside the vertex set");
    into_[edge.range * k_ + edge.colour - 1].push_back(e);
    out_of_[edge.source * k_ + edge.colour - 1].push_back(e);
  }
}

std::optional<VertexId> Skeleton::find_vertex(const std::string& name) const {
  auto it = vertex_index_.find(name);
  if (it == vertex_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<EdgeId> Skeleton::find_edge(const std::string& id) const {
  auto it = edge_index_.find(id);
  if (it == edge_index_.end()) return std::nullopt;
  return it->second;
}

std::span<const EdgeId> Skeleton::edges_into(VertexId v, Colour colour) const {
  return into_.at(v * k_ + colour - 1);
}

std::span<const EdgeId> Skeleton::edges_out_of(VertexId v, Colour colour) const {
  return out_of_.at(v * k_ + colour - 1);
}

std::string spell(const Skeleton& skeleton, std::span<const EdgeId> word) {
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) out += ' ';
    out += skeleton.edge(word[i]).id;
  }
  return out;
}

// ---------------------------------------------------------------------------
// SquareIndex
// ---------------------------------------------------------------------------

SquareIndex::SquareIndex(const Skeleton& skeleton, const SquareTable& squares)
    : edge_count_(skeleton.edge_count()) {
  for (const Square& sq : squares) {
    const std::size_t n = skeleton.edge_count();
    if (sq.outer_lo >= n || sq.inner_lo >= n || sq.outer_hi >= n || sq.inner_hi >= n)
      throw Error(ErrorCode::EndpointMismatch, "square references an edge outside the skeleton");
    const Edge& ol = skeleton.edge(sq.outer_lo);
    const Edge& il = skeleton.edge(sq.inner_lo);
    const Edge& oh = skeleton.edge(sq.outer_hi);
    const Edge& ih = skeleton.edge(sq.inner_hi);
    const std::string name = "square [" + ol.id + ", " + il.id + ", " + oh.id + ", " + ih.id + "]";
    if (ol.colour != ih.colour || il.colour != oh.colour || ol.colour >= il.colour)
      throw Error(ErrorCode::EndpointMismatch, name + " does not have colours (i, j, j, i) with i < j");
    if (ol.source != il.range || oh.source != ih.range)
      throw Error(ErrorCode::EndpointMismatch, name + " has a non-composable pair");
    if (ol.range != oh.range || il.source != ih.source)
      throw Error(ErrorCode::EndpointMismatch, name + " has mismatched corners");
    auto add = [&](EdgeId outer, EdgeId inner, EdgeId outer2, EdgeId inner2) {
      if (!map_.emplace(key(outer, inner), std::pair{outer2, inner2}).second)
        throw Error(ErrorCode::DuplicateSquare, "pair " + skeleton.edge(outer).id + " " +
                                                    skeleton.edge(inner).id + " occurs in two squares");
    };
    add(sq.outer_lo, sq.inner_lo, sq.outer_hi, sq.inner_hi);
    add(sq.outer_hi, sq.inner_hi, sq.outer_lo, sq.inner_lo);
  }
}

std::optional<std::pair<EdgeId, EdgeId>> SquareIndex::find(EdgeId outer, EdgeId inner) const {
  auto it = map_.find(key(outer, inner));
  if (it == map_.end()) return std::nullopt;
  return it->second;
}

// ---------------------------------------------------------------------------
// Path
// ---------------------------------------------------------------------------

std::span<const EdgeId> Path::block(Colour colour) const {
  std::size_t begin = 0;
  for (Colour c = 1; c < colour; ++c) begin += degree_.at_colour(c);
  return std::span<const EdgeId>(edges_).subspan(begin, degree_.at_colour(colour));
}

std::size_t PathHash::operator()(const Path& p) const noexcept {
  std::size_t h = std::hash<VertexId>{}(p.range());
  for (EdgeId e : p.edges()) h ^= std::hash<EdgeId>{}(e) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

// ---------------------------------------------------------------------------
// KGraph
// ---------------------------------------------------------------------------

std::pair<EdgeId, EdgeId> KGraph::swap(EdgeId outer, EdgeId inner) const {
  if (auto hit = index_.find(outer, inner)) return *hit;
  throw Error(ErrorCode::MissingSquare,
              "no square contains " + skeleton_.edge(outer).id + " " + skeleton_.edge(inner).id);
}

Path KGraph::vertex(VertexId v) const {
  if (v >= vertex_count()) throw Error(ErrorCode::UnknownVertex, "vertex index out of range");
  return Path(Degree::zero(k()), {}, v, v);
}

Path KGraph::edge(EdgeId e) const {
  const Edge& edge = skeleton_.edge(e);
  return Path(Degree::unit(k(), edge.colour), {e}, edge.range, edge.source);
}

void KGraph::check_composable(const EdgeWord& word) const {
  for (std::size_t t = 0; t + 1 < word.size(); ++t) {
    if (skeleton_.edge(word[t]).source != skeleton_.edge(word[t + 1]).range)
      throw Error(ErrorCode::NotComposable, "edges " + skeleton_.edge(word[t]).id + " and " +
                                                skeleton_.edge(word[t + 1]).id + " are not composable");
  }
}

void KGraph::respell(EdgeWord& word, const std::vector<Colour>& colours) const {
  const std::size_t n = word.size();
  if (colours.size() != n) throw Error(ErrorCode::DegreeMismatch, "colour sequence length mismatch");
  // The t-th occurrence of colour c moves to the t-th slot of colour c.
  std::vector<std::vector<std::size_t>> slots(k() + 1);
  for (std::size_t i = 0; i < n; ++i) slots.at(colours[i]).push_back(i);
  std::vector<std::size_t> seen(k() + 1, 0);
  std::vector<std::size_t> target(n);
  for (std::size_t i = 0; i < n; ++i) {
    Colour c = colour(word[i]);
    if (seen[c] >= slots[c].size()) throw Error(ErrorCode::DegreeMismatch, "colour multiset mismatch");
    target[i] = slots[c][seen[c]++];
  }
  // Gnome sort: always resolves the leftmost inversion first.
  std::size_t i = 0;
  while (i + 1 < n) {
    if (target[i] > target[i + 1]) {
      auto [outer, inner] = swap(word[i], word[i + 1]);
      word[i] = outer;
      word[i + 1] = inner;
      std::swap(target[i], target[i + 1]);
      if (i > 0) --i;
    } else {
      ++i;
    }
  }
}

void KGraph::normalise(EdgeWord& word) const {
  std::vector<Colour> colours;
  colours.reserve(word.size());
  for (EdgeId e : word) colours.push_back(colour(e));
  std::sort(colours.begin(), colours.end());
  respell(word, colours);
}

Path KGraph::path(const EdgeWord& word) const {
  if (word.empty()) throw Error(ErrorCode::PreconditionViolated, "an empty word does not name a vertex");
  check_composable(word);
  EdgeWord w = word;
  normalise(w);
  Degree d = Degree::zero(k());
  for (EdgeId e : w) ++d[colour(e) - 1];
  VertexId r = skeleton_.edge(w.front()).range;
  VertexId s = skeleton_.edge(w.back()).source;
  return Path(std::move(d), std::move(w), r, s);
}

Path KGraph::from_normal_form(VertexId range, EdgeWord word) const {
  if (word.empty()) return vertex(range);
  check_composable(word);
  if (skeleton_.edge(word.front()).range != range)
    throw Error(ErrorCode::NotComposable, "word does not start at the given range");
  Degree d = Degree::zero(k());
  for (std::size_t t = 0; t < word.size(); ++t) {
    if (t && colour(word[t - 1]) > colour(word[t]))
      throw Error(ErrorCode::PreconditionViolated, "word is not in colour-block normal form");
    ++d[colour(word[t]) - 1];
  }
  VertexId s = skeleton_.edge(word.back()).source;
  return Path(std::move(d), std::move(word), range, s);
}

std::string KGraph::describe(const Path& p) const {
  if (p.is_vertex()) return skeleton_.vertex_name(p.range());
  return spell(skeleton_, p.edges());
}

KGraph validate(Skeleton skeleton, SquareTable squares) {
  SquareIndex index(skeleton, squares);
  for (EdgeId x = 0; x < skeleton.edge_count(); ++x) {
    const Edge& outer = skeleton.edge(x);
    for (Colour c = 1; c <= skeleton.k(); ++c) {
      if (c == outer.colour) continue;
      for (EdgeId y : skeleton.edges_into(outer.source, c)) {
        if (!index.find(x, y))
          throw Error(ErrorCode::MissingSquare,
                      "bi-coloured pair " + outer.id + " " + skeleton.edge(y).id + " is in no square");
      }
    }
  }
  if (skeleton.k() >= 3) {
    auto violations = check_cube_condition(skeleton, squares);
    if (!violations.empty())
      throw Error(ErrorCode::CubeViolation,
                  "tri-coloured path " + spell(skeleton, violations.front().triple) +
                      " rewrites to " + spell(skeleton, violations.front().via_first_route) + " and " +
                      spell(skeleton, violations.front().via_second_route));
  }
  std::sort(squares.begin(), squares.end());
  return KGraph(std::move(skeleton), std::move(squares), std::move(index));
}

// ---------------------------------------------------------------------------
// Composition and factorisation
// ---------------------------------------------------------------------------

Path compose(const KGraph& g, const Path& outer, const Path& inner) {
  if (outer.source() != inner.range())
    throw Error(ErrorCode::NotComposable, "source(" + g.describe(outer) + ") != range(" + g.describe(inner) + ")");
  if (inner.is_vertex()) return outer;
  if (outer.is_vertex()) return inner;
  EdgeWord word(outer.word());
  word.insert(word.end(), inner.word().begin(), inner.word().end());
  return g.path(word);
}

std::pair<Path, Path> factorise(const KGraph& g, const Path& lambda, const Degree& m, const Degree& n) {
  if (m.size() != g.k() || n.size() != g.k() || m + n != lambda.degree())
    throw Error(ErrorCode::DegreeMismatch, "cannot split degree " + lambda.degree().to_string() + " as " +
                                               m.to_string() + " + " + n.to_string());
  if (m.is_zero()) return {g.vertex(lambda.range()), lambda};
  if (n.is_zero()) return {lambda, g.vertex(lambda.source())};
  std::vector<Colour> colours;
  for (const Degree* part : {&m, &n})
    for (Colour c = 1; c <= g.k(); ++c) colours.insert(colours.end(), part->at_colour(c), c);
  EdgeWord word(lambda.word());
  g.respell(word, colours);
  const auto split = static_cast<std::ptrdiff_t>(m.total());
  EdgeWord head(word.begin(), word.begin() + split);
  EdgeWord tail(word.begin() + split, word.end());
  const VertexId middle = g.skeleton().edge(tail.front()).range;
  return {g.from_normal_form(lambda.range(), std::move(head)), g.from_normal_form(middle, std::move(tail))};
}

Path initial_segment(const KGraph& g, const Path& lambda, const Degree& p) {
  Degree m = meet(p, lambda.degree());
  return factorise(g, lambda, m, lambda.degree() - m).first;
}

std::vector<EdgeWord> edge_spellings(const KGraph& g, const Path& lambda) {
  std::vector<Colour> colours;
  for (EdgeId e : lambda.edges()) colours.push_back(g.colour(e));
  std::set<EdgeWord> out;
  do {
    EdgeWord word(lambda.word());
    g.respell(word, colours);
    out.insert(std::move(word));
  } while (std::next_permutation(colours.begin(), colours.end()));
  return {out.begin(), out.end()};
}

}  // namespace kgraph

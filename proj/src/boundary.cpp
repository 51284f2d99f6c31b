#include "kgraph/boundary.hpp"

#include <algorithm>
#include <map>

#include "kgraph/path_spaces.hpp"

namespace kgraph {

bool face_is_exhausted(const KGraph& g, const Path& lambda, Colour i) {
  const Skeleton& sk = g.skeleton();
  if (!sk.edges_into(lambda.source(), i).empty()) return false;
  const Degree& d = lambda.degree();
  Degree lo = Degree::zero(g.k());
  lo[i - 1] = d.at_colour(i);
  for (const Degree& p : degree_box(lo, d)) {
    if (p == d) continue;
    if (!sk.edges_into(initial_segment(g, lambda, p).source(), i).empty()) return false;
  }
  return true;
}

std::vector<BoundaryPath> boundary_paths(const KGraph& g, VertexId v, const Degree& cap) {
  std::vector<BoundaryPath> out;
  for (Path& lambda : paths_up_to(g, v, cap)) {
    std::vector<bool> exhausted(g.k());
    bool keep = true;
    for (Colour i = 1; i <= g.k() && keep; ++i) {
      exhausted[i - 1] = face_is_exhausted(g, lambda, i);
      keep = exhausted[i - 1] || lambda.degree().at_colour(i) == cap.at_colour(i);
    }
    if (keep) out.push_back({std::move(lambda), std::move(exhausted), cap});
  }
  return out;
}

namespace {

enum class Mark : unsigned char { Unseen, Open, Done };

bool cycle_from(const Skeleton& sk, VertexId v, std::vector<Mark>& mark) {
  mark[v] = Mark::Open;
  for (Colour c = 1; c <= sk.k(); ++c) {
    for (EdgeId e : sk.edges_into(v, c)) {
      const VertexId w = sk.edge(e).source;
      if (mark[w] == Mark::Open) return true;
      if (mark[w] == Mark::Unseen && cycle_from(sk, w, mark)) return true;
    }
  }
  mark[v] = Mark::Done;
  return false;
}

}  // namespace

bool has_cycle_below(const KGraph& g, VertexId v) {
  std::vector<Mark> mark(g.vertex_count(), Mark::Unseen);
  return cycle_from(g.skeleton(), v, mark);
}

bool has_cycle(const KGraph& g) {
  std::vector<Mark> mark(g.vertex_count(), Mark::Unseen);
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (mark[v] == Mark::Unseen && cycle_from(g.skeleton(), v, mark)) return true;
  return false;
}

std::string to_string(ConditionBVerdict verdict) {
  switch (verdict) {
    case ConditionBVerdict::Proven: return "PROVEN";
    case ConditionBVerdict::WitnessToDepth: return "WITNESS_TO_DEPTH";
    case ConditionBVerdict::RefutedToDepth: return "REFUTED_TO_DEPTH";
  }
  return "?";
}

namespace {

// First pair alpha != beta (in enumeration order) whose images under x agree
// within the window, or nullopt when x separates every pair.
std::optional<std::pair<Path, Path>> first_collision(const KGraph& g, const BoundaryPath& x,
                                                     const std::vector<Path>& alphas, const Degree& window) {
  std::map<Path, const Path*> seen;
  for (const Path& alpha : alphas) {
    Path image = compose(g, alpha, x.prefix);
    if (!x.complete()) image = initial_segment(g, image, window);
    auto [it, fresh] = seen.emplace(std::move(image), &alpha);
    if (!fresh) return std::pair{*it->second, alpha};
  }
  return std::nullopt;
}

}  // namespace

ConditionBResult condition_b_check(const KGraph& g, VertexId v, const Degree& depth) {
  if (!has_cycle_below(g, v)) {
    // Every path into v has fewer than |vertices| edges, so this window sees
    // the whole future of v.
    const auto n = static_cast<Degree::value_type>(g.vertex_count());
    const Degree whole(std::vector<Degree::value_type>(g.k(), n));
    const auto alphas = paths_with_source(g, v, whole);
    for (const BoundaryPath& x : boundary_paths(g, v, whole)) {
      if (!x.complete()) continue;
      // Left cancellation makes this vacuous; it is kept as a guard.
      if (!first_collision(g, x, alphas, whole)) return {ConditionBVerdict::Proven, x, std::nullopt};
    }
  }

  // An alpha of degree exactly M would fill a window of M by itself, so x and
  // the window extend M beyond the largest alpha.
  const Degree window = depth + depth;
  const auto alphas = paths_with_source(g, v, depth);
  ConditionBResult refuted{ConditionBVerdict::RefutedToDepth, std::nullopt, std::nullopt};
  for (const BoundaryPath& x : boundary_paths(g, v, window)) {
    auto hit = first_collision(g, x, alphas, window);
    if (!hit) return {ConditionBVerdict::WitnessToDepth, x, std::nullopt};
    if (!refuted.collision) refuted.collision = std::move(hit);
  }
  return refuted;
}

}  // namespace kgraph

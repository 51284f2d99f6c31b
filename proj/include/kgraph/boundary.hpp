#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kgraph/kgraph.hpp"

namespace kgraph {

/// A boundary path seen through a finite window: the prefix x(0, d) and, per
/// colour, whether x genuinely stops there. A coordinate that is not exhausted
/// was cut off by the cap.
struct BoundaryPath {
  Path prefix;
  std::vector<bool> exhausted;
  Degree cap;

  VertexId range() const noexcept { return prefix.range(); }
  bool complete() const noexcept {
    for (bool e : exhausted)
      if (!e) return false;
    return true;
  }

  friend bool operator==(const BoundaryPath&, const BoundaryPath&) = default;
  friend auto operator<=>(const BoundaryPath&, const BoundaryPath&) = default;
};

/// Whether every grid point p <= d(lambda) with p_i = d(lambda)_i receives no
/// colour-i edge.
bool face_is_exhausted(const KGraph& g, const Path& lambda, Colour i);

/// Boundary paths with range v seen through the window cap, sorted by prefix.
/// A coordinate i with d_i < cap_i is exhausted; one with d_i = cap_i is
/// exhausted only when the face test passes there.
std::vector<BoundaryPath> boundary_paths(const KGraph& g, VertexId v, const Degree& cap);

/// True when some directed cycle of the skeleton can be reached from v by
/// walking edges backwards (range to source), i.e. v has infinitely many
/// paths into it.
bool has_cycle_below(const KGraph& g, VertexId v);
bool has_cycle(const KGraph& g);

enum class ConditionBVerdict { Proven, WitnessToDepth, RefutedToDepth };

std::string to_string(ConditionBVerdict verdict);

struct ConditionBResult {
  ConditionBVerdict verdict;
  /// The separating x (Proven, WitnessToDepth).
  std::optional<BoundaryPath> witness;
  /// For RefutedToDepth: a pair alpha != beta identified by the first
  /// candidate, if there was any candidate at all.
  std::optional<std::pair<Path, Path>> collision;
};

/// Looks for x in Lambda^{<=inf}(v) with alpha x != beta x for all alpha != beta
/// having source v. When the future of v is finite the answer is exact.
/// Otherwise alpha, beta range over degrees <= depth, x over boundary paths
/// seen through the window 2 * depth, and (alpha x)(0, 2 * depth) is compared
/// with (beta x)(0, 2 * depth).
ConditionBResult condition_b_check(const KGraph& g, VertexId v, const Degree& depth);

}  // namespace kgraph

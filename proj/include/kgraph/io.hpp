#pragma once

// Line-oriented text format, one record per line:
//
//   # comment
//   k 2
//   vertex v
//   edge e 1 w v          (id colour source range)
//   square g h f g        (outer_lo inner_lo outer_hi inner_hi)
//
// Names are non-empty runs of non-space characters. `k` comes first and once;
// vertices are declared before the edges that use them, edges before squares.

#include <filesystem>
#include <string>
#include <string_view>

#include "kgraph/kgraph.hpp"

namespace kgraph {

struct Document {
  Skeleton skeleton;
  SquareTable squares;
};

/// Throws SyntaxError, UnknownVertex, UnknownEdgeId or ColourOutOfRange with
/// "line L, column C: " in the message.
Document parse(std::string_view text);
Document parse_file(const std::filesystem::path& path);

/// Canonical text: vertices sorted by name, edges by id, squares by their
/// four edge ids.
std::string serialise(const Skeleton& skeleton, const SquareTable& squares);
inline std::string serialise(const KGraph& g) { return serialise(g.skeleton(), g.squares()); }

/// Graphviz digraph, arrows from source to range. Colour 1 solid black,
/// colour 2 dashed red, colour 3 dotted blue; later colours cycle styles.
std::string export_dot(const KGraph& g);

}  // namespace kgraph

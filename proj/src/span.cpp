#include "kgraph/span.hpp"

#include "kgraph/path_spaces.hpp"

namespace kgraph {

std::size_t CoreBlockReport::total_dimension() const {
  std::size_t total = 0;
  for (const auto& b : blocks) total += b.dimension * b.dimension;
  return total;
}

std::vector<CoreBlock> core_blocks(const KGraph& g, const Degree& q) {
  std::map<std::pair<Degree, VertexId>, std::size_t> count;
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    for (const Path& lambda : le_paths(g, v, q)) ++count[{lambda.degree(), lambda.source()}];
  std::vector<CoreBlock> out;
  for (const auto& [key, n] : count) out.push_back({key.first, key.second, n});
  return out;
}

CoreBlockReport core_report(const KGraph& g, const Degree& q) {
  CoreBlockReport report{q, core_blocks(g, q), {}};
  for (const Degree& level : degree_box(Degree::zero(g.k()), q)) {
    if (level == q) continue;
    const Degree step = q - level;
    std::map<std::tuple<Degree, VertexId, Degree, VertexId>, std::size_t> mult;
    for (const CoreBlock& from : core_blocks(g, level))
      for (const Path& alpha : le_paths(g, from.vertex, step))
        ++mult[{from.p, from.vertex, from.p + alpha.degree(), alpha.source()}];
    for (const auto& [key, n] : mult) {
      const auto& [fp, fv, tp, tv] = key;
      report.inclusions.push_back({level, fp, fv, tp, tv, n});
    }
  }
  return report;
}

}  // namespace kgraph

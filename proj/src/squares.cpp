#include <algorithm>
#include <map>
#include <numeric>
#include <tuple>

#include "kgraph/kgraph.hpp"

namespace kgraph {

namespace {

std::pair<EdgeId, EdgeId> swap_or_throw(const Skeleton& skeleton, const SquareIndex& index, EdgeId outer,
                                        EdgeId inner) {
  if (auto hit = index.find(outer, inner)) return *hit;
  throw Error(ErrorCode::MissingSquare,
              "bi-coloured pair " + skeleton.edge(outer).id + " " + skeleton.edge(inner).id + " is in no square");
}

// Bi-coloured paths with fixed colour pair and endpoints. `lo` holds the
// pairs whose outer edge has the smaller colour.
struct FactorisationClass {
  std::vector<std::pair<EdgeId, EdgeId>> lo;
  std::vector<std::pair<EdgeId, EdgeId>> hi;
};

}  // namespace

std::vector<CubeViolation> check_cube_condition(const Skeleton& skeleton, const SquareTable& squares) {
  std::vector<CubeViolation> out;
  if (skeleton.k() < 3) return out;
  SquareIndex index(skeleton, squares);
  auto swap_at = [&](EdgeWord& w, std::size_t i) {
    auto [a, b] = swap_or_throw(skeleton, index, w[i], w[i + 1]);
    w[i] = a;
    w[i + 1] = b;
  };
  const std::size_t k = skeleton.k();
  for (EdgeId x = 0; x < skeleton.edge_count(); ++x) {
    const Edge& ex = skeleton.edge(x);
    for (Colour cy = ex.colour + 1; cy <= k; ++cy) {
      for (EdgeId y : skeleton.edges_into(ex.source, cy)) {
        for (Colour cz = cy + 1; cz <= k; ++cz) {
          for (EdgeId z : skeleton.edges_into(skeleton.edge(y).source, cz)) {
            EdgeWord first{x, y, z};
            swap_at(first, 1);
            swap_at(first, 0);
            swap_at(first, 1);
            EdgeWord second{x, y, z};
            swap_at(second, 0);
            swap_at(second, 1);
            swap_at(second, 0);
            if (first != second) out.push_back({{x, y, z}, std::move(first), std::move(second)});
          }
        }
      }
    }
  }
  return out;
}

std::vector<SquareTable> enumerate_square_sets(const Skeleton& skeleton) {
  using Key = std::tuple<Colour, Colour, VertexId, VertexId>;
  std::map<Key, FactorisationClass> classes;
  for (EdgeId x = 0; x < skeleton.edge_count(); ++x) {
    const Edge& ex = skeleton.edge(x);
    for (Colour c = 1; c <= skeleton.k(); ++c) {
      if (c == ex.colour) continue;
      for (EdgeId y : skeleton.edges_into(ex.source, c)) {
        const VertexId src = skeleton.edge(y).source;
        if (ex.colour < c)
          classes[{ex.colour, c, ex.range, src}].lo.emplace_back(x, y);
        else
          classes[{c, ex.colour, ex.range, src}].hi.emplace_back(x, y);
      }
    }
  }

  std::vector<const FactorisationClass*> order;
  for (const auto& [key, cls] : classes) {
    if (cls.lo.size() != cls.hi.size()) return {};
    order.push_back(&cls);
  }
  // The candidates number prod |class|!; refuse before allocating any.
  std::size_t candidates = 1;
  for (const auto* cls : order) {
    for (std::size_t f = 2; f <= cls->lo.size(); ++f) {
      candidates *= f;
      if (candidates > kMaxSquareTableCandidates)
        throw Error(ErrorCode::TooLarge, "more than " + std::to_string(kMaxSquareTableCandidates) +
                                             " candidate square tables");
    }
  }

  // One permutation per class; iterate the product like an odometer with the
  // last class fastest. Each permutation starts at identity.
  std::vector<std::vector<std::size_t>> perms;
  for (const auto* cls : order) {
    std::vector<std::size_t> p(cls->lo.size());
    std::iota(p.begin(), p.end(), 0);
    perms.push_back(std::move(p));
  }

  std::vector<SquareTable> out;
  while (true) {
    SquareTable table;
    for (std::size_t c = 0; c < order.size(); ++c) {
      const auto& cls = *order[c];
      for (std::size_t t = 0; t < cls.lo.size(); ++t) {
        const auto& [ol, il] = cls.lo[t];
        const auto& [oh, ih] = cls.hi[perms[c][t]];
        table.push_back({ol, il, oh, ih});
      }
    }
    std::sort(table.begin(), table.end());
    if (skeleton.k() < 3 || check_cube_condition(skeleton, table).empty()) out.push_back(std::move(table));

    std::size_t c = perms.size();
    while (c > 0) {
      --c;
      if (std::next_permutation(perms[c].begin(), perms[c].end())) break;
      // Wrapped around to identity; carry into the previous class.
      if (c == 0) return out;
    }
    if (perms.empty()) return out;
  }
}

}  // namespace kgraph

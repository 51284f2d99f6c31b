#include "kgraph/path_spaces.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace kgraph {

namespace {

// Depth-first walk over normal forms: block 1 first (outermost), each block
// a chain of edges of its colour leading away from the range. `exact` pins
// each block length to the bound instead of allowing anything up to it.
class RangeWalker {
 public:
  RangeWalker(const KGraph& g, const Degree& bound, bool exact) : g_(g), bound_(bound), exact_(exact) {}

  std::vector<Path> run(VertexId v) {
    range_ = v;
    word_.clear();
    out_.clear();
    walk(1, v, 0);
    std::sort(out_.begin(), out_.end());
    return std::move(out_);
  }

 private:
  void walk(Colour c, VertexId s, Degree::value_type in_block) {
    if (c > g_.k()) {
      out_.push_back(g_.from_normal_form(range_, word_));
      return;
    }
    const auto limit = bound_.at_colour(c);
    if (!exact_ || in_block == limit) walk(c + 1, s, 0);
    if (in_block == limit) return;
    for (EdgeId e : g_.skeleton().edges_into(s, c)) {
      word_.push_back(e);
      walk(c, g_.skeleton().edge(e).source, in_block + 1);
      word_.pop_back();
    }
  }

  const KGraph& g_;
  const Degree& bound_;
  bool exact_;
  VertexId range_ = 0;
  EdgeWord word_;
  std::vector<Path> out_;
};

}  // namespace

std::vector<Path> paths_of_degree(const KGraph& g, VertexId v, const Degree& m) {
  return RangeWalker(g, m, true).run(v);
}

std::vector<Path> paths_up_to(const KGraph& g, VertexId v, const Degree& q) {
  return RangeWalker(g, q, false).run(v);
}

std::vector<Path> paths_with_source(const KGraph& g, VertexId v, const Degree& q) {
  const Skeleton& sk = g.skeleton();
  std::vector<Path> out;
  // blocks[c] is built innermost first.
  std::vector<EdgeWord> blocks(g.k() + 1);
  auto emit = [&](VertexId range) {
    EdgeWord word;
    for (Colour c = 1; c <= g.k(); ++c) word.insert(word.end(), blocks[c].rbegin(), blocks[c].rend());
    out.push_back(g.from_normal_form(range, std::move(word)));
  };
  auto walk = [&](auto&& self, Colour c, VertexId r) -> void {
    if (c == 0) {
      emit(r);
      return;
    }
    self(self, c - 1, r);
    if (blocks[c].size() == q.at_colour(c)) return;
    for (EdgeId e : sk.edges_out_of(r, c)) {
      blocks[c].push_back(e);
      self(self, c, sk.edge(e).range);
      blocks[c].pop_back();
    }
  };
  walk(walk, static_cast<Colour>(g.k()), v);
  std::sort(out.begin(), out.end());
  return out;
}

bool in_le(const KGraph& g, const Path& lambda, const Degree& q) {
  const Degree& d = lambda.degree();
  if (!leq(d, q)) return false;
  for (Colour i = 1; i <= g.k(); ++i) {
    if (d.at_colour(i) < q.at_colour(i) && !g.skeleton().edges_into(lambda.source(), i).empty()) return false;
  }
  return true;
}

std::vector<Path> le_paths(const KGraph& g, VertexId v, const Degree& q) {
  auto all = paths_up_to(g, v, q);
  std::erase_if(all, [&](const Path& p) { return !in_le(g, p, q); });
  return all;
}

std::vector<std::pair<Path, Path>> common_extensions(const KGraph& g, const Path& lambda, const Path& mu,
                                                     const Degree& q) {
  if (lambda.range() != mu.range() || !leq(lambda.degree(), q) || !leq(mu.degree(), q))
    throw Error(ErrorCode::PreconditionViolated, "common extensions need r(lambda) = r(mu) and degrees <= " +
                                                     q.to_string());
  return common_extensions_in(g, lambda, mu, le_paths(g, lambda.range(), q));
}

std::vector<std::pair<Path, Path>> common_extensions_in(const KGraph& g, const Path& lambda, const Path& mu,
                                                        const std::vector<Path>& le) {
  std::vector<std::pair<Path, Path>> out;
  for (const Path& rho : le) {
    const Degree& d = rho.degree();
    if (!leq(lambda.degree(), d) || !leq(mu.degree(), d)) continue;
    auto [head_l, alpha] = factorise(g, rho, lambda.degree(), d - lambda.degree());
    if (head_l != lambda) continue;
    auto [head_m, beta] = factorise(g, rho, mu.degree(), d - mu.degree());
    if (head_m != mu) continue;
    out.emplace_back(std::move(alpha), std::move(beta));
  }
  std::sort(out.begin(), out.end());
  return out;
}

ConvexityReport is_locally_convex(const KGraph& g) {
  const Skeleton& sk = g.skeleton();
  ConvexityReport report;
  for (VertexId v = 0; v < sk.vertex_count(); ++v) {
    for (Colour i = 1; i <= g.k(); ++i) {
      for (Colour j = i + 1; j <= g.k(); ++j) {
        for (EdgeId lambda : sk.edges_into(v, i)) {
          for (EdgeId mu : sk.edges_into(v, j)) {
            if (sk.edges_into(sk.edge(lambda).source, j).empty() || sk.edges_into(sk.edge(mu).source, i).empty())
              report.witnesses.push_back({v, i, j, lambda, mu});
          }
        }
      }
    }
  }
  report.locally_convex = report.witnesses.empty();
  return report;
}

std::vector<std::vector<Colour>> source_report(const KGraph& g) {
  std::vector<std::vector<Colour>> out(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    for (Colour i = 1; i <= g.k(); ++i)
      if (g.skeleton().edges_into(v, i).empty()) out[v].push_back(i);
  return out;
}

std::vector<LemmaCounterexample> check_le_lemmas(const KGraph& g, const Degree& cap) {
  std::map<std::pair<VertexId, Degree>, std::vector<Path>> cache;
  auto le = [&](VertexId v, const Degree& q) -> const std::vector<Path>& {
    auto key = std::pair{v, q};
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, le_paths(g, v, q)).first;
    return it->second;
  };

  std::vector<LemmaCounterexample> out;
  const auto box = degree_box(Degree::zero(g.k()), cap);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    for (const Degree& m : box) {
      for (const Path& lambda : le(v, m)) {
        for (const Degree& n : box) {
          for (const Path& alpha : le(lambda.source(), n)) {
            Path joined = compose(g, lambda, alpha);
            if (!in_le(g, joined, m + n))
              out.push_back({LemmaCounterexample::Kind::ConcatenationEscapes, v, m, n, std::move(joined)});
          }
        }
      }
    }
  }

  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    for (const Degree& m : box) {
      for (Colour j = 1; j <= g.k(); ++j) {
        if (m.at_colour(j) == 0) continue;
        const Degree ej = Degree::unit(g.k(), j);
        const auto& lhs = le(v, m);
        std::set<Path> rhs;
        for (const Path& head : le(v, m - ej))
          for (const Path& tail : le(head.source(), ej)) rhs.insert(compose(g, head, tail));
        for (const Path& p : lhs)
          if (!rhs.contains(p)) out.push_back({LemmaCounterexample::Kind::NotFactorisable, v, m, ej, p});
        for (const Path& p : rhs)
          if (!std::binary_search(lhs.begin(), lhs.end(), p))
            out.push_back({LemmaCounterexample::Kind::SpuriousProduct, v, m, ej, p});
      }
    }
  }
  return out;
}

}  // namespace kgraph

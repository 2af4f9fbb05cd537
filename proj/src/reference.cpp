#include "tgg/reference.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace tgg::reference {

AdjacencyLists adjacency_from_predicate(std::size_t n, const PairPredicate& adjacent) {
  AdjacencyLists lists(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (adjacent(std::min(i, j), std::max(i, j))) lists[i].push_back(static_cast<std::uint32_t>(j));
    }
  }
  return lists;
}

Graph block_graph(const Design& d, std::size_t threshold) {
  auto lists = adjacency_from_predicate(d.block_count(), [&](std::size_t i, std::size_t j) {
    return intersection_size(d.block(i), d.block(j)) == threshold;
  });
  return Graph(d.labels(), std::move(lists));
}

std::map<std::size_t, std::uint64_t> intersection_spectrum(const Design& d) {
  std::map<std::size_t, std::uint64_t> out;
  for (std::size_t i = 0; i < d.block_count(); ++i)
    for (std::size_t j = i + 1; j < d.block_count(); ++j) ++out[intersection_size(d.block(i), d.block(j))];
  return out;
}

std::variant<IntersectionArray, NotDRG> intersection_array(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n == 0) throw GraphStructureError("graph has no vertices");
  if (!g.regular_degree()) throw GraphStructureError("graph is not regular");

  constexpr std::size_t kInf = SIZE_MAX;
  std::vector<std::vector<std::size_t>> dist(n, std::vector<std::size_t>(n, kInf));
  for (std::size_t v = 0; v < n; ++v) {
    std::deque<std::size_t> queue{v};
    dist[v][v] = 0;
    while (!queue.empty()) {
      const auto u = queue.front();
      queue.pop_front();
      for (auto w : g.neighbors(u)) {
        if (dist[v][w] == kInf) {
          dist[v][w] = dist[v][u] + 1;
          queue.push_back(w);
        }
      }
    }
  }
  std::size_t diameter = 0;
  for (std::size_t u = 0; u < n; ++u) {
    if (dist[0][u] == kInf) throw GraphStructureError("graph is disconnected");
    diameter = std::max(diameter, dist[0][u]);
  }

  auto counts = [&](std::size_t v, std::size_t u) {
    std::uint64_t b = 0, c = 0;
    for (auto w : g.neighbors(u)) {
      if (dist[v][w] == dist[v][u] + 1) ++b;
      if (dist[v][w] + 1 == dist[v][u]) ++c;
    }
    return std::make_pair(b, c);
  };

  std::vector<std::uint64_t> b(diameter + 1, 0), c(diameter + 1, 0);
  for (std::size_t i = 0; i <= diameter; ++i) {
    for (std::size_t u = 0; u < n; ++u) {
      if (dist[0][u] == i) {
        std::tie(b[i], c[i]) = counts(0, u);
        break;
      }
    }
  }
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t u = 0; u < n; ++u) {
      const std::size_t i = dist[v][u];
      if (i > diameter) return NotDRG{v, u, i, to_string(g.label(v)), to_string(g.label(u)), "eccentricity"};
      const auto [bi, ci] = counts(v, u);
      if (bi != b[i] || ci != c[i]) {
        return NotDRG{v, u, i, to_string(g.label(v)), to_string(g.label(u)), "b/c mismatch"};
      }
    }
  }
  IntersectionArray out;
  out.diameter = diameter;
  out.b.assign(b.begin(), b.begin() + static_cast<std::ptrdiff_t>(diameter));
  out.c.assign(c.begin() + 1, c.end());
  return out;
}

bool check_isomorphism(const Graph& g1, const Graph& g2, const IsoCertificate& cert) {
  const std::size_t n = g1.vertex_count();
  if (g2.vertex_count() != n || cert.mapping.size() != n) throw std::invalid_argument("size mismatch");
  std::set<std::uint32_t> image(cert.mapping.begin(), cert.mapping.end());
  if (image.size() != n || (n && *image.rbegin() >= n)) return false;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v)
      if (u != v && g1.adjacent(u, v) != g2.adjacent(cert.mapping[u], cert.mapping[v])) return false;
  return true;
}

PointPermutation lift(const SemilinearMap& phi, const Polarity& sigma, const PointSpace& points) {
  const Subspace& h = sigma.hyperplane();
  if (!(phi.apply(h) == h)) throw std::invalid_argument("map does not stabilize H");
  PointPermutation out;
  out.perm.resize(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    const Vector& x = points.point(i).rep;
    if (h.contains(x)) {
      const Subspace line = Subspace::span(h.field(), h.ambient_dim(), {x});
      const Subspace image = sigma.apply(phi.apply(sigma.apply(line)));
      out.perm[i] = points.index_of(image.basis().row(0));
    } else {
      out.perm[i] = points.index_of(phi.apply(x));
    }
  }
  return out;
}

AutomorphismCheck is_design_automorphism(const Design& d, const PointPermutation& p) {
  if (p.perm.size() != d.point_count()) throw std::invalid_argument("size mismatch");
  std::set<Block> blocks(d.blocks().begin(), d.blocks().end());
  for (std::size_t i = 0; i < d.block_count(); ++i) {
    Block image;
    for (auto x : d.block(i)) image.push_back(p.perm[x]);
    std::sort(image.begin(), image.end());
    if (std::adjacent_find(image.begin(), image.end()) != image.end() || !blocks.count(image)) {
      return AutomorphismCheck{false, i};
    }
  }
  return AutomorphismCheck{true, std::nullopt};
}

}  // namespace tgg::reference

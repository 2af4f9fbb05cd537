#include "tgg/geometry.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include <omp.h>

namespace tgg {

std::string to_string(Family f) {
  switch (f) {
    case Family::kNone: return "none";
    case Family::kA: return "A";
    case Family::kB: return "B";
    case Family::kGrassmann: return "G";
    case Family::kAPrime: return "A'";
    case Family::kBPrime: return "B'";
    case Family::kGeometric: return "PG";
  }
  return "?";
}

std::string to_string(const Label& label) {
  std::ostringstream out;
  out << to_string(label.family);
  if (label.subspace) {
    const Matrix& m = label.subspace->basis();
    const bool wide = m.field()->order() > 10;
    out << '[';
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r) out << ';';
      for (std::size_t c = 0; c < m.cols(); ++c) {
        if (wide && c) out << ',';
        out << m(r, c).value;
      }
    }
    out << ']';
  }
  return out.str();
}

Graph::Graph(std::vector<Label> labels, AdjacencyLists adjacency)
    : labels_(std::move(labels)), adjacency_(std::move(adjacency)) {
  const std::size_t n = adjacency_.size();
  if (labels_.empty()) labels_.resize(n);
  if (labels_.size() != n) throw std::invalid_argument("label count does not match vertex count");
  bits_.assign((n * n + 63) / 64, 0);
  for (std::size_t u = 0; u < n; ++u) {
    auto& row = adjacency_[u];
    std::sort(row.begin(), row.end());
    if (std::adjacent_find(row.begin(), row.end()) != row.end()) throw std::invalid_argument("repeated edge");
    for (auto v : row) {
      if (v >= n) throw std::invalid_argument("neighbor index out of range");
      if (v == u) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
      const std::size_t bit = u * n + v;
      bits_[bit / 64] |= std::uint64_t{1} << (bit % 64);
    }
  }
  for (std::size_t u = 0; u < n; ++u) {
    for (auto v : adjacency_[u]) {
      if (!adjacent(v, u)) throw std::invalid_argument("adjacency is not symmetric");
    }
  }
}

Graph Graph::from_edges(std::size_t n, const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges) {
  AdjacencyLists lists(n);
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) throw std::invalid_argument("edge endpoint out of range");
    lists[u].push_back(v);
    lists[v].push_back(u);
  }
  return Graph({}, std::move(lists));
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& row : adjacency_) twice += row.size();
  return twice / 2;
}

std::optional<std::size_t> Graph::regular_degree() const {
  if (adjacency_.empty()) return 0;
  const std::size_t d = adjacency_.front().size();
  for (const auto& row : adjacency_) {
    if (row.size() != d) return std::nullopt;
  }
  return d;
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> Graph::edges() const {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
  for (std::uint32_t u = 0; u < adjacency_.size(); ++u) {
    for (auto v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Design::Design(std::size_t v, std::vector<Block> blocks, std::vector<Label> labels,
               std::shared_ptr<const PointSpace> points)
    : v_(v), blocks_(std::move(blocks)), labels_(std::move(labels)), points_(std::move(points)) {
  if (labels_.empty()) labels_.resize(blocks_.size());
  if (labels_.size() != blocks_.size()) throw std::invalid_argument("block label count mismatch");
  if (points_ && points_->size() != v_) throw std::invalid_argument("point space size mismatch");
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    auto& b = blocks_[i];
    std::sort(b.begin(), b.end());
    if (std::adjacent_find(b.begin(), b.end()) != b.end()) throw std::invalid_argument("repeated point in block");
    if (!b.empty() && b.back() >= v_) throw std::invalid_argument("point index out of range");
    lookup_.emplace(b, i);
  }
}

std::optional<std::pair<std::size_t, std::size_t>> Design::repeated_block() const {
  std::map<Block, std::size_t> seen;
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    auto [it, inserted] = seen.emplace(blocks_[i], i);
    if (!inserted) return std::make_pair(it->second, i);
  }
  return std::nullopt;
}

std::optional<std::size_t> Design::find_block(const Block& b) const {
  auto it = lookup_.find(b);
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

std::size_t intersection_size(const Block& a, const Block& b) {
  std::size_t i = 0, j = 0, count = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j]) {
      ++i;
    } else if (b[j] < a[i]) {
      ++j;
    } else {
      ++count;
      ++i;
      ++j;
    }
  }
  return count;
}

namespace {

std::vector<Label> labelled(const std::vector<Subspace>& spaces, Family family) {
  std::vector<Label> out;
  out.reserve(spaces.size());
  for (const auto& s : spaces) out.push_back(Label{family, s});
  return out;
}

void require_twisted_setup(const FieldPtr& field, std::size_t e, const Subspace& h) {
  if (e < 2) throw std::invalid_argument("e must be >= 2");
  if (h.ambient_dim() != 2 * e + 1 || h.dim() != 2 * e) {
    throw std::invalid_argument("H must be a hyperplane of GF(q)^(2e+1)");
  }
  if (!h.field()->same_as(*field)) throw std::invalid_argument("H lives over a different field");
}

}  // namespace

Graph grassmann_graph(const FieldPtr& field, std::size_t n, std::size_t k) {
  if (k < 1 || k + 1 > n) throw std::invalid_argument("grassmann_graph requires 1 <= k <= n-1");
  auto vertices = enumerate_k_subspaces(Subspace::full(field, n), k);
  auto adjacency = kernels::adjacency_from_predicate(vertices.size(), [&](std::size_t i, std::size_t j) {
    return intersection_dim(vertices[i], vertices[j]) + 1 == k;
  });
  return Graph(labelled(vertices, Family::kGrassmann), std::move(adjacency));
}

std::vector<Subspace> twisted_family_a(const FieldPtr& field, std::size_t e, const Subspace& h) {
  auto all = enumerate_k_subspaces(Subspace::full(field, 2 * e + 1), e + 1);
  std::erase_if(all, [&h](const Subspace& w) { return h.contains(w); });
  return all;
}

std::vector<Subspace> twisted_family_b(std::size_t e, const Subspace& h) {
  return enumerate_k_subspaces(h, e - 1);
}

bool twisted_adjacent(const Label& x, const Label& y, std::size_t e) {
  const Subspace& u = *x.subspace;
  const Subspace& w = *y.subspace;
  if (x.family == Family::kA && y.family == Family::kA) return intersection_dim(u, w) == e;
  if (x.family == Family::kA && y.family == Family::kB) return u.contains(w);
  if (x.family == Family::kB && y.family == Family::kA) return w.contains(u);
  if (x.family == Family::kB && y.family == Family::kB) return intersection_dim(u, w) + 2 == e;
  throw std::invalid_argument("twisted_adjacent on vertices outside A and B");
}

Graph twisted_grassmann(const FieldPtr& field, std::size_t e, const Subspace& h) {
  require_twisted_setup(field, e, h);
  auto labels = labelled(twisted_family_a(field, e, h), Family::kA);
  auto b = labelled(twisted_family_b(e, h), Family::kB);
  labels.insert(labels.end(), std::make_move_iterator(b.begin()), std::make_move_iterator(b.end()));
  auto adjacency = kernels::adjacency_from_predicate(
      labels.size(), [&](std::size_t i, std::size_t j) { return twisted_adjacent(labels[i], labels[j], e); });
  return Graph(std::move(labels), std::move(adjacency));
}

Design pg_design(const FieldPtr& field, std::size_t e) {
  if (e < 1) throw std::invalid_argument("pg_design requires e >= 1");
  auto points = std::make_shared<const PointSpace>(field, 2 * e + 1);
  auto spaces = enumerate_k_subspaces(Subspace::full(field, 2 * e + 1), e + 1);
  std::vector<Block> blocks;
  blocks.reserve(spaces.size());
  for (const auto& w : spaces) blocks.push_back(points->indices_of(w));
  return Design(points->size(), std::move(blocks), labelled(spaces, Family::kGeometric), points);
}

Block f_map(const Subspace& w, const Polarity& sigma, const PointSpace& points) {
  const Subspace& h = sigma.hyperplane();
  if (h.dim() % 2 != 0 || w.ambient_dim() != h.ambient_dim()) {
    throw std::invalid_argument("f_map: H must have even dimension 2e in GF(q)^(2e+1)");
  }
  const std::size_t e = h.dim() / 2;
  const bool inside = h.contains(w);
  if (w.dim() == e + 1 && !inside) {
    Block out = points.indices_of(sigma.apply(intersect(w, h)));
    for (const auto& p : affine_points(w, h)) out.push_back(points.index_of(p.rep));
    std::sort(out.begin(), out.end());
    return out;
  }
  if (e >= 1 && w.dim() == e - 1 && inside) return points.indices_of(sigma.apply(w));
  throw std::invalid_argument("f_map: subspace is in neither A nor B");
}

Design jt_design(const FieldPtr& field, std::size_t e, const Polarity& sigma) {
  const Subspace& h = sigma.hyperplane();
  require_twisted_setup(field, e, h);
  auto points = std::make_shared<const PointSpace>(field, 2 * e + 1);

  const auto a = twisted_family_a(field, e, h);
  std::vector<Block> blocks(a.size());
  const auto count = static_cast<std::int64_t>(a.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t i = 0; i < count; ++i) {
    blocks[static_cast<std::size_t>(i)] = f_map(a[static_cast<std::size_t>(i)], sigma, *points);
  }
  auto labels = labelled(a, Family::kAPrime);

  for (auto& w : enumerate_k_subspaces(h, e + 1)) {
    blocks.push_back(points->indices_of(w));
    labels.push_back(Label{Family::kBPrime, std::move(w)});
  }
  Design d(points->size(), std::move(blocks), std::move(labels), points);
  if (auto rep = d.repeated_block()) {
    throw std::logic_error("JT design has repeated blocks " + std::to_string(rep->first) + " and " +
                           std::to_string(rep->second));
  }
  return d;
}

Graph block_graph(const Design& d, std::size_t threshold) {
  auto adjacency = kernels::adjacency_from_predicate(d.block_count(), [&](std::size_t i, std::size_t j) {
    return intersection_size(d.block(i), d.block(j)) == threshold;
  });
  return Graph(d.labels(), std::move(adjacency));
}

std::map<std::size_t, std::uint64_t> intersection_spectrum(const Design& d) {
  std::size_t max_size = 0;
  for (const auto& b : d.blocks()) max_size = std::max(max_size, b.size());
  std::vector<std::uint64_t> totals(max_size + 1, 0);
  const auto count = static_cast<std::int64_t>(d.block_count());
#pragma omp parallel
  {
    std::vector<std::uint64_t> local(max_size + 1, 0);
#pragma omp for schedule(dynamic, 8)
    for (std::int64_t i = 0; i < count; ++i) {
      for (auto j = static_cast<std::size_t>(i) + 1; j < d.block_count(); ++j) {
        ++local[intersection_size(d.block(static_cast<std::size_t>(i)), d.block(j))];
      }
    }
#pragma omp critical
    for (std::size_t s = 0; s <= max_size; ++s) totals[s] += local[s];
  }
  std::map<std::size_t, std::uint64_t> out;
  for (std::size_t s = 0; s <= max_size; ++s) {
    if (totals[s]) out[s] = totals[s];
  }
  return out;
}

}  // namespace tgg

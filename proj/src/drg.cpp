#include "tgg/drg.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <optional>
#include <sstream>

#include <omp.h>

#include "tgg/random.hpp"

namespace tgg {

std::vector<std::uint64_t> IntersectionArray::class_sizes() const {
  std::vector<std::uint64_t> k{1};
  for (std::size_t i = 0; i < diameter; ++i) k.push_back(k.back() * b[i] / c[i]);
  return k;
}

std::string to_string(const IntersectionArray& a) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < a.b.size(); ++i) out << (i ? "," : "") << a.b[i];
  out << ';';
  for (std::size_t i = 0; i < a.c.size(); ++i) out << (i ? "," : "") << a.c[i];
  out << '}';
  return out.str();
}

namespace {

constexpr std::uint32_t kUnreached = UINT32_MAX;

std::vector<std::uint32_t> bfs(const Graph& g, std::size_t base) {
  std::vector<std::uint32_t> dist(g.vertex_count(), kUnreached);
  std::vector<std::uint32_t> queue;
  queue.reserve(g.vertex_count());
  dist[base] = 0;
  queue.push_back(static_cast<std::uint32_t>(base));
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const auto u = queue[head];
    for (auto w : g.neighbors(u)) {
      if (dist[w] == kUnreached) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

std::pair<std::uint64_t, std::uint64_t> step_counts(const Graph& g, const std::vector<std::uint32_t>& dist,
                                                    std::size_t u) {
  std::uint64_t farther = 0, closer = 0;
  for (auto w : g.neighbors(u)) {
    if (dist[w] == dist[u] + 1) ++farther;
    if (dist[w] + 1 == dist[u]) ++closer;
  }
  return {farther, closer};
}

}  // namespace

std::variant<IntersectionArray, NotDRG> intersection_array(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n == 0) throw GraphStructureError("graph has no vertices");
  if (!g.regular_degree()) throw GraphStructureError("graph is not regular");

  const auto ref_dist = bfs(g, 0);
  if (std::find(ref_dist.begin(), ref_dist.end(), kUnreached) != ref_dist.end()) {
    throw GraphStructureError("graph is disconnected");
  }
  const std::size_t diameter = *std::max_element(ref_dist.begin(), ref_dist.end());

  // reference b_i, c_i from the first vertex at each distance from base 0
  std::vector<std::uint64_t> ref_b(diameter + 1), ref_c(diameter + 1);
  std::vector<bool> seen(diameter + 1, false);
  for (std::size_t u = 0; u < n; ++u) {
    const auto i = ref_dist[u];
    if (seen[i]) continue;
    seen[i] = true;
    std::tie(ref_b[i], ref_c[i]) = step_counts(g, ref_dist, u);
  }

  std::vector<std::optional<NotDRG>> per_base(n);
  const auto count = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(dynamic, 4)
  for (std::int64_t vi = 0; vi < count; ++vi) {
    const auto v = static_cast<std::size_t>(vi);
    const auto dist = bfs(g, v);
    for (std::size_t u = 0; u < n; ++u) {
      const std::size_t i = dist[u];
      std::string reason;
      if (i > diameter) {
        reason = "eccentricity exceeds the diameter seen from vertex 0";
      } else {
        const auto [bi, ci] = step_counts(g, dist, u);
        if (bi != ref_b[i]) reason = "b_" + std::to_string(i) + "=" + std::to_string(bi) + " expected " + std::to_string(ref_b[i]);
        else if (ci != ref_c[i]) reason = "c_" + std::to_string(i) + "=" + std::to_string(ci) + " expected " + std::to_string(ref_c[i]);
      }
      if (!reason.empty()) {
        per_base[v] = NotDRG{v, u, i, to_string(g.label(v)), to_string(g.label(u)), std::move(reason)};
        break;
      }
    }
  }
  for (auto& witness : per_base) {
    if (witness) return std::move(*witness);
  }

  IntersectionArray out;
  out.diameter = diameter;
  out.b.assign(ref_b.begin(), ref_b.begin() + static_cast<std::ptrdiff_t>(diameter));
  out.c.assign(ref_c.begin() + 1, ref_c.end());
  return out;
}

IntersectionArray grassmann_intersection_array(std::uint64_t n, std::uint64_t k, std::uint64_t q) {
  if (k > n) throw std::invalid_argument("grassmann parameters need k <= n");
  k = std::min(k, n - k);
  auto qpow = [q](std::uint64_t e) {
    std::uint64_t x = 1;
    for (std::uint64_t i = 0; i < e; ++i) x *= q;
    return x;
  };
  IntersectionArray a;
  a.diameter = k;
  for (std::uint64_t j = 0; j < k; ++j) {
    a.b.push_back(qpow(2 * j + 1) * point_count(k - j, q) * point_count(n - k - j, q));
  }
  for (std::uint64_t j = 1; j <= k; ++j) a.c.push_back(point_count(j, q) * point_count(j, q));
  return a;
}

bool check_isomorphism(const Graph& g1, const Graph& g2, const IsoCertificate& cert) {
  const std::size_t n = g1.vertex_count();
  if (g2.vertex_count() != n || cert.mapping.size() != n) {
    throw std::invalid_argument("isomorphism check on graphs or certificate of different sizes");
  }
  std::vector<bool> hit(n, false);
  for (auto t : cert.mapping) {
    if (t >= n || hit[t]) return false;
    hit[t] = true;
  }
  std::atomic<bool> ok{true};
  const auto count = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(dynamic, 8)
  for (std::int64_t ui = 0; ui < count; ++ui) {
    if (!ok.load(std::memory_order_relaxed)) continue;
    const auto u = static_cast<std::size_t>(ui);
    for (std::size_t v = u + 1; v < n; ++v) {
      if (g1.adjacent(u, v) != g2.adjacent(cert.mapping[u], cert.mapping[v])) {
        ok.store(false, std::memory_order_relaxed);
        break;
      }
    }
  }
  return ok.load();
}

IsoCertificate f_certificate(const Graph& twisted, const Design& jt, const Polarity& sigma) {
  if (!jt.points()) throw std::invalid_argument("f_certificate needs a design with geometric points");
  IsoCertificate cert;
  cert.source = "twisted";
  cert.target = "jt-block-graph";
  cert.mapping.reserve(twisted.vertex_count());
  for (const auto& label : twisted.labels()) {
    if (!label.subspace) throw std::invalid_argument("twisted vertex without a subspace label");
    const auto idx = jt.find_block(f_map(*label.subspace, sigma, *jt.points()));
    if (!idx) throw std::logic_error("f(W) is not a block of the design: " + to_string(label));
    cert.mapping.push_back(static_cast<std::uint32_t>(*idx));
  }
  return cert;
}

std::variant<DesignParameters, NotDesign> check_2design(const Design& d) {
  if (d.block_count() == 0) throw std::invalid_argument("design has no blocks");
  const std::size_t v = d.point_count();
  DesignParameters params;
  params.v = v;
  params.b = d.block_count();
  params.k = d.block(0).size();
  for (std::size_t i = 0; i < d.block_count(); ++i) {
    if (d.block(i).size() != params.k) {
      return NotDesign{"block " + std::to_string(i) + " has size " + std::to_string(d.block(i).size()) +
                       ", block 0 has " + std::to_string(params.k)};
    }
  }
  std::vector<std::uint64_t> replication(v, 0);
  std::vector<std::uint64_t> pairs(v * v, 0);
  for (const auto& b : d.blocks()) {
    for (std::size_t i = 0; i < b.size(); ++i) {
      ++replication[b[i]];
      for (std::size_t j = i + 1; j < b.size(); ++j) ++pairs[std::size_t{b[i]} * v + b[j]];
    }
  }
  params.r = replication[0];
  for (std::size_t x = 0; x < v; ++x) {
    if (replication[x] != params.r) {
      return NotDesign{"point " + std::to_string(x) + " lies in " + std::to_string(replication[x]) +
                       " blocks, point 0 in " + std::to_string(params.r)};
    }
  }
  if (v >= 2) {
    params.lambda = pairs[1];
    for (std::size_t x = 0; x < v; ++x) {
      for (std::size_t y = x + 1; y < v; ++y) {
        if (pairs[x * v + y] != params.lambda) {
          return NotDesign{"points " + std::to_string(x) + "," + std::to_string(y) + " lie in " +
                           std::to_string(pairs[x * v + y]) + " common blocks, points 0,1 in " +
                           std::to_string(params.lambda)};
        }
      }
    }
  }
  return params;
}

std::size_t p_rank(const Design& d, std::uint32_t p) {
  if (!is_prime(p)) throw std::invalid_argument("p_rank needs a prime");
  const std::size_t v = d.point_count();
  if (p == 2) {
    const std::size_t words = (v + 63) / 64;
    std::vector<std::vector<std::uint64_t>> rows(d.block_count(), std::vector<std::uint64_t>(words, 0));
    for (std::size_t i = 0; i < d.block_count(); ++i)
      for (auto x : d.block(i)) rows[i][x / 64] |= std::uint64_t{1} << (x % 64);
    return rank_gf2(std::move(rows), v);
  }
  auto field = Field::create(p, 1);
  Matrix m(field, d.block_count(), v);
  for (std::size_t i = 0; i < d.block_count(); ++i)
    for (auto x : d.block(i)) m(i, x) = field->one();
  return rank(m);
}

namespace {

constexpr std::size_t kMaxWitnesses = 10;

EquivalenceReport check_pairs(const std::vector<Label>& labels, const std::vector<Block>& blocks, std::size_t e,
                              std::uint32_t q, const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  if (labels.size() != blocks.size()) throw std::invalid_argument("labels and blocks differ in length");
  const std::uint64_t threshold = point_count(e, q);
  EquivalenceReport report;
  report.pairs = pairs.size();
  std::uint64_t violations = 0;
  std::vector<std::pair<std::size_t, std::size_t>> witnesses;
  const auto count = static_cast<std::int64_t>(pairs.size());
#pragma omp parallel
  {
    std::vector<std::pair<std::size_t, std::size_t>> local;
#pragma omp for schedule(dynamic, 256) reduction(+ : violations)
    for (std::int64_t t = 0; t < count; ++t) {
      const auto [i, j] = pairs[static_cast<std::size_t>(t)];
      const bool adjacent = twisted_adjacent(labels[i], labels[j], e);
      const bool meets = intersection_size(blocks[i], blocks[j]) == threshold;
      if (adjacent != meets) {
        ++violations;
        if (local.size() < kMaxWitnesses) local.emplace_back(i, j);
      }
    }
#pragma omp critical
    witnesses.insert(witnesses.end(), local.begin(), local.end());
  }
  std::sort(witnesses.begin(), witnesses.end());
  if (witnesses.size() > kMaxWitnesses) witnesses.resize(kMaxWitnesses);
  report.violations = violations;
  report.witnesses = std::move(witnesses);
  return report;
}

}  // namespace

EquivalenceReport equivalence_all_pairs(const std::vector<Label>& labels, const std::vector<Block>& blocks,
                                        std::size_t e, std::uint32_t q) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  pairs.reserve(labels.size() * (labels.size() - 1) / 2);
  for (std::size_t i = 0; i < labels.size(); ++i)
    for (std::size_t j = i + 1; j < labels.size(); ++j) pairs.emplace_back(i, j);
  return check_pairs(labels, blocks, e, q, pairs);
}

EquivalenceReport equivalence_sampled(const std::vector<Label>& labels, const std::vector<Block>& blocks,
                                      std::size_t e, std::uint32_t q, std::uint64_t samples,
                                      std::uint64_t seed) {
  if (labels.size() < 2) throw std::invalid_argument("need at least two vertices to sample pairs");
  std::mt19937_64 rng(seed);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  pairs.reserve(samples);
  while (pairs.size() < samples) {
    const auto i = uniform_below(rng, labels.size());
    const auto j = uniform_below(rng, labels.size());
    if (i != j) pairs.emplace_back(std::min(i, j), std::max(i, j));
  }
  return check_pairs(labels, blocks, e, q, pairs);
}

}  // namespace tgg

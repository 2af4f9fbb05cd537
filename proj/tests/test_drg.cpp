#include <doctest.h>

#include <numeric>
#include <random>

#include "oracles.hpp"
#include "tgg/drg.hpp"

using namespace tgg;

namespace {

Graph complete(std::size_t n) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return Graph::from_edges(n, edges);
}

Graph cycle(std::size_t n) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  for (std::uint32_t i = 0; i < n; ++i) edges.emplace_back(i, static_cast<std::uint32_t>((i + 1) % n));
  return Graph::from_edges(n, edges);
}

Graph hypercube(std::size_t d) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  for (std::uint32_t v = 0; v < (1u << d); ++v)
    for (std::size_t i = 0; i < d; ++i)
      if (!(v >> i & 1u)) edges.emplace_back(v, v | (1u << i));
  return Graph::from_edges(std::size_t{1} << d, edges);
}

IsoCertificate identity_cert(std::size_t n) {
  IsoCertificate c;
  c.mapping.resize(n);
  std::iota(c.mapping.begin(), c.mapping.end(), 0u);
  return c;
}

void check_counting_identities(const IntersectionArray& a, std::size_t n) {
  const auto k = a.class_sizes();
  CHECK(std::accumulate(k.begin(), k.end(), std::uint64_t{0}) == n);
  for (std::size_t i = 0; i + 1 < k.size(); ++i) CHECK(k[i] * a.b[i] == k[i + 1] * a.c[i]);
  CHECK(a.c.front() == 1);
}

}  // namespace

TEST_SUITE("drg") {

TEST_CASE("sanity graphs") {
  auto kn = std::get<IntersectionArray>(intersection_array(complete(6)));
  CHECK(kn.b == std::vector<std::uint64_t>{5});
  CHECK(kn.c == std::vector<std::uint64_t>{1});

  auto c7 = std::get<IntersectionArray>(intersection_array(cycle(7)));
  CHECK(c7.b == std::vector<std::uint64_t>{2, 1, 1});
  CHECK(c7.c == std::vector<std::uint64_t>{1, 1, 1});
  check_counting_identities(c7, 7);

  auto c8 = std::get<IntersectionArray>(intersection_array(cycle(8)));
  CHECK(c8.b == std::vector<std::uint64_t>{2, 1, 1, 1});
  CHECK(c8.c == std::vector<std::uint64_t>{1, 1, 1, 2});

  // Q_d: b_i = d - i, c_i = i
  auto q4 = std::get<IntersectionArray>(intersection_array(hypercube(4)));
  CHECK(q4.b == std::vector<std::uint64_t>{4, 3, 2, 1});
  CHECK(q4.c == std::vector<std::uint64_t>{1, 2, 3, 4});
  check_counting_identities(q4, 16);
}

TEST_CASE("non-DRG graphs and structural errors") {
  // prism C3 x K2 is 3-regular but not distance-regular
  auto prism = Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}, {1, 4}, {2, 5}});
  auto result = intersection_array(prism);
  REQUIRE(std::holds_alternative<NotDRG>(result));
  const auto& w = std::get<NotDRG>(result);
  CHECK(w.base == 0);
  CHECK_FALSE(w.reason.empty());

  CHECK_THROWS_AS(intersection_array(Graph::from_edges(4, {{0, 1}, {2, 3}})), GraphStructureError);
  CHECK_THROWS_AS(intersection_array(Graph::from_edges(3, {{0, 1}, {1, 2}})), GraphStructureError);
  CHECK_THROWS_AS(intersection_array(Graph({}, {})), GraphStructureError);
}

TEST_CASE("grassmann J_2(5,2) against the product formulas") {
  auto oracle_b = [](std::uint64_t j) {
    return oracle::ipow(2, 2 * j + 1) * oracle::q_int(2 - j, 2) * oracle::q_int(3 - j, 2);
  };
  CHECK(oracle_b(0) == 42);
  CHECK(oracle_b(1) == 24);
  CHECK(oracle::q_int(2, 2) * oracle::q_int(2, 2) == 9);

  auto formula = grassmann_intersection_array(5, 2, 2);
  CHECK(formula.b == std::vector<std::uint64_t>{42, 24});
  CHECK(formula.c == std::vector<std::uint64_t>{1, 9});

  auto g = grassmann_graph(Field::create(2, 1), 5, 2);
  auto bfs = std::get<IntersectionArray>(intersection_array(g));
  CHECK(bfs == formula);
  check_counting_identities(bfs, 155);
}

TEST_CASE("twisted graph at (2,2) has the Grassmann array") {
  auto F = Field::create(2, 1);
  auto g = twisted_grassmann(F, 2, Subspace::standard_hyperplane(F, 5));
  auto a = std::get<IntersectionArray>(intersection_array(g));
  CHECK(a == grassmann_intersection_array(5, 2, 2));
}

TEST_CASE("isomorphism certificates") {
  auto g = cycle(6);
  CHECK(check_isomorphism(g, g, identity_cert(6)));
  auto bad = identity_cert(6);
  std::swap(bad.mapping[0], bad.mapping[2]);  // sends edge 0-1 to 2-1 ok, but 0-5 to 2-5 not an edge
  CHECK_FALSE(check_isomorphism(g, g, bad));
  auto not_bijective = identity_cert(6);
  not_bijective.mapping[1] = 0;
  CHECK_FALSE(check_isomorphism(g, g, not_bijective));
  CHECK_THROWS_AS(check_isomorphism(g, cycle(5), identity_cert(6)), std::invalid_argument);

  // rotation is an automorphism
  IsoCertificate rot;
  for (std::uint32_t i = 0; i < 6; ++i) rot.mapping.push_back((i + 1) % 6);
  CHECK(check_isomorphism(g, g, rot));
}

TEST_CASE("f certificate realizes the block graph isomorphism at (2,2)") {
  auto F = Field::create(2, 1);
  auto h = Subspace::standard_hyperplane(F, 5);
  Polarity sigma(h);
  auto twisted = twisted_grassmann(F, 2, h);
  auto jt = jt_design(F, 2, sigma);
  auto cert = f_certificate(twisted, jt, sigma);
  CHECK(check_isomorphism(twisted, block_graph(jt, 3), cert));
  // A vertices map to the A' blocks in order
  for (std::uint32_t i = 0; i < 140; ++i) CHECK(cert.mapping[i] == i);
}

TEST_CASE("2-design verification") {
  auto fano = Design(7, oracle::fano_lines());
  auto params = std::get<DesignParameters>(check_2design(fano));
  CHECK(params == DesignParameters{7, 7, 3, 3, 1});

  auto pg_fano = std::get<DesignParameters>(check_2design(pg_design(Field::create(2, 1), 1)));
  CHECK(pg_fano == DesignParameters{7, 7, 3, 3, 1});

  auto lines = oracle::fano_lines();
  lines.pop_back();
  CHECK(std::holds_alternative<NotDesign>(check_2design(Design(7, lines))));
  CHECK(std::holds_alternative<NotDesign>(check_2design(Design(4, {{0, 1}, {1, 2, 3}}))));
  CHECK_THROWS_AS(check_2design(Design(3, {})), std::invalid_argument);
}

TEST_CASE("p-rank") {
  auto blocks = oracle::fano_lines();
  auto fano = Design(7, blocks);
  const auto rows = oracle::incidence_rows(blocks, 7);
  CHECK(p_rank(fano, 2) == oracle::rank_by_row_space(rows, 2));
  CHECK(p_rank(fano, 2) == 4);
  CHECK(p_rank(fano, 3) == oracle::rank_by_row_space(rows, 3));
  CHECK(p_rank(fano, 3) == 6);  // det N = 24
  CHECK_THROWS_AS(p_rank(fano, 4), std::invalid_argument);
}

TEST_CASE("p-rank is invariant under block and point relabeling") {
  auto F = Field::create(2, 1);
  auto jt = jt_design(F, 2, Polarity(Subspace::standard_hyperplane(F, 5)));
  const auto base2 = p_rank(jt, 2);
  const auto base3 = p_rank(jt, 3);
  std::mt19937 rng(31);
  for (int t = 0; t < 5; ++t) {
    std::vector<std::uint32_t> relabel(jt.point_count());
    std::iota(relabel.begin(), relabel.end(), 0u);
    std::shuffle(relabel.begin(), relabel.end(), rng);
    std::vector<Block> blocks;
    for (const auto& b : jt.blocks()) {
      Block nb;
      for (auto x : b) nb.push_back(relabel[x]);
      blocks.push_back(nb);
    }
    std::shuffle(blocks.begin(), blocks.end(), rng);
    Design shuffled(jt.point_count(), blocks);
    CHECK(p_rank(shuffled, 2) == base2);
    CHECK(p_rank(shuffled, 3) == base3);
  }
}

TEST_CASE("equivalence checks") {
  auto F = Field::create(2, 1);
  auto h = Subspace::standard_hyperplane(F, 5);
  Polarity sigma(h);
  auto twisted = twisted_grassmann(F, 2, h);
  PointSpace points(F, 5);
  std::vector<Block> blocks;
  for (const auto& l : twisted.labels()) blocks.push_back(f_map(*l.subspace, sigma, points));
  auto all = equivalence_all_pairs(twisted.labels(), blocks, 2, 2);
  CHECK(all.pairs == 11935);
  CHECK(all.violations == 0);
  auto sampled = equivalence_sampled(twisted.labels(), blocks, 2, 2, 5000, 1);
  CHECK(sampled.pairs == 5000);
  CHECK(sampled.violations == 0);

  // breaking f produces witnesses
  std::swap(blocks[0], blocks[150]);
  auto broken = equivalence_all_pairs(twisted.labels(), blocks, 2, 2);
  CHECK(broken.violations > 0);
  CHECK_FALSE(broken.witnesses.empty());
}

}

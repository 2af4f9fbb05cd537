#include <doctest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "tgg/geometry.hpp"

using namespace tgg;

namespace {

struct Instance {
  FieldPtr field;
  std::size_t e;
  Subspace h;
  Polarity sigma;

  Instance(std::uint32_t q, std::size_t e_)
      : field(Field::from_order(q)), e(e_), h(Subspace::standard_hyperplane(field, 2 * e_ + 1)), sigma(h) {}
};

std::size_t meet(const Subspace& a, const Subspace& b) { return intersection_dim(a, b); }

}  // namespace

TEST_SUITE("geometry") {

TEST_CASE("grassmann graphs") {
  auto F = Field::create(2, 1);
  auto g = grassmann_graph(F, 5, 2);
  CHECK(g.vertex_count() == 155);
  // degree q [k]_q [n-k]_q
  const std::uint64_t expected_degree = 2 * oracle::q_int(2, 2) * oracle::q_int(3, 2);
  CHECK(expected_degree == 42);
  CHECK(g.regular_degree() == expected_degree);

  auto complete = grassmann_graph(F, 4, 1);
  CHECK(complete.vertex_count() == 15);
  CHECK(complete.regular_degree() == 14);

  CHECK(grassmann_graph(F, 5, 3).vertex_count() == gaussian_binomial(5, 3, 2));
  CHECK_THROWS_AS(grassmann_graph(F, 5, 5), std::invalid_argument);
  CHECK_THROWS_AS(grassmann_graph(F, 5, 0), std::invalid_argument);
}

TEST_CASE("twisted grassmann graph at (2,2)") {
  Instance in(2, 2);
  auto g = twisted_grassmann(in.field, 2, in.h);
  CHECK(g.vertex_count() == 155);
  std::size_t a = 0, b = 0;
  for (const auto& l : g.labels()) (l.family == Family::kA ? a : b)++;
  CHECK(a == gaussian_binomial(5, 3, 2) - gaussian_binomial(4, 3, 2));
  CHECK(a == 140);
  CHECK(b == 15);
  // A vertices come first
  CHECK(g.label(139).family == Family::kA);
  CHECK(g.label(140).family == Family::kB);
  CHECK(g.regular_degree() == 42);

  Label w1{Family::kA, Subspace::coordinate(in.field, 5, {0, 1, 4})};
  Label e1{Family::kB, Subspace::coordinate(in.field, 5, {0})};
  Label e3{Family::kB, Subspace::coordinate(in.field, 5, {2})};
  CHECK(twisted_adjacent(w1, e1, 2));
  CHECK(twisted_adjacent(e1, w1, 2));
  CHECK_FALSE(twisted_adjacent(w1, e3, 2));

  CHECK_THROWS_AS(twisted_grassmann(in.field, 1, Subspace::standard_hyperplane(in.field, 3)), std::invalid_argument);
  CHECK_THROWS_AS(twisted_grassmann(in.field, 2, Subspace::coordinate(in.field, 5, {0, 1})), std::invalid_argument);
}

TEST_CASE("PG designs") {
  auto F = Field::create(2, 1);
  auto pg = pg_design(F, 2);
  CHECK(pg.point_count() == 31);
  CHECK(pg.block_count() == 155);
  for (const auto& b : pg.blocks()) CHECK(b.size() == 7);
  CHECK_FALSE(pg.repeated_block());

  auto fano = pg_design(F, 1);
  CHECK(fano.point_count() == 7);
  CHECK(fano.block_count() == 7);
  for (const auto& b : fano.blocks()) CHECK(b.size() == 3);
}

TEST_CASE("f map worked examples") {
  Instance in(2, 2);
  PointSpace points(in.field, 5);
  auto image = f_map(Subspace::coordinate(in.field, 5, {0}), in.sigma, points);
  CHECK(image == points.indices_of(Subspace::coordinate(in.field, 5, {1, 2, 3})));
  CHECK(image.size() == 7);

  // σ(<e1,e2>) = <e3,e4>, affine part is the four points of <e1,e2,e5> with x5 = 1
  auto a_block = f_map(Subspace::coordinate(in.field, 5, {0, 1, 4}), in.sigma, points);
  std::set<std::uint64_t> expected_codes;
  for (auto rep : {oracle::Vec{0, 0, 1, 0, 0}, {0, 0, 0, 1, 0}, {0, 0, 1, 1, 0}, {0, 0, 0, 0, 1}, {1, 0, 0, 0, 1},
                   {0, 1, 0, 0, 1}, {1, 1, 0, 0, 1}}) {
    expected_codes.insert(oracle::encode(rep, 2));
  }
  std::set<std::uint64_t> got;
  for (auto idx : a_block) got.insert(encode_vector(points.point(idx).rep, 2));
  CHECK(got == expected_codes);

  CHECK_THROWS_AS(f_map(Subspace::coordinate(in.field, 5, {0, 1}), in.sigma, points), std::invalid_argument);
  CHECK_THROWS_AS(f_map(Subspace::coordinate(in.field, 5, {0, 1, 2}), in.sigma, points), std::invalid_argument);
}

TEST_CASE("JT design at (2,2)") {
  Instance in(2, 2);
  auto jt = jt_design(in.field, 2, in.sigma);
  CHECK(jt.point_count() == 31);
  CHECK(jt.block_count() == 155);
  std::size_t a_blocks = 0;
  for (std::size_t i = 0; i < jt.block_count(); ++i) {
    CHECK(jt.block(i).size() == 7);
    if (jt.labels()[i].family == Family::kAPrime) {
      ++a_blocks;
      CHECK(jt.block(i) == f_map(*jt.labels()[i].subspace, in.sigma, *jt.points()));
    } else {
      CHECK(jt.labels()[i].family == Family::kBPrime);
      CHECK(in.h.contains(*jt.labels()[i].subspace));
    }
  }
  CHECK(a_blocks == 140);
  std::set<Block> distinct(jt.blocks().begin(), jt.blocks().end());
  CHECK(distinct.size() == 155);
  CHECK_THROWS_AS(jt_design(in.field, 1, Polarity(Subspace::standard_hyperplane(in.field, 3))), std::invalid_argument);
}

TEST_CASE("f is injective on A ∪ B and lands on the JT blocks") {
  Instance in(2, 2);
  auto jt = jt_design(in.field, 2, in.sigma);
  std::set<Block> images;
  for (const auto& w : twisted_family_a(in.field, 2, in.h)) images.insert(f_map(w, in.sigma, *jt.points()));
  for (const auto& w : twisted_family_b(2, in.h)) images.insert(f_map(w, in.sigma, *jt.points()));
  CHECK(images.size() == 155);
  CHECK(images == std::set<Block>(jt.blocks().begin(), jt.blocks().end()));
}

TEST_CASE("block graphs") {
  auto F = Field::create(2, 1);
  auto pg = pg_design(F, 2);
  CHECK(block_graph(pg, 8).edge_count() == 0);

  // label-preserving comparison with J_2(5,3)
  auto bg = block_graph(pg, 3);
  auto j53 = grassmann_graph(F, 5, 3);
  REQUIRE(bg.vertex_count() == j53.vertex_count());
  for (std::size_t i = 0; i < bg.vertex_count(); ++i) CHECK(*bg.label(i).subspace == *j53.label(i).subspace);
  CHECK(bg.same_adjacency(j53));

  Instance in(2, 2);
  CHECK(block_graph(jt_design(in.field, 2, in.sigma), 3).regular_degree() == 42);
}

TEST_CASE("intersection spectra") {
  Instance in(2, 2);
  auto jt = jt_design(in.field, 2, in.sigma);
  auto pg = pg_design(in.field, 2);
  auto support = [](const auto& spectrum) {
    std::set<std::size_t> s;
    for (auto [size, count] : spectrum) s.insert(size);
    return s;
  };
  CHECK(support(intersection_spectrum(jt)) == std::set<std::size_t>{1, 3});
  CHECK(support(intersection_spectrum(pg)) == std::set<std::size_t>{1, 3});
  std::uint64_t total = 0;
  for (auto [size, count] : intersection_spectrum(jt)) total += count;
  CHECK(total == 155 * 154 / 2);

  Design single(3, {{0, 1}});
  CHECK(intersection_spectrum(single).empty());
}

TEST_CASE("dimension case analysis on random pairs at (3,2)") {
  Instance in(3, 2);
  auto a = twisted_family_a(in.field, 2, in.h);
  auto b = twisted_family_b(2, in.h);
  std::mt19937 rng(23);
  auto sig_meet = [&](const Subspace& w1, const Subspace& w2) {
    return meet(in.sigma.apply(intersect(w1, in.h)), in.sigma.apply(intersect(w2, in.h)));
  };
  int seen_inside = 0, seen_outside = 0;
  for (int t = 0; t < 300; ++t) {
    const auto& w1 = a[rng() % a.size()];
    const auto& w2 = a[rng() % a.size()];
    const auto d = meet(w1, w2);
    if (in.h.contains(intersect(w1, w2))) {
      ++seen_inside;
      CHECK(sig_meet(w1, w2) == d);
    } else {
      ++seen_outside;
      CHECK(sig_meet(w1, w2) + 1 == d);
    }
    const auto& u = b[rng() % b.size()];
    CHECK(sig_meet(w1, u) == meet(w1, u) + 1);
    const auto& u2 = b[rng() % b.size()];
    CHECK(sig_meet(u, u2) == meet(u, u2) + 2);
  }
  CHECK(seen_inside > 0);
  CHECK(seen_outside > 0);
}

TEST_CASE("per-case intersection size formulas at (2,2)") {
  Instance in(2, 2);
  PointSpace points(in.field, 5);
  auto a = twisted_family_a(in.field, 2, in.h);
  auto b = twisted_family_b(2, in.h);
  auto f = [&](const Subspace& w) { return f_map(w, in.sigma, points); };
  const std::uint64_t q = 2;
  for (std::size_t i = 0; i < a.size(); i += 3) {
    for (std::size_t j = 0; j < a.size(); j += 5) {
      if (i == j) continue;
      CHECK(intersection_size(f(a[i]), f(a[j])) == oracle::q_int(meet(a[i], a[j]), q));
    }
    for (const auto& u : b) CHECK(intersection_size(f(a[i]), f(u)) == oracle::q_int(meet(a[i], u) + 1, q));
  }
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = i + 1; j < b.size(); ++j)
      CHECK(intersection_size(f(b[i]), f(b[j])) == oracle::q_int(meet(b[i], b[j]) + 2, q));
}

TEST_CASE("design and graph validation") {
  CHECK_THROWS_AS(Design(3, {{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Design(3, {{0, 3}}), std::invalid_argument);
  Design d(3, {{1, 0}, {0, 1}});
  CHECK(d.block(0) == Block{0, 1});
  CHECK(d.repeated_block() == std::make_pair(std::size_t{0}, std::size_t{1}));
  CHECK_THROWS_AS(Graph({}, AdjacencyLists{{1}, {}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph({}, AdjacencyLists{{0}}), std::invalid_argument);
  auto k2 = Graph::from_edges(2, {{0, 1}});
  CHECK(k2.adjacent(0, 1));
  CHECK(k2.adjacent(1, 0));
  CHECK_FALSE(k2.adjacent(0, 0));
}

}

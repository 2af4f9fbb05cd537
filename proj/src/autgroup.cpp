#include "tgg/autgroup.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include <omp.h>

#include "tgg/random.hpp"

namespace tgg {

SemilinearMap::SemilinearMap(Matrix matrix, std::uint32_t frob) : matrix_(std::move(matrix)), frob_(frob) {
  if (matrix_.rows() != matrix_.cols()) throw std::invalid_argument("semilinear map needs a square matrix");
  if (frob_ >= matrix_.field()->degree()) throw std::invalid_argument("Frobenius power out of range");
  if (rank(matrix_) != matrix_.rows()) throw std::invalid_argument("semilinear map matrix is singular");
}

SemilinearMap SemilinearMap::identity(const FieldPtr& field, std::size_t n) {
  return SemilinearMap(Matrix::identity(field, n), 0);
}

SemilinearMap SemilinearMap::scalar(const FieldPtr& field, std::size_t n, FieldElement c) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = c;
  return SemilinearMap(std::move(m), 0);
}

Vector SemilinearMap::apply(std::span<const FieldElement> x) const {
  if (frob_ == 0) return matrix_.apply(x);
  const Field& F = *matrix_.field();
  Vector twisted(x.begin(), x.end());
  for (auto& c : twisted) c = F.frobenius(c, frob_);
  return matrix_.apply(twisted);
}

Subspace SemilinearMap::apply(const Subspace& w) const {
  std::vector<Vector> images;
  images.reserve(w.dim());
  for (std::size_t r = 0; r < w.dim(); ++r) images.push_back(apply(w.basis().row(r)));
  return Subspace::span(w.field(), w.ambient_dim(), images);
}

bool SemilinearMap::stabilizes_standard_hyperplane() const {
  const std::size_t n = dim();
  for (std::size_t c = 0; c + 1 < n; ++c) {
    if (!matrix_(n - 1, c).is_zero()) return false;
  }
  return true;
}

SemilinearMap SemilinearMap::compose(const SemilinearMap& inner) const {
  const Field& F = *matrix_.field();
  Matrix twisted = inner.matrix_;
  for (std::size_t r = 0; r < twisted.rows(); ++r)
    for (auto& x : twisted.row(r)) x = F.frobenius(x, frob_);
  return SemilinearMap(matrix_ * twisted, (frob_ + inner.frob_) % F.degree());
}

PointPermutation PointPermutation::identity(std::size_t n) {
  PointPermutation p;
  p.perm.resize(n);
  std::iota(p.perm.begin(), p.perm.end(), 0u);
  return p;
}

bool PointPermutation::is_bijection() const {
  std::vector<bool> hit(perm.size(), false);
  for (auto x : perm) {
    if (x >= perm.size() || hit[x]) return false;
    hit[x] = true;
  }
  return true;
}

PointPermutation PointPermutation::compose(const PointPermutation& inner) const {
  PointPermutation out;
  out.perm.resize(inner.perm.size());
  for (std::size_t x = 0; x < inner.perm.size(); ++x) out.perm[x] = perm[inner.perm[x]];
  return out;
}

SemilinearMap random_stabilizer_element(const FieldPtr& field, std::size_t e, std::mt19937_64& rng) {
  const std::size_t n = 2 * e + 1;
  const std::uint32_t q = field->order();
  Matrix block(field, 2 * e, 2 * e);
  do {
    for (std::size_t r = 0; r < 2 * e; ++r)
      for (auto& x : block.row(r)) x = FieldElement{static_cast<std::uint32_t>(uniform_below(rng, q))};
  } while (rank(block) != 2 * e);

  Matrix m(field, n, n);
  for (std::size_t r = 0; r < 2 * e; ++r)
    for (std::size_t c = 0; c < 2 * e; ++c) m(r, c) = block(r, c);
  for (std::size_t r = 0; r < 2 * e; ++r) m(r, n - 1) = FieldElement{static_cast<std::uint32_t>(uniform_below(rng, q))};
  m(n - 1, n - 1) = FieldElement{static_cast<std::uint32_t>(1 + uniform_below(rng, q - 1))};
  const auto frob = static_cast<std::uint32_t>(uniform_below(rng, field->degree()));
  return SemilinearMap(std::move(m), frob);
}

SemilinearMap random_stabilizer_element(const FieldPtr& field, std::size_t e, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return random_stabilizer_element(field, e, rng);
}

namespace {

void require_standard(const Polarity& sigma) {
  const Subspace& h = sigma.hyperplane();
  if (!(h == Subspace::standard_hyperplane(h.field(), h.ambient_dim()))) {
    throw std::invalid_argument("lift needs the polarity of the standard hyperplane");
  }
}

// Precomputed pieces of the lift of one semilinear map.
class LiftKernel {
 public:
  LiftKernel(const SemilinearMap& phi, const Polarity& sigma)
      : field_(phi.matrix().field()), phi_(phi), gram_(sigma.gram()), n_(phi.dim()) {
    require_standard(sigma);
    if (!phi.stabilizes_standard_hyperplane()) throw std::invalid_argument("map does not stabilize H");
    if (sigma.hyperplane().ambient_dim() != n_) throw std::invalid_argument("map and polarity dimensions differ");
    const std::size_t m = n_ - 1;
    Matrix block(field_, m, m);
    for (std::size_t r = 0; r < m; ++r)
      for (std::size_t c = 0; c < m; ++c) block(r, c) = phi.matrix()(r, c);
    dual_ = sigma.gram_inverse() * inverse(block)->transpose();
  }

  PointPermutation operator()(const PointSpace& points) const {
    const Field& F = *field_;
    const std::size_t m = n_ - 1;
    PointPermutation out;
    out.perm.resize(points.size());
    Vector normal(m), image(n_);
    for (std::size_t i = 0; i < points.size(); ++i) {
      const Vector& x = points.point(i).rep;
      if (x[m].is_zero()) {
        // σφσ<x> = <G^-1 B^-T (G x)^θ>
        for (std::size_t r = 0; r < m; ++r) {
          FieldElement acc{};
          for (std::size_t c = 0; c < m; ++c) acc = F.add(acc, F.mul(gram_(r, c), x[c]));
          normal[r] = F.frobenius(acc, phi_.frob());
        }
        for (std::size_t r = 0; r < m; ++r) {
          FieldElement acc{};
          for (std::size_t c = 0; c < m; ++c) acc = F.add(acc, F.mul(dual_(r, c), normal[c]));
          image[r] = acc;
        }
        image[m] = FieldElement{};
        out.perm[i] = points.index_of(image);
      } else {
        out.perm[i] = points.index_of(phi_.apply(x));
      }
    }
    return out;
  }

 private:
  FieldPtr field_;
  const SemilinearMap& phi_;
  const Matrix& gram_;
  std::size_t n_;
  Matrix dual_{field_, 0, 0};
};

// Membership test for block point sets; bitmask fast path when v <= 64.
class BlockSet {
 public:
  explicit BlockSet(const Design& d) : design_(d), small_(d.point_count() <= 64) {
    if (small_) {
      for (const auto& b : d.blocks()) masks_.push_back(mask(b));
      std::sort(masks_.begin(), masks_.end());
    }
  }

  static std::uint64_t mask(const Block& b) {
    std::uint64_t m = 0;
    for (auto x : b) m |= std::uint64_t{1} << x;
    return m;
  }

  // first block whose image under perm is not a block
  std::optional<std::size_t> first_bad_image(const std::vector<std::uint32_t>& perm) const {
    Block image;
    for (std::size_t i = 0; i < design_.block_count(); ++i) {
      const Block& b = design_.block(i);
      if (small_) {
        std::uint64_t m = 0;
        for (auto x : b) m |= std::uint64_t{1} << perm[x];
        if (!std::binary_search(masks_.begin(), masks_.end(), m)) return i;
      } else {
        image.clear();
        for (auto x : b) image.push_back(perm[x]);
        std::sort(image.begin(), image.end());
        if (!design_.find_block(image)) return i;
      }
    }
    return std::nullopt;
  }

 private:
  const Design& design_;
  bool small_;
  std::vector<std::uint64_t> masks_;
};

}  // namespace

PointPermutation lift(const SemilinearMap& phi, const Polarity& sigma, const PointSpace& points) {
  return LiftKernel(phi, sigma)(points);
}

AutomorphismCheck is_design_automorphism(const Design& d, const PointPermutation& p) {
  if (p.perm.size() != d.point_count()) throw std::invalid_argument("permutation size differs from point count");
  if (!p.is_bijection()) return AutomorphismCheck{false, std::nullopt};
  const auto bad = BlockSet(d).first_bad_image(p.perm);
  return AutomorphismCheck{!bad.has_value(), bad};
}

RelationCheck check_lift_relation(const Design& d, const Graph& g, const IsoCertificate& cert,
                                      const SemilinearMap& phi, const Polarity& sigma) {
  if (!d.points()) throw std::invalid_argument("design without geometric points");
  if (cert.mapping.size() != g.vertex_count()) throw std::invalid_argument("certificate size mismatch");
  const auto alpha = lift(phi, sigma, *d.points());

  std::unordered_map<Subspace, std::size_t, SubspaceHash> vertex_of;
  for (std::size_t i = 0; i < g.vertex_count(); ++i) {
    if (!g.label(i).subspace) throw std::invalid_argument("graph vertex without a subspace label");
    vertex_of.emplace(*g.label(i).subspace, i);
  }

  Block image;
  for (std::size_t i = 0; i < g.vertex_count(); ++i) {
    const auto target = vertex_of.find(phi.apply(*g.label(i).subspace));
    if (target == vertex_of.end()) return RelationCheck{false, i};
    image.clear();
    for (auto x : d.block(cert.mapping[i])) image.push_back(alpha.perm[x]);
    std::sort(image.begin(), image.end());
    if (image != d.block(cert.mapping[target->second])) return RelationCheck{false, i};
  }
  return RelationCheck{true, std::nullopt};
}

std::uint64_t stabilizer_order(std::uint64_t q, std::uint64_t e, std::uint64_t f) {
  auto checked_mul = [](std::uint64_t a, std::uint64_t b) {
    std::uint64_t out;
    if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("stabilizer_order overflow");
    return out;
  };
  const std::uint64_t m = 2 * e;
  std::uint64_t qm = 1;
  for (std::uint64_t i = 0; i < m; ++i) qm = checked_mul(qm, q);
  std::uint64_t order = qm;  // q^{2e} choices for the last column
  std::uint64_t qi = 1;
  for (std::uint64_t i = 0; i < m; ++i) {
    order = checked_mul(order, qm - qi);
    qi *= q;
  }
  return checked_mul(order, f);
}

std::vector<std::vector<std::uint32_t>> gl_gf2(std::size_t n) {
  if (n > 5) throw std::invalid_argument("gl_gf2 is limited to n <= 5");
  std::vector<std::vector<std::uint32_t>> out;
  const std::uint64_t total = std::uint64_t{1} << (n * n);
  const std::uint32_t row_mask = (1u << n) - 1;
  for (std::uint64_t code = 0; code < total; ++code) {
    std::vector<std::uint32_t> rows(n);
    for (std::size_t r = 0; r < n; ++r) rows[r] = static_cast<std::uint32_t>(code >> (n * (n - 1 - r))) & row_mask;
    std::vector<std::vector<std::uint64_t>> packed;
    for (auto row : rows) {
      // bit c of the packed row is column c; row masks store column 0 as the high bit
      std::uint64_t p = 0;
      for (std::size_t c = 0; c < n; ++c)
        if (row >> (n - 1 - c) & 1u) p |= std::uint64_t{1} << c;
      packed.push_back({p});
    }
    if (rank_gf2(std::move(packed), n) == n) out.push_back(std::move(rows));
  }
  return out;
}

ExhaustiveReport exhaustive_lift_check(const Design& d, const Polarity& sigma, const ProgressFn& progress) {
  const FieldPtr& field = sigma.hyperplane().field();
  if (field->order() != 2 || sigma.hyperplane().ambient_dim() != 5) {
    throw std::invalid_argument("exhaustive lift check is limited to (q, e) = (2, 2)");
  }
  if (!d.points()) throw std::invalid_argument("design without geometric points");
  require_standard(sigma);
  constexpr std::size_t n = 5, m = 4;
  const std::size_t v = d.point_count();

  const auto blocks = gl_gf2(m);
  const std::uint64_t mixes = 1u << m;
  const std::uint64_t total = blocks.size() * mixes;
  const BlockSet block_set(d);

  std::vector<std::uint16_t> perms(total * v);
  std::vector<std::uint8_t> ok(total, 0);
  std::uint64_t done = 0;
  const auto count = static_cast<std::int64_t>(blocks.size());

#pragma omp parallel for schedule(dynamic, 64)
  for (std::int64_t bi = 0; bi < count; ++bi) {
    const auto& rows = blocks[static_cast<std::size_t>(bi)];
    for (std::uint64_t mix = 0; mix < mixes; ++mix) {
      Matrix a(field, n, n);
      for (std::size_t r = 0; r < m; ++r) {
        for (std::size_t c = 0; c < m; ++c) a(r, c) = FieldElement{rows[r] >> (m - 1 - c) & 1u};
        a(r, m) = FieldElement{static_cast<std::uint32_t>(mix >> (m - 1 - r) & 1u)};
      }
      a(m, m) = FieldElement{1};
      const SemilinearMap phi(std::move(a), 0);
      const auto p = LiftKernel(phi, sigma)(*d.points());
      const std::uint64_t idx = static_cast<std::uint64_t>(bi) * mixes + mix;
      std::copy(p.perm.begin(), p.perm.end(), perms.begin() + static_cast<std::ptrdiff_t>(idx * v));
      ok[idx] = p.is_bijection() && !block_set.first_bad_image(p.perm).has_value();
    }
    if (progress) {
#pragma omp critical(tgg_progress)
      {
        done += mixes;
        if (done % (mixes * 1024) == 0 || done == total) progress(done, total);
      }
    }
  }

  ExhaustiveReport report;
  report.total = total;
  for (std::uint64_t i = 0; i < total; ++i) {
    if (ok[i]) {
      ++report.automorphisms;
    } else {
      ++report.failures;
      if (report.failure_indices.size() < 10) report.failure_indices.push_back(i);
    }
  }

  auto perm_at = [&](std::uint64_t i) { return perms.begin() + static_cast<std::ptrdiff_t>(i * v); };
  std::vector<std::uint64_t> order(total);
  std::iota(order.begin(), order.end(), std::uint64_t{0});
  std::sort(order.begin(), order.end(), [&](std::uint64_t x, std::uint64_t y) {
    return std::lexicographical_compare(perm_at(x), perm_at(x) + static_cast<std::ptrdiff_t>(v), perm_at(y),
                                        perm_at(y) + static_cast<std::ptrdiff_t>(v));
  });
  for (std::uint64_t i = 0; i < total; ++i) {
    if (i == 0 || !std::equal(perm_at(order[i]), perm_at(order[i]) + static_cast<std::ptrdiff_t>(v), perm_at(order[i - 1]))) {
      ++report.distinct;
    }
  }
  for (std::uint64_t i = 0; i < total; ++i) {
    bool is_identity = true;
    for (std::size_t x = 0; x < v && is_identity; ++x) is_identity = perm_at(i)[static_cast<std::ptrdiff_t>(x)] == x;
    if (is_identity) ++report.identity_count;
  }
  return report;
}

}  // namespace tgg

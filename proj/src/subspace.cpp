#include "tgg/subspace.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace tgg {

Subspace::Subspace(RrefResult reduced)
    : basis_(reduced.form.top_rows(reduced.rank)), pivots_(std::move(reduced.pivots)) {}

Subspace Subspace::span(FieldPtr field, std::size_t n, const std::vector<Vector>& vectors) {
  for (const auto& v : vectors) {
    if (v.size() != n) throw std::invalid_argument("span of vectors with mixed lengths");
  }
  return Subspace(rref(Matrix::from_vectors(std::move(field), vectors, n)));
}

Subspace Subspace::row_space(const Matrix& m) { return Subspace(rref(m)); }

Subspace Subspace::zero(FieldPtr field, std::size_t n) { return Subspace(rref(Matrix(std::move(field), 0, n))); }

Subspace Subspace::full(FieldPtr field, std::size_t n) { return Subspace(rref(Matrix::identity(std::move(field), n))); }

Subspace Subspace::coordinate(FieldPtr field, std::size_t n, const std::vector<std::size_t>& indices) {
  Matrix m(field, indices.size(), n);
  for (std::size_t r = 0; r < indices.size(); ++r) {
    if (indices[r] >= n) throw std::out_of_range("coordinate index out of range");
    m(r, indices[r]) = FieldElement{1};
  }
  return Subspace(rref(m));
}

Subspace Subspace::standard_hyperplane(FieldPtr field, std::size_t n) {
  if (n == 0) throw std::invalid_argument("no hyperplane in a zero-dimensional space");
  std::vector<std::size_t> idx(n - 1);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  return coordinate(std::move(field), n, idx);
}

std::vector<Vector> Subspace::basis_vectors() const {
  std::vector<Vector> out;
  out.reserve(dim());
  for (std::size_t r = 0; r < dim(); ++r) out.push_back(basis_.row_vector(r));
  return out;
}

bool Subspace::contains(std::span<const FieldElement> v) const {
  if (v.size() != ambient_dim()) throw std::invalid_argument("ambient dimension mismatch");
  const Field& F = *field();
  Vector residual(v.begin(), v.end());
  for (std::size_t r = 0; r < dim(); ++r) {
    const FieldElement c = residual[pivots_[r]];
    if (c.is_zero()) continue;
    const FieldElement neg = F.neg(c);
    auto row = basis_.row(r);
    for (std::size_t j = pivots_[r]; j < residual.size(); ++j) residual[j] = F.add(residual[j], F.mul(neg, row[j]));
  }
  return std::all_of(residual.begin(), residual.end(), [](FieldElement x) { return x.is_zero(); });
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_dim() != ambient_dim()) throw std::invalid_argument("ambient dimension mismatch");
  if (other.dim() > dim()) return false;
  for (std::size_t r = 0; r < other.dim(); ++r) {
    if (!contains(other.basis_.row(r))) return false;
  }
  return true;
}

Vector Subspace::coordinates_of(std::span<const FieldElement> v) const {
  Vector coords(dim());
  for (std::size_t r = 0; r < dim(); ++r) coords[r] = v[pivots_[r]];
  return coords;
}

Vector Subspace::combine(std::span<const FieldElement> coords) const {
  const Field& F = *field();
  Vector out(ambient_dim());
  for (std::size_t r = 0; r < dim(); ++r) {
    if (coords[r].is_zero()) continue;
    auto row = basis_.row(r);
    for (std::size_t j = 0; j < out.size(); ++j) out[j] = F.add(out[j], F.mul(coords[r], row[j]));
  }
  return out;
}

bool Subspace::operator<(const Subspace& other) const {
  if (ambient_dim() != other.ambient_dim()) return ambient_dim() < other.ambient_dim();
  if (dim() != other.dim()) return dim() < other.dim();
  return basis_.data() < other.basis_.data();
}

std::size_t Subspace::hash() const {
  std::size_t h = ambient_dim() * 1000003u + dim();
  for (auto x : basis_.data()) h = h * 1099511628211ull + x.value + 1;
  return h;
}

namespace {

void require_same_ambient(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim() || !a.field()->same_as(*b.field())) {
    throw std::invalid_argument("subspaces live in different ambient spaces");
  }
}

}  // namespace

Subspace sum(const Subspace& a, const Subspace& b) {
  require_same_ambient(a, b);
  return Subspace::row_space(a.basis().stacked(b.basis()));
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  require_same_ambient(a, b);
  const Matrix dual = kernel_basis(a.basis()).stacked(kernel_basis(b.basis()));
  return Subspace::row_space(kernel_basis(dual));
}

std::size_t sum_dim(const Subspace& a, const Subspace& b) {
  require_same_ambient(a, b);
  return rank(a.basis().stacked(b.basis()));
}

std::size_t intersection_dim(const Subspace& a, const Subspace& b) {
  return a.dim() + b.dim() - sum_dim(a, b);
}

ProjectivePoint ProjectivePoint::of(const Field& field, Vector v) {
  auto lead = std::find_if(v.begin(), v.end(), [](FieldElement x) { return !x.is_zero(); });
  if (lead == v.end()) throw std::invalid_argument("the zero vector spans no point");
  const FieldElement scale = field.inv(*lead);
  for (auto it = lead; it != v.end(); ++it) *it = field.mul(*it, scale);
  return ProjectivePoint{std::move(v)};
}

bool contains(const Subspace& w, const ProjectivePoint& point) { return w.contains(point.rep); }

std::uint64_t encode_vector(std::span<const FieldElement> v, std::uint32_t q) {
  std::uint64_t code = 0;
  for (auto x : v) code = code * q + x.value;
  return code;
}

Vector decode_vector(std::uint64_t code, std::size_t n, std::uint32_t q) {
  Vector v(n);
  for (std::size_t i = n; i-- > 0;) {
    v[i] = FieldElement{static_cast<std::uint32_t>(code % q)};
    code /= q;
  }
  return v;
}

std::uint64_t gaussian_binomial(std::uint64_t n, std::uint64_t k, std::uint64_t q) {
  if (k > n) throw std::invalid_argument("gaussian_binomial requires k <= n");
  if (q < 2) throw std::invalid_argument("gaussian_binomial requires q >= 2");
  k = std::min(k, n - k);
  using u128 = unsigned __int128;
  auto power_minus_one = [q](std::uint64_t e) {
    u128 x = 1;
    for (std::uint64_t i = 0; i < e; ++i) {
      if (__builtin_mul_overflow(x, u128{q}, &x)) throw std::overflow_error("gaussian_binomial overflow");
    }
    return x - 1;
  };
  u128 result = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    u128 num = power_minus_one(n - i);
    u128 prod;
    if (__builtin_mul_overflow(result, num, &prod)) throw std::overflow_error("gaussian_binomial overflow");
    // every partial product is itself a q-binomial, so this division is exact
    result = prod / power_minus_one(i + 1);
  }
  if (result > u128{UINT64_MAX}) throw std::overflow_error("gaussian_binomial overflow");
  return static_cast<std::uint64_t>(result);
}

std::uint64_t point_count(std::uint64_t d, std::uint64_t q) { return d == 0 ? 0 : gaussian_binomial(d, 1, q); }

KSubspaceStream::KSubspaceStream(Subspace ambient, std::size_t k)
    : ambient_(std::move(ambient)), k_(k), m_(ambient_.dim()) {
  if (k_ > m_) throw std::invalid_argument("subspace dimension exceeds ambient dimension");
}

void KSubspaceStream::reset() {
  started_ = false;
  done_ = false;
}

bool KSubspaceStream::advance_pattern() {
  // next k-combination of {0..m-1} in lexicographic order
  std::size_t i = k_;
  while (i > 0 && pattern_[i - 1] == m_ - k_ + (i - 1)) --i;
  if (i == 0) return false;
  ++pattern_[i - 1];
  for (std::size_t j = i; j < k_; ++j) pattern_[j] = pattern_[j - 1] + 1;
  return true;
}

std::optional<Subspace> KSubspaceStream::next() {
  if (done_) return std::nullopt;
  const std::uint32_t q = ambient_.field()->order();

  bool new_pattern = false;
  if (!started_) {
    started_ = true;
    pattern_.resize(k_);
    std::iota(pattern_.begin(), pattern_.end(), std::size_t{0});
    new_pattern = true;
  } else {
    std::size_t pos = counter_.size();
    while (pos > 0 && counter_[pos - 1] == q - 1) counter_[--pos] = 0;
    if (pos > 0) {
      ++counter_[pos - 1];
    } else {
      if (!advance_pattern()) {
        done_ = true;
        return std::nullopt;
      }
      new_pattern = true;
    }
  }

  if (new_pattern) {
    free_slots_.clear();
    for (std::size_t r = 0; r < k_; ++r) {
      for (std::size_t c = pattern_[r] + 1; c < m_; ++c) {
        if (std::find(pattern_.begin(), pattern_.end(), c) == pattern_.end()) free_slots_.emplace_back(r, c);
      }
    }
    counter_.assign(free_slots_.size(), 0);
  }

  Matrix coeffs(ambient_.field(), k_, m_);
  for (std::size_t r = 0; r < k_; ++r) coeffs(r, pattern_[r]) = FieldElement{1};
  for (std::size_t s = 0; s < free_slots_.size(); ++s) {
    coeffs(free_slots_[s].first, free_slots_[s].second) = FieldElement{counter_[s]};
  }
  if (m_ == ambient_.ambient_dim()) {
    // ambient is the whole space and its basis is the identity
    return Subspace::row_space(coeffs);
  }
  std::vector<Vector> rows;
  rows.reserve(k_);
  for (std::size_t r = 0; r < k_; ++r) rows.push_back(ambient_.combine(coeffs.row(r)));
  return Subspace::span(ambient_.field(), ambient_.ambient_dim(), rows);
}

std::vector<Subspace> enumerate_k_subspaces(const Subspace& ambient, std::size_t k) {
  KSubspaceStream stream(ambient, k);
  std::vector<Subspace> out;
  while (auto s = stream.next()) out.push_back(std::move(*s));
  return out;
}

std::vector<ProjectivePoint> projective_points(const Subspace& w) {
  const std::uint32_t q = w.field()->order();
  const std::size_t d = w.dim();
  std::vector<ProjectivePoint> out;
  Vector coords(d);
  for (std::size_t lead = 0; lead < d; ++lead) {
    std::uint64_t combos = 1;
    for (std::size_t j = lead + 1; j < d; ++j) combos *= q;
    for (std::uint64_t code = 0; code < combos; ++code) {
      std::fill(coords.begin(), coords.end(), FieldElement{});
      coords[lead] = FieldElement{1};
      std::uint64_t rest = code;
      for (std::size_t j = d; j-- > lead + 1;) {
        coords[j] = FieldElement{static_cast<std::uint32_t>(rest % q)};
        rest /= q;
      }
      // RREF basis: the result is already monic
      out.push_back(ProjectivePoint{w.combine(coords)});
    }
  }
  std::sort(out.begin(), out.end(), [q](const ProjectivePoint& a, const ProjectivePoint& b) {
    return encode_vector(a.rep, q) < encode_vector(b.rep, q);
  });
  return out;
}

std::vector<ProjectivePoint> affine_points(const Subspace& w, const Subspace& h) {
  if (h.ambient_dim() != w.ambient_dim() || h.dim() + 1 != h.ambient_dim()) {
    throw std::invalid_argument("affine_points needs a hyperplane of the ambient space");
  }
  auto pts = projective_points(w);
  std::erase_if(pts, [&h](const ProjectivePoint& p) { return h.contains(p.rep); });
  return pts;
}

PointSpace::PointSpace(FieldPtr field, std::size_t n)
    : field_(std::move(field)), n_(n), points_(projective_points(Subspace::full(field_, n))) {
  const std::uint32_t q = field_->order();
  constexpr std::uint64_t kTableLimit = std::uint64_t{1} << 22;
  std::uint64_t total = 1;
  bool small = true;
  for (std::size_t i = 0; i < n && small; ++i) {
    total *= q;
    small = total <= kTableLimit;
  }
  if (small) {
    table_.assign(total, UINT32_MAX);
    for (std::uint32_t idx = 0; idx < points_.size(); ++idx) {
      for (std::uint32_t s = 1; s < q; ++s) {
        Vector v = points_[idx].rep;
        for (auto& x : v) x = field_->mul(x, FieldElement{s});
        table_[encode_vector(v, q)] = idx;
      }
    }
  } else {
    for (std::uint32_t idx = 0; idx < points_.size(); ++idx) sparse_.emplace(encode_vector(points_[idx].rep, q), idx);
  }
}

std::uint32_t PointSpace::index_of(std::span<const FieldElement> v) const {
  if (v.size() != n_) throw std::invalid_argument("vector length does not match point space");
  const std::uint32_t q = field_->order();
  if (!table_.empty()) {
    const std::uint32_t idx = table_[encode_vector(v, q)];
    if (idx == UINT32_MAX) throw std::invalid_argument("the zero vector spans no point");
    return idx;
  }
  const auto p = ProjectivePoint::of(*field_, Vector(v.begin(), v.end()));
  return sparse_.at(encode_vector(p.rep, q));
}

std::vector<std::uint32_t> PointSpace::indices_of(const Subspace& w) const {
  std::vector<std::uint32_t> out;
  for (const auto& p : projective_points(w)) out.push_back(index_of(p.rep));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace tgg

#include "tgg/gf.hpp"

#include <sstream>

namespace tgg {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

namespace poly {
namespace {

using Coeffs = std::vector<std::uint32_t>;

void trim(Coeffs& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  // p is prime and small, Fermat is fine
  std::uint64_t result = 1, base = a % p;
  for (std::uint32_t e = p - 2; e > 0; e >>= 1) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
  }
  return static_cast<std::uint32_t>(result);
}

// Remainder of a modulo b over GF(p); b must be nonzero.
Coeffs remainder(Coeffs a, const Coeffs& b, std::uint32_t p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  const std::uint32_t lead_inv = inv_mod(b.back(), p);
  while (a.size() >= b.size()) {
    const std::uint32_t factor = static_cast<std::uint32_t>(std::uint64_t{a.back()} * lead_inv % p);
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) {
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + std::uint64_t{p - factor} * b[i]) % p);
    }
    trim(a);
  }
  return a;
}

Coeffs digits(std::uint32_t code, std::uint32_t p, std::uint32_t count) {
  Coeffs out(count);
  for (auto& c : out) {
    c = code % p;
    code /= p;
  }
  return out;
}

}  // namespace

bool is_irreducible(const std::vector<std::uint32_t>& monic, std::uint32_t p) {
  const std::size_t degree = monic.size() - 1;
  if (degree < 1) return false;
  for (std::size_t d = 1; d <= degree / 2; ++d) {
    std::uint32_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint32_t code = 0; code < count; ++code) {
      Coeffs divisor = digits(code, p, static_cast<std::uint32_t>(d));
      divisor.push_back(1);
      if (remainder(monic, divisor, p).empty()) return false;
    }
  }
  return true;
}

std::vector<std::uint32_t> smallest_irreducible(std::uint32_t p, std::uint32_t degree) {
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < degree; ++i) count *= p;
  for (std::uint64_t code = 0; code < count; ++code) {
    Coeffs candidate = digits(static_cast<std::uint32_t>(code), p, degree);
    candidate.push_back(1);
    if (is_irreducible(candidate, p)) return candidate;
  }
  throw std::logic_error("no irreducible polynomial found");
}

}  // namespace poly

namespace {

std::uint32_t poly_mul_encoded(std::uint32_t a, std::uint32_t b, std::uint32_t p,
                               const std::vector<std::uint32_t>& modulus) {
  const std::size_t f = modulus.size() - 1;
  std::vector<std::uint32_t> da(f), db(f), prod(2 * f, 0);
  for (std::size_t i = 0; i < f; ++i) {
    da[i] = a % p;
    a /= p;
    db[i] = b % p;
    b /= p;
  }
  for (std::size_t i = 0; i < f; ++i) {
    for (std::size_t j = 0; j < f; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
  }
  // reduce by the monic modulus from the top
  for (std::size_t k = 2 * f; k-- > f;) {
    const std::uint32_t c = prod[k];
    if (c == 0) continue;
    prod[k] = 0;
    for (std::size_t i = 0; i < f; ++i) {
      prod[k - f + i] = (prod[k - f + i] + (p - c) * modulus[i]) % p;
    }
  }
  std::uint32_t out = 0;
  for (std::size_t i = f; i-- > 0;) out = out * p + prod[i];
  return out;
}

}  // namespace

FieldPtr Field::create(std::uint32_t p, std::uint32_t f) {
  if (!is_prime(p)) throw std::invalid_argument("characteristic " + std::to_string(p) + " is not prime");
  if (f < 1) throw std::invalid_argument("extension degree must be at least 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < f; ++i) {
    q *= p;
    if (q > kMaxOrder) throw std::invalid_argument("field order exceeds 2^16");
  }
  return FieldPtr(new Field(p, f, poly::smallest_irreducible(p, f)));
}

FieldPtr Field::from_order(std::uint32_t q) {
  if (q < 2) throw std::invalid_argument("field order must be at least 2");
  std::uint32_t p = 2;
  while (q % p != 0) ++p;
  std::uint32_t f = 0;
  std::uint32_t rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++f;
  }
  if (rest != 1) throw std::invalid_argument(std::to_string(q) + " is not a prime power");
  return create(p, f);
}

Field::Field(std::uint32_t p, std::uint32_t f, std::vector<std::uint32_t> modulus)
    : p_(p), f_(f), q_(1), modulus_(std::move(modulus)) {
  for (std::uint32_t i = 0; i < f; ++i) q_ *= p;

  neg_.resize(q_);
  for (std::uint32_t a = 0; a < q_; ++a) {
    std::uint32_t v = a, out = 0, scale = 1;
    for (std::uint32_t i = 0; i < f_; ++i) {
      out += ((p_ - v % p_) % p_) * scale;
      v /= p_;
      scale *= p_;
    }
    neg_[a] = static_cast<std::uint16_t>(out);
  }

  if (q_ <= kAddTableLimit) {
    add_.resize(std::size_t{q_} * q_);
    for (std::uint32_t a = 0; a < q_; ++a) {
      for (std::uint32_t b = 0; b < q_; ++b) {
        std::uint32_t x = a, y = b, out = 0, scale = 1;
        for (std::uint32_t i = 0; i < f_; ++i) {
          out += ((x % p_ + y % p_) % p_) * scale;
          x /= p_;
          y /= p_;
          scale *= p_;
        }
        add_[std::size_t{a} * q_ + b] = static_cast<std::uint16_t>(out);
      }
    }
  }

  // Locate a primitive element and build exp/log tables from it.
  const std::uint32_t group = q_ - 1;
  std::vector<std::uint16_t> powers;
  powers.reserve(group);
  for (std::uint32_t g = 1; g < q_; ++g) {
    powers.clear();
    std::uint32_t x = 1;
    do {
      powers.push_back(static_cast<std::uint16_t>(x));
      x = poly_mul_encoded(x, g, p_, modulus_);
    } while (x != 1 && powers.size() <= group);
    if (powers.size() == group) break;
  }
  if (powers.size() != group) throw std::logic_error("modulus does not define a field");
  log_.assign(q_, 0);
  exp_.resize(2 * std::size_t{group});
  for (std::uint32_t i = 0; i < group; ++i) {
    log_[powers[i]] = i;
    exp_[i] = powers[i];
    exp_[i + group] = powers[i];
  }
}

FieldElement Field::element(std::uint32_t v) const {
  if (v >= q_) throw std::out_of_range("value " + std::to_string(v) + " not in " + name());
  return FieldElement{v};
}

FieldElement Field::from_integer(std::int64_t n) const {
  const auto m = static_cast<std::int64_t>(p_);
  return FieldElement{static_cast<std::uint32_t>(((n % m) + m) % m)};
}

FieldElement Field::add(FieldElement a, FieldElement b) const {
  if (!add_.empty()) return FieldElement{add_[std::size_t{a.value} * q_ + b.value]};
  std::uint32_t x = a.value, y = b.value, out = 0, scale = 1;
  for (std::uint32_t i = 0; i < f_; ++i) {
    out += ((x % p_ + y % p_) % p_) * scale;
    x /= p_;
    y /= p_;
    scale *= p_;
  }
  return FieldElement{out};
}

FieldElement Field::sub(FieldElement a, FieldElement b) const { return add(a, neg(b)); }

FieldElement Field::inv(FieldElement a) const {
  if (a.value == 0) throw std::domain_error("inverse of zero in " + name());
  const std::uint32_t group = q_ - 1;
  return FieldElement{exp_[(group - log_[a.value]) % group]};
}

FieldElement Field::pow(FieldElement a, std::uint64_t e) const {
  if (e == 0) return one();
  if (a.value == 0) return zero();
  const std::uint64_t group = q_ - 1;
  return FieldElement{exp_[(std::uint64_t{log_[a.value]} * (e % group)) % group]};
}

FieldElement Field::frobenius(FieldElement a, std::uint32_t i) const {
  std::uint64_t e = 1;
  for (std::uint32_t k = 0; k < i % f_; ++k) e *= p_;
  return pow(a, e);
}

std::string Field::name() const {
  std::ostringstream out;
  out << "GF(" << q_ << ")";
  return out.str();
}

}  // namespace tgg

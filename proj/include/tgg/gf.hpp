#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace tgg {

/// An element of GF(q), stored as the integer whose base-p digits are the
/// polynomial coefficients (constant term least significant).
struct FieldElement {
  std::uint16_t value = 0;

  constexpr FieldElement() = default;
  constexpr explicit FieldElement(std::uint32_t v) : value(static_cast<std::uint16_t>(v)) {}

  constexpr bool is_zero() const { return value == 0; }
  friend constexpr auto operator<=>(FieldElement, FieldElement) = default;
};

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// Finite field GF(p^f), q <= 2^16. Immutable once built; share it through
/// FieldPtr.
class Field {
 public:
  static constexpr std::uint32_t kMaxOrder = 1u << 16;

  /// Builds GF(p^f) using the smallest monic irreducible polynomial of
  /// degree f (ordered by the integer encoding of its lower coefficients).
  /// Throws std::invalid_argument for non-prime p, f < 1 or q > 2^16.
  static FieldPtr create(std::uint32_t p, std::uint32_t f);

  /// Parses a prime power q and builds GF(q).
  static FieldPtr from_order(std::uint32_t q);

  std::uint32_t characteristic() const { return p_; }
  std::uint32_t degree() const { return f_; }
  std::uint32_t order() const { return q_; }
  /// Coefficients c0..cf of the modulus; cf == 1.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  FieldElement zero() const { return FieldElement{0}; }
  FieldElement one() const { return FieldElement{1}; }
  FieldElement element(std::uint32_t v) const;
  /// The residue class of an integer in the prime subfield.
  FieldElement from_integer(std::int64_t n) const;

  FieldElement add(FieldElement a, FieldElement b) const;
  FieldElement sub(FieldElement a, FieldElement b) const;
  FieldElement neg(FieldElement a) const { return FieldElement{neg_[a.value]}; }
  FieldElement mul(FieldElement a, FieldElement b) const {
    if (a.value == 0 || b.value == 0) return FieldElement{0};
    return FieldElement{exp_[log_[a.value] + log_[b.value]]};
  }
  /// Throws std::domain_error for zero.
  FieldElement inv(FieldElement a) const;
  FieldElement div(FieldElement a, FieldElement b) const { return mul(a, inv(b)); }
  FieldElement pow(FieldElement a, std::uint64_t e) const;
  /// a^(p^i); i is taken modulo f.
  FieldElement frobenius(FieldElement a, std::uint32_t i) const;

  bool same_as(const Field& other) const { return p_ == other.p_ && f_ == other.f_; }
  std::string name() const;

 private:
  Field(std::uint32_t p, std::uint32_t f, std::vector<std::uint32_t> modulus);

  std::uint32_t p_;
  std::uint32_t f_;
  std::uint32_t q_;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint16_t> add_;  // q*q table, only when q <= kAddTableLimit
  std::vector<std::uint16_t> neg_;
  std::vector<std::uint32_t> log_;
  std::vector<std::uint16_t> exp_;  // doubled so log sums need no reduction

  static constexpr std::uint32_t kAddTableLimit = 256;
};

bool is_prime(std::uint64_t n);

/// Polynomial helpers over GF(p), coefficient vectors with constant term
/// first. Exposed for the irreducibility tests.
namespace poly {
bool is_irreducible(const std::vector<std::uint32_t>& monic, std::uint32_t p);
std::vector<std::uint32_t> smallest_irreducible(std::uint32_t p, std::uint32_t degree);
}  // namespace poly

}  // namespace tgg

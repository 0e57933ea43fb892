#ifndef TAMECOVER_FINITE_FIELD_H
#define TAMECOVER_FINITE_FIELD_H

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace tamecover
{

/// Elements of F_{p^k} are encoded as Σ a_i p^i, a_i the coefficients of the
/// residue polynomial in u (u is the class of x modulo the field modulus).
using FieldElement = std::uint32_t;

/**
 * F_{p^k} = F_p[u]/(m(u)), with m the smallest monic irreducible of degree k
 * when monics are ordered by their coefficient encoding. Cheap to copy:
 * copies share immutable tables.
 */
class FiniteField
{
public:
  static constexpr unsigned max_order = 1u << 16;

  /// Throws invalid_argument for a non-prime p, k = 0, or p^k > max_order.
  FiniteField(unsigned p, unsigned k = 1);

  unsigned characteristic() const;
  unsigned extension_degree() const;
  unsigned order() const;

  /// Coefficients m_0..m_k of the modulus (m_k = 1).
  std::vector<unsigned> const &modulus() const;

  FieldElement zero() const { return 0u; }
  FieldElement one() const { return 1u; }
  /// The class of x; requires k ≥ 2.
  FieldElement generator() const;
  /// Smallest element (by encoding) generating the multiplicative group.
  FieldElement primitive_element() const;

  FieldElement from_int(long long n) const;

  FieldElement add(FieldElement a, FieldElement b) const;
  FieldElement sub(FieldElement a, FieldElement b) const;
  FieldElement neg(FieldElement a) const;
  FieldElement mul(FieldElement a, FieldElement b) const;
  /// Throws domain_error on 0.
  FieldElement inv(FieldElement a) const;
  FieldElement div(FieldElement a, FieldElement b) const;
  FieldElement pow(FieldElement a, std::uint64_t n) const;

  bool contains(FieldElement a) const { return a < order(); }
  bool in_prime_field(FieldElement a) const { return a < characteristic(); }

  /// Decimal in the prime field, otherwise a polynomial in u such as "2u+1".
  std::string to_string(FieldElement a) const;

  friend bool operator==(FiniteField const &a, FiniteField const &b);

private:
  struct Impl;
  std::shared_ptr<Impl const> impl_;
};

/// Lexicographically smallest monic irreducible of degree k over F_p (low coefficient first).
std::vector<unsigned> smallest_irreducible(unsigned p, unsigned k);

} // namespace tamecover

#endif // TAMECOVER_FINITE_FIELD_H

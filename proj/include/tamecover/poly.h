#ifndef TAMECOVER_POLY_H
#define TAMECOVER_POLY_H

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tamecover/finite_field.h"

namespace tamecover
{

/// Dense univariate polynomial over a finite field, low coefficient first,
/// never with a zero leading coefficient.
class Poly
{
public:
  /// degree() of the zero polynomial.
  static constexpr int zero_degree = -1;

  explicit Poly(FiniteField field);
  Poly(FiniteField field, std::vector<FieldElement> coeffs);

  static Poly constant(FiniteField const &field, FieldElement c);
  static Poly monomial(FiniteField const &field, FieldElement c, unsigned n);
  static Poly x(FiniteField const &field);

  FiniteField const &field() const { return field_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1u; }
  std::vector<FieldElement> const &coeffs() const { return coeffs_; }
  FieldElement coeff(unsigned i) const { return i < coeffs_.size() ? coeffs_[i] : 0u; }
  FieldElement leading() const { return coeffs_.empty() ? 0u : coeffs_.back(); }

  FieldElement operator()(FieldElement x) const;

  Poly derivative() const;
  /// Divided by its leading coefficient; zero stays zero.
  Poly monic() const;
  /// x^n·p(1/x); requires n ≥ degree.
  Poly reversed(unsigned n) const;
  /// Order of vanishing at a (0 if p(a) ≠ 0). Throws domain_error for zero.
  unsigned multiplicity(FieldElement a) const;

  std::string to_string(std::string_view var = "x") const;

  Poly operator-() const;
  friend Poly operator+(Poly const &a, Poly const &b);
  friend Poly operator-(Poly const &a, Poly const &b);
  friend Poly operator*(Poly const &a, Poly const &b);
  friend Poly operator*(FieldElement c, Poly const &a);
  friend bool operator==(Poly const &a, Poly const &b)
  {
    return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
  }

private:
  void normalize();

  FiniteField field_;
  std::vector<FieldElement> coeffs_;
};

/// Quotient and remainder; throws domain_error when b is zero.
std::pair<Poly, Poly> divmod(Poly const &a, Poly const &b);

/// Monic gcd; gcd(0, 0) = 0.
Poly gcd(Poly const &a, Poly const &b);

Poly pow(Poly const &a, unsigned n);

struct Root
{
  FieldElement value = 0;
  unsigned multiplicity = 0;

  friend bool operator==(Root const &, Root const &) = default;
};

/// Roots in the field itself, by evaluation and deflation, sorted by encoding.
/// Throws domain_error for the zero polynomial.
std::vector<Root> roots(Poly const &f);

/// Same roots, each repeated by its multiplicity.
std::vector<FieldElement> root_multiset(Poly const &f);

} // namespace tamecover

#endif // TAMECOVER_POLY_H

#ifndef TAMECOVER_INT_POLY_H
#define TAMECOVER_INT_POLY_H

#include <map>
#include <set>
#include <string>
#include <string_view>

#include "tamecover/finite_field.h"
#include "tamecover/poly.h"

namespace tamecover
{

/**
 * Sparse multivariate polynomial with integer coefficients, e.g. the
 * parametrised quartics whose reductions mod p are studied. Text syntax:
 * integers, identifiers, + - * ^ and parentheses; "2x" and "8mu" are read
 * as products. Coefficient overflow throws std::overflow_error.
 */
class IntPoly
{
public:
  using Monomial = std::map<std::string, unsigned>;
  using Terms = std::map<Monomial, long long>;

  IntPoly() = default;
  static IntPoly constant(long long c);
  static IntPoly variable(std::string name);
  /// Throws ParseError.
  static IntPoly parse(std::string_view text);

  Terms const &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::set<std::string> variables() const;

  /// Coefficients reduced into [0, p), zero terms dropped.
  IntPoly reduce_mod(unsigned p) const;

  std::string to_string() const;

  IntPoly operator-() const;
  friend IntPoly operator+(IntPoly const &a, IntPoly const &b);
  friend IntPoly operator-(IntPoly const &a, IntPoly const &b);
  friend IntPoly operator*(IntPoly const &a, IntPoly const &b);
  friend bool operator==(IntPoly const &, IntPoly const &) = default;

private:
  void add_term(Monomial const &m, long long c);

  Terms terms_;
};

IntPoly pow(IntPoly const &a, unsigned n);

/**
 * Reduces f mod the characteristic and reads it as a polynomial in `var`
 * over the field; every other variable must be given a value.
 * Throws invalid_argument for an unassigned variable.
 */
Poly reduce_mod_p(IntPoly const &f, FiniteField const &field, std::string_view var = "x",
                  std::map<std::string, FieldElement, std::less<>> const &values = {});

/// Value of a variable-free expression, or one in the field generator u (k ≥ 2).
FieldElement parse_field_element(FiniteField const &field, std::string_view text);

} // namespace tamecover

#endif // TAMECOVER_INT_POLY_H

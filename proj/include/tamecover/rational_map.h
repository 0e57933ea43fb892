#ifndef TAMECOVER_RATIONAL_MAP_H
#define TAMECOVER_RATIONAL_MAP_H

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "tamecover/poly.h"

namespace tamecover
{

/// A point of P^1 over the working field.
struct ProjPoint
{
  bool infinite = false;
  FieldElement x = 0;

  static ProjPoint at(FieldElement x) { return {false, x}; }
  static ProjPoint infinity() { return {true, 0}; }

  friend bool operator==(ProjPoint const &, ProjPoint const &) = default;
  /// Finite points by encoding, then ∞.
  friend std::strong_ordering operator<=>(ProjPoint const &a, ProjPoint const &b)
  {
    if (auto c = a.infinite <=> b.infinite; c != 0)
      return c;
    return a.infinite ? std::strong_ordering::equal : a.x <=> b.x;
  }
};

std::string to_string(FiniteField const &field, ProjPoint const &p);

/**
 * f = N/D with gcd(N, D) = 1 and D monic. The constructor reduces its input
 * and remembers whether a common factor was cancelled, so a degenerate
 * parameter choice shows up as a drop from declared_degree() to degree().
 */
class RationalMap
{
public:
  /// Throws invalid_argument when D = 0 or the fields differ.
  RationalMap(Poly numerator, Poly denominator);
  explicit RationalMap(Poly polynomial);

  /// (a x + b)/(c x + d); throws invalid_argument when ad − bc = 0.
  static RationalMap moebius(FiniteField const &field, FieldElement a, FieldElement b,
                             FieldElement c, FieldElement d);

  FiniteField const &field() const { return numerator_.field(); }
  Poly const &numerator() const { return numerator_; }
  Poly const &denominator() const { return denominator_; }

  unsigned degree() const;
  unsigned declared_degree() const { return declared_degree_; }
  bool was_reduced() const { return was_reduced_; }
  bool is_constant() const { return degree() == 0u; }

  ProjPoint operator()(ProjPoint const &p) const;

  /// N′D − ND′.
  Poly derivative_numerator() const;
  /// (N′D − ND′)/D², reduced.
  RationalMap derivative() const;
  bool is_separable() const;

  /// x ↦ f(1/x).
  RationalMap with_inverted_argument() const;

  /**
   * Ramification index at P. Throws domain_error for constant or
   * inseparable maps.
   */
  unsigned ram_index(ProjPoint const &p) const;

  std::string to_string(std::string_view var = "x") const;

  friend bool operator==(RationalMap const &a, RationalMap const &b)
  {
    return a.numerator_ == b.numerator_ && a.denominator_ == b.denominator_;
  }

private:
  Poly numerator_;
  Poly denominator_;
  unsigned declared_degree_ = 0;
  bool was_reduced_ = false;
};

/// f ∘ g.
RationalMap compose(RationalMap const &f, RationalMap const &g);

struct RamPoint
{
  ProjPoint point;
  ProjPoint value;
  unsigned index = 1;
  bool tame = true;

  friend bool operator==(RamPoint const &, RamPoint const &) = default;
};

struct RamReport
{
  unsigned degree = 0;
  bool separable = true;
  std::vector<RamPoint> points;  ///< index ≥ 2 only; finite points by encoding, then ∞
};

/// Ramified points rational over the working field. Throws domain_error if inseparable.
RamReport ram_report(RationalMap const &f);

/**
 * Σ(e_P − 1) = 2d − 2. Only meaningful when all ramification is rational
 * over the working field. Throws domain_error if a point is wild.
 */
bool tame_rh_check(RamReport const &report, unsigned d);

} // namespace tamecover

#endif // TAMECOVER_RATIONAL_MAP_H

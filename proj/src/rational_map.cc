#include <algorithm>
#include <set>
#include <stdexcept>

#include "tamecover/rational_map.h"

namespace tamecover
{

std::string to_string(FiniteField const &field, ProjPoint const &p)
{
  return p.infinite ? "inf" : field.to_string(p.x);
}

RationalMap::RationalMap(Poly numerator, Poly denominator)
  : numerator_(std::move(numerator))
  , denominator_(std::move(denominator))
{
  if (!(numerator_.field() == denominator_.field()))
    throw std::invalid_argument("numerator and denominator over different fields");
  if (denominator_.is_zero())
    throw std::invalid_argument("zero denominator");

  declared_degree_ = static_cast<unsigned>(std::max(numerator_.degree(), denominator_.degree()));

  Poly const g = gcd(numerator_, denominator_);
  if (g.degree() > 0) {
    numerator_ = divmod(numerator_, g).first;
    denominator_ = divmod(denominator_, g).first;
    was_reduced_ = true;
  }
  FieldElement const scale = field().inv(denominator_.leading());
  numerator_ = scale * numerator_;
  denominator_ = scale * denominator_;
}

RationalMap::RationalMap(Poly polynomial)
  : RationalMap(polynomial, Poly::constant(polynomial.field(), 1u))
{
}

RationalMap RationalMap::moebius(FiniteField const &field, FieldElement a, FieldElement b,
                                 FieldElement c, FieldElement d)
{
  if (field.mul(a, d) == field.mul(b, c))
    throw std::invalid_argument("degenerate Moebius transformation");
  return RationalMap(Poly(field, {b, a}), Poly(field, {d, c}));
}

unsigned RationalMap::degree() const
{
  return static_cast<unsigned>(std::max({numerator_.degree(), denominator_.degree(), 0}));
}

ProjPoint RationalMap::operator()(ProjPoint const &p) const
{
  auto const &f = field();
  if (p.infinite) {
    int const dn = numerator_.degree(), dd = denominator_.degree();
    if (dn > dd)
      return ProjPoint::infinity();
    if (dn < dd)
      return ProjPoint::at(0u);
    return ProjPoint::at(f.div(numerator_.leading(), denominator_.leading()));
  }
  FieldElement const den = denominator_(p.x);
  if (den == 0u)
    return ProjPoint::infinity();
  return ProjPoint::at(f.div(numerator_(p.x), den));
}

Poly RationalMap::derivative_numerator() const
{
  return numerator_.derivative() * denominator_ - numerator_ * denominator_.derivative();
}

RationalMap RationalMap::derivative() const
{
  return RationalMap(derivative_numerator(), denominator_ * denominator_);
}

bool RationalMap::is_separable() const
{
  return !derivative_numerator().is_zero();
}

RationalMap RationalMap::with_inverted_argument() const
{
  unsigned const n = degree();
  return RationalMap(numerator_.reversed(n), denominator_.reversed(n));
}

unsigned RationalMap::ram_index(ProjPoint const &p) const
{
  if (is_constant())
    throw std::domain_error("ramification index of a constant map");
  if (!is_separable())
    throw std::domain_error("ramification index of an inseparable map");

  if (p.infinite)
    return with_inverted_argument().ram_index(ProjPoint::at(0u));

  ProjPoint const value = (*this)(p);
  if (value.infinite)
    return denominator_.multiplicity(p.x);
  return (numerator_ - value.x * denominator_).multiplicity(p.x);
}

std::string RationalMap::to_string(std::string_view var) const
{
  if (denominator_.degree() == 0)
    return numerator_.to_string(var);
  return "(" + numerator_.to_string(var) + ")/(" + denominator_.to_string(var) + ")";
}

RationalMap compose(RationalMap const &f, RationalMap const &g)
{
  if (!(f.field() == g.field()))
    throw std::invalid_argument("maps over different fields");
  auto const &field = f.field();
  unsigned const n = f.degree();
  Poly const &a = g.numerator();
  Poly const &b = g.denominator();

  // Homogenise: f(A/B) = Σ n_i A^i B^{n−i} / Σ d_i A^i B^{n−i}.
  Poly num(field), den(field);
  for (unsigned i = 0; i <= n; ++i) {
    Poly const basis = pow(a, i) * pow(b, n - i);
    num = num + f.numerator().coeff(i) * basis;
    den = den + f.denominator().coeff(i) * basis;
  }
  return RationalMap(num, den);
}

RamReport ram_report(RationalMap const &f)
{
  if (!f.is_separable())
    throw std::domain_error("ramification report of an inseparable map");

  RamReport report;
  report.degree = f.degree();
  unsigned const p = f.field().characteristic();

  std::set<FieldElement> candidates;
  for (auto const &r : roots(f.derivative_numerator()))
    candidates.insert(r.value);
  if (f.denominator().degree() > 0) {
    for (auto const &r : roots(f.denominator()))
      candidates.insert(r.value);
  }

  auto consider = [&](ProjPoint const &pt) {
    unsigned const e = f.ram_index(pt);
    if (e >= 2u)
      report.points.push_back({pt, f(pt), e, e % p != 0u});
  };
  for (FieldElement x : candidates)
    consider(ProjPoint::at(x));
  consider(ProjPoint::infinity());
  return report;
}

bool tame_rh_check(RamReport const &report, unsigned d)
{
  unsigned sum = 0;
  for (auto const &pt : report.points) {
    if (!pt.tame)
      throw std::domain_error("wild ramification point");
    sum += pt.index - 1u;
  }
  return sum + 2u == 2u * d;
}

} // namespace tamecover

#include <algorithm>
#include <stdexcept>

#include "tamecover/poly.h"

namespace tamecover
{

namespace
{

void require_same_field(Poly const &a, Poly const &b)
{
  if (!(a.field() == b.field()))
    throw std::invalid_argument("polynomials over different fields");
}

} // anonymous namespace

Poly::Poly(FiniteField field)
  : field_(std::move(field))
{
}

Poly::Poly(FiniteField field, std::vector<FieldElement> coeffs)
  : field_(std::move(field))
  , coeffs_(std::move(coeffs))
{
  for (FieldElement c : coeffs_) {
    if (!field_.contains(c))
      throw std::invalid_argument("coefficient outside the field");
  }
  normalize();
}

Poly Poly::constant(FiniteField const &field, FieldElement c)
{
  return Poly(field, {c});
}

Poly Poly::monomial(FiniteField const &field, FieldElement c, unsigned n)
{
  std::vector<FieldElement> coeffs(n + 1u, 0u);
  coeffs[n] = c;
  return Poly(field, std::move(coeffs));
}

Poly Poly::x(FiniteField const &field)
{
  return monomial(field, 1u, 1u);
}

void Poly::normalize()
{
  while (!coeffs_.empty() && coeffs_.back() == 0u)
    coeffs_.pop_back();
}

FieldElement Poly::operator()(FieldElement x) const
{
  FieldElement acc = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;)
    acc = field_.add(field_.mul(acc, x), coeffs_[i]);
  return acc;
}

Poly Poly::derivative() const
{
  std::vector<FieldElement> d;
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    d.push_back(field_.mul(field_.from_int(static_cast<long long>(i)), coeffs_[i]));
  return Poly(field_, std::move(d));
}

Poly Poly::monic() const
{
  if (is_zero())
    return *this;
  return field_.inv(leading()) * *this;
}

Poly Poly::reversed(unsigned n) const
{
  if (degree() > static_cast<int>(n))
    throw std::invalid_argument("reversal degree below polynomial degree");
  std::vector<FieldElement> r(n + 1u, 0u);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    r[n - i] = coeffs_[i];
  return Poly(field_, std::move(r));
}

unsigned Poly::multiplicity(FieldElement a) const
{
  if (is_zero())
    throw std::domain_error("multiplicity of a root of the zero polynomial");
  Poly const linear(field_, {field_.neg(a), 1u});
  Poly rest = *this;
  unsigned m = 0;
  while (rest(a) == 0u) {
    rest = divmod(rest, linear).first;
    ++m;
  }
  return m;
}

std::string Poly::to_string(std::string_view var) const
{
  if (is_zero())
    return "0";
  bool const extension = field_.extension_degree() > 1u;
  std::string out;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    FieldElement const c = coeffs_[i];
    if (c == 0u)
      continue;
    if (!out.empty())
      out += " + ";
    std::string cs = field_.to_string(c);
    bool const compound = extension && !field_.in_prime_field(c) && cs.find('+') != std::string::npos;
    if (compound)
      cs = "(" + cs + ")";
    if (i == 0u) {
      out += cs;
      continue;
    }
    if (c != 1u)
      out += cs + "*";
    out += var;
    if (i > 1u)
      out += "^" + std::to_string(i);
  }
  return out;
}

Poly Poly::operator-() const
{
  std::vector<FieldElement> r(coeffs_.size());
  for (std::size_t i = 0; i < r.size(); ++i)
    r[i] = field_.neg(coeffs_[i]);
  return Poly(field_, std::move(r));
}

Poly operator+(Poly const &a, Poly const &b)
{
  require_same_field(a, b);
  auto const &f = a.field();
  std::vector<FieldElement> r(std::max(a.coeffs().size(), b.coeffs().size()), 0u);
  for (std::size_t i = 0; i < r.size(); ++i)
    r[i] = f.add(a.coeff(static_cast<unsigned>(i)), b.coeff(static_cast<unsigned>(i)));
  return Poly(f, std::move(r));
}

Poly operator-(Poly const &a, Poly const &b)
{
  return a + (-b);
}

Poly operator*(Poly const &a, Poly const &b)
{
  require_same_field(a, b);
  auto const &f = a.field();
  if (a.is_zero() || b.is_zero())
    return Poly(f);
  std::vector<FieldElement> r(a.coeffs().size() + b.coeffs().size() - 1u, 0u);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i)
    for (std::size_t j = 0; j < b.coeffs().size(); ++j)
      r[i + j] = f.add(r[i + j], f.mul(a.coeffs()[i], b.coeffs()[j]));
  return Poly(f, std::move(r));
}

Poly operator*(FieldElement c, Poly const &a)
{
  std::vector<FieldElement> r(a.coeffs().size());
  for (std::size_t i = 0; i < r.size(); ++i)
    r[i] = a.field().mul(c, a.coeffs()[i]);
  return Poly(a.field(), std::move(r));
}

std::pair<Poly, Poly> divmod(Poly const &a, Poly const &b)
{
  require_same_field(a, b);
  if (b.is_zero())
    throw std::domain_error("polynomial division by zero");
  auto const &f = a.field();
  std::vector<FieldElement> rem = a.coeffs();
  int const db = b.degree();
  if (a.degree() < db)
    return {Poly(f), a};

  std::vector<FieldElement> quot(static_cast<std::size_t>(a.degree() - db + 1), 0u);
  FieldElement const inv_lead = f.inv(b.leading());
  for (int i = a.degree(); i >= db; --i) {
    FieldElement const c = f.mul(rem[static_cast<std::size_t>(i)], inv_lead);
    if (c == 0u)
      continue;
    quot[static_cast<std::size_t>(i - db)] = c;
    for (int j = 0; j <= db; ++j) {
      auto &slot = rem[static_cast<std::size_t>(i - db + j)];
      slot = f.sub(slot, f.mul(c, b.coeffs()[static_cast<std::size_t>(j)]));
    }
  }
  return {Poly(f, std::move(quot)), Poly(f, std::move(rem))};
}

Poly gcd(Poly const &a, Poly const &b)
{
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

Poly pow(Poly const &a, unsigned n)
{
  Poly result = Poly::constant(a.field(), 1u);
  Poly base = a;
  for (; n; n >>= 1u) {
    if (n & 1u)
      result = result * base;
    base = base * base;
  }
  return result;
}

std::vector<Root> roots(Poly const &f)
{
  if (f.is_zero())
    throw std::domain_error("roots of the zero polynomial");
  std::vector<Root> result;
  Poly rest = f;
  for (FieldElement a = 0; a < f.field().order() && rest.degree() > 0; ++a) {
    if (rest(a) != 0u)
      continue;
    unsigned const m = rest.multiplicity(a);
    Poly const linear(f.field(), {f.field().neg(a), 1u});
    rest = divmod(rest, pow(linear, m)).first;
    result.push_back({a, m});
  }
  return result;
}

std::vector<FieldElement> root_multiset(Poly const &f)
{
  std::vector<FieldElement> out;
  for (auto const &r : roots(f))
    out.insert(out.end(), r.multiplicity, r.value);
  return out;
}

} // namespace tamecover

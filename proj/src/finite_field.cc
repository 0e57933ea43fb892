#include <algorithm>
#include <stdexcept>

#include "tamecover/admissibility.h"
#include "tamecover/finite_field.h"

namespace tamecover
{

namespace
{

// Dense polynomials over F_p, low coefficient first, used before the field exists.
using PrimePoly = std::vector<unsigned>;

void trim(PrimePoly &a)
{
  while (!a.empty() && a.back() == 0u)
    a.pop_back();
}

unsigned inverse_mod(unsigned a, unsigned p)
{
  std::uint64_t result = 1, base = a % p;
  for (unsigned e = p - 2u; e; e >>= 1u) {
    if (e & 1u)
      result = result * base % p;
    base = base * base % p;
  }
  return static_cast<unsigned>(result);
}

unsigned mulmod(unsigned a, unsigned b, unsigned p)
{
  return static_cast<unsigned>(static_cast<std::uint64_t>(a) * b % p);
}

PrimePoly mul_mod(PrimePoly const &a, PrimePoly const &b, PrimePoly const &m, unsigned p)
{
  PrimePoly prod(a.size() + b.size(), 0u);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      prod[i + j] = (prod[i + j] + mulmod(a[i], b[j], p)) % p;
  trim(prod);

  std::size_t const k = m.size() - 1u;  // m monic
  while (prod.size() > k) {
    unsigned const lead = prod.back();
    std::size_t const shift = prod.size() - 1u - k;
    for (std::size_t i = 0; i <= k; ++i)
      prod[shift + i] = (prod[shift + i] + p - mulmod(lead, m[i], p)) % p;
    trim(prod);
  }
  return prod;
}

PrimePoly poly_mod(PrimePoly a, PrimePoly const &b, unsigned p)
{
  trim(a);
  unsigned const inv_lead = inverse_mod(b.back(), p);
  while (a.size() >= b.size()) {
    unsigned const factor = mulmod(a.back(), inv_lead, p);
    std::size_t const shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i)
      a[shift + i] = (a[shift + i] + p - mulmod(factor, b[i], p)) % p;
    trim(a);
  }
  return a;
}

PrimePoly poly_gcd(PrimePoly a, PrimePoly b, unsigned p)
{
  trim(a);
  trim(b);
  while (!b.empty()) {
    PrimePoly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

bool is_irreducible(PrimePoly const &f, unsigned p)
{
  std::size_t const k = f.size() - 1u;
  if (k <= 1u)
    return k == 1u;
  // x^{p^i} mod f for i = 1..k/2; any common factor with x^{p^i} − x has degree dividing i.
  PrimePoly power{0u, 1u};
  for (std::size_t i = 1; i <= k / 2u; ++i) {
    PrimePoly raised{1u};
    PrimePoly base = power;
    for (unsigned e = p; e; e >>= 1u) {
      if (e & 1u)
        raised = mul_mod(raised, base, f, p);
      base = mul_mod(base, base, f, p);
    }
    power = raised;

    PrimePoly diff = power;
    diff.resize(std::max<std::size_t>(diff.size(), 2u), 0u);
    diff[1] = (diff[1] + p - 1u) % p;
    trim(diff);
    if (poly_gcd(f, diff, p).size() > 1u)
      return false;
  }
  return true;
}

} // anonymous namespace

std::vector<unsigned> smallest_irreducible(unsigned p, unsigned k)
{
  std::uint64_t count = 1;
  for (unsigned i = 0; i < k; ++i)
    count *= p;
  for (std::uint64_t n = 0; n < count; ++n) {
    PrimePoly f(k + 1u, 0u);
    std::uint64_t rest = n;
    for (unsigned i = 0; i < k; ++i, rest /= p)
      f[i] = static_cast<unsigned>(rest % p);
    f[k] = 1u;
    if (is_irreducible(f, p))
      return f;
  }
  throw std::logic_error("no irreducible polynomial found");
}

struct FiniteField::Impl
{
  unsigned p = 0, k = 0, q = 0;
  PrimePoly modulus;
  FieldElement primitive = 0;
  std::vector<FieldElement> exp;       // exp[i] = g^i, i < 2(q−1)
  std::vector<unsigned> log;           // log[exp[i]] = i

  PrimePoly decode(FieldElement a) const
  {
    PrimePoly digits(k, 0u);
    for (unsigned i = 0; i < k; ++i, a /= p)
      digits[i] = a % p;
    trim(digits);
    return digits;
  }

  FieldElement encode(PrimePoly const &digits) const
  {
    FieldElement a = 0;
    for (std::size_t i = digits.size(); i-- > 0;)
      a = a * p + digits[i];
    return a;
  }

  FieldElement slow_mul(FieldElement a, FieldElement b) const
  {
    return encode(mul_mod(decode(a), decode(b), modulus, p));
  }
};

FiniteField::FiniteField(unsigned p, unsigned k)
{
  if (!is_prime(p))
    throw std::invalid_argument(std::to_string(p) + " is not prime");
  if (k == 0u)
    throw std::invalid_argument("extension degree must be positive");

  std::uint64_t q = 1;
  for (unsigned i = 0; i < k; ++i) {
    q *= p;
    if (q > max_order)
      throw std::invalid_argument("field order exceeds " + std::to_string(max_order));
  }

  auto impl = std::make_shared<Impl>();
  impl->p = p;
  impl->k = k;
  impl->q = static_cast<unsigned>(q);
  impl->modulus = smallest_irreducible(p, k);

  for (FieldElement g = 1; g < impl->q; ++g) {
    unsigned order = 1;
    for (FieldElement x = g; x != 1u; x = impl->slow_mul(x, g))
      ++order;
    if (order == impl->q - 1u) {
      impl->primitive = g;
      break;
    }
  }

  impl->exp.resize(2u * (impl->q - 1u));
  impl->log.assign(impl->q, 0u);
  FieldElement x = 1;
  for (unsigned i = 0; i < impl->q - 1u; ++i) {
    impl->exp[i] = impl->exp[i + impl->q - 1u] = x;
    impl->log[x] = i;
    x = impl->slow_mul(x, impl->primitive);
  }
  impl_ = std::move(impl);
}

unsigned FiniteField::characteristic() const
{
  return impl_->p;
}

unsigned FiniteField::extension_degree() const
{
  return impl_->k;
}

unsigned FiniteField::order() const
{
  return impl_->q;
}

std::vector<unsigned> const &FiniteField::modulus() const
{
  return impl_->modulus;
}

FieldElement FiniteField::generator() const
{
  if (impl_->k < 2u)
    throw std::invalid_argument("the prime field has no generator u");
  return impl_->p;
}

FieldElement FiniteField::primitive_element() const
{
  return impl_->primitive;
}

FieldElement FiniteField::from_int(long long n) const
{
  long long const p = impl_->p;
  return static_cast<FieldElement>(((n % p) + p) % p);
}

FieldElement FiniteField::add(FieldElement a, FieldElement b) const
{
  unsigned const p = impl_->p;
  FieldElement result = 0, scale = 1;
  for (unsigned i = 0; i < impl_->k; ++i, a /= p, b /= p, scale *= p)
    result += (a % p + b % p) % p * scale;
  return result;
}

FieldElement FiniteField::neg(FieldElement a) const
{
  unsigned const p = impl_->p;
  FieldElement result = 0, scale = 1;
  for (unsigned i = 0; i < impl_->k; ++i, a /= p, scale *= p)
    result += (p - a % p) % p * scale;
  return result;
}

FieldElement FiniteField::sub(FieldElement a, FieldElement b) const
{
  return add(a, neg(b));
}

FieldElement FiniteField::mul(FieldElement a, FieldElement b) const
{
  if (a == 0u || b == 0u)
    return 0u;
  return impl_->exp[impl_->log[a] + impl_->log[b]];
}

FieldElement FiniteField::inv(FieldElement a) const
{
  if (a == 0u)
    throw std::domain_error("division by zero in finite field");
  return impl_->exp[(impl_->q - 1u - impl_->log[a]) % (impl_->q - 1u)];
}

FieldElement FiniteField::div(FieldElement a, FieldElement b) const
{
  return mul(a, inv(b));
}

FieldElement FiniteField::pow(FieldElement a, std::uint64_t n) const
{
  if (n == 0u)
    return 1u;
  if (a == 0u)
    return 0u;
  return impl_->exp[(impl_->log[a] * (n % (impl_->q - 1u))) % (impl_->q - 1u)];
}

std::string FiniteField::to_string(FieldElement a) const
{
  if (impl_->k == 1u || a < impl_->p)
    return std::to_string(a);

  auto const digits = impl_->decode(a);
  std::string out;
  for (std::size_t i = digits.size(); i-- > 0;) {
    unsigned const c = digits[i];
    if (c == 0u)
      continue;
    if (!out.empty())
      out += "+";
    if (i == 0u) {
      out += std::to_string(c);
      continue;
    }
    if (c != 1u)
      out += std::to_string(c);
    out += "u";
    if (i > 1u)
      out += "^" + std::to_string(i);
  }
  return out;
}

bool operator==(FiniteField const &a, FiniteField const &b)
{
  return a.impl_ == b.impl_ || (a.impl_->p == b.impl_->p && a.impl_->k == b.impl_->k);
}

} // namespace tamecover

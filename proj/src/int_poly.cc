#include <cctype>
#include <stdexcept>

#include "tamecover/int_poly.h"
#include "tamecover/perm.h"

namespace tamecover
{

namespace
{

long long checked_add(long long a, long long b)
{
  long long r;
  if (__builtin_add_overflow(a, b, &r))
    throw std::overflow_error("integer polynomial coefficient overflow");
  return r;
}

long long checked_mul(long long a, long long b)
{
  long long r;
  if (__builtin_mul_overflow(a, b, &r))
    throw std::overflow_error("integer polynomial coefficient overflow");
  return r;
}

class Parser
{
public:
  explicit Parser(std::string_view text)
    : text_(text)
  {
  }

  IntPoly run()
  {
    skip_space();
    if (pos_ == text_.size())
      fail("empty expression");
    IntPoly result = expr();
    skip_space();
    if (pos_ != text_.size())
      fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return result;
  }

private:
  [[noreturn]] void fail(std::string const &msg) const
  {
    throw ParseError("polynomial: " + msg + " at position " + std::to_string(pos_));
  }

  void skip_space()
  {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool peek(char c)
  {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool starts_factor()
  {
    skip_space();
    if (pos_ >= text_.size())
      return false;
    char const c = text_[pos_];
    return c == '(' || c == '_' || std::isalnum(static_cast<unsigned char>(c));
  }

  IntPoly expr()
  {
    IntPoly acc = term();
    for (;;) {
      if (peek('+')) {
        ++pos_;
        acc = acc + term();
      } else if (peek('-')) {
        ++pos_;
        acc = acc - term();
      } else {
        return acc;
      }
    }
  }

  IntPoly term()
  {
    IntPoly acc = unary();
    for (;;) {
      if (peek('*')) {
        ++pos_;
        acc = acc * unary();
      } else if (starts_factor()) {
        acc = acc * power();
      } else {
        return acc;
      }
    }
  }

  IntPoly unary()
  {
    if (peek('-')) {
      ++pos_;
      return -unary();
    }
    if (peek('+')) {
      ++pos_;
      return unary();
    }
    return power();
  }

  IntPoly power()
  {
    IntPoly base = primary();
    if (peek('^')) {
      ++pos_;
      skip_space();
      std::size_t const start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
        ++pos_;
      if (start == pos_ || pos_ - start > 4u)
        fail("bad exponent");
      return pow(base, static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start)))));
    }
    return base;
  }

  IntPoly primary()
  {
    skip_space();
    if (pos_ >= text_.size())
      fail("unexpected end");
    char const c = text_[pos_];
    if (c == '(') {
      ++pos_;
      IntPoly inner = expr();
      if (!peek(')'))
        fail("missing ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      long long value = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        value = checked_add(checked_mul(value, 10), text_[pos_] - '0');
        ++pos_;
      }
      return IntPoly::constant(value);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t const start = pos_;
      while (pos_ < text_.size()
             && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      return IntPoly::variable(std::string(text_.substr(start, pos_ - start)));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

} // anonymous namespace

IntPoly IntPoly::constant(long long c)
{
  IntPoly r;
  r.add_term({}, c);
  return r;
}

IntPoly IntPoly::variable(std::string name)
{
  IntPoly r;
  r.add_term({{std::move(name), 1u}}, 1);
  return r;
}

IntPoly IntPoly::parse(std::string_view text)
{
  return Parser(text).run();
}

void IntPoly::add_term(Monomial const &m, long long c)
{
  if (c == 0)
    return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second = checked_add(it->second, c);
    if (it->second == 0)
      terms_.erase(it);
  }
}

std::set<std::string> IntPoly::variables() const
{
  std::set<std::string> vars;
  for (auto const &[m, c] : terms_)
    for (auto const &[v, e] : m)
      vars.insert(v);
  return vars;
}

IntPoly IntPoly::reduce_mod(unsigned p) const
{
  IntPoly r;
  long long const q = p;
  for (auto const &[m, c] : terms_)
    r.add_term(m, ((c % q) + q) % q);
  return r;
}

std::string IntPoly::to_string() const
{
  if (terms_.empty())
    return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    auto const &[m, c] = *it;
    long long const mag = c < 0 ? -c : c;
    if (out.empty())
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";

    std::string factors;
    for (auto const &[v, e] : m) {
      if (!factors.empty())
        factors += "*";
      factors += v;
      if (e > 1u)
        factors += "^" + std::to_string(e);
    }
    if (factors.empty())
      out += std::to_string(mag);
    else if (mag == 1)
      out += factors;
    else
      out += std::to_string(mag) + "*" + factors;
  }
  return out;
}

IntPoly IntPoly::operator-() const
{
  IntPoly r;
  for (auto const &[m, c] : terms_)
    r.add_term(m, checked_mul(c, -1));
  return r;
}

IntPoly operator+(IntPoly const &a, IntPoly const &b)
{
  IntPoly r = a;
  for (auto const &[m, c] : b.terms_)
    r.add_term(m, c);
  return r;
}

IntPoly operator-(IntPoly const &a, IntPoly const &b)
{
  return a + (-b);
}

IntPoly operator*(IntPoly const &a, IntPoly const &b)
{
  IntPoly r;
  for (auto const &[ma, ca] : a.terms_) {
    for (auto const &[mb, cb] : b.terms_) {
      IntPoly::Monomial m = ma;
      for (auto const &[v, e] : mb)
        m[v] += e;
      r.add_term(m, checked_mul(ca, cb));
    }
  }
  return r;
}

IntPoly pow(IntPoly const &a, unsigned n)
{
  IntPoly result = IntPoly::constant(1);
  for (unsigned i = 0; i < n; ++i)
    result = result * a;
  return result;
}

Poly reduce_mod_p(IntPoly const &f, FiniteField const &field, std::string_view var,
                  std::map<std::string, FieldElement, std::less<>> const &values)
{
  Poly result(field);
  for (auto const &[m, c] : f.terms()) {
    FieldElement coeff = field.from_int(c);
    unsigned degree = 0;
    for (auto const &[v, e] : m) {
      if (v == var) {
        degree = e;
        continue;
      }
      auto const it = values.find(v);
      if (it == values.end())
        throw std::invalid_argument("no value for variable " + v);
      coeff = field.mul(coeff, field.pow(it->second, e));
    }
    result = result + Poly::monomial(field, coeff, degree);
  }
  return result;
}

FieldElement parse_field_element(FiniteField const &field, std::string_view text)
{
  IntPoly const f = IntPoly::parse(text);
  for (auto const &v : f.variables()) {
    if (v != "u")
      throw ParseError("field element may only use u, not " + v);
  }
  if (!f.variables().empty() && field.extension_degree() < 2u)
    throw ParseError("u is not available in a prime field");

  std::map<std::string, FieldElement, std::less<>> values;
  if (field.extension_degree() >= 2u)
    values["u"] = field.generator();
  return reduce_mod_p(f, field, "", values)(0u);
}

} // namespace tamecover

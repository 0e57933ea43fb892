#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "tamecover/perm.h"

namespace tamecover
{

Perm::Perm(unsigned degree) : images_(degree)
{
  std::iota(images_.begin(), images_.end(), 0u);
}

Perm Perm::from_images(std::vector<unsigned> const &images_one_based)
{
  unsigned const n = static_cast<unsigned>(images_one_based.size());
  std::vector<bool> seen(n, false);

  Perm result;
  result.images_.reserve(n);

  for (unsigned y : images_one_based) {
    if (y < 1u || y > n || seen[y - 1u])
      throw std::invalid_argument("image table is not a bijection");
    seen[y - 1u] = true;
    result.images_.push_back(y - 1u);
  }
  return result;
}

Perm::Perm(unsigned degree, std::vector<std::vector<unsigned>> const &cycles)
  : Perm(degree)
{
  std::vector<bool> used(degree, false);

  for (auto const &cycle : cycles) {
    for (unsigned x : cycle) {
      if (x < 1u || x > degree)
        throw ParseError("entry " + std::to_string(x) + " out of range 1.."
                         + std::to_string(degree));
      if (used[x - 1u])
        throw ParseError("repeated entry " + std::to_string(x));
      used[x - 1u] = true;
    }
    for (std::size_t i = 0; i < cycle.size(); ++i)
      images_[cycle[i] - 1u] = cycle[(i + 1) % cycle.size()] - 1u;
  }
}

bool Perm::is_identity() const
{
  for (unsigned i = 0; i < images_.size(); ++i) {
    if (images_[i] != i)
      return false;
  }
  return true;
}

Perm Perm::inverse() const
{
  Perm result(degree());
  for (unsigned i = 0; i < images_.size(); ++i)
    result.images_[images_[i]] = i;
  return result;
}

std::vector<std::vector<unsigned>> Perm::cycles() const
{
  std::vector<std::vector<unsigned>> result;
  std::vector<bool> done(images_.size(), false);

  for (unsigned start = 0; start < images_.size(); ++start) {
    if (done[start] || images_[start] == start)
      continue;

    std::vector<unsigned> cycle;
    for (unsigned x = start; !done[x]; x = images_[x]) {
      done[x] = true;
      cycle.push_back(x + 1u);
    }
    result.push_back(std::move(cycle));
  }
  return result;
}

CycleType Perm::cycle_type() const
{
  CycleType result;
  std::vector<bool> done(images_.size(), false);

  for (unsigned start = 0; start < images_.size(); ++start) {
    if (done[start])
      continue;
    unsigned len = 0;
    for (unsigned x = start; !done[x]; x = images_[x]) {
      done[x] = true;
      ++len;
    }
    result.push_back(len);
  }
  std::sort(result.begin(), result.end(), std::greater<>());
  return result;
}

std::vector<unsigned> Perm::cycle_lengths() const
{
  std::vector<unsigned> result;
  for (auto const &c : cycles())
    result.push_back(static_cast<unsigned>(c.size()));
  return result;
}

bool Perm::is_single_cycle() const
{
  return single_cycle_length() != 0u;
}

unsigned Perm::single_cycle_length() const
{
  auto const c = cycles();
  if (c.empty())
    return 1u;
  if (c.size() == 1u)
    return static_cast<unsigned>(c.front().size());
  return 0u;
}

bool Perm::is_even() const
{
  unsigned transpositions = 0;
  for (auto const &c : cycles())
    transpositions += static_cast<unsigned>(c.size()) - 1u;
  return transpositions % 2u == 0u;
}

std::uint64_t Perm::order() const
{
  std::uint64_t result = 1;
  for (unsigned len : cycle_type())
    result = std::lcm(result, static_cast<std::uint64_t>(len));
  return result;
}

std::string Perm::to_string() const
{
  auto const c = cycles();
  if (c.empty())
    return "(1)";

  std::ostringstream os;
  for (auto const &cycle : c) {
    os << '(';
    for (std::size_t i = 0; i < cycle.size(); ++i)
      os << (i ? " " : "") << cycle[i];
    os << ')';
  }
  return os.str();
}

namespace
{

class CycleLexer
{
public:
  explicit CycleLexer(std::string_view text) : text_(text) {}

  void skip_space()
  {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool at_end()
  {
    skip_space();
    return pos_ == text_.size();
  }

  char peek()
  {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  void expect(char c)
  {
    if (peek() != c)
      fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  unsigned integer()
  {
    skip_space();
    std::size_t const begin = pos_;
    unsigned long value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10u + static_cast<unsigned long>(text_[pos_] - '0');
      if (value > 1000000u)
        fail("integer too large");
      ++pos_;
    }
    if (pos_ == begin)
      fail("expected integer");
    return static_cast<unsigned>(value);
  }

  // Consumes one or more separators (',' or whitespace); returns false if none.
  bool separator()
  {
    bool any = false;
    while (pos_ < text_.size()
           && (text_[pos_] == ',' || std::isspace(static_cast<unsigned char>(text_[pos_])))) {
      ++pos_;
      any = true;
    }
    return any;
  }

  [[noreturn]] void fail(std::string const &what) const
  {
    throw ParseError("malformed cycle notation at offset " + std::to_string(pos_)
                     + ": " + what);
  }

private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

} // anonymous namespace

Perm parse_cycles(std::string_view text, unsigned degree)
{
  CycleLexer lex(text);
  std::vector<std::vector<unsigned>> groups;

  if (lex.at_end())
    lex.fail("empty input");

  while (!lex.at_end()) {
    lex.expect('(');
    std::vector<unsigned> group{lex.integer()};
    for (;;) {
      bool const sep = lex.separator();
      if (lex.peek() == ')')
        break;
      if (!sep)
        lex.fail("expected separator");
      group.push_back(lex.integer());
    }
    lex.expect(')');

    std::vector<unsigned> sorted = group;
    std::sort(sorted.begin(), sorted.end());
    auto dup = std::adjacent_find(sorted.begin(), sorted.end());
    if (dup != sorted.end())
      throw ParseError("repeated entry " + std::to_string(*dup) + " within a cycle");

    groups.push_back(std::move(group));
  }

  return Perm(degree, groups);
}

Perm compose(Perm const &a, Perm const &b)
{
  if (a.degree() != b.degree())
    throw std::invalid_argument("degree mismatch in compose");

  Perm result;
  result.images_.resize(a.images_.size());
  for (unsigned x = 0; x < a.images_.size(); ++x)
    result.images_[x] = a.images_[b.images_[x]];
  return result;
}

Perm product(std::vector<Perm> const &perms, unsigned degree)
{
  Perm result(degree);
  for (auto it = perms.rbegin(); it != perms.rend(); ++it)
    result = compose(*it, result);
  return result;
}

Perm conjugate(Perm const &g, Perm const &h)
{
  return compose(h.inverse(), compose(g, h));
}

} // namespace tamecover

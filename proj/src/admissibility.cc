#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "tamecover/admissibility.h"

namespace tamecover
{

namespace
{

std::uint64_t checked_power(unsigned p, unsigned m)
{
  std::uint64_t result = 1;
  for (unsigned i = 0; i < m; ++i) {
    if (result > (std::uint64_t{1} << 40))
      throw std::overflow_error("p^m too large");
    result *= p;
  }
  return result;
}

void require_prime(unsigned p)
{
  if (!is_prime(p))
    throw ProfileError(ProfileErrorKind::not_prime, std::to_string(p) + " is not prime");
}

void require_basic(RamProfile const &profile)
{
  require_prime(profile.p);
  if (profile.point_count() < 3u)
    throw ProfileError(ProfileErrorKind::too_few_points, "need at least 3 points");
  for (unsigned e : profile.indices) {
    if (e == 0u)
      throw ProfileError(ProfileErrorKind::zero_index, "ramification index 0");
  }
  if (!profile.has_genus_zero_parity())
    throw ProfileError(ProfileErrorKind::parity, "sum of (e_i - 1) is odd");
}

void require_tame(RamProfile const &profile)
{
  for (unsigned e : profile.indices) {
    if (e % profile.p == 0u)
      throw ProfileError(ProfileErrorKind::wild_index,
                         "index " + std::to_string(e) + " divisible by p="
                           + std::to_string(profile.p));
  }
}

void require_three_point(RamProfile const &profile)
{
  require_prime(profile.p);
  if (profile.point_count() != 3u)
    throw ProfileError(ProfileErrorKind::too_few_points,
                       "three-point criterion needs exactly 3 indices");
  require_basic(profile);
  require_tame(profile);

  unsigned const d = profile.degree();
  for (unsigned e : profile.indices) {
    if (e > d)
      throw ProfileError(ProfileErrorKind::triangle,
                         "index " + std::to_string(e) + " exceeds degree " + std::to_string(d));
  }
}

bool triple_ok(unsigned a, unsigned b, unsigned c, unsigned p)
{
  unsigned const sum = a + b + c;
  return a <= b + c && b <= a + c && c <= a + b && sum % 2u == 1u && sum < 2u * p;
}

class ChainSearch
{
public:
  ChainSearch(std::vector<unsigned> const &e, unsigned p) : e_(e), p_(p)
  {
    primed_.assign(e.size() - 1u, 0u);
    primed_.front() = e.front();
    primed_.back() = e.back();
    best_prefix_ = {e.front()};
  }

  bool run() { return extend(1u); }

  std::vector<unsigned> const &primed() const { return primed_; }
  std::vector<unsigned> const &best_prefix() const { return best_prefix_; }

private:
  // primed_[0..m-1] hold e'_1..e'_m; choose e'_{m+1} for the triple (e'_m, e_{m+1}, e'_{m+1}).
  bool extend(unsigned m)
  {
    unsigned const r = static_cast<unsigned>(e_.size());
    if (m == r - 1u)
      return true;

    unsigned const prev = primed_[m - 1u];
    if (dead_.count({m, prev}))
      return false;

    unsigned const middle = e_[m];
    bool const last = (m + 1u == r - 1u);
    unsigned const lo = last ? e_.back() : 1u;
    unsigned const hi = last ? e_.back() : 2u * p_ - 1u;

    for (unsigned c = lo; c <= hi; ++c) {
      if (c % p_ == 0u || !triple_ok(prev, middle, c, p_))
        continue;
      primed_[m] = c;
      if (m + 1u > best_prefix_.size())
        best_prefix_.assign(primed_.begin(), primed_.begin() + m + 1u);
      if (extend(m + 1u))
        return true;
    }
    if (!last)
      primed_[m] = 0u;
    dead_.insert({m, prev});
    return false;
  }

  std::vector<unsigned> const &e_;
  unsigned p_;
  std::vector<unsigned> primed_;
  std::vector<unsigned> best_prefix_;
  std::set<std::pair<unsigned, unsigned>> dead_;
};

} // anonymous namespace

std::string to_string(ProfileErrorKind kind)
{
  switch (kind) {
  case ProfileErrorKind::not_prime:
    return "not_prime";
  case ProfileErrorKind::too_few_points:
    return "too_few_points";
  case ProfileErrorKind::zero_index:
    return "zero_index";
  case ProfileErrorKind::wild_index:
    return "wild_index";
  case ProfileErrorKind::parity:
    return "parity";
  case ProfileErrorKind::triangle:
    return "triangle";
  case ProfileErrorKind::index_not_below_p:
    return "index_not_below_p";
  }
  return "unknown";
}

bool is_prime(unsigned n)
{
  if (n < 2u)
    return false;
  for (unsigned k = 2; k * k <= n; ++k) {
    if (n % k == 0u)
      return false;
  }
  return true;
}

unsigned RamProfile::ramification_sum() const
{
  unsigned sum = 0;
  for (unsigned e : indices)
    sum += e > 0u ? e - 1u : 0u;
  return sum;
}

unsigned RamProfile::degree() const
{
  if (!has_genus_zero_parity())
    throw ProfileError(ProfileErrorKind::parity, "sum of (e_i - 1) is odd");
  return ramification_sum() / 2u + 1u;
}

bool RamProfile::is_tame() const
{
  return std::none_of(indices.begin(), indices.end(),
                      [this](unsigned e) { return p != 0u && e % p == 0u; });
}

bool RamProfile::all_below_p() const
{
  return std::all_of(indices.begin(), indices.end(), [this](unsigned e) { return e < p; });
}

std::string to_string(RamProfile const &profile)
{
  std::ostringstream os;
  os << "p=" << profile.p << " (";
  for (std::size_t i = 0; i < profile.indices.size(); ++i)
    os << (i ? "," : "") << profile.indices[i];
  os << ')';
  return os.str();
}

FloorCeilData floor_ceil(unsigned e, unsigned p, unsigned m)
{
  require_prime(p);
  if (e % p == 0u)
    throw ProfileError(ProfileErrorKind::wild_index,
                       "floor_ceil: " + std::to_string(e) + " divisible by " + std::to_string(p));
  if (m == 0u)
    throw std::invalid_argument("floor_ceil: m must be positive");

  FloorCeilData fc;
  fc.m = m;
  fc.p_power = checked_power(p, m);
  fc.down = static_cast<unsigned>(e / fc.p_power);
  fc.up = static_cast<unsigned>((e + fc.p_power - 1u) / fc.p_power);
  fc.defect_up = fc.p_power * fc.up - e;
  fc.defect_down = static_cast<unsigned>(e - fc.p_power * fc.down);
  return fc;
}

ThreePointVerdict admissible_3pt(RamProfile const &profile)
{
  require_three_point(profile);

  auto const &e = profile.indices;
  unsigned const d = profile.degree();

  for (unsigned m = 1;; ++m) {
    std::uint64_t const pm = checked_power(profile.p, m);
    if (pm > d)
      break;

    FloorCeilData fc[3];
    for (unsigned i = 0; i < 3u; ++i)
      fc[i] = floor_ceil(e[i], profile.p, m);

    for (unsigned mask = 0; mask < 8u; ++mask) {
      bool eligible = true;
      std::uint64_t parity_sum = 0, defect_sum = 0;
      for (unsigned i = 0; i < 3u; ++i) {
        bool const in_s = mask & (1u << i);
        if (in_s && e[i] <= pm)
          eligible = false;
        parity_sum += in_s ? fc[i].down : fc[i].up;
        defect_sum += in_s ? fc[i].defect_down : fc[i].defect_up;
      }
      if (!eligible || parity_sum % 2u == 0u || defect_sum >= pm)
        continue;

      InseparableWitness w;
      w.m = m;
      w.p_power = pm;
      unsigned ram = 0;
      for (unsigned i = 0; i < 3u; ++i) {
        bool const in_s = mask & (1u << i);
        unsigned const q = in_s ? fc[i].down : fc[i].up;
        w.quotient_indices.push_back(q);
        ram += q - 1u;
        if (in_s) {
          w.subset.push_back(i + 1u);
          w.base_points.push_back(fc[i].defect_down);
        }
      }
      w.quotient_degree = ram / 2u + 1u;
      return {false, std::move(w)};
    }
  }
  return {true, std::nullopt};
}

bool admissible_3pt_reformulated(RamProfile const &profile)
{
  require_three_point(profile);

  auto const &e = profile.indices;
  long long const d = profile.degree();

  long long pm = profile.p;
  for (; pm <= d; pm *= profile.p) {
    for (unsigned mask = 0; mask < 8u; ++mask) {
      long long parity = 0, twice_degree_minus_two = 0, base = 0;
      bool eligible = true;
      for (unsigned i = 0; i < 3u; ++i) {
        long long const ei = e[i];
        if (mask & (1u << i)) {
          if (ei <= pm)
            eligible = false;
          long long const q = ei / pm;
          parity += q;
          twice_degree_minus_two += q - 1;
          base += ei - pm * q;
        } else {
          long long const q = (ei + pm - 1) / pm;
          parity += q;
          twice_degree_minus_two += q - 1;
        }
      }
      if (!eligible || parity % 2 == 0)
        continue;
      long long const quotient_degree = twice_degree_minus_two / 2 + 1;
      if (!(d < pm * quotient_degree + base))
        return false;
    }
  }
  return true;
}

ChainVerdict admissible_chain(RamProfile const &profile)
{
  require_basic(profile);
  for (unsigned e : profile.indices) {
    if (e >= profile.p)
      throw ProfileError(ProfileErrorKind::index_not_below_p,
                         "chain criterion needs every index below p; got "
                           + std::to_string(e));
  }

  ChainSearch search(profile.indices, profile.p);
  ChainVerdict verdict;
  verdict.admissible = search.run();
  if (verdict.admissible) {
    verdict.witness = ChainWitness{search.primed()};
    verdict.longest_prefix = search.primed();
  } else {
    verdict.longest_prefix = search.best_prefix();
  }
  return verdict;
}

bool satisfies_invariants(InseparableWitness const &w, RamProfile const &profile)
{
  if (profile.point_count() != 3u || w.m == 0u || w.quotient_indices.size() != 3u)
    return false;
  if (w.p_power != checked_power(profile.p, w.m))
    return false;
  if (!std::is_sorted(w.subset.begin(), w.subset.end())
      || w.base_points.size() != w.subset.size())
    return false;

  unsigned const d = profile.degree();
  if (w.p_power > d)
    return false;

  unsigned parity = 0, ram = 0;
  std::uint64_t base_total = 0;
  std::size_t next_in_s = 0;
  for (unsigned i = 0; i < 3u; ++i) {
    unsigned const e = profile.indices[i];
    auto const fc = floor_ceil(e, profile.p, w.m);
    bool const in_s = next_in_s < w.subset.size() && w.subset[next_in_s] == i + 1u;
    unsigned const expected = in_s ? fc.down : fc.up;
    if (w.quotient_indices[i] != expected || expected == 0u)
      return false;
    if (in_s) {
      if (e <= w.p_power || w.base_points[next_in_s] != fc.defect_down)
        return false;
      base_total += fc.defect_down;
      ++next_in_s;
    }
    parity += expected;
    ram += expected - 1u;
  }
  if (next_in_s != w.subset.size())
    return false;

  return parity % 2u == 1u && 2u * w.quotient_degree - 2u == ram
         && d >= w.p_power * w.quotient_degree + base_total;
}

bool satisfies_invariants(ChainWitness const &w, RamProfile const &profile)
{
  auto const &e = profile.indices;
  unsigned const r = profile.point_count();
  if (r < 3u || w.primed.size() != r - 1u)
    return false;
  if (w.primed.front() != e.front() || w.primed.back() != e.back())
    return false;

  for (unsigned x : w.primed) {
    if (x == 0u || x % profile.p == 0u)
      return false;
  }
  for (unsigned m = 1; m < r - 1u; ++m) {
    if (!triple_ok(w.primed[m - 1u], e[m], w.primed[m], profile.p))
      return false;
  }
  return true;
}

std::string to_string(Admissibility a)
{
  switch (a) {
  case Admissibility::admissible:
    return "admissible";
  case Admissibility::not_admissible:
    return "not_admissible";
  case Admissibility::out_of_scope:
    return "out_of_scope";
  case Admissibility::wild:
    return "wild";
  }
  return "unknown";
}

std::string to_string(Criterion c)
{
  switch (c) {
  case Criterion::three_point:
    return "three_point";
  case Criterion::chain:
    return "chain";
  case Criterion::none:
    break;
  }
  return "none";
}

AdmissibilityVerdict admissible(RamProfile const &profile)
{
  require_basic(profile);

  AdmissibilityVerdict verdict;
  if (!profile.is_tame()) {
    verdict.status = Admissibility::wild;
    return verdict;
  }

  if (profile.point_count() == 3u) {
    auto const v = admissible_3pt(profile);
    verdict.criterion = Criterion::three_point;
    verdict.status = v.admissible ? Admissibility::admissible : Admissibility::not_admissible;
    verdict.inseparable = v.witness;
    return verdict;
  }

  if (!profile.all_below_p()) {
    verdict.status = Admissibility::out_of_scope;
    return verdict;
  }

  auto v = admissible_chain(profile);
  verdict.criterion = Criterion::chain;
  verdict.status = v.admissible ? Admissibility::admissible : Admissibility::not_admissible;
  verdict.chain = std::move(v.witness);
  verdict.chain_prefix = std::move(v.longest_prefix);
  return verdict;
}

} // namespace tamecover

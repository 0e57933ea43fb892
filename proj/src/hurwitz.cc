#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_set>

#include "tamecover/errors.h"
#include "tamecover/hurwitz.h"
#include "tamecover/perm_group.h"

namespace tamecover
{

namespace
{

constexpr unsigned three_point_search_max_degree = 10u;

void require_braidable(HurwitzTuple const &t)
{
  for (auto const &g : t.perms) {
    if (g.degree() != t.degree)
      throw std::invalid_argument("tuple entry of wrong degree");
  }
}

void apply_in_place(std::vector<Perm> &perms, unsigned i, BraidDirection dir)
{
  Perm &x = perms[i];
  Perm &y = perms[i + 1u];
  if (dir == BraidDirection::forward) {
    Perm moved = conjugate(x, y);
    x = y;
    y = std::move(moved);
  } else {
    Perm moved = conjugate(y, x.inverse());
    y = x;
    x = std::move(moved);
  }
}

std::string state_key(std::vector<Perm> const &perms, std::vector<unsigned char> const &positions)
{
  std::string key;
  for (auto const &g : perms)
    for (unsigned v : g.raw_images())
      key.push_back(static_cast<char>(v));
  key.append(positions.begin(), positions.end());
  return key;
}

// Calls f for every length-k cycle of S_d (the identity when k = 1); stops when f returns true.
bool for_each_cycle(unsigned d, unsigned k, std::function<bool(Perm const &)> const &f)
{
  if (k == 1u)
    return f(Perm(d));
  if (k > d)
    return false;

  std::vector<unsigned> cycle(k);
  std::vector<bool> used(d + 1u, false);

  std::function<bool(unsigned)> fill = [&](unsigned pos) -> bool {
    if (pos == k)
      return f(Perm(d, {cycle}));
    for (unsigned x = cycle[0] + 1u; x <= d; ++x) {
      if (used[x])
        continue;
      used[x] = true;
      cycle[pos] = x;
      bool const stop = fill(pos + 1u);
      used[x] = false;
      if (stop)
        return true;
    }
    return false;
  };

  for (unsigned first = 1; first + k - 1u <= d; ++first) {
    cycle[0] = first;
    if (fill(1u))
      return true;
  }
  return false;
}

Perm standard_cycle(unsigned d, unsigned k)
{
  std::vector<unsigned> c(k);
  std::iota(c.begin(), c.end(), 1u);
  return k == 1u ? Perm(d) : Perm(d, {c});
}

// Relabels t so that `cycle` (an entry-derived cycle of t) becomes targets[0] → targets[1] → ...
HurwitzTuple relabel_cycle_to(HurwitzTuple const &t, Perm const &cycle,
                              std::vector<unsigned> const &targets)
{
  unsigned const d = t.degree;
  std::vector<unsigned> source;
  if (cycle.is_identity()) {
    source.push_back(targets.front());
  } else {
    unsigned start = 1;
    while (cycle[start] == start)
      ++start;
    for (unsigned x = start; source.empty() || x != start; x = cycle[x])
      source.push_back(x);
  }
  if (source.size() != targets.size())
    throw std::logic_error("relabel: cycle length mismatch");

  std::vector<unsigned> label(d + 1u, 0u);
  std::vector<bool> taken(d + 1u, false);
  for (std::size_t j = 0; j < source.size(); ++j) {
    label[source[j]] = targets[j];
    taken[targets[j]] = true;
  }
  unsigned next = 1;
  for (unsigned x = 1; x <= d; ++x) {
    if (label[x])
      continue;
    while (taken[next])
      ++next;
    label[x] = next;
    taken[next] = true;
  }

  HurwitzTuple out{d, {}};
  for (auto const &g : t.perms) {
    std::vector<unsigned> images(d);
    for (unsigned x = 1; x <= d; ++x)
      images[label[x] - 1u] = label[g[x]];
    out.perms.push_back(Perm::from_images(images));
  }
  return out;
}

Perm embed(Perm const &g, unsigned degree, unsigned shift)
{
  std::vector<unsigned> images(degree);
  std::iota(images.begin(), images.end(), 1u);
  for (unsigned x = 1; x <= g.degree(); ++x)
    images[x + shift - 1u] = g[x] + shift;
  return Perm::from_images(images);
}

HurwitzTuple build_chain(std::vector<unsigned> const &e, std::vector<unsigned> const &primed)
{
  std::size_t const r = e.size();
  if (r == 3u)
    return three_point_tuple(e[0], e[1], e[2]);

  unsigned const shared = primed[r - 3u];

  std::vector<unsigned> prefix_e(e.begin(), e.begin() + static_cast<long>(r) - 2);
  prefix_e.push_back(shared);
  std::vector<unsigned> prefix_primed(primed.begin(), primed.begin() + static_cast<long>(r) - 2);

  HurwitzTuple head = build_chain(prefix_e, prefix_primed);
  HurwitzTuple tail = three_point_tuple(shared, e[r - 2u], e[r - 1u]);

  unsigned const d1 = head.degree;
  unsigned const d2 = tail.degree;
  unsigned const offset = d1 - shared;

  // The prefix product of head becomes (d1-e'+1 ... d1); the first entry of tail
  // becomes (1 ... e'), which lands on the same cycle after shifting.
  std::vector<unsigned> head_targets(shared), tail_targets(shared);
  std::iota(head_targets.begin(), head_targets.end(), offset + 1u);
  std::iota(tail_targets.begin(), tail_targets.end(), 1u);

  Perm const head_prefix = head.perms.back().inverse();
  head = relabel_cycle_to(head, head_prefix, head_targets);
  tail = relabel_cycle_to(tail, tail.perms.front(), tail_targets);

  unsigned const d = d1 + d2 - shared;
  HurwitzTuple out{d, {}};
  for (std::size_t i = 0; i + 1u < head.perms.size(); ++i)
    out.perms.push_back(embed(head.perms[i], d, 0u));
  out.perms.push_back(embed(tail.perms[1], d, offset));
  out.perms.push_back(embed(tail.perms[2], d, offset));
  return out;
}

} // anonymous namespace

Perm HurwitzTuple::product() const
{
  return tamecover::product(perms, degree);
}

std::string HurwitzTuple::to_string() const
{
  bool const simple = std::all_of(perms.begin(), perms.end(),
                                  [](Perm const &g) { return g.is_single_cycle(); });
  std::string out;
  for (std::size_t i = 0; i < perms.size(); ++i) {
    if (i && !simple)
      out += ", ";
    out += perms[i].to_string();
  }
  return out;
}

HurwitzTuple make_tuple(unsigned degree, std::vector<std::string> const &cycles)
{
  HurwitzTuple t{degree, {}};
  for (auto const &c : cycles)
    t.perms.push_back(parse_cycles(c, degree));
  return t;
}

ValidationReport validate(HurwitzTuple const &t, std::optional<ExpectedShape> const &expected)
{
  ValidationReport report;
  auto fail = [&report](std::string msg) {
    report.valid = false;
    report.diagnostics.push_back(std::move(msg));
  };

  if (t.perms.empty()) {
    fail("empty tuple");
    return report;
  }
  for (std::size_t i = 0; i < t.perms.size(); ++i) {
    if (t.perms[i].degree() != t.degree) {
      fail("entry " + std::to_string(i + 1u) + " has degree "
           + std::to_string(t.perms[i].degree()) + ", expected " + std::to_string(t.degree));
      return report;
    }
  }

  if (!t.product().is_identity())
    fail("product is not trivial: " + t.product().to_string());
  if (!is_transitive(t.perms))
    fail("entries do not generate a transitive subgroup");

  if (expected) {
    if (expected->degree != t.degree)
      fail("degree " + std::to_string(t.degree) + ", expected " + std::to_string(expected->degree));
    if (expected->lengths.size() != t.perms.size()) {
      fail("tuple has " + std::to_string(t.perms.size()) + " entries, expected "
           + std::to_string(expected->lengths.size()));
    } else {
      for (std::size_t i = 0; i < t.perms.size(); ++i) {
        unsigned const len = t.perms[i].single_cycle_length();
        if (len != expected->lengths[i])
          fail("entry " + std::to_string(i + 1u) + " = " + t.perms[i].to_string()
               + " is not a single cycle of length " + std::to_string(expected->lengths[i]));
      }
    }
  }
  return report;
}

HurwitzTuple braid_apply(HurwitzTuple const &t, BraidMove move)
{
  require_braidable(t);
  if (move.position < 1u || move.position >= t.size())
    throw std::out_of_range("braid position " + std::to_string(move.position)
                            + " outside 1.." + std::to_string(t.size() - 1u));
  HurwitzTuple out = t;
  apply_in_place(out.perms, move.position - 1u, move.direction);
  return out;
}

void visit_pure_braid_orbit(HurwitzTuple const &t, OrbitOptions const &options,
                            std::function<bool(HurwitzTuple const &)> const &visit)
{
  require_braidable(t);
  unsigned const r = t.size();

  struct State
  {
    std::vector<Perm> perms;
    std::vector<unsigned char> positions;
  };

  std::vector<unsigned char> identity(r);
  std::iota(identity.begin(), identity.end(), static_cast<unsigned char>(0));

  std::unordered_set<std::string> seen;
  std::deque<State> queue;

  auto normalize = [&options, &t](std::vector<Perm> &perms) {
    if (options.up_to_conjugation)
      perms = canonical_form(HurwitzTuple{t.degree, std::move(perms)}).perms;
  };

  State start{t.perms, identity};
  normalize(start.perms);
  seen.insert(state_key(start.perms, identity));
  queue.push_back(std::move(start));

  while (!queue.empty()) {
    State state = std::move(queue.front());
    queue.pop_front();

    if (state.positions == identity && visit(HurwitzTuple{t.degree, state.perms}))
      return;

    for (unsigned i = 0; i + 1u < r; ++i) {
      for (auto dir : {BraidDirection::forward, BraidDirection::inverse}) {
        State next = state;
        apply_in_place(next.perms, i, dir);
        normalize(next.perms);
        std::swap(next.positions[i], next.positions[i + 1u]);
        if (seen.insert(state_key(next.perms, next.positions)).second) {
          if (seen.size() > options.max_states)
            throw BoundError("pure-braid orbit exceeds " + std::to_string(options.max_states)
                             + " states");
          queue.push_back(std::move(next));
        }
      }
    }
  }
}

std::vector<HurwitzTuple> pure_braid_orbit(HurwitzTuple const &t, OrbitOptions const &options)
{
  std::vector<HurwitzTuple> result;
  visit_pure_braid_orbit(t, options, [&result](HurwitzTuple const &u) {
    result.push_back(u);
    return false;
  });
  std::sort(result.begin(), result.end());
  return result;
}

HurwitzTuple canonical_form(HurwitzTuple const &t)
{
  require_braidable(t);
  unsigned const d = t.degree;
  if (!is_transitive(t.perms))
    throw NotTransitiveError("canonical_form requires a transitive tuple");

  std::optional<std::vector<unsigned>> best;
  std::vector<unsigned> label(d), order, table;

  for (unsigned start = 0; start < d; ++start) {
    std::fill(label.begin(), label.end(), d);
    order.assign(1u, start);
    label[start] = 0u;
    for (std::size_t i = 0; i < order.size(); ++i) {
      for (auto const &g : t.perms) {
        unsigned const y = g.raw_images()[order[i]];
        if (label[y] == d) {
          label[y] = static_cast<unsigned>(order.size());
          order.push_back(y);
        }
      }
    }

    table.assign(static_cast<std::size_t>(d) * t.perms.size(), 0u);
    for (std::size_t k = 0; k < t.perms.size(); ++k) {
      auto const &img = t.perms[k].raw_images();
      for (unsigned x = 0; x < d; ++x)
        table[k * d + label[x]] = label[img[x]];
    }
    if (!best || table < *best)
      best = table;
  }

  HurwitzTuple out{d, {}};
  for (std::size_t k = 0; k < t.perms.size(); ++k) {
    std::vector<unsigned> images(d);
    for (unsigned x = 0; x < d; ++x)
      images[x] = (*best)[k * d + x] + 1u;
    out.perms.push_back(Perm::from_images(images));
  }
  return out;
}

std::vector<HurwitzTuple> enumerate_classes(unsigned degree, std::vector<unsigned> const &lengths,
                                            EnumerateOptions const &options)
{
  unsigned const r = static_cast<unsigned>(lengths.size());
  if (r < 3u)
    throw std::invalid_argument("enumerate needs at least 3 points");
  if (degree > options.max_degree || r > options.max_points)
    throw BoundError("enumerate bounds exceeded (d <= " + std::to_string(options.max_degree)
                     + ", r <= " + std::to_string(options.max_points) + ")");

  unsigned ram = 0;
  for (unsigned e : lengths) {
    if (e == 0u)
      throw std::invalid_argument("cycle length 0");
    ram += e - 1u;
  }
  if (ram % 2u)
    throw ProfileError(ProfileErrorKind::parity, "sum of (e_i - 1) is odd");
  if (ram != 2u * degree - 2u)
    throw std::invalid_argument("sum of (e_i - 1) = " + std::to_string(ram) + " but 2d-2 = "
                                + std::to_string(2u * degree - 2u));
  if (*std::max_element(lengths.begin(), lengths.end()) > degree)
    return {};

  std::set<HurwitzTuple> classes;
  std::vector<Perm> chosen{standard_cycle(degree, lengths[0])};

  std::function<void(unsigned, Perm)> pick = [&](unsigned pos, Perm prefix) {
    if (pos == r - 1u) {
      Perm last = prefix.inverse();
      if (last.single_cycle_length() != lengths.back())
        return;
      chosen.push_back(std::move(last));
      if (is_transitive(chosen))
        classes.insert(canonical_form(HurwitzTuple{degree, chosen}));
      chosen.pop_back();
      return;
    }
    for_each_cycle(degree, lengths[pos], [&](Perm const &g) {
      chosen.push_back(g);
      pick(pos + 1u, compose(prefix, g));
      chosen.pop_back();
      return false;
    });
  };
  pick(1u, chosen.front());

  return {classes.begin(), classes.end()};
}

HurwitzTuple three_point_tuple(unsigned a, unsigned b, unsigned c)
{
  unsigned const sum = a + b + c;
  if (a == 0u || b == 0u || c == 0u || sum % 2u == 0u)
    throw std::invalid_argument("three-point data needs positive lengths with odd sum");
  unsigned const d = (sum - 1u) / 2u;
  if (a > d || b > d || c > d)
    throw std::invalid_argument("three-point data violates the triangle inequality");
  if (d > three_point_search_max_degree)
    throw BoundError("three-point search limited to degree "
                     + std::to_string(three_point_search_max_degree));

  Perm const first = standard_cycle(d, a);
  std::optional<HurwitzTuple> found;
  for_each_cycle(d, b, [&](Perm const &second) {
    Perm third = compose(first, second).inverse();
    if (third.single_cycle_length() != c)
      return false;
    std::vector<Perm> perms{first, second, std::move(third)};
    if (!is_transitive(perms))
      return false;
    found = HurwitzTuple{d, std::move(perms)};
    return true;
  });

  if (!found)
    throw std::logic_error("no three-point factorization found for (" + std::to_string(a) + ","
                           + std::to_string(b) + "," + std::to_string(c) + ")");
  return *found;
}

HurwitzTuple construct(unsigned p, std::vector<unsigned> const &lengths, ChainWitness const &chain)
{
  RamProfile const profile{p, lengths};
  if (lengths.size() < 3u || !satisfies_invariants(chain, profile))
    throw std::invalid_argument("invalid chain witness for " + to_string(profile));

  HurwitzTuple t = build_chain(lengths, chain.primed);

  auto const check = validate(t, ExpectedShape{profile.degree(), lengths});
  if (!check)
    throw std::logic_error("construct produced an invalid tuple: " + check.diagnostics.front());
  return t;
}

std::vector<unsigned> partial_product_lengths(HurwitzTuple const &t)
{
  std::vector<unsigned> result;
  Perm prefix(t.degree);
  for (auto const &g : t.perms) {
    prefix = compose(prefix, g);
    result.push_back(prefix.single_cycle_length());
  }
  return result;
}

bool has_cycle_partial_products(HurwitzTuple const &t)
{
  auto const lens = partial_product_lengths(t);
  return std::none_of(lens.begin(), lens.end(), [](unsigned l) { return l == 0u; });
}

bool satisfies_partial_product_condition(HurwitzTuple const &t, unsigned p)
{
  unsigned const r = t.size();
  auto const lens = partial_product_lengths(t);
  for (unsigned m = 1; m + 1u <= r; ++m) {
    if (lens[m - 1u] == 0u)
      return false;
  }
  for (unsigned m = 1; m + 1u < r; ++m) {
    unsigned const mid = t.perms[m].single_cycle_length();
    if (mid == 0u || lens[m - 1u] + mid + lens[m] >= 2u * p)
      return false;
  }
  return true;
}

bool is_p_admissible_tuple(HurwitzTuple const &t, unsigned p, AdmissibilityMode mode,
                           OrbitOptions const &options)
{
  RamProfile profile{p, {}};
  for (auto const &g : t.perms) {
    unsigned const len = g.single_cycle_length();
    if (len == 0u)
      throw std::invalid_argument("p-admissibility needs single-cycle entries");
    profile.indices.push_back(len);
  }
  if (!is_prime(p))
    throw ProfileError(ProfileErrorKind::not_prime, std::to_string(p) + " is not prime");
  if (!profile.is_tame())
    throw ProfileError(ProfileErrorKind::wild_index, "cycle length divisible by p");
  if (t.size() != 3u && !profile.all_below_p())
    throw ProfileError(ProfileErrorKind::index_not_below_p,
                       "p-admissibility of tuples needs r = 3 or all lengths below p");

  if (mode == AdmissibilityMode::numerical_fastpath)
    return admissible(profile).status == Admissibility::admissible;

  // With three points and a length at or above p the definition is the numerical one.
  if (!profile.all_below_p())
    return admissible_3pt(profile).admissible;

  OrbitOptions quotient = options;
  quotient.up_to_conjugation = true;
  bool found = false;
  visit_pure_braid_orbit(t, quotient, [&](HurwitzTuple const &u) {
    found = satisfies_partial_product_condition(u, p);
    return found;
  });
  return found;
}

SingleOrbitReport single_orbit_check(unsigned degree, std::vector<unsigned> const &lengths,
                                     EnumerateOptions const &enumerate_options,
                                     OrbitOptions const &orbit_options)
{
  SingleOrbitReport report;
  auto const classes = enumerate_classes(degree, lengths, enumerate_options);
  report.class_count = classes.size();
  if (classes.empty())
    return report;

  std::set<HurwitzTuple> reached;
  visit_pure_braid_orbit(classes.front(), orbit_options, [&](HurwitzTuple const &u) {
    ++report.raw_orbit_size;
    reached.insert(canonical_form(u));
    return false;
  });

  for (auto const &c : classes)
    report.classes_reached += reached.count(c);
  report.single_orbit = report.classes_reached == report.class_count;
  return report;
}

std::optional<HurwitzTuple> cycle_partial_normalform(HurwitzTuple const &t,
                                                     OrbitOptions const &options)
{
  if (has_cycle_partial_products(t))
    return t;
  for (auto const &u : pure_braid_orbit(t, options)) {
    if (has_cycle_partial_products(u))
      return u;
  }
  return std::nullopt;
}

HurwitzTuple parse_tuple_file(std::string_view text)
{
  std::istringstream in{std::string(text)};
  std::string line;
  std::optional<unsigned> degree;
  HurwitzTuple t;

  auto trim = [](std::string s) {
    auto const b = s.find_first_not_of(" \t\r");
    auto const e = s.find_last_not_of(" \t\r");
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1u);
  };

  unsigned lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(line);
    if (line.empty() || line[0] == '#')
      continue;

    if (!degree) {
      auto const eq = line.find('=');
      if (eq == std::string::npos || trim(line.substr(0, eq)) != "d")
        throw ParseError("line " + std::to_string(lineno) + ": expected \"d=<int>\"");
      std::string const value = trim(line.substr(eq + 1u));
      if (value.empty() || value.find_first_not_of("0123456789") != std::string::npos
          || value.size() > 6u || std::stoul(value) == 0u)
        throw ParseError("line " + std::to_string(lineno) + ": bad degree \"" + value + "\"");
      degree = static_cast<unsigned>(std::stoul(value));
      t.degree = *degree;
      continue;
    }

    try {
      t.perms.push_back(parse_cycles(line, *degree));
    } catch (ParseError const &e) {
      throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
    }
  }

  if (!degree)
    throw ParseError("missing \"d=<int>\" header");
  if (t.perms.empty())
    throw ParseError("tuple file lists no permutations");
  return t;
}

std::string format_tuple_file(HurwitzTuple const &t)
{
  std::string out = "d=" + std::to_string(t.degree) + "\n";
  for (auto const &g : t.perms)
    out += g.to_string() + "\n";
  return out;
}

} // namespace tamecover

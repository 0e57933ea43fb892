// Acceptance run: one line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>

#include "cli.h"
#include "oracles.h"
#include "tamecover/existence.h"
#include "tamecover/int_poly.h"
#include "tamecover/rational_map.h"
#include "test_util.h"

using namespace tamecover;
using namespace tamecover::test;

namespace
{

struct Outcome
{
  bool pass = true;
  std::size_t cases = 0;
  std::string detail;

  void check(bool ok, std::string const &what)
  {
    ++cases;
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

struct AcceptanceCheck
{
  int number;
  std::string name;
  double limit_seconds;
  std::function<Outcome()> body;
};

// Ordered lengths 2 ≤ e_i ≤ d with Σ(e_i − 1) = 2d − 2.
std::vector<std::pair<unsigned, std::vector<unsigned>>> genus_zero_data(unsigned max_d, unsigned max_r,
                                                                        unsigned min_e = 2)
{
  std::vector<std::pair<unsigned, std::vector<unsigned>>> out;
  for (unsigned d = 1; d <= max_d; ++d) {
    for (unsigned r = 3; r <= max_r; ++r) {
      std::vector<unsigned> e(r, min_e);
      for (;;) {
        unsigned sum = 0;
        for (unsigned x : e)
          sum += x - 1u;
        if (sum == 2u * d - 2u && std::all_of(e.begin(), e.end(), [d](unsigned x) { return x <= d; }))
          out.emplace_back(d, e);
        std::size_t i = 0;
        while (i < r && e[i] == std::max(d, min_e)) {
          e[i] = min_e;
          ++i;
        }
        if (i == r)
          break;
        ++e[i];
      }
    }
  }
  return out;
}

std::string show(std::vector<unsigned> const &e)
{
  std::string s = "(";
  for (std::size_t i = 0; i < e.size(); ++i)
    s += (i ? "," : "") + std::to_string(e[i]);
  return s + ")";
}

std::vector<unsigned> sorted(std::vector<unsigned> v)
{
  std::sort(v.begin(), v.end());
  return v;
}

std::set<HurwitzTuple> canonical_set(std::vector<HurwitzTuple> const &tuples)
{
  std::set<HurwitzTuple> s;
  for (auto const &t : tuples)
    s.insert(canonical_form(t));
  return s;
}

HurwitzTuple random_transitive_tuple(unsigned d, unsigned r)
{
  for (;;) {
    HurwitzTuple t{d, {}};
    Perm prefix(d);
    for (unsigned i = 0; i + 1u < r; ++i) {
      t.perms.push_back(random_perm(d));
      prefix = compose(prefix, t.perms.back());
    }
    t.perms.push_back(prefix.inverse());
    if (is_transitive(t.perms))
      return t;
  }
}

FieldElement schoolbook_mul(FiniteField const &field, FieldElement a, FieldElement b)
{
  unsigned const p = field.characteristic();
  if (field.extension_degree() == 1u)
    return a * b % p;
  auto const &m = field.modulus();
  long long const q = p;
  long long const a0 = a % p, a1 = a / p, b0 = b % p, b1 = b / p;
  long long const c2 = a1 * b1;
  long long const r0 = a0 * b0 - c2 * m[0], r1 = a0 * b1 + a1 * b0 - c2 * m[1];
  return static_cast<FieldElement>(((r0 % q) + q) % q + (((r1 % q) + q) % q) * q);
}

Outcome three_point_reformulation()
{
  Outcome o;
  for (unsigned p : {3u, 5u, 7u, 11u}) {
    oracle::for_each_valid_triple(p, 40, [&](unsigned a, unsigned b, unsigned c) {
      RamProfile const prof{p, {a, b, c}};
      o.check(admissible_3pt(prof).admissible == admissible_3pt_reformulated(prof), to_string(prof));
    });
  }
  return o;
}

Outcome two_small_indices()
{
  Outcome o;
  for (unsigned p : {3u, 5u, 7u, 11u}) {
    oracle::for_each_valid_triple(p, 40, [&](unsigned a, unsigned b, unsigned c) {
      if (a < p && b < p) {
        RamProfile const prof{p, {a, b, c}};
        o.check(admissible_3pt(prof).admissible == oracle::two_small_rule({a, b, c}, p), to_string(prof));
      }
    });
  }
  return o;
}

Outcome below_twice_p()
{
  Outcome o;
  for (unsigned p : {7u, 11u}) {
    oracle::for_each_valid_triple(p, 2u * p - 1u, [&](unsigned a, unsigned b, unsigned c) {
      auto const expected = oracle::below_2p_rule({a, b, c}, p);
      if (!expected)
        return;
      RamProfile const prof{p, {a, b, c}};
      o.check(admissible_3pt(prof).admissible == *expected, to_string(prof));
    });
  }
  return o;
}

Outcome four_points_below_p()
{
  Outcome o;
  for (unsigned p : {5u, 7u, 11u, 13u}) {
    for (unsigned a = 1; a < p; ++a)
      for (unsigned b = 1; b < p; ++b)
        for (unsigned c = 1; c < p; ++c)
          for (unsigned e4 = 1; e4 < p; ++e4) {
            std::vector<unsigned> const e{a, b, c, e4};
            RamProfile const prof{p, e};
            if (!prof.has_genus_zero_parity())
              continue;
            if (*std::max_element(e.begin(), e.end()) > oracle::genus0_degree(e))
              continue;  // no factorization with an index above the degree
            bool const chain = admissible(prof).status == Admissibility::admissible;
            o.check(chain == oracle::four_point_short_rule(e, p), to_string(prof));
          }
  }
  return o;
}

Outcome worked_instances()
{
  Outcome o;
  o.check(admissible({7, {5, 3, 3}}).status == Admissibility::admissible, "p=7 (5,3,3)");
  o.check(admissible({5, {4, 4, 4, 4, 3}}).status == Admissibility::not_admissible, "p=5 (4,4,4,4,3)");
  auto const v = admissible({5, {4, 4, 4, 4}});
  o.check(v.status == Admissibility::admissible && v.chain && v.chain->primed.size() == 3u
            && v.chain->primed[1] == 1u,
          "p=5 (4,4,4,4) with e'_2 = 1");
  return o;
}

Outcome enumeration_goldens()
{
  Outcome o;
  std::vector<HurwitzTuple> const transpositions{
    make_tuple(3, {"(1 2)", "(1 2)", "(2 3)", "(2 3)"}),
    make_tuple(3, {"(1 2)", "(2 3)", "(2 3)", "(1 2)"}),
    make_tuple(3, {"(1 2)", "(2 3)", "(3 1)", "(2 3)"}),
    make_tuple(3, {"(1 2)", "(2 3)", "(1 2)", "(3 1)"}),
  };
  std::vector<HurwitzTuple> const four_cycle{
    make_tuple(4, {"(1 2 3 4)", "(1 2)", "(4 3)", "(3 1)"}),
    make_tuple(4, {"(1 2 3 4)", "(1 2)", "(1 4)", "(4 3)"}),
    make_tuple(4, {"(1 2 3 4)", "(1 2)", "(3 1)", "(1 4)"}),
    make_tuple(4, {"(1 2 3 4)", "(1 3)", "(1 4)", "(2 3)"}),
  };
  auto const a = enumerate_classes(3, {2, 2, 2, 2});
  o.check(a.size() == 4u && canonical_set(a) == canonical_set(transpositions), "d=3 (2,2,2,2)");
  auto const b = enumerate_classes(4, {4, 2, 2, 2});
  o.check(b.size() == 4u && canonical_set(b) == canonical_set(four_cycle), "d=4 (4,2,2,2)");
  return o;
}

Outcome single_orbits()
{
  Outcome o;
  for (auto const &[d, e] : genus_zero_data(5, 4)) {
    auto const r = single_orbit_check(d, e);
    o.check(r.class_count >= 1u && r.single_orbit, "d=" + std::to_string(d) + " " + show(e));
  }
  o.check(single_orbit_check(3, {2, 2, 2, 2}).single_orbit, "d=3 (2,2,2,2)");
  o.check(single_orbit_check(4, {4, 2, 2, 2}).single_orbit, "d=4 (4,2,2,2)");
  return o;
}

Outcome three_point_rigidity()
{
  Outcome o;
  EnumerateOptions options;
  options.max_degree = 7;
  for (auto const &[d, e] : genus_zero_data(7, 3, 1))
    o.check(enumerate_classes(d, e, options).size() == 1u, "d=" + std::to_string(d) + " " + show(e));
  return o;
}

Outcome chain_construction()
{
  Outcome o;
  for (unsigned p : {5u, 7u}) {
    for (unsigned r = 3; r <= 6; ++r) {
      std::vector<unsigned> e(r, 1u);
      for (;;) {
        RamProfile const prof{p, e};
        unsigned const d = oracle::genus0_degree(e);
        bool const in_range = prof.has_genus_zero_parity() && d <= 8u
                              && *std::max_element(e.begin(), e.end()) <= d;
        if (in_range) {
          auto const v = admissible_chain(prof);
          if (v.admissible) {
            HurwitzTuple const t = construct(p, e, *v.witness);
            auto const lens = partial_product_lengths(t);
            bool ok = static_cast<bool>(validate(t, ExpectedShape{d, e}))
                      && satisfies_partial_product_condition(t, p);
            for (unsigned m = 1; m + 1u <= r; ++m)
              ok = ok && lens[m - 1u] == v.witness->primed[m - 1u];
            o.check(ok, to_string(prof));
          }
        }
        std::size_t i = 0;
        while (i < r && e[i] == p - 1u) {
          e[i] = 1u;
          ++i;
        }
        if (i == r)
          break;
        ++e[i];
      }
    }
  }
  return o;
}

Outcome orbit_matches_numerical()
{
  Outcome o;
  for (unsigned p : {3u, 5u}) {
    for (auto const &[d, e] : genus_zero_data(5, 4)) {
      bool const in_scope = std::all_of(e.begin(), e.end(), [p](unsigned x) { return x % p != 0u; })
                            && (e.size() == 3u || std::all_of(e.begin(), e.end(), [p](unsigned x) { return x < p; }));
      if (!in_scope)
        continue;
      for (auto const &t : enumerate_classes(d, e)) {
        bool const fast = is_p_admissible_tuple(t, p, AdmissibilityMode::numerical_fastpath);
        bool const orbit = is_p_admissible_tuple(t, p, AdmissibilityMode::orbit_search);
        o.check(fast == orbit, "p=" + std::to_string(p) + " " + t.to_string());
      }
    }
  }
  return o;
}

Outcome block_quotient_examples()
{
  Outcome o;
  auto const s9 = make_tuple(9, {"(1,2,3,4)(5,6,7,8)", "(8,9,2,1)(4,3,6,5)", "(1,5)(9,8,7,3)"});
  auto const r9 = analyze_monodromy(s9, 5);
  bool ok9 = r9.status == MonodromyStatus::not_exists && r9.witness.has_value();
  if (ok9) {
    auto const &w = r9.systems[*r9.witness];
    ok9 = w.system.block_size == 1u && sorted(w.induced_lengths) == sorted({4, 4, 4, 4, 4, 2});
  }
  o.check(ok9, "S_9 tuple");

  auto const s10 = make_tuple(10, {"(1,3,5,8,2,4,6,7)", "(10,8,6,4,9,7,5,3)", "(10,3,1,9,4,2)(7,8)"});
  auto const r10 = analyze_monodromy(s10, 5);
  bool ok10 = r10.genus == 1u && r10.status == MonodromyStatus::not_exists && r10.witness.has_value();
  if (ok10) {
    auto const &w = r10.systems[*r10.witness];
    ok10 = w.system.block_size == 2u && w.quotient_degree == 5u
           && sorted(w.induced_lengths) == sorted({4, 4, 3});
  }
  o.check(ok10, "S_10 genus-1 tuple");
  return o;
}

Outcome alternating_certificate()
{
  Outcome o;
  auto const v = decide({5, {3, 3, 3, 3}});
  o.check(v.status == ExistenceStatus::exists && v.certificate.has_value(), "decide p=5 (3,3,3,3)");
  if (v.certificate) {
    auto const g = classify_group(v.certificate->perms);
    o.check(g.tag == GroupTag::alternating && g.order == 60u, "certificate group");
  }
  return o;
}

Outcome char_three_computations()
{
  Outcome o;
  FiniteField const f9(3, 2), f25(5, 2);
  auto const b_quartic = IntPoly::parse("b^4 + (2 + 8mu)b^3 + 36mu b^2 + 54mu b + 27mu");
  o.check(b_quartic.reduce_mod(3) == IntPoly::parse("b^4 + (2 + 2mu)*b^3"), "b-quartic mod 3");
  auto const c_quartic = IntPoly::parse("c^4 - (4 + 16mu)c^3 + 144mu c^2 - 432mu c + 432mu");

  auto nonzero_roots = [&](IntPoly const &f, std::string const &var, FieldElement mu) {
    std::vector<FieldElement> out;
    for (auto const &r : roots(reduce_mod_p(f, f9, var, {{"mu", mu}})))
      if (r.value != 0u)
        out.insert(out.end(), r.multiplicity, r.value);
    return out;
  };
  for (FieldElement mu = 0; mu < f9.order(); ++mu) {
    if (f9.in_prime_field(mu))
      continue;
    std::string const tag = " mu=" + f9.to_string(mu);
    FieldElement const one_plus_mu = f9.add(1u, mu);
    o.check(nonzero_roots(b_quartic, "b", mu) == std::vector<FieldElement>{one_plus_mu}, "b root" + tag);
    auto const c = nonzero_roots(c_quartic, "c", mu);
    o.check(c == std::vector<FieldElement>{one_plus_mu}, "c root" + tag);
    if (c.size() == 1u) {
      FieldElement const lambda =
        f9.div(f9.mul(2u, c[0]), f9.mul(f9.from_int(4), f9.sub(c[0], f9.from_int(3))));
      o.check(lambda == f9.from_int(-1), "lambda" + tag);
    }
  }

  std::set<ProjPoint> first_points;
  std::set<std::multiset<ProjPoint>> branch_sets;
  for (FieldElement t = 0; t < 5u; ++t) {
    RationalMap const f(reduce_mod_p(IntPoly::parse("x^7 + t*x^5 - x"), f25, "x", {{"t", t}}));
    o.check(f.derivative_numerator() == reduce_mod_p(IntPoly::parse("2x^6 - 1"), f25),
            "derivative t=" + std::to_string(t));
    std::set<ProjPoint> points;
    std::multiset<ProjPoint> values;
    for (auto const &pt : ram_report(f).points) {
      points.insert(pt.point);
      values.insert(pt.value);
    }
    if (t == 0u)
      first_points = points;
    o.check(points == first_points && points.size() == 7u, "ramification set t=" + std::to_string(t));
    branch_sets.insert(values);
  }
  o.check(branch_sets.size() > 1u, "branch values vary with t");
  return o;
}

Outcome cycle_partial_transforms()
{
  Outcome o;
  for (auto const &[d, e] : genus_zero_data(5, 4)) {
    for (auto const &t : enumerate_classes(d, e)) {
      auto const n = cycle_partial_normalform(t);
      bool ok = n.has_value() && has_cycle_partial_products(*n);
      if (ok) {
        auto const orbit = pure_braid_orbit(t);
        ok = std::binary_search(orbit.begin(), orbit.end(), *n);
      }
      o.check(ok, t.to_string());
    }
  }
  return o;
}

Outcome property_suites()
{
  Outcome o;
  // Braid relations.
  for (int trial = 0; trial < 1000; ++trial) {
    unsigned const d = random_between(2, 6), r = random_between(3, 6);
    auto const t = random_transitive_tuple(d, r);
    unsigned const i = random_between(1, r - 2u);
    BraidMove const a{i, BraidDirection::forward}, b{i + 1u, BraidDirection::forward};
    auto const lhs = braid_apply(braid_apply(braid_apply(t, a), b), a);
    auto const rhs = braid_apply(braid_apply(braid_apply(t, b), a), b);
    bool ok = lhs == rhs
              && braid_apply(braid_apply(t, a), {i, BraidDirection::inverse}) == t;
    if (r >= 4u) {
      unsigned const j = i + 2u <= r - 1u ? i + 2u : (i >= 3u ? i - 2u : i);
      if (j != i) {
        BraidMove const c{j, BraidDirection::forward};
        ok = ok && braid_apply(braid_apply(t, a), c) == braid_apply(braid_apply(t, c), a);
      }
    }
    o.check(ok, "braid relations " + t.to_string());
  }
  // Order invariance of decide.
  for (int trial = 0; trial < 1000; ++trial) {
    unsigned const primes[] = {3, 5, 7, 11};
    unsigned const p = primes[random_between(0, 3)];
    std::vector<unsigned> e(random_between(3, 5));
    for (auto &x : e)
      x = random_between(1, 2u * p);
    auto shuffled = e;
    std::shuffle(shuffled.begin(), shuffled.end(), rng());
    o.check(decide({p, e}).status == decide({p, shuffled}).status, "order " + show(e));
  }
  // Parse/serialize round trips.
  for (int trial = 0; trial < 1000; ++trial) {
    unsigned const d = random_between(2, 8);
    auto const t = random_transitive_tuple(d, random_between(2, 5));
    bool ok = parse_tuple_file(format_tuple_file(t)) == t;
    for (auto const &g : t.perms)
      ok = ok && parse_cycles(g.to_string(), d) == g;
    ok = ok && cli::tuple_from_json(cli::Json::parse(cli::to_json(t).dump())) == t;
    auto const v = decide({5, {random_between(1, 9), random_between(1, 9), random_between(1, 9)}});
    auto const j = cli::to_json(v);
    ok = ok && cli::to_json(cli::verdict_from_json(cli::Json::parse(j.dump()))) == j;
    IntPoly const f = IntPoly::parse("x^" + std::to_string(random_between(0, 6)) + " - "
                                     + std::to_string(random_between(0, 50)) + "*mu*x + 7");
    ok = ok && IntPoly::parse(f.to_string()) == f;
    o.check(ok, "round trip " + t.to_string());
  }
  // Field axioms.
  std::vector<FiniteField> const fields{FiniteField(3), FiniteField(5), FiniteField(3, 2), FiniteField(5, 2)};
  for (int trial = 0; trial < 1000; ++trial) {
    auto const &F = fields[static_cast<std::size_t>(trial) % fields.size()];
    auto pick = [&] { return static_cast<FieldElement>(random_between(0, F.order() - 1u)); };
    FieldElement const a = pick(), b = pick(), c = pick();
    bool ok = F.add(F.add(a, b), c) == F.add(a, F.add(b, c))
              && F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))
              && F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
              && F.add(a, F.neg(a)) == 0u && F.mul(a, b) == schoolbook_mul(F, a, b);
    if (a != 0u)
      ok = ok && F.mul(a, F.inv(a)) == 1u;
    o.check(ok, "field axioms over F_" + std::to_string(F.order()));
  }
  return o;
}

} // anonymous namespace

int main()
{
  std::vector<AcceptanceCheck> const criteria{
    {1, "three-point criterion agrees with its degree-inequality form, e <= 40", 60.0, three_point_reformulation},
    {2, "two indices below p: admissible iff d < p", 60.0, two_small_indices},
    {3, "indices below 2p: closed forms for one or no small index", 60.0, below_twice_p},
    {4, "four points below p: chain iff every e_i > d + 1 - p", 30.0, four_points_below_p},
    {5, "worked instances (5,3,3)@7, (4,4,4,4,3)@5, (4,4,4,4)@5", 10.0, worked_instances},
    {6, "enumeration goldens for (2,2,2,2) and (4,2,2,2)", 10.0, enumeration_goldens},
    {7, "single pure-braid orbit, d <= 5, r <= 4", 300.0, single_orbits},
    {8, "one class for every three-point datum, d <= 7", 120.0, three_point_rigidity},
    {9, "construction has the witness partial products, p in {5,7}, r <= 6, d <= 8", 300.0, chain_construction},
    {10, "orbit search agrees with numerical test, d <= 5, r <= 4, p in {3,5}", 300.0, orbit_matches_numerical},
    {11, "block-quotient non-existence for the S_9 and S_10 tuples at p = 5", 10.0, block_quotient_examples},
    {12, "(3,3,3,3)@5 exists with certificate group A_5 of order 60", 10.0, alternating_certificate},
    {13, "characteristic-3 quartics and the fixed-ramification family over F_25", 10.0, char_three_computations},
    {14, "every class has a pure-braid transform with cycle partial products", 300.0, cycle_partial_transforms},
    {15, "property suites: braid relations, order invariance, round trips, field axioms", 120.0, property_suites},
  };

  int failures = 0;
  for (auto const &c : criteria) {
    auto const start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (std::exception const &e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    double const seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.pass && seconds > c.limit_seconds) {
      o.pass = false;
      o.detail = "time limit " + std::to_string(c.limit_seconds) + " s exceeded";
    }
    if (o.pass && o.cases == 0u) {
      o.pass = false;
      o.detail = "no cases checked";
    }
    failures += o.pass ? 0 : 1;
    std::printf("[%s] %2d %s (%zu cases, %.2f s)%s%s\n", o.pass ? "PASS" : "FAIL", c.number,
                c.name.c_str(), o.cases, seconds, o.pass ? "" : ": ", o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}

#include <gtest/gtest.h>

#include "oracles.h"
#include "tamecover/admissibility.h"
#include "test_util.h"

using namespace tamecover;
using namespace tamecover::test;

namespace
{

RamProfile profile(unsigned p, std::vector<unsigned> e)
{
  return RamProfile{p, std::move(e)};
}

ProfileErrorKind error_kind(std::function<void()> const &f)
{
  try {
    f();
  } catch (ProfileError const &e) {
    return e.kind();
  }
  ADD_FAILURE() << "no ProfileError thrown";
  return ProfileErrorKind::not_prime;
}

} // anonymous namespace

TEST(FloorCeilTest, Examples)
{
  auto const a = floor_ceil(7, 5, 1);
  EXPECT_EQ(a.up, 2u);
  EXPECT_EQ(a.down, 1u);
  EXPECT_EQ(a.defect_up, 3u);
  EXPECT_EQ(a.defect_down, 2u);

  auto const b = floor_ceil(4, 3, 1);
  EXPECT_EQ(b.up, 2u);
  EXPECT_EQ(b.down, 1u);
  EXPECT_EQ(b.defect_up, 2u);
  EXPECT_EQ(b.defect_down, 1u);

  auto const c = floor_ceil(4, 5, 1);
  EXPECT_EQ(c.up, 1u);
  EXPECT_EQ(c.down, 0u);
  EXPECT_EQ(c.defect_up, 1u);
  EXPECT_EQ(c.defect_down, 4u);
}

TEST(FloorCeilTest, RejectsMultiplesOfP)
{
  EXPECT_EQ(error_kind([] { floor_ceil(10, 5, 1); }), ProfileErrorKind::wild_index);
}

TEST(FloorCeilTest, DefectIdentities)
{
  for (unsigned p : {2u, 3u, 5u, 7u}) {
    for (unsigned m = 1; m <= 3; ++m) {
      for (unsigned e = 1; e <= 200; ++e) {
        if (e % p == 0u)
          continue;
        auto const fc = floor_ceil(e, p, m);
        EXPECT_EQ(fc.defect_up + fc.defect_down, fc.p_power);
        EXPECT_EQ(fc.up, fc.down + 1u);
        EXPECT_LT(fc.defect_up, fc.p_power);
        EXPECT_LT(fc.defect_down, fc.p_power);
      }
    }
  }
}

TEST(ThreePointTest, Examples)
{
  EXPECT_TRUE(admissible_3pt(profile(3, {1, 4, 4})).admissible);
  EXPECT_TRUE(admissible_3pt(profile(5, {2, 3, 4})).admissible);

  auto const v = admissible_3pt(profile(5, {3, 4, 4}));
  ASSERT_FALSE(v.admissible);
  ASSERT_TRUE(v.witness);
  EXPECT_EQ(v.witness->m, 1u);
  EXPECT_TRUE(v.witness->subset.empty());
  EXPECT_EQ(v.witness->quotient_indices, (std::vector<unsigned>{1, 1, 1}));
  EXPECT_EQ(v.witness->quotient_degree, 1u);
  EXPECT_TRUE(satisfies_invariants(*v.witness, profile(5, {3, 4, 4})));
}

TEST(ThreePointTest, ReformulationExamples)
{
  EXPECT_FALSE(admissible_3pt_reformulated(profile(5, {3, 4, 4})));
  EXPECT_TRUE(admissible_3pt_reformulated(profile(3, {1, 4, 4})));
}

TEST(ThreePointTest, PreconditionErrorsAreDistinct)
{
  EXPECT_EQ(error_kind([] { admissible_3pt(profile(5, {5, 3, 3})); }),
            ProfileErrorKind::wild_index);
  EXPECT_EQ(error_kind([] { admissible_3pt(profile(5, {2, 3, 3})); }), ProfileErrorKind::parity);
  EXPECT_EQ(error_kind([] { admissible_3pt(profile(11, {9, 2, 2})); }),
            ProfileErrorKind::triangle);
  EXPECT_EQ(error_kind([] { admissible_3pt(profile(4, {1, 2, 2})); }),
            ProfileErrorKind::not_prime);
  EXPECT_EQ(error_kind([] { admissible_3pt(profile(5, {2, 2, 2, 2})); }),
            ProfileErrorKind::too_few_points);
}

TEST(ThreePointTest, SeparableMonomialDataAlwaysAdmissible)
{
  // (1, d, d) is realised by x^d.
  for (unsigned p : {2u, 3u, 5u, 7u})
    for (unsigned d = 1; d <= 60; ++d)
      if (d % p) {
        EXPECT_TRUE(admissible_3pt(profile(p, {1, d, d})).admissible) << p << " " << d;
      }
}

TEST(ThreePointTest, WitnessesSatisfyInvariants)
{
  for (unsigned p : {2u, 3u, 5u, 7u}) {
    oracle::for_each_valid_triple(p, 30, [p](unsigned a, unsigned b, unsigned c) {
      auto const prof = profile(p, {a, b, c});
      auto const v = admissible_3pt(prof);
      EXPECT_EQ(v.admissible, !v.witness.has_value());
      if (v.witness) {
        EXPECT_TRUE(satisfies_invariants(*v.witness, prof)) << to_string(prof);
      }
    });
  }
}

TEST(ThreePointTest, AgreesWithReformulationOnSmallRange)
{
  for (unsigned p : {2u, 3u, 5u}) {
    oracle::for_each_valid_triple(p, 20, [p](unsigned a, unsigned b, unsigned c) {
      auto const prof = profile(p, {a, b, c});
      EXPECT_EQ(admissible_3pt(prof).admissible, admissible_3pt_reformulated(prof))
        << to_string(prof);
    });
  }
}

TEST(ThreePointTest, TwoSmallIndicesMeansDegreeBelowP)
{
  for (unsigned p : {3u, 5u, 7u}) {
    oracle::for_each_valid_triple(p, 25, [p](unsigned a, unsigned b, unsigned c) {
      if (a < p && b < p) {
        EXPECT_EQ(admissible_3pt(profile(p, {a, b, c})).admissible,
                  oracle::two_small_rule({a, b, c}, p));
      }
    });
  }
}

TEST(ChainTest, Examples)
{
  auto const v = admissible_chain(profile(5, {4, 4, 4, 4}));
  ASSERT_TRUE(v.admissible);
  EXPECT_EQ(v.witness->primed, (std::vector<unsigned>{4, 1, 4}));

  EXPECT_FALSE(admissible_chain(profile(5, {4, 4, 4, 4, 3})).admissible);
  EXPECT_TRUE(admissible_chain(profile(7, {5, 3, 3})).admissible);
}

TEST(ChainTest, AlternatingRigidityPattern)
{
  // r odd, e_i = p−1 for i < r−1, e_{r−1} + e_r > p and odd: no chain.
  for (unsigned p : {5u, 7u, 11u}) {
    for (unsigned r : {5u, 7u}) {
      for (unsigned a = 1; a < p; ++a) {
        for (unsigned b = 1; b < p; ++b) {
          if (a + b <= p || (a + b) % 2u == 0u)
            continue;
          std::vector<unsigned> e(r - 2u, p - 1u);
          e.push_back(a);
          e.push_back(b);
          if (!RamProfile{p, e}.has_genus_zero_parity())
            continue;
          EXPECT_FALSE(admissible_chain(profile(p, e)).admissible);
        }
      }
    }
  }
}

TEST(ChainTest, PreconditionErrors)
{
  EXPECT_EQ(error_kind([] { admissible_chain(profile(5, {7, 4, 4, 3})); }),
            ProfileErrorKind::index_not_below_p);
  EXPECT_EQ(error_kind([] { admissible_chain(profile(5, {4, 4, 4, 3})); }),
            ProfileErrorKind::parity);
}

TEST(ChainTest, MatchesExhaustiveSearch)
{
  for (unsigned p : {3u, 5u, 7u}) {
    for (int trial = 0; trial < 400; ++trial) {
      unsigned const r = random_between(3, 6);
      std::vector<unsigned> e;
      for (unsigned i = 0; i < r; ++i)
        e.push_back(random_between(1, p - 1));
      if (!RamProfile{p, e}.has_genus_zero_parity())
        continue;
      auto const v = admissible_chain(profile(p, e));
      auto const brute = oracle::brute_chain(e, p);
      ASSERT_EQ(v.admissible, brute.has_value());
      if (brute) {
        EXPECT_EQ(v.witness->primed, *brute);
        EXPECT_TRUE(satisfies_invariants(*v.witness, profile(p, e)));
      }
    }
  }
}

TEST(ChainTest, FourPointFormula)
{
  for (unsigned p : {5u, 7u}) {
    for (unsigned a = 1; a < p; ++a)
      for (unsigned b = 1; b < p; ++b)
        for (unsigned c = 1; c < p; ++c)
          for (unsigned d = 1; d < p; ++d) {
            std::vector<unsigned> e{a, b, c, d};
            if (!RamProfile{p, e}.has_genus_zero_parity())
              continue;
            bool const chain = admissible_chain(profile(p, e)).admissible;
            EXPECT_EQ(chain, oracle::four_point_rule(e, p));
            if (*std::max_element(e.begin(), e.end()) <= oracle::genus0_degree(e)) {
              EXPECT_EQ(chain, oracle::four_point_short_rule(e, p));
            }
          }
  }
}

TEST(DispatchTest, Examples)
{
  auto const a = admissible(profile(3, {2, 2, 2, 2}));
  EXPECT_EQ(a.status, Admissibility::admissible);
  EXPECT_EQ(a.criterion, Criterion::chain);
  EXPECT_EQ(a.chain->primed, (std::vector<unsigned>{2, 1, 2}));

  EXPECT_EQ(admissible(profile(5, {4, 4, 4, 4, 4, 2})).status, Admissibility::not_admissible);
  EXPECT_EQ(admissible(profile(5, {7, 7, 7, 7})).status, Admissibility::out_of_scope);
  EXPECT_EQ(admissible(profile(5, {5, 3, 3, 1})).status, Admissibility::wild);

  auto const three = admissible(profile(5, {3, 7, 9}));
  EXPECT_EQ(three.status, Admissibility::admissible);
  EXPECT_EQ(three.criterion, Criterion::three_point);
}

TEST(DispatchPropertyTest, OrderInvariance)
{
  for (int trial = 0; trial < 1000; ++trial) {
    unsigned const p = random_between(0, 1) ? 5u : 7u;
    unsigned const r = random_between(3, 6);
    std::vector<unsigned> e;
    for (unsigned i = 0; i < r; ++i)
      e.push_back(random_between(1, r == 3u ? 3u * p : p - 1u));
    RamProfile prof{p, e};
    if (!prof.has_genus_zero_parity() || !prof.is_tame())
      continue;
    if (r == 3u && !oracle::valid_triple(e[0], e[1], e[2], p))
      continue;

    auto const base = admissible(prof).status;
    std::shuffle(prof.indices.begin(), prof.indices.end(), rng());
    EXPECT_EQ(admissible(prof).status, base) << to_string(prof);
  }
}

TEST(DispatchPropertyTest, InsertingUnramifiedPointsKeepsAdmissibility)
{
  for (int trial = 0; trial < 1000; ++trial) {
    unsigned const p = random_between(0, 1) ? 5u : 7u;
    unsigned const r = random_between(4, 6);
    std::vector<unsigned> e;
    for (unsigned i = 0; i < r; ++i)
      e.push_back(random_between(2, p - 1));
    if (!RamProfile{p, e}.has_genus_zero_parity())
      continue;
    if (!admissible_chain(profile(p, e)).admissible)
      continue;

    auto const pos = random_between(0, r);
    e.insert(e.begin() + pos, 1u);
    EXPECT_TRUE(admissible_chain(profile(p, e)).admissible);
  }
}

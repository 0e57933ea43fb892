#include <algorithm>

#include "tamecover/errors.h"
#include "tamecover/existence.h"

namespace tamecover
{

namespace
{

ExistenceVerdict make_verdict(ExistenceStatus status, std::string reason)
{
  ExistenceVerdict v;
  v.status = status;
  v.reason = std::move(reason);
  return v;
}

void attach_certificate(ExistenceVerdict &v, RamProfile const &profile)
{
  try {
    if (profile.point_count() == 3u) {
      auto const &e = profile.indices;
      v.certificate = three_point_tuple(e[0], e[1], e[2]);
    } else {
      v.certificate = construct(profile.p, profile.indices, *v.admissibility->chain);
    }
  } catch (BoundError const &err) {
    v.certificate_note = std::string("certificate omitted: ") + err.what();
  }
}

} // anonymous namespace

std::string to_string(ExistenceStatus s)
{
  switch (s) {
  case ExistenceStatus::exists:
    return "EXISTS";
  case ExistenceStatus::not_exists:
    return "NOT_EXISTS";
  case ExistenceStatus::out_of_scope:
    return "OUT_OF_SCOPE";
  case ExistenceStatus::invalid:
    return "INVALID";
  }
  return "?";
}

std::string to_string(BlockRegime r)
{
  switch (r) {
  case BlockRegime::not_applicable:
    return "not applicable";
  case BlockRegime::chain:
    return "all below p";
  case BlockRegime::three_point:
    return "three points";
  case BlockRegime::out_of_scope:
    return "out of scope";
  }
  return "?";
}

std::string to_string(MonodromyStatus s)
{
  return s == MonodromyStatus::not_exists ? "NOT_EXISTS" : "INCONCLUSIVE";
}

ExistenceVerdict decide(RamProfile const &profile)
{
  if (!is_prime(profile.p))
    return make_verdict(ExistenceStatus::invalid, std::to_string(profile.p) + " is not prime");
  if (profile.point_count() < 3u)
    return make_verdict(ExistenceStatus::invalid, "fewer than 3 branch points");
  if (std::find(profile.indices.begin(), profile.indices.end(), 0u) != profile.indices.end())
    return make_verdict(ExistenceStatus::invalid, "ramification index 0");
  if (!profile.has_genus_zero_parity())
    return make_verdict(ExistenceStatus::invalid, "sum of (e_i - 1) is odd");

  unsigned const d = profile.degree();
  for (unsigned e : profile.indices) {
    if (e > d)
      return make_verdict(ExistenceStatus::not_exists,
                          "degree bound: index " + std::to_string(e) + " exceeds degree "
                            + std::to_string(d));
  }

  if (!profile.is_tame())
    return make_verdict(ExistenceStatus::out_of_scope, "wild: p divides an index");
  if (profile.point_count() > 3u && !profile.all_below_p())
    return make_verdict(ExistenceStatus::out_of_scope,
                        "more than 3 points with an index at least p");

  auto const verdict = admissible(profile);
  ExistenceVerdict v;
  v.admissibility = verdict;
  if (verdict.status == Admissibility::admissible) {
    v.status = ExistenceStatus::exists;
    v.reason = verdict.criterion == Criterion::chain ? "chain of intermediate indices"
                                                      : "no inseparable competitor";
    attach_certificate(v, profile);
  } else {
    v.status = ExistenceStatus::not_exists;
    v.reason = verdict.criterion == Criterion::chain ? "no chain of intermediate indices"
                                                      : "inseparable linear series";
  }
  return v;
}

ImprimitiveReport analyze_monodromy(HurwitzTuple const &t, unsigned p)
{
  if (!is_prime(p))
    throw ProfileError(ProfileErrorKind::not_prime, std::to_string(p) + " is not prime");
  if (!is_transitive(t.perms))
    throw NotTransitiveError("monodromy tuple is not transitive");
  if (!t.product().is_identity())
    throw std::invalid_argument("monodromy tuple has non-trivial product");

  unsigned const d = t.degree;
  unsigned ram = 0;
  for (auto const &g : t.perms)
    for (unsigned len : g.cycle_lengths())
      ram += len - 1u;

  ImprimitiveReport report;
  report.genus = (ram + 2u - 2u * d) / 2u;

  for (auto const &bs : block_systems(t.perms)) {
    BlockAnalysis a;
    a.system = bs;
    a.quotient_degree = bs.block_count();

    unsigned induced_ram = 0;
    for (auto const &g : t.perms) {
      Perm const induced = induced_on_blocks(g, bs);
      for (auto const &c : induced.cycles()) {
        a.induced_lengths.push_back(static_cast<unsigned>(c.size()));
        induced_ram += static_cast<unsigned>(c.size()) - 1u;
      }
      a.stripped_fixed_points += a.quotient_degree;
      for (auto const &c : induced.cycles())
        a.stripped_fixed_points -= c.size();
    }
    a.genus_zero = 2u * a.quotient_degree == induced_ram + 2u;

    RamProfile const induced{p, a.induced_lengths};
    if (a.induced_lengths.size() < 3u)
      a.regime = BlockRegime::not_applicable;
    else if (!induced.is_tame())
      a.regime = BlockRegime::out_of_scope;
    else if (induced.all_below_p())
      a.regime = BlockRegime::chain;
    else if (a.induced_lengths.size() == 3u)
      a.regime = BlockRegime::three_point;
    else
      a.regime = BlockRegime::out_of_scope;

    if (a.genus_zero && (a.regime == BlockRegime::chain || a.regime == BlockRegime::three_point))
      a.verdict = admissible(induced);

    if (a.rules_out_cover() && !report.witness)
      report.witness = report.systems.size();
    report.systems.push_back(std::move(a));
  }

  report.status = report.witness ? MonodromyStatus::not_exists : MonodromyStatus::inconclusive;
  return report;
}

GroupClass monodromy_class_of_certificate(RamProfile const &profile)
{
  auto const v = decide(profile);
  if (v.status != ExistenceStatus::exists || !v.certificate)
    throw std::invalid_argument("no existence certificate for " + to_string(profile));
  return classify_group(v.certificate->perms);
}

} // namespace tamecover

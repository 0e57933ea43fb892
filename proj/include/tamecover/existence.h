#ifndef TAMECOVER_EXISTENCE_H
#define TAMECOVER_EXISTENCE_H

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "tamecover/admissibility.h"
#include "tamecover/hurwitz.h"
#include "tamecover/perm_group.h"

namespace tamecover
{

enum class ExistenceStatus { exists, not_exists, out_of_scope, invalid };

std::string to_string(ExistenceStatus s);

/// Verdicts hold for branch points in general position.
inline constexpr char const *general_points_note = "general points";

struct ExistenceVerdict
{
  ExistenceStatus status = ExistenceStatus::invalid;
  std::string reason;
  std::string note = general_points_note;

  std::optional<AdmissibilityVerdict> admissibility;

  /// A Hurwitz factorization realising the data (EXISTS only).
  std::optional<HurwitzTuple> certificate;
  /// Why the certificate is absent on an EXISTS verdict.
  std::string certificate_note;
};

/**
 * Existence of a tame genus-0 cover with the given ramification indices
 * over general points. Never throws on malformed data: it becomes INVALID.
 */
ExistenceVerdict decide(RamProfile const &profile);

enum class BlockRegime { not_applicable, chain, three_point, out_of_scope };

std::string to_string(BlockRegime r);

struct BlockAnalysis
{
  BlockSystem system;
  unsigned quotient_degree = 0;            ///< number of blocks
  std::vector<unsigned> induced_lengths;   ///< cycle lengths of the induced action, 1s removed
  std::size_t stripped_fixed_points = 0;
  bool genus_zero = false;
  BlockRegime regime = BlockRegime::not_applicable;
  std::optional<AdmissibilityVerdict> verdict;

  bool rules_out_cover() const
  {
    return verdict && verdict->status == Admissibility::not_admissible;
  }
};

enum class MonodromyStatus { not_exists, inconclusive };

std::string to_string(MonodromyStatus s);

struct ImprimitiveReport
{
  unsigned genus = 0;
  MonodromyStatus status = MonodromyStatus::inconclusive;
  std::vector<BlockAnalysis> systems;      ///< in block_systems order
  std::optional<std::size_t> witness;      ///< first system ruling the cover out
};

/**
 * Looks for a block system whose induced action is genus-0 data that admits
 * no tame cover; any such system rules out a cover with this monodromy.
 * Throws NotTransitiveError for intransitive tuples and invalid_argument for
 * a non-trivial product.
 */
ImprimitiveReport analyze_monodromy(HurwitzTuple const &t, unsigned p);

/// Group generated by the certificate of decide(profile); requires EXISTS with a certificate.
GroupClass monodromy_class_of_certificate(RamProfile const &profile);

} // namespace tamecover

#endif // TAMECOVER_EXISTENCE_H

#ifndef TAMECOVER_PERM_GROUP_H
#define TAMECOVER_PERM_GROUP_H

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "tamecover/perm.h"

/**
 * @file perm_group.h
 * @brief Subgroup analysis for groups given by generators: orbits, block
 * systems, induced actions and a coarse classification.
 */

namespace tamecover
{

class NotTransitiveError : public std::invalid_argument
{
public:
  using std::invalid_argument::invalid_argument;
};

/// An invariant partition of {1..d} into blocks of equal size.
struct BlockSystem
{
  unsigned block_size = 0;

  /// Each block sorted ascending; blocks ordered by their minimal element.
  std::vector<std::vector<unsigned>> blocks;

  unsigned degree() const { return block_size * static_cast<unsigned>(blocks.size()); }
  unsigned block_count() const { return static_cast<unsigned>(blocks.size()); }

  /// 0-based index of the block containing x (1-indexed point).
  unsigned block_of(unsigned x) const;

  bool is_trivial() const { return block_size == 1u || blocks.size() == 1u; }

  friend bool operator==(BlockSystem const &, BlockSystem const &) = default;
  friend auto operator<=>(BlockSystem const &, BlockSystem const &) = default;
};

enum class GroupTag { cyclic, alternating, symmetric, other };

std::string to_string(GroupTag tag);

struct GroupClass
{
  GroupTag tag = GroupTag::other;
  std::uint64_t order = 0;
};

/// Degree bound for classify_group unless the caller passes another.
inline constexpr unsigned default_classify_max_degree = 12u;

/// Orbit of point x (1-indexed) under the generated group, sorted.
std::vector<unsigned> orbit(std::vector<Perm> const &gens, unsigned x);

bool is_transitive(std::vector<Perm> const &gens);

/// Whether every generator maps blocks of `bs` onto blocks.
bool preserves(Perm const &g, BlockSystem const &bs);

/**
 * All block systems of a transitive group, trivial ones included, sorted by
 * (block size, blocks). Each non-trivial candidate is the finest invariant
 * partition in which 1 and some β ≠ 1 share a block.
 */
std::vector<BlockSystem> block_systems(std::vector<Perm> const &gens);

/// The permutation of blocks induced by g, blocks numbered from 1 in block order.
Perm induced_on_blocks(Perm const &g, BlockSystem const &bs);

/// Group order via a Schreier-Sims stabilizer chain.
std::uint64_t group_order(std::vector<Perm> const &gens);

GroupClass classify_group(std::vector<Perm> const &gens,
                          unsigned max_degree = default_classify_max_degree);

} // namespace tamecover

#endif // TAMECOVER_PERM_GROUP_H

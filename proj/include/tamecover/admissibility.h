#ifndef TAMECOVER_ADMISSIBILITY_H
#define TAMECOVER_ADMISSIBILITY_H

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

/**
 * @file admissibility.h
 * @brief Numerical p-admissibility of ramification data, with certificates.
 *
 * Two criteria are implemented. For three points the floor/ceiling system
 * rules out every Frobenius-twisted competitor (m, S); a violation yields an
 * InseparableWitness. When all indices are below p the chain criterion asks
 * for intermediate indices e'_2..e'_{r-2}; success yields a ChainWitness.
 */

namespace tamecover
{

enum class ProfileErrorKind
{
  not_prime,
  too_few_points,
  zero_index,
  wild_index,
  parity,
  triangle,
  index_not_below_p,
};

std::string to_string(ProfileErrorKind kind);

class ProfileError : public std::invalid_argument
{
public:
  ProfileError(ProfileErrorKind kind, std::string const &what)
    : std::invalid_argument(what), kind_(kind) {}

  ProfileErrorKind kind() const { return kind_; }

private:
  ProfileErrorKind kind_;
};

bool is_prime(unsigned n);

/// Characteristic p and ordered ramification indices e_1..e_r.
struct RamProfile
{
  unsigned p = 0;
  std::vector<unsigned> indices;

  unsigned point_count() const { return static_cast<unsigned>(indices.size()); }

  /// Σ(e_i − 1).
  unsigned ramification_sum() const;

  /// Degree of a genus-0 cover: 2d − 2 = Σ(e_i − 1). Throws on odd sum.
  unsigned degree() const;

  bool has_genus_zero_parity() const { return ramification_sum() % 2u == 0u; }
  bool is_tame() const;
  bool all_below_p() const;

  friend bool operator==(RamProfile const &, RamProfile const &) = default;
};

std::string to_string(RamProfile const &profile);

/// Ceilings and floors of e/p^m with their defects.
struct FloorCeilData
{
  unsigned m = 0;
  std::uint64_t p_power = 0;
  unsigned up = 0;        ///< ⌈e/p^m⌉
  unsigned down = 0;      ///< ⌊e/p^m⌋
  std::uint64_t defect_up = 0; ///< p^m·up − e
  unsigned defect_down = 0; ///< e − p^m·down
};

FloorCeilData floor_ceil(unsigned e, unsigned p, unsigned m);

/// A Frobenius-twisted linear series with at least the requested ramification.
struct InseparableWitness
{
  unsigned m = 0;
  std::uint64_t p_power = 0;
  std::vector<unsigned> subset;            ///< 1-based positions in S
  std::vector<unsigned> quotient_indices;  ///< e'_i, one per position
  unsigned quotient_degree = 0;            ///< d^{[m,S]}
  std::vector<unsigned> base_points;       ///< e_i^{[m,d]} for i in subset, same order

  friend bool operator==(InseparableWitness const &, InseparableWitness const &) = default;
};

/// Intermediate indices e'_1..e'_{r-1}, with e'_1 = e_1 and e'_{r-1} = e_r.
struct ChainWitness
{
  std::vector<unsigned> primed;

  friend bool operator==(ChainWitness const &, ChainWitness const &) = default;
};

struct ThreePointVerdict
{
  bool admissible = false;
  std::optional<InseparableWitness> witness;
};

struct ChainVerdict
{
  bool admissible = false;
  std::optional<ChainWitness> witness;
  /// Longest feasible prefix e'_1..e'_k found before the search gave up.
  std::vector<unsigned> longest_prefix;
};

/**
 * Three-point floor/ceiling criterion. On failure the witness is the first
 * violating (m, S), scanning m upwards and S in binary order (bit i-1 for
 * position i). Throws ProfileError on wild indices, even Σe_i or e_i > d.
 */
ThreePointVerdict admissible_3pt(RamProfile const &profile);

/// The same verdict via the degree inequality d < p^m·d^{[m,S]} + Σ_S e_i^{[m,d]}.
bool admissible_3pt_reformulated(RamProfile const &profile);

/// Chain criterion for e_i < p; returns the lexicographically smallest witness.
ChainVerdict admissible_chain(RamProfile const &profile);

bool satisfies_invariants(InseparableWitness const &w, RamProfile const &profile);
bool satisfies_invariants(ChainWitness const &w, RamProfile const &profile);

enum class Admissibility { admissible, not_admissible, out_of_scope, wild };

std::string to_string(Admissibility a);

enum class Criterion { three_point, chain, none };

std::string to_string(Criterion c);

struct AdmissibilityVerdict
{
  Admissibility status = Admissibility::out_of_scope;
  Criterion criterion = Criterion::none;
  std::optional<InseparableWitness> inseparable;
  std::optional<ChainWitness> chain;
  std::vector<unsigned> chain_prefix;
};

/**
 * Dispatch: r = 3 uses the three-point criterion, r > 3 with every e_i < p
 * the chain criterion; anything else is out of scope. Wild data (p | e_i)
 * is reported, not decided. Throws ProfileError for r < 3, a non-prime p,
 * a zero index, odd Σ(e_i − 1), or (r = 3) a triangle violation.
 */
AdmissibilityVerdict admissible(RamProfile const &profile);

} // namespace tamecover

#endif // TAMECOVER_ADMISSIBILITY_H

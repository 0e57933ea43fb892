#ifndef TAMECOVER_PERM_H
#define TAMECOVER_PERM_H

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

/**
 * @file perm.h
 * @brief Permutations of {1..d} with cycle-notation I/O.
 */

namespace tamecover
{

/// Thrown by parse_cycles on malformed or inconsistent cycle notation.
class ParseError : public std::invalid_argument
{
public:
  using std::invalid_argument::invalid_argument;
};

/// Multiset of cycle lengths, sorted in descending order, fixed points included.
using CycleType = std::vector<unsigned>;

/**
 * A bijection of {1..d}. Points are 1-indexed in every public accessor; the
 * image table is stored 0-indexed.
 */
class Perm
{
public:
  Perm() = default;

  /// Identity of the given degree.
  explicit Perm(unsigned degree);

  /// From a 1-indexed image table; throws std::invalid_argument unless bijective.
  static Perm from_images(std::vector<unsigned> const &images_one_based);

  /// From explicit disjoint cycles (1-indexed); throws ParseError on overlap.
  Perm(unsigned degree, std::vector<std::vector<unsigned>> const &cycles);

  unsigned degree() const { return static_cast<unsigned>(images_.size()); }

  /// Image of point x (1-indexed).
  unsigned operator[](unsigned x) const { return images_[x - 1u] + 1u; }

  bool is_identity() const;
  Perm inverse() const;

  /// Non-trivial cycles, each starting at its smallest point, ordered by that point.
  std::vector<std::vector<unsigned>> cycles() const;

  /// All cycle lengths including fixed points, descending.
  CycleType cycle_type() const;

  /// Lengths of the non-trivial cycles in the order returned by cycles().
  std::vector<unsigned> cycle_lengths() const;

  /// The identity counts as the single cycle of length 1.
  bool is_single_cycle() const;

  /// Length of a single cycle (1 for the identity); 0 if not a single cycle.
  unsigned single_cycle_length() const;

  bool is_even() const;

  /// Multiplicative order (lcm of cycle lengths).
  std::uint64_t order() const;

  /// Disjoint-cycle notation with space separators; the identity prints as "(1)".
  std::string to_string() const;

  std::vector<unsigned> const &raw_images() const { return images_; }

  friend bool operator==(Perm const &, Perm const &) = default;
  friend std::strong_ordering operator<=>(Perm const &a, Perm const &b)
  { return a.images_ <=> b.images_; }

private:
  friend Perm compose(Perm const &a, Perm const &b);

  std::vector<unsigned> images_;
};

/// Parses disjoint-cycle notation such as "(1 2 3)(4,5)".
Perm parse_cycles(std::string_view text, unsigned degree);

/// Function composition a∘b: b is applied first.
Perm compose(Perm const &a, Perm const &b);

/// Product g_1 ⋯ g_n with g_n applied first; the identity of `degree` when empty.
Perm product(std::vector<Perm> const &perms, unsigned degree);

/// h^{-1} g h.
Perm conjugate(Perm const &g, Perm const &h);

} // namespace tamecover

#endif // TAMECOVER_PERM_H

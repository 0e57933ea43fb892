#ifndef TAMECOVER_HURWITZ_H
#define TAMECOVER_HURWITZ_H

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tamecover/admissibility.h"
#include "tamecover/perm.h"

/**
 * @file hurwitz.h
 * @brief Hurwitz factorizations: validation, braid actions, pure-braid
 * orbits, enumeration up to simultaneous conjugation, and the gluing
 * construction of tuples with prescribed cycle partial products.
 *
 * Products σ_1⋯σ_r apply σ_r first. The identity counts as a cycle of
 * length 1 throughout.
 */

namespace tamecover
{

struct HurwitzTuple
{
  unsigned degree = 0;
  std::vector<Perm> perms;

  unsigned size() const { return static_cast<unsigned>(perms.size()); }

  /// σ_1⋯σ_r.
  Perm product() const;

  /// Concatenated cycle notation when every entry is a single cycle,
  /// otherwise entries joined by ", ".
  std::string to_string() const;

  friend bool operator==(HurwitzTuple const &, HurwitzTuple const &) = default;
  friend auto operator<=>(HurwitzTuple const &a, HurwitzTuple const &b)
  {
    if (auto c = a.degree <=> b.degree; c != 0)
      return c;
    return a.perms <=> b.perms;
  }
};

HurwitzTuple make_tuple(unsigned degree, std::vector<std::string> const &cycles);

struct ExpectedShape
{
  unsigned degree = 0;
  std::vector<unsigned> lengths;
};

struct ValidationReport
{
  bool valid = true;
  std::vector<std::string> diagnostics;

  explicit operator bool() const { return valid; }
};

/// Trivial product, transitivity and, optionally, one cycle of length e_i per entry.
ValidationReport validate(HurwitzTuple const &t,
                          std::optional<ExpectedShape> const &expected = std::nullopt);

enum class BraidDirection { forward, inverse };

struct BraidMove
{
  unsigned position = 1;  ///< i in 1..r-1
  BraidDirection direction = BraidDirection::forward;
};

/// forward at i: (x_i, x_{i+1}) ↦ (x_{i+1}, x_{i+1}^{-1} x_i x_{i+1}).
HurwitzTuple braid_apply(HurwitzTuple const &t, BraidMove move);

struct OrbitOptions
{
  std::size_t max_states = 1'000'000;
  /// Walk the orbit modulo simultaneous conjugation: states are replaced by
  /// their canonical form, so each visited tuple is a canonical representative.
  bool up_to_conjugation = false;
};

/**
 * Breadth-first search over (tuple, position permutation) states under all
 * elementary moves. `visit` sees each tuple whose position permutation is
 * the identity, i.e. each member of the pure-braid orbit, once; returning
 * true stops the search. Throws BoundError past max_states.
 */
void visit_pure_braid_orbit(HurwitzTuple const &t, OrbitOptions const &options,
                            std::function<bool(HurwitzTuple const &)> const &visit);

/// The pure-braid orbit of t, sorted.
std::vector<HurwitzTuple> pure_braid_orbit(HurwitzTuple const &t, OrbitOptions const &options = {});

/**
 * Canonical representative under simultaneous conjugation. For transitive
 * tuples the candidates are the d relabelings obtained by breadth-first
 * traversal from each start point; the smallest image table wins.
 */
HurwitzTuple canonical_form(HurwitzTuple const &t);

struct EnumerateOptions
{
  unsigned max_degree = 6;
  unsigned max_points = 5;
};

/// Canonical representatives of all Hurwitz factorizations with single-cycle entries.
std::vector<HurwitzTuple> enumerate_classes(unsigned degree, std::vector<unsigned> const &lengths,
                                            EnumerateOptions const &options = {});

/// Some three-point factorization for (a, b, c); throws BoundError past degree 10.
HurwitzTuple three_point_tuple(unsigned a, unsigned b, unsigned c);

/**
 * Builds a tuple whose partial products σ_1⋯σ_m are cycles of length e'_m,
 * by gluing a three-point factorization onto the recursively built prefix.
 */
HurwitzTuple construct(unsigned p, std::vector<unsigned> const &lengths, ChainWitness const &chain);

/// Lengths of σ_1⋯σ_m for m = 1..r, 0 where the partial product is not a single cycle.
std::vector<unsigned> partial_product_lengths(HurwitzTuple const &t);

/// Every partial product σ_1⋯σ_m with m ≤ r is a single cycle.
bool has_cycle_partial_products(HurwitzTuple const &t);

/// Partial products σ''_1..σ''_{r-1} are cycles and consecutive length triples sum below 2p.
bool satisfies_partial_product_condition(HurwitzTuple const &t, unsigned p);

enum class AdmissibilityMode { numerical_fastpath, orbit_search };

bool is_p_admissible_tuple(HurwitzTuple const &t, unsigned p, AdmissibilityMode mode,
                           OrbitOptions const &options = {});

struct SingleOrbitReport
{
  bool single_orbit = false;
  std::size_t class_count = 0;
  std::size_t classes_reached = 0;
  std::size_t raw_orbit_size = 0;  ///< tuples in the orbit before conjugation quotient
};

SingleOrbitReport single_orbit_check(unsigned degree, std::vector<unsigned> const &lengths,
                                     EnumerateOptions const &enumerate_options = {},
                                     OrbitOptions const &orbit_options = {});

/// A pure-braid transform of t with all partial products cycles (t itself if it qualifies).
std::optional<HurwitzTuple> cycle_partial_normalform(HurwitzTuple const &t,
                                                     OrbitOptions const &options = {});

/// "d=<int>" on the first line, then one permutation per line.
HurwitzTuple parse_tuple_file(std::string_view text);
std::string format_tuple_file(HurwitzTuple const &t);

} // namespace tamecover

#endif // TAMECOVER_HURWITZ_H

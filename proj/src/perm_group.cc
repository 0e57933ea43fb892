#include <algorithm>
#include <deque>
#include <numeric>
#include <optional>
#include <set>

#include "tamecover/errors.h"
#include "tamecover/perm_group.h"

namespace tamecover
{

namespace
{

unsigned common_degree(std::vector<Perm> const &gens)
{
  if (gens.empty())
    throw std::invalid_argument("empty generator list");

  unsigned const d = gens.front().degree();
  for (auto const &g : gens) {
    if (g.degree() != d)
      throw std::invalid_argument("generators of different degree");
  }
  return d;
}

class UnionFind
{
public:
  explicit UnionFind(unsigned n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0u); }

  unsigned find(unsigned x)
  {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(unsigned a, unsigned b)
  {
    a = find(a);
    b = find(b);
    if (a == b)
      return false;
    if (b < a)
      std::swap(a, b);
    parent_[b] = a;
    return true;
  }

private:
  std::vector<unsigned> parent_;
};

// Finest invariant partition with 0 and beta (0-indexed) in one block.
std::vector<std::vector<unsigned>> minimal_block_partition(std::vector<Perm> const &gens,
                                                           unsigned d, unsigned beta)
{
  UnionFind uf(d);
  std::deque<std::pair<unsigned, unsigned>> pending;

  uf.unite(0u, beta);
  pending.emplace_back(0u, beta);

  while (!pending.empty()) {
    auto const [a, b] = pending.front();
    pending.pop_front();
    for (auto const &g : gens) {
      unsigned const ga = g.raw_images()[a];
      unsigned const gb = g.raw_images()[b];
      if (uf.unite(ga, gb))
        pending.emplace_back(ga, gb);
    }
  }

  std::vector<std::vector<unsigned>> by_root(d);
  for (unsigned x = 0; x < d; ++x)
    by_root[uf.find(x)].push_back(x + 1u);

  std::vector<std::vector<unsigned>> blocks;
  for (auto &b : by_root) {
    if (!b.empty())
      blocks.push_back(std::move(b));
  }
  std::sort(blocks.begin(), blocks.end());
  return blocks;
}

BlockSystem make_system(std::vector<std::vector<unsigned>> blocks)
{
  BlockSystem bs;
  bs.block_size = static_cast<unsigned>(blocks.front().size());
  bs.blocks = std::move(blocks);
  return bs;
}

class StabilizerChain
{
public:
  explicit StabilizerChain(unsigned degree) : degree_(degree) {}

  void add_generator(std::size_t level, Perm const &g)
  {
    if (level == levels_.size())
      levels_.push_back(Level{first_moved_point(g), {}, {}, {}});

    levels_[level].gens.push_back(g);
    rebuild_orbit(level);

    // Levels above `level` are untouched by the recursion, so indices stay valid.
    for (std::size_t oi = 0; oi < levels_[level].orbit.size(); ++oi) {
      for (std::size_t si = 0; si < levels_[level].gens.size(); ++si) {
        Level const &lv = levels_[level];
        unsigned const beta = lv.orbit[oi];
        Perm const &s = lv.gens[si];
        unsigned const gamma = s.raw_images()[beta];

        Perm schreier = compose(lv.transversal[gamma]->inverse(),
                                compose(s, *lv.transversal[beta]));

        Perm residue = sift(schreier, level + 1u);
        if (!residue.is_identity())
          add_generator(level + 1u, residue);
      }
    }
  }

  std::uint64_t order() const
  {
    std::uint64_t result = 1;
    for (auto const &lv : levels_)
      result *= lv.orbit.size();
    return result;
  }

private:
  struct Level
  {
    unsigned base;
    std::vector<Perm> gens;
    std::vector<unsigned> orbit;
    std::vector<std::optional<Perm>> transversal;
  };

  static unsigned first_moved_point(Perm const &g)
  {
    auto const &img = g.raw_images();
    for (unsigned x = 0; x < img.size(); ++x) {
      if (img[x] != x)
        return x;
    }
    throw std::logic_error("identity passed as strong generator");
  }

  void rebuild_orbit(std::size_t level)
  {
    Level &lv = levels_[level];
    lv.orbit.assign(1u, lv.base);
    lv.transversal.assign(degree_, std::nullopt);
    lv.transversal[lv.base] = Perm(degree_);

    for (std::size_t i = 0; i < lv.orbit.size(); ++i) {
      unsigned const beta = lv.orbit[i];
      for (auto const &s : lv.gens) {
        unsigned const gamma = s.raw_images()[beta];
        if (!lv.transversal[gamma]) {
          lv.transversal[gamma] = compose(s, *lv.transversal[beta]);
          lv.orbit.push_back(gamma);
        }
      }
    }
  }

  Perm sift(Perm h, std::size_t from) const
  {
    for (std::size_t j = from; j < levels_.size(); ++j) {
      Level const &lv = levels_[j];
      unsigned const beta = h.raw_images()[lv.base];
      if (!lv.transversal[beta])
        return h;
      h = compose(lv.transversal[beta]->inverse(), h);
    }
    return h;
  }

  unsigned degree_;
  std::vector<Level> levels_;
};

std::uint64_t factorial(unsigned n)
{
  std::uint64_t result = 1;
  for (unsigned i = 2; i <= n; ++i)
    result *= i;
  return result;
}

// Whether the group (of the given small order) contains a d-cycle.
bool contains_full_cycle(std::vector<Perm> const &gens, unsigned d)
{
  std::set<Perm> elements{Perm(d)};
  std::deque<Perm> frontier{Perm(d)};

  while (!frontier.empty()) {
    Perm const x = frontier.front();
    frontier.pop_front();
    if (x.single_cycle_length() == d)
      return true;
    for (auto const &g : gens) {
      Perm y = compose(g, x);
      if (elements.insert(y).second)
        frontier.push_back(std::move(y));
    }
  }
  return false;
}

} // anonymous namespace

unsigned BlockSystem::block_of(unsigned x) const
{
  for (unsigned i = 0; i < blocks.size(); ++i) {
    if (std::binary_search(blocks[i].begin(), blocks[i].end(), x))
      return i;
  }
  throw std::out_of_range("point not covered by block system");
}

std::string to_string(GroupTag tag)
{
  switch (tag) {
  case GroupTag::cyclic:
    return "cyclic";
  case GroupTag::alternating:
    return "alternating";
  case GroupTag::symmetric:
    return "symmetric";
  case GroupTag::other:
    break;
  }
  return "other";
}

std::vector<unsigned> orbit(std::vector<Perm> const &gens, unsigned x)
{
  unsigned const d = common_degree(gens);
  if (x < 1u || x > d)
    throw std::out_of_range("orbit point out of range");

  std::vector<bool> seen(d, false);
  std::vector<unsigned> result{x - 1u};
  seen[x - 1u] = true;

  for (std::size_t i = 0; i < result.size(); ++i) {
    for (auto const &g : gens) {
      unsigned const y = g.raw_images()[result[i]];
      if (!seen[y]) {
        seen[y] = true;
        result.push_back(y);
      }
    }
  }

  for (auto &y : result)
    ++y;
  std::sort(result.begin(), result.end());
  return result;
}

bool is_transitive(std::vector<Perm> const &gens)
{
  unsigned const d = common_degree(gens);
  return orbit(gens, 1u).size() == d;
}

bool preserves(Perm const &g, BlockSystem const &bs)
{
  if (g.degree() != bs.degree())
    return false;

  for (auto const &block : bs.blocks) {
    unsigned const target = bs.block_of(g[block.front()]);
    for (unsigned x : block) {
      if (bs.block_of(g[x]) != target)
        return false;
    }
  }
  return true;
}

std::vector<BlockSystem> block_systems(std::vector<Perm> const &gens)
{
  unsigned const d = common_degree(gens);
  if (!is_transitive(gens))
    throw NotTransitiveError("block systems require a transitive group");

  std::set<BlockSystem> found;

  std::vector<std::vector<unsigned>> singletons;
  for (unsigned x = 1; x <= d; ++x)
    singletons.push_back({x});
  found.insert(make_system(std::move(singletons)));

  std::vector<unsigned> everything(d);
  std::iota(everything.begin(), everything.end(), 1u);
  found.insert(make_system({everything}));

  for (unsigned beta = 1; beta < d; ++beta)
    found.insert(make_system(minimal_block_partition(gens, d, beta)));

  return {found.begin(), found.end()};
}

Perm induced_on_blocks(Perm const &g, BlockSystem const &bs)
{
  if (!preserves(g, bs))
    throw std::invalid_argument("permutation does not preserve the block system");

  std::vector<unsigned> images;
  images.reserve(bs.block_count());
  for (auto const &block : bs.blocks)
    images.push_back(bs.block_of(g[block.front()]) + 1u);
  return Perm::from_images(images);
}

std::uint64_t group_order(std::vector<Perm> const &gens)
{
  unsigned const d = common_degree(gens);
  StabilizerChain chain(d);
  for (auto const &g : gens) {
    if (!g.is_identity())
      chain.add_generator(0u, g);
  }
  return chain.order();
}

GroupClass classify_group(std::vector<Perm> const &gens, unsigned max_degree)
{
  unsigned const d = common_degree(gens);
  if (d > max_degree)
    throw BoundError("classify_group: degree " + std::to_string(d) + " exceeds bound "
                     + std::to_string(max_degree));
  if (!is_transitive(gens))
    throw NotTransitiveError("classify_group requires a transitive group");

  GroupClass result;
  result.order = group_order(gens);

  bool const all_even = std::all_of(gens.begin(), gens.end(),
                                    [](Perm const &g) { return g.is_even(); });

  // Small degrees overlap: S_2 is cyclic and A_3 is cyclic. Symmetric wins,
  // then cyclic, then alternating.
  if (result.order == factorial(d))
    result.tag = GroupTag::symmetric;
  else if (result.order == d && contains_full_cycle(gens, d))
    result.tag = GroupTag::cyclic;
  else if (result.order == factorial(d) / 2u && all_even)
    result.tag = GroupTag::alternating;
  else
    result.tag = GroupTag::other;

  return result;
}

} // namespace tamecover

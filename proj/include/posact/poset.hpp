#ifndef POSACT_POSET_HPP_
#define POSACT_POSET_HPP_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace posact {

// A finite poset on elements 0..size-1 with the full order relation stored as
// a size x size boolean matrix.  Immutable after validation.
struct Poset {
  int                  size = 0;
  std::vector<uint8_t> leq;  // row-major, leq[i * size + j] <=> i <= j

  bool le(int i, int j) const { return leq[i * size + j] != 0; }

  bool operator==(Poset const& that) const = default;
};

// Validates reflexivity, antisymmetry and transitivity.
// Throws ValidationError: NotReflexive(i), NotAntisymmetric(i,j),
// NotTransitive(i,j,k).
Poset make_poset(int size, std::vector<uint8_t> leq);

// Reflexive-transitive closure of the generating pairs; throws
// ClosureNotAntisymmetric(i,j) if the closure identifies distinct elements.
Poset order_closure(std::vector<std::pair<int, int>> const& pairs, int size);

Poset discrete_poset(int size);
Poset chain_poset(int size);

// Pairs of the transitive reduction (covers), lexicographically sorted.
std::vector<std::pair<int, int>> transitive_reduction(Poset const& p);

// All down-closed subsets as bitmasks, generated along a linear extension;
// sorted ascending.  Requires size <= 30.
std::vector<uint32_t> down_sets(Poset const& p);

// Down-closure of a subset mask.
uint32_t down_closure(Poset const& p, uint32_t mask);

// A linear extension: a permutation ord with ord[k] listed bottom-up.
std::vector<int> linear_extension(Poset const& p);

// True iff nonempty, bounded, and every pair has a join and a meet (for a
// finite poset this is equivalent to completeness).
bool is_complete_lattice(Poset const& p);

// Induced sub-poset on the listed elements (kept in the given index order).
Poset sub_poset(Poset const& p, std::vector<int> const& elems);

// Monotone maps p -> q as value tables, in lexicographic order.
std::vector<std::vector<int>> monotone_maps(Poset const& p, Poset const& q);

// Some order-isomorphism p -> q, or empty if none.
std::vector<int> find_poset_isomorphism(Poset const& p, Poset const& q);

// All order-automorphisms of p.
std::vector<std::vector<int>> poset_automorphisms(Poset const& p);

}  // namespace posact
#endif  // POSACT_POSET_HPP_

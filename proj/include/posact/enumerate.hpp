#ifndef POSACT_ENUMERATE_HPP_
#define POSACT_ENUMERATE_HPP_

#include <optional>
#include <string>
#include <vector>

#include "posact/maps.hpp"
#include "posact/pomonoid.hpp"
#include "posact/sposet.hpp"

namespace posact {

struct EnumOptions {
  std::optional<std::string> cache_dir;  // nullopt = no cache
  Budget*                    budget = nullptr;
};

// All associative unital multiplication tables on n elements with identity 0,
// one per isomorphism class (lex-least under permutations fixing 0),
// in lexicographic order.
std::vector<std::vector<int>> enumerate_monoids(int n,
                                                EnumOptions const& = {});

// All partial orders on n elements, one per order-isomorphism class,
// canonical (lex-least matrix) and lexicographically ordered.
std::vector<Poset> enumerate_posets(int n, EnumOptions const& = {});

// All partial orders on the monoid's carrier compatible with its
// multiplication, up to monoid automorphism.
std::vector<Poset> enumerate_compatible_orders(std::vector<int> const& mult,
                                               int identity, int n);

// All pomonoids of order exactly n up to pomonoid isomorphism.
std::vector<PomonoidPtr> enumerate_pomonoids(int n, EnumOptions const& = {});
// Orders 1..n concatenated.
std::vector<PomonoidPtr> enumerate_pomonoids_up_to(int n,
                                                   EnumOptions const& = {});

// All right S-posets with 1..k elements up to S-poset isomorphism,
// deterministic order.
std::vector<SPosetPtr> enumerate_sposets(PomonoidPtr const& s, int k,
                                         EnumOptions const& = {});

// Canonical-form helpers (exposed for tests).
std::vector<int> canonical_monoid_table(std::vector<int> const& mult, int n);
std::vector<uint8_t> canonical_poset_matrix(Poset const& p);

}  // namespace posact
#endif  // POSACT_ENUMERATE_HPP_

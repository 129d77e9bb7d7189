#ifndef POSACT_MAPS_HPP_
#define POSACT_MAPS_HPP_

#include <optional>
#include <vector>

#include "posact/sposet.hpp"

namespace posact {

// Node budget shared across a search; tick() throws BudgetExceeded.
struct Budget {
  long long limit = -1;  // -1 = unlimited
  long long used  = 0;
  void      tick();
};

// All S-poset maps A -> B, backtracking in element order with values tried
// ascending, so the result is in lexicographic order of the value table and
// deterministic.  `allowed`, when non-null, restricts the candidate values
// per domain element (used for sections and lifting problems).
std::vector<SPosetMap> enumerate_maps(
    SPosetPtr const& a, SPosetPtr const& b,
    std::vector<std::vector<int>> const* allowed = nullptr,
    Budget* budget = nullptr);

// First map in the same order, or nullopt.
std::optional<SPosetMap> find_map(
    SPosetPtr const& a, SPosetPtr const& b,
    std::vector<std::vector<int>> const* allowed = nullptr,
    Budget* budget = nullptr);

// First *surjective* map in enumeration order, or nullopt.
std::optional<SPosetMap> find_epimorphism(SPosetPtr const& a,
                                          SPosetPtr const& b,
                                          Budget* budget = nullptr);

}  // namespace posact
#endif  // POSACT_MAPS_HPP_

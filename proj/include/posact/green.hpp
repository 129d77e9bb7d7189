#ifndef POSACT_GREEN_HPP_
#define POSACT_GREEN_HPP_

#include <cstdint>
#include <vector>

#include "posact/pomonoid.hpp"

namespace posact {

enum class GreenRel { R, J, D };
enum class Side { left, right };

// A one-sided poideal: down-closed subset absorbing the monoid action on the
// given side.  Stored as a sorted index list.
struct IdealSet {
  std::vector<int> carrier;
  Side             side;
  bool             down_closed = true;
};

std::vector<int> idempotents(Pomonoid const& s);

// sS / Ss / SsS as sorted element lists, computed by closure iteration.
std::vector<int> right_ideal(Pomonoid const& s, int x);
std::vector<int> left_ideal(Pomonoid const& s, int x);
std::vector<int> two_sided_ideal(Pomonoid const& s, int x);

// R: sS=tS; J: SsS=StS; D: exists u with sS=uS and St=Su (implemented
// verbatim; symmetry is a tested property, not an assumption).
bool green_related(Pomonoid const& s, GreenRel rel, int a, int b);

bool is_regular_element(Pomonoid const& s, int x);
bool is_regular_pomonoid(Pomonoid const& s);

// The principal right poideal down(xS) = { t : exists u, t <= x.u }.
IdealSet principal_right_poideal(Pomonoid const& s, int x);

// All poideals of the given side, canonically sorted (by size, then
// lexicographically).  Includes the empty set and S.
std::vector<IdealSet> enumerate_poideals(Pomonoid const& s, Side side);

bool is_left_simple(Pomonoid const& s);
bool is_right_simple(Pomonoid const& s);

// Equivalence classes of a Green relation, each sorted, ordered by least
// element.
std::vector<std::vector<int>> green_classes(Pomonoid const& s, GreenRel rel);

}  // namespace posact
#endif  // POSACT_GREEN_HPP_

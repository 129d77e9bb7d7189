#ifndef POSACT_POMONOID_HPP_
#define POSACT_POMONOID_HPP_

#include <memory>
#include <string>
#include <vector>

#include "posact/poset.hpp"

namespace posact {

// A finite pomonoid: monoid multiplication table + compatible partial order.
struct Pomonoid {
  Poset            poset;
  std::vector<int> mult;  // size x size, row-major
  int              identity = 0;
  std::string      name;        // optional, used by serialization
  std::vector<std::string> elements;  // optional element labels
  std::string      provenance;  // optional, recorded by constructions

  int  size() const { return poset.size; }
  int  mul(int s, int t) const { return mult[s * size() + t]; }
  bool le(int s, int t) const { return poset.le(s, t); }

  bool operator==(Pomonoid const& that) const {
    return poset == that.poset && mult == that.mult
           && identity == that.identity;
  }

  std::string label(int s) const {
    if (s < static_cast<int>(elements.size())) {
      return elements[s];
    }
    return std::to_string(s);
  }
};

using PomonoidPtr = std::shared_ptr<const Pomonoid>;

// Checks monoid axioms, poset axioms, and order-compatibility of the
// multiplication.  Throws NotAssociative(s,t,u), NotUnit(s),
// NotCompatible(s,t,s',t') or a poset validation error.
PomonoidPtr make_pomonoid(Poset poset, std::vector<int> mult, int identity,
                          std::string name = "");

// No validation; for constructions that are correct by construction.
PomonoidPtr make_pomonoid_unchecked(Poset poset, std::vector<int> mult,
                                    int identity, std::string name = "");

// Re-runs the validator on an existing value.
void validate_pomonoid(Pomonoid const& s);

// Same carrier and order, reversed multiplication.  Involutive.
PomonoidPtr opposite(PomonoidPtr const& s);

bool is_commutative(Pomonoid const& s);

// Monoid automorphisms of s that also preserve the order (pomonoid
// automorphisms).
std::vector<std::vector<int>> pomonoid_automorphisms(Pomonoid const& s);

PomonoidPtr trivial_pomonoid();

}  // namespace posact
#endif  // POSACT_POMONOID_HPP_

#ifndef POSACT_SPOSET_HPP_
#define POSACT_SPOSET_HPP_

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "posact/pomonoid.hpp"
#include "posact/poset.hpp"

namespace posact {

// A right S-poset: a poset with a monotone unital associative right action.
struct SPoset {
  Poset            poset;
  PomonoidPtr      over;
  std::vector<int> act;  // size x |S|, act[a * |S| + s] = a.s
  std::string      name;
  std::vector<std::string> elements;
  std::string      provenance;

  int  size() const { return poset.size; }
  int  act_of(int a, int s) const { return act[a * over->size() + s]; }
  bool le(int a, int b) const { return poset.le(a, b); }

  std::string label(int a) const {
    if (a < static_cast<int>(elements.size())) {
      return elements[a];
    }
    return std::to_string(a);
  }
};

using SPosetPtr = std::shared_ptr<const SPoset>;

// Structural equality (the pomonoids are compared by value).
bool same_sposet(SPoset const& a, SPoset const& b);

// Throws ActionNotUnital(a), ActionNotAssociative(a,s,t),
// ActionNotMonotone(side,witness...) where side 0 = element argument,
// side 1 = scalar argument.
SPosetPtr make_sposet(Poset poset, PomonoidPtr over, std::vector<int> act,
                      std::string name = "");
SPosetPtr make_sposet_unchecked(Poset poset, PomonoidPtr over,
                                std::vector<int> act, std::string name = "");
void validate_sposet(SPoset const& a);

// A monotone equivariant map between S-posets over the same pomonoid.
struct SPosetMap {
  SPosetPtr        dom;
  SPosetPtr        cod;
  std::vector<int> table;
  std::string      name;

  int operator()(int a) const { return table[a]; }
};

// Throws OverMismatch, NotMonotone(a,b), NotEquivariant(a,s).
SPosetMap make_map(SPosetPtr dom, SPosetPtr cod, std::vector<int> table,
                   std::string name = "");
void      validate_map(SPosetMap const& f);

// compose(f, g) = g after f; requires f.cod = g.dom (DomainMismatch).
SPosetMap compose(SPosetMap const& f, SPosetMap const& g);
SPosetMap identity_map(SPosetPtr const& a);

bool is_order_embedding(SPosetMap const& f);
bool is_epimorphism(SPosetMap const& f);  // = surjective

// Exhaustive backtracking search for an S-poset isomorphism A -> B, pruned
// by degree fingerprints; deterministic.  Empty optional if none exists.
std::optional<SPosetMap> find_isomorphism(SPosetPtr const& a,
                                          SPosetPtr const& b);

// A T-S-biposet: base right S-poset plus a commuting monotone left T-action.
struct Biposet {
  SPosetPtr        base;
  PomonoidPtr      left_over;
  std::vector<int> lact;  // |T| x size, lact[t * size + a] = t.a

  int lact_of(int t, int a) const { return lact[t * base->size() + a]; }
};

// Checks left unitality/associativity/monotonicity and (ta)s = t(as).
void validate_biposet(Biposet const& b);

// The left-action view as a right module over opposite(T):
// act(a, t) = t.a.  This is how left T-posets are fed to the right-handed
// decision procedures.
SPosetPtr left_view_as_right(Biposet const& b, PomonoidPtr const& t_op);

}  // namespace posact
#endif  // POSACT_SPOSET_HPP_

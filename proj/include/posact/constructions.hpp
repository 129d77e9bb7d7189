#ifndef POSACT_CONSTRUCTIONS_HPP_
#define POSACT_CONSTRUCTIONS_HPP_

#include <string>
#include <vector>

#include "posact/maps.hpp"
#include "posact/sposet.hpp"

namespace posact {

// S acting on itself: carrier = S, action = multiplication.
SPosetPtr regular_representation(PomonoidPtr const& s);

// The cyclic sub-S-poset aS = {a.s : s in S} with restricted order, no
// down-closure.  Elements are listed in increasing carrier index; also
// returns the carrier through `carrier_out` when non-null.
SPosetPtr cyclic_sub(SPosetPtr const& a, int x,
                     std::vector<int>* carrier_out = nullptr);

// Sub-S-poset on the down-closure of an act-closed subset.  Throws
// NotActClosed if the down-closure fails to be act-closed.
SPosetPtr down_closed_sub(SPosetPtr const& a, std::vector<int> const& subset,
                          std::vector<int>* carrier_out = nullptr);

// down(eS) as a sub-S-poset of S_S.
SPosetPtr principal_poideal_sposet(PomonoidPtr const& s, int x,
                                   std::vector<int>* carrier_out = nullptr);

// P x S with componentwise order and action (p,s).t = (p,st).
// Element (p,s) has index p*|S| + s; tau(p) = (p, 1).
SPosetPtr free_sposet(PomonoidPtr const& s, Poset const& p);

// Componentwise product; (a,b) has index a*|B| + b.
SPosetPtr product(SPosetPtr const& a, SPosetPtr const& b);
SPosetMap product_projection(SPosetPtr const& prod, SPosetPtr const& a,
                             SPosetPtr const& b, int which);
// The pairing <f,g> : C -> A x B.
SPosetMap product_pairing(SPosetPtr const& prod, SPosetMap const& f,
                          SPosetMap const& g);

// Disjoint union, no cross order; A occupies indices 0..|A|-1.
SPosetPtr coproduct(SPosetPtr const& a, SPosetPtr const& b);
SPosetMap coproduct_injection(SPosetPtr const& cop, SPosetPtr const& a,
                              SPosetPtr const& b, int which);

// a.s = a for all s.
SPosetPtr trivial_sposet(PomonoidPtr const& s, Poset const& p);

// End(A_S): all S-poset endomaps of A under composition (mult(f,g) = f o g,
// matching the left action f.a = f(a)) with pointwise order.  Elements are
// indexed by their value table in lexicographic order.
struct EndStructure {
  PomonoidPtr            mon;
  std::vector<SPosetMap> maps;  // maps[i] is element i

  int index_of(std::vector<int> const& table) const;
};

EndStructure end_pomonoid(SPosetPtr const& a);

// Pos_S(B, A) with pointwise order, as an End(A)-End(B)-biposet:
// left End(A) acts by postcomposition, right End(B) by precomposition.
struct HomStructure {
  std::vector<SPosetMap> maps;   // elements, lexicographic by table
  Poset                  order;  // pointwise
  EndStructure           end_dom;  // End(B)
  EndStructure           end_cod;  // End(A)
  SPosetPtr              right_over_end_dom;   // action u.t = u o t
  SPosetPtr              right_over_end_cod_op;  // action u.t = t o u
  Biposet                biposet;  // base = right_over_end_dom, left End(A)

  int index_of(std::vector<int> const& table) const;
};

HomStructure hom_biposet(SPosetPtr const& b, SPosetPtr const& a);

// The canonical pomonoid homomorphism lambda: T -> End(A_S), t -> (a -> ta),
// for a biposet; returned as the value table T -> End-index.
std::vector<int> canonical_lambda(Biposet const& b, EndStructure const& end_a);

// rho: S -> End(_T A) for a biposet, with End(_T A) represented as the End
// pomonoid of the left action viewed as a right module over opposite(T),
// taken with *reversed* composition (maps written on the right).
struct RhoResult {
  EndStructure     end_left;  // End of the right-op view, mult f.g = f o g
  PomonoidPtr      end_left_op;  // the pomonoid rho maps into
  std::vector<int> table;        // S -> End index
};
RhoResult canonical_rho(Biposet const& b);

// h : S -> T given by a value table; true iff h preserves multiplication,
// identity, and order.
bool check_pomonoid_hom(Pomonoid const& s, Pomonoid const& t,
                        std::vector<int> const& table);

}  // namespace posact
#endif  // POSACT_CONSTRUCTIONS_HPP_

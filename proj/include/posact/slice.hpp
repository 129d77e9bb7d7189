#ifndef POSACT_SLICE_HPP_
#define POSACT_SLICE_HPP_

#include <optional>
#include <vector>

#include "posact/decide.hpp"
#include "posact/sposet.hpp"

namespace posact {

// An object of Pos-S/B: an S-poset map with codomain B.
struct SliceObject {
  SPosetMap f;
};

// h : dom f -> dom g with g o h = f.
bool is_slice_morphism(SPosetMap const& h, SPosetMap const& f,
                       SPosetMap const& g);

// First g with f o g = id_cod in enumeration order, or nullopt.
std::optional<SPosetMap> find_section(SPosetMap const& f,
                                      Budget* budget = nullptr);
// All sections, in enumeration order.
std::vector<SPosetMap> find_all_sections(SPosetMap const& f,
                                         Budget* budget = nullptr);
bool is_split_epi(SPosetMap const& f, Budget* budget = nullptr);

// Induced sub-posets f^{-1}(b), one per codomain element (in index order),
// each with its carrier.
struct Fiber {
  int              over_elem;
  Poset            poset;
  std::vector<int> carrier;
};
std::vector<Fiber> fibers(SPosetMap const& f);

// All fibers are complete lattices: a necessary condition for slice
// Emb-injectivity, used as a fast refuter.
bool fibers_complete(SPosetMap const& f);

// Bounded Emb-injectivity of f as an object of Pos-S/B: every square
// (u : U -> dom f, v : V -> cod f) over an embedding h : U -> V with
// |V| <= k and f o u = v o h has a filler s with s o h = u and f o s = v.
// Refuted immediately when f is not split epi or some fiber is not a
// complete lattice (necessary conditions).  U may be empty.
Verdict is_slice_emb_injective_bounded(SPosetMap const& f, int k,
                                       DecideOptions const& = {});

}  // namespace posact
#endif  // POSACT_SLICE_HPP_

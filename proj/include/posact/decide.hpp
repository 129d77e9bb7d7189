#ifndef POSACT_DECIDE_HPP_
#define POSACT_DECIDE_HPP_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "posact/constructions.hpp"
#include "posact/enumerate.hpp"
#include "posact/green.hpp"
#include "posact/maps.hpp"
#include "posact/sposet.hpp"

namespace posact {

enum class Mode { exact, bounded };

// Named maps (and occasionally objects) that replay through the core
// validators; the first witness in canonical enumeration order.
struct Witness {
  std::vector<std::pair<std::string, SPosetMap>> maps;
  std::string                                    note;
};

struct Verdict {
  bool                   value = false;
  Mode                   mode  = Mode::exact;
  int                    bound = 0;
  std::optional<Witness> witness;

  std::string mode_string() const {
    return mode == Mode::exact ? "exact" : "bounded:" + std::to_string(bound);
  }
};

struct DecideOptions {
  Budget* budget = nullptr;
};

// True iff some surjective S-poset map A -> S_S exists; the witness carries
// the epi and the induced section s -> a0.s for a0 in the preimage of 1.
Verdict is_generator(SPosetPtr const& a, DecideOptions const& = {});

// True iff A is a retract of S_S; witness = (pi, gamma) with pi o gamma = id.
Verdict is_cyclic_projective(SPosetPtr const& a, DecideOptions const& = {});

// A = a.S for some a.
bool is_cyclic(SPosetPtr const& a);

// Connected components of (order edges union action edges); A is their
// coproduct.  Each component is returned with its carrier indices.
struct Component {
  SPosetPtr        piece;
  std::vector<int> carrier;
};
std::vector<Component> decompose(SPosetPtr const& a);

// Every component isomorphic to some eS (e idempotent); witness notes the
// idempotents.
Verdict is_projective(SPosetPtr const& a, DecideOptions const& = {});

// Projective and some component's idempotent is J-related to 1.
Verdict is_projective_generator(SPosetPtr const& a, DecideOptions const& = {});

// |S| divides |A| and free_sposet(S, P) ~ A for some poset P with
// |P| = |A|/|S|, P enumerated up to isomorphism.
Verdict is_free(SPosetPtr const& a, DecideOptions const& = {});

enum class DInjScope { principal, all };

// Injectivity w.r.t. embeddings of (principal) right poideals into S_S;
// exact (the quantifier is finite).  On failure the witness records the
// offending poideal and map.
Verdict is_d_injective(SPosetPtr const& a, DInjScope scope,
                       DecideOptions const& = {});

// Injectivity w.r.t. all order-embeddings h : U -> V between S-posets with
// |V| <= k (U may be empty); mode = bounded(k).
Verdict is_emb_injective_bounded(SPosetPtr const& a, int k,
                                 DecideOptions const& = {});

SPosetPtr empty_sposet(PomonoidPtr const& s);

}  // namespace posact
#endif  // POSACT_DECIDE_HPP_

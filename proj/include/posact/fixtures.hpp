#ifndef POSACT_FIXTURES_HPP_
#define POSACT_FIXTURES_HPP_

#include "posact/sposet.hpp"

namespace posact::fixtures {

// The standing examples used in docs and tests.
PomonoidPtr S1();   // trivial pomonoid
PomonoidPtr S2();   // {1, e}, e^2 = e, discrete order
PomonoidPtr S2c();  // S2 with e <= 1
PomonoidPtr Z2();   // {1, x}, x^2 = 1, discrete order
PomonoidPtr RZ3();  // identity + right-zero {a, b}, discrete
PomonoidPtr N3();   // {1, x, 0}, x^2 = 0, discrete

// The diamond X over S2: top fixed, everything else sent to a by e.
SPosetPtr x_diamond();
// The 2-chain 0 < 1 over S2 with trivial action.
SPosetPtr b_chain();
// f : X -> B collapsing {bottom, a, b} to 0; g : B -> X its section.
SPosetMap f_collapse();
SPosetMap g_section();

}  // namespace posact::fixtures
#endif  // POSACT_FIXTURES_HPP_

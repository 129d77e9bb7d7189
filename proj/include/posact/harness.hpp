#ifndef POSACT_HARNESS_HPP_
#define POSACT_HARNESS_HPP_

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "posact/decide.hpp"
#include "posact/enumerate.hpp"

namespace posact {

struct UniverseParams {
  int                        max_order = 4;  // pomonoid order bound
  int                        max_size  = 4;  // S-poset size bound
  int                        bound     = 3;  // embedding bound k
  int                        jobs      = 1;
  long long                  budget    = -1;
  std::optional<std::string> cache_dir;
};

struct VerificationReport {
  std::string id;
  std::string mode;      // exact | bounded:k | ...
  std::string universe;  // human-readable universe description
  long        instances    = 0;
  long        verified     = 0;
  long        inconclusive = 0;
  long        violations   = 0;
  std::vector<std::string> notes;     // header notes (strengthenings etc.)
  std::vector<std::string> witnesses; // serialized violation witnesses

  // Report text per the external format; deterministic.
  std::string format() const;
};

struct TheoremCheck {
  std::string id;
  std::string location;  // where the statement lives in the write-up
  std::string mode;
  std::function<VerificationReport(UniverseParams const&)> run;
};

std::vector<TheoremCheck> const& theorem_registry();

// Runs one registered check; throws UnknownTheoremId (as ValidationError).
VerificationReport verify(std::string const& id, UniverseParams const& params);

// Known counterexample searches; returns a serialized witness or nullopt.
std::optional<std::string> counterexample_search(std::string const& claim_id,
                                                 UniverseParams const& params);
std::vector<std::string> const& claim_ids();

}  // namespace posact
#endif  // POSACT_HARNESS_HPP_

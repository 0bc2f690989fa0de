#pragma once

// Bounded-model refutation for the finite fragment (and, all, some,
// at-least, at-most, fills, one-of, primitive names).  Enumerates finite
// interpretations over a small domain; named individuals map to distinct
// fixed elements (unique names).  Finds an element in low but not in hi, or
// reports none within the search parameters.  It refutes subsumption, never
// confirms it beyond its bounds.

#include <optional>
#include <string>
#include <vector>

#include "dlkb/ast.hpp"

namespace dlkb::oracle {

struct ModelParams {
  int max_anonymous = 3;                  // anonymous elements beside individuals
  long long max_interpretations = 4'000'000;
};

struct Countermodel {
  int domain_size;
  int witness;                       // element index in low but not hi
  std::string rendering;             // human-readable relations/extents
};

// Throws std::invalid_argument when a description leaves the fragment.
std::optional<Countermodel> refute_subsumption(const Description& hi,
                                               const Description& low,
                                               const ModelParams& params = {});

}  // namespace dlkb::oracle

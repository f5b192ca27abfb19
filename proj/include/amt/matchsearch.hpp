#pragma once

#include "amt/morse.hpp"

namespace amt {

// Greedy construction of a valid Morse matching. Candidate edges (those
// with square invertible blocks) are taken in a seed-shuffled order; an
// edge is kept iff both endpoints are still unmatched and reversing it
// keeps the Morse graph acyclic. Deterministic in the seed.
Matching greedy_matching(const BasedComplex& complex, std::uint64_t seed);

}  // namespace amt

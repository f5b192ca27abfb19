#pragma once

#include "amt/hpt.hpp"

namespace amt {

enum class Engine { Gamma, Hpt, Both };

Engine parse_engine(const std::string& token);  // "gamma" | "hpt" | "both"

// Blockwise differences between two reductions of the same complex: reduced
// differentials and the f/g/h maps must be identical. Empty means agreement.
std::vector<std::string> diff_reductions(const ReductionResult& a, const ReductionResult& b);

// Runs the selected engine(s). With Engine::Both the two constructions are
// compared exactly and a ValidationError carrying the diff is thrown on any
// disagreement; the returned result is the direct (Gamma) one with the
// series term count taken from the perturbation run.
ReductionResult run_reduction(const BasedComplex& complex, const Matching& m, Engine engine,
                              std::optional<std::size_t> max_iterations = std::nullopt);

}  // namespace amt

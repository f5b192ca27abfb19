#pragma once

#include "amt/morse.hpp"

namespace amt {

// All path-sum maps out of one source cell: for each target b reachable in
// the Morse graph, the matrix of Gamma_{b,a}; the source itself carries the
// identity (empty path). Unreachable targets are absent (zero).
struct GammaTable {
    std::string source;
    std::map<std::string, Matrix> targets;
};

// Path sums by forward dynamic programming along a topological order of the
// Morse graph: each plain edge s -> t contributes d_{t,s}, each reversed
// matched edge contributes -d^{-1}, and path composites are accumulated per
// vertex, never by path enumeration.
GammaTable gamma_from(const BasedComplex& complex, const Matching& m, const MatchedInverse& inv,
                      const std::string& source);

// Literal path enumeration over the Morse graph; test oracle for gamma_from
// on small complexes. Returns nullopt for a zero/unreachable target and
// throws if more than `path_cap` paths would be enumerated.
std::optional<Matrix> gamma_bruteforce(const BasedComplex& complex, const Matching& m,
                                       const std::string& source, const std::string& target,
                                       std::size_t path_cap = 1000000);

struct ReductionStats {
    std::size_t cells_before = 0;
    std::size_t cells_after = 0;
    std::size_t graph_edges = 0;
    std::size_t matching_size = 0;
    std::size_t series_terms = 0;  // perturbation engine only; 0 for the direct engine
};

// A reduction of a complex onto its critical cells, together with the
// contraction maps f: C -> C^M, g: C^M -> C, and the homotopy h: C -> C.
struct ReductionResult {
    BasedComplex reduced;
    BlockMap f{0};
    BlockMap g{0};
    BlockMap h{+1};
    Matching matching;
    ReductionStats stats;
};

// Direct construction of the reduced complex and transfer maps from the
// Gamma path sums: the reduced differential collects Gamma between critical
// cells one degree apart, f targets critical cells of the same degree,
// g starts from critical cells, and h targets one degree up.
ReductionResult reduce_direct(const BasedComplex& complex, const Matching& m);

}  // namespace amt

#pragma once

#include "amt/gamma.hpp"
#include "amt/morse.hpp"

namespace amt {

// A contraction (strong deformation retract) of chain complexes: chain maps
// f: big -> small and g: small -> big with a degree +1 homotopy h on big,
// satisfying fg = 1, gf = 1 + dh + hd, fh = 0, hg = 0, h^2 = 0.
struct Contraction {
    BasedComplex big;
    BasedComplex small;
    BlockMap f{0};
    BlockMap g{0};
    BlockMap h{+1};
};

// Iteration cap for the perturbation series; when a reduction is driven by a
// matching, the default is longest_path_length(Morse graph) + 1.
struct SeriesBound {
    std::size_t max_iterations = 1;
};

struct PerturbResult {
    Contraction contraction;
    BlockMap small_perturbation{-1};  // t' transferred to the small complex
    std::size_t terms_used = 0;       // nonzero series terms accumulated
};

// Splits the differential along the matching: the first map collects exactly
// the matched components, the second the remaining ones; they add to d.
std::pair<BlockMap, BlockMap> split_differential(const BasedComplex& complex, const Matching& m);

// The trivial retract of the matched part of the differential: big is the
// complex carrying only the matched components, small is the critical cells
// with zero differential, f is the projection, g the inclusion, and h the
// negated matched inverses. All five identities are verified before
// returning.
Contraction trivial_morse_contraction(const BasedComplex& complex, const Matching& m,
                                      const MatchedInverse& inv);

// The Brown-Gugenheim perturbation lemma with the series S = sum t(ht)^n
// evaluated as whole block maps until a term vanishes identically. Returns
// the contraction between the perturbed complexes, with
//   f' = f + fSh,  g' = g + hSg,  h' = h + hSh,  t' = fSg.
// Throws if the series does not vanish within the bound, and verifies the
// result exactly before returning.
PerturbResult perturb(const Contraction& c, const BlockMap& t, SeriesBound bound);

// Nonzero blocks of (d + t)^2; empty iff t is a perturbation of the complex.
std::vector<DSquaredViolation> check_perturbation(const BasedComplex& complex, const BlockMap& t);

// Full Morse reduction through the perturbation lemma: perturbs the trivial
// contraction by t = d - d~ and repackages the result. Produces exactly the
// same maps as reduce_direct; the acceptance suite asserts that equality.
ReductionResult reduce_hpt(const BasedComplex& complex, const Matching& m,
                           std::optional<std::size_t> max_iterations = std::nullopt);

}  // namespace amt

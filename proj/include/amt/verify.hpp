#pragma once

#include "amt/hpt.hpp"

namespace amt {

struct BlockEntryFailure {
    std::string src, tgt;
    std::size_t row = 0, col = 0;
    Scalar value;

    bool operator==(const BlockEntryFailure&) const = default;
};

struct IdentityCheck {
    std::string name;
    std::vector<BlockEntryFailure> failures;

    bool passed() const { return failures.empty(); }
};

// Results of the nine contraction checks, in fixed order: fg = 1,
// gf = 1 + dh + hd, fh = 0, hg = 0, h^2 = 0, f chain map, g chain map,
// d_big^2 = 0, d_small^2 = 0.
struct IdentityReport {
    std::vector<IdentityCheck> checks;

    bool passed() const;
    std::string summary() const;  // one line per check
};

IdentityReport verify_contraction(const Contraction& c);

// Smith invariants d_1 | d_2 | ... of an integer matrix as nonnegative
// integers, padded with zeros to min(rows, cols). Row/column reduction with
// magnitude-minimizing pivots.
std::vector<Int> smith_normal_form(const Matrix& mat);

struct DegreeHomology {
    std::size_t betti = 0;
    std::vector<Int> torsion;  // invariant factors > 1, each dividing the next

    bool operator==(const DegreeHomology&) const = default;
};

// Degrees with nonzero homology only; absent degrees are zero.
using HomologyProfile = std::map<int, DegreeHomology>;

// Per-degree Betti numbers (and torsion over Z, via Smith normal form) of
// the assembled boundary matrices in the fixed (degree, id) cell order.
HomologyProfile homology(const BasedComplex& complex);

// Degreewise equality of homology profiles; throws on ring mismatch.
bool compare_homology(const BasedComplex& a, const BasedComplex& b);

std::string format_homology(const RingSpec& ring, const HomologyProfile& profile);

}  // namespace amt

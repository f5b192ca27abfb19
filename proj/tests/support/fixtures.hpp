#pragma once

// Shared fixtures and small helpers for the test suites. All fixtures are
// hand-checked complexes from the standard examples: the interval, the
// triangle boundary (circle), the full 2-simplex, the boundary of the
// 3-simplex (2-sphere), the 6-vertex projective plane, and the 7-vertex
// torus.

#include <initializer_list>
#include <string>
#include <vector>

#include "amt/complex.hpp"
#include "amt/io.hpp"
#include "amt/morse.hpp"

namespace amt::testing {

inline Matrix mat(const Ring& ring, std::initializer_list<std::initializer_list<long long>> rows) {
    Matrix m(rows.size(), rows.begin()->size());
    std::size_t i = 0;
    for (const auto& row : rows) {
        std::size_t j = 0;
        for (long long v : row) m.at(i, j++) = ring.from_int(v);
        ++i;
    }
    return m;
}

inline Matrix mat1(const Ring& ring, long long v) { return mat(ring, {{v}}); }

// x, y in degree 0 and a in degree 1 with d(a) = y - x.
inline BasedComplex interval(RingSpec spec = RingSpec::integers()) {
    Ring ring(spec);
    return build_complex(spec,
                         {{"x", 0, 1}, {"y", 0, 1}, {"a", 1, 1}},
                         {{"a", "x", mat1(ring, -1)}, {"a", "y", mat1(ring, 1)}});
}

// Triangle boundary: vertices v0, v1, v2 and edges 01, 02, 12 with
// d(ij) = vj - vi.
inline BasedComplex circle(RingSpec spec = RingSpec::integers()) {
    Ring ring(spec);
    return build_complex(spec,
                         {{"v0", 0, 1}, {"v1", 0, 1}, {"v2", 0, 1},
                          {"01", 1, 1}, {"02", 1, 1}, {"12", 1, 1}},
                         {{"01", "v0", mat1(ring, -1)}, {"01", "v1", mat1(ring, 1)},
                          {"02", "v0", mat1(ring, -1)}, {"02", "v2", mat1(ring, 1)},
                          {"12", "v1", mat1(ring, -1)}, {"12", "v2", mat1(ring, 1)}});
}

// Full 2-simplex: the circle plus the 2-cell 012 with d(012) = 12 - 02 + 01.
inline BasedComplex simplex2(RingSpec spec = RingSpec::integers()) {
    Ring ring(spec);
    return build_complex(spec,
                         {{"v0", 0, 1}, {"v1", 0, 1}, {"v2", 0, 1},
                          {"01", 1, 1}, {"02", 1, 1}, {"12", 1, 1}, {"012", 2, 1}},
                         {{"01", "v0", mat1(ring, -1)}, {"01", "v1", mat1(ring, 1)},
                          {"02", "v0", mat1(ring, -1)}, {"02", "v2", mat1(ring, 1)},
                          {"12", "v1", mat1(ring, -1)}, {"12", "v2", mat1(ring, 1)},
                          {"012", "01", mat1(ring, 1)}, {"012", "02", mat1(ring, -1)},
                          {"012", "12", mat1(ring, 1)}});
}

// The 2-simplex with the sign of d_{02,012} flipped, so d^2 = 2 v2 != 0.
// Built without the d^2 check on purpose.
inline BasedComplex simplex2_corrupt(RingSpec spec = RingSpec::integers()) {
    Ring ring(spec);
    return build_complex_unchecked(
        spec,
        {{"v0", 0, 1}, {"v1", 0, 1}, {"v2", 0, 1},
         {"01", 1, 1}, {"02", 1, 1}, {"12", 1, 1}, {"012", 2, 1}},
        {{"01", "v0", mat1(ring, -1)}, {"01", "v1", mat1(ring, 1)},
         {"02", "v0", mat1(ring, -1)}, {"02", "v2", mat1(ring, 1)},
         {"12", "v1", mat1(ring, -1)}, {"12", "v2", mat1(ring, 1)},
         {"012", "01", mat1(ring, 1)}, {"012", "02", mat1(ring, 1)},
         {"012", "12", mat1(ring, 1)}});
}

// Two parallel 1-cells over two 0-cells, all blocks 1: reversing both
// candidate matchings {a -> x, b -> y} yields a directed 4-cycle.
inline BasedComplex four_cycle(RingSpec spec = RingSpec::integers()) {
    Ring ring(spec);
    return build_complex(spec,
                         {{"x", 0, 1}, {"y", 0, 1}, {"a", 1, 1}, {"b", 1, 1}},
                         {{"a", "x", mat1(ring, 1)}, {"a", "y", mat1(ring, 1)},
                          {"b", "x", mat1(ring, 1)}, {"b", "y", mat1(ring, 1)}});
}

// x, y in degree 0; a, b in degree 1; d_{x,a} = d_{y,a} = d_{x,b} = 1.
inline BasedComplex parallel_paths(RingSpec spec = RingSpec::integers()) {
    Ring ring(spec);
    return build_complex(spec,
                         {{"x", 0, 1}, {"y", 0, 1}, {"a", 1, 1}, {"b", 1, 1}},
                         {{"a", "x", mat1(ring, 1)}, {"a", "y", mat1(ring, 1)},
                          {"b", "x", mat1(ring, 1)}});
}

// One matched pair whose block is 2, not a unit over Z.
inline BasedComplex doubled_edge() {
    Ring ring(RingSpec::integers());
    return build_complex(RingSpec::integers(), {{"x", 0, 1}, {"a", 1, 1}},
                         {{"a", "x", mat1(ring, 2)}});
}

inline const char* sphere2_facets() { return "0 1 2\n0 1 3\n0 2 3\n1 2 3\n"; }

inline const char* rp2_facets() {
    return "0 1 4\n0 1 5\n0 2 3\n0 2 5\n0 3 4\n1 2 3\n1 2 4\n1 3 5\n2 4 5\n3 4 5\n";
}

inline const char* torus7_facets() {
    return "0 1 3\n1 2 4\n2 3 5\n3 4 6\n0 4 5\n1 5 6\n0 2 6\n"
           "0 2 3\n1 3 4\n2 4 5\n3 5 6\n0 4 6\n0 1 5\n1 2 6\n";
}

inline BasedComplex sphere2(RingSpec spec = RingSpec::integers()) {
    return from_simplicial(sphere2_facets(), spec);
}

inline BasedComplex rp2(RingSpec spec = RingSpec::integers()) {
    return from_simplicial(rp2_facets(), spec);
}

inline BasedComplex torus7(RingSpec spec = RingSpec::rationals()) {
    return from_simplicial(torus7_facets(), spec);
}

// The shared random corpus: rings alternate between Q and F5, cell counts
// run 5..25, ranks 1..3. Complexes with index % 21 < 8 have at most 12
// cells, which keeps the brute-force oracle affordable on a large slice.
inline BasedComplex corpus_complex(std::size_t index) {
    RingSpec ring = (index % 2 == 0) ? RingSpec::rationals() : RingSpec::prime_field(5);
    std::size_t cells = 5 + (index % 21);
    int max_rank = 1 + static_cast<int>(index % 3);
    double density = 0.3 + 0.1 * static_cast<double>(index % 6);
    return gen_random(cells, 4, max_rank, density, ring, 1000 + index);
}

}  // namespace amt::testing

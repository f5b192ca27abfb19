#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "amt/matchsearch.hpp"
#include "support/fixtures.hpp"

using namespace amt;
using namespace amt::testing;

TEST_CASE("single cell yields the empty matching") {
    BasedComplex c = build_complex(RingSpec::integers(), {{"x", 0, 1}}, {});
    CHECK(greedy_matching(c, 0).edges.empty());
}

TEST_CASE("interval: every seed picks one of the two valid edges") {
    BasedComplex c = interval();
    bool saw_x = false, saw_y = false;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        Matching m = greedy_matching(c, seed);
        REQUIRE(m.size() == 1);
        CHECK((m.edges[0] == std::pair<std::string, std::string>{"a", "x"} ||
               m.edges[0] == std::pair<std::string, std::string>{"a", "y"}));
        saw_x = saw_x || m.edges[0].second == "x";
        saw_y = saw_y || m.edges[0].second == "y";
        CHECK(std::holds_alternative<MatchedInverse>(validate_matching(c, m)));
    }
    CHECK(saw_x);
    CHECK(saw_y);
}

TEST_CASE("same seed gives the identical matching") {
    for (std::size_t i = 0; i < 10; ++i) {
        BasedComplex c = corpus_complex(i);
        CHECK(greedy_matching(c, 17).edges == greedy_matching(c, 17).edges);
    }
}

TEST_CASE("full 2-simplex collapses to one critical cell for every seed") {
    BasedComplex c = simplex2();
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        Matching m = greedy_matching(c, seed);
        CHECK(m.size() == 3);
        std::vector<std::string> crit = critical_cells(c, m);
        REQUIRE(crit.size() == 1);
        CHECK(c.cell(crit[0]).degree == 0);  // the survivor is a vertex
        CHECK(std::holds_alternative<MatchedInverse>(validate_matching(c, m)));
    }
}

TEST_CASE("output validates on a 200-complex random sweep") {
    for (std::size_t i = 0; i < 200; ++i) {
        BasedComplex c = corpus_complex(i);
        Matching m = greedy_matching(c, i * 31 + 1);
        CHECK(std::holds_alternative<MatchedInverse>(validate_matching(c, m)));
    }
}

TEST_CASE("greedy output is maximal on fixtures") {
    Ring ring(RingSpec::integers());
    for (const BasedComplex& c : {interval(), circle(), simplex2(), sphere2(), rp2()}) {
        for (std::uint64_t seed : {0ull, 1ull, 2ull, 3ull}) {
            Matching m = greedy_matching(c, seed);
            std::set<std::pair<std::string, std::string>> chosen(m.edges.begin(), m.edges.end());
            std::set<std::string> matched;
            for (const auto& [a, b] : m.edges) {
                matched.insert(a);
                matched.insert(b);
            }
            // Every candidate edge not taken must fail when added alone.
            for (const auto& [key, block] : c.components()) {
                if (chosen.count({key.src, key.tgt})) continue;
                if (block.rows() != block.cols() || !is_invertible(ring, block)) continue;
                std::vector<std::pair<std::string, std::string>> extended = m.edges;
                extended.emplace_back(key.src, key.tgt);
                bool shares = matched.count(key.src) || matched.count(key.tgt);
                bool valid = std::holds_alternative<MatchedInverse>(
                    validate_matching(c, Matching(extended)));
                CHECK((shares || !valid));
            }
        }
    }
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "amt/matchsearch.hpp"
#include "amt/rng.hpp"
#include "amt/verify.hpp"
#include "support/fixtures.hpp"

using namespace amt;
using namespace amt::testing;

TEST_CASE("minimal complex file round trips") {
    const std::string text = R"({
  "format": "amt-complex/1",
  "ring": "Z",
  "cells": [
    {
      "id": "x",
      "degree": 0,
      "rank": 1
    }
  ],
  "differential": []
})"
                             "\n";
    BasedComplex c = parse_complex(text);
    CHECK(c.cells().size() == 1);
    CHECK(c.components().empty());
    CHECK(write_complex(c) == text);  // canonical input is reproduced byte for byte
}

TEST_CASE("write-parse round trip is structural identity on fixtures") {
    for (const BasedComplex& c :
         {interval(), circle(), simplex2(), sphere2(), rp2(), torus7(),
          circle(RingSpec::prime_field(5)), interval(RingSpec::rationals())}) {
        std::string text = write_complex(c);
        BasedComplex back = parse_complex(text);
        CHECK(back == c);
        CHECK(write_complex(back) == text);
    }
}

TEST_CASE("complex schema violations are named") {
    CHECK_THROWS_AS(parse_complex("{"), InputError);
    CHECK_THROWS_AS(parse_complex("{}"), InputError);
    CHECK_THROWS_AS(parse_complex(R"({"format": "nope", "ring": "Z", "cells": [],
                                      "differential": []})"),
                    InputError);
    // Matrix dimension mismatch names the component.
    const std::string bad = R"({
      "format": "amt-complex/1", "ring": "Z",
      "cells": [{"id": "x", "degree": 0, "rank": 2}, {"id": "a", "degree": 1, "rank": 1}],
      "differential": [{"src": "a", "tgt": "x", "matrix": [["1"]]}]
    })";
    CHECK_THROWS_WITH_AS(parse_complex(bad),
                         "component (a -> x) has shape 1x1, expected 2x1", InputError);
    // JSON numbers are rejected as matrix entries.
    CHECK_THROWS_AS(parse_complex(R"({
      "format": "amt-complex/1", "ring": "Z",
      "cells": [{"id": "x", "degree": 0, "rank": 1}, {"id": "a", "degree": 1, "rank": 1}],
      "differential": [{"src": "a", "tgt": "x", "matrix": [[1]]}]
    })"),
                    InputError);
}

TEST_CASE("d^2 failures surface as ValidationError when parsing strictly") {
    std::string text = write_complex(simplex2());
    // Flip the sign of the d_{02,012} entry directly in the JSON text.
    auto pos = text.find("\"-1\"", text.find("\"src\": \"012\""));
    REQUIRE(pos != std::string::npos);
    text.replace(pos, 4, "\"1\"");
    CHECK_THROWS_AS(parse_complex(text), ValidationError);
    BasedComplex lenient = parse_complex(text, /*check_d2=*/false);
    CHECK_FALSE(check_d_squared(lenient).empty());
}

TEST_CASE("matching files round trip") {
    Matching m({{"01", "v1"}, {"02", "v2"}});
    std::string text = write_matching(m);
    CHECK(parse_matching(text) == m);
    CHECK_THROWS_AS(parse_matching(R"({"format": "amt-matching/1", "edges": [["a"]]})"),
                    InputError);
    CHECK_THROWS_AS(parse_matching(R"({"edges": []})"), InputError);
}

TEST_CASE("maps serialization carries shift and components") {
    BasedComplex c = interval();
    Ring ring = c.ring();
    ReductionResult r = reduce_direct(c, Matching({{"a", "y"}}));
    std::string text = write_maps(ring, r.f, r.g, r.h);
    CHECK(text.find("\"shift\": 1") != std::string::npos);
    CHECK(text.find("\"f\"") != std::string::npos);
    CHECK(text.find("\"matrix\"") != std::string::npos);
}

TEST_CASE("from_simplicial on single vertices and edges") {
    BasedComplex point = from_simplicial("0\n", RingSpec::integers());
    REQUIRE(point.cells().size() == 1);
    CHECK(point.cells()[0].id == "s0");
    CHECK(point.components().empty());

    BasedComplex edge = from_simplicial("0 1\n", RingSpec::integers());
    REQUIRE(edge.cells().size() == 3);
    Ring ring = edge.ring();
    REQUIRE(edge.component("s0_1", "s0"));
    REQUIRE(edge.component("s0_1", "s1"));
    CHECK(*edge.component("s0_1", "s0") == mat1(ring, -1));  // d(01) = s1 - s0
    CHECK(*edge.component("s0_1", "s1") == mat1(ring, 1));
}

TEST_CASE("from_simplicial circle has the right shape and homology") {
    BasedComplex c = from_simplicial("0 1\n0 2\n1 2\n", RingSpec::integers());
    CHECK(c.cells().size() == 6);
    HomologyProfile h = homology(c);
    CHECK(h.at(0).betti == 1);
    CHECK(h.at(1).betti == 1);
}

TEST_CASE("from_simplicial handles comments, blanks, and unsorted input") {
    BasedComplex c = from_simplicial("# facets\n\n2 0 1\n", RingSpec::integers());
    CHECK(c.cells().size() == 7);
    CHECK(check_d_squared(c).empty());
    CHECK_THROWS_AS(from_simplicial("0 1 1\n", RingSpec::integers()), InputError);
    CHECK_THROWS_AS(from_simplicial("0 x\n", RingSpec::integers()), InputError);
}

TEST_CASE("from_simplicial boundaries always square to zero") {
    Lcg rng(31337);
    for (int trial = 0; trial < 30; ++trial) {
        std::string facets;
        std::size_t count = 1 + rng.next_below(6);
        for (std::size_t f = 0; f < count; ++f) {
            std::set<long> verts;
            std::size_t size = 1 + rng.next_below(4);
            while (verts.size() < size) verts.insert(static_cast<long>(rng.next_below(8)));
            bool first = true;
            for (long v : verts) {
                if (!first) facets += " ";
                facets += std::to_string(v);
                first = false;
            }
            facets += "\n";
        }
        BasedComplex c = from_simplicial(facets, RingSpec::integers());
        CHECK(check_d_squared(c).empty());
    }
}

TEST_CASE("gen_random is deterministic and always valid") {
    BasedComplex a = gen_random(20, 4, 2, 0.4, RingSpec::rationals(), 9);
    BasedComplex b = gen_random(20, 4, 2, 0.4, RingSpec::rationals(), 9);
    CHECK(a == b);
    BasedComplex c = gen_random(20, 4, 2, 0.4, RingSpec::rationals(), 10);
    CHECK_FALSE(a == c);  // nearby seed, different complex

    CHECK(gen_random(1, 0, 1, 1.0, RingSpec::integers(), 0).cells().size() == 1);
    CHECK(gen_random(8, 3, 2, 0.0, RingSpec::integers(), 4).components().empty());

    BasedComplex q = gen_random(20, 4, 2, 0.3, RingSpec::rationals(), 7);
    CHECK(check_d_squared(q).empty());

    CHECK_THROWS_AS(gen_random(0, 3, 1, 0.5, RingSpec::integers(), 1), InputError);
    CHECK_THROWS_AS(gen_random(5, 3, 1, 1.5, RingSpec::integers(), 1), InputError);
    CHECK_THROWS_AS(gen_random(5, 3, 0, 0.5, RingSpec::integers(), 1), InputError);
}

TEST_CASE("bundled fixture files match the in-code fixtures byte for byte") {
    const std::string dir = AMT_FIXTURE_DIR;
    auto check_file = [&](const char* name, const BasedComplex& expected) {
        std::string text = read_text_file(dir + "/" + name);
        CHECK(parse_complex(text) == expected);
        CHECK(write_complex(expected) == text);
    };
    check_file("interval.json", interval());
    check_file("circle.json", circle());
    check_file("simplex2.json", simplex2());
    check_file("sphere2.json", sphere2());
    check_file("rp2.json", rp2());
    check_file("rp2_f2.json", rp2(RingSpec::prime_field(2)));
    check_file("torus7.json", torus7());

    BasedComplex corrupt = parse_complex(read_text_file(dir + "/simplex2_corrupt.json"),
                                         /*check_d2=*/false);
    CHECK(corrupt == simplex2_corrupt());
    CHECK_FALSE(check_d_squared(corrupt).empty());

    CHECK(read_matching_file(dir + "/interval_matching.json") == Matching({{"a", "y"}}));
    CHECK(from_simplicial(read_text_file(dir + "/rp2.txt"), RingSpec::integers()) == rp2());
    CHECK(from_simplicial(read_text_file(dir + "/torus7.txt"), RingSpec::rationals()) == torus7());
}

TEST_CASE("export_dot is byte stable and marks the Morse structure") {
    BasedComplex single = build_complex(RingSpec::integers(), {{"x", 0, 1}}, {});
    CHECK(export_dot(single, std::nullopt) ==
          "digraph G {\n  \"x\" [label=\"x (deg 0)\"];\n}\n");

    BasedComplex c = interval();
    std::string dot = export_dot(c, Matching({{"a", "y"}}));
    CHECK(dot.find("\"y\" -> \"a\" [style=bold];") != std::string::npos);
    CHECK(dot.find("\"a\" -> \"x\";") != std::string::npos);
    CHECK(dot.find("\"x\" [label=\"x (deg 0)\", shape=doublecircle];") != std::string::npos);
    CHECK(export_dot(c, Matching({{"a", "y"}})) == dot);

    std::string circle_dot = export_dot(circle(), Matching({{"01", "v1"}, {"02", "v2"}}));
    std::size_t arrows = 0, bold = 0;
    for (std::size_t at = circle_dot.find("->"); at != std::string::npos;
         at = circle_dot.find("->", at + 1))
        ++arrows;
    for (std::size_t at = circle_dot.find("bold"); at != std::string::npos;
         at = circle_dot.find("bold", at + 1))
        ++bold;
    CHECK(arrows == 6);
    CHECK(bold == 2);

    CHECK_THROWS_AS(export_dot(c, Matching({{"a", "x"}, {"a", "y"}})), ValidationError);
}

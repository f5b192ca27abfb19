#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "amt/morse.hpp"

namespace amt {

// JSON complex file, format "amt-complex/1". Parsing validates the schema
// (InputError) and, unless told otherwise, d^2 = 0 (ValidationError).
BasedComplex parse_complex(const std::string& json_text, bool check_d2 = true);
BasedComplex read_complex_file(const std::filesystem::path& path, bool check_d2 = true);

// Canonical serialization: fixed key order, cells sorted by (degree, id),
// components sorted by (src, tgt), two-space indent, trailing newline.
// write(parse(x)) is byte-identical for canonically formatted input.
std::string write_complex(const BasedComplex& complex);

// JSON matching file, format "amt-matching/1".
Matching parse_matching(const std::string& json_text);
Matching read_matching_file(const std::filesystem::path& path);
std::string write_matching(const Matching& m);

// One f/g/h bundle as produced by the reduce CLI: each map serialized as
// {"shift", "components": [{"src", "tgt", "matrix"}]}.
std::string write_maps(const Ring& ring, const BlockMap& f, const BlockMap& g, const BlockMap& h);

// Simplicial facets: one facet per line, nonnegative integer vertex labels
// separated by single spaces; '#' lines and blank lines ignored. Produces
// the simplicial chain complex of all faces with the standard alternating
// boundary signs; cell ids are "s" + sorted vertices joined by "_".
BasedComplex from_simplicial(const std::string& facets_text, const RingSpec& ring);
BasedComplex read_facets_file(const std::filesystem::path& path, const RingSpec& ring);

// Seed-deterministic random based complex with d^2 = 0 by construction:
// a partial-matching skeleton of invertible blocks conjugated by random
// block-elementary automorphisms (see README). Output always re-validated.
BasedComplex gen_random(std::size_t cells, int max_degree, int max_rank, double density,
                        const RingSpec& ring, std::uint64_t seed);

// DOT rendering of G(C), or of the Morse graph when a matching is given:
// matched edges reversed and bold, critical cells double-circled; nodes and
// edges emitted in (degree, id) order for byte-stable output.
std::string export_dot(const BasedComplex& complex, const std::optional<Matching>& m);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace amt

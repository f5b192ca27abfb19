#pragma once

#include <optional>
#include <variant>

#include "amt/complex.hpp"

namespace amt {

struct DigraphEdge {
    std::string src, tgt;
    bool reversed = false;  // true for reversals of matched edges in the Morse graph

    auto operator<=>(const DigraphEdge&) const = default;
};

// Directed graph on cell ids: G(C) has an edge a -> b exactly where the
// component d_{b,a} is stored; the Morse graph reverses the matched edges.
class Digraph {
public:
    Digraph(std::vector<std::string> vertices, std::vector<DigraphEdge> edges);

    const std::vector<std::string>& vertices() const { return vertices_; }  // sorted by id
    const std::vector<DigraphEdge>& edges() const { return edges_; }        // sorted
    const std::vector<std::size_t>& out_edges(const std::string& v) const;  // indices into edges()
    std::size_t edge_count() const { return edges_.size(); }

private:
    std::vector<std::string> vertices_;
    std::vector<DigraphEdge> edges_;
    std::map<std::string, std::vector<std::size_t>> out_;
};

// A candidate Morse matching: edges (a, b) meaning a -> b in M, each a
// G(C) edge one degree down. Stored sorted for canonical equality.
struct Matching {
    std::vector<std::pair<std::string, std::string>> edges;

    Matching() = default;
    explicit Matching(std::vector<std::pair<std::string, std::string>> e);
    Matching(std::initializer_list<std::pair<std::string, std::string>> e)
        : Matching(std::vector<std::pair<std::string, std::string>>(e)) {}
    std::size_t size() const { return edges.size(); }
    bool operator==(const Matching&) const = default;
};

// Exact inverses d_{b,a}^{-1} for each matched edge (a, b).
struct MatchedInverse {
    std::map<std::pair<std::string, std::string>, Matrix> inverse;
};

struct MatchingError {
    enum class Kind { SharedVertex, NotAnEdge, NonSquare, NotInvertible, Cycle };
    Kind kind;
    std::string vertex;              // SharedVertex
    std::string src, tgt;            // edge-shaped kinds
    std::vector<std::string> cycle;  // Cycle witness (vertex sequence, closing edge implied)

    bool operator==(const MatchingError&) const = default;
};

std::string to_string(const MatchingError& e);

using MatchingValidation = std::variant<MatchedInverse, std::vector<MatchingError>>;

Digraph build_digraph(const BasedComplex& complex);

// Reverses the matched edges and labels them; throws ValidationError if a
// matching edge is not a G(C) edge.
Digraph build_morse_graph(const BasedComplex& complex, const Matching& m);

// Full diagnosis: reports every violated condition (shared vertices, edges
// missing from G(C), non-square or non-invertible blocks, and a witness
// cycle in the Morse graph). On success returns the exact block inverses.
MatchingValidation validate_matching(const BasedComplex& complex, const Matching& m);

// validate_matching that throws ValidationError listing all errors.
MatchedInverse require_valid_matching(const BasedComplex& complex, const Matching& m);

// The unmatched cells M^0, ordered by (degree, id).
std::vector<std::string> critical_cells(const BasedComplex& complex, const Matching& m);

// Deterministic topological order (Kahn's algorithm, ties by cell id).
// Throws ValidationError carrying a witness cycle on cyclic input.
std::vector<std::string> topological_order(const Digraph& g);

// Maximum edge count over directed paths, by dynamic programming along a
// topological order. Throws on cyclic input.
std::size_t longest_path_length(const Digraph& g);

// A directed cycle as a vertex sequence, if one exists.
std::optional<std::vector<std::string>> find_cycle(const Digraph& g);

}  // namespace amt

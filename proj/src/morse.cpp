#include "amt/morse.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace amt {

Digraph::Digraph(std::vector<std::string> vertices, std::vector<DigraphEdge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
    std::sort(vertices_.begin(), vertices_.end());
    std::sort(edges_.begin(), edges_.end());
    for (std::size_t i = 0; i < edges_.size(); ++i) out_[edges_[i].src].push_back(i);
}

const std::vector<std::size_t>& Digraph::out_edges(const std::string& v) const {
    static const std::vector<std::size_t> empty;
    auto it = out_.find(v);
    return it == out_.end() ? empty : it->second;
}

Matching::Matching(std::vector<std::pair<std::string, std::string>> e) : edges(std::move(e)) {
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
}

std::string to_string(const MatchingError& e) {
    std::ostringstream os;
    switch (e.kind) {
        case MatchingError::Kind::SharedVertex:
            os << "SharedVertex(" << e.vertex << ")";
            break;
        case MatchingError::Kind::NotAnEdge:
            os << "NotAnEdge(" << e.src << " -> " << e.tgt << ")";
            break;
        case MatchingError::Kind::NonSquare:
            os << "NonSquare(" << e.src << " -> " << e.tgt << ")";
            break;
        case MatchingError::Kind::NotInvertible:
            os << "NotInvertible(" << e.src << " -> " << e.tgt << ")";
            break;
        case MatchingError::Kind::Cycle: {
            os << "Cycle(";
            for (std::size_t i = 0; i < e.cycle.size(); ++i) {
                if (i) os << " -> ";
                os << e.cycle[i];
            }
            os << ")";
            break;
        }
    }
    return os.str();
}

Digraph build_digraph(const BasedComplex& complex) {
    std::vector<std::string> vertices;
    vertices.reserve(complex.cells().size());
    for (const Cell& c : complex.cells()) vertices.push_back(c.id);
    std::vector<DigraphEdge> edges;
    edges.reserve(complex.components().size());
    for (const auto& [key, mat] : complex.components()) edges.push_back({key.src, key.tgt, false});
    return Digraph(std::move(vertices), std::move(edges));
}

Digraph build_morse_graph(const BasedComplex& complex, const Matching& m) {
    std::set<std::pair<std::string, std::string>> matched(m.edges.begin(), m.edges.end());
    for (const auto& [a, b] : m.edges)
        if (!complex.component(a, b))
            throw ValidationError("matching edge (" + a + " -> " + b + ") is not an edge of G(C)");
    std::vector<std::string> vertices;
    for (const Cell& c : complex.cells()) vertices.push_back(c.id);
    std::vector<DigraphEdge> edges;
    for (const auto& [key, mat] : complex.components()) {
        if (matched.count({key.src, key.tgt}))
            edges.push_back({key.tgt, key.src, true});
        else
            edges.push_back({key.src, key.tgt, false});
    }
    return Digraph(std::move(vertices), std::move(edges));
}

std::optional<std::vector<std::string>> find_cycle(const Digraph& g) {
    enum class Color { White, Gray, Black };
    std::map<std::string, Color> color;
    for (const auto& v : g.vertices()) color[v] = Color::White;
    std::vector<std::string> stack;
    std::optional<std::vector<std::string>> result;

    // Iterative DFS with an explicit stack of (vertex, next edge position).
    for (const auto& root : g.vertices()) {
        if (color[root] != Color::White) continue;
        std::vector<std::pair<std::string, std::size_t>> frame{{root, 0}};
        color[root] = Color::Gray;
        stack.push_back(root);
        while (!frame.empty()) {
            auto& [v, pos] = frame.back();
            const auto& out = g.out_edges(v);
            if (pos == out.size()) {
                color[v] = Color::Black;
                stack.pop_back();
                frame.pop_back();
                continue;
            }
            const DigraphEdge& e = g.edges()[out[pos++]];
            if (color[e.tgt] == Color::Gray) {
                auto it = std::find(stack.begin(), stack.end(), e.tgt);
                return std::vector<std::string>(it, stack.end());
            }
            if (color[e.tgt] == Color::White) {
                color[e.tgt] = Color::Gray;
                stack.push_back(e.tgt);
                frame.emplace_back(e.tgt, 0);
            }
        }
    }
    return std::nullopt;
}

std::vector<std::string> topological_order(const Digraph& g) {
    std::map<std::string, std::size_t> indegree;
    for (const auto& v : g.vertices()) indegree[v] = 0;
    for (const auto& e : g.edges()) ++indegree[e.tgt];

    std::set<std::string> ready;  // ordered: ties broken by cell id
    for (const auto& [v, deg] : indegree)
        if (deg == 0) ready.insert(v);

    std::vector<std::string> order;
    order.reserve(g.vertices().size());
    while (!ready.empty()) {
        std::string v = *ready.begin();
        ready.erase(ready.begin());
        order.push_back(v);
        for (std::size_t ei : g.out_edges(v)) {
            const auto& tgt = g.edges()[ei].tgt;
            if (--indegree[tgt] == 0) ready.insert(tgt);
        }
    }
    if (order.size() != g.vertices().size()) {
        auto cycle = find_cycle(g);
        MatchingError err{MatchingError::Kind::Cycle, "", "", "", cycle.value_or(std::vector<std::string>{})};
        throw ValidationError("graph is not acyclic: " + to_string(err));
    }
    return order;
}

std::size_t longest_path_length(const Digraph& g) {
    std::vector<std::string> order = topological_order(g);
    std::map<std::string, std::size_t> dist;
    std::size_t best = 0;
    for (const auto& v : order) {
        std::size_t dv = dist[v];  // 0 if untouched
        for (std::size_t ei : g.out_edges(v)) {
            const auto& tgt = g.edges()[ei].tgt;
            dist[tgt] = std::max(dist[tgt], dv + 1);
            best = std::max(best, dist[tgt]);
        }
    }
    return best;
}

MatchingValidation validate_matching(const BasedComplex& complex, const Matching& m) {
    std::vector<MatchingError> errors;
    Ring ring = complex.ring();

    // Matching property: no vertex on more than one edge.
    std::map<std::string, int> incidence;
    for (const auto& [a, b] : m.edges) {
        ++incidence[a];
        ++incidence[b];
    }
    for (const auto& [v, count] : incidence)
        if (count > 1) errors.push_back({MatchingError::Kind::SharedVertex, v, "", "", {}});

    // Edge membership and block invertibility.
    std::vector<std::pair<std::string, std::string>> real_edges;
    for (const auto& [a, b] : m.edges) {
        const Matrix* block = nullptr;
        if (complex.has_cell(a) && complex.has_cell(b)) block = complex.component(a, b);
        if (!block) {
            errors.push_back({MatchingError::Kind::NotAnEdge, "", a, b, {}});
            continue;
        }
        real_edges.emplace_back(a, b);
        if (block->rows() != block->cols()) {
            errors.push_back({MatchingError::Kind::NonSquare, "", a, b, {}});
            continue;
        }
        if (!is_invertible(ring, *block))
            errors.push_back({MatchingError::Kind::NotInvertible, "", a, b, {}});
    }

    // Acyclicity of the Morse graph, over the edges that exist in G(C).
    Digraph morse = build_morse_graph(complex, Matching(real_edges));
    if (auto cycle = find_cycle(morse))
        errors.push_back({MatchingError::Kind::Cycle, "", "", "", *cycle});

    if (!errors.empty()) return errors;

    MatchedInverse inv;
    for (const auto& [a, b] : m.edges)
        inv.inverse.emplace(std::make_pair(a, b), inverse(ring, *complex.component(a, b)));
    return inv;
}

MatchedInverse require_valid_matching(const BasedComplex& complex, const Matching& m) {
    MatchingValidation v = validate_matching(complex, m);
    if (auto* inv = std::get_if<MatchedInverse>(&v)) return std::move(*inv);
    const auto& errors = std::get<std::vector<MatchingError>>(v);
    std::ostringstream os;
    os << "invalid Morse matching:";
    for (const auto& e : errors) os << " " << to_string(e) << ";";
    throw ValidationError(os.str());
}

std::vector<std::string> critical_cells(const BasedComplex& complex, const Matching& m) {
    std::set<std::string> matched;
    for (const auto& [a, b] : m.edges) {
        matched.insert(a);
        matched.insert(b);
    }
    std::vector<std::string> out;
    for (const Cell& c : complex.cells())  // already in (degree, id) order
        if (!matched.count(c.id)) out.push_back(c.id);
    return out;
}

}  // namespace amt

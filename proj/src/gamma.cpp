#include "amt/gamma.hpp"

#include <algorithm>
#include <set>

namespace amt {

namespace {

// Shared per-reduction context: Morse graph, its topological order, and the
// matrix attached to every Morse edge (d block or negated matched inverse).
struct MorseContext {
    Digraph graph;
    std::vector<std::string> order;
    std::vector<Matrix> edge_matrix;  // parallel to graph.edges()

    MorseContext(const BasedComplex& complex, const Matching& m, const MatchedInverse& inv)
        : graph(build_morse_graph(complex, m)), order(topological_order(graph)) {
        Ring ring = complex.ring();
        edge_matrix.reserve(graph.edges().size());
        for (const DigraphEdge& e : graph.edges()) {
            if (e.reversed) {
                // Reversal of the matched edge (tgt -> src) in M.
                const Matrix& blockinv = inv.inverse.at({e.tgt, e.src});
                edge_matrix.push_back(negate(ring, blockinv));
            } else {
                edge_matrix.push_back(*complex.component(e.src, e.tgt));
            }
        }
    }
};

GammaTable gamma_from_context(const BasedComplex& complex, const MorseContext& ctx,
                              const std::string& source) {
    Ring ring = complex.ring();
    const Cell& src_cell = complex.cell(source);

    GammaTable table{source, {}};
    table.targets.emplace(source,
                          Matrix::identity(ring, static_cast<std::size_t>(src_cell.rank)));

    for (const std::string& v : ctx.order) {
        auto it = table.targets.find(v);
        if (it == table.targets.end()) continue;
        // All predecessors of v are earlier in the order, so the entry is
        // final; a sum that cancelled to zero propagates nothing.
        if (it->second.is_zero()) {
            table.targets.erase(it);
            continue;
        }
        for (std::size_t ei : ctx.graph.out_edges(v)) {
            const DigraphEdge& e = ctx.graph.edges()[ei];
            Matrix step = multiply(ring, ctx.edge_matrix[ei], it->second);
            auto [slot, inserted] = table.targets.emplace(e.tgt, step);
            if (!inserted) slot->second = add(ring, slot->second, step);
        }
    }
    for (auto it = table.targets.begin(); it != table.targets.end();)
        it = it->second.is_zero() ? table.targets.erase(it) : std::next(it);
    return table;
}

}  // namespace

GammaTable gamma_from(const BasedComplex& complex, const Matching& m, const MatchedInverse& inv,
                      const std::string& source) {
    complex.cell(source);
    MorseContext ctx(complex, m, inv);
    return gamma_from_context(complex, ctx, source);
}

std::optional<Matrix> gamma_bruteforce(const BasedComplex& complex, const Matching& m,
                                       const std::string& source, const std::string& target,
                                       std::size_t path_cap) {
    Ring ring = complex.ring();
    MatchedInverse inv = require_valid_matching(complex, m);
    MorseContext ctx(complex, m, inv);
    const Cell& src_cell = complex.cell(source);
    const Cell& tgt_cell = complex.cell(target);

    Matrix sum(static_cast<std::size_t>(tgt_cell.rank), static_cast<std::size_t>(src_cell.rank));
    std::size_t paths = 0;
    std::size_t visits = 0;
    const std::size_t visit_cap = path_cap * 64;

    // Depth-first enumeration of all Morse-graph paths out of the source,
    // carrying the composite map; acyclicity bounds every path.
    struct Frame {
        std::string vertex;
        Matrix composite;
        std::size_t next_edge = 0;
    };
    std::vector<Frame> stack;
    stack.push_back({source, Matrix::identity(ring, static_cast<std::size_t>(src_cell.rank)), 0});
    if (source == target) {
        sum = add(ring, sum, stack.back().composite);
        ++paths;
    }
    while (!stack.empty()) {
        Frame& top = stack.back();
        const auto& out = ctx.graph.out_edges(top.vertex);
        if (top.next_edge == out.size()) {
            stack.pop_back();
            continue;
        }
        std::size_t ei = out[top.next_edge++];
        const DigraphEdge& e = ctx.graph.edges()[ei];
        Matrix composite = multiply(ring, ctx.edge_matrix[ei], top.composite);
        if (++visits > visit_cap)
            throw ValidationError("gamma_bruteforce exceeded the path cap of " +
                                  std::to_string(path_cap));
        if (e.tgt == target) {
            if (++paths > path_cap)
                throw ValidationError("gamma_bruteforce exceeded the path cap of " +
                                      std::to_string(path_cap));
            sum = add(ring, sum, composite);
        }
        stack.push_back({e.tgt, std::move(composite), 0});
    }

    if (sum.is_zero()) return std::nullopt;
    return sum;
}

ReductionResult reduce_direct(const BasedComplex& complex, const Matching& m) {
    MatchedInverse inv = require_valid_matching(complex, m);
    MorseContext ctx(complex, m, inv);

    std::vector<std::string> critical = critical_cells(complex, m);
    std::set<std::string> critical_set(critical.begin(), critical.end());

    ReductionResult result;
    result.f = BlockMap(0);
    result.g = BlockMap(0);
    result.h = BlockMap(+1);
    result.matching = m;

    std::vector<std::tuple<std::string, std::string, Matrix>> reduced_components;
    for (const Cell& alpha : complex.cells()) {
        GammaTable table = gamma_from_context(complex, ctx, alpha.id);
        bool alpha_critical = critical_set.count(alpha.id) > 0;
        for (const auto& [beta_id, mat] : table.targets) {
            const Cell& beta = complex.cell(beta_id);
            if (beta.degree == alpha.degree && critical_set.count(beta_id))
                result.f.set_block(alpha.id, beta_id, mat);
            if (beta.degree == alpha.degree + 1) result.h.set_block(alpha.id, beta_id, mat);
            if (alpha_critical) {
                if (beta.degree == alpha.degree) result.g.set_block(alpha.id, beta_id, mat);
                if (beta.degree == alpha.degree - 1 && critical_set.count(beta_id))
                    reduced_components.emplace_back(alpha.id, beta_id, mat);
            }
        }
    }

    std::vector<Cell> reduced_cells;
    for (const std::string& id : critical) reduced_cells.push_back(complex.cell(id));
    result.reduced = build_complex(complex.ring_spec(), std::move(reduced_cells),
                                   std::move(reduced_components));

    result.stats.cells_before = complex.cells().size();
    result.stats.cells_after = critical.size();
    result.stats.graph_edges = ctx.graph.edge_count();
    result.stats.matching_size = m.size();
    result.stats.series_terms = 0;
    return result;
}

}  // namespace amt

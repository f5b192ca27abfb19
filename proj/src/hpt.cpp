#include "amt/hpt.hpp"

#include <set>

#include "amt/verify.hpp"

namespace amt {

std::pair<BlockMap, BlockMap> split_differential(const BasedComplex& complex, const Matching& m) {
    require_valid_matching(complex, m);
    std::set<std::pair<std::string, std::string>> matched(m.edges.begin(), m.edges.end());
    BlockMap matched_part(-1), rest(-1);
    for (const auto& [key, mat] : complex.components()) {
        if (matched.count({key.src, key.tgt}))
            matched_part.set_block(key.src, key.tgt, mat);
        else
            rest.set_block(key.src, key.tgt, mat);
    }
    return {std::move(matched_part), std::move(rest)};
}

Contraction trivial_morse_contraction(const BasedComplex& complex, const Matching& m,
                                      const MatchedInverse& inv) {
    Ring ring = complex.ring();
    std::set<std::pair<std::string, std::string>> matched(m.edges.begin(), m.edges.end());

    std::vector<std::tuple<std::string, std::string, Matrix>> matched_components;
    for (const auto& [key, mat] : complex.components())
        if (matched.count({key.src, key.tgt})) matched_components.emplace_back(key.src, key.tgt, mat);

    Contraction c;
    c.big = build_complex(complex.ring_spec(), complex.cells(), std::move(matched_components));

    std::vector<Cell> critical;
    std::set<std::string> matched_cells;
    for (const auto& [a, b] : m.edges) {
        matched_cells.insert(a);
        matched_cells.insert(b);
    }
    for (const Cell& cell : complex.cells())
        if (!matched_cells.count(cell.id)) critical.push_back(cell);
    c.small = build_complex(complex.ring_spec(), critical, {});

    // f projects onto the critical cells, g includes them back.
    c.f = identity_block_map(ring, critical);
    c.g = c.f;
    c.h = BlockMap(+1);
    for (const auto& [edge, blockinv] : inv.inverse) {
        const auto& [a, b] = edge;  // a -> b in M; h sends C_b into C_a
        c.h.set_block(b, a, negate(ring, blockinv));
    }

    IdentityReport report = verify_contraction(c);
    if (!report.passed())
        throw ValidationError("internal consistency error: trivial Morse contraction failed\n" +
                              report.summary());
    return c;
}

std::vector<DSquaredViolation> check_perturbation(const BasedComplex& complex, const BlockMap& t) {
    if (t.shift() != -1) throw InputError("a perturbation must have shift -1");
    validate_block_map(complex.table(), t, "perturbation");
    Ring ring = complex.ring();
    BlockMap d_t = add_block_maps(ring, differential_block_map(complex), t);
    BlockMap square = compose_block_maps(ring, d_t, d_t);
    std::vector<DSquaredViolation> out;
    for (const auto& [key, mat] : square.blocks())
        for (std::size_t i = 0; i < mat.rows(); ++i)
            for (std::size_t j = 0; j < mat.cols(); ++j)
                if (!mat.at(i, j).is_zero()) out.push_back({key.tgt, key.src, i, j, mat.at(i, j)});
    std::sort(out.begin(), out.end(), [](const DSquaredViolation& a, const DSquaredViolation& b) {
        return std::tie(a.tgt, a.src, a.row, a.col) < std::tie(b.tgt, b.src, b.row, b.col);
    });
    return out;
}

PerturbResult perturb(const Contraction& c, const BlockMap& t, SeriesBound bound) {
    Ring ring = c.big.ring();
    if (bound.max_iterations < 1) throw InputError("series bound must be >= 1");
    if (!check_perturbation(c.big, t).empty())
        throw ValidationError("perturbation is invalid: (d + t)^2 != 0 on the big complex");

    // S = sum of t(ht)^n; each term composes (t h) onto the previous one,
    // so the first vanishing term makes all later terms vanish too.
    BlockMap th = compose_block_maps(ring, t, c.h);
    BlockMap series(-1);
    BlockMap term = t;
    std::size_t terms = 0;
    while (!term.empty()) {
        if (terms == bound.max_iterations)
            throw ValidationError("perturbation not locally nilpotent within bound " +
                                  std::to_string(bound.max_iterations));
        series = add_block_maps(ring, series, term);
        ++terms;
        term = compose_block_maps(ring, th, term);
    }

    BlockMap f_new = add_block_maps(
        ring, c.f, compose_block_maps(ring, c.f, compose_block_maps(ring, series, c.h)));
    BlockMap g_new = add_block_maps(
        ring, c.g, compose_block_maps(ring, c.h, compose_block_maps(ring, series, c.g)));
    BlockMap h_new = add_block_maps(
        ring, c.h, compose_block_maps(ring, c.h, compose_block_maps(ring, series, c.h)));
    BlockMap t_small = compose_block_maps(ring, c.f, compose_block_maps(ring, series, c.g));

    PerturbResult result;
    // Big complex gains d + t; small complex gains d + t'. build_complex
    // re-verifies that both squares vanish.
    BlockMap d_big = add_block_maps(ring, differential_block_map(c.big), t);
    std::vector<std::tuple<std::string, std::string, Matrix>> big_components;
    for (const auto& [key, mat] : d_big.blocks()) big_components.emplace_back(key.src, key.tgt, mat);
    result.contraction.big = build_complex(c.big.ring_spec(), c.big.cells(), std::move(big_components));

    BlockMap d_small = add_block_maps(ring, differential_block_map(c.small), t_small);
    std::vector<std::tuple<std::string, std::string, Matrix>> small_components;
    for (const auto& [key, mat] : d_small.blocks())
        small_components.emplace_back(key.src, key.tgt, mat);
    result.contraction.small =
        build_complex(c.small.ring_spec(), c.small.cells(), std::move(small_components));

    result.contraction.f = std::move(f_new);
    result.contraction.g = std::move(g_new);
    result.contraction.h = std::move(h_new);
    result.small_perturbation = std::move(t_small);
    result.terms_used = terms;

    IdentityReport report = verify_contraction(result.contraction);
    if (!report.passed())
        throw ValidationError("internal consistency error: perturbed contraction failed\n" +
                              report.summary());
    return result;
}

ReductionResult reduce_hpt(const BasedComplex& complex, const Matching& m,
                           std::optional<std::size_t> max_iterations) {
    MatchedInverse inv = require_valid_matching(complex, m);
    auto [d_matched, t] = split_differential(complex, m);
    Contraction trivial = trivial_morse_contraction(complex, m, inv);

    SeriesBound bound;
    if (max_iterations) {
        bound.max_iterations = *max_iterations;
    } else {
        Digraph morse = build_morse_graph(complex, m);
        bound.max_iterations = longest_path_length(morse) + 1;
    }

    PerturbResult perturbed = perturb(trivial, t, bound);

    // The perturbed big complex is the original complex again.
    if (!(perturbed.contraction.big == complex))
        throw ValidationError(
            "internal consistency error: perturbed big complex differs from the input");

    ReductionResult result;
    result.reduced = std::move(perturbed.contraction.small);
    result.f = std::move(perturbed.contraction.f);
    result.g = std::move(perturbed.contraction.g);
    result.h = std::move(perturbed.contraction.h);
    result.matching = m;
    result.stats.cells_before = complex.cells().size();
    result.stats.cells_after = result.reduced.cells().size();
    result.stats.graph_edges = complex.components().size();
    result.stats.matching_size = m.size();
    result.stats.series_terms = perturbed.terms_used;
    return result;
}

}  // namespace amt

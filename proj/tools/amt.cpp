#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "amt/io.hpp"
#include "amt/matchsearch.hpp"
#include "amt/reduce.hpp"
#include "amt/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMathFailure = 1;
constexpr int kExitUsage = 2;

using namespace amt;

Matching load_or_search_matching(const BasedComplex& complex, const std::string& matching_path,
                                 std::uint64_t seed) {
    if (!matching_path.empty()) return read_matching_file(matching_path);
    return greedy_matching(complex, seed);
}

int cmd_validate(const std::string& complex_path) {
    BasedComplex complex = read_complex_file(complex_path, /*check_d2=*/false);
    auto violations = check_d_squared(complex);
    if (violations.empty()) {
        std::cout << "ok\n";
        return kExitOk;
    }
    Ring ring = complex.ring();
    for (const auto& v : violations)
        std::cout << "d^2 != 0 at (" << v.tgt << ", " << v.src << ") entry (" << v.row << ", "
                  << v.col << "): " << ring.format(v.value) << "\n";
    return kExitMathFailure;
}

int cmd_match(const std::string& complex_path, std::uint64_t seed, const std::string& out) {
    BasedComplex complex = read_complex_file(complex_path);
    Matching m = greedy_matching(complex, seed);
    std::cout << "|M| = " << m.size() << "\n";
    std::cout << "|M0| = " << critical_cells(complex, m).size() << "\n";
    if (!out.empty()) write_text_file(out, write_matching(m));
    return kExitOk;
}

int cmd_reduce(const std::string& complex_path, const std::string& matching_path,
               const std::string& engine_token, std::optional<std::size_t> max_iterations,
               std::uint64_t seed, const std::string& out, const std::string& maps_out) {
    BasedComplex complex = read_complex_file(complex_path);
    Matching m = load_or_search_matching(complex, matching_path, seed);
    Engine engine = parse_engine(engine_token);
    ReductionResult result = run_reduction(complex, m, engine, max_iterations);
    std::cout << "reduced " << result.stats.cells_before << " cells -> "
              << result.stats.cells_after << " cells (|M| = " << result.stats.matching_size
              << ")\n";
    if (engine == Engine::Both) std::cout << "engines agree\n";
    if (!out.empty()) write_text_file(out, write_complex(result.reduced));
    if (!maps_out.empty())
        write_text_file(maps_out, write_maps(complex.ring(), result.f, result.g, result.h));
    return kExitOk;
}

int cmd_verify(const std::string& complex_path, const std::string& matching_path,
               std::optional<std::size_t> max_iterations) {
    BasedComplex complex = read_complex_file(complex_path);
    Matching m = read_matching_file(matching_path);

    ReductionResult direct = reduce_direct(complex, m);
    ReductionResult perturbed = reduce_hpt(complex, m, max_iterations);
    bool ok = true;

    std::vector<std::string> diff = diff_reductions(direct, perturbed);
    if (diff.empty()) {
        std::cout << "engines agree: ok\n";
    } else {
        ok = false;
        std::cout << "engines agree: FAILED\n";
        for (const auto& line : diff) std::cout << "  " << line << "\n";
    }

    Contraction c{complex, direct.reduced, direct.f, direct.g, direct.h};
    IdentityReport report = verify_contraction(c);
    std::cout << report.summary();
    ok = ok && report.passed();

    bool same_homology = compare_homology(complex, direct.reduced);
    std::cout << "homology preserved: " << (same_homology ? "ok" : "FAILED") << "\n";
    std::cout << format_homology(complex.ring_spec(), homology(direct.reduced));
    ok = ok && same_homology;

    return ok ? kExitOk : kExitMathFailure;
}

int cmd_homology(const std::string& complex_path) {
    BasedComplex complex = read_complex_file(complex_path);
    std::cout << format_homology(complex.ring_spec(), homology(complex));
    return kExitOk;
}

int cmd_from_simplicial(const std::string& facets_path, const std::string& ring_token,
                        const std::string& out) {
    BasedComplex complex = read_facets_file(facets_path, RingSpec::parse(ring_token));
    std::string text = write_complex(complex);
    if (out.empty())
        std::cout << text;
    else
        write_text_file(out, text);
    return kExitOk;
}

int cmd_export_dot(const std::string& complex_path, const std::string& matching_path) {
    BasedComplex complex = read_complex_file(complex_path);
    std::optional<Matching> m;
    if (!matching_path.empty()) m = read_matching_file(matching_path);
    std::cout << export_dot(complex, m);
    return kExitOk;
}

int cmd_gen_random(std::size_t cells, int max_degree, int max_rank, double density,
                   const std::string& ring_token, std::uint64_t seed, const std::string& out) {
    BasedComplex complex =
        gen_random(cells, max_degree, max_rank, density, RingSpec::parse(ring_token), seed);
    std::string text = write_complex(complex);
    if (out.empty())
        std::cout << text;
    else
        write_text_file(out, text);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact chain complex reduction via Morse matchings,\n"
                 "with independent path-sum and perturbation engines."};
    app.require_subcommand(1);

    std::string complex_path, matching_path, out_path, maps_path, facets_path;
    std::string engine = "both";
    std::string ring_token = "Z";
    std::uint64_t seed = 0;
    std::optional<std::size_t> max_iterations;
    std::size_t cells = 10;
    int max_degree = 3, max_rank = 1;
    double density = 0.5;

    auto* validate = app.add_subcommand("validate", "Check a complex file and d^2 = 0");
    validate->add_option("complex", complex_path)->required();

    auto* match = app.add_subcommand("match", "Search a Morse matching greedily");
    match->add_option("complex", complex_path)->required();
    match->add_option("--seed", seed, "Shuffle seed");
    match->add_option("--out", out_path, "Write the matching as JSON");

    auto* reduce = app.add_subcommand("reduce", "Reduce onto the critical cells");
    reduce->add_option("complex", complex_path)->required();
    reduce->add_option("--matching", matching_path, "Matching file (default: greedy search)");
    reduce->add_option("--engine", engine, "gamma | hpt | both (default both)");
    reduce->add_option("--max-iterations", max_iterations, "Perturbation series bound");
    reduce->add_option("--seed", seed, "Seed for the greedy search");
    reduce->add_option("--out", out_path, "Write the reduced complex");
    reduce->add_option("--maps", maps_path, "Write f/g/h as JSON");

    auto* verify = app.add_subcommand("verify", "Run both engines plus the full identity suite");
    verify->add_option("complex", complex_path)->required();
    verify->add_option("--matching", matching_path)->required();
    verify->add_option("--max-iterations", max_iterations, "Perturbation series bound");

    auto* homology_cmd = app.add_subcommand("homology", "Print Betti numbers (and torsion over Z)");
    homology_cmd->add_option("complex", complex_path)->required();

    auto* from_simplicial = app.add_subcommand("from-simplicial", "Build a chain complex from facets");
    from_simplicial->add_option("facets", facets_path)->required();
    from_simplicial->add_option("--ring", ring_token, "Z | Q | F<p> (default Z)");
    from_simplicial->add_option("--out", out_path, "Write the complex (default: stdout)");

    auto* export_dot_cmd = app.add_subcommand("export-dot", "Render G(C) or the Morse graph as DOT");
    export_dot_cmd->add_option("complex", complex_path)->required();
    export_dot_cmd->add_option("--matching", matching_path);

    auto* gen = app.add_subcommand("gen-random", "Generate a random complex with d^2 = 0");
    gen->add_option("--cells", cells)->required();
    gen->add_option("--max-degree", max_degree)->required();
    gen->add_option("--max-rank", max_rank)->required();
    gen->add_option("--density", density)->required();
    gen->add_option("--ring", ring_token)->required();
    gen->add_option("--seed", seed)->required();
    gen->add_option("--out", out_path, "Write the complex (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*validate) return cmd_validate(complex_path);
        if (*match) return cmd_match(complex_path, seed, out_path);
        if (*reduce)
            return cmd_reduce(complex_path, matching_path, engine, max_iterations, seed, out_path,
                              maps_path);
        if (*verify) return cmd_verify(complex_path, matching_path, max_iterations);
        if (*homology_cmd) return cmd_homology(complex_path);
        if (*from_simplicial) return cmd_from_simplicial(facets_path, ring_token, out_path);
        if (*export_dot_cmd) return cmd_export_dot(complex_path, matching_path);
        if (*gen)
            return cmd_gen_random(cells, max_degree, max_rank, density, ring_token, seed, out_path);
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMathFailure;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

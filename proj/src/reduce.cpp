#include "amt/reduce.hpp"

#include <sstream>

namespace amt {

Engine parse_engine(const std::string& token) {
    if (token == "gamma") return Engine::Gamma;
    if (token == "hpt") return Engine::Hpt;
    if (token == "both") return Engine::Both;
    throw InputError("unknown engine '" + token + "' (expected gamma, hpt, or both)");
}

namespace {

void diff_block_maps(const std::string& what, const BlockMap& a, const BlockMap& b,
                     std::vector<std::string>& out) {
    if (a.shift() != b.shift()) {
        out.push_back(what + ": shift " + std::to_string(a.shift()) + " vs " +
                      std::to_string(b.shift()));
        return;
    }
    for (const auto& [key, mat] : a.blocks()) {
        const Matrix* other = b.block(key.src, key.tgt);
        if (!other)
            out.push_back(what + ": block (" + key.src + " -> " + key.tgt +
                          ") present only in the first");
        else if (!(mat == *other))
            out.push_back(what + ": block (" + key.src + " -> " + key.tgt + ") differs");
    }
    for (const auto& [key, mat] : b.blocks())
        if (!a.block(key.src, key.tgt))
            out.push_back(what + ": block (" + key.src + " -> " + key.tgt +
                          ") present only in the second");
}

}  // namespace

std::vector<std::string> diff_reductions(const ReductionResult& a, const ReductionResult& b) {
    std::vector<std::string> out;
    if (!(a.reduced.ring_spec() == b.reduced.ring_spec())) out.push_back("reduced: ring differs");
    if (!(a.reduced.cells() == b.reduced.cells())) out.push_back("reduced: cell lists differ");
    diff_block_maps("reduced differential", differential_block_map(a.reduced),
                    differential_block_map(b.reduced), out);
    diff_block_maps("f", a.f, b.f, out);
    diff_block_maps("g", a.g, b.g, out);
    diff_block_maps("h", a.h, b.h, out);
    return out;
}

ReductionResult run_reduction(const BasedComplex& complex, const Matching& m, Engine engine,
                              std::optional<std::size_t> max_iterations) {
    switch (engine) {
        case Engine::Gamma:
            return reduce_direct(complex, m);
        case Engine::Hpt:
            return reduce_hpt(complex, m, max_iterations);
        case Engine::Both: {
            ReductionResult direct = reduce_direct(complex, m);
            ReductionResult perturbed = reduce_hpt(complex, m, max_iterations);
            std::vector<std::string> diff = diff_reductions(direct, perturbed);
            if (!diff.empty()) {
                std::ostringstream os;
                os << "engine disagreement between gamma and hpt:";
                for (const auto& line : diff) os << "\n  " << line;
                throw ValidationError(os.str());
            }
            direct.stats.series_terms = perturbed.stats.series_terms;
            return direct;
        }
    }
    throw InputError("unreachable engine");
}

}  // namespace amt

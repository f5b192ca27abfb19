#include "amt/matchsearch.hpp"

#include <algorithm>
#include <set>

#include "amt/rng.hpp"

namespace amt {

namespace {

// Is there a directed path from `from` to `to` in the adjacency map?
bool reaches(const std::map<std::string, std::set<std::string>>& adj, const std::string& from,
             const std::string& to) {
    std::vector<const std::string*> stack{&from};
    std::set<std::string> seen{from};
    while (!stack.empty()) {
        const std::string* v = stack.back();
        stack.pop_back();
        auto it = adj.find(*v);
        if (it == adj.end()) continue;
        for (const auto& w : it->second) {
            if (w == to) return true;
            if (seen.insert(w).second) stack.push_back(&w);
        }
    }
    return false;
}

}  // namespace

Matching greedy_matching(const BasedComplex& complex, std::uint64_t seed) {
    Ring ring = complex.ring();

    // Candidates: G(C) edges whose block is square and invertible, in
    // lexicographic order, then seed-shuffled.
    std::vector<std::pair<std::string, std::string>> candidates;
    for (const auto& [key, mat] : complex.components())
        if (mat.rows() == mat.cols() && is_invertible(ring, mat))
            candidates.emplace_back(key.src, key.tgt);
    std::sort(candidates.begin(), candidates.end());
    Lcg rng(seed);
    rng.shuffle(candidates);

    // Current Morse graph as an adjacency map; starts as G(C).
    std::map<std::string, std::set<std::string>> adj;
    for (const auto& [key, mat] : complex.components()) adj[key.src].insert(key.tgt);

    std::set<std::string> matched;
    std::vector<std::pair<std::string, std::string>> accepted;
    for (const auto& [a, b] : candidates) {
        if (matched.count(a) || matched.count(b)) continue;
        // Reversing a -> b creates a cycle iff a path a ~> b survives with
        // the candidate edge itself removed.
        adj[a].erase(b);
        bool cycle = reaches(adj, a, b);
        if (cycle) {
            adj[a].insert(b);
            continue;
        }
        adj[b].insert(a);
        matched.insert(a);
        matched.insert(b);
        accepted.emplace_back(a, b);
    }
    return Matching(std::move(accepted));
}

}  // namespace amt

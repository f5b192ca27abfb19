#include "amt/io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "amt/rng.hpp"
#include "json.hpp"

namespace amt {

using json = nlohmann::ordered_json;

namespace {

json parse_json(const std::string& text, const std::string& what) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw InputError("malformed JSON in " + what);
    return j;
}

const json& require_key(const json& j, const char* key, const std::string& what) {
    auto it = j.find(key);
    if (it == j.end()) throw InputError(what + ": missing key \"" + std::string(key) + "\"");
    return *it;
}

Matrix parse_matrix(const Ring& ring, const json& rows, const std::string& where) {
    if (!rows.is_array() || rows.empty())
        throw InputError(where + ": matrix must be a nonempty array of rows");
    std::size_t ncols = 0;
    for (const auto& row : rows) {
        if (!row.is_array() || row.empty())
            throw InputError(where + ": matrix rows must be nonempty arrays");
        if (ncols == 0)
            ncols = row.size();
        else if (row.size() != ncols)
            throw InputError(where + ": ragged matrix rows");
    }
    Matrix m(rows.size(), ncols);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < ncols; ++j) {
            const json& e = rows[i][j];
            if (!e.is_string())
                throw InputError(where + ": matrix entries must be strings, not JSON numbers");
            m.at(i, j) = ring.parse(e.get<std::string>());
        }
    return m;
}

json matrix_to_json(const Ring& ring, const Matrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(ring.format(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

json block_map_to_json(const Ring& ring, const BlockMap& m) {
    json out;
    out["shift"] = m.shift();
    json comps = json::array();
    for (const auto& [key, mat] : m.blocks()) {
        json c;
        c["src"] = key.src;
        c["tgt"] = key.tgt;
        c["matrix"] = matrix_to_json(ring, mat);
        comps.push_back(std::move(c));
    }
    out["components"] = std::move(comps);
    return out;
}

}  // namespace

namespace {

BasedComplex parse_complex_impl(const std::string& json_text, bool check_d2);

}  // namespace

BasedComplex parse_complex(const std::string& json_text, bool check_d2) {
    try {
        return parse_complex_impl(json_text, check_d2);
    } catch (const json::exception& e) {
        throw InputError(std::string("complex file: ") + e.what());
    }
}

namespace {

BasedComplex parse_complex_impl(const std::string& json_text, bool check_d2) {
    json j = parse_json(json_text, "complex file");
    if (!j.is_object()) throw InputError("complex file: top level must be an object");
    const json& format = require_key(j, "format", "complex file");
    if (format != "amt-complex/1")
        throw InputError("complex file: unsupported format " + format.dump());
    RingSpec ring_spec = RingSpec::parse(require_key(j, "ring", "complex file").get<std::string>());
    Ring ring(ring_spec);

    std::vector<Cell> cells;
    for (const json& c : require_key(j, "cells", "complex file")) {
        Cell cell;
        cell.id = require_key(c, "id", "cell").get<std::string>();
        cell.degree = require_key(c, "degree", "cell " + cell.id).get<int>();
        cell.rank = require_key(c, "rank", "cell " + cell.id).get<int>();
        cells.push_back(std::move(cell));
    }

    std::vector<std::tuple<std::string, std::string, Matrix>> components;
    for (const json& c : require_key(j, "differential", "complex file")) {
        std::string src = require_key(c, "src", "component").get<std::string>();
        std::string tgt = require_key(c, "tgt", "component").get<std::string>();
        std::string where = "component (" + src + " -> " + tgt + ")";
        components.emplace_back(src, tgt, parse_matrix(ring, require_key(c, "matrix", where), where));
    }

    return check_d2 ? build_complex(ring_spec, std::move(cells), std::move(components))
                    : build_complex_unchecked(ring_spec, std::move(cells), std::move(components));
}

}  // namespace

std::string write_complex(const BasedComplex& complex) {
    Ring ring = complex.ring();
    json j;
    j["format"] = "amt-complex/1";
    j["ring"] = complex.ring_spec().token();
    json cells = json::array();
    for (const Cell& c : complex.cells()) {  // already sorted by (degree, id)
        json cell;
        cell["id"] = c.id;
        cell["degree"] = c.degree;
        cell["rank"] = c.rank;
        cells.push_back(std::move(cell));
    }
    j["cells"] = std::move(cells);
    json diff = json::array();
    for (const auto& [key, mat] : complex.components()) {  // sorted by (src, tgt)
        json c;
        c["src"] = key.src;
        c["tgt"] = key.tgt;
        c["matrix"] = matrix_to_json(ring, mat);
        diff.push_back(std::move(c));
    }
    j["differential"] = std::move(diff);
    return j.dump(2) + "\n";
}

Matching parse_matching(const std::string& json_text) {
    try {
        json j = parse_json(json_text, "matching file");
        if (!j.is_object()) throw InputError("matching file: top level must be an object");
        if (require_key(j, "format", "matching file") != "amt-matching/1")
            throw InputError("matching file: unsupported format");
        std::vector<std::pair<std::string, std::string>> edges;
        for (const json& e : require_key(j, "edges", "matching file")) {
            if (!e.is_array() || e.size() != 2)
                throw InputError("matching file: each edge must be a two-element array");
            edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
        }
        return Matching(std::move(edges));
    } catch (const json::exception& e) {
        throw InputError(std::string("matching file: ") + e.what());
    }
}

std::string write_matching(const Matching& m) {
    json j;
    j["format"] = "amt-matching/1";
    json edges = json::array();
    for (const auto& [a, b] : m.edges) edges.push_back(json::array({a, b}));
    j["edges"] = std::move(edges);
    return j.dump(2) + "\n";
}

std::string write_maps(const Ring& ring, const BlockMap& f, const BlockMap& g, const BlockMap& h) {
    json j;
    j["f"] = block_map_to_json(ring, f);
    j["g"] = block_map_to_json(ring, g);
    j["h"] = block_map_to_json(ring, h);
    return j.dump(2) + "\n";
}

BasedComplex from_simplicial(const std::string& facets_text, const RingSpec& ring_spec) {
    Ring ring(ring_spec);
    std::vector<std::vector<long>> facets;
    std::istringstream in(facets_text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string_view sv(line);
        while (!sv.empty() && (sv.back() == '\r' || sv.back() == ' ')) sv.remove_suffix(1);
        if (sv.empty() || sv.front() == '#') continue;
        std::istringstream fields{std::string(sv)};
        std::vector<long> facet;
        long v;
        while (fields >> v) {
            if (v < 0) throw InputError("facets line " + std::to_string(lineno) + ": negative vertex");
            facet.push_back(v);
        }
        if (!fields.eof())
            throw InputError("facets line " + std::to_string(lineno) + ": malformed vertex label");
        if (facet.empty()) continue;
        if (facet.size() > 30)
            throw InputError("facets line " + std::to_string(lineno) +
                             ": facet with more than 30 vertices (2^31 faces)");
        std::sort(facet.begin(), facet.end());
        if (std::adjacent_find(facet.begin(), facet.end()) != facet.end())
            throw InputError("facets line " + std::to_string(lineno) + ": repeated vertex");
        facets.push_back(std::move(facet));
    }

    // All nonempty faces of all facets, deduplicated.
    std::set<std::vector<long>> faces;
    for (const auto& facet : facets) {
        const std::size_t n = facet.size();
        for (std::uint64_t mask = 1; mask < (1ull << n); ++mask) {
            std::vector<long> face;
            for (std::size_t i = 0; i < n; ++i)
                if (mask & (1ull << i)) face.push_back(facet[i]);
            faces.insert(std::move(face));
        }
    }

    auto face_id = [](const std::vector<long>& face) {
        std::string id = "s";
        for (std::size_t i = 0; i < face.size(); ++i) {
            if (i) id += "_";
            id += std::to_string(face[i]);
        }
        return id;
    };

    std::vector<Cell> cells;
    for (const auto& face : faces)
        cells.push_back({face_id(face), static_cast<int>(face.size()) - 1, 1});

    std::vector<std::tuple<std::string, std::string, Matrix>> components;
    for (const auto& face : faces) {
        if (face.size() < 2) continue;
        for (std::size_t i = 0; i < face.size(); ++i) {
            std::vector<long> sub = face;
            sub.erase(sub.begin() + static_cast<long>(i));
            Matrix sign(1, 1);
            sign.at(0, 0) = ring.from_int(i % 2 == 0 ? 1 : -1);
            components.emplace_back(face_id(face), face_id(sub), std::move(sign));
        }
    }
    return build_complex(ring_spec, std::move(cells), std::move(components));
}

BasedComplex gen_random(std::size_t cells, int max_degree, int max_rank, double density,
                        const RingSpec& ring_spec, std::uint64_t seed) {
    if (cells < 1) throw InputError("gen_random: cell count must be >= 1");
    if (max_degree < 0) throw InputError("gen_random: max degree must be >= 0");
    if (max_rank < 1) throw InputError("gen_random: max rank must be >= 1");
    if (!(density >= 0.0 && density <= 1.0))
        throw InputError("gen_random: density must lie in [0, 1]");
    Ring ring(ring_spec);
    Lcg rng(seed);

    std::vector<Cell> cell_list;
    for (std::size_t i = 0; i < cells; ++i) {
        Cell c;
        c.id = "c" + std::to_string(i);
        c.degree = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(max_degree) + 1));
        c.rank = 1 + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(max_rank)));
        cell_list.push_back(std::move(c));
    }

    // Skeleton: a partial matching of equal-rank cells one degree apart,
    // with signed identity blocks. Such a differential squares to zero
    // because no cell appears in two skeleton pairs.
    std::map<int, std::vector<std::size_t>> by_degree;
    for (std::size_t i = 0; i < cell_list.size(); ++i)
        by_degree[cell_list[i].degree].push_back(i);

    BlockMap d(-1);
    std::set<std::size_t> used;
    for (auto& [degree, upper] : by_degree) {
        auto lower_it = by_degree.find(degree - 1);
        if (lower_it == by_degree.end()) continue;
        std::vector<std::size_t> uppers = upper, lowers = lower_it->second;
        rng.shuffle(uppers);
        rng.shuffle(lowers);
        for (std::size_t u : uppers) {
            if (used.count(u)) continue;
            for (std::size_t l : lowers) {
                if (used.count(l) || cell_list[l].rank != cell_list[u].rank) continue;
                if (rng.next_unit() >= density) break;  // keep this upper cell unmatched
                Matrix block = Matrix::identity(ring, static_cast<std::size_t>(cell_list[u].rank));
                if (rng.next_below(2) == 1) block = negate(ring, block);
                d.set_block(cell_list[u].id, cell_list[l].id, std::move(block));
                used.insert(u);
                used.insert(l);
                break;
            }
        }
    }

    // Conjugate by random block transvections 1 + E between same-degree
    // cells: d <- (1 + E) d (1 - E) keeps d^2 = 0 exactly.
    CellTable table(cell_list);
    std::size_t transvections = static_cast<std::size_t>(density * 3.0 * static_cast<double>(cells));
    for (std::size_t k = 0; k < transvections; ++k) {
        std::size_t a = rng.next_below(cell_list.size());
        const auto& peers = by_degree[cell_list[a].degree];
        if (peers.size() < 2) continue;
        std::size_t b = peers[rng.next_below(peers.size())];
        if (b == a) continue;
        Matrix e(static_cast<std::size_t>(cell_list[b].rank),
                 static_cast<std::size_t>(cell_list[a].rank));
        static const int entry_pool[4] = {0, 0, 1, -1};
        for (std::size_t i = 0; i < e.rows(); ++i)
            for (std::size_t j = 0; j < e.cols(); ++j)
                e.at(i, j) = ring.from_int(entry_pool[rng.next_below(4)]);
        if (e.is_zero()) continue;
        BlockMap em(0);
        em.set_block(cell_list[a].id, cell_list[b].id, std::move(e));
        // (1 + E) d (1 - E) = d + E d - d E - E d E
        BlockMap ed = compose_block_maps(ring, em, d);
        BlockMap de = compose_block_maps(ring, d, em);
        BlockMap ede = compose_block_maps(ring, ed, em);
        d = add_block_maps(ring, d, sub_block_maps(ring, ed, add_block_maps(ring, de, ede)));
    }

    std::vector<std::tuple<std::string, std::string, Matrix>> components;
    for (const auto& [key, mat] : d.blocks()) components.emplace_back(key.src, key.tgt, mat);
    // build_complex re-checks d^2 = 0; the construction keeps it exact.
    return build_complex(ring_spec, std::move(cell_list), std::move(components));
}

std::string export_dot(const BasedComplex& complex, const std::optional<Matching>& m) {
    std::set<std::string> critical;
    std::set<std::pair<std::string, std::string>> matched;
    if (m) {
        require_valid_matching(complex, *m);
        for (const auto& id : critical_cells(complex, *m)) critical.insert(id);
        matched.insert(m->edges.begin(), m->edges.end());
    }

    std::ostringstream os;
    os << "digraph G {\n";
    for (const Cell& c : complex.cells()) {  // (degree, id) order
        os << "  \"" << c.id << "\" [label=\"" << c.id << " (deg " << c.degree << ")\"";
        if (m && critical.count(c.id)) os << ", shape=doublecircle";
        os << "];\n";
    }
    // Edges in (degree, id) order of the G(C) source, matched ones reversed.
    for (const Cell& c : complex.cells())
        for (const auto& [key, mat] : complex.components()) {
            if (key.src != c.id) continue;
            if (matched.count({key.src, key.tgt}))
                os << "  \"" << key.tgt << "\" -> \"" << key.src << "\" [style=bold];\n";
            else
                os << "  \"" << key.src << "\" -> \"" << key.tgt << "\";\n";
        }
    os << "}\n";
    return os.str();
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open file: " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot open file for writing: " + path.string());
    out << text;
    if (!out) throw InputError("failed writing file: " + path.string());
}

BasedComplex read_complex_file(const std::filesystem::path& path, bool check_d2) {
    return parse_complex(read_text_file(path), check_d2);
}

Matching read_matching_file(const std::filesystem::path& path) {
    return parse_matching(read_text_file(path));
}

BasedComplex read_facets_file(const std::filesystem::path& path, const RingSpec& ring) {
    return from_simplicial(read_text_file(path), ring);
}

}  // namespace amt

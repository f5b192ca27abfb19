#include "amt/verify.hpp"

#include <algorithm>
#include <sstream>

namespace amt {

namespace {

std::vector<BlockEntryFailure> nonzero_entries(const BlockMap& m) {
    std::vector<BlockEntryFailure> out;
    for (const auto& [key, mat] : m.blocks())
        for (std::size_t i = 0; i < mat.rows(); ++i)
            for (std::size_t j = 0; j < mat.cols(); ++j)
                if (!mat.at(i, j).is_zero()) out.push_back({key.src, key.tgt, i, j, mat.at(i, j)});
    return out;
}

}  // namespace

bool IdentityReport::passed() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const IdentityCheck& c) { return c.passed(); });
}

std::string IdentityReport::summary() const {
    std::ostringstream os;
    for (const auto& check : checks) {
        os << check.name << ": " << (check.passed() ? "ok" : "FAILED");
        if (!check.passed()) {
            const auto& f = check.failures.front();
            os << " at block (" << f.src << " -> " << f.tgt << ") entry (" << f.row << ", "
               << f.col << ")" << " [" << check.failures.size() << " nonzero entries]";
        }
        os << "\n";
    }
    return os.str();
}

IdentityReport verify_contraction(const Contraction& c) {
    Ring ring = c.big.ring();
    if (!(c.big.ring_spec() == c.small.ring_spec()))
        throw InputError("contraction complexes use different rings");
    CellTable table = CellTable::merge(c.big.table(), c.small.table());
    if (c.f.shift() != 0 || c.g.shift() != 0 || c.h.shift() != 1)
        throw InputError("contraction maps have wrong degree shifts");
    validate_block_map(table, c.f, "f");
    validate_block_map(table, c.g, "g");
    validate_block_map(table, c.h, "h");

    BlockMap d_big = differential_block_map(c.big);
    BlockMap d_small = differential_block_map(c.small);
    BlockMap id_big = identity_block_map(ring, c.big.cells());
    BlockMap id_small = identity_block_map(ring, c.small.cells());

    auto compose = [&](const BlockMap& a, const BlockMap& b) {
        return compose_block_maps(ring, a, b);
    };

    IdentityReport report;
    auto check = [&](std::string name, const BlockMap& difference) {
        report.checks.push_back({std::move(name), nonzero_entries(difference)});
    };

    check("fg = 1", sub_block_maps(ring, compose(c.f, c.g), id_small));
    BlockMap homotopy = add_block_maps(ring, compose(d_big, c.h), compose(c.h, d_big));
    check("gf = 1 + dh + hd",
          sub_block_maps(ring, compose(c.g, c.f), add_block_maps(ring, id_big, homotopy)));
    check("fh = 0", compose(c.f, c.h));
    check("hg = 0", compose(c.h, c.g));
    check("h^2 = 0", compose(c.h, c.h));
    check("f chain map", sub_block_maps(ring, compose(c.f, d_big), compose(d_small, c.f)));
    check("g chain map", sub_block_maps(ring, compose(c.g, d_small), compose(d_big, c.g)));
    check("d_big^2 = 0", compose(d_big, d_big));
    check("d_small^2 = 0", compose(d_small, d_small));
    return report;
}

std::vector<Int> smith_normal_form(const Matrix& mat) {
    const std::size_t rows = mat.rows(), cols = mat.cols();
    std::vector<std::vector<Int>> m(rows, std::vector<Int>(cols));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) {
            const Rat& v = mat.at(i, j).value();
            if (denominator(v) != 1)
                throw InputError("smith_normal_form requires integer entries");
            m[i][j] = numerator(v);
        }

    const std::size_t n = std::min(rows, cols);
    std::vector<Int> invariants(n, Int(0));

    for (std::size_t t = 0; t < n; ++t) {
        // Pivot: smallest nonzero absolute value in the trailing submatrix,
        // scanning rows before columns so ties resolve by position.
        std::size_t pr = rows, pc = cols;
        Int best(0);
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j) {
                if (m[i][j] == 0) continue;
                Int a = abs(m[i][j]);
                if (pr == rows || a < best) {
                    best = a;
                    pr = i;
                    pc = j;
                }
            }
        if (pr == rows) break;  // trailing submatrix is zero
        std::swap(m[t], m[pr]);
        if (pc != t)
            for (std::size_t i = 0; i < rows; ++i) std::swap(m[i][t], m[i][pc]);

        bool settled = false;
        while (!settled) {
            settled = true;
            // Clear column t by row operations, pulling smaller remainders
            // into the pivot as they appear.
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (m[i][t] == 0) continue;
                Int q = m[i][t] / m[t][t];
                if (q != 0)
                    for (std::size_t j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
                if (m[i][t] != 0) {
                    std::swap(m[t], m[i]);
                    settled = false;
                }
            }
            // Clear row t by column operations.
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (m[t][j] == 0) continue;
                Int q = m[t][j] / m[t][t];
                if (q != 0)
                    for (std::size_t i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
                if (m[t][j] != 0) {
                    for (std::size_t i = t; i < rows; ++i) std::swap(m[i][t], m[i][j]);
                    settled = false;
                }
            }
            if (!settled) continue;
            // Divisibility: the pivot must divide the trailing submatrix;
            // fold an offending row into row t and restart the clearing.
            for (std::size_t i = t + 1; i < rows && settled; ++i)
                for (std::size_t j = t + 1; j < cols && settled; ++j)
                    if (m[i][j] % m[t][t] != 0) {
                        for (std::size_t k = t; k < cols; ++k) m[t][k] += m[i][k];
                        settled = false;
                    }
        }
        invariants[t] = abs(m[t][t]);
    }
    return invariants;
}

namespace {

// Matrix of d restricted to degree n, rows indexed by the (degree, id)
// ordered cells of degree n-1, columns by those of degree n.
Matrix assemble_boundary(const BasedComplex& complex, int n) {
    const auto& src_cells = complex.cells_in_degree(n);
    const auto& tgt_cells = complex.cells_in_degree(n - 1);
    std::size_t cols = 0, rows = 0;
    std::map<std::string, std::size_t> col_offset, row_offset;
    for (const auto& id : src_cells) {
        col_offset[id] = cols;
        cols += static_cast<std::size_t>(complex.cell(id).rank);
    }
    for (const auto& id : tgt_cells) {
        row_offset[id] = rows;
        rows += static_cast<std::size_t>(complex.cell(id).rank);
    }
    Matrix out(rows, cols);
    for (const auto& src : src_cells)
        for (const auto& tgt : tgt_cells) {
            const Matrix* block = complex.component(src, tgt);
            if (!block) continue;
            std::size_t r0 = row_offset[tgt], c0 = col_offset[src];
            for (std::size_t i = 0; i < block->rows(); ++i)
                for (std::size_t j = 0; j < block->cols(); ++j)
                    out.at(r0 + i, c0 + j) = block->at(i, j);
        }
    return out;
}

std::size_t dimension_in_degree(const BasedComplex& complex, int n) {
    std::size_t dim = 0;
    for (const auto& id : complex.cells_in_degree(n))
        dim += static_cast<std::size_t>(complex.cell(id).rank);
    return dim;
}

}  // namespace

HomologyProfile homology(const BasedComplex& complex) {
    HomologyProfile profile;
    if (complex.cells().empty()) return profile;
    auto [lo, hi] = complex.degree_range();
    Ring ring = complex.ring();
    const bool integral = complex.ring_spec().kind == RingSpec::Kind::Integers;

    std::map<int, std::size_t> ranks;
    std::map<int, std::vector<Int>> invariants;
    for (int n = lo; n <= hi + 1; ++n) {
        Matrix d_n = assemble_boundary(complex, n);
        if (integral) {
            std::vector<Int> inv = smith_normal_form(d_n);
            std::size_t r = 0;
            for (const Int& v : inv)
                if (v != 0) ++r;
            ranks[n] = r;
            invariants[n] = std::move(inv);
        } else {
            ranks[n] = rank(ring, d_n);
        }
    }

    for (int n = lo; n <= hi; ++n) {
        std::size_t dim = dimension_in_degree(complex, n);
        DegreeHomology h;
        h.betti = dim - ranks[n] - ranks[n + 1];
        if (integral)
            for (const Int& v : invariants[n + 1])
                if (v > 1) h.torsion.push_back(v);
        if (h.betti > 0 || !h.torsion.empty()) profile.emplace(n, std::move(h));
    }
    return profile;
}

bool compare_homology(const BasedComplex& a, const BasedComplex& b) {
    if (!(a.ring_spec() == b.ring_spec()))
        throw InputError("cannot compare homology over different rings");
    return homology(a) == homology(b);
}

std::string format_homology(const RingSpec& ring, const HomologyProfile& profile) {
    std::ostringstream os;
    if (profile.empty()) {
        os << "trivial\n";
        return os.str();
    }
    for (const auto& [degree, h] : profile) {
        os << "deg " << degree << ": ";
        bool first = true;
        if (h.betti > 0) {
            os << ring.token() << "^" << h.betti;
            first = false;
        }
        for (const Int& t : h.torsion) {
            if (!first) os << " + ";
            os << "Z/" << t.str();
            first = false;
        }
        os << "\n";
    }
    return os.str();
}

}  // namespace amt

#include "amt/complex.hpp"

#include <algorithm>
#include <set>

namespace amt {

CellTable::CellTable(const std::vector<Cell>& cells) {
    for (const Cell& c : cells) cells_.emplace(c.id, c);
}

const Cell* CellTable::find(const std::string& id) const {
    auto it = cells_.find(id);
    return it == cells_.end() ? nullptr : &it->second;
}

const Cell& CellTable::require(const std::string& id) const {
    const Cell* c = find(id);
    if (!c) throw InputError("unknown cell '" + id + "'");
    return *c;
}

CellTable CellTable::merge(const CellTable& a, const CellTable& b) {
    CellTable out = a;
    for (const auto& [id, cell] : b.cells_) {
        auto [it, inserted] = out.cells_.emplace(id, cell);
        if (!inserted && !(it->second == cell))
            throw InputError("cell '" + id + "' has conflicting degree/rank across complexes");
    }
    return out;
}

const Matrix* BlockMap::block(const std::string& src, const std::string& tgt) const {
    auto it = blocks_.find({src, tgt});
    return it == blocks_.end() ? nullptr : &it->second;
}

void BlockMap::set_block(const std::string& src, const std::string& tgt, Matrix m) {
    if (m.is_zero()) {
        blocks_.erase({src, tgt});
        return;
    }
    blocks_.insert_or_assign({src, tgt}, std::move(m));
}

void BlockMap::accumulate(const Ring& ring, const std::string& src, const std::string& tgt,
                          const Matrix& m) {
    BlockKey key{src, tgt};
    auto it = blocks_.find(key);
    if (it == blocks_.end()) {
        if (!m.is_zero()) blocks_.emplace(key, m);
        return;
    }
    Matrix sum = add(ring, it->second, m);
    if (sum.is_zero())
        blocks_.erase(it);
    else
        it->second = std::move(sum);
}

const Matrix* BasedComplex::component(const std::string& src, const std::string& tgt) const {
    auto it = components_.find({src, tgt});
    return it == components_.end() ? nullptr : &it->second;
}

const std::vector<std::string>& BasedComplex::cells_in_degree(int n) const {
    static const std::vector<std::string> empty;
    auto it = by_degree_.find(n);
    return it == by_degree_.end() ? empty : it->second;
}

std::pair<int, int> BasedComplex::degree_range() const {
    if (by_degree_.empty()) return {0, -1};
    return {by_degree_.begin()->first, by_degree_.rbegin()->first};
}

bool BasedComplex::operator==(const BasedComplex& other) const {
    return ring_ == other.ring_ && cells_ == other.cells_ && components_ == other.components_;
}

BasedComplex build_complex_impl(RingSpec ring, std::vector<Cell> cells,
                                std::vector<std::tuple<std::string, std::string, Matrix>> components,
                                bool check_d2) {
    BasedComplex c;
    c.ring_ = ring;

    std::sort(cells.begin(), cells.end(), cell_before);
    std::set<std::string> seen;
    for (const Cell& cell : cells) {
        if (cell.id.empty()) throw InputError("empty cell id");
        if (!seen.insert(cell.id).second) throw InputError("duplicate cell id '" + cell.id + "'");
        if (cell.rank < 1)
            throw InputError("cell '" + cell.id + "' has rank " + std::to_string(cell.rank) +
                             "; ranks must be >= 1");
    }
    c.cells_ = std::move(cells);
    c.table_ = CellTable(c.cells_);
    for (const Cell& cell : c.cells_) c.by_degree_[cell.degree].push_back(cell.id);

    for (auto& [src, tgt, mat] : components) {
        const Cell& a = c.table_.require(src);
        const Cell& b = c.table_.require(tgt);
        if (b.degree != a.degree - 1)
            throw InputError("component (" + src + " -> " + tgt + ") does not drop degree by 1 (" +
                             std::to_string(a.degree) + " -> " + std::to_string(b.degree) + ")");
        if (mat.rows() != static_cast<std::size_t>(b.rank) ||
            mat.cols() != static_cast<std::size_t>(a.rank))
            throw InputError("component (" + src + " -> " + tgt + ") has shape " +
                             std::to_string(mat.rows()) + "x" + std::to_string(mat.cols()) +
                             ", expected " + std::to_string(b.rank) + "x" + std::to_string(a.rank));
        if (mat.is_zero()) continue;  // zero blocks are never stored
        auto [it, inserted] = c.components_.emplace(BlockKey{src, tgt}, std::move(mat));
        if (!inserted) throw InputError("duplicate component (" + src + " -> " + tgt + ")");
    }

    if (check_d2) {
        auto violations = check_d_squared(c);
        if (!violations.empty()) {
            const auto& v = violations.front();
            Ring r(ring);
            throw ValidationError(
                "d^2 != 0: component (" + v.tgt + " <- " + v.src + ") entry (" +
                std::to_string(v.row) + ", " + std::to_string(v.col) + ") = " + r.format(v.value) +
                (violations.size() > 1
                     ? " (+" + std::to_string(violations.size() - 1) + " more violations)"
                     : ""));
        }
    }
    return c;
}

BasedComplex build_complex(RingSpec ring, std::vector<Cell> cells,
                           std::vector<std::tuple<std::string, std::string, Matrix>> components) {
    return build_complex_impl(std::move(ring), std::move(cells), std::move(components), true);
}

BasedComplex build_complex_unchecked(RingSpec ring, std::vector<Cell> cells,
                                     std::vector<std::tuple<std::string, std::string, Matrix>> components) {
    return build_complex_impl(std::move(ring), std::move(cells), std::move(components), false);
}

std::vector<DSquaredViolation> check_d_squared(const BasedComplex& complex) {
    Ring ring = complex.ring();
    BlockMap d = differential_block_map(complex);
    BlockMap dd = compose_block_maps(ring, d, d);
    // Keys come out of the ordered map as (src, tgt); violations are ordered
    // by (tgt, src, row, col).
    std::vector<DSquaredViolation> out;
    for (const auto& [key, mat] : dd.blocks())
        for (std::size_t i = 0; i < mat.rows(); ++i)
            for (std::size_t j = 0; j < mat.cols(); ++j)
                if (!mat.at(i, j).is_zero()) out.push_back({key.tgt, key.src, i, j, mat.at(i, j)});
    std::sort(out.begin(), out.end(), [](const DSquaredViolation& a, const DSquaredViolation& b) {
        return std::tie(a.tgt, a.src, a.row, a.col) < std::tie(b.tgt, b.src, b.row, b.col);
    });
    return out;
}

std::map<std::string, std::vector<Scalar>> apply_block_map(const Ring& ring, const CellTable& cells,
                                                           const BlockMap& m, const std::string& src,
                                                           const std::vector<Scalar>& vec) {
    const Cell& a = cells.require(src);
    if (vec.size() != static_cast<std::size_t>(a.rank))
        throw InputError("vector length " + std::to_string(vec.size()) + " does not match rank " +
                         std::to_string(a.rank) + " of cell '" + src + "'");
    std::map<std::string, std::vector<Scalar>> out;
    for (const auto& [key, mat] : m.blocks()) {
        if (key.src != src) continue;
        std::vector<Scalar> image(mat.rows());
        bool nonzero = false;
        for (std::size_t i = 0; i < mat.rows(); ++i) {
            Scalar acc;
            for (std::size_t j = 0; j < mat.cols(); ++j)
                acc = ring.add(acc, ring.mul(mat.at(i, j), vec[j]));
            image[i] = acc;
            nonzero = nonzero || !acc.is_zero();
        }
        if (nonzero) out.emplace(key.tgt, std::move(image));
    }
    return out;
}

BlockMap compose_block_maps(const Ring& ring, const BlockMap& outer, const BlockMap& inner) {
    BlockMap out(outer.shift() + inner.shift());
    // Group outer blocks by source for the join on the middle cell.
    std::map<std::string, std::vector<const std::pair<const BlockKey, Matrix>*>> outer_by_src;
    for (const auto& entry : outer.blocks()) outer_by_src[entry.first.src].push_back(&entry);
    for (const auto& [ikey, imat] : inner.blocks()) {
        auto it = outer_by_src.find(ikey.tgt);
        if (it == outer_by_src.end()) continue;
        for (const auto* oentry : it->second) {
            const Matrix& omat = oentry->second;
            if (omat.cols() != imat.rows())
                throw InputError("block composition dimension mismatch at middle cell '" +
                                 ikey.tgt + "'");
            out.accumulate(ring, ikey.src, oentry->first.tgt, multiply(ring, omat, imat));
        }
    }
    return out;
}

BlockMap add_block_maps(const Ring& ring, const BlockMap& a, const BlockMap& b) {
    if (a.shift() != b.shift())
        throw InputError("cannot add block maps of shifts " + std::to_string(a.shift()) + " and " +
                         std::to_string(b.shift()));
    BlockMap out = a;
    for (const auto& [key, mat] : b.blocks()) out.accumulate(ring, key.src, key.tgt, mat);
    return out;
}

BlockMap sub_block_maps(const Ring& ring, const BlockMap& a, const BlockMap& b) {
    return add_block_maps(ring, a, negate_block_map(ring, b));
}

BlockMap negate_block_map(const Ring& ring, const BlockMap& a) {
    BlockMap out(a.shift());
    for (const auto& [key, mat] : a.blocks()) out.set_block(key.src, key.tgt, negate(ring, mat));
    return out;
}

BlockMap identity_block_map(const Ring& ring, const std::vector<Cell>& cells) {
    BlockMap out(0);
    for (const Cell& c : cells)
        out.set_block(c.id, c.id, Matrix::identity(ring, static_cast<std::size_t>(c.rank)));
    return out;
}

BlockMap differential_block_map(const BasedComplex& complex) {
    BlockMap d(-1);
    for (const auto& [key, mat] : complex.components()) d.set_block(key.src, key.tgt, mat);
    return d;
}

void validate_block_map(const CellTable& cells, const BlockMap& m, const std::string& what) {
    for (const auto& [key, mat] : m.blocks()) {
        const Cell& a = cells.require(key.src);
        const Cell& b = cells.require(key.tgt);
        if (b.degree != a.degree + m.shift())
            throw InputError(what + ": block (" + key.src + " -> " + key.tgt +
                             ") violates shift " + std::to_string(m.shift()));
        if (mat.rows() != static_cast<std::size_t>(b.rank) ||
            mat.cols() != static_cast<std::size_t>(a.rank))
            throw InputError(what + ": block (" + key.src + " -> " + key.tgt + ") has shape " +
                             std::to_string(mat.rows()) + "x" + std::to_string(mat.cols()) +
                             ", expected " + std::to_string(b.rank) + "x" +
                             std::to_string(a.rank));
    }
}

}  // namespace amt

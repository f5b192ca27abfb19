#pragma once

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "amt/matrix.hpp"

namespace amt {

// One free summand C_alpha of a based complex.
struct Cell {
    std::string id;
    int degree = 0;
    int rank = 1;

    bool operator==(const Cell&) const = default;
};

// Fixed global ordering of cells: by (degree, id).
inline bool cell_before(const Cell& a, const Cell& b) {
    return std::tie(a.degree, a.id) < std::tie(b.degree, b.id);
}

struct BlockKey {
    std::string src, tgt;
    auto operator<=>(const BlockKey&) const = default;
};

// Lookup table from cell id to Cell for one complex or a merged pair.
class CellTable {
public:
    CellTable() = default;
    explicit CellTable(const std::vector<Cell>& cells);

    const Cell* find(const std::string& id) const;
    const Cell& require(const std::string& id) const;  // throws InputError

    // Union of two tables; shared ids must agree on degree and rank.
    static CellTable merge(const CellTable& a, const CellTable& b);

private:
    std::map<std::string, Cell> cells_;
};

// A graded map of fixed degree shift stored as sparse blocks. Zero blocks
// are never stored; absence means zero.
class BlockMap {
public:
    explicit BlockMap(int shift = 0) : shift_(shift) {}

    int shift() const { return shift_; }
    bool empty() const { return blocks_.empty(); }
    std::size_t block_count() const { return blocks_.size(); }

    const std::map<BlockKey, Matrix>& blocks() const { return blocks_; }
    const Matrix* block(const std::string& src, const std::string& tgt) const;

    // Overwrites the (src, tgt) block; zero matrices are dropped.
    void set_block(const std::string& src, const std::string& tgt, Matrix m);
    // Adds into the (src, tgt) block; a sum that cancels to zero is dropped.
    void accumulate(const Ring& ring, const std::string& src, const std::string& tgt, const Matrix& m);

    bool operator==(const BlockMap&) const = default;

private:
    int shift_;
    std::map<BlockKey, Matrix> blocks_;
};

// A finite based chain complex: cells plus the block-decomposed degree -1
// differential, validated so that d^2 = 0. Immutable after construction.
class BasedComplex {
public:
    BasedComplex() = default;  // the empty complex over Z

    const RingSpec& ring_spec() const { return ring_; }
    Ring ring() const { return Ring(ring_); }

    const std::vector<Cell>& cells() const { return cells_; }  // sorted by (degree, id)
    const CellTable& table() const { return table_; }
    bool has_cell(const std::string& id) const { return table_.find(id) != nullptr; }
    const Cell& cell(const std::string& id) const { return table_.require(id); }

    // Differential blocks keyed by (src, tgt); deg(tgt) = deg(src) - 1.
    const std::map<BlockKey, Matrix>& components() const { return components_; }
    const Matrix* component(const std::string& src, const std::string& tgt) const;

    const std::vector<std::string>& cells_in_degree(int n) const;  // ids, sorted
    std::pair<int, int> degree_range() const;                      // inclusive; (0, -1) if empty

    bool operator==(const BasedComplex&) const;

private:
    RingSpec ring_;
    std::vector<Cell> cells_;
    CellTable table_;
    std::map<BlockKey, Matrix> components_;
    std::map<int, std::vector<std::string>> by_degree_;

    friend BasedComplex build_complex_impl(RingSpec, std::vector<Cell>,
                                           std::vector<std::tuple<std::string, std::string, Matrix>>,
                                           bool);
};

// Validates and builds a complex: unique ids, positive ranks, every component
// one degree down with matching block dimensions, zero blocks dropped, and
// d^2 = 0 (the error names the first offending (tgt, src) pair and entry).
BasedComplex build_complex(RingSpec ring, std::vector<Cell> cells,
                           std::vector<std::tuple<std::string, std::string, Matrix>> components);

// Same structural validation but skips the d^2 check; used by callers that
// want the full violation list from check_d_squared instead of an exception.
BasedComplex build_complex_unchecked(RingSpec ring, std::vector<Cell> cells,
                                     std::vector<std::tuple<std::string, std::string, Matrix>> components);

struct DSquaredViolation {
    std::string tgt;  // gamma: two degrees below src
    std::string src;  // alpha
    std::size_t row = 0, col = 0;
    Scalar value;

    bool operator==(const DSquaredViolation&) const = default;
};

// All nonzero entries of d\circ d, ordered lexicographically by
// (tgt id, src id, row, col). Empty iff d^2 = 0.
std::vector<DSquaredViolation> check_d_squared(const BasedComplex& complex);

// Evaluates a block map on a vector supported on a single source cell.
// Returns the image decomposed by target cell; absent targets are zero.
std::map<std::string, std::vector<Scalar>> apply_block_map(const Ring& ring, const CellTable& cells,
                                                           const BlockMap& m, const std::string& src,
                                                           const std::vector<Scalar>& vec);

// outer \circ inner, as sparse block composition; shift adds.
BlockMap compose_block_maps(const Ring& ring, const BlockMap& outer, const BlockMap& inner);

BlockMap add_block_maps(const Ring& ring, const BlockMap& a, const BlockMap& b);
BlockMap sub_block_maps(const Ring& ring, const BlockMap& a, const BlockMap& b);
BlockMap negate_block_map(const Ring& ring, const BlockMap& a);

// Identity on the given cells (shift 0, one identity block per cell).
BlockMap identity_block_map(const Ring& ring, const std::vector<Cell>& cells);

// The differential of a complex as a shift -1 block map.
BlockMap differential_block_map(const BasedComplex& complex);

// Checks every block of m against the table: both cells exist, the degree
// difference equals the shift, and dimensions are rank(tgt) x rank(src).
void validate_block_map(const CellTable& cells, const BlockMap& m, const std::string& what);

}  // namespace amt

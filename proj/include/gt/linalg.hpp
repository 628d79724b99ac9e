#pragma once

#include <gmpxx.h>

#include <map>
#include <utility>
#include <vector>

namespace gt {

// Sparse vectors sorted by column index, no zero entries.
using IntRow = std::vector<std::pair<int, mpz_class>>;
using RatRow = std::vector<std::pair<int, mpq_class>>;

// clears denominators and divides out the content; leading entry made positive
IntRow to_primitive_int_row(const RatRow& row);
IntRow to_primitive_int_row(const std::map<int, mpq_class>& row);

// Incremental fraction-free row echelon form over Z.  Pivot = lowest column of a row.
class Echelon {
public:
    explicit Echelon(int columns = 0) : columns_(columns) {}

    int columns() const { return columns_; }
    std::size_t rank() const { return pivots_.size(); }

    // returns true when the row was independent of the existing span
    bool insert(IntRow row);
    bool insert(const RatRow& row) { return insert(to_primitive_int_row(row)); }

    bool is_pivot(int col) const { return pivots_.count(col) != 0; }
    const std::map<int, IntRow>& pivot_rows() const { return pivots_; }

    // full reduction at every pivot column; zero result iff v in the row span
    RatRow reduce(const RatRow& v) const;
    bool contains(const RatRow& v) const { return reduce(v).empty(); }

    std::vector<int> free_columns() const;

    // basis of the solution space of (rows) x = 0, one vector per free column
    std::vector<std::vector<mpq_class>> nullspace() const;

private:
    int columns_;
    std::map<int, IntRow> pivots_;
};

std::size_t rank_of(const std::vector<RatRow>& rows, int columns);

}  // namespace gt

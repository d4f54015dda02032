#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace arrtopo {

using BigInt = boost::multiprecision::cpp_int;

struct IntegerOverflow : std::overflow_error {
    using std::overflow_error::overflow_error;
};

struct MatrixEntry {
    std::size_t row;
    std::int64_t value;

    friend bool operator==(const MatrixEntry&, const MatrixEntry&) = default;
};

/// Sparse integer matrix stored column by column. Each column keeps its
/// nonzero entries sorted by row index; zeros are never stored.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols);

    /// Sorts every column, sums repeated rows and drops zeros.
    static IntMatrix from_columns(std::size_t rows, std::vector<std::vector<MatrixEntry>> columns);
    static IntMatrix from_dense(const std::vector<std::vector<std::int64_t>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return columns_.size(); }
    std::size_t nonzeros() const;
    bool is_zero() const { return nonzeros() == 0; }

    std::int64_t at(std::size_t row, std::size_t col) const;
    void set(std::size_t row, std::size_t col, std::int64_t value);
    std::span<const MatrixEntry> column(std::size_t col) const { return columns_.at(col); }

    std::vector<std::vector<std::int64_t>> to_dense() const;

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::vector<std::vector<MatrixEntry>> columns_;
};

/// Exact product a * b. Throws IntegerOverflow if an entry leaves int64 range.
IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);

} // namespace arrtopo

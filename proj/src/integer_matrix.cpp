#include "arrtopo/integer_matrix.hpp"

#include <algorithm>
#include <map>

namespace arrtopo {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), columns_(cols) {}

IntMatrix IntMatrix::from_columns(std::size_t rows, std::vector<std::vector<MatrixEntry>> columns)
{
    IntMatrix m;
    m.rows_ = rows;
    m.columns_ = std::move(columns);
    for (auto& col : m.columns_) {
        std::sort(col.begin(), col.end(), [](const MatrixEntry& x, const MatrixEntry& y) { return x.row < y.row; });
        std::vector<MatrixEntry> merged;
        merged.reserve(col.size());
        for (const auto& e : col) {
            if (e.row >= rows)
                throw std::out_of_range("matrix entry row out of range");
            if (!merged.empty() && merged.back().row == e.row) {
                if (__builtin_add_overflow(merged.back().value, e.value, &merged.back().value))
                    throw IntegerOverflow("matrix entry overflow while merging");
            } else {
                merged.push_back(e);
            }
        }
        std::erase_if(merged, [](const MatrixEntry& e) { return e.value == 0; });
        col = std::move(merged);
    }
    return m;
}

IntMatrix IntMatrix::from_dense(const std::vector<std::vector<std::int64_t>>& rows)
{
    const std::size_t n_rows = rows.size();
    const std::size_t n_cols = rows.empty() ? 0 : rows.front().size();
    std::vector<std::vector<MatrixEntry>> cols(n_cols);
    for (std::size_t r = 0; r < n_rows; ++r) {
        if (rows[r].size() != n_cols)
            throw std::invalid_argument("ragged dense matrix");
        for (std::size_t c = 0; c < n_cols; ++c)
            if (rows[r][c] != 0)
                cols[c].push_back({r, rows[r][c]});
    }
    return from_columns(n_rows, std::move(cols));
}

std::size_t IntMatrix::nonzeros() const
{
    std::size_t total = 0;
    for (const auto& col : columns_)
        total += col.size();
    return total;
}

std::int64_t IntMatrix::at(std::size_t row, std::size_t col) const
{
    const auto& c = columns_.at(col);
    auto it = std::lower_bound(c.begin(), c.end(), row, [](const MatrixEntry& e, std::size_t r) { return e.row < r; });
    return (it != c.end() && it->row == row) ? it->value : 0;
}

void IntMatrix::set(std::size_t row, std::size_t col, std::int64_t value)
{
    if (row >= rows_)
        throw std::out_of_range("matrix row out of range");
    auto& c = columns_.at(col);
    auto it = std::lower_bound(c.begin(), c.end(), row, [](const MatrixEntry& e, std::size_t r) { return e.row < r; });
    if (it != c.end() && it->row == row) {
        if (value == 0)
            c.erase(it);
        else
            it->value = value;
    } else if (value != 0) {
        c.insert(it, {row, value});
    }
}

std::vector<std::vector<std::int64_t>> IntMatrix::to_dense() const
{
    std::vector<std::vector<std::int64_t>> out(rows_, std::vector<std::int64_t>(cols(), 0));
    for (std::size_t c = 0; c < cols(); ++c)
        for (const auto& e : columns_[c])
            out[e.row][c] = e.value;
    return out;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b)
{
    if (a.cols() != b.rows())
        throw std::invalid_argument("matrix dimensions do not compose");
    std::vector<std::vector<MatrixEntry>> out(b.cols());
    for (std::size_t c = 0; c < b.cols(); ++c) {
        std::map<std::size_t, std::int64_t> acc;
        for (const auto& be : b.column(c)) {
            for (const auto& ae : a.column(be.row)) {
                std::int64_t prod = 0;
                if (__builtin_mul_overflow(ae.value, be.value, &prod) ||
                    __builtin_add_overflow(acc[ae.row], prod, &acc[ae.row]))
                    throw IntegerOverflow("matrix product overflow");
            }
        }
        for (const auto& [row, v] : acc)
            if (v != 0)
                out[c].push_back({row, v});
    }
    return IntMatrix::from_columns(a.rows(), std::move(out));
}

} // namespace arrtopo

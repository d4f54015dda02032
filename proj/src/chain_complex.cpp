#include "arrtopo/chain_complex.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <queue>
#include <stdexcept>
#include <tuple>

namespace arrtopo {

ChainComplex::ChainComplex(std::vector<std::size_t> ranks, std::vector<IntMatrix> boundaries)
    : ranks_(std::move(ranks)), boundaries_(std::move(boundaries))
{
    boundaries_.resize(ranks_.size());
    for (std::size_t d = 0; d < ranks_.size(); ++d) {
        if (d == 0) {
            boundaries_[0] = IntMatrix(0, ranks_[0]);
            continue;
        }
        if (boundaries_[d].rows() == 0 && boundaries_[d].cols() == 0 && (ranks_[d] || ranks_[d - 1]))
            boundaries_[d] = IntMatrix(ranks_[d - 1], ranks_[d]);
        if (boundaries_[d].rows() != ranks_[d - 1] || boundaries_[d].cols() != ranks_[d])
            throw std::invalid_argument("boundary matrix shape does not match chain ranks in degree " +
                                        std::to_string(d));
    }
}

IntMatrix ChainComplex::boundary(std::size_t d) const
{
    if (d < boundaries_.size())
        return boundaries_[d];
    return IntMatrix(rank(d - 1), rank(d));
}

bool ChainComplex::boundary_squared_vanishes() const
{
    for (std::size_t d = 1; d + 1 < ranks_.size(); ++d)
        if (!multiply(boundaries_[d], boundaries_[d + 1]).is_zero())
            return false;
    return true;
}

namespace {

ChainComplex build(const CellComplex& complex, const std::vector<char>& excluded)
{
    const long dim = complex.dimension();
    std::vector<std::size_t> ranks(static_cast<std::size_t>(std::max(dim + 1, 0L)), 0);
    std::vector<std::size_t> local(complex.size(), 0);
    for (CellId id = 0; id < complex.size(); ++id) {
        if (excluded[id])
            continue;
        const auto& c = complex.cell(id);
        local[id] = ranks[c.dim]++;
    }
    while (!ranks.empty() && ranks.back() == 0)
        ranks.pop_back();

    std::vector<std::vector<std::vector<MatrixEntry>>> cols(ranks.size());
    for (std::size_t d = 0; d < ranks.size(); ++d)
        cols[d].resize(ranks[d]);
    for (CellId id = 0; id < complex.size(); ++id) {
        if (excluded[id])
            continue;
        const auto& c = complex.cell(id);
        if (c.dim == 0)
            continue;
        for (const auto& inc : c.boundary) {
            if (excluded.at(inc.facet))
                continue;
            cols[c.dim][local[id]].push_back({local[inc.facet], inc.coefficient});
        }
    }
    std::vector<IntMatrix> mats(ranks.size());
    for (std::size_t d = 1; d < ranks.size(); ++d)
        mats[d] = IntMatrix::from_columns(ranks[d - 1], std::move(cols[d]));
    return ChainComplex(std::move(ranks), std::move(mats));
}

} // namespace

ChainComplex chain_complex_of_unchecked(const CellComplex& complex)
{
    return build(complex, std::vector<char>(complex.size(), 0));
}

ChainComplex chain_complex_of(const CellComplex& complex)
{
    auto report = validate_complex(complex);
    if (!report.ok())
        throw InvalidComplexError(std::move(report));
    return chain_complex_of_unchecked(complex);
}

ChainComplex relative_chain_complex(const CellComplex& complex, const CellSet& sub)
{
    if (!complex.is_subcomplex(sub))
        throw std::invalid_argument("relative chains need a subcomplex");
    std::vector<char> excluded(complex.size(), 0);
    for (CellId id : sub)
        excluded.at(id) = 1;
    return build(complex, excluded);
}

} // namespace arrtopo

namespace arrtopo {

namespace {

// ∂_d stored both ways so row and column sizes are cheap to read.
struct SparseBoundary {
    std::vector<std::map<std::size_t, std::int64_t>> cols; // col -> (row -> coeff)
    std::vector<std::map<std::size_t, std::int64_t>> rows; // row -> (col -> coeff)
};

// (cost, degree, column, row); smallest first.
using Candidate = std::tuple<std::size_t, std::size_t, std::size_t, std::size_t>;

std::int64_t checked_sub_mul(std::int64_t a, std::int64_t q, std::int64_t b)
{
    std::int64_t prod = 0;
    std::int64_t out = 0;
    if (__builtin_mul_overflow(q, b, &prod) || __builtin_sub_overflow(a, prod, &out))
        throw IntegerOverflow("unit-pair reduction overflowed int64");
    return out;
}

} // namespace

ChainComplex reduce_unit_pairs(const ChainComplex& chain)
{
    const std::size_t top = chain.top_degree_count();
    std::vector<SparseBoundary> bd(top);
    std::vector<std::vector<char>> alive(top);
    for (std::size_t d = 0; d < top; ++d)
        alive[d].assign(chain.rank(d), 1);
    for (std::size_t d = 1; d < top; ++d) {
        const IntMatrix m = chain.boundary(d);
        bd[d].cols.resize(m.cols());
        bd[d].rows.resize(m.rows());
        for (std::size_t c = 0; c < m.cols(); ++c)
            for (const auto& e : m.column(c)) {
                bd[d].cols[c][e.row] = e.value;
                bd[d].rows[e.row][c] = e.value;
            }
    }

    auto cost = [&](std::size_t d, std::size_t c, std::size_t r) {
        return (bd[d].cols[c].size() - 1) * (bd[d].rows[r].size() - 1);
    };
    std::priority_queue<Candidate, std::vector<Candidate>, std::greater<>> heap;
    auto push_col = [&](std::size_t d, std::size_t c) {
        for (const auto& [r, v] : bd[d].cols[c])
            if (v == 1 || v == -1)
                heap.emplace(cost(d, c, r), d, c, r);
    };
    auto push_row_if_single = [&](std::size_t d, std::size_t r) {
        const auto& row = bd[d].rows[r];
        if (row.size() == 1 && (row.begin()->second == 1 || row.begin()->second == -1))
            heap.emplace(0, d, row.begin()->first, r);
    };
    for (std::size_t d = 1; d < top; ++d)
        for (std::size_t c = 0; c < bd[d].cols.size(); ++c)
            push_col(d, c);

    auto remove = [&](std::size_t k, std::size_t x) {
        alive[k][x] = 0;
        if (k >= 1) {
            for (const auto& [r, v] : bd[k].cols[x]) {
                bd[k].rows[r].erase(x);
                push_row_if_single(k, r);
            }
            bd[k].cols[x].clear();
        }
        if (k + 1 < top) {
            for (const auto& [c, v] : bd[k + 1].rows[x]) {
                bd[k + 1].cols[c].erase(x);
                if (bd[k + 1].cols[c].size() == 1)
                    push_col(k + 1, c);
            }
            bd[k + 1].rows[x].clear();
        }
    };

    while (!heap.empty()) {
        const auto [stored, d, c, r] = heap.top();
        heap.pop();
        if (!alive[d][c] || !alive[d - 1][r])
            continue;
        auto it = bd[d].cols[c].find(r);
        if (it == bd[d].cols[c].end() || (it->second != 1 && it->second != -1))
            continue;
        const std::size_t now = cost(d, c, r);
        if (now > stored) {
            heap.emplace(now, d, c, r);
            continue;
        }
        // Every other column x meeting row r gets x -= (x_r / b) * column c,
        // with b = +-1 so the quotient is exact.
        const std::int64_t b = it->second;
        const std::vector<std::pair<std::size_t, std::int64_t>> pivot_col(bd[d].cols[c].begin(),
                                                                          bd[d].cols[c].end());
        const std::vector<std::pair<std::size_t, std::int64_t>> others(bd[d].rows[r].begin(),
                                                                       bd[d].rows[r].end());
        for (const auto& [x, xr] : others) {
            if (x == c)
                continue;
            const std::int64_t q = xr * b;
            auto& col = bd[d].cols[x];
            for (const auto& [row, v] : pivot_col) {
                const std::int64_t updated = checked_sub_mul(col.count(row) ? col[row] : 0, q, v);
                if (updated == 0) {
                    col.erase(row);
                    bd[d].rows[row].erase(x);
                } else {
                    col[row] = updated;
                    bd[d].rows[row][x] = updated;
                }
            }
        }
        remove(d, c);
        remove(d - 1, r);
        for (const auto& [x, xr] : others)
            if (x != c && alive[d][x])
                push_col(d, x);
    }

    std::vector<std::vector<std::size_t>> new_index(top);
    std::vector<std::size_t> ranks(top, 0);
    for (std::size_t d = 0; d < top; ++d) {
        new_index[d].assign(alive[d].size(), 0);
        for (std::size_t x = 0; x < alive[d].size(); ++x)
            if (alive[d][x])
                new_index[d][x] = ranks[d]++;
    }
    std::vector<IntMatrix> mats(top);
    for (std::size_t d = 1; d < top; ++d) {
        std::vector<std::vector<MatrixEntry>> cols(ranks[d]);
        for (std::size_t c = 0; c < bd[d].cols.size(); ++c) {
            if (!alive[d][c])
                continue;
            for (const auto& [r, v] : bd[d].cols[c])
                cols[new_index[d][c]].push_back({new_index[d - 1][r], v});
        }
        mats[d] = IntMatrix::from_columns(ranks[d - 1], std::move(cols));
    }
    while (!ranks.empty() && ranks.back() == 0) {
        ranks.pop_back();
        mats.pop_back();
    }
    return ChainComplex(std::move(ranks), std::move(mats));
}

} // namespace arrtopo

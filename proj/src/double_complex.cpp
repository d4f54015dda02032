#include "arrtopo/double_complex.hpp"

#include <stdexcept>

namespace arrtopo {

DoubleComplex::DoubleComplex(const Arrangement& arr, std::size_t m)
    : m_(m), ambient_(chain_complex_of(arr.ambient()))
{
    if (m + 1 > arr.size())
        throw std::invalid_argument("truncation level m = " + std::to_string(m) + " outside [0, n-1]");
    const CellComplex& amb = arr.ambient();
    degree_index_.resize(amb.size());
    cell_of_degree_.resize(ambient_.top_degree_count());
    for (CellId c = 0; c < amb.size(); ++c) {
        auto& slot = cell_of_degree_.at(amb.cell(c).dim);
        degree_index_[c] = slot.size();
        slot.push_back(c);
    }

    std::map<IndexSet, std::vector<CellId>> members;
    for (CellId c = 0; c < amb.size(); ++c)
        for (const IndexSet& J : subsets_up_to(arr.signature(c), m + 1))
            members[J].push_back(c);

    blocks_of_p_.resize(m + 1);
    for (auto& [J, cells] : members) {
        Block b;
        b.J = J;
        b.cells_by_degree.resize(ambient_.top_degree_count());
        for (CellId c : cells) {
            auto& slot = b.cells_by_degree[amb.cell(c).dim];
            b.position[c] = slot.size();
            slot.push_back(c);
        }
        blocks_of_p_[J.size() - 1].push_back(blocks_.size());
        block_by_mask_[J.mask()] = blocks_.size();
        blocks_.push_back(std::move(b));
    }
}

const DoubleComplex::Block* DoubleComplex::find_block(const IndexSet& J) const
{
    auto it = block_by_mask_.find(J.mask());
    return it == block_by_mask_.end() ? nullptr : &blocks_[it->second];
}

std::size_t DoubleComplex::block_offset(std::size_t block, std::size_t q) const
{
    const std::size_t p = blocks_[block].J.size() - 1;
    std::size_t offset = 0;
    for (std::size_t b : blocks_of_p_[p]) {
        if (b == block)
            return offset;
        offset += q < blocks_[b].cells_by_degree.size() ? blocks_[b].cells_by_degree[q].size() : 0;
    }
    throw std::logic_error("block not in its own row");
}

std::size_t DoubleComplex::group_rank(std::size_t p, std::size_t q) const
{
    if (p > m_ || q >= max_q())
        return 0;
    std::size_t total = 0;
    for (std::size_t b : blocks_of_p_[p])
        total += blocks_[b].cells_by_degree[q].size();
    return total;
}

IntMatrix DoubleComplex::horizontal(std::size_t p, std::size_t q) const
{
    if (p == 0 || p > m_)
        return IntMatrix(p == 0 ? 0 : group_rank(p - 1, q), group_rank(p, q));
    std::vector<std::vector<MatrixEntry>> cols(group_rank(p, q));
    for (std::size_t b : blocks_of_p_[p]) {
        const Block& blk = blocks_[b];
        const std::size_t col0 = block_offset(b, q);
        const auto js = blk.J.members();
        for (std::size_t t = 0; t < js.size(); ++t) {
            IndexSet face = blk.J;
            face.erase(js[t]);
            const Block* target = find_block(face);
            const std::size_t target_index = block_by_mask_.at(face.mask());
            const std::size_t row0 = block_offset(target_index, q);
            const std::int64_t sign = (t % 2 == 0) ? 1 : -1;
            const auto& cells = blk.cells_by_degree[q];
            for (std::size_t k = 0; k < cells.size(); ++k)
                cols[col0 + k].push_back({row0 + target->position.at(cells[k]), sign});
        }
    }
    return IntMatrix::from_columns(group_rank(p - 1, q), std::move(cols));
}

IntMatrix DoubleComplex::vertical(std::size_t p, std::size_t q) const
{
    const std::size_t rows = q == 0 ? 0 : group_rank(p, q - 1);
    if (q == 0 || p > m_)
        return IntMatrix(rows, group_rank(p, q));
    const IntMatrix amb = ambient_.boundary(q);
    std::vector<std::vector<MatrixEntry>> cols(group_rank(p, q));
    for (std::size_t b : blocks_of_p_[p]) {
        const Block& blk = blocks_[b];
        const std::size_t col0 = block_offset(b, q);
        const std::size_t row0 = block_offset(b, q - 1);
        const auto& cells = blk.cells_by_degree[q];
        for (std::size_t k = 0; k < cells.size(); ++k) {
            for (const auto& e : amb.column(degree_index_[cells[k]])) {
                const CellId facet = cell_of_degree_[q - 1][e.row];
                // A_J is a subcomplex, so every facet is present.
                cols[col0 + k].push_back({row0 + blk.position.at(facet), e.value});
            }
        }
    }
    return IntMatrix::from_columns(rows, std::move(cols));
}

bool DoubleComplex::identities_hold() const
{
    for (std::size_t p = 0; p <= m_; ++p) {
        for (std::size_t q = 0; q < max_q(); ++q) {
            if (p >= 2 && !multiply(horizontal(p - 1, q), horizontal(p, q)).is_zero())
                return false;
            if (q >= 2 && !multiply(vertical(p, q - 1), vertical(p, q)).is_zero())
                return false;
            if (p >= 1 && q >= 1) {
                const IntMatrix hv = multiply(horizontal(p, q - 1), vertical(p, q));
                const IntMatrix vh = multiply(vertical(p - 1, q), horizontal(p, q));
                if (hv != vh)
                    return false;
            }
        }
    }
    return true;
}

ChainComplex DoubleComplex::total() const
{
    const std::size_t top = m_ + max_q();
    std::vector<std::size_t> ranks(top, 0);
    // offset[d][p] = start of D_{p,d-p} inside total degree d
    std::vector<std::vector<std::size_t>> offset(top, std::vector<std::size_t>(m_ + 1, 0));
    for (std::size_t d = 0; d < top; ++d) {
        for (std::size_t p = 0; p <= std::min(m_, d); ++p) {
            offset[d][p] = ranks[d];
            ranks[d] += group_rank(p, d - p);
        }
    }
    std::vector<IntMatrix> mats(top);
    for (std::size_t d = 1; d < top; ++d) {
        std::vector<std::vector<MatrixEntry>> cols(ranks[d]);
        for (std::size_t p = 0; p <= std::min(m_, d); ++p) {
            const std::size_t q = d - p;
            if (group_rank(p, q) == 0)
                continue;
            if (p >= 1) {
                const IntMatrix h = horizontal(p, q);
                for (std::size_t c = 0; c < h.cols(); ++c)
                    for (const auto& e : h.column(c))
                        cols[offset[d][p] + c].push_back({offset[d - 1][p - 1] + e.row, e.value});
            }
            if (q >= 1) {
                const IntMatrix v = vertical(p, q);
                const std::int64_t twist = (p % 2 == 0) ? 1 : -1;
                for (std::size_t c = 0; c < v.cols(); ++c)
                    for (const auto& e : v.column(c))
                        cols[offset[d][p] + c].push_back({offset[d - 1][p] + e.row, twist * e.value});
            }
        }
        mats[d] = IntMatrix::from_columns(ranks[d - 1], std::move(cols));
    }
    while (!ranks.empty() && ranks.back() == 0) {
        ranks.pop_back();
        mats.pop_back();
    }
    return ChainComplex(std::move(ranks), std::move(mats));
}

ChainComplex hocolim_chain_total(const Arrangement& arr, std::size_t m) { return DoubleComplex(arr, m).total(); }

} // namespace arrtopo

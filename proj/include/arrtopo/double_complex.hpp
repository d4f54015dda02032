#pragma once

#include "arrtopo/arrangement.hpp"
#include "arrtopo/chain_complex.hpp"
#include "arrtopo/index_set.hpp"
#include "arrtopo/integer_matrix.hpp"

#include <map>
#include <vector>

namespace arrtopo {

/// Cech double complex of an arrangement truncated at p <= m:
///   D_{p,q} = direct sum over |J| = p + 1 of C_q(A_J).
/// The horizontal map sends (J, x) to sum_t (-1)^t (J \ j_t, x); the vertical
/// map is the cellular boundary inside each A_J. Built from the ambient chain
/// complex and the inclusions A_J -> A_{J'}, without reference to the product
/// cell complex of build_hocolim.
class DoubleComplex {
public:
    DoubleComplex(const Arrangement& arr, std::size_t m);

    std::size_t max_p() const { return m_; }
    std::size_t max_q() const { return ambient_.top_degree_count(); }

    std::size_t group_rank(std::size_t p, std::size_t q) const;

    /// D_{p,q} -> D_{p-1,q}; zero matrix for p == 0.
    IntMatrix horizontal(std::size_t p, std::size_t q) const;

    /// D_{p,q} -> D_{p,q-1}, untwisted.
    IntMatrix vertical(std::size_t p, std::size_t q) const;

    /// h h = 0, v v = 0 and h v = v h on every bidegree.
    bool identities_hold() const;

    /// Total complex, degree d = sum of D_{p,d-p}, blocks in increasing p;
    /// differential h + (-1)^p v.
    ChainComplex total() const;

private:
    struct Block {
        IndexSet J;
        std::vector<std::vector<CellId>> cells_by_degree; // cells of A_J per degree, id order
        std::map<CellId, std::size_t> position;           // cell -> index within its degree
    };

    // Blocks with |J| = p + 1 in IndexSet order, and the offset of each block
    // inside D_{p,q}.
    std::size_t block_offset(std::size_t block, std::size_t q) const;
    const Block* find_block(const IndexSet& J) const;

    std::size_t m_;
    ChainComplex ambient_;
    std::vector<CellId> degree_index_;                 // ambient cell -> index within its degree
    std::vector<std::vector<CellId>> cell_of_degree_;  // degree, index -> ambient cell
    std::vector<Block> blocks_;
    std::vector<std::vector<std::size_t>> blocks_of_p_;
    std::map<std::uint64_t, std::size_t> block_by_mask_;
};

/// Total complex of the truncated double complex (independent route to the
/// chains of hocolim_m). Throws std::invalid_argument unless m <= n - 1.
ChainComplex hocolim_chain_total(const Arrangement& arr, std::size_t m);

} // namespace arrtopo

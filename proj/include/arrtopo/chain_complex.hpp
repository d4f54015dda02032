#pragma once

#include "arrtopo/cell_complex.hpp"
#include "arrtopo/integer_matrix.hpp"

#include <vector>

namespace arrtopo {

/// Free chain complex of finite rank. boundary(d) maps degree-d chains to
/// degree-(d-1) chains; boundary(0) is the zero map to the zero group.
class ChainComplex {
public:
    ChainComplex() = default;
    /// boundaries[d] must be ranks[d-1] x ranks[d] for d >= 1; boundaries[0]
    /// is ignored and replaced by a 0 x ranks[0] matrix.
    ChainComplex(std::vector<std::size_t> ranks, std::vector<IntMatrix> boundaries);

    std::size_t top_degree_count() const { return ranks_.size(); }
    std::size_t rank(std::size_t d) const { return d < ranks_.size() ? ranks_[d] : 0; }
    const std::vector<std::size_t>& ranks() const { return ranks_; }

    /// Zero matrix of the right shape outside the stored range.
    IntMatrix boundary(std::size_t d) const;

    /// True iff boundary(d) * boundary(d+1) is zero for every d.
    bool boundary_squared_vanishes() const;

private:
    std::vector<std::size_t> ranks_;
    std::vector<IntMatrix> boundaries_;
};

/// Cellular chains. Within each degree, basis order is cell id order.
/// Throws InvalidComplexError when validate_complex reports violations.
ChainComplex chain_complex_of(const CellComplex& complex);

/// Same as chain_complex_of but skips validation; for callers that built the
/// complex themselves and validate separately.
ChainComplex chain_complex_of_unchecked(const CellComplex& complex);

/// Relative chains C(X) / C(A) where A = `sub` must be a subcomplex of X.
/// Basis: cells of X not in A, in id order within each degree.
ChainComplex relative_chain_complex(const CellComplex& complex, const CellSet& sub);

/// Cancels pairs (x, y), y a face of x with coefficient +-1, correcting the
/// remaining differential by the usual Gaussian-elimination formula. The
/// result is chain homotopy equivalent to the input. Pivots with the fewest
/// other entries in their row and column go first, so free faces cost nothing.
/// Throws IntegerOverflow if a corrected coefficient leaves int64.
ChainComplex reduce_unit_pairs(const ChainComplex& chain);

} // namespace arrtopo

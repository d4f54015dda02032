#pragma once

#include "arrtopo/arrangement.hpp"
#include "arrtopo/cell_complex.hpp"
#include "arrtopo/index_set.hpp"
#include "arrtopo/simplicial_complex.hpp"

#include <vector>

namespace arrtopo {

/// Truncated homotopy colimit hocolim_m of an arrangement, realized by
/// product cells Delta_J x c for every ambient cell c and every nonempty
/// J subset of I_c with |J| <= m + 1. dim(J, c) = |J| - 1 + dim(c).
///
/// Cell ids run over ambient cells in id order and, for each cell, over J
/// in IndexSet order. For J = {j_0 < ... < j_p}:
///   d(J, c) = sum_t (-1)^t (J \ j_t, c)             [only when p > 0]
///           + (-1)^p sum_{c'} [c : c'] (J, c')
struct HocolimComplex {
    std::size_t m = 0;
    CellComplex complex;
    std::vector<IndexSet> nerve_label; // (J, c) -> J, the projection to Delta_[n]
    std::vector<CellId> space_label;   // (J, c) -> c, the projection to A^[n]

    /// Cells of the sub-complex hocolim_k for k <= m (all (J, c) with |J| <= k + 1).
    CellSet truncation(std::size_t k) const;
};

/// Throws std::invalid_argument unless 0 <= m <= n - 1.
HocolimComplex build_hocolim(const Arrangement& arr, std::size_t m);

/// Vertices 0..n-1 (vertex v stands for member v + 1); I is a simplex iff A_I
/// is nonempty.
SimplicialComplex nerve(const Arrangement& arr);

} // namespace arrtopo

#pragma once

#include "arrtopo/integer_matrix.hpp"

#include <vector>

namespace arrtopo {

struct SnfResult {
    /// Positive invariant factors d_1 | d_2 | ... | d_r, r = rank.
    std::vector<BigInt> invariant_factors;
    std::size_t rank = 0;

    /// Factors strictly greater than one (the torsion part).
    std::vector<BigInt> nontrivial_factors() const;
};

/// Smith normal form invariants of an integer matrix.
///
/// Pivots are chosen as the nonzero entry of minimal absolute value, ties
/// broken by lowest (row, column). Arithmetic starts in int64 with overflow
/// checks and restarts over arbitrary-precision integers when an
/// intermediate value leaves that range, so results are always exact.
SnfResult smith_normal_form(const IntMatrix& matrix);

/// Same as smith_normal_form, but always runs over arbitrary-precision
/// integers. Exposed for testing the fallback path.
SnfResult smith_normal_form_bigint(const IntMatrix& matrix);

/// Turns a diagonal into invariant factors by repeated (gcd, lcm) exchange.
std::vector<BigInt> invariant_factors_from_diagonal(std::vector<BigInt> diagonal);

} // namespace arrtopo

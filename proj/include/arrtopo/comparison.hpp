#pragma once

#include "arrtopo/arrangement.hpp"
#include "arrtopo/boolean_formula.hpp"
#include "arrtopo/homology.hpp"

#include <optional>
#include <string>
#include <vector>

namespace arrtopo {

struct DegreeComparison {
    std::size_t degree;
    bool equal;
};

/// Outcome of one homology-level check. `lhs`/`rhs` are the two sides being
/// compared; `relative` is set by checks that go through a pair (X, A).
struct ComparisonReport {
    std::string check;
    bool pass = false;
    HomologyReport lhs;
    HomologyReport rhs;
    std::optional<HomologyReport> relative;
    std::string detail;

    /// Degree-wise agreement of lhs and rhs, covering every degree where
    /// either side is nonzero.
    std::vector<DegreeComparison> per_degree() const;
};

/// homology(build_hocolim(arr, m)) against homology(hocolim_chain_total(arr, m)).
ComparisonReport compare_hocolim_oracles(const Arrangement& arr, std::size_t m);

/// homology(hocolim_{n-1}) against homology(A^[n]).
ComparisonReport union_comparison(const Arrangement& arr);

/// Relative homology of (hocolim_{n-1}, hocolim_m) must vanish in degrees
/// <= m; then hocolim_m and hocolim_{n-1} agree in degrees <= m - 1, which is
/// checked as well. lhs = H(hocolim_{n-1}), rhs = H(hocolim_m).
ComparisonReport truncation_comparison(const Arrangement& arr, std::size_t m);

/// homology(A_theta) against homology(Sd(A)_theta).
ComparisonReport verify_comparison_corollary(const Arrangement& arr, const BooleanFormula& theta);

} // namespace arrtopo

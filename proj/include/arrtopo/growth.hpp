#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace arrtopo {

/// Least-squares line through (log n, log count).
struct GrowthFit {
    std::vector<std::pair<std::size_t, std::size_t>> points; // pairs used in the fit
    double slope = 0.0;
    double intercept = 0.0;
    std::vector<double> residuals; // log count - fitted value, per used point
    std::vector<std::string> warnings;
};

/// Pairs with count 0 are dropped with a warning. Throws
/// std::invalid_argument when fewer than 3 distinct n remain.
GrowthFit growth_fit(const std::vector<std::pair<std::size_t, std::size_t>>& runs);

} // namespace arrtopo

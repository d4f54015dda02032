#include "arrtopo/growth.hpp"

#include <cmath>
#include <set>
#include <stdexcept>

namespace arrtopo {

GrowthFit growth_fit(const std::vector<std::pair<std::size_t, std::size_t>>& runs)
{
    GrowthFit fit;
    std::set<std::size_t> distinct_n;
    for (const auto& [n, count] : runs) {
        if (n == 0 || count == 0) {
            fit.warnings.push_back("dropped (" + std::to_string(n) + ", " + std::to_string(count) +
                                   "): log undefined");
            continue;
        }
        fit.points.emplace_back(n, count);
        distinct_n.insert(n);
    }
    if (distinct_n.size() < 3)
        throw std::invalid_argument("growth fit needs at least 3 distinct n with nonzero counts");

    const double k = static_cast<double>(fit.points.size());
    double mx = 0, my = 0;
    for (const auto& [n, c] : fit.points) {
        mx += std::log(static_cast<double>(n));
        my += std::log(static_cast<double>(c));
    }
    mx /= k;
    my /= k;
    double sxy = 0, sxx = 0;
    for (const auto& [n, c] : fit.points) {
        const double dx = std::log(static_cast<double>(n)) - mx;
        sxy += dx * (std::log(static_cast<double>(c)) - my);
        sxx += dx * dx;
    }
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    for (const auto& [n, c] : fit.points)
        fit.residuals.push_back(std::log(static_cast<double>(c)) -
                                (fit.intercept + fit.slope * std::log(static_cast<double>(n))));
    return fit;
}

} // namespace arrtopo

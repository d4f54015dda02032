#include "arrtopo/comparison.hpp"

#include "arrtopo/double_complex.hpp"
#include "arrtopo/hocolim.hpp"

#include <algorithm>

namespace arrtopo {

namespace {

ComparisonReport equal_sides(std::string check, HomologyReport lhs, HomologyReport rhs)
{
    ComparisonReport r;
    r.check = std::move(check);
    r.lhs = std::move(lhs);
    r.rhs = std::move(rhs);
    r.pass = r.lhs == r.rhs;
    if (!r.pass)
        r.detail = "lhs " + r.lhs.to_string() + " != rhs " + r.rhs.to_string();
    return r;
}

} // namespace

std::vector<DegreeComparison> ComparisonReport::per_degree() const
{
    std::vector<DegreeComparison> out;
    const std::size_t top = std::max(lhs.degrees(), rhs.degrees());
    for (std::size_t d = 0; d < top; ++d)
        out.push_back({d, lhs.agrees_in_degree(rhs, d)});
    return out;
}

ComparisonReport compare_hocolim_oracles(const Arrangement& arr, std::size_t m)
{
    const HocolimComplex h = build_hocolim(arr, m);
    return equal_sides("hocolim_oracles", homology(h.complex), homology(hocolim_chain_total(arr, m)));
}

ComparisonReport union_comparison(const Arrangement& arr)
{
    const HocolimComplex h = build_hocolim(arr, arr.size() - 1);
    return equal_sides("union_comparison", homology(h.complex),
                       homology_of_subcomplex(arr.ambient(), full_union(arr)));
}

ComparisonReport truncation_comparison(const Arrangement& arr, std::size_t m)
{
    if (m + 1 > arr.size())
        throw std::invalid_argument("truncation level m = " + std::to_string(m) + " outside [0, n-1]");
    const HocolimComplex full = build_hocolim(arr, arr.size() - 1);
    const CellSet truncated = full.truncation(m);

    ComparisonReport r;
    r.check = "truncation";
    r.lhs = homology(full.complex);
    r.rhs = homology_of_subcomplex(full.complex, truncated);
    r.relative = homology(relative_chain_complex(full.complex, truncated));

    bool relative_ok = true;
    for (std::size_t d = 0; d <= m; ++d)
        if (r.relative->betti_at(d) != 0 || !r.relative->torsion_at(d).empty())
            relative_ok = false;
    bool low_degrees_ok = true;
    for (std::size_t d = 0; d < m; ++d)
        if (!r.lhs.agrees_in_degree(r.rhs, d))
            low_degrees_ok = false;
    r.pass = relative_ok && low_degrees_ok;
    if (!relative_ok)
        r.detail = "relative homology " + r.relative->to_string() + " nonzero in degree <= " + std::to_string(m);
    else if (!low_degrees_ok)
        r.detail = "hocolim_m and hocolim disagree below degree " + std::to_string(m);
    return r;
}

ComparisonReport verify_comparison_corollary(const Arrangement& arr, const BooleanFormula& theta)
{
    const Arrangement sd = subdivide(arr);
    auto r = equal_sides("closed_formula_corollary",
                         homology_of_subcomplex(arr.ambient(), boolean_combination(arr, theta)),
                         homology_of_subcomplex(sd.ambient(), boolean_combination(sd, theta)));
    if (r.detail.empty())
        r.detail = theta.to_string();
    else
        r.detail = theta.to_string() + ": " + r.detail;
    return r;
}

} // namespace arrtopo

#include "arrtopo/hocolim.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace arrtopo {

CellSet HocolimComplex::truncation(std::size_t k) const
{
    CellSet out;
    for (CellId id = 0; id < nerve_label.size(); ++id)
        if (nerve_label[id].size() <= k + 1)
            out.push_back(id);
    return out;
}

HocolimComplex build_hocolim(const Arrangement& arr, std::size_t m)
{
    if (m + 1 > arr.size())
        throw std::invalid_argument("truncation level m = " + std::to_string(m) + " outside [0, n-1] for n = " +
                                    std::to_string(arr.size()));
    const CellComplex& amb = arr.ambient();

    HocolimComplex h;
    h.m = m;
    std::vector<std::unordered_map<std::uint64_t, CellId>> lookup(amb.size());
    for (CellId c = 0; c < amb.size(); ++c) {
        for (const IndexSet& J : subsets_up_to(arr.signature(c), m + 1)) {
            lookup[c].emplace(J.mask(), h.nerve_label.size());
            h.nerve_label.push_back(J);
            h.space_label.push_back(c);
        }
    }

    std::vector<Cell> cells(h.nerve_label.size());
    for (CellId id = 0; id < cells.size(); ++id) {
        const IndexSet& J = h.nerve_label[id];
        const CellId c = h.space_label[id];
        const auto members = J.members();
        const std::size_t p = members.size() - 1;
        Cell& cell = cells[id];
        cell.dim = p + amb.cell(c).dim;
        cell.tag = c;
        if (p > 0) {
            for (std::size_t t = 0; t < members.size(); ++t) {
                IndexSet face = J;
                face.erase(members[t]);
                cell.boundary.push_back({lookup[c].at(face.mask()), (t % 2 == 0) ? 1 : -1});
            }
        }
        const int twist = (p % 2 == 0) ? 1 : -1;
        for (const auto& inc : amb.cell(c).boundary)
            cell.boundary.push_back({lookup.at(inc.facet).at(J.mask()), twist * inc.coefficient});
        std::sort(cell.boundary.begin(), cell.boundary.end(),
                  [](const Incidence& a, const Incidence& b) { return a.facet < b.facet; });
    }
    h.complex = CellComplex(std::move(cells));
    return h;
}

SimplicialComplex nerve(const Arrangement& arr)
{
    std::vector<Simplex> tops;
    for (CellId c = 0; c < arr.ambient().size(); ++c) {
        const IndexSet sig = arr.signature(c);
        if (sig.empty())
            continue;
        Simplex s;
        for (std::size_t i : sig.members())
            s.push_back(i - 1);
        tops.push_back(std::move(s));
    }
    std::sort(tops.begin(), tops.end());
    tops.erase(std::unique(tops.begin(), tops.end()), tops.end());
    return SimplicialComplex::from_maximal(arr.size(), tops);
}

} // namespace arrtopo

#include "arrtopo/cell_complex.hpp"

#include <algorithm>
#include <iterator>
#include <map>
#include <numeric>
#include <sstream>

namespace arrtopo {

CellSet cell_set_union(const CellSet& a, const CellSet& b)
{
    CellSet out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

CellSet cell_set_intersection(const CellSet& a, const CellSet& b)
{
    CellSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

CellSet cell_set_difference(const CellSet& a, const CellSet& b)
{
    CellSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool cell_set_includes(const CellSet& outer, const CellSet& inner)
{
    return std::includes(outer.begin(), outer.end(), inner.begin(), inner.end());
}

long CellComplex::dimension() const
{
    long d = -1;
    for (const auto& c : cells_)
        d = std::max(d, static_cast<long>(c.dim));
    return d;
}

std::vector<std::size_t> CellComplex::cell_counts() const
{
    std::vector<std::size_t> counts(static_cast<std::size_t>(dimension() + 1), 0);
    for (const auto& c : cells_)
        ++counts[c.dim];
    return counts;
}

long CellComplex::euler_characteristic() const
{
    long chi = 0;
    for (const auto& c : cells_)
        chi += (c.dim % 2 == 0) ? 1 : -1;
    return chi;
}

CellComplex CellComplex::restrict_to(const CellSet& cells) const
{
    std::vector<CellId> new_id(cells_.size(), static_cast<CellId>(-1));
    for (std::size_t i = 0; i < cells.size(); ++i)
        new_id.at(cells[i]) = i;
    std::vector<Cell> out;
    out.reserve(cells.size());
    for (CellId id : cells) {
        Cell c = cells_[id];
        for (auto& inc : c.boundary) {
            if (inc.facet >= cells_.size() || new_id[inc.facet] == static_cast<CellId>(-1))
                throw std::invalid_argument("cell set is not closed under facets (cell " + std::to_string(id) + ")");
            inc.facet = new_id[inc.facet];
        }
        out.push_back(std::move(c));
    }
    return CellComplex(std::move(out));
}

CellSet CellComplex::closure(const CellSet& cells) const
{
    std::vector<char> in(cells_.size(), 0);
    std::vector<CellId> stack(cells.begin(), cells.end());
    while (!stack.empty()) {
        CellId id = stack.back();
        stack.pop_back();
        if (in.at(id))
            continue;
        in[id] = 1;
        for (const auto& inc : cells_[id].boundary)
            if (!in.at(inc.facet))
                stack.push_back(inc.facet);
    }
    CellSet out;
    for (CellId id = 0; id < cells_.size(); ++id)
        if (in[id])
            out.push_back(id);
    return out;
}

bool CellComplex::is_subcomplex(const CellSet& cells) const
{
    for (CellId id : cells)
        for (const auto& inc : cells_.at(id).boundary)
            if (!std::binary_search(cells.begin(), cells.end(), inc.facet))
                return false;
    return true;
}

CellSet CellComplex::all_cells() const
{
    CellSet out(cells_.size());
    std::iota(out.begin(), out.end(), CellId{0});
    return out;
}

std::string ValidationReport::summary() const
{
    if (violations.empty())
        return "valid";
    std::ostringstream os;
    os << violations.size() << " violation(s); first: cell " << violations.front().cell << ": "
       << violations.front().message;
    return os.str();
}

ValidationReport validate_complex(const CellComplex& complex)
{
    ValidationReport report;
    auto add = [&](ViolationKind kind, CellId id, std::string msg) {
        report.violations.push_back({kind, id, std::move(msg)});
    };

    bool structure_ok = true;
    for (CellId id = 0; id < complex.size(); ++id) {
        const Cell& c = complex.cell(id);
        if (c.dim == 0 && !c.boundary.empty()) {
            add(ViolationKind::vertex_boundary, id, "0-cell has nonempty boundary");
            structure_ok = false;
        }
        if (c.dim > 0 && c.boundary.empty())
            add(ViolationKind::missing_boundary, id, "cell of dimension " + std::to_string(c.dim) + " has no facets");
        std::vector<CellId> seen;
        for (const auto& inc : c.boundary) {
            if (inc.facet >= complex.size()) {
                add(ViolationKind::facet_out_of_range, id, "facet id " + std::to_string(inc.facet) + " does not exist");
                structure_ok = false;
                continue;
            }
            if (complex.cell(inc.facet).dim + 1 != c.dim) {
                add(ViolationKind::facet_dimension, id,
                    "facet " + std::to_string(inc.facet) + " has dimension " +
                        std::to_string(complex.cell(inc.facet).dim));
                structure_ok = false;
            }
            if (inc.coefficient != 1 && inc.coefficient != -1)
                add(ViolationKind::incidence_value, id,
                    "incidence out of {-1,+1}: [" + std::to_string(id) + ":" + std::to_string(inc.facet) +
                        "] = " + std::to_string(inc.coefficient));
            seen.push_back(inc.facet);
        }
        std::sort(seen.begin(), seen.end());
        if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) {
            add(ViolationKind::duplicate_facet, id, "facet listed more than once");
            structure_ok = false;
        }
        if (c.dim == 1 && !c.boundary.empty()) {
            long sum = 0;
            for (const auto& inc : c.boundary)
                sum += inc.coefficient;
            if (sum != 0)
                add(ViolationKind::edge_augmentation, id, "1-cell boundary coefficients do not sum to zero");
        }
    }
    if (!structure_ok)
        return report;

    for (CellId id = 0; id < complex.size(); ++id) {
        std::map<CellId, long> second;
        for (const auto& inc : complex.cell(id).boundary)
            for (const auto& inc2 : complex.cell(inc.facet).boundary)
                second[inc2.facet] += static_cast<long>(inc.coefficient) * inc2.coefficient;
        for (const auto& [face, coeff] : second)
            if (coeff != 0)
                add(ViolationKind::boundary_squared, id,
                    "boundary of boundary of cell " + std::to_string(id) + " has coefficient " +
                        std::to_string(coeff) + " on cell " + std::to_string(face));
    }
    return report;
}

namespace {

struct DisjointSets {
    explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), std::size_t{0}); }
    std::size_t find(std::size_t x)
    {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void unite(std::size_t a, std::size_t b)
    {
        a = find(a);
        b = find(b);
        if (a != b)
            parent[std::max(a, b)] = std::min(a, b);
    }
    std::vector<std::size_t> parent;
};

} // namespace

std::vector<CellSet> connected_components(const CellComplex& complex, const CellSet& cells)
{
    for (CellId id : cells)
        if (id >= complex.size())
            throw std::out_of_range("unknown cell id " + std::to_string(id));
    CellSet sorted = cells;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

    std::vector<std::size_t> local(complex.size(), static_cast<std::size_t>(-1));
    for (std::size_t i = 0; i < sorted.size(); ++i)
        local[sorted[i]] = i;
    DisjointSets ds(sorted.size());
    for (std::size_t i = 0; i < sorted.size(); ++i)
        for (const auto& inc : complex.cell(sorted[i]).boundary)
            if (inc.facet < complex.size() && local[inc.facet] != static_cast<std::size_t>(-1))
                ds.unite(i, local[inc.facet]);

    std::map<std::size_t, CellSet> groups;
    for (std::size_t i = 0; i < sorted.size(); ++i)
        groups[ds.find(i)].push_back(sorted[i]);
    std::vector<CellSet> out;
    for (auto& [root, members] : groups)
        out.push_back(std::move(members));
    return out;
}

} // namespace arrtopo

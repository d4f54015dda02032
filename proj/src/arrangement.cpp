#include "arrtopo/arrangement.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>

namespace arrtopo {

namespace {

std::vector<std::string> default_names(std::size_t n)
{
    std::vector<std::string> out;
    for (std::size_t i = 1; i <= n; ++i)
        out.push_back("A" + std::to_string(i));
    return out;
}

std::string simplex_text(const Simplex& s)
{
    std::string out = "[";
    for (std::size_t i = 0; i < s.size(); ++i)
        out += (i ? "," : "") + std::to_string(s[i]);
    return out + "]";
}

// Uniform double in [0, 1) from the top 53 bits; identical on every platform.
double unit_draw(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

} // namespace

Arrangement::Arrangement(CellComplex ambient, std::vector<CellSet> members, std::vector<std::string> names)
    : ambient_(std::move(ambient)), members_(std::move(members)), names_(std::move(names))
{
    finish();
}

void Arrangement::finish()
{
    if (members_.empty())
        throw std::invalid_argument("arrangement needs at least one member");
    if (members_.size() > IndexSet::max_index)
        throw std::invalid_argument("arrangement supports at most 64 members");
    if (names_.empty())
        names_ = default_names(members_.size());
    if (names_.size() != members_.size())
        throw std::invalid_argument("one name per member required");
    signatures_.assign(ambient_.size(), IndexSet{});
    for (std::size_t i = 0; i < members_.size(); ++i) {
        auto& m = members_[i];
        std::sort(m.begin(), m.end());
        m.erase(std::unique(m.begin(), m.end()), m.end());
        if (!m.empty() && m.back() >= ambient_.size())
            throw std::invalid_argument("member " + names_[i] + " references an unknown cell");
        if (!ambient_.is_subcomplex(m))
            throw std::invalid_argument("member " + names_[i] + " is not a subcomplex");
        for (CellId c : m)
            signatures_[c].insert(i + 1);
    }
}

Arrangement Arrangement::from_simplicial(SimplicialComplex ambient,
                                         const std::vector<std::vector<Simplex>>& member_simplices,
                                         std::vector<std::string> names)
{
    std::vector<CellSet> members;
    for (std::size_t i = 0; i < member_simplices.size(); ++i) {
        const auto& listed = member_simplices[i];
        for (Simplex s : listed) {
            std::sort(s.begin(), s.end());
            if (!ambient.contains(s))
                throw std::invalid_argument("simplex " + simplex_text(s) + " of member " + std::to_string(i + 1) +
                                            " is not in the ambient complex");
        }
        const auto closed = listed.empty() ? SimplicialComplex()
                                           : SimplicialComplex::from_maximal(ambient.vertex_count(), listed);
        CellSet ids;
        for (const auto& s : closed.simplices())
            ids.push_back(*ambient.index_of(s));
        std::sort(ids.begin(), ids.end());
        members.push_back(std::move(ids));
    }
    return from_simplicial_ids(std::move(ambient), std::move(members), std::move(names));
}

Arrangement Arrangement::from_simplicial_ids(SimplicialComplex ambient, std::vector<CellSet> members,
                                             std::vector<std::string> names)
{
    Arrangement arr;
    arr.ambient_ = ambient.to_cell_complex();
    arr.simplicial_ = std::move(ambient);
    arr.members_ = std::move(members);
    arr.names_ = std::move(names);
    arr.finish();
    return arr;
}

const CellSet& Arrangement::member(std::size_t i) const
{
    if (i < 1 || i > members_.size())
        throw std::out_of_range("member index " + std::to_string(i) + " outside [1, " +
                                std::to_string(members_.size()) + "]");
    return members_[i - 1];
}

const std::string& Arrangement::name(std::size_t i) const
{
    member(i);
    return names_[i - 1];
}

namespace {

void check_index_set(const Arrangement& arr, const IndexSet& I)
{
    if (I.empty())
        throw std::invalid_argument("index set must be nonempty");
    if (I.max() > arr.size())
        throw std::out_of_range("index set " + I.to_string() + " exceeds n = " + std::to_string(arr.size()));
}

} // namespace

CellSet sub_intersection(const Arrangement& arr, const IndexSet& I)
{
    check_index_set(arr, I);
    CellSet out;
    for (CellId c = 0; c < arr.ambient().size(); ++c)
        if (I.subset_of(arr.signature(c)))
            out.push_back(c);
    return out;
}

CellSet sub_union(const Arrangement& arr, const IndexSet& I)
{
    check_index_set(arr, I);
    CellSet out;
    for (CellId c = 0; c < arr.ambient().size(); ++c)
        if (!(arr.signature(c) & I).empty())
            out.push_back(c);
    return out;
}

CellSet full_union(const Arrangement& arr) { return sub_union(arr, IndexSet::full(arr.size())); }

std::size_t BasicSetReport::component_count(const IndexSet& signature) const
{
    for (const auto& e : entries)
        if (e.signature == signature)
            return e.components.size();
    return 0;
}

BasicSetReport basic_sets(const Arrangement& arr)
{
    std::map<IndexSet, CellSet> groups;
    for (CellId c = 0; c < arr.ambient().size(); ++c)
        groups[arr.signature(c)].push_back(c);
    BasicSetReport report;
    for (auto& [sig, cells] : groups) {
        BasicSetEntry entry{sig, std::move(cells), {}};
        entry.components = connected_components(arr.ambient(), entry.cells);
        report.total_components += entry.components.size();
        report.entries.push_back(std::move(entry));
    }
    return report;
}

Arrangement subdivide(const Arrangement& arr)
{
    if (!arr.simplicial())
        throw std::invalid_argument("subdivision needs a simplicial ambient complex");
    const SimplicialComplex& base = *arr.simplicial();
    SimplicialComplex sd = barycentric_subdivision(base);
    std::vector<CellSet> members(arr.size());
    for (std::size_t id = 0; id < sd.size(); ++id) {
        // The top of a chain is its largest simplex, which carries the largest id.
        const IndexSet sig = arr.signature(sd.simplex(id).back());
        for (std::size_t i : sig.members())
            members[i - 1].push_back(id);
    }
    return Arrangement::from_simplicial_ids(std::move(sd), std::move(members), arr.names());
}

Arrangement random_arrangement(std::uint64_t seed, const RandomArrangementParams& params)
{
    if (params.vertex_count < 1 || params.vertex_count > 12)
        throw std::invalid_argument("vertex_count must lie in [1, 12]");
    if (params.n < 1 || params.n > IndexSet::max_index)
        throw std::invalid_argument("n must lie in [1, 64]");
    if (!(params.ambient_density >= 0.0 && params.ambient_density <= 1.0) ||
        !(params.set_density >= 0.0 && params.set_density <= 1.0))
        throw std::invalid_argument("densities must lie in [0, 1]");

    std::mt19937_64 rng(seed);
    const std::size_t v = params.vertex_count;

    std::vector<std::uint32_t> masks;
    for (std::uint32_t m = 1; m < (1u << v); ++m)
        masks.push_back(m);
    std::stable_sort(masks.begin(), masks.end(), [](std::uint32_t a, std::uint32_t b) {
        if (std::popcount(a) != std::popcount(b))
            return std::popcount(a) < std::popcount(b);
        // lexicographic order of sorted vertex lists = reversed bit order
        for (std::uint32_t bit = 1; bit; bit <<= 1) {
            if ((a & bit) != (b & bit))
                return (a & bit) != 0;
        }
        return false;
    });

    std::vector<char> present(std::size_t{1} << v, 0);
    std::vector<Simplex> simplices;
    for (std::uint32_t m : masks) {
        bool facets_ok = true;
        for (std::uint32_t rest = m; rest; rest &= rest - 1) {
            const std::uint32_t face = m & ~(rest & -rest);
            if (face && !present[face])
                facets_ok = false;
        }
        const bool take = std::popcount(m) == 1 || (facets_ok && unit_draw(rng) < params.ambient_density);
        if (!take)
            continue;
        present[m] = 1;
        Simplex s;
        for (std::size_t i = 0; i < v; ++i)
            if (m & (1u << i))
                s.push_back(i);
        simplices.push_back(std::move(s));
    }
    SimplicialComplex ambient = SimplicialComplex::from_simplices(v, std::move(simplices));

    std::vector<CellSet> members(params.n);
    for (std::size_t i = 0; i < params.n; ++i) {
        std::vector<char> in(ambient.size(), 0);
        for (std::size_t id = 0; id < ambient.size(); ++id) {
            bool facets_ok = true;
            for (std::size_t f : ambient.proper_faces(id))
                if (ambient.simplex(f).size() + 1 == ambient.simplex(id).size() && !in[f])
                    facets_ok = false;
            if (facets_ok && unit_draw(rng) < params.set_density) {
                in[id] = 1;
                members[i].push_back(id);
            }
        }
    }
    return Arrangement::from_simplicial_ids(std::move(ambient), std::move(members));
}

Arrangement path_arrangement(std::size_t vertex_count,
                             const std::vector<std::optional<std::pair<std::size_t, std::size_t>>>& ranges)
{
    std::vector<Simplex> simplices;
    for (std::size_t v = 0; v < vertex_count; ++v)
        simplices.push_back({v});
    for (std::size_t v = 0; v + 1 < vertex_count; ++v)
        simplices.push_back({v, v + 1});
    SimplicialComplex ambient = SimplicialComplex::from_simplices(vertex_count, std::move(simplices));

    std::vector<CellSet> members;
    for (const auto& r : ranges) {
        CellSet ids;
        if (r) {
            const auto [first, last] = *r;
            if (first > last || last >= vertex_count)
                throw std::invalid_argument("invalid vertex range on path");
            for (std::size_t v = first; v <= last; ++v)
                ids.push_back(*ambient.index_of({v}));
            for (std::size_t v = first; v < last; ++v)
                ids.push_back(*ambient.index_of({v, v + 1}));
            std::sort(ids.begin(), ids.end());
        }
        members.push_back(std::move(ids));
    }
    return Arrangement::from_simplicial_ids(std::move(ambient), std::move(members));
}

} // namespace arrtopo

#include "arrtopo/simplicial_complex.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace arrtopo {

namespace {

bool simplex_order(const Simplex& a, const Simplex& b)
{
    if (a.size() != b.size())
        return a.size() < b.size();
    return a < b;
}

std::string to_string(const Simplex& s)
{
    std::string out = "[";
    for (std::size_t i = 0; i < s.size(); ++i)
        out += (i ? "," : "") + std::to_string(s[i]);
    return out + "]";
}

} // namespace

void SimplicialComplex::build_index()
{
    std::sort(simplices_.begin(), simplices_.end(), simplex_order);
    index_.clear();
    for (std::size_t i = 0; i < simplices_.size(); ++i)
        index_.emplace(simplices_[i], i);
}

SimplicialComplex SimplicialComplex::from_maximal(std::size_t vertex_count, const std::vector<Simplex>& simplices)
{
    std::set<Simplex> all;
    for (Simplex s : simplices) {
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
        if (s.empty())
            throw std::invalid_argument("empty simplex");
        if (s.back() >= vertex_count)
            throw std::invalid_argument("vertex index out of range in simplex " + to_string(s));
        if (s.size() > 30)
            throw std::invalid_argument("simplex too large to close downward");
        if (all.count(s))
            continue;
        const std::size_t k = s.size();
        for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
            Simplex face;
            for (std::size_t i = 0; i < k; ++i)
                if (mask & (1u << i))
                    face.push_back(s[i]);
            all.insert(std::move(face));
        }
    }
    SimplicialComplex out;
    out.vertex_count_ = vertex_count;
    out.simplices_.assign(all.begin(), all.end());
    out.build_index();
    return out;
}

SimplicialComplex SimplicialComplex::from_simplices(std::size_t vertex_count, std::vector<Simplex> simplices)
{
    SimplicialComplex out;
    out.vertex_count_ = vertex_count;
    for (auto& s : simplices) {
        std::sort(s.begin(), s.end());
        if (s.empty())
            throw std::invalid_argument("empty simplex");
        if (std::adjacent_find(s.begin(), s.end()) != s.end())
            throw std::invalid_argument("repeated vertex in simplex " + to_string(s));
        if (s.back() >= vertex_count)
            throw std::invalid_argument("vertex index out of range in simplex " + to_string(s));
    }
    out.simplices_ = std::move(simplices);
    std::sort(out.simplices_.begin(), out.simplices_.end(), simplex_order);
    if (std::adjacent_find(out.simplices_.begin(), out.simplices_.end()) != out.simplices_.end())
        throw std::invalid_argument("duplicate simplex");
    out.build_index();
    for (const auto& s : out.simplices_) {
        if (s.size() < 2)
            continue;
        for (std::size_t i = 0; i < s.size(); ++i) {
            Simplex face = s;
            face.erase(face.begin() + static_cast<long>(i));
            if (!out.index_.count(face))
                throw std::invalid_argument("missing face " + to_string(face) + " of simplex " + to_string(s));
        }
    }
    return out;
}

SimplicialComplex SimplicialComplex::full_simplex(std::size_t n)
{
    if (n == 0)
        return {};
    Simplex top(n);
    for (std::size_t i = 0; i < n; ++i)
        top[i] = i;
    return from_maximal(n, {top});
}

long SimplicialComplex::dimension() const
{
    return simplices_.empty() ? -1 : static_cast<long>(simplices_.back().size()) - 1;
}

std::optional<std::size_t> SimplicialComplex::index_of(const Simplex& s) const
{
    auto it = index_.find(s);
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

std::vector<Simplex> SimplicialComplex::maximal_simplices() const
{
    std::vector<char> covered(simplices_.size(), 0);
    for (const auto& s : simplices_) {
        if (s.size() < 2)
            continue;
        for (std::size_t i = 0; i < s.size(); ++i) {
            Simplex face = s;
            face.erase(face.begin() + static_cast<long>(i));
            covered[index_.at(face)] = 1;
        }
    }
    std::vector<Simplex> out;
    for (std::size_t i = 0; i < simplices_.size(); ++i)
        if (!covered[i])
            out.push_back(simplices_[i]);
    return out;
}

std::vector<std::size_t> SimplicialComplex::proper_faces(std::size_t id) const
{
    const Simplex& s = simplices_.at(id);
    const std::size_t k = s.size();
    std::vector<std::size_t> out;
    if (k > 30)
        throw std::invalid_argument("simplex too large to enumerate faces");
    for (std::uint32_t mask = 1; mask + 1 < (1u << k); ++mask) {
        Simplex face;
        for (std::size_t i = 0; i < k; ++i)
            if (mask & (1u << i))
                face.push_back(s[i]);
        out.push_back(index_.at(face));
    }
    std::sort(out.begin(), out.end());
    return out;
}

CellComplex SimplicialComplex::to_cell_complex() const
{
    std::vector<Cell> cells;
    cells.reserve(simplices_.size());
    for (const auto& s : simplices_) {
        Cell c;
        c.dim = s.size() - 1;
        if (s.size() >= 2) {
            for (std::size_t i = 0; i < s.size(); ++i) {
                Simplex face = s;
                face.erase(face.begin() + static_cast<long>(i));
                c.boundary.push_back({index_.at(face), (i % 2 == 0) ? 1 : -1});
            }
            std::sort(c.boundary.begin(), c.boundary.end(),
                      [](const Incidence& a, const Incidence& b) { return a.facet < b.facet; });
        }
        cells.push_back(std::move(c));
    }
    return CellComplex(std::move(cells));
}

SimplicialComplex barycentric_subdivision_where(const SimplicialComplex& complex,
                                                const std::function<bool(std::size_t)>& keep_top)
{
    std::vector<std::vector<std::size_t>> faces(complex.size());
    for (std::size_t id = 0; id < complex.size(); ++id)
        faces[id] = complex.proper_faces(id);

    // Chains are grown from the top element downward; faces have smaller ids,
    // so reversing a chain yields an increasing vertex list.
    std::vector<Simplex> chains;
    std::vector<std::size_t> chain;
    std::function<void(std::size_t)> grow = [&](std::size_t bottom) {
        Simplex s(chain.rbegin(), chain.rend());
        chains.push_back(std::move(s));
        for (std::size_t f : faces[bottom]) {
            chain.push_back(f);
            grow(f);
            chain.pop_back();
        }
    };
    for (std::size_t id = 0; id < complex.size(); ++id) {
        if (!keep_top(id))
            continue;
        chain.assign(1, id);
        grow(id);
    }
    return SimplicialComplex::from_simplices(complex.size(), std::move(chains));
}

SimplicialComplex barycentric_subdivision(const SimplicialComplex& complex)
{
    return barycentric_subdivision_where(complex, [](std::size_t) { return true; });
}

SimplicialComplex skeleton(const SimplicialComplex& complex, std::size_t m)
{
    std::vector<Simplex> kept;
    for (const auto& s : complex.simplices())
        if (s.size() <= m + 1)
            kept.push_back(s);
    return SimplicialComplex::from_simplices(complex.vertex_count(), std::move(kept));
}

SimplicialComplex induced_subcomplex(const SimplicialComplex& complex,
                                     const std::function<bool(std::size_t)>& keep,
                                     bool renumber)
{
    std::vector<std::size_t> relabel(complex.vertex_count(), 0);
    std::size_t next = 0;
    for (std::size_t v = 0; v < complex.vertex_count(); ++v)
        if (keep(v))
            relabel[v] = next++;
    std::vector<Simplex> kept;
    for (const auto& s : complex.simplices()) {
        if (!std::all_of(s.begin(), s.end(), keep))
            continue;
        if (!renumber) {
            kept.push_back(s);
            continue;
        }
        Simplex r;
        for (std::size_t v : s)
            r.push_back(relabel[v]);
        kept.push_back(std::move(r));
    }
    return SimplicialComplex::from_simplices(renumber ? next : complex.vertex_count(), std::move(kept));
}

} // namespace arrtopo

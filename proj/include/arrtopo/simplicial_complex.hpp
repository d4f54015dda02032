#pragma once

#include "arrtopo/cell_complex.hpp"

#include <functional>
#include <map>
#include <optional>
#include <vector>

namespace arrtopo {

/// Sorted vertex list.
using Simplex = std::vector<std::size_t>;

/// Abstract simplicial complex. Simplices are stored ordered by
/// (dimension, lexicographic vertex list); a simplex's position in that order
/// is its id and also its cell id in to_cell_complex().
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    /// Downward closure of the given simplices. Vertex lists are sorted and
    /// deduplicated; indices must lie in [0, vertex_count).
    static SimplicialComplex from_maximal(std::size_t vertex_count, const std::vector<Simplex>& simplices);

    /// Takes an already downward-closed family. Throws std::invalid_argument
    /// if a face is missing or an index is out of range.
    static SimplicialComplex from_simplices(std::size_t vertex_count, std::vector<Simplex> simplices);

    /// Delta_[n]: the full simplex on vertices 0..n-1.
    static SimplicialComplex full_simplex(std::size_t n);

    std::size_t vertex_count() const { return vertex_count_; }
    std::size_t size() const { return simplices_.size(); }
    bool empty() const { return simplices_.empty(); }
    long dimension() const;

    const std::vector<Simplex>& simplices() const { return simplices_; }
    const Simplex& simplex(std::size_t id) const { return simplices_.at(id); }
    std::optional<std::size_t> index_of(const Simplex& s) const;
    bool contains(const Simplex& s) const { return index_of(s).has_value(); }

    /// Simplices that are not a proper face of another simplex, in id order.
    std::vector<Simplex> maximal_simplices() const;

    /// Ids of the proper nonempty faces of simplex `id`, in increasing id order.
    std::vector<std::size_t> proper_faces(std::size_t id) const;

    /// Cell complex with the standard alternating-sign incidences.
    CellComplex to_cell_complex() const;

    friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b)
    {
        return a.vertex_count_ == b.vertex_count_ && a.simplices_ == b.simplices_;
    }

private:
    void build_index();

    std::size_t vertex_count_ = 0;
    std::vector<Simplex> simplices_;
    std::map<Simplex, std::size_t> index_;
};

/// Vertices of Sd(X) are the simplices of X (vertex k = simplex id k);
/// simplices are chains under strict inclusion.
SimplicialComplex barycentric_subdivision(const SimplicialComplex& complex);

/// Chains of simplices of `complex` whose top element satisfies `keep_top`.
/// With a downward-closed predicate this is the subdivision of that subcomplex
/// expressed in the vertex numbering of barycentric_subdivision(complex).
SimplicialComplex barycentric_subdivision_where(const SimplicialComplex& complex,
                                                const std::function<bool(std::size_t)>& keep_top);

SimplicialComplex skeleton(const SimplicialComplex& complex, std::size_t m);

/// Full subcomplex spanned by the vertices with keep(v) true. Vertex numbers
/// are kept unless `renumber` is set, in which case kept vertices are
/// relabelled 0.. in increasing order.
SimplicialComplex induced_subcomplex(const SimplicialComplex& complex,
                                     const std::function<bool(std::size_t)>& keep,
                                     bool renumber = false);

} // namespace arrtopo

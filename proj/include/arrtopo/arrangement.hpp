#pragma once

#include "arrtopo/cell_complex.hpp"
#include "arrtopo/index_set.hpp"
#include "arrtopo/simplicial_complex.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace arrtopo {

/// A labelled family A_1..A_n of subcomplexes of one ambient complex.
/// Members are addressed 1-based, matching IndexSet.
class Arrangement {
public:
    /// Throws std::invalid_argument if a member is not a subcomplex, a cell id
    /// is out of range, n is 0 or larger than 64, or names has the wrong length.
    Arrangement(CellComplex ambient, std::vector<CellSet> members, std::vector<std::string> names = {});

    /// Members given by maximal simplices, closed downward. A listed simplex
    /// that is not in the ambient complex is an error naming that simplex.
    static Arrangement from_simplicial(SimplicialComplex ambient,
                                       const std::vector<std::vector<Simplex>>& member_simplices,
                                       std::vector<std::string> names = {});

    /// Members given as sets of simplex ids of `ambient` (must be subcomplexes).
    static Arrangement from_simplicial_ids(SimplicialComplex ambient, std::vector<CellSet> members,
                                           std::vector<std::string> names = {});

    std::size_t size() const { return members_.size(); }
    const CellComplex& ambient() const { return ambient_; }
    const std::optional<SimplicialComplex>& simplicial() const { return simplicial_; }

    const CellSet& member(std::size_t i) const;
    const std::string& name(std::size_t i) const;
    const std::vector<std::string>& names() const { return names_; }

    /// I_c = {i : c in A_i}.
    IndexSet signature(CellId c) const { return signatures_.at(c); }

    friend bool operator==(const Arrangement& a, const Arrangement& b)
    {
        return a.ambient_ == b.ambient_ && a.simplicial_ == b.simplicial_ && a.members_ == b.members_ &&
               a.names_ == b.names_;
    }

private:
    Arrangement() = default;
    void finish();

    CellComplex ambient_;
    std::optional<SimplicialComplex> simplicial_;
    std::vector<CellSet> members_;
    std::vector<std::string> names_;
    std::vector<IndexSet> signatures_;
};

/// A_I: cells lying in every A_i, i in I. I must be nonempty.
CellSet sub_intersection(const Arrangement& arr, const IndexSet& I);

/// A^I: cells lying in some A_i, i in I. I must be nonempty.
CellSet sub_union(const Arrangement& arr, const IndexSet& I);

/// Union of all members, A^[n].
CellSet full_union(const Arrangement& arr);

struct BasicSetEntry {
    IndexSet signature;
    CellSet cells;                   // open cells c with I_c == signature
    std::vector<CellSet> components; // connected pieces of `cells`
};

/// Exact-signature open cell sets of the arrangement. Only signatures that
/// occur are listed (ordered by IndexSet order, the empty signature first);
/// every other signature has zero components.
struct BasicSetReport {
    std::vector<BasicSetEntry> entries;
    std::size_t total_components = 0;

    std::size_t component_count(const IndexSet& signature) const;
};

BasicSetReport basic_sets(const Arrangement& arr);

/// Barycentric subdivision of a simplicial arrangement: Sd of the ambient
/// complex with each member replaced by its subdivision.
Arrangement subdivide(const Arrangement& arr);

struct RandomArrangementParams {
    std::size_t vertex_count = 6; // 1..12
    double ambient_density = 0.5; // chance a simplex whose facets are present is added
    std::size_t n = 3;            // 1..64
    double set_density = 0.5;     // chance an ambient simplex enters a member, given its facets did
};

/// Seed-deterministic random simplicial arrangement. All vertices are in the
/// ambient complex; higher simplices and member simplices are added in
/// (dimension, lexicographic) order when all their facets are present.
Arrangement random_arrangement(std::uint64_t seed, const RandomArrangementParams& params);

/// Path graph on `vertex_count` vertices (edges {v, v+1}); member i covers
/// the vertices in ranges[i] = [first, last] and the edges between them, or
/// nothing when the range is absent.
Arrangement path_arrangement(std::size_t vertex_count,
                             const std::vector<std::optional<std::pair<std::size_t, std::size_t>>>& ranges);

} // namespace arrtopo

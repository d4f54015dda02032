#pragma once

#include "arrtopo/cell_complex.hpp"
#include "arrtopo/chain_complex.hpp"
#include "arrtopo/integer_matrix.hpp"

#include <string>
#include <vector>

namespace arrtopo {

/// Unreduced integral homology. Degrees past the last nonzero group are
/// trimmed, so the empty complex has empty vectors and equality is exact
/// degree-wise comparison.
struct HomologyReport {
    std::vector<std::size_t> betti;
    std::vector<std::vector<BigInt>> torsion; // invariant factors > 1, ascending, each divides the next

    std::size_t betti_at(std::size_t d) const { return d < betti.size() ? betti[d] : 0; }
    std::vector<BigInt> torsion_at(std::size_t d) const { return d < torsion.size() ? torsion[d] : std::vector<BigInt>{}; }

    /// Number of degrees carrying a nonzero group.
    std::size_t degrees() const { return betti.size(); }
    bool is_zero() const { return betti.empty(); }
    long euler_characteristic() const;

    /// Equal betti and torsion in degree d.
    bool agrees_in_degree(const HomologyReport& other, std::size_t d) const;

    /// Compact text form, e.g. "(1,0,1)" or "(1,0|1:[2])".
    std::string to_string() const;

    friend bool operator==(const HomologyReport&, const HomologyReport&) = default;
};

/// Builds a report from betti numbers and torsion lists, trimming zero tail degrees.
HomologyReport make_homology(std::vector<std::size_t> betti, std::vector<std::vector<BigInt>> torsion = {});

HomologyReport homology(const ChainComplex& chain);

/// Smith normal form of every boundary map, with no unit-pair cancellation
/// first. Slower on large complexes; kept as an independent route.
HomologyReport homology_by_snf(const ChainComplex& chain);

/// Homology of a validated cell complex.
HomologyReport homology(const CellComplex& complex);

/// Homology of the subcomplex spanned by `cells` (must be closed under facets).
HomologyReport homology_of_subcomplex(const CellComplex& complex, const CellSet& cells);

} // namespace arrtopo

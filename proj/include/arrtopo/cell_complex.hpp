#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace arrtopo {

using CellId = std::size_t;

/// Sorted, duplicate-free list of cell ids.
using CellSet = std::vector<CellId>;

CellSet cell_set_union(const CellSet& a, const CellSet& b);
CellSet cell_set_intersection(const CellSet& a, const CellSet& b);
CellSet cell_set_difference(const CellSet& a, const CellSet& b);
bool cell_set_includes(const CellSet& outer, const CellSet& inner);

struct Incidence {
    CellId facet;
    int coefficient;

    friend bool operator==(const Incidence&, const Incidence&) = default;
};

struct Cell {
    std::size_t dim = 0;
    std::vector<Incidence> boundary;
    std::uint64_t tag = 0; // opaque, owner-defined

    friend bool operator==(const Cell&, const Cell&) = default;
};

/// Finite regular cell complex given by its cells and signed facet
/// incidences. Ids are dense and assigned in construction order. Nothing is
/// checked at construction; run validate_complex before trusting it.
class CellComplex {
public:
    CellComplex() = default;
    explicit CellComplex(std::vector<Cell> cells) : cells_(std::move(cells)) {}

    std::size_t size() const { return cells_.size(); }
    bool empty() const { return cells_.empty(); }
    const Cell& cell(CellId id) const { return cells_.at(id); }
    const std::vector<Cell>& cells() const { return cells_; }

    /// -1 for the empty complex.
    long dimension() const;
    std::vector<std::size_t> cell_counts() const;

    /// Alternating sum of cell counts.
    long euler_characteristic() const;

    /// The complex spanned by `cells`, renumbered in id order. Throws
    /// std::invalid_argument if `cells` is not closed under facets.
    CellComplex restrict_to(const CellSet& cells) const;

    /// Every cell together with all of its faces, recursively.
    CellSet closure(const CellSet& cells) const;
    bool is_subcomplex(const CellSet& cells) const;

    CellSet all_cells() const;

    friend bool operator==(const CellComplex&, const CellComplex&) = default;

private:
    std::vector<Cell> cells_;
};

enum class ViolationKind {
    facet_out_of_range,
    facet_dimension,
    incidence_value,
    duplicate_facet,
    missing_boundary,
    vertex_boundary,
    edge_augmentation,
    boundary_squared,
};

struct Violation {
    ViolationKind kind;
    CellId cell;
    std::string message;
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
    std::string summary() const;
};

ValidationReport validate_complex(const CellComplex& complex);

struct InvalidComplexError : std::runtime_error {
    explicit InvalidComplexError(ValidationReport r)
        : std::runtime_error("invalid cell complex: " + r.summary()), report(std::move(r)) {}
    ValidationReport report;
};

/// Components of the (not necessarily closed) cell set: two cells of the
/// set are adjacent when one is a facet of the other. Each component is
/// sorted; components are ordered by their smallest id.
std::vector<CellSet> connected_components(const CellComplex& complex, const CellSet& cells);

} // namespace arrtopo

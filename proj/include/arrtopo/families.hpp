#pragma once

#include "arrtopo/arrangement.hpp"
#include "arrtopo/errors.hpp"
#include "arrtopo/rational.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace arrtopo {

/// A_i = {(x, z) : a z + b <= x <= c z + d, e <= z <= f}.
struct Slab {
    Rational a, b, c, d, e, f;

    Rational left(const Rational& z) const { return a * z + b; }
    Rational right(const Rational& z) const { return c * z + d; }

    friend bool operator==(const Slab&, const Slab&) = default;
};

struct SlabFamily {
    std::vector<Slab> slabs;

    std::size_t size() const { return slabs.size(); }
    /// Throws InputError if the family is empty or some e > f.
    void validate() const;

    friend bool operator==(const SlabFamily&, const SlabFamily&) = default;
};

struct Interval {
    Rational lo, hi;
    friend bool operator==(const Interval&, const Interval&) = default;
};

/// The slice of a family at parameter z; absent entries are empty fibers.
struct FiberArrangement {
    Rational z;
    std::vector<std::optional<Interval>> intervals;

    std::size_t nonempty_count() const;
};

/// Sorted, duplicate-free parameter values where the order type of the fiber
/// endpoints or the emptiness pattern can change: every e_i, f_i, and every
/// z solving an equation between two endpoint functions (of one slab or of
/// two slabs) inside the common z-range of the slabs involved. Identically
/// equal endpoint functions contribute nothing.
std::vector<Rational> critical_values(const SlabFamily& family);

FiberArrangement fiber_at(const SlabFamily& family, const Rational& z);

/// Triangulates the line at the sorted distinct endpoints of the fiber (a
/// path graph); member i covers the vertices and edges inside its interval.
/// With pad_ends, one extra vertex is added below the smallest and above the
/// largest endpoint so that the unbounded complement pieces are represented;
/// an all-empty padded fiber becomes a single uncovered vertex.
Arrangement fiber_to_arrangement(const FiberArrangement& fiber, bool pad_ends = false);

/// slab-v1: {"format":"slab-v1","slabs":[{"a":"p/q",...,"f":"p/q"},...]}
SlabFamily load_slab_family(std::string_view text);
std::string serialize_slab_family(const SlabFamily& family);

/// Seed-deterministic family on a grid of half-integers: slopes in
/// {-1,...,1} step 1/2, offsets in [-4, 4], widths in [0, 4], z-ranges of
/// length 0..6 starting in [-4, 4].
SlabFamily random_slab_family(std::uint64_t seed, std::size_t n);

/// Axis-aligned box [x_lo,x_hi] x [y_lo,y_hi] x [z_lo,z_hi]; z is the parameter.
struct Box {
    Rational x_lo, x_hi, y_lo, y_hi, z_lo, z_hi;
    friend bool operator==(const Box&, const Box&) = default;
};

struct BoxFamily3D {
    std::vector<Box> boxes;

    std::size_t size() const { return boxes.size(); }
    void validate() const;

    friend bool operator==(const BoxFamily3D&, const BoxFamily3D&) = default;
};

/// box-v1: {"format":"box-v1","boxes":[{"x":["p/q","p/q"],"y":[..],"z":[..]},...]}
BoxFamily3D load_box_family(std::string_view text);
std::string serialize_box_family(const BoxFamily3D& family);

/// Box fibers are constant between consecutive z endpoints, so these are
/// exactly the z_lo and z_hi values.
std::vector<Rational> box_critical_values(const BoxFamily3D& family);

/// resolution x resolution cubical grid over the bounding rectangle of all
/// boxes (vertices, then horizontal edges, vertical edges, squares). A square
/// belongs to A_i when its four corners lie in the fiber rectangle of box i;
/// A_i is the closure of those squares. This is an inner approximation.
/// Throws std::invalid_argument for resolution 0 or a degenerate bounding box.
Arrangement grid_fiber(const BoxFamily3D& family, const Rational& z, std::size_t resolution);

} // namespace arrtopo

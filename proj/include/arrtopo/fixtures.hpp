#pragma once

#include "arrtopo/arrangement.hpp"
#include "arrtopo/families.hpp"
#include "arrtopo/simplicial_complex.hpp"

namespace arrtopo::fixtures {

/// Hexagon 0..5 covered by three arcs 0-1-2-3, 2-3-4-5, 4-5-0-1. Arcs meet
/// pairwise in one edge; no point lies in all three.
Arrangement three_arc_circle();

/// Hexagon with A1 = A2 = A3 = the whole circle.
Arrangement all_equal_circle();

/// Minimal 6-vertex triangulation of the real projective plane.
SimplicialComplex projective_plane();

/// A1: x in [0,2], z in [0,4]; A2: x in [z-1, z+1], z in [1,3].
SlabFamily two_slab_family();

} // namespace arrtopo::fixtures

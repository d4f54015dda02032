#include "arrtopo/fixtures.hpp"

namespace arrtopo::fixtures {

namespace {

SimplicialComplex hexagon()
{
    return SimplicialComplex::from_maximal(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}});
}

} // namespace

Arrangement three_arc_circle()
{
    return Arrangement::from_simplicial(hexagon(), {{{0, 1}, {1, 2}, {2, 3}},
                                                    {{2, 3}, {3, 4}, {4, 5}},
                                                    {{4, 5}, {0, 5}, {0, 1}}});
}

Arrangement all_equal_circle()
{
    const std::vector<Simplex> circle{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}};
    return Arrangement::from_simplicial(hexagon(), {circle, circle, circle});
}

SimplicialComplex projective_plane()
{
    return SimplicialComplex::from_maximal(6, {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 1, 5},
                                               {1, 2, 4}, {1, 3, 4}, {1, 3, 5}, {2, 3, 5}, {2, 4, 5}});
}

SlabFamily two_slab_family()
{
    SlabFamily fam;
    fam.slabs.push_back({Rational(0), Rational(0), Rational(0), Rational(2), Rational(0), Rational(4)});
    fam.slabs.push_back({Rational(1), Rational(-1), Rational(1), Rational(1), Rational(1), Rational(3)});
    return fam;
}

} // namespace arrtopo::fixtures

#include "arrtopo/cell_complex.hpp"
#include "arrtopo/chain_complex.hpp"
#include "arrtopo/fixtures.hpp"
#include "arrtopo/homology.hpp"
#include "arrtopo/simplicial_complex.hpp"

#include "../support.hpp"

#include <doctest.h>

#include <set>

using namespace arrtopo;

namespace {

SimplicialComplex triangle_boundary() { return SimplicialComplex::from_maximal(3, {{0, 1}, {1, 2}, {0, 2}}); }

HomologyReport H(const SimplicialComplex& s) { return homology(s.to_cell_complex()); }

// Betti numbers over Q and F_2 from the test-only dense ranks, trimmed.
std::vector<std::size_t> trimmed(std::vector<std::size_t> v)
{
    while (!v.empty() && v.back() == 0)
        v.pop_back();
    return v;
}

bool has_violation(const ValidationReport& r, ViolationKind k, CellId cell)
{
    for (const auto& v : r.violations)
        if (v.kind == k && v.cell == cell)
            return true;
    return false;
}

} // namespace

TEST_CASE("validate_complex")
{
    CHECK(validate_complex(triangle_boundary().to_cell_complex()).ok());

    // Edge with a coefficient of 2 on one end.
    CellComplex bad({Cell{0, {}}, Cell{0, {}}, Cell{1, {{0, -1}, {1, 2}}}});
    const auto r = validate_complex(bad);
    REQUIRE_FALSE(r.ok());
    CHECK(has_violation(r, ViolationKind::incidence_value, 2));
    CHECK(r.summary().find("incidence out of {-1,+1}") != std::string::npos);

    // Filled triangle whose 2-cell has one sign flipped: boundary squared fails there.
    CellComplex tri = SimplicialComplex::full_simplex(3).to_cell_complex();
    std::vector<Cell> cells = tri.cells();
    cells[6].boundary[0].coefficient = -cells[6].boundary[0].coefficient;
    const auto r2 = validate_complex(CellComplex(cells));
    CHECK(has_violation(r2, ViolationKind::boundary_squared, 6));
    CHECK(r2.summary().find("cell 6") != std::string::npos);

    // Facet of the wrong dimension, and an id out of range.
    CellComplex wrong({Cell{0, {}}, Cell{2, {{0, 1}}}, Cell{1, {{7, 1}}}});
    const auto r3 = validate_complex(wrong);
    CHECK(has_violation(r3, ViolationKind::facet_dimension, 1));
    CHECK(has_violation(r3, ViolationKind::facet_out_of_range, 2));
}

TEST_CASE("chain_complex_of")
{
    const ChainComplex c = chain_complex_of(triangle_boundary().to_cell_complex());
    CHECK(c.boundary(1).rows() == 3);
    CHECK(c.boundary(1).cols() == 3);
    CHECK(testsupport::rank_over_q(c.boundary(1)) == 2);

    const ChainComplex pt = chain_complex_of(SimplicialComplex::full_simplex(1).to_cell_complex());
    CHECK(pt.rank(0) == 1);
    CHECK(pt.boundary(1).cols() == 0);

    const ChainComplex full = chain_complex_of(SimplicialComplex::full_simplex(3).to_cell_complex());
    CHECK(full.boundary(2).rows() == 3);
    CHECK(full.boundary(2).cols() == 1);
    CHECK(full.boundary(1).rows() == 3);
    CHECK(full.boundary(1).cols() == 3);
    CHECK(multiply(full.boundary(1), full.boundary(2)).is_zero());
    CHECK(full.boundary_squared_vanishes());

    CellComplex bad({Cell{0, {}}, Cell{0, {}}, Cell{1, {{0, -1}, {1, 2}}}});
    CHECK_THROWS_AS(chain_complex_of(bad), InvalidComplexError);
}

TEST_CASE("homology examples")
{
    CHECK(H(triangle_boundary()) == make_homology({1, 1}));
    CHECK(H(SimplicialComplex::full_simplex(4)) == make_homology({1}));
    CHECK(H(SimplicialComplex::full_simplex(1)) == make_homology({1}));
    CHECK(homology(CellComplex{}).is_zero());

    const HomologyReport rp2 = H(fixtures::projective_plane());
    CHECK(rp2.betti_at(0) == 1);
    CHECK(rp2.betti_at(1) == 0);
    CHECK(rp2.betti_at(2) == 0);
    CHECK(rp2.torsion_at(1) == std::vector<BigInt>{2});
    CHECK(rp2.torsion_at(0).empty());
    CHECK(rp2.torsion_at(2).empty());
    // Independent check: Q-Betti (1,0,0) and F_2-Betti (1,1,1) force a single Z/2 in H_1.
    const ChainComplex c = chain_complex_of(fixtures::projective_plane().to_cell_complex());
    CHECK(trimmed(testsupport::field_betti(c, 0)) == std::vector<std::size_t>{1});
    CHECK(testsupport::field_betti(c, 2) == std::vector<std::size_t>{1, 1, 1});
    CHECK(trimmed(testsupport::field_betti(c, 3)) == std::vector<std::size_t>{1});
}

TEST_CASE("homology agrees with field ranks on random complexes")
{
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        const auto X = testsupport::random_complex(seed, 4 + seed % 4, 0.55);
        const ChainComplex c = chain_complex_of(X.to_cell_complex());
        const HomologyReport h = homology(c);
        CAPTURE(seed);
        CHECK(h == homology_by_snf(c));
        const auto q = testsupport::field_betti(c, 0);
        const auto f2 = testsupport::field_betti(c, 2);
        for (std::size_t d = 0; d < q.size(); ++d) {
            CHECK(h.betti_at(d) == q[d]);
            // Universal coefficients: dim H_d(F_2) = b_d + #even torsion in H_d + #even torsion in H_{d-1}.
            std::size_t even = 0;
            for (const auto& t : h.torsion_at(d))
                even += (t % 2 == 0);
            if (d > 0)
                for (const auto& t : h.torsion_at(d - 1))
                    even += (t % 2 == 0);
            CHECK(f2[d] == q[d] + even);
        }
    }
}

TEST_CASE("euler characteristic and boundary squared on random complexes")
{
    for (std::uint64_t seed = 100; seed < 140; ++seed) {
        const auto X = testsupport::random_complex(seed, 6, 0.6);
        const CellComplex cc = X.to_cell_complex();
        CHECK(validate_complex(cc).ok());
        CHECK(chain_complex_of(cc).boundary_squared_vanishes());
        CHECK(homology(cc).euler_characteristic() == cc.euler_characteristic());
        const ChainComplex c = chain_complex_of(cc);
        for (std::size_t d = 0; d + 1 < c.top_degree_count(); ++d) {
            const std::size_t r1 = testsupport::rank_over_q(c.boundary(d));
            const std::size_t r2 = testsupport::rank_over_q(c.boundary(d + 1));
            CHECK(r1 + r2 <= c.rank(d));
        }
    }
}

TEST_CASE("homology of a disjoint union is the direct sum")
{
    for (std::uint64_t seed = 200; seed < 220; ++seed) {
        const auto X = testsupport::random_complex(seed, 5, 0.6);
        const auto Y = testsupport::random_complex(seed + 1000, 4, 0.7);
        std::vector<Simplex> all = X.simplices();
        for (auto s : Y.simplices()) {
            for (auto& v : s)
                v += 5;
            all.push_back(s);
        }
        const auto U = SimplicialComplex::from_simplices(9, all);
        const HomologyReport hx = H(X), hy = H(Y), hu = H(U);
        const std::size_t top = std::max(hx.degrees(), hy.degrees());
        for (std::size_t d = 0; d < top; ++d) {
            CHECK(hu.betti_at(d) == hx.betti_at(d) + hy.betti_at(d));
            auto t = hx.torsion_at(d);
            auto ty = hy.torsion_at(d);
            t.insert(t.end(), ty.begin(), ty.end());
            std::sort(t.begin(), t.end());
            auto tu = hu.torsion_at(d);
            std::sort(tu.begin(), tu.end());
            CHECK(tu == t);
        }
    }
}

TEST_CASE("unit-pair reduction keeps homology")
{
    for (std::uint64_t seed = 300; seed < 330; ++seed) {
        const auto X = testsupport::random_complex(seed, 7, 0.5);
        const ChainComplex c = chain_complex_of(X.to_cell_complex());
        const ChainComplex r = reduce_unit_pairs(c);
        CHECK(r.boundary_squared_vanishes());
        CHECK(homology_by_snf(r) == homology_by_snf(c));
        std::size_t before = 0, after = 0;
        for (auto x : c.ranks())
            before += x;
        for (auto x : r.ranks())
            after += x;
        CHECK(after <= before);
    }
    // The projective plane keeps its torsion through the reduction.
    const ChainComplex rp2 = chain_complex_of(fixtures::projective_plane().to_cell_complex());
    CHECK(homology_by_snf(reduce_unit_pairs(rp2)).torsion_at(1) == std::vector<BigInt>{2});
}

TEST_CASE("barycentric subdivision")
{
    const auto edge = SimplicialComplex::full_simplex(2);
    const auto sd_edge = barycentric_subdivision(edge);
    CHECK(sd_edge.vertex_count() == 3);
    CHECK(sd_edge.to_cell_complex().cell_counts() == std::vector<std::size_t>{3, 2});

    const auto tri = SimplicialComplex::full_simplex(3);
    const auto sd = barycentric_subdivision(tri);
    CHECK(sd.to_cell_complex().cell_counts() == std::vector<std::size_t>{7, 12, 6});

    // Oracle: count chains in the face poset directly by enumerating subsets of faces.
    std::vector<std::size_t> chains(3, 0);
    const auto& faces = tri.simplices();
    for (std::uint32_t mask = 1; mask < (1u << faces.size()); ++mask) {
        std::vector<Simplex> pick;
        for (std::size_t i = 0; i < faces.size(); ++i)
            if (mask & (1u << i))
                pick.push_back(faces[i]);
        std::sort(pick.begin(), pick.end(), [](auto& a, auto& b) { return a.size() < b.size(); });
        bool chain = true;
        for (std::size_t i = 0; i + 1 < pick.size() && chain; ++i)
            chain = pick[i].size() < pick[i + 1].size() &&
                    std::includes(pick[i + 1].begin(), pick[i + 1].end(), pick[i].begin(), pick[i].end());
        if (chain && pick.size() <= 3)
            ++chains[pick.size() - 1];
    }
    CHECK(chains == std::vector<std::size_t>{7, 12, 6});
    CHECK(H(sd) == make_homology({1}));
}

TEST_CASE("homology is invariant under subdivision")
{
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
        const auto X = testsupport::random_complex(seed * 13, 3 + seed % 4, 0.6, 3);
        CAPTURE(seed);
        CHECK(H(X) == H(barycentric_subdivision(X)));
    }
    CHECK(H(barycentric_subdivision(fixtures::projective_plane())) == H(fixtures::projective_plane()));
}

TEST_CASE("subdivision of a subcomplex is a subcomplex of the subdivision")
{
    const auto X = testsupport::random_complex(5, 6, 0.6);
    const auto sub = skeleton(X, 1);
    const auto sdx = barycentric_subdivision(X);
    const auto sds = barycentric_subdivision(sub);
    for (const auto& chain : sds.simplices()) {
        // Sd(sub) numbers its vertices by simplex ids of `sub`; map them to X.
        Simplex mapped;
        for (auto v : chain)
            mapped.push_back(*X.index_of(sub.simplex(v)));
        std::sort(mapped.begin(), mapped.end());
        CHECK(sdx.contains(mapped));
    }
}

TEST_CASE("skeleton")
{
    const auto sk0 = skeleton(SimplicialComplex::full_simplex(5), 0);
    CHECK(sk0.size() == 5);
    CHECK(H(sk0) == make_homology({5}));

    const auto k4 = skeleton(SimplicialComplex::full_simplex(4), 1);
    const auto counts = k4.to_cell_complex().cell_counts();
    CHECK(counts == std::vector<std::size_t>{4, 6});
    CHECK(H(k4).betti_at(1) == counts[1] - counts[0] + 1);
    CHECK(H(k4).betti_at(1) == 3);

    const auto X = testsupport::random_complex(3, 6, 0.6);
    CHECK(skeleton(X, 5) == X);
    CHECK(skeleton(X, static_cast<std::size_t>(X.dimension())) == X);
}

TEST_CASE("simplicial loading and ids")
{
    const auto X = SimplicialComplex::from_maximal(3, {{0, 1, 2}});
    CHECK(X.size() == 7);
    CHECK(X.index_of({0, 1, 2}) == 6u);
    CHECK(X.maximal_simplices() == std::vector<Simplex>{{0, 1, 2}});
    CHECK_THROWS(SimplicialComplex::from_simplices(3, {{0}, {0, 1}}));
    CHECK_THROWS(SimplicialComplex::from_maximal(2, {{0, 2}}));
}

TEST_CASE("connected_components")
{
    // Two disjoint edges with their vertices.
    const auto two = SimplicialComplex::from_maximal(4, {{0, 1}, {2, 3}}).to_cell_complex();
    CHECK(connected_components(two, two.all_cells()).size() == 2);

    const auto path = SimplicialComplex::from_maximal(4, {{0, 1}, {1, 2}, {2, 3}});
    const auto pc = path.to_cell_complex();
    CHECK(connected_components(pc, pc.all_cells()).size() == 1);

    // Open edges {0,1} and {1,2} without the shared vertex 1.
    const CellSet open_edges{*path.index_of({0, 1}), *path.index_of({1, 2})};
    CHECK(connected_components(pc, open_edges).size() == 2);
    // With the vertex they join up.
    CellSet with_vertex = open_edges;
    with_vertex.push_back(*path.index_of({1}));
    std::sort(with_vertex.begin(), with_vertex.end());
    CHECK(connected_components(pc, with_vertex).size() == 1);

    CHECK_THROWS_AS(connected_components(pc, CellSet{99}), std::out_of_range);
}

TEST_CASE("components match b0 of closed subcomplexes")
{
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        const auto X = testsupport::random_complex(seed, 7, 0.4);
        const auto cc = X.to_cell_complex();
        CHECK(connected_components(cc, cc.all_cells()).size() == H(X).betti_at(0));
    }
}

#include "arrtopo/arrangement.hpp"
#include "arrtopo/boolean_formula.hpp"
#include "arrtopo/comparison.hpp"
#include "arrtopo/double_complex.hpp"
#include "arrtopo/fixtures.hpp"
#include "arrtopo/hocolim.hpp"
#include "arrtopo/homology.hpp"
#include "arrtopo/signature.hpp"

#include "../support.hpp"

#include <doctest.h>

using namespace arrtopo;

namespace {

Arrangement corpus(std::uint64_t seed)
{
    RandomArrangementParams p;
    p.vertex_count = 3 + seed % 5;
    p.n = 1 + seed % 4;
    p.ambient_density = 0.6;
    return random_arrangement(seed, p);
}

HomologyReport H(const HocolimComplex& h) { return homology(h.complex); }

std::size_t binomial(std::size_t n, std::size_t k)
{
    if (k > n)
        return 0;
    std::size_t r = 1;
    for (std::size_t i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

// Kunneth for torsion-free factors: b_k(X x Y) = sum_{i+j=k} b_i(X) b_j(Y).
std::vector<std::size_t> product_betti(const HomologyReport& x, const HomologyReport& y)
{
    std::vector<std::size_t> out(x.degrees() + y.degrees(), 0);
    for (std::size_t i = 0; i < x.degrees(); ++i)
        for (std::size_t j = 0; j < y.degrees(); ++j)
            out[i + j] += x.betti_at(i) * y.betti_at(j);
    while (!out.empty() && out.back() == 0)
        out.pop_back();
    return out;
}

} // namespace

TEST_CASE("build_hocolim small examples")
{
    const auto pt = SimplicialComplex::from_maximal(1, {{0}});
    const Arrangement same = Arrangement::from_simplicial(pt, {{{0}}, {{0}}});
    const HocolimComplex h = build_hocolim(same, 1);
    CHECK(h.complex.size() == 3);
    CHECK(h.complex.cell_counts() == std::vector<std::size_t>{2, 1});
    CHECK(H(h) == make_homology({1}));

    const auto two = SimplicialComplex::from_maximal(2, {{0}, {1}});
    const Arrangement apart = Arrangement::from_simplicial(two, {{{0}}, {{1}}});
    const HocolimComplex h2 = build_hocolim(apart, 1);
    CHECK(h2.complex.cell_counts() == std::vector<std::size_t>{2});
    CHECK(H(h2).betti_at(0) == 2);

    CHECK(H(build_hocolim(fixtures::three_arc_circle(), 2)) == make_homology({1, 1}));
    CHECK_THROWS_AS(build_hocolim(fixtures::three_arc_circle(), 3), std::invalid_argument);
}

TEST_CASE("hocolim cells, labels and validity")
{
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        const Arrangement arr = corpus(seed);
        for (std::size_t m = 0; m < arr.size(); ++m) {
            const HocolimComplex h = build_hocolim(arr, m);
            CAPTURE(seed);
            CAPTURE(m);
            CHECK(validate_complex(h.complex).ok());
            CHECK(chain_complex_of(h.complex).boundary_squared_vanishes());
            std::size_t expected = 0;
            for (CellId c = 0; c < arr.ambient().size(); ++c)
                for (std::size_t k = 1; k <= m + 1; ++k)
                    expected += binomial(arr.signature(c).size(), k);
            CHECK(h.complex.size() == expected);
            for (CellId x = 0; x < h.complex.size(); ++x) {
                const IndexSet& J = h.nerve_label[x];
                const CellId c = h.space_label[x];
                CHECK(!J.empty());
                CHECK(J.size() <= m + 1);
                CHECK(J.subset_of(arr.signature(c)));
                CHECK(h.complex.cell(x).dim == J.size() - 1 + arr.ambient().cell(c).dim);
            }
        }
    }
}

TEST_CASE("hocolim_0 is the disjoint union of the members")
{
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        const Arrangement arr = corpus(seed);
        const HocolimComplex h = build_hocolim(arr, 0);
        std::size_t cells = 0;
        std::vector<std::size_t> betti;
        for (std::size_t i = 1; i <= arr.size(); ++i) {
            cells += arr.member(i).size();
            const auto hi = homology_of_subcomplex(arr.ambient(), arr.member(i));
            betti.resize(std::max(betti.size(), hi.degrees()), 0);
            for (std::size_t d = 0; d < hi.degrees(); ++d)
                betti[d] += hi.betti_at(d);
        }
        CHECK(h.complex.size() == cells);
        for (std::size_t d = 0; d < betti.size(); ++d)
            CHECK(H(h).betti_at(d) == betti[d]);
        // Every cell of hocolim_0 has a singleton nerve label.
        for (const auto& J : h.nerve_label)
            CHECK(J.size() == 1);
    }
}

TEST_CASE("double complex identities")
{
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        const Arrangement arr = corpus(seed);
        for (std::size_t m = 0; m < arr.size(); ++m) {
            const DoubleComplex dc(arr, m);
            CHECK(dc.identities_hold());
            CHECK(dc.total().boundary_squared_vanishes());
        }
    }
}

TEST_CASE("hocolim_chain_total examples")
{
    // m = 0: direct sum of the members' chain complexes.
    const Arrangement arc = fixtures::three_arc_circle();
    const ChainComplex t0 = hocolim_chain_total(arc, 0);
    std::vector<std::size_t> ranks(2, 0);
    for (std::size_t i = 1; i <= 3; ++i) {
        const auto c = chain_complex_of(arc.ambient().restrict_to(arc.member(i)));
        for (std::size_t d = 0; d < 2; ++d)
            ranks[d] += c.rank(d);
    }
    CHECK(t0.rank(0) == ranks[0]);
    CHECK(t0.rank(1) == ranks[1]);
    CHECK(homology(t0) == make_homology({3}));

    CHECK(homology(hocolim_chain_total(arc, 2)) == make_homology({1, 1}));

    const Arrangement overlap = path_arrangement(4, {std::make_pair(0, 2), std::make_pair(1, 3)});
    CHECK(homology(hocolim_chain_total(overlap, 1)) == make_homology({1}));
    CHECK_THROWS_AS(hocolim_chain_total(arc, 3), std::invalid_argument);
}

TEST_CASE("oracle equivalence")
{
    const Arrangement arc = fixtures::three_arc_circle();
    for (std::size_t m = 0; m < 3; ++m)
        CHECK(compare_hocolim_oracles(arc, m).pass);

    const auto tri = SimplicialComplex::full_simplex(3);
    const Arrangement single = Arrangement::from_simplicial(tri, {{{0, 1}, {2}}});
    const ComparisonReport r = compare_hocolim_oracles(single, 0);
    CHECK(r.pass);
    CHECK(r.lhs == homology_of_subcomplex(single.ambient(), single.member(1)));
    CHECK(r.rhs == r.lhs);

    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        const Arrangement arr = corpus(seed);
        for (std::size_t m = 0; m < arr.size(); ++m) {
            const ComparisonReport c = compare_hocolim_oracles(arr, m);
            CAPTURE(seed);
            CAPTURE(m);
            CHECK(c.pass);
            CHECK(c.lhs == homology_by_snf(hocolim_chain_total(arr, m)));
        }
    }
}

TEST_CASE("union comparison")
{
    const ComparisonReport arc = union_comparison(fixtures::three_arc_circle());
    CHECK(arc.pass);
    CHECK(arc.lhs == make_homology({1, 1}));
    CHECK(arc.rhs == make_homology({1, 1}));

    const auto tri = SimplicialComplex::full_simplex(3);
    const ComparisonReport one = union_comparison(Arrangement::from_simplicial(tri, {{{0, 1}}}));
    CHECK(one.pass);
    CHECK(one.lhs == make_homology({1}));

    const auto two = SimplicialComplex::from_maximal(4, {{0, 1}, {2, 3}});
    const ComparisonReport apart = union_comparison(Arrangement::from_simplicial(two, {{{0, 1}}, {{2, 3}}}));
    CHECK(apart.pass);
    CHECK(apart.lhs.betti_at(0) == 2);
    CHECK(apart.rhs.betti_at(0) == 2);

    for (std::uint64_t seed = 1; seed <= 40; ++seed)
        CHECK(union_comparison(corpus(seed)).pass);
}

TEST_CASE("truncation comparison")
{
    const ComparisonReport arc = truncation_comparison(fixtures::three_arc_circle(), 1);
    CHECK(arc.pass);
    REQUIRE(arc.relative);
    CHECK(arc.relative->is_zero());

    // A1 = A2 = A3 = circle: hocolim_1 = sk_1(Delta_3) x S^1, a torus.
    const Arrangement eq = fixtures::all_equal_circle();
    const ComparisonReport t = truncation_comparison(eq, 1);
    CHECK(t.pass);
    CHECK(t.lhs == make_homology({1, 1}));
    CHECK(t.rhs == make_homology({1, 2, 1}));
    const auto circle = homology(skeleton(SimplicialComplex::full_simplex(3), 1).to_cell_complex());
    CHECK(t.rhs.betti == product_betti(circle, circle));
    CHECK(t.lhs.agrees_in_degree(t.rhs, 0));
    CHECK_FALSE(t.lhs.agrees_in_degree(t.rhs, 1));
    REQUIRE(t.relative);
    CHECK(t.relative->betti_at(0) == 0);
    CHECK(t.relative->betti_at(1) == 0);

    const ComparisonReport top = truncation_comparison(eq, 2);
    CHECK(top.pass);
    REQUIRE(top.relative);
    CHECK(top.relative->is_zero());

    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        const Arrangement arr = corpus(seed);
        for (std::size_t m = 0; m < arr.size(); ++m) {
            const ComparisonReport r = truncation_comparison(arr, m);
            CHECK(r.pass);
            REQUIRE(r.relative);
            for (std::size_t d = 0; d <= m; ++d)
                CHECK(r.relative->betti_at(d) == 0);
        }
    }
}

TEST_CASE("diagram signature")
{
    const Arrangement arc = fixtures::three_arc_circle();
    const DiagramSignature s = diagram_signature(arc, 1);
    CHECK(s.m == 1);
    CHECK(s.intersections.size() == 6);
    for (const auto& [I, h] : s.intersections) {
        CHECK(I.size() <= 2);
        CHECK(h == make_homology({1}));
    }
    CHECK(s.hocolim == make_homology({1, 1}));
    CHECK(s.union_homology == make_homology({1, 1}));
    CHECK(s.hash_hex().size() == 16);
    CHECK(s.hash() == fnv1a64(s.canonical()));

    const auto tri = SimplicialComplex::full_simplex(3);
    const DiagramSignature one = diagram_signature(Arrangement::from_simplicial(tri, {{{0, 1}, {1, 2}}}), 0);
    REQUIRE(one.intersections.size() == 1);
    CHECK(one.intersections[0].second == one.hocolim);
    CHECK(one.hocolim == one.union_homology);

    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
        const Arrangement arr = corpus(seed);
        const std::size_t m = seed % arr.size();
        CHECK(diagram_signature(arr, m) == diagram_signature(subdivide(arr), m));
        CHECK(diagram_signature(arr, m).canonical() == diagram_signature(subdivide(arr), m).canonical());
    }
}

TEST_CASE("fnv1a64 reference values")
{
    CHECK(fnv1a64("") == 0xcbf29ce484222325ULL);
    CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cULL);
    CHECK(fnv1a64("foobar") == 0x85944171f73967e8ULL);
}

TEST_CASE("comparison corollary")
{
    const Arrangement arc = fixtures::three_arc_circle();
    const ComparisonReport u = verify_comparison_corollary(arc, BooleanFormula::parse("T1 | T2 | T3"));
    CHECK(u.pass);
    CHECK(u.lhs == make_homology({1, 1}));
    CHECK(u.rhs == make_homology({1, 1}));
    const ComparisonReport a = verify_comparison_corollary(arc, BooleanFormula::parse("T2"));
    CHECK(a.pass);
    CHECK(a.lhs == make_homology({1}));

    std::mt19937_64 rng(3);
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
        const Arrangement arr = corpus(seed);
        CHECK(verify_comparison_corollary(arr, random_formula(rng, arr.size(), 3)).pass);
    }
}

TEST_CASE("nerve")
{
    const auto arc = nerve(fixtures::three_arc_circle());
    CHECK(arc == skeleton(SimplicialComplex::full_simplex(3), 1));
    CHECK(homology(arc.to_cell_complex()) == make_homology({1, 1}));

    const auto disc = SimplicialComplex::from_maximal(3, {{0}, {1}, {2}});
    const auto apart = nerve(Arrangement::from_simplicial(disc, {{{0}}, {{1}}, {{2}}}));
    CHECK(apart.size() == 3);
    CHECK(apart.dimension() == 0);

    CHECK(nerve(fixtures::all_equal_circle()) == SimplicialComplex::full_simplex(3));
}

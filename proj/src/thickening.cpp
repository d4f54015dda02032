#include "arrtopo/thickening.hpp"

#include "arrtopo/homology.hpp"

#include <stdexcept>

namespace arrtopo {

ThickenedModel thickened_skeleton_model(std::size_t n, std::size_t m)
{
    if (n < 1 || n > 8)
        throw std::invalid_argument("n must lie in [1, 8]");
    if (m + 1 > n)
        throw std::invalid_argument("m = " + std::to_string(m) + " outside [0, n-1]");

    const SimplicialComplex simplex = SimplicialComplex::full_simplex(n);
    // Sd vertex k is simplex k of Delta_[n]; keep the barycenters of faces with at most m + 1 vertices.
    // A chain lies in the full subcomplex on those barycenters iff its top does, so only such
    // chains are generated.
    auto small_face = [&](std::size_t k) { return simplex.simplex(k).size() <= m + 1; };
    const SimplicialComplex sd = barycentric_subdivision_where(simplex, small_face);

    ThickenedModel out;
    out.n = n;
    out.m = m;
    out.model = induced_subcomplex(sd, small_face, /*renumber=*/true);
    for (std::size_t k = 0; k < simplex.size(); ++k) {
        if (!small_face(k))
            continue;
        IndexSet I;
        for (std::size_t v : simplex.simplex(k))
            I.insert(v + 1);
        out.vertex_sets.push_back(I);
    }
    return out;
}

ComparisonReport thickened_model_check(std::size_t n, std::size_t m)
{
    const ThickenedModel tm = thickened_skeleton_model(n, m);
    ComparisonReport r;
    r.check = "thickened_model";
    r.lhs = homology(tm.model.to_cell_complex());
    r.rhs = homology(skeleton(SimplicialComplex::full_simplex(n), m).to_cell_complex());
    r.pass = r.lhs == r.rhs;
    r.detail = "n=" + std::to_string(n) + " m=" + std::to_string(m);
    if (!r.pass)
        r.detail += ": model " + r.lhs.to_string() + " != skeleton " + r.rhs.to_string();
    return r;
}

} // namespace arrtopo

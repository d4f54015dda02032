#pragma once

#include "arrtopo/comparison.hpp"
#include "arrtopo/index_set.hpp"
#include "arrtopo/simplicial_complex.hpp"

#include <vector>

namespace arrtopo {

/// Combinatorial model of the thickened m-skeleton of Delta_[n]: the full
/// subcomplex of Sd(Delta_[n]) on the barycenters b_I with |I| <= m + 1.
/// Model vertex k corresponds to vertex_sets[k]; vertex_sets is in
/// IndexSet order and each simplex is a chain I_1 < ... < I_p.
struct ThickenedModel {
    std::size_t n = 0;
    std::size_t m = 0;
    std::vector<IndexSet> vertex_sets;
    SimplicialComplex model;
};

/// Throws std::invalid_argument unless 1 <= n <= 8 and m <= n - 1.
ThickenedModel thickened_skeleton_model(std::size_t n, std::size_t m);

/// homology(model) against homology(sk_m(Delta_[n])).
ComparisonReport thickened_model_check(std::size_t n, std::size_t m);

} // namespace arrtopo

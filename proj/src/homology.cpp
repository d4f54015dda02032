#include "arrtopo/homology.hpp"

#include "arrtopo/smith.hpp"

#include <sstream>

namespace arrtopo {

long HomologyReport::euler_characteristic() const
{
    long chi = 0;
    for (std::size_t d = 0; d < betti.size(); ++d)
        chi += (d % 2 == 0 ? 1 : -1) * static_cast<long>(betti[d]);
    return chi;
}

bool HomologyReport::agrees_in_degree(const HomologyReport& other, std::size_t d) const
{
    return betti_at(d) == other.betti_at(d) && torsion_at(d) == other.torsion_at(d);
}

std::string HomologyReport::to_string() const
{
    std::ostringstream os;
    os << "(";
    for (std::size_t d = 0; d < betti.size(); ++d)
        os << (d ? "," : "") << betti[d];
    bool any_torsion = false;
    for (std::size_t d = 0; d < torsion.size(); ++d) {
        if (torsion[d].empty())
            continue;
        os << (any_torsion ? ";" : "|") << d << ":[";
        for (std::size_t i = 0; i < torsion[d].size(); ++i)
            os << (i ? "," : "") << torsion[d][i];
        os << "]";
        any_torsion = true;
    }
    os << ")";
    return os.str();
}

HomologyReport make_homology(std::vector<std::size_t> betti, std::vector<std::vector<BigInt>> torsion)
{
    const std::size_t n = std::max(betti.size(), torsion.size());
    betti.resize(n, 0);
    torsion.resize(n);
    while (!betti.empty() && betti.back() == 0 && torsion.back().empty()) {
        betti.pop_back();
        torsion.pop_back();
    }
    return HomologyReport{std::move(betti), std::move(torsion)};
}

HomologyReport homology_by_snf(const ChainComplex& chain)
{
    const std::size_t top = chain.top_degree_count();
    // rank_of[d] = rank of boundary(d); factors_of[d] = torsion factors of boundary(d).
    std::vector<std::size_t> rank_of(top + 1, 0);
    std::vector<std::vector<BigInt>> factors_of(top + 1);
    for (std::size_t d = 1; d < top; ++d) {
        const SnfResult snf = smith_normal_form(chain.boundary(d));
        rank_of[d] = snf.rank;
        factors_of[d] = snf.nontrivial_factors();
    }
    std::vector<std::size_t> betti(top, 0);
    std::vector<std::vector<BigInt>> torsion(top);
    for (std::size_t d = 0; d < top; ++d) {
        betti[d] = chain.rank(d) - rank_of[d] - rank_of[d + 1];
        torsion[d] = factors_of[d + 1];
    }
    return make_homology(std::move(betti), std::move(torsion));
}

HomologyReport homology(const ChainComplex& chain)
{
    try {
        return homology_by_snf(reduce_unit_pairs(chain));
    } catch (const IntegerOverflow&) {
        return homology_by_snf(chain);
    }
}

HomologyReport homology(const CellComplex& complex) { return homology(chain_complex_of(complex)); }

HomologyReport homology_of_subcomplex(const CellComplex& complex, const CellSet& cells)
{
    return homology(chain_complex_of_unchecked(complex.restrict_to(cells)));
}

} // namespace arrtopo

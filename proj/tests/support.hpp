#pragma once

// Independent reference computations used only by the tests. None of these
// go through the library's Smith normal form or elimination code.

#include "arrtopo/chain_complex.hpp"
#include "arrtopo/integer_matrix.hpp"
#include "arrtopo/rational.hpp"
#include "arrtopo/simplicial_complex.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <utility>
#include <vector>

namespace testsupport {

using arrtopo::BigInt;
using arrtopo::IntMatrix;
using arrtopo::Rational;

/// Rank over Q by fraction-free dense elimination.
inline std::size_t rank_over_q(const IntMatrix& m)
{
    auto a = m.to_dense();
    std::vector<std::vector<BigInt>> b(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (auto v : a[i])
            b[i].push_back(BigInt(v));
    const std::size_t rows = b.size();
    const std::size_t cols = m.cols();
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t p = rank;
        while (p < rows && b[p][c] == 0)
            ++p;
        if (p == rows)
            continue;
        std::swap(b[p], b[rank]);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            if (b[r][c] == 0)
                continue;
            const BigInt f = b[r][c];
            const BigInt g = b[rank][c];
            for (std::size_t k = c; k < cols; ++k)
                b[r][k] = b[r][k] * g - b[rank][k] * f;
        }
        ++rank;
    }
    return rank;
}

/// Rank over the prime field F_p.
inline std::size_t rank_mod_p(const IntMatrix& m, std::int64_t p)
{
    auto a = m.to_dense();
    for (auto& row : a)
        for (auto& v : row)
            v = ((v % p) + p) % p;
    auto inv = [p](std::int64_t x) {
        std::int64_t r = 1, e = p - 2;
        while (e) {
            if (e & 1)
                r = r * x % p;
            x = x * x % p;
            e >>= 1;
        }
        return r;
    };
    const std::size_t rows = a.size();
    const std::size_t cols = m.cols();
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t piv = rank;
        while (piv < rows && a[piv][c] == 0)
            ++piv;
        if (piv == rows)
            continue;
        std::swap(a[piv], a[rank]);
        const std::int64_t s = inv(a[rank][c]);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || a[r][c] == 0)
                continue;
            const std::int64_t f = a[r][c] * s % p;
            for (std::size_t k = c; k < cols; ++k)
                a[r][k] = ((a[r][k] - f * a[rank][k]) % p + p) % p;
        }
        ++rank;
    }
    return rank;
}

/// Betti numbers over Q (p = 0) or F_p, untrimmed, one per stored degree.
inline std::vector<std::size_t> field_betti(const arrtopo::ChainComplex& c, std::int64_t p = 0)
{
    const std::size_t top = c.top_degree_count();
    std::vector<std::size_t> rk(top + 1, 0);
    for (std::size_t d = 1; d < top; ++d)
        rk[d] = p == 0 ? rank_over_q(c.boundary(d)) : rank_mod_p(c.boundary(d), p);
    std::vector<std::size_t> out(top);
    for (std::size_t d = 0; d < top; ++d)
        out[d] = c.rank(d) - rk[d] - rk[d + 1];
    return out;
}

inline BigInt determinant(std::vector<std::vector<BigInt>> a)
{
    // Bareiss fraction-free elimination.
    const std::size_t n = a.size();
    BigInt sign = 1, prev = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && a[p][k] == 0)
            ++p;
        if (p == n)
            return 0;
        if (p != k) {
            std::swap(a[p], a[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

inline void choose(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
                   std::vector<std::vector<std::size_t>>& out)
{
    if (cur.size() == k) {
        out.push_back(cur);
        return;
    }
    for (std::size_t i = start; i < n; ++i) {
        cur.push_back(i);
        choose(n, k, i + 1, cur, out);
        cur.pop_back();
    }
}

/// Invariant factors from determinantal divisors: d_k = gcd of all k x k
/// minors, factor_k = d_k / d_{k-1}. Exponential; small matrices only.
inline std::vector<BigInt> invariant_factors_by_minors(const std::vector<std::vector<std::int64_t>>& m)
{
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    std::vector<BigInt> out;
    BigInt prev = 1;
    for (std::size_t k = 1; k <= std::min(rows, cols); ++k) {
        std::vector<std::vector<std::size_t>> rs, cs;
        std::vector<std::size_t> cur;
        choose(rows, k, 0, cur, rs);
        choose(cols, k, 0, cur, cs);
        BigInt g = 0;
        for (const auto& r : rs)
            for (const auto& c : cs) {
                std::vector<std::vector<BigInt>> sub(k, std::vector<BigInt>(k));
                for (std::size_t i = 0; i < k; ++i)
                    for (std::size_t j = 0; j < k; ++j)
                        sub[i][j] = m[r[i]][c[j]];
                g = boost::multiprecision::gcd(g, BigInt(abs(determinant(sub))));
            }
        if (g == 0)
            break;
        out.push_back(g / prev);
        prev = g;
    }
    return out;
}

/// Random downward-closed complex: every subset of up to `max_size` vertices
/// is kept with probability `density` when all its facets are present.
inline arrtopo::SimplicialComplex random_complex(std::uint64_t seed, std::size_t vertices, double density,
                                                 std::size_t max_size = 4)
{
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<arrtopo::Simplex> kept;
    for (std::size_t v = 0; v < vertices; ++v)
        kept.push_back({v});
    std::vector<arrtopo::Simplex> layer = kept;
    for (std::size_t size = 2; size <= max_size; ++size) {
        std::vector<arrtopo::Simplex> next;
        std::vector<std::vector<std::size_t>> cands;
        std::vector<std::size_t> cur;
        choose(vertices, size, 0, cur, cands);
        for (const auto& s : cands) {
            bool ok = true;
            for (std::size_t drop = 0; drop < s.size() && ok; ++drop) {
                arrtopo::Simplex f;
                for (std::size_t i = 0; i < s.size(); ++i)
                    if (i != drop)
                        f.push_back(s[i]);
                ok = std::binary_search(layer.begin(), layer.end(), f);
            }
            if (ok && u(rng) < density)
                next.push_back(s);
        }
        if (next.empty())
            break;
        kept.insert(kept.end(), next.begin(), next.end());
        layer = next;
    }
    return arrtopo::SimplicialComplex::from_simplices(vertices, kept);
}

/// Components of the basic sets of closed intervals on the real line, found
/// by sampling: every endpoint, several rationals strictly inside every gap,
/// and points beyond both ends, in increasing order. Adjacent samples with
/// the same membership pattern lie in one component, because the pattern is
/// constant on each open gap and the samples visit every gap and endpoint.
inline std::size_t sampled_basic_components(const std::vector<std::optional<std::pair<Rational, Rational>>>& ivs)
{
    std::vector<Rational> ends;
    for (const auto& iv : ivs)
        if (iv) {
            ends.push_back(iv->first);
            ends.push_back(iv->second);
        }
    std::sort(ends.begin(), ends.end());
    ends.erase(std::unique(ends.begin(), ends.end()), ends.end());
    std::vector<Rational> samples;
    if (ends.empty()) {
        samples = {Rational(-1), Rational(0), Rational(1)};
    } else {
        samples.push_back(ends.front() - 2);
        samples.push_back(ends.front() - Rational(1, 3));
        for (std::size_t i = 0; i < ends.size(); ++i) {
            samples.push_back(ends[i]);
            if (i + 1 < ends.size())
                for (int k = 1; k <= 5; ++k)
                    samples.push_back(ends[i] + (ends[i + 1] - ends[i]) * Rational(k, 6));
        }
        samples.push_back(ends.back() + Rational(1, 3));
        samples.push_back(ends.back() + 2);
    }
    auto pattern = [&](const Rational& x) {
        std::vector<bool> in;
        for (const auto& iv : ivs)
            in.push_back(iv && iv->first <= x && x <= iv->second);
        return in;
    };
    std::size_t runs = 0;
    std::vector<bool> last;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        auto p = pattern(samples[i]);
        if (i == 0 || p != last)
            ++runs;
        last = std::move(p);
    }
    return runs;
}

} // namespace testsupport

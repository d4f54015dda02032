#include "arrtopo/smith.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <utility>

namespace arrtopo {

namespace {

std::int64_t checked_mul_sub(std::int64_t a, std::int64_t q, std::int64_t b)
{
    std::int64_t prod = 0;
    std::int64_t res = 0;
    if (__builtin_mul_overflow(q, b, &prod) || __builtin_sub_overflow(a, prod, &res))
        throw IntegerOverflow("int64 overflow during elimination");
    return res;
}

BigInt checked_mul_sub(const BigInt& a, const BigInt& q, const BigInt& b) { return a - q * b; }

std::int64_t magnitude(std::int64_t a)
{
    if (a == std::numeric_limits<std::int64_t>::min())
        throw IntegerOverflow("int64 overflow taking absolute value");
    return a < 0 ? -a : a;
}

BigInt magnitude(const BigInt& a) { return a < 0 ? BigInt(-a) : a; }

template <class T>
bool is_unit(const T& v)
{
    return v == 1 || v == -1;
}

// Sparse elimination to diagonal form. Rows are ordered maps so that pivot
// scans and row updates visit columns in increasing order.
template <class T>
class Eliminator {
public:
    explicit Eliminator(const IntMatrix& m) : rows_(m.rows()), col_rows_(m.cols())
    {
        for (std::size_t c = 0; c < m.cols(); ++c)
            for (const auto& e : m.column(c))
                set(e.row, c, T(e.value));
    }

    std::vector<T> diagonalize()
    {
        std::vector<T> diagonal;
        while (auto pivot = choose_pivot()) {
            const auto [r0, c0] = *pivot;
            const T p = get(r0, c0);

            bool isolated = true;
            const std::vector<std::size_t> others(col_rows_[c0].begin(), col_rows_[c0].end());
            for (std::size_t r : others) {
                if (r == r0)
                    continue;
                const T q = get(r, c0) / p;
                if (q != 0)
                    row_sub(r, q, r0);
                if (get(r, c0) != 0)
                    isolated = false;
            }
            if (!isolated)
                continue;

            if (!is_unit(p)) {
                // Column c0 is clear outside r0, so column operations only touch row r0.
                const std::vector<std::pair<std::size_t, T>> entries(rows_[r0].begin(), rows_[r0].end());
                for (const auto& [c, v] : entries) {
                    if (c == c0)
                        continue;
                    const T q = v / p;
                    const T rem = checked_mul_sub(v, q, p);
                    set(r0, c, rem);
                    if (rem != 0)
                        isolated = false;
                }
                if (!isolated)
                    continue;
            }

            diagonal.push_back(magnitude(p));
            clear_row(r0);
        }
        return diagonal;
    }

private:
    T get(std::size_t r, std::size_t c) const
    {
        const auto& row = rows_[r];
        auto it = row.find(c);
        return it == row.end() ? T(0) : it->second;
    }

    void set(std::size_t r, std::size_t c, const T& v)
    {
        auto& row = rows_[r];
        auto it = row.find(c);
        const bool was_unit = it != row.end() && is_unit(it->second);
        if (v == 0) {
            if (it != row.end()) {
                row.erase(it);
                col_rows_[c].erase(r);
                if (was_unit)
                    units_.erase({r, c});
            }
            return;
        }
        if (it == row.end()) {
            row.emplace(c, v);
            col_rows_[c].insert(r);
        } else {
            it->second = v;
        }
        const bool now_unit = is_unit(v);
        if (now_unit && !was_unit)
            units_.insert({r, c});
        else if (!now_unit && was_unit)
            units_.erase({r, c});
    }

    // row[target] -= q * row[source]
    void row_sub(std::size_t target, const T& q, std::size_t source)
    {
        for (const auto& [c, v] : rows_[source])
            set(target, c, checked_mul_sub(get(target, c), q, v));
    }

    void clear_row(std::size_t r)
    {
        for (const auto& [c, v] : rows_[r]) {
            col_rows_[c].erase(r);
            if (is_unit(v))
                units_.erase({r, c});
        }
        rows_[r].clear();
    }

    std::optional<std::pair<std::size_t, std::size_t>> choose_pivot() const
    {
        if (!units_.empty())
            return *units_.begin();
        std::optional<std::pair<std::size_t, std::size_t>> best;
        T best_abs = 0;
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            for (const auto& [c, v] : rows_[r]) {
                const T a = magnitude(v);
                if (!best || a < best_abs) {
                    best = {r, c};
                    best_abs = a;
                }
            }
        }
        return best;
    }

    std::vector<std::map<std::size_t, T>> rows_;
    std::vector<std::set<std::size_t>> col_rows_;
    std::set<std::pair<std::size_t, std::size_t>> units_;
};

BigInt to_big(std::int64_t v) { return BigInt(v); }
BigInt to_big(const BigInt& v) { return v; }

template <class T>
SnfResult run(const IntMatrix& matrix)
{
    Eliminator<T> elim(matrix);
    std::vector<T> diag = elim.diagonalize();
    std::vector<BigInt> big;
    big.reserve(diag.size());
    for (const auto& d : diag)
        big.push_back(to_big(d));
    SnfResult result;
    result.rank = big.size();
    result.invariant_factors = invariant_factors_from_diagonal(std::move(big));
    return result;
}

} // namespace

std::vector<BigInt> SnfResult::nontrivial_factors() const
{
    std::vector<BigInt> out;
    for (const auto& f : invariant_factors)
        if (f > 1)
            out.push_back(f);
    return out;
}

std::vector<BigInt> invariant_factors_from_diagonal(std::vector<BigInt> diagonal)
{
    std::size_t ones = 0;
    std::vector<BigInt> rest;
    for (auto& d : diagonal) {
        if (d < 0)
            d = -d;
        if (d == 1)
            ++ones;
        else if (d != 0)
            rest.push_back(std::move(d));
    }
    // diag(a, b) ~ diag(gcd(a,b), lcm(a,b)); after pass i, rest[i] divides every later entry.
    for (std::size_t i = 0; i < rest.size(); ++i) {
        for (std::size_t j = i + 1; j < rest.size(); ++j) {
            const BigInt g = boost::multiprecision::gcd(rest[i], rest[j]);
            const BigInt l = rest[i] / g * rest[j];
            rest[i] = g;
            rest[j] = l;
        }
    }
    std::vector<BigInt> out(ones, BigInt(1));
    for (auto& r : rest)
        out.push_back(std::move(r));
    // Entries that collapsed to 1 must move to the front.
    std::stable_sort(out.begin(), out.end());
    return out;
}

SnfResult smith_normal_form(const IntMatrix& matrix)
{
    try {
        return run<std::int64_t>(matrix);
    } catch (const IntegerOverflow&) {
        return run<BigInt>(matrix);
    }
}

SnfResult smith_normal_form_bigint(const IntMatrix& matrix) { return run<BigInt>(matrix); }

} // namespace arrtopo

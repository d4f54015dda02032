#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace arrtopo {

/// Subset of [n] = {1,...,n}, n <= 64, stored as a bitmask (index i <-> bit i-1).
class IndexSet {
public:
    static constexpr std::size_t max_index = 64;

    IndexSet() = default;
    IndexSet(std::initializer_list<std::size_t> members)
    {
        for (std::size_t i : members)
            insert(i);
    }

    static IndexSet from_mask(std::uint64_t mask)
    {
        IndexSet s;
        s.mask_ = mask;
        return s;
    }

    /// [n]
    static IndexSet full(std::size_t n)
    {
        check(n == 0 ? 1 : n);
        return from_mask(n == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1));
    }

    void insert(std::size_t i)
    {
        check(i);
        mask_ |= bit(i);
    }
    void erase(std::size_t i)
    {
        check(i);
        mask_ &= ~bit(i);
    }
    bool contains(std::size_t i) const { return i >= 1 && i <= max_index && (mask_ & bit(i)); }

    std::size_t size() const { return static_cast<std::size_t>(std::popcount(mask_)); }
    bool empty() const { return mask_ == 0; }
    std::uint64_t mask() const { return mask_; }

    /// Largest member, 0 when empty.
    std::size_t max() const { return empty() ? 0 : 64 - static_cast<std::size_t>(std::countl_zero(mask_)); }

    bool subset_of(const IndexSet& other) const { return (mask_ & ~other.mask_) == 0; }

    IndexSet operator|(const IndexSet& o) const { return from_mask(mask_ | o.mask_); }
    IndexSet operator&(const IndexSet& o) const { return from_mask(mask_ & o.mask_); }

    /// Members in increasing order.
    std::vector<std::size_t> members() const
    {
        std::vector<std::size_t> out;
        for (std::uint64_t m = mask_; m; m &= m - 1)
            out.push_back(static_cast<std::size_t>(std::countr_zero(m)) + 1);
        return out;
    }

    /// "{1,3}"
    std::string to_string() const
    {
        std::string out = "{";
        bool first = true;
        for (std::size_t i : members()) {
            out += (first ? "" : ",") + std::to_string(i);
            first = false;
        }
        return out + "}";
    }

    friend bool operator==(const IndexSet&, const IndexSet&) = default;

    /// Size first, then lexicographic on the sorted member lists.
    friend std::strong_ordering operator<=>(const IndexSet& a, const IndexSet& b)
    {
        if (auto c = a.size() <=> b.size(); c != 0)
            return c;
        return a.members() <=> b.members();
    }

private:
    static void check(std::size_t i)
    {
        if (i < 1 || i > max_index)
            throw std::out_of_range("index " + std::to_string(i) + " outside [1, 64]");
    }
    static std::uint64_t bit(std::size_t i) { return std::uint64_t{1} << (i - 1); }

    std::uint64_t mask_ = 0;
};

/// Nonempty subsets of `base` with at most `max_size` members, ordered by
/// size then lexicographically.
inline std::vector<IndexSet> subsets_up_to(const IndexSet& base, std::size_t max_size)
{
    const auto members = base.members();
    std::vector<IndexSet> out;
    std::vector<std::size_t> pick;
    // Lexicographic combinations of each size.
    for (std::size_t k = 1; k <= std::min(max_size, members.size()); ++k) {
        pick.resize(k);
        for (std::size_t i = 0; i < k; ++i)
            pick[i] = i;
        while (true) {
            IndexSet s;
            for (std::size_t i : pick)
                s.insert(members[i]);
            out.push_back(s);
            std::size_t i = k;
            while (i > 0 && pick[i - 1] == members.size() - k + i - 1)
                --i;
            if (i == 0)
                break;
            ++pick[i - 1];
            for (std::size_t j = i; j < k; ++j)
                pick[j] = pick[j - 1] + 1;
        }
    }
    return out;
}

} // namespace arrtopo

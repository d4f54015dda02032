#pragma once

#include "arrtopo/arrangement.hpp"
#include "arrtopo/homology.hpp"
#include "arrtopo/index_set.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace arrtopo {

/// Labelled homology of the truncated diagram: H(A_I) for every nonempty
/// I with |I| <= m + 1, plus H(hocolim_m) and H(A^[n]).
struct DiagramSignature {
    std::size_t m = 0;
    std::vector<std::pair<IndexSet, HomologyReport>> intersections; // IndexSet order
    HomologyReport hocolim;
    HomologyReport union_homology;

    /// One line per entry: "m=<m>", "<I>:<homology>", "hocolim:<h>", "union:<h>".
    std::string canonical() const;

    /// FNV-1a 64-bit hash of canonical().
    std::uint64_t hash() const;
    std::string hash_hex() const;

    friend bool operator==(const DiagramSignature&, const DiagramSignature&) = default;
};

DiagramSignature diagram_signature(const Arrangement& arr, std::size_t m);

/// FNV-1a, 64-bit: offset basis 0xcbf29ce484222325, prime 0x100000001b3.
std::uint64_t fnv1a64(std::string_view bytes);

} // namespace arrtopo

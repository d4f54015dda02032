#include "arrtopo/signature.hpp"

#include "arrtopo/hocolim.hpp"

#include <cstdio>

namespace arrtopo {

std::uint64_t fnv1a64(std::string_view bytes)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string DiagramSignature::canonical() const
{
    std::string out = "m=" + std::to_string(m) + "\n";
    for (const auto& [I, h] : intersections)
        out += I.to_string() + ":" + h.to_string() + "\n";
    out += "hocolim:" + hocolim.to_string() + "\n";
    out += "union:" + union_homology.to_string() + "\n";
    return out;
}

std::uint64_t DiagramSignature::hash() const { return fnv1a64(canonical()); }

std::string DiagramSignature::hash_hex() const
{
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash()));
    return buf;
}

DiagramSignature diagram_signature(const Arrangement& arr, std::size_t m)
{
    if (m + 1 > arr.size())
        throw std::invalid_argument("truncation level m = " + std::to_string(m) + " outside [0, n-1]");
    DiagramSignature sig;
    sig.m = m;
    for (const IndexSet& I : subsets_up_to(IndexSet::full(arr.size()), m + 1))
        sig.intersections.emplace_back(I, homology_of_subcomplex(arr.ambient(), sub_intersection(arr, I)));
    sig.hocolim = homology(build_hocolim(arr, m).complex);
    sig.union_homology = homology_of_subcomplex(arr.ambient(), full_union(arr));
    return sig;
}

} // namespace arrtopo

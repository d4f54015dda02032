#pragma once

#include "arrtopo/families.hpp"
#include "arrtopo/rational.hpp"
#include "arrtopo/signature.hpp"

#include <optional>
#include <string>
#include <vector>

namespace arrtopo {

/// One evaluation point: either a critical value (z_lo == z_hi ==
/// representative) or the open interval between neighbours, where an
/// absent bound means unbounded.
struct CensusEntry {
    std::optional<Rational> z_lo;
    std::optional<Rational> z_hi;
    bool is_point = false;
    Rational representative;
    DiagramSignature signature;
    std::string hash;
    std::size_t n_nonempty = 0;
    std::size_t basic_set_components = 0; // sum of b_0 over basic-set pieces (line fibers only)
};

struct SignatureClass {
    std::string hash;
    Rational representative; // first z, in sweep order, showing this signature
    std::size_t occurrences = 0;
    DiagramSignature signature;
};

struct CensusReport {
    std::size_t n = 0;
    std::size_t m = 0;
    bool approximate = false; // grid fibers
    std::vector<Rational> critical_values;
    std::vector<CensusEntry> entries; // sorted by z
    std::vector<SignatureClass> classes;
    bool constancy_ok = true;
    std::vector<std::string> constancy_failures;

    std::size_t distinct_count() const { return classes.size(); }
};

/// Sweeps every critical value and one point inside every open interval
/// between consecutive critical values (plus one beyond each end), taking
/// the diagram signature at m = min(1, n - 1). Each open interval is also
/// sampled at three points to confirm the signature is constant there.
CensusReport census(const SlabFamily& family);

/// Same sweep for box families, with grid fibers at the given resolution
/// and m = min(2, n - 1). Marked approximate.
CensusReport census(const BoxFamily3D& family, std::size_t resolution);

/// Columns: z_lo,z_hi,representative_z,signature_hash,betti_union_0,betti_union_1,n_nonempty_sets.
/// Unbounded interval ends are written as -inf / inf.
std::string census_csv(const CensusReport& report);

} // namespace arrtopo

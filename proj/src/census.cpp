#include "arrtopo/census.hpp"

#include <functional>
#include <map>
#include <sstream>

namespace arrtopo {

namespace {

struct Sample {
    DiagramSignature signature;
    std::size_t n_nonempty = 0;
    std::size_t basic_components = 0;
};

// Three interior points of each open interval; the middle one is the representative.
std::vector<Rational> interval_samples(const std::optional<Rational>& lo, const std::optional<Rational>& hi)
{
    if (lo && hi) {
        const Rational w = *hi - *lo;
        return {*lo + w / 4, *lo + w / 2, *lo + 3 * w / 4};
    }
    if (hi)
        return {*hi - 2, *hi - 1, *hi - 3};
    if (lo)
        return {*lo + 2, *lo + 1, *lo + 3};
    return {Rational(1), Rational(0), Rational(2)};
}

CensusReport sweep(std::size_t n, std::size_t m, const std::vector<Rational>& critical,
                   const std::function<Sample(const Rational&)>& evaluate)
{
    CensusReport report;
    report.n = n;
    report.m = m;
    report.critical_values = critical;

    auto open_interval = [&](std::optional<Rational> lo, std::optional<Rational> hi) {
        const auto zs = interval_samples(lo, hi);
        Sample mid = evaluate(zs[1]);
        for (std::size_t k : {0u, 2u}) {
            if (!(evaluate(zs[k]).signature == mid.signature)) {
                report.constancy_ok = false;
                report.constancy_failures.push_back("signature changes inside the interval around z = " +
                                                    to_canonical(zs[1]) + " (at " + to_canonical(zs[k]) + ")");
            }
        }
        CensusEntry e;
        e.z_lo = std::move(lo);
        e.z_hi = std::move(hi);
        e.representative = zs[1];
        e.n_nonempty = mid.n_nonempty;
        e.basic_set_components = mid.basic_components;
        e.signature = std::move(mid.signature);
        e.hash = e.signature.hash_hex();
        report.entries.push_back(std::move(e));
    };
    auto point = [&](const Rational& z) {
        Sample s = evaluate(z);
        CensusEntry e;
        e.z_lo = z;
        e.z_hi = z;
        e.is_point = true;
        e.representative = z;
        e.n_nonempty = s.n_nonempty;
        e.basic_set_components = s.basic_components;
        e.signature = std::move(s.signature);
        e.hash = e.signature.hash_hex();
        report.entries.push_back(std::move(e));
    };

    if (critical.empty()) {
        open_interval(std::nullopt, std::nullopt);
    } else {
        open_interval(std::nullopt, critical.front());
        for (std::size_t k = 0; k < critical.size(); ++k) {
            point(critical[k]);
            if (k + 1 < critical.size())
                open_interval(critical[k], critical[k + 1]);
        }
        open_interval(critical.back(), std::nullopt);
    }

    std::map<std::string, std::size_t> class_of; // canonical text -> index in classes
    for (const auto& e : report.entries) {
        const std::string key = e.signature.canonical();
        auto it = class_of.find(key);
        if (it == class_of.end()) {
            class_of.emplace(key, report.classes.size());
            report.classes.push_back(SignatureClass{e.hash, e.representative, 1, e.signature});
        } else {
            ++report.classes[it->second].occurrences;
        }
    }
    return report;
}

} // namespace

CensusReport census(const SlabFamily& family)
{
    family.validate();
    const std::size_t n = family.size();
    const std::size_t m = std::min<std::size_t>(1, n - 1);
    auto evaluate = [&](const Rational& z) {
        const FiberArrangement fiber = fiber_at(family, z);
        Sample s;
        s.signature = diagram_signature(fiber_to_arrangement(fiber), m);
        s.n_nonempty = fiber.nonempty_count();
        s.basic_components = basic_sets(fiber_to_arrangement(fiber, /*pad_ends=*/true)).total_components;
        return s;
    };
    return sweep(n, m, critical_values(family), evaluate);
}

CensusReport census(const BoxFamily3D& family, std::size_t resolution)
{
    family.validate();
    const std::size_t n = family.size();
    const std::size_t m = std::min<std::size_t>(2, n - 1);
    auto evaluate = [&](const Rational& z) {
        Sample s;
        s.signature = diagram_signature(grid_fiber(family, z, resolution), m);
        for (const auto& b : family.boxes)
            if (z >= b.z_lo && z <= b.z_hi)
                ++s.n_nonempty;
        return s;
    };
    CensusReport report = sweep(n, m, box_critical_values(family), evaluate);
    report.approximate = true;
    return report;
}

std::string census_csv(const CensusReport& report)
{
    std::ostringstream os;
    os << "z_lo,z_hi,representative_z,signature_hash,betti_union_0,betti_union_1,n_nonempty_sets\n";
    for (const auto& e : report.entries) {
        os << (e.z_lo ? to_canonical(*e.z_lo) : "-inf") << ',' << (e.z_hi ? to_canonical(*e.z_hi) : "inf") << ','
           << to_canonical(e.representative) << ',' << e.hash << ',' << e.signature.union_homology.betti_at(0) << ','
           << e.signature.union_homology.betti_at(1) << ',' << e.n_nonempty << '\n';
    }
    return os.str();
}

} // namespace arrtopo

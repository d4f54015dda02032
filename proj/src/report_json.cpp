#include "arrtopo/report_json.hpp"

namespace arrtopo {

namespace {

Json factor_json(const BigInt& f)
{
    if (f <= BigInt(std::numeric_limits<std::int64_t>::max()))
        return f.convert_to<std::int64_t>();
    return f.str();
}

} // namespace

Json to_json(const HomologyReport& h)
{
    Json out;
    out["betti"] = h.betti;
    out["torsion"] = Json::array();
    for (const auto& factors : h.torsion) {
        Json deg = Json::array();
        for (const auto& f : factors)
            deg.push_back(factor_json(f));
        out["torsion"].push_back(std::move(deg));
    }
    return out;
}

Json to_json(const ComparisonReport& r)
{
    Json out;
    out["check"] = r.check;
    out["pass"] = r.pass;
    out["lhs"] = to_json(r.lhs);
    out["rhs"] = to_json(r.rhs);
    out["per_degree"] = Json::array();
    for (const auto& d : r.per_degree())
        out["per_degree"].push_back({{"degree", d.degree},
                                     {"lhs_betti", r.lhs.betti_at(d.degree)},
                                     {"rhs_betti", r.rhs.betti_at(d.degree)},
                                     {"equal", d.equal}});
    if (r.relative)
        out["relative"] = to_json(*r.relative);
    if (!r.detail.empty())
        out["detail"] = r.detail;
    return out;
}

Json to_json(const DiagramSignature& s)
{
    Json out;
    out["m"] = s.m;
    out["intersections"] = Json::array();
    for (const auto& [I, h] : s.intersections)
        out["intersections"].push_back({{"index_set", I.members()}, {"homology", to_json(h)}});
    out["hocolim"] = to_json(s.hocolim);
    out["union"] = to_json(s.union_homology);
    out["hash"] = s.hash_hex();
    return out;
}

Json to_json(const CensusReport& r)
{
    Json out;
    out["n"] = r.n;
    out["m"] = r.m;
    out["approximate"] = r.approximate;
    out["critical_values"] = Json::array();
    for (const auto& z : r.critical_values)
        out["critical_values"].push_back(to_canonical(z));
    out["entries"] = Json::array();
    for (const auto& e : r.entries) {
        Json j;
        j["z_lo"] = e.z_lo ? to_canonical(*e.z_lo) : "-inf";
        j["z_hi"] = e.z_hi ? to_canonical(*e.z_hi) : "inf";
        j["representative_z"] = to_canonical(e.representative);
        j["signature_hash"] = e.hash;
        j["union"] = to_json(e.signature.union_homology);
        j["hocolim"] = to_json(e.signature.hocolim);
        j["n_nonempty_sets"] = e.n_nonempty;
        if (!r.approximate)
            j["basic_set_components"] = e.basic_set_components;
        out["entries"].push_back(std::move(j));
    }
    out["classes"] = Json::array();
    for (const auto& c : r.classes)
        out["classes"].push_back({{"signature_hash", c.hash},
                                  {"representative_z", to_canonical(c.representative)},
                                  {"occurrences", c.occurrences},
                                  {"signature", to_json(c.signature)}});
    out["distinct_count"] = r.distinct_count();
    out["constancy_ok"] = r.constancy_ok;
    out["constancy_failures"] = r.constancy_failures;
    return out;
}

Json to_json(const GrowthFit& g)
{
    Json out;
    out["points"] = Json::array();
    for (const auto& [n, c] : g.points)
        out["points"].push_back({{"n", n}, {"count", c}});
    out["slope"] = g.slope;
    out["intercept"] = g.intercept;
    out["residuals"] = g.residuals;
    out["warnings"] = g.warnings;
    return out;
}

} // namespace arrtopo

#include "cli.hpp"

#include "arrtopo/arrangement_io.hpp"
#include "arrtopo/boolean_formula.hpp"
#include "arrtopo/census.hpp"
#include "arrtopo/comparison.hpp"
#include "arrtopo/errors.hpp"
#include "arrtopo/fixtures.hpp"
#include "arrtopo/growth.hpp"
#include "arrtopo/hocolim.hpp"
#include "arrtopo/homology.hpp"
#include "arrtopo/report_json.hpp"
#include "arrtopo/thickening.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>

namespace arrtopo::cli {

namespace {

struct RunConfig {
    std::string subcommand;
    std::string input;
    long long m = -1; // -1: not given
    std::uint64_t seed = 1;
    long long trials = -1; // -1: subcommand default
    std::size_t grid_res = 8;
    std::vector<std::size_t> sweep_n;
    long long n = -1; // thicken-check only
    std::string out;
    std::string format = "json";
};

constexpr std::size_t kDefaultVerifyTrials = 50;
constexpr std::size_t kDefaultSweepSeeds = 10;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Json config_json(const RunConfig& cfg)
{
    auto opt = [](long long v) { return v < 0 ? Json(nullptr) : Json(v); };
    Json j;
    j["subcommand"] = cfg.subcommand;
    j["input"] = cfg.input.empty() ? Json(nullptr) : Json(cfg.input);
    j["m"] = opt(cfg.m);
    j["seed"] = cfg.seed;
    j["trials"] = opt(cfg.trials);
    j["grid_res"] = cfg.grid_res;
    j["sweep_n"] = cfg.sweep_n;
    j["n"] = opt(cfg.n);
    j["out"] = cfg.out.empty() ? Json(nullptr) : Json(cfg.out);
    j["format"] = cfg.format;
    return j;
}

Json report_header(const RunConfig& cfg)
{
    Json j;
    j["tool"] = kToolName;
    j["version"] = kToolVersion;
    j["config"] = config_json(cfg);
    return j;
}

void emit(const RunConfig& cfg, const std::string& text, std::ostream& out)
{
    if (cfg.out.empty()) {
        out << text;
        return;
    }
    std::ofstream file(cfg.out, std::ios::binary);
    if (!file)
        throw InputError("cannot write " + cfg.out);
    file << text;
    if (!file)
        throw InputError("write failed: " + cfg.out);
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

// Loaded --input for the complex-level subcommands.
struct LoadedInput {
    std::string format;
    std::optional<Arrangement> arrangement;
    std::optional<CellDocument> cells;
};

LoadedInput load_complex_input(const std::string& path)
{
    if (path.empty())
        throw UsageError("--input is required");
    const std::string text = read_file(path);
    LoadedInput in;
    in.format = document_format(text);
    if (in.format == "arr-v1")
        in.arrangement = load_arrangement(text);
    else if (in.format == "cell-v1")
        in.cells = load_cell_document(text);
    else
        throw InputError(path + ": expected format arr-v1 or cell-v1, got \"" + in.format + "\"");
    return in;
}

Arrangement arrangement_from_cells(const CellDocument& doc)
{
    std::vector<CellSet> members;
    std::vector<std::string> names;
    for (const auto& [name, cells] : doc.sets) {
        names.push_back(name);
        members.push_back(cells);
    }
    if (members.empty())
        throw InputError("cell-v1 document has no sets");
    try {
        return Arrangement(doc.complex, std::move(members), std::move(names));
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
}

Json violations_json(const ValidationReport& report)
{
    Json list = Json::array();
    for (const auto& v : report.violations)
        list.push_back({{"cell", v.cell}, {"message", v.message}});
    return list;
}

std::size_t resolve_m(const RunConfig& cfg, std::size_t n)
{
    if (cfg.m < 0)
        return n - 1;
    if (static_cast<std::size_t>(cfg.m) > n - 1)
        throw UsageError("--m must be at most n-1 = " + std::to_string(n - 1));
    return static_cast<std::size_t>(cfg.m);
}

// ---------------------------------------------------------------- homology

int run_homology(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    const LoadedInput in = load_complex_input(cfg.input);
    Json report = report_header(cfg);
    if (in.cells) {
        const ValidationReport v = validate_complex(in.cells->complex);
        if (!v.ok()) {
            report["pass"] = false;
            report["violations"] = violations_json(v);
            emit(cfg, dump(report), out);
            err << "invalid complex: " << v.summary() << "\n";
            return exit_violation;
        }
    }
    const Arrangement arr = in.arrangement ? *in.arrangement : arrangement_from_cells(*in.cells);
    report["pass"] = true;
    report["ambient"] = to_json(homology(arr.ambient()));
    Json sets = Json::array();
    for (std::size_t i = 1; i <= arr.size(); ++i)
        sets.push_back({{"name", arr.name(i)},
                        {"homology", to_json(homology_of_subcomplex(arr.ambient(), arr.member(i)))}});
    report["sets"] = std::move(sets);
    report["union"] = to_json(homology_of_subcomplex(arr.ambient(), full_union(arr)));
    emit(cfg, dump(report), out);
    return exit_pass;
}

// ---------------------------------------------------------------- hocolim

int run_hocolim(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    const LoadedInput in = load_complex_input(cfg.input);
    if (in.cells) {
        const ValidationReport v = validate_complex(in.cells->complex);
        if (!v.ok()) {
            Json report = report_header(cfg);
            report["pass"] = false;
            report["violations"] = violations_json(v);
            emit(cfg, dump(report), out);
            err << "invalid complex: " << v.summary() << "\n";
            return exit_violation;
        }
    }
    const Arrangement arr = in.arrangement ? *in.arrangement : arrangement_from_cells(*in.cells);
    const std::size_t m = resolve_m(cfg, arr.size());

    const HocolimComplex h = build_hocolim(arr, m);
    const ValidationReport v = validate_complex(h.complex);
    std::vector<ComparisonReport> checks{compare_hocolim_oracles(arr, m), union_comparison(arr),
                                         truncation_comparison(arr, m)};
    bool pass = v.ok();
    for (const auto& c : checks)
        pass = pass && c.pass;

    Json report = report_header(cfg);
    report["pass"] = pass;
    report["n"] = arr.size();
    report["m"] = m;
    report["cell_counts"] = h.complex.cell_counts();
    report["violations"] = violations_json(v);
    report["homology"] = v.ok() ? to_json(homology(h.complex)) : Json(nullptr);
    report["nerve"] = to_json(homology(nerve(arr).to_cell_complex()));
    Json list = Json::array();
    for (const auto& c : checks)
        list.push_back(to_json(c));
    report["checks"] = std::move(list);
    emit(cfg, dump(report), out);
    if (!pass)
        err << "hocolim: property violation\n";
    return pass ? exit_pass : exit_violation;
}

// ---------------------------------------------------------------- verify

class VerifyLog {
public:
    void add(const std::string& instance, std::optional<std::uint64_t> seed, const ComparisonReport& r)
    {
        Json j = to_json(r);
        push(instance, seed, std::move(j), r.pass);
    }
    void add(const std::string& instance, std::optional<std::uint64_t> seed, const std::string& check,
             bool pass, const std::string& detail)
    {
        Json j;
        j["check"] = check;
        j["pass"] = pass;
        j["detail"] = detail;
        push(instance, seed, std::move(j), pass);
    }

    std::size_t checks() const { return checks_; }
    const Json& results() const { return results_; }
    const Json& failures() const { return failures_; }

private:
    void push(const std::string& instance, std::optional<std::uint64_t> seed, Json body, bool pass)
    {
        Json j;
        j["instance"] = instance;
        j["seed"] = seed ? Json(*seed) : Json(nullptr);
        for (auto& [k, v] : body.items())
            j[k] = v;
        ++checks_;
        if (!pass)
            failures_.push_back({{"instance", instance}, {"seed", j["seed"]}, {"check", j["check"]}});
        results_.push_back(std::move(j));
    }

    std::size_t checks_ = 0;
    Json results_ = Json::array();
    Json failures_ = Json::array();
};

void verify_arrangement(const Arrangement& arr, const std::string& label, std::optional<std::uint64_t> seed,
                        std::mt19937_64* formula_rng, VerifyLog& log)
{
    const ValidationReport amb = validate_complex(arr.ambient());
    log.add(label, seed, "validate_ambient", amb.ok(), amb.ok() ? "" : amb.summary());
    if (!amb.ok())
        return;
    for (std::size_t m = 0; m < arr.size(); ++m) {
        const ValidationReport hv = validate_complex(build_hocolim(arr, m).complex);
        log.add(label, seed, "validate_hocolim_m" + std::to_string(m), hv.ok(), hv.ok() ? "" : hv.summary());
        if (!hv.ok())
            continue;
        log.add(label, seed, compare_hocolim_oracles(arr, m));
        log.add(label, seed, truncation_comparison(arr, m));
    }
    log.add(label, seed, union_comparison(arr));
    if (arr.simplicial() && formula_rng) {
        const BooleanFormula theta = random_formula(*formula_rng, arr.size(), 3);
        ComparisonReport r = verify_comparison_corollary(arr, theta);
        r.detail = "theta = " + theta.to_string() + (r.detail.empty() ? "" : "; " + r.detail);
        log.add(label, seed, r);
    }
}

Arrangement corpus_instance(std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    RandomArrangementParams p;
    p.vertex_count = 3 + rng() % 5; // 3..7
    p.n = 1 + rng() % 4;            // 1..4
    p.ambient_density = 0.6;
    p.set_density = 0.5;
    return random_arrangement(seed, p);
}

void verify_builtin_fixtures(VerifyLog& log)
{
    std::mt19937_64 rng(0);
    verify_arrangement(fixtures::three_arc_circle(), "three_arc_circle", std::nullopt, &rng, log);
    verify_arrangement(fixtures::all_equal_circle(), "all_equal_circle", std::nullopt, &rng, log);

    const HomologyReport torus = homology(build_hocolim(fixtures::all_equal_circle(), 1).complex);
    log.add("all_equal_circle", std::nullopt, "hocolim_1_is_torus", torus == make_homology({1, 2, 1}),
            "H(hocolim_1) = " + torus.to_string());

    const HomologyReport rp2 = homology(fixtures::projective_plane().to_cell_complex());
    log.add("projective_plane", std::nullopt, "torsion_h1",
            rp2 == make_homology({1, 0, 0}, {{}, {BigInt(2)}, {}}), "H = " + rp2.to_string());

    for (std::size_t n = 1; n <= 5; ++n)
        for (std::size_t m = 0; m < n; ++m)
            log.add("thickened_n" + std::to_string(n) + "_m" + std::to_string(m), std::nullopt,
                    thickened_model_check(n, m));
}

int run_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    const std::size_t trials = cfg.trials < 0 ? kDefaultVerifyTrials : static_cast<std::size_t>(cfg.trials);
    VerifyLog log;
    if (!cfg.input.empty()) {
        const LoadedInput in = load_complex_input(cfg.input);
        if (in.cells) {
            const ValidationReport v = validate_complex(in.cells->complex);
            log.add(cfg.input, std::nullopt, "validate_ambient", v.ok(), v.ok() ? "" : v.summary());
            if (v.ok()) {
                const Arrangement arr = arrangement_from_cells(*in.cells);
                verify_arrangement(arr, cfg.input, std::nullopt, nullptr, log);
            }
        } else {
            std::mt19937_64 rng(cfg.seed);
            verify_arrangement(*in.arrangement, cfg.input, std::nullopt, &rng, log);
        }
    } else {
        verify_builtin_fixtures(log);
        for (std::size_t t = 0; t < trials; ++t) {
            const std::uint64_t s = cfg.seed + t;
            std::mt19937_64 rng(s ^ 0x9e3779b97f4a7c15ULL);
            verify_arrangement(corpus_instance(s), "random", s, &rng, log);
        }
    }

    const bool pass = log.failures().empty();
    Json report = report_header(cfg);
    report["config"]["trials"] = cfg.input.empty() ? Json(trials) : Json(nullptr);
    report["pass"] = pass;
    report["checks"] = log.checks();
    report["failures"] = log.failures();
    report["results"] = log.results();
    emit(cfg, dump(report), out);
    for (const auto& f : log.failures()) {
        err << "FAIL " << f["check"].get<std::string>() << " on " << f["instance"].get<std::string>();
        if (!f["seed"].is_null())
            err << " (seed " << f["seed"].get<std::uint64_t>() << ")";
        err << "\n";
    }
    for (const auto& r : log.results())
        if (!r["pass"].get<bool>() && r.contains("detail") && !r["detail"].get<std::string>().empty())
            err << "  " << r["detail"].get<std::string>() << "\n";
    return pass ? exit_pass : exit_violation;
}

// ---------------------------------------------------------------- census

std::string growth_csv(const GrowthFit& fit)
{
    std::ostringstream os;
    os << "n,distinct_count\n";
    for (const auto& [n, c] : fit.points)
        os << n << "," << c << "\n";
    os << "slope,intercept\n" << fit.slope << "," << fit.intercept << "\n";
    return os.str();
}

int run_census(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    if (cfg.input.empty() && cfg.sweep_n.empty())
        throw UsageError("census needs --input, --sweep-n, or both");
    for (std::size_t n : cfg.sweep_n)
        if (n == 0)
            throw UsageError("--sweep-n values must be positive");

    std::optional<CensusReport> report;
    if (!cfg.input.empty()) {
        const std::string text = read_file(cfg.input);
        const std::string format = document_format(text);
        if (format == "slab-v1")
            report = census(load_slab_family(text));
        else if (format == "box-v1")
            report = census(load_box_family(text), cfg.grid_res);
        else
            throw InputError(cfg.input + ": expected format slab-v1 or box-v1, got \"" + format + "\"");
    }

    bool constancy_ok = !report || report->constancy_ok;
    std::vector<std::string> sweep_failures;
    std::optional<GrowthFit> fit;
    const std::size_t seeds = cfg.trials < 0 ? kDefaultSweepSeeds : static_cast<std::size_t>(cfg.trials);
    if (!cfg.sweep_n.empty()) {
        std::vector<std::pair<std::size_t, std::size_t>> runs;
        for (std::size_t n : cfg.sweep_n)
            for (std::size_t s = 0; s < seeds; ++s) {
                const std::uint64_t seed = cfg.seed + s;
                const CensusReport r = census(random_slab_family(seed, n));
                runs.emplace_back(n, r.distinct_count());
                if (!r.constancy_ok) {
                    constancy_ok = false;
                    sweep_failures.push_back("n=" + std::to_string(n) + " seed=" + std::to_string(seed));
                }
            }
        try {
            fit = growth_fit(runs);
        } catch (const std::invalid_argument& e) {
            throw UsageError(std::string("--sweep-n: ") + e.what());
        }
    }

    if (cfg.format == "csv") {
        std::string text;
        if (report)
            text += census_csv(*report);
        if (fit)
            text += (text.empty() ? "" : "\n") + growth_csv(*fit);
        emit(cfg, text, out);
    } else {
        Json j = report_header(cfg);
        j["config"]["trials"] = cfg.sweep_n.empty() ? Json(nullptr) : Json(seeds);
        j["pass"] = constancy_ok;
        j["census"] = report ? to_json(*report) : Json(nullptr);
        if (fit) {
            j["growth_fit"] = to_json(*fit);
            j["sweep_constancy_failures"] = sweep_failures;
        }
        emit(cfg, dump(j), out);
    }

    std::ostream& summary = cfg.out.empty() ? err : out;
    if (report)
        summary << "distinct signatures: " << report->distinct_count() << "\n";
    if (fit)
        summary << "growth slope: " << fit->slope << "\n";
    if (!constancy_ok) {
        if (report)
            for (const auto& f : report->constancy_failures)
                err << "constancy: " << f << "\n";
        for (const auto& f : sweep_failures)
            err << "constancy failed in sweep family " << f << "\n";
    }
    return constancy_ok ? exit_pass : exit_violation;
}

// ---------------------------------------------------------------- thicken-check

int run_thicken_check(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    if (cfg.n == 0 || cfg.n > 8)
        throw UsageError("--n must be in [1, 8]");
    std::vector<std::size_t> ns;
    if (cfg.n < 0) {
        for (std::size_t n = 1; n <= 7; ++n)
            ns.push_back(n);
    } else {
        ns.push_back(static_cast<std::size_t>(cfg.n));
    }
    if (cfg.m >= 0 && cfg.n < 0)
        throw UsageError("--m needs --n");

    bool pass = true;
    Json results = Json::array();
    for (std::size_t n : ns) {
        std::vector<std::size_t> ms;
        if (cfg.m >= 0)
            ms.push_back(resolve_m(cfg, n));
        else
            for (std::size_t m = 0; m < n; ++m)
                ms.push_back(m);
        for (std::size_t m : ms) {
            const ComparisonReport r = thickened_model_check(n, m);
            Json j;
            j["n"] = n;
            j["m"] = m;
            const Json body = to_json(r);
            for (const auto& [k, v] : body.items())
                j[k] = v;
            results.push_back(std::move(j));
            if (!r.pass) {
                pass = false;
                err << "FAIL thickened model n=" << n << " m=" << m << ": " << r.lhs.to_string() << " vs "
                    << r.rhs.to_string() << "\n";
            }
        }
    }
    Json report = report_header(cfg);
    report["pass"] = pass;
    report["results"] = std::move(results);
    emit(cfg, dump(report), out);
    return pass ? exit_pass : exit_violation;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    RunConfig cfg;
    CLI::App app{"Homotopy colimits of arrangements: homology checks and fiber census", kToolName};
    app.set_version_flag("--version", std::string(kToolName) + " " + kToolVersion);
    app.require_subcommand(1);

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--out", cfg.out, "Write the report here instead of stdout");
        sub->add_option("--format", cfg.format, "Report format")
            ->check(CLI::IsMember({"json", "csv"}))
            ->default_str("json");
    };

    CLI::App* hom = app.add_subcommand("homology", "Homology of an arrangement's ambient complex, sets and union");
    hom->add_option("--input", cfg.input, "arr-v1 or cell-v1 file")->required();
    add_common(hom);

    CLI::App* hoc = app.add_subcommand("hocolim", "Build hocolim_m and run the comparison checks");
    hoc->add_option("--input", cfg.input, "arr-v1 or cell-v1 file")->required();
    hoc->add_option("--m", cfg.m, "Truncation level (default n-1)")->check(CLI::NonNegativeNumber);
    add_common(hoc);

    CLI::App* ver = app.add_subcommand("verify", "Run the property suite on fixtures and a seeded corpus");
    ver->add_option("--input", cfg.input, "Check this arr-v1 or cell-v1 file instead of the built-in corpus");
    ver->add_option("--seed", cfg.seed, "First corpus seed")->default_str("1");
    ver->add_option("--trials", cfg.trials, "Random corpus size (default 50)")->check(CLI::NonNegativeNumber);
    add_common(ver);

    CLI::App* cen = app.add_subcommand("census", "Signature census of a slab-v1 or box-v1 family");
    cen->add_option("--input", cfg.input, "slab-v1 or box-v1 file");
    cen->add_option("--grid-res", cfg.grid_res, "Grid resolution for box families")
        ->check(CLI::PositiveNumber)
        ->default_str("8");
    cen->add_option("--sweep-n", cfg.sweep_n, "Comma-separated n values for a growth sweep")->delimiter(',');
    cen->add_option("--seed", cfg.seed, "First sweep seed")->default_str("1");
    cen->add_option("--trials", cfg.trials, "Seeds per n in the sweep (default 10)")->check(CLI::PositiveNumber);
    add_common(cen);

    CLI::App* thk = app.add_subcommand("thicken-check", "Thickened skeleton model against sk_m of the simplex");
    thk->add_option("--n", cfg.n, "Simplex vertex count (default: every n in 1..7)")->check(CLI::PositiveNumber);
    thk->add_option("--m", cfg.m, "Skeleton dimension (default: every m < n)")->check(CLI::NonNegativeNumber);
    add_common(thk);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_pass : exit_usage;
    }

    for (CLI::App* sub : {hom, hoc, ver, cen, thk})
        if (sub->parsed())
            cfg.subcommand = sub->get_name();

    try {
        if (cfg.format == "csv" && cfg.subcommand != "census")
            throw UsageError("--format csv is only available for census");
        if (cfg.subcommand == "homology")
            return run_homology(cfg, out, err);
        if (cfg.subcommand == "hocolim")
            return run_hocolim(cfg, out, err);
        if (cfg.subcommand == "verify")
            return run_verify(cfg, out, err);
        if (cfg.subcommand == "census")
            return run_census(cfg, out, err);
        return run_thicken_check(cfg, out, err);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return exit_usage;
    } catch (const InputError& e) {
        err << "input error: " << e.what() << "\n";
        return exit_usage;
    } catch (const FormulaError& e) {
        err << "input error: " << e.what() << "\n";
        return exit_usage;
    }
}

} // namespace arrtopo::cli

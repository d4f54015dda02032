#include "arrtopo/families.hpp"

#include <json.hpp>

#include <algorithm>
#include <random>

namespace arrtopo {

using ojson = nlohmann::ordered_json;

void SlabFamily::validate() const
{
    if (slabs.empty())
        throw InputError("slab family is empty");
    for (std::size_t i = 0; i < slabs.size(); ++i)
        if (slabs[i].e > slabs[i].f)
            throw InputError("slab " + std::to_string(i) + ": e > f");
}

std::size_t FiberArrangement::nonempty_count() const
{
    return static_cast<std::size_t>(
        std::count_if(intervals.begin(), intervals.end(), [](const auto& iv) { return iv.has_value(); }));
}

namespace {

struct Line {
    Rational slope, offset;
};

void add_crossing(std::vector<Rational>& out, const Line& p, const Line& q, const Rational& lo, const Rational& hi)
{
    if (p.slope == q.slope)
        return; // parallel or identical: no isolated crossing
    const Rational z = (q.offset - p.offset) / (p.slope - q.slope);
    if (z >= lo && z <= hi)
        out.push_back(z);
}

} // namespace

std::vector<Rational> critical_values(const SlabFamily& family)
{
    family.validate();
    std::vector<Rational> out;
    const auto& s = family.slabs;
    for (const auto& slab : s) {
        out.push_back(slab.e);
        out.push_back(slab.f);
        add_crossing(out, {slab.a, slab.b}, {slab.c, slab.d}, slab.e, slab.f);
    }
    for (std::size_t i = 0; i < s.size(); ++i) {
        for (std::size_t j = i + 1; j < s.size(); ++j) {
            const Rational lo = std::max(s[i].e, s[j].e);
            const Rational hi = std::min(s[i].f, s[j].f);
            if (lo > hi)
                continue;
            const Line li{s[i].a, s[i].b}, ri{s[i].c, s[i].d};
            const Line lj{s[j].a, s[j].b}, rj{s[j].c, s[j].d};
            add_crossing(out, li, lj, lo, hi);
            add_crossing(out, li, rj, lo, hi);
            add_crossing(out, ri, lj, lo, hi);
            add_crossing(out, ri, rj, lo, hi);
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

FiberArrangement fiber_at(const SlabFamily& family, const Rational& z)
{
    FiberArrangement fiber;
    fiber.z = z;
    for (const auto& slab : family.slabs) {
        if (z < slab.e || z > slab.f) {
            fiber.intervals.emplace_back();
            continue;
        }
        Rational lo = slab.left(z);
        Rational hi = slab.right(z);
        if (lo > hi)
            fiber.intervals.emplace_back();
        else
            fiber.intervals.push_back(Interval{std::move(lo), std::move(hi)});
    }
    return fiber;
}

Arrangement fiber_to_arrangement(const FiberArrangement& fiber, bool pad_ends)
{
    std::vector<Rational> points;
    for (const auto& iv : fiber.intervals) {
        if (!iv)
            continue;
        points.push_back(iv->lo);
        points.push_back(iv->hi);
    }
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    if (pad_ends) {
        if (points.empty()) {
            points.push_back(Rational(0));
        } else {
            points.insert(points.begin(), points.front() - 1);
            points.push_back(points.back() + 1);
        }
    }
    auto vertex_of = [&](const Rational& x) {
        return static_cast<std::size_t>(std::lower_bound(points.begin(), points.end(), x) - points.begin());
    };
    std::vector<std::optional<std::pair<std::size_t, std::size_t>>> ranges;
    for (const auto& iv : fiber.intervals) {
        if (iv)
            ranges.emplace_back(std::make_pair(vertex_of(iv->lo), vertex_of(iv->hi)));
        else
            ranges.emplace_back();
    }
    return path_arrangement(points.size(), ranges);
}

namespace {

ojson parse_doc(std::string_view text, const char* format)
{
    ojson doc;
    try {
        doc = ojson::parse(text.begin(), text.end());
    } catch (const ojson::parse_error& e) {
        throw InputError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("format") || doc["format"] != format)
        throw InputError(std::string("$.format: expected \"") + format + "\"");
    return doc;
}

Rational rational_field(const ojson& obj, const char* key, const std::string& path)
{
    if (!obj.is_object() || !obj.contains(key))
        throw InputError(path + ": missing field \"" + key + "\"");
    const auto& v = obj[key];
    if (v.is_string()) {
        try {
            return parse_rational(v.get<std::string>());
        } catch (const InputError& e) {
            throw InputError(path + "." + key + ": " + e.what());
        }
    }
    if (v.is_number_integer())
        return Rational(v.get<long long>());
    throw InputError(path + "." + key + ": expected a \"p/q\" string");
}

std::pair<Rational, Rational> rational_pair(const ojson& obj, const char* key, const std::string& path)
{
    if (!obj.is_object() || !obj.contains(key) || !obj[key].is_array() || obj[key].size() != 2)
        throw InputError(path + "." + key + ": expected [\"p/q\", \"p/q\"]");
    ojson wrapped = {{"lo", obj[key][0]}, {"hi", obj[key][1]}};
    return {rational_field(wrapped, "lo", path + "." + key), rational_field(wrapped, "hi", path + "." + key)};
}

} // namespace

SlabFamily load_slab_family(std::string_view text)
{
    const ojson doc = parse_doc(text, "slab-v1");
    if (!doc.contains("slabs") || !doc["slabs"].is_array())
        throw InputError("$.slabs: expected an array");
    SlabFamily fam;
    const auto& slabs = doc["slabs"];
    for (std::size_t i = 0; i < slabs.size(); ++i) {
        const std::string p = "$.slabs[" + std::to_string(i) + "]";
        fam.slabs.push_back(Slab{rational_field(slabs[i], "a", p), rational_field(slabs[i], "b", p),
                                 rational_field(slabs[i], "c", p), rational_field(slabs[i], "d", p),
                                 rational_field(slabs[i], "e", p), rational_field(slabs[i], "f", p)});
    }
    fam.validate();
    return fam;
}

std::string serialize_slab_family(const SlabFamily& family)
{
    ojson doc;
    doc["format"] = "slab-v1";
    doc["slabs"] = ojson::array();
    for (const auto& s : family.slabs) {
        ojson o;
        o["a"] = to_canonical(s.a);
        o["b"] = to_canonical(s.b);
        o["c"] = to_canonical(s.c);
        o["d"] = to_canonical(s.d);
        o["e"] = to_canonical(s.e);
        o["f"] = to_canonical(s.f);
        doc["slabs"].push_back(std::move(o));
    }
    return doc.dump(2) + "\n";
}

SlabFamily random_slab_family(std::uint64_t seed, std::size_t n)
{
    if (n < 1 || n > 64)
        throw std::invalid_argument("n must lie in [1, 64]");
    std::mt19937_64 rng(seed);
    auto pick = [&](long lo, long hi) { return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1)); };
    SlabFamily fam;
    for (std::size_t i = 0; i < n; ++i) {
        Slab s;
        s.a = Rational(pick(-2, 2), 2);
        s.b = Rational(pick(-4, 4));
        s.c = s.a + Rational(pick(-1, 1), 2);
        s.d = s.b + Rational(pick(0, 4));
        s.e = Rational(pick(-4, 4));
        s.f = s.e + Rational(pick(0, 6));
        fam.slabs.push_back(std::move(s));
    }
    return fam;
}

void BoxFamily3D::validate() const
{
    if (boxes.empty())
        throw InputError("box family is empty");
    for (std::size_t i = 0; i < boxes.size(); ++i) {
        const auto& b = boxes[i];
        if (b.x_lo > b.x_hi || b.y_lo > b.y_hi || b.z_lo > b.z_hi)
            throw InputError("box " + std::to_string(i) + ": lower bound exceeds upper bound");
    }
}

BoxFamily3D load_box_family(std::string_view text)
{
    const ojson doc = parse_doc(text, "box-v1");
    if (!doc.contains("boxes") || !doc["boxes"].is_array())
        throw InputError("$.boxes: expected an array");
    BoxFamily3D fam;
    const auto& boxes = doc["boxes"];
    for (std::size_t i = 0; i < boxes.size(); ++i) {
        const std::string p = "$.boxes[" + std::to_string(i) + "]";
        auto [xl, xh] = rational_pair(boxes[i], "x", p);
        auto [yl, yh] = rational_pair(boxes[i], "y", p);
        auto [zl, zh] = rational_pair(boxes[i], "z", p);
        fam.boxes.push_back(Box{xl, xh, yl, yh, zl, zh});
    }
    fam.validate();
    return fam;
}

std::string serialize_box_family(const BoxFamily3D& family)
{
    ojson doc;
    doc["format"] = "box-v1";
    doc["boxes"] = ojson::array();
    for (const auto& b : family.boxes) {
        ojson o;
        o["x"] = {to_canonical(b.x_lo), to_canonical(b.x_hi)};
        o["y"] = {to_canonical(b.y_lo), to_canonical(b.y_hi)};
        o["z"] = {to_canonical(b.z_lo), to_canonical(b.z_hi)};
        doc["boxes"].push_back(std::move(o));
    }
    return doc.dump(2) + "\n";
}

std::vector<Rational> box_critical_values(const BoxFamily3D& family)
{
    std::vector<Rational> out;
    for (const auto& b : family.boxes) {
        out.push_back(b.z_lo);
        out.push_back(b.z_hi);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Arrangement grid_fiber(const BoxFamily3D& family, const Rational& z, std::size_t resolution)
{
    if (resolution == 0)
        throw std::invalid_argument("grid resolution must be at least 1");
    family.validate();
    Rational x0 = family.boxes.front().x_lo, x1 = family.boxes.front().x_hi;
    Rational y0 = family.boxes.front().y_lo, y1 = family.boxes.front().y_hi;
    for (const auto& b : family.boxes) {
        x0 = std::min(x0, b.x_lo);
        x1 = std::max(x1, b.x_hi);
        y0 = std::min(y0, b.y_lo);
        y1 = std::max(y1, b.y_hi);
    }
    if (x0 == x1 || y0 == y1)
        throw std::invalid_argument("degenerate bounding box");

    const std::size_t r = resolution;
    const std::size_t n_vert = (r + 1) * (r + 1);
    const std::size_t n_hor = r * (r + 1);
    auto vertex = [&](std::size_t i, std::size_t j) { return j * (r + 1) + i; };
    auto hedge = [&](std::size_t i, std::size_t j) { return n_vert + j * r + i; };           // (i,j)-(i+1,j)
    auto vedge = [&](std::size_t i, std::size_t j) { return n_vert + n_hor + j * (r + 1) + i; }; // (i,j)-(i,j+1)
    auto square = [&](std::size_t i, std::size_t j) { return n_vert + 2 * n_hor + j * r + i; };

    std::vector<Cell> cells(n_vert + 2 * n_hor + r * r);
    for (std::size_t j = 0; j <= r; ++j)
        for (std::size_t i = 0; i < r; ++i) {
            cells[hedge(i, j)] = Cell{1, {{vertex(i, j), -1}, {vertex(i + 1, j), 1}}, 0};
            cells[vedge(j, i)] = Cell{1, {{vertex(j, i), -1}, {vertex(j, i + 1), 1}}, 0};
        }
    for (std::size_t j = 0; j < r; ++j)
        for (std::size_t i = 0; i < r; ++i) {
            std::vector<Incidence> bd{{hedge(i, j), 1}, {vedge(i + 1, j), 1}, {hedge(i, j + 1), -1}, {vedge(i, j), -1}};
            std::sort(bd.begin(), bd.end(), [](const Incidence& a, const Incidence& b) { return a.facet < b.facet; });
            cells[square(i, j)] = Cell{2, std::move(bd), 0};
        }
    CellComplex ambient(std::move(cells));

    std::vector<Rational> xs(r + 1), ys(r + 1);
    for (std::size_t k = 0; k <= r; ++k) {
        xs[k] = x0 + (x1 - x0) * Rational(k, r);
        ys[k] = y0 + (y1 - y0) * Rational(k, r);
    }
    std::vector<CellSet> members;
    for (const auto& b : family.boxes) {
        CellSet squares;
        if (z >= b.z_lo && z <= b.z_hi) {
            auto inside = [&](std::size_t i, std::size_t j) {
                return xs[i] >= b.x_lo && xs[i] <= b.x_hi && ys[j] >= b.y_lo && ys[j] <= b.y_hi;
            };
            for (std::size_t j = 0; j < r; ++j)
                for (std::size_t i = 0; i < r; ++i)
                    if (inside(i, j) && inside(i + 1, j) && inside(i, j + 1) && inside(i + 1, j + 1))
                        squares.push_back(square(i, j));
        }
        members.push_back(ambient.closure(squares));
    }
    return Arrangement(std::move(ambient), std::move(members));
}

} // namespace arrtopo

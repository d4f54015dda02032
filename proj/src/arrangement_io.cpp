#include "arrtopo/arrangement_io.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

namespace arrtopo {

using ojson = nlohmann::ordered_json;

namespace {

ojson parse_json(std::string_view text)
{
    try {
        return ojson::parse(text.begin(), text.end());
    } catch (const ojson::parse_error& e) {
        throw InputError(std::string("invalid JSON: ") + e.what());
    }
}

const ojson& field(const ojson& obj, const char* key, const std::string& path)
{
    if (!obj.is_object())
        throw InputError(path + ": expected an object");
    auto it = obj.find(key);
    if (it == obj.end())
        throw InputError(path + ": missing field \"" + key + "\"");
    return *it;
}

std::size_t as_index(const ojson& v, const std::string& path)
{
    if (!v.is_number_integer() || v.get<long long>() < 0)
        throw InputError(path + ": expected a nonnegative integer");
    return v.get<std::size_t>();
}

std::vector<Simplex> simplex_list(const ojson& v, const std::string& path, std::size_t n_vertices)
{
    if (!v.is_array())
        throw InputError(path + ": expected an array of simplices");
    std::vector<Simplex> out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const std::string p = path + "[" + std::to_string(i) + "]";
        if (!v[i].is_array() || v[i].empty())
            throw InputError(p + ": expected a nonempty array of vertex indices");
        Simplex s;
        for (std::size_t j = 0; j < v[i].size(); ++j) {
            const std::size_t x = as_index(v[i][j], p + "[" + std::to_string(j) + "]");
            if (x >= n_vertices)
                throw InputError(p + ": vertex " + std::to_string(x) + " out of range (n_vertices = " +
                                 std::to_string(n_vertices) + ")");
            s.push_back(x);
        }
        std::sort(s.begin(), s.end());
        if (std::adjacent_find(s.begin(), s.end()) != s.end())
            throw InputError(p + ": repeated vertex");
        out.push_back(std::move(s));
    }
    return out;
}

void check_format(const ojson& doc, const char* expected)
{
    const auto& f = field(doc, "format", "$");
    if (!f.is_string() || f.get<std::string>() != expected)
        throw InputError(std::string("$.format: expected \"") + expected + "\"");
}

ojson simplex_json(std::vector<Simplex> simplices)
{
    std::sort(simplices.begin(), simplices.end());
    ojson arr = ojson::array();
    for (const auto& s : simplices)
        arr.push_back(s);
    return arr;
}

} // namespace

Arrangement load_arrangement(std::string_view text)
{
    const ojson doc = parse_json(text);
    check_format(doc, "arr-v1");
    const auto& amb = field(doc, "ambient", "$");
    const std::size_t n_vertices = as_index(field(amb, "n_vertices", "$.ambient"), "$.ambient.n_vertices");
    const auto ambient_simplices =
        simplex_list(field(amb, "maximal_simplices", "$.ambient"), "$.ambient.maximal_simplices", n_vertices);
    SimplicialComplex ambient = SimplicialComplex::from_maximal(n_vertices, ambient_simplices);

    const auto& sets = field(doc, "sets", "$");
    if (!sets.is_array() || sets.empty())
        throw InputError("$.sets: expected a nonempty array");
    std::vector<std::vector<Simplex>> members;
    std::vector<std::string> names;
    for (std::size_t i = 0; i < sets.size(); ++i) {
        const std::string p = "$.sets[" + std::to_string(i) + "]";
        const auto& name = field(sets[i], "name", p);
        if (!name.is_string())
            throw InputError(p + ".name: expected a string");
        names.push_back(name.get<std::string>());
        auto listed = simplex_list(field(sets[i], "maximal_simplices", p), p + ".maximal_simplices", n_vertices);
        for (const auto& s : listed) {
            if (!ambient.contains(s)) {
                std::string text_s = "[";
                for (std::size_t j = 0; j < s.size(); ++j)
                    text_s += (j ? "," : "") + std::to_string(s[j]);
                throw InputError(p + ".maximal_simplices: simplex " + text_s + "] is not in the ambient complex");
            }
        }
        members.push_back(std::move(listed));
    }
    try {
        return Arrangement::from_simplicial(std::move(ambient), members, std::move(names));
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
}

std::string serialize_arrangement(const Arrangement& arr)
{
    if (!arr.simplicial())
        throw std::invalid_argument("arr-v1 needs a simplicial ambient complex");
    const SimplicialComplex& amb = *arr.simplicial();
    ojson doc;
    doc["format"] = "arr-v1";
    doc["ambient"]["n_vertices"] = amb.vertex_count();
    doc["ambient"]["maximal_simplices"] = simplex_json(amb.maximal_simplices());
    doc["sets"] = ojson::array();
    for (std::size_t i = 1; i <= arr.size(); ++i) {
        std::vector<Simplex> simplices;
        for (CellId c : arr.member(i))
            simplices.push_back(amb.simplex(c));
        std::vector<Simplex> maximal;
        if (!simplices.empty())
            maximal = SimplicialComplex::from_simplices(amb.vertex_count(), simplices).maximal_simplices();
        ojson set;
        set["name"] = arr.name(i);
        set["maximal_simplices"] = simplex_json(std::move(maximal));
        doc["sets"].push_back(std::move(set));
    }
    return doc.dump(2) + "\n";
}

CellDocument load_cell_document(std::string_view text)
{
    const ojson doc = parse_json(text);
    check_format(doc, "cell-v1");
    const auto& cells = field(doc, "cells", "$");
    if (!cells.is_array())
        throw InputError("$.cells: expected an array");
    std::vector<Cell> out;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        const std::string p = "$.cells[" + std::to_string(i) + "]";
        Cell c;
        c.dim = as_index(field(cells[i], "dim", p), p + ".dim");
        const auto& bd = field(cells[i], "boundary", p);
        if (!bd.is_array())
            throw InputError(p + ".boundary: expected an array");
        for (std::size_t j = 0; j < bd.size(); ++j) {
            const std::string q = p + ".boundary[" + std::to_string(j) + "]";
            if (!bd[j].is_array() || bd[j].size() != 2 || !bd[j][1].is_number_integer())
                throw InputError(q + ": expected [facet_id, coefficient]");
            c.boundary.push_back({as_index(bd[j][0], q + "[0]"), bd[j][1].get<int>()});
        }
        out.push_back(std::move(c));
    }
    CellDocument result;
    result.complex = CellComplex(std::move(out));
    if (auto it = doc.find("sets"); it != doc.end()) {
        if (!it->is_array())
            throw InputError("$.sets: expected an array");
        for (std::size_t i = 0; i < it->size(); ++i) {
            const std::string p = "$.sets[" + std::to_string(i) + "]";
            const auto& name = field((*it)[i], "name", p);
            if (!name.is_string())
                throw InputError(p + ".name: expected a string");
            const auto& ids = field((*it)[i], "cells", p);
            if (!ids.is_array())
                throw InputError(p + ".cells: expected an array");
            CellSet set;
            for (std::size_t j = 0; j < ids.size(); ++j) {
                const std::size_t id = as_index(ids[j], p + ".cells[" + std::to_string(j) + "]");
                if (id >= result.complex.size())
                    throw InputError(p + ".cells[" + std::to_string(j) + "]: unknown cell " + std::to_string(id));
                set.push_back(id);
            }
            std::sort(set.begin(), set.end());
            set.erase(std::unique(set.begin(), set.end()), set.end());
            result.sets.emplace_back(name.get<std::string>(), std::move(set));
        }
    }
    return result;
}

std::string serialize_cell_document(const CellDocument& doc)
{
    ojson out;
    out["format"] = "cell-v1";
    out["cells"] = ojson::array();
    for (const auto& c : doc.complex.cells()) {
        ojson cell;
        cell["dim"] = c.dim;
        cell["boundary"] = ojson::array();
        for (const auto& inc : c.boundary)
            cell["boundary"].push_back({inc.facet, inc.coefficient});
        out["cells"].push_back(std::move(cell));
    }
    out["sets"] = ojson::array();
    for (const auto& [name, cells] : doc.sets)
        out["sets"].push_back({{"name", name}, {"cells", cells}});
    return out.dump(2) + "\n";
}

std::string document_format(std::string_view text)
{
    const ojson doc = parse_json(text);
    if (doc.is_object())
        if (auto it = doc.find("format"); it != doc.end() && it->is_string())
            return it->get<std::string>();
    return {};
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw InputError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace arrtopo

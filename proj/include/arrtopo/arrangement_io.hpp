#pragma once

#include "arrtopo/arrangement.hpp"
#include "arrtopo/errors.hpp"

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace arrtopo {

/// arr-v1:
///   {"format":"arr-v1",
///    "ambient":{"n_vertices":N,"maximal_simplices":[[...],...]},
///    "sets":[{"name":S,"maximal_simplices":[[...],...]},...]}
/// Listed simplices are closed downward on load.
Arrangement load_arrangement(std::string_view text);

/// Byte-stable arr-v1 text: keys in schema order, maximal simplices sorted
/// lexicographically. Requires a simplicial ambient complex.
std::string serialize_arrangement(const Arrangement& arr);

/// cell-v1, a general regular cell complex with explicit incidences:
///   {"format":"cell-v1",
///    "cells":[{"dim":D,"boundary":[[facet_id,coefficient],...]},...],
///    "sets":[{"name":S,"cells":[id,...]},...]}
/// Loading does not validate the complex.
struct CellDocument {
    CellComplex complex;
    std::vector<std::pair<std::string, CellSet>> sets;
};

CellDocument load_cell_document(std::string_view text);
std::string serialize_cell_document(const CellDocument& doc);

/// Value of the top-level "format" field, or "" if absent.
std::string document_format(std::string_view text);

std::string read_file(const std::string& path);

} // namespace arrtopo

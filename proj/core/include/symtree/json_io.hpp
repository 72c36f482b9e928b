#pragma once

#include <json.hpp>

#include "symtree/coloring.hpp"
#include "symtree/dcs.hpp"
#include "symtree/oracle.hpp"
#include "symtree/spectrum.hpp"
#include "symtree/tree.hpp"

namespace symtree {

using Json = nlohmann::json;

// Exact integers render as JSON numbers while they fit in 64 bits and as
// decimal strings beyond that; the parsers accept both forms.
Json bigint_to_json(const BigInt& v);
BigInt bigint_from_json(const Json& j);

// {"shape": {"kind": "perfect", "k": …, "n": …} | {"kind": "kpode",
//  "arms": […]}, "parents": [-1, 0, …]}. Reading rebuilds the tree from the
// shape and insists the parents array matches it.
Json tree_to_json(const Tree& tree);
Tree tree_from_json(const Json& j, std::int64_t max_vertices = default_vertex_budget);

// {"palette_size": d, "colors": […]}; extra keys are tolerated when reading.
Json coloring_to_json(const Coloring& c);
Coloring coloring_from_json(const Json& j);

Json spectrum_to_json(const SpectrumReport& r);
Json oracle_spectrum_to_json(const OracleSpectrumReport& r);
Json matrix_to_json(const RowPermutedMatrix& m);

}  // namespace symtree

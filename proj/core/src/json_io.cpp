#include "symtree/json_io.hpp"

#include <cstdint>
#include <limits>
#include <string>

#include "symtree/errors.hpp"

namespace symtree {

namespace {

const BigInt kInt64Min{std::numeric_limits<std::int64_t>::min()};
const BigInt kInt64Max{std::numeric_limits<std::int64_t>::max()};

[[noreturn]] void bad(const std::string& what) { throw DomainError("json: " + what); }

}  // namespace

Json bigint_to_json(const BigInt& v) {
    if (v >= kInt64Min && v <= kInt64Max) return Json(v.convert_to<std::int64_t>());
    return Json(v.str());
}

BigInt bigint_from_json(const Json& j) {
    if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
    if (j.is_string()) {
        try {
            return BigInt(j.get<std::string>());
        } catch (const std::exception&) {
            bad("'" + j.get<std::string>() + "' is not a decimal integer");
        }
    }
    bad("expected an integer or a decimal string");
}

Json tree_to_json(const Tree& tree) {
    Json shape;
    if (const auto* p = std::get_if<PerfectShape>(&tree.shape())) {
        shape = {{"kind", "perfect"}, {"k", p->k}, {"n", p->n}};
    } else {
        const auto& kp = std::get<KPodeShape>(tree.shape());
        shape = {{"kind", "kpode"}, {"arms", kp.arms}};
    }
    Json parents = Json::array();
    parents.push_back(-1);
    for (Vertex v = 1; v < tree.vertex_count(); ++v) parents.push_back(tree.parent(v));
    return {{"shape", shape}, {"parents", parents}};
}

Tree tree_from_json(const Json& j, std::int64_t max_vertices) {
    try {
        const Json& shape = j.at("shape");
        const std::string kind = shape.at("kind").get<std::string>();
        Tree tree = [&] {
            if (kind == "perfect")
                return build_perfect_tree(shape.at("k").get<int>(), shape.at("n").get<int>(),
                                          max_vertices);
            if (kind == "kpode")
                return build_kpode(shape.at("arms").get<std::vector<std::int64_t>>(),
                                   max_vertices);
            bad("unknown shape kind '" + kind + "'");
        }();
        if (j.contains("parents")) {
            const auto parents = j.at("parents").get<std::vector<std::int64_t>>();
            if (std::ssize(parents) != tree.vertex_count())
                bad("parents array does not match the shape");
            for (Vertex v = 0; v < tree.vertex_count(); ++v) {
                const std::int64_t want = v == Tree::root ? -1 : tree.parent(v);
                if (parents[static_cast<std::size_t>(v)] != want)
                    bad("parents array does not match the shape");
            }
        }
        return tree;
    } catch (const Json::exception& e) {
        bad(e.what());
    }
}

Json coloring_to_json(const Coloring& c) {
    return {{"palette_size", c.palette}, {"colors", c.colors}};
}

Coloring coloring_from_json(const Json& j) {
    try {
        Coloring c;
        c.palette = j.at("palette_size").get<int>();
        c.colors = j.at("colors").get<std::vector<int>>();
        if (c.palette < 1) bad("palette must be at least 1");
        for (int color : c.colors)
            if (color < 0 || color >= c.palette) bad("color out of palette range");
        return c;
    } catch (const Json::exception& e) {
        bad(e.what());
    }
}

Json spectrum_to_json(const SpectrumReport& r) {
    Json rle = Json::array();
    for (const auto& [value, count] : r.costs_rle)
        rle.push_back(Json::array({bigint_to_json(value), bigint_to_json(count)}));
    return {{"k", r.k},
            {"n", r.n},
            {"dist", r.dist},
            {"fix", bigint_to_json(r.fix)},
            {"fdist", r.fdist},
            {"costs_rle", rle},
            {"ratio", Json::array({bigint_to_json(r.ratio.num), bigint_to_json(r.ratio.den)})}};
}

Json oracle_spectrum_to_json(const OracleSpectrumReport& r) {
    return {{"dist", r.dist},
            {"fix", r.fix},
            {"fdist", r.fdist},
            {"costs", r.costs},
            {"ratio", Json::array({bigint_to_json(r.ratio.num), bigint_to_json(r.ratio.den)})}};
}

Json matrix_to_json(const RowPermutedMatrix& m) {
    Json rows = Json::array();
    const auto entries = m.entries();
    for (const auto& row : entries) rows.push_back(row);
    Json sums = Json::array();
    for (const auto& s : m.column_sums()) sums.push_back(bigint_to_json(s));
    return {{"values", m.values},
            {"source_index", m.source_index},
            {"rows", rows},
            {"column_sums", sums}};
}

}  // namespace symtree

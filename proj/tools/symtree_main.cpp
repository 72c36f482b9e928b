#include <CLI11.hpp>

#include <cerrno>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "symtree/colorings.hpp"
#include "symtree/dcs.hpp"
#include "symtree/dot.hpp"
#include "symtree/errors.hpp"
#include "symtree/json_io.hpp"
#include "symtree/oracle.hpp"
#include "symtree/spectrum.hpp"
#include "symtree/symmetry.hpp"
#include "symtree/tree.hpp"

namespace {

using namespace symtree;

void emit(const std::string& text, const std::string& out_path) {
    const bool needs_newline = text.empty() || text.back() != '\n';
    if (out_path.empty()) {
        std::cout << text;
        if (needs_newline) std::cout << '\n';
    } else {
        std::ofstream f(out_path);
        if (!f) throw DomainError("cannot open output file '" + out_path + "'");
        f << text;
        if (needs_newline) f << '\n';
    }
}

void emit_json(const Json& j, const std::string& out_path) { emit(j.dump(2), out_path); }

Json read_json_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw DomainError("cannot open '" + path + "'");
    try {
        return Json::parse(f);
    } catch (const Json::exception& e) {
        throw DomainError(std::string("json: ") + e.what());
    }
}

// Either a perfect k-ary tree (--k/--n) or a k-pode (--arms).
struct TreePick {
    int k = 0;
    int n = 0;
    std::vector<std::int64_t> arms;
    std::int64_t max_vertices = default_vertex_budget;

    Tree build() const {
        const bool perfect = k != 0 || n != 0;
        if (perfect && !arms.empty())
            throw DomainError("give either --k/--n or --arms, not both");
        if (!arms.empty()) return build_kpode(arms, max_vertices);
        if (k != 0 && n != 0) return build_perfect_tree(k, n, max_vertices);
        throw DomainError("a tree is required: --k K --n N, or --arms t1,t2,...");
    }
};

void add_tree_flags(CLI::App* cmd, TreePick& pick) {
    cmd->add_option("--k", pick.k, "branching factor of a perfect k-ary tree");
    cmd->add_option("--n", pick.n, "depth of the perfect k-ary tree");
    cmd->add_option("--arms", pick.arms, "comma-separated k-pode arm lengths")->delimiter(',');
    cmd->add_option("--max-vertices", pick.max_vertices, "vertex budget for tree construction");
}

struct OracleFlags {
    std::int64_t budget = -1;
    int slots = -1;
    int jobs = 1;
    std::int64_t time_hint_ms = 0;
    int max_leaves = -1;
};

void add_oracle_flags(CLI::App* cmd, OracleFlags& f) {
    cmd->add_option("--budget", f.budget, "cap on candidate colorings examined");
    cmd->add_option("--slots", f.slots, "cap on painted vertices per candidate");
    cmd->add_option("--jobs", f.jobs, "worker threads (never changes results)");
    cmd->add_option("--time-hint", f.time_hint_ms, "soft wall-clock cap in milliseconds");
    cmd->add_option("--max-leaves", f.max_leaves, "leaf cap for fixing-number searches");
}

OracleBudget make_budget(const OracleFlags& f) {
    OracleBudget b;
    if (const char* env = std::getenv("SYMSPEC_BUDGET")) {
        const std::string s(env);
        errno = 0;
        char* end = nullptr;
        const long long v = std::strtoll(s.c_str(), &end, 10);
        if (s.empty() || end != s.c_str() + s.size() || errno == ERANGE || v < 0)
            throw DomainError("SYMSPEC_BUDGET must be a nonnegative integer");
        b.max_candidate_colorings = v;
    }
    if (f.budget >= 0) b.max_candidate_colorings = f.budget;
    if (f.slots >= 0) b.max_special_slots = f.slots;
    b.jobs = f.jobs;
    b.time_hint = std::chrono::milliseconds(f.time_hint_ms);
    if (f.max_leaves >= 0) b.max_fixing_leaves = f.max_leaves;
    return b;
}

Coloring scheme_coloring(const std::string& scheme, int k, int n, std::int64_t max_vertices) {
    if (scheme == "dist") return k_distinguishing_coloring(k, n, max_vertices);
    if (scheme == "middle") return middle_coloring(k, n, max_vertices);
    return frugal_coloring(k, n, max_vertices);
}

std::string csv_matrix(const RowPermutedMatrix& m, bool verified_wanted, bool verified) {
    std::string out;
    const auto rows = m.entries();
    for (const auto& row : rows) {
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (j > 0) out += ',';
            out += std::to_string(row[j]);
        }
        out += '\n';
    }
    out += '\n';
    const auto sums = m.column_sums();
    for (std::size_t j = 0; j < sums.size(); ++j) {
        if (j > 0) out += ',';
        out += sums[j].str();
    }
    out += '\n';
    if (verified_wanted) out += std::string("# verified: ") + (verified ? "true" : "false") + "\n";
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"symmetry-breaking colorings of perfect k-ary trees and k-podes"};
    app.require_subcommand(1);

    // tree
    auto* tree_cmd = app.add_subcommand("tree", "build a tree and print it");
    TreePick tree_pick;
    std::string tree_format = "json";
    std::string tree_out;
    add_tree_flags(tree_cmd, tree_pick);
    tree_cmd->add_option("--format", tree_format)->check(CLI::IsMember({"json", "dot"}));
    tree_cmd->add_option("--out", tree_out, "write output to this file");
    tree_cmd->callback([&] {
        const Tree tree = tree_pick.build();
        if (tree_format == "dot")
            emit(to_dot(tree), tree_out);
        else
            emit_json(tree_to_json(tree), tree_out);
    });

    // color
    auto* color_cmd = app.add_subcommand("color", "color a perfect tree with a named scheme");
    int color_k = 0;
    int color_n = 0;
    std::int64_t color_maxv = default_vertex_budget;
    std::string color_scheme;
    std::string color_format = "json";
    std::string color_out;
    bool color_summary = false;
    color_cmd->add_option("--k", color_k)->required();
    color_cmd->add_option("--n", color_n)->required();
    color_cmd->add_option("--scheme", color_scheme, "dist, middle or frugal")
        ->required()
        ->check(CLI::IsMember({"dist", "middle", "frugal"}));
    color_cmd->add_option("--max-vertices", color_maxv);
    color_cmd->add_option("--format", color_format)->check(CLI::IsMember({"json", "dot"}));
    color_cmd->add_option("--out", color_out, "write output to this file");
    color_cmd->add_flag("--summary", color_summary, "print a one-line human summary");
    color_cmd->callback([&] {
        const Tree tree = build_perfect_tree(color_k, color_n, color_maxv);
        const Coloring c = scheme_coloring(color_scheme, color_k, color_n, color_maxv);
        if (color_format == "dot") {
            emit(to_dot(tree, &c), color_out);
        } else {
            Json j = coloring_to_json(c);
            j["tree"] = tree_to_json(tree);
            j["scheme"] = color_scheme;
            j["paint_cost"] = paint_cost(c);
            if (!color_out.empty() || !color_summary) emit_json(j, color_out);
        }
        if (color_summary)
            std::cout << "scheme=" << color_scheme << " k=" << color_k << " n=" << color_n
                      << " vertices=" << tree.vertex_count() << " palette=" << c.palette
                      << " paint_cost=" << paint_cost(c) << "\n";
    });

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "check a coloring for the distinguishing property");
    std::string verify_tree_path;
    std::string verify_coloring_path;
    std::string verify_out;
    verify_cmd->add_option("--tree", verify_tree_path, "tree JSON file");
    verify_cmd->add_option("--coloring", verify_coloring_path, "coloring JSON file")->required();
    verify_cmd->add_option("--out", verify_out, "write output to this file");
    verify_cmd->callback([&] {
        const Json cj = read_json_file(verify_coloring_path);
        const Tree tree = [&] {
            if (!verify_tree_path.empty()) return tree_from_json(read_json_file(verify_tree_path));
            if (cj.contains("tree")) return tree_from_json(cj.at("tree"));
            throw DomainError("verify needs --tree or a coloring file that embeds its tree");
        }();
        const Coloring c = coloring_from_json(cj);
        check_coloring(tree, c);
        emit_json(Json{{"distinguishing", is_distinguishing(tree, c)},
                       {"paint_cost", paint_cost(c)},
                       {"vertices", tree.vertex_count()}},
                  verify_out);
    });

    // spectrum
    auto* spectrum_cmd = app.add_subcommand("spectrum", "paint-cost spectrum of a perfect tree");
    int spec_k = 0;
    int spec_n = 0;
    bool spec_oracle = false;
    OracleFlags spec_flags;
    std::string spec_out;
    spectrum_cmd->add_option("--k", spec_k)->required();
    spectrum_cmd->add_option("--n", spec_n)->required();
    spectrum_cmd->add_flag("--oracle", spec_oracle, "also run the exhaustive search and compare");
    add_oracle_flags(spectrum_cmd, spec_flags);
    spectrum_cmd->add_option("--out", spec_out, "write output to this file");
    spectrum_cmd->callback([&] {
        const SpectrumReport closed = spectrum_closed(spec_k, spec_n);
        Json j = spectrum_to_json(closed);
        if (spec_oracle) {
            const Tree tree = build_perfect_tree(spec_k, spec_n);
            const OracleSpectrumReport r = spectrum_oracle(tree, make_budget(spec_flags));
            bool agree = r.dist == closed.dist && BigInt(r.fix) == closed.fix &&
                         r.fdist == closed.fdist && r.ratio == closed.ratio &&
                         BigInt(std::ssize(r.costs)) == closed.fix - closed.dist + 2;
            if (agree)
                for (std::size_t i = 0; i < r.costs.size(); ++i)
                    agree = agree && BigInt(r.costs[i]) ==
                                         rho_closed(spec_k, spec_n, BigInt(r.dist) + BigInt(i));
            j["oracle"] = oracle_spectrum_to_json(r);
            j["agree"] = agree;
        }
        emit_json(j, spec_out);
    });

    // oracle
    auto* oracle_cmd = app.add_subcommand("oracle", "exhaustive searches on small trees");
    oracle_cmd->require_subcommand(1);

    auto* pc_cmd = oracle_cmd->add_subcommand("paint-cost", "minimum painted vertices on d colors");
    TreePick pc_pick;
    int pc_colors = 0;
    OracleFlags pc_flags;
    std::string pc_out;
    add_tree_flags(pc_cmd, pc_pick);
    pc_cmd->add_option("--colors", pc_colors, "palette size d")->required();
    add_oracle_flags(pc_cmd, pc_flags);
    pc_cmd->add_option("--out", pc_out, "write output to this file");
    pc_cmd->callback([&] {
        const Tree tree = pc_pick.build();
        const PaintCostResult res = min_paint_cost(tree, pc_colors, make_budget(pc_flags));
        emit_json(Json{{"tree", tree_to_json(tree)},
                       {"palette_size", pc_colors},
                       {"cost", res.cost},
                       {"candidates", res.candidates},
                       {"witness", coloring_to_json(res.witness)}},
                  pc_out);
    });

    auto* cn_cmd = oracle_cmd->add_subcommand("cost-number", "minimum smallest color class");
    TreePick cn_pick;
    int cn_colors = 0;
    OracleFlags cn_flags;
    std::string cn_out;
    add_tree_flags(cn_cmd, cn_pick);
    cn_cmd->add_option("--colors", cn_colors, "palette size d, all colors must be used")->required();
    add_oracle_flags(cn_cmd, cn_flags);
    cn_cmd->add_option("--out", cn_out, "write output to this file");
    cn_cmd->callback([&] {
        const Tree tree = cn_pick.build();
        const CostNumberResult res = cost_number(tree, cn_colors, make_budget(cn_flags));
        emit_json(Json{{"tree", tree_to_json(tree)},
                       {"palette_size", cn_colors},
                       {"value", res.value},
                       {"candidates", res.candidates},
                       {"witness", coloring_to_json(res.witness)}},
                  cn_out);
    });

    auto* fix_cmd = oracle_cmd->add_subcommand("fixing", "minimum leaf fixing set size");
    TreePick fix_pick;
    OracleFlags fix_flags;
    std::string fix_out;
    add_tree_flags(fix_cmd, fix_pick);
    add_oracle_flags(fix_cmd, fix_flags);
    fix_cmd->add_option("--out", fix_out, "write output to this file");
    fix_cmd->callback([&] {
        const Tree tree = fix_pick.build();
        const OracleBudget b = make_budget(fix_flags);
        emit_json(Json{{"tree", tree_to_json(tree)},
                       {"fixing_number", fixing_number_bruteforce(tree, b.max_fixing_leaves)}},
                  fix_out);
    });

    // dcs
    auto* dcs_cmd = app.add_subcommand("dcs", "row-permuted matrix with distinct column sums");
    std::vector<std::int64_t> dcs_values;
    std::int64_t dcs_rows = 0;
    bool dcs_verify = false;
    std::int64_t dcs_max_classes = 40320;
    std::string dcs_format = "json";
    std::string dcs_out;
    dcs_cmd->add_option("--values", dcs_values, "comma-separated distinct integers")
        ->delimiter(',')
        ->required();
    dcs_cmd->add_option("--rows", dcs_rows, "number of rows k, 1 <= k <= n!-1")->required();
    dcs_cmd->add_flag("--verify", dcs_verify, "re-check the matrix independently");
    dcs_cmd->add_option("--max-classes", dcs_max_classes, "cap on enumerated rotation classes");
    dcs_cmd->add_option("--format", dcs_format)->check(CLI::IsMember({"json", "csv"}));
    dcs_cmd->add_option("--out", dcs_out, "write output to this file");
    dcs_cmd->callback([&] {
        const RowPermutedMatrix m = general_dcs(dcs_values, dcs_rows, dcs_max_classes);
        const bool verified = dcs_verify && verify_dcs(m.entries(), dcs_values);
        if (dcs_format == "csv") {
            emit(csv_matrix(m, dcs_verify, verified), dcs_out);
        } else {
            Json j = matrix_to_json(m);
            if (dcs_verify) j["verified"] = verified;
            emit_json(j, dcs_out);
        }
    });

    // kpode
    auto* kpode_cmd = app.add_subcommand("kpode", "build a k-pode, optionally with the equality coloring");
    std::vector<std::int64_t> kp_arms;
    int kp_equality = -1;
    std::int64_t kp_maxv = default_vertex_budget;
    std::string kp_format = "json";
    std::string kp_out;
    kpode_cmd->add_option("--arms", kp_arms, "comma-separated arm lengths")
        ->delimiter(',')
        ->required();
    kpode_cmd->add_option("--equality-coloring", kp_equality,
                          "paint cost-d equality witness; needs d+1 equal arms");
    kpode_cmd->add_option("--max-vertices", kp_maxv);
    kpode_cmd->add_option("--format", kp_format)->check(CLI::IsMember({"json", "dot"}));
    kpode_cmd->add_option("--out", kp_out, "write output to this file");
    kpode_cmd->callback([&] {
        if (kp_equality < 0) {
            const Tree tree = build_kpode(kp_arms, kp_maxv);
            if (kp_format == "dot")
                emit(to_dot(tree), kp_out);
            else
                emit_json(tree_to_json(tree), kp_out);
            return;
        }
        for (const auto t : kp_arms)
            if (t != kp_arms.front())
                throw DomainError("--equality-coloring needs all arms equal");
        if (std::ssize(kp_arms) != static_cast<std::int64_t>(kp_equality) + 1)
            throw DomainError("--equality-coloring d needs exactly d+1 arms");
        const auto [tree, c] = kpode_equality_coloring(kp_equality, kp_arms.front(), kp_maxv);
        if (kp_format == "dot") {
            emit(to_dot(tree, &c), kp_out);
        } else {
            Json j = coloring_to_json(c);
            j["tree"] = tree_to_json(tree);
            j["paint_cost"] = paint_cost(c);
            emit_json(j, kp_out);
        }
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exhausted: " << e.what();
        if (e.partial() >= 0) std::cerr << " (proved lower bound: " << e.partial() << ")";
        std::cerr << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

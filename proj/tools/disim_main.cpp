#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "disim/classes.hpp"
#include "disim/disimplicial.hpp"
#include "disim/elimination.hpp"
#include "disim/generate.hpp"
#include "disim/io.hpp"
#include "disim/transforms.hpp"

using json = nlohmann::ordered_json;

namespace {

constexpr int kExitParseError = 1;
constexpr int kExitPrecondition = 2;

disim::Digraph load_graph(const std::string& path, bool bipartite) {
    std::ifstream in(path);
    if (!in) throw disim::ParseError("cannot open " + path);
    return bipartite ? disim::read_bipartite_edge_list(in)
                     : disim::read_edge_list(in);
}

json arc_json(const disim::Digraph& g, const disim::Arc& a) {
    return json::array({g.label(a.tail), g.label(a.head)});
}

void cmd_disimplicial(const disim::Digraph& g, bool as_json) {
    std::vector<disim::Arc> arcs = disim::all_disimplicial_arcs(g);
    if (as_json) {
        json out;
        out["n"] = g.vertex_count();
        out["m"] = g.arc_count();
        out["disimplicial_count"] = arcs.size();
        out["arcs"] = json::array();
        for (const auto& a : arcs) out["arcs"].push_back(arc_json(g, a));
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "# disimplicial arcs: " << arcs.size() << "\n";
        for (const auto& a : arcs)
            std::cout << g.label(a.tail) << "\t" << g.label(a.head) << "\n";
    }
}

void cmd_eliminate(const disim::Digraph& g,
                   const std::optional<disim::Matching>& matching, bool as_json) {
    disim::EliminationScheme s = matching ? disim::matched_elimination(g, *matching)
                                          : disim::maximal_elimination(g);
    std::optional<bool> st_decision;
    if (!matching && disim::is_st_graph(g)) st_decision = s.perfect;

    if (as_json) {
        json out = json::parse(disim::scheme_json(g, s));
        if (st_decision) out["perfect_elimination_st"] = *st_decision;
        std::cout << out.dump(2) << "\n";
    } else {
        if (st_decision)
            std::cout << "# perfect_elimination_st: "
                      << (*st_decision ? "true" : "false") << "\n";
        disim::write_scheme(std::cout, g, s);
    }
}

void cmd_classify(const disim::Digraph& g) {
    std::cout << disim::class_report_json(disim::classify(g)) << "\n";
}

void cmd_pivots(const std::string& path, bool as_json) {
    std::ifstream in(path);
    if (!in) throw disim::ParseError("cannot open " + path);
    int rows = 0, cols = 0;
    disim::Digraph g = disim::read_matrix_market(in, &rows, &cols);
    disim::EliminationScheme s = disim::maximal_elimination(g);

    if (as_json) {
        json out;
        out["rows"] = rows;
        out["cols"] = cols;
        out["nnz"] = g.arc_count();
        out["perfect"] = s.perfect;
        out["pivots"] = json::array();
        for (const auto& a : s.steps)
            out["pivots"].push_back(json::array({a.tail + 1, a.head - rows + 1}));
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "# perfect: " << (s.perfect ? "true" : "false") << "\n";
        std::cout << "# pivots: " << s.steps.size() << "\n";
        for (const auto& a : s.steps)
            std::cout << a.tail + 1 << "\t" << a.head - rows + 1 << "\n";
    }
}

void cmd_gen(const std::string& kind, int n, int m, uint64_t seed) {
    disim::Rng rng(seed);
    disim::Digraph g;
    if (kind == "st")
        g = disim::random_st_graph(rng, n, n, m);
    else if (kind == "digraph")
        g = disim::random_digraph(rng, n, m);
    else if (kind == "order")
        g = disim::random_order_graph(rng, n, m);
    else if (kind == "perfect-st")
        g = disim::random_perfect_elimination_st(rng, n);
    else if (kind == "cycle-st")
        g = disim::cycle_st_graph(std::max(2, n));
    else
        throw std::invalid_argument("unknown generator kind: " + kind);
    disim::write_edge_list(std::cout, g);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"disimplicial arc toolkit: bisimplicial edges, zero-fill "
                 "elimination schemes and digraph class recognition"};
    app.require_subcommand(1);

    std::string file, matching_file, kind = "st";
    bool bipartite = false, as_json = false;
    int gen_n = 16, gen_m = 32;
    uint64_t seed = 1;

    auto add_common = [&](CLI::App* sub, bool with_matching) {
        sub->add_option("file", file, "edge list input")->required();
        sub->add_flag("--bipartite", bipartite,
                      "treat input as a bipartite edge list (left -> right)");
        sub->add_flag("--json", as_json, "JSON output");
        if (with_matching)
            sub->add_option("--matching", matching_file,
                            "restrict elimination to this matching file");
    };

    CLI::App* dis = app.add_subcommand("disimplicial",
                                       "list disimplicial arcs / bisimplicial edges");
    add_common(dis, false);
    CLI::App* elim = app.add_subcommand("eliminate",
                                        "compute a maximal elimination scheme");
    add_common(elim, true);
    CLI::App* cls = app.add_subcommand("classify", "class recognition report");
    add_common(cls, false);

    CLI::App* piv = app.add_subcommand("pivots",
                                       "zero fill-in pivots of a sparse matrix");
    piv->add_option("file", file, "Matrix Market coordinate file")->required();
    piv->add_flag("--json", as_json, "JSON output");

    CLI::App* gen = app.add_subcommand("gen", "emit a random test graph");
    gen->add_option("--kind", kind, "st|digraph|order|perfect-st|cycle-st");
    gen->add_option("--n", gen_n, "size parameter");
    gen->add_option("--m", gen_m, "arc budget");
    gen->add_option("--seed", seed, "rng seed");

    CLI11_PARSE(app, argc, argv);

    try {
        if (dis->parsed()) {
            cmd_disimplicial(load_graph(file, bipartite), as_json);
        } else if (elim->parsed()) {
            disim::Digraph g = load_graph(file, bipartite);
            std::optional<disim::Matching> m;
            if (!matching_file.empty()) {
                std::ifstream min(matching_file);
                if (!min) throw disim::ParseError("cannot open " + matching_file);
                m = disim::read_matching(min, g);
            }
            cmd_eliminate(g, m, as_json);
        } else if (cls->parsed()) {
            cmd_classify(load_graph(file, bipartite));
        } else if (piv->parsed()) {
            cmd_pivots(file, as_json);
        } else if (gen->parsed()) {
            cmd_gen(kind, gen_n, gen_m, seed);
        }
    } catch (const disim::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParseError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "precondition violated: " << e.what() << "\n";
        return kExitPrecondition;
    }
    return 0;
}

#include "disim/io.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_map>

#include <json.hpp>

namespace disim {

namespace {

// Strips comments and splits into whitespace tokens; empty result for
// blank/comment lines.
std::vector<std::string> tokenize(const std::string& line) {
    std::string body = line.substr(0, line.find('#'));
    std::istringstream ss(body);
    std::vector<std::string> toks;
    std::string t;
    while (ss >> t) toks.push_back(t);
    return toks;
}

struct LabelInterner {
    std::unordered_map<std::string, int> ids;
    std::vector<std::string> labels;

    int intern(const std::string& s) {
        auto [it, fresh] = ids.try_emplace(s, static_cast<int>(labels.size()));
        if (fresh) labels.push_back(s);
        return it->second;
    }
};

}  // namespace

Digraph read_edge_list(std::istream& is) {
    LabelInterner interner;
    std::vector<Arc> arcs;
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        auto toks = tokenize(line);
        if (toks.empty()) continue;
        if (toks.size() != 2)
            throw ParseError("line " + std::to_string(lineno) +
                             ": expected two tokens");
        int u = interner.intern(toks[0]);
        int v = interner.intern(toks[1]);
        arcs.push_back({u, v});
    }
    const int n = static_cast<int>(interner.labels.size());
    return build_digraph(n, arcs, std::move(interner.labels));
}

Digraph read_bipartite_edge_list(std::istream& is) {
    LabelInterner interner;
    std::vector<char> side;  // 0 left, 1 right, per interned id
    std::vector<Arc> arcs;
    std::string line;
    int lineno = 0;
    auto intern_side = [&](const std::string& tok, char s, int lineno_) {
        int id = interner.intern(tok);
        if (id == static_cast<int>(side.size()))
            side.push_back(s);
        else if (side[id] != s)
            throw ParseError("line " + std::to_string(lineno_) + ": token '" +
                             tok + "' used on both sides");
        return id;
    };
    while (std::getline(is, line)) {
        ++lineno;
        auto toks = tokenize(line);
        if (toks.empty()) continue;
        if (toks.size() != 2)
            throw ParseError("line " + std::to_string(lineno) +
                             ": expected two tokens");
        int u = intern_side(toks[0], 0, lineno);
        int v = intern_side(toks[1], 1, lineno);
        arcs.push_back({u, v});
    }
    const int n = static_cast<int>(interner.labels.size());
    return build_digraph(n, arcs, std::move(interner.labels));
}

void write_edge_list(std::ostream& os, const Digraph& d) {
    for (const Arc& a : d.arcs())
        os << d.label(a.tail) << " " << d.label(a.head) << "\n";
}

Matching read_matching(std::istream& is, const Digraph& g) {
    std::unordered_map<std::string, int> ids;
    for (int v = 0; v < g.vertex_count(); ++v) ids[g.label(v)] = v;

    Matching m;
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        auto toks = tokenize(line);
        if (toks.empty()) continue;
        if (toks.size() != 2)
            throw ParseError("matching line " + std::to_string(lineno) +
                             ": expected two tokens");
        auto where = [&](const std::string& t) {
            auto it = ids.find(t);
            if (it == ids.end())
                throw ParseError("matching line " + std::to_string(lineno) +
                                 ": unknown vertex '" + t + "'");
            return it->second;
        };
        m.arcs.push_back({where(toks[0]), where(toks[1])});
    }
    return m;
}

Digraph read_matrix_market(std::istream& is, int* rows, int* cols) {
    std::string line;
    if (!std::getline(is, line)) throw ParseError("empty matrix market file");
    std::istringstream head(line);
    std::string banner, object, format, field, symmetry;
    head >> banner >> object >> format >> field >> symmetry;
    if (banner != "%%MatrixMarket" || object != "matrix")
        throw ParseError("not a matrix market matrix file");
    if (format != "coordinate")
        throw ParseError("only the coordinate format is supported");
    bool has_value;
    if (field == "pattern")
        has_value = false;
    else if (field == "real" || field == "integer")
        has_value = true;
    else
        throw ParseError("unsupported matrix market field: " + field);
    bool mirror;
    if (symmetry == "general")
        mirror = false;
    else if (symmetry == "symmetric" || symmetry == "skew-symmetric")
        mirror = true;
    else
        throw ParseError("unsupported matrix market symmetry: " + symmetry);

    long nr = -1, nc = -1, nnz = -1;
    while (std::getline(is, line)) {
        if (!line.empty() && line[0] == '%') continue;
        std::istringstream ss(line);
        if (ss >> nr >> nc >> nnz) break;
        if (!line.empty() && line.find_first_not_of(" \t\r") != std::string::npos)
            throw ParseError("malformed size line");
    }
    if (nr < 0 || nc < 0 || nnz < 0) throw ParseError("missing size line");

    std::vector<Arc> arcs;
    long read = 0;
    while (read < nnz && std::getline(is, line)) {
        if (line.empty() || line[0] == '%') continue;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::istringstream ss(line);
        long i, j;
        if (!(ss >> i >> j)) throw ParseError("malformed entry line");
        double value = 1.0;
        if (has_value && !(ss >> value)) throw ParseError("missing entry value");
        if (i < 1 || i > nr || j < 1 || j > nc)
            throw ParseError("entry index out of range");
        ++read;
        if (has_value && value == 0.0) continue;  // stored zeros are dropped
        int r = static_cast<int>(i) - 1;
        int c = static_cast<int>(j) - 1;
        arcs.push_back({r, static_cast<int>(nr) + c});
        if (mirror && i != j) {
            // transposed entry: row j, column i
            arcs.push_back({static_cast<int>(j) - 1,
                            static_cast<int>(nr) + static_cast<int>(i) - 1});
        }
    }
    if (read != nnz) throw ParseError("fewer entries than announced");

    std::vector<std::string> labels;
    labels.reserve(nr + nc);
    for (long i = 1; i <= nr; ++i) labels.push_back("r" + std::to_string(i));
    for (long j = 1; j <= nc; ++j) labels.push_back("c" + std::to_string(j));
    if (rows) *rows = static_cast<int>(nr);
    if (cols) *cols = static_cast<int>(nc);
    return build_digraph(static_cast<int>(nr + nc), arcs, std::move(labels));
}

void write_scheme(std::ostream& os, const Digraph& g, const EliminationScheme& s) {
    os << "# perfect: " << (s.perfect ? "true" : "false") << "\n";
    os << "# steps: " << s.steps.size() << "\n";
    for (const Arc& a : s.steps)
        os << g.label(a.tail) << " " << g.label(a.head) << "\n";
}

std::string scheme_json(const Digraph& g, const EliminationScheme& s, int indent) {
    nlohmann::ordered_json out;
    out["perfect"] = s.perfect;
    out["steps"] = nlohmann::ordered_json::array();
    for (const Arc& a : s.steps)
        out["steps"].push_back({g.label(a.tail), g.label(a.head)});
    out["residual_arcs"] = s.residual.arc_count();
    return out.dump(indent);
}

}  // namespace disim

#pragma once

#include <cctype>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "migdag/enumerate.hpp"

namespace migdag {

enum class Format { EdgeList, Dot, Json };

inline Format format_from_name(const std::string& name) {
    if (name == "edgelist" || name == "txt") return Format::EdgeList;
    if (name == "dot") return Format::Dot;
    if (name == "json") return Format::Json;
    throw std::invalid_argument("unknown format: " + name);
}

namespace detail {

inline std::string trim(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

// Shared result of the text parsers; which fields may be filled depends
// on the declared kind.
struct GraphData {
    int n = 0;
    bool poset = false;
    bool mixed = false;
    std::vector<Arc> arcs;
    std::vector<Edge> edges;
    std::vector<std::string> labels;
    int header_line = 1;
};

inline void assign_labels(GraphData& d, const std::map<int, std::pair<std::string, int>>& names) {
    if (names.empty()) return;
    for (const auto& [v, entry] : names)
        if (v < 0 || v >= d.n) throw ParseError(entry.second, "labelled node id out of range");
    d.labels.resize(d.n);
    for (int v = 0; v < d.n; ++v) d.labels[v] = std::to_string(v);
    for (const auto& [v, entry] : names) d.labels[v] = entry.first;
}

// Plain text format: optional '# key=value' directives and comments,
// then a header 'n m', then m rows of node pairs. Mixed rows carry a
// trailing '->' or '--'.
inline GraphData parse_edge_list(std::istream& in) {
    GraphData d;
    std::map<int, std::pair<std::string, int>> names;  // id -> (label, line)
    std::set<std::pair<int, int>> used_pairs;          // normalised
    std::set<Arc> used_arcs;
    std::string line;
    int line_no = 0;
    int header_n = -1, header_m = 0, rows = 0;

    while (std::getline(in, line)) {
        ++line_no;
        std::string t = trim(line);
        if (t.empty()) continue;
        if (t[0] == '#') {
            std::string body = trim(t.substr(1));
            if (body.rfind("poset=", 0) == 0) {
                if (body != "poset=true" && body != "poset=false")
                    throw ParseError(line_no, "poset directive must be true or false");
                d.poset = body == "poset=true";
            } else if (body.rfind("mixed=", 0) == 0) {
                if (body != "mixed=true" && body != "mixed=false")
                    throw ParseError(line_no, "mixed directive must be true or false");
                d.mixed = body == "mixed=true";
            } else if (body.rfind("name=", 0) == 0) {
                std::istringstream ss(body.substr(5));
                int v;
                if (!(ss >> v)) throw ParseError(line_no, "name directive needs a node id");
                std::string label;
                std::getline(ss, label);
                label = trim(label);
                if (label.empty()) throw ParseError(line_no, "name directive needs a label");
                names[v] = {label, line_no};
            }
            continue;
        }
        std::istringstream ss(t);
        std::string extra;
        if (header_n < 0) {
            if (!(ss >> header_n >> header_m) || header_n < 0 || header_m < 0)
                throw ParseError(line_no, "header must be two counts: nodes edges");
            if (ss >> extra) throw ParseError(line_no, "trailing text after header");
            d.header_line = line_no;
            continue;
        }
        if (rows == header_m) throw ParseError(line_no, "more rows than the header announced");
        int u, v;
        if (!(ss >> u >> v)) throw ParseError(line_no, "row must be two node ids");
        bool row_arc = d.poset;
        if (d.mixed) {
            std::string kind;
            if (!(ss >> kind) || (kind != "->" && kind != "--"))
                throw ParseError(line_no, "mixed row needs a trailing '->' or '--'");
            row_arc = kind == "->";
        }
        if (ss >> extra) throw ParseError(line_no, "trailing text after row");
        if (u < 0 || u >= header_n || v < 0 || v >= header_n)
            throw ParseError(line_no, "node id out of range");
        if (u == v) throw ParseError(line_no, "self-loop");
        auto norm = std::minmax(u, v);
        if (row_arc) {
            if (used_pairs.count({norm.first, norm.second}) && !d.poset)
                throw ParseError(line_no, "pair already linked");
            if (used_arcs.count({u, v})) throw ParseError(line_no, "duplicate arc");
            if (used_arcs.count({v, u})) throw ParseError(line_no, "opposite arc already present");
            used_arcs.insert({u, v});
            d.arcs.emplace_back(u, v);
        } else {
            if (used_pairs.count({norm.first, norm.second}))
                throw ParseError(line_no, d.mixed ? "pair already linked" : "duplicate edge");
            d.edges.emplace_back(norm.first, norm.second);
        }
        used_pairs.insert({norm.first, norm.second});
        ++rows;
    }
    if (header_n < 0) throw ParseError(line_no + 1, "missing header line");
    if (rows < header_m) throw ParseError(line_no + 1, "input ended before all rows were read");
    d.n = header_n;
    assign_labels(d, names);
    return d;
}

struct DotToken {
    std::string text;
    int line = 0;
    bool quoted = false;
};

inline std::vector<DotToken> dot_tokens(std::istream& in) {
    std::vector<DotToken> out;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        for (std::size_t i = 0; i < line.size();) {
            char c = line[i];
            if (std::isspace(static_cast<unsigned char>(c))) { ++i; continue; }
            if (c == '/' && i + 1 < line.size() && line[i + 1] == '/') break;
            if (c == '"') {
                std::string s;
                ++i;
                bool closed = false;
                while (i < line.size()) {
                    if (line[i] == '\\' && i + 1 < line.size()) { s += line[i + 1]; i += 2; continue; }
                    if (line[i] == '"') { closed = true; ++i; break; }
                    s += line[i++];
                }
                if (!closed) throw ParseError(line_no, "unterminated string");
                out.push_back({s, line_no, true});
                continue;
            }
            if (std::string("{}[];=,").find(c) != std::string::npos) {
                out.push_back({std::string(1, c), line_no, false});
                ++i;
                continue;
            }
            if (c == '-' && i + 1 < line.size() && (line[i + 1] == '-' || line[i + 1] == '>')) {
                out.push_back({line.substr(i, 2), line_no, false});
                i += 2;
                continue;
            }
            if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.') {
                std::size_t j = i;
                while (j < line.size() &&
                       (std::isalnum(static_cast<unsigned char>(line[j])) || line[j] == '_' || line[j] == '.'))
                    ++j;
                out.push_back({line.substr(i, j - i), line_no, false});
                i = j;
                continue;
            }
            throw ParseError(line_no, std::string("unexpected character '") + c + "'");
        }
    }
    return out;
}

// The DOT subset the emitters produce: one (di)graph block whose
// statements are either node lines (with an optional label attribute) or
// links between integer node ids, each terminated by ';'.
inline GraphData parse_dot(std::istream& in, bool expect_directed) {
    auto toks = dot_tokens(in);
    std::size_t pos = 0;
    auto peek = [&]() -> const DotToken* { return pos < toks.size() ? &toks[pos] : nullptr; };
    auto next = [&](const char* what) -> const DotToken& {
        if (pos >= toks.size()) {
            int ln = toks.empty() ? 1 : toks.back().line;
            throw ParseError(ln, std::string("expected ") + what + " before end of input");
        }
        return toks[pos++];
    };
    auto expect = [&](const char* text) {
        const DotToken& t = next(text);
        if (t.quoted || t.text != text)
            throw ParseError(t.line, std::string("expected '") + text + "', got '" + t.text + "'");
    };
    auto node_id = [&](const DotToken& t) -> int {
        if (t.quoted) throw ParseError(t.line, "node id expected");
        for (char c : t.text)
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw ParseError(t.line, "node ids must be nonnegative integers");
        try {
            return std::stoi(t.text);
        } catch (const std::exception&) {
            throw ParseError(t.line, "node id out of range");
        }
    };

    const DotToken& kind = next("'graph' or 'digraph'");
    bool directed = kind.text == "digraph" && !kind.quoted;
    if (!directed && (kind.quoted || kind.text != "graph"))
        throw ParseError(kind.line, "input must start with 'graph' or 'digraph'");
    if (directed != expect_directed)
        throw ParseError(kind.line, expect_directed ? "expected a digraph" : "expected an undirected graph");
    if (peek() && !peek()->quoted && peek()->text != "{") ++pos;  // optional graph name
    expect("{");

    GraphData d;
    d.poset = directed;
    std::map<int, std::pair<std::string, int>> names;
    std::set<std::pair<int, int>> used_pairs;
    int max_id = -1;

    // Attribute lists are parsed fully; only 'label' on nodes is kept.
    auto attrs = [&]() -> std::map<std::string, std::string> {
        std::map<std::string, std::string> out;
        if (!peek() || peek()->quoted || peek()->text != "[") return out;
        ++pos;
        for (;;) {
            const DotToken& key = next("attribute name");
            if (!key.quoted && key.text == "]") break;
            expect("=");
            const DotToken& val = next("attribute value");
            out[key.text] = val.text;
            if (peek() && !peek()->quoted && peek()->text == ",") ++pos;
        }
        return out;
    };

    for (;;) {
        const DotToken& t = next("statement or '}'");
        if (!t.quoted && t.text == "}") break;
        int u = node_id(t);
        max_id = std::max(max_id, u);
        if (peek() && !peek()->quoted && (peek()->text == "--" || peek()->text == "->")) {
            const DotToken& link = toks[pos++];
            if ((link.text == "->") != directed)
                throw ParseError(link.line, directed ? "use '->' in a digraph" : "use '--' in a graph");
            const DotToken& t2 = next("node id");
            int v = node_id(t2);
            max_id = std::max(max_id, v);
            attrs();
            if (u == v) throw ParseError(t.line, "self-loop");
            auto norm = std::minmax(u, v);
            if (directed) {
                d.arcs.emplace_back(u, v);
            } else {
                if (used_pairs.count({norm.first, norm.second}))
                    throw ParseError(t.line, "duplicate edge");
                used_pairs.insert({norm.first, norm.second});
                d.edges.emplace_back(norm.first, norm.second);
            }
        } else {
            auto a = attrs();
            if (a.count("label")) names[u] = {a["label"], t.line};
        }
        expect(";");
    }
    if (peek()) throw ParseError(peek()->line, "trailing text after '}'");
    d.n = max_id + 1;
    d.header_line = kind.line;
    assign_labels(d, names);
    return d;
}

inline std::vector<std::pair<int, int>> json_pairs(const nlohmann::json& j, const char* key) {
    std::vector<std::pair<int, int>> out;
    const auto& a = j.at(key);
    if (!a.is_array()) throw ParseError(1, std::string("'") + key + "' must be an array");
    for (const auto& e : a) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
            throw ParseError(1, std::string("'") + key + "' entries must be integer pairs");
        out.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return out;
}

inline GraphData parse_json(std::istream& in, bool expect_directed) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(1, e.what());
    }
    try {
        if (!j.is_object() || !j.contains("n") || !j.at("n").is_number_integer())
            throw ParseError(1, "expected an object with an integer 'n'");
        GraphData d;
        d.n = j.at("n").get<int>();
        d.poset = expect_directed;
        if (expect_directed) {
            if (!j.contains("arcs")) throw ParseError(1, "expected an 'arcs' array");
            d.arcs = json_pairs(j, "arcs");
        } else {
            if (j.contains("arcs")) throw ParseError(1, "expected an undirected graph, got arcs");
            if (!j.contains("edges")) throw ParseError(1, "expected an 'edges' array");
            d.edges = json_pairs(j, "edges");
        }
        if (j.contains("labels")) {
            const auto& ls = j.at("labels");
            if (!ls.is_array() || static_cast<int>(ls.size()) != d.n)
                throw ParseError(1, "'labels' must list one string per node");
            for (const auto& l : ls) {
                if (!l.is_string()) throw ParseError(1, "'labels' must list one string per node");
                d.labels.push_back(l.get<std::string>());
            }
        }
        return d;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(1, e.what());
    }
}

inline std::string dot_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

template <typename G>
void emit_dot_nodes(std::ostream& out, const G& g) {
    for (int v = 0; v < g.n(); ++v) {
        out << "  " << v;
        if (g.has_labels()) out << " [label=\"" << dot_escape(g.label(v)) << "\"]";
        out << ";\n";
    }
}

template <typename G>
void emit_name_directives(std::ostream& out, const G& g) {
    if (!g.has_labels()) return;
    for (int v = 0; v < g.n(); ++v) out << "# name=" << v << " " << g.label(v) << "\n";
}

inline nlohmann::ordered_json json_pair_array(const std::vector<std::pair<int, int>>& ps) {
    nlohmann::ordered_json a = nlohmann::ordered_json::array();
    for (auto [u, v] : ps) a.push_back({u, v});
    return a;
}

template <typename G>
void json_attach_labels(nlohmann::ordered_json& j, const G& g) {
    if (g.has_labels()) j["labels"] = g.labels();
}

}  // namespace detail

inline UndirectedGraph parse_graph(std::istream& in, Format f) {
    detail::GraphData d;
    switch (f) {
        case Format::EdgeList:
            d = detail::parse_edge_list(in);
            if (d.poset) throw ParseError(d.header_line, "expected an undirected graph, got a poset");
            if (d.mixed) throw ParseError(d.header_line, "expected an undirected graph, got a mixed graph");
            break;
        case Format::Dot: d = detail::parse_dot(in, false); break;
        case Format::Json: d = detail::parse_json(in, false); break;
    }
    return UndirectedGraph(d.n, d.edges, d.labels);
}

inline Dag parse_dag(std::istream& in, Format f) {
    detail::GraphData d;
    switch (f) {
        case Format::EdgeList:
            d = detail::parse_edge_list(in);
            if (d.mixed) throw ParseError(d.header_line, "expected a poset, got a mixed graph");
            if (!d.poset && !d.edges.empty())
                throw ParseError(d.header_line, "directed input needs a '# poset=true' directive");
            break;
        case Format::Dot: d = detail::parse_dot(in, true); break;
        case Format::Json: d = detail::parse_json(in, true); break;
    }
    try {
        return Dag(d.n, d.arcs, d.labels);
    } catch (const std::invalid_argument& e) {
        throw ParseError(d.header_line, e.what());
    }
}

inline UndirectedGraph parse_graph(const std::string& text, Format f) {
    std::istringstream in(text);
    return parse_graph(in, f);
}

inline Dag parse_dag(const std::string& text, Format f) {
    std::istringstream in(text);
    return parse_dag(in, f);
}

inline void emit_graph(std::ostream& out, const UndirectedGraph& g, Format f) {
    switch (f) {
        case Format::EdgeList: {
            detail::emit_name_directives(out, g);
            out << g.n() << " " << g.edge_count() << "\n";
            for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
            break;
        }
        case Format::Dot: {
            out << "graph g {\n";
            detail::emit_dot_nodes(out, g);
            for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
            out << "}\n";
            break;
        }
        case Format::Json: {
            nlohmann::ordered_json j;
            j["n"] = g.n();
            j["edges"] = detail::json_pair_array(g.edges());
            detail::json_attach_labels(j, g);
            out << j.dump(2) << "\n";
            break;
        }
    }
}

inline void emit_dag(std::ostream& out, const Dag& d, Format f) {
    switch (f) {
        case Format::EdgeList: {
            out << "# poset=true\n";
            detail::emit_name_directives(out, d);
            out << d.n() << " " << d.arc_count() << "\n";
            for (auto [u, v] : d.arcs()) out << u << " " << v << "\n";
            break;
        }
        case Format::Dot: {
            out << "digraph g {\n";
            detail::emit_dot_nodes(out, d);
            for (auto [u, v] : d.arcs()) out << "  " << u << " -> " << v << ";\n";
            out << "}\n";
            break;
        }
        case Format::Json: {
            nlohmann::ordered_json j;
            j["n"] = d.n();
            j["arcs"] = detail::json_pair_array(d.arcs());
            detail::json_attach_labels(j, d);
            out << j.dump(2) << "\n";
            break;
        }
    }
}

inline void emit_poset(std::ostream& out, const Poset& p, Format f) {
    emit_dag(out, p.reduction(), f);
}

inline void emit_mixed(std::ostream& out, const MixedGraph& m, Format f) {
    switch (f) {
        case Format::EdgeList: {
            out << "# mixed=true\n";
            detail::emit_name_directives(out, m);
            auto arcs = m.arcs();
            auto und = m.undirected_edges();
            out << m.n() << " " << arcs.size() + und.size() << "\n";
            for (auto [u, v] : arcs) out << u << " " << v << " ->\n";
            for (auto [u, v] : und) out << u << " " << v << " --\n";
            break;
        }
        case Format::Dot: {
            out << "digraph g {\n";
            detail::emit_dot_nodes(out, m);
            for (auto [u, v] : m.arcs()) out << "  " << u << " -> " << v << ";\n";
            for (auto [u, v] : m.undirected_edges())
                out << "  " << u << " -> " << v << " [dir=none];\n";
            out << "}\n";
            break;
        }
        case Format::Json: {
            nlohmann::ordered_json j;
            j["n"] = m.n();
            j["arcs"] = detail::json_pair_array(m.arcs());
            j["edges"] = detail::json_pair_array(m.undirected_edges());
            detail::json_attach_labels(j, m);
            out << j.dump(2) << "\n";
            break;
        }
    }
}

inline void emit_pattern(std::ostream& out, const DagPattern& p, Format f) {
    const Dag& b = p.base;
    switch (f) {
        case Format::EdgeList: {
            out << "# pattern=true\n";
            detail::emit_name_directives(out, b);
            out << b.n() << " " << b.arc_count() + p.optional_arcs.size() << "\n";
            for (auto [u, v] : b.arcs()) out << u << " " << v << " ->\n";
            for (auto [u, v] : p.optional_arcs) out << u << " " << v << " ?>\n";
            break;
        }
        case Format::Dot: {
            out << "digraph g {\n";
            detail::emit_dot_nodes(out, b);
            for (auto [u, v] : b.arcs()) out << "  " << u << " -> " << v << ";\n";
            for (auto [u, v] : p.optional_arcs)
                out << "  " << u << " -> " << v << " [style=dashed];\n";
            out << "}\n";
            break;
        }
        case Format::Json: {
            nlohmann::ordered_json j;
            j["n"] = b.n();
            j["arcs"] = detail::json_pair_array(b.arcs());
            j["optional"] = detail::json_pair_array(p.optional_arcs);
            detail::json_attach_labels(j, b);
            out << j.dump(2) << "\n";
            break;
        }
    }
}

}  // namespace migdag

#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "eii/graph.hpp"

namespace eii {

using ordered_json = nlohmann::ordered_json;

namespace detail {

inline std::vector<std::string> split_ws(const std::string& line)
{
    std::istringstream in(line);
    std::vector<std::string> tokens;
    std::string tok;
    while (in >> tok)
        tokens.push_back(tok);
    return tokens;
}

inline std::string strip_comment(const std::string& line)
{
    auto hash = line.find('#');
    return hash == std::string::npos ? line : line.substr(0, hash);
}

} // namespace detail

/// Text format: one edge "u v" per line; a lone label declares a vertex.
/// Blank lines and '#' comments are ignored.
inline Graph parse_graph_text(const std::string& text)
{
    std::istringstream in(text);
    std::string line;
    std::set<Label> vertices;
    std::vector<std::pair<Label, Label>> edges;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto tok = detail::split_ws(detail::strip_comment(line));
        if (tok.empty())
            continue;
        if (tok.size() > 2)
            throw Error(ErrorKind::Parse, "line " + std::to_string(lineno) + ": expected 'u v' or a single vertex");
        vertices.insert(tok.begin(), tok.end());
        if (tok.size() == 2)
            edges.emplace_back(tok[0], tok[1]);
    }
    return make_graph(std::vector<Label>(vertices.begin(), vertices.end()), edges);
}

/// Sorted edges first, then sorted isolated vertices.
inline std::string to_text(const Graph& g)
{
    std::string out;
    std::set<Label> touched;
    for (const Edge& e : g.edges()) {
        out += e.u + " " + e.v + "\n";
        touched.insert(e.u);
        touched.insert(e.v);
    }
    for (const auto& x : g.vertices())
        if (!touched.count(x))
            out += x + "\n";
    return out;
}

inline ordered_json to_json(const Graph& g)
{
    ordered_json j;
    j["vertices"] = g.vertices();
    ordered_json edges = ordered_json::array();
    for (const Edge& e : g.edges())
        edges.push_back({e.u, e.v});
    j["edges"] = std::move(edges);
    return j;
}

inline Graph graph_from_json(const ordered_json& j)
{
    try {
        std::vector<Label> vertices = j.at("vertices").get<std::vector<Label>>();
        std::vector<std::pair<Label, Label>> edges;
        for (const auto& e : j.at("edges")) {
            if (!e.is_array() || e.size() != 2)
                throw Error(ErrorKind::Parse, "edge must be a two-element array");
            edges.emplace_back(e[0].get<Label>(), e[1].get<Label>());
        }
        return make_graph(std::move(vertices), edges);
    } catch (const nlohmann::json::exception& ex) {
        throw Error(ErrorKind::Parse, std::string("graph JSON: ") + ex.what());
    }
}

inline Graph parse_graph_json(const std::string& text)
{
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::exception& ex) {
        throw Error(ErrorKind::Parse, std::string("graph JSON: ") + ex.what());
    }
    return graph_from_json(j);
}

} // namespace eii

#pragma once

#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "eii/complex.hpp"
#include "eii/graph_io.hpp"

namespace eii {

/// Text format: an optional header "ghosts: a b ..." naming vertices that
/// lie in no facet, then one facet per line (labels separated by spaces).
/// No facet lines means the complex {∅}.
inline SimplicialComplex parse_complex_text(const std::string& text)
{
    std::istringstream in(text);
    std::string line;
    std::set<Label> vertices;
    std::vector<std::vector<Label>> facets;
    bool seen_content = false;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string body = detail::strip_comment(line);
        auto tok = detail::split_ws(body);
        if (tok.empty())
            continue;
        if (tok[0] == "ghosts:" || tok[0].rfind("ghosts:", 0) == 0) {
            if (seen_content)
                throw Error(ErrorKind::Parse, "line " + std::to_string(lineno) + ": ghosts header must come first");
            std::string rest = body.substr(body.find("ghosts:") + 7);
            for (const auto& x : detail::split_ws(rest))
                if (!vertices.insert(x).second)
                    throw Error(ErrorKind::DuplicateVertex, "ghost '" + x + "' declared twice");
            seen_content = true;
            continue;
        }
        seen_content = true;
        vertices.insert(tok.begin(), tok.end());
        facets.push_back(tok);
    }
    return make_complex(std::vector<Label>(vertices.begin(), vertices.end()), facets);
}

/// Always emits the ghosts header (possibly empty), then sorted facets.
/// The complex {∅} has no facet lines.
inline std::string to_text(const SimplicialComplex& c)
{
    std::string out = "ghosts:";
    for (const auto& g : c.ghosts())
        out += " " + g;
    out += "\n";
    for (const auto& facet : c.facet_labels()) {
        if (facet.empty())
            continue;
        for (std::size_t i = 0; i < facet.size(); ++i)
            out += (i ? " " : "") + facet[i];
        out += "\n";
    }
    return out;
}

inline ordered_json to_json(const SimplicialComplex& c)
{
    ordered_json j;
    j["vertices"] = c.vertices();
    ordered_json facets = ordered_json::array();
    for (const auto& f : c.facet_labels())
        facets.push_back(f);
    j["facets"] = std::move(facets);
    return j;
}

inline SimplicialComplex complex_from_json(const ordered_json& j)
{
    try {
        return make_complex(j.at("vertices").get<std::vector<Label>>(),
                            j.at("facets").get<std::vector<std::vector<Label>>>());
    } catch (const nlohmann::json::exception& ex) {
        throw Error(ErrorKind::Parse, std::string("complex JSON: ") + ex.what());
    }
}

inline SimplicialComplex parse_complex_json(const std::string& text)
{
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::exception& ex) {
        throw Error(ErrorKind::Parse, std::string("complex JSON: ") + ex.what());
    }
    return complex_from_json(j);
}

} // namespace eii

#pragma once

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "eii/error.hpp"

namespace eii {

using Label = std::string;
using Mask = std::uint64_t;

/// Unordered vertex pair, stored with u < v.
struct Edge {
    Label u;
    Label v;

    Edge() = default;
    Edge(Label a, Label b)
    {
        if (b < a)
            std::swap(a, b);
        u = std::move(a);
        v = std::move(b);
    }

    bool touches(const Label& x) const { return u == x || v == x; }

    friend auto operator<=>(const Edge&, const Edge&) = default;
    friend bool operator==(const Edge&, const Edge&) = default;
};

/// Finite simple graph with string labels. Vertices are kept sorted, so two
/// equal graphs always serialize identically.
class Graph {
public:
    Graph() = default;

    const std::vector<Label>& vertices() const noexcept { return vertices_; }
    const std::set<Edge>& edges() const noexcept { return edges_; }
    std::size_t order() const noexcept { return vertices_.size(); }
    std::size_t size() const noexcept { return edges_.size(); }

    bool contains(const Label& x) const { return std::binary_search(vertices_.begin(), vertices_.end(), x); }
    bool has_edge(const Label& a, const Label& b) const { return a != b && edges_.count(Edge(a, b)) > 0; }

    std::size_t index_of(const Label& x) const
    {
        auto it = std::lower_bound(vertices_.begin(), vertices_.end(), x);
        if (it == vertices_.end() || *it != x)
            throw Error(ErrorKind::UnknownVertex, "vertex '" + x + "' not in graph");
        return static_cast<std::size_t>(it - vertices_.begin());
    }

    /// Neighbourhood bitmasks indexed like vertices(). Limited to 64 vertices.
    std::vector<Mask> adjacency() const
    {
        if (order() > 64)
            throw Error(ErrorKind::TooLarge, "bitmask routines support at most 64 vertices");
        std::vector<Mask> adj(order(), 0);
        for (const Edge& e : edges_) {
            std::size_t a = index_of(e.u), b = index_of(e.v);
            adj[a] |= Mask{1} << b;
            adj[b] |= Mask{1} << a;
        }
        return adj;
    }

    std::vector<Label> labels(Mask m) const
    {
        std::vector<Label> out;
        for (std::size_t i = 0; i < order(); ++i)
            if (m >> i & 1)
                out.push_back(vertices_[i]);
        return out;
    }

    friend bool operator==(const Graph&, const Graph&) = default;

    friend Graph make_graph(std::vector<Label> vertices, const std::vector<std::pair<Label, Label>>& edges);

private:
    std::vector<Label> vertices_;
    std::set<Edge> edges_;
};

inline Graph make_graph(std::vector<Label> vertices, const std::vector<std::pair<Label, Label>>& edges)
{
    std::sort(vertices.begin(), vertices.end());
    auto dup = std::adjacent_find(vertices.begin(), vertices.end());
    if (dup != vertices.end())
        throw Error(ErrorKind::DuplicateVertex, "vertex '" + *dup + "' listed twice");
    Graph g;
    g.vertices_ = std::move(vertices);
    for (const auto& [a, b] : edges) {
        if (a == b)
            throw Error(ErrorKind::LoopEdge, "loop at '" + a + "'");
        if (!g.contains(a))
            throw Error(ErrorKind::UnknownEndpoint, "edge endpoint '" + a + "' is not a vertex");
        if (!g.contains(b))
            throw Error(ErrorKind::UnknownEndpoint, "edge endpoint '" + b + "' is not a vertex");
        g.edges_.insert(Edge(a, b));
    }
    return g;
}

inline Graph make_graph(std::vector<Label> vertices, const std::set<Edge>& edges)
{
    std::vector<std::pair<Label, Label>> pairs;
    pairs.reserve(edges.size());
    for (const Edge& e : edges)
        pairs.emplace_back(e.u, e.v);
    return make_graph(std::move(vertices), pairs);
}

// ---------------------------------------------------------------------------
// Named families

enum class Family { Cycle, Wheel, Star, Complete, Discrete, Path, CompleteBipartite, CompleteMultipartite };

inline const std::vector<std::pair<std::string, Family>>& family_names()
{
    static const std::vector<std::pair<std::string, Family>> names = {
        {"cycle", Family::Cycle},
        {"wheel", Family::Wheel},
        {"star", Family::Star},
        {"complete", Family::Complete},
        {"discrete", Family::Discrete},
        {"path", Family::Path},
        {"complete_bipartite", Family::CompleteBipartite},
        {"complete_multipartite", Family::CompleteMultipartite},
    };
    return names;
}

namespace detail {

inline std::vector<Label> numbered(const std::string& prefix, int first, int count)
{
    std::vector<Label> out;
    for (int i = 0; i < count; ++i)
        out.push_back(prefix + std::to_string(first + i));
    return out;
}

inline void require_params(bool ok, const std::string& what)
{
    if (!ok)
        throw Error(ErrorKind::BadParameter, what);
}

} // namespace detail

/// Builds the named graph with labels x1..xn. The wheel hub and the star
/// centre are x_{n+1}; complete_bipartite uses x1..xm and y1..yn; the parts of
/// complete_multipartite are a1.., b1.., c1.., ...
inline Graph graph_family(Family kind, const std::vector<int>& params)
{
    using detail::numbered;
    using detail::require_params;
    std::vector<std::pair<Label, Label>> edges;
    auto single = [&](int min) {
        require_params(params.size() == 1, "family takes exactly one parameter");
        require_params(params[0] >= min, "family parameter must be at least " + std::to_string(min));
        return params[0];
    };
    switch (kind) {
    case Family::Cycle: {
        int n = single(3);
        auto v = numbered("x", 1, n);
        for (int i = 0; i < n; ++i)
            edges.emplace_back(v[i], v[(i + 1) % n]);
        return make_graph(v, edges);
    }
    case Family::Wheel: {
        int n = single(3);
        auto v = numbered("x", 1, n + 1);
        for (int i = 0; i < n; ++i) {
            edges.emplace_back(v[i], v[(i + 1) % n]);
            edges.emplace_back(v[i], v[n]);
        }
        return make_graph(v, edges);
    }
    case Family::Star: {
        int n = single(1);
        auto v = numbered("x", 1, n + 1);
        for (int i = 0; i < n; ++i)
            edges.emplace_back(v[i], v[n]);
        return make_graph(v, edges);
    }
    case Family::Complete: {
        int n = single(1);
        auto v = numbered("x", 1, n);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                edges.emplace_back(v[i], v[j]);
        return make_graph(v, edges);
    }
    case Family::Discrete: {
        int n = single(1);
        return make_graph(numbered("x", 1, n), edges);
    }
    case Family::Path: {
        int n = single(1);
        auto v = numbered("x", 1, n);
        for (int i = 0; i + 1 < n; ++i)
            edges.emplace_back(v[i], v[i + 1]);
        return make_graph(v, edges);
    }
    case Family::CompleteBipartite: {
        require_params(params.size() == 2, "complete_bipartite takes (m,n)");
        require_params(params[0] >= 1 && params[1] >= 1, "complete_bipartite parts must be positive");
        auto x = numbered("x", 1, params[0]);
        auto y = numbered("y", 1, params[1]);
        for (const auto& a : x)
            for (const auto& b : y)
                edges.emplace_back(a, b);
        x.insert(x.end(), y.begin(), y.end());
        return make_graph(x, edges);
    }
    case Family::CompleteMultipartite: {
        require_params(!params.empty() && params.size() <= 26, "complete_multipartite takes 1..26 part sizes");
        std::vector<std::vector<Label>> parts;
        for (std::size_t p = 0; p < params.size(); ++p) {
            require_params(params[p] >= 1, "complete_multipartite parts must be positive");
            parts.push_back(numbered(std::string(1, static_cast<char>('a' + p)), 1, params[p]));
        }
        std::vector<Label> all;
        for (std::size_t p = 0; p < parts.size(); ++p) {
            for (std::size_t q = p + 1; q < parts.size(); ++q)
                for (const auto& a : parts[p])
                    for (const auto& b : parts[q])
                        edges.emplace_back(a, b);
            all.insert(all.end(), parts[p].begin(), parts[p].end());
        }
        return make_graph(all, edges);
    }
    }
    throw Error(ErrorKind::BadParameter, "unknown family");
}

/// Parses "cycle:5", "complete_bipartite:2,3", ... into a graph.
inline Graph parse_family_spec(const std::string& spec)
{
    auto colon = spec.find(':');
    std::string name = spec.substr(0, colon);
    auto it = std::find_if(family_names().begin(), family_names().end(),
                           [&](const auto& entry) { return entry.first == name; });
    if (it == family_names().end())
        throw Error(ErrorKind::BadParameter, "unknown family '" + name + "'");
    std::vector<int> params;
    if (colon != std::string::npos) {
        std::string rest = spec.substr(colon + 1);
        std::size_t pos = 0;
        while (pos <= rest.size()) {
            std::size_t comma = rest.find(',', pos);
            std::string tok = rest.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
            if (tok.empty() || tok.size() > 6 || tok.find_first_not_of("0123456789") != std::string::npos)
                throw Error(ErrorKind::BadParameter, "bad family parameter '" + tok + "' in '" + spec + "'");
            params.push_back(std::stoi(tok));
            if (comma == std::string::npos)
                break;
            pos = comma + 1;
        }
    }
    return graph_family(it->second, params);
}

inline bool is_family_spec(const std::string& spec)
{
    auto colon = spec.find(':');
    if (colon == std::string::npos)
        return false;
    std::string name = spec.substr(0, colon);
    return std::any_of(family_names().begin(), family_names().end(),
                       [&](const auto& entry) { return entry.first == name; });
}

// ---------------------------------------------------------------------------
// Operations

/// Graph join G*H: disjoint union plus every edge between the two sides.
inline Graph product(const Graph& g, const Graph& h)
{
    for (const auto& x : g.vertices())
        if (h.contains(x))
            throw Error(ErrorKind::VertexCollision, "vertex '" + x + "' appears in both factors");
    std::vector<Label> vertices = g.vertices();
    vertices.insert(vertices.end(), h.vertices().begin(), h.vertices().end());
    std::set<Edge> edges = g.edges();
    edges.insert(h.edges().begin(), h.edges().end());
    for (const auto& x : g.vertices())
        for (const auto& y : h.vertices())
            edges.insert(Edge(x, y));
    return make_graph(std::move(vertices), edges);
}

inline Graph relabel(const Graph& g, const std::string& prefix)
{
    std::vector<Label> vertices;
    for (const auto& x : g.vertices())
        vertices.push_back(prefix + x);
    std::vector<std::pair<Label, Label>> edges;
    for (const Edge& e : g.edges())
        edges.emplace_back(prefix + e.u, prefix + e.v);
    return make_graph(std::move(vertices), edges);
}

inline Graph complement(const Graph& g)
{
    std::vector<std::pair<Label, Label>> edges;
    const auto& v = g.vertices();
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i + 1; j < v.size(); ++j)
            if (!g.has_edge(v[i], v[j]))
                edges.emplace_back(v[i], v[j]);
    return make_graph(v, edges);
}

/// Subgraph induced on W. The deletion G \ U of a vertex set is
/// induced_subgraph(G, V \ U).
inline Graph induced_subgraph(const Graph& g, const std::set<Label>& keep)
{
    for (const auto& x : keep)
        if (!g.contains(x))
            throw Error(ErrorKind::UnknownVertex, "vertex '" + x + "' not in graph");
    std::vector<std::pair<Label, Label>> edges;
    for (const Edge& e : g.edges())
        if (keep.count(e.u) && keep.count(e.v))
            edges.emplace_back(e.u, e.v);
    return make_graph(std::vector<Label>(keep.begin(), keep.end()), edges);
}

inline bool is_complete(const Graph& g)
{
    std::size_t n = g.order();
    return g.size() == n * (n - (n > 0 ? 1 : 0)) / 2;
}

namespace detail {

// Bron–Kerbosch with pivoting over the complement, so the reported cliques
// are the maximal independent sets of the graph.
inline void maximal_independent(const std::vector<Mask>& adj, Mask chosen, Mask candidates, Mask excluded,
                                std::vector<Mask>& out)
{
    if (candidates == 0 && excluded == 0) {
        out.push_back(chosen);
        return;
    }
    // Pivot: vertex of candidates|excluded with most non-neighbours in candidates.
    Mask both = candidates | excluded;
    int pivot = std::countr_zero(both);
    int best = -1;
    for (Mask rest = both; rest; rest &= rest - 1) {
        int u = std::countr_zero(rest);
        int cover = std::popcount(candidates & ~adj[u] & ~(Mask{1} << u));
        if (cover > best) {
            best = cover;
            pivot = u;
        }
    }
    // Branch on candidates that are adjacent to the pivot (or the pivot itself).
    Mask branch = candidates & (adj[pivot] | (Mask{1} << pivot));
    for (; branch; branch &= branch - 1) {
        int v = std::countr_zero(branch);
        Mask bit = Mask{1} << v;
        Mask keep = ~adj[v] & ~bit;
        maximal_independent(adj, chosen | bit, candidates & keep, excluded & keep, out);
        candidates &= ~bit;
        excluded |= bit;
    }
}

} // namespace detail

/// Maximal independent sets as vertex-index masks, sorted ascending.
inline std::vector<Mask> maximal_independent_sets(const Graph& g)
{
    auto adj = g.adjacency();
    std::vector<Mask> out;
    Mask all = g.order() == 64 ? ~Mask{0} : ((Mask{1} << g.order()) - 1);
    detail::maximal_independent(adj, 0, all, 0, out);
    std::sort(out.begin(), out.end());
    return out;
}

using VertexSet = std::vector<Label>;

/// All inclusion-minimal vertex covers; an edgeless graph has the single cover {}.
inline std::set<VertexSet> minimal_vertex_covers(const Graph& g)
{
    std::set<VertexSet> covers;
    Mask all = g.order() == 64 ? ~Mask{0} : ((Mask{1} << g.order()) - 1);
    for (Mask independent : maximal_independent_sets(g))
        covers.insert(g.labels(all & ~independent));
    return covers;
}

/// Minimal covers of G*H assembled from the factors: A ∪ V(H) and V(G) ∪ B.
inline std::set<VertexSet> cover_ideal_product_generators(const Graph& g, const Graph& h)
{
    for (const auto& x : g.vertices())
        if (h.contains(x))
            throw Error(ErrorKind::VertexCollision, "vertex '" + x + "' appears in both factors");
    std::set<VertexSet> out;
    for (VertexSet a : minimal_vertex_covers(g)) {
        a.insert(a.end(), h.vertices().begin(), h.vertices().end());
        std::sort(a.begin(), a.end());
        out.insert(std::move(a));
    }
    for (const VertexSet& b : minimal_vertex_covers(h)) {
        VertexSet c = g.vertices();
        c.insert(c.end(), b.begin(), b.end());
        std::sort(c.begin(), c.end());
        out.insert(std::move(c));
    }
    return out;
}

/// Two edges are 3-disjoint when they share no vertex and no edge of G
/// joins them, i.e. they induce a disconnected subgraph on four vertices.
inline bool three_disjoint(const Graph& g, const Edge& e, const Edge& f)
{
    if (!g.edges().count(e))
        throw Error(ErrorKind::NotAnEdge, "{" + e.u + "," + e.v + "} is not an edge");
    if (!g.edges().count(f))
        throw Error(ErrorKind::NotAnEdge, "{" + f.u + "," + f.v + "} is not an edge");
    if (e.touches(f.u) || e.touches(f.v))
        return false;
    for (const Label* x : {&e.u, &e.v})
        for (const Label* y : {&f.u, &f.v})
            if (g.has_edge(*x, *y))
                return false;
    return true;
}

namespace detail {

struct MatchingSearch {
    std::size_t words = 0;
    std::vector<std::vector<Mask>> compatible; // per edge: edges 3-disjoint from it
    int best = 0;

    static int count(const std::vector<Mask>& s)
    {
        int c = 0;
        for (Mask w : s)
            c += std::popcount(w);
        return c;
    }

    void run(std::vector<Mask> candidates, int size)
    {
        int remaining = count(candidates);
        if (remaining == 0) {
            best = std::max(best, size);
            return;
        }
        if (size + remaining <= best)
            return;
        // Pick the first candidate; branch on taking it or discarding it.
        std::size_t w = 0;
        while (candidates[w] == 0)
            ++w;
        std::size_t e = w * 64 + static_cast<std::size_t>(std::countr_zero(candidates[w]));
        candidates[w] &= candidates[w] - 1;
        std::vector<Mask> with(words);
        for (std::size_t i = 0; i < words; ++i)
            with[i] = candidates[i] & compatible[e][i];
        run(std::move(with), size + 1);
        run(std::move(candidates), size);
    }
};

} // namespace detail

/// a(G): the largest size of a pairwise 3-disjoint edge set (an induced
/// matching), by exhaustive branch and bound. Zero for edgeless graphs.
inline int induced_matching_number(const Graph& g)
{
    std::vector<Edge> edges(g.edges().begin(), g.edges().end());
    if (edges.empty())
        return 0;
    auto adj = g.adjacency();
    std::vector<Mask> ends(edges.size());
    for (std::size_t i = 0; i < edges.size(); ++i)
        ends[i] = (Mask{1} << g.index_of(edges[i].u)) | (Mask{1} << g.index_of(edges[i].v));
    detail::MatchingSearch search;
    search.words = (edges.size() + 63) / 64;
    search.compatible.assign(edges.size(), std::vector<Mask>(search.words, 0));
    for (std::size_t i = 0; i < edges.size(); ++i) {
        Mask closed = ends[i];
        for (Mask m = ends[i]; m; m &= m - 1)
            closed |= adj[static_cast<std::size_t>(std::countr_zero(m))];
        for (std::size_t j = 0; j < edges.size(); ++j)
            if (i != j && (ends[j] & closed) == 0)
                search.compatible[i][j / 64] |= Mask{1} << (j % 64);
    }
    std::vector<Mask> all(search.words, 0);
    for (std::size_t j = 0; j < edges.size(); ++j)
        all[j / 64] |= Mask{1} << (j % 64);
    search.best = 1;
    search.run(std::move(all), 0);
    return search.best;
}

} // namespace eii

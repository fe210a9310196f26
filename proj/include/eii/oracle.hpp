#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "eii/betti.hpp"
#include "eii/binomial.hpp"
#include "eii/complex.hpp"
#include "eii/graph.hpp"
#include "eii/homology.hpp"

// Brute-force counterparts of the closed forms. Nothing here includes the
// formula headers.

namespace eii::oracle {

/// dim_K K[Δ]_j by counting monomials whose support is a face: a face with
/// s vertices carries C(j-1, s-1) monomials of degree j.
inline std::int64_t hilbert_function_count(const SimplicialComplex& c, int j)
{
    if (j < 0)
        throw Error(ErrorKind::BadParameter, "degree must be nonnegative");
    if (j == 0)
        return 1;
    std::int64_t total = 0;
    for (Mask f : c.faces())
        if (f)
            total += binomial(j - 1, std::popcount(f) - 1);
    return total;
}

/// Hochster's formula evaluated literally: every W, an explicit restriction,
/// full reduced homology.
inline BettiTable hochster_betti(const SimplicialComplex& c, const Field& field = Field{})
{
    const std::size_t n = c.vertex_count();
    if (n > 16)
        throw Error(ErrorKind::TooLarge, "naive Hochster is limited to 16 vertices");
    BettiTable t(static_cast<int>(n));
    for (Mask w = 1; w < (Mask{1} << n); ++w) {
        auto labels = c.labels(w);
        auto h = reduced_homology_dims(restriction(c, std::set<Label>(labels.begin(), labels.end())), field);
        const int j = std::popcount(w);
        for (std::size_t idx = 0; idx < h.size(); ++idx) {
            int i = j - static_cast<int>(idx);
            if (h[idx] && i >= 1)
                t.add(i, j, h[idx]);
        }
    }
    return t;
}

/// Largest set of pairwise 3-disjoint edges by plain depth-first enumeration.
inline int induced_matching_brute(const Graph& g)
{
    std::vector<Edge> edges(g.edges().begin(), g.edges().end());
    auto far = [&](const Edge& e, const Edge& f) {
        for (const auto& x : {e.u, e.v})
            for (const auto& y : {f.u, f.v})
                if (x == y || g.has_edge(x, y))
                    return false;
        return true;
    };
    int best = 0;
    std::vector<std::size_t> chosen;
    auto dfs = [&](auto&& self, std::size_t from) -> void {
        best = std::max(best, static_cast<int>(chosen.size()));
        for (std::size_t k = from; k < edges.size(); ++k) {
            bool ok = true;
            for (std::size_t c : chosen)
                ok = ok && far(edges[c], edges[k]);
            if (!ok)
                continue;
            chosen.push_back(k);
            self(self, k + 1);
            chosen.pop_back();
        }
    };
    dfs(dfs, 0);
    return best;
}

/// Erdős–Rényi G(n, num/den) on x1..xn. One draw of std::mt19937_64 per pair
/// (i, j), i < j, in lexicographic order; the edge is kept iff
/// draw * den < num * 2^64, an exact test.
inline Graph random_graph(int n, std::uint64_t num, std::uint64_t den, std::uint64_t seed)
{
    if (n < 1 || n > 12)
        throw Error(ErrorKind::BadParameter, "random_graph needs 1 <= n <= 12");
    if (den == 0 || num > den)
        throw Error(ErrorKind::BadParameter, "edge probability must lie in [0,1]");
    std::mt19937_64 rng(seed);
    std::vector<Label> v;
    for (int i = 1; i <= n; ++i)
        v.push_back("x" + std::to_string(i));
    std::vector<std::pair<Label, Label>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            unsigned __int128 draw = rng();
            if (draw * den < static_cast<unsigned __int128>(num) << 64)
                edges.emplace_back(v[static_cast<std::size_t>(i)], v[static_cast<std::size_t>(j)]);
        }
    return make_graph(v, edges);
}

/// Random complex on x1..xn generated by `facets` random nonempty subsets.
inline SimplicialComplex random_complex(int n, int facets, std::uint64_t seed)
{
    if (n < 1 || n > static_cast<int>(kMaxComplexVertices) || facets < 1)
        throw Error(ErrorKind::BadParameter, "random_complex needs 1 <= n <= 25 and facets >= 1");
    std::mt19937_64 rng(seed);
    std::vector<Label> v;
    for (int i = 1; i <= n; ++i)
        v.push_back("x" + std::to_string(i));
    std::vector<std::vector<Label>> gens;
    for (int k = 0; k < facets; ++k) {
        Mask m = 0;
        while (m == 0)
            m = rng() & detail::full_mask(static_cast<std::size_t>(n));
        gens.emplace_back();
        for (int i = 0; i < n; ++i)
            if (m >> i & 1)
                gens.back().push_back(v[static_cast<std::size_t>(i)]);
    }
    return make_complex(std::move(v), gens);
}

// ---------------------------------------------------------------------------
// Corpus

struct NamedGraph {
    std::string name;
    Graph graph;
};

/// Every named family with parameters up to 6.
inline std::vector<NamedGraph> family_corpus()
{
    std::vector<NamedGraph> out;
    auto add = [&](const std::string& spec) { out.push_back({spec, parse_family_spec(spec)}); };
    for (int n = 3; n <= 6; ++n)
        add("cycle:" + std::to_string(n));
    for (int n = 3; n <= 6; ++n)
        add("wheel:" + std::to_string(n));
    for (const char* fam : {"star", "complete", "discrete", "path"})
        for (int n = 1; n <= 6; ++n)
            add(std::string(fam) + ":" + std::to_string(n));
    for (int m = 1; m <= 6; ++m)
        for (int n = m; n <= 6; ++n)
            add("complete_bipartite:" + std::to_string(m) + "," + std::to_string(n));
    for (const char* parts : {"1,1,1", "1,1,2", "1,2,2", "2,2,2", "1,2,3", "1,1,1,1"})
        add(std::string("complete_multipartite:") + parts);
    return out;
}

/// `count` distinct random graphs on 1..max_n vertices with edge
/// probability 1/4, 1/2 or 3/4.
inline std::vector<NamedGraph> random_corpus(std::uint64_t seed, int count = 50, int max_n = 8)
{
    std::mt19937_64 master(seed);
    std::vector<NamedGraph> out;
    std::set<std::pair<std::vector<Label>, std::set<Edge>>> seen;
    for (int attempt = 0; static_cast<int>(out.size()) < count && attempt < 100 * count; ++attempt) {
        int n = 1 + static_cast<int>(master() % static_cast<std::uint64_t>(max_n));
        std::uint64_t num = 1 + master() % 3;
        std::uint64_t sub = master();
        Graph g = random_graph(n, num, 4, sub);
        if (!seen.insert({g.vertices(), g.edges()}).second)
            continue;
        out.push_back({"random:" + std::to_string(n) + ",p=" + std::to_string(num) + "/4,seed=" + std::to_string(sub),
                       std::move(g)});
    }
    return out;
}

inline std::vector<NamedGraph> graph_corpus(std::uint64_t seed)
{
    auto out = family_corpus();
    auto extra = random_corpus(seed);
    out.insert(out.end(), extra.begin(), extra.end());
    return out;
}

/// Unordered pairs (a <= b) of corpus indices whose orders sum to at most
/// `max_total`.
inline std::vector<std::pair<std::size_t, std::size_t>> corpus_pairs(const std::vector<NamedGraph>& corpus,
                                                                     std::size_t max_total = 12)
{
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t a = 0; a < corpus.size(); ++a)
        for (std::size_t b = a; b < corpus.size(); ++b)
            if (corpus[a].graph.order() + corpus[b].graph.order() <= max_total)
                out.emplace_back(a, b);
    return out;
}

/// Labeled graphs on 1..max_n vertices, each a uniformly random edge subset
/// of K_n.
inline std::vector<NamedGraph> edge_subset_corpus(std::uint64_t seed, int count = 500, int max_n = 7)
{
    std::mt19937_64 rng(seed);
    std::vector<NamedGraph> out;
    for (int k = 0; k < count; ++k) {
        int n = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_n));
        const int pairs = n * (n - 1) / 2;
        std::uint64_t subset = pairs ? rng() & detail::full_mask(static_cast<std::size_t>(pairs)) : 0;
        std::vector<Label> v;
        for (int i = 1; i <= n; ++i)
            v.push_back("x" + std::to_string(i));
        std::vector<std::pair<Label, Label>> edges;
        int bit = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j, ++bit)
                if (subset >> bit & 1)
                    edges.emplace_back(v[static_cast<std::size_t>(i)], v[static_cast<std::size_t>(j)]);
        out.push_back({"subset:" + std::to_string(n) + "," + std::to_string(subset), make_graph(v, edges)});
    }
    return out;
}

} // namespace eii::oracle

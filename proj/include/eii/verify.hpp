#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "eii/betti.hpp"
#include "eii/betti_formulas.hpp"
#include "eii/complex.hpp"
#include "eii/graph.hpp"
#include "eii/hilbert.hpp"
#include "eii/homology.hpp"
#include "eii/oracle.hpp"
#include "eii/parallel.hpp"

namespace eii {

enum class Identity {
    BettiProduct,
    RegPdProduct,
    LinearProduct,
    BettiConeVertex,
    BettiProductStar,
    BettiStar,
    BettiBipartite,
    HochsterOracle,
    BettiVanishing,
    AProduct,
    MatchingOracle,
    KatzmanBound,
    KatzmanExamples,
    ClassAClosure,
    Terai,
    CoverProduct,
    HilbertUnion,
    HilbertComponents,
    HilbertProductComplete,
    HilbertProductDiscrete,
    HilbertCompleteBipartite,
    HilbertMultipartite,
    HilbertUniversalVertex,
    HilbertWheel,
    HilbertStar,
    HilbertProductStar,
    HilbertFunction,
    FhRoundTrip,
    HUnion,
    HUnionEqualDim,
    HCone,
    HJoinSimplex,
    AlternatingBinomial,
    BoundarySquared,
    EulerCharacteristic,
    ConeAcyclic,
    HomologyExamples,
    ExampleUnion,
};

inline const std::vector<std::pair<Identity, std::string>>& identity_names()
{
    static const std::vector<std::pair<Identity, std::string>> names = {
        {Identity::BettiProduct, "betti_product"},
        {Identity::RegPdProduct, "reg_pd_product"},
        {Identity::LinearProduct, "linear_product"},
        {Identity::BettiConeVertex, "betti_cone_vertex"},
        {Identity::BettiProductStar, "betti_product_star"},
        {Identity::BettiStar, "betti_star"},
        {Identity::BettiBipartite, "betti_complete_bipartite"},
        {Identity::HochsterOracle, "hochster_oracle"},
        {Identity::BettiVanishing, "betti_vanishing"},
        {Identity::AProduct, "a_product"},
        {Identity::MatchingOracle, "matching_oracle"},
        {Identity::KatzmanBound, "katzman_bound"},
        {Identity::KatzmanExamples, "katzman_examples"},
        {Identity::ClassAClosure, "class_a_closure"},
        {Identity::Terai, "terai"},
        {Identity::CoverProduct, "cover_product"},
        {Identity::HilbertUnion, "hilbert_union"},
        {Identity::HilbertComponents, "hilbert_components"},
        {Identity::HilbertProductComplete, "hilbert_product_complete"},
        {Identity::HilbertProductDiscrete, "hilbert_product_discrete"},
        {Identity::HilbertCompleteBipartite, "hilbert_complete_bipartite"},
        {Identity::HilbertMultipartite, "hilbert_multipartite"},
        {Identity::HilbertUniversalVertex, "hilbert_universal_vertex"},
        {Identity::HilbertWheel, "hilbert_wheel"},
        {Identity::HilbertStar, "hilbert_star"},
        {Identity::HilbertProductStar, "hilbert_product_star"},
        {Identity::HilbertFunction, "hilbert_function"},
        {Identity::FhRoundTrip, "f_h_round_trip"},
        {Identity::HUnion, "h_union"},
        {Identity::HUnionEqualDim, "h_union_equal_dim"},
        {Identity::HCone, "h_cone"},
        {Identity::HJoinSimplex, "h_join_simplex"},
        {Identity::AlternatingBinomial, "alternating_binomial"},
        {Identity::BoundarySquared, "boundary_squared"},
        {Identity::EulerCharacteristic, "euler_characteristic"},
        {Identity::ConeAcyclic, "cone_acyclic"},
        {Identity::HomologyExamples, "homology_examples"},
        {Identity::ExampleUnion, "example_union"},
    };
    return names;
}

inline const std::string& identity_name(Identity id)
{
    for (const auto& [key, name] : identity_names())
        if (key == id)
            return name;
    throw Error(ErrorKind::BadParameter, "unknown identity");
}

inline Identity parse_identity(const std::string& name)
{
    for (const auto& [key, text] : identity_names())
        if (text == name)
            return key;
    throw Error(ErrorKind::BadParameter, "unknown identity '" + name + "'");
}

struct Failure {
    std::string instance;
    std::string lhs;
    std::string rhs;
};

struct VerificationReport {
    std::string identity_name;
    std::string field;
    std::size_t instances_checked = 0;
    std::vector<Failure> failures;
    std::chrono::nanoseconds elapsed{0};

    bool passed() const { return failures.empty(); }
};

struct Corpus {
    std::uint64_t seed = 0;
    std::vector<oracle::NamedGraph> graphs;
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    std::vector<oracle::NamedGraph> subsets;
};

inline Corpus build_corpus(std::uint64_t seed)
{
    Corpus c;
    c.seed = seed;
    c.graphs = oracle::graph_corpus(seed);
    c.pairs = oracle::corpus_pairs(c.graphs, 12);
    c.subsets = oracle::edge_subset_corpus(seed, 500, 7);
    return c;
}

namespace detail {

inline std::string show(std::int64_t v) { return std::to_string(v); }
inline std::string show(bool v) { return v ? "true" : "false"; }

inline std::string show(const std::vector<std::int64_t>& v)
{
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i)
        out += (i ? "," : "") + std::to_string(v[i]);
    return out + ")";
}

inline std::string show(const HVector& h) { return show(h.entries); }
inline std::string show(const FVector& f) { return show(f.entries); }
inline std::string show(const RationalSeries& s) { return to_text(s); }

inline std::string show(const BettiTable& t)
{
    std::string out = "{";
    bool first = true;
    for (const auto& [key, value] : t.entries()) {
        out += (first ? "" : " ") + std::string("b") + std::to_string(key.first) + "," + std::to_string(key.second) +
               "=" + std::to_string(value);
        first = false;
    }
    return out + "}";
}

template <class T>
std::optional<Failure> expect(const std::string& instance, const T& lhs, const T& rhs)
{
    if (lhs == rhs)
        return std::nullopt;
    return Failure{instance, show(lhs), show(rhs)};
}

/// fn(index, memo) -> optional<Failure>. Instances run in parallel; the
/// failures are reported in instance order.
template <class Fn>
void run_instances(VerificationReport& report, std::size_t count, int threads, Fn&& fn)
{
    std::vector<std::optional<Failure>> slots(count);
    std::vector<HomologyMemo> memos(static_cast<std::size_t>(std::max(1, threads)));
    parallel_for(count, threads, [&](std::size_t i, std::size_t worker) {
        try {
            slots[i] = fn(i, memos[worker]);
        } catch (const Error& e) {
            slots[i] = Failure{"#" + std::to_string(i), "error", e.what()};
        }
    });
    report.instances_checked += count;
    for (auto& s : slots)
        if (s)
            report.failures.push_back(std::move(*s));
}

inline Graph left_factor(const Corpus& c, std::size_t a) { return relabel(c.graphs[a].graph, "g"); }
inline Graph right_factor(const Corpus& c, std::size_t b) { return relabel(c.graphs[b].graph, "h"); }

inline std::string pair_name(const Corpus& c, std::pair<std::size_t, std::size_t> p)
{
    return c.graphs[p.first].name + " * " + c.graphs[p.second].name;
}

inline SimplicialComplex complex_of(const std::string& spec) { return independence_complex(parse_family_spec(spec)); }

/// Δ = ⟨xyztu, tuv, vw⟩ and Δ' = ⟨ab, bc, cd⟩.
inline std::pair<SimplicialComplex, SimplicialComplex> example_pair()
{
    auto first = make_complex({"x", "y", "z", "t", "u", "v", "w"}, {{"x", "y", "z", "t", "u"}, {"t", "u", "v"}, {"v", "w"}});
    auto second = make_complex({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"c", "d"}});
    return {first, second};
}

inline SimplicialComplex hollow_simplex(int n)
{
    auto full = full_simplex(n, "v");
    std::vector<Mask> facets;
    for (int i = 0; i < n; ++i)
        facets.push_back(detail::full_mask(static_cast<std::size_t>(n)) & ~(Mask{1} << i));
    return SimplicialComplex::from_masks(full.vertices(), facets);
}

/// Complexes used by the transform and homology checks: the independence
/// complex of every corpus graph plus a handful of random complexes.
inline std::vector<std::pair<std::string, SimplicialComplex>> complex_corpus(const Corpus& c)
{
    std::vector<std::pair<std::string, SimplicialComplex>> out;
    for (const auto& g : c.graphs)
        out.emplace_back(g.name, independence_complex(g.graph));
    for (int k = 0; k < 20; ++k) {
        int n = 2 + k % 7;
        std::uint64_t s = c.seed * 1000 + static_cast<std::uint64_t>(k);
        out.emplace_back("random_complex:" + std::to_string(n) + ",seed=" + std::to_string(s),
                         oracle::random_complex(n, 1 + k % 5, s));
    }
    return out;
}

} // namespace detail

/// Evaluates both sides of `id` on every relevant instance of `corpus`.
inline VerificationReport verify_identity(Identity id, const Corpus& corpus, const Field& field = Field{}, int threads = 1)
{
    using detail::expect;
    using detail::run_instances;
    using Out = std::optional<Failure>;
    using Memo = detail::HomologyMemo;
    const auto start = std::chrono::steady_clock::now();
    VerificationReport r;
    r.identity_name = identity_name(id);
    r.field = field.name();
    const auto& graphs = corpus.graphs;
    const auto& pairs = corpus.pairs;

    auto factor_tables = [&]() {
        std::vector<BettiTable> tables(graphs.size());
        parallel_for(graphs.size(), threads, [&](std::size_t i, std::size_t) {
            tables[i] = betti_table(independence_complex(graphs[i].graph), field);
        });
        return tables;
    };
    auto product_table = [&](std::pair<std::size_t, std::size_t> p, Memo& memo) {
        auto joint = product(detail::left_factor(corpus, p.first), detail::right_factor(corpus, p.second));
        return betti_table(independence_complex(joint), field, memo);
    };

    switch (id) {
    case Identity::BettiProduct: {
        auto tables = factor_tables();
        run_instances(r, pairs.size(), threads, [&](std::size_t i, Memo& memo) -> Out {
            auto [a, b] = pairs[i];
            auto closed = betti_union_closed(tables[a], static_cast<int>(graphs[a].graph.order()), tables[b],
                                             static_cast<int>(graphs[b].graph.order()));
            return expect(detail::pair_name(corpus, pairs[i]), closed, product_table(pairs[i], memo));
        });
        break;
    }
    case Identity::RegPdProduct: {
        auto tables = factor_tables();
        run_instances(r, pairs.size(), threads, [&](std::size_t i, Memo& memo) -> Out {
            auto [a, b] = pairs[i];
            auto joint = product_table(pairs[i], memo);
            std::vector<std::int64_t> lhs = {regularity(joint), proj_dim(joint)};
            std::vector<std::int64_t> rhs = {
                reg_product(regularity(tables[a]), regularity(tables[b])),
                pd_product(static_cast<int>(graphs[a].graph.order()), static_cast<int>(graphs[b].graph.order()))};
            return expect(detail::pair_name(corpus, pairs[i]), lhs, rhs);
        });
        break;
    }
    case Identity::LinearProduct: {
        auto tables = factor_tables();
        run_instances(r, pairs.size(), threads, [&](std::size_t i, Memo& memo) -> Out {
            auto [a, b] = pairs[i];
            bool lhs = has_linear_resolution(product_table(pairs[i], memo));
            bool rhs = has_linear_resolution(tables[a]) && has_linear_resolution(tables[b]);
            return expect(detail::pair_name(corpus, pairs[i]), lhs, rhs);
        });
        break;
    }
    case Identity::BettiConeVertex: {
        run_instances(r, graphs.size(), threads, [&](std::size_t i, Memo& memo) -> Out {
            const Graph& g = graphs[i].graph;
            auto closed = betti_cone_vertex(betti_table(independence_complex(g), field, memo), static_cast<int>(g.order()));
            auto joint = product(relabel(g, "g"), parse_family_spec("complete:1"));
            return expect(graphs[i].name + " * K_1", closed, betti_table(independence_complex(joint), field, memo));
        });
        break;
    }
    case Identity::BettiProductStar: {
        std::vector<std::pair<std::size_t, int>> cases;
        for (std::size_t g = 0; g < graphs.size(); ++g)
            for (int n = 1; n <= 3; ++n)
                if (graphs[g].graph.order() + static_cast<std::size_t>(n) + 1 <= 12)
                    cases.emplace_back(g, n);
        run_instances(r, cases.size(), threads, [&](std::size_t i, Memo& memo) -> Out {
            auto [gi, n] = cases[i];
            const Graph& g = graphs[gi].graph;
            auto closed = betti_product_star(betti_table(independence_complex(g), field, memo), static_cast<int>(g.order()), n);
            auto joint = product(relabel(g, "g"), relabel(parse_family_spec("star:" + std::to_string(n)), "s"));
            return expect(graphs[gi].name + " * star:" + std::to_string(n), closed,
                          betti_table(independence_complex(joint), field, memo));
        });
        break;
    }
    case Identity::BettiStar: {
        run_instances(r, 6, threads, [&](std::size_t i, Memo& memo) -> Out {
            int m = static_cast<int>(i) + 1;
            BettiTable expected(m + 1);
            for (int k = 1; k <= m; ++k)
                expected.set(k, k + 1, binomial(m, k));
            return expect("star:" + std::to_string(m), betti_table(detail::complex_of("star:" + std::to_string(m)), field, memo),
                          expected);
        });
        break;
    }
    case Identity::BettiBipartite: {
        run_instances(r, 16, threads, [&](std::size_t i, Memo& memo) -> Out {
            int m = static_cast<int>(i) / 4 + 1, n = static_cast<int>(i) % 4 + 1;
            std::string spec = "complete_bipartite:" + std::to_string(m) + "," + std::to_string(n);
            return expect(spec, betti_complete_bipartite(m, n), betti_table(detail::complex_of(spec), field, memo));
        });
        break;
    }
    case Identity::HochsterOracle: {
        run_instances(r, graphs.size(), threads, [&](std::size_t i, Memo& memo) -> Out {
            auto c = independence_complex(graphs[i].graph);
            return expect(graphs[i].name, betti_table(c, field, memo), oracle::hochster_betti(c, field));
        });
        break;
    }
    case Identity::BettiVanishing: {
        run_instances(r, pairs.size(), threads, [&](std::size_t i, Memo& memo) -> Out {
            auto t = product_table(pairs[i], memo);
            const int n = t.variables();
            std::int64_t bad = 0;
            for (const auto& [key, value] : t.entries())
                if (key.second > n || key.first >= n || (key.first == 0 && key.second > 0))
                    bad += value;
            return expect(detail::pair_name(corpus, pairs[i]), bad, std::int64_t{0});
        });
        break;
    }
    case Identity::AProduct: {
        run_instances(r, pairs.size(), threads, [&](std::size_t i, Memo&) -> Out {
            auto [a, b] = pairs[i];
            auto joint = product(detail::left_factor(corpus, a), detail::right_factor(corpus, b));
            return expect(detail::pair_name(corpus, pairs[i]), std::int64_t{induced_matching_number(joint)},
                          std::int64_t{a_product(induced_matching_number(graphs[a].graph),
                                                 induced_matching_number(graphs[b].graph))});
        });
        break;
    }
    case Identity::MatchingOracle: {
        run_instances(r, graphs.size(), threads, [&](std::size_t i, Memo&) -> Out {
            return expect(graphs[i].name, std::int64_t{induced_matching_number(graphs[i].graph)},
                          std::int64_t{oracle::induced_matching_brute(graphs[i].graph)});
        });
        break;
    }
    case Identity::KatzmanBound: {
        run_instances(r, graphs.size(), threads, [&](std::size_t i, Memo&) -> Out {
            auto k = katzman_check(graphs[i].graph, field);
            return expect(graphs[i].name + " reg >= a", k.bound_holds, true);
        });
        break;
    }
    case Identity::KatzmanExamples: {
        // (graph, reg, a)
        static const std::vector<std::tuple<std::string, int, int>> cases = {
            {"cycle:5", 2, 1}, {"path:5", 2, 2}, {"cycle:3*cycle:4", 1, 1}};
        run_instances(r, cases.size(), threads, [&](std::size_t i, Memo&) -> Out {
            const auto& [spec, reg, a] = cases[i];
            Graph g = spec == "cycle:3*cycle:4"
                          ? product(relabel(parse_family_spec("cycle:3"), "g"), relabel(parse_family_spec("cycle:4"), "h"))
                          : parse_family_spec(spec);
            auto k = katzman_check(g, field);
            return expect(spec, std::vector<std::int64_t>{k.reg, k.a}, std::vector<std::int64_t>{reg, a});
        });
        break;
    }
    case Identity::ClassAClosure: {
        auto tables = factor_tables();
        std::vector<bool> in_a(graphs.size());
        for (std::size_t g = 0; g < graphs.size(); ++g)
            in_a[g] = regularity(tables[g]) == induced_matching_number(graphs[g].graph);
        std::vector<std::pair<std::size_t, std::size_t>> eligible;
        for (auto p : pairs)
            if (in_a[p.first] && in_a[p.second])
                eligible.push_back(p);
        run_instances(r, eligible.size(), threads, [&](std::size_t i, Memo& memo) -> Out {
            auto [a, b] = eligible[i];
            auto joint = product(detail::left_factor(corpus, a), detail::right_factor(corpus, b));
            std::int64_t reg = regularity(betti_table(independence_complex(joint), field, memo));
            return expect(detail::pair_name(corpus, eligible[i]), reg, std::int64_t{induced_matching_number(joint)});
        });
        break;
    }
    case Identity::Terai: {
        // Edgeless graphs have the unit cover ideal and a void dual; they
        // are left out.
        std::vector<const oracle::NamedGraph*> cases;
        for (const auto& g : corpus.subsets)
            if (g.graph.size() > 0)
                cases.push_back(&g);
        for (const auto& g : graphs)
            if (g.graph.size() > 0 && g.name.rfind("random:", 0) != 0)
                cases.push_back(&g);
        run_instances(r, cases.size(), threads, [&](std::size_t i, Memo& memo) -> Out {
            const Graph& g = cases[i]->graph;
            auto c = independence_complex(g);
            auto dual = alexander_dual(c);
            std::int64_t reg = regularity(betti_table(c, field, memo));
            std::int64_t pd = proj_dim(betti_table(dual.complex, field, memo)) - 1;
            return expect(cases[i]->name, reg, pd);
        });
        break;
    }
    case Identity::CoverProduct: {
        std::vector<std::pair<std::size_t, std::size_t>> small;
        for (auto p : pairs)
            if (graphs[p.first].graph.order() + graphs[p.second].graph.order() <= 9)
                small.push_back(p);
        run_instances(r, small.size(), threads, [&](std::size_t i, Memo&) -> Out {
            auto [a, b] = small[i];
            auto res = cover_pd_reg_product(detail::left_factor(corpus, a), detail::right_factor(corpus, b), field);
            return expect(detail::pair_name(corpus, small[i]), std::vector<std::int64_t>{res.pd_cover, res.reg_cover},
                          std::vector<std::int64_t>{res.pd_expected, res.reg_expected});
        });
        break;
    }
    case Identity::HilbertUnion: {
        run_instances(r, pairs.size(), threads, [&](std::size_t i, Memo&) -> Out {
            auto [a, b] = pairs[i];
            auto x = independence_complex(detail::left_factor(corpus, a));
            auto y = independence_complex(detail::right_factor(corpus, b));
            return expect(detail::pair_name(corpus, pairs[i]), hilbert_union(hilbert_series(x), hilbert_series(y)),
                          hilbert_series(complex_union(x, y)));
        });
        break;
    }
    case Identity::HilbertComponents: {
        auto complexes = detail::complex_corpus(corpus);
        run_instances(r, complexes.size(), threads, [&](std::size_t i, Memo&) -> Out {
            const auto& c = complexes[i].second;
            if (!c.ghosts().empty())
                return std::nullopt;
            return expect(complexes[i].first, hilbert_components(c), hilbert_series(c));
        });
        break;
    }
    case Identity::HilbertProductComplete: {
        run_instances(r, graphs.size() * 4, threads, [&](std::size_t i, Memo&) -> Out {
            const auto& g = graphs[i / 4];
            int m = static_cast<int>(i % 4);
            auto sg = hilbert_series(independence_complex(g.graph));
            auto hg = h_vector(independence_complex(g.graph));
            Graph joint = relabel(g.graph, "g");
            if (m > 0)
                joint = product(joint, relabel(parse_family_spec("complete:" + std::to_string(m)), "k"));
            auto direct = independence_complex(joint);
            std::string name = g.name + " * complete:" + std::to_string(m);
            if (auto f = expect(name, hilbert_product_complete(sg, m), hilbert_series(direct)))
                return f;
            return expect(name + " h", h_product_complete(hg, m), h_vector(direct));
        });
        break;
    }
    case Identity::HilbertProductDiscrete: {
        run_instances(r, graphs.size() * 4, threads, [&](std::size_t i, Memo&) -> Out {
            const auto& g = graphs[i / 4];
            int m = static_cast<int>(i % 4) + 1;
            auto c = independence_complex(g.graph);
            auto joint = product(relabel(g.graph, "g"), relabel(parse_family_spec("discrete:" + std::to_string(m)), "k"));
            auto direct = independence_complex(joint);
            std::string name = g.name + " * discrete:" + std::to_string(m);
            if (auto f = expect(name, hilbert_product_discrete(hilbert_series(c), m), hilbert_series(direct)))
                return f;
            return expect(name + " h", h_product_discrete(h_vector(c), m), h_vector(direct));
        });
        break;
    }
    case Identity::HilbertCompleteBipartite: {
        run_instances(r, 36, threads, [&](std::size_t i, Memo&) -> Out {
            int m = static_cast<int>(i) / 6 + 1, n = static_cast<int>(i) % 6 + 1;
            auto direct = independence_complex(graph_family(Family::CompleteBipartite, {m, n}));
            std::string name = "complete_bipartite:" + std::to_string(m) + "," + std::to_string(n);
            if (auto f = expect(name, hilbert_complete_bipartite(m, n), hilbert_series(direct)))
                return f;
            return expect(name + " h", h_complete_bipartite(m, n), h_vector(direct));
        });
        break;
    }
    case Identity::HilbertMultipartite: {
        std::vector<std::vector<int>> cases;
        std::function<void(std::vector<int>&, int, int)> grow = [&](std::vector<int>& parts, int min, int total) {
            if (!parts.empty())
                cases.push_back(parts);
            if (parts.size() == 4)
                return;
            for (int p = min; p <= 3 && total + p <= 10; ++p) {
                parts.push_back(p);
                grow(parts, p, total + p);
                parts.pop_back();
            }
        };
        std::vector<int> seed;
        grow(seed, 1, 0);
        run_instances(r, cases.size(), threads, [&](std::size_t i, Memo&) -> Out {
            std::string name = "complete_multipartite:";
            for (std::size_t k = 0; k < cases[i].size(); ++k)
                name += (k ? "," : "") + std::to_string(cases[i][k]);
            auto direct = independence_complex(graph_family(Family::CompleteMultipartite, cases[i]));
            return expect(name, hilbert_multipartite(cases[i]), hilbert_series(direct));
        });
        break;
    }
    case Identity::HilbertUniversalVertex: {
        run_instances(r, graphs.size(), threads, [&](std::size_t i, Memo&) -> Out {
            const auto& g = graphs[i];
            auto joint = product(relabel(g.graph, "g"), make_graph({"u"}, std::vector<std::pair<Label, Label>>{}));
            return expect(g.name + " + universal vertex",
                          hilbert_delete_universal_vertex(hilbert_series(independence_complex(g.graph))),
                          hilbert_series(independence_complex(joint)));
        });
        break;
    }
    case Identity::HilbertWheel: {
        run_instances(r, 4, threads, [&](std::size_t i, Memo&) -> Out {
            std::string n = std::to_string(i + 3);
            return expect("wheel:" + n, hilbert_series(detail::complex_of("wheel:" + n)),
                          hilbert_delete_universal_vertex(hilbert_series(detail::complex_of("cycle:" + n))));
        });
        break;
    }
    case Identity::HilbertStar: {
        run_instances(r, 6, threads, [&](std::size_t i, Memo&) -> Out {
            int n = static_cast<int>(i) + 1;
            return expect("star:" + std::to_string(n), hilbert_star(n),
                          hilbert_series(detail::complex_of("star:" + std::to_string(n))));
        });
        break;
    }
    case Identity::HilbertProductStar: {
        run_instances(r, graphs.size() * 3, threads, [&](std::size_t i, Memo&) -> Out {
            const auto& g = graphs[i / 3];
            int m = static_cast<int>(i % 3) + 1;
            auto joint = product(relabel(g.graph, "g"), relabel(parse_family_spec("star:" + std::to_string(m)), "s"));
            return expect(g.name + " * star:" + std::to_string(m),
                          hilbert_product_star(hilbert_series(independence_complex(g.graph)), m),
                          hilbert_series(independence_complex(joint)));
        });
        break;
    }
    case Identity::HilbertFunction: {
        auto complexes = detail::complex_corpus(corpus);
        run_instances(r, complexes.size(), threads, [&](std::size_t i, Memo&) -> Out {
            const auto& c = complexes[i].second;
            std::vector<std::int64_t> counted;
            for (int j = 0; j <= 10; ++j)
                counted.push_back(oracle::hilbert_function_count(c, j));
            return expect(complexes[i].first, hilbert_series(c).expand(10), counted);
        });
        break;
    }
    case Identity::FhRoundTrip: {
        auto complexes = detail::complex_corpus(corpus);
        run_instances(r, complexes.size(), threads, [&](std::size_t i, Memo&) -> Out {
            auto f = complexes[i].second.f_vector();
            auto h = f_to_h(f);
            if (auto fail = expect(complexes[i].first + " f->h->f", h_to_f(h), f))
                return fail;
            return expect(complexes[i].first + " h->f->h", f_to_h(h_to_f(h)), h);
        });
        break;
    }
    case Identity::HUnion:
    case Identity::HUnionEqualDim: {
        std::vector<std::pair<std::size_t, std::size_t>> cases;
        for (auto p : pairs) {
            bool equal = independence_complex(graphs[p.first].graph).dimension() ==
                         independence_complex(graphs[p.second].graph).dimension();
            if (id == Identity::HUnion || equal)
                cases.push_back(p);
        }
        run_instances(r, cases.size(), threads, [&](std::size_t i, Memo&) -> Out {
            auto [a, b] = cases[i];
            auto x = independence_complex(detail::left_factor(corpus, a));
            auto y = independence_complex(detail::right_factor(corpus, b));
            auto lhs = id == Identity::HUnion ? h_union(h_vector(x), h_vector(y)) : h_union_equal_dim(h_vector(x), h_vector(y));
            return expect(detail::pair_name(corpus, cases[i]), lhs, h_vector(complex_union(x, y)));
        });
        break;
    }
    case Identity::HCone: {
        auto complexes = detail::complex_corpus(corpus);
        run_instances(r, complexes.size(), threads, [&](std::size_t i, Memo&) -> Out {
            const auto& c = complexes[i].second;
            return expect(complexes[i].first, h_cone(h_vector(c)), h_vector(cone(c)));
        });
        break;
    }
    case Identity::HJoinSimplex: {
        auto complexes = detail::complex_corpus(corpus);
        run_instances(r, complexes.size() * 5, threads, [&](std::size_t i, Memo&) -> Out {
            const auto& c = complexes[i / 5].second;
            int n = static_cast<int>(i % 5);
            return expect(complexes[i / 5].first + " join simplex:" + std::to_string(n), h_join_simplex(h_vector(c), n),
                          h_vector(join(c, full_simplex(n, "s"))));
        });
        break;
    }
    case Identity::AlternatingBinomial: {
        run_instances(r, 20 * 21 / 2, threads, [&](std::size_t i, Memo&) -> Out {
            int n = 1, p = static_cast<int>(i) + 1;
            while (p > n) {
                p -= n;
                ++n;
            }
            auto s = alternating_binomial_identity(n, p);
            return expect("n=" + std::to_string(n) + ",p=" + std::to_string(p), s.lhs, s.rhs);
        });
        break;
    }
    case Identity::BoundarySquared: {
        auto complexes = detail::complex_corpus(corpus);
        run_instances(r, complexes.size(), threads, [&](std::size_t i, Memo&) -> Out {
            const auto& c = complexes[i].second;
            for (int k = 0; k < c.dimension(); ++k) {
                auto prod = compose(boundary_matrix(c, k, field), boundary_matrix(c, k + 1, field));
                std::int64_t nonzero = std::count_if(prod.begin(), prod.end(), [](std::int64_t x) { return x != 0; });
                if (auto f = expect(complexes[i].first + " k=" + std::to_string(k), nonzero, std::int64_t{0}))
                    return f;
            }
            return std::nullopt;
        });
        break;
    }
    case Identity::EulerCharacteristic: {
        auto complexes = detail::complex_corpus(corpus);
        run_instances(r, complexes.size(), threads, [&](std::size_t i, Memo&) -> Out {
            const auto& c = complexes[i].second;
            auto f = c.f_vector();
            auto h = reduced_homology_dims(c, field);
            std::int64_t chi_f = 0, chi_h = 0;
            for (int k = -1; k <= f.dim(); ++k)
                chi_f += sign_pow(k) * f.at(k);
            for (std::size_t k = 0; k < h.size(); ++k)
                chi_h += sign_pow(static_cast<int>(k) - 1) * h[k];
            return expect(complexes[i].first, chi_f, chi_h);
        });
        break;
    }
    case Identity::ConeAcyclic: {
        auto complexes = detail::complex_corpus(corpus);
        run_instances(r, complexes.size(), threads, [&](std::size_t i, Memo&) -> Out {
            auto h = reduced_homology_dims(cone(complexes[i].second), field);
            return expect(complexes[i].first, h, std::vector<std::int64_t>(h.size(), 0));
        });
        break;
    }
    case Identity::HomologyExamples: {
        // hollow triangle, hollow tetrahedron, two points, {∅}
        static const std::vector<std::vector<std::int64_t>> expected = {{0, 0, 1}, {0, 0, 0, 1}, {0, 1}, {1}};
        run_instances(r, expected.size(), threads, [&](std::size_t i, Memo&) -> Out {
            SimplicialComplex c;
            std::string name;
            switch (i) {
            case 0: c = detail::hollow_simplex(3), name = "hollow triangle"; break;
            case 1: c = detail::hollow_simplex(4), name = "hollow tetrahedron"; break;
            case 2: c = detail::complex_of("complete:2"), name = "two points"; break;
            default: c = SimplicialComplex{}, name = "{∅}"; break;
            }
            return expect(name, reduced_homology_dims(c, field), expected[i]);
        });
        break;
    }
    case Identity::ExampleUnion: {
        auto [x, y] = detail::example_pair();
        const HVector expected({1, 6, -17, 16, -5, 0});
        run_instances(r, 5, threads, [&](std::size_t i, Memo&) -> Out {
            switch (i) {
            case 0: return expect("h(second)", h_vector(y), HVector({1, 2, 0}));
            case 1: return expect("h_union of the printed h-vectors", h_union(HVector({1, 2, -4, 1, 2, -1}), h_vector(y)), expected);
            case 2: return expect("h_union against the constructed union", h_union(h_vector(x), h_vector(y)),
                                  h_vector(complex_union(x, y)));
            case 3: return expect("h_union_equal_dim on cones to equal dimension",
                                  h_union_equal_dim(h_vector(x), h_join_simplex(h_vector(y), 3)),
                                  h_vector(complex_union(x, join(y, full_simplex(3, "s")))));
            default:
                return expect("hilbert_union", hilbert_union(hilbert_series(x), hilbert_series(y)),
                              hilbert_series(complex_union(x, y)));
            }
        });
        break;
    }
    }
    r.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - start);
    return r;
}

// ---------------------------------------------------------------------------
// Suites

inline const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names = {"all", "betti", "matching", "terai", "hilbert", "transforms", "homology", "example"};
    return names;
}

/// (identity, fields) making up a suite.
inline std::vector<std::pair<Identity, std::vector<Field>>> suite_plan(const std::string& suite)
{
    const Field gf2 = Field::prime(2), gf3 = Field::prime(3), qq = Field::rational();
    using I = Identity;
    std::vector<std::pair<std::string, std::vector<std::pair<Identity, std::vector<Field>>>>> table = {
        {"betti",
         {{I::BettiProduct, {gf2, gf3}},
          {I::RegPdProduct, {gf2, gf3}},
          {I::LinearProduct, {gf2}},
          {I::BettiConeVertex, {gf2}},
          {I::BettiProductStar, {gf2}},
          {I::BettiStar, {gf2}},
          {I::BettiBipartite, {gf2}},
          {I::HochsterOracle, {gf2, gf3}},
          {I::BettiVanishing, {gf2}}}},
        {"matching",
         {{I::AProduct, {gf2}},
          {I::MatchingOracle, {gf2}},
          {I::KatzmanBound, {gf2}},
          {I::KatzmanExamples, {gf2}},
          {I::ClassAClosure, {gf2}}}},
        {"terai", {{I::Terai, {gf2, gf3}}, {I::CoverProduct, {gf2}}}},
        {"hilbert",
         {{I::HilbertUnion, {gf2}},
          {I::HilbertComponents, {gf2}},
          {I::HilbertProductComplete, {gf2}},
          {I::HilbertProductDiscrete, {gf2}},
          {I::HilbertCompleteBipartite, {gf2}},
          {I::HilbertMultipartite, {gf2}},
          {I::HilbertUniversalVertex, {gf2}},
          {I::HilbertWheel, {gf2}},
          {I::HilbertStar, {gf2}},
          {I::HilbertProductStar, {gf2}},
          {I::HilbertFunction, {gf2}}}},
        {"transforms",
         {{I::FhRoundTrip, {gf2}},
          {I::HUnion, {gf2}},
          {I::HUnionEqualDim, {gf2}},
          {I::HCone, {gf2}},
          {I::HJoinSimplex, {gf2}},
          {I::AlternatingBinomial, {gf2}}}},
        {"homology",
         {{I::BoundarySquared, {gf2}},
          {I::EulerCharacteristic, {gf2, gf3, qq}},
          {I::ConeAcyclic, {gf2, gf3, qq}},
          {I::HomologyExamples, {gf2, gf3, qq}}}},
        {"example", {{I::ExampleUnion, {gf2}}}},
    };
    std::vector<std::pair<Identity, std::vector<Field>>> out;
    for (const auto& [name, plan] : table)
        if (suite == "all" || suite == name)
            out.insert(out.end(), plan.begin(), plan.end());
    if (out.empty())
        throw Error(ErrorKind::BadParameter, "unknown suite '" + suite + "'");
    return out;
}

inline std::vector<VerificationReport> run_suite(const std::string& suite, std::uint64_t seed, int threads = 1)
{
    auto plan = suite_plan(suite);
    Corpus corpus = build_corpus(seed);
    std::vector<VerificationReport> out;
    for (const auto& [id, fields] : plan)
        for (const auto& f : fields)
            out.push_back(verify_identity(id, corpus, f, threads));
    return out;
}

inline bool all_passed(const std::vector<VerificationReport>& reports)
{
    return std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed(); });
}

inline std::string to_text(const std::vector<VerificationReport>& reports, bool timing = false)
{
    std::ostringstream out;
    out << std::left << std::setw(28) << "identity" << std::setw(10) << "field" << std::right << std::setw(10)
        << "checked" << std::setw(10) << "failures";
    if (timing)
        out << std::setw(12) << "ms";
    out << "\n";
    std::size_t checked = 0, failed = 0;
    for (const auto& r : reports) {
        out << std::left << std::setw(28) << r.identity_name << std::setw(10) << r.field << std::right << std::setw(10)
            << r.instances_checked << std::setw(10) << r.failures.size();
        if (timing)
            out << std::setw(12) << std::chrono::duration_cast<std::chrono::milliseconds>(r.elapsed).count();
        out << "\n";
        checked += r.instances_checked;
        failed += r.failures.size();
    }
    for (const auto& r : reports)
        for (const auto& f : r.failures)
            out << "FAIL " << r.identity_name << " [" << r.field << "] " << f.instance << ": " << f.lhs
                << " != " << f.rhs << "\n";
    out << "total: " << reports.size() << " checks, " << checked << " instances, " << failed << " failures\n";
    out << (failed ? "FAILED" : "PASSED") << "\n";
    return out.str();
}

inline nlohmann::ordered_json to_json(const std::vector<VerificationReport>& reports, bool timing = false)
{
    nlohmann::ordered_json j;
    j["passed"] = all_passed(reports);
    nlohmann::ordered_json list = nlohmann::ordered_json::array();
    for (const auto& r : reports) {
        nlohmann::ordered_json item;
        item["identity"] = r.identity_name;
        item["field"] = r.field;
        item["instances_checked"] = r.instances_checked;
        nlohmann::ordered_json fails = nlohmann::ordered_json::array();
        for (const auto& f : r.failures)
            fails.push_back({{"instance", f.instance}, {"lhs", f.lhs}, {"rhs", f.rhs}});
        item["failures"] = std::move(fails);
        if (timing)
            item["elapsed_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(r.elapsed).count();
        list.push_back(std::move(item));
    }
    j["reports"] = std::move(list);
    return j;
}

} // namespace eii

#include <catch_amalgamated.hpp>

#include <bit>

#include "eii/complex.hpp"
#include "eii/complex_io.hpp"
#include "eii/oracle.hpp"

using namespace eii;

namespace {

using Facets = std::vector<std::vector<Label>>;

SimplicialComplex cx(std::vector<Label> v, Facets f) { return make_complex(std::move(v), f); }

SimplicialComplex ind(const std::string& spec) { return independence_complex(parse_family_spec(spec)); }

// f-vector by testing every subset of the vertex set against the facets
std::vector<std::int64_t> f_vector_exhaustive(const SimplicialComplex& c)
{
    std::vector<std::int64_t> f(static_cast<std::size_t>(c.dimension() + 2), 0);
    for (Mask s = 0; s < (Mask{1} << c.vertex_count()); ++s)
        for (Mask facet : c.facets())
            if ((s & facet) == s) {
                ++f[static_cast<std::size_t>(std::popcount(s))];
                break;
            }
    return f;
}

} // namespace

TEST_CASE("make_complex keeps maximal facets")
{
    auto c = cx({"a", "b", "c"}, {{"a", "b"}, {"b"}, {"a", "b"}});
    CHECK(c.facet_labels() == Facets{{"a", "b"}});
    CHECK(c.ghosts() == std::vector<Label>{"c"});

    auto e = cx({"a"}, {{}});
    CHECK(e.dimension() == -1);
    CHECK(e.ghosts() == std::vector<Label>{"a"});
    CHECK(e.f_vector().entries == std::vector<std::int64_t>{1});

    auto d = cx({"x", "y", "z", "t", "u", "v", "w"}, {{"x", "y", "z", "t", "u"}, {"t", "u", "v"}, {"v", "w"}});
    CHECK(d.dimension() == 4);
    CHECK(d.facets().size() == 3);

    CHECK_THROWS_AS(cx({"a"}, {{"b"}}), Error);
    CHECK_THROWS_AS(cx({"a", "a"}, {}), Error);
}

TEST_CASE("faces and f-vectors")
{
    CHECK(full_simplex(3).f_vector().entries == std::vector<std::int64_t>{1, 3, 3, 1});
    auto dp = cx({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"c", "d"}});
    CHECK(dp.f_vector().entries == std::vector<std::int64_t>{1, 4, 3});
    CHECK(SimplicialComplex{}.f_vector().entries == std::vector<std::int64_t>{1});

    CHECK(dp.faces_of_dim(1).size() == 3);
    CHECK(dp.faces_of_dim(-1) == std::vector<Mask>{0});
    CHECK(dp.faces_of_dim(2).empty());
    CHECK(dp.faces_of_dim(-2).empty());

    for (const auto& g : oracle::graph_corpus(9)) {
        auto c = independence_complex(g.graph);
        CHECK(c.f_vector().entries == f_vector_exhaustive(c));
    }
}

TEST_CASE("union")
{
    auto two_edges = complex_union(cx({"a", "b"}, {{"a", "b"}}), cx({"c", "d"}, {{"c", "d"}}));
    CHECK(two_edges.facets().size() == 2);
    CHECK(two_edges.f_vector().entries == std::vector<std::int64_t>{1, 4, 2});

    auto d = ind("cycle:5");
    CHECK(complex_union(d, d) == d);

    auto with_empty = complex_union(cx({"q"}, {{}}), d);
    CHECK(with_empty.facet_labels() == d.facet_labels());
    CHECK(with_empty.ghosts() == std::vector<Label>{"q"});
}

TEST_CASE("union of disjoint complexes adds f-vectors")
{
    auto corpus = oracle::graph_corpus(4);
    for (std::size_t a = 0; a < corpus.size(); a += 5)
        for (std::size_t b = a; b < corpus.size(); b += 9) {
            auto x = relabel(independence_complex(corpus[a].graph), "g");
            auto y = relabel(independence_complex(corpus[b].graph), "h");
            auto fx = x.f_vector(), fy = y.f_vector(), fu = complex_union(x, y).f_vector();
            CHECK(fu.at(-1) == 1);
            for (int i = 0; i <= fu.dim(); ++i)
                CHECK(fu.at(i) == fx.at(i) + fy.at(i));
        }
}

TEST_CASE("join, cone and full simplex")
{
    auto edge = join(cx({"a"}, {{"a"}}), cx({"b"}, {{"b"}}));
    CHECK(edge.facet_labels() == Facets{{"a", "b"}});

    auto path = cone(cx({"a", "b"}, {{"a"}, {"b"}}));
    CHECK(path.f_vector().entries == std::vector<std::int64_t>{1, 3, 2});
    CHECK(path.contains("w"));

    CHECK(cone(cx({"w", "w1"}, {{"w"}, {"w1"}})).contains("w2"));
    CHECK(full_simplex(0) == SimplicialComplex{});
    CHECK_THROWS_AS(join(edge, edge), Error);
    CHECK_THROWS_AS(full_simplex(-1), Error);
}

TEST_CASE("join with a simplex follows the binomial convolution")
{
    for (const auto& g : oracle::family_corpus()) {
        auto c = independence_complex(g.graph);
        for (int n = 0; n <= 4; ++n) {
            auto j = join(c, full_simplex(n, "s")).f_vector();
            auto f = c.f_vector();
            for (int i = -1; i <= j.dim(); ++i) {
                std::int64_t expected = 0;
                for (int t = 0; t <= n; ++t)
                    expected += binomial(n, t) * f.at(i - t);
                CHECK(j.at(i) == expected);
            }
        }
    }
}

TEST_CASE("restriction")
{
    auto c = ind("cycle:5");
    CHECK(restriction(c, {"x1", "x2", "x3", "x4", "x5"}) == c);

    auto p3 = cx({"a", "b", "c"}, {{"a", "c"}, {"b"}});
    auto r = restriction(p3, {"a", "b"});
    CHECK(r.facet_labels() == Facets{{"a"}, {"b"}});

    auto e = restriction(c, {});
    CHECK(e.dimension() == -1);
    CHECK_THROWS_AS(restriction(c, {"zz"}), Error);

    for (const auto& g : oracle::graph_corpus(2)) {
        if (g.graph.order() < 3)
            continue;
        std::set<Label> w;
        for (std::size_t i = 0; i < g.graph.order(); i += 2)
            w.insert(g.graph.vertices()[i]);
        CHECK(restriction(independence_complex(g.graph), w) == independence_complex(induced_subgraph(g.graph, w)));
    }
}

TEST_CASE("independence complexes")
{
    auto kn = ind("complete:4");
    CHECK(kn.dimension() == 0);
    CHECK(kn.facets().size() == 4);

    auto km = ind("discrete:3");
    CHECK(km == full_simplex(3));

    auto corpus = oracle::family_corpus();
    for (std::size_t a = 0; a < corpus.size(); a += 3)
        for (std::size_t b = a; b < corpus.size(); b += 4) {
            auto g = relabel(corpus[a].graph, "g");
            auto h = relabel(corpus[b].graph, "h");
            CHECK(independence_complex(product(g, h)) ==
                  complex_union(independence_complex(g), independence_complex(h)));
        }
}

TEST_CASE("Alexander dual")
{
    auto p3 = cx({"a", "b", "c"}, {{"a", "c"}, {"b"}});
    auto d = alexander_dual(p3);
    CHECK_FALSE(d.void_clamped);
    CHECK(d.complex.facet_labels() == Facets{{"a"}, {"c"}});
    CHECK(d.complex.vertices() == p3.vertices());

    auto full = alexander_dual(cx({"a", "b"}, {{"a", "b"}}));
    CHECK(full.void_clamped);
    CHECK(full.complex.dimension() == -1);

    for (const auto& g : oracle::graph_corpus(6)) {
        auto c = independence_complex(g.graph);
        auto once = alexander_dual(c);
        if (once.void_clamped)
            continue;
        CHECK(alexander_dual(once.complex).complex == c);
    }
}

TEST_CASE("connected components")
{
    auto two = connected_components(cx({"a", "b", "c", "d"}, {{"a", "b"}, {"c", "d"}}));
    REQUIRE(two.parts.size() == 2);
    CHECK(two.parts[0].vertices() == std::vector<Label>{"a", "b"});
    CHECK_FALSE(two.dropped_ghosts);

    auto kmn = connected_components(ind("complete_bipartite:2,3"));
    REQUIRE(kmn.parts.size() == 2);
    CHECK(kmn.parts[0] == full_simplex(2));
    CHECK(kmn.parts[1] == full_simplex(3, "y"));

    auto c = ind("cycle:6");
    auto one = connected_components(c);
    REQUIRE(one.parts.size() == 1);
    CHECK(one.parts[0] == c);

    auto ghost = connected_components(cx({"a", "b", "g"}, {{"a", "b"}}));
    CHECK(ghost.dropped_ghosts);
    CHECK(ghost.parts.size() == 1);
}

TEST_CASE("complex text and JSON formats")
{
    auto c = cx({"c", "a", "b", "g"}, {{"b", "a"}, {"c"}});
    CHECK(to_text(c) == "ghosts: g\na b\nc\n");
    CHECK(to_json(c).dump() == R"({"vertices":["a","b","c","g"],"facets":[["a","b"],["c"]]})");

    auto back = parse_complex_text("ghosts: g\n# facets\nb a\nc\n");
    CHECK(back == c);
    CHECK(parse_complex_json(to_json(c).dump()) == c);

    auto empty = parse_complex_text("ghosts: q\n");
    CHECK(empty.dimension() == -1);
    CHECK(to_text(empty) == "ghosts: q\n");
    CHECK(parse_complex_text(to_text(empty)) == empty);

    CHECK_THROWS_AS(parse_complex_text("a b\nghosts: z\n"), Error);
    CHECK_THROWS_AS(parse_complex_json("[1,2]"), Error);
}

TEST_CASE("vertex cap")
{
    CHECK_THROWS_AS(independence_complex(parse_family_spec("discrete:26")), Error);
    bool too_large = false;
    try {
        full_simplex(26);
    } catch (const Error& e) {
        too_large = e.kind() == ErrorKind::TooLarge;
    }
    CHECK(too_large);
}

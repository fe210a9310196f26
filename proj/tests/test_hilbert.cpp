#include <catch_amalgamated.hpp>

#include "eii/hilbert.hpp"
#include "eii/oracle.hpp"

using namespace eii;

namespace {

using V = std::vector<std::int64_t>;
using Facets = std::vector<std::vector<Label>>;

FVector fv(V entries)
{
    FVector f;
    f.entries = std::move(entries);
    return f;
}

Graph fam(const std::string& spec) { return parse_family_spec(spec); }

RationalSeries series_of(const Graph& g) { return hilbert_series(independence_complex(g)); }

std::string n(int k) { return std::to_string(k); }

} // namespace

TEST_CASE("f to h and back")
{
    CHECK(f_to_h(fv({1, 3, 3, 1})) == HVector({1, 0, 0, 0}, 2));
    CHECK(f_to_h(fv({1, 4, 2})) == HVector({1, 2, -1}, 1));
    CHECK(f_to_h(fv({1, 4, 3})) == HVector({1, 2, 0}, 1));
    CHECK(f_to_h(fv({1})) == HVector({1}, -1));
    CHECK(h_to_f(HVector({1, 2, -1})).entries == V{1, 4, 2});

    for (const auto& g : oracle::graph_corpus(5)) {
        auto f = independence_complex(g.graph).f_vector();
        CHECK(h_to_f(f_to_h(f)).entries == f.entries);
    }
}

TEST_CASE("h-vector construction checks the length")
{
    CHECK_THROWS_AS(HVector({1, 2}, 3), Error);
    CHECK(HVector({1, 2, 3}).dim == 1);
    CHECK(HVector({1, 2, 3}).at(7) == 0);
    CHECK(HVector({1, 2, 3}).at(-1) == 0);
}

TEST_CASE("union of equal dimension")
{
    // two disjoint edges
    auto h = h_union_equal_dim(HVector({1, 0, 0}), HVector({1, 0, 0}));
    CHECK(h == HVector({1, 2, -1}));
    CHECK(h == h_vector(make_complex({"a", "b", "c", "d"}, Facets{{"a", "b"}, {"c", "d"}})));
    CHECK_THROWS_AS(h_union_equal_dim(HVector({1, 0}), HVector({1, 0, 0})), Error);
}

TEST_CASE("cone and join with a simplex")
{
    CHECK(h_cone(HVector({1, 2, -1})) == HVector({1, 2, -1, 0}));
    auto c = independence_complex(fam("cycle:5"));
    for (int k = 0; k <= 3; ++k)
        CHECK(h_join_simplex(h_vector(c), k) == h_vector(join(c, full_simplex(k, "s"))));
    CHECK(h_cone(h_vector(c)) == h_vector(cone(c)));
    CHECK_THROWS_AS(h_join_simplex(h_vector(c), -1), Error);
}

TEST_CASE("alternating binomial identity")
{
    CHECK(alternating_binomial_identity(1, 1).lhs == -1);
    CHECK(alternating_binomial_identity(1, 1).holds());
    CHECK(alternating_binomial_identity(4, 2).lhs == 6);
    CHECK(alternating_binomial_identity(20, 13).lhs == -77520);
    CHECK(alternating_binomial_identity(20, 13).rhs == -77520);
    for (int nn = 1; nn <= 30; ++nn)
        for (int p = 1; p <= nn; ++p)
            CHECK(alternating_binomial_identity(nn, p).holds());
    CHECK_THROWS_AS(alternating_binomial_identity(3, 0), Error);
    CHECK_THROWS_AS(alternating_binomial_identity(3, 4), Error);
}

TEST_CASE("union of different dimensions")
{
    auto corpus = oracle::graph_corpus(11);
    for (std::size_t a = 0; a < corpus.size(); a += 3)
        for (std::size_t b = 0; b < corpus.size(); b += 5) {
            auto x = relabel(independence_complex(corpus[a].graph), "g");
            auto y = relabel(independence_complex(corpus[b].graph), "h");
            auto direct = h_vector(complex_union(x, y));
            CHECK(h_union(h_vector(x), h_vector(y)) == direct);
            CHECK(h_union(h_vector(y), h_vector(x)) == direct);
        }
    // an edge and a point
    auto h = h_union(HVector({1, 0, 0}), HVector({1, 0}));
    CHECK(h == h_vector(make_complex({"a", "b", "c"}, Facets{{"a", "b"}, {"c"}})));
    CHECK(h == HVector({1, 1, -1}));
}

TEST_CASE("union formula applied to given h-vectors")
{
    CHECK(h_union(HVector({1, 2, -4, 1, 2, -1}), HVector({1, 2, 0})) == HVector({1, 6, -17, 16, -5, 0}));
}

TEST_CASE("join with a complete graph")
{
    CHECK(h_product_complete(HVector({1, 0}), 1) == HVector({1, 1}));
    CHECK(h_product_complete(HVector({1, 0, 0}), 1) == HVector({1, 1, -1}));
    CHECK(h_vector(independence_complex(product(fam("discrete:2"), relabel(fam("complete:1"), "k")))) ==
          HVector({1, 1, -1}));
    for (const auto& g : oracle::graph_corpus(12))
        for (int m = 1; m <= 3; ++m) {
            auto joint = product(relabel(g.graph, "g"), fam("complete:" + n(m)));
            CHECK(h_product_complete(h_vector(independence_complex(g.graph)), m) ==
                  h_vector(independence_complex(joint)));
        }
    CHECK_THROWS_AS(h_product_complete(HVector({1}), 1), Error);
    CHECK_THROWS_AS(h_product_complete(HVector({1, 0}), -1), Error);
}

TEST_CASE("join with a discrete graph")
{
    // K_1 * K̄_2 is the path x - centre - x: Δ is an edge plus a point
    CHECK(h_product_discrete(HVector({1, 0}), 2) == HVector({1, 1, -1}));
    // K̄_2 * K̄_1
    CHECK(h_product_discrete(HVector({1, 0, 0}), 1) == HVector({1, 1, -1}));
    for (const auto& g : oracle::graph_corpus(14))
        for (int m = 1; m <= 5; ++m) {
            auto joint = product(relabel(g.graph, "g"), fam("discrete:" + n(m)));
            CHECK(h_product_discrete(h_vector(independence_complex(g.graph)), m) ==
                  h_vector(independence_complex(joint)));
        }
    CHECK_THROWS_AS(h_product_discrete(HVector({1, 0}), 0), Error);
}

TEST_CASE("complete bipartite h-vectors")
{
    CHECK(h_complete_bipartite(1, 1) == HVector({1, 1}));
    CHECK(h_complete_bipartite(2, 2) == HVector({1, 2, -1}));
    CHECK(h_complete_bipartite(3, 1) == h_complete_bipartite(1, 3));
    for (int m = 1; m <= 6; ++m)
        for (int k = 1; k <= 6; ++k)
            CHECK(h_complete_bipartite(m, k) ==
                  h_vector(independence_complex(fam("complete_bipartite:" + n(m) + "," + n(k)))));
    CHECK_THROWS_AS(h_complete_bipartite(0, 1), Error);
}

TEST_CASE("rational series arithmetic")
{
    auto s = RationalSeries({1, 1}, 1);
    CHECK(s.expand(3) == V{1, 2, 2, 2});
    CHECK(RationalSeries({1, -1}, 2) == RationalSeries::geometric(1));
    CHECK(RationalSeries({0}, 3).is_zero());
    CHECK(RationalSeries({0}, 3).denom_pow() == 0);
    CHECK((RationalSeries::geometric(2) - RationalSeries::geometric(2)).is_zero());
    CHECK(RationalSeries::shifted_geometric().expand(3) == V{0, 1, 1, 1});
    CHECK(to_text(s) == "(1 + t) / (1-t)^1");
    CHECK(to_text(RationalSeries({2, -1, 0, 3}, 2)) == "(2 - t + 3t^3) / (1-t)^2");
    CHECK(to_text(RationalSeries()) == "(0) / (1-t)^0");
    CHECK(series_from_json(to_json(s)) == s);
    CHECK_THROWS_AS(RationalSeries({1}, -1), Error);
}

TEST_CASE("Hilbert series match face counts")
{
    for (const auto& g : oracle::graph_corpus(15)) {
        auto c = independence_complex(g.graph);
        auto coeffs = hilbert_series(c).expand(8);
        for (int j = 0; j <= 8; ++j)
            CHECK(coeffs[static_cast<std::size_t>(j)] == oracle::hilbert_function_count(c, j));
    }
}

TEST_CASE("series of unions and components")
{
    CHECK(hilbert_series(independence_complex(fam("discrete:2"))) == RationalSeries::geometric(2));
    CHECK(hilbert_series(SimplicialComplex{}) == RationalSeries::constant(1));
    CHECK(hilbert_union(RationalSeries::geometric(1), RationalSeries::geometric(1)) == RationalSeries({1, 1}, 1));
    CHECK(hilbert_product_graphs({}) == RationalSeries::constant(1));

    auto corpus = oracle::graph_corpus(16);
    for (std::size_t a = 0; a < corpus.size(); a += 4)
        for (std::size_t b = 0; b < corpus.size(); b += 7) {
            auto g = relabel(corpus[a].graph, "g"), h = relabel(corpus[b].graph, "h");
            auto joint = series_of(product(g, h));
            CHECK(hilbert_union(series_of(g), series_of(h)) == joint);
            CHECK(hilbert_product_graphs({series_of(g), series_of(h)}) == joint);
            CHECK(hilbert_components(independence_complex(product(g, h))) == joint);
        }
}

TEST_CASE("series of standard families")
{
    CHECK(hilbert_star(1) == RationalSeries({1, 1}, 1));
    CHECK(hilbert_star(3) == RationalSeries({1, 1, -2, 1}, 3));
    for (int k = 1; k <= 6; ++k) {
        CHECK(hilbert_star(k) == series_of(fam("star:" + n(k))));
        CHECK(hilbert_product_complete(RationalSeries::constant(1), k) == series_of(fam("complete:" + n(k))));
        for (int m = 1; m <= 5; ++m)
            CHECK(hilbert_complete_bipartite(m, k) == series_of(fam("complete_bipartite:" + n(m) + "," + n(k))));
    }
    for (int k = 3; k <= 6; ++k)
        CHECK(hilbert_delete_universal_vertex(series_of(fam("cycle:" + n(k)))) == series_of(fam("wheel:" + n(k))));
    CHECK(hilbert_multipartite({2, 1, 3}) == series_of(fam("complete_multipartite:2,1,3")));
    CHECK(hilbert_multipartite({1, 1, 1, 1}) == series_of(fam("complete:4")));
    CHECK_THROWS_AS(hilbert_star(0), Error);
    CHECK_THROWS_AS(hilbert_multipartite({}), Error);
}

TEST_CASE("series of joins with standard graphs")
{
    for (const auto& g : oracle::graph_corpus(18)) {
        auto s = series_of(g.graph);
        auto gg = relabel(g.graph, "g");
        for (int m = 1; m <= 3; ++m) {
            CHECK(hilbert_product_complete(s, m) == series_of(product(gg, fam("complete:" + n(m)))));
            CHECK(hilbert_product_discrete(s, m) == series_of(product(gg, fam("discrete:" + n(m)))));
            CHECK(hilbert_product_star(s, m) == series_of(product(gg, fam("star:" + n(m)))));
        }
    }
    CHECK_THROWS_AS(hilbert_product_discrete(RationalSeries::constant(1), 0), Error);
    CHECK_THROWS_AS(hilbert_product_star(RationalSeries::constant(1), 0), Error);
}

TEST_CASE("vector JSON")
{
    CHECK(to_json(HVector({1, 2, -1})).dump() == "[1,2,-1]");
    CHECK(to_json(fv({1, 4, 2})).dump() == "[1,4,2]");
}

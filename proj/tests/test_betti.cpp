#include <catch_amalgamated.hpp>

#include "eii/betti.hpp"
#include "eii/betti_formulas.hpp"
#include "eii/oracle.hpp"

using namespace eii;

namespace {

Graph fam(const std::string& spec) { return parse_family_spec(spec); }

BettiTable table_of(const std::string& spec, const Field& f = Field{}) { return edge_ring_betti(fam(spec), f); }

BettiTable make_table(int n, std::initializer_list<std::tuple<int, int, std::int64_t>> entries)
{
    BettiTable t(n);
    for (auto [i, j, b] : entries)
        t.set(i, j, b);
    return t;
}

int order(const std::string& spec) { return static_cast<int>(fam(spec).order()); }

} // namespace

TEST_CASE("Betti tables from Hochster's formula")
{
    CHECK(table_of("path:3") == make_table(3, {{1, 2, 2}, {2, 3, 1}}));
    CHECK(table_of("complete:2") == make_table(2, {{1, 2, 1}}));
    CHECK(table_of("cycle:4") == make_table(4, {{1, 2, 4}, {2, 3, 4}, {3, 4, 1}}));
    CHECK(table_of("cycle:5") == make_table(5, {{1, 2, 5}, {2, 3, 5}, {3, 5, 1}}));
    CHECK(table_of("discrete:3") == BettiTable(3));
    CHECK(table_of("cycle:4")(0, 0) == 1);
}

TEST_CASE("Hochster agrees with the literal oracle")
{
    for (const auto& g : oracle::graph_corpus(21))
        for (const auto& f : {Field::prime(2), Field::prime(3)}) {
            auto c = independence_complex(g.graph);
            CHECK(betti_table(c, f) == oracle::hochster_betti(c, f));
        }
    for (int k = 0; k < 20; ++k) {
        auto c = oracle::random_complex(3 + k % 6, 2 + k % 4, 500 + static_cast<std::uint64_t>(k));
        CHECK(betti_table(c) == oracle::hochster_betti(c));
    }
}

TEST_CASE("thread count and shared memo do not change results")
{
    for (const auto& g : oracle::graph_corpus(8)) {
        auto c = independence_complex(g.graph);
        auto one = betti_table(c, Field{}, 1);
        CHECK(betti_table(c, Field{}, 4) == one);
        detail::HomologyMemo memo;
        CHECK(betti_table(c, Field{}, memo) == one);
        CHECK(betti_table(c, Field{}, memo) == one);
    }
}

TEST_CASE("reg, pd, linear resolution")
{
    auto c4 = table_of("cycle:4");
    CHECK(regularity(c4) == 1);
    CHECK(proj_dim(c4) == 3);
    CHECK(has_linear_resolution(c4));

    auto c5 = table_of("cycle:5");
    CHECK(regularity(c5) == 2);
    CHECK(proj_dim(c5) == 3);
    CHECK_FALSE(has_linear_resolution(c5));

    auto zero = betti_table(full_simplex(4));
    CHECK(regularity(zero) == 0);
    CHECK(proj_dim(zero) == 0);
}

TEST_CASE("union closed form")
{
    CHECK(betti_union_closed(table_of("complete:1"), 1, table_of("complete:1"), 1) == make_table(2, {{1, 2, 1}}));
    CHECK(betti_union_closed(table_of("discrete:2"), 2, table_of("discrete:2"), 2) == table_of("cycle:4"));
    auto k4 = betti_union_closed(table_of("cycle:3"), 3, table_of("complete:1"), 1);
    CHECK(k4 == make_table(4, {{1, 2, 6}, {2, 3, 8}, {3, 4, 3}}));
    CHECK(k4 == table_of("complete:4"));
    CHECK_THROWS_AS(betti_union_closed(table_of("cycle:3"), 4, table_of("complete:1"), 1), Error);
}

TEST_CASE("union closed form on small pairs, both fields")
{
    const std::vector<std::string> small = {"complete:1", "complete:2", "discrete:2", "path:3", "cycle:3", "cycle:4"};
    for (const auto& f : {Field::prime(2), Field::prime(3)})
        for (const auto& a : small)
            for (const auto& b : small) {
                auto g = relabel(fam(a), "g"), h = relabel(fam(b), "h");
                auto closed = betti_union_closed(edge_ring_betti(g, f), order(a), edge_ring_betti(h, f), order(b));
                CHECK(closed == edge_ring_betti(product(g, h), f));
            }
}

TEST_CASE("complete bipartite and star")
{
    CHECK(betti_complete_bipartite(1, 1) == make_table(2, {{1, 2, 1}}));
    CHECK(betti_complete_bipartite(2, 2) == table_of("cycle:4"));
    CHECK(betti_complete_bipartite(1, 3) == make_table(4, {{1, 2, 3}, {2, 3, 3}, {3, 4, 1}}));
    for (int m = 1; m <= 4; ++m)
        for (int n = 1; n <= 4; ++n)
            CHECK(betti_complete_bipartite(m, n) ==
                  table_of("complete_bipartite:" + std::to_string(m) + "," + std::to_string(n)));
    for (int m = 1; m <= 6; ++m) {
        auto t = table_of("star:" + std::to_string(m));
        for (int i = 1; i <= m; ++i)
            CHECK(t(i, i + 1) == binomial(m, i));
        CHECK(t.entries().size() == static_cast<std::size_t>(m + 1));
    }
    CHECK_THROWS_AS(betti_complete_bipartite(0, 2), Error);
}

TEST_CASE("cone vertex")
{
    CHECK(betti_cone_vertex(table_of("cycle:3"), 3) == table_of("complete:4"));
    for (int m = 1; m <= 5; ++m)
        CHECK(betti_cone_vertex(table_of("discrete:" + std::to_string(m)), m) == table_of("star:" + std::to_string(m)));
    CHECK(betti_cone_vertex(table_of("complete:1"), 1) == table_of("complete:2"));
    for (int n = 3; n <= 6; ++n)
        CHECK(betti_cone_vertex(table_of("cycle:" + std::to_string(n)), n) == table_of("wheel:" + std::to_string(n)));
}

TEST_CASE("product with a star")
{
    CHECK(betti_product_star(table_of("complete:1"), 1, 1) == make_table(3, {{1, 2, 3}, {2, 3, 2}}));
    CHECK(betti_product_star(table_of("discrete:1"), 1, 1) == table_of("complete:3"));
    auto joint = product(relabel(fam("discrete:2"), "g"), relabel(fam("star:2"), "s"));
    CHECK(betti_product_star(table_of("discrete:2"), 2, 2) == edge_ring_betti(joint));
    CHECK_THROWS_AS(betti_product_star(table_of("discrete:2"), 2, 0), Error);
}

TEST_CASE("pd, reg and a of products")
{
    CHECK(pd_product(2, 2) == 3);
    CHECK(pd_product(2, 2) == proj_dim(table_of("cycle:4")));
    CHECK(reg_product(2, 1) == 2);
    auto c5k1 = product(relabel(fam("cycle:5"), "g"), fam("complete:1"));
    CHECK(regularity(edge_ring_betti(c5k1)) == 2);
    CHECK(a_product(1, 1) == 1);
    // both factors edgeless: the join still has an edge
    CHECK(reg_product(0, 0) == 1);
    CHECK(regularity(table_of("cycle:4")) == 1);
    CHECK(a_product(0, 0) == 1);
    CHECK(induced_matching_number(fam("cycle:4")) == 1);
    CHECK_THROWS_AS(pd_product(0, 3), Error);
}

TEST_CASE("Katzman bound and class A")
{
    auto p5 = katzman_check(fam("path:5"));
    CHECK(p5.reg == 2);
    CHECK(p5.a == 2);
    CHECK(p5.is_class_A);

    auto c5 = katzman_check(fam("cycle:5"));
    CHECK(c5.reg == 2);
    CHECK(c5.a == 1);
    CHECK(c5.bound_holds);
    CHECK_FALSE(c5.is_class_A);

    auto joint = katzman_check(product(relabel(fam("cycle:3"), "g"), relabel(fam("cycle:4"), "h")));
    CHECK(joint.reg == 1);
    CHECK(joint.a == 1);
    CHECK(joint.is_class_A);

    for (const auto& g : oracle::graph_corpus(13))
        CHECK(katzman_check(g.graph).bound_holds);
}

TEST_CASE("class A closure")
{
    CHECK(class_A_closure_check(relabel(fam("cycle:3"), "g"), relabel(fam("cycle:4"), "h")));
    CHECK(class_A_closure_check(relabel(fam("path:3"), "g"), relabel(fam("path:3"), "h")));
    CHECK(class_A_closure_check(relabel(fam("complete:2"), "g"), relabel(fam("complete:2"), "h")));
    try {
        class_A_closure_check(relabel(fam("cycle:5"), "g"), relabel(fam("path:2"), "h"));
        FAIL("expected NotInClassA");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotInClassA);
    }
}

TEST_CASE("Terai duality")
{
    for (const auto& [spec, value] : std::vector<std::pair<std::string, int>>{{"path:3", 1}, {"cycle:4", 1}, {"cycle:5", 2}}) {
        auto t = terai_check(fam(spec));
        CHECK(t.applicable);
        CHECK(t.reg_edge_ring == value);
        CHECK(t.pd_cover_ideal == value);
        CHECK(t.equal);
    }
    CHECK_FALSE(terai_check(fam("discrete:3")).applicable);
    for (const auto& g : oracle::edge_subset_corpus(3, 60, 6)) {
        auto t = terai_check(g.graph, Field::prime(3));
        if (t.applicable)
            CHECK(t.equal);
    }
}

TEST_CASE("cover ideal of a product")
{
    auto k1k1 = cover_pd_reg_product(fam("complete:1"), make_graph({"y"}, std::vector<std::pair<Label, Label>>{}));
    // The cover ideal of K_2 is (a, b): pd 1, reg 1.
    CHECK(k1k1.pd_cover == 1);
    CHECK(k1k1.reg_cover == 1);
    CHECK(k1k1.holds);

    auto c4 = cover_pd_reg_product(relabel(fam("discrete:2"), "g"), relabel(fam("discrete:2"), "h"));
    CHECK(c4.reg_cover == 3);
    CHECK(c4.holds);

    auto p3k1 = cover_pd_reg_product(relabel(fam("path:3"), "g"), fam("complete:1"));
    CHECK(p3k1.reg_cover == 3);
    CHECK(p3k1.holds);
}

TEST_CASE("vanishing of the top homological degree")
{
    for (const auto& g : oracle::graph_corpus(31)) {
        auto t = edge_ring_betti(g.graph);
        const int n = t.variables();
        for (const auto& [key, value] : t.entries()) {
            CHECK(key.second <= n);
            if (n > 0)
                CHECK(key.first < n);
        }
    }
}

TEST_CASE("Betti table serialisation")
{
    auto t = table_of("cycle:5");
    CHECK(to_json(t).dump() ==
          R"({"n":5,"entries":[{"i":0,"j":0,"beta":1},{"i":1,"j":2,"beta":5},{"i":2,"j":3,"beta":5},{"i":3,"j":5,"beta":1}]})");
    CHECK(betti_from_json(to_json(t)) == t);
    CHECK(to_text(t) == "       0 1 2 3\n"
                        "total: 1 5 5 1\n"
                        "    0: 1 . . .\n"
                        "    1: . 5 5 .\n"
                        "    2: . . . 1\n");
}

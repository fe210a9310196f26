#include <catch_amalgamated.hpp>

#include <random>

#include "eii/homology.hpp"
#include "eii/oracle.hpp"

using namespace eii;

namespace {

using V = std::vector<std::int64_t>;

const std::vector<Field> kFields = {Field::prime(2), Field::prime(3), Field::rational()};

SimplicialComplex hollow(int n)
{
    std::vector<std::vector<Label>> facets;
    auto v = full_simplex(n, "v").vertices();
    for (int skip = 0; skip < n; ++skip) {
        facets.emplace_back();
        for (int i = 0; i < n; ++i)
            if (i != skip)
                facets.back().push_back(v[static_cast<std::size_t>(i)]);
    }
    return make_complex(v, facets);
}

std::vector<SimplicialComplex> sample_complexes()
{
    std::vector<SimplicialComplex> out;
    for (const auto& g : oracle::graph_corpus(17))
        out.push_back(independence_complex(g.graph));
    for (int k = 0; k < 30; ++k)
        out.push_back(oracle::random_complex(2 + k % 8, 1 + k % 6, 1000 + static_cast<std::uint64_t>(k)));
    return out;
}

} // namespace

TEST_CASE("boundary matrices")
{
    auto edge = make_complex({"a", "b"}, {{"a", "b"}});
    auto d1 = boundary_matrix(edge, 1);
    REQUIRE(d1.rows.size() == 2);
    REQUIRE(d1.cols.size() == 1);
    CHECK(d1.at(0, 0) == -1);
    CHECK(d1.at(1, 0) == 1);

    auto pts = independence_complex(parse_family_spec("complete:3"));
    auto d0 = boundary_matrix(pts, 0);
    CHECK(d0.rows.size() == 1);
    CHECK(d0.entries == V{1, 1, 1});

    auto tri = hollow(3);
    auto t1 = boundary_matrix(tri, 1, Field::prime(2));
    CHECK(t1.rows.size() == 3);
    CHECK(t1.cols.size() == 3);
    CHECK(t1.rank() == 2);

    CHECK(boundary_matrix(tri, 2).entries.empty());
    CHECK(boundary_matrix(tri, -1).rows.empty());
    CHECK(d1.to_text() == "2 x 1\n-1\n1\n");
}

TEST_CASE("reduced homology examples")
{
    for (const auto& f : kFields) {
        CHECK(reduced_homology_dims(SimplicialComplex{}, f) == V{1});
        CHECK(reduced_homology_dims(make_complex({"a", "b"}, {{"a"}, {"b"}}), f) == V{0, 1});
        CHECK(reduced_homology_dims(hollow(3), f) == V{0, 0, 1});
        CHECK(reduced_homology_dims(hollow(4), f) == V{0, 0, 0, 1});
        for (int n = 1; n <= 5; ++n) {
            auto h = reduced_homology_dims(full_simplex(n), f);
            CHECK(h == V(h.size(), 0));
        }
    }
}

TEST_CASE("torsion shows up in the coefficient field")
{
    // Six-vertex triangulation of the real projective plane.
    auto rp2 = make_complex({"1", "2", "3", "4", "5", "6"},
                            {{"1", "2", "3"}, {"1", "3", "4"}, {"1", "4", "5"}, {"1", "5", "6"}, {"1", "2", "6"},
                             {"2", "3", "5"}, {"2", "4", "5"}, {"2", "4", "6"}, {"3", "4", "6"}, {"3", "5", "6"}});
    CHECK(reduced_homology_dims(rp2, Field::prime(2)) == V{0, 0, 1, 1});
    CHECK(reduced_homology_dims(rp2, Field::prime(3)) == V{0, 0, 0, 0});
    CHECK(reduced_homology_dims(rp2, Field::rational()) == V{0, 0, 0, 0});
}

TEST_CASE("boundary squared is zero")
{
    for (const auto& c : sample_complexes())
        for (int k = 0; k < c.dimension(); ++k) {
            auto prod = compose(boundary_matrix(c, k), boundary_matrix(c, k + 1));
            CHECK(std::all_of(prod.begin(), prod.end(), [](std::int64_t x) { return x == 0; }));
        }
    CHECK_THROWS_AS(compose(boundary_matrix(hollow(3), 1), boundary_matrix(hollow(4), 2)), Error);
}

TEST_CASE("Euler characteristic and cones")
{
    for (const auto& c : sample_complexes()) {
        auto f = c.f_vector();
        std::int64_t chi = 0;
        for (int k = -1; k <= f.dim(); ++k)
            chi += sign_pow(k) * f.at(k);
        for (const auto& field : kFields) {
            auto h = reduced_homology_dims(c, field);
            std::int64_t alt = 0;
            for (std::size_t k = 0; k < h.size(); ++k)
                alt += sign_pow(static_cast<int>(k) - 1) * h[k];
            CHECK(alt == chi);
            auto hc = reduced_homology_dims(cone(c), field);
            CHECK(hc == V(hc.size(), 0));
        }
    }
}

TEST_CASE("H0 of a disjoint union")
{
    auto corpus = oracle::family_corpus();
    for (std::size_t a = 0; a < corpus.size(); a += 4)
        for (std::size_t b = a; b < corpus.size(); b += 6) {
            auto x = relabel(independence_complex(corpus[a].graph), "g");
            auto y = relabel(independence_complex(corpus[b].graph), "h");
            auto hx = reduced_homology_dims(x), hy = reduced_homology_dims(y);
            auto hu = reduced_homology_dims(complex_union(x, y));
            CHECK(hu[1] == hx[1] + hy[1] + 1);
        }
}

TEST_CASE("rank routines agree")
{
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t rows = 1 + rng() % 9, cols = 1 + rng() % 9;
        std::vector<std::int64_t> m(rows * cols);
        for (auto& x : m)
            x = static_cast<std::int64_t>(rng() % 3) - 1;
        std::vector<linalg::BitVector> columns(cols, linalg::BitVector(1, 0));
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c)
                if (m[r * cols + c] % 2)
                    columns[c][0] |= Mask{1} << r;
        CHECK(linalg::rank_gf2(columns, rows) == linalg::rank_mod_p(m, rows, cols, 2));
        CHECK(linalg::rank_mod_p(m, rows, cols, 3) <= std::min(rows, cols));
        CHECK(linalg::rank_rational(m, rows, cols) >= linalg::rank_mod_p(m, rows, cols, 3));
    }
    CHECK(linalg::rank_rational({2}, 1, 1) == 1);
    CHECK(linalg::rank_mod_p({2}, 1, 1, 2) == 0);
    CHECK(linalg::rank_rational({1, 2, 2, 4}, 2, 2) == 1);
    CHECK(linalg::rank_rational({1, 2, 3, 4}, 2, 2) == 2);
    CHECK(linalg::rank_mod_p({1, 2, 3, 4}, 2, 2, 2) == 1);
}

TEST_CASE("fields")
{
    CHECK(Field{}.is_gf2());
    CHECK(parse_field("gf3").characteristic() == 3);
    CHECK(parse_field("rational").kind() == Field::Kind::Rational);
    CHECK(parse_field("gf2").name() == "gf2");
    CHECK_THROWS_AS(parse_field("gf4"), Error);
    CHECK_THROWS_AS(parse_field("reals"), Error);
}

#pragma once

#include <algorithm>
#include <cstdint>
#include <string>

#include "eii/betti.hpp"
#include "eii/binomial.hpp"
#include "eii/complex.hpp"
#include "eii/graph.hpp"

namespace eii {

namespace detail {

inline void require_vertex_count(const BettiTable& t, int count, const char* name)
{
    if (count < 0 || t.variables() != count)
        throw Error(ErrorKind::BadParameter, std::string(name) + " = " + std::to_string(count) +
                                                 " does not match the table's " + std::to_string(t.variables()) +
                                                 " variables");
}

} // namespace detail

/// Betti numbers of a vertex-disjoint union Δ1 ∪ Δ2 (equivalently of a graph
/// join G*H) from the factor tables, Δ1 on m vertices and Δ2 on n:
///
///   β_{i,d} = Σ_{j=0}^{d-2} [ C(n,j) β_{i-j,d-j}(Δ1) + C(m,j) β_{i-j,d-j}(Δ2) ]
///             + [d = i+1] Σ_{j=1}^{d-1} C(m,j) C(n,d-j)
///
/// for i >= 1. Valid for complexes without ghost vertices.
inline BettiTable betti_union_closed(const BettiTable& t1, int m, const BettiTable& t2, int n)
{
    detail::require_vertex_count(t1, m, "m");
    detail::require_vertex_count(t2, n, "n");
    const int total = m + n;
    BettiTable out(total);
    for (int i = 1; i <= total; ++i)
        for (int d = 2; d <= total; ++d) {
            std::int64_t beta = 0;
            for (int j = 0; j <= d - 2; ++j)
                beta += binomial(n, j) * t1.positive(i - j, d - j) + binomial(m, j) * t2.positive(i - j, d - j);
            if (d == i + 1)
                for (int j = 1; j <= d - 1; ++j)
                    beta += binomial(m, j) * binomial(n, d - j);
            out.set(i, d, beta);
        }
    return out;
}

/// K_{m,n}: β_{i,i+1} = Σ_{j=1}^{i} C(m,j) C(n,i-j+1); all else zero.
inline BettiTable betti_complete_bipartite(int m, int n)
{
    if (m < 1 || n < 1)
        throw Error(ErrorKind::BadParameter, "complete bipartite sides must be positive");
    BettiTable out(m + n);
    for (int i = 1; i < m + n; ++i) {
        std::int64_t beta = 0;
        for (int j = 1; j <= i; ++j)
            beta += binomial(m, j) * binomial(n, i - j + 1);
        out.set(i, i + 1, beta);
    }
    return out;
}

/// G*K_1 (a vertex adjacent to all m vertices of G):
/// β_{i,d} = β_{i,d}(G) + β_{i-1,d-1}(G) + [d = i+1] C(m,i).
inline BettiTable betti_cone_vertex(const BettiTable& tg, int m)
{
    detail::require_vertex_count(tg, m, "m");
    BettiTable out(m + 1);
    for (int i = 1; i <= m + 1; ++i)
        for (int d = 2; d <= m + 1; ++d) {
            std::int64_t beta = tg.positive(i, d) + tg.positive(i - 1, d - 1);
            if (d == i + 1)
                beta += binomial(m, i);
            out.set(i, d, beta);
        }
    return out;
}

/// G*S_n with |V(G)| = m:
/// β_{i,d} = Σ_{j=0}^{d-2} C(n+1,j) β_{i-j,d-j}(G)
///           + [d = i+1] ( C(m+n+1,i+1) + C(m+n,i) - C(m+1,i+1) - C(n+1,i+1) ).
inline BettiTable betti_product_star(const BettiTable& tg, int m, int n)
{
    detail::require_vertex_count(tg, m, "m");
    if (n < 1)
        throw Error(ErrorKind::BadParameter, "star needs n >= 1 leaves");
    const int total = m + n + 1;
    BettiTable out(total);
    for (int i = 1; i <= total; ++i)
        for (int d = 2; d <= total; ++d) {
            std::int64_t beta = 0;
            for (int j = 0; j <= d - 2; ++j)
                beta += binomial(n + 1, j) * tg.positive(i - j, d - j);
            if (d == i + 1)
                beta += binomial(m + n + 1, i + 1) + binomial(m + n, i) - binomial(m + 1, i + 1) - binomial(n + 1, i + 1);
            out.set(i, d, beta);
        }
    return out;
}

/// pd(R/I(G*H)) = m + n - 1.
inline int pd_product(int m, int n)
{
    if (m < 1 || n < 1)
        throw Error(ErrorKind::BadParameter, "factors must have at least one vertex");
    return m + n - 1;
}

/// reg(R/I(G*H)) from the factor regularities. G*H always has an edge, so
/// the value is at least 1 even when both factors are edgeless (reg 0).
inline int reg_product(int reg_g, int reg_h) { return std::max({reg_g, reg_h, 1}); }

/// a(G*H) = max(a(G), a(H)), again at least 1: any single edge of G*H is
/// an induced matching, including the edges between the factors.
inline int a_product(int a_g, int a_h) { return std::max({a_g, a_h, 1}); }

// ---------------------------------------------------------------------------
// Theorem checks; every side is computed from scratch.

inline BettiTable edge_ring_betti(const Graph& g, const Field& field = Field{}, int threads = 1)
{
    return betti_table(independence_complex(g), field, threads);
}

struct KatzmanResult {
    int reg = 0;
    int a = 0;
    bool bound_holds = false;
    bool is_class_A = false;
};

/// reg(R/I(G)) >= a(G), and membership in the class where equality holds.
inline KatzmanResult katzman_check(const Graph& g, const Field& field = Field{}, int threads = 1)
{
    KatzmanResult r;
    r.reg = regularity(edge_ring_betti(g, field, threads));
    r.a = induced_matching_number(g);
    r.bound_holds = r.reg >= r.a;
    r.is_class_A = r.reg == r.a;
    return r;
}

/// For G, H both with reg = a, recomputes reg and a of G*H and reports
/// whether they agree.
inline bool class_A_closure_check(const Graph& g, const Graph& h, const Field& field = Field{}, int threads = 1)
{
    if (!katzman_check(g, field, threads).is_class_A)
        throw Error(ErrorKind::NotInClassA, "first factor has reg != a");
    if (!katzman_check(h, field, threads).is_class_A)
        throw Error(ErrorKind::NotInClassA, "second factor has reg != a");
    auto joint = katzman_check(product(g, h), field, threads);
    return joint.is_class_A;
}

struct TeraiResult {
    int reg_edge_ring = 0;
    int pd_cover_ideal = 0;
    bool equal = false;
    /// False for edgeless graphs: the cover ideal is the unit ideal and the
    /// dual complex is void (clamped to {∅}), so the comparison is skipped.
    bool applicable = true;
};

/// reg(R/I(G)) against pd(I(G)^∨) = pd(R/I_{Δ_G^∨}) - 1.
inline TeraiResult terai_check(const Graph& g, const Field& field = Field{}, int threads = 1)
{
    auto complex = independence_complex(g);
    auto dual = alexander_dual(complex);
    TeraiResult r;
    r.reg_edge_ring = regularity(betti_table(complex, field, threads));
    r.pd_cover_ideal = proj_dim(betti_table(dual.complex, field, threads)) - 1;
    r.applicable = !dual.void_clamped;
    r.equal = r.reg_edge_ring == r.pd_cover_ideal;
    return r;
}

struct CoverProductResult {
    int pd_cover = 0;    ///< pd(I(G*H)^∨), from the dual complex
    int reg_cover = 0;   ///< reg(I(G*H)^∨), from the dual complex
    int pd_expected = 0; ///< max of the factors' cover-ideal pds, floored at 1
    int reg_expected = 0; ///< m + n - 1
    bool holds = false;
};

/// pd and reg of the cover ideal of G*H against the factor data. An
/// edgeless factor has the unit cover ideal, whose pd is taken as 0 (its
/// edge ring has reg 0).
inline CoverProductResult cover_pd_reg_product(const Graph& g, const Graph& h, const Field& field = Field{},
                                               int threads = 1)
{
    auto factor_pd = [&](const Graph& x) {
        auto dual = alexander_dual(independence_complex(x));
        return dual.void_clamped ? 0 : proj_dim(betti_table(dual.complex, field, threads)) - 1;
    };
    auto joint = alexander_dual(independence_complex(product(g, h)));
    auto table = betti_table(joint.complex, field, threads);
    CoverProductResult r;
    r.pd_cover = proj_dim(table) - 1;
    r.reg_cover = regularity(table) + 1;
    r.pd_expected = std::max({factor_pd(g), factor_pd(h), 1});
    r.reg_expected = static_cast<int>(g.order() + h.order()) - 1;
    r.holds = r.pd_cover == r.pd_expected && r.reg_cover == r.reg_expected;
    return r;
}

} // namespace eii

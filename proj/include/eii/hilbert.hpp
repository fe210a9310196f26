#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "eii/binomial.hpp"
#include "eii/complex.hpp"
#include "eii/series.hpp"

namespace eii {

/// (h_0, ..., h_{d+1}) of a complex of dimension d. Entries may be negative;
/// h_k reads as 0 outside 0..d+1.
struct HVector {
    std::vector<std::int64_t> entries;
    int dim = -1;

    HVector() = default;
    HVector(std::vector<std::int64_t> values, int d) : entries(std::move(values)), dim(d)
    {
        if (d < -1 || entries.size() != static_cast<std::size_t>(d + 2))
            throw Error(ErrorKind::DimensionMismatch, "h-vector of dimension " + std::to_string(d) + " needs " +
                                                          std::to_string(d + 2) + " entries");
    }
    /// Dimension inferred from the length.
    explicit HVector(std::vector<std::int64_t> values)
        : HVector(values, static_cast<int>(values.size()) - 2)
    {
    }

    std::int64_t at(int k) const
    {
        if (k < 0 || k > dim + 1)
            return 0;
        return entries[static_cast<std::size_t>(k)];
    }

    friend bool operator==(const HVector&, const HVector&) = default;
};

/// h_k = Σ_{i=0}^{k} (-1)^{k-i} C(d+1-i, k-i) f_{i-1}
inline HVector f_to_h(const FVector& f)
{
    const int d = f.dim();
    std::vector<std::int64_t> h(static_cast<std::size_t>(d + 2), 0);
    for (int k = 0; k <= d + 1; ++k)
        for (int i = 0; i <= k; ++i)
            h[static_cast<std::size_t>(k)] += sign_pow(k - i) * binomial(d + 1 - i, k - i) * f.at(i - 1);
    return HVector(std::move(h), d);
}

/// f_{k-1} = Σ_{i=0}^{k} C(d+1-i, k-i) h_i
inline FVector h_to_f(const HVector& h)
{
    const int d = h.dim;
    FVector f;
    f.entries.assign(static_cast<std::size_t>(d + 2), 0);
    for (int k = 0; k <= d + 1; ++k)
        for (int i = 0; i <= k; ++i)
            f.entries[static_cast<std::size_t>(k)] += binomial(d + 1 - i, k - i) * h.at(i);
    return f;
}

inline HVector h_vector(const SimplicialComplex& c) { return f_to_h(c.f_vector()); }

/// Disjoint union of two complexes of the same dimension d:
/// h_k = h_k(Δ) + h_k(Δ') - (-1)^k C(d+1, k).
inline HVector h_union_equal_dim(const HVector& a, const HVector& b)
{
    if (a.dim != b.dim)
        throw Error(ErrorKind::DimensionMismatch, "dimensions " + std::to_string(a.dim) + " and " + std::to_string(b.dim));
    const int d = a.dim;
    std::vector<std::int64_t> h(static_cast<std::size_t>(d + 2));
    for (int k = 0; k <= d + 1; ++k)
        h[static_cast<std::size_t>(k)] = a.at(k) + b.at(k) - sign_pow(k) * binomial(d + 1, k);
    return HVector(std::move(h), d);
}

/// Joining with a full simplex on n vertices appends n zeros.
inline HVector h_join_simplex(const HVector& h, int n)
{
    if (n < 0)
        throw Error(ErrorKind::BadParameter, "simplex size must be nonnegative");
    std::vector<std::int64_t> out = h.entries;
    out.resize(out.size() + static_cast<std::size_t>(n), 0);
    return HVector(std::move(out), h.dim + n);
}

inline HVector h_cone(const HVector& h) { return h_join_simplex(h, 1); }

struct IdentitySides {
    std::int64_t lhs = 0;
    std::int64_t rhs = 0;
    bool holds() const { return lhs == rhs; }
};

/// Σ_{t=1}^{p} (-1)^{p-t+1} C(n,t) C(n-t,p-t)  versus  (-1)^p C(n,p).
inline IdentitySides alternating_binomial_identity(int n, int p)
{
    if (p < 1 || p > n)
        throw Error(ErrorKind::BadParameter, "need 1 <= p <= n");
    IdentitySides s;
    for (int t = 1; t <= p; ++t)
        s.lhs += sign_pow(p - t + 1) * binomial(n, t) * binomial(n - t, p - t);
    s.rhs = sign_pow(p) * binomial(n, p);
    return s;
}

/// h-vector of a vertex-disjoint union in terms of the two h-vectors. With
/// dim Δ' <= dim Δ = d and n = d - dim Δ':
///
///   h_k = h_k(Δ) + Σ_{p} (-1)^p C(n,p) h_{k-p}(Δ') - (-1)^k C(d+1,k),
///
/// p running over max(0, k-d'-1)..min(n, k), where the other terms vanish.
/// Arguments are swapped when needed.
inline HVector h_union(const HVector& first, const HVector& second)
{
    const HVector& big = first.dim >= second.dim ? first : second;
    const HVector& small = first.dim >= second.dim ? second : first;
    const int d = big.dim, dp = small.dim, n = d - dp;
    std::vector<std::int64_t> h(static_cast<std::size_t>(d + 2));
    for (int k = 0; k <= d + 1; ++k) {
        std::int64_t v = big.at(k) - sign_pow(k) * binomial(d + 1, k);
        for (int p = std::max(0, k - dp - 1); p <= std::min(n, k); ++p)
            v += sign_pow(p) * binomial(n, p) * small.at(k - p);
        h[static_cast<std::size_t>(k)] = v;
    }
    return HVector(std::move(h), d);
}

/// h-vector of G*K_m from h(G), d = dim Δ_G >= 0:
/// h_k = h_k(G) + (-1)^{k-1} C(d, k-1) m.
inline HVector h_product_complete(const HVector& hg, int m)
{
    if (m < 0)
        throw Error(ErrorKind::BadParameter, "m must be nonnegative");
    if (hg.dim < 0)
        throw Error(ErrorKind::BadParameter, "G must have at least one vertex");
    const int d = hg.dim;
    std::vector<std::int64_t> h(static_cast<std::size_t>(d + 2));
    for (int k = 0; k <= d + 1; ++k)
        h[static_cast<std::size_t>(k)] = hg.at(k) + (k >= 1 ? sign_pow(k - 1) * binomial(d, k - 1) * m : 0);
    return HVector(std::move(h), d);
}

/// h-vector of G*K̄_m (for k > 0; h_0 = 1), d = dim Δ_G:
///   m <= d+1:  h_k(G) - (-1)^k [ C(d+1,k) - C(d-m+1,k) ]
///   m >  d+1:  Σ_{p=0}^{m-d-1} (-1)^p C(m-d-1,p) h_{k-p}(G) - (-1)^k C(m,k)
inline HVector h_product_discrete(const HVector& hg, int m)
{
    if (m < 1)
        throw Error(ErrorKind::BadParameter, "m must be positive");
    const int d = hg.dim;
    const int dim = std::max(d, m - 1);
    std::vector<std::int64_t> h(static_cast<std::size_t>(dim + 2));
    h[0] = 1;
    for (int k = 1; k <= dim + 1; ++k) {
        std::int64_t v = 0;
        if (m <= d + 1) {
            v = hg.at(k) - sign_pow(k) * (binomial(d + 1, k) - binomial(d - m + 1, k));
        } else {
            for (int p = 0; p <= m - d - 1; ++p)
                v += sign_pow(p) * binomial(m - d - 1, p) * hg.at(k - p);
            v -= sign_pow(k) * binomial(m, k);
        }
        h[static_cast<std::size_t>(k)] = v;
    }
    return HVector(std::move(h), dim);
}

/// h_k(K_{m,n}) = (-1)^{k+1} [ C(n,k) - C(n-m,k) ] for k > 0, h_0 = 1, after
/// ordering the sides so that m <= n.
inline HVector h_complete_bipartite(int m, int n)
{
    if (m < 1 || n < 1)
        throw Error(ErrorKind::BadParameter, "complete bipartite sides must be positive");
    if (m > n)
        std::swap(m, n);
    std::vector<std::int64_t> h(static_cast<std::size_t>(n + 1));
    h[0] = 1;
    for (int k = 1; k <= n; ++k)
        h[static_cast<std::size_t>(k)] = sign_pow(k + 1) * (binomial(n, k) - binomial(n - m, k));
    return HVector(std::move(h), n - 1);
}

// ---------------------------------------------------------------------------
// Hilbert series

inline RationalSeries series_from_h(const HVector& h) { return RationalSeries(h.entries, h.dim + 1); }

/// H_{K[Δ]}(t) = h-polynomial / (1-t)^{d+1}, in lowest terms.
inline RationalSeries hilbert_series(const SimplicialComplex& c) { return series_from_h(h_vector(c)); }

/// Vertex-disjoint union: H(Δ) + H(Δ') - 1.
inline RationalSeries hilbert_union(const RationalSeries& a, const RationalSeries& b) { return (a + b).sub_scalar(1); }

/// Σ_j H_j - (r-1); with r = 0 this is the series 1 of {∅}.
inline RationalSeries hilbert_product_graphs(const std::vector<RationalSeries>& parts)
{
    RationalSeries sum;
    for (const auto& s : parts)
        sum = sum + s;
    return sum.sub_scalar(static_cast<std::int64_t>(parts.size()) - 1);
}

/// Series assembled from the connected components.
inline RationalSeries hilbert_components(const SimplicialComplex& c)
{
    std::vector<RationalSeries> parts;
    for (const auto& part : connected_components(c).parts)
        parts.push_back(hilbert_series(part));
    return hilbert_product_graphs(parts);
}

/// H(G*K_m) = H(G) + m t/(1-t).
inline RationalSeries hilbert_product_complete(const RationalSeries& sg, int m)
{
    if (m < 0)
        throw Error(ErrorKind::BadParameter, "m must be nonnegative");
    return sg + RationalSeries::shifted_geometric().scale(m);
}

/// Given H(G \ x) for a vertex x adjacent to all others, returns H(G).
inline RationalSeries hilbert_delete_universal_vertex(const RationalSeries& s)
{
    return s + RationalSeries::shifted_geometric();
}

/// H(S_n) = (1 + t(1-t)^{n-1}) / (1-t)^n.
inline RationalSeries hilbert_star(int n)
{
    if (n < 1)
        throw Error(ErrorKind::BadParameter, "star needs n >= 1");
    Polynomial num = detail::times_one_minus_t({0, 1}, n - 1);
    if (num.empty())
        num.push_back(0);
    num[0] += 1;
    return RationalSeries(std::move(num), n);
}

/// H(G*K̄_m) = H(G) + 1/(1-t)^m - 1.
inline RationalSeries hilbert_product_discrete(const RationalSeries& sg, int m)
{
    if (m < 1)
        throw Error(ErrorKind::BadParameter, "m must be positive");
    return (sg + RationalSeries::geometric(m)).sub_scalar(1);
}

/// H(K_{m,n}) = 1/(1-t)^n + 1/(1-t)^m - 1.
inline RationalSeries hilbert_complete_bipartite(int m, int n)
{
    if (m < 1 || n < 1)
        throw Error(ErrorKind::BadParameter, "complete bipartite sides must be positive");
    return (RationalSeries::geometric(n) + RationalSeries::geometric(m)).sub_scalar(1);
}

/// H(K_{n_1,...,n_r}) = Σ 1/(1-t)^{n_i} - (r-1).
inline RationalSeries hilbert_multipartite(const std::vector<int>& parts)
{
    if (parts.empty())
        throw Error(ErrorKind::BadParameter, "need at least one part");
    std::vector<RationalSeries> terms;
    for (int n : parts) {
        if (n < 1)
            throw Error(ErrorKind::BadParameter, "parts must be positive");
        terms.push_back(RationalSeries::geometric(n));
    }
    return hilbert_product_graphs(terms);
}

/// H(G*S_m) = H(G) + 1/(1-t)^m + 1/(1-t) - 2.
inline RationalSeries hilbert_product_star(const RationalSeries& sg, int m)
{
    if (m < 1)
        throw Error(ErrorKind::BadParameter, "star needs m >= 1");
    return (sg + RationalSeries::geometric(m) + RationalSeries::geometric(1)).sub_scalar(2);
}

inline nlohmann::ordered_json to_json(const HVector& h) { return nlohmann::ordered_json(h.entries); }
inline nlohmann::ordered_json to_json(const FVector& f) { return nlohmann::ordered_json(f.entries); }

} // namespace eii

#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "eii/error.hpp"
#include "eii/graph.hpp"

namespace eii {

/// Largest ambient vertex set a complex may carry; face enumeration is 2^n.
inline constexpr std::size_t kMaxComplexVertices = 25;

/// Face counts (f_{-1}, f_0, ..., f_d), with f_{-1} = 1.
struct FVector {
    std::vector<std::int64_t> entries;

    int dim() const { return static_cast<int>(entries.size()) - 2; }
    /// f_i for i >= -1; zero outside the stored range.
    std::int64_t at(int i) const
    {
        if (i < -1 || i + 1 >= static_cast<int>(entries.size()))
            return 0;
        return entries[static_cast<std::size_t>(i + 1)];
    }

    friend bool operator==(const FVector&, const FVector&) = default;
};

namespace detail {

inline Mask full_mask(std::size_t n) { return n >= 64 ? ~Mask{0} : ((Mask{1} << n) - 1); }

/// Keeps only the inclusion-maximal masks; result sorted ascending.
inline std::vector<Mask> maximal_sets(std::vector<Mask> sets)
{
    std::sort(sets.begin(), sets.end(), [](Mask a, Mask b) {
        int pa = std::popcount(a), pb = std::popcount(b);
        return pa != pb ? pa > pb : a < b;
    });
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    std::vector<Mask> kept;
    for (Mask s : sets) {
        bool dominated = false;
        for (Mask k : kept)
            if ((s & ~k) == 0) {
                dominated = true;
                break;
            }
        if (!dominated)
            kept.push_back(s);
    }
    std::sort(kept.begin(), kept.end());
    return kept;
}

} // namespace detail

/// Simplicial complex given by its facets over an ambient vertex list.
/// Ambient vertices that lie in no face ("ghosts") are allowed. The complex
/// {∅} is stored as the single empty facet; the void complex never occurs.
class SimplicialComplex {
public:
    SimplicialComplex() : facets_{0} {}

    /// Facets as masks over vertices(); the list is reduced to its maximal
    /// elements. Vertices must be sorted and distinct.
    static SimplicialComplex from_masks(std::vector<Label> vertices, std::vector<Mask> facets)
    {
        if (vertices.size() > kMaxComplexVertices)
            throw Error(ErrorKind::TooLarge, "complex has " + std::to_string(vertices.size()) + " vertices; limit is " +
                                                 std::to_string(kMaxComplexVertices));
        SimplicialComplex c;
        c.vertices_ = std::move(vertices);
        Mask all = detail::full_mask(c.vertices_.size());
        for (Mask f : facets)
            if (f & ~all)
                throw Error(ErrorKind::UnknownVertex, "facet mask outside the vertex set");
        if (facets.empty())
            facets.push_back(0);
        c.facets_ = detail::maximal_sets(std::move(facets));
        return c;
    }

    const std::vector<Label>& vertices() const noexcept { return vertices_; }
    const std::vector<Mask>& facets() const noexcept { return facets_; }
    std::size_t vertex_count() const noexcept { return vertices_.size(); }

    int dimension() const
    {
        int d = -1;
        for (Mask f : facets_)
            d = std::max(d, std::popcount(f) - 1);
        return d;
    }

    bool is_face(Mask m) const
    {
        return std::any_of(facets_.begin(), facets_.end(), [m](Mask f) { return (m & ~f) == 0; });
    }

    /// Union of all facets; vertices outside it are ghosts.
    Mask support() const { return std::accumulate(facets_.begin(), facets_.end(), Mask{0}, std::bit_or<>{}); }

    std::vector<Label> ghosts() const { return labels(detail::full_mask(vertex_count()) & ~support()); }

    std::size_t index_of(const Label& x) const
    {
        auto it = std::lower_bound(vertices_.begin(), vertices_.end(), x);
        if (it == vertices_.end() || *it != x)
            throw Error(ErrorKind::UnknownVertex, "vertex '" + x + "' not in complex");
        return static_cast<std::size_t>(it - vertices_.begin());
    }

    bool contains(const Label& x) const { return std::binary_search(vertices_.begin(), vertices_.end(), x); }

    Mask mask_of(const std::vector<Label>& face) const
    {
        Mask m = 0;
        for (const auto& x : face)
            m |= Mask{1} << index_of(x);
        return m;
    }

    std::vector<Label> labels(Mask m) const
    {
        std::vector<Label> out;
        for (std::size_t i = 0; i < vertices_.size(); ++i)
            if (m >> i & 1)
                out.push_back(vertices_[i]);
        return out;
    }

    /// Every face, ordered by size and then by mask.
    std::vector<Mask> faces() const
    {
        std::vector<Mask> out;
        if (facets_.size() == 1) {
            Mask f = facets_[0];
            for (Mask s = f;; s = (s - 1) & f) {
                out.push_back(s);
                if (s == 0)
                    break;
            }
        } else {
            std::vector<bool> seen(std::size_t{1} << vertex_count(), false);
            for (Mask f : facets_)
                for (Mask s = f;; s = (s - 1) & f) {
                    if (!seen[s]) {
                        seen[s] = true;
                        out.push_back(s);
                    }
                    if (s == 0)
                        break;
                }
        }
        std::sort(out.begin(), out.end(), [](Mask a, Mask b) {
            int pa = std::popcount(a), pb = std::popcount(b);
            return pa != pb ? pa < pb : a < b;
        });
        return out;
    }

    /// Faces of dimension k (k+1 vertices); empty when k is out of range.
    std::vector<Mask> faces_of_dim(int k) const
    {
        std::vector<Mask> out;
        if (k < -1 || k > dimension())
            return out;
        for (Mask f : faces())
            if (std::popcount(f) == k + 1)
                out.push_back(f);
        return out;
    }

    FVector f_vector() const
    {
        FVector f;
        f.entries.assign(static_cast<std::size_t>(dimension() + 2), 0);
        for (Mask s : faces())
            ++f.entries[static_cast<std::size_t>(std::popcount(s))];
        return f;
    }

    /// Facets as sorted label lists, in lexicographic order.
    std::vector<std::vector<Label>> facet_labels() const
    {
        std::vector<std::vector<Label>> out;
        for (Mask f : facets_)
            out.push_back(labels(f));
        std::sort(out.begin(), out.end());
        return out;
    }

    friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

private:
    std::vector<Label> vertices_;
    std::vector<Mask> facets_;
};

inline SimplicialComplex make_complex(std::vector<Label> vertices, const std::vector<std::vector<Label>>& facets)
{
    std::sort(vertices.begin(), vertices.end());
    auto dup = std::adjacent_find(vertices.begin(), vertices.end());
    if (dup != vertices.end())
        throw Error(ErrorKind::DuplicateVertex, "vertex '" + *dup + "' listed twice");
    if (vertices.size() > kMaxComplexVertices)
        throw Error(ErrorKind::TooLarge, "complex has " + std::to_string(vertices.size()) + " vertices");
    auto index = [&](const Label& x) {
        auto it = std::lower_bound(vertices.begin(), vertices.end(), x);
        if (it == vertices.end() || *it != x)
            throw Error(ErrorKind::UnknownVertex, "facet vertex '" + x + "' is not in the vertex list");
        return static_cast<std::size_t>(it - vertices.begin());
    };
    std::vector<Mask> masks;
    for (const auto& facet : facets) {
        Mask m = 0;
        for (const auto& x : facet)
            m |= Mask{1} << index(x);
        masks.push_back(m);
    }
    return SimplicialComplex::from_masks(std::move(vertices), std::move(masks));
}

namespace detail {

/// Re-expresses masks of `from` over the sorted vertex list `to`.
inline std::vector<Mask> remap(const SimplicialComplex& from, const std::vector<Label>& to)
{
    std::vector<std::size_t> pos(from.vertex_count());
    for (std::size_t i = 0; i < from.vertex_count(); ++i)
        pos[i] = static_cast<std::size_t>(std::lower_bound(to.begin(), to.end(), from.vertices()[i]) - to.begin());
    std::vector<Mask> out;
    for (Mask f : from.facets()) {
        Mask m = 0;
        for (Mask r = f; r; r &= r - 1)
            m |= Mask{1} << pos[static_cast<std::size_t>(std::countr_zero(r))];
        out.push_back(m);
    }
    return out;
}

inline std::vector<Label> merged_vertices(const SimplicialComplex& a, const SimplicialComplex& b)
{
    std::vector<Label> out;
    std::set_union(a.vertices().begin(), a.vertices().end(), b.vertices().begin(), b.vertices().end(),
                   std::back_inserter(out));
    return out;
}

inline void require_disjoint(const SimplicialComplex& a, const SimplicialComplex& b)
{
    for (const auto& x : a.vertices())
        if (b.contains(x))
            throw Error(ErrorKind::VertexCollision, "vertex '" + x + "' shared by both complexes");
}

} // namespace detail

inline bool vertex_disjoint(const SimplicialComplex& a, const SimplicialComplex& b)
{
    return std::none_of(a.vertices().begin(), a.vertices().end(), [&](const Label& x) { return b.contains(x); });
}

/// Faces of either complex, on the union of the vertex sets.
inline SimplicialComplex complex_union(const SimplicialComplex& a, const SimplicialComplex& b)
{
    auto vertices = detail::merged_vertices(a, b);
    auto facets = detail::remap(a, vertices);
    auto more = detail::remap(b, vertices);
    facets.insert(facets.end(), more.begin(), more.end());
    return SimplicialComplex::from_masks(std::move(vertices), std::move(facets));
}

inline SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b)
{
    detail::require_disjoint(a, b);
    auto vertices = detail::merged_vertices(a, b);
    auto fa = detail::remap(a, vertices);
    auto fb = detail::remap(b, vertices);
    std::vector<Mask> facets;
    for (Mask x : fa)
        for (Mask y : fb)
            facets.push_back(x | y);
    return SimplicialComplex::from_masks(std::move(vertices), std::move(facets));
}

/// Full simplex on x1..xn (prefix configurable); n = 0 gives {∅}.
inline SimplicialComplex full_simplex(int n, const std::string& prefix = "x")
{
    if (n < 0)
        throw Error(ErrorKind::BadParameter, "full simplex size must be nonnegative");
    std::vector<Label> v = detail::numbered(prefix, 1, n);
    std::sort(v.begin(), v.end());
    return SimplicialComplex::from_masks(std::move(v), {detail::full_mask(static_cast<std::size_t>(n))});
}

/// cone(Δ) = Δ * {apex}. An empty apex picks the first unused of w, w1, w2, ...
inline SimplicialComplex cone(const SimplicialComplex& c, Label apex = {})
{
    if (apex.empty()) {
        apex = "w";
        for (int i = 1; c.contains(apex); ++i)
            apex = "w" + std::to_string(i);
    }
    return join(c, SimplicialComplex::from_masks({apex}, {1}));
}

/// Δ|_W: faces of Δ inside W, on the vertex set W.
inline SimplicialComplex restriction(const SimplicialComplex& c, const std::set<Label>& keep)
{
    Mask w = 0;
    for (const auto& x : keep)
        w |= Mask{1} << c.index_of(x);
    std::vector<Label> vertices(keep.begin(), keep.end());
    std::vector<std::size_t> pos;
    for (std::size_t i = 0; i < c.vertex_count(); ++i)
        if (w >> i & 1)
            pos.push_back(i);
    std::vector<Mask> facets;
    for (Mask f : c.facets()) {
        Mask m = 0;
        for (std::size_t k = 0; k < pos.size(); ++k)
            if (f >> pos[k] & 1)
                m |= Mask{1} << k;
        facets.push_back(m);
    }
    return SimplicialComplex::from_masks(std::move(vertices), std::move(facets));
}

/// Faces are the independent sets of G; facets the maximal ones.
inline SimplicialComplex independence_complex(const Graph& g)
{
    if (g.order() > kMaxComplexVertices)
        throw Error(ErrorKind::TooLarge, "graph has " + std::to_string(g.order()) + " vertices; limit is " +
                                             std::to_string(kMaxComplexVertices));
    return SimplicialComplex::from_masks(g.vertices(), maximal_independent_sets(g));
}

struct AlexanderDual {
    SimplicialComplex complex;
    /// Set when the true dual is void (Δ is the full simplex on its vertices)
    /// and {∅} was returned in its place.
    bool void_clamped = false;
};

/// Δ^∨ = { F : V \ F is not a face of Δ }, on the same vertex set. Its
/// facets are the complements of the minimal nonfaces of Δ.
inline AlexanderDual alexander_dual(const SimplicialComplex& c)
{
    const std::size_t n = c.vertex_count();
    const Mask all = detail::full_mask(n);
    std::vector<bool> face(std::size_t{1} << n, false);
    for (Mask f : c.faces())
        face[f] = true;
    std::vector<Mask> facets;
    for (Mask s = 0; s <= all; ++s) {
        if (face[s])
            continue;
        bool minimal = true;
        for (Mask r = s; r; r &= r - 1)
            if (!face[s & ~(r & -r)]) {
                minimal = false;
                break;
            }
        if (minimal)
            facets.push_back(all & ~s);
        if (s == all)
            break;
    }
    AlexanderDual out;
    out.void_clamped = facets.empty();
    out.complex = SimplicialComplex::from_masks(c.vertices(), std::move(facets));
    return out;
}

struct Components {
    std::vector<SimplicialComplex> parts;
    /// Set when ghost vertices were present and left out of every part.
    bool dropped_ghosts = false;
};

/// Connected components (facets linked through shared vertices), each on its
/// own vertices, ordered by smallest label. {∅} has no components.
inline Components connected_components(const SimplicialComplex& c)
{
    Components out;
    out.dropped_ghosts = !c.ghosts().empty();
    std::vector<Mask> groups;
    for (Mask f : c.facets()) {
        if (f == 0)
            continue;
        Mask merged = f;
        std::vector<Mask> rest;
        for (Mask g : groups) {
            if (g & merged)
                merged |= g;
            else
                rest.push_back(g);
        }
        rest.push_back(merged);
        groups = std::move(rest);
    }
    std::sort(groups.begin(), groups.end(), [](Mask a, Mask b) { return std::countr_zero(a) < std::countr_zero(b); });
    for (Mask g : groups) {
        std::set<Label> keep;
        for (const auto& x : c.labels(g))
            keep.insert(x);
        out.parts.push_back(restriction(c, keep));
    }
    return out;
}

inline SimplicialComplex relabel(const SimplicialComplex& c, const std::string& prefix)
{
    std::vector<Label> vertices;
    for (const auto& x : c.vertices())
        vertices.push_back(prefix + x);
    std::vector<std::vector<Label>> facets;
    for (const auto& f : c.facet_labels()) {
        facets.emplace_back();
        for (const auto& x : f)
            facets.back().push_back(prefix + x);
    }
    return make_complex(std::move(vertices), facets);
}

} // namespace eii

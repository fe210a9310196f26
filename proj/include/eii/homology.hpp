#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "eii/complex.hpp"
#include "eii/field.hpp"
#include "eii/linalg.hpp"

namespace eii {

/// Matrix of ∂_k : C_k -> C_{k-1}. Rows are the (k-1)-faces, columns the
/// k-faces, both in ascending mask order. Entries are the integer signs;
/// they are reduced into `field` only when a rank is taken.
struct BoundaryMatrix {
    std::vector<Mask> rows;
    std::vector<Mask> cols;
    std::vector<std::int64_t> entries; // row-major
    Field field;

    std::int64_t at(std::size_t r, std::size_t c) const { return entries[r * cols.size() + c]; }

    std::size_t rank() const
    {
        if (rows.empty() || cols.empty())
            return 0;
        switch (field.kind()) {
        case Field::Kind::Rational:
            return linalg::rank_rational(entries, rows.size(), cols.size());
        case Field::Kind::Prime:
            if (field.is_gf2()) {
                std::vector<linalg::BitVector> columns(cols.size(), linalg::BitVector(linalg::words_for(rows.size()), 0));
                for (std::size_t r = 0; r < rows.size(); ++r)
                    for (std::size_t c = 0; c < cols.size(); ++c)
                        if (at(r, c) % 2 != 0)
                            columns[c][r / 64] |= Mask{1} << (r % 64);
                return linalg::rank_gf2(std::move(columns), rows.size());
            }
            return linalg::rank_mod_p(entries, rows.size(), cols.size(), field.characteristic());
        }
        return 0;
    }

    /// Dense row-major dump, one row per line.
    std::string to_text() const
    {
        std::ostringstream out;
        out << rows.size() << " x " << cols.size() << "\n";
        for (std::size_t r = 0; r < rows.size(); ++r) {
            for (std::size_t c = 0; c < cols.size(); ++c)
                out << (c ? " " : "") << at(r, c);
            out << "\n";
        }
        return out.str();
    }
};

/// Integer product a·b, used to check ∂_{k-1}∘∂_k = 0.
inline std::vector<std::int64_t> compose(const BoundaryMatrix& a, const BoundaryMatrix& b)
{
    if (a.cols.size() != b.rows.size())
        throw Error(ErrorKind::DimensionMismatch, "boundary matrices do not compose");
    std::vector<std::int64_t> out(a.rows.size() * b.cols.size(), 0);
    for (std::size_t i = 0; i < a.rows.size(); ++i)
        for (std::size_t k = 0; k < a.cols.size(); ++k)
            if (std::int64_t x = a.at(i, k))
                for (std::size_t j = 0; j < b.cols.size(); ++j)
                    out[i * b.cols.size() + j] += x * b.at(k, j);
    return out;
}

namespace detail {

/// Faces grouped by size (index s holds the faces with s vertices), each
/// group ascending. `facets` are masks over at most kMaxComplexVertices bits.
inline std::vector<std::vector<Mask>> faces_by_size(const std::vector<Mask>& facets)
{
    Mask support = 0;
    int top = 0;
    for (Mask f : facets) {
        support |= f;
        top = std::max(top, std::popcount(f));
    }
    std::vector<std::vector<Mask>> out(static_cast<std::size_t>(top + 1));
    std::size_t width = support ? 64 - static_cast<std::size_t>(std::countl_zero(support)) : 0;
    std::vector<bool> seen(std::size_t{1} << width, false);
    for (Mask f : facets)
        for (Mask s = f;; s = (s - 1) & f) {
            if (!seen[s]) {
                seen[s] = true;
                out[static_cast<std::size_t>(std::popcount(s))].push_back(s);
            }
            if (s == 0)
                break;
        }
    for (auto& group : out)
        std::sort(group.begin(), group.end());
    return out;
}

/// ∂ from faces of size s to faces of size s-1; sign (-1)^p for dropping
/// the p-th vertex in increasing index order.
inline BoundaryMatrix boundary_between(const std::vector<Mask>& lower, const std::vector<Mask>& upper, const Field& field)
{
    BoundaryMatrix m{lower, upper, std::vector<std::int64_t>(lower.size() * upper.size(), 0), field};
    for (std::size_t c = 0; c < upper.size(); ++c) {
        int p = 0;
        for (Mask r = upper[c]; r; r &= r - 1, ++p) {
            Mask face = upper[c] & ~(r & -r);
            auto it = std::lower_bound(lower.begin(), lower.end(), face);
            m.entries[static_cast<std::size_t>(it - lower.begin()) * upper.size() + c] = (p % 2 == 0) ? 1 : -1;
        }
    }
    return m;
}

/// Rank of ∂ between consecutive face groups, GF(2) built directly packed.
inline std::size_t boundary_rank(const std::vector<Mask>& lower, const std::vector<Mask>& upper, const Field& field)
{
    if (lower.empty() || upper.empty())
        return 0;
    if (!field.is_gf2())
        return boundary_between(lower, upper, field).rank();
    std::vector<linalg::BitVector> columns;
    columns.reserve(upper.size());
    const std::size_t words = linalg::words_for(lower.size());
    for (Mask f : upper) {
        linalg::BitVector col(words, 0);
        for (Mask r = f; r; r &= r - 1) {
            auto idx = static_cast<std::size_t>(std::lower_bound(lower.begin(), lower.end(), f & ~(r & -r)) - lower.begin());
            col[idx / 64] |= Mask{1} << (idx % 64);
        }
        columns.push_back(std::move(col));
    }
    return linalg::rank_gf2(std::move(columns), lower.size());
}

/// Reduced homology dimensions of the complex generated by `facets`; entry
/// k+1 holds dim H̃_k for k = -1..dim.
inline std::vector<std::int64_t> reduced_homology(const std::vector<Mask>& facets, const Field& field)
{
    auto faces = faces_by_size(facets);
    const std::size_t sizes = faces.size(); // face sizes 0..sizes-1, dims -1..sizes-2
    std::vector<std::size_t> rank(sizes + 1, 0); // rank[s]: ∂ from size s to size s-1
    for (std::size_t s = 1; s < sizes; ++s)
        rank[s] = boundary_rank(faces[s - 1], faces[s], field);
    std::vector<std::int64_t> out(sizes, 0);
    for (std::size_t s = 0; s < sizes; ++s)
        out[s] = static_cast<std::int64_t>(faces[s].size()) - static_cast<std::int64_t>(rank[s]) -
                 static_cast<std::int64_t>(rank[s + 1]);
    return out;
}

} // namespace detail

/// Matrix of ∂_k for 0 <= k <= dim(Δ); k = 0 is the augmentation onto ∅.
/// Out-of-range k yields an empty matrix.
inline BoundaryMatrix boundary_matrix(const SimplicialComplex& c, int k, const Field& field = Field{})
{
    if (k < 0 || k > c.dimension())
        return BoundaryMatrix{{}, {}, {}, field};
    return detail::boundary_between(c.faces_of_dim(k - 1), c.faces_of_dim(k), field);
}

/// dim H̃_k(Δ; field) for k = -1..dim(Δ), stored at index k+1. H̃_{-1} is
/// nonzero only for {∅}.
inline std::vector<std::int64_t> reduced_homology_dims(const SimplicialComplex& c, const Field& field = Field{})
{
    return detail::reduced_homology(c.facets(), field);
}

} // namespace eii

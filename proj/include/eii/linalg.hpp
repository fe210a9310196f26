#pragma once

#include <bit>
#include <cstdint>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "eii/error.hpp"

namespace eii::linalg {

using Mask = std::uint64_t;

/// Packed GF(2) vector; bit i of word i / 64 is coordinate i.
using BitVector = std::vector<Mask>;

inline std::size_t words_for(std::size_t bits) { return (bits + 63) / 64; }

/// Rank of a set of GF(2) vectors of common length `bits`, by reduction
/// against pivots keyed on the highest set coordinate.
inline std::size_t rank_gf2(std::vector<BitVector> vectors, std::size_t bits)
{
    std::vector<BitVector> pivot(bits);
    std::size_t rank = 0;
    for (BitVector& v : vectors) {
        for (;;) {
            std::size_t w = v.size();
            while (w > 0 && v[w - 1] == 0)
                --w;
            if (w == 0)
                break;
            std::size_t top = (w - 1) * 64 + 63 - static_cast<std::size_t>(std::countl_zero(v[w - 1]));
            if (pivot[top].empty()) {
                pivot[top] = std::move(v);
                ++rank;
                break;
            }
            const BitVector& p = pivot[top];
            for (std::size_t i = 0; i < w; ++i)
                v[i] ^= p[i];
        }
    }
    return rank;
}

namespace detail {

inline std::int64_t mod(std::int64_t a, std::int64_t p)
{
    a %= p;
    return a < 0 ? a + p : a;
}

inline std::int64_t inverse_mod(std::int64_t a, std::int64_t p)
{
    // Fermat: a^(p-2) mod p.
    std::int64_t result = 1, base = mod(a, p), e = p - 2;
    while (e > 0) {
        if (e & 1)
            result = static_cast<std::int64_t>((__int128)result * base % p);
        base = static_cast<std::int64_t>((__int128)base * base % p);
        e >>= 1;
    }
    return result;
}

} // namespace detail

/// Rank over GF(p) of a dense row-major integer matrix.
inline std::size_t rank_mod_p(std::vector<std::int64_t> a, std::size_t rows, std::size_t cols, std::int64_t p)
{
    for (auto& x : a)
        x = detail::mod(x, p);
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t piv = rank;
        while (piv < rows && a[piv * cols + c] == 0)
            ++piv;
        if (piv == rows)
            continue;
        if (piv != rank)
            for (std::size_t j = 0; j < cols; ++j)
                std::swap(a[piv * cols + j], a[rank * cols + j]);
        std::int64_t inv = detail::inverse_mod(a[rank * cols + c], p);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            std::int64_t factor = a[r * cols + c];
            if (factor == 0)
                continue;
            factor = static_cast<std::int64_t>((__int128)factor * inv % p);
            for (std::size_t j = c; j < cols; ++j)
                a[r * cols + j] = detail::mod(a[r * cols + j] - static_cast<std::int64_t>((__int128)factor * a[rank * cols + j] % p), p);
        }
        ++rank;
    }
    return rank;
}

/// Rank over Q by fraction-free (Bareiss) elimination in arbitrary-precision
/// integers; every intermediate stays integral.
inline std::size_t rank_rational(const std::vector<std::int64_t>& entries, std::size_t rows, std::size_t cols)
{
    using boost::multiprecision::cpp_int;
    std::vector<cpp_int> a(entries.begin(), entries.end());
    cpp_int prev = 1;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t piv = rank;
        while (piv < rows && a[piv * cols + c] == 0)
            ++piv;
        if (piv == rows)
            continue;
        if (piv != rank)
            for (std::size_t j = 0; j < cols; ++j)
                std::swap(a[piv * cols + j], a[rank * cols + j]);
        const cpp_int pivot = a[rank * cols + c];
        for (std::size_t r = rank + 1; r < rows; ++r) {
            const cpp_int lead = a[r * cols + c];
            for (std::size_t j = c; j < cols; ++j)
                a[r * cols + j] = (pivot * a[r * cols + j] - lead * a[rank * cols + j]) / prev;
        }
        prev = pivot;
        ++rank;
    }
    return rank;
}

} // namespace eii::linalg

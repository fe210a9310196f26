#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <iomanip>
#include <map>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "json.hpp"

#include "eii/complex.hpp"
#include "eii/field.hpp"
#include "eii/homology.hpp"
#include "eii/parallel.hpp"

namespace eii {

/// N-graded Betti numbers β_{i,j} of R/I over n variables, with β_{0,0} = 1.
/// Only nonzero entries are stored.
class BettiTable {
public:
    using Key = std::pair<int, int>;

    explicit BettiTable(int variables = 0) : n_(variables) { entries_[{0, 0}] = 1; }

    int variables() const noexcept { return n_; }

    std::int64_t operator()(int i, int j) const
    {
        auto it = entries_.find({i, j});
        return it == entries_.end() ? 0 : it->second;
    }

    /// β_{i,j} for i >= 1 only; the closed forms read their inputs this way,
    /// so the unit entry β_{0,0} never leaks into a shifted sum.
    std::int64_t positive(int i, int j) const { return i >= 1 ? (*this)(i, j) : 0; }

    void set(int i, int j, std::int64_t value)
    {
        if (value == 0)
            entries_.erase({i, j});
        else
            entries_[{i, j}] = value;
    }

    void add(int i, int j, std::int64_t value) { set(i, j, (*this)(i, j) + value); }

    const std::map<Key, std::int64_t>& entries() const noexcept { return entries_; }

    friend bool operator==(const BettiTable&, const BettiTable&) = default;

private:
    int n_;
    std::map<Key, std::int64_t> entries_;
};

inline int regularity(const BettiTable& t)
{
    int reg = 0;
    for (const auto& [key, value] : t.entries())
        if (value != 0)
            reg = std::max(reg, key.second - key.first);
    return reg;
}

inline int proj_dim(const BettiTable& t)
{
    int pd = 0;
    for (const auto& [key, value] : t.entries())
        if (value != 0)
            pd = std::max(pd, key.first);
    return pd;
}

/// Every nonzero β_{i,j} with i >= 1 sits on j = i + 1. Vacuously true for the
/// zero ideal.
inline bool has_linear_resolution(const BettiTable& t)
{
    return std::all_of(t.entries().begin(), t.entries().end(), [](const auto& entry) {
        return entry.first.first == 0 || entry.second == 0 || entry.first.second == entry.first.first + 1;
    });
}

namespace detail {

struct MaskVectorHash {
    std::size_t operator()(const std::vector<Mask>& v) const noexcept
    {
        std::size_t h = 0xcbf29ce484222325ull ^ v.size();
        for (Mask m : v) {
            h ^= m + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return h;
    }
};

using HomologyMemo = std::unordered_map<std::vector<Mask>, std::vector<std::int64_t>, MaskVectorHash>;

/// Contribution of one restriction Δ|_W to the Betti numbers.
inline void hochster_term(const std::vector<Mask>& facets, Mask w, const Field& field, HomologyMemo& memo,
                          std::map<std::pair<int, int>, std::int64_t>& acc, std::vector<Mask>& scratch)
{
    const int j = std::popcount(w);
    if (j == 0)
        return;
    Mask support = 0, common = ~Mask{0};
    scratch.clear();
    for (Mask f : facets) {
        Mask r = f & w;
        support |= r;
        common &= r;
        scratch.push_back(r);
    }
    if (support == 0) {
        // Δ|_W = {∅}: H̃_{-1} = 1 contributes to β_{j,j}.
        acc[{j, j}] += 1;
        return;
    }
    if (common != 0)
        return; // a cone: acyclic
    // Compact onto the support; ghost vertices of W carry no homology.
    int bits[64];
    int width = 0;
    for (Mask s = support; s; s &= s - 1)
        bits[width++] = std::countr_zero(s);
    for (Mask& r : scratch) {
        Mask c = 0;
        for (int b = 0; b < width; ++b)
            c |= ((r >> bits[b]) & 1) << b;
        r = c;
    }
    std::vector<Mask> key = maximal_sets(scratch);
    Mask meet = ~Mask{0};
    for (Mask k : key)
        meet &= k;
    if (meet != 0)
        return;
    auto it = memo.find(key);
    if (it == memo.end())
        it = memo.emplace(key, reduced_homology(key, field)).first;
    const auto& h = it->second;
    for (std::size_t idx = 0; idx < h.size(); ++idx) {
        if (h[idx] == 0)
            continue;
        int k = static_cast<int>(idx) - 1; // homological dimension
        int i = j - k - 1;
        if (i >= 1)
            acc[{i, j}] += h[idx];
    }
}

} // namespace detail

/// β_{i,j}(K[Δ]) by Hochster's formula: for i > 0, the sum over |W| = j of
/// dim H̃_{j-i-1}(Δ|_W). Subsets are visited in Gray-code order in
/// contiguous blocks; block sums are merged in block order.
inline BettiTable betti_table(const SimplicialComplex& c, const Field& field = Field{}, int threads = 1)
{
    const std::size_t n = c.vertex_count();
    if (n > kMaxComplexVertices)
        throw Error(ErrorKind::TooLarge, "Hochster evaluation is capped at " + std::to_string(kMaxComplexVertices) + " vertices");
    const std::uint64_t total = std::uint64_t{1} << n;
    const std::size_t blocks = std::min<std::uint64_t>(total, 64);
    const std::uint64_t per_block = (total + blocks - 1) / blocks;
    std::vector<std::map<std::pair<int, int>, std::int64_t>> partial(blocks);
    const std::size_t workers = static_cast<std::size_t>(std::max(1, threads));
    std::vector<detail::HomologyMemo> memos(workers);
    const auto& facets = c.facets();
    parallel_for(blocks, threads, [&](std::size_t b, std::size_t worker) {
        std::vector<Mask> scratch;
        std::uint64_t lo = b * per_block, hi = std::min(total, lo + per_block);
        for (std::uint64_t g = lo; g < hi; ++g)
            detail::hochster_term(facets, g ^ (g >> 1), field, memos[worker], partial[b], scratch);
    });
    BettiTable t(static_cast<int>(n));
    for (const auto& part : partial)
        for (const auto& [key, value] : part)
            t.add(key.first, key.second, value);
    return t;
}

/// Serial evaluation sharing `memo` across calls. A memo must only ever be
/// used with one field.
inline BettiTable betti_table(const SimplicialComplex& c, const Field& field, detail::HomologyMemo& memo)
{
    const std::size_t n = c.vertex_count();
    if (n > kMaxComplexVertices)
        throw Error(ErrorKind::TooLarge, "Hochster evaluation is capped at " + std::to_string(kMaxComplexVertices) + " vertices");
    std::map<std::pair<int, int>, std::int64_t> acc;
    std::vector<Mask> scratch;
    const std::uint64_t total = std::uint64_t{1} << n;
    for (std::uint64_t g = 0; g < total; ++g)
        detail::hochster_term(c.facets(), g ^ (g >> 1), field, memo, acc, scratch);
    BettiTable t(static_cast<int>(n));
    for (const auto& [key, value] : acc)
        t.add(key.first, key.second, value);
    return t;
}

// ---------------------------------------------------------------------------
// Serialization

inline nlohmann::ordered_json to_json(const BettiTable& t)
{
    nlohmann::ordered_json j;
    j["n"] = t.variables();
    auto entries = nlohmann::ordered_json::array();
    for (const auto& [key, value] : t.entries()) {
        nlohmann::ordered_json e;
        e["i"] = key.first;
        e["j"] = key.second;
        e["beta"] = value;
        entries.push_back(std::move(e));
    }
    j["entries"] = std::move(entries);
    return j;
}

inline BettiTable betti_from_json(const nlohmann::ordered_json& j)
{
    try {
        BettiTable t(j.at("n").get<int>());
        t.set(0, 0, 0);
        for (const auto& e : j.at("entries"))
            t.set(e.at("i").get<int>(), e.at("j").get<int>(), e.at("beta").get<std::int64_t>());
        return t;
    } catch (const nlohmann::json::exception& ex) {
        throw Error(ErrorKind::Parse, std::string("Betti JSON: ") + ex.what());
    }
}

/// Diagonal layout: column i, row j - i, zeros printed as '.'.
inline std::string to_text(const BettiTable& t)
{
    const int pd = proj_dim(t), reg = regularity(t);
    std::vector<std::int64_t> totals(static_cast<std::size_t>(pd + 1), 0);
    for (const auto& [key, value] : t.entries())
        totals[static_cast<std::size_t>(key.first)] += value;
    std::vector<std::size_t> width(static_cast<std::size_t>(pd + 1), 1);
    for (int i = 0; i <= pd; ++i) {
        width[static_cast<std::size_t>(i)] = std::max(std::to_string(i).size(), std::to_string(totals[static_cast<std::size_t>(i)]).size());
    }
    for (const auto& [key, value] : t.entries())
        width[static_cast<std::size_t>(key.first)] = std::max(width[static_cast<std::size_t>(key.first)], std::to_string(value).size());
    const std::size_t label = std::max<std::size_t>(6, std::to_string(reg).size() + 1);
    std::ostringstream out;
    out << std::string(label, ' ');
    for (int i = 0; i <= pd; ++i)
        out << ' ' << std::setw(static_cast<int>(width[static_cast<std::size_t>(i)])) << i;
    out << "\n" << std::setw(static_cast<int>(label)) << "total:";
    for (int i = 0; i <= pd; ++i)
        out << ' ' << std::setw(static_cast<int>(width[static_cast<std::size_t>(i)])) << totals[static_cast<std::size_t>(i)];
    out << "\n";
    for (int r = 0; r <= reg; ++r) {
        out << std::setw(static_cast<int>(label)) << (std::to_string(r) + ":");
        for (int i = 0; i <= pd; ++i) {
            std::int64_t v = t(i, i + r);
            out << ' ' << std::setw(static_cast<int>(width[static_cast<std::size_t>(i)])) << (v ? std::to_string(v) : ".");
        }
        out << "\n";
    }
    return out.str();
}

} // namespace eii

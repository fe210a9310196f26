#pragma once

#include <cstdint>
#include <cstdlib>
#include <string>
#include <vector>

#include "json.hpp"

#include "eii/error.hpp"

namespace eii {

/// Integer polynomial, coefficient of t^i at index i.
using Polynomial = std::vector<std::int64_t>;

namespace detail {

inline void trim(Polynomial& p)
{
    while (!p.empty() && p.back() == 0)
        p.pop_back();
}

/// p · (1-t)^e
inline Polynomial times_one_minus_t(Polynomial p, int e)
{
    for (int k = 0; k < e; ++k) {
        p.push_back(0);
        for (std::size_t i = p.size() - 1; i > 0; --i)
            p[i] -= p[i - 1];
    }
    trim(p);
    return p;
}

} // namespace detail

/// Exact rational function P(t) / (1-t)^k. Always kept in lowest terms:
/// (1-t) does not divide P unless P = 0, and then k = 0.
class RationalSeries {
public:
    RationalSeries() = default;

    RationalSeries(Polynomial numerator, int denom_pow) : num_(std::move(numerator)), k_(denom_pow)
    {
        if (k_ < 0)
            throw Error(ErrorKind::BadParameter, "negative denominator power");
        normalize();
    }

    static RationalSeries constant(std::int64_t c) { return RationalSeries({c}, 0); }
    /// 1 / (1-t)^k
    static RationalSeries geometric(int k) { return RationalSeries({1}, k); }
    /// t / (1-t)
    static RationalSeries shifted_geometric() { return RationalSeries({0, 1}, 1); }

    const Polynomial& numerator() const noexcept { return num_; }
    int denom_pow() const noexcept { return k_; }
    bool is_zero() const noexcept { return num_.empty(); }

    friend RationalSeries operator+(const RationalSeries& a, const RationalSeries& b)
    {
        int k = std::max(a.k_, b.k_);
        Polynomial pa = detail::times_one_minus_t(a.num_, k - a.k_);
        Polynomial pb = detail::times_one_minus_t(b.num_, k - b.k_);
        if (pa.size() < pb.size())
            pa.resize(pb.size(), 0);
        for (std::size_t i = 0; i < pb.size(); ++i)
            pa[i] += pb[i];
        return RationalSeries(std::move(pa), k);
    }

    RationalSeries scale(std::int64_t c) const
    {
        Polynomial p = num_;
        for (auto& x : p)
            x *= c;
        return RationalSeries(std::move(p), k_);
    }

    friend RationalSeries operator-(const RationalSeries& a, const RationalSeries& b) { return a + b.scale(-1); }

    RationalSeries sub_scalar(std::int64_t c) const { return *this - constant(c); }

    /// First N+1 power-series coefficients.
    std::vector<std::int64_t> expand(int n) const
    {
        std::vector<std::int64_t> out(static_cast<std::size_t>(n + 1), 0);
        for (std::size_t i = 0; i < num_.size() && i < out.size(); ++i)
            out[i] = num_[i];
        // Dividing by (1-t) is a running sum.
        for (int k = 0; k < k_; ++k)
            for (std::size_t i = 1; i < out.size(); ++i)
                out[i] += out[i - 1];
        return out;
    }

    friend bool operator==(const RationalSeries&, const RationalSeries&) = default;

private:
    void normalize()
    {
        detail::trim(num_);
        if (num_.empty()) {
            k_ = 0;
            return;
        }
        while (k_ > 0) {
            std::int64_t at_one = 0;
            for (auto c : num_)
                at_one += c;
            if (at_one != 0)
                break;
            // P = (1-t) Q with q_i = p_0 + ... + p_i.
            Polynomial q(num_.size() - 1);
            std::int64_t run = 0;
            for (std::size_t i = 0; i < q.size(); ++i) {
                run += num_[i];
                q[i] = run;
            }
            num_ = std::move(q);
            detail::trim(num_);
            --k_;
        }
    }

    Polynomial num_;
    int k_ = 0;
};

inline bool equals(const RationalSeries& a, const RationalSeries& b) { return a == b; }

inline std::string polynomial_text(const Polynomial& p)
{
    std::string out;
    for (std::size_t i = 0; i < p.size(); ++i) {
        std::int64_t c = p[i];
        if (c == 0)
            continue;
        if (out.empty())
            out += c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        std::int64_t a = std::llabs(c);
        if (i == 0 || a != 1)
            out += std::to_string(a);
        if (i >= 1)
            out += "t";
        if (i >= 2)
            out += "^" + std::to_string(i);
    }
    return out.empty() ? "0" : out;
}

/// "(P(t)) / (1-t)^k", ascending powers.
inline std::string to_text(const RationalSeries& s)
{
    return "(" + polynomial_text(s.numerator()) + ") / (1-t)^" + std::to_string(s.denom_pow());
}

inline nlohmann::ordered_json to_json(const RationalSeries& s)
{
    nlohmann::ordered_json j;
    j["num"] = s.numerator();
    j["denom_pow"] = s.denom_pow();
    return j;
}

inline RationalSeries series_from_json(const nlohmann::ordered_json& j)
{
    try {
        return RationalSeries(j.at("num").get<Polynomial>(), j.at("denom_pow").get<int>());
    } catch (const nlohmann::json::exception& ex) {
        throw Error(ErrorKind::Parse, std::string("series JSON: ") + ex.what());
    }
}

} // namespace eii

#pragma once

#include <cstdint>
#include <string>

#include "eii/error.hpp"

namespace eii {

/// Coefficient field for homology: a prime field GF(p) or the rationals.
class Field {
public:
    enum class Kind { Prime, Rational };

    constexpr Field() = default;

    static Field prime(std::int64_t p)
    {
        if (!is_prime(p))
            throw Error(ErrorKind::BadParameter, "field characteristic " + std::to_string(p) + " is not prime");
        Field f;
        f.kind_ = Kind::Prime;
        f.p_ = p;
        return f;
    }

    static Field rational()
    {
        Field f;
        f.kind_ = Kind::Rational;
        f.p_ = 0;
        return f;
    }

    Kind kind() const noexcept { return kind_; }
    /// Characteristic; 0 for the rationals.
    std::int64_t characteristic() const noexcept { return p_; }
    bool is_gf2() const noexcept { return kind_ == Kind::Prime && p_ == 2; }

    std::string name() const { return kind_ == Kind::Rational ? "rational" : "gf" + std::to_string(p_); }

    friend bool operator==(const Field&, const Field&) = default;

    static constexpr bool is_prime(std::int64_t p)
    {
        if (p < 2)
            return false;
        for (std::int64_t d = 2; d * d <= p; ++d)
            if (p % d == 0)
                return false;
        return true;
    }

private:
    Kind kind_ = Kind::Prime;
    std::int64_t p_ = 2;
};

/// Accepts "gf<p>" for a prime p below 2^31, and "rational" (or "qq").
inline Field parse_field(const std::string& text)
{
    if (text == "rational" || text == "qq")
        return Field::rational();
    if (text.size() > 2 && text.compare(0, 2, "gf") == 0) {
        std::int64_t p = 0;
        for (std::size_t i = 2; i < text.size(); ++i) {
            if (text[i] < '0' || text[i] > '9' || p > (std::int64_t{1} << 31))
                throw Error(ErrorKind::BadParameter, "bad field '" + text + "'");
            p = p * 10 + (text[i] - '0');
        }
        if (p >= (std::int64_t{1} << 31))
            throw Error(ErrorKind::BadParameter, "field characteristic too large in '" + text + "'");
        return Field::prime(p);
    }
    throw Error(ErrorKind::BadParameter, "bad field '" + text + "' (expected gf2, gf3, ..., rational)");
}

} // namespace eii

#pragma once

#include <cstdint>
#include <limits>
#include <string>

#include "eii/error.hpp"

namespace eii {

/// C(n, k) with C(n, k) = 0 for k < 0 or k > n. A negative top is rejected
/// rather than evaluated through the generalized definition.
inline std::int64_t binomial(std::int64_t n, std::int64_t k)
{
    if (n < 0)
        throw Error(ErrorKind::BadParameter,
                    "binomial with negative top C(" + std::to_string(n) + "," + std::to_string(k) + ")");
    if (k < 0 || k > n)
        return 0;
    if (k > n - k)
        k = n - k;
    __int128 result = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        result = result * (n - k + i) / i;
        if (result > std::numeric_limits<std::int64_t>::max())
            throw Error(ErrorKind::TooLarge, "binomial overflow at C(" + std::to_string(n) + "," + std::to_string(k) + ")");
    }
    return static_cast<std::int64_t>(result);
}

/// (-1)^k for any integer k.
constexpr std::int64_t sign_pow(std::int64_t k) { return (k % 2 == 0) ? 1 : -1; }

} // namespace eii

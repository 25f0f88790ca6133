#pragma once

#include <cstdint>
#include <limits>

#include "partdeck/errors.hpp"

namespace partdeck {

inline std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
    if (a > std::numeric_limits<std::uint64_t>::max() - b)
        throw Overflow("64-bit overflow in addition");
    return a + b;
}

inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    if (b != 0 && a > std::numeric_limits<std::uint64_t>::max() / b)
        throw Overflow("64-bit overflow in multiplication");
    return a * b;
}

}  // namespace partdeck

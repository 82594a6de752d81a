#include "schemaug/stable_hash.hpp"

#include <cmath>

namespace schemaug {

std::uint64_t fnv1a64(std::string_view bytes, std::uint64_t state) {
    for (unsigned char c : bytes) {
        state ^= c;
        state *= 0x100000001b3ULL;
    }
    return state;
}

std::uint64_t stable_draw(std::initializer_list<std::string_view> fields) {
    std::uint64_t state = 0xcbf29ce484222325ULL;
    for (std::string_view field : fields) {
        state = fnv1a64(field, state);
        state = fnv1a64(std::string_view("\x1f", 1), state);
    }
    return state;
}

bool draw_below(std::uint64_t draw, double rate) {
    if (rate <= 0.0) return false;
    if (rate >= 1.0) return true;
    // Compare against rate * 2^64 without overflowing.
    const double scaled = std::ldexp(rate, 64);
    return static_cast<double>(draw) < scaled;
}

}  // namespace schemaug

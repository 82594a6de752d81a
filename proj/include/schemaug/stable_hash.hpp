#pragma once

#include <cstdint>
#include <initializer_list>
#include <string_view>

namespace schemaug {

// 64-bit FNV-1a over raw bytes. This is the only source of "randomness" in
// seeded code paths, so runs replay identically across compilers and machines.
std::uint64_t fnv1a64(std::string_view bytes,
                      std::uint64_t state = 0xcbf29ce484222325ULL);

// Hashes the fields with a 0x1f separator between them, so ("ab","c") and
// ("a","bc") produce different draws.
std::uint64_t stable_draw(std::initializer_list<std::string_view> fields);

// True with probability `rate` for a uniform 64-bit draw. rate <= 0 is never,
// rate >= 1 is always.
bool draw_below(std::uint64_t draw, double rate);

}  // namespace schemaug

#pragma once

#include <cstdint>
#include <vector>

namespace fixtures {

// U_4 in canonical order, three rows per block.
inline const std::vector<std::vector<int>> kU4 = {
    {1, 2, 4, 3}, {1, 3, 4, 2}, {1, 4, 2, 3},  //
    {2, 1, 3, 4}, {2, 3, 1, 4}, {2, 4, 3, 1},  //
    {3, 1, 2, 4}, {3, 2, 4, 1}, {3, 4, 2, 1},  //
    {4, 1, 3, 2}, {4, 2, 1, 3}, {4, 3, 1, 2},
};

inline const std::vector<std::uint64_t> kF5 = {
    6,  10, 8, 10, 6,   //
    10, 6,  8, 6,  10,  //
    8,  8,  8, 8,  8,   //
    10, 6,  8, 6,  10,  //
    6,  10, 8, 10, 6,
};

inline const std::vector<std::uint64_t> kF6 = {
    19, 17, 22, 22, 17, 19,  //
    17, 24, 17, 17, 24, 17,  //
    22, 17, 19, 19, 17, 22,  //
    22, 17, 19, 19, 17, 22,  //
    17, 24, 17, 17, 24, 17,  //
    19, 17, 22, 22, 17, 19,
};

inline constexpr char kF5Csv[] = "6,10,8,10,6\n10,6,8,6,10\n8,8,8,8,8\n10,6,8,6,10\n6,10,8,10,6\n";

// C(n), S(n) for n = 0..16; zero where undefined.
inline constexpr std::uint64_t kCount[] = {0,   1,   2,    4,    12,   40,    116,   200,  444,
                                           760, 2160, 4368, 7852, 12828, 17252, 19612, 21104};
inline constexpr std::uint64_t kColumnSum[] = {0,     1,     3,     8,     30,     120,
                                               406,   800,   1998,  3800,  11880,  26208,
                                               51038, 89796, 129390, 156896, 179384};

}  // namespace fixtures

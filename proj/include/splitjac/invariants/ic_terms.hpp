#pragma once

#include <array>
#include <cstdint>

// I2, I4, I6 of the binary sextic c0 + c1 x + ... + c6 x^6, expanded in the
// coefficients.  Each row is (coefficient, exponents of c0..c6).

namespace splitjac::igusa::detail {

struct SexticTerm {
    std::int64_t coeff;
    std::array<std::uint8_t, 7> exps;
};

inline constexpr std::array<SexticTerm, 4> kI2Terms{{
    {-240, {1, 0, 0, 0, 0, 0, 1}},
    {40, {0, 1, 0, 0, 0, 1, 0}},
    {-16, {0, 0, 1, 0, 1, 0, 0}},
    {6, {0, 0, 0, 2, 0, 0, 0}},
}};

inline constexpr std::array<SexticTerm, 16> kI4Terms{{
    {1620, {2, 0, 0, 0, 0, 0, 2}},
    {-540, {1, 1, 0, 0, 0, 1, 1}},
    {-504, {1, 0, 1, 0, 1, 0, 1}},
    {300, {1, 0, 1, 0, 0, 2, 0}},
    {324, {1, 0, 0, 2, 0, 0, 1}},
    {-180, {1, 0, 0, 1, 1, 1, 0}},
    {48, {1, 0, 0, 0, 3, 0, 0}},
    {300, {0, 2, 0, 0, 1, 0, 1}},
    {-80, {0, 2, 0, 0, 0, 2, 0}},
    {-180, {0, 1, 1, 1, 0, 0, 1}},
    {4, {0, 1, 1, 0, 1, 1, 0}},
    {36, {0, 1, 0, 2, 0, 1, 0}},
    {-12, {0, 1, 0, 1, 2, 0, 0}},
    {48, {0, 0, 3, 0, 0, 0, 1}},
    {-12, {0, 0, 2, 1, 0, 1, 0}},
    {4, {0, 0, 2, 0, 2, 0, 0}},
}};

inline constexpr std::array<SexticTerm, 56> kI6Terms{{
    {-119880, {3, 0, 0, 0, 0, 0, 3}},
    {59940, {2, 1, 0, 0, 0, 1, 2}},
    {20664, {2, 0, 1, 0, 1, 0, 2}},
    {-18600, {2, 0, 1, 0, 0, 2, 1}},
    {-10044, {2, 0, 0, 2, 0, 0, 2}},
    {3060, {2, 0, 0, 1, 1, 1, 1}},
    {2250, {2, 0, 0, 1, 0, 3, 0}},
    {-96, {2, 0, 0, 0, 3, 0, 1}},
    {-900, {2, 0, 0, 0, 2, 2, 0}},
    {-18600, {1, 2, 0, 0, 1, 0, 2}},
    {-2240, {1, 2, 0, 0, 0, 2, 1}},
    {3060, {1, 1, 1, 1, 0, 0, 2}},
    {3472, {1, 1, 1, 0, 1, 1, 1}},
    {1600, {1, 1, 1, 0, 0, 3, 0}},
    {1818, {1, 1, 0, 2, 0, 1, 1}},
    {-876, {1, 1, 0, 1, 2, 0, 1}},
    {-1860, {1, 1, 0, 1, 1, 2, 0}},
    {616, {1, 1, 0, 0, 3, 1, 0}},
    {-96, {1, 0, 3, 0, 0, 0, 2}},
    {-876, {1, 0, 2, 1, 0, 1, 1}},
    {424, {1, 0, 2, 0, 2, 0, 1}},
    {-640, {1, 0, 2, 0, 1, 2, 0}},
    {-468, {1, 0, 1, 2, 1, 0, 1}},
    {330, {1, 0, 1, 2, 0, 2, 0}},
    {492, {1, 0, 1, 1, 2, 1, 0}},
    {-160, {1, 0, 1, 0, 4, 0, 0}},
    {162, {1, 0, 0, 4, 0, 0, 1}},
    {-198, {1, 0, 0, 3, 1, 1, 0}},
    {60, {1, 0, 0, 2, 3, 0, 0}},
    {2250, {0, 3, 0, 1, 0, 0, 2}},
    {1600, {0, 3, 0, 0, 1, 1, 1}},
    {-320, {0, 3, 0, 0, 0, 3, 0}},
    {-900, {0, 2, 2, 0, 0, 0, 2}},
    {-1860, {0, 2, 1, 1, 0, 1, 1}},
    {-640, {0, 2, 1, 0, 2, 0, 1}},
    {64, {0, 2, 1, 0, 1, 2, 0}},
    {330, {0, 2, 0, 2, 1, 0, 1}},
    {176, {0, 2, 0, 2, 0, 2, 0}},
    {26, {0, 2, 0, 1, 2, 1, 0}},
    {-36, {0, 2, 0, 0, 4, 0, 0}},
    {616, {0, 1, 3, 0, 0, 1, 1}},
    {492, {0, 1, 2, 1, 1, 0, 1}},
    {26, {0, 1, 2, 1, 0, 2, 0}},
    {28, {0, 1, 2, 0, 2, 1, 0}},
    {-198, {0, 1, 1, 3, 0, 0, 1}},
    {-238, {0, 1, 1, 2, 1, 1, 0}},
    {76, {0, 1, 1, 1, 3, 0, 0}},
    {72, {0, 1, 0, 4, 0, 1, 0}},
    {-24, {0, 1, 0, 3, 2, 0, 0}},
    {-160, {0, 0, 4, 0, 1, 0, 1}},
    {-36, {0, 0, 4, 0, 0, 2, 0}},
    {60, {0, 0, 3, 2, 0, 0, 1}},
    {76, {0, 0, 3, 1, 1, 1, 0}},
    {-24, {0, 0, 3, 0, 3, 0, 0}},
    {-24, {0, 0, 2, 3, 0, 1, 0}},
    {8, {0, 0, 2, 2, 2, 0, 0}},
}};

}  // namespace splitjac::igusa::detail

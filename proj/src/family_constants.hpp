#pragma once

// Hardcoded polynomial data for the pentagon and hexagon parameter maps.
// Every table here is guarded by a test against the geometric construction,
// so a transcription slip turns into a hard test failure.

namespace polylab::constants {

struct Mono {
  int c, ex, ey, ez;
};

// Degree-8 self-map of the pentagon parameter plane. The first component
// carries three monomials (x^5 z^3 - x^4 y z^3 - 6 x^3 y^2 z^3) that are easy
// to lose when copying; the geometric oracle pins them down.
inline constexpr Mono LAMBDA0_X[] = {
    {1, 5, 2, 1},  {-4, 4, 3, 1}, {5, 3, 4, 1},  {-2, 2, 5, 1}, {-2, 5, 1, 2}, {6, 4, 2, 2},  {-2, 3, 3, 2},
    {-5, 2, 4, 2}, {3, 1, 5, 2},  {1, 5, 0, 3},  {-1, 4, 1, 3}, {-6, 3, 2, 3}, {6, 2, 3, 3},  {1, 1, 4, 3},
    {-1, 0, 5, 3}, {-1, 4, 0, 4}, {3, 3, 1, 4},  {2, 2, 2, 4},  {-4, 1, 3, 4}, {-1, 2, 1, 5}, {1, 0, 3, 5},
};
inline constexpr Mono LAMBDA0_Y[] = {
    {1, 4, 4, 0},  {-1, 3, 5, 0}, {-5, 4, 3, 1}, {4, 3, 4, 1}, {1, 2, 5, 1},  {8, 4, 2, 2},
    {-2, 3, 3, 2}, {-6, 2, 4, 2}, {-4, 4, 1, 3}, {-6, 3, 2, 3}, {8, 2, 3, 3}, {2, 1, 4, 3},
    {4, 3, 1, 4},  {1, 2, 2, 4},  {-5, 1, 3, 4}, {-1, 2, 1, 5}, {1, 0, 3, 5},
};
inline constexpr Mono LAMBDA0_Z[] = {
    {1, 5, 2, 1},  {-4, 4, 3, 1}, {4, 3, 4, 1},  {-2, 5, 1, 2}, {8, 4, 2, 2},  {-6, 3, 3, 2}, {-4, 2, 4, 2},
    {1, 4, 1, 3},  {-8, 3, 2, 3}, {12, 2, 3, 3}, {1, 1, 4, 3},  {2, 2, 2, 4},  {-6, 1, 3, 4}, {1, 0, 3, 5},
};

// Degree-6 self-map of the hexagon parameter plane.
inline constexpr Mono LAMBDA23_X[] = {
    {-4, 4, 1, 1},  {16, 3, 2, 1}, {-28, 2, 3, 1}, {24, 1, 4, 1}, {-8, 0, 5, 1}, {-8, 3, 1, 2}, {24, 2, 2, 2},
    {-28, 1, 3, 2}, {12, 0, 4, 2}, {-5, 2, 1, 3},  {10, 1, 2, 3}, {-6, 0, 3, 3}, {-1, 1, 1, 4}, {1, 0, 2, 4},
};
inline constexpr Mono LAMBDA23_Y[] = {
    {-2, 5, 1, 0},  {10, 4, 2, 0}, {-18, 3, 3, 0}, {14, 2, 4, 0}, {-4, 1, 5, 0}, {-7, 4, 1, 1}, {26, 3, 2, 1},
    {-35, 2, 3, 1}, {20, 1, 4, 1}, {-4, 0, 5, 1},  {-9, 3, 1, 2}, {24, 2, 2, 2}, {-21, 1, 3, 2}, {6, 0, 4, 2},
    {-5, 2, 1, 3},  {9, 1, 2, 3},  {-4, 0, 3, 3},  {-1, 1, 1, 4}, {1, 0, 2, 4},
};
inline constexpr Mono LAMBDA23_Z[] = {
    {1, 6, 0, 0},   {-8, 5, 1, 0}, {25, 4, 2, 0},  {-38, 3, 3, 0}, {28, 2, 4, 0}, {-8, 1, 5, 0}, {3, 5, 0, 1},
    {-19, 4, 1, 1}, {44, 3, 2, 1}, {-44, 2, 3, 1}, {16, 1, 4, 1},  {3, 4, 0, 2},  {-15, 3, 1, 2}, {24, 2, 2, 2},
    {-12, 1, 3, 2}, {1, 3, 0, 3},  {-4, 2, 1, 3},  {4, 1, 2, 3},
};

// Hexagon symmetries: the order-6 permutation acts through a Cremona
// involution s1', the reflection through s2', and the pentagram map through s.
inline constexpr Mono S1P_X[] = {{-1, 2, 0, 0}, {1, 1, 1, 0}, {-1, 1, 0, 1}};
inline constexpr Mono S1P_Y[] = {{-1, 2, 0, 0}, {2, 1, 1, 0}, {-1, 0, 2, 0}, {-1, 1, 0, 1}, {1, 0, 1, 1}};
inline constexpr Mono S1P_Z[] = {{1, 0, 1, 1}};

inline constexpr Mono S2P_X[] = {{1, 0, 0, 1}};
inline constexpr Mono S2P_Y[] = {{1, 1, 0, 0}, {-1, 0, 1, 0}, {1, 0, 0, 1}};
inline constexpr Mono S2P_Z[] = {{1, 1, 0, 0}};

inline constexpr Mono SPENT_X[] = {{1, 2, 0, 0}, {-1, 1, 1, 0}};
inline constexpr Mono SPENT_Y[] = {{1, 2, 0, 0}, {-2, 1, 1, 0}, {1, 0, 2, 0}};
inline constexpr Mono SPENT_Z[] = {{1, 0, 1, 1}};

}  // namespace polylab::constants

#pragma once

#include <array>

namespace zdg::testing {

// Coordinate tables of BS(Γ(Z_91)) against the 13 landmarks r1, t1_2, t1_3,
// t2_4, t2_5, t3_6, t3_7, s1_8, s1_9, s2_10, s2_11, s3_12, u6, transcribed
// verbatim. `position` is the label implied by the table layout (block column,
// row index); `printed` is the label as typeset, which repeats or misnames a
// few rows.

struct GoldenRow {
  const char* position;
  const char* printed;
  std::array<int, 13> code;
};

inline constexpr std::array<const char*, 13> kZ91Landmarks = {
    "r1", "t1_2", "t1_3", "t2_4", "t2_5", "t3_6", "t3_7", "s1_8", "s1_9", "s2_10", "s2_11", "s3_12", "u6"};

inline constexpr std::array<GoldenRow, 90> kZ91Rows = {{
    {"t3_1", "t3_1", {1, 4, 4, 4, 4, 2, 2, 4, 4, 4, 4, 4, 3}},
    {"s1_1", "s1_1", {1, 4, 4, 4, 4, 4, 4, 2, 2, 4, 4, 4, 3}},
    {"t3_2", "t3_2", {3, 2, 4, 4, 4, 2, 2, 4, 4, 4, 4, 4, 3}},
    {"s1_2", "s1_2", {3, 2, 4, 4, 4, 4, 4, 2, 2, 4, 4, 4, 3}},
    {"t3_3", "t3_3", {3, 4, 2, 4, 4, 2, 2, 4, 4, 4, 4, 4, 3}},
    {"s1_3", "s1_3", {3, 4, 2, 4, 4, 4, 4, 2, 2, 4, 4, 4, 3}},
    {"t3_4", "t3_4", {3, 4, 4, 2, 4, 2, 2, 4, 4, 4, 4, 4, 3}},
    {"s1_4", "s1_4", {3, 4, 4, 2, 4, 4, 4, 2, 2, 4, 4, 4, 3}},
    {"t3_5", "t3_5", {3, 4, 4, 4, 2, 2, 2, 4, 4, 4, 4, 4, 3}},
    {"s1_5", "s2_5", {3, 4, 4, 4, 2, 4, 4, 2, 2, 4, 4, 4, 3}},
    {"t3_6", "t3_6", {3, 4, 4, 4, 4, 0, 2, 4, 4, 4, 4, 4, 3}},
    {"s1_6", "s1_6", {3, 4, 4, 4, 4, 2, 4, 2, 2, 4, 4, 4, 3}},
    {"t3_7", "t3_7", {3, 4, 4, 4, 4, 2, 0, 4, 4, 4, 4, 4, 3}},
    {"s1_7", "s1_7", {3, 4, 4, 4, 4, 4, 2, 2, 2, 4, 4, 4, 3}},
    {"t3_8", "t3_8", {3, 4, 4, 4, 4, 2, 2, 2, 4, 4, 4, 4, 3}},
    {"s1_8", "s1_8", {3, 4, 4, 4, 4, 4, 4, 0, 2, 4, 4, 4, 3}},
    {"t3_9", "t3_9", {3, 4, 4, 4, 4, 2, 2, 4, 2, 4, 4, 4, 3}},
    {"s1_9", "s1_9", {3, 4, 4, 4, 4, 4, 4, 2, 0, 4, 4, 4, 3}},
    {"t3_10", "t3_10", {3, 4, 4, 4, 4, 2, 2, 4, 4, 2, 4, 4, 3}},
    {"s1_10", "s1_10", {3, 4, 4, 4, 4, 4, 4, 2, 2, 2, 4, 4, 3}},
    {"t3_11", "t3_11", {3, 4, 4, 4, 4, 2, 2, 4, 4, 4, 2, 4, 3}},
    {"s1_11", "s1_10", {3, 4, 4, 4, 4, 4, 4, 2, 2, 4, 2, 4, 3}},
    {"t3_12", "t3_12", {3, 4, 4, 4, 4, 2, 2, 4, 4, 2, 4, 2, 3}},
    {"s1_12", "s1_10", {3, 4, 4, 4, 4, 4, 4, 2, 2, 4, 4, 2, 3}},
    {"s2_1", "s2_1", {1, 4, 4, 4, 4, 4, 4, 4, 4, 2, 2, 4, 3}},
    {"s3_1", "s3_1", {1, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 2, 1}},
    {"s2_2", "s2_2", {3, 2, 4, 4, 4, 4, 4, 4, 4, 2, 2, 4, 3}},
    {"s3_2", "s3_2", {3, 2, 4, 4, 4, 4, 4, 4, 4, 4, 4, 2, 1}},
    {"s2_3", "s2_3", {3, 4, 2, 4, 4, 4, 4, 4, 4, 2, 2, 4, 3}},
    {"s3_3", "s3_3", {3, 4, 2, 4, 4, 4, 4, 4, 4, 4, 4, 2, 1}},
    {"s2_4", "s2_4", {3, 4, 4, 2, 4, 4, 4, 4, 4, 2, 2, 4, 3}},
    {"s3_4", "s3_4", {3, 4, 4, 2, 4, 4, 4, 4, 4, 4, 4, 2, 1}},
    {"s2_5", "s2_5", {3, 4, 4, 4, 2, 4, 4, 4, 2, 2, 4, 4, 3}},
    {"s3_5", "s3_5", {3, 4, 4, 4, 2, 4, 4, 4, 4, 4, 4, 2, 1}},
    {"s2_6", "s2_6", {3, 4, 4, 4, 4, 2, 4, 4, 4, 4, 2, 2, 3}},
    {"s3_6", "s3_6", {3, 4, 4, 4, 4, 2, 4, 4, 4, 4, 4, 2, 1}},
    {"s2_7", "s2_7", {3, 4, 4, 4, 4, 4, 2, 4, 4, 2, 2, 4, 3}},
    {"s3_7", "s3_7", {3, 4, 4, 4, 4, 4, 2, 4, 4, 4, 4, 2, 1}},
    {"s2_8", "s2_8", {3, 4, 4, 4, 4, 4, 4, 2, 4, 2, 2, 4, 3}},
    {"s3_8", "s3_8", {3, 4, 4, 4, 4, 4, 4, 2, 4, 4, 4, 2, 1}},
    {"s2_9", "s2_9", {3, 4, 4, 4, 4, 4, 4, 4, 2, 2, 2, 4, 3}},
    {"s3_9", "s3_9", {3, 4, 4, 4, 4, 4, 4, 4, 2, 4, 4, 2, 1}},
    {"s2_10", "s2_10", {3, 4, 4, 4, 4, 4, 4, 4, 4, 0, 2, 4, 3}},
    {"s3_10", "s3_10", {3, 4, 4, 4, 4, 4, 4, 4, 4, 2, 4, 2, 1}},
    {"s2_11", "s2_11", {3, 4, 4, 4, 4, 4, 4, 4, 4, 2, 0, 4, 3}},
    {"s3_11", "s3_10", {3, 4, 4, 4, 4, 4, 4, 4, 4, 4, 2, 2, 1}},
    {"s2_12", "s3_12", {3, 4, 4, 4, 4, 4, 4, 4, 4, 2, 2, 2, 3}},
    {"s3_12", "s2_10", {3, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 0, 1}},
    {"t1_1", "t1_1", {1, 2, 2, 4, 4, 4, 4, 4, 4, 4, 4, 4, 3}},
    {"t2_1", "t2_1", {1, 4, 4, 2, 2, 4, 4, 4, 4, 4, 4, 4, 3}},
    {"t1_2", "t1_2", {3, 0, 2, 4, 4, 4, 4, 4, 4, 4, 4, 4, 3}},
    {"t2_2", "t2_2", {3, 2, 4, 2, 2, 4, 4, 4, 4, 4, 4, 4, 3}},
    {"t1_3", "t1_3", {3, 2, 0, 4, 4, 4, 4, 4, 4, 4, 4, 4, 3}},
    {"t2_3", "t2_3", {3, 4, 2, 2, 2, 4, 4, 4, 4, 4, 4, 4, 3}},
    {"t1_4", "t1_4", {3, 2, 2, 2, 4, 4, 4, 4, 4, 4, 4, 4, 3}},
    {"t2_4", "t2_4", {3, 4, 4, 0, 2, 4, 4, 4, 4, 4, 4, 4, 3}},
    {"t1_5", "t1_5", {3, 2, 2, 4, 2, 4, 4, 4, 4, 4, 4, 4, 3}},
    {"t2_5", "t2_5", {3, 4, 4, 2, 0, 4, 4, 4, 4, 4, 4, 4, 3}},
    {"t1_6", "t1_6", {3, 2, 2, 4, 4, 2, 4, 4, 4, 4, 4, 4, 3}},
    {"t2_6", "t2_6", {3, 4, 4, 2, 2, 2, 4, 4, 4, 4, 4, 4, 3}},
    {"t1_7", "t1_7", {3, 2, 2, 4, 4, 4, 2, 4, 4, 4, 4, 4, 3}},
    {"t2_7", "t2_7", {3, 4, 4, 2, 2, 4, 2, 4, 4, 4, 4, 4, 3}},
    {"t1_8", "t1_8", {3, 2, 2, 4, 4, 4, 4, 2, 4, 4, 4, 4, 3}},
    {"t2_8", "t2_8", {3, 4, 4, 2, 2, 4, 4, 2, 4, 4, 4, 4, 3}},
    {"t1_9", "t1_9", {3, 2, 2, 4, 4, 4, 4, 4, 2, 4, 4, 4, 3}},
    {"t2_9", "t2_9", {3, 4, 4, 2, 2, 4, 4, 4, 2, 4, 4, 4, 3}},
    {"t1_10", "t1_10", {3, 2, 2, 4, 4, 4, 4, 4, 4, 2, 4, 4, 3}},
    {"t2_10", "t2_10", {3, 4, 4, 2, 2, 4, 4, 4, 4, 2, 4, 4, 3}},
    {"t1_11", "t1_10", {3, 2, 2, 4, 4, 4, 4, 4, 4, 4, 2, 4, 3}},
    {"t2_11", "t2_11", {3, 4, 4, 2, 2, 4, 4, 4, 4, 4, 2, 4, 3}},
    {"t1_12", "t1_12", {3, 2, 2, 4, 4, 4, 4, 4, 4, 4, 4, 2, 3}},
    {"t2_12", "t2_12", {3, 4, 4, 2, 2, 4, 4, 4, 4, 4, 4, 2, 3}},
    {"r1", "r1", {0, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 2}},
    {"u1", "u1", {2, 1, 1, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3}},
    {"r2", "r2", {4, 1, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 2}},
    {"u2", "u2", {2, 3, 3, 1, 1, 3, 3, 3, 3, 3, 3, 3, 3}},
    {"r3", "r3", {4, 3, 1, 3, 3, 3, 3, 3, 3, 3, 3, 3, 2}},
    {"u3", "u3", {2, 3, 3, 3, 3, 1, 1, 3, 3, 3, 3, 3, 3}},
    {"r4", "r4", {4, 3, 3, 1, 3, 3, 3, 3, 3, 3, 3, 3, 2}},
    {"u4", "u4", {2, 3, 3, 3, 3, 3, 3, 1, 1, 3, 3, 3, 3}},
    {"r5", "r5", {4, 3, 3, 3, 1, 3, 3, 3, 3, 3, 3, 3, 2}},
    {"u5", "u5", {2, 3, 3, 3, 3, 3, 3, 3, 3, 1, 1, 3, 3}},
    {"r6", "r6", {4, 3, 3, 3, 3, 1, 3, 3, 3, 3, 3, 3, 2}},
    {"u6", "u6", {2, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 1, 0}},
    {"r7", "r7", {4, 3, 3, 3, 3, 3, 1, 3, 3, 3, 3, 3, 2}},
    {"r8", "r8", {4, 3, 3, 3, 3, 3, 3, 1, 3, 3, 3, 3, 2}},
    {"r9", "r9", {4, 3, 3, 3, 3, 3, 3, 3, 1, 3, 3, 3, 2}},
    {"r10", "r10", {4, 3, 3, 3, 3, 3, 3, 3, 3, 1, 3, 3, 2}},
    {"r11", "r11", {4, 3, 3, 3, 3, 3, 3, 3, 3, 3, 1, 3, 2}},
    {"r12", "r12", {4, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 1, 2}},
}};

// Positions whose printed code matches no vertex of the graph at all. The u
// rows end in 3, but two U vertices are an even distance (4) apart.
inline constexpr std::array<const char*, 8> kZ91Unrealizable = {"s2_5", "s2_6", "t3_12", "u1",
                                                                "u2",   "u3",   "u4",    "u5"};

}  // namespace zdg::testing

// Generated by tests/oracle/oracle.py; do not edit by hand.
#pragma once

#include <cstdint>

namespace oracle {

struct Instance {
  int n, k;
  double lambda;
  const char* chi;
  std::int64_t det_gram_s;
};

inline constexpr Instance kInstances[] = {
    {2, 4, 3.7320508075688773, "1 -4 1", -192},
    {2, 6, 5.8284271247461901, "1 -6 1", -1152},
    {3, 2, 2.6180339887498948, "1 -2 -2 1", -256},
    {3, 4, 4.79128784747792, "1 -4 -4 1", -13824},
    {4, 2, 2.8900536382639638, "1 -2 -2 -2 1", -4096},
};

// Degrees of f^m computed on random lines over GF(1000000007), a = 0 and a generic a.
inline constexpr std::int64_t kDegrees_2_4[] = {1, 5, 25, 101, 385, 1445};
inline constexpr std::int64_t kDegrees_2_6[] = {1, 7, 49, 295};
inline constexpr std::int64_t kDegrees_3_2[] = {1, 3, 9, 27, 73, 195, 513, 1347};
inline constexpr std::int64_t kDegrees_3_4[] = {1, 5, 25, 125, 601};
inline constexpr std::int64_t kDegrees_4_2[] = {1, 3, 9, 27, 81, 235, 681, 1971};

// Phase-portrait parameters n = 2, k = 4, c = 0, a_2 = -2.64; sorted by (Re, Im).
inline constexpr double kPresetZetaRe[] = {-0.8711969998819028, -0.7379743983345272, 0.5169114017333853, 0.5169114017333853, 0.5753485947496594};
inline constexpr double kPresetZetaIm[] = {0.0, 0.0, -1.0413959922058442, 1.0413959922058442, 0.0};
inline constexpr double kPresetTraceRe[] = {-0.014818186312702934, 5.137418525105672, -4.699783333597348, -4.699783333597348, -35.72303367159827};
inline constexpr double kPresetTraceIm[] = {0.0, 0.0, 0.6298824847569229, -0.6298824847569229, 0.0};

// Rank of the trace map at a = 0.
inline constexpr int kTraceRank[] = {0, 1, 2, 3};

}  // namespace oracle

#include "hamfix/golden.hpp"

#include <tuple>

namespace hamfix {

// Transcribed from the published six-dimensional classification table and the
// capacities table that follows it. Printed capacity columns are kept verbatim
// (H_max, H_smin, H_min, w_G, c_HZ) so that disagreements stay visible.
const std::vector<GoldenRow6>& golden6() {
    static const std::vector<GoldenRow6> rows = {
        // label     max crit       k  m  Z_0                               c1^3 b2 b3  Hmax smin min wG cHZ  Zmax  vol
        {"I-1", 0, {0}, 0, 0, {{{2}, 0}}, 54, 1, 0, 3, -1, -3, 2, 6, "", std::nullopt},
        {"I-2", 0, {-1, 1}, 3, 3, {}, 48, 3, 0, 3, -1, -3, 2, 6, "", std::nullopt},
        {"I-3", 0, {-1, 0, 1}, 1, 1, {{{1, -1}, 0}, {{1, -1}, 0}}, 52, 3, 0, 3, -1, -3, 2, 6, "", std::nullopt},
        // sphere areas of the maxima are quoted in the worked toric examples
        {"II-3.1", 2, {-1, 0}, 1, 0, {{{0, 1}, 0}}, 62, 2, 0, 2, -1, -3, 2, 5, "", 5},
        {"II-3.2", 2, {-1, 0}, 1, 0, {{{1, 0}, 0}}, 54, 2, 0, 2, -1, -3, 2, 5, "", 3},
        {"II-3.3", 2, {-1, 0}, 1, 0, {{{2, -1}, 0}}, 46, 2, 0, 2, -1, -3, 2, 5, "", 1},
        // area 1 follows from 2k + Vol(Z_0) + Vol(Z_max) = 8
        {"II-4.1", 2, {-1, 0, 1}, 2, 1, {{{1, -1, 0}, 0}, {{1, -1, -1}, 0}}, 44, 4, 0, 2, -1, -3, 2, 5, "", 1},
        {"II-4.2", 2, {-1, 0, 1}, 3, 2, {{{1, 0, -1, -1}, 0}}, 42, 4, 0, 2, -1, -3, 2, 5, "", 1},
        {"III-1", 4, {}, 0, 0, {}, 64, 1, 0, 1, 1, -3, 4, 4, "P2", std::nullopt},
        {"III-2", 4, {-1}, 1, 0, {}, 56, 2, 0, 1, -1, -3, 2, 4, "P2#1", std::nullopt},
        {"III-3.1", 4, {0}, 0, 0, {{{1}, 0}}, 54, 2, 0, 1, 0, -3, 3, 4, "P2", std::nullopt},
        {"III-3.2", 4, {0}, 0, 0, {{{2}, 0}}, 46, 2, 0, 1, 0, -3, 3, 4, "P2", std::nullopt},
        {"III-3.3", 4, {0}, 0, 0, {{{3}, 1}}, 40, 2, 2, 1, 0, -3, 3, 4, "P2", std::nullopt},
        {"III-4.1", 4, {-1, 0}, 1, 0, {{{0, 1}, 0}}, 50, 3, 0, 1, -1, -3, 2, 4, "P2#1", std::nullopt},
        {"III-4.2", 4, {-1, 0}, 1, 0, {{{1, -1}, 0}}, 50, 3, 0, 1, -1, -3, 2, 4, "P2#1", std::nullopt},
        {"III-4.3", 4, {-1, 0}, 1, 0, {{{1, 0}, 0}}, 46, 3, 0, 1, -1, -3, 2, 4, "P2#1", std::nullopt},
        {"III-4.4", 4, {-1, 0}, 1, 0, {{{2, -1}, 0}}, 42, 3, 0, 1, -1, -3, 2, 4, "P2#1", std::nullopt},
        {"III-4.5", 4, {-1, 0}, 2, 0, {{{1, -1, -1}, 0}}, 46, 4, 0, 1, -1, -3, 2, 4, "P2#2", std::nullopt},
    };
    return rows;
}

// Four-dimensional table: minimum/maximum dimensions, interior point count and e(P_min^+).
const std::vector<GoldenRow4>& golden4() {
    static const std::vector<GoldenRow4> rows = {
        {"I-1", "P1xP1", 0, 0, 2, -1, 2},
        {"II-1", "P2", 0, 2, 0, -1, 1},
        {"II-2", "P2#1", 0, 2, 1, -1, 2},
        {"II-3", "P2#2", 0, 2, 2, -1, 3},
        {"III-1", "P1xP1", 2, 2, 0, 0, 2},
        {"III-2", "P2#1", 2, 2, 0, -1, 2},
        {"III-3", "P2#2", 2, 2, 1, 0, 3},
        {"III-4", "P2#3", 2, 2, 2, -1, 4},
    };
    return rows;
}

const std::set<std::tuple<int, int, int>>& golden_case3_tuples() {
    static const std::set<std::tuple<int, int, int>> t = {
        {1, -1, 0}, {1, -1, 1}, {1, -1, 2}, {2, 0, 0}, {2, 0, 1}, {3, 1, 0},
    };
    return t;
}

}  // namespace hamfix

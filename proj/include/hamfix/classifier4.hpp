#pragma once

#include <array>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "hamfix/rational.hpp"

namespace hamfix {

// Reduced spaces are all S^2; a class is an integer multiple of u with u[S^2] = 1,
// so DH is the area and varies linearly.
struct Slice4 {
    Rational lo, hi;
    Rational areaLo;
    long long euler = 0;
    Rational area(const Rational& t) const { return areaLo - (t - lo) * euler; }
};

struct Extremum4 {
    int dim = 0;          // 0 or 2
    int level = 0;        // -2, -1, 1, 2
    long long selfIntersection = 0;  // spheres only
};

struct TFD4 {
    std::string label;
    std::string manifold;  // golden metadata
    Extremum4 min, max;
    int k = 0;             // points at level 0
    long long eulerMin = 0;  // e(P_min^+) as a multiple of u
    std::vector<Slice4> slices;
    long long c1sq = 0;
    std::array<int, 5> betti{};

    std::vector<int> levels() const;
};

using Tuple3 = std::tuple<int, int, int>;

// (a, b, k): area a of the sphere minimum, e(P_min^+) = b u, k interior points.
std::set<Tuple3> enumerate_case3_tuples();
Tuple3 flip_tuple(const Tuple3& t);
// One representative per flip orbit: smallest |b|, then smallest a.
std::set<Tuple3> dedup_case3(const std::set<Tuple3>& tuples);
// Tuples whose flip image is missing from the set.
std::vector<Tuple3> unmerged_case3(const std::set<Tuple3>& tuples);

// Builds the data and checks DH positivity, the extremal conditions and the
// localization identity; throws InconsistentFixedPointData on failure.
TFD4 make_tfd4(const Extremum4& min, const Extremum4& max, int k, long long eulerMin);
TFD4 make_case3(const Tuple3& t);
TFD4 flip(const TFD4& t);

// Localized integrals: coefficient of x^-2 of int 1 and the number int c1^2.
Rational integral_one4(const TFD4& t);
Rational c1_squared(const TFD4& t);

// All eight rows in table order with labels; throws ClassificationMismatch.
std::vector<TFD4> classify4();

}  // namespace hamfix

#include "hamfix/classifier4.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <optional>

#include "hamfix/errors.hpp"
#include "hamfix/golden.hpp"

namespace hamfix {

namespace {

[[noreturn]] void bad(const std::string& m) { throw Error(ErrorCode::InconsistentFixedPointData, m); }

bool positive_on(const Slice4& s) {
    Rational a = s.area(s.lo), b = s.area(s.hi);
    return a >= 0 && b >= 0 && (a + b) > 0;
}

// K^2 of the named surface
long long k2_of(const std::string& name) {
    if (name == "P1xP1") return 8;
    if (name == "P2") return 9;
    if (name.rfind("P2#", 0) == 0) return 9 - std::stoll(name.substr(3));
    throw Error(ErrorCode::InvalidInput, "unknown surface " + name);
}

}  // namespace

std::vector<int> TFD4::levels() const {
    std::vector<int> out{min.level};
    if (k > 0) out.push_back(0);
    out.push_back(max.level);
    return out;
}

std::set<Tuple3> enumerate_case3_tuples() {
    std::set<Tuple3> out;
    for (int a = -4; a <= 4; ++a)
        for (int b = -4; b <= 4; ++b)
            for (int k = 0; k <= 4; ++k)
                if (a > 0 && a - b == 2 && a - 2 * b - k > 0) out.insert({a, b, k});
    return out;
}

Tuple3 flip_tuple(const Tuple3& t) {
    auto [a, b, k] = t;
    return {a - 2 * b - k, -(b + k), k};
}

std::set<Tuple3> dedup_case3(const std::set<Tuple3>& tuples) {
    auto better = [](const Tuple3& x, const Tuple3& y) {
        int bx = std::abs(std::get<1>(x)), by = std::abs(std::get<1>(y));
        return bx != by ? bx < by : std::get<0>(x) < std::get<0>(y);
    };
    std::set<Tuple3> out;
    for (const auto& t : tuples) {
        Tuple3 f = flip_tuple(t);
        out.insert(tuples.count(f) && better(f, t) ? f : t);
    }
    return out;
}

std::vector<Tuple3> unmerged_case3(const std::set<Tuple3>& tuples) {
    std::vector<Tuple3> out;
    for (const auto& t : tuples)
        if (!tuples.count(flip_tuple(t))) out.push_back(t);
    return out;
}

Rational integral_one4(const TFD4& t) {
    Rational s = 0;
    s += t.min.dim == 0 ? Rational(1) : Rational(-t.min.selfIntersection);
    s += -t.k;
    s += t.max.dim == 0 ? Rational(1) : Rational(-t.max.selfIntersection);
    return s;
}

Rational c1_squared(const TFD4& t) {
    // points (w1 + w2)^2 / (w1 w2); spheres 4 + Z.Z
    Rational s = 0;
    s += t.min.dim == 0 ? Rational(4) : Rational(4 + t.min.selfIntersection);
    s += t.max.dim == 0 ? Rational(4) : Rational(4 + t.max.selfIntersection);
    return s;
}

TFD4 make_tfd4(const Extremum4& mn, const Extremum4& mx, int k, long long eulerMin) {
    if (k < 0) bad("negative point count");
    TFD4 t;
    t.min = mn;
    t.max = mx;
    t.k = k;
    t.eulerMin = eulerMin;
    Rational areaMin;
    if (mn.dim == 0) {
        t.min.level = -2;
        if (eulerMin != -1) bad("Euler class above a point minimum must be -u");
        areaMin = 0;
    } else if (mn.dim == 2) {
        t.min.level = -1;
        t.min.selfIntersection = eulerMin;
        areaMin = 2 + eulerMin;
        if (areaMin <= 0) bad("sphere minimum with non-positive area");
    } else {
        bad("extremum of dimension " + std::to_string(mn.dim));
    }
    int top = mx.dim == 0 ? 2 : 1;
    t.max.level = top;
    Slice4 s{Rational(t.min.level), Rational(k > 0 ? 0 : top), areaMin, eulerMin};
    t.slices.push_back(s);
    if (k > 0) {
        if (s.area(0) != 2) bad("area at level 0 is not 2");
        t.slices.push_back({Rational(0), Rational(top), s.area(0), eulerMin + k});
    }
    for (const auto& sl : t.slices)
        if (!positive_on(sl)) bad("area not positive between critical levels");
    const Slice4& last = t.slices.back();
    if (mx.dim == 0) {
        if (last.area(2) != 0 || last.euler != 1) bad("point maximum needs area 0 and Euler class u");
    } else if (mx.dim == 2) {
        t.max.selfIntersection = -last.euler;
        if (last.area(1) <= 0 || last.area(1) != 2 + t.max.selfIntersection) bad("sphere maximum is not monotone");
    } else {
        bad("extremum of dimension " + std::to_string(mx.dim));
    }
    if (integral_one4(t) != 0) bad("integral of 1 does not vanish");
    Rational c = c1_squared(t);
    if (!is_integer(c)) throw Error(ErrorCode::InternalArithmeticError, "c1^2 = " + to_string(c));
    t.c1sq = to_ll(c);
    t.betti = {};
    t.betti[0] += 1;
    if (mn.dim == 2) t.betti[2] += 1;
    t.betti[2] += k;
    if (mx.dim == 2) t.betti[2] += 1;
    t.betti[4] += 1;
    return t;
}

TFD4 make_case3(const Tuple3& tp) {
    auto [a, b, k] = tp;
    if (a != 2 + b) bad("sphere minimum is not monotone");
    TFD4 t = make_tfd4({2, -1, 0}, {2, 1, 0}, k, b);
    if (t.slices.front().area(-1) != a) bad("area mismatch at the minimum");
    return t;
}

TFD4 flip(const TFD4& t) {
    TFD4 r = t;
    r.min = t.max;
    r.max = t.min;
    r.min.level = -t.max.level;
    r.max.level = -t.min.level;
    r.eulerMin = -t.slices.back().euler;
    r.slices.clear();
    for (auto it = t.slices.rbegin(); it != t.slices.rend(); ++it)
        r.slices.push_back({-it->hi, -it->lo, it->area(it->hi), -it->euler});
    return r;
}

std::vector<TFD4> classify4() {
    std::vector<TFD4> found;
    auto attempt = [&](const Extremum4& mn, const Extremum4& mx, int k, long long e) {
        try {
            found.push_back(make_tfd4(mn, mx, k, e));
        } catch (const Error&) {
        }
    };
    for (int k = 0; k <= 4; ++k) attempt({0, -2, 0}, {0, 2, 0}, k, -1);
    for (int k = 0; k <= 4; ++k) attempt({0, -2, 0}, {2, 1, 0}, k, -1);
    for (const auto& tp : dedup_case3(enumerate_case3_tuples())) found.push_back(make_case3(tp));

    const auto& gold = golden4();
    std::vector<std::optional<TFD4>> slot(gold.size());
    std::string problems;
    for (auto& t : found) {
        bool placed = false;
        for (size_t i = 0; i < gold.size() && !placed; ++i) {
            const auto& g = gold[i];
            if (g.minDim != t.min.dim || g.maxDim != t.max.dim || g.interior != t.k || g.eulerMin != t.eulerMin) continue;
            placed = true;
            if (slot[i]) {
                problems += "duplicate " + g.label + "\n";
                continue;
            }
            t.label = g.label;
            t.manifold = g.manifold;
            if (t.betti[2] != g.b2) problems += g.label + ": b2 " + std::to_string(t.betti[2]) + "\n";
            if (t.c1sq != k2_of(g.manifold) || t.c1sq + 2 + t.betti[2] != 12)
                problems += g.label + ": c1^2 " + std::to_string(t.c1sq) + "\n";
            slot[i] = t;
        }
        if (!placed) problems += "unexpected row with " + std::to_string(t.k) + " interior points\n";
    }
    std::vector<TFD4> out;
    for (size_t i = 0; i < gold.size(); ++i) {
        if (!slot[i]) problems += "missing " + gold[i].label + "\n";
        else out.push_back(*slot[i]);
    }
    if (!problems.empty()) throw Error(ErrorCode::ClassificationMismatch, problems);
    return out;
}

}  // namespace hamfix

#include "hamfix/reduction.hpp"

#include "hamfix/errors.hpp"

namespace hamfix {

SliceState initial_slice(const FixedComponentSpec& m) {
    m.validate();
    if (!m.is_minimum()) throw Error(ErrorCode::NotAMinimum, m.summary() + " at level " + std::to_string(m.level));
    SliceState s;
    s.lo = m.level;
    s.hi = 3;
    s.anchorLevel = m.level;
    switch (m.kind) {
        case ComponentKind::IsolatedPoint: {
            s.lattice = SurfaceLattice::blowup(0);
            s.euler = -gen_u(s.lattice);
            s.anchorClass = CohClass(s.lattice);
            return s;
        }
        case ComponentKind::ExtremalSurface: {
            // fiber F has e.F = -1, e^2 = -b and omega(-2) = (2 + b) F
            long long b = m.normalDegrees.first + m.normalDegrees.second;
            if (b % 2 != 0) {
                s.lattice = SurfaceLattice::blowup(1);
                CohClass F = gen_u(s.lattice) - gen_E(s.lattice, 1);
                s.euler = CohClass::from_ints(s.lattice, {(b - 1) / 2, (-b - 1) / 2});
                s.anchorClass = Rational(2 + b) * F;
            } else {
                s.lattice = SurfaceLattice::product();
                s.euler = CohClass::from_ints(s.lattice, {b / 2, -1});
                s.anchorClass = Rational(2 + b) * gen_x(s.lattice);
            }
            return s;
        }
        case ComponentKind::ExtremalFourManifold: {
            s.lattice = *m.lattice;
            s.euler = *m.eulerAtBoundary;
            s.anchorClass = s.lattice.anticanonical() + s.euler;
            return s;
        }
        default: break;
    }
    throw Error(ErrorCode::NotAMinimum, m.summary());
}

SliceState with_interval(const SliceState& s, const Rational& lo, const Rational& hi) {
    SliceState r = s;
    r.lo = lo;
    r.hi = hi;
    return r;
}

namespace {

// P1 x P1 blown up at a point is P2 # 2 with x = u - E1, y = u - E2 and new class u - E1 - E2.
CohClass product_to_blowup2(const CohClass& c) {
    SurfaceLattice B = SurfaceLattice::blowup(2);
    return c[0] * (gen_u(B) - gen_E(B, 1)) + c[1] * (gen_u(B) - gen_E(B, 2));
}

CohClass pad(const CohClass& c, const SurfaceLattice& bigger) {
    std::vector<Rational> v = c.coeffs();
    v.resize(bigger.rank(), Rational(0));
    return CohClass(bigger, v);
}

}  // namespace

SliceState cross(const SliceState& state, const CrossingEvent& ev) {
    Rational level = ev.level;
    if (!(state.lo < level && level <= state.hi))
        throw Error(ErrorCode::OutOfInterval, "crossing level " + std::to_string(ev.level) + " outside slice");
    int up = 0, down = 0;
    std::vector<CohClass> surfaces;
    for (const auto& fc : ev.components) {
        fc.validate();
        if (fc.level != ev.level) throw Error(ErrorCode::InvalidFixedComponent, "component level differs from event");
        if (fc.is_extremal()) throw Error(ErrorCode::InvalidFixedComponent, "extremal component inside a sweep");
        if (fc.kind == ComponentKind::InteriorSurface)
            surfaces.push_back(*fc.surfaceClass);
        else if (fc.index() == 2)
            ++up;
        else
            ++down;
    }

    SurfaceLattice L = state.lattice;
    CohClass omega = state.omega(level);
    CohClass e = state.euler;

    if (down > 0) {
        auto exc = all_exceptional_classes(L);
        std::vector<CohClass> vanish;
        for (const auto& C : exc) {
            Rational a = pair(omega, C);
            if (a < 0) throw Error(ErrorCode::AreaContinuityViolation, C.to_string() + " has negative area");
            if (a == 0) vanish.push_back(C);
        }
        if (static_cast<int>(vanish.size()) != down)
            throw Error(ErrorCode::VanishingCycleMismatch, std::to_string(vanish.size()) + " classes vanish, " +
                                                               std::to_string(down) + " points");
        for (size_t i = 0; i < vanish.size(); ++i)
            for (size_t j = i + 1; j < vanish.size(); ++j)
                if (pair(vanish[i], vanish[j]) != 0)
                    throw Error(ErrorCode::NonDisjointBlowdown,
                                vanish[i].to_string() + " meets " + vanish[j].to_string());
        for (const auto& C : vanish) {
            if (pair(e, C) != 1)
                throw Error(ErrorCode::AreaContinuityViolation, C.to_string() + " does not shrink at unit rate");
            e += C;
        }
        auto [S, carried] = blow_down(L, vanish, {omega, e});
        L = S;
        omega = carried[0];
        e = carried[1];
    }
    for (const auto& Z : surfaces) e += Z;
    for (int i = 0; i < up; ++i) {
        if (L.kind() == LatticeKind::ProductOfSpheres) {
            omega = product_to_blowup2(omega);
            e = product_to_blowup2(e);
            L = SurfaceLattice::blowup(2);
            e += gen_u(L) - gen_E(L, 1) - gen_E(L, 2);
            continue;
        }
        SurfaceLattice B = SurfaceLattice::blowup(L.k() + 1);
        omega = pad(omega, B);
        e = pad(e, B) + gen_E(B, B.k());
        L = B;
    }
    SliceState out;
    out.lattice = L;
    out.anchorLevel = level;
    out.anchorClass = omega;
    out.euler = e;
    out.lo = level;
    out.hi = state.hi;
    return out;
}

Rational dh(const SliceState& s, const Rational& t) {
    if (t < s.lo || t > s.hi) throw Error(ErrorCode::OutOfInterval, "t = " + to_string(t));
    CohClass w = s.omega(t);
    return pair(w, w);
}

static std::array<Rational, 3> dh_poly_at(const SliceState& s, const Rational& c) {
    CohClass w = s.omega(c);
    return {pair(w, w), -2 * pair(w, s.euler), pair(s.euler, s.euler)};
}

std::array<Rational, 3> dh_difference(const SliceState& before, const SliceState& after) {
    if (before.hi != after.lo)
        throw Error(ErrorCode::NotAdjacentSlices, to_string(before.hi) + " vs " + to_string(after.lo));
    auto a = dh_poly_at(before, before.hi), b = dh_poly_at(after, after.lo);
    return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}

bool check_dh_decrease(const SliceState& before, const SliceState& after, int k) {
    auto d = dh_difference(before, after);
    return d[0] == 0 && d[1] == 0 && d[2] == k;
}

SphereMaxData bmax_from_euler(const SliceState& s) {
    if (s.hi != 2 || s.lattice.rank() != 2)
        throw Error(ErrorCode::NotASphereMaximum, "slice does not end at a sphere maximum");
    long long b = -to_ll(pair(s.euler, s.euler));
    return {b, 2 + b};
}

bool square_positive(const SliceState& s) {
    auto q = [&](const Rational& t) {
        CohClass w = s.omega(t);
        return pair(w, w);
    };
    if (q(s.lo) < 0 || q(s.hi) < 0) return false;
    if (q((s.lo + s.hi) / 2) <= 0) return false;
    Rational ee = pair(s.euler, s.euler);
    if (ee > 0) {
        // vertex of the convex quadratic |P - tE|^2
        CohClass P = s.omega(0);
        Rational v = pair(P, s.euler) / ee;
        if (s.lo < v && v < s.hi && q(v) <= 0) return false;
    }
    return true;
}

bool exceptional_areas_positive(const SliceState& s) {
    CohClass a = s.omega(s.lo), b = s.omega(s.hi);
    for (const auto& C : all_exceptional_classes(s.lattice)) {
        Rational x = pair(a, C), y = pair(b, C);
        if (x < 0 || y < 0 || (x == 0 && y == 0)) return false;
    }
    return true;
}

}  // namespace hamfix

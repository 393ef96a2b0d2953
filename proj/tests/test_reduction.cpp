#include <doctest.h>
#include <functional>

#include "hamfix/errors.hpp"
#include "hamfix/reduction.hpp"

using namespace hamfix;

namespace {

CohClass cls(const SurfaceLattice& L, std::vector<long long> c) { return CohClass::from_ints(L, c); }

const auto MIN = FixedComponentSpec::point({1, 1, 1});
const auto IDX2 = FixedComponentSpec::point({-1, 1, 1});
const auto IDX4 = FixedComponentSpec::point({-1, -1, 1});

CrossingEvent points(int level, const FixedComponentSpec& p, int n) {
    return CrossingEvent{level, std::vector<FixedComponentSpec>(n, p)};
}

CrossingEvent surface(const CohClass& Z) {
    return CrossingEvent{0, {FixedComponentSpec::interior_surface(Z, 0, 0, static_cast<int>(to_ll(pair(Z, Z))))}};
}

ErrorCode code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    return ErrorCode::InvalidInput;
}

}  // namespace

TEST_CASE("initial slice at an isolated minimum") {
    SliceState s = initial_slice(MIN);
    auto P2 = SurfaceLattice::blowup(0);
    CHECK(s.lattice == P2);
    CHECK(s.euler == cls(P2, {-1}));
    CHECK(s.omega(0) == cls(P2, {3}));
    CHECK(s.omega(-3).is_zero());
    CHECK(code_of([] { initial_slice(IDX2); }) == ErrorCode::NotAMinimum);
    CHECK(code_of([] { initial_slice(FixedComponentSpec::point({-1, -1, -1})); }) == ErrorCode::NotAMinimum);
}

TEST_CASE("initial slice at a surface or four-manifold minimum is monotone at 0") {
    for (int b = -3; b <= 3; ++b) {
        SliceState s = initial_slice(FixedComponentSpec::extremal_surface(-2, b, 0));
        CHECK(s.omega(0) == s.lattice.anticanonical());
        CHECK(pair(s.euler, s.euler) == -b);
        CHECK(pair(s.omega(-2), s.omega(-2)) == 0);
        CHECK(pair(s.lattice.anticanonical(), s.omega(-2)) == 2 * (2 + b));
    }
    auto P2 = SurfaceLattice::blowup(0);
    SliceState f = initial_slice(FixedComponentSpec::extremal_four(-1, P2, cls(P2, {1})));
    CHECK(f.omega(0) == cls(P2, {3}));
    CHECK(f.omega(-1) == cls(P2, {4}));
}

TEST_CASE("crossing index-two points and a surface") {
    SliceState s0 = initial_slice(MIN);
    SliceState s1 = cross(s0, points(-1, IDX2, 3));
    auto L3 = SurfaceLattice::blowup(3);
    CHECK(s1.lattice == L3);
    CHECK(s1.euler == cls(L3, {-1, 1, 1, 1}));
    CHECK(s1.omega(-1) == cls(L3, {2, 0, 0, 0}));
    CHECK(s1.omega(0) == L3.anticanonical());

    auto P2 = SurfaceLattice::blowup(0);
    SliceState z = cross(s0, surface(cls(P2, {2})));
    CHECK(z.euler == cls(P2, {1}));
}

TEST_CASE("crossing index-four points blows down") {
    SliceState s = cross(initial_slice(MIN), points(-1, IDX2, 3));
    CHECK(dh(with_interval(s, -1, 1), 1) == 4);
    SliceState top = cross(s, points(1, IDX4, 3));
    auto P2 = SurfaceLattice::blowup(0);
    CHECK(top.lattice == P2);
    CHECK(top.omega(1) == cls(P2, {2}));
    CHECK(top.euler == cls(P2, {1}));
    CHECK(top.omega(3).is_zero());
    // continuity across the blow-down
    CHECK(dh_difference(with_interval(s, -1, 1), top)[0] == 0);

    // three vanishing classes but two points
    CHECK(code_of([&] { cross(s, points(1, IDX4, 2)); }) == ErrorCode::VanishingCycleMismatch);
}

TEST_CASE("blow-down failure modes") {
    auto L2 = SurfaceLattice::blowup(2);
    SliceState s;
    s.lattice = L2;
    s.anchorLevel = 1;
    s.anchorClass = cls(L2, {1, 0, -1});
    s.euler = cls(L2, {0, 1, 0});
    s.lo = 0;
    s.hi = 3;
    CHECK(code_of([&] { cross(s, points(1, IDX4, 2)); }) == ErrorCode::NonDisjointBlowdown);
    s.anchorClass = cls(L2, {1, 1, 0});
    CHECK(code_of([&] { cross(s, points(1, IDX4, 1)); }) == ErrorCode::AreaContinuityViolation);
}

TEST_CASE("DH evaluations") {
    SliceState s = initial_slice(MIN);
    CHECK(dh(with_interval(s, -3, 0), -3) == 0);
    CHECK(code_of([&] { dh(with_interval(s, -3, 0), 1); }) == ErrorCode::OutOfInterval);
    auto P2 = SurfaceLattice::blowup(0);
    SliceState z = cross(s, surface(cls(P2, {2})));
    CHECK(dh(with_interval(z, 0, 1), 1) == 4);
}

TEST_CASE("DH drops by k t^2 across index-two points") {
    SliceState s0 = initial_slice(MIN);
    for (int k = 1; k <= 8; ++k) {
        SliceState before = with_interval(s0, -3, -1);
        SliceState after = with_interval(cross(s0, points(-1, IDX2, k)), -1, 1);
        CHECK(check_dh_decrease(before, after, k));
        auto d = dh_difference(before, after);
        CHECK(d[2] == k);
    }
    CHECK(check_dh_decrease(with_interval(s0, -3, -2), with_interval(s0, -2, 3), 0));
    CHECK(code_of([&] { dh_difference(with_interval(s0, -3, -2), with_interval(s0, -1, 3)); }) ==
          ErrorCode::NotAdjacentSlices);

    SliceState p = initial_slice(FixedComponentSpec::extremal_surface(-2, 0, 0));
    CHECK(p.lattice == SurfaceLattice::product());
    SliceState q = cross(p, points(-1, IDX2, 1));
    CHECK(q.lattice == SurfaceLattice::blowup(2));
    CHECK(check_dh_decrease(with_interval(p, -2, -1), with_interval(q, -1, 3), 1));
    CHECK(q.omega(0) == q.lattice.anticanonical());
}

TEST_CASE("sphere maximum data") {
    auto L1 = SurfaceLattice::blowup(1);
    SliceState s;
    s.lattice = L1;
    s.euler = cls(L1, {1, -1});
    s.anchorClass = L1.anticanonical();
    s.lo = 0;
    s.hi = 2;
    auto d = bmax_from_euler(s);
    CHECK(d.bmax == 0);
    CHECK(d.volume == 2);

    SliceState a = cross(initial_slice(MIN), points(-1, IDX2, 1));
    SliceState b = with_interval(cross(a, surface(gen_E(L1, 1))), 0, 2);
    CHECK(bmax_from_euler(b).volume == 5);
    SliceState c = with_interval(cross(a, surface(cls(L1, {2, -1}))), 0, 2);
    CHECK(bmax_from_euler(c).bmax == -1);
    CHECK(bmax_from_euler(c).volume == 1);
    CHECK(code_of([&] { bmax_from_euler(with_interval(b, 0, 3)); }) == ErrorCode::NotASphereMaximum);
}

TEST_CASE("positivity predicates") {
    SliceState s = with_interval(initial_slice(MIN), -3, 3);
    CHECK(square_positive(s));
    CHECK(exceptional_areas_positive(s));
    CHECK_FALSE(square_positive(with_interval(initial_slice(MIN), -4, 3)));
    SliceState k3 = cross(initial_slice(MIN), points(-1, IDX2, 3));
    CHECK(exceptional_areas_positive(with_interval(k3, -1, 1)));
    CHECK_FALSE(exceptional_areas_positive(with_interval(k3, -1, 2)));
}

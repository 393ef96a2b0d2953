#pragma once

#include <array>

#include "hamfix/tfd.hpp"

namespace hamfix {

SliceState initial_slice(const FixedComponentSpec& minKind);

// Passes a critical level. The result's interval starts at ev.level and keeps state.hi.
SliceState cross(const SliceState& state, const CrossingEvent& ev);

SliceState with_interval(const SliceState& s, const Rational& lo, const Rational& hi);

Rational dh(const SliceState& s, const Rational& t);

// Coefficients (s^0, s^1, s^2) of DH_-(c + s) - DH_+(c + s), c the shared endpoint.
std::array<Rational, 3> dh_difference(const SliceState& before, const SliceState& after);
bool check_dh_decrease(const SliceState& before, const SliceState& after, int k);

struct SphereMaxData {
    long long bmax;
    long long volume;
};
SphereMaxData bmax_from_euler(const SliceState& s);

// omega(t)^2 > 0 on the open interval, decided exactly.
bool square_positive(const SliceState& s);
// omega(t).C > 0 on the open interval for every exceptional class C.
bool exceptional_areas_positive(const SliceState& s);

}  // namespace hamfix

#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hamfix/lattice.hpp"

namespace hamfix {

enum class ComponentKind { IsolatedPoint, InteriorSurface, ExtremalSurface, ExtremalFourManifold };

// One fixed component of a semifree action on a 6-manifold.
// Weights are +-1 (or 0 along the component); level = -(sum of weights).
struct FixedComponentSpec {
    int level = 0;
    ComponentKind kind = ComponentKind::IsolatedPoint;
    std::array<int, 3> weights{1, 1, 1};
    // surfaces
    std::optional<CohClass> surfaceClass;
    int genus = 0;
    std::pair<int, int> normalDegrees{0, 0};  // (b+, b-) interior, (d1, d2) extremal
    // four-manifolds; eulerAtBoundary is e(P^-) below a maximum, e(P^+) above a minimum
    std::optional<SurfaceLattice> lattice;
    std::optional<CohClass> eulerAtBoundary;

    static FixedComponentSpec point(std::array<int, 3> w);
    static FixedComponentSpec interior_surface(const CohClass& cls, int genus, int bPlus, int bMinus);
    static FixedComponentSpec extremal_surface(int level, int d1, int d2, int genus = 0);
    static FixedComponentSpec extremal_four(int level, const SurfaceLattice& L, const CohClass& euler);

    int dimension() const;
    int index() const;
    bool is_extremal() const;
    bool is_minimum() const;
    bool is_maximum() const;
    // Throws InvalidFixedComponent.
    void validate() const;
    std::string summary() const;
    bool operator==(const FixedComponentSpec& o) const;
};

struct CrossingEvent {
    int level = 0;
    std::vector<FixedComponentSpec> components;
};

// Reduced data on an open interval of regular values:
// omega(t) = anchorClass - (t - anchorLevel) euler.
struct SliceState {
    SurfaceLattice lattice = SurfaceLattice::blowup(0);
    Rational anchorLevel;
    CohClass anchorClass{SurfaceLattice::blowup(0)};
    CohClass euler{SurfaceLattice::blowup(0)};
    Rational lo, hi;

    CohClass omega(const Rational& t) const;
    bool operator==(const SliceState& o) const;
};

struct Capacities {
    Rational gromovWidth;
    Rational hoferZehnder;
    bool operator==(const Capacities& o) const {
        return gromovWidth == o.gromovWidth && hoferZehnder == o.hoferZehnder;
    }
};

struct TFD {
    std::string label;
    std::vector<CrossingEvent> crit;  // ascending levels, extrema included
    std::vector<SliceState> slices;   // slices[i] lies between crit[i] and crit[i+1]
    // derived invariants, filled by the classifiers
    std::optional<std::array<int, 7>> bettiNumbers;
    std::optional<long long> chern;
    std::optional<Capacities> capacities;

    const FixedComponentSpec& minimum() const { return crit.front().components.front(); }
    const FixedComponentSpec& maximum() const { return crit.back().components.front(); }
    std::vector<int> levels() const;
    // Count of components at a level.
    int count_at(int level) const;
    const CrossingEvent* event_at(int level) const;
};

}  // namespace hamfix

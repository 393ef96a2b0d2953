#include "hamfix/tfd.hpp"

#include <algorithm>

#include "hamfix/errors.hpp"

namespace hamfix {

FixedComponentSpec FixedComponentSpec::point(std::array<int, 3> w) {
    FixedComponentSpec f;
    f.kind = ComponentKind::IsolatedPoint;
    std::sort(w.begin(), w.end());
    f.weights = w;
    f.level = -(w[0] + w[1] + w[2]);
    return f;
}

FixedComponentSpec FixedComponentSpec::interior_surface(const CohClass& cls, int genus, int bPlus, int bMinus) {
    FixedComponentSpec f;
    f.kind = ComponentKind::InteriorSurface;
    f.level = 0;
    f.weights = {-1, 0, 1};
    f.surfaceClass = cls;
    f.genus = genus;
    f.normalDegrees = {bPlus, bMinus};
    return f;
}

FixedComponentSpec FixedComponentSpec::extremal_surface(int level, int d1, int d2, int genus) {
    FixedComponentSpec f;
    f.kind = ComponentKind::ExtremalSurface;
    f.level = level;
    int w = level > 0 ? -1 : 1;
    f.weights = {0, w, w};
    std::sort(f.weights.begin(), f.weights.end());
    f.genus = genus;
    f.normalDegrees = {d1, d2};
    return f;
}

FixedComponentSpec FixedComponentSpec::extremal_four(int level, const SurfaceLattice& L, const CohClass& euler) {
    FixedComponentSpec f;
    f.kind = ComponentKind::ExtremalFourManifold;
    f.level = level;
    f.weights = {0, 0, level > 0 ? -1 : 1};
    std::sort(f.weights.begin(), f.weights.end());
    f.lattice = L;
    f.eulerAtBoundary = euler;
    return f;
}

int FixedComponentSpec::dimension() const {
    switch (kind) {
        case ComponentKind::IsolatedPoint: return 0;
        case ComponentKind::InteriorSurface:
        case ComponentKind::ExtremalSurface: return 2;
        case ComponentKind::ExtremalFourManifold: return 4;
    }
    return 0;
}

int FixedComponentSpec::index() const {
    int neg = 0;
    for (int w : weights) neg += w < 0;
    return 2 * neg;
}

bool FixedComponentSpec::is_extremal() const { return is_minimum() || is_maximum(); }

bool FixedComponentSpec::is_minimum() const {
    return std::none_of(weights.begin(), weights.end(), [](int w) { return w < 0; });
}

bool FixedComponentSpec::is_maximum() const {
    return std::none_of(weights.begin(), weights.end(), [](int w) { return w > 0; });
}

void FixedComponentSpec::validate() const {
    auto bad = [](const std::string& m) { throw Error(ErrorCode::InvalidFixedComponent, m); };
    int zeros = 0, sum = 0;
    for (int w : weights) {
        if (w < -1 || w > 1) bad("weights must be 0 or +-1");
        zeros += w == 0;
        sum += w;
    }
    if (zeros != dimension() / 2) bad("zero weights must match the component dimension");
    if (level != -sum) bad("level must equal minus the weight sum");
    switch (kind) {
        case ComponentKind::IsolatedPoint: break;
        case ComponentKind::InteriorSurface: {
            if (!surfaceClass || !surfaceClass->is_integral()) bad("interior surface needs an integral class");
            if (genus < 0) bad("negative genus");
            Rational sq = pair(*surfaceClass, *surfaceClass);
            if (sq != normalDegrees.first + normalDegrees.second) bad("normal degrees must sum to the self-intersection");
            break;
        }
        case ComponentKind::ExtremalSurface:
            if (level != 2 && level != -2) bad("extremal surface must sit at +-2");
            if (genus < 0) bad("negative genus");
            break;
        case ComponentKind::ExtremalFourManifold:
            if (level != 1 && level != -1) bad("four-dimensional extremum must sit at +-1");
            if (!lattice || !eulerAtBoundary || eulerAtBoundary->lattice() != *lattice)
                bad("four-dimensional extremum needs a lattice and a boundary Euler class");
            break;
    }
}

std::string FixedComponentSpec::summary() const {
    switch (kind) {
        case ComponentKind::IsolatedPoint: return "pt";
        case ComponentKind::InteriorSurface:
            return std::string(genus == 0 ? "S2" : genus == 1 ? "T2" : "S_g" + std::to_string(genus)) + "[" +
                   surfaceClass->to_string() + "]";
        case ComponentKind::ExtremalSurface:
            return "S2(b=" + std::to_string(normalDegrees.first + normalDegrees.second) + ")";
        case ComponentKind::ExtremalFourManifold:
            return lattice->name() + "(e=" + eulerAtBoundary->to_string() + ")";
    }
    return "?";
}

bool FixedComponentSpec::operator==(const FixedComponentSpec& o) const {
    return level == o.level && kind == o.kind && weights == o.weights && surfaceClass == o.surfaceClass &&
           genus == o.genus && normalDegrees == o.normalDegrees && lattice == o.lattice &&
           eulerAtBoundary == o.eulerAtBoundary;
}

CohClass SliceState::omega(const Rational& t) const { return anchorClass - (t - anchorLevel) * euler; }

bool SliceState::operator==(const SliceState& o) const {
    // compare the affine path, not its anchor
    return lattice == o.lattice && euler == o.euler && lo == o.lo && hi == o.hi && omega(0) == o.omega(0);
}

std::vector<int> TFD::levels() const {
    std::vector<int> out;
    for (const auto& e : crit) out.push_back(e.level);
    return out;
}

const CrossingEvent* TFD::event_at(int level) const {
    for (const auto& e : crit)
        if (e.level == level) return &e;
    return nullptr;
}

int TFD::count_at(int level) const {
    const CrossingEvent* e = event_at(level);
    return e ? static_cast<int>(e->components.size()) : 0;
}

}  // namespace hamfix

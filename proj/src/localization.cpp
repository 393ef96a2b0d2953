#include "hamfix/localization.hpp"

#include <utility>

#include "hamfix/errors.hpp"

namespace hamfix {

int degree_of(Integrand a) {
    switch (a) {
        case Integrand::One: return 0;
        case Integrand::C1: return 1;
        case Integrand::C1Cubed: return 3;
    }
    return 0;
}

namespace {

// a0 + a1 q with q^2 = 0
using QPoly = std::pair<LaurentPoly, LaurentPoly>;

QPoly qmul(const QPoly& a, const QPoly& b) { return {a.first * b.first, a.first * b.second + a.second * b.first}; }

// 1 / (w x + n q) for w = +-1
QPoly qinv(int w, int n) { return {LaurentPoly::monomial(w, -1), LaurentPoly::monomial(-n, -2)}; }

LaurentPoly surface_contribution(int w1, int n1, int w2, int n2, int genus, int deg) {
    QPoly c1{LaurentPoly::monomial(w1 + w2, 1), LaurentPoly::monomial(2 - 2 * genus + n1 + n2, 0)};
    QPoly acc = qmul(qinv(w1, n1), qinv(w2, n2));
    for (int i = 0; i < deg; ++i) acc = qmul(acc, c1);
    return acc.second;
}

// Truncated cohomology of a surface: H^0 + H^2 + H^4.
struct Trunc {
    Rational s0;
    std::vector<Rational> v;
    Rational s4;
};

struct TruncLaurent {
    const SurfaceLattice* L;
    std::map<int, Trunc> terms;

    Trunc zero() const { return Trunc{0, std::vector<Rational>(L->rank(), Rational(0)), 0}; }

    Trunc& at(int d) {
        auto it = terms.find(d);
        if (it == terms.end()) it = terms.emplace(d, zero()).first;
        return it->second;
    }

    TruncLaurent mul(const TruncLaurent& o) const {
        TruncLaurent r{L, {}};
        for (const auto& [d1, a] : terms)
            for (const auto& [d2, b] : o.terms) {
                Trunc& t = r.at(d1 + d2);
                t.s0 += a.s0 * b.s0;
                for (int i = 0; i < L->rank(); ++i) t.v[i] += a.s0 * b.v[i] + b.s0 * a.v[i];
                t.s4 += a.s0 * b.s4 + b.s0 * a.s4 + pair(CohClass(*L, a.v), CohClass(*L, b.v));
            }
        return r;
    }
};

LaurentPoly four_contribution(const FixedComponentSpec& fc, int deg) {
    const SurfaceLattice& L = *fc.lattice;
    const CohClass& e = *fc.eulerAtBoundary;
    int w = fc.level > 0 ? -1 : 1;
    CohClass we = Rational(w) * e;
    // normal Euler class w(x + e); restricted c1 is c1(L) plus that
    TruncLaurent c1{&L, {}};
    c1.at(1).s0 = w;
    c1.at(0).v = (L.anticanonical() + we).coeffs();
    // 1 / (w(x + e)) = w x^-1 (1 - e/x + e^2/x^2)
    TruncLaurent inv{&L, {}};
    inv.at(-1).s0 = w;
    inv.at(-2).v = (-we).coeffs();
    inv.at(-3).s4 = w * pair(e, e);
    TruncLaurent acc = inv;
    for (int i = 0; i < deg; ++i) acc = acc.mul(c1);
    LaurentPoly out;
    for (const auto& [d, t] : acc.terms) out += LaurentPoly::monomial(t.s4, d);
    return out;
}

}  // namespace

LaurentPoly contribution(const FixedComponentSpec& fc, Integrand alpha) {
    fc.validate();
    int deg = degree_of(alpha);
    switch (fc.kind) {
        case ComponentKind::IsolatedPoint: {
            const auto& w = fc.weights;
            Rational num = 1;
            for (int i = 0; i < deg; ++i) num *= (w[0] + w[1] + w[2]);
            return LaurentPoly::monomial(num / (w[0] * w[1] * w[2]), deg - 3);
        }
        case ComponentKind::InteriorSurface:
            return surface_contribution(1, fc.normalDegrees.first, -1, fc.normalDegrees.second, fc.genus, deg);
        case ComponentKind::ExtremalSurface: {
            int w = fc.level > 0 ? -1 : 1;
            return surface_contribution(w, fc.normalDegrees.first, w, fc.normalDegrees.second, fc.genus, deg);
        }
        case ComponentKind::ExtremalFourManifold: return four_contribution(fc, deg);
    }
    throw Error(ErrorCode::InvalidFixedComponent, "unknown kind");
}

LaurentPoly integrate(const TFD& tfd, Integrand alpha) {
    LaurentPoly sum;
    for (const auto& ev : tfd.crit)
        for (const auto& fc : ev.components) sum += contribution(fc, alpha);
    return sum;
}

long long chern_number(const TFD& tfd) {
    LaurentPoly one = integrate(tfd, Integrand::One);
    LaurentPoly c1 = integrate(tfd, Integrand::C1);
    if (!one.is_zero() || !c1.is_zero())
        throw Error(ErrorCode::InconsistentFixedPointData,
                    "int 1 = " + one.to_string() + ", int c1 = " + c1.to_string());
    LaurentPoly c3 = integrate(tfd, Integrand::C1Cubed);
    for (const auto& [d, c] : c3.terms())
        if (d != 0)
            throw Error(ErrorCode::InconsistentFixedPointData, "int c1^3 has a term in degree " + std::to_string(d));
    Rational v = c3.coeff(0);
    if (!is_integer(v)) throw Error(ErrorCode::InternalArithmeticError, "c1^3 = " + to_string(v));
    return to_ll(v);
}

std::array<int, 7> betti(const std::vector<FixedComponentSpec>& components) {
    std::array<int, 7> b{};
    for (const auto& fc : components) {
        int i = fc.index();
        switch (fc.kind) {
            case ComponentKind::IsolatedPoint: b[i] += 1; break;
            case ComponentKind::InteriorSurface:
            case ComponentKind::ExtremalSurface:
                b[i] += 1;
                b[i + 1] += 2 * fc.genus;
                b[i + 2] += 1;
                break;
            case ComponentKind::ExtremalFourManifold:
                b[i] += 1;
                b[i + 2] += fc.lattice->rank();
                b[i + 4] += 1;
                break;
        }
    }
    return b;
}

std::array<int, 7> betti(const TFD& tfd) {
    std::vector<FixedComponentSpec> all;
    for (const auto& ev : tfd.crit) all.insert(all.end(), ev.components.begin(), ev.components.end());
    return betti(all);
}

bool is_palindromic(const std::array<int, 7>& b) {
    for (int i = 0; i < 7; ++i)
        if (b[i] != b[6 - i]) return false;
    return true;
}

}  // namespace hamfix

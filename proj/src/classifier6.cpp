#include "hamfix/classifier6.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

#include "hamfix/errors.hpp"
#include "hamfix/localization.hpp"
#include "hamfix/reduction.hpp"

namespace hamfix {

namespace {

bool fail(std::string* why, const std::string& msg) {
    if (why) *why = msg;
    return false;
}

long long floor_half(long long b) { return b >= 0 ? b / 2 : -((-b + 1) / 2); }

int max_level(int maxDim) { return maxDim == 0 ? 3 : maxDim == 2 ? 2 : 1; }

FixedComponentSpec interior_point(int index) {
    return index == 2 ? FixedComponentSpec::point({-1, 1, 1}) : FixedComponentSpec::point({-1, -1, 1});
}

// Sweeps the interior events from the minimum and returns the slices, one per
// gap. Throws whatever cross throws.
std::vector<SliceState> sweep(const std::vector<CrossingEvent>& crit) {
    std::vector<SliceState> out;
    SliceState s = with_interval(initial_slice(crit.front().components.front()), crit[0].level, crit[1].level);
    out.push_back(s);
    for (size_t i = 1; i + 1 < crit.size(); ++i) {
        s = with_interval(cross(s, crit[i]), crit[i].level, crit[i + 1].level);
        out.push_back(s);
    }
    return out;
}

FixedComponentSpec sphere_max(const SliceState& last) {
    auto d = bmax_from_euler(last);
    long long d2 = floor_half(d.bmax);
    return FixedComponentSpec::extremal_surface(2, static_cast<int>(d.bmax - d2), static_cast<int>(d2));
}

// Sets b+ and b- of the interior surfaces at level 0 from the Euler classes on either side.
void fill_normal_degrees(TFD& t) {
    for (size_t i = 1; i + 1 < t.crit.size(); ++i) {
        if (t.crit[i].level != 0) continue;
        const CohClass& before = t.slices[i - 1].euler;
        const CohClass& after = t.slices[i].euler;
        for (auto& fc : t.crit[i].components) {
            if (fc.kind != ComponentKind::InteriorSurface) continue;
            fc.normalDegrees = {to_ll(pair(after, *fc.surfaceClass)), to_ll(-pair(before, *fc.surfaceClass))};
        }
    }
}

TFD build(const Candidate& c) {
    TFD t;
    t.crit.push_back({-3, {FixedComponentSpec::point({1, 1, 1})}});
    if (c.k > 0) t.crit.push_back({-1, std::vector<FixedComponentSpec>(c.k, interior_point(2))});
    if (!c.z0.empty()) {
        CrossingEvent ev{0, {}};
        for (const auto& p : c.z0) {
            long long sq = to_ll(pair(p.cls, p.cls));
            ev.components.push_back(FixedComponentSpec::interior_surface(p.cls, p.genus, static_cast<int>(sq), 0));
        }
        t.crit.push_back(ev);
    }
    if (c.m > 0) t.crit.push_back({1, std::vector<FixedComponentSpec>(c.m, interior_point(4))});
    int top = max_level(c.maxDim);
    if (t.crit.back().level >= top) throw Error(ErrorCode::InconsistentFixedPointData, "interior level above the maximum");
    // placeholder maximum so that the sweep knows where the last gap ends
    t.crit.push_back({top, {FixedComponentSpec::point({-1, -1, -1})}});
    t.slices = sweep(t.crit);
    fill_normal_degrees(t);
    const SliceState& last = t.slices.back();
    if (c.maxDim == 2)
        t.crit.back().components = {sphere_max(last)};
    else if (c.maxDim == 4)
        t.crit.back().components = {FixedComponentSpec::extremal_four(1, last.lattice, last.euler)};
    return t;
}

bool check_maximum(const TFD& t, std::string* why) {
    const SliceState& last = t.slices.back();
    const FixedComponentSpec& mx = t.maximum();
    CohClass top = last.omega(last.hi);
    CohClass c1 = last.lattice.anticanonical();
    switch (mx.kind) {
        case ComponentKind::IsolatedPoint: {
            if (last.lattice != SurfaceLattice::blowup(0)) return fail(why, "reduced space at the top is " + last.lattice.name());
            if (!top.is_zero()) return fail(why, "area does not vanish at the maximum");
            if (last.euler != gen_u(last.lattice)) return fail(why, "euler class at the maximum is " + last.euler.to_string());
            return true;
        }
        case ComponentKind::ExtremalSurface: {
            if (last.lattice.rank() != 2) return fail(why, "reduced space below a sphere maximum has rank " + std::to_string(last.lattice.rank()));
            if (top.is_zero() || pair(top, top) != 0) return fail(why, "top class is not a multiple of a fiber");
            Rational V = pair(c1, top) / 2;
            if (!is_integer(V) || V < 1) return fail(why, "sphere maximum area " + to_string(V));
            CohClass F = (Rational(1) / V) * top;
            if (!F.is_integral() || pair(F, F) != 0 || pair(c1, F) != 2 || pair(last.euler, F) != 1)
                return fail(why, "fiber class " + F.to_string() + " is not a sphere fiber");
            auto d = bmax_from_euler(last);
            if (d.volume < 1 || V != d.volume) return fail(why, "sphere maximum area does not equal 2 + b_max");
            if (mx.normalDegrees.first + mx.normalDegrees.second != d.bmax || mx.genus != 0)
                return fail(why, "normal degrees of the maximum disagree with the euler class");
            return true;
        }
        case ComponentKind::ExtremalFourManifold: {
            if (*mx.lattice != last.lattice || *mx.eulerAtBoundary != last.euler)
                return fail(why, "four-dimensional maximum disagrees with the last slice");
            if (top != c1 - last.euler) return fail(why, "omega at the maximum is not c1 - e");
            if (pair(top, top) <= 0) return fail(why, "maximum has non-positive volume");
            for (const auto& C : all_exceptional_classes(last.lattice))
                if (pair(top, C) <= 0) return fail(why, C.to_string() + " has no area on the maximum");
            return true;
        }
        default: break;
    }
    return fail(why, "maximum of unexpected kind");
}

// Same slice up to an isometry of the lattice: compare the DH data only.
bool equivalent(const SliceState& a, const SliceState& b) {
    if (a == b) return true;
    if (a.lattice != b.lattice || a.lo != b.lo || a.hi != b.hi) return false;
    CohClass wa = a.omega(a.lo), wb = b.omega(b.lo);
    return pair(wa, wa) == pair(wb, wb) && pair(wa, a.euler) == pair(wb, b.euler) &&
           pair(a.euler, a.euler) == pair(b.euler, b.euler);
}

bool check_normalized(const TFD& t, std::string* why) {
    if (t.crit.size() < 2) return fail(why, "fewer than two critical levels");
    if (t.slices.size() + 1 != t.crit.size()) return fail(why, "slice count does not match the critical levels");
    const auto& mn = t.minimum();
    if (mn.kind != ComponentKind::IsolatedPoint || mn.level != -3 || t.crit.front().components.size() != 1)
        return fail(why, "minimum is not a single isolated point at -3");
    if (t.crit.back().components.size() != 1 || !t.maximum().is_maximum()) return fail(why, "malformed maximum");
    for (size_t i = 0; i < t.crit.size(); ++i) {
        const auto& ev = t.crit[i];
        if (i > 0 && ev.level <= t.crit[i - 1].level) return fail(why, "levels not ascending");
        if (ev.components.empty()) return fail(why, "empty critical level");
        for (const auto& fc : ev.components) {
            try {
                fc.validate();
            } catch (const Error& e) {
                return fail(why, e.what());
            }
            if (fc.level != ev.level) return fail(why, "component level differs from its event");
            bool extremal = i == 0 || i + 1 == t.crit.size();
            if (extremal != fc.is_extremal()) return fail(why, "extremal component in the interior or vice versa");
        }
    }

    // (a) Poincare duality
    auto b = betti(t);
    if (!is_palindromic(b)) return fail(why, "Betti numbers are not palindromic");
    Candidate c = candidate_of(t);
    int k = c.k, m = c.m;
    int mx = c.maxDim;
    if (mx == 0 && k != m) return fail(why, "points at -1 and +1 differ");
    if (mx == 2 && m + 1 != k) return fail(why, "points at +1 plus one differ from points at -1");

    // (b), (d) sweep, blow-downs and DH
    std::vector<SliceState> expect;
    try {
        expect = sweep(t.crit);
    } catch (const Error& e) {
        return fail(why, std::string(to_string(e.code())) + ": " + e.what());
    }
    for (size_t i = 0; i < expect.size(); ++i)
        if (!equivalent(expect[i], t.slices[i])) return fail(why, "slice " + std::to_string(i) + " disagrees with the sweep");
    for (size_t i = 1; i + 1 < t.crit.size(); ++i) {
        const auto& ev = t.crit[i];
        for (const auto& fc : ev.components) {
            if (fc.kind != ComponentKind::InteriorSurface) continue;
            Rational bp = pair(t.slices[i].euler, *fc.surfaceClass), bm = -pair(t.slices[i - 1].euler, *fc.surfaceClass);
            if (bp != fc.normalDegrees.first || bm != fc.normalDegrees.second)
                return fail(why, "normal degrees of " + fc.surfaceClass->to_string() + " disagree with the sweep");
        }
        auto d = dh_difference(t.slices[i - 1], t.slices[i]);
        if (d[0] != 0) return fail(why, "DH jumps at level " + std::to_string(ev.level));
        if (ev.level == -1 && !check_dh_decrease(t.slices[i - 1], t.slices[i], static_cast<int>(ev.components.size())))
            return fail(why, "DH does not drop by k t^2 at level -1");
    }
    for (const auto& s : t.slices) {
        if (!square_positive(s)) return fail(why, "omega^2 not positive on (" + to_string(s.lo) + ", " + to_string(s.hi) + ")");
        if (!exceptional_areas_positive(s)) return fail(why, "an exceptional class loses area on (" + to_string(s.lo) + ", " + to_string(s.hi) + ")");
    }
    // (f)
    if (!check_maximum(t, why)) return false;
    // (c)
    if (!integrate(t, Integrand::One).is_zero()) return fail(why, "integral of 1 does not vanish");
    if (!integrate(t, Integrand::C1).is_zero()) return fail(why, "integral of c1 does not vanish");
    return true;
}

// integer pairing on P^2 # k
long long ip(const std::vector<long long>& a, const std::vector<int>& b) {
    long long s = a[0] * b[0];
    for (size_t i = 1; i < a.size(); ++i) s -= a[i] * b[i];
    return s;
}
long long ip(const std::vector<long long>& a, const std::vector<long long>& b) {
    long long s = a[0] * b[0];
    for (size_t i = 1; i < a.size(); ++i) s -= a[i] * b[i];
    return s;
}

// Necessary conditions on the total class Z of the level-0 surfaces, using only
// the slice just above 0 where omega(t) = c1 - t e+. Returns the number of
// classes vanishing at t = 1 or -1 on rejection.
int prefilter(const std::vector<long long>& Z, int h, bool pointsAtOne) {
    size_t n = Z.size();
    int k = static_cast<int>(n) - 1;
    std::vector<long long> c1(n, -1), e(n);
    c1[0] = 3;
    e[0] = Z[0] - 1;
    for (size_t i = 1; i < n; ++i) e[i] = Z[i] + 1;
    if (ip(c1, Z) < 1) return -1;
    long long cc = 9 - k, ce = ip(c1, e), ee = ip(e, e);
    // q(t) = cc - 2 t ce + t^2 ee
    if (cc - 2 * h * ce + h * h * ee < 0) return -1;
    if (4 * cc - 4 * h * ce + h * h * ee <= 0) return -1;
    if (ee > 0 && ce > 0 && ce < h * ee && cc * ee - ce * ce <= 0) return -1;
    int vanish = 0;
    for (const auto& C : exceptional_vectors(k)) {
        long long r = ip(e, C);  // area 1 - t r
        if (h * r > 1) return -1;
        if (h == 1 && r == 1) {
            if (!pointsAtOne) return -1;
            ++vanish;
        }
    }
    if (pointsAtOne && vanish == 0) return -1;
    if (!pointsAtOne && h == 1 && cc - 2 * ce + ee <= 0) return -1;
    return vanish;
}

// Permutations of E indices fixing the total class.
std::vector<std::vector<int>> stabilizer(const std::vector<long long>& Z) {
    int k = static_cast<int>(Z.size()) - 1;
    std::vector<int> p(k);
    std::iota(p.begin(), p.end(), 1);
    std::vector<std::vector<int>> out;
    do {
        bool ok = true;
        for (int i = 0; i < k && ok; ++i) ok = Z[i + 1] == Z[p[i]];
        if (ok) out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

using PartKey = std::vector<std::pair<std::vector<long long>, int>>;

PartKey key_under(const Splitting& s, const std::vector<int>& perm) {
    PartKey out;
    for (const auto& p : s) {
        auto v = p.cls.to_ints();
        std::vector<long long> w(v.size());
        w[0] = v[0];
        for (size_t i = 0; i < perm.size(); ++i) w[i + 1] = v[perm[i]];
        out.push_back({w, p.genus});
    }
    std::sort(out.begin(), out.end());
    return out;
}

PartKey canonical_key(const Splitting& s, const std::vector<std::vector<int>>& perms) {
    PartKey best = key_under(s, perms.front());
    for (const auto& p : perms) best = std::min(best, key_under(s, p));
    return best;
}

void sorted_vectors(int len, int lo, int hi, std::vector<long long>& cur,
                    const std::function<void(const std::vector<long long>&)>& f) {
    if (static_cast<int>(cur.size()) == len) {
        f(cur);
        return;
    }
    int start = cur.size() > 1 ? static_cast<int>(cur.back()) : lo;
    for (int v = start; v <= hi; ++v) {
        cur.push_back(v);
        sorted_vectors(len, lo, hi, cur, f);
        cur.pop_back();
    }
}

void finish(TFD& t) {
    t.bettiNumbers = betti(t);
    t.chern = chern_number(t);
    t.capacities = capacities(t);
}

}  // namespace

std::optional<TFD> assemble(const Candidate& c, std::string* why) {
    TFD t;
    try {
        t = build(c);
    } catch (const Error& e) {
        fail(why, std::string(to_string(e.code())) + ": " + e.what());
        return std::nullopt;
    }
    if (!check_normalized(t, why)) return std::nullopt;
    finish(t);
    return t;
}

bool predicates_hold(const TFD& t, std::string* why) {
    if (t.crit.empty()) return fail(why, "empty TFD");
    if (t.minimum().kind != ComponentKind::IsolatedPoint && t.maximum().kind == ComponentKind::IsolatedPoint)
        return check_normalized(flip(t), why);
    return check_normalized(t, why);
}

TFD flip(const TFD& t) {
    TFD r;
    r.label = t.label;
    for (auto it = t.crit.rbegin(); it != t.crit.rend(); ++it) {
        CrossingEvent ev{-it->level, {}};
        for (const auto& fc : it->components) {
            FixedComponentSpec f = fc;
            f.level = -fc.level;
            for (int& w : f.weights) w = -w;
            std::sort(f.weights.begin(), f.weights.end());
            if (f.kind == ComponentKind::InteriorSurface) std::swap(f.normalDegrees.first, f.normalDegrees.second);
            if (f.eulerAtBoundary) f.eulerAtBoundary = -*f.eulerAtBoundary;
            ev.components.push_back(f);
        }
        r.crit.push_back(ev);
    }
    for (auto it = t.slices.rbegin(); it != t.slices.rend(); ++it) {
        SliceState s = *it;
        s.anchorLevel = -it->anchorLevel;
        s.euler = -it->euler;
        s.lo = -it->hi;
        s.hi = -it->lo;
        r.slices.push_back(s);
    }
    return r;
}

Capacities capacities(const TFD& t) {
    if (t.crit.size() < 2 || t.minimum().kind != ComponentKind::IsolatedPoint)
        throw Error(ErrorCode::CapacityFormulaInapplicable, "minimum is not an isolated point");
    Rational hmin = t.crit[0].level;
    return {Rational(t.crit[1].level) - hmin, Rational(t.crit.back().level) - hmin};
}

int max_dim(const TFD& t) { return t.maximum().dimension(); }

std::set<int> interior_levels(const TFD& t) {
    std::set<int> out;
    for (size_t i = 1; i + 1 < t.crit.size(); ++i) out.insert(t.crit[i].level);
    return out;
}

Candidate candidate_of(const TFD& t) {
    Candidate c;
    c.maxDim = max_dim(t);
    for (size_t i = 1; i + 1 < t.crit.size(); ++i)
        for (const auto& fc : t.crit[i].components) {
            if (fc.kind == ComponentKind::InteriorSurface)
                c.z0.push_back({*fc.surfaceClass, fc.genus});
            else if (fc.index() == 2)
                ++c.k;
            else
                ++c.m;
        }
    return c;
}

std::vector<TFD> enumerate_tfd(const ExtremalProfile& profile, const std::set<int>& crit, int bound, EnumStats* stats) {
    if (profile.minDim != 0) throw Error(ErrorCode::InvalidInput, "minimum must be isolated; flip first");
    if (profile.maxDim != 0 && profile.maxDim != 2 && profile.maxDim != 4)
        throw Error(ErrorCode::InvalidInput, "maximum dimension must be 0, 2 or 4");
    for (int c : crit)
        if (c < -1 || c > 1) throw Error(ErrorCode::InvalidInput, "interior levels lie in {-1, 0, 1}");
    EnumStats local;
    EnumStats& st = stats ? *stats : local;
    std::vector<TFD> out;
    int top = max_level(profile.maxDim);
    if (crit.count(1) && top <= 1) return out;

    bool hasM = crit.count(-1), hasZ = crit.count(0), hasP = crit.count(1);
    int kLo = hasM ? 1 : 0, kHi = hasM ? 8 : 0;
    for (int k = kLo; k <= kHi; ++k) {
        SurfaceLattice L = SurfaceLattice::blowup(k);
        if (!hasZ) {
            for (int m = hasP ? 1 : 0; m <= (hasP ? k + 1 : 0); ++m) {
                ++st.boxCandidates;
                if (auto t = assemble({profile.maxDim, k, m, {}})) {
                    ++st.assembled;
                    out.push_back(std::move(*t));
                }
            }
            continue;
        }
        int h = hasP ? 1 : top;
        std::vector<long long> cur;
        for (int a = -bound; a <= bound; ++a) {
            cur = {a};
            sorted_vectors(k + 1, -bound, bound, cur, [&](const std::vector<long long>& Z) {
                ++st.boxCandidates;
                int m = prefilter(Z, h, hasP);
                if (m < 0) return;
                ++st.prefilterSurvivors;
                CohClass T = CohClass::from_ints(L, Z);
                auto perms = stabilizer(Z);
                std::set<PartKey> seen;
                for (const auto& sp : component_splittings(L, T, bound)) {
                    if (!seen.insert(canonical_key(sp, perms)).second) continue;
                    auto t = assemble({profile.maxDim, k, m, sp});
                    if (!t) continue;
                    ++st.assembled;
                    for (const auto& p : sp)
                        for (long long x : p.cls.to_ints())
                            st.maxCoefficient = std::max<int>(st.maxCoefficient, static_cast<int>(std::llabs(x)));
                    for (long long x : Z)
                        st.maxCoefficient = std::max<int>(st.maxCoefficient, static_cast<int>(std::llabs(x)));
                    out.push_back(std::move(*t));
                }
            });
        }
    }
    if (st.maxCoefficient >= bound)
        throw Error(ErrorCode::BoundTooSmall, "a survivor has a coefficient of size " + std::to_string(st.maxCoefficient) +
                                                  " at bound " + std::to_string(bound));
    return out;
}

std::vector<TFD> enumerate_all(int bound, EnumStats* stats) {
    std::vector<TFD> out;
    for (int maxDim : {0, 2, 4})
        for (int mask = 0; mask < 8; ++mask) {
            std::set<int> crit;
            for (int i = 0; i < 3; ++i)
                if (mask >> i & 1) crit.insert(i - 1);
            auto rows = enumerate_tfd({0, maxDim}, crit, bound, stats);
            for (auto& r : rows) out.push_back(std::move(r));
        }
    return out;
}

namespace {

bool same_parts_up_to_perm(const Splitting& got, const std::vector<GoldenPart>& want, int k) {
    if (got.size() != want.size()) return false;
    PartKey target;
    for (const auto& p : want) target.push_back({p.coeffs, p.genus});
    std::sort(target.begin(), target.end());
    std::vector<int> perm(k);
    std::iota(perm.begin(), perm.end(), 1);
    do {
        if (key_under(got, perm) == target) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

std::string zmax_name(const TFD& t) {
    const auto& mx = t.maximum();
    return mx.kind == ComponentKind::ExtremalFourManifold ? mx.lattice->name() : "";
}

std::optional<long long> vol_zmax(const TFD& t) {
    const auto& mx = t.maximum();
    if (mx.kind != ComponentKind::ExtremalSurface) return std::nullopt;
    return 2 + mx.normalDegrees.first + mx.normalDegrees.second;
}

std::string describe(const TFD& t) {
    std::ostringstream os;
    os << "max dim " << max_dim(t) << ", levels";
    for (const auto& ev : t.crit) {
        os << " " << ev.level << ":";
        for (const auto& fc : ev.components) os << fc.summary() << ",";
    }
    return os.str();
}

}  // namespace

std::string TableDiff::to_string() const {
    std::ostringstream os;
    for (const auto& s : missing) os << "- " << s << "\n";
    for (const auto& s : extra) os << "+ " << s << "\n";
    for (const auto& s : mismatched) os << "! " << s << "\n";
    return os.str();
}

TableDiff match_golden(std::vector<TFD>& rows) {
    TableDiff diff;
    const auto& gold = golden6();
    std::vector<int> hit(gold.size(), 0);
    std::vector<std::pair<size_t, TFD>> labelled;
    std::vector<TFD> unlabelled;
    for (auto& t : rows) {
        Candidate c = candidate_of(t);
        std::optional<size_t> found;
        for (size_t i = 0; i < gold.size() && !found; ++i) {
            const auto& g = gold[i];
            if (g.maxDim != c.maxDim || g.k != c.k || g.m != c.m || g.crit != interior_levels(t)) continue;
            if (same_parts_up_to_perm(c.z0, g.z0, c.k)) found = i;
        }
        if (!found) {
            diff.extra.push_back(describe(t));
            unlabelled.push_back(std::move(t));
            continue;
        }
        const auto& g = gold[*found];
        if (++hit[*found] > 1) {
            diff.extra.push_back(g.label + " (duplicate) " + describe(t));
            continue;
        }
        // re-express with the printed E labels
        Candidate gc = c;
        SurfaceLattice L = SurfaceLattice::blowup(c.k);
        gc.z0.clear();
        for (const auto& p : g.z0) gc.z0.push_back({CohClass::from_ints(L, p.coeffs), p.genus});
        std::string why;
        auto relabelled = assemble(gc, &why);
        if (!relabelled) {
            diff.mismatched.push_back(g.label + ": printed classes fail the predicates (" + why + ")");
            continue;
        }
        TFD r = std::move(*relabelled);
        r.label = g.label;
        auto b = *r.bettiNumbers;
        auto mis = [&](const std::string& what, const std::string& got, const std::string& want) {
            diff.mismatched.push_back(g.label + ": " + what + " " + got + ", table " + want);
        };
        if (*r.chern != g.chern) mis("c1^3", std::to_string(*r.chern), std::to_string(g.chern));
        if (b[2] != g.b2) mis("b2", std::to_string(b[2]), std::to_string(g.b2));
        if (b[3] != g.b3) mis("b3", std::to_string(b[3]), std::to_string(g.b3));
        if (b[1] != 0 || b[5] != 0) mis("b1/b5", std::to_string(b[1]) + "/" + std::to_string(b[5]), "0/0");
        if (zmax_name(r) != g.zmax) mis("Z_max", zmax_name(r), g.zmax);
        if (vol_zmax(r) != g.volZmax)
            mis("Vol(Z_max)", vol_zmax(r) ? std::to_string(*vol_zmax(r)) : "-", g.volZmax ? std::to_string(*g.volZmax) : "-");
        labelled.push_back({*found, std::move(r)});
    }
    for (size_t i = 0; i < gold.size(); ++i)
        if (!hit[i]) diff.missing.push_back(gold[i].label);
    std::stable_sort(labelled.begin(), labelled.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    rows.clear();
    for (auto& [i, t] : labelled) rows.push_back(std::move(t));
    for (auto& t : unlabelled) rows.push_back(std::move(t));
    return diff;
}

std::vector<TFD> classify_all(int bound, EnumStats* stats) {
    auto rows = enumerate_all(bound, stats);
    auto diff = match_golden(rows);
    if (!diff.empty()) throw Error(ErrorCode::ClassificationMismatch, diff.to_string());
    return rows;
}

}  // namespace hamfix

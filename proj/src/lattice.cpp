#include "hamfix/lattice.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

#include "hamfix/errors.hpp"

namespace hamfix {

// ---- SurfaceLattice

SurfaceLattice SurfaceLattice::blowup(int k) {
    if (k < 0 || k > 8) throw Error(ErrorCode::InvalidBlowupCount, "k = " + std::to_string(k));
    return SurfaceLattice(LatticeKind::BlowupOfP2, k);
}

SurfaceLattice SurfaceLattice::product() { return SurfaceLattice(LatticeKind::ProductOfSpheres, 0); }

SurfaceLattice make_blowup_lattice(int k) { return SurfaceLattice::blowup(k); }

int SurfaceLattice::gram(int i, int j) const {
    if (kind_ == LatticeKind::ProductOfSpheres) return i == j ? 0 : 1;
    if (i != j) return 0;
    return i == 0 ? 1 : -1;
}

std::vector<std::vector<int>> SurfaceLattice::gram_matrix() const {
    std::vector<std::vector<int>> g(rank(), std::vector<int>(rank()));
    for (int i = 0; i < rank(); ++i)
        for (int j = 0; j < rank(); ++j) g[i][j] = gram(i, j);
    return g;
}

CohClass SurfaceLattice::anticanonical() const {
    if (kind_ == LatticeKind::ProductOfSpheres) return CohClass::from_ints(*this, {2, 2});
    std::vector<long long> c(k_ + 1, -1);
    c[0] = 3;
    return CohClass::from_ints(*this, c);
}

std::string SurfaceLattice::name() const {
    if (kind_ == LatticeKind::ProductOfSpheres) return "P1xP1";
    if (k_ == 0) return "P2";
    return "P2#" + std::to_string(k_);
}

// ---- CohClass

CohClass::CohClass(SurfaceLattice L) : L_(L), c_(L.rank(), Rational(0)) {}

CohClass::CohClass(SurfaceLattice L, std::vector<Rational> coeffs) : L_(L), c_(std::move(coeffs)) {
    if (static_cast<int>(c_.size()) != L_.rank())
        throw Error(ErrorCode::LatticeMismatch, "coefficient count differs from rank of " + L_.name());
}

CohClass CohClass::from_ints(SurfaceLattice L, const std::vector<long long>& c) {
    std::vector<Rational> r(c.begin(), c.end());
    return CohClass(L, std::move(r));
}

bool CohClass::is_integral() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rational& r) { return is_integer(r); });
}

bool CohClass::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rational& r) { return r == 0; });
}

std::vector<long long> CohClass::to_ints() const {
    std::vector<long long> out;
    for (const auto& r : c_) out.push_back(to_ll(r));
    return out;
}

std::string CohClass::to_string() const {
    std::vector<std::string> names;
    if (L_.kind() == LatticeKind::ProductOfSpheres) {
        names = {"x", "y"};
    } else {
        names.push_back("u");
        for (int i = 1; i <= L_.k(); ++i) names.push_back("E" + std::to_string(i));
    }
    std::string out;
    for (int i = 0; i < rank(); ++i) {
        const Rational& r = c_[i];
        if (r == 0) continue;
        Rational mag = r < 0 ? Rational(-r) : r;
        if (out.empty())
            out += r < 0 ? "-" : "";
        else
            out += r < 0 ? " - " : " + ";
        if (mag != 1) out += hamfix::to_string(mag);
        out += names[i];
    }
    return out.empty() ? "0" : out;
}

static void check_same(const SurfaceLattice& a, const SurfaceLattice& b) {
    if (a != b) throw Error(ErrorCode::LatticeMismatch, a.name() + " vs " + b.name());
}

CohClass CohClass::operator+(const CohClass& o) const {
    CohClass r = *this;
    r += o;
    return r;
}

CohClass CohClass::operator-(const CohClass& o) const {
    CohClass r = *this;
    r -= o;
    return r;
}

CohClass CohClass::operator-() const {
    CohClass r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

CohClass& CohClass::operator+=(const CohClass& o) {
    check_same(L_, o.L_);
    for (int i = 0; i < rank(); ++i) c_[i] += o.c_[i];
    return *this;
}

CohClass& CohClass::operator-=(const CohClass& o) {
    check_same(L_, o.L_);
    for (int i = 0; i < rank(); ++i) c_[i] -= o.c_[i];
    return *this;
}

CohClass operator*(const Rational& s, const CohClass& a) {
    CohClass r = a;
    for (auto& x : r.c_) x *= s;
    return r;
}

CohClass gen_u(const SurfaceLattice& L) {
    if (L.kind() != LatticeKind::BlowupOfP2) throw Error(ErrorCode::LatticeMismatch, "u needs a blow-up lattice");
    std::vector<long long> v(L.rank(), 0);
    v[0] = 1;
    return CohClass::from_ints(L, v);
}

CohClass gen_E(const SurfaceLattice& L, int i) {
    if (L.kind() != LatticeKind::BlowupOfP2 || i < 1 || i > L.k())
        throw Error(ErrorCode::LatticeMismatch, "E" + std::to_string(i) + " not in " + L.name());
    std::vector<long long> v(L.rank(), 0);
    v[i] = 1;
    return CohClass::from_ints(L, v);
}

CohClass gen_x(const SurfaceLattice& L) {
    if (L.kind() != LatticeKind::ProductOfSpheres) throw Error(ErrorCode::LatticeMismatch, "x needs P1xP1");
    return CohClass::from_ints(L, {1, 0});
}

CohClass gen_y(const SurfaceLattice& L) {
    if (L.kind() != LatticeKind::ProductOfSpheres) throw Error(ErrorCode::LatticeMismatch, "y needs P1xP1");
    return CohClass::from_ints(L, {0, 1});
}

Rational pair(const CohClass& a, const CohClass& b) {
    check_same(a.lattice(), b.lattice());
    const SurfaceLattice& L = a.lattice();
    if (L.kind() == LatticeKind::ProductOfSpheres) return a[0] * b[1] + a[1] * b[0];
    Rational s = a[0] * b[0];
    for (int i = 1; i < L.rank(); ++i) s -= a[i] * b[i];
    return s;
}

long long pair_int(const SurfaceLattice& L, const std::vector<int>& a, const std::vector<int>& b) {
    if (L.kind() == LatticeKind::ProductOfSpheres) return 1LL * a[0] * b[1] + 1LL * a[1] * b[0];
    long long s = 1LL * a[0] * b[0];
    for (int i = 1; i < L.rank(); ++i) s -= 1LL * a[i] * b[i];
    return s;
}

// ---- exceptional classes

// C = d u - sum a_i E_i with sum a_i = 3d - 1 and sum a_i^2 = d^2 + 1.
static void exc_rec(int k, int bound, int pos, long long remSum, long long remSq, std::vector<int>& cur,
                    std::vector<std::vector<int>>& out) {
    if (pos == k + 1) {
        if (remSum == 0 && remSq == 0) out.push_back(cur);
        return;
    }
    long long left = k + 1 - pos;
    if (remSum * remSum > left * remSq) return;
    for (int a = -bound; a <= bound; ++a) {
        if (1LL * a * a > remSq) continue;
        cur[pos] = -a;
        exc_rec(k, bound, pos + 1, remSum - a, remSq - 1LL * a * a, cur, out);
    }
    cur[pos] = 0;
}

static std::vector<std::vector<int>> exceptional_int(int k, int bound) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(k + 1, 0);
    for (int d = -bound; d <= bound; ++d) {
        cur[0] = d;
        exc_rec(k, bound, 1, 3LL * d - 1, 1LL * d * d + 1, cur, out);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<CohClass> exceptional_classes(const SurfaceLattice& L, int bound) {
    if (L.kind() != LatticeKind::BlowupOfP2)
        throw Error(ErrorCode::NoExceptionalBasis, "no exceptional classes on " + L.name());
    std::vector<CohClass> out;
    for (const auto& v : exceptional_int(L.k(), bound)) {
        std::vector<long long> w(v.begin(), v.end());
        out.push_back(CohClass::from_ints(L, w));
    }
    return out;
}

std::vector<CohClass> all_exceptional_classes(const SurfaceLattice& L) {
    if (L.kind() == LatticeKind::ProductOfSpheres) return {};
    return exceptional_classes(L, 6);
}

const std::vector<std::vector<int>>& exceptional_vectors(int k) {
    static const std::vector<std::vector<std::vector<int>>> cache = [] {
        std::vector<std::vector<std::vector<int>>> c;
        for (int j = 0; j <= 8; ++j) c.push_back(exceptional_int(j, 6));
        return c;
    }();
    return cache.at(k);
}

// ---- adjunction and splittings

static std::optional<int> genus_int(long long self, long long c1) {
    long long twice = self - c1 + 2;
    if (twice < 0 || twice % 2 != 0) return std::nullopt;
    return static_cast<int>(twice / 2);
}

std::optional<int> adjunction_genus(const SurfaceLattice& L, const CohClass& C) {
    if (!C.is_integral()) return std::nullopt;
    if (C.lattice() != L) throw Error(ErrorCode::LatticeMismatch, "class not over " + L.name());
    Rational twice = pair(C, C) - pair(L.anticanonical(), C) + 2;
    if (twice < 0 || !is_integer(twice) || to_ll(twice) % 2 != 0) return std::nullopt;
    return static_cast<int>(to_ll(twice) / 2);
}

namespace {

struct SplitSearch {
    SurfaceLattice L;
    std::vector<int> total;
    std::vector<int> c1;
    std::vector<std::vector<int>> exc;
    std::vector<std::vector<int>> cands;
    std::vector<int> genus;
    std::map<std::vector<int>, int> index;
    std::vector<std::vector<int>> found;

    long long pr(const std::vector<int>& a, const std::vector<int>& b) const { return pair_int(L, a, b); }

    bool admissible(const std::vector<int>& p, long long c1Total, int& g) const {
        long long cp = pr(c1, p);
        if (cp < 1 || cp > c1Total) return false;
        long long sq = pr(p, p);
        auto gg = genus_int(sq, cp);
        if (!gg) return false;
        if (pr(p, total) != sq) return false;
        if (sq >= 0)
            for (const auto& e : exc)
                if (pr(p, e) < 0) return false;
        g = *gg;
        return true;
    }

    void collect(int bound) {
        long long c1Total = pr(c1, total);
        std::vector<int> p(L.rank(), 0);
        auto consider = [&] {
            int g;
            if (admissible(p, c1Total, g)) {
                index[p] = static_cast<int>(cands.size());
                cands.push_back(p);
                genus.push_back(g);
            }
        };
        if (L.kind() == LatticeKind::ProductOfSpheres) {
            for (int a = -bound; a <= bound; ++a)
                for (int b = -bound; b <= bound; ++b) {
                    p = {a, b};
                    consider();
                }
        } else {
            // p^2 >= c1.p - 2 >= -1 bounds the E part by the u part.
            std::function<void(int, long long)> rec = [&](int pos, long long budget) {
                if (pos == L.rank()) {
                    consider();
                    return;
                }
                for (int b = -bound; b <= bound; ++b) {
                    if (1LL * b * b > budget) continue;
                    p[pos] = b;
                    rec(pos + 1, budget - 1LL * b * b);
                }
                p[pos] = 0;
            };
            for (int a = -bound; a <= bound; ++a) {
                p[0] = a;
                rec(1, 1LL * a * a + 1);
            }
        }
    }

    void dfs(std::vector<int>& chosen, const std::vector<int>& rem) {
        int minIdx = chosen.empty() ? 0 : chosen.back();
        auto orth = [&](int idx) {
            for (int c : chosen)
                if (pr(cands[c], cands[idx]) != 0) return false;
            return true;
        };
        auto it = index.find(rem);
        if (it != index.end() && it->second >= minIdx && orth(it->second)) {
            chosen.push_back(it->second);
            found.push_back(chosen);
            chosen.pop_back();
        }
        long long c1Rem = pr(c1, rem);
        for (int i = minIdx; i < static_cast<int>(cands.size()); ++i) {
            const auto& p = cands[i];
            if (pr(c1, p) >= c1Rem) continue;
            std::vector<int> next(rem.size());
            for (size_t j = 0; j < rem.size(); ++j) next[j] = rem[j] - p[j];
            if (pr(p, next) != 0 || !orth(i)) continue;
            chosen.push_back(i);
            dfs(chosen, next);
            chosen.pop_back();
        }
    }
};

}  // namespace

std::vector<Splitting> component_splittings(const SurfaceLattice& L, const CohClass& total, int bound) {
    if (total.lattice() != L) throw Error(ErrorCode::LatticeMismatch, "total not over " + L.name());
    SplitSearch s{L, {}, {}, {}, {}, {}, {}, {}};
    for (auto v : total.to_ints()) s.total.push_back(static_cast<int>(v));
    for (auto v : L.anticanonical().to_ints()) s.c1.push_back(static_cast<int>(v));
    if (L.kind() == LatticeKind::BlowupOfP2) s.exc = exceptional_vectors(L.k());
    s.collect(bound);
    std::vector<int> chosen;
    s.dfs(chosen, s.total);

    std::vector<Splitting> out;
    for (const auto& f : s.found) {
        Splitting sp;
        for (int idx : f) {
            std::vector<long long> w(s.cands[idx].begin(), s.cands[idx].end());
            sp.push_back(Part{CohClass::from_ints(L, w), s.genus[idx]});
        }
        std::sort(sp.begin(), sp.end());
        out.push_back(std::move(sp));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// ---- Hirzebruch basis

CohClass hirzebruch_class(const SurfaceLattice& L, const Rational& fiber, const Rational& section) {
    if (L != SurfaceLattice::blowup(1)) throw Error(ErrorCode::LatticeMismatch, "Hirzebruch basis lives on P2#1");
    return fiber * (gen_u(L) - gen_E(L, 1)) + section * gen_E(L, 1);
}

std::pair<Rational, Rational> hirzebruch_coords(const CohClass& c) {
    const SurfaceLattice& L = c.lattice();
    if (L != SurfaceLattice::blowup(1)) throw Error(ErrorCode::LatticeMismatch, "Hirzebruch basis lives on P2#1");
    // c = f (u - E1) + s E1, so c[0] = f and c[1] = s - f.
    return {c[0], c[1] + c[0]};
}

// ---- isometries and blow-down

CohClass cremona(const CohClass& c, int i, int j, int l) {
    const SurfaceLattice& L = c.lattice();
    CohClass r = gen_u(L) - gen_E(L, i) - gen_E(L, j) - gen_E(L, l);
    return c + pair(c, r) * r;
}

CohClass swap_E(const CohClass& c, int i, int j) {
    std::vector<Rational> v = c.coeffs();
    std::swap(v.at(i), v.at(j));
    return CohClass(c.lattice(), v);
}

static CohClass drop_last(const CohClass& c, const SurfaceLattice& smaller) {
    if (c.coeffs().back() != 0)
        throw Error(ErrorCode::InternalArithmeticError, "class " + c.to_string() + " meets a contracted class");
    std::vector<Rational> v(c.coeffs().begin(), c.coeffs().end() - 1);
    return CohClass(smaller, v);
}

std::pair<SurfaceLattice, std::vector<CohClass>> blow_down(const SurfaceLattice& L0,
                                                           const std::vector<CohClass>& contract,
                                                           const std::vector<CohClass>& carry0) {
    SurfaceLattice L = L0;
    std::vector<CohClass> todo = contract;
    std::vector<CohClass> carry = carry0;
    while (!todo.empty()) {
        if (L.kind() != LatticeKind::BlowupOfP2 || L.k() == 0)
            throw Error(ErrorCode::NoExceptionalBasis, "nothing to contract on " + L.name());
        CohClass C = todo.back();
        todo.pop_back();
        auto apply = [&](auto&& f) {
            C = f(C);
            for (auto& t : todo) t = f(t);
            for (auto& t : carry) t = f(t);
        };
        for (int guard = 0; C[0] != 0; ++guard) {
            if (guard > 64) throw Error(ErrorCode::InternalArithmeticError, "Cremona reduction did not terminate");
            if (L.k() < 3) break;
            std::vector<int> idx(L.k());
            std::iota(idx.begin(), idx.end(), 1);
            // largest a_i means most negative coefficient of E_i
            std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) { return C[a] < C[b]; });
            int i = idx[0], j = idx[1], l = idx[2];
            apply([&](const CohClass& x) { return cremona(x, i, j, l); });
        }
        if (C[0] == 0) {
            int pos = -1;
            for (int i = 1; i <= L.k(); ++i)
                if (C[i] == 1) pos = i;
            if (pos < 0) throw Error(ErrorCode::InternalArithmeticError, "not exceptional: " + C.to_string());
            int last = L.k();
            apply([&](const CohClass& x) { return swap_E(x, pos, last); });
            SurfaceLattice S = SurfaceLattice::blowup(L.k() - 1);
            for (auto& t : todo) t = drop_last(t, S);
            for (auto& t : carry) t = drop_last(t, S);
            L = S;
            continue;
        }
        // k = 2 and C = u - E1 - E2: the result is P1 x P1 with x = u - E1, y = u - E2.
        if (!(L.k() == 2 && C == gen_u(L) - gen_E(L, 1) - gen_E(L, 2)) || !todo.empty())
            throw Error(ErrorCode::InternalArithmeticError, "unexpected contraction of " + C.to_string());
        SurfaceLattice P = SurfaceLattice::product();
        CohClass x = gen_u(L) - gen_E(L, 1), y = gen_u(L) - gen_E(L, 2);
        for (auto& t : carry) {
            if (pair(t, C) != 0) throw Error(ErrorCode::InternalArithmeticError, "class meets contracted class");
            t = CohClass(P, {pair(t, y), pair(t, x)});
        }
        L = P;
    }
    return {L, carry};
}

}  // namespace hamfix

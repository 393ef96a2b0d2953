#include <doctest.h>

#include <algorithm>
#include <functional>
#include <set>

#include "hamfix/errors.hpp"
#include "hamfix/lattice.hpp"

using namespace hamfix;

namespace {

CohClass cls(const SurfaceLattice& L, std::vector<long long> c) { return CohClass::from_ints(L, c); }

// Every integral vector in the box, filtered by the defining equations.
std::set<std::vector<long long>> brute_exceptional(int k, int bound) {
    SurfaceLattice L = SurfaceLattice::blowup(k);
    std::set<std::vector<long long>> out;
    std::vector<long long> v(k + 1, -bound);
    while (true) {
        CohClass C = cls(L, v);
        if (pair(C, C) == -1 && pair(L.anticanonical(), C) == 1) out.insert(v);
        int i = 0;
        while (i <= k && v[i] == bound) v[i++] = -bound;
        if (i > k) break;
        ++v[i];
    }
    return out;
}

std::set<std::vector<long long>> as_set(const std::vector<CohClass>& cs) {
    std::set<std::vector<long long>> s;
    for (const auto& c : cs) s.insert(c.to_ints());
    return s;
}

}  // namespace

TEST_CASE("blow-up lattices") {
    auto P2 = make_blowup_lattice(0);
    CHECK(P2.rank() == 1);
    CHECK(P2.gram_matrix() == std::vector<std::vector<int>>{{1}});
    CHECK(P2.anticanonical() == cls(P2, {3}));
    auto L1 = make_blowup_lattice(1);
    CHECK(L1.gram_matrix() == std::vector<std::vector<int>>{{1, 0}, {0, -1}});
    CHECK(L1.anticanonical().to_string() == "3u - E1");
    CHECK(make_blowup_lattice(3).anticanonical().to_string() == "3u - E1 - E2 - E3");
    CHECK_THROWS_AS(make_blowup_lattice(9), Error);
    CHECK_THROWS_AS(make_blowup_lattice(-1), Error);
    try {
        make_blowup_lattice(9);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::InvalidBlowupCount);
    }
    auto P = SurfaceLattice::product();
    CHECK(P.anticanonical() == cls(P, {2, 2}));
    CHECK(pair(P.anticanonical(), P.anticanonical()) == 8);
}

TEST_CASE("pairing") {
    auto L1 = SurfaceLattice::blowup(1);
    CHECK(pair(cls(L1, {1, -1}), cls(L1, {1, -1})) == 0);
    auto L2 = SurfaceLattice::blowup(2);
    CHECK(pair(cls(L2, {3, -1, -1}), cls(L2, {2, -2, -1})) == 3);
    auto L3 = SurfaceLattice::blowup(3);
    CohClass e = cls(L3, {2, -1, 0, -1});
    CHECK(pair(e, e) == 2);
    try {
        pair(cls(L1, {1, 0}), cls(L2, {1, 0, 0}));
        CHECK(false);
    } catch (const Error& err) {
        CHECK(err.code() == ErrorCode::LatticeMismatch);
    }
    // symmetry and bilinearity on a few rational samples
    CohClass a(L3, {Rational(1, 2), 3, -1, Rational(2, 3)}), b = cls(L3, {2, 1, 0, -5}), c = cls(L3, {-1, 4, 2, 2});
    CHECK(pair(a, b) == pair(b, a));
    CHECK(pair(a + Rational(3) * c, b) == pair(a, b) + 3 * pair(c, b));
}

TEST_CASE("exceptional classes: small cases") {
    auto L1 = SurfaceLattice::blowup(1), L2 = SurfaceLattice::blowup(2), L3 = SurfaceLattice::blowup(3);
    CHECK(as_set(exceptional_classes(L1, 3)) == std::set<std::vector<long long>>{{0, 1}});
    CHECK(as_set(exceptional_classes(L2, 3)) ==
          std::set<std::vector<long long>>{{0, 1, 0}, {0, 0, 1}, {1, -1, -1}});
    CHECK(as_set(exceptional_classes(L3, 3)) == std::set<std::vector<long long>>{
                                                    {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1},
                                                    {1, -1, -1, 0}, {1, -1, 0, -1}, {1, 0, -1, -1}});
    CHECK(exceptional_classes(SurfaceLattice::blowup(0), 3).empty());
    try {
        exceptional_classes(SurfaceLattice::product(), 3);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NoExceptionalBasis);
    }
}

TEST_CASE("exceptional classes agree with the box oracle") {
    for (int k = 0; k <= 3; ++k) {
        auto L = SurfaceLattice::blowup(k);
        CHECK(as_set(exceptional_classes(L, 3)) == brute_exceptional(k, 3));
        CHECK(as_set(exceptional_classes(L, 4)) == brute_exceptional(k, 4));
    }
}

TEST_CASE("exceptional class counts saturate by bound 6") {
    const int expected[9] = {0, 1, 3, 6, 10, 16, 27, 56, 240};
    for (int k = 0; k <= 8; ++k) {
        auto L = SurfaceLattice::blowup(k);
        auto six = exceptional_classes(L, 6);
        CHECK(static_cast<int>(six.size()) == expected[k]);
        CHECK(as_set(exceptional_classes(L, 9)) == as_set(six));
        for (const auto& C : six) CHECK(adjunction_genus(L, C) == 0);
    }
}

TEST_CASE("exceptional set is invariant under permuting E indices") {
    for (int k = 2; k <= 5; ++k) {
        auto L = SurfaceLattice::blowup(k);
        auto base = as_set(all_exceptional_classes(L));
        std::vector<int> perm(k);
        for (int i = 0; i < k; ++i) perm[i] = i + 1;
        do {
            std::set<std::vector<long long>> moved;
            for (auto v : base) {
                std::vector<long long> w(v.size());
                w[0] = v[0];
                for (int i = 0; i < k; ++i) w[perm[i]] = v[i + 1];
                moved.insert(w);
            }
            CHECK(moved == base);
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
}

TEST_CASE("adjunction genus") {
    auto P2 = SurfaceLattice::blowup(0), L1 = SurfaceLattice::blowup(1);
    CHECK(adjunction_genus(P2, cls(P2, {2})) == 0);
    CHECK(adjunction_genus(P2, cls(P2, {3})) == 1);
    CHECK(adjunction_genus(P2, cls(P2, {4})) == 3);
    CHECK_FALSE(adjunction_genus(L1, cls(L1, {1, -2})).has_value());
    CHECK_FALSE(adjunction_genus(L1, cls(L1, {1, 1})).has_value());
    CHECK_FALSE(adjunction_genus(P2, CohClass(P2, {Rational(1, 2)})).has_value());
}

namespace {

using Multiset = std::vector<std::vector<long long>>;

// Multisets of at most three parts from the box, checked pairwise.
std::set<Multiset> brute_splittings(const SurfaceLattice& L, const CohClass& total, int bound) {
    std::vector<CohClass> parts;
    auto exc = all_exceptional_classes(L);
    std::vector<long long> v(L.rank(), -bound);
    while (true) {
        CohClass P = CohClass::from_ints(L, v);
        Rational c1p = pair(L.anticanonical(), P);
        bool ok = c1p >= 1 && adjunction_genus(L, P).has_value();
        if (ok && pair(P, P) >= 0)
            for (const auto& e : exc) ok = ok && pair(P, e) >= 0;
        if (ok) parts.push_back(P);
        int i = 0;
        while (i < L.rank() && v[i] == bound) v[i++] = -bound;
        if (i == L.rank()) break;
        ++v[i];
    }
    std::set<Multiset> out;
    auto add = [&](std::vector<CohClass> ps) {
        CohClass sum(L);
        for (const auto& p : ps) sum += p;
        if (sum != total) return;
        for (size_t i = 0; i < ps.size(); ++i)
            for (size_t j = i + 1; j < ps.size(); ++j)
                if (pair(ps[i], ps[j]) != 0) return;
        Multiset m;
        for (const auto& p : ps) m.push_back(p.to_ints());
        std::sort(m.begin(), m.end());
        out.insert(m);
    };
    for (size_t a = 0; a < parts.size(); ++a) {
        add({parts[a]});
        for (size_t b = a; b < parts.size(); ++b) {
            add({parts[a], parts[b]});
            for (size_t c = b; c < parts.size(); ++c) add({parts[a], parts[b], parts[c]});
        }
    }
    return out;
}

std::set<Multiset> as_multisets(const std::vector<Splitting>& sp) {
    std::set<Multiset> out;
    for (const auto& s : sp) {
        Multiset m;
        for (const auto& p : s) m.push_back(p.cls.to_ints());
        std::sort(m.begin(), m.end());
        out.insert(m);
    }
    return out;
}

}  // namespace

TEST_CASE("component splittings: examples") {
    auto L1 = SurfaceLattice::blowup(1);
    auto s1 = component_splittings(L1, cls(L1, {2, -2}), 6);
    REQUIRE(s1.size() == 1);
    CHECK(s1[0].size() == 2);
    CHECK(s1[0][0].cls == cls(L1, {1, -1}));
    CHECK(s1[0][1].cls == cls(L1, {1, -1}));
    CHECK(s1[0][0].genus == 0);

    auto P2 = SurfaceLattice::blowup(0);
    auto s2 = component_splittings(P2, cls(P2, {2}), 6);
    REQUIRE(s2.size() == 1);
    CHECK(s2[0] == Splitting{{cls(P2, {2}), 0}});

    auto L2 = SurfaceLattice::blowup(2);
    auto s3 = component_splittings(L2, cls(L2, {2, -2, -1}), 6);
    REQUIRE(s3.size() == 1);
    CHECK(as_multisets(s3) == std::set<Multiset>{{{1, -1, -1}, {1, -1, 0}}});

    auto s4 = component_splittings(P2, cls(P2, {3}), 6);
    REQUIRE(s4.size() == 1);
    CHECK(s4[0][0].genus == 1);
}

TEST_CASE("component splittings agree with the small-part oracle") {
    struct Case {
        int k;
        std::vector<long long> total;
    };
    for (const auto& c : std::vector<Case>{{0, {2}}, {0, {3}}, {1, {2, -2}}, {1, {1, 0}}, {1, {2, -1}}, {1, {0, 1}},
                                           {2, {2, -2, -1}}, {2, {1, -1, -1}}, {2, {2, -1, -1}}, {3, {1, 0, -1, -1}}}) {
        auto L = SurfaceLattice::blowup(c.k);
        CohClass T = cls(L, c.total);
        auto got = component_splittings(L, T, 3);
        CHECK(as_multisets(got) == brute_splittings(L, T, 3));
        for (const auto& sp : got) {
            CohClass sum(L);
            for (const auto& p : sp) sum += p.cls;
            CHECK(sum == T);
            for (size_t i = 0; i < sp.size(); ++i)
                for (size_t j = i + 1; j < sp.size(); ++j) CHECK(pair(sp[i].cls, sp[j].cls) == 0);
        }
    }
}

TEST_CASE("Hirzebruch basis conversion") {
    auto L1 = SurfaceLattice::blowup(1);
    CohClass c = hirzebruch_class(L1, 5, 1);
    CHECK(c == cls(L1, {5, -4}));
    auto [f, s] = hirzebruch_coords(c);
    CHECK(f == 5);
    CHECK(s == 1);
    CohClass F = hirzebruch_class(L1, 1, 0);
    CHECK(pair(F, F) == 0);
    CHECK(pair(L1.anticanonical(), F) == 2);
}

TEST_CASE("blow-down re-expression") {
    auto L3 = SurfaceLattice::blowup(3);
    std::vector<CohClass> three = {cls(L3, {1, -1, -1, 0}), cls(L3, {1, -1, 0, -1}), cls(L3, {1, 0, -1, -1})};
    CohClass omega = cls(L3, {4, -2, -2, -2});
    CohClass e = cls(L3, {2, -1, -1, -1});
    auto [S, carried] = blow_down(L3, three, {omega, e});
    CHECK(S == SurfaceLattice::blowup(0));
    CHECK(carried[0] == cls(S, {2}));
    CHECK(carried[1] == cls(S, {1}));

    auto L2 = SurfaceLattice::blowup(2);
    auto [P, c2] = blow_down(L2, {cls(L2, {1, -1, -1})}, {cls(L2, {2, -1, -1})});
    CHECK(P == SurfaceLattice::product());
    CHECK(c2[0] == cls(P, {1, 1}));

    auto [P3, c3] = blow_down(L3, {gen_E(L3, 1), cls(L3, {1, 0, -1, -1})}, {cls(L3, {2, 0, -1, -1})});
    CHECK(P3 == SurfaceLattice::product());
    CHECK(pair(c3[0], c3[0]) == 2);

    // pairings among carried classes survive the contraction
    auto L5 = SurfaceLattice::blowup(5);
    CohClass C = cls(L5, {2, -1, -1, -1, -1, -1});
    REQUIRE(pair(C, C) == -1);
    CohClass a = cls(L5, {3, -1, -1, -1, 0, 2}), b = cls(L5, {1, 0, 0, 0, 1, -3});
    a = a + pair(a, C) * C;
    b = b + pair(b, C) * C;
    auto [S4, c4] = blow_down(L5, {C}, {a, b});
    CHECK(S4 == SurfaceLattice::blowup(4));
    CHECK(pair(c4[0], c4[1]) == pair(a, b));
    CHECK(pair(c4[0], c4[0]) == pair(a, a));
}

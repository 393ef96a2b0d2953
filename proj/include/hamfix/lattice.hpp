#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hamfix/rational.hpp"

namespace hamfix {

class CohClass;

enum class LatticeKind { BlowupOfP2, ProductOfSpheres };

// H^2 of a reduced space. Blow-ups use the basis (u, E1..Ek), the product
// of spheres the basis (x, y) with x.y = 1.
class SurfaceLattice {
public:
    static SurfaceLattice blowup(int k);
    static SurfaceLattice product();

    LatticeKind kind() const { return kind_; }
    int k() const { return k_; }
    int rank() const { return kind_ == LatticeKind::BlowupOfP2 ? k_ + 1 : 2; }
    int gram(int i, int j) const;
    std::vector<std::vector<int>> gram_matrix() const;
    CohClass anticanonical() const;
    std::string name() const;

    bool operator==(const SurfaceLattice& o) const { return kind_ == o.kind_ && k_ == o.k_; }
    bool operator!=(const SurfaceLattice& o) const { return !(*this == o); }

private:
    SurfaceLattice(LatticeKind kind, int k) : kind_(kind), k_(k) {}
    LatticeKind kind_;
    int k_;
};

SurfaceLattice make_blowup_lattice(int k);

class CohClass {
public:
    explicit CohClass(SurfaceLattice L);
    CohClass(SurfaceLattice L, std::vector<Rational> coeffs);
    static CohClass from_ints(SurfaceLattice L, const std::vector<long long>& c);

    const SurfaceLattice& lattice() const { return L_; }
    const std::vector<Rational>& coeffs() const { return c_; }
    const Rational& operator[](int i) const { return c_.at(i); }
    int rank() const { return static_cast<int>(c_.size()); }

    bool is_integral() const;
    bool is_zero() const;
    std::vector<long long> to_ints() const;
    std::string to_string() const;

    CohClass operator+(const CohClass& o) const;
    CohClass operator-(const CohClass& o) const;
    CohClass operator-() const;
    CohClass& operator+=(const CohClass& o);
    CohClass& operator-=(const CohClass& o);
    friend CohClass operator*(const Rational& s, const CohClass& a);

    bool operator==(const CohClass& o) const { return L_ == o.L_ && c_ == o.c_; }
    bool operator!=(const CohClass& o) const { return !(*this == o); }
    bool operator<(const CohClass& o) const { return c_ < o.c_; }

private:
    SurfaceLattice L_;
    std::vector<Rational> c_;
};

// Named generators. u and E(i) (1-based) need a blow-up lattice, x and y a product.
CohClass gen_u(const SurfaceLattice& L);
CohClass gen_E(const SurfaceLattice& L, int i);
CohClass gen_x(const SurfaceLattice& L);
CohClass gen_y(const SurfaceLattice& L);

Rational pair(const CohClass& a, const CohClass& b);

// Integer fast path used by the enumerators; vectors are coefficient lists.
long long pair_int(const SurfaceLattice& L, const std::vector<int>& a, const std::vector<int>& b);

std::vector<CohClass> exceptional_classes(const SurfaceLattice& L, int bound);
// Every exceptional class of P^2 # k, k <= 8, has coefficients of size at most 6.
std::vector<CohClass> all_exceptional_classes(const SurfaceLattice& L);
const std::vector<std::vector<int>>& exceptional_vectors(int k);

std::optional<int> adjunction_genus(const SurfaceLattice& L, const CohClass& C);

struct Part {
    CohClass cls;
    int genus;
    bool operator==(const Part& o) const { return cls == o.cls && genus == o.genus; }
    bool operator<(const Part& o) const { return cls < o.cls; }
};
using Splitting = std::vector<Part>;

std::vector<Splitting> component_splittings(const SurfaceLattice& L, const CohClass& total, int bound);

// Sphere bundle over S^2 with odd twisting, written in the blow-up basis of P^2 # 1.
CohClass hirzebruch_class(const SurfaceLattice& L, const Rational& fiber, const Rational& section);
std::pair<Rational, Rational> hirzebruch_coords(const CohClass& c);

// Isometries used to contract exceptional classes.
CohClass cremona(const CohClass& c, int i, int j, int l);
CohClass swap_E(const CohClass& c, int i, int j);

// Contracts the pairwise orthogonal exceptional classes in `contract` and
// rewrites each class in `carry` (all orthogonal to them) in the smaller lattice.
std::pair<SurfaceLattice, std::vector<CohClass>> blow_down(const SurfaceLattice& L,
                                                           const std::vector<CohClass>& contract,
                                                           const std::vector<CohClass>& carry);

}  // namespace hamfix

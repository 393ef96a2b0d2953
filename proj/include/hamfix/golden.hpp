#pragma once

#include <optional>
#include <set>
#include <tuple>
#include <string>
#include <utility>
#include <vector>

namespace hamfix {

struct GoldenPart {
    std::vector<long long> coeffs;  // over P^2 # k in the basis (u, E1..Ek)
    int genus;
};

// One row of the published six-dimensional classification.
struct GoldenRow6 {
    std::string label;
    int maxDim;            // 0, 2 or 4
    std::set<int> crit;    // interior critical levels
    int k;                 // points at -1, also the blow-up count of M_0
    int m;                 // points at +1
    std::vector<GoldenPart> z0;
    long long chern;
    int b2;
    int b3;
    long long hmax, hsmin, hmin;  // capacities table as printed
    long long gromov, hoferZehnder;
    std::string zmax;               // lattice of a four-dimensional maximum
    std::optional<long long> volZmax;  // area of a sphere maximum
};

const std::vector<GoldenRow6>& golden6();

struct GoldenRow4 {
    std::string label;
    std::string manifold;  // diffeomorphism type as printed
    int minDim;            // 0 or 2
    int maxDim;
    int interior;          // points at level 0
    long long eulerMin;    // e(P_min^+) as a multiple of u
    int b2;
};

const std::vector<GoldenRow4>& golden4();

// Tuples (a, b, k) of the sphere-sphere case before identification.
const std::set<std::tuple<int, int, int>>& golden_case3_tuples();

}  // namespace hamfix

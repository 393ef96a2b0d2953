#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "hamfix/rational.hpp"
#include "hamfix/tfd.hpp"

namespace hamfix {

using IVec3 = std::array<long long, 3>;

struct Facet {
    IVec3 normal;  // inward, primitive
    long long offset;
};

// Facets are <normal, x> >= offset.
struct Polytope {
    std::string name;
    std::vector<IVec3> vertices;
    std::vector<std::array<int, 2>> edges;
    std::vector<Facet> facets;
    bool reflexive = false;
    // optional corpus metadata
    std::optional<IVec3> xi;
    std::string label;
};

Polytope load_polytope(const std::string& path);
Polytope parse_polytope(const std::string& json);
std::string to_json(const Polytope& p);

bool is_delzant(const Polytope& p);
// Throws NotDelzant.
bool is_semifree(const Polytope& p, const IVec3& xi);

struct FixedFace {
    int dim = 0;
    std::vector<int> vertices;
    int level = 0;
    // lattice length of an edge, normalized area (= omega^2) of a 2-face
    Rational size;
    std::string surface;  // lattice of a fixed 2-face
};

// Sorted by level, then dimension. Throws NotBalanced, InvalidInput if not semifree.
std::vector<FixedFace> fixed_faces(const Polytope& p, const IVec3& xi);

// Matches the fixed faces against `candidates` (levels, counts, areas, surface
// types). Returns the matching row; throws NoMatchingTFD.
TFD tfd_from_polytope(const Polytope& p, const IVec3& xi, const std::vector<TFD>& candidates);
// Against every classifier survivor at bound 6.
TFD tfd_from_polytope(const Polytope& p, const IVec3& xi);

// 6 Vol(P); throws NotReflexive, NotDelzant.
long long chern_number_from_volume(const Polytope& p);

struct PolytopeReport {
    std::string name;
    std::string expected;  // label from the file
    std::string matched;   // label of the matched row, empty if unlabelled
    bool semifree = false;
    long long chernVolume = 0;
    long long chernLocalization = 0;
    int fixedVertices = 0;
    int eulerCharacteristic = 0;
    bool ok = false;
    std::string message;
};

PolytopeReport verify_polytope(const Polytope& p, const IVec3& xi, const std::vector<TFD>& candidates);
// Every *.json in dir, sorted by file name; each file must carry xi.
std::vector<PolytopeReport> verify_corpus(const std::string& dir, const std::vector<TFD>& candidates);

// HAMFIX_CORPUS, else the data directory of the source tree.
std::string default_corpus_dir();

}  // namespace hamfix

#include "hamfix/toric.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <tuple>

#include <json.hpp>

#include "hamfix/classifier6.hpp"
#include "hamfix/errors.hpp"
#include "hamfix/localization.hpp"

namespace hamfix {

namespace {

using json = nlohmann::json;

long long dot(const IVec3& a, const IVec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
IVec3 sub(const IVec3& a, const IVec3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
IVec3 cross3(const IVec3& a, const IVec3& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}
long long det3(const IVec3& a, const IVec3& b, const IVec3& c) { return dot(a, cross3(b, c)); }

long long content(const IVec3& v) { return std::gcd(std::gcd(std::llabs(v[0]), std::llabs(v[1])), std::llabs(v[2])); }

IVec3 primitive(const IVec3& v) {
    long long g = content(v);
    if (g == 0) throw Error(ErrorCode::InvalidInput, "degenerate edge");
    return {v[0] / g, v[1] / g, v[2] / g};
}

// primitive direction of edge e pointing away from vertex v
IVec3 direction_from(const Polytope& p, int e, int v) {
    const auto& ed = p.edges[e];
    int w = ed[0] == v ? ed[1] : ed[0];
    return primitive(sub(p.vertices[w], p.vertices[v]));
}

std::vector<std::vector<int>> incident_edges(const Polytope& p) {
    std::vector<std::vector<int>> inc(p.vertices.size());
    for (size_t e = 0; e < p.edges.size(); ++e)
        for (int v : p.edges[e]) {
            if (v < 0 || v >= static_cast<int>(p.vertices.size())) throw Error(ErrorCode::InvalidInput, "edge index out of range");
            inc[v].push_back(static_cast<int>(e));
        }
    return inc;
}

std::vector<int> facet_vertices(const Polytope& p, const Facet& f) {
    std::vector<int> out;
    for (size_t i = 0; i < p.vertices.size(); ++i)
        if (dot(f.normal, p.vertices[i]) == f.offset) out.push_back(static_cast<int>(i));
    return out;
}

std::vector<int> facet_edges(const Polytope& p, const std::vector<int>& verts) {
    std::set<int> vs(verts.begin(), verts.end());
    std::vector<int> out;
    for (size_t e = 0; e < p.edges.size(); ++e)
        if (vs.count(p.edges[e][0]) && vs.count(p.edges[e][1])) out.push_back(static_cast<int>(e));
    return out;
}

// vertices of a polygonal face in cyclic order
std::vector<int> cyclic(const Polytope& p, const std::vector<int>& verts) {
    auto es = facet_edges(p, verts);
    std::map<int, std::vector<int>> nb;
    for (int e : es) {
        nb[p.edges[e][0]].push_back(p.edges[e][1]);
        nb[p.edges[e][1]].push_back(p.edges[e][0]);
    }
    for (int v : verts)
        if (nb[v].size() != 2) throw Error(ErrorCode::InvalidInput, "face is not a polygon");
    std::vector<int> out{verts.front()};
    int prev = -1, cur = verts.front();
    while (out.size() < verts.size()) {
        int next = nb[cur][0] == prev ? nb[cur][1] : nb[cur][0];
        out.push_back(next);
        prev = cur;
        cur = next;
    }
    return out;
}

// 2 x normalized lattice area of a polygon in the plane with normal n
Rational double_area(const Polytope& p, const std::vector<int>& ring, const IVec3& n) {
    IVec3 s{0, 0, 0};
    for (size_t i = 0; i < ring.size(); ++i) {
        IVec3 c = cross3(p.vertices[ring[i]], p.vertices[ring[(i + 1) % ring.size()]]);
        for (int j = 0; j < 3; ++j) s[j] += c[j];
    }
    long long sn = dot(s, n);
    return Rational(std::llabs(sn), dot(n, n));
}

std::string surface_of(const Polytope& p, const std::vector<int>& ring) {
    size_t n = ring.size();
    if (n == 3) return "P2";
    if (n == 5) return "P2#2";
    if (n == 4) {
        auto d = [&](size_t i) { return primitive(sub(p.vertices[ring[(i + 1) % n]], p.vertices[ring[i]])); };
        auto parallel = [&](const IVec3& a, const IVec3& b) { return cross3(a, b) == IVec3{0, 0, 0}; };
        return parallel(d(0), d(2)) && parallel(d(1), d(3)) ? "P1xP1" : "P2#1";
    }
    throw Error(ErrorCode::InvalidInput, "fixed face with " + std::to_string(n) + " edges");
}

std::optional<IVec3> interior_point(const Polytope& p) {
    IVec3 lo = p.vertices.front(), hi = p.vertices.front();
    for (const auto& v : p.vertices)
        for (int j = 0; j < 3; ++j) {
            lo[j] = std::min(lo[j], v[j]);
            hi[j] = std::max(hi[j], v[j]);
        }
    std::optional<IVec3> found;
    for (long long x = lo[0]; x <= hi[0]; ++x)
        for (long long y = lo[1]; y <= hi[1]; ++y)
            for (long long z = lo[2]; z <= hi[2]; ++z) {
                IVec3 q{x, y, z};
                bool inside = std::all_of(p.facets.begin(), p.facets.end(), [&](const Facet& f) { return dot(f.normal, q) > f.offset; });
                if (!inside) continue;
                if (found) return std::nullopt;
                found = q;
            }
    return found;
}

struct SigEntry {
    int level;
    int dim;
    Rational size;
    std::string surface;
    bool operator<(const SigEntry& o) const {
        return std::tie(level, dim, size, surface) < std::tie(o.level, o.dim, o.size, o.surface);
    }
    bool operator==(const SigEntry& o) const {
        return level == o.level && dim == o.dim && size == o.size && surface == o.surface;
    }
};

std::vector<SigEntry> signature(const std::vector<FixedFace>& faces) {
    std::vector<SigEntry> out;
    for (const auto& f : faces) out.push_back({f.level, f.dim, f.size, f.surface});
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<SigEntry> signature(const TFD& t) {
    std::vector<SigEntry> out;
    for (size_t i = 0; i < t.crit.size(); ++i) {
        for (const auto& fc : t.crit[i].components) {
            switch (fc.kind) {
                case ComponentKind::IsolatedPoint: out.push_back({fc.level, 0, 0, ""}); break;
                case ComponentKind::InteriorSurface: {
                    // omega is continuous across the level, read it on the slice above
                    CohClass w = t.slices[i].omega(fc.level);
                    out.push_back({fc.level, 2, pair(w, *fc.surfaceClass), ""});
                    break;
                }
                case ComponentKind::ExtremalSurface:
                    out.push_back({fc.level, 2, Rational(2 + fc.normalDegrees.first + fc.normalDegrees.second), ""});
                    break;
                case ComponentKind::ExtremalFourManifold: {
                    const SliceState& s = fc.is_maximum() ? t.slices.back() : t.slices.front();
                    CohClass w = s.omega(fc.level);
                    out.push_back({fc.level, 4, pair(w, w), fc.lattice->name()});
                    break;
                }
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

IVec3 read_vec(const json& j) {
    if (!j.is_array() || j.size() != 3) throw Error(ErrorCode::InvalidInput, "expected an integer 3-vector");
    return {j[0].get<long long>(), j[1].get<long long>(), j[2].get<long long>()};
}

}  // namespace

Polytope parse_polytope(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw Error(ErrorCode::InvalidInput, std::string("polytope JSON: ") + e.what());
    }
    Polytope p;
    try {
        p.name = j.at("name").get<std::string>();
        for (const auto& v : j.at("vertices")) p.vertices.push_back(read_vec(v));
        for (const auto& e : j.at("edges")) p.edges.push_back({e.at(0).get<int>(), e.at(1).get<int>()});
        for (const auto& f : j.at("facets")) p.facets.push_back({read_vec(f.at("normal")), f.at("offset").get<long long>()});
        p.reflexive = j.value("reflexive", false);
        if (j.contains("xi")) p.xi = read_vec(j["xi"]);
        p.label = j.value("label", "");
    } catch (const json::exception& e) {
        throw Error(ErrorCode::InvalidInput, std::string("polytope JSON: ") + e.what());
    }
    if (p.vertices.empty()) throw Error(ErrorCode::InvalidInput, "polytope without vertices");
    return p;
}

Polytope load_polytope(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::InvalidInput, "cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_polytope(ss.str());
}

std::string to_json(const Polytope& p) {
    json j;
    j["name"] = p.name;
    j["vertices"] = p.vertices;
    j["edges"] = p.edges;
    j["facets"] = json::array();
    for (const auto& f : p.facets) j["facets"].push_back({{"normal", f.normal}, {"offset", f.offset}});
    j["reflexive"] = p.reflexive;
    if (p.xi) j["xi"] = *p.xi;
    if (!p.label.empty()) j["label"] = p.label;
    return j.dump();
}

bool is_delzant(const Polytope& p) {
    auto inc = incident_edges(p);
    for (size_t v = 0; v < p.vertices.size(); ++v) {
        if (inc[v].size() != 3) return false;
        IVec3 a = direction_from(p, inc[v][0], static_cast<int>(v));
        IVec3 b = direction_from(p, inc[v][1], static_cast<int>(v));
        IVec3 c = direction_from(p, inc[v][2], static_cast<int>(v));
        if (std::llabs(det3(a, b, c)) != 1) return false;
    }
    return true;
}

bool is_semifree(const Polytope& p, const IVec3& xi) {
    if (!is_delzant(p)) throw Error(ErrorCode::NotDelzant, p.name + " is not Delzant");
    for (size_t e = 0; e < p.edges.size(); ++e) {
        long long w = dot(direction_from(p, static_cast<int>(e), p.edges[e][0]), xi);
        if (w < -1 || w > 1) return false;
    }
    return true;
}

std::vector<FixedFace> fixed_faces(const Polytope& p, const IVec3& xi) {
    if (!is_semifree(p, xi)) throw Error(ErrorCode::InvalidInput, p.name + ": action is not semifree");
    auto inc = incident_edges(p);
    auto weight = [&](int e, int v) { return dot(direction_from(p, e, v), xi); };

    std::vector<FixedFace> out;
    std::vector<long long> shift;  // required shift per face
    std::set<int> inFixedFacet;
    for (const auto& f : p.facets) {
        auto verts = facet_vertices(p, f);
        auto es = facet_edges(p, verts);
        if (verts.size() < 3) continue;
        bool fixed = std::all_of(es.begin(), es.end(), [&](int e) { return weight(e, p.edges[e][0]) == 0; });
        if (!fixed) continue;
        for (int e : es) inFixedFacet.insert(e);
        auto ring = cyclic(p, verts);
        FixedFace ff;
        ff.dim = 4;
        ff.vertices = verts;
        ff.size = double_area(p, ring, f.normal);
        ff.surface = surface_of(p, ring);
        int v = verts.front();
        long long sigma = 0;
        for (int e : inc[v])
            if (!std::count(es.begin(), es.end(), e)) sigma += weight(e, v);
        shift.push_back(-sigma - dot(p.vertices[v], xi));
        out.push_back(ff);
    }
    for (size_t e = 0; e < p.edges.size(); ++e) {
        int a = p.edges[e][0], b = p.edges[e][1];
        if (weight(static_cast<int>(e), a) != 0 || inFixedFacet.count(static_cast<int>(e))) continue;
        long long sigma = 0;
        bool transverse = true;
        for (int f : inc[a])
            if (f != static_cast<int>(e)) {
                long long w = weight(f, a);
                transverse = transverse && w != 0;
                sigma += w;
            }
        for (int f : inc[b])
            if (f != static_cast<int>(e)) transverse = transverse && weight(f, b) != 0;
        if (!transverse) continue;
        FixedFace ff;
        ff.dim = 2;
        ff.vertices = {a, b};
        ff.size = content(sub(p.vertices[b], p.vertices[a]));
        shift.push_back(-sigma - dot(p.vertices[a], xi));
        out.push_back(ff);
    }
    for (size_t v = 0; v < p.vertices.size(); ++v) {
        long long sigma = 0;
        bool fixed = true;
        for (int e : inc[v]) {
            long long w = weight(e, static_cast<int>(v));
            fixed = fixed && w != 0;
            sigma += w;
        }
        if (!fixed) continue;
        FixedFace ff;
        ff.dim = 0;
        ff.vertices = {static_cast<int>(v)};
        ff.size = 0;
        shift.push_back(-sigma - dot(p.vertices[v], xi));
        out.push_back(ff);
    }
    if (out.empty()) throw Error(ErrorCode::NotBalanced, "no fixed faces");
    for (long long s : shift)
        if (s != shift.front()) throw Error(ErrorCode::NotBalanced, p.name + ": fixed faces need different shifts");
    for (auto& f : out) f.level = static_cast<int>(dot(p.vertices[f.vertices.front()], xi) + shift.front());
    std::stable_sort(out.begin(), out.end(), [](const FixedFace& a, const FixedFace& b) {
        return std::tie(a.level, a.dim) < std::tie(b.level, b.dim);
    });
    return out;
}

TFD tfd_from_polytope(const Polytope& p, const IVec3& xi, const std::vector<TFD>& candidates) {
    auto faces = fixed_faces(p, xi);
    // classifier rows have an isolated minimum
    if (faces.front().dim != 0 && faces.back().dim == 0) faces = fixed_faces(p, {-xi[0], -xi[1], -xi[2]});
    auto sig = signature(faces);
    std::vector<const TFD*> hits;
    for (const auto& t : candidates)
        if (signature(t) == sig) hits.push_back(&t);
    if (hits.empty()) throw Error(ErrorCode::NoMatchingTFD, p.name + ": no classifier row has these fixed faces");
    if (hits.size() > 1) throw Error(ErrorCode::NoMatchingTFD, p.name + ": fixed faces match several rows");
    return *hits.front();
}

TFD tfd_from_polytope(const Polytope& p, const IVec3& xi) {
    auto rows = enumerate_all(6);
    match_golden(rows);
    return tfd_from_polytope(p, xi, rows);
}

long long chern_number_from_volume(const Polytope& p) {
    if (!is_delzant(p)) throw Error(ErrorCode::NotDelzant, p.name + " is not Delzant");
    auto c = interior_point(p);
    if (!p.reflexive || !c) throw Error(ErrorCode::NotReflexive, p.name + " has no unique interior point");
    for (const auto& f : p.facets)
        if (dot(f.normal, *c) - f.offset != 1) throw Error(ErrorCode::NotReflexive, p.name + ": facet at distance " + std::to_string(dot(f.normal, *c) - f.offset));
    // pyramids over the facets with apex at the interior point, each facet fanned from its first vertex
    long long six = 0;
    for (const auto& f : p.facets) {
        auto ring = cyclic(p, facet_vertices(p, f));
        for (size_t i = 1; i + 1 < ring.size(); ++i)
            six += std::llabs(det3(sub(p.vertices[ring[0]], *c), sub(p.vertices[ring[i]], *c), sub(p.vertices[ring[i + 1]], *c)));
    }
    return six;
}

PolytopeReport verify_polytope(const Polytope& p, const IVec3& xi, const std::vector<TFD>& candidates) {
    PolytopeReport r;
    r.name = p.name;
    r.expected = p.label;
    r.fixedVertices = static_cast<int>(p.vertices.size());
    try {
        r.semifree = is_semifree(p, xi);
        if (!r.semifree) throw Error(ErrorCode::InvalidInput, "action is not semifree");
        TFD t = tfd_from_polytope(p, xi, candidates);
        r.matched = t.label;
        r.chernVolume = chern_number_from_volume(p);
        r.chernLocalization = chern_number(t);
        auto b = betti(t);
        r.eulerCharacteristic = 0;
        for (int i = 0; i < 7; ++i) r.eulerCharacteristic += (i % 2 ? -1 : 1) * b[i];
        std::vector<std::string> bad;
        if (r.matched != r.expected) bad.push_back("matched '" + r.matched + "', expected '" + r.expected + "'");
        if (r.chernVolume != r.chernLocalization)
            bad.push_back("6 Vol = " + std::to_string(r.chernVolume) + ", localization " + std::to_string(r.chernLocalization));
        if (r.fixedVertices != r.eulerCharacteristic)
            bad.push_back(std::to_string(r.fixedVertices) + " vertices, Euler characteristic " + std::to_string(r.eulerCharacteristic));
        r.ok = bad.empty();
        for (const auto& s : bad) r.message += (r.message.empty() ? "" : "; ") + s;
    } catch (const Error& e) {
        r.ok = false;
        r.message = std::string(to_string(e.code())) + ": " + e.what();
    }
    return r;
}

std::vector<PolytopeReport> verify_corpus(const std::string& dir, const std::vector<TFD>& candidates) {
    namespace fs = std::filesystem;
    if (!fs::is_directory(dir)) throw Error(ErrorCode::InvalidInput, "no corpus directory " + dir);
    std::vector<fs::path> files;
    for (const auto& e : fs::directory_iterator(dir))
        if (e.path().extension() == ".json") files.push_back(e.path());
    std::sort(files.begin(), files.end());
    std::vector<PolytopeReport> out;
    for (const auto& f : files) {
        Polytope p = load_polytope(f.string());
        if (!p.xi) throw Error(ErrorCode::InvalidInput, f.string() + " has no circle direction");
        out.push_back(verify_polytope(p, *p.xi, candidates));
    }
    return out;
}

std::string default_corpus_dir() {
    if (const char* env = std::getenv("HAMFIX_CORPUS")) return env;
    return HAMFIX_DATA_DIR "/polytopes";
}

}  // namespace hamfix

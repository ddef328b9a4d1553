#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "psgl2/verify.hpp"

// JSON and DOT renderings. Key order is fixed so repeated runs give identical bytes.

namespace psgl2 {

using Json = nlohmann::ordered_json;

inline Json to_json(const FieldSpec& F) { return Json{{"p", F.p()}, {"f", F.f()}, {"modulus", F.modulus()}}; }

inline Json to_json(const NClass& a) { return Json{{"value", a.to_integer()}, {"digits", a.digits()}}; }

inline Json to_json(const CarrySet& I) { return Json(I.indices()); }

inline Json to_json(const R2Elem& x) { return Json::array({x.a0.code, x.a1.code}); }

inline Json to_json(const Mat2& g) {
    return Json::array({Json::array({to_json(g.a), to_json(g.b)}), Json::array({to_json(g.c), to_json(g.d)})});
}

inline Json to_json(const SerreWeight& w) {
    return Json{{"weight", w.to_string()}, {"a1", w.a1()}, {"a2", w.a2()}, {"dim", w.dimension()}};
}

inline Json to_json(const RamType& t) { return Json{{"I", to_json(t.I)}, {"gamma", t.gamma.to_integer()}}; }

/// Constituent table: one row per element of the multiset.
inline Json constituents_json(const std::vector<SerreWeight>& ws) {
    Json rows = Json::array();
    long long total = 0;
    for (const auto& w : ws) {
        rows.push_back(to_json(w));
        total += w.dimension();
    }
    return Json{{"count", ws.size()}, {"total_dim", total}, {"constituents", rows}};
}

/// [{level, constituents: [{weight, dim}]}]
inline Json layers_json(const std::vector<std::vector<SerreWeight>>& layers) {
    Json out = Json::array();
    for (std::size_t i = 0; i < layers.size(); ++i) {
        Json cs = Json::array();
        for (const auto& w : layers[i]) cs.push_back(Json{{"weight", w.to_string()}, {"dim", w.dimension()}});
        out.push_back(Json{{"level", i}, {"constituents", cs}});
    }
    return out;
}

inline std::string vertex_label(const RamType& t, const NClass& r) {
    const SerreWeight w = type_weight(t, r);
    return t.to_string() + " : " + w.to_string() + " dim " + std::to_string(w.dimension());
}

inline Json to_json(const GammaGraph& G) {
    Json nodes = Json::array(), edges = Json::array();
    for (std::size_t v = 0; v < G.vertices.size(); ++v) {
        const SerreWeight w = type_weight(G.vertices[v], G.r);
        nodes.push_back(Json{{"id", v},
                             {"type", to_json(G.vertices[v])},
                             {"label", G.vertices[v].to_string()},
                             {"weight", w.to_string()},
                             {"dim", w.dimension()},
                             {"level_up", G.level_up[v]},
                             {"level_down", G.level_down[v]}});
    }
    for (auto [a, b] : G.edges) edges.push_back(Json::array({a, b}));
    return Json{{"r", G.r.to_integer()}, {"length", G.length()}, {"nodes", nodes}, {"edges", edges}};
}

/// Vertices sharing gamma are placed on one rank, which gives the two-column picture for f = 1.
inline std::string to_dot(const GammaGraph& G) {
    std::ostringstream os;
    os << "digraph gamma_r {\n  rankdir=TB;\n  node [shape=box];\n";
    for (std::size_t v = 0; v < G.vertices.size(); ++v)
        os << "  n" << v << " [label=\"" << vertex_label(G.vertices[v], G.r) << "\"];\n";
    std::vector<std::vector<int>> by_gamma(static_cast<std::size_t>(G.r.q()));
    for (std::size_t v = 0; v < G.vertices.size(); ++v)
        by_gamma[G.vertices[v].gamma.to_integer()].push_back(static_cast<int>(v));
    for (const auto& row : by_gamma) {
        if (row.size() < 2) continue;
        os << "  { rank=same;";
        for (int v : row) os << " n" << v << ";";
        os << " }\n";
    }
    for (auto [a, b] : G.edges) os << "  n" << a << " -> n" << b << ";\n";
    os << "}\n";
    return os.str();
}

/// Hasse diagram of the unramified index poset with the weights sigma_theta.
struct UnramPoset {
    NClass r;
    std::vector<UnramTheta> nodes;
    std::vector<std::pair<int, int>> edges;  // (larger, smaller), covering pairs only
};

inline UnramPoset unram_poset(const NClass& r) {
    UnramPoset P{r, theta1_enumerate(r.f()), {}};
    const int n = static_cast<int>(P.nodes.size());
    auto lt = [&](int a, int b) { return a != b && unram_leq(P.nodes[a], P.nodes[b]); };
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (!lt(a, b)) continue;
            bool cover = true;
            for (int c = 0; c < n && cover; ++c) cover = !(lt(a, c) && lt(c, b));
            if (cover) P.edges.emplace_back(b, a);
        }
    std::sort(P.edges.begin(), P.edges.end());
    return P;
}

inline Json to_json(const UnramPoset& P) {
    Json nodes = Json::array(), edges = Json::array();
    for (std::size_t v = 0; v < P.nodes.size(); ++v) {
        const SerreWeight w = unram_sigma(P.nodes[v], P.r);
        nodes.push_back(Json{{"id", v},
                             {"J", to_json(P.nodes[v].J)},
                             {"I", to_json(P.nodes[v].I)},
                             {"label", P.nodes[v].to_string()},
                             {"weight", w.to_string()},
                             {"dim", w.dimension()}});
    }
    for (auto [a, b] : P.edges) edges.push_back(Json::array({a, b}));
    return Json{{"r", P.r.to_integer()}, {"nodes", nodes}, {"edges", edges}};
}

inline std::string to_dot(const UnramPoset& P) {
    std::ostringstream os;
    os << "digraph unramified {\n  rankdir=TB;\n  node [shape=box];\n";
    for (std::size_t v = 0; v < P.nodes.size(); ++v) {
        const SerreWeight w = unram_sigma(P.nodes[v], P.r);
        os << "  n" << v << " [label=\"" << P.nodes[v].to_string() << " : " << w.to_string() << " dim "
           << w.dimension() << "\"];\n";
    }
    for (auto [a, b] : P.edges) os << "  n" << a << " -> n" << b << ";\n";
    os << "}\n";
    return os.str();
}

/// f-basis coordinates of a vector; the f-vectors form a basis, so this is exact.
inline Json vector_json(const RepSpace& V, const Vector& v) {
    Json out = Json::object();
    const Vector c = V.f_coordinates(v);
    for (int i = 0; i < V.dim(); ++i)
        if (c[i].code) out[V.f_labels()[i].to_string()] = V.field().to_string(c[i]);
    return out;
}

/// The f-label and delta index tables of a representation.
inline Json index_tables_json(const RepSpace& V) {
    Json f = Json::array(), d = Json::array();
    for (const auto& x : V.f_labels()) f.push_back(x.to_string());
    for (const auto& l : V.delta_labels())
        d.push_back(l.second_kind ? Json{{"kind", "second"}, {"mu", l.mu.code}}
                                  : Json{{"kind", "first"}, {"lambda", to_json(l.lambda)}});
    return Json{{"f_labels", f}, {"delta", d}};
}

inline Json to_json(const CheckParams& P) {
    Json j = Json::object();
    j["p"] = P.p ? Json(*P.p) : Json(nullptr);
    j["f"] = P.f ? Json(*P.f) : Json(nullptr);
    j["variant"] = P.variant ? Json(to_string(*P.variant)) : Json(nullptr);
    j["r"] = P.r ? Json(*P.r) : Json(nullptr);
    j["seed"] = P.seed;
    return j;
}

inline Json to_json(const CheckReport& R, bool with_time = true) {
    Json j{{"check_id", R.check_id},
           {"title", R.title},
           {"parameters", to_json(R.params)},
           {"status", to_string(R.status)},
           {"counts", R.counts},
           {"witnesses", R.witnesses},
           {"notes", R.notes}};
    if (with_time) j["wall_time"] = R.wall_time;
    return j;
}

}  // namespace psgl2

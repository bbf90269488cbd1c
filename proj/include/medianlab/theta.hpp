#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "medianlab/errors.hpp"
#include "medianlab/graph.hpp"
#include "medianlab/median.hpp"

namespace medianlab {

/// A graph with a basepoint and the induced edge orientation: each edge is
/// directed from its endpoint closer to the basepoint to the farther one.
/// Only well-defined on bipartite graphs (no ties possible).
class OrientedGraph {
public:
    OrientedGraph() = default;
    OrientedGraph(Graph base, int basepoint) : base_(std::move(base)), basepoint_(basepoint) {
        require_vertex(base_, basepoint_, "OrientedGraph");
        if (!base_.is_connected()) {
            throw std::invalid_argument("OrientedGraph: base graph must be connected");
        }
        if (!base_.is_bipartite()) {
            throw std::invalid_argument("OrientedGraph: base graph must be bipartite");
        }
        dist_ = bfs_distances(base_, basepoint_);
        dir_.resize(base_.edge_count());
        for (int e = 0; e < base_.edge_count(); ++e) {
            auto [a, b] = base_.edge(e);
            dir_[e] = (dist_[a] < dist_[b]) ? 1 : -1;  // +1: a -> b
        }
    }

    const Graph& base() const { return base_; }
    int basepoint() const { return basepoint_; }
    const std::vector<int>& basepoint_distances() const { return dist_; }

    /// Tail (origin) of the directed edge e.
    int tail(int e) const {
        auto [a, b] = base_.edge(e);
        return dir_[e] > 0 ? a : b;
    }
    int head(int e) const {
        auto [a, b] = base_.edge(e);
        return dir_[e] > 0 ? b : a;
    }

    int out_degree(int v) const {
        int out = 0;
        for (int e : base_.incident_edges(v)) {
            if (tail(e) == v) ++out;
        }
        return out;
    }
    int max_out_degree() const {
        int best = 0;
        for (int v = 0; v < base_.vertex_count(); ++v) best = std::max(best, out_degree(v));
        return best;
    }

    std::vector<int> out_edges(int v) const {
        std::vector<int> out;
        for (int e : base_.incident_edges(v)) {
            if (tail(e) == v) out.push_back(e);
        }
        return out;
    }

private:
    Graph base_;
    int basepoint_ = 0;
    std::vector<int> dist_;
    std::vector<signed char> dir_;
};

// ---------------------------------------------------------------------------

enum class ThetaFailureKind {
    NotConnected,
    NotBipartite,
    ThetaNotTransitive,
    HalfspaceNotConvex,
};

struct ThetaFailure {
    ThetaFailureKind kind;
    std::string detail;
    int witness_class = -1;
    int witness_edge = -1;
    int witness_vertex = -1;
};

inline const char* to_string(ThetaFailureKind k) {
    switch (k) {
        case ThetaFailureKind::NotConnected: return "NOT_CONNECTED";
        case ThetaFailureKind::NotBipartite: return "NOT_BIPARTITE";
        case ThetaFailureKind::ThetaNotTransitive: return "THETA_NOT_TRANSITIVE";
        case ThetaFailureKind::HalfspaceNotConvex: return "HALFSPACE_NOT_CONVEX";
    }
    return "?";
}

/// Edge partition of a median graph into parallelism classes, plus the two
/// halfspaces of every class. side(i,v) is 0 on the basepoint side (A_i) and
/// 1 on the far side (B_i).
struct ThetaStructure {
    Graph base;
    int basepoint = 0;
    std::vector<int> class_of_edge;        // edge id -> class id
    std::vector<std::vector<int>> classes; // class id -> sorted edge ids
    std::vector<int> representative_edge;  // class id -> edge id
    std::vector<std::vector<char>> sides;  // class id -> per-vertex side (0=A,1=B)
    std::vector<std::array<int, 4>> squares;  // (v,a,w,b): 4-cycle v-a-w-b
    std::set<std::pair<int, int>> crossing;   // canonical class id pairs
    std::vector<std::vector<int>> vertex_classes;  // vertex -> sorted incident class ids

    int class_count() const { return static_cast<int>(classes.size()); }
    bool crosses(int i, int j) const {
        if (i > j) std::swap(i, j);
        return crossing.count({i, j}) > 0;
    }
    char side(int cls, int v) const { return sides[cls][v]; }

    /// Vertices of one halfspace, sorted. which=0 gives A_i (basepoint side).
    std::vector<int> halfspace(int cls, int which) const {
        std::vector<int> out;
        for (int v = 0; v < base.vertex_count(); ++v) {
            if (sides[cls][v] == which) out.push_back(v);
        }
        return out;
    }
};

/// Halfspace verification depth for theta_classes.
struct ThetaOptions {
    enum class HalfspaceCheck { Off, Sampled, Exact, Auto };
    HalfspaceCheck halfspace_check = HalfspaceCheck::Auto;
    int exact_vertex_cap = 1200;  ///< Auto uses Exact at or below, Sampled above
    int samples_per_halfspace = 12;
    std::uint64_t seed = 0;
};

struct ThetaBuildResult {
    std::optional<ThetaStructure> structure;
    std::optional<ThetaFailure> failure;
    bool ok() const { return structure.has_value(); }
};

namespace detail {

struct EdgeUnionFind {
    explicit EdgeUnionFind(int n) : parent(n) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }
    int find(int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
    std::vector<int> parent;
};

}  // namespace detail

/// Computes the edge partition as the transitive closure of the
/// opposite-edges-in-a-square relation, then validates it against the
/// distance-based definition: for each class, the halfspace split of a
/// representative edge must cut exactly the edges of that class. On a median
/// graph both definitions agree; disagreement (or a non-convex halfspace) is
/// reported as a failure and doubles as a median-ness refutation.
inline ThetaBuildResult theta_classes(const Graph& g, int basepoint, ThetaOptions opts = {}) {
    require_vertex(g, basepoint, "theta_classes");
    ThetaBuildResult result;
    if (!g.is_connected()) {
        result.failure = ThetaFailure{ThetaFailureKind::NotConnected, "graph is not connected"};
        return result;
    }
    if (!g.is_bipartite()) {
        result.failure = ThetaFailure{ThetaFailureKind::NotBipartite, "graph is not bipartite"};
        return result;
    }

    ThetaStructure t;
    t.base = g;
    t.basepoint = basepoint;
    int m = g.edge_count();
    detail::EdgeUnionFind uf(m);

    // Square scan: for each vertex v and neighbor pair (a,b), any common
    // neighbor w != v closes a square v-a-w-b. Canonicalize by the smallest
    // corner to record each square once.
    std::vector<int> cn;
    for (int v = 0; v < g.vertex_count(); ++v) {
        auto nb = g.neighbors(v);
        for (std::size_t i = 0; i < nb.size(); ++i) {
            for (std::size_t j = i + 1; j < nb.size(); ++j) {
                int a = nb[i], b = nb[j];
                detail::common_neighbors(g, a, b, cn);
                for (int w : cn) {
                    if (w == v) continue;
                    if (v < w && v < a && v < b) {
                        t.squares.push_back({v, a, w, b});
                    }
                    int e_va = g.edge_index(v, a);
                    int e_bw = g.edge_index(b, w);
                    int e_vb = g.edge_index(v, b);
                    int e_aw = g.edge_index(a, w);
                    uf.unite(e_va, e_bw);
                    uf.unite(e_vb, e_aw);
                }
            }
        }
    }

    t.class_of_edge.assign(m, -1);
    std::vector<int> root_to_class;
    for (int e = 0; e < m; ++e) {
        int r = uf.find(e);
        if (t.class_of_edge[r] < 0) {
            t.class_of_edge[r] = static_cast<int>(t.classes.size());
            t.classes.emplace_back();
        }
        int c = t.class_of_edge[r];
        t.class_of_edge[e] = c;
        t.classes[c].push_back(e);
    }

    // Representative edge and halfspaces per class, oriented so that the
    // basepoint lands in A (side 0).
    auto dist_bp = bfs_distances(g, basepoint);
    int k = t.class_count();
    t.representative_edge.resize(k);
    t.sides.resize(k);
    for (int c = 0; c < k; ++c) {
        int e = t.classes[c].front();
        t.representative_edge[c] = e;
        auto [a, b] = g.edge(e);
        int x = a, y = b;
        if (dist_bp[x] > dist_bp[y]) std::swap(x, y);  // basepoint is on x's side
        auto dx = bfs_distances(g, x);
        auto dy = bfs_distances(g, y);
        auto& side = t.sides[c];
        side.assign(g.vertex_count(), 0);
        for (int v = 0; v < g.vertex_count(); ++v) {
            if (dx[v] == dy[v]) {
                result.failure =
                    ThetaFailure{ThetaFailureKind::NotBipartite,
                                 "tie in halfspace assignment at vertex " + std::to_string(v),
                                 c, e, v};
                return result;
            }
            side[v] = dx[v] < dy[v] ? 0 : 1;
        }
        // The edges cut by this split must be exactly the class.
        std::vector<int> straddling;
        for (int f = 0; f < m; ++f) {
            auto [u, v] = g.edge(f);
            if (side[u] != side[v]) straddling.push_back(f);
        }
        if (straddling != t.classes[c]) {
            int bad = -1;
            for (int f : straddling) {
                if (t.class_of_edge[f] != c) {
                    bad = f;
                    break;
                }
            }
            if (bad < 0) {
                for (int f : t.classes[c]) {
                    auto [u, v] = g.edge(f);
                    if (side[u] == side[v]) {
                        bad = f;
                        break;
                    }
                }
            }
            result.failure = ThetaFailure{
                ThetaFailureKind::ThetaNotTransitive,
                "square-closure class of edge " + std::to_string(e) +
                    " disagrees with its distance split (edge " + std::to_string(bad) + ")",
                c, bad >= 0 ? bad : e, -1};
            return result;
        }
    }

    // Crossing pairs from the recorded squares.
    for (const auto& sq : t.squares) {
        auto [v, a, w, b] = sq;
        int c1 = t.class_of_edge[g.edge_index(v, a)];
        int c2 = t.class_of_edge[g.edge_index(v, b)];
        if (c1 != c2) {
            t.crossing.insert({std::min(c1, c2), std::max(c1, c2)});
        }
    }

    // Incidence lists.
    t.vertex_classes.resize(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) {
        auto& vc = t.vertex_classes[v];
        for (int e : g.incident_edges(v)) vc.push_back(t.class_of_edge[e]);
        std::sort(vc.begin(), vc.end());
        vc.erase(std::unique(vc.begin(), vc.end()), vc.end());
    }

    // Halfspace convexity / gatedness.
    using HC = ThetaOptions::HalfspaceCheck;
    HC mode = opts.halfspace_check;
    if (mode == HC::Auto) {
        mode = g.vertex_count() <= opts.exact_vertex_cap ? HC::Exact : HC::Sampled;
    }
    if (mode != HC::Off) {
        for (int c = 0; c < k; ++c) {
            for (int which = 0; which < 2; ++which) {
                auto members = t.halfspace(c, which);
                GatedVerdict gv;
                try {
                    gv = (mode == HC::Exact)
                             ? is_gated(t.base, members)
                             : is_gated_sampled(t.base, members, opts.samples_per_halfspace,
                                                opts.seed + 977 * c + which);
                } catch (const std::invalid_argument&) {
                    gv.gated = false;  // e.g. a disconnected halfspace
                    gv.witness_outside = -1;
                }
                if (!gv.gated) {
                    result.failure = ThetaFailure{
                        ThetaFailureKind::HalfspaceNotConvex,
                        "halfspace " + std::string(which ? "B" : "A") + " of class " +
                            std::to_string(c) + " is not gated (witness vertex " +
                            std::to_string(gv.witness_outside) + ")",
                        c, t.representative_edge[c], gv.witness_outside};
                    return result;
                }
            }
        }
    }

    result.structure = std::move(t);
    return result;
}

/// theta_classes that throws on failure; for callers that already know the
/// graph is median.
inline ThetaStructure theta_classes_checked(const Graph& g, int basepoint, ThetaOptions opts = {}) {
    auto r = theta_classes(g, basepoint, opts);
    if (!r.ok()) {
        throw std::invalid_argument(std::string("theta_classes: ") + to_string(r.failure->kind) +
                                    ": " + r.failure->detail);
    }
    return std::move(*r.structure);
}

// ---------------------------------------------------------------------------
// Pairwise class relations

enum class ClassRelationKind { Crossing, Osculating, Disjoint };

struct ClassRelation {
    ClassRelationKind kind = ClassRelationKind::Disjoint;
    bool directed_osculation = false;  ///< some vertex is the tail of edges of both classes
};

namespace detail {

/// For each vertex, the sorted set of classes whose edges leave it (tails).
inline std::vector<std::vector<int>> tail_classes(const OrientedGraph& og,
                                                  const ThetaStructure& t) {
    std::vector<std::vector<int>> out(og.base().vertex_count());
    for (int e = 0; e < og.base().edge_count(); ++e) {
        out[og.tail(e)].push_back(t.class_of_edge[e]);
    }
    for (auto& v : out) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
    }
    return out;
}

inline bool sorted_intersects(const std::vector<int>& a, const std::vector<int>& b) {
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) return true;
        if (a[i] < b[j]) ++i; else ++j;
    }
    return false;
}

}  // namespace detail

/// Classifies the pair {i,j}: Crossing if some square carries both classes,
/// else Osculating if some vertex carries edges of both, else Disjoint. With
/// an orientation, also reports whether the two classes leave a common
/// vertex (directed osculation).
inline ClassRelation class_relation(const ThetaStructure& t, int i, int j,
                                    const OrientedGraph* orientation = nullptr) {
    if (i == j) throw std::invalid_argument("class_relation: identical classes");
    ClassRelation rel;
    bool touch = false;
    for (int v = 0; v < t.base.vertex_count() && !touch; ++v) {
        const auto& vc = t.vertex_classes[v];
        touch = std::binary_search(vc.begin(), vc.end(), i) &&
                std::binary_search(vc.begin(), vc.end(), j);
    }
    if (t.crosses(i, j)) {
        rel.kind = ClassRelationKind::Crossing;
    } else if (touch) {
        rel.kind = ClassRelationKind::Osculating;
    } else {
        rel.kind = ClassRelationKind::Disjoint;
    }
    if (orientation) {
        auto tails = detail::tail_classes(*orientation, t);
        for (int v = 0; v < t.base.vertex_count(); ++v) {
            const auto& tc = tails[v];
            if (std::binary_search(tc.begin(), tc.end(), i) &&
                std::binary_search(tc.begin(), tc.end(), j)) {
                rel.directed_osculation = true;
                break;
            }
        }
    }
    return rel;
}

/// True iff classes i and j are compatible (non-crossing) and every edge of
/// class j lies entirely in B_i, the far halfspace of i.
inline bool separates(const ThetaStructure& t, int i, int j) {
    if (i == j) throw std::invalid_argument("separates: identical classes");
    if (t.crosses(i, j)) return false;
    for (int e : t.classes[j]) {
        auto [u, v] = t.base.edge(e);
        if (t.side(i, u) != 1 || t.side(i, v) != 1) return false;
    }
    return true;
}

/// Contact graph: classes adjacent iff they cross or osculate — equivalently
/// iff some vertex is incident to edges of both (a crossing pair always
/// shares a square corner).
inline Graph contact_graph(const ThetaStructure& t) {
    std::set<std::pair<int, int>> adj(t.crossing);
    for (int v = 0; v < t.base.vertex_count(); ++v) {
        const auto& vc = t.vertex_classes[v];
        for (std::size_t i = 0; i < vc.size(); ++i) {
            for (std::size_t j = i + 1; j < vc.size(); ++j) {
                adj.insert({vc[i], vc[j]});
            }
        }
    }
    return Graph(t.class_count(), {adj.begin(), adj.end()});
}

/// Crossing graph: classes adjacent iff some square carries both.
inline Graph crossing_graph(const ThetaStructure& t) {
    return Graph(t.class_count(), {t.crossing.begin(), t.crossing.end()});
}

/// Pointed contact graph: classes adjacent iff they cross or their edges
/// leave a common vertex under the basepoint orientation.
inline Graph pointed_contact_graph(const OrientedGraph& og, const ThetaStructure& t) {
    if (og.base().vertex_count() != t.base.vertex_count() ||
        og.base().edge_count() != t.base.edge_count() || og.basepoint() != t.basepoint) {
        throw std::invalid_argument("pointed_contact_graph: orientation does not match structure");
    }
    std::set<std::pair<int, int>> adj(t.crossing);
    auto tails = detail::tail_classes(og, t);
    for (int v = 0; v < og.base().vertex_count(); ++v) {
        const auto& tc = tails[v];
        for (std::size_t i = 0; i < tc.size(); ++i) {
            for (std::size_t j = i + 1; j < tc.size(); ++j) {
                adj.insert({tc[i], tc[j]});
            }
        }
    }
    return Graph(t.class_count(), {adj.begin(), adj.end()});
}

}  // namespace medianlab

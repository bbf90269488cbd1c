#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "medianlab/graph.hpp"
#include "medianlab/theta.hpp"

namespace medianlab {

namespace detail {

struct IsoSearch {
    const Graph& g1;
    const Graph& g2;
    std::vector<int> map12;
    std::vector<int> map21;
    const std::vector<int>& inv1;
    const std::vector<int>& inv2;

    bool feasible(int a, int b) const {
        if (inv1[a] != inv2[b]) return false;
        // Mapped neighbors must correspond both ways.
        for (int w : g1.neighbors(a)) {
            if (map12[w] >= 0 && !g2.has_edge(b, map12[w])) return false;
        }
        for (int w : g2.neighbors(b)) {
            if (map21[w] >= 0 && !g1.has_edge(a, map21[w])) return false;
        }
        return true;
    }

    bool extend(int depth, const std::vector<int>& order) {
        if (depth == static_cast<int>(order.size())) return true;
        int a = order[depth];
        for (int b = 0; b < g2.vertex_count(); ++b) {
            if (map21[b] >= 0 || !feasible(a, b)) continue;
            map12[a] = b;
            map21[b] = a;
            if (extend(depth + 1, order)) return true;
            map12[a] = -1;
            map21[b] = -1;
        }
        return false;
    }
};

}  // namespace detail

/// Backtracking graph isomorphism with degree invariants; intended for small
/// graphs (tests, roundtrip cross-checks). Optionally pins root1 -> root2.
inline std::optional<std::vector<int>> find_isomorphism(const Graph& g1, const Graph& g2,
                                                        int root1 = -1, int root2 = -1) {
    if (g1.vertex_count() != g2.vertex_count() || g1.edge_count() != g2.edge_count()) {
        return std::nullopt;
    }
    int n = g1.vertex_count();
    if (n == 0) return std::vector<int>{};
    // Invariant: (degree, sorted neighbor degrees) id.
    auto invariant = [](const Graph& g) {
        std::vector<std::vector<int>> sig(g.vertex_count());
        for (int v = 0; v < g.vertex_count(); ++v) {
            sig[v].push_back(g.degree(v));
            for (int w : g.neighbors(v)) sig[v].push_back(g.degree(w));
            std::sort(sig[v].begin() + 1, sig[v].end());
        }
        return sig;
    };
    auto s1 = invariant(g1);
    auto s2 = invariant(g2);
    auto sorted1 = s1, sorted2 = s2;
    std::sort(sorted1.begin(), sorted1.end());
    std::sort(sorted2.begin(), sorted2.end());
    if (sorted1 != sorted2) return std::nullopt;
    // Compress signatures to ints for fast comparison.
    std::vector<std::vector<int>> all = sorted1;
    all.erase(std::unique(all.begin(), all.end()), all.end());
    auto code = [&all](const std::vector<int>& s) {
        return static_cast<int>(std::lower_bound(all.begin(), all.end(), s) - all.begin());
    };
    std::vector<int> inv1(n), inv2(n);
    for (int v = 0; v < n; ++v) {
        inv1[v] = code(s1[v]);
        inv2[v] = code(s2[v]);
    }
    detail::IsoSearch search{g1, g2, std::vector<int>(n, -1), std::vector<int>(n, -1), inv1, inv2};
    std::vector<int> order;
    if (root1 >= 0) {
        if (root2 < 0 || !search.feasible(root1, root2)) return std::nullopt;
        search.map12[root1] = root2;
        search.map21[root2] = root1;
    }
    // BFS order from the root (or vertex 0) keeps the frontier connected.
    {
        int start = root1 >= 0 ? root1 : 0;
        std::vector<char> seen(n, 0);
        std::vector<int> queue{start};
        seen[start] = 1;
        std::size_t head = 0;
        while (head < queue.size()) {
            int v = queue[head++];
            if (v != root1) order.push_back(v);
            for (int w : g1.neighbors(v)) {
                if (!seen[w]) {
                    seen[w] = 1;
                    queue.push_back(w);
                }
            }
        }
        for (int v = 0; v < n; ++v) {
            if (!seen[v]) order.push_back(v);
        }
    }
    if (!search.extend(0, order)) return std::nullopt;
    return search.map12;
}

/// Isomorphism of pointed oriented graphs: underlying isomorphism mapping
/// basepoint to basepoint. Edge directions then agree automatically (both
/// orientations are distance-based), but they are rechecked.
inline bool pointed_isomorphic(const OrientedGraph& a, const OrientedGraph& b) {
    auto iso = find_isomorphism(a.base(), b.base(), a.basepoint(), b.basepoint());
    if (!iso) return false;
    for (int e = 0; e < a.base().edge_count(); ++e) {
        int t = (*iso)[a.tail(e)], h = (*iso)[a.head(e)];
        int idx = b.base().edge_index(t, h);
        if (idx < 0 || b.tail(idx) != t) return false;
    }
    return true;
}

}  // namespace medianlab

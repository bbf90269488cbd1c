#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "medianlab/graph.hpp"

namespace medianlab {

/// Work limits for the exact solvers. Node budgets keep results
/// deterministic; the wall-clock limit can only downgrade `optimal`, never
/// invalidate a certificate.
struct SolveBudget {
    std::uint64_t max_nodes = 50'000'000;
    std::int64_t max_millis = -1;  ///< negative: no wall-clock limit
};

struct CliqueResult {
    std::vector<int> clique;  ///< best clique found, sorted
    bool exact = false;
    std::uint64_t nodes = 0;
    int size() const { return static_cast<int>(clique.size()); }
};

namespace detail {

class DeadlineClock {
public:
    explicit DeadlineClock(std::int64_t max_millis) : limit_(max_millis) {
        if (limit_ >= 0) start_ = std::chrono::steady_clock::now();
    }
    bool expired() {
        if (limit_ < 0) return false;
        if (++probe_ % 1024 != 0) return false;
        auto now = std::chrono::steady_clock::now();
        return std::chrono::duration_cast<std::chrono::milliseconds>(now - start_).count() >
               limit_;
    }

private:
    std::int64_t limit_;
    std::chrono::steady_clock::time_point start_{};
    std::uint64_t probe_ = 0;
};

/// Smallest-last (degeneracy) vertex order.
inline std::vector<int> degeneracy_order(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> deg(n), order;
    std::vector<char> removed(n, 0);
    for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
    order.reserve(n);
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int v = 0; v < n; ++v) {
            if (!removed[v] && (best < 0 || deg[v] < deg[best])) best = v;
        }
        removed[best] = 1;
        order.push_back(best);
        for (int w : g.neighbors(best)) {
            if (!removed[w]) --deg[w];
        }
    }
    std::reverse(order.begin(), order.end());  // highest-core vertices first
    return order;
}

/// Greedy coloring of the candidate set; the color count bounds the largest
/// clique inside it. Falls back to the trivial bound once the greedy run
/// needs more than 64 colors.
inline int greedy_color_bound(const Graph& g, const std::vector<int>& candidates,
                              std::vector<int>& color_of) {
    int used = 0;
    for (int v : candidates) {
        std::uint64_t forbidden = 0;
        for (int w : g.neighbors(v)) {
            int c = color_of[w];
            if (c >= 0 && c < 64) forbidden |= (1ULL << c);
        }
        int c = 0;
        while (c < 64 && (forbidden >> c) & 1) ++c;
        if (c == 64) {
            for (int w : candidates) color_of[w] = -1;
            return static_cast<int>(candidates.size());
        }
        color_of[v] = c;
        used = std::max(used, c + 1);
    }
    for (int v : candidates) color_of[v] = -1;
    return used;
}

struct CliqueSearch {
    const Graph& g;
    SolveBudget budget;
    DeadlineClock clock;
    std::vector<int> best;
    std::vector<int> current;
    std::vector<int> scratch_color;
    std::uint64_t nodes = 0;
    bool truncated = false;

    CliqueSearch(const Graph& g_, SolveBudget b)
        : g(g_), budget(b), clock(b.max_millis), scratch_color(g_.vertex_count(), -1) {}

    void expand(std::vector<int>& candidates) {
        if (candidates.empty()) {
            if (current.size() > best.size()) best = current;
            return;
        }
        if (nodes >= budget.max_nodes || clock.expired()) {
            truncated = true;
            return;
        }
        // Color bound: clique inside candidates <= greedy color count.
        int bound = greedy_color_bound(g, candidates, scratch_color);
        if (current.size() + bound <= best.size()) return;
        // Branch on candidates in reverse (colors assigned late go first).
        for (std::size_t idx = candidates.size(); idx-- > 0;) {
            if (current.size() + idx + 1 <= best.size()) return;
            int v = candidates[idx];
            ++nodes;
            current.push_back(v);
            std::vector<int> next;
            auto nb = g.neighbors(v);
            for (std::size_t i = 0; i < idx; ++i) {
                int w = candidates[i];
                if (std::binary_search(nb.begin(), nb.end(), w)) next.push_back(w);
            }
            expand(next);
            current.pop_back();
            if (truncated) return;
        }
    }
};

}  // namespace detail

/// Branch-and-bound maximum clique with a greedy-coloring bound. Exact when
/// the budget holds out; otherwise returns the best clique found with
/// exact=false.
inline CliqueResult max_clique(const Graph& g, SolveBudget budget = {}) {
    CliqueResult result;
    if (g.vertex_count() == 0) {
        result.exact = true;
        return result;
    }
    detail::CliqueSearch search(g, budget);
    std::vector<int> candidates = detail::degeneracy_order(g);
    std::reverse(candidates.begin(), candidates.end());
    search.expand(candidates);
    result.clique = search.best;
    std::sort(result.clique.begin(), result.clique.end());
    result.exact = !search.truncated;
    result.nodes = search.nodes;
    return result;
}

/// True iff `clique` is a clique of g (certificate re-check).
inline bool verify_clique(const Graph& g, const std::vector<int>& clique) {
    for (std::size_t i = 0; i < clique.size(); ++i) {
        for (std::size_t j = i + 1; j < clique.size(); ++j) {
            if (!g.has_edge(clique[i], clique[j])) return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// Chromatic number

struct ColoringResult {
    std::vector<int> colors;  ///< best proper coloring found (color ids 0..count-1)
    int count = 0;            ///< number of colors in `colors`
    bool optimal = false;     ///< count == chromatic number, proven
    int lower_bound = 0;
    int upper_bound = 0;
    std::vector<int> clique;  ///< clique certifying lower_bound >= clique.size()
    std::uint64_t nodes = 0;
};

/// True iff `colors` is a proper coloring (no monochromatic edge, total).
inline bool verify_coloring(const Graph& g, const std::vector<int>& colors) {
    if (static_cast<int>(colors.size()) != g.vertex_count()) return false;
    for (int c : colors) {
        if (c < 0) return false;
    }
    for (const auto& [a, b] : g.edges()) {
        if (colors[a] == colors[b]) return false;
    }
    return true;
}

enum class GreedyOrder { Degeneracy, Given };

/// DSATUR-flavored greedy coloring; never optimal by contract.
inline ColoringResult greedy_coloring(const Graph& g, GreedyOrder order_kind = GreedyOrder::Degeneracy,
                                      const std::vector<int>& given_order = {}) {
    int n = g.vertex_count();
    std::vector<int> order;
    if (order_kind == GreedyOrder::Given) {
        if (static_cast<int>(given_order.size()) != n) {
            throw std::invalid_argument("greedy_coloring: order must list every vertex once");
        }
        std::vector<char> seen(n, 0);
        for (int v : given_order) {
            require_vertex(g, v, "greedy_coloring");
            if (seen[v]) throw std::invalid_argument("greedy_coloring: duplicate vertex in order");
            seen[v] = 1;
        }
        order = given_order;
    } else {
        order = detail::degeneracy_order(g);
    }
    ColoringResult result;
    result.colors.assign(n, -1);
    for (int v : order) {
        std::vector<char> taken(static_cast<std::size_t>(result.count) + 1, 0);
        for (int w : g.neighbors(v)) {
            int c = result.colors[w];
            if (c >= 0 && c < static_cast<int>(taken.size())) taken[c] = 1;
        }
        int c = 0;
        while (c < static_cast<int>(taken.size()) && taken[c]) ++c;
        result.colors[v] = c;
        result.count = std::max(result.count, c + 1);
    }
    result.optimal = false;
    result.lower_bound = n > 0 ? 1 : 0;
    result.upper_bound = result.count;
    return result;
}

namespace detail {

struct KColorSearch {
    const Graph& g;
    int k;
    SolveBudget budget;
    DeadlineClock clock;
    std::uint64_t& nodes;
    bool truncated = false;
    std::vector<int> colors;
    std::vector<std::vector<int>> sat;  // per vertex: count of neighbors per color

    KColorSearch(const Graph& g_, int k_, SolveBudget b, std::uint64_t& node_counter)
        : g(g_), k(k_), budget(b), clock(b.max_millis), nodes(node_counter),
          colors(g_.vertex_count(), -1),
          sat(g_.vertex_count(), std::vector<int>(k_, 0)) {}

    int saturation(int v) const {
        int s = 0;
        for (int c = 0; c < k; ++c) s += sat[v][c] > 0;
        return s;
    }

    int pick_vertex() const {
        int best = -1, best_sat = -1, best_deg = -1;
        for (int v = 0; v < g.vertex_count(); ++v) {
            if (colors[v] >= 0) continue;
            int s = saturation(v);
            int d = g.degree(v);
            if (s > best_sat || (s == best_sat && d > best_deg)) {
                best = v;
                best_sat = s;
                best_deg = d;
            }
        }
        return best;
    }

    bool solve(int colored, int max_used) {
        if (colored == g.vertex_count()) return true;
        if (nodes >= budget.max_nodes || clock.expired()) {
            truncated = true;
            return false;
        }
        int v = pick_vertex();
        if (saturation(v) >= k) return false;
        // Trying one fresh color is enough; higher fresh colors are symmetric.
        int limit = std::min(k, max_used + 1);
        for (int c = 0; c < limit; ++c) {
            if (sat[v][c] > 0) continue;
            ++nodes;
            colors[v] = c;
            for (int w : g.neighbors(v)) ++sat[w][c];
            if (solve(colored + 1, std::max(max_used, c + 1))) return true;
            for (int w : g.neighbors(v)) --sat[w][c];
            colors[v] = -1;
            if (truncated) return false;
        }
        return false;
    }
};

}  // namespace detail

/// Exact chromatic number by iterative-deepening k-colorability with DSATUR
/// vertex selection and a clique lower bound. On budget exhaustion the result
/// carries valid bracketing bounds and optimal=false.
inline ColoringResult chromatic_number(const Graph& g, SolveBudget budget = {}) {
    ColoringResult result;
    int n = g.vertex_count();
    if (n == 0) {
        result.optimal = true;
        return result;
    }
    auto clique = max_clique(g, budget);
    result.clique = clique.clique;
    result.lower_bound = std::max(1, clique.size());
    if (!clique.exact) {
        // A heuristic clique still certifies its own size.
        result.lower_bound = std::max(1, clique.size());
    }
    auto greedy = greedy_coloring(g);
    result.colors = greedy.colors;
    result.count = greedy.count;
    result.upper_bound = greedy.count;
    result.nodes = clique.nodes;
    if (g.edge_count() == 0) {
        result.colors.assign(n, 0);
        result.count = 1;
        result.lower_bound = result.upper_bound = 1;
        result.optimal = true;
        return result;
    }
    if (!clique.exact) {
        result.optimal = false;
        return result;
    }
    for (int k = result.lower_bound; k < result.upper_bound; ++k) {
        detail::KColorSearch search(g, k, budget, result.nodes);
        bool ok = search.solve(0, 0);
        if (ok) {
            result.colors = search.colors;
            result.count = k;
            result.upper_bound = k;
            result.optimal = true;
            return result;
        }
        if (search.truncated) {
            result.optimal = false;
            return result;  // lower bound stays at last refuted k
        }
        result.lower_bound = k + 1;
    }
    // Greedy bound met the (refuted-up-to) lower bound.
    result.count = result.upper_bound;
    result.optimal = true;
    return result;
}

}  // namespace medianlab

#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "medianlab/coloring.hpp"
#include "medianlab/errors.hpp"
#include "medianlab/graph.hpp"
#include "medianlab/theta.hpp"

namespace medianlab {

namespace detail {

/// Dynamic bitset over uint64 words, sized once.
struct BitRow {
    std::vector<std::uint64_t> w;
    explicit BitRow(int bits = 0) : w((bits + 63) / 64, 0) {}
    void set(int i) { w[i >> 6] |= (1ULL << (i & 63)); }
    void reset(int i) { w[i >> 6] &= ~(1ULL << (i & 63)); }
    bool test(int i) const { return (w[i >> 6] >> (i & 63)) & 1; }
    bool intersects(const BitRow& o) const {
        for (std::size_t k = 0; k < w.size(); ++k) {
            if (w[k] & o.w[k]) return true;
        }
        return false;
    }
    bool contains(const BitRow& o) const {
        for (std::size_t k = 0; k < w.size(); ++k) {
            if ((o.w[k] & ~w[k]) != 0) return false;
        }
        return true;
    }
    bool operator==(const BitRow& o) const { return w == o.w; }
};

struct BitRowHash {
    std::size_t operator()(const std::vector<std::uint64_t>& v) const {
        std::size_t h = 0x9e3779b97f4a7c15ULL;
        for (auto x : v) h = h * 0x100000001b3ULL ^ x;
        return h;
    }
};

}  // namespace detail

/// Events with a causal order (stored as an immediate-predecessor DAG, the
/// reflexive-transitive closure is derived) and a symmetric irreflexive
/// conflict relation. Instances can hold axiom-violating data; validate()
/// reports the first violated axiom instead of throwing.
class EventStructure {
public:
    EventStructure() = default;
    EventStructure(int event_count, std::vector<std::pair<int, int>> immediate_causes,
                   std::vector<std::pair<int, int>> conflict_pairs)
        : n_(event_count) {
        if (event_count < 0) throw std::invalid_argument("negative event count");
        preds_.resize(n_);
        for (auto [p, s] : immediate_causes) {
            check_event(p);
            check_event(s);
            preds_[s].push_back(p);
        }
        for (auto& p : preds_) {
            std::sort(p.begin(), p.end());
            p.erase(std::unique(p.begin(), p.end()), p.end());
        }
        for (auto [a, b] : conflict_pairs) {
            check_event(a);
            check_event(b);
            conflicts_.insert({std::min(a, b), std::max(a, b)});
        }
        compute_closure();
    }

    int event_count() const { return n_; }
    const std::vector<std::vector<int>>& immediate_causes() const { return preds_; }
    const std::set<std::pair<int, int>>& conflict_pairs() const { return conflicts_; }

    bool causally_valid() const { return acyclic_; }

    /// a <= b in the causal order (reflexive).
    bool leq(int a, int b) const {
        check_event(a);
        check_event(b);
        if (!acyclic_) throw std::invalid_argument("EventStructure: causal order is cyclic");
        return below_[b].test(a);
    }

    bool in_conflict(int a, int b) const {
        if (a == b) return false;
        return conflicts_.count({std::min(a, b), std::max(a, b)}) > 0;
    }

    /// Strict predecessors of e (a < e), as a bit row over events.
    const detail::BitRow& strict_below(int e) const { return strict_below_[e]; }

private:
    void check_event(int e) const {
        if (e < 0 || e >= n_) {
            throw std::invalid_argument("unknown event id " + std::to_string(e));
        }
    }

    void compute_closure() {
        below_.assign(n_, detail::BitRow(n_));
        strict_below_.assign(n_, detail::BitRow(n_));
        // Topological order via Kahn; cycle leaves acyclic_ false.
        std::vector<int> indeg(n_, 0);
        std::vector<std::vector<int>> succs(n_);
        for (int e = 0; e < n_; ++e) {
            for (int p : preds_[e]) {
                succs[p].push_back(e);
                ++indeg[e];
            }
        }
        std::vector<int> queue;
        for (int e = 0; e < n_; ++e) {
            if (indeg[e] == 0) queue.push_back(e);
        }
        std::size_t head = 0;
        int seen = 0;
        while (head < queue.size()) {
            int e = queue[head++];
            ++seen;
            below_[e].set(e);
            for (int s : succs[e]) {
                for (std::size_t k = 0; k < below_[s].w.size(); ++k) {
                    below_[s].w[k] |= below_[e].w[k];
                    strict_below_[s].w[k] |= below_[e].w[k];
                }
                if (--indeg[s] == 0) queue.push_back(s);
            }
        }
        acyclic_ = (seen == n_);
    }

    int n_ = 0;
    std::vector<std::vector<int>> preds_;
    std::set<std::pair<int, int>> conflicts_;
    std::vector<detail::BitRow> below_;         // reflexive closure rows
    std::vector<detail::BitRow> strict_below_;  // strict closure rows
    bool acyclic_ = true;
};

// ---------------------------------------------------------------------------
// Axiom validation

enum class EventAxiom {
    Ok,
    OrderCyclic,
    ConflictReflexive,
    InheritanceViolation,
};

struct EventValidation {
    EventAxiom violated = EventAxiom::Ok;
    std::array<int, 3> witness{-1, -1, -1};
    bool ok() const { return violated == EventAxiom::Ok; }
};

inline const char* to_string(EventAxiom a) {
    switch (a) {
        case EventAxiom::Ok: return "OK";
        case EventAxiom::OrderCyclic: return "ORDER_CYCLIC";
        case EventAxiom::ConflictReflexive: return "CONFLICT_REFLEXIVE";
        case EventAxiom::InheritanceViolation: return "INHERITANCE_VIOLATION";
    }
    return "?";
}

/// Order axioms, conflict irreflexivity (symmetry holds by storage), and
/// conflict inheritance: a # b and b <= c imply a # c.
inline EventValidation validate(const EventStructure& es) {
    EventValidation v;
    if (!es.causally_valid()) {
        v.violated = EventAxiom::OrderCyclic;
        return v;
    }
    for (auto [a, b] : es.conflict_pairs()) {
        if (a == b) {
            v.violated = EventAxiom::ConflictReflexive;
            v.witness = {a, a, -1};
            return v;
        }
    }
    int n = es.event_count();
    for (auto [a, b] : es.conflict_pairs()) {
        for (int c = 0; c < n; ++c) {
            if (c != b && es.leq(b, c) && !es.in_conflict(a, c)) {
                v.violated = EventAxiom::InheritanceViolation;
                v.witness = {a, b, c};
                return v;
            }
            if (c != a && es.leq(a, c) && !es.in_conflict(b, c)) {
                v.violated = EventAxiom::InheritanceViolation;
                v.witness = {b, a, c};
                return v;
            }
        }
    }
    return v;
}

inline void require_valid(const EventStructure& es, const char* who) {
    auto v = validate(es);
    if (!v.ok()) {
        throw std::invalid_argument(std::string(who) + ": event structure violates " +
                                    to_string(v.violated));
    }
}

// ---------------------------------------------------------------------------
// Pairwise relations

struct PairRelation {
    enum class Kind { Causal, Conflict, Concurrent };
    Kind kind = Kind::Concurrent;
    bool first_precedes = false;  ///< for Causal: e <= e'
    bool minimal = false;         ///< for Conflict
};

/// Classifies an event pair. A conflict e' # e'' is minimal when no third
/// event sits below one side while conflicting with the other.
inline PairRelation pair_relation(const EventStructure& es, int e1, int e2) {
    if (e1 == e2) throw std::invalid_argument("pair_relation: identical events");
    PairRelation r;
    if (es.leq(e1, e2) || es.leq(e2, e1)) {
        r.kind = PairRelation::Kind::Causal;
        r.first_precedes = es.leq(e1, e2);
        return r;
    }
    if (es.in_conflict(e1, e2)) {
        r.kind = PairRelation::Kind::Conflict;
        r.minimal = true;
        for (int e = 0; e < es.event_count() && r.minimal; ++e) {
            if (e == e1 || e == e2) continue;
            if ((es.leq(e, e1) && es.in_conflict(e, e2)) ||
                (es.leq(e, e2) && es.in_conflict(e, e1))) {
                r.minimal = false;
            }
        }
        return r;
    }
    r.kind = PairRelation::Kind::Concurrent;
    return r;
}

/// Orthogonality graph: events adjacent iff concurrent or in minimal
/// conflict. Its cliques are the independent sets of the structure.
inline Graph orthogonality_graph(const EventStructure& es) {
    require_valid(es, "orthogonality_graph");
    std::vector<std::pair<int, int>> edges;
    int n = es.event_count();
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            auto r = pair_relation(es, a, b);
            if (r.kind == PairRelation::Kind::Concurrent ||
                (r.kind == PairRelation::Kind::Conflict && r.minimal)) {
                edges.emplace_back(a, b);
            }
        }
    }
    return Graph(n, std::move(edges));
}

/// Degree: clique number of the orthogonality graph. A nonempty structure has
/// degree at least 1 (singletons count as independent sets).
inline int degree(const EventStructure& es, SolveBudget budget = {}) {
    auto g = orthogonality_graph(es);
    if (g.vertex_count() == 0) return 0;
    auto clique = max_clique(g, budget);
    if (!clique.exact) {
        throw ResourceLimitError("degree: clique solver budget exhausted");
    }
    return clique.size();
}

// ---------------------------------------------------------------------------
// Domain of configurations

/// Hasse diagram of the configuration domain, pointed at the empty
/// configuration (vertex 0). configs[v] is the event bit row of vertex v;
/// edge_event[e] is the event added along Hasse edge e.
struct Domain {
    OrientedGraph og;
    std::vector<std::vector<std::uint64_t>> configs;
    std::vector<int> edge_event;
    int event_count = 0;
};

/// Enumerates every conflict-free downward-closed event set by breadth-first
/// extension. Throws ResourceLimitError once more than `limit` configurations
/// appear (the count can be exponential in the number of events).
inline Domain domain(const EventStructure& es, std::size_t limit = 1'000'000) {
    require_valid(es, "domain");
    int n = es.event_count();
    int words = (n + 63) / 64;

    // Conflict rows.
    std::vector<detail::BitRow> conflict_row(n, detail::BitRow(n));
    for (auto [a, b] : es.conflict_pairs()) {
        conflict_row[a].set(b);
        conflict_row[b].set(a);
    }

    std::unordered_map<std::vector<std::uint64_t>, int, detail::BitRowHash> index;
    Domain dom;
    dom.event_count = n;
    std::vector<std::vector<std::uint64_t>>& configs = dom.configs;
    std::vector<std::pair<int, int>> hasse;
    std::vector<int> hasse_event;

    std::vector<std::uint64_t> empty(words, 0);
    configs.push_back(empty);
    index.emplace(empty, 0);

    auto word_test = [words](const std::vector<std::uint64_t>& row, int i) {
        return (row[i >> 6] >> (i & 63)) & 1ULL;
    };

    for (std::size_t at = 0; at < configs.size(); ++at) {
        std::vector<std::uint64_t> current = configs[at];
        for (int e = 0; e < n; ++e) {
            if (word_test(current, e)) continue;
            // Enabled: all strict predecessors in, no conflict with members.
            const auto& below = es.strict_below(e);
            bool enabled = true;
            for (int k = 0; k < words && enabled; ++k) {
                if ((below.w[k] & ~current[k]) != 0) enabled = false;
                if (conflict_row[e].w[k] & current[k]) enabled = false;
            }
            if (!enabled) continue;
            auto next = current;
            next[e >> 6] |= (1ULL << (e & 63));
            auto [it, inserted] = index.emplace(next, static_cast<int>(configs.size()));
            if (inserted) {
                configs.push_back(next);
                if (configs.size() > limit) {
                    throw ResourceLimitError("domain: more than " + std::to_string(limit) +
                                             " configurations (DOMAIN_TOO_LARGE)");
                }
            }
            hasse.emplace_back(static_cast<int>(at), it->second);
            hasse_event.push_back(e);
        }
    }

    // Hasse edges are generated lower->upper; convert to the canonical
    // undirected edge list and keep the event labels aligned.
    std::vector<std::pair<int, int>> edges(hasse.size());
    for (std::size_t i = 0; i < hasse.size(); ++i) {
        edges[i] = {std::min(hasse[i].first, hasse[i].second),
                    std::max(hasse[i].first, hasse[i].second)};
    }
    Graph base(static_cast<int>(configs.size()), edges);
    dom.edge_event.assign(base.edge_count(), -1);
    for (std::size_t i = 0; i < hasse.size(); ++i) {
        int idx = base.edge_index(hasse[i].first, hasse[i].second);
        dom.edge_event[idx] = hasse_event[i];
    }
    dom.og = OrientedGraph(std::move(base), 0);
    return dom;
}

// ---------------------------------------------------------------------------
// Event structure of a pointed median graph

/// Events are the Theta classes; class i causally precedes j when it
/// separates the basepoint from j; compatible classes with no separation
/// either way are in conflict; crossing classes are concurrent.
inline EventStructure event_structure_from_pointed(const OrientedGraph& og,
                                                   const ThetaStructure& t) {
    if (og.basepoint() != t.basepoint) {
        throw std::invalid_argument(
            "event_structure_from_pointed: orientation and theta structure disagree on basepoint");
    }
    int k = t.class_count();
    std::vector<std::vector<char>> sep(k, std::vector<char>(k, 0));
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) {
            if (i != j) sep[i][j] = separates(t, i, j) ? 1 : 0;
        }
    }
    // Immediate causes: transitive reduction of the separation order.
    std::vector<std::pair<int, int>> causes;
    for (int j = 0; j < k; ++j) {
        for (int i = 0; i < k; ++i) {
            if (!sep[i][j]) continue;
            bool immediate = true;
            for (int mid = 0; mid < k && immediate; ++mid) {
                if (mid != i && mid != j && sep[i][mid] && sep[mid][j]) immediate = false;
            }
            if (immediate) causes.emplace_back(i, j);
        }
    }
    std::vector<std::pair<int, int>> conflicts;
    for (int i = 0; i < k; ++i) {
        for (int j = i + 1; j < k; ++j) {
            if (!t.crosses(i, j) && !sep[i][j] && !sep[j][i]) {
                conflicts.emplace_back(i, j);
            }
        }
    }
    return EventStructure(k, std::move(causes), std::move(conflicts));
}

// ---------------------------------------------------------------------------
// Labelings

struct LabelingVerdict {
    bool ok = true;
    std::array<int, 2> witness{-1, -1};  ///< independent pair with equal labels
};

/// A labeling is nice iff it properly colors the orthogonality graph.
inline LabelingVerdict check_nice_labeling(const EventStructure& es,
                                           const std::vector<int>& labels) {
    if (static_cast<int>(labels.size()) != es.event_count()) {
        throw std::invalid_argument("check_nice_labeling: labeling must cover every event");
    }
    auto g = orthogonality_graph(es);
    LabelingVerdict v;
    for (const auto& [a, b] : g.edges()) {
        if (labels[a] == labels[b]) {
            v.ok = false;
            v.witness = {a, b};
            return v;
        }
    }
    return v;
}

struct BridgeVerdict {
    bool determinism_ok = true;
    bool concurrency_ok = true;
    bool pointed_contact_proper = true;
    bool accepted = false;
    bool routes_agree = false;
    int witness_vertex = -1;             ///< determinism witness (common tail)
    std::array<int, 2> witness_classes{-1, -1};
};

/// Checks a per-class color assignment both ways: as an edge coloring of the
/// pointed graph (determinism at every tail, concurrency across every
/// square), and as a vertex coloring of the pointed contact graph. The two
/// routes must agree; `accepted` reports the shared verdict.
inline BridgeVerdict labeling_edge_coloring_bridge(const OrientedGraph& og,
                                                   const ThetaStructure& t,
                                                   const std::vector<int>& class_colors) {
    if (static_cast<int>(class_colors.size()) != t.class_count()) {
        throw std::invalid_argument("labeling_edge_coloring_bridge: one color per class required");
    }
    BridgeVerdict v;
    // Determinism: out-edges of a common tail must differ in color.
    for (int x = 0; x < og.base().vertex_count() && v.determinism_ok; ++x) {
        auto out = og.out_edges(x);
        for (std::size_t i = 0; i < out.size() && v.determinism_ok; ++i) {
            for (std::size_t j = i + 1; j < out.size(); ++j) {
                int ci = t.class_of_edge[out[i]];
                int cj = t.class_of_edge[out[j]];
                if (class_colors[ci] == class_colors[cj]) {
                    v.determinism_ok = false;
                    v.witness_vertex = x;
                    v.witness_classes = {ci, cj};
                    break;
                }
            }
        }
    }
    // Concurrency: opposite edges of every square share a color. Colors are
    // constant on classes, so this can only fail if opposite edges were in
    // different classes; checked anyway.
    for (const auto& sq : t.squares) {
        auto [a, b, c, d] = sq;  // square a-b-c-d
        int e_ab = t.base.edge_index(a, b), e_cd = t.base.edge_index(c, d);
        int e_bc = t.base.edge_index(b, c), e_da = t.base.edge_index(d, a);
        if (class_colors[t.class_of_edge[e_ab]] != class_colors[t.class_of_edge[e_cd]] ||
            class_colors[t.class_of_edge[e_bc]] != class_colors[t.class_of_edge[e_da]]) {
            v.concurrency_ok = false;
            break;
        }
    }
    // Vertex-coloring route.
    auto gamma = pointed_contact_graph(og, t);
    for (const auto& [i, j] : gamma.edges()) {
        if (class_colors[i] == class_colors[j]) {
            v.pointed_contact_proper = false;
            if (v.witness_classes[0] < 0) v.witness_classes = {i, j};
            break;
        }
    }
    bool edge_route = v.determinism_ok && v.concurrency_ok;
    v.routes_agree = (edge_route == v.pointed_contact_proper);
    v.accepted = edge_route && v.pointed_contact_proper;
    return v;
}

// ---------------------------------------------------------------------------
// Round-trip verifiers

struct RoundtripVerdict {
    bool ok = false;
    std::string detail;
};

/// Checks domain(event_structure_from_pointed(og)) is isomorphic to og as a
/// pointed directed graph, via the canonical vertex signature (the set of
/// classes whose far halfspace contains the vertex).
inline RoundtripVerdict verify_pointed_roundtrip(const OrientedGraph& og,
                                                 const ThetaStructure& t,
                                                 std::size_t domain_limit = 1'000'000) {
    RoundtripVerdict verdict;
    auto es = event_structure_from_pointed(og, t);
    auto val = validate(es);
    if (!val.ok()) {
        verdict.detail = std::string("derived event structure invalid: ") +
                         to_string(val.violated);
        return verdict;
    }
    Domain dom = domain(es, domain_limit);
    const Graph& g = og.base();
    int n = g.vertex_count();
    if (dom.og.base().vertex_count() != n) {
        verdict.detail = "configuration count " +
                         std::to_string(dom.og.base().vertex_count()) +
                         " != vertex count " + std::to_string(n);
        return verdict;
    }
    // Vertex signature: classes i with v in B_i.
    int words = (t.class_count() + 63) / 64;
    std::unordered_map<std::vector<std::uint64_t>, int, detail::BitRowHash> sig_to_vertex;
    std::vector<std::uint64_t> sig(words);
    for (int v = 0; v < n; ++v) {
        std::fill(sig.begin(), sig.end(), 0);
        for (int c = 0; c < t.class_count(); ++c) {
            if (t.side(c, v) == 1) sig[c >> 6] |= (1ULL << (c & 63));
        }
        if (!sig_to_vertex.emplace(sig, v).second) {
            verdict.detail = "duplicate halfspace signature at vertex " + std::to_string(v);
            return verdict;
        }
    }
    std::vector<int> config_vertex(n, -1);
    for (int cv = 0; cv < n; ++cv) {
        auto it = sig_to_vertex.find(dom.configs[cv]);
        if (it == sig_to_vertex.end()) {
            verdict.detail = "configuration " + std::to_string(cv) +
                             " matches no vertex signature";
            return verdict;
        }
        config_vertex[cv] = it->second;
    }
    if (config_vertex[0] != og.basepoint()) {
        verdict.detail = "empty configuration does not map to the basepoint";
        return verdict;
    }
    if (dom.og.base().edge_count() != g.edge_count()) {
        verdict.detail = "edge count mismatch";
        return verdict;
    }
    for (int e = 0; e < dom.og.base().edge_count(); ++e) {
        int u = config_vertex[dom.og.tail(e)];
        int v = config_vertex[dom.og.head(e)];
        int idx = g.edge_index(u, v);
        if (idx < 0) {
            verdict.detail = "domain edge maps to a non-edge";
            return verdict;
        }
        // Direction: u must be the tail in og as well.
        if (og.tail(idx) != u) {
            verdict.detail = "domain edge direction mismatch";
            return verdict;
        }
    }
    verdict.ok = true;
    return verdict;
}

/// Checks event_structure_from_pointed(domain(es)) is isomorphic to es. The
/// event bijection is recovered from the Hasse edge labels: each Theta class
/// of the domain must add one fixed event.
inline RoundtripVerdict verify_event_structure_roundtrip(const EventStructure& es,
                                                         std::size_t domain_limit = 1'000'000) {
    RoundtripVerdict verdict;
    require_valid(es, "verify_event_structure_roundtrip");
    Domain dom = domain(es, domain_limit);
    auto built = theta_classes(dom.og.base(), dom.og.basepoint());
    if (!built.ok()) {
        verdict.detail = std::string("theta on domain failed: ") +
                         to_string(built.failure->kind);
        return verdict;
    }
    const auto& t = *built.structure;
    if (t.class_count() != es.event_count()) {
        verdict.detail = "class count " + std::to_string(t.class_count()) + " != event count " +
                         std::to_string(es.event_count());
        return verdict;
    }
    // class -> event via edge labels; must be constant per class and a
    // bijection overall.
    std::vector<int> class_event(t.class_count(), -1);
    for (int e = 0; e < dom.og.base().edge_count(); ++e) {
        int c = t.class_of_edge[e];
        int ev = dom.edge_event[e];
        if (class_event[c] == -1) {
            class_event[c] = ev;
        } else if (class_event[c] != ev) {
            verdict.detail = "theta class " + std::to_string(c) + " mixes events";
            return verdict;
        }
    }
    std::vector<char> hit(es.event_count(), 0);
    for (int c = 0; c < t.class_count(); ++c) {
        if (class_event[c] < 0 || hit[class_event[c]]) {
            verdict.detail = "class-to-event map is not a bijection";
            return verdict;
        }
        hit[class_event[c]] = 1;
    }
    auto derived = event_structure_from_pointed(dom.og, t);
    // Compare relations through the bijection.
    int k = es.event_count();
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) {
            if (i == j) continue;
            bool orig = es.leq(class_event[i], class_event[j]);
            bool got = derived.leq(i, j);
            if (orig != got) {
                verdict.detail = "causal order mismatch on classes " + std::to_string(i) + "," +
                                 std::to_string(j);
                return verdict;
            }
        }
    }
    for (int i = 0; i < k; ++i) {
        for (int j = i + 1; j < k; ++j) {
            bool orig = es.in_conflict(class_event[i], class_event[j]);
            bool got = derived.in_conflict(i, j);
            if (orig != got) {
                verdict.detail = "conflict mismatch on classes " + std::to_string(i) + "," +
                                 std::to_string(j);
                return verdict;
            }
        }
    }
    verdict.ok = true;
    return verdict;
}

// ---------------------------------------------------------------------------
// Random instances

/// Random valid event structure: a DAG of immediate causes, minimal conflicts
/// sprinkled on incomparable pairs, then closed under inheritance. Invalid
/// draws (closure forcing a reflexive conflict) are rejected and retried.
inline EventStructure random_event_structure(std::mt19937_64& rng, int max_events,
                                             int max_attempts = 200) {
    std::uniform_int_distribution<int> size_dist(1, max_events);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        int n = size_dist(rng);
        double edge_p = std::min(0.5, 1.6 / std::max(1, n - 1));
        std::vector<std::pair<int, int>> causes;
        for (int a = 0; a < n; ++a) {
            for (int b = a + 1; b < n; ++b) {
                if (unit(rng) < edge_p) causes.emplace_back(a, b);
            }
        }
        EventStructure order_only(n, causes, {});
        // Candidate conflicts on incomparable pairs.
        std::set<std::pair<int, int>> conflicts;
        for (int a = 0; a < n; ++a) {
            for (int b = a + 1; b < n; ++b) {
                if (!order_only.leq(a, b) && !order_only.leq(b, a) && unit(rng) < 0.25) {
                    conflicts.insert({a, b});
                }
            }
        }
        // Close under inheritance.
        bool changed = true;
        bool reflexive = false;
        while (changed && !reflexive) {
            changed = false;
            std::vector<std::pair<int, int>> base(conflicts.begin(), conflicts.end());
            for (auto [a, b] : base) {
                for (int c = 0; c < n; ++c) {
                    for (auto [x, y] : {std::pair(a, b), std::pair(b, a)}) {
                        if (c != y && order_only.leq(y, c)) {
                            if (c == x) {
                                reflexive = true;
                            } else if (conflicts.insert({std::min(x, c), std::max(x, c)}).second) {
                                changed = true;
                            }
                        }
                    }
                }
            }
        }
        if (reflexive) continue;
        EventStructure es(n, causes, {conflicts.begin(), conflicts.end()});
        if (validate(es).ok()) return es;
    }
    throw ResourceLimitError("random_event_structure: rejection sampling failed");
}

}  // namespace medianlab

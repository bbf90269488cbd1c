#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "medianlab/box.hpp"
#include "medianlab/burling.hpp"
#include "medianlab/coloring.hpp"
#include "medianlab/errors.hpp"
#include "medianlab/graph.hpp"
#include "medianlab/median.hpp"
#include "medianlab/theta.hpp"

namespace medianlab {

/// Subdivision of the bounding box by the axis-parallel planes through every
/// box corner. The 1-skeleton is the k1 x k2 x k3 grid graph with lattice
/// coordinates as vertex payload.
struct GridComplex {
    std::array<std::vector<Rational>, 3> plane_coords;
    std::array<int, 3> dims{};
    Graph skeleton;

    int vertex_id(int i, int j, int l) const { return (i * dims[1] + j) * dims[2] + l; }

    /// Index of a coordinate value in the plane list, or -1.
    int plane_index(int axis, const Rational& v) const {
        const auto& planes = plane_coords[axis];
        auto it = std::lower_bound(planes.begin(), planes.end(), v);
        if (it == planes.end() || !(*it == v)) return -1;
        return static_cast<int>(it - planes.begin());
    }
};

struct LiftBudget {
    std::int64_t max_vertices = 2'000'000;
};

inline GridComplex build_grid(const BoxHypergraph& bh, LiftBudget budget = {}) {
    bh.validate();
    GridComplex gc;
    for (int a = 0; a < 3; ++a) {
        auto& planes = gc.plane_coords[a];
        planes.push_back(bh.bounding.axis(a).lo);
        planes.push_back(bh.bounding.axis(a).hi);
        for (const auto& b : bh.boxes) {
            planes.push_back(b.axis(a).lo);
            planes.push_back(b.axis(a).hi);
        }
        std::sort(planes.begin(), planes.end());
        planes.erase(std::unique(planes.begin(), planes.end()), planes.end());
        gc.dims[a] = static_cast<int>(planes.size());
    }
    std::int64_t vertices = static_cast<std::int64_t>(gc.dims[0]) * gc.dims[1] * gc.dims[2];
    if (vertices > budget.max_vertices) {
        throw ResourceLimitError("build_grid: lattice needs " + std::to_string(vertices) +
                                 " vertices, budget is " + std::to_string(budget.max_vertices));
    }
    std::vector<std::pair<int, int>> edges;
    std::vector<std::vector<int>> coords(vertices);
    for (int i = 0; i < gc.dims[0]; ++i) {
        for (int j = 0; j < gc.dims[1]; ++j) {
            for (int l = 0; l < gc.dims[2]; ++l) {
                int v = gc.vertex_id(i, j, l);
                coords[v] = {i, j, l};
                if (i + 1 < gc.dims[0]) edges.emplace_back(v, gc.vertex_id(i + 1, j, l));
                if (j + 1 < gc.dims[1]) edges.emplace_back(v, gc.vertex_id(i, j + 1, l));
                if (l + 1 < gc.dims[2]) edges.emplace_back(v, gc.vertex_id(i, j, l + 1));
            }
        }
    }
    gc.skeleton = Graph(static_cast<int>(vertices), std::move(edges), std::move(coords));
    return gc;
}

struct CellRepresentationVerdict {
    bool ok = true;
    int box = -1;
    int axis = -1;
};

/// Accepts iff every box corner lies on grid planes, i.e. each box is a union
/// of elementary cells.
inline CellRepresentationVerdict check_cell_representation(const GridComplex& gc,
                                                           const BoxHypergraph& bh) {
    for (int i = 0; i < bh.size(); ++i) {
        for (int a = 0; a < 3; ++a) {
            if (gc.plane_index(a, bh.boxes[i].axis(a).lo) < 0 ||
                gc.plane_index(a, bh.boxes[i].axis(a).hi) < 0) {
                return {false, i, a};
            }
        }
    }
    return {};
}

// ---------------------------------------------------------------------------
// The lifted graph

struct ThetaLabel {
    enum class Kind { Grid, Lifted };
    Kind kind = Kind::Grid;
    int axis = -1;   ///< Grid: 0..2
    int plane = -1;  ///< Grid: slab index (between plane and plane+1)
    int box = -1;    ///< Lifted: box index

    friend bool operator==(const ThetaLabel& a, const ThetaLabel& b) {
        return a.kind == b.kind && a.axis == b.axis && a.plane == b.plane && a.box == b.box;
    }
    friend bool operator<(const ThetaLabel& a, const ThetaLabel& b) {
        return std::tie(a.kind, a.axis, a.plane, a.box) <
               std::tie(b.kind, b.axis, b.plane, b.box);
    }
};

/// Base grid plus, per box, a prism: a fresh copy of the box's subgrid glued
/// by a perfect matching. Vertex payload is (i,j,l,tag) with tag 0 on the
/// grid and tag i+1 on the copy of box i. alpha/beta are the grid corners at
/// the origin and opposite it.
struct LiftedGraph {
    Graph graph;
    std::vector<ThetaLabel> edge_labels;  ///< per edge index of `graph`
    int alpha = 0;
    int beta = 0;
    int box_count = 0;
    std::array<int, 3> dims{};
    std::vector<std::array<int, 6>> box_ranges;  ///< per box: lo/hi plane index per axis
    std::vector<std::vector<std::pair<int, int>>> matchings;  ///< per box: (base, copy)
};

inline LiftedGraph lift(const GridComplex& gc, const BoxHypergraph& bh, LiftBudget budget = {}) {
    auto cell = check_cell_representation(gc, bh);
    if (!cell.ok) {
        throw std::invalid_argument("lift: box " + std::to_string(cell.box) +
                                    " is not cell-represented on axis " +
                                    std::to_string(cell.axis));
    }
    LiftedGraph lg;
    lg.dims = gc.dims;
    lg.box_count = bh.size();
    const Graph& grid = gc.skeleton;
    int base_n = grid.vertex_count();

    std::vector<std::vector<int>> coords = grid.coords();
    for (auto& c : coords) c.push_back(0);

    struct LabeledEdge {
        int a, b;
        ThetaLabel label;
    };
    std::vector<LabeledEdge> edges;
    edges.reserve(grid.edge_count() * 2);
    auto grid_label = [&](int u, int v) {
        const auto& cu = grid.coords()[u];
        const auto& cv = grid.coords()[v];
        for (int a = 0; a < 3; ++a) {
            if (cu[a] != cv[a]) {
                return ThetaLabel{ThetaLabel::Kind::Grid, a, std::min(cu[a], cv[a]), -1};
            }
        }
        throw ConstructionBugError("lift: grid edge with identical coordinates");
    };
    for (int e = 0; e < grid.edge_count(); ++e) {
        auto [u, v] = grid.edge(e);
        edges.push_back({u, v, grid_label(u, v)});
    }

    std::int64_t total = base_n;
    int next_id = base_n;
    for (int bi = 0; bi < bh.size(); ++bi) {
        std::array<int, 6> range{};
        for (int a = 0; a < 3; ++a) {
            range[2 * a] = gc.plane_index(a, bh.boxes[bi].axis(a).lo);
            range[2 * a + 1] = gc.plane_index(a, bh.boxes[bi].axis(a).hi);
        }
        lg.box_ranges.push_back(range);
        std::map<int, int> copy_of;
        std::vector<std::pair<int, int>> matching;
        for (int i = range[0]; i <= range[1]; ++i) {
            for (int j = range[2]; j <= range[3]; ++j) {
                for (int l = range[4]; l <= range[5]; ++l) {
                    int v = gc.vertex_id(i, j, l);
                    int c = next_id++;
                    copy_of[v] = c;
                    auto cc = grid.coords()[v];
                    cc.push_back(bi + 1);
                    coords.push_back(cc);
                    matching.emplace_back(v, c);
                }
            }
        }
        total += static_cast<std::int64_t>(matching.size());
        if (total > budget.max_vertices) {
            throw ResourceLimitError("lift: budget of " + std::to_string(budget.max_vertices) +
                                     " vertices exceeded at box " + std::to_string(bi));
        }
        for (auto [v, c] : matching) {
            edges.push_back({v, c, ThetaLabel{ThetaLabel::Kind::Lifted, -1, -1, bi}});
            // Copy-internal edges mirror the subgrid.
            for (int w : grid.neighbors(v)) {
                auto it = copy_of.find(w);
                if (it != copy_of.end() && w > v) {
                    edges.push_back({c, it->second, grid_label(v, w)});
                }
            }
        }
        lg.matchings.push_back(std::move(matching));
    }

    std::vector<std::pair<int, int>> edge_pairs;
    edge_pairs.reserve(edges.size());
    for (auto& e : edges) {
        edge_pairs.emplace_back(std::min(e.a, e.b), std::max(e.a, e.b));
    }
    lg.graph = Graph(next_id, edge_pairs, std::move(coords));
    lg.edge_labels.resize(lg.graph.edge_count());
    for (const auto& e : edges) {
        lg.edge_labels[lg.graph.edge_index(e.a, e.b)] = e.label;
    }
    lg.alpha = gc.vertex_id(0, 0, 0);
    lg.beta = gc.vertex_id(gc.dims[0] - 1, gc.dims[1] - 1, gc.dims[2] - 1);
    return lg;
}

/// Rule-based orientation: grid-parallel edges point toward larger
/// coordinates, lifted edges point from the grid into the copy. The result
/// must agree edge-for-edge with the distance orientation at alpha.
inline OrientedGraph orient_at_alpha(const LiftedGraph& lg) {
    OrientedGraph og(lg.graph, lg.alpha);
    const auto& coords = lg.graph.coords();
    for (int e = 0; e < lg.graph.edge_count(); ++e) {
        auto [a, b] = lg.graph.edge(e);
        const auto& ca = coords[a];
        const auto& cb = coords[b];
        int rule_tail;
        if (lg.edge_labels[e].kind == ThetaLabel::Kind::Lifted) {
            rule_tail = (ca[3] == 0) ? a : b;  // grid side first
        } else {
            rule_tail = (ca < cb) ? a : b;  // smaller lattice coordinate first
        }
        if (og.tail(e) != rule_tail) {
            throw ConstructionBugError("orient_at_alpha: rule and distance orientations disagree "
                                       "on edge " + std::to_string(e));
        }
    }
    return og;
}

// ---------------------------------------------------------------------------
// Lift analysis and verifiers

struct CheckVerdict {
    bool ok = true;
    std::string detail;
};

/// Theta structure of a lifted graph at alpha plus the correspondence between
/// computed classes and construction labels (one class per box, one class per
/// grid slab). Building this runs the full partition verification.
struct LiftAnalysis {
    ThetaStructure theta;
    OrientedGraph orientation;
    std::vector<int> box_class;              ///< box index -> theta class id
    std::vector<ThetaLabel> class_label;     ///< theta class id -> construction label
};

inline LiftAnalysis analyze_lift(const LiftedGraph& lg, ThetaOptions opts = {}) {
    LiftAnalysis an;
    an.orientation = orient_at_alpha(lg);
    auto built = theta_classes(lg.graph, lg.alpha, opts);
    if (!built.ok()) {
        throw ConstructionBugError(std::string("analyze_lift: theta failed: ") +
                                   to_string(built.failure->kind) + ": " +
                                   built.failure->detail);
    }
    an.theta = std::move(*built.structure);

    // Each computed class must carry a single construction label, and the
    // label map must be a bijection.
    an.class_label.assign(an.theta.class_count(), ThetaLabel{});
    std::map<ThetaLabel, int> label_class;
    std::vector<char> seen(an.theta.class_count(), 0);
    for (int e = 0; e < lg.graph.edge_count(); ++e) {
        int c = an.theta.class_of_edge[e];
        if (!seen[c]) {
            seen[c] = 1;
            an.class_label[c] = lg.edge_labels[e];
            auto [it, inserted] = label_class.emplace(lg.edge_labels[e], c);
            if (!inserted) {
                throw ConstructionBugError("analyze_lift: one label spans theta classes " +
                                           std::to_string(it->second) + " and " +
                                           std::to_string(c));
            }
        } else if (!(an.class_label[c] == lg.edge_labels[e])) {
            throw ConstructionBugError("analyze_lift: theta class " + std::to_string(c) +
                                       " mixes construction labels");
        }
    }
    int expected = lg.box_count;
    for (int a = 0; a < 3; ++a) expected += lg.dims[a] - 1;
    if (an.theta.class_count() != expected) {
        throw ConstructionBugError("analyze_lift: class census " +
                                   std::to_string(an.theta.class_count()) + " != expected " +
                                   std::to_string(expected));
    }
    an.box_class.assign(lg.box_count, -1);
    for (int c = 0; c < an.theta.class_count(); ++c) {
        if (an.class_label[c].kind == ThetaLabel::Kind::Lifted) {
            an.box_class[an.class_label[c].box] = c;
        }
    }
    // Each lifted class must be the perfect matching of its box subgrid.
    for (int bi = 0; bi < lg.box_count; ++bi) {
        const auto& cls = an.theta.classes[an.box_class[bi]];
        if (cls.size() != lg.matchings[bi].size()) {
            throw ConstructionBugError("analyze_lift: lifted class of box " + std::to_string(bi) +
                                       " is not the expected matching");
        }
    }
    return an;
}

/// No two lifted classes may cross.
inline CheckVerdict verify_no_lifted_crossings(const LiftAnalysis& an) {
    for (std::size_t i = 0; i < an.box_class.size(); ++i) {
        for (std::size_t j = i + 1; j < an.box_class.size(); ++j) {
            if (an.theta.crosses(an.box_class[i], an.box_class[j])) {
                return {false, "lifted classes of boxes " + std::to_string(i) + " and " +
                                   std::to_string(j) + " cross"};
            }
        }
    }
    return {};
}

/// The pointed contact graph restricted to the lifted classes must equal the
/// box intersection graph under the index correspondence.
inline CheckVerdict verify_contact_matches_boxes(const LiftAnalysis& an,
                                                 const BoxHypergraph& bh) {
    auto gamma = pointed_contact_graph(an.orientation, an.theta);
    auto boxes = intersection_graph(bh);
    for (int i = 0; i < bh.size(); ++i) {
        for (int j = i + 1; j < bh.size(); ++j) {
            bool in_gamma = gamma.has_edge(an.box_class[i], an.box_class[j]);
            bool in_boxes = boxes.has_edge(i, j);
            if (in_gamma != in_boxes) {
                return {false, "boxes " + std::to_string(i) + "," + std::to_string(j) +
                                   (in_gamma ? " adjacent in the pointed contact graph only"
                                             : " intersect but classes are not adjacent")};
            }
        }
    }
    return {};
}

struct DegreeReport {
    int max_out_degree = 0;
    int max_degree = 0;
    int omega = 0;
    bool ok = false;                ///< max_out <= omega+3 and max_deg <= omega+6
    bool out_bound_attained = false;
};

/// Measured degree maxima against the omega+3 / omega+6 bounds.
inline DegreeReport verify_degree_bounds(const LiftAnalysis& an, int omega) {
    DegreeReport r;
    r.omega = omega;
    r.max_out_degree = an.orientation.max_out_degree();
    r.max_degree = an.orientation.base().max_degree();
    r.ok = r.max_out_degree <= omega + 3 && r.max_degree <= omega + 6;
    r.out_bound_attained = r.max_out_degree == omega + 3;
    return r;
}

struct ColoringChainReport {
    ColoringResult contact;
    ColoringResult pointed_contact;
    ColoringResult boxes;
    bool ok = false;  ///< chi(contact) >= chi(pointed) >= chi(boxes), via the computed bounds
};

/// chi of the contact graph, the pointed contact graph and the box
/// intersection graph; the chain must be non-increasing.
inline ColoringChainReport verify_coloring_chain(const LiftAnalysis& an, const BoxHypergraph& bh,
                                                 SolveBudget budget = {}) {
    ColoringChainReport r;
    r.contact = chromatic_number(contact_graph(an.theta), budget);
    r.pointed_contact = chromatic_number(pointed_contact_graph(an.orientation, an.theta), budget);
    r.boxes = chromatic_number(intersection_graph(bh), budget);
    r.ok = r.contact.upper_bound >= r.pointed_contact.lower_bound &&
           r.pointed_contact.upper_bound >= r.boxes.lower_bound;
    if (r.contact.optimal && r.pointed_contact.optimal) {
        r.ok = r.ok && r.contact.count >= r.pointed_contact.count;
    }
    if (r.pointed_contact.optimal && r.boxes.optimal) {
        r.ok = r.ok && r.pointed_contact.count >= r.boxes.count;
    }
    return r;
}

/// Replays the amalgam decomposition: for every prefix of the box list, the
/// subgrid of the next box must be gated in the prefix lift (exact check up
/// to `exact_cap` vertices, sampled beyond), and the attached prism must be
/// the subgrid times an edge (structural). This is the scale certificate for
/// median-ness of lifts too large for the exhaustive triple check.
inline CheckVerdict verify_amalgam_certificate(const GridComplex& gc, const BoxHypergraph& bh,
                                               int exact_cap = 1500, int samples = 48,
                                               std::uint64_t seed = 0) {
    BoxHypergraph prefix;
    prefix.bounding = bh.bounding;
    for (int i = 0; i < bh.size(); ++i) {
        LiftedGraph partial = lift(gc, prefix);  // boxes 0..i-1 over the full grid
        // Vertices of box i's subgrid, in partial-lift ids (base grid ids).
        std::array<int, 6> range{};
        for (int a = 0; a < 3; ++a) {
            range[2 * a] = gc.plane_index(a, bh.boxes[i].axis(a).lo);
            range[2 * a + 1] = gc.plane_index(a, bh.boxes[i].axis(a).hi);
        }
        std::vector<int> members;
        for (int x = range[0]; x <= range[1]; ++x) {
            for (int y = range[2]; y <= range[3]; ++y) {
                for (int z = range[4]; z <= range[5]; ++z) {
                    members.push_back(gc.vertex_id(x, y, z));
                }
            }
        }
        GatedVerdict gv =
            partial.graph.vertex_count() <= exact_cap
                ? is_gated(partial.graph, members)
                : is_gated_sampled(partial.graph, members, samples, seed + 31 * i);
        if (!gv.gated) {
            return {false, "subgrid of box " + std::to_string(i) +
                               " is not gated in the prefix lift (witness vertex " +
                               std::to_string(gv.witness_outside) + ")"};
        }
        prefix.boxes.push_back(bh.boxes[i]);
    }
    return {};
}

// ---------------------------------------------------------------------------
// Chains of lifts

struct ChainBudget {
    std::int64_t max_total_vertices = 1'500'000;
    BurlingBudget burling;
    LiftBudget lift;
};

/// Blocks glued in a path: beta of one block is identified with alpha of the
/// next. Vertex ids are block-local ids shifted, with the shared vertex
/// keeping the earlier block's id.
struct ChainGraph {
    Graph graph;
    int alpha = 0;
    std::vector<int> articulation;            ///< shared vertices, ascending
    std::vector<std::vector<int>> block_map;  ///< per block: local id -> chain id
    std::vector<int> block_alpha;             ///< chain ids
    std::vector<int> block_beta;
};

/// Glues the given lifted blocks into a chain.
inline ChainGraph chain_of_lifts(const std::vector<const LiftedGraph*>& blocks) {
    if (blocks.empty()) throw std::invalid_argument("chain_of_lifts: no blocks");
    ChainGraph chain;
    std::vector<std::pair<int, int>> edges;
    int next = 0;
    int prev_beta = -1;
    for (std::size_t t = 0; t < blocks.size(); ++t) {
        const LiftedGraph& lg = *blocks[t];
        std::vector<int> map(lg.graph.vertex_count(), -1);
        for (int v = 0; v < lg.graph.vertex_count(); ++v) {
            if (t > 0 && v == lg.alpha) {
                map[v] = prev_beta;
            } else {
                map[v] = next++;
            }
        }
        for (auto [a, b] : lg.graph.edges()) {
            int u = map[a], v = map[b];
            edges.emplace_back(std::min(u, v), std::max(u, v));
        }
        chain.block_alpha.push_back(map[lg.alpha]);
        chain.block_beta.push_back(map[lg.beta]);
        if (t > 0) chain.articulation.push_back(map[lg.alpha]);
        prev_beta = map[lg.beta];
        chain.block_map.push_back(std::move(map));
    }
    chain.graph = Graph(next, std::move(edges));
    chain.alpha = chain.block_alpha.front();
    std::sort(chain.articulation.begin(), chain.articulation.end());
    return chain;
}

/// Chain over the first k families: blocks are the lifts of the level-1..k
/// constructions, glued beta-to-alpha.
struct BuiltChain {
    std::vector<BoxHypergraph> families;
    std::vector<GridComplex> grids;
    std::vector<LiftedGraph> blocks;
    ChainGraph chain;
};

inline BuiltChain build_chain(int k, ChainBudget budget = {}) {
    if (k < 1) throw std::invalid_argument("build_chain: k must be positive");
    BuiltChain built;
    std::int64_t total = 0;
    for (int n = 1; n <= k; ++n) {
        built.families.push_back(burling_family(n, budget.burling));
        built.grids.push_back(build_grid(built.families.back(), budget.lift));
        built.blocks.push_back(lift(built.grids.back(), built.families.back(), budget.lift));
        total += built.blocks.back().graph.vertex_count();
        if (total > budget.max_total_vertices) {
            throw ResourceLimitError("build_chain: total vertex budget exceeded at block " +
                                     std::to_string(n));
        }
    }
    std::vector<const LiftedGraph*> ptrs;
    for (const auto& b : built.blocks) ptrs.push_back(&b);
    built.chain = chain_of_lifts(ptrs);
    return built;
}

/// Cut vertices via Tarjan's low-link.
inline std::vector<int> articulation_points(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> disc(n, -1), low(n, 0), parent(n, -1);
    std::vector<int> points;
    int timer = 0;
    // Iterative DFS to stay off the call stack for big graphs.
    std::vector<std::pair<int, int>> stack;  // (vertex, neighbor cursor)
    std::vector<int> child_count(n, 0);
    std::vector<char> is_cut(n, 0);
    for (int root = 0; root < n; ++root) {
        if (disc[root] >= 0) continue;
        stack.emplace_back(root, 0);
        disc[root] = low[root] = timer++;
        while (!stack.empty()) {
            auto& [v, cursor] = stack.back();
            auto nb = g.neighbors(v);
            if (cursor < static_cast<int>(nb.size())) {
                int w = nb[cursor++];
                if (disc[w] < 0) {
                    parent[w] = v;
                    ++child_count[v];
                    disc[w] = low[w] = timer++;
                    stack.emplace_back(w, 0);
                } else if (w != parent[v]) {
                    low[v] = std::min(low[v], disc[w]);
                }
            } else {
                stack.pop_back();
                int p = parent[v];
                if (p >= 0) {
                    low[p] = std::min(low[p], low[v]);
                    if (parent[p] >= 0 && low[v] >= disc[p]) is_cut[p] = 1;
                }
            }
        }
        if (child_count[root] >= 2) is_cut[root] = 1;
    }
    for (int v = 0; v < n; ++v) {
        if (is_cut[v]) points.push_back(v);
    }
    return points;
}

}  // namespace medianlab

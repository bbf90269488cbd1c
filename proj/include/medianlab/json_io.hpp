#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "medianlab/box.hpp"
#include "medianlab/errors.hpp"
#include "medianlab/event_structure.hpp"
#include "medianlab/graph.hpp"
#include "medianlab/lifting.hpp"
#include "medianlab/theta.hpp"

namespace medianlab {

using Json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Graph: {"vertices":[{"id":int,"coord":[int,...]?}],"edges":[[int,int]]}

inline Json graph_to_json(const Graph& g) {
    Json j;
    j["vertices"] = Json::array();
    for (int v = 0; v < g.vertex_count(); ++v) {
        Json jv;
        jv["id"] = v;
        if (g.has_coords() && !g.coords()[v].empty()) jv["coord"] = g.coords()[v];
        j["vertices"].push_back(jv);
    }
    j["edges"] = Json::array();
    for (const auto& [a, b] : g.edges()) j["edges"].push_back(Json::array({a, b}));
    return j;
}

inline Graph graph_from_json(const Json& j) {
    if (!j.contains("vertices") || !j.contains("edges")) {
        throw SchemaError("graph: missing 'vertices' or 'edges'");
    }
    std::vector<int> ids;
    std::vector<std::vector<int>> coords;
    bool any_coord = false;
    for (const auto& jv : j.at("vertices")) {
        if (!jv.contains("id") || !jv.at("id").is_number_integer()) {
            throw SchemaError("graph: vertex without integer 'id'");
        }
        ids.push_back(jv.at("id").get<int>());
        if (jv.contains("coord")) {
            coords.push_back(jv.at("coord").get<std::vector<int>>());
            any_coord = true;
        } else {
            coords.emplace_back();
        }
    }
    int n = static_cast<int>(ids.size());
    // Dense re-index in file order; ids must be unique.
    std::vector<int> sorted_ids = ids;
    std::sort(sorted_ids.begin(), sorted_ids.end());
    if (std::adjacent_find(sorted_ids.begin(), sorted_ids.end()) != sorted_ids.end()) {
        throw SchemaError("graph: duplicate vertex id");
    }
    auto dense = [&](int id) {
        auto it = std::lower_bound(sorted_ids.begin(), sorted_ids.end(), id);
        if (it == sorted_ids.end() || *it != id) throw SchemaError("graph: edge uses unknown id");
        return static_cast<int>(it - sorted_ids.begin());
    };
    // Reorder coords to the dense order.
    std::vector<std::vector<int>> dense_coords(n);
    for (int i = 0; i < n; ++i) dense_coords[dense(ids[i])] = coords[i];
    std::vector<std::pair<int, int>> edges;
    for (const auto& je : j.at("edges")) {
        if (!je.is_array() || je.size() != 2) throw SchemaError("graph: edge must be a pair");
        edges.emplace_back(dense(je[0].get<int>()), dense(je[1].get<int>()));
    }
    try {
        return Graph(n, std::move(edges), any_coord ? std::move(dense_coords)
                                                    : std::vector<std::vector<int>>{});
    } catch (const std::invalid_argument& e) {
        throw SchemaError(std::string("graph: ") + e.what());
    }
}

// ---------------------------------------------------------------------------
// EventStructure: {"events":[ids],"causal":[[pred,succ]],"conflict":[[a,b]]}

inline Json event_structure_to_json(const EventStructure& es) {
    Json j;
    j["events"] = Json::array();
    for (int e = 0; e < es.event_count(); ++e) j["events"].push_back(e);
    j["causal"] = Json::array();
    for (int e = 0; e < es.event_count(); ++e) {
        for (int p : es.immediate_causes()[e]) j["causal"].push_back(Json::array({p, e}));
    }
    j["conflict"] = Json::array();
    for (auto [a, b] : es.conflict_pairs()) j["conflict"].push_back(Json::array({a, b}));
    return j;
}

inline EventStructure event_structure_from_json(const Json& j) {
    if (!j.contains("events")) throw SchemaError("event structure: missing 'events'");
    std::vector<int> ids = j.at("events").get<std::vector<int>>();
    std::vector<int> sorted = ids;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw SchemaError("event structure: duplicate event id");
    }
    auto dense = [&](int id) {
        auto it = std::lower_bound(sorted.begin(), sorted.end(), id);
        if (it == sorted.end() || *it != id) throw SchemaError("event structure: unknown event id");
        return static_cast<int>(it - sorted.begin());
    };
    std::vector<std::pair<int, int>> causal, conflict;
    if (j.contains("causal")) {
        for (const auto& jc : j.at("causal")) {
            causal.emplace_back(dense(jc[0].get<int>()), dense(jc[1].get<int>()));
        }
    }
    if (j.contains("conflict")) {
        for (const auto& jc : j.at("conflict")) {
            conflict.emplace_back(dense(jc[0].get<int>()), dense(jc[1].get<int>()));
        }
    }
    return EventStructure(static_cast<int>(ids.size()), std::move(causal), std::move(conflict));
}

/// {"labels":{"<event id>": label}}
inline Json labeling_to_json(const std::vector<int>& labels) {
    Json j;
    j["labels"] = Json::object();
    for (std::size_t e = 0; e < labels.size(); ++e) {
        j["labels"][std::to_string(e)] = labels[e];
    }
    return j;
}

inline std::vector<int> labeling_from_json(const Json& j, int event_count) {
    if (!j.contains("labels")) throw SchemaError("labeling: missing 'labels'");
    std::vector<int> labels(event_count, -1);
    for (const auto& [key, value] : j.at("labels").items()) {
        int e = std::stoi(key);
        if (e < 0 || e >= event_count) throw SchemaError("labeling: unknown event " + key);
        labels[e] = value.get<int>();
    }
    for (int e = 0; e < event_count; ++e) {
        if (labels[e] < 0) {
            throw SchemaError("labeling: missing label for event " + std::to_string(e));
        }
    }
    return labels;
}

// ---------------------------------------------------------------------------
// Boxes: rationals serialize as int (when integral) or [num, den]

inline Json rational_to_json(const Rational& r) {
    if (r.is_integer()) return Json(r.num());
    return Json::array({r.num(), r.den()});
}

inline Rational rational_from_json(const Json& j) {
    if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
    if (j.is_array() && j.size() == 2) {
        return Rational(j[0].get<std::int64_t>(), j[1].get<std::int64_t>());
    }
    throw SchemaError("rational: expected integer or [num,den]");
}

inline Json box_to_json(const Box& b) {
    Json j;
    const char* names[3] = {"x", "y", "z"};
    for (int a = 0; a < 3; ++a) {
        j[names[a]] = Json::array({rational_to_json(b.axis(a).lo), rational_to_json(b.axis(a).hi)});
    }
    return j;
}

inline Box box_from_json(const Json& j) {
    Box b;
    const char* names[3] = {"x", "y", "z"};
    for (int a = 0; a < 3; ++a) {
        if (!j.contains(names[a]) || !j.at(names[a]).is_array() || j.at(names[a]).size() != 2) {
            throw SchemaError(std::string("box: missing interval '") + names[a] + "'");
        }
        b.axis(a) = {rational_from_json(j.at(names[a])[0]), rational_from_json(j.at(names[a])[1])};
    }
    return b;
}

inline Json hypergraph_to_json(const BoxHypergraph& bh) {
    Json j;
    j["boxes"] = Json::array();
    for (const auto& b : bh.boxes) j["boxes"].push_back(box_to_json(b));
    j["bounding"] = box_to_json(bh.bounding);
    if (!bh.probes.empty()) {
        j["probes"] = Json::array();
        for (const auto& p : bh.probes) j["probes"].push_back(box_to_json(p));
    }
    return j;
}

inline BoxHypergraph hypergraph_from_json(const Json& j) {
    BoxHypergraph bh;
    if (!j.contains("boxes") || !j.contains("bounding")) {
        throw SchemaError("box hypergraph: missing 'boxes' or 'bounding'");
    }
    for (const auto& jb : j.at("boxes")) bh.boxes.push_back(box_from_json(jb));
    bh.bounding = box_from_json(j.at("bounding"));
    if (j.contains("probes")) {
        for (const auto& jp : j.at("probes")) bh.probes.push_back(box_from_json(jp));
    }
    try {
        bh.validate();
    } catch (const std::invalid_argument& e) {
        throw SchemaError(std::string("box hypergraph: ") + e.what());
    }
    return bh;
}

// ---------------------------------------------------------------------------
// Lifted graphs: graph schema + theta_labels/alpha/beta (+ optional boxes).
// Class ids in theta_labels are the deterministic ids of theta_classes at
// alpha, so a loader can recover the edge partition by recomputing it.

inline Json lifted_to_json(const LiftedGraph& lg, const LiftAnalysis& an,
                           const BoxHypergraph* boxes = nullptr) {
    Json j = graph_to_json(lg.graph);
    j["theta_labels"] = Json::object();
    for (int c = 0; c < an.theta.class_count(); ++c) {
        const ThetaLabel& label = an.class_label[c];
        Json jl;
        if (label.kind == ThetaLabel::Kind::Lifted) {
            jl["kind"] = "LIFTED";
            jl["box"] = label.box;
        } else {
            jl["kind"] = "GRID";
            jl["axis"] = label.axis;
            jl["plane"] = label.plane;
        }
        j["theta_labels"][std::to_string(c)] = jl;
    }
    j["alpha"] = lg.alpha;
    j["beta"] = lg.beta;
    if (boxes) j["boxes"] = hypergraph_to_json(*boxes);
    return j;
}

struct LoadedLift {
    LiftedGraph lg;
    std::optional<BoxHypergraph> boxes;
};

inline LoadedLift lifted_from_json(const Json& j) {
    LoadedLift out;
    Graph g = graph_from_json(j);
    if (!j.contains("alpha") || !j.contains("beta") || !j.contains("theta_labels")) {
        throw SchemaError("lifted graph: missing 'alpha', 'beta' or 'theta_labels'");
    }
    out.lg.alpha = j.at("alpha").get<int>();
    out.lg.beta = j.at("beta").get<int>();
    if (!g.has_coords()) throw SchemaError("lifted graph: vertices need (i,j,l,tag) coords");
    // Recompute the partition to resolve class ids.
    auto built = theta_classes(g, out.lg.alpha, ThetaOptions{ThetaOptions::HalfspaceCheck::Off});
    if (!built.ok()) {
        throw SchemaError(std::string("lifted graph: theta recomputation failed: ") +
                          to_string(built.failure->kind));
    }
    const auto& t = *built.structure;
    std::vector<ThetaLabel> class_label(t.class_count());
    std::vector<char> have(t.class_count(), 0);
    for (const auto& [key, jl] : j.at("theta_labels").items()) {
        int c = std::stoi(key);
        if (c < 0 || c >= t.class_count()) {
            throw SchemaError("lifted graph: theta_labels key out of range: " + key);
        }
        ThetaLabel label;
        std::string kind = jl.at("kind").get<std::string>();
        if (kind == "LIFTED") {
            label.kind = ThetaLabel::Kind::Lifted;
            label.box = jl.at("box").get<int>();
        } else if (kind == "GRID") {
            label.kind = ThetaLabel::Kind::Grid;
            label.axis = jl.at("axis").get<int>();
            label.plane = jl.at("plane").get<int>();
        } else {
            throw SchemaError("lifted graph: unknown label kind " + kind);
        }
        class_label[c] = label;
        have[c] = 1;
    }
    for (int c = 0; c < t.class_count(); ++c) {
        if (!have[c]) {
            throw SchemaError("lifted graph: class " + std::to_string(c) + " has no label");
        }
    }
    out.lg.edge_labels.resize(g.edge_count());
    int box_count = 0;
    for (int e = 0; e < g.edge_count(); ++e) {
        out.lg.edge_labels[e] = class_label[t.class_of_edge[e]];
        if (out.lg.edge_labels[e].kind == ThetaLabel::Kind::Lifted) {
            box_count = std::max(box_count, out.lg.edge_labels[e].box + 1);
        }
    }
    out.lg.box_count = box_count;
    // Lattice dims from grid (tag 0) coordinates.
    for (int v = 0; v < g.vertex_count(); ++v) {
        const auto& c = g.coords()[v];
        if (c.size() != 4) throw SchemaError("lifted graph: coords must be 4-tuples");
        if (c[3] == 0) {
            for (int a = 0; a < 3; ++a) {
                out.lg.dims[a] = std::max(out.lg.dims[a], c[a] + 1);
            }
        }
    }
    // Box ranges and matchings from copy tags.
    out.lg.box_ranges.assign(box_count, {INT32_MAX, -1, INT32_MAX, -1, INT32_MAX, -1});
    out.lg.matchings.assign(box_count, {});
    for (int e = 0; e < g.edge_count(); ++e) {
        const auto& label = out.lg.edge_labels[e];
        if (label.kind != ThetaLabel::Kind::Lifted) continue;
        auto [a, b] = g.edge(e);
        int base = g.coords()[a][3] == 0 ? a : b;
        int copy = base == a ? b : a;
        out.lg.matchings[label.box].emplace_back(base, copy);
        auto& r = out.lg.box_ranges[label.box];
        for (int axis = 0; axis < 3; ++axis) {
            r[2 * axis] = std::min(r[2 * axis], g.coords()[base][axis]);
            r[2 * axis + 1] = std::max(r[2 * axis + 1], g.coords()[base][axis]);
        }
    }
    for (auto& m : out.lg.matchings) std::sort(m.begin(), m.end());
    out.lg.graph = std::move(g);
    if (j.contains("boxes")) out.boxes = hypergraph_from_json(j.at("boxes"));
    return out;
}

// ---------------------------------------------------------------------------
// DOT export

namespace detail {

inline const char* dot_palette(int i) {
    static const char* colors[] = {"#e6194b", "#3cb44b", "#4363d8", "#f58231", "#911eb4",
                                   "#46f0f0", "#f032e6", "#bcf60c", "#fabebe", "#008080",
                                   "#9a6324", "#800000", "#808000", "#000075", "#808080",
                                   "#ffe119"};
    return colors[i % 16];
}

}  // namespace detail

/// Graph in DOT, with the theta class id as edge label and one color per
/// class. `highlight` classes (e.g. lifted ones) use the strong palette;
/// the rest cycle through it after them.
inline std::string graph_to_dot(const Graph& g, const ThetaStructure* t = nullptr,
                                const std::vector<int>& highlight = {}) {
    std::ostringstream os;
    os << "graph medianlab {\n";
    os << "  node [shape=point];\n";
    std::vector<int> color_of;
    if (t) {
        color_of.assign(t->class_count(), -1);
        int next = 0;
        for (int c : highlight) color_of[c] = next++;
        for (int c = 0; c < t->class_count(); ++c) {
            if (color_of[c] < 0) color_of[c] = next++;
        }
    }
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [a, b] = g.edge(e);
        os << "  " << a << " -- " << b;
        if (t) {
            int c = t->class_of_edge[e];
            os << " [label=\"" << c << "\", color=\"" << detail::dot_palette(color_of[c])
               << "\"]";
        }
        os << ";\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace medianlab

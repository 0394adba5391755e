#include "cubefan/wall.hpp"

#include <algorithm>
#include <stdexcept>

#include "pairing.hpp"

namespace cubefan {

const char* fan_class_name(FanClass c) {
    switch (c) {
        case FanClass::Fano: return "Fano";
        case FanClass::WeakFanoNotFano: return "WeakFanoNotFano";
        case FanClass::NotWeakFano: return "NotWeakFano";
    }
    return "?";
}

std::vector<Wall> enumerate_walls(const Fan& f) {
    std::vector<Wall> out;
    for (const detail::WallSite& site :
         detail::wall_sites(f.maximal_cones, static_cast<int>(f.labels.size()))) {
        if (site.completions.size() != 2) {
            std::string msg = "wall {";
            for (std::size_t i = 0; i < site.base.size(); ++i)
                msg += (i ? " " : "") + label_to_string(f.labels[site.base[i]]);
            msg += "} lies in " + std::to_string(site.completions.size()) +
                   " maximal cones, expected 2";
            throw FanIntegrityError(msg);
        }
        Wall w;
        w.base = site.base;
        w.neighbors = {site.completions[0].second, site.completions[1].second};
        if (w.neighbors[0] > w.neighbors[1]) std::swap(w.neighbors[0], w.neighbors[1]);
        out.push_back(std::move(w));
    }
    return out;
}

std::vector<std::int64_t> wall_relation(const Fan& f, const Wall& w) {
    int n = f.graph.node_count();
    if (static_cast<int>(w.base.size()) != n - 1)
        throw std::invalid_argument("wall_relation: base must have n-1 rays");

    IntMatrix a(n, n);
    for (int c = 0; c < n - 1; ++c)
        for (int r = 0; r < n; ++r) a.at(r, c) = f.rays[w.base[c]][r];
    for (int r = 0; r < n; ++r) a.at(r, n - 1) = f.rays[w.neighbors[0]][r];

    std::vector<std::int64_t> b = f.rays[w.neighbors[1]];
    std::optional<std::vector<std::int64_t>> y = solve_integer(a, b);
    if (!y)
        throw FanIntegrityError("wall relation: base plus neighbor is not a lattice basis");
    if (y->back() != -1)
        throw FanIntegrityError("wall relation: neighbor coefficient " +
                                std::to_string(y->back()) + ", expected -1");

    std::vector<std::int64_t> coeffs(static_cast<std::size_t>(n) - 1);
    for (int i = 0; i < n - 1; ++i) coeffs[i] = -(*y)[i];
    return coeffs;
}

std::int64_t intersection_number(const std::vector<std::int64_t>& coefficients) {
    std::int64_t sum = 2;
    for (std::int64_t a : coefficients) sum += a;
    return sum;
}

void solve_wall(const Fan& f, Wall& w) {
    w.coefficients = wall_relation(f, w);
    w.number = intersection_number(w.coefficients);
    w.solved = true;
}

std::optional<Wall> find_wall(const Fan& f, const std::vector<FacetLabel>& base) {
    std::vector<int> ids;
    ids.reserve(base.size());
    for (const FacetLabel& label : base) {
        int id = f.label_index(label);
        if (id < 0) return std::nullopt;
        ids.push_back(id);
    }
    std::sort(ids.begin(), ids.end());

    std::vector<int> completions;
    for (const std::vector<int>& cone : f.maximal_cones) {
        if (!std::includes(cone.begin(), cone.end(), ids.begin(), ids.end())) continue;
        for (int id : cone)
            if (!std::binary_search(ids.begin(), ids.end(), id)) completions.push_back(id);
    }
    if (completions.size() != 2) return std::nullopt;

    Wall w;
    w.base = ids;
    w.neighbors = {completions[0], completions[1]};
    if (w.neighbors[0] > w.neighbors[1]) std::swap(w.neighbors[0], w.neighbors[1]);
    solve_wall(f, w);
    return w;
}

Classification classify_fan(const Fan& f, ClassifyMode mode) {
    std::vector<Wall> walls = enumerate_walls(f);
    Classification out;
    out.wall_count = static_cast<long long>(walls.size());
    bool first = true;
    for (Wall& w : walls) {
        solve_wall(f, w);
        if (first || w.number < out.min_number) {
            out.min_number = w.number;
            out.witness = w;
            first = false;
        }
        if (mode == ClassifyMode::FastNegative && out.min_number <= -1) break;
    }
    if (first) throw FanIntegrityError("classify_fan: fan has no walls");
    out.kind = out.min_number >= 1  ? FanClass::Fano
               : out.min_number == 0 ? FanClass::WeakFanoNotFano
                                     : FanClass::NotWeakFano;
    return out;
}

namespace {

void add_outside_bars(const Graph& g, NodeSet inside, std::vector<FacetLabel>& base) {
    for (int v = 1; v <= g.node_count(); ++v)
        if (!inside.contains(v)) base.push_back(FacetLabel::make_bar(v));
}

NodeSet pattern_or_throw(const Graph& g, PatternKind kind) {
    std::optional<NodeSet> nodes = find_pattern(g, kind);
    if (!nodes)
        throw std::invalid_argument(std::string("witness_nerve: graph has no induced ") +
                                    pattern_name(kind));
    return *nodes;
}

// Nodes of an induced cycle in traversal order, starting at the least node,
// second node the least of its two cycle neighbors.
std::vector<int> cycle_order(const Graph& g, NodeSet nodes) {
    std::vector<int> order;
    int start = nodes.least();
    int prev = start;
    int cur = (g.neighbors(start) & nodes).least();
    order.push_back(start);
    while (cur != start) {
        order.push_back(cur);
        NodeSet next = (g.neighbors(cur) & nodes) - NodeSet::single(prev);
        prev = cur;
        cur = next.least();
    }
    return order;
}

} // namespace

NerveWitness witness_nerve(const Graph& g, NerveCase c) {
    NerveWitness out;

    switch (c) {
        case NerveCase::FanoComponent: {
            NodeSet comp;
            for (const NodeSet& s : connected_components(g))
                if (s.size() >= 3) {
                    comp = s;
                    break;
                }
            if (comp.empty())
                throw std::invalid_argument(
                    "witness_nerve: no connected component with >= 3 nodes");

            // v1 - v2 - v3 a path, then grow connected prefixes to the
            // whole component.
            int v2 = 0;
            for (int v : comp)
                if ((g.neighbors(v) & comp).size() >= 2) {
                    v2 = v;
                    break;
                }
            NodeSet nb = g.neighbors(v2) & comp;
            int v1 = nb.least();
            nb.erase(v1);
            int v3 = nb.least();

            NodeSet prefix = NodeSet::of({v1, v2, v3});
            out.base.push_back(FacetLabel::make_tube(NodeSet::single(v2)));
            out.base.push_back(FacetLabel::make_tube(prefix));
            while (prefix != comp) {
                int next = (g.boundary(prefix) & comp).least();
                prefix.insert(next);
                out.base.push_back(FacetLabel::make_tube(prefix));
            }
            add_outside_bars(g, comp, out.base);
            out.neighbor_j = FacetLabel::make_tube(NodeSet::of({v1, v2}));
            out.neighbor_jp = FacetLabel::make_tube(NodeSet::of({v2, v3}));
            out.expected = 0;
            out.pattern_nodes = comp;
            break;
        }

        case NerveCase::Claw: {
            NodeSet nodes = pattern_or_throw(g, PatternKind::Claw);
            int center = 0;
            for (int v : nodes)
                if ((g.neighbors(v) & nodes).size() == 3) center = v;
            for (int v : nodes)
                if (v != center)
                    out.base.push_back(FacetLabel::make_tube(NodeSet::single(v)));
            add_outside_bars(g, nodes, out.base);
            out.neighbor_j = FacetLabel::make_tube(nodes);
            out.neighbor_jp = FacetLabel::make_bar(center);
            out.expected = -1;
            out.pattern_nodes = nodes;
            break;
        }

        case NerveCase::Diamond: {
            NodeSet nodes = pattern_or_throw(g, PatternKind::Diamond);
            NodeSet apex, missing;
            for (int v : nodes) {
                if ((g.neighbors(v) & nodes).size() == 3)
                    apex.insert(v);
                else
                    missing.insert(v);
            }
            for (int v : missing)
                out.base.push_back(FacetLabel::make_tube(NodeSet::single(v)));
            out.base.push_back(FacetLabel::make_tube(nodes));
            add_outside_bars(g, nodes, out.base);
            int a = apex.least();
            int b = (apex - NodeSet::single(a)).least();
            out.neighbor_j = FacetLabel::make_tube(missing | NodeSet::single(a));
            out.neighbor_jp = FacetLabel::make_tube(missing | NodeSet::single(b));
            out.expected = -1;
            out.pattern_nodes = nodes;
            break;
        }

        case NerveCase::CycleGe4: {
            NodeSet nodes = pattern_or_throw(g, PatternKind::CycleGe4);
            std::vector<int> order = cycle_order(g, nodes);
            int k = static_cast<int>(order.size());

            NodeSet prefix;
            for (int i = 0; i < k - 3; ++i) {
                prefix.insert(order[static_cast<std::size_t>(i)]);
                out.base.push_back(FacetLabel::make_tube(prefix));
            }
            out.base.push_back(
                FacetLabel::make_tube(NodeSet::single(order[static_cast<std::size_t>(k) - 2])));
            out.base.push_back(FacetLabel::make_tube(nodes));
            add_outside_bars(g, nodes, out.base);

            NodeSet j = prefix;
            j.insert(order[static_cast<std::size_t>(k) - 3]);
            j.insert(order[static_cast<std::size_t>(k) - 2]);
            NodeSet jp = prefix;
            jp.insert(order[static_cast<std::size_t>(k) - 2]);
            jp.insert(order[static_cast<std::size_t>(k) - 1]);
            out.neighbor_j = FacetLabel::make_tube(j);
            out.neighbor_jp = FacetLabel::make_tube(jp);
            out.expected = -1;
            out.pattern_nodes = nodes;
            break;
        }
    }

    std::sort(out.base.begin(), out.base.end(), label_less);
    return out;
}

} // namespace cubefan

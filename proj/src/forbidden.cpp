#include "cubefan/forbidden.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace cubefan {

const char* pattern_name(PatternKind kind) {
    switch (kind) {
        case PatternKind::CycleGe4: return "cycle";
        case PatternKind::Diamond: return "diamond";
        case PatternKind::Claw: return "claw";
    }
    return "?";
}

namespace {

struct InducedProfile {
    int k = 0;
    int edges = 0;
    int max_degree = 0;
    bool two_regular = false;
};

InducedProfile profile(const Graph& g, NodeSet s) {
    InducedProfile p;
    p.k = s.size();
    int degsum = 0;
    p.two_regular = true;
    for (int v : s) {
        int d = (g.neighbors(v) & s).size();
        degsum += d;
        p.max_degree = std::max(p.max_degree, d);
        if (d != 2) p.two_regular = false;
    }
    p.edges = degsum / 2;
    return p;
}

// Kind induced by a 4-node set, if any. Claw, diamond and C4 are mutually
// exclusive on a fixed node set.
std::optional<PatternKind> four_node_kind(const Graph& g, NodeSet s) {
    InducedProfile p = profile(g, s);
    if (p.edges == 3 && p.max_degree == 3) return PatternKind::Claw;
    if (p.edges == 5) return PatternKind::Diamond;
    if (p.edges == 4 && p.two_regular) return PatternKind::CycleGe4;
    return std::nullopt;
}

bool induces_cycle(const Graph& g, NodeSet s) {
    InducedProfile p = profile(g, s);
    return p.k >= 4 && p.two_regular && p.edges == p.k && is_connected(g, s);
}

// Visits k-subsets of 1..n in lexicographic order of their element tuples
// until fn returns true; reports whether fn ever did.
bool for_each_subset(int n, int k, const std::function<bool(NodeSet)>& fn) {
    if (k > n || k <= 0) return false;
    std::vector<int> c(k);
    for (int i = 0; i < k; ++i) c[i] = i + 1;
    while (true) {
        NodeSet s;
        for (int v : c) s.insert(v);
        if (fn(s)) return true;
        int i = k - 1;
        while (i >= 0 && c[i] == n - (k - 1 - i)) --i;
        if (i < 0) return false;
        ++c[i];
        for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
    }
}

} // namespace

bool witness_checks(const Graph& g, const ForbiddenWitness& w) {
    InducedProfile p = profile(g, w.nodes);
    switch (w.kind) {
        case PatternKind::CycleGe4:
            return p.k >= 4 && p.two_regular && p.edges == p.k && is_connected(g, w.nodes);
        case PatternKind::Diamond:
            return p.k == 4 && p.edges == 5;
        case PatternKind::Claw:
            return p.k == 4 && p.edges == 3 && p.max_degree == 3;
    }
    return false;
}

bool is_chordal(const Graph& g) {
    int n = g.node_count();
    if (n <= 3) return true;

    // Maximum cardinality search; ties broken by least label.
    std::vector<int> weight(n + 1, 0);
    std::vector<int> order; // pick order; reversed it is the candidate PEO
    order.reserve(n);
    NodeSet unnumbered = g.nodes();
    for (int step = 0; step < n; ++step) {
        int best = -1, bestw = -1;
        for (int v : unnumbered) {
            if (weight[v] > bestw) {
                best = v;
                bestw = weight[v];
            }
        }
        unnumbered.erase(best);
        order.push_back(best);
        for (int u : g.neighbors(best) & unnumbered) ++weight[u];
    }

    std::vector<int> pos(n + 1, 0); // position in the candidate PEO
    for (int i = 0; i < n; ++i) pos[order[n - 1 - i]] = i;

    // PEO check: later neighbors of v minus the earliest of them must all be
    // adjacent to that earliest one.
    for (int v = 1; v <= n; ++v) {
        NodeSet later;
        for (int u : g.neighbors(v))
            if (pos[u] > pos[v]) later.insert(u);
        if (later.empty()) continue;
        int first = -1, firstpos = n + 1;
        for (int u : later)
            if (pos[u] < firstpos) {
                firstpos = pos[u];
                first = u;
            }
        later.erase(first);
        if (!later.subset_of(g.neighbors(first))) return false;
    }
    return true;
}

std::optional<NodeSet> find_pattern(const Graph& g, PatternKind kind) {
    int n = g.node_count();
    std::optional<NodeSet> hit;
    if (kind == PatternKind::Claw || kind == PatternKind::Diamond) {
        for_each_subset(n, 4, [&](NodeSet s) {
            if (four_node_kind(g, s) == kind) {
                hit = s;
                return true;
            }
            return false;
        });
        return hit;
    }
    for (int k = 4; k <= n && !hit; ++k) {
        for_each_subset(n, k, [&](NodeSet s) {
            if (induces_cycle(g, s)) {
                hit = s;
                return true;
            }
            return false;
        });
    }
    return hit;
}

std::optional<ForbiddenWitness> find_forbidden(const Graph& g) {
    int n = g.node_count();
    if (n < 4) return std::nullopt;

    std::optional<ForbiddenWitness> hit;
    for_each_subset(n, 4, [&](NodeSet s) {
        if (auto kind = four_node_kind(g, s)) {
            hit = ForbiddenWitness{*kind, s};
            return true;
        }
        return false;
    });
    if (hit) return hit;

    if (is_chordal(g)) return std::nullopt;

    // Non-chordal with no 4-node witness: the shortest induced cycle has
    // length >= 5.
    for (int k = 5; k <= n && !hit; ++k) {
        for_each_subset(n, k, [&](NodeSet s) {
            if (induces_cycle(g, s)) {
                hit = ForbiddenWitness{PatternKind::CycleGe4, s};
                return true;
            }
            return false;
        });
    }
    if (!hit) throw std::logic_error("non-chordal graph without an induced long cycle");
    return hit;
}

bool graph_weakfano_test(const Graph& g) {
    return !find_forbidden(g).has_value();
}

namespace {

// Shortest path between a and b inside the induced subgraph on s.
// Deterministic: BFS visiting nodes in ascending order.
std::vector<int> bfs_path(const Graph& g, NodeSet s, int a, int b) {
    std::vector<int> parent(g.node_count() + 1, 0);
    NodeSet seen = NodeSet::single(a);
    NodeSet frontier = seen;
    while (!frontier.empty() && !seen.contains(b)) {
        NodeSet next;
        for (int v : frontier) {
            for (int u : (g.neighbors(v) & s) - seen - next) {
                parent[u] = v;
                next.insert(u);
            }
        }
        seen |= next;
        frontier = next;
    }
    if (!seen.contains(b)) throw std::logic_error("bfs_path: endpoints not connected");
    std::vector<int> path;
    for (int v = b; v != a; v = parent[v]) path.push_back(v);
    path.push_back(a);
    std::reverse(path.begin(), path.end());
    return path;
}

// Removes chords from a path by shortcutting until the path is induced.
void shortcut_path(const Graph& g, std::vector<int>& path) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i + 2 < path.size() && !changed; ++i) {
            for (std::size_t j = path.size() - 1; j >= i + 2; --j) {
                if (g.has_edge(path[i], path[j])) {
                    path.erase(path.begin() + static_cast<long>(i) + 1,
                               path.begin() + static_cast<long>(j));
                    changed = true;
                    break;
                }
            }
        }
    }
}

} // namespace

ForbiddenWitness extract_cycle_or_diamond(const Graph& g, NodeSet j1, NodeSet j2) {
    if (!is_connected(g, j1) || !is_connected(g, j2))
        throw std::invalid_argument("extract_cycle_or_diamond: arguments must be tubes");
    NodeSet inter = j1 & j2;
    if (inter.empty())
        throw std::invalid_argument("extract_cycle_or_diamond: intersection is empty");
    std::vector<NodeSet> comps = components_within(g, inter);
    if (comps.size() < 2)
        throw std::invalid_argument("extract_cycle_or_diamond: intersection is connected");

    NodeSet first_comp = comps[0];
    NodeSet rest;
    for (std::size_t i = 1; i < comps.size(); ++i) rest |= comps[i];

    int x = first_comp.least();
    int xp = rest.least();
    std::vector<int> ypath = bfs_path(g, j1, x, xp);
    std::vector<int> zpath = bfs_path(g, j2, x, xp);

    NodeSet on_z;
    for (int v : zpath) on_z.insert(v);

    // p: last index on the y-path in the first component that also lies on the
    // z-path; q: first later index in another component that lies on the z-path.
    int p = -1;
    for (std::size_t i = 0; i < ypath.size(); ++i)
        if (first_comp.contains(ypath[i]) && on_z.contains(ypath[i])) p = static_cast<int>(i);
    int q = -1;
    for (std::size_t i = static_cast<std::size_t>(p) + 1; i < ypath.size(); ++i)
        if (rest.contains(ypath[i]) && on_z.contains(ypath[i])) {
            q = static_cast<int>(i);
            break;
        }

    int u = ypath[p], w = ypath[q];
    std::vector<int> path_a(ypath.begin() + p, ypath.begin() + q + 1);

    std::size_t zu = 0, zw = 0;
    for (std::size_t i = 0; i < zpath.size(); ++i) {
        if (zpath[i] == u) zu = i;
        if (zpath[i] == w) zw = i;
    }
    std::vector<int> path_b;
    if (zu < zw)
        path_b.assign(zpath.begin() + static_cast<long>(zu), zpath.begin() + static_cast<long>(zw) + 1);
    else {
        path_b.assign(zpath.begin() + static_cast<long>(zw), zpath.begin() + static_cast<long>(zu) + 1);
        std::reverse(path_b.begin(), path_b.end());
    }

    // Both paths become induced; cross edges between their interiors remain.
    shortcut_path(g, path_a);
    shortcut_path(g, path_b);

    // Cycle c[1..l]: c[1]=u, ..., c[k]=w along path_a, then back along path_b.
    int k = static_cast<int>(path_a.size());
    int l = k + static_cast<int>(path_b.size()) - 2;
    std::vector<int> c(static_cast<std::size_t>(l) + 1, 0);
    for (int i = 1; i <= k; ++i) c[i] = path_a[i - 1];
    for (int i = k + 1; i <= l; ++i) c[i] = path_b[static_cast<std::size_t>(l - i) + 1];

    auto adj = [&](int i, int j) { return g.has_edge(c[i], c[j]); };
    auto take = [&](int lo1, int hi1, int lo2, int hi2) {
        NodeSet s;
        for (int i = lo1; i <= hi1; ++i) s.insert(c[i]);
        for (int i = lo2; i <= hi2; ++i) s.insert(c[i]);
        return s;
    };

    ForbiddenWitness out{PatternKind::CycleGe4, NodeSet()};
    if (!adj(2, l)) {
        int imin = 0, jmax = 0;
        for (int i = 2; i <= k && imin == 0; ++i)
            for (int j = k + 1; j <= l; ++j)
                if (adj(i, j)) {
                    imin = i;
                    break;
                }
        for (int j = l; j >= k + 1; --j)
            if (adj(imin, j)) {
                jmax = j;
                break;
            }
        out.nodes = take(1, imin, jmax, l);
    } else if ([&] {
                   for (int j = k + 1; j <= l - 1; ++j)
                       if (adj(2, j)) return true;
                   return false;
               }()) {
        int jmax = 0;
        for (int j = l - 1; j >= k + 1; --j)
            if (adj(2, j)) {
                jmax = j;
                break;
            }
        if (jmax == l - 1) {
            out.kind = PatternKind::Diamond;
            out.nodes = NodeSet::of({c[1], c[2], c[l - 1], c[l]});
        } else {
            out.nodes = take(2, 2, jmax, l);
        }
    } else {
        int imin = 0, jmax = 0;
        for (int i = 3; i <= k && imin == 0; ++i)
            for (int j = k + 1; j <= l; ++j)
                if (adj(i, j)) {
                    imin = i;
                    break;
                }
        for (int j = l; j >= k + 1; --j)
            if (adj(imin, j)) {
                jmax = j;
                break;
            }
        if (imin == 3 && jmax == l) {
            out.kind = PatternKind::Diamond;
            out.nodes = NodeSet::of({c[1], c[2], c[3], c[l]});
        } else {
            out.nodes = take(2, imin, jmax, l);
        }
    }

    if (!witness_checks(g, out))
        throw std::logic_error("extract_cycle_or_diamond: produced set fails verification");
    return out;
}

} // namespace cubefan

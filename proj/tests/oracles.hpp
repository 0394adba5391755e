#pragma once

// Brute-force reference implementations used as oracles. Everything here
// recomputes from definitions, independent of the library's search
// strategies: plain DFS loops, full subset scans, explicit maximality tests.

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "cubefan/fan.hpp"
#include "cubefan/graph.hpp"

namespace oracle {

using cubefan::FacetLabel;
using cubefan::Graph;
using cubefan::NodeSet;

// DFS over an explicit node scan, no frontier masks.
inline bool connected(const Graph& g, NodeSet s) {
    if (s.empty()) return false;
    std::vector<int> stack{s.least()};
    NodeSet seen = NodeSet::single(s.least());
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u = 1; u <= g.node_count(); ++u) {
            if (s.contains(u) && !seen.contains(u) && g.has_edge(v, u)) {
                seen.insert(u);
                stack.push_back(u);
            }
        }
    }
    return seen == s;
}

// Filter of all 2^n - 1 nonempty subsets.
inline std::vector<NodeSet> all_tubes(const Graph& g) {
    std::vector<NodeSet> out;
    std::uint64_t top = 1ull << g.node_count();
    for (std::uint64_t mask = 1; mask < top; ++mask) {
        NodeSet s = NodeSet::from_raw(mask);
        if (connected(g, s)) out.push_back(s);
    }
    std::sort(out.begin(), out.end(), cubefan::lex_less);
    return out;
}

inline int induced_edges(const Graph& g, NodeSet s) {
    int count = 0;
    for (int u : s)
        for (int v : s)
            if (u < v && g.has_edge(u, v)) ++count;
    return count;
}

inline int induced_degree(const Graph& g, NodeSet s, int v) {
    int d = 0;
    for (int u : s)
        if (u != v && g.has_edge(u, v)) ++d;
    return d;
}

inline bool induces_long_cycle(const Graph& g, NodeSet s) {
    if (s.size() < 4) return false;
    for (int v : s)
        if (induced_degree(g, s, v) != 2) return false;
    return induced_edges(g, s) == s.size() && connected(g, s);
}

inline bool induces_diamond(const Graph& g, NodeSet s) {
    return s.size() == 4 && induced_edges(g, s) == 5;
}

inline bool induces_claw(const Graph& g, NodeSet s) {
    if (s.size() != 4 || induced_edges(g, s) != 3) return false;
    for (int v : s)
        if (induced_degree(g, s, v) == 3) return true;
    return false;
}

inline bool any_pattern(const Graph& g, NodeSet s) {
    return induces_long_cycle(g, s) || induces_diamond(g, s) || induces_claw(g, s);
}

// Full subset scan for any induced C>=4 / diamond / claw.
inline bool has_forbidden(const Graph& g) {
    std::uint64_t top = 1ull << g.node_count();
    for (std::uint64_t mask = 1; mask < top; ++mask) {
        NodeSet s = NodeSet::from_raw(mask);
        if (s.size() >= 4 && any_pattern(g, s)) return true;
    }
    return false;
}

// Smallest (node count, lex) node set inducing one of the three patterns.
inline std::optional<NodeSet> min_forbidden(const Graph& g) {
    std::optional<NodeSet> best;
    std::uint64_t top = 1ull << g.node_count();
    for (std::uint64_t mask = 1; mask < top; ++mask) {
        NodeSet s = NodeSet::from_raw(mask);
        if (s.size() < 4 || !any_pattern(g, s)) continue;
        if (!best || cubefan::lex_less(s, *best)) best = s;
    }
    return best;
}

// Facet intersection restated from scratch.
inline bool compat(const Graph& g, const FacetLabel& a, const FacetLabel& b) {
    if (!a.is_tube() && !b.is_tube()) return true;
    if (a.is_tube() && !b.is_tube()) return !a.tube.contains(b.bar);
    if (!a.is_tube() && b.is_tube()) return !b.tube.contains(a.bar);
    NodeSet i = a.tube, j = b.tube;
    if (i.subset_of(j) || j.subset_of(i)) return true;
    return !connected(g, i | j);
}

// Brute force over all 2^L label subsets: pairwise compatible and maximal.
// Only usable on small graphs (L <= ~20).
inline std::vector<std::vector<FacetLabel>> maximal_nerves(const Graph& g) {
    std::vector<FacetLabel> labels;
    for (NodeSet t : all_tubes(g)) labels.push_back(FacetLabel::make_tube(t));
    for (int v = 1; v <= g.node_count(); ++v) labels.push_back(FacetLabel::make_bar(v));
    int count = static_cast<int>(labels.size());

    std::vector<std::vector<bool>> ok(count, std::vector<bool>(count, false));
    for (int i = 0; i < count; ++i)
        for (int j = 0; j < count; ++j)
            if (i != j) ok[i][j] = compat(g, labels[i], labels[j]);

    std::vector<std::vector<FacetLabel>> out;
    std::uint64_t top = 1ull << count;
    for (std::uint64_t mask = 1; mask < top; ++mask) {
        std::vector<int> members;
        for (int i = 0; i < count; ++i)
            if ((mask >> i) & 1) members.push_back(i);
        bool clique = true;
        for (std::size_t a = 0; a < members.size() && clique; ++a)
            for (std::size_t b = a + 1; b < members.size(); ++b)
                if (!ok[members[a]][members[b]]) {
                    clique = false;
                    break;
                }
        if (!clique) continue;
        bool maximal = true;
        for (int cand = 0; cand < count && maximal; ++cand) {
            if ((mask >> cand) & 1) continue;
            bool extends = true;
            for (int m : members)
                if (!ok[cand][m]) {
                    extends = false;
                    break;
                }
            if (extends) maximal = false;
        }
        if (!maximal) continue;
        std::vector<FacetLabel> set;
        for (int m : members) set.push_back(labels[m]);
        out.push_back(std::move(set));
    }
    return out;
}

inline Graph random_graph(std::mt19937_64& rng, int n, double edge_prob) {
    Graph g(n);
    std::bernoulli_distribution flip(edge_prob);
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
            if (flip(rng)) g.add_edge(u, v);
    return g;
}

struct ExtractionTriple {
    Graph g;
    NodeSet j1, j2;
};

// Random (G, J, J') with J, J' tubes, J intersect J' nonempty and
// disconnected. Resamples graphs until one admits such a pair.
inline ExtractionTriple sample_extraction_triple(std::mt19937_64& rng, int max_n) {
    const double probs[] = {0.3, 0.5, 0.7};
    while (true) {
        int n = 4 + static_cast<int>(rng() % static_cast<unsigned>(max_n - 3));
        Graph g = random_graph(rng, n, probs[rng() % 3]);
        std::vector<NodeSet> tubes = cubefan::enumerate_tubes(g);
        std::vector<std::pair<NodeSet, NodeSet>> candidates;
        for (std::size_t a = 0; a < tubes.size(); ++a) {
            for (std::size_t b = a + 1; b < tubes.size(); ++b) {
                NodeSet inter = tubes[a] & tubes[b];
                if (inter.empty()) continue;
                if (cubefan::components_within(g, inter).size() >= 2)
                    candidates.emplace_back(tubes[a], tubes[b]);
            }
        }
        if (candidates.empty()) continue;
        auto& pick = candidates[rng() % candidates.size()];
        return {g, pick.first, pick.second};
    }
}

} // namespace oracle

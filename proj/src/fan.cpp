#include "cubefan/fan.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <stdexcept>
#include <unordered_set>

#include "pairing.hpp"

namespace cubefan {

bool label_less(const FacetLabel& a, const FacetLabel& b) {
    if (a.is_tube() != b.is_tube()) return a.is_tube();
    if (a.is_tube()) return lex_less(a.tube, b.tube);
    return a.bar < b.bar;
}

std::string label_to_string(const FacetLabel& label) {
    if (label.is_tube()) return to_string(label.tube);
    return "~" + std::to_string(label.bar);
}

LatticeVector ray_vector(const FacetLabel& label, int n) {
    LatticeVector v(static_cast<std::size_t>(n), 0);
    if (label.is_tube()) {
        for (int i : label.tube) v[static_cast<std::size_t>(i) - 1] = 1;
    } else {
        v[static_cast<std::size_t>(label.bar) - 1] = -1;
    }
    return v;
}

bool compatible(const FacetLabel& a, const FacetLabel& b, const Graph& g) {
    if (!a.is_tube() && !b.is_tube()) return true;
    if (a.is_tube() && b.is_tube()) {
        if (a.tube.subset_of(b.tube) || b.tube.subset_of(a.tube)) return true;
        return !is_connected(g, a.tube | b.tube);
    }
    const FacetLabel& tube = a.is_tube() ? a : b;
    const FacetLabel& bar = a.is_tube() ? b : a;
    return !tube.tube.contains(bar.bar);
}

int Fan::label_index(const FacetLabel& label) const {
    if (label.is_tube()) {
        auto it = tube_index_.find(label.tube.raw());
        return it == tube_index_.end() ? -1 : it->second;
    }
    if (label.bar < 1 || label.bar > graph.node_count()) return -1;
    return tube_count + label.bar - 1;
}

namespace {

std::vector<FacetLabel> make_labels(const Graph& g, const std::vector<NodeSet>& tubes) {
    std::vector<FacetLabel> labels;
    labels.reserve(tubes.size() + static_cast<std::size_t>(g.node_count()));
    for (NodeSet t : tubes) labels.push_back(FacetLabel::make_tube(t));
    for (int v = 1; v <= g.node_count(); ++v) labels.push_back(FacetLabel::make_bar(v));
    return labels;
}

// Pivoting Bron-Kerbosch over a bit-mask adjacency matrix.
class CliqueEnumerator {
public:
    explicit CliqueEnumerator(int count)
        : count_(count),
          words_((count + 63) / 64),
          adj_(static_cast<std::size_t>(count) * words_, 0) {}

    void add_edge(int i, int j) {
        adj_[static_cast<std::size_t>(i) * words_ + j / 64] |= 1ull << (j % 64);
        adj_[static_cast<std::size_t>(j) * words_ + i / 64] |= 1ull << (i % 64);
    }

    std::vector<std::vector<int>> run() {
        out_.clear();
        if (count_ == 0) return out_;
        arena_.assign(static_cast<std::size_t>(count_ + 2) * 2 * words_, 0);
        std::uint64_t* p = level_p(0);
        for (int v = 0; v < count_; ++v) p[v / 64] |= 1ull << (v % 64);
        expand(0);
        std::sort(out_.begin(), out_.end());
        return out_;
    }

private:
    const std::uint64_t* row(int v) const { return &adj_[static_cast<std::size_t>(v) * words_]; }
    std::uint64_t* level_p(int depth) { return &arena_[static_cast<std::size_t>(depth) * 2 * words_]; }
    std::uint64_t* level_x(int depth) {
        return &arena_[static_cast<std::size_t>(depth) * 2 * words_ + words_];
    }

    static bool any(const std::uint64_t* s, int words) {
        for (int w = 0; w < words; ++w)
            if (s[w]) return true;
        return false;
    }

    int overlap(const std::uint64_t* s, const std::uint64_t* t) const {
        int c = 0;
        for (int w = 0; w < words_; ++w) c += std::popcount(s[w] & t[w]);
        return c;
    }

    void expand(int depth) {
        std::uint64_t* p = level_p(depth);
        std::uint64_t* x = level_x(depth);
        if (!any(p, words_) && !any(x, words_)) {
            out_.push_back(clique_);
            std::sort(out_.back().begin(), out_.back().end());
            return;
        }

        int pivot = -1, best = -1;
        for (int w = 0; w < words_; ++w) {
            std::uint64_t both = p[w] | x[w];
            while (both) {
                int v = w * 64 + std::countr_zero(both);
                both &= both - 1;
                int c = overlap(p, row(v));
                if (c > best) {
                    best = c;
                    pivot = v;
                }
            }
        }

        std::vector<int> candidates;
        const std::uint64_t* piv = row(pivot);
        for (int w = 0; w < words_; ++w) {
            std::uint64_t rest = p[w] & ~piv[w];
            while (rest) {
                candidates.push_back(w * 64 + std::countr_zero(rest));
                rest &= rest - 1;
            }
        }

        for (int v : candidates) {
            const std::uint64_t* nv = row(v);
            std::uint64_t* cp = level_p(depth + 1);
            std::uint64_t* cx = level_x(depth + 1);
            for (int w = 0; w < words_; ++w) {
                cp[w] = p[w] & nv[w];
                cx[w] = x[w] & nv[w];
            }
            clique_.push_back(v);
            expand(depth + 1);
            clique_.pop_back();
            p[v / 64] &= ~(1ull << (v % 64));
            x[v / 64] |= 1ull << (v % 64);
        }
    }

    int count_;
    int words_;
    std::vector<std::uint64_t> adj_;
    std::vector<std::uint64_t> arena_;
    std::vector<int> clique_;
    std::vector<std::vector<int>> out_;
};

std::vector<std::vector<int>> nerve_cones(const Graph& g, const std::vector<FacetLabel>& labels) {
    int count = static_cast<int>(labels.size());
    CliqueEnumerator cliques(count);
    for (int i = 0; i < count; ++i)
        for (int j = i + 1; j < count; ++j)
            if (compatible(labels[i], labels[j], g)) cliques.add_edge(i, j);
    std::vector<std::vector<int>> cones = cliques.run();

    int n = g.node_count();
    for (const std::vector<int>& cone : cones) {
        if (static_cast<int>(cone.size()) != n) {
            std::string msg = "maximal compatible set of size " + std::to_string(cone.size()) +
                              ", expected " + std::to_string(n) + ": {";
            for (std::size_t i = 0; i < cone.size(); ++i)
                msg += (i ? " " : "") + label_to_string(labels[cone[i]]);
            msg += "}";
            throw FanIntegrityError(msg);
        }
    }
    return cones;
}

// FNV over the id sequence; used only for deterministic sampling/membership.
struct IdVecHash {
    std::size_t operator()(const std::vector<int>& v) const {
        std::size_t h = 1469598103934665603ull;
        for (int x : v) {
            h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return h;
    }
};

} // namespace

std::vector<std::vector<FacetLabel>> maximal_nerve_sets(const Graph& g) {
    if (g.node_count() < 1)
        throw std::invalid_argument("maximal_nerve_sets: need at least one node");
    std::vector<FacetLabel> labels = make_labels(g, enumerate_tubes(g));
    std::vector<std::vector<FacetLabel>> out;
    for (const std::vector<int>& cone : nerve_cones(g, labels)) {
        std::vector<FacetLabel> set;
        set.reserve(cone.size());
        for (int id : cone) set.push_back(labels[id]);
        out.push_back(std::move(set));
    }
    return out;
}

IntMatrix cone_matrix(const Fan& f, const std::vector<int>& cone) {
    int n = f.graph.node_count();
    IntMatrix m(n, static_cast<int>(cone.size()));
    for (int c = 0; c < static_cast<int>(cone.size()); ++c)
        for (int r = 0; r < n; ++r) m.at(r, c) = f.rays[cone[c]][r];
    return m;
}

VerifyReport verify_fan(const Fan& f) {
    VerifyReport rep;
    int n = f.graph.node_count();

    bool sizes_ok = true;
    for (std::size_t ci = 0; ci < f.maximal_cones.size(); ++ci) {
        const std::vector<int>& cone = f.maximal_cones[ci];
        if (static_cast<int>(cone.size()) != n) {
            rep.issues.push_back("cone #" + std::to_string(ci) + " has " +
                                 std::to_string(cone.size()) + " rays, expected " +
                                 std::to_string(n));
            sizes_ok = false;
            continue;
        }
        std::int64_t d = det(cone_matrix(f, cone));
        if (d != 1 && d != -1)
            rep.issues.push_back("cone #" + std::to_string(ci) +
                                 " generator determinant " + std::to_string(d) +
                                 ", expected +-1");
    }

    if (sizes_ok) {
        for (const detail::WallSite& site :
             detail::wall_sites(f.maximal_cones, static_cast<int>(f.labels.size()))) {
            if (site.completions.size() != 2) {
                std::string msg = "wall {";
                for (std::size_t i = 0; i < site.base.size(); ++i)
                    msg += (i ? " " : "") + label_to_string(f.labels[site.base[i]]);
                msg += "} lies in " + std::to_string(site.completions.size()) +
                       " maximal cones, expected 2";
                rep.issues.push_back(msg);
            }
        }
    }

    // Flagness spot-check: a sampled pairwise-compatible set, greedily
    // extended, must land on an enumerated maximal cone.
    std::unordered_set<std::vector<int>, IdVecHash> cone_set(f.maximal_cones.begin(),
                                                             f.maximal_cones.end());
    std::mt19937_64 rng(0x5eedull ^ std::hash<std::string>{}(to_graph6(f.graph)));
    std::vector<int> order(f.labels.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    for (int sample = 0; sample < 16; ++sample) {
        std::shuffle(order.begin(), order.end(), rng);
        std::vector<int> grown;
        for (int id : order) {
            bool ok = true;
            for (int member : grown)
                if (!compatible(f.labels[id], f.labels[member], f.graph)) {
                    ok = false;
                    break;
                }
            if (ok) grown.push_back(id);
        }
        std::sort(grown.begin(), grown.end());
        if (!cone_set.count(grown)) {
            std::string msg = "pairwise-compatible set {";
            for (std::size_t i = 0; i < grown.size(); ++i)
                msg += (i ? " " : "") + label_to_string(f.labels[grown[i]]);
            msg += "} is not a maximal cone";
            rep.issues.push_back(msg);
        }
    }
    return rep;
}

Fan build_fan(const Graph& g) {
    int n = g.node_count();
    if (n < 1) throw std::invalid_argument("build_fan: need at least one node");

    Fan f;
    f.graph = g;
    std::vector<NodeSet> tubes = enumerate_tubes(g);
    f.tube_count = static_cast<int>(tubes.size());
    f.labels = make_labels(g, tubes);
    f.rays.reserve(f.labels.size());
    for (const FacetLabel& label : f.labels) f.rays.push_back(ray_vector(label, n));
    for (int i = 0; i < f.tube_count; ++i) f.tube_index_.emplace(tubes[i].raw(), i);

    f.maximal_cones = nerve_cones(g, f.labels);

    VerifyReport rep = verify_fan(f);
    if (!rep.ok()) {
        std::string msg = "fan verification failed:";
        for (const std::string& issue : rep.issues) msg += "\n  " + issue;
        throw FanIntegrityError(msg);
    }
    return f;
}

} // namespace cubefan

#include "cubefan/census.hpp"

#include <atomic>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "cubefan/forbidden.hpp"
#include "cubefan/json_io.hpp"

namespace cubefan {

FanClass classify_graph(const Graph& g) {
    if (graph_fano_test(g)) return FanClass::Fano;
    if (graph_weakfano_test(g)) return FanClass::WeakFanoNotFano;
    return FanClass::NotWeakFano;
}

CensusRecord census_record(const Graph& g) {
    CensusRecord r;
    r.graph6 = to_graph6(g);
    r.n = g.node_count();
    r.edges = g.edge_count();

    Fan f = build_fan(g);
    r.tube_count = f.tube_count;
    r.cone_count = static_cast<long long>(f.maximal_cones.size());

    Classification cls = classify_fan(f);
    r.wall_count = cls.wall_count;
    r.min_number = cls.min_number;
    r.fan_class = cls.kind;
    r.graph_class = classify_graph(g);
    r.agree = r.fan_class == r.graph_class;
    return r;
}

std::uint64_t labeled_graph_count(int n) {
    if (n < 1) throw std::invalid_argument("labeled_graph_count: n must be >= 1");
    int pairs = n * (n - 1) / 2;
    if (pairs >= 63)
        throw CapacityError("labeled enumeration over " + std::to_string(pairs) +
                            " node pairs does not fit the mask counter");
    return 1ull << pairs;
}

Graph graph_from_mask(int n, std::uint64_t mask) {
    Graph g(n);
    int t = 0;
    for (int j = 2; j <= n; ++j)
        for (int i = 1; i < j; ++i, ++t)
            if ((mask >> t) & 1) g.add_edge(i, j);
    return g;
}

void enumerate_graphs(int n, const std::function<void(const Graph&)>& fn,
                      bool connected_only) {
    std::uint64_t total = labeled_graph_count(n);
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        Graph g = graph_from_mask(n, mask);
        if (connected_only && !is_connected(g, g.nodes())) continue;
        fn(g);
    }
}

namespace {

struct Chunk {
    std::vector<CensusRecord> records;
    std::exception_ptr error;
};

} // namespace

CrosscheckReport cross_validate(const CrosscheckOptions& opts, std::ostream* census_out) {
    if (opts.max_nodes < 1)
        throw std::invalid_argument("cross_validate: max_nodes must be >= 1");
    int jobs = std::max(opts.jobs, 1);

    CrosscheckReport rep;
    rep.per_size.assign(static_cast<std::size_t>(opts.max_nodes) + 1, 0);

    for (int n = 1; n <= opts.max_nodes; ++n) {
        std::uint64_t total = labeled_graph_count(n);
        const std::uint64_t chunk_size = 1024;
        std::uint64_t nchunks = (total + chunk_size - 1) / chunk_size;

        std::vector<Chunk> chunks(nchunks);
        std::atomic<std::uint64_t> next{0};

        auto worker = [&]() {
            while (true) {
                std::uint64_t c = next.fetch_add(1);
                if (c >= nchunks) return;
                Chunk& out = chunks[c];
                try {
                    std::uint64_t lo = c * chunk_size;
                    std::uint64_t hi = std::min(total, lo + chunk_size);
                    for (std::uint64_t mask = lo; mask < hi; ++mask) {
                        Graph g = graph_from_mask(n, mask);
                        if (opts.connected_only && !is_connected(g, g.nodes())) continue;
                        out.records.push_back(census_record(g));
                    }
                } catch (...) {
                    out.error = std::current_exception();
                    return;
                }
            }
        };

        int nthreads = static_cast<int>(std::min<std::uint64_t>(jobs, nchunks));
        if (nthreads <= 1) {
            worker();
        } else {
            std::vector<std::thread> pool;
            pool.reserve(nthreads);
            for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
            for (std::thread& t : pool) t.join();
        }

        // Merge in mask order: deterministic regardless of worker count.
        for (Chunk& c : chunks) {
            if (c.error) std::rethrow_exception(c.error);
            for (const CensusRecord& r : c.records) {
                ++rep.graphs;
                ++rep.per_size[static_cast<std::size_t>(n)];
                ++rep.buckets[static_cast<std::size_t>(r.fan_class)];
                if (census_out) *census_out << census_record_to_json(r).dump() << '\n';
                if (!r.agree) {
                    ++rep.disagreements;
                    throw DisagreementError("graph " + r.graph6 + ": fan classification " +
                                            fan_class_name(r.fan_class) +
                                            ", graph classification " +
                                            fan_class_name(r.graph_class));
                }
            }
        }
    }
    return rep;
}

} // namespace cubefan

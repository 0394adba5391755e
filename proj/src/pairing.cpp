#include "pairing.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

namespace cubefan::detail {

namespace {

std::vector<int> base_of(const std::vector<int>& cone, int dropped) {
    std::vector<int> base;
    base.reserve(cone.size() - 1);
    for (int id : cone)
        if (id != dropped) base.push_back(id);
    return base;
}

// Fast path: the n-1 base indices fit one 128-bit key.
std::vector<WallSite> sites_packed(const std::vector<std::vector<int>>& cones, int bits) {
    struct Entry {
        unsigned __int128 key;
        int cone;
        int dropped;
    };
    std::size_t n = cones.empty() ? 0 : cones[0].size();
    std::vector<Entry> entries;
    entries.reserve(cones.size() * n);
    for (std::size_t ci = 0; ci < cones.size(); ++ci) {
        const std::vector<int>& cone = cones[ci];
        for (std::size_t d = 0; d < cone.size(); ++d) {
            unsigned __int128 key = 0;
            for (std::size_t i = 0; i < cone.size(); ++i)
                if (i != d) key = (key << bits) | static_cast<unsigned>(cone[i]);
            entries.push_back({key, static_cast<int>(ci), cone[d]});
        }
    }
    std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
        if (a.key != b.key) return a.key < b.key;
        if (a.cone != b.cone) return a.cone < b.cone;
        return a.dropped < b.dropped;
    });

    std::vector<WallSite> out;
    std::size_t i = 0;
    while (i < entries.size()) {
        std::size_t j = i;
        while (j < entries.size() && entries[j].key == entries[i].key) ++j;
        WallSite site;
        site.base = base_of(cones[entries[i].cone], entries[i].dropped);
        for (std::size_t t = i; t < j; ++t)
            site.completions.emplace_back(entries[t].cone, entries[t].dropped);
        out.push_back(std::move(site));
        i = j;
    }
    return out;
}

std::vector<WallSite> sites_generic(const std::vector<std::vector<int>>& cones) {
    struct Entry {
        std::vector<int> base;
        int cone;
        int dropped;
    };
    std::size_t n = cones.empty() ? 0 : cones[0].size();
    std::vector<Entry> entries;
    entries.reserve(cones.size() * n);
    for (std::size_t ci = 0; ci < cones.size(); ++ci)
        for (int dropped : cones[ci])
            entries.push_back({base_of(cones[ci], dropped), static_cast<int>(ci), dropped});
    std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
        if (a.base != b.base) return a.base < b.base;
        if (a.cone != b.cone) return a.cone < b.cone;
        return a.dropped < b.dropped;
    });

    std::vector<WallSite> out;
    std::size_t i = 0;
    while (i < entries.size()) {
        std::size_t j = i;
        while (j < entries.size() && entries[j].base == entries[i].base) ++j;
        WallSite site;
        site.base = entries[i].base;
        for (std::size_t t = i; t < j; ++t)
            site.completions.emplace_back(entries[t].cone, entries[t].dropped);
        out.push_back(std::move(site));
        i = j;
    }
    return out;
}

} // namespace

std::vector<WallSite> wall_sites(const std::vector<std::vector<int>>& cones, int label_count) {
    if (cones.empty()) return {};
    int bits = std::bit_width(static_cast<unsigned>(std::max(label_count, 1)));
    long key_bits = static_cast<long>(bits) * (static_cast<long>(cones[0].size()) - 1);
    if (key_bits <= 120) return sites_packed(cones, bits);
    return sites_generic(cones);
}

} // namespace cubefan::detail

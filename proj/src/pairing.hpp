#pragma once

#include <utility>
#include <vector>

namespace cubefan::detail {

struct WallSite {
    std::vector<int> base;                        // n-1 ray indices, ascending
    std::vector<std::pair<int, int>> completions; // (cone index, dropped ray index)
};

// Groups the (n-1)-subsets of the maximal cones; each subset appears once,
// carrying every cone that completes it. Cones must all have the same size.
// Output sorted by base, completions by (cone, dropped).
std::vector<WallSite> wall_sites(const std::vector<std::vector<int>>& cones, int label_count);

} // namespace cubefan::detail

#include "cubefan/int_linalg.hpp"

#include <utility>

namespace cubefan {

namespace {

// Bareiss forward elimination on the leading `size` columns of m, extra
// columns carried along. Returns the sign from row swaps, 0 if singular.
int bareiss(IntMatrix& m, int size) {
    int sign = 1;
    std::int64_t prev = 1;
    for (int k = 0; k < size; ++k) {
        if (m.at(k, k) == 0) {
            int swap = -1;
            for (int r = k + 1; r < m.rows; ++r)
                if (m.at(r, k) != 0) {
                    swap = r;
                    break;
                }
            if (swap < 0) return 0;
            for (int c = 0; c < m.cols; ++c) std::swap(m.at(k, c), m.at(swap, c));
            sign = -sign;
        }
        for (int r = k + 1; r < m.rows; ++r) {
            for (int c = k + 1; c < m.cols; ++c)
                m.at(r, c) = (m.at(r, c) * m.at(k, k) - m.at(r, k) * m.at(k, c)) / prev;
            m.at(r, k) = 0;
        }
        prev = m.at(k, k);
    }
    return sign;
}

} // namespace

std::int64_t det(IntMatrix m) {
    if (m.rows != m.cols) return 0;
    if (m.rows == 0) return 1;
    int sign = bareiss(m, m.rows);
    return sign * m.at(m.rows - 1, m.rows - 1);
}

std::optional<std::vector<std::int64_t>> solve_integer(IntMatrix a,
                                                       std::vector<std::int64_t> b) {
    int n = a.rows;
    if (n != a.cols || static_cast<int>(b.size()) != n) return std::nullopt;
    if (n == 0) return std::vector<std::int64_t>{};

    IntMatrix aug(n, n + 1);
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) aug.at(r, c) = a.at(r, c);
        aug.at(r, n) = b[r];
    }
    if (bareiss(aug, n) == 0) return std::nullopt;

    // Back substitution; every division must be exact for an integral solution.
    std::vector<std::int64_t> x(static_cast<std::size_t>(n), 0);
    for (int r = n - 1; r >= 0; --r) {
        std::int64_t acc = aug.at(r, n);
        for (int c = r + 1; c < n; ++c) acc -= aug.at(r, c) * x[c];
        if (acc % aug.at(r, r) != 0) return std::nullopt;
        x[r] = acc / aug.at(r, r);
    }
    return x;
}

} // namespace cubefan

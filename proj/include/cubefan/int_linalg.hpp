#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace cubefan {

// Dense integer matrix, row-major. Sized for cone computations (n <= 64);
// all arithmetic is exact, no floating point.
struct IntMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<std::int64_t> a;

    IntMatrix() = default;
    IntMatrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0) {}

    std::int64_t& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
    std::int64_t at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }
};

// Determinant by fraction-free (Bareiss) elimination. Intermediate values are
// minors of the input, so entries in {-1,0,1} at desk scale stay far from
// overflow.
std::int64_t det(IntMatrix m);

// Solves A x = b for an integral x, A square. Returns nullopt if A is
// singular or the solution is not integral.
std::optional<std::vector<std::int64_t>> solve_integer(IntMatrix a,
                                                       std::vector<std::int64_t> b);

} // namespace cubefan

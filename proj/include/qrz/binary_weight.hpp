#pragma once

// Minimum weight of a binary cyclic code by Gray-code enumeration over
// bitmask words. Kept apart from the Z_{2^m} machinery on purpose: it serves
// as the binary reference when comparing Hensel lifts against GF(2).

#include <bit>
#include <cstdint>
#include <vector>

#include "qrz/error.hpp"
#include "qrz/modring.hpp"

namespace qrz {

/// Generator g over GF(2), low degree first, of a cyclic code of odd length
/// n <= 64. The code is spanned by x^i g(x), i < n - deg g.
inline unsigned binary_cyclic_min_weight(const std::vector<u64>& g, unsigned n, u64 budget) {
    int deg = static_cast<int>(g.size()) - 1;
    while (deg >= 0 && (g[static_cast<std::size_t>(deg)] & 1) == 0) --deg;
    if (deg < 0 || n > 64 || static_cast<unsigned>(deg) >= n)
        throw error(errc::shape_mismatch, "binary generator must be nonzero with degree below n <= 64");
    u64 gmask = 0;
    for (int i = 0; i <= deg; ++i) gmask |= (g[static_cast<std::size_t>(i)] & 1) << i;
    const unsigned dim = n - static_cast<unsigned>(deg);
    if (dim >= 63 || (u64{1} << dim) > budget) throw error(errc::budget_exceeded, "binary code too large");
    std::vector<u64> basis(dim);
    for (unsigned i = 0; i < dim; ++i) basis[i] = gmask << i;
    unsigned best = n + 1;
    u64 word = 0;
    for (u64 step = 1; step < (u64{1} << dim); ++step) {
        word ^= basis[static_cast<unsigned>(std::countr_zero(step))];
        best = std::min<unsigned>(best, static_cast<unsigned>(std::popcount(word)));
    }
    return best;
}

}  // namespace qrz

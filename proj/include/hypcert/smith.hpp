#pragma once

#include <cstddef>
#include <vector>

#include "hypcert/arith.hpp"

namespace hypcert::linalg {

/// Dense integer matrix, row-major.
struct IntMatrix {
    std::size_t rows = 0, cols = 0;
    std::vector<BigInt> a;

    IntMatrix() = default;
    IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}

    BigInt& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    const BigInt& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
};

/// Nonzero elementary divisors d_1 | d_2 | ... of the Smith normal form,
/// all positive. Their count is the rank.
std::vector<BigInt> smith_elementary_divisors(IntMatrix m);

std::size_t rank_mod_p(const IntMatrix& m, long long p);

} // namespace hypcert::linalg

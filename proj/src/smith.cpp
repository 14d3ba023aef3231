#include "hypcert/smith.hpp"

#include <stdexcept>

namespace hypcert::linalg {

namespace {

using boost::multiprecision::abs;

// Index of an entry with minimal nonzero absolute value in the submatrix
// starting at (t, t), or rows if the submatrix is zero.
std::pair<std::size_t, std::size_t> min_nonzero(const IntMatrix& m, std::size_t t) {
    std::size_t bi = m.rows, bj = m.cols;
    BigInt best = 0;
    for (std::size_t i = t; i < m.rows; ++i) {
        for (std::size_t j = t; j < m.cols; ++j) {
            const BigInt& v = m.at(i, j);
            if (v == 0)
                continue;
            BigInt a = abs(v);
            if (bi == m.rows || a < best) {
                best = a;
                bi = i;
                bj = j;
            }
        }
    }
    return {bi, bj};
}

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
    if (a == b)
        return;
    for (std::size_t j = 0; j < m.cols; ++j)
        std::swap(m.at(a, j), m.at(b, j));
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
    if (a == b)
        return;
    for (std::size_t i = 0; i < m.rows; ++i)
        std::swap(m.at(i, a), m.at(i, b));
}

// Nearest-integer quotient keeps entries small during reduction.
BigInt rounded_quotient(const BigInt& a, const BigInt& b) {
    BigInt q = a / b;
    BigInt r = a - q * b;
    if (2 * abs(r) > abs(b))
        q += (a < 0) == (b < 0) ? 1 : -1;
    return q;
}

} // namespace

std::vector<BigInt> smith_elementary_divisors(IntMatrix m) {
    std::vector<BigInt> divisors;
    const std::size_t bound = std::min(m.rows, m.cols);

    for (std::size_t t = 0; t < bound; ++t) {
        for (;;) {
            auto [pi, pj] = min_nonzero(m, t);
            if (pi == m.rows)
                goto done; // submatrix is zero
            swap_rows(m, t, pi);
            swap_cols(m, t, pj);

            bool reduced = false;
            for (std::size_t i = t + 1; i < m.rows; ++i) {
                if (m.at(i, t) == 0)
                    continue;
                BigInt q = rounded_quotient(m.at(i, t), m.at(t, t));
                if (q != 0)
                    for (std::size_t j = t; j < m.cols; ++j)
                        m.at(i, j) -= q * m.at(t, j);
                if (m.at(i, t) != 0)
                    reduced = true;
            }
            for (std::size_t j = t + 1; j < m.cols; ++j) {
                if (m.at(t, j) == 0)
                    continue;
                BigInt q = rounded_quotient(m.at(t, j), m.at(t, t));
                if (q != 0)
                    for (std::size_t i = t; i < m.rows; ++i)
                        m.at(i, j) -= q * m.at(i, t);
                if (m.at(t, j) != 0)
                    reduced = true;
            }
            if (reduced)
                continue; // pivot shrank somewhere, pick again

            // Row and column are clear; make the pivot divide the rest.
            bool fixed = true;
            for (std::size_t i = t + 1; i < m.rows && fixed; ++i)
                for (std::size_t j = t + 1; j < m.cols && fixed; ++j)
                    if (m.at(i, j) % m.at(t, t) != 0) {
                        for (std::size_t jj = t; jj < m.cols; ++jj)
                            m.at(t, jj) += m.at(i, jj);
                        fixed = false;
                    }
            if (fixed)
                break;
        }
        divisors.push_back(abs(m.at(t, t)));
    }

done:
    return divisors;
}

std::size_t rank_mod_p(const IntMatrix& m, long long p) {
    if (p < 2)
        throw std::domain_error("rank_mod_p: modulus must be at least 2");
    std::vector<std::vector<long long>> a(m.rows, std::vector<long long>(m.cols));
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j) {
            BigInt r = m.at(i, j) % p;
            if (r < 0)
                r += p;
            a[i][j] = r.convert_to<long long>();
        }

    auto inv_mod = [p](long long x) {
        long long result = 1, b = x % p, e = p - 2; // p prime
        while (e > 0) {
            if (e & 1)
                result = result * b % p;
            b = b * b % p;
            e >>= 1;
        }
        return result;
    };

    std::size_t rank = 0;
    for (std::size_t col = 0; col < m.cols && rank < m.rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < m.rows && a[pivot][col] == 0)
            ++pivot;
        if (pivot == m.rows)
            continue;
        std::swap(a[rank], a[pivot]);
        long long inv = inv_mod(a[rank][col]);
        for (std::size_t j = col; j < m.cols; ++j)
            a[rank][j] = a[rank][j] * inv % p;
        for (std::size_t i = 0; i < m.rows; ++i) {
            if (i == rank || a[i][col] == 0)
                continue;
            long long f = a[i][col];
            for (std::size_t j = col; j < m.cols; ++j)
                a[i][j] = ((a[i][j] - f * a[rank][j]) % p + p) % p;
        }
        ++rank;
    }
    return rank;
}

} // namespace hypcert::linalg

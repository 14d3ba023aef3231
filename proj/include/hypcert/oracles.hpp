#pragma once

#include <string>
#include <vector>

#include "hypcert/arith.hpp"
#include "hypcert/poincare.hpp"
#include "hypcert/smith.hpp"

// Independent brute-force oracles. Nothing here calls the implementation
// path it is used to check; the CLI's verify-oracles command and the test
// suites both consume these.
namespace hypcert::oracles {

/// Number of Lyndon words of length k over an n-letter alphabet, by
/// enumerating all n^k words and testing minimality among rotations.
long long lyndon_count(int n, int k);

/// Gaussian binomial [n choose k]_q as a polynomial in q, via the product
/// formula prod_i (1 - q^{n-k+i}) / (1 - q^i) with exact long division.
std::vector<long long> gaussian_binomial_by_division(long long n, long long k);

/// Elementary divisor chain d_i = g_i / g_{i-1} from gcds g_i of all i x i
/// minors. Exponential in matrix size; small shapes only.
std::vector<BigInt> divisors_by_minor_gcds(const linalg::IntMatrix& m, std::size_t up_to);

struct OracleReport {
    std::string name;
    bool passed = false;
    long long comparisons = 0;
    std::string detail;
};

enum class Scope { Numtheory, Freelie, All };

std::vector<OracleReport> run_oracles(Scope scope);

} // namespace hypcert::oracles

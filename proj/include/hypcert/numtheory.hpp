#pragma once

#include <vector>

#include "hypcert/arith.hpp"

namespace hypcert::numtheory {

/// Mobius function: 1 at 1, 0 on non-squarefree inputs, (-1)^#primes otherwise.
/// Throws std::domain_error for s < 1.
int mobius(long long s);

/// Trial division; inputs are desk-scale throughout.
bool is_prime(long long n);

/// Divisors of n in ascending order, n >= 1.
std::vector<long long> divisors(long long n);

/// Largest e with p^e | n. Requires p prime and n != 0.
long long padic_val(long long p, long long n);

/// Witt formula W_n(k) = (1/k) sum_{d|k} mu(d) n^{k/d}.
/// Divisibility of the inner sum by k is asserted, not assumed.
BigInt witt(long long n, long long k);

/// W_n(k) * k / n^k as an exact rational.
Rational witt_growth_ratio(long long n, long long k);

/// p-adic valuation of the Adams m-function at an even argument 2t.
/// Odd p: defined only when (p-1) | 2t, returning 1 + v_p(2t).
/// p = 2: returns 2 + v_2(2t).
/// Any other regime throws std::domain_error rather than guessing.
long long adams_m_valuation(long long p, long long two_t);

BigInt binomial(long long n, long long k);

BigInt pow_int(const BigInt& base, long long exp);

} // namespace hypcert::numtheory

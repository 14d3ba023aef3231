#include "hypcert/numtheory.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace hypcert::numtheory {

int mobius(long long s) {
    if (s < 1)
        throw std::domain_error("mobius: argument must be a positive integer");
    if (s == 1)
        return 1;
    int prime_factors = 0;
    for (long long d = 2; d * d <= s; ++d) {
        if (s % d == 0) {
            s /= d;
            if (s % d == 0)
                return 0; // square factor
            ++prime_factors;
        }
    }
    if (s > 1)
        ++prime_factors;
    return (prime_factors % 2 == 0) ? 1 : -1;
}

bool is_prime(long long n) {
    if (n < 2)
        return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

std::vector<long long> divisors(long long n) {
    if (n < 1)
        throw std::domain_error("divisors: argument must be a positive integer");
    std::vector<long long> out;
    for (long long d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            if (d != n / d)
                out.push_back(n / d);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

long long padic_val(long long p, long long n) {
    if (!is_prime(p))
        throw std::domain_error("padic_val: p must be prime");
    if (n == 0)
        throw std::domain_error("padic_val: valuation of 0 is undefined");
    long long m = std::llabs(n);
    long long e = 0;
    while (m % p == 0) {
        m /= p;
        ++e;
    }
    return e;
}

BigInt pow_int(const BigInt& base, long long exp) {
    if (exp < 0)
        throw std::domain_error("pow_int: negative exponent");
    BigInt result = 1, b = base;
    long long e = exp;
    while (e > 0) {
        if (e & 1)
            result *= b;
        b *= b;
        e >>= 1;
    }
    return result;
}

BigInt binomial(long long n, long long k) {
    if (k < 0 || k > n)
        return 0;
    k = std::min(k, n - k);
    BigInt result = 1;
    for (long long i = 1; i <= k; ++i) {
        result *= (n - k + i);
        result /= i; // exact at every step
    }
    return result;
}

BigInt witt(long long n, long long k) {
    if (n < 1 || k < 1)
        throw std::domain_error("witt: n and k must be positive integers");
    BigInt sum = 0;
    for (long long d : divisors(k))
        sum += mobius(d) * pow_int(n, k / d);
    if (sum % k != 0)
        throw std::logic_error("witt: Mobius sum not divisible by k at n=" +
                               std::to_string(n) + " k=" + std::to_string(k));
    return sum / k;
}

Rational witt_growth_ratio(long long n, long long k) {
    if (n < 1 || k < 1)
        throw std::domain_error("witt_growth_ratio: n and k must be positive integers");
    return Rational(witt(n, k) * k, pow_int(n, k));
}

long long adams_m_valuation(long long p, long long two_t) {
    if (!is_prime(p))
        throw std::domain_error("adams_m_valuation: p must be prime");
    if (two_t < 2 || two_t % 2 != 0)
        throw std::domain_error("adams_m_valuation: argument must be even and positive");
    if (p == 2)
        return 2 + padic_val(2, two_t);
    if (two_t % (p - 1) != 0)
        throw std::domain_error(
            "adams_m_valuation: unsupported case, (p-1) does not divide the argument");
    return 1 + padic_val(p, two_t);
}

} // namespace hypcert::numtheory

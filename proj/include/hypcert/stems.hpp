#pragma once

#include <optional>
#include <string>

#include "hypcert/arith.hpp"

namespace hypcert::stems {

enum class WitnessCase { OddPrimary, TwoPrimaryHighR, SmallTwoPrimary };

std::string to_string(WitnessCase c);
WitnessCase witness_case_from_string(const std::string& s);

/// (p, r, j): Z/p^r is a direct summand of the j-th stable stem, hence of
/// pi_{n+j}(S^n) for all n >= j + 2.
struct StemWitness {
    long long p = 0;
    long long r = 0;
    long long j = 0;
    WitnessCase witness_case = WitnessCase::OddPrimary;
    std::optional<long long> t;

    long long stable_from() const { return j + 2; }

    bool operator==(const StemWitness&) const = default;
};

/// Total over all primes p and r >= 1.
/// Odd p: t = p^{r-1}(p-1), j = 4t-1. p = 2, r >= 3: t = 2^{r-3}, j = 4t-1.
/// The remaining cases (2,1) and (2,2) are the fixed witnesses j = 1 and
/// j = 34. For the first two cases the construction re-derives r as the
/// m-function valuation at 2t and asserts equality.
StemWitness stable_summand_stem(long long p, long long r);

/// Order-p class on S^3 with e-invariant -1/p for odd p; order-4 class
/// with e-invariant -1/2 at p = 2. Q/Z values are stored as reduced
/// fractions in [0,1), so -1/p appears as (p-1)/p.
struct DetectorClass {
    long long p = 0;
    long long j = 0;
    long long domain_degree = 0; // the class lives in pi_{domain_degree}(S^3)
    Rational e_invariant;
    long long order = 0;
};

DetectorClass detector_class(long long p, long long j);

} // namespace hypcert::stems

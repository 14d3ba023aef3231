#include "hypcert/stems.hpp"

#include <stdexcept>

#include "hypcert/numtheory.hpp"

namespace hypcert::stems {

std::string to_string(WitnessCase c) {
    switch (c) {
    case WitnessCase::OddPrimary: return "odd-primary";
    case WitnessCase::TwoPrimaryHighR: return "two-primary-r>=3";
    case WitnessCase::SmallTwoPrimary: return "small-two-primary";
    }
    throw std::logic_error("unreachable witness case");
}

WitnessCase witness_case_from_string(const std::string& s) {
    if (s == "odd-primary")
        return WitnessCase::OddPrimary;
    if (s == "two-primary-r>=3")
        return WitnessCase::TwoPrimaryHighR;
    if (s == "small-two-primary")
        return WitnessCase::SmallTwoPrimary;
    throw std::invalid_argument("unknown witness case '" + s + "'");
}

StemWitness stable_summand_stem(long long p, long long r) {
    if (!numtheory::is_prime(p))
        throw std::domain_error("stable_summand_stem: p must be prime");
    if (r < 1)
        throw std::domain_error("stable_summand_stem: r must be >= 1");

    StemWitness w;
    w.p = p;
    w.r = r;

    if (p == 2 && r <= 2) {
        // Fixed witnesses: pi^S_1 has a Z/2 summand, pi^S_34 a Z/4 summand.
        w.witness_case = WitnessCase::SmallTwoPrimary;
        w.j = (r == 1) ? 1 : 34;
        return w;
    }

    long long t;
    if (p == 2) {
        w.witness_case = WitnessCase::TwoPrimaryHighR;
        t = 1LL << (r - 3);
    } else {
        w.witness_case = WitnessCase::OddPrimary;
        t = p - 1;
        for (long long i = 1; i < r; ++i)
            t *= p;
    }
    w.t = t;
    w.j = 4 * t - 1;

    // The order of the summand is the m-function valuation at 2t; re-derive
    // it and insist it matches.
    if (numtheory::adams_m_valuation(p, 2 * t) != r)
        throw std::logic_error("stable_summand_stem: m-function valuation mismatch");
    return w;
}

DetectorClass detector_class(long long p, long long j) {
    if (!numtheory::is_prime(p))
        throw std::domain_error("detector_class: p must be prime");
    if (j < 1)
        throw std::domain_error("detector_class: j must be >= 1");

    DetectorClass d;
    d.p = p;
    d.j = j;
    if (p == 2) {
        d.domain_degree = 8 * j + 6;
        d.e_invariant = Rational(1, 2); // -1/2 in Q/Z
        d.order = 4;
    } else {
        d.domain_degree = 2 * j * (p - 1) + 2;
        d.e_invariant = Rational(p - 1, p); // -1/p in Q/Z
        d.order = p;
    }
    return d;
}

} // namespace hypcert::stems

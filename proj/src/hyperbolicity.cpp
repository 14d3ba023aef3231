#include "hypcert/hyperbolicity.hpp"

#include <algorithm>
#include <stdexcept>

#include "hypcert/freelie.hpp"
#include "hypcert/numtheory.hpp"

namespace hypcert::hyp {

namespace {

BigInt row_total(const CensusRow& row) {
    BigInt total = 0;
    for (const auto& [degree, count] : row.counts)
        total += count;
    return total;
}

void check_row_invariants(const std::vector<CensusRow>& rows, long long q_min,
                          long long q_max, long long window_shift_per_k,
                          long long offset) {
    for (const CensusRow& row : rows) {
        if (row_total(row) != row.witt_total)
            throw std::logic_error("census row total does not match the Witt formula");
        if (row.counts.empty())
            continue;
        long long lo = row.counts.begin()->first;
        long long hi = row.counts.rbegin()->first;
        long long shift = window_shift_per_k * row.k + offset;
        if (lo < row.k * q_min + shift || hi > row.k * q_max + shift)
            throw std::logic_error("census row leaves its degree window");
    }
}

} // namespace

WedgeCensus wedge_summand_census(long long q1, long long q2, long long p,
                                 long long r, long long k_max) {
    if (q1 < 1 || q2 < 1)
        throw std::domain_error("wedge_summand_census: sphere degrees must be >= 1");
    if (k_max < 1)
        throw std::domain_error("wedge_summand_census: k_max must be >= 1");
    if (q1 > q2)
        std::swap(q1, q2);

    WedgeCensus census;
    census.space = "Wedge(" + std::to_string(q1 + 1) + "," + std::to_string(q2 + 1) + ")";
    census.p = p;
    census.r = r;
    census.q1 = q1;
    census.q2 = q2;
    census.witness = stems::stable_summand_stem(p, r);

    const long long j = census.witness.j;
    census.k0 = (j + 1 + q1 - 1) / q1; // least k with k*q1 >= j+1
    census.a = q2;
    census.b = 1 + j;

    for (long long k = census.k0; k <= k_max; ++k) {
        CensusRow row;
        row.k = k;
        row.witt_total = numtheory::witt(2, k);
        for (const auto& [degree, count] : freelie::wedge_multidegree_counts(q1, q2, k))
            row.counts[degree + j + 1] = count;
        census.rows.push_back(std::move(row));
    }

    check_row_invariants(census.rows, q1, q2, 0, j + 1);
    census.oracles_checked = {"row-totals-witt", "degree-window", "stem-adams-m-valuation"};
    return census;
}

Rational lower_bound_constant(long long q1, long long q2) {
    if (q1 < 1 || q2 < 1)
        throw std::domain_error("lower_bound_constant: sphere degrees must be >= 1");
    return Rational(1, std::max(q1, q2));
}

long long select_c(long long i_lambda, long long q_min, long long q_max, long long p) {
    if (p % 2 == 0 || !numtheory::is_prime(p))
        throw std::domain_error("select_c: p must be an odd prime");
    if (i_lambda < 0 || q_min < 1 || q_max < q_min)
        throw std::domain_error("select_c: bad arguments");
    // Smallest c >= 1 with 2c(p-1) + q_min > 2*i_lambda*q_max; the strict
    // inequality keeps the per-weight eigenvalue margin positive.
    long long numerator = 2 * i_lambda * q_max - q_min;
    if (numerator < 0)
        return 1;
    return std::max(1LL, numerator / (2 * (p - 1)) + 1);
}

bool verify_eigenvalue_condition(long long c, long long k, long long n_degree,
                                 long long i_lambda, long long q_max, long long p) {
    // Doubled exponents avoid the half-integer (N-1)/2.
    return 2 * c * k * (p - 1) + (n_degree - 1) > 2 * i_lambda * (k * q_max + 1);
}

namespace {

long long least_verified_weight(long long c, long long i_lambda, long long q_min,
                                long long q_max, long long p) {
    // The margin k*(2c(p-1) + q_min - 2*i_lambda*q_max) - 1 - 2*i_lambda is
    // increasing in k with positive slope by choice of c.
    long long slope = 2 * c * (p - 1) + q_min - 2 * i_lambda * q_max;
    if (slope <= 0)
        throw std::logic_error("least_verified_weight: nonpositive eigenvalue margin");
    long long k = (2 * i_lambda + 1) / slope + 1;
    while (!verify_eigenvalue_condition(c, k, k * q_min, i_lambda, q_max, p))
        ++k;
    while (k > 1 && verify_eigenvalue_condition(c, k - 1, (k - 1) * q_min, i_lambda, q_max, p))
        --k;
    return k;
}

} // namespace

CertifyResult k_detection_certificate(const std::string& space_label,
                                      const ktheory::KModel& model,
                                      const ktheory::ModPMap& map, long long p,
                                      long long k_max) {
    if (!numtheory::is_prime(p))
        throw std::domain_error("k_detection_certificate: p must be prime");
    if (k_max < 1)
        throw std::domain_error("k_detection_certificate: k_max must be >= 1");
    if (p % 2 == 0)
        return HypothesisFailure{"certification requires an odd prime, got p=2"};
    if (map.p != p)
        throw std::invalid_argument("k_detection_certificate: map is over a different prime");
    if (!ktheory::k_surjectivity_check(map))
        return HypothesisFailure{
            "mod-" + std::to_string(p) +
            " K-theory map is not surjective (rank below 2); the detection "
            "hypothesis fails"};

    PHypCertificate cert;
    cert.space = space_label;
    cert.p = p;
    cert.q1 = std::min(map.q1, map.q2);
    cert.q2 = std::max(map.q1, map.q2);
    cert.input_mode = map.input_mode;
    cert.i_lambda = ktheory::lambda_exponent(model);
    cert.c = select_c(cert.i_lambda, cert.q1, cert.q2, p);
    cert.k0 = least_verified_weight(cert.c, cert.i_lambda, cert.q1, cert.q2, p);
    cert.a = 2 * cert.c * (p - 1) + cert.q2;
    cert.b = 0;

    for (long long k = cert.k0; k <= k_max; ++k) {
        CensusRow row;
        row.k = k;
        row.witt_total = numtheory::witt(2, k);
        long long shift = 2 * cert.c * k * (p - 1);
        for (const auto& [degree, count] : freelie::wedge_multidegree_counts(cert.q1, cert.q2, k))
            row.counts[degree + shift] = count;
        cert.rows.push_back(std::move(row));
    }

    check_row_invariants(cert.rows, cert.q1, cert.q2, 2 * cert.c * (p - 1), 0);
    for (long long k = cert.k0; k <= cert.k0 + 20; ++k)
        for (long long n_degree = k * cert.q1; n_degree <= k * cert.q2; ++n_degree)
            if (!verify_eigenvalue_condition(cert.c, k, n_degree, cert.i_lambda, cert.q2, p))
                throw std::logic_error("eigenvalue condition failed inside the verified range");

    cert.oracles_checked = {"row-totals-witt", "degree-window", "eigenvalue-window-k0+20"};
    return cert;
}

CertifyResult k_detection_certificate(const spaces::SpaceId& space, long long p,
                                      long long k_max) {
    if (!numtheory::is_prime(p))
        throw std::domain_error("k_detection_certificate: p must be prime");
    if (p % 2 == 0)
        return HypothesisFailure{"certification requires an odd prime, got p=2"};
    auto map = ktheory::builtin_wedge_map(space, p);
    if (!map)
        return HypothesisFailure{"no built-in wedge map for '" + space.str() +
                                 "'; supply an explicit mod-p matrix"};
    return k_detection_certificate(space.str(), ktheory::kmodel_for_space(space), *map,
                                   p, k_max);
}

std::vector<GrowthPoint> growth_profile(const std::vector<CensusRow>& rows,
                                        long long a, long long b) {
    if (rows.empty())
        throw std::domain_error("growth_profile: no census rows");
    if (a < 1)
        throw std::domain_error("growth_profile: a must be >= 1");

    std::map<long long, BigInt> by_degree;
    for (const CensusRow& row : rows)
        for (const auto& [degree, count] : row.counts)
            by_degree[degree] += count;

    const long long shift = (b + a + a - 1) / a; // ceil((b+a)/a)
    std::vector<GrowthPoint> profile;
    profile.reserve(by_degree.size());
    BigInt cumulative = 0;
    for (const auto& [m, count] : by_degree) {
        cumulative += count;
        GrowthPoint point;
        point.m = m;
        point.t_m = cumulative;
        point.threshold_exp = m / a - shift;
        point.meets_threshold =
            point.threshold_exp < 0
                ? cumulative >= 1
                : cumulative >= numtheory::pow_int(2, point.threshold_exp);
        profile.push_back(std::move(point));
    }
    return profile;
}

BigInt cumulative_count_at(const std::vector<CensusRow>& rows, long long m) {
    BigInt cumulative = 0;
    for (const CensusRow& row : rows)
        for (const auto& [degree, count] : row.counts)
            if (degree <= m)
                cumulative += count;
    return cumulative;
}

std::vector<GrowthPoint> growth_profile(const WedgeCensus& census) {
    return growth_profile(census.rows, census.a, census.b);
}

std::vector<GrowthPoint> growth_profile(const PHypCertificate& cert) {
    return growth_profile(cert.rows, cert.a, cert.b);
}

RetractEntry retract_catalog(const spaces::SpaceId& space) {
    using Family = spaces::SpaceId::Family;
    RetractEntry entry;
    entry.space = space.str();
    switch (space.family) {
    case Family::Conf: {
        long long k = space.params[0], n = space.params[1];
        if (k < 3 || n < 3)
            throw std::invalid_argument(
                "retract_catalog: Conf(k,n) requires k >= 3 and n >= 3");
        entry.census_available = true;
        entry.q1 = entry.q2 = n - 2;
        entry.note = "wedge of " + std::to_string(k - 1) + " copies of S^" +
                     std::to_string(n - 1) + " is a retract";
        return entry;
    }
    case Family::SigmaCP2:
        entry.census_available = true;
        entry.q1 = 2;
        entry.q2 = 4;
        entry.excluded_primes = {2};
        entry.note = "splits as S^3 v S^5 away from 2";
        return entry;
    case Family::SigmaHP2:
        entry.census_available = true;
        entry.q1 = 4;
        entry.q2 = 8;
        entry.excluded_primes = {2, 3};
        entry.note = "splits as S^5 v S^9 away from 2 and 3";
        return entry;
    default:
        throw std::invalid_argument("retract_catalog: '" + space.str() +
                                    "' is not a retract-catalog space");
    }
}

std::vector<RetractEntry> full_retract_catalog() {
    std::vector<RetractEntry> entries;
    entries.push_back({"Conf(k,n), k,n>=3", false, 0, 0, {},
                       "wedge of k-1 copies of S^{n-1} is a retract; query a concrete "
                       "Conf(k,n) for q1=q2=n-2"});
    entries.push_back(retract_catalog({spaces::SpaceId::Family::SigmaCP2, {}}));
    entries.push_back(retract_catalog({spaces::SpaceId::Family::SigmaHP2, {}}));
    entries.push_back({"(n-1)-connected 2n-manifold, rank H^n >= 3", false, 0, 0, {},
                       "looped wedge retract exists; sphere dimensions not pinned down, "
                       "no census emitted"});
    entries.push_back({"moment-angle complex with two intersecting minimal missing faces",
                       false, 0, 0, {},
                       "looped wedge retract exists; sphere dimensions not pinned down, "
                       "no census emitted"});
    return entries;
}

} // namespace hypcert::hyp

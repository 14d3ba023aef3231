#pragma once

#include <map>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "hypcert/arith.hpp"
#include "hypcert/ktheory.hpp"
#include "hypcert/stems.hpp"

namespace hypcert::hyp {

/// One weight's worth of witnesses: degree -> lower bound on the number of
/// summands found in that homotopy degree. Counts are lower bounds, never
/// claims of exact homotopy groups.
struct CensusRow {
    long long k = 0;
    BigInt witt_total;
    std::map<long long, BigInt> counts;

    bool operator==(const CensusRow&) const = default;
};

/// Per-degree lower bounds on Z/p^r-summands in pi_*(S^{q1+1} v S^{q2+1}).
/// Row k >= k0 places W_2(k) summands in degrees j + k1*q1 + k2*q2 + 1,
/// all of which lie below a*k + b with a = q2 and b = 1 + j.
struct WedgeCensus {
    std::string space;
    long long p = 0, r = 0;
    long long q1 = 0, q2 = 0;
    stems::StemWitness witness;
    long long k0 = 0;
    long long a = 0, b = 0;
    std::vector<CensusRow> rows;
    std::vector<std::string> oracles_checked;

    long long j() const { return witness.j; }
    Rational liminf_ln2_coeff() const { return Rational(1, a); }

    bool operator==(const WedgeCensus&) const = default;
};

WedgeCensus wedge_summand_census(long long q1, long long q2, long long p,
                                 long long r, long long k_max);

/// Coefficient of ln 2 in the growth lower bound for S^{q1+1} v S^{q2+1}:
/// 1 / max(q1, q2).
Rational lower_bound_constant(long long q1, long long q2);

/// Smallest detector index c >= 1 with 2c(p-1) + q_min > 2 * i_lambda * q_max.
/// The strict form guarantees the eigenvalue margin grows linearly in k,
/// so a finite verification threshold k0 always exists.
long long select_c(long long i_lambda, long long q_min, long long q_max, long long p);

/// Doubled-exponent form of the eigenvalue criterion at stage s = k*q_max + 1:
/// 2ck(p-1) + (N-1) > 2 * i_lambda * (k*q_max + 1).
bool verify_eigenvalue_condition(long long c, long long k, long long n_degree,
                                 long long i_lambda, long long q_max, long long p);

/// Full output of the K-theory detection pipeline for Sigma X. Row k
/// places counts in degrees N + 2ck(p-1) of pi_*(Sigma X) for N in
/// [k*q_min, k*q_max]; totals equal W_2(k); a = 2c(p-1) + q_max, b = 0.
/// The same certificate applies to every iterated suspension of X.
struct PHypCertificate {
    std::string space;
    long long p = 0;
    long long q1 = 0, q2 = 0;
    long long i_lambda = 0;
    long long c = 0;
    long long k0 = 0;
    long long a = 0, b = 0;
    ktheory::InputMode input_mode = ktheory::InputMode::KTheory;
    std::vector<CensusRow> rows;
    std::vector<std::string> oracles_checked;

    Rational liminf_ln2_coeff() const { return Rational(1, a); }

    // Equality covers the serialized content; input_mode is bookkeeping
    // about how the map was supplied and does not enter the schema.
    friend bool operator==(const PHypCertificate& x, const PHypCertificate& y) {
        return x.space == y.space && x.p == y.p && x.q1 == y.q1 && x.q2 == y.q2 &&
               x.i_lambda == y.i_lambda && x.c == y.c && x.k0 == y.k0 && x.a == y.a &&
               x.b == y.b && x.rows == y.rows && x.oracles_checked == y.oracles_checked;
    }
};

/// Unmet hypothesis (non-surjective map, even prime, missing wedge map):
/// a result distinct from an error.
struct HypothesisFailure {
    std::string reason;
};

using CertifyResult = std::variant<PHypCertificate, HypothesisFailure>;

CertifyResult k_detection_certificate(const std::string& space_label,
                                      const ktheory::KModel& model,
                                      const ktheory::ModPMap& map,
                                      long long p, long long k_max);

/// Catalog-space convenience: built-in wedge map plus eigenvalue data.
CertifyResult k_detection_certificate(const spaces::SpaceId& space, long long p,
                                      long long k_max);

struct GrowthPoint {
    long long m = 0;
    BigInt t_m;                 // cumulative count in degrees <= m
    long long threshold_exp = 0; // floor(m/a) - ceil((b+a)/a)
    bool meets_threshold = false;

    bool operator==(const GrowthPoint&) const = default;
};

/// Cumulative growth profile, one point per populated degree, with exact
/// big-integer threshold comparisons t_m >= 2^threshold_exp (negative
/// exponents degrade to t_m >= 1).
std::vector<GrowthPoint> growth_profile(const std::vector<CensusRow>& rows,
                                        long long a, long long b);
std::vector<GrowthPoint> growth_profile(const WedgeCensus& census);
std::vector<GrowthPoint> growth_profile(const PHypCertificate& cert);

/// t_m at an arbitrary degree m; 0 below the first populated degree.
BigInt cumulative_count_at(const std::vector<CensusRow>& rows, long long m);

/// A space known to contain S^{q1+1} v S^{q2+1} as a retract after
/// localization away from excluded_primes. Families whose sphere
/// dimensions are not pinned down carry census_available = false.
struct RetractEntry {
    std::string space;
    bool census_available = false;
    long long q1 = 0, q2 = 0;
    std::set<long long> excluded_primes;
    std::string note;
};

/// Conf(k,n) with k,n >= 3 -> (n-2, n-2, {}); SigmaCP2 -> (2, 4, {2});
/// SigmaHP2 -> (4, 8, {2,3}). Throws std::invalid_argument otherwise.
RetractEntry retract_catalog(const spaces::SpaceId& space);

/// All known retract families, including existence-only markers.
std::vector<RetractEntry> full_retract_catalog();

} // namespace hypcert::hyp

#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "hypcert/arith.hpp"
#include "hypcert/poincare.hpp"

namespace hypcert::ktheory {

/// Adams operations on torsion-free K-theory, recorded as eigenvalue
/// exponents: psi^l acts with eigenvalue l^i, and only the exponents i are
/// ever consumed, so everything downstream is exact integer arithmetic.
struct KModel {
    std::vector<long long> even_exponents; // from K^0(X), sorted ascending
    std::vector<long long> susp_exponents; // from K^0(Sigma X), sorted ascending
    long long connectivity = 1;            // X is (connectivity-1)-connected

    bool operator==(const KModel&) const = default;
};

/// A cell in degree 2i contributes exponent i to the even spectrum; a cell
/// in degree 2i-1 contributes exponent i to the suspension spectrum.
/// Requires constant coefficient 1.
KModel kmodel_from_poincare(const spaces::PoincarePolynomial& poly, long long connectivity);

KModel kmodel_for_space(const spaces::SpaceId& space);

/// Largest exponent across both spectra; 0 when both are empty (lambda = 1).
long long lambda_exponent(const KModel& model);

/// Largest Adams exponent on Sigma^suspensions J_s(X):
/// i + s*max(even) when suspensions = 2i, and
/// i + max(susp) + (s-1)*max(even) when suspensions = 2i+1.
/// Empty maxima contribute 0.
long long james_suspension_lambda_exponent(const KModel& model, long long s,
                                           long long suspensions);

enum class InputMode { KTheory, CohomologyAhssCollapse };

std::string to_string(InputMode m);

/// Matrix of the wedge map on mod-p K-theory: two rows for the sphere
/// classes of S^{q1+1} v S^{q2+1}, one column per basis class of
/// K(Sigma X) tensor Z/p. Entries are reduced into [0, p).
struct ModPMap {
    long long p = 0;
    long long q1 = 0, q2 = 0;
    std::size_t cols = 0;
    std::vector<long long> entries; // row-major, 2 x cols
    InputMode input_mode = InputMode::KTheory;

    long long at(std::size_t i, std::size_t j) const { return entries[i * cols + j]; }
};

ModPMap make_modp_map(long long p, long long q1, long long q2,
                      const std::vector<long long>& row0,
                      const std::vector<long long>& row1,
                      InputMode mode = InputMode::KTheory);

/// True iff the matrix has rank 2 over F_p. Computable for any prime;
/// certificate generation separately rejects p = 2.
bool k_surjectivity_check(const ModPMap& m);

/// (even, odd) rank of the weight-k component of the tensor algebra on the
/// Z/2-graded torsion-free K-homology of X.
std::pair<BigInt, BigInt> omega_sigma_weight_ranks(const KModel& model, long long k);

/// Built-in wedge map justified by the catalog's bundle inclusions, when
/// the space admits one. Columns are indexed by the positive-degree cells
/// of X in ascending degree order.
std::optional<ModPMap> builtin_wedge_map(const spaces::SpaceId& space, long long p);

} // namespace hypcert::ktheory

#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace hypcert::spaces {

/// Rational-cohomology Poincare polynomial; coefficient d is dim H^d.
/// Coefficients are nonnegative and finitely supported; path-connected
/// spaces have constant coefficient 1.
class PoincarePolynomial {
public:
    PoincarePolynomial() = default;
    explicit PoincarePolynomial(std::vector<long long> coeffs);

    long long coeff(std::size_t degree) const;
    std::size_t top_degree() const;
    long long total_betti() const; // evaluation at t = 1

    const std::vector<long long>& coefficients() const { return coeffs_; }

    PoincarePolynomial operator*(const PoincarePolynomial& other) const;
    bool operator==(const PoincarePolynomial&) const = default;

private:
    std::vector<long long> coeffs_;
};

struct SpaceId {
    enum class Family { CP, Gr, Milnor, U, Sphere, Wedge, Conf, SigmaCP2, SigmaHP2 };

    Family family = Family::Sphere;
    std::vector<long long> params;

    std::string str() const;
    /// Grammar: CP(n), Gr(k,n), Milnor(m,n), U(n), S(n), Wedge(n1,n2,...),
    /// Conf(k,n), SigmaCP2, SigmaHP2. Throws std::invalid_argument.
    static SpaceId parse(const std::string& text);

    bool operator==(const SpaceId&) const = default;
};

/// Defined for CP, Gr, Milnor, U, Sphere and Wedge; throws
/// std::invalid_argument for ids outside that catalog.
PoincarePolynomial poincare_polynomial(const SpaceId& space);

/// r such that the space is (r-1)-connected: first positive degree with a cell.
long long connectivity(const SpaceId& space);

/// True for spaces whose Poincare polynomial comes from standard formulas
/// (Gr, Milnor, U) rather than an explicit cell count.
bool externally_sourced(const SpaceId& space);

// Closed-form builders, also usable independently of SpaceId.
PoincarePolynomial cp_poincare(long long n);
PoincarePolynomial grassmannian_poincare(long long k, long long n);
PoincarePolynomial milnor_poincare(long long m, long long n);
PoincarePolynomial unitary_poincare(long long n);
PoincarePolynomial sphere_poincare(long long n);
PoincarePolynomial wedge_poincare(const std::vector<long long>& dims);

} // namespace hypcert::spaces

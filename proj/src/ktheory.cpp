#include "hypcert/ktheory.hpp"

#include <algorithm>
#include <stdexcept>

#include "hypcert/numtheory.hpp"
#include "hypcert/smith.hpp"

namespace hypcert::ktheory {

KModel kmodel_from_poincare(const spaces::PoincarePolynomial& poly, long long connectivity) {
    if (poly.coeff(0) != 1)
        throw std::invalid_argument("kmodel_from_poincare: constant coefficient must be 1");
    KModel model;
    model.connectivity = connectivity;
    for (std::size_t d = 1; d <= poly.top_degree(); ++d) {
        long long exponent = static_cast<long long>((d + 1) / 2);
        auto& bucket = (d % 2 == 0) ? model.even_exponents : model.susp_exponents;
        for (long long i = 0; i < poly.coeff(d); ++i)
            bucket.push_back(exponent);
    }
    return model;
}

KModel kmodel_for_space(const spaces::SpaceId& space) {
    return kmodel_from_poincare(spaces::poincare_polynomial(space),
                                spaces::connectivity(space));
}

long long lambda_exponent(const KModel& model) {
    long long best = 0;
    if (!model.even_exponents.empty())
        best = std::max(best, model.even_exponents.back());
    if (!model.susp_exponents.empty())
        best = std::max(best, model.susp_exponents.back());
    return best;
}

long long james_suspension_lambda_exponent(const KModel& model, long long s,
                                           long long suspensions) {
    if (s < 1)
        throw std::domain_error("james_suspension_lambda_exponent: s must be >= 1");
    if (suspensions < 0)
        throw std::domain_error("james_suspension_lambda_exponent: suspensions must be >= 0");
    long long max_even = model.even_exponents.empty() ? 0 : model.even_exponents.back();
    long long max_susp = model.susp_exponents.empty() ? 0 : model.susp_exponents.back();
    long long i = suspensions / 2;
    if (suspensions % 2 == 0)
        return i + s * max_even;
    return i + max_susp + (s - 1) * max_even;
}

std::string to_string(InputMode m) {
    return m == InputMode::KTheory ? "k-theory" : "ordinary-cohomology-AHSS-collapse";
}

ModPMap make_modp_map(long long p, long long q1, long long q2,
                      const std::vector<long long>& row0,
                      const std::vector<long long>& row1, InputMode mode) {
    if (!numtheory::is_prime(p))
        throw std::domain_error("make_modp_map: p must be prime");
    if (q1 < 1 || q2 < 1)
        throw std::domain_error("make_modp_map: sphere degrees must be >= 1");
    if (row0.size() != row1.size() || row0.empty())
        throw std::invalid_argument("make_modp_map: rows must be nonempty and equal length");
    ModPMap m;
    m.p = p;
    m.q1 = std::min(q1, q2);
    m.q2 = std::max(q1, q2);
    m.cols = row0.size();
    m.input_mode = mode;
    m.entries.reserve(2 * m.cols);
    for (long long v : row0)
        m.entries.push_back(((v % p) + p) % p);
    for (long long v : row1)
        m.entries.push_back(((v % p) + p) % p);
    return m;
}

bool k_surjectivity_check(const ModPMap& m) {
    linalg::IntMatrix mat(2, m.cols);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < m.cols; ++j)
            mat.at(i, j) = m.at(i, j);
    return linalg::rank_mod_p(mat, m.p) == 2;
}

std::pair<BigInt, BigInt> omega_sigma_weight_ranks(const KModel& model, long long k) {
    if (k < 1)
        throw std::domain_error("omega_sigma_weight_ranks: weight must be >= 1");
    BigInt even = static_cast<long long>(model.even_exponents.size());
    BigInt odd = static_cast<long long>(model.susp_exponents.size());
    BigInt e = even, o = odd;
    for (long long i = 1; i < k; ++i) {
        BigInt ne = e * even + o * odd;
        BigInt no = e * odd + o * even;
        e = std::move(ne);
        o = std::move(no);
    }
    return {e, o};
}

namespace {

// Column index of the first cell of the given degree, with columns indexed
// by the positive-degree cells in ascending degree order.
std::optional<std::size_t> first_cell_column(const spaces::PoincarePolynomial& poly,
                                             long long degree) {
    std::size_t col = 0;
    for (std::size_t d = 1; d <= poly.top_degree(); ++d) {
        if (poly.coeff(d) == 0)
            continue;
        if (static_cast<long long>(d) == degree)
            return col;
        col += static_cast<std::size_t>(poly.coeff(d));
    }
    return std::nullopt;
}

std::optional<ModPMap> unit_map(const spaces::PoincarePolynomial& poly, long long p,
                                long long cell1, long long cell2) {
    auto c1 = first_cell_column(poly, cell1);
    if (!c1)
        return std::nullopt;
    auto c2 = first_cell_column(poly, cell2);
    if (!c2)
        return std::nullopt;
    std::size_t cols = static_cast<std::size_t>(poly.total_betti() - 1);
    std::vector<long long> row0(cols, 0), row1(cols, 0);
    row0[*c1] = 1;
    row1[*c2] = 1;
    return make_modp_map(p, cell1, cell2, row0, row1);
}

} // namespace

std::optional<ModPMap> builtin_wedge_map(const spaces::SpaceId& space, long long p) {
    using Family = spaces::SpaceId::Family;
    switch (space.family) {
    case Family::CP:
        // Wedge into the suspension of the bottom two cells; needs CP(n>=2).
        if (space.params[0] < 2)
            return std::nullopt;
        return unit_map(spaces::poincare_polynomial(space), p, 2, 4);
    case Family::Gr:
        // Iterated subspace inclusions pull the tautological class back to
        // the bottom of CP^2; needs n >= 3.
        if (space.params[1] < 3)
            return std::nullopt;
        return unit_map(spaces::poincare_polynomial(space), p, 2, 4);
    case Family::Milnor:
        // The linear CP^2 inclusion exists for m >= 2, n >= 3.
        if (space.params[0] < 2 || space.params[1] < 3)
            return std::nullopt;
        return unit_map(spaces::poincare_polynomial(space), p, 2, 4);
    case Family::U:
        // Via the suspended projective-space map; the wedge hits the
        // 3- and 5-cells, so needs U(n>=3).
        if (space.params[0] < 3)
            return std::nullopt;
        return unit_map(spaces::poincare_polynomial(space), p, 3, 5);
    case Family::Wedge: {
        if (space.params.size() < 2)
            return std::nullopt;
        // Project onto the two lowest-dimensional spheres.
        std::vector<long long> sorted = space.params;
        std::sort(sorted.begin(), sorted.end());
        long long d1 = sorted[0], d2 = sorted[1];
        spaces::PoincarePolynomial poly = spaces::poincare_polynomial(space);
        auto c1 = first_cell_column(poly, d1);
        std::size_t cols = static_cast<std::size_t>(poly.total_betti() - 1);
        std::vector<long long> row0(cols, 0), row1(cols, 0);
        row0[*c1] = 1;
        row1[d1 == d2 ? *c1 + 1 : *first_cell_column(poly, d2)] = 1;
        return make_modp_map(p, d1, d2, row0, row1);
    }
    default:
        return std::nullopt;
    }
}

} // namespace hypcert::ktheory

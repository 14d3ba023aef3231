#include "hypcert/poincare.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hypcert::spaces {

namespace {

void trim_trailing_zeros(std::vector<long long>& v) {
    while (!v.empty() && v.back() == 0)
        v.pop_back();
}

[[noreturn]] void bad_space(const std::string& what) {
    throw std::invalid_argument("space: " + what);
}

} // namespace

PoincarePolynomial::PoincarePolynomial(std::vector<long long> coeffs)
    : coeffs_(std::move(coeffs)) {
    for (long long c : coeffs_)
        if (c < 0)
            throw std::invalid_argument("PoincarePolynomial: negative coefficient");
    trim_trailing_zeros(coeffs_);
}

long long PoincarePolynomial::coeff(std::size_t degree) const {
    return degree < coeffs_.size() ? coeffs_[degree] : 0;
}

std::size_t PoincarePolynomial::top_degree() const {
    return coeffs_.empty() ? 0 : coeffs_.size() - 1;
}

long long PoincarePolynomial::total_betti() const {
    long long sum = 0;
    for (long long c : coeffs_)
        sum += c;
    return sum;
}

PoincarePolynomial PoincarePolynomial::operator*(const PoincarePolynomial& other) const {
    if (coeffs_.empty() || other.coeffs_.empty())
        return PoincarePolynomial{};
    std::vector<long long> out(coeffs_.size() + other.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < other.coeffs_.size(); ++j)
            out[i + j] += coeffs_[i] * other.coeffs_[j];
    return PoincarePolynomial(std::move(out));
}

PoincarePolynomial cp_poincare(long long n) {
    if (n < 1)
        bad_space("CP(n) requires n >= 1");
    std::vector<long long> coeffs(2 * n + 1, 0);
    for (long long i = 0; i <= n; ++i)
        coeffs[2 * i] = 1;
    return PoincarePolynomial(std::move(coeffs));
}

PoincarePolynomial grassmannian_poincare(long long k, long long n) {
    if (n < 2 || k < 1 || k >= n)
        bad_space("Gr(k,n) requires 0 < k < n and n >= 2");
    // Gaussian binomial [n, k]_q by the Pascal recurrence
    // [m, j]_q = [m-1, j-1]_q + q^j [m-1, j]_q, then q -> t^2.
    std::vector<std::vector<long long>> row(k + 1);
    row[0] = {1};
    for (long long m = 1; m <= n; ++m) {
        for (long long j = std::min(m, k); j >= 1; --j) {
            std::vector<long long> next = (j <= m - 1) ? row[j] : std::vector<long long>{};
            if (!next.empty()) {
                // shift by q^j
                next.insert(next.begin(), j, 0);
            }
            const std::vector<long long>& left = row[j - 1];
            if (next.size() < left.size())
                next.resize(left.size(), 0);
            for (std::size_t i = 0; i < left.size(); ++i)
                next[i] += left[i];
            row[j] = std::move(next);
        }
    }
    std::vector<long long> coeffs(2 * row[k].size() - 1, 0);
    for (std::size_t i = 0; i < row[k].size(); ++i)
        coeffs[2 * i] = row[k][i];
    return PoincarePolynomial(std::move(coeffs));
}

PoincarePolynomial milnor_poincare(long long m, long long n) {
    if (m < 1 || n < 1 || m > n)
        bad_space("Milnor(m,n) requires 1 <= m <= n");
    // CP^{n-1}-bundle over CP^m.
    return cp_poincare(m) * (n >= 2 ? cp_poincare(n - 1) : PoincarePolynomial({1}));
}

PoincarePolynomial unitary_poincare(long long n) {
    if (n < 1)
        bad_space("U(n) requires n >= 1");
    PoincarePolynomial acc({1});
    for (long long i = 1; i <= n; ++i) {
        std::vector<long long> factor(2 * i, 0);
        factor[0] = 1;
        factor[2 * i - 1] = 1;
        acc = acc * PoincarePolynomial(std::move(factor));
    }
    return acc;
}

PoincarePolynomial sphere_poincare(long long n) {
    if (n < 1)
        bad_space("S(n) requires n >= 1");
    std::vector<long long> coeffs(n + 1, 0);
    coeffs[0] = 1;
    coeffs[n] = 1;
    return PoincarePolynomial(std::move(coeffs));
}

PoincarePolynomial wedge_poincare(const std::vector<long long>& dims) {
    if (dims.empty())
        bad_space("Wedge requires at least one sphere dimension");
    long long top = 0;
    for (long long d : dims) {
        if (d < 1)
            bad_space("Wedge sphere dimensions must be >= 1");
        top = std::max(top, d);
    }
    std::vector<long long> coeffs(top + 1, 0);
    coeffs[0] = 1;
    for (long long d : dims)
        coeffs[d] += 1;
    return PoincarePolynomial(std::move(coeffs));
}

std::string SpaceId::str() const {
    std::ostringstream os;
    switch (family) {
    case Family::CP: os << "CP"; break;
    case Family::Gr: os << "Gr"; break;
    case Family::Milnor: os << "Milnor"; break;
    case Family::U: os << "U"; break;
    case Family::Sphere: os << "S"; break;
    case Family::Wedge: os << "Wedge"; break;
    case Family::Conf: os << "Conf"; break;
    case Family::SigmaCP2: return "SigmaCP2";
    case Family::SigmaHP2: return "SigmaHP2";
    }
    os << '(';
    for (std::size_t i = 0; i < params.size(); ++i) {
        if (i)
            os << ',';
        os << params[i];
    }
    os << ')';
    return os.str();
}

SpaceId SpaceId::parse(const std::string& text) {
    if (text == "SigmaCP2")
        return {Family::SigmaCP2, {}};
    if (text == "SigmaHP2")
        return {Family::SigmaHP2, {}};

    auto open = text.find('(');
    if (open == std::string::npos || text.back() != ')')
        bad_space("unknown space id '" + text + "'");
    std::string name = text.substr(0, open);
    std::string inner = text.substr(open + 1, text.size() - open - 2);

    std::vector<long long> params;
    std::istringstream is(inner);
    std::string piece;
    while (std::getline(is, piece, ',')) {
        std::size_t used = 0;
        long long value = 0;
        try {
            value = std::stoll(piece, &used);
        } catch (const std::exception&) {
            bad_space("non-integer parameter in '" + text + "'");
        }
        if (used != piece.size() || value < 1)
            bad_space("parameters must be positive integers in '" + text + "'");
        params.push_back(value);
    }

    auto expect = [&](Family f, std::size_t arity_min, std::size_t arity_max) {
        if (params.size() < arity_min || params.size() > arity_max)
            bad_space("wrong number of parameters in '" + text + "'");
        return SpaceId{f, params};
    };

    if (name == "CP")
        return expect(Family::CP, 1, 1);
    if (name == "Gr")
        return expect(Family::Gr, 2, 2);
    if (name == "Milnor")
        return expect(Family::Milnor, 2, 2);
    if (name == "U")
        return expect(Family::U, 1, 1);
    if (name == "S")
        return expect(Family::Sphere, 1, 1);
    if (name == "Wedge")
        return expect(Family::Wedge, 1, 64);
    if (name == "Conf")
        return expect(Family::Conf, 2, 2);
    bad_space("unknown space id '" + text + "'");
}

PoincarePolynomial poincare_polynomial(const SpaceId& space) {
    switch (space.family) {
    case SpaceId::Family::CP: return cp_poincare(space.params[0]);
    case SpaceId::Family::Gr: return grassmannian_poincare(space.params[0], space.params[1]);
    case SpaceId::Family::Milnor: return milnor_poincare(space.params[0], space.params[1]);
    case SpaceId::Family::U: return unitary_poincare(space.params[0]);
    case SpaceId::Family::Sphere: return sphere_poincare(space.params[0]);
    case SpaceId::Family::Wedge: return wedge_poincare(space.params);
    default:
        bad_space("'" + space.str() + "' has no Poincare polynomial in the catalog");
    }
}

long long connectivity(const SpaceId& space) {
    PoincarePolynomial poly = poincare_polynomial(space);
    for (std::size_t d = 1; d <= poly.top_degree(); ++d)
        if (poly.coeff(d) != 0)
            return static_cast<long long>(d);
    return 1;
}

bool externally_sourced(const SpaceId& space) {
    switch (space.family) {
    case SpaceId::Family::Gr:
    case SpaceId::Family::Milnor:
    case SpaceId::Family::U:
        return true;
    default:
        return false;
    }
}

} // namespace hypcert::spaces

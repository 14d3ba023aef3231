#include <doctest.h>

#include <stdexcept>

#include "hypcert/numtheory.hpp"
#include "hypcert/oracles.hpp"
#include "hypcert/poincare.hpp"

using namespace hypcert;
using namespace hypcert::spaces;

TEST_CASE("space id parsing round trip") {
    for (const char* text : {"CP(2)", "Gr(2,4)", "Milnor(2,3)", "U(3)", "S(7)",
                             "Wedge(2,2)", "Wedge(3,5,7)", "Conf(3,3)", "SigmaCP2",
                             "SigmaHP2"}) {
        auto id = SpaceId::parse(text);
        CHECK(id.str() == text);
    }
    CHECK_THROWS_AS(SpaceId::parse("CP(0)"), std::invalid_argument);
    CHECK_THROWS_AS(SpaceId::parse("CP(2,3)"), std::invalid_argument);
    CHECK_THROWS_AS(SpaceId::parse("Torus(2)"), std::invalid_argument);
    CHECK_THROWS_AS(SpaceId::parse("CP(two)"), std::invalid_argument);
}

TEST_CASE("projective space cells") {
    auto cp2 = poincare_polynomial(SpaceId::parse("CP(2)"));
    CHECK(cp2.coefficients() == std::vector<long long>{1, 0, 1, 0, 1});
    CHECK(connectivity(SpaceId::parse("CP(2)")) == 2);
}

TEST_CASE("grassmannian via the q-binomial product oracle") {
    auto gr24 = poincare_polynomial(SpaceId::parse("Gr(2,4)"));
    CHECK(gr24.coefficients() == std::vector<long long>{1, 0, 1, 0, 2, 0, 1, 0, 1});

    for (long long n = 2; n <= 6; ++n)
        for (long long k = 1; k < n; ++k) {
            auto byDivision = oracles::gaussian_binomial_by_division(n, k);
            auto catalog = grassmannian_poincare(k, n);
            REQUIRE(catalog.top_degree() == 2 * (byDivision.size() - 1));
            for (std::size_t i = 0; i < byDivision.size(); ++i)
                CHECK(catalog.coeff(2 * i) == byDivision[i]);
            // q-binomial symmetry and the plain binomial at q = 1
            CHECK(catalog.total_betti() == numtheory::binomial(n, k));
            for (std::size_t d = 0; d <= catalog.top_degree(); ++d)
                CHECK(catalog.coeff(d) == catalog.coeff(catalog.top_degree() - d));
        }
}

TEST_CASE("milnor hypersurface as a projective bundle") {
    // Independent convolution of the base and fibre factors.
    auto check_against_convolution = [](long long m, long long n) {
        auto catalog = milnor_poincare(m, n);
        std::vector<long long> conv(static_cast<std::size_t>(2 * (m + n - 1) + 1), 0);
        for (long long i = 0; i <= m; ++i)
            for (long long j = 0; j <= n - 1; ++j)
                conv[static_cast<std::size_t>(2 * i + 2 * j)] += 1;
        CHECK(catalog.coefficients() == conv);
        CHECK(catalog.total_betti() == (m + 1) * n); // Euler characteristic
        CHECK(catalog.top_degree() == static_cast<std::size_t>(2 * (m + n - 1)));
    };
    check_against_convolution(2, 3);
    check_against_convolution(1, 3);
    check_against_convolution(3, 5);

    auto h23 = poincare_polynomial(SpaceId::parse("Milnor(2,3)"));
    CHECK(h23 == cp_poincare(2) * cp_poincare(2));
    CHECK_THROWS_AS(milnor_poincare(3, 2), std::invalid_argument);
}

TEST_CASE("unitary groups") {
    auto u3 = poincare_polynomial(SpaceId::parse("U(3)"));
    // (1+t)(1+t^3)(1+t^5)
    CHECK(u3.coefficients() ==
          std::vector<long long>{1, 1, 0, 1, 1, 1, 1, 0, 1, 1});
    CHECK(u3.total_betti() == 8);
    CHECK(connectivity(SpaceId::parse("U(3)")) == 1);
}

TEST_CASE("spheres and wedges") {
    CHECK(poincare_polynomial(SpaceId::parse("S(4)")).coefficients() ==
          std::vector<long long>{1, 0, 0, 0, 1});
    CHECK(poincare_polynomial(SpaceId::parse("Wedge(2,2)")).coefficients() ==
          std::vector<long long>{1, 0, 2});
    CHECK(poincare_polynomial(SpaceId::parse("Wedge(2,4)")).coefficients() ==
          std::vector<long long>{1, 0, 1, 0, 1});
}

TEST_CASE("coefficients are nonnegative and sum to the total Betti number") {
    for (const char* text : {"CP(5)", "Gr(3,6)", "Milnor(2,4)", "U(4)", "S(3)",
                             "Wedge(2,3,4)"}) {
        auto poly = poincare_polynomial(SpaceId::parse(text));
        long long sum = 0;
        for (long long c : poly.coefficients()) {
            CHECK(c >= 0);
            sum += c;
        }
        CHECK(sum == poly.total_betti());
        CHECK(poly.coeff(0) == 1);
    }
}

TEST_CASE("external sourcing flags") {
    CHECK(externally_sourced(SpaceId::parse("Gr(2,4)")));
    CHECK(externally_sourced(SpaceId::parse("Milnor(2,3)")));
    CHECK(externally_sourced(SpaceId::parse("U(3)")));
    CHECK_FALSE(externally_sourced(SpaceId::parse("CP(3)")));
    CHECK_FALSE(externally_sourced(SpaceId::parse("Wedge(2,2)")));
}

TEST_CASE("poincare polynomial rejects unknown catalog entries") {
    CHECK_THROWS_AS(poincare_polynomial(SpaceId::parse("Conf(3,3)")),
                    std::invalid_argument);
}

#include <doctest.h>

#include <random>

#include "hypcert/oracles.hpp"
#include "hypcert/smith.hpp"

using namespace hypcert;
using linalg::IntMatrix;

namespace {

IntMatrix from_rows(const std::vector<std::vector<long long>>& rows) {
    IntMatrix m(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[0].size(); ++j)
            m.at(i, j) = rows[i][j];
    return m;
}

} // namespace

TEST_CASE("smith divisors on known matrices") {
    CHECK(linalg::smith_elementary_divisors(from_rows({{2, 0}, {0, 3}})) ==
          std::vector<BigInt>{1, 6});
    CHECK(linalg::smith_elementary_divisors(from_rows({{4, 0}, {0, 6}})) ==
          std::vector<BigInt>{2, 12});
    CHECK(linalg::smith_elementary_divisors(from_rows({{2, 4}, {4, 8}})) ==
          std::vector<BigInt>{2});
    CHECK(linalg::smith_elementary_divisors(from_rows({{0, 0}, {0, 0}})).empty());
    CHECK(linalg::smith_elementary_divisors(from_rows({{6, 10, 15}})) ==
          std::vector<BigInt>{1});
}

TEST_CASE("smith divisors form a divisibility chain and match minor gcds") {
    std::mt19937 rng(424242);
    std::uniform_int_distribution<long long> entry(-6, 6);
    for (int trial = 0; trial < 200; ++trial) {
        std::uniform_int_distribution<std::size_t> dim(1, 4);
        IntMatrix m(dim(rng), dim(rng));
        for (auto& v : m.a)
            v = entry(rng);

        auto fast = linalg::smith_elementary_divisors(m);
        auto slow = oracles::divisors_by_minor_gcds(m, std::min(m.rows, m.cols));
        CHECK(fast == slow);
        for (std::size_t i = 1; i < fast.size(); ++i)
            CHECK(fast[i] % fast[i - 1] == 0);
    }
}

TEST_CASE("mod-p rank") {
    auto m = from_rows({{3, 1}, {0, 3}});
    CHECK(linalg::rank_mod_p(m, 3) == 1); // diagonal dies mod 3
    CHECK(linalg::rank_mod_p(m, 5) == 2);
    CHECK(linalg::rank_mod_p(from_rows({{0}}), 7) == 0);
}

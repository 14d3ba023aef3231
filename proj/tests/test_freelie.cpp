#include <doctest.h>

#include <algorithm>
#include <random>
#include <stdexcept>

#include "hypcert/freelie.hpp"
#include "hypcert/numtheory.hpp"
#include "hypcert/oracles.hpp"

using namespace hypcert;
using namespace hypcert::freelie;

TEST_CASE("weight-one basic products are the generators in order") {
    HallBasis basis({{1, 1}}, 3);
    const auto& ids = basis.weight_class(1);
    REQUIRE(ids.size() == 2);
    CHECK(basis.to_string(ids[0]) == "x1");
    CHECK(basis.to_string(ids[1]) == "x2");
}

TEST_CASE("small weight classes list the expected brackets") {
    HallBasis three({{2, 2, 2}}, 2);
    const auto& pairs = three.weight_class(2);
    REQUIRE(pairs.size() == 3);
    CHECK(three.to_string(pairs[0]) == "[x1,x2]");
    CHECK(three.to_string(pairs[1]) == "[x1,x3]");
    CHECK(three.to_string(pairs[2]) == "[x2,x3]");

    HallBasis two({{1, 1}}, 3);
    CHECK(two.weight_class(3).size() == 2);
}

TEST_CASE("weight class sizes equal the Witt formula") {
    for (int n = 2; n <= 4; ++n) {
        GeneratorSpec spec{std::vector<long long>(n, 1)};
        HallBasis basis(spec, 8); // the constructor asserts each |L_k| = W_n(k)
        for (int k = 1; k <= 8; ++k)
            CHECK(BigInt(basis.weight_class(k).size()) == numtheory::witt(n, k));
    }
    HallBasis deep({{1, 1}}, 14);
    CHECK(BigInt(deep.weight_class(14).size()) == numtheory::witt(2, 14));
}

TEST_CASE("hall order is strictly increasing inside each weight class") {
    HallBasis basis({{1, 2, 3}}, 6);
    for (int k = 1; k <= 6; ++k) {
        const auto& ids = basis.weight_class(k);
        for (std::size_t i = 1; i < ids.size(); ++i)
            CHECK(basis.compare(ids[i - 1], ids[i]) < 0);
    }
}

TEST_CASE("hall membership predicate") {
    HallBasis basis({{1, 1}}, 4);
    auto x1 = basis.weight_class(1)[0];
    auto x2 = basis.weight_class(1)[1];
    auto bracket = basis.weight_class(2)[0]; // [x1,x2]
    CHECK(basis.is_basic_pair(x1, x2));
    CHECK_FALSE(basis.is_basic_pair(x2, x1));       // wrong order
    CHECK_FALSE(basis.is_basic_pair(x1, x1));       // not strict
    CHECK(basis.is_basic_pair(x1, bracket));        // left subtree x1 <= x1
    CHECK(basis.is_basic_pair(bracket, bracket) == false);
    // every enumerated element satisfies the predicate on its own children
    for (int k = 2; k <= 4; ++k)
        for (int32_t id : basis.weight_class(k))
            CHECK(basis.is_basic_pair(basis.node(id).left, basis.node(id).right));
}

TEST_CASE("multidegree census") {
    HallBasis pair11({{1, 1}}, 8);
    auto k2 = multidegree_census(pair11, 2);
    CHECK(k2 == std::map<long long, BigInt>{{2, 1}});

    HallBasis pair12({{1, 2}}, 3);
    auto k3 = multidegree_census(pair12, 3);
    CHECK(k3 == std::map<long long, BigInt>{{4, 1}, {5, 1}});
    // and the two multidegrees behind those degrees
    const auto& ids = pair12.weight_class(3);
    std::vector<std::vector<long long>> multidegrees;
    for (int32_t id : ids)
        multidegrees.push_back(pair12.multidegree(id));
    std::sort(multidegrees.begin(), multidegrees.end());
    CHECK(multidegrees ==
          std::vector<std::vector<long long>>{{1, 2}, {2, 1}});

    auto k8 = multidegree_census(pair11, 8);
    CHECK(k8 == std::map<long long, BigInt>{{8, 30}});
}

TEST_CASE("census is invariant under permuting equal-degree generators") {
    HallBasis forward({{1, 2, 2}}, 6);
    HallBasis backward({{2, 2, 1}}, 6);
    for (int k = 1; k <= 6; ++k)
        CHECK(multidegree_census(forward, k) == multidegree_census(backward, k));
}

TEST_CASE("closed-form multidegree counts agree with enumeration") {
    HallBasis pair12({{1, 2}}, 12);
    for (int k = 1; k <= 12; ++k)
        CHECK(wedge_multidegree_counts(1, 2, k) == multidegree_census(pair12, k));

    HallBasis pair23({{2, 3}}, 10);
    for (int k = 1; k <= 10; ++k)
        CHECK(wedge_multidegree_counts(2, 3, k) == multidegree_census(pair23, k));

    // equal degrees collapse to a single entry per weight
    for (int k = 1; k <= 30; ++k) {
        auto counts = wedge_multidegree_counts(3, 3, k);
        REQUIRE(counts.size() == 1);
        CHECK(counts.begin()->first == 3 * k);
        CHECK(counts.begin()->second == numtheory::witt(2, k));
    }
}

TEST_CASE("graded witt totals") {
    CHECK(graded_witt_total({{2, 2}}, 4) == 3);
    CHECK(graded_witt_total({{2, 2}}, 5) == 6);
    CHECK(graded_witt_total({{1}}, 2) == 0);
    HallBasis basis({{1, 2}}, 9);
    for (int k = 1; k <= 9; ++k) {
        BigInt total = 0;
        for (const auto& [degree, count] : multidegree_census(basis, k))
            total += count;
        CHECK(total == graded_witt_total(basis.spec(), k));
    }
}

TEST_CASE("tensor expansion rows") {
    auto even = lie_to_tensor_matrix({{2, 2}}, 2);
    REQUIRE(even.matrix.rows == 1);
    REQUIRE(even.matrix.cols == 4);
    CHECK(even.matrix.at(0, 0) == 0);
    CHECK(even.matrix.at(0, 1) == 1);
    CHECK(even.matrix.at(0, 2) == -1);
    CHECK(even.matrix.at(0, 3) == 0);

    auto odd = lie_to_tensor_matrix({{1, 1}}, 2);
    REQUIRE(odd.matrix.rows == 1);
    CHECK(odd.matrix.at(0, 1) == 1);
    CHECK(odd.matrix.at(0, 2) == 1);

    auto cubic = lie_to_tensor_matrix({{2, 2}}, 3);
    CHECK(cubic.matrix.rows == 2);
    CHECK(cubic.matrix.cols == 8);
    CHECK(linalg::smith_elementary_divisors(cubic.matrix).size() == 2); // rank 2
}

TEST_CASE("split injection verification") {
    auto weight2 = verify_split_injection(lie_to_tensor_matrix({{2, 2}}, 2));
    CHECK(weight2.split_injective);
    CHECK(weight2.divisors == std::vector<BigInt>{1});

    auto weight4 = verify_split_injection(lie_to_tensor_matrix({{2, 2}}, 4));
    CHECK(weight4.split_injective);
    CHECK(weight4.divisors == std::vector<BigInt>{1, 1, 1});

    auto three3 = verify_split_injection(lie_to_tensor_matrix({{2, 2, 2}}, 3));
    CHECK(three3.split_injective);
    for (const auto& d : three3.divisors)
        CHECK(d == 1);

    // all even-degree specs up to weight 5
    for (int n = 2; n <= 3; ++n)
        for (int k = 2; k <= 5; ++k) {
            GeneratorSpec spec{std::vector<long long>(n, 2)};
            CHECK(verify_split_injection(lie_to_tensor_matrix(spec, k)).split_injective);
        }
}

TEST_CASE("smith divisors cross-checked against minor gcds") {
    for (int k = 2; k <= 4; ++k) {
        auto expansion = lie_to_tensor_matrix({{2, 2}}, k);
        CHECK(linalg::smith_elementary_divisors(expansion.matrix) ==
              oracles::divisors_by_minor_gcds(expansion.matrix, expansion.matrix.rows));
    }
    auto expansion = lie_to_tensor_matrix({{2, 2, 2}}, 2);
    CHECK(linalg::smith_elementary_divisors(expansion.matrix) ==
          oracles::divisors_by_minor_gcds(expansion.matrix, expansion.matrix.rows));
}

TEST_CASE("mod-p rank of the expansion equals the Witt number") {
    for (long long p : {3LL, 5LL})
        for (int k = 1; k <= 5; ++k) {
            for (auto degrees : {std::vector<long long>{2, 2}, std::vector<long long>{1, 1},
                                 std::vector<long long>{1, 2}, std::vector<long long>{2, 2, 2},
                                 std::vector<long long>{1, 2, 3}}) {
                GeneratorSpec spec{degrees};
                auto expansion = lie_to_tensor_matrix(spec, k);
                CHECK(BigInt(linalg::rank_mod_p(expansion.matrix, p)) ==
                      numtheory::witt(spec.count(), k));
            }
        }
}

namespace {

TruncatedTensorMap random_map(std::mt19937& rng, std::size_t v, std::size_t w, int cap) {
    std::uniform_int_distribution<long long> entry(-3, 3);
    TruncatedTensorMap phi;
    phi.v_rank = v;
    phi.w_rank = w;
    phi.max_weight = cap;
    phi.images.resize(v);
    for (auto& image : phi.images) {
        image.resize(cap);
        std::size_t dim = 1;
        for (int weight = 1; weight <= cap; ++weight) {
            dim *= w;
            image[weight - 1].resize(dim);
            for (auto& coeff : image[weight - 1])
                coeff = entry(rng);
        }
    }
    return phi;
}

} // namespace

TEST_CASE("leading terms identity") {
    // phi with image entirely in weight 1: truncation changes nothing.
    TruncatedTensorMap weight_one;
    weight_one.v_rank = 2;
    weight_one.w_rank = 2;
    weight_one.max_weight = 2;
    weight_one.images = {{{1, 2}, {0, 0, 0, 0}}, {{3, -1}, {0, 0, 0, 0}}};
    CHECK(verify_leading_terms(weight_one, 2));

    // phi(v) = w + w(x)w on a rank-1 source: weight-2 part of phi~(v(x)v)
    // and of its truncation both equal w(x)w.
    TruncatedTensorMap square;
    square.v_rank = 1;
    square.w_rank = 1;
    square.max_weight = 2;
    square.images = {{{1}, {1}}};
    CHECK(verify_leading_terms(square, 2));

    std::mt19937 rng(20240811);
    for (int trial = 0; trial < 100; ++trial)
        CHECK(verify_leading_terms(random_map(rng, 2, 2, 3), 3));

    TruncatedTensorMap bad;
    bad.v_rank = 1;
    bad.w_rank = 2;
    bad.max_weight = 2;
    bad.images = {{{1, 0}, {1, 0, 0}}}; // wrong weight-2 dimension
    CHECK_THROWS_AS(verify_leading_terms(bad, 2), std::invalid_argument);
}

TEST_CASE("generator spec validation") {
    CHECK_THROWS_AS(hall_basis({{}}, 3), std::invalid_argument);
    CHECK_THROWS_AS(hall_basis({{0, 1}}, 3), std::invalid_argument);
    CHECK_THROWS_AS(hall_basis({{1, 1}}, 0), std::invalid_argument);
}

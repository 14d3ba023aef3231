#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hypcert/arith.hpp"
#include "hypcert/smith.hpp"

namespace hypcert::freelie {

/// Graded generators x_1..x_n with positive degrees.
struct GeneratorSpec {
    std::vector<long long> degrees;

    int count() const { return static_cast<int>(degrees.size()); }
    void validate() const; // throws on empty spec or degree < 1
};

/// Hall set of basic products, enumerated weight by weight.
///
/// A bracket [u,v] is basic iff u and v are basic, u < v, and the left
/// subtree of a non-generator v is <= u. The order is weight-first, then
/// recursive lexicographic comparison of subtrees; generators are ordered
/// x_1 < x_2 < ... < x_n. Enumeration emits each weight class already
/// sorted, so output is deterministic.
class HallBasis {
public:
    struct Node {
        int32_t left = -1, right = -1; // -1,-1 for generators
        int32_t weight = 1;
        long long degree = 0;
    };

    HallBasis(GeneratorSpec spec, int max_weight);

    const GeneratorSpec& spec() const { return spec_; }
    int max_weight() const { return static_cast<int>(by_weight_.size()); }

    /// Ids of the weight-k basic products in Hall order, 1 <= k <= max_weight.
    const std::vector<int32_t>& weight_class(int k) const;

    const Node& node(int32_t id) const { return nodes_[id]; }
    bool is_generator(int32_t id) const { return nodes_[id].left < 0; }

    /// Membership test for a candidate bracket of two basis elements.
    bool is_basic_pair(int32_t left, int32_t right) const;

    /// Total Hall order: negative, zero or positive as a <, ==, > b.
    int compare(int32_t a, int32_t b) const;

    /// Canonical bracket string, e.g. "[x1,[x1,x2]]".
    std::string to_string(int32_t id) const;

    /// Occurrence counts (k_1,...,k_n) of each generator.
    std::vector<long long> multidegree(int32_t id) const;

private:
    GeneratorSpec spec_;
    std::vector<Node> nodes_;
    std::vector<std::vector<int32_t>> by_weight_;
};

/// Enumerates basic products up to max_weight; every weight class size is
/// checked against the Witt formula.
HallBasis hall_basis(const GeneratorSpec& spec, int max_weight);

/// Total degree -> number of weight-k basic products with that degree.
std::map<long long, BigInt> multidegree_census(const HallBasis& basis, int k);

/// Number of basic products on two generators with multidegree (k1, k2):
/// (1/k) sum_{d | gcd} mu(d) C(k/d, k1/d). Agrees with the enumerated
/// census and scales to weights far beyond enumeration.
BigInt multidegree_witt_count(long long k1, long long k2);

/// Degree -> count map for weight k over two generators of degrees q1, q2,
/// computed by multidegree_witt_count.
std::map<long long, BigInt> wedge_multidegree_counts(long long q1, long long q2, long long k);

/// Total dimension of the weight-k component: W_n(k), cross-checked
/// against the enumerated census.
BigInt graded_witt_total(const GeneratorSpec& spec, int k);

/// Expansion of the weight-k basic products into the tensor algebra under
/// [x,y] -> xy - (-1)^{|x||y|} yx. Rows follow Hall order; column j is the
/// length-k word with digits of j base n, most significant first.
struct TensorExpansion {
    int weight = 0;
    GeneratorSpec spec;
    linalg::IntMatrix matrix;
    std::vector<std::string> row_labels;
};

TensorExpansion lie_to_tensor_matrix(const GeneratorSpec& spec, int k);

struct SplitInjectionReport {
    bool split_injective = false;
    std::vector<BigInt> divisors;
};

/// Split injective over Z iff the expansion has full row rank and every
/// elementary divisor equals 1.
SplitInjectionReport verify_split_injection(const TensorExpansion& expansion);

/// phi : V -> T(W) truncated at max_weight, given on each V basis element
/// by weight-graded components; the weight-w component is a dense vector
/// of length w_rank^w.
struct TruncatedTensorMap {
    std::size_t v_rank = 0, w_rank = 0;
    int max_weight = 0;
    std::vector<std::vector<std::vector<BigInt>>> images; // [j][w-1] -> coeffs

    void validate() const; // throws std::invalid_argument on dimension mismatch
};

/// Checks, on every basic tensor of V^{otimes k}, that the weight-k
/// component of the multiplicative extension of phi equals that of the
/// extension of phi's weight-1 truncation.
bool verify_leading_terms(const TruncatedTensorMap& phi, int k);

} // namespace hypcert::freelie

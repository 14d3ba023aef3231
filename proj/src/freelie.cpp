#include "hypcert/freelie.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

#include "hypcert/numtheory.hpp"

namespace hypcert::freelie {

void GeneratorSpec::validate() const {
    if (degrees.empty())
        throw std::invalid_argument("GeneratorSpec: at least one generator required");
    for (long long d : degrees)
        if (d < 1)
            throw std::invalid_argument("GeneratorSpec: generator degrees must be >= 1");
}

HallBasis::HallBasis(GeneratorSpec spec, int max_weight) : spec_(std::move(spec)) {
    spec_.validate();
    if (max_weight < 1)
        throw std::invalid_argument("hall_basis: max_weight must be >= 1");

    const int n = spec_.count();
    by_weight_.assign(max_weight, {});
    nodes_.reserve(n);
    for (int i = 0; i < n; ++i) {
        nodes_.push_back({-1, -1, 1, spec_.degrees[i]});
        by_weight_[0].push_back(i);
    }

    // Iterating splits with ascending left weight, then ascending left and
    // right ids, emits each weight class already in Hall order.
    for (int w = 2; w <= max_weight; ++w) {
        auto& bucket = by_weight_[w - 1];
        for (int wl = 1; wl <= w - wl; ++wl) {
            int wr = w - wl;
            for (int32_t u : by_weight_[wl - 1]) {
                for (int32_t v : by_weight_[wr - 1]) {
                    if (!is_basic_pair(u, v))
                        continue;
                    nodes_.push_back({u, v, w, nodes_[u].degree + nodes_[v].degree});
                    bucket.push_back(static_cast<int32_t>(nodes_.size() - 1));
                }
            }
        }
        BigInt expected = numtheory::witt(n, w);
        if (BigInt(bucket.size()) != expected)
            throw std::logic_error("hall_basis: weight " + std::to_string(w) +
                                   " class has size " + std::to_string(bucket.size()) +
                                   ", Witt formula gives " + expected.str());
    }
}

const std::vector<int32_t>& HallBasis::weight_class(int k) const {
    if (k < 1 || k > max_weight())
        throw std::out_of_range("HallBasis: weight out of range");
    return by_weight_[k - 1];
}

int HallBasis::compare(int32_t a, int32_t b) const {
    if (a == b)
        return 0;
    const Node& na = nodes_[a];
    const Node& nb = nodes_[b];
    if (na.weight != nb.weight)
        return na.weight < nb.weight ? -1 : 1;
    if (na.left < 0) // both generators
        return a < b ? -1 : 1;
    if (int c = compare(na.left, nb.left); c != 0)
        return c;
    return compare(na.right, nb.right);
}

bool HallBasis::is_basic_pair(int32_t left, int32_t right) const {
    if (compare(left, right) >= 0)
        return false;
    const Node& r = nodes_[right];
    return r.left < 0 || compare(r.left, left) <= 0;
}

std::string HallBasis::to_string(int32_t id) const {
    const Node& nd = nodes_[id];
    if (nd.left < 0)
        return "x" + std::to_string(id + 1);
    return "[" + to_string(nd.left) + "," + to_string(nd.right) + "]";
}

std::vector<long long> HallBasis::multidegree(int32_t id) const {
    std::vector<long long> counts(spec_.count(), 0);
    auto walk = [&](auto&& self, int32_t node_id) -> void {
        const Node& nd = nodes_[node_id];
        if (nd.left < 0) {
            ++counts[node_id];
            return;
        }
        self(self, nd.left);
        self(self, nd.right);
    };
    walk(walk, id);
    return counts;
}

HallBasis hall_basis(const GeneratorSpec& spec, int max_weight) {
    return HallBasis(spec, max_weight);
}

std::map<long long, BigInt> multidegree_census(const HallBasis& basis, int k) {
    std::map<long long, BigInt> census;
    for (int32_t id : basis.weight_class(k))
        census[basis.node(id).degree] += 1;
    return census;
}

BigInt multidegree_witt_count(long long k1, long long k2) {
    if (k1 < 0 || k2 < 0 || k1 + k2 < 1)
        throw std::domain_error("multidegree_witt_count: weight must be positive");
    long long k = k1 + k2;
    long long g = std::gcd(k1, k2); // gcd(k, 0) = k covers one-sided multidegrees
    BigInt sum = 0;
    for (long long d : numtheory::divisors(g))
        sum += numtheory::mobius(d) * numtheory::binomial(k / d, k1 / d);
    if (sum % k != 0)
        throw std::logic_error("multidegree_witt_count: sum not divisible by weight");
    return sum / k;
}

std::map<long long, BigInt> wedge_multidegree_counts(long long q1, long long q2, long long k) {
    if (q1 < 1 || q2 < 1 || k < 1)
        throw std::domain_error("wedge_multidegree_counts: arguments must be positive");
    std::map<long long, BigInt> out;
    for (long long k1 = 0; k1 <= k; ++k1) {
        BigInt count = multidegree_witt_count(k1, k - k1);
        if (count != 0)
            out[k1 * q1 + (k - k1) * q2] += count;
    }
    return out;
}

BigInt graded_witt_total(const GeneratorSpec& spec, int k) {
    spec.validate();
    if (k < 1)
        throw std::domain_error("graded_witt_total: weight must be positive");
    return numtheory::witt(spec.count(), k);
}

namespace {

// Sparse expansion of a basic product in the tensor algebra: word index
// (base n, most significant letter first) -> integer coefficient.
using SparseRow = std::map<long long, long long>;

struct ExpansionMemo {
    std::vector<SparseRow> rows;
    std::vector<bool> done;

    explicit ExpansionMemo(std::size_t size) : rows(size), done(size, false) {}
};

SparseRow expand(const HallBasis& basis, int32_t id, ExpansionMemo& memo, long long n) {
    if (memo.done[id])
        return memo.rows[id];
    const auto& nd = basis.node(id);
    SparseRow out;
    if (nd.left < 0) {
        out[id] = 1;
    } else {
        SparseRow a = expand(basis, nd.left, memo, n);
        SparseRow b = expand(basis, nd.right, memo, n);
        long long shift_b = 1;
        for (int i = 0; i < basis.node(nd.right).weight; ++i)
            shift_b *= n;
        long long shift_a = 1;
        for (int i = 0; i < basis.node(nd.left).weight; ++i)
            shift_a *= n;
        // [x,y] -> xy - (-1)^{|x||y|} yx, signs by degree parity
        long long sign = (basis.node(nd.left).degree % 2 != 0 &&
                          basis.node(nd.right).degree % 2 != 0)
                             ? 1
                             : -1;
        for (const auto& [wa, ca] : a)
            for (const auto& [wb, cb] : b) {
                out[wa * shift_b + wb] += ca * cb;
                out[wb * shift_a + wa] += sign * ca * cb;
            }
        std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    }
    memo.rows[id] = out;
    memo.done[id] = true;
    return out;
}

} // namespace

TensorExpansion lie_to_tensor_matrix(const GeneratorSpec& spec, int k) {
    HallBasis basis(spec, k);
    const auto& ids = basis.weight_class(k);
    const long long n = spec.count();

    long long cols = 1;
    for (int i = 0; i < k; ++i)
        cols *= n;

    TensorExpansion expansion;
    expansion.weight = k;
    expansion.spec = spec;
    expansion.matrix = linalg::IntMatrix(ids.size(), static_cast<std::size_t>(cols));
    expansion.row_labels.reserve(ids.size());

    // Children precede parents in the arena, so the last id bounds them all.
    ExpansionMemo memo(ids.empty() ? 0 : static_cast<std::size_t>(ids.back()) + 1);

    for (std::size_t row = 0; row < ids.size(); ++row) {
        for (const auto& [word, coeff] : expand(basis, ids[row], memo, n))
            expansion.matrix.at(row, static_cast<std::size_t>(word)) = coeff;
        expansion.row_labels.push_back(basis.to_string(ids[row]));
    }
    return expansion;
}

SplitInjectionReport verify_split_injection(const TensorExpansion& expansion) {
    SplitInjectionReport report;
    report.divisors = linalg::smith_elementary_divisors(expansion.matrix);
    bool all_one = true;
    for (const BigInt& d : report.divisors)
        if (d != 1)
            all_one = false;
    report.split_injective = all_one && report.divisors.size() == expansion.matrix.rows;
    return report;
}

void TruncatedTensorMap::validate() const {
    if (v_rank == 0 || w_rank == 0 || max_weight < 1)
        throw std::invalid_argument("TruncatedTensorMap: ranks and weight must be positive");
    if (images.size() != v_rank)
        throw std::invalid_argument("TruncatedTensorMap: one image per V basis element required");
    for (const auto& image : images) {
        if (image.size() != static_cast<std::size_t>(max_weight))
            throw std::invalid_argument("TruncatedTensorMap: image must have max_weight components");
        std::size_t dim = 1;
        for (int w = 1; w <= max_weight; ++w) {
            dim *= w_rank;
            if (image[w - 1].size() != dim)
                throw std::invalid_argument("TruncatedTensorMap: weight " + std::to_string(w) +
                                            " component has wrong dimension");
        }
    }
}

namespace {

// Graded element of T(W) truncated at weight cap; component w-1 has
// dimension w_rank^w.
using Graded = std::vector<std::vector<BigInt>>;

Graded graded_zero(std::size_t w_rank, int cap) {
    Graded g(cap);
    std::size_t dim = 1;
    for (int w = 1; w <= cap; ++w) {
        dim *= w_rank;
        g[w - 1].assign(dim, 0);
    }
    return g;
}

// Concatenation product, discarding weights above cap.
Graded graded_mul(const Graded& a, const Graded& b, std::size_t w_rank, int cap) {
    Graded out = graded_zero(w_rank, cap);
    std::vector<std::size_t> dim(cap + 1);
    dim[0] = 1;
    for (int w = 1; w <= cap; ++w)
        dim[w] = dim[w - 1] * w_rank;
    for (int wa = 1; wa <= cap; ++wa)
        for (int wb = 1; wa + wb <= cap; ++wb)
            for (std::size_t i = 0; i < a[wa - 1].size(); ++i) {
                if (a[wa - 1][i] == 0)
                    continue;
                for (std::size_t j = 0; j < b[wb - 1].size(); ++j) {
                    if (b[wb - 1][j] == 0)
                        continue;
                    out[wa + wb - 1][i * dim[wb] + j] += a[wa - 1][i] * b[wb - 1][j];
                }
            }
    return out;
}

Graded image_of(const TruncatedTensorMap& phi, std::size_t j, int cap, bool weight_one_only) {
    Graded g = graded_zero(phi.w_rank, cap);
    int limit = weight_one_only ? 1 : std::min(cap, phi.max_weight);
    for (int w = 1; w <= limit; ++w)
        g[w - 1] = phi.images[j][w - 1];
    return g;
}

} // namespace

bool verify_leading_terms(const TruncatedTensorMap& phi, int k) {
    phi.validate();
    if (k < 1 || k > phi.max_weight)
        throw std::invalid_argument("verify_leading_terms: weight must lie in [1, max_weight]");

    // Walk every basic tensor v_{i_1} x ... x v_{i_k}.
    std::vector<std::size_t> index(k, 0);
    for (;;) {
        Graded full = image_of(phi, index[0], k, false);
        Graded truncated = image_of(phi, index[0], k, true);
        for (int t = 1; t < k; ++t) {
            full = graded_mul(full, image_of(phi, index[t], k, false), phi.w_rank, k);
            truncated = graded_mul(truncated, image_of(phi, index[t], k, true), phi.w_rank, k);
        }
        if (full[k - 1] != truncated[k - 1])
            return false;

        int pos = k - 1;
        while (pos >= 0 && ++index[pos] == phi.v_rank)
            index[pos--] = 0;
        if (pos < 0)
            break;
    }
    return true;
}

} // namespace hypcert::freelie

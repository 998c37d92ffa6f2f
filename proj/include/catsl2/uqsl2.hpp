#pragma once

#include <map>
#include <string>
#include <vector>

#include "catsl2/qcore.hpp"

namespace catsl2 {

// Element of the irreducible module V(N) in the divided-power basis
// b_j = f^{(j)} b_0, j = 0..N. Invariant: no zero coordinates stored;
// b_j has weight N - 2j, so distinct indices carry distinct weights.
class ModuleElement {
public:
    explicit ModuleElement(int highest_weight);

    static ModuleElement zero(int highest_weight) { return ModuleElement(highest_weight); }
    static ModuleElement basis(int highest_weight, int j);

    [[nodiscard]] int N() const { return n_; }
    [[nodiscard]] bool is_zero() const { return coords_.empty(); }
    [[nodiscard]] const std::map<int, LaurentPoly>& coords() const { return coords_; }
    [[nodiscard]] LaurentPoly coeff(int j) const;

    void add_term(int j, const LaurentPoly& c);

    [[nodiscard]] ModuleElement operator-() const;
    ModuleElement& operator+=(const ModuleElement& rhs);
    ModuleElement& operator-=(const ModuleElement& rhs);
    friend ModuleElement operator+(ModuleElement lhs, const ModuleElement& rhs) { return lhs += rhs; }
    friend ModuleElement operator-(ModuleElement lhs, const ModuleElement& rhs) { return lhs -= rhs; }

    [[nodiscard]] ModuleElement scaled(const LaurentPoly& c) const;

    // Homogeneous means supported in a single weight; zero is homogeneous.
    [[nodiscard]] bool is_homogeneous() const { return coords_.size() <= 1; }
    // Weight of a nonzero homogeneous element; throws otherwise.
    [[nodiscard]] int weight() const;

    bool operator==(const ModuleElement& rhs) const {
        return n_ == rhs.n_ && coords_ == rhs.coords_;
    }

    [[nodiscard]] std::string str() const;

private:
    int n_ = 0;
    std::map<int, LaurentPoly> coords_;
};

// Divided-power actions, closed form: f^{(r)} b_j = qbinom(j+r, r) b_{j+r}
// (zero past j+r > N), e^{(r)} b_j = qbinom(N-j+r, r) b_{j-r} (zero past
// j < r), k^{s} b_j = q^{s(N-2j)} b_j for s = +-1.
[[nodiscard]] ModuleElement act_f_div(int r, const ModuleElement& v);
[[nodiscard]] ModuleElement act_e_div(int r, const ModuleElement& v);
[[nodiscard]] ModuleElement act_k(int sign, const ModuleElement& v);

// Reflection on a homogeneous vector of weight lambda >= 0:
// sum_s (-1)^s q^s f^{(lambda+s)} e^{(s)} v. Result has weight -lambda.
// Throws std::invalid_argument on nonhomogeneous or negative-weight input.
[[nodiscard]] ModuleElement t_action(const ModuleElement& v, int lambda);

// Matrix between two weight spaces of V(N); rows index the target basis,
// columns the source basis.
struct WeightOperator {
    int N = 0;
    int source_weight = 0;
    int target_weight = 0;
    std::vector<std::vector<LaurentPoly>> entries;

    void validate() const;  // throws std::logic_error on a shape mismatch
};

// Dimension of the weight-lambda space of V(N): one when |lambda| <= N and
// lambda = N (mod 2), else zero.
[[nodiscard]] int weight_space_dim(int N, int lambda);
// Basis index j with N - 2j = lambda; throws if the space is empty.
[[nodiscard]] int weight_space_index(int N, int lambda);

// Block of t mapping the weight-lambda space to the weight-(-lambda) space.
[[nodiscard]] WeightOperator t_block(int N, int lambda);

// Columns of t on the nonnegative-weight part of V(N): image of b_j for
// each j with N - 2j >= 0, in increasing j.
[[nodiscard]] std::vector<ModuleElement> t_matrix_columns(int N);

// t f^{(p)} b_0 as a single signed q-power multiple of b_{N-p}; requires
// N - 2p >= 0. The sign and exponent are measured, not assumed.
struct HighestWeightImage {
    int sign;        // +1 or -1
    int q_exponent;  // m with image = sign * q^m * b_{N-p}
};
[[nodiscard]] HighestWeightImage highest_weight_image(int N, int p);

// (ef - fe) b_j = [N-2j] b_j for all j.
[[nodiscard]] bool serre_relation_check(int N);

// t f = -q^2 k^{-1} e t on every weight-(lambda+2) space with lambda >= 0.
[[nodiscard]] bool t_intertwiner_check(int N);

// Every block t: V(lambda) -> V(-lambda), lambda >= 0, has determinant
// a signed power of q.
[[nodiscard]] bool t_block_determinant_check(int N);

// weight(t v) = -weight(v) on every nonnegative-weight basis vector.
[[nodiscard]] bool t_weight_negation_check(int N);

// e^{(b)} f^{(a)} b_j = sum_i qbinom_signed(lambda - a + b, i)
// f^{(a-i)} e^{(b-i)} b_j with lambda the weight of b_j, for all
// a <= max_a, b <= max_b, all j.
[[nodiscard]] bool lusztig_commutation_check(int N, int max_a, int max_b);

// In V(N): a vector b with e b = 0 of weight mu satisfies
// f^{(r)} f^{(mu)} b = 0 for 1 <= r <= p; dually for f b = 0 at weight -mu,
// e^{(r)} e^{(mu)} b = 0. Vacuously true when no such vector exists.
[[nodiscard]] bool lowest_from_highest_check(int N, int mu, int p);

}  // namespace catsl2

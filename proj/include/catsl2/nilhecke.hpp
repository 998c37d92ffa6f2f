#pragma once

#include <map>
#include <string>
#include <vector>

#include "catsl2/qcore.hpp"

namespace catsl2 {

// Multivariate polynomial in x_1..x_n over arbitrary-precision integers.
// Invariant: no zero coefficient stored; exponent vectors all have length n.
class MultiPoly {
public:
    explicit MultiPoly(int nvars = 0) : nvars_(nvars) {}

    static MultiPoly zero(int nvars) { return MultiPoly(nvars); }
    static MultiPoly one(int nvars) { return monomial(std::vector<int>(nvars, 0), 1); }
    static MultiPoly variable(int nvars, int i);  // 1-based index
    static MultiPoly monomial(std::vector<int> exps, Int coeff);

    [[nodiscard]] int nvars() const { return nvars_; }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] const std::map<std::vector<int>, Int>& terms() const { return terms_; }

    [[nodiscard]] MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& rhs);
    MultiPoly& operator-=(const MultiPoly& rhs);
    friend MultiPoly operator+(MultiPoly lhs, const MultiPoly& rhs) { return lhs += rhs; }
    friend MultiPoly operator-(MultiPoly lhs, const MultiPoly& rhs) { return lhs -= rhs; }
    friend MultiPoly operator*(const MultiPoly& lhs, const MultiPoly& rhs);

    // Action of the simple transposition s_i: swap x_i and x_{i+1} (1-based).
    [[nodiscard]] MultiPoly swap_adjacent(int i) const;

    // Total degree; -1 for the zero polynomial.
    [[nodiscard]] int total_degree() const;
    [[nodiscard]] bool is_homogeneous() const;

    bool operator==(const MultiPoly& rhs) const {
        return nvars_ == rhs.nvars_ && terms_ == rhs.terms_;
    }

    [[nodiscard]] std::string str() const;

private:
    int nvars_ = 0;
    std::map<std::vector<int>, Int> terms_;

    void add_term(const std::vector<int>& exps, const Int& c);
    friend MultiPoly demazure(int i, const MultiPoly& f);
};

// Demazure operator: f -> (f - s_i f)/(x_i - x_{i+1}); the division is exact
// for every input. Closed per-monomial form.
[[nodiscard]] MultiPoly demazure(int i, const MultiPoly& f);

// Division oracle for demazure: computes (f - s_i f)/(x_i - x_{i+1}) by
// multivariate long division, throwing std::logic_error on a nonzero
// remainder. Used to cross-check the closed form.
[[nodiscard]] MultiPoly demazure_by_division(int i, const MultiPoly& f);

// Generator of the operator calculus acting on MultiPoly.
// X(i): multiplication by x_i (1 <= i <= n).
// T(i): Demazure operator at i (1 <= i <= n-1).
struct NhGen {
    enum class Kind { X, T };
    Kind kind;
    int index;

    static NhGen X(int i) { return {Kind::X, i}; }
    static NhGen T(int i) { return {Kind::T, i}; }
};

using NhWord = std::vector<NhGen>;

// Applies one generator.
[[nodiscard]] MultiPoly apply_gen(const NhGen& g, const MultiPoly& f);

// Applies a word right to left: the last generator listed acts first, so the
// word reads like an operator composition.
[[nodiscard]] MultiPoly apply_word(const NhWord& w, const MultiPoly& f);

// Formal integer combination of words; the operator calculus's linear span.
struct NhOpExpr {
    std::vector<std::pair<Int, NhWord>> terms;

    static NhOpExpr word(NhWord w) { return {{{Int(1), std::move(w)}}}; }
};

[[nodiscard]] MultiPoly apply_op(const NhOpExpr& op, const MultiPoly& f);

// Operator equality tested on all monomials of total degree <= max_deg.
[[nodiscard]] bool ops_equal(const NhOpExpr& a, const NhOpExpr& b, int nvars, int max_deg);

// All monomials in n variables of total degree <= max_deg, deterministic order.
[[nodiscard]] std::vector<MultiPoly> spanning_monomials(int nvars, int max_deg);

// Permutations in one-line notation on {0..n-1}.
using Perm = std::vector<int>;

[[nodiscard]] Perm identity_perm(int n);
[[nodiscard]] Perm longest_perm(int n);
[[nodiscard]] int perm_length(const Perm& w);  // inversion count
[[nodiscard]] bool has_left_descent(const Perm& w, int i);  // letter i, 1-based
[[nodiscard]] Perm left_mul_s(int i, const Perm& w);

// Lexicographically least reduced word (letters 1..n-1).
[[nodiscard]] std::vector<int> lex_least_reduced_word(Perm w);

// Every reduced word of w; intended for small n.
[[nodiscard]] std::vector<std::vector<int>> all_reduced_words(const Perm& w);

// t along an explicit generator word (letters act right to left, first letter
// of the word is the outermost operator).
[[nodiscard]] MultiPoly apply_t_word(const std::vector<int>& letters, const MultiPoly& f);

// t_w via the lexicographically least reduced word of w.
[[nodiscard]] MultiPoly t_w(const Perm& w, const MultiPoly& f);

// Staircase monomial x_1^{n-1} x_2^{n-2} ... x_{n-1}.
[[nodiscard]] MultiPoly staircase_monomial(int n);

// Verifies t_{w0} x^delta t_{w0} = sign * t_{w0} on all monomials of total
// degree <= max_deg (raised internally so the check is not vacuous), asserts
// t_{w0} != 0 on that span, and returns the sign. Throws std::logic_error if
// no consistent sign exists.
[[nodiscard]] int staircase_idempotent_check(int n, int max_deg = 8);

// Verifies x_{i+1}^a t_i = t_i x_i^a - sum_{j=0}^{a-1} x_i^j x_{i+1}^{a-1-j}
// as operators on monomials of total degree <= max_deg.
[[nodiscard]] bool telescoping_identity_check(int i, int a, int n, int max_deg);

// All seven defining relations as operator identities on monomials of total
// degree <= max_deg, for every admissible index combination.
[[nodiscard]] bool relations_check(int n, int max_deg);

// Reduced-word independence: every reduced word of every w gives the same
// operator on monomials of degree <= max_deg.
[[nodiscard]] bool reduced_word_independence_check(int n, int max_deg);

// For f symmetric in x_i, x_{i+1}: t_i f = f t_i and t_i f t_i = 0; for such
// f additionally t_{w0} f t_{w0} = 0. Symmetric test inputs run over
// symmetrized monomials of total degree <= sym_deg.
[[nodiscard]] bool symmetric_lemmas_check(int n, int sym_deg, int max_deg);

// t_{w0} annihilates polynomials of degree < l(w0) and lowers homogeneous
// degree by exactly l(w0) otherwise.
[[nodiscard]] bool degree_lowering_check(int n, int max_deg);

}  // namespace catsl2

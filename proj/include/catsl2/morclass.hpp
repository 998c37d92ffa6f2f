#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "catsl2/qcore.hpp"
#include "catsl2/uqsl2.hpp"

namespace catsl2 {

enum class GenKind { E, F };

struct Gen {
    GenKind kind;
    int r;

    static Gen E(int r) { return {GenKind::E, r}; }
    static Gen F(int r) { return {GenKind::F, r}; }
};

// A word of generators in application order: the first entry acts on the
// source weight first.
using MorWord = std::vector<Gen>;

// Symbols (a, b) stay inside the weight window when all three weights the
// composite F^{(a)} E^{(b)} passes through lie in [-N, N].
[[nodiscard]] bool symbol_in_window(int mu, int N, int a, int b);

// Linear combination of canonical symbols F^{(a)} E^{(b)} with Laurent
// multiplicities, at a fixed source weight mu inside the window [-N, N].
// Invariants: every stored symbol passes symbol_in_window and maps mu to the
// single declared target weight; zero multiplicities are never stored.
//
// The negative-commutation flag records derivation history: it is set when a
// normalization step expanded an EF-pair whose quantum binomial top was
// negative. Multiplicities are guaranteed nonnegative only for classes built
// without such steps. The flag is ignored by operator==.
class MorClass {
public:
    MorClass(int window, int source_weight, int target_weight)
        : n_(window), mu_(source_weight), target_(target_weight) {}

    static MorClass zero(int window, int source_weight, int target_weight) {
        return MorClass(window, source_weight, target_weight);
    }
    static MorClass identity(int source_weight, int window);

    [[nodiscard]] int N() const { return n_; }
    [[nodiscard]] int mu() const { return mu_; }
    [[nodiscard]] int target_weight() const { return target_; }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] const std::map<std::pair<int, int>, LaurentPoly>& terms() const {
        return terms_;
    }

    [[nodiscard]] bool saw_negative_commutation() const { return saw_negative_; }
    void mark_negative_commutation() { saw_negative_ = true; }

    // Adds poly on symbol (a, b); silently drops symbols outside the window
    // (they denote the zero class) and cancelled terms. Throws
    // std::logic_error if the symbol's target differs from the declared one.
    void add_term(int a, int b, const LaurentPoly& poly);

    bool operator==(const MorClass& rhs) const {
        return n_ == rhs.n_ && mu_ == rhs.mu_ && target_ == rhs.target_ &&
               terms_ == rhs.terms_;
    }

    [[nodiscard]] std::string str() const;

private:
    int n_;
    int mu_;
    int target_;
    bool saw_negative_ = false;
    std::map<std::pair<int, int>, LaurentPoly> terms_;
};

// Single generator as a canonical class; the zero class when the generator
// steps outside the window. Requires |mu| <= N.
[[nodiscard]] MorClass generator(GenKind kind, int r, int mu, int N);

// Composes a generator on the left of c (acting on c's target weight).
[[nodiscard]] MorClass compose(GenKind kind, int r, const MorClass& c);

// Composes two classes; left.mu() must equal right.target_weight() and the
// windows must agree, else std::invalid_argument.
[[nodiscard]] MorClass compose(const MorClass& left, const MorClass& right);

// Canonical form of a word, applied generator by generator from the source.
// Requires |mu| <= N.
[[nodiscard]] MorClass normalize_word(const MorWord& word, int mu, int N);

[[nodiscard]] bool has_nonnegative_multiplicities(const MorClass& c);

// Matrix of the class on the weight spaces of V(N): the sum over symbols of
// multiplicity times the matrix of f^{(a)} e^{(b)}.
[[nodiscard]] WeightOperator evaluate(const MorClass& c, int N);

// Direct matrix composition of the word's generators on V(N); the oracle
// normalize-then-evaluate is checked against.
[[nodiscard]] WeightOperator word_matrix_oracle(const MorWord& word, int mu, int N);

// Terms of the reflection complex on the weight-lambda part: entry s is
// (sign (-1)^s, class q^s * F^{(lambda+s)} E^{(s)}), s = 0..(N-lambda)/2.
// Requires lambda >= 0 and lambda = N (mod 2).
[[nodiscard]] std::vector<std::pair<int, MorClass>> theta_terms(int N, int lambda);

// Alternating sum of the evaluated theta terms; equals the reflection block
// V(lambda) -> V(-lambda).
[[nodiscard]] WeightOperator euler_characteristic(int N, int lambda);

// euler_characteristic agrees with t_block on every weight lambda >= 0.
[[nodiscard]] bool theta_euler_check(int N);

// Multiplicity of the pure symbol (a, 0).
[[nodiscard]] LaurentPoly f_part_multiplicity(const MorClass& c, int a);

}  // namespace catsl2

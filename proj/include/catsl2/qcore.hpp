#pragma once

#include <map>
#include <string>
#include <boost/multiprecision/cpp_int.hpp>

namespace catsl2 {

using Int = boost::multiprecision::cpp_int;

// Laurent polynomial in one variable q with arbitrary-precision integer
// coefficients.
//
// Invariants:
//   - no zero coefficient is ever stored (zero polynomial == empty map)
//   - exponents are kept in ascending order (std::map)
// Values are immutable in spirit: every operation returns a fresh value.
class LaurentPoly {
public:
    LaurentPoly() = default;

    static LaurentPoly zero() { return LaurentPoly{}; }
    static LaurentPoly one() { return monomial(0, 1); }
    static LaurentPoly q_power(int exp) { return monomial(exp, 1); }
    static LaurentPoly constant(Int c);
    static LaurentPoly monomial(int exp, Int coeff);

    [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
    [[nodiscard]] Int coeff(int exp) const;
    [[nodiscard]] const std::map<int, Int>& terms() const { return coeffs_; }

    // Lowest / highest exponent with nonzero coefficient; requires nonzero.
    [[nodiscard]] int min_exp() const;
    [[nodiscard]] int max_exp() const;

    [[nodiscard]] LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& rhs);
    LaurentPoly& operator-=(const LaurentPoly& rhs);
    friend LaurentPoly operator+(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs += rhs; }
    friend LaurentPoly operator-(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs -= rhs; }
    friend LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs);
    LaurentPoly& operator*=(const LaurentPoly& rhs) { return *this = *this * rhs; }

    [[nodiscard]] LaurentPoly scaled(const Int& c) const;
    [[nodiscard]] LaurentPoly shifted(int exp) const;  // multiply by q^exp

    // Substitution q -> q^{-1} (bar involution).
    [[nodiscard]] LaurentPoly bar() const;
    [[nodiscard]] bool is_bar_invariant() const { return *this == bar(); }

    [[nodiscard]] bool has_nonnegative_coeffs() const;

    // Sum of coefficients (evaluation at q = 1).
    [[nodiscard]] Int eval_at_one() const;

    // True iff the polynomial is c*q^m with c in {+1, -1}.
    [[nodiscard]] bool is_signed_q_power() const;

    // Exact division; throws std::logic_error when the remainder is nonzero.
    [[nodiscard]] static LaurentPoly divide_exact(const LaurentPoly& num, const LaurentPoly& den);

    bool operator==(const LaurentPoly& rhs) const { return coeffs_ == rhs.coeffs_; }

    [[nodiscard]] std::string str() const;

private:
    std::map<int, Int> coeffs_;
};

// Graded dimension: a Laurent polynomial with nonnegative coefficients.
// The constructor enforces nonnegativity; sums and products stay closed.
class GradedDim {
public:
    GradedDim() = default;
    explicit GradedDim(LaurentPoly p);

    [[nodiscard]] const LaurentPoly& poly() const { return poly_; }
    [[nodiscard]] Int total() const { return poly_.eval_at_one(); }

    friend GradedDim operator+(const GradedDim& a, const GradedDim& b) { return GradedDim(a.poly_ + b.poly_); }
    friend GradedDim operator*(const GradedDim& a, const GradedDim& b) { return GradedDim(a.poly_ * b.poly_); }
    bool operator==(const GradedDim& rhs) const { return poly_ == rhs.poly_; }

private:
    LaurentPoly poly_;
};

// Balanced quantum integer: q^{k-1} + q^{k-3} + ... + q^{-(k-1)}; qint(0) = 0.
// Rejects negative k (std::invalid_argument).
[[nodiscard]] LaurentPoly qint(int k);

// Quantum integer extended to all of ZZ by antisymmetry: [-k] = -[k].
[[nodiscard]] LaurentPoly qint_signed(int k);

// Balanced quantum binomial [n choose k] for n >= 0; zero when k < 0 or
// k > n. Computed as an exact quotient of products of quantum integers with
// a zero-remainder check, not from a closed-form product.
[[nodiscard]] LaurentPoly qbinom(int n, int k);

// Quantum binomial extended to negative upper index via
// [n choose k] = (-1)^k [k-n-1 choose k] for n < 0.
[[nodiscard]] LaurentPoly qbinom_signed(int n, int k);

// Graded dimension of the symmetrically regraded cohomology of the
// Grassmannian of k-planes in n-space; equals qbinom(n, k).
// Rejects k outside [0, n].
[[nodiscard]] GradedDim graded_dim_grassmannian(int k, int n);

// Sum of coefficients (free-function form).
[[nodiscard]] Int eval_at_one(const LaurentPoly& p);

}  // namespace catsl2

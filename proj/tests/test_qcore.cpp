#include "doctest.h"

#include "catsl2/qcore.hpp"

#include <stdexcept>

using namespace catsl2;

namespace {

// Independent oracle for quantum binomials with arbitrary integer upper
// index: product of signed quantum integers divided exactly by [k]!.
LaurentPoly qbinom_product_oracle(int n, int k) {
    if (k < 0) return LaurentPoly::zero();
    LaurentPoly num = LaurentPoly::one();
    LaurentPoly den = LaurentPoly::one();
    for (int i = 0; i < k; ++i) num *= qint_signed(n - i);
    for (int i = 1; i <= k; ++i) den *= qint(i);
    if (num.is_zero()) return LaurentPoly::zero();
    return LaurentPoly::divide_exact(num, den);
}

}  // namespace

TEST_CASE("laurent polynomial arithmetic basics") {
    const LaurentPoly q = LaurentPoly::q_power(1);
    const LaurentPoly qi = LaurentPoly::q_power(-1);
    CHECK(q + qi == qint(2));
    CHECK((q - q).is_zero());
    CHECK(q * qi == LaurentPoly::one());
    CHECK((-q).coeff(1) == -1);
    CHECK(q.shifted(3) == LaurentPoly::q_power(4));
    CHECK(qint(3).bar() == qint(3));
    CHECK(LaurentPoly::monomial(2, 5).scaled(0).is_zero());
}

TEST_CASE("no zero coefficients are stored") {
    LaurentPoly p = qint(2);
    p -= LaurentPoly::q_power(1);
    p -= LaurentPoly::q_power(-1);
    CHECK(p.is_zero());
    CHECK(p.terms().empty());
    LaurentPoly prod = (LaurentPoly::q_power(1) + LaurentPoly::q_power(0)) *
                       (LaurentPoly::q_power(1) - LaurentPoly::q_power(0));
    CHECK(prod == LaurentPoly::q_power(2) - LaurentPoly::one());
    CHECK(prod.terms().size() == 2);
}

TEST_CASE("quantum integers") {
    CHECK(qint(0).is_zero());
    CHECK(qint(1) == LaurentPoly::one());
    CHECK(qint(2) == LaurentPoly::q_power(1) + LaurentPoly::q_power(-1));
    CHECK(qint(5).eval_at_one() == 5);
    CHECK(qint(7).min_exp() == -6);
    CHECK(qint(7).max_exp() == 6);
    CHECK_THROWS_AS((void)qint(-1), std::invalid_argument);
    CHECK(qint_signed(-4) == -qint(4));
    CHECK(qint_signed(3) == qint(3));
}

TEST_CASE("quantum binomial frozen values and edge cases") {
    CHECK(qbinom(0, 0) == LaurentPoly::one());
    CHECK(qbinom(5, 0) == LaurentPoly::one());
    CHECK(qbinom(5, 5) == LaurentPoly::one());
    CHECK(qbinom(3, -1).is_zero());
    CHECK(qbinom(3, 4).is_zero());
    CHECK(qbinom(2, 1) == qint(2));

    LaurentPoly expected;  // q^4 + q^2 + 2 + q^-2 + q^-4
    expected += LaurentPoly::q_power(4);
    expected += LaurentPoly::q_power(2);
    expected += LaurentPoly::monomial(0, 2);
    expected += LaurentPoly::q_power(-2);
    expected += LaurentPoly::q_power(-4);
    CHECK(qbinom(4, 2) == expected);

    CHECK_THROWS_AS((void)qbinom(-2, 1), std::invalid_argument);
}

TEST_CASE("quantum binomial symmetry, bar invariance, positivity") {
    for (int n = 0; n <= 16; ++n) {
        for (int k = 0; k <= n; ++k) {
            const LaurentPoly b = qbinom(n, k);
            CHECK(b == qbinom(n, n - k));
            CHECK(b.is_bar_invariant());
            CHECK(b.has_nonnegative_coeffs());
        }
    }
}

TEST_CASE("quantum Pascal recurrence") {
    // [n choose k] = q^k [n-1 choose k] + q^{-(n-k)} [n-1 choose k-1]
    for (int n = 1; n <= 14; ++n) {
        for (int k = 0; k <= n; ++k) {
            const LaurentPoly lhs = qbinom(n, k);
            const LaurentPoly rhs = qbinom(n - 1, k).shifted(k) +
                                    qbinom(n - 1, k - 1).shifted(-(n - k));
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("signed quantum binomial matches product oracle") {
    for (int n = -10; n <= 10; ++n) {
        for (int k = 0; k <= 6; ++k) {
            CHECK(qbinom_signed(n, k) == qbinom_product_oracle(n, k));
        }
    }
    CHECK(qbinom_signed(-2, 1) == -qint(2));
    CHECK(qbinom_signed(-1, 3) == -LaurentPoly::one());
}

TEST_CASE("quantum telescoping identity") {
    // q^s [t+1] - q^{s+1} [t+2] = -q^{2s+t+2} with t = lambda + s.
    for (int s = 0; s <= 12; ++s) {
        for (int lambda = 0; lambda <= 12; ++lambda) {
            const LaurentPoly lhs = qint(lambda + s + 1).shifted(s) - qint(lambda + s + 2).shifted(s + 1);
            const LaurentPoly rhs = -LaurentPoly::q_power(2 * s + lambda + 2);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("grassmannian graded dimension") {
    const GradedDim g = graded_dim_grassmannian(2, 4);
    CHECK(g.poly() == qbinom(4, 2));
    CHECK(g.total() == 6);
    CHECK(g.poly().min_exp() == -4);
    CHECK(g.poly().max_exp() == 4);
    // Support lies in -k(n-k)..k(n-k) in steps of 2.
    for (int n = 0; n <= 10; ++n) {
        for (int k = 0; k <= n; ++k) {
            const LaurentPoly p = graded_dim_grassmannian(k, n).poly();
            if (p.is_zero()) continue;
            CHECK(p.max_exp() == k * (n - k));
            CHECK(p.min_exp() == -k * (n - k));
            for (const auto& [e, c] : p.terms()) CHECK((e - k * (n - k)) % 2 == 0);
        }
    }
    CHECK_THROWS_AS((void)graded_dim_grassmannian(3, 2), std::invalid_argument);
    CHECK_THROWS_AS((void)graded_dim_grassmannian(-1, 2), std::invalid_argument);
    CHECK_THROWS_AS(GradedDim(-qint(2)), std::invalid_argument);
}

TEST_CASE("exact division") {
    const LaurentPoly n = qint(2) * qint(3) * LaurentPoly::q_power(-5);
    CHECK(LaurentPoly::divide_exact(n, qint(3)) == qint(2).shifted(-5));
    CHECK(LaurentPoly::divide_exact(LaurentPoly::zero(), qint(2)).is_zero());
    CHECK_THROWS_AS((void)LaurentPoly::divide_exact(qint(3), qint(2)), std::logic_error);
    CHECK_THROWS_AS((void)LaurentPoly::divide_exact(qint(2), LaurentPoly::zero()), std::logic_error);
}

TEST_CASE("eval_at_one and signed power classification") {
    CHECK(eval_at_one(qbinom(6, 3)) == 20);
    CHECK(LaurentPoly::q_power(-7).is_signed_q_power());
    CHECK((-LaurentPoly::q_power(4)).is_signed_q_power());
    CHECK_FALSE(qint(2).is_signed_q_power());
    CHECK_FALSE(LaurentPoly::monomial(3, 2).is_signed_q_power());
    CHECK_FALSE(LaurentPoly::zero().is_signed_q_power());
}

TEST_CASE("string rendering") {
    CHECK(LaurentPoly::zero().str() == "0");
    CHECK(qint(2).str() == "q^-1 + q");
    CHECK((-LaurentPoly::q_power(2)).str() == "-q^2");
    CHECK(LaurentPoly::monomial(0, 3).str() == "3");
}

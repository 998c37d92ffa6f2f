#include "doctest.h"

#include <stdexcept>

#include "catsl2/uqsl2.hpp"

using namespace catsl2;

namespace {

// Closed form for the reflection on a basis vector, derived by expanding the
// alternating sum and telescoping the q-binomial products.
ModuleElement t_closed_form(int N, int j) {
    const int lambda = N - 2 * j;
    LaurentPoly c = LaurentPoly::q_power(j * (lambda + j + 1));
    if (j % 2 == 1) {
        c = -c;
    }
    return ModuleElement::basis(N, N - j).scaled(c);
}

}  // namespace

TEST_CASE("module element arithmetic and weights") {
    const ModuleElement b1 = ModuleElement::basis(4, 1);
    CHECK(b1.weight() == 2);
    CHECK(b1.is_homogeneous());

    ModuleElement v = b1 + ModuleElement::basis(4, 3);
    CHECK_FALSE(v.is_homogeneous());
    CHECK_THROWS_AS((void)v.weight(), std::logic_error);

    v -= ModuleElement::basis(4, 3);
    CHECK(v == b1);
    CHECK((b1 - b1).is_zero());
    CHECK(b1.scaled(LaurentPoly::zero()).is_zero());
    CHECK(ModuleElement::basis(2, 2).weight() == -2);

    CHECK_THROWS_AS((void)ModuleElement::basis(2, 3), std::invalid_argument);
    CHECK_THROWS_AS((void)ModuleElement(-1), std::invalid_argument);
}

TEST_CASE("divided power f action") {
    CHECK(act_f_div(1, ModuleElement::basis(3, 0)) == ModuleElement::basis(3, 1));
    CHECK(act_f_div(2, ModuleElement::basis(3, 1)) ==
          ModuleElement::basis(3, 3).scaled(qint(3)));
    CHECK(act_f_div(2, ModuleElement::basis(3, 2)).is_zero());
    const ModuleElement v = ModuleElement::basis(5, 2).scaled(qint(2));
    CHECK(act_f_div(0, v) == v);
}

TEST_CASE("divided power e action") {
    CHECK(act_e_div(1, ModuleElement::basis(3, 0)).is_zero());
    for (int N = 1; N <= 6; ++N) {
        CHECK(act_e_div(1, ModuleElement::basis(N, 1)) ==
              ModuleElement::basis(N, 0).scaled(qint(N)));
    }
    const ModuleElement v = ModuleElement::basis(5, 2);
    CHECK(act_e_div(0, v) == v);
}

TEST_CASE("k action") {
    CHECK(act_k(1, ModuleElement::basis(4, 0)) ==
          ModuleElement::basis(4, 0).scaled(LaurentPoly::q_power(4)));
    CHECK(act_k(-1, ModuleElement::basis(4, 4)) ==
          ModuleElement::basis(4, 4).scaled(LaurentPoly::q_power(4)));
    const ModuleElement v =
        ModuleElement::basis(4, 1) + ModuleElement::basis(4, 3).scaled(qint(2));
    CHECK(act_k(-1, act_k(1, v)) == v);
    CHECK_THROWS_AS((void)act_k(2, v), std::invalid_argument);
}

TEST_CASE("quantum Serre relation on V(N)") {
    for (int N = 0; N <= 12; ++N) {
        CHECK(serre_relation_check(N));
    }
}

TEST_CASE("reflection on pinned inputs") {
    CHECK(t_action(ModuleElement::basis(1, 0), 1) == ModuleElement::basis(1, 1));
    CHECK(t_action(ModuleElement::basis(2, 1), 0) ==
          ModuleElement::basis(2, 1).scaled(-LaurentPoly::q_power(2)));

    CHECK_THROWS_AS((void)t_action(ModuleElement::basis(2, 2), -2),
                    std::invalid_argument);
    const ModuleElement mixed =
        ModuleElement::basis(4, 0) + ModuleElement::basis(4, 1);
    CHECK_THROWS_AS((void)t_action(mixed, 4), std::invalid_argument);
}

TEST_CASE("reflection matches its closed form") {
    for (int N = 0; N <= 10; ++N) {
        for (int j = 0; 2 * j <= N; ++j) {
            CHECK(t_action(ModuleElement::basis(N, j), N - 2 * j) ==
                  t_closed_form(N, j));
        }
    }
}

TEST_CASE("reflection negates weights") {
    for (int N = 0; N <= 12; ++N) {
        CHECK(t_weight_negation_check(N));
    }
}

TEST_CASE("reflection intertwines f and e") {
    for (int N = 0; N <= 12; ++N) {
        CHECK(t_intertwiner_check(N));
    }
}

TEST_CASE("t blocks between opposite weight spaces") {
    const WeightOperator b2 = t_block(2, 2);
    CHECK(b2.entries.size() == 1);
    CHECK(b2.entries[0][0] == LaurentPoly::one());
    const WeightOperator b0 = t_block(2, 0);
    CHECK(b0.entries[0][0] == -LaurentPoly::q_power(2));
    CHECK(t_block(2, 1).entries.empty());

    for (int N = 0; N <= 12; ++N) {
        CHECK(t_block_determinant_check(N));
    }

    WeightOperator bad{4, 0, 0, {}};
    CHECK_THROWS_AS(bad.validate(), std::logic_error);
}

TEST_CASE("divided power commutation cross-check") {
    for (int N = 0; N <= 8; ++N) {
        CHECK(lusztig_commutation_check(N, 3, 3));
    }
}

TEST_CASE("lowest weight from highest weight") {
    CHECK(act_f_div(1, act_f_div(3, ModuleElement::basis(3, 0))).is_zero());
    CHECK(lowest_from_highest_check(3, 3, 1));
    for (int N = 0; N <= 10; ++N) {
        for (int mu = 0; mu <= N; ++mu) {
            CHECK(lowest_from_highest_check(N, mu, 3));
        }
    }
}

TEST_CASE("reflection of divided-power highest weight images") {
    for (int N = 0; N <= 10; ++N) {
        for (int p = 0; 2 * p <= N; ++p) {
            const int lambda = N - 2 * p;
            const HighestWeightImage h = highest_weight_image(N, p);
            CHECK(h.sign == (p % 2 == 0 ? 1 : -1));
            CHECK(h.q_exponent == p * (lambda + p + 1));
        }
    }
}

TEST_CASE("t matrix columns on the nonnegative weight part") {
    const auto cols = t_matrix_columns(5);
    CHECK(cols.size() == 3);
    for (size_t j = 0; j < cols.size(); ++j) {
        CHECK(cols[j].coords().size() == 1);
        CHECK(cols[j].coords().begin()->first == 5 - static_cast<int>(j));
    }
}

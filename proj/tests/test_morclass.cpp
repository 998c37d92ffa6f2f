#include "doctest.h"

#include <stdexcept>
#include <vector>

#include "catsl2/morclass.hpp"

using namespace catsl2;

namespace {

LaurentPoly term_at(const MorClass& c, int a, int b) {
    auto it = c.terms().find({a, b});
    return it == c.terms().end() ? LaurentPoly::zero() : it->second;
}

// All words of the given length over E^{(1..rmax)}, F^{(1..rmax)}.
std::vector<MorWord> words_of_length(int len, int rmax) {
    std::vector<MorWord> out{{}};
    for (int step = 0; step < len; ++step) {
        std::vector<MorWord> next;
        for (const MorWord& w : out) {
            for (int r = 1; r <= rmax; ++r) {
                for (GenKind kind : {GenKind::E, GenKind::F}) {
                    MorWord v = w;
                    v.push_back({kind, r});
                    next.push_back(std::move(v));
                }
            }
        }
        out = std::move(next);
    }
    return out;
}

}  // namespace

TEST_CASE("window membership") {
    CHECK(symbol_in_window(0, 4, 2, 2));
    CHECK_FALSE(symbol_in_window(0, 4, 0, 3));   // intermediate 6
    CHECK_FALSE(symbol_in_window(0, 4, 4, 1));   // target -6
    CHECK_FALSE(symbol_in_window(6, 4, 0, 0));   // source outside
    CHECK(symbol_in_window(4, 4, 4, 0));
}

TEST_CASE("generators") {
    CHECK(generator(GenKind::E, 1, 4, 4).is_zero());
    CHECK(generator(GenKind::F, 1, -4, 4).is_zero());
    CHECK(generator(GenKind::F, 0, 2, 4) == MorClass::identity(2, 4));
    const MorClass e2 = generator(GenKind::E, 2, 0, 4);
    CHECK(e2.terms().size() == 1);
    CHECK(term_at(e2, 0, 2) == LaurentPoly::one());
    CHECK(e2.target_weight() == 4);
    CHECK_THROWS_AS((void)generator(GenKind::E, 1, 7, 4), std::invalid_argument);
}

TEST_CASE("composition on pinned words") {
    // E after F at source weight 2.
    const MorClass ef = normalize_word({Gen::F(1), Gen::E(1)}, 2, 6);
    CHECK(ef.terms().size() == 2);
    CHECK(term_at(ef, 1, 1) == LaurentPoly::one());
    CHECK(term_at(ef, 0, 0) == qint(2));

    // At weight 0 the identity part vanishes.
    const MorClass ef0 = normalize_word({Gen::F(1), Gen::E(1)}, 0, 6);
    CHECK(ef0.terms().size() == 1);
    CHECK(term_at(ef0, 1, 1) == LaurentPoly::one());

    // F after F merges with a quantum binomial.
    const MorClass ff = normalize_word({Gen::F(1), Gen::F(1)}, 2, 6);
    CHECK(ff.terms().size() == 1);
    CHECK(term_at(ff, 2, 0) == qbinom(2, 1));

    const MorClass empty = normalize_word({}, 2, 6);
    CHECK(empty == MorClass::identity(2, 6));
}

TEST_CASE("EF commutation coefficients") {
    const int N = 8;
    for (int lambda = -2; lambda <= 2; ++lambda) {
        for (int a = 0; a <= 3; ++a) {
            for (int b = 0; b <= 3; ++b) {
                const MorClass c = normalize_word({Gen::F(a), Gen::E(b)}, lambda, N);
                for (int j = 0; j <= std::min(a, b); ++j) {
                    CHECK(term_at(c, a - j, b - j) ==
                          qbinom_signed(lambda - a + b, j));
                }
            }
        }
    }
}

TEST_CASE("composition is associative across bracketings") {
    const int N = 6;
    for (const MorWord& w : words_of_length(4, 2)) {
        for (int mu : {-2, 0, 2}) {
            const MorClass whole = normalize_word(w, mu, N);
            for (size_t cut = 0; cut <= w.size(); ++cut) {
                const MorWord first(w.begin(), w.begin() + static_cast<long>(cut));
                const MorWord second(w.begin() + static_cast<long>(cut), w.end());
                const MorClass right = normalize_word(first, mu, N);
                int mid = mu;
                for (const Gen& g : first) {
                    mid += g.kind == GenKind::E ? 2 * g.r : -2 * g.r;
                }
                if (std::abs(mid) > N) {
                    CHECK(whole.is_zero());
                    continue;
                }
                const MorClass left = normalize_word(second, mid, N);
                CHECK(compose(left, right) == whole);
            }
        }
    }
    CHECK_THROWS_AS((void)compose(MorClass::identity(0, 6), MorClass::identity(2, 6)),
                    std::invalid_argument);
}

TEST_CASE("normalize-then-evaluate equals the matrix oracle") {
    const int N = 6;
    for (int len = 0; len <= 3; ++len) {
        for (const MorWord& w : words_of_length(len, 2)) {
            for (int mu = -N; mu <= N; mu += 2) {
                const MorClass c = normalize_word(w, mu, N);
                CHECK(evaluate(c, N).entries == word_matrix_oracle(w, mu, N).entries);
            }
        }
    }
}

TEST_CASE("multiplicity positivity and the negative-commutation flag") {
    // E past F^{(3)} at weight 0 reflects through a negative binomial top.
    const MorClass c = normalize_word({Gen::F(3), Gen::E(1)}, 0, 6);
    CHECK(c.saw_negative_commutation());
    CHECK(term_at(c, 3, 1) == LaurentPoly::one());
    CHECK(term_at(c, 2, 0) == -qint(2));
    CHECK_FALSE(has_nonnegative_multiplicities(c));
    CHECK(evaluate(c, 6).entries == word_matrix_oracle({Gen::F(3), Gen::E(1)}, 0, 6).entries);

    for (int len = 0; len <= 3; ++len) {
        for (const MorWord& w : words_of_length(len, 2)) {
            for (int mu = -6; mu <= 6; mu += 2) {
                const MorClass d = normalize_word(w, mu, 6);
                if (!d.saw_negative_commutation()) {
                    CHECK(has_nonnegative_multiplicities(d));
                }
            }
        }
    }
}

TEST_CASE("theta terms") {
    const auto top = theta_terms(4, 4);
    REQUIRE(top.size() == 1);
    CHECK(top[0].first == 1);
    CHECK(term_at(top[0].second, 4, 0) == LaurentPoly::one());

    const auto two = theta_terms(2, 0);
    REQUIRE(two.size() == 2);
    CHECK(two[0].first == 1);
    CHECK(term_at(two[0].second, 0, 0) == LaurentPoly::one());
    CHECK(two[1].first == -1);
    CHECK(term_at(two[1].second, 1, 1) == LaurentPoly::q_power(1));

    CHECK(theta_terms(6, 2).size() == 3);
    CHECK_THROWS_AS((void)theta_terms(6, 3), std::invalid_argument);
    CHECK_THROWS_AS((void)theta_terms(6, -2), std::invalid_argument);
}

TEST_CASE("euler characteristic equals the reflection block") {
    CHECK(euler_characteristic(4, 4).entries[0][0] == LaurentPoly::one());
    CHECK(euler_characteristic(2, 0).entries[0][0] == -LaurentPoly::q_power(2));
    for (int N = 0; N <= 12; ++N) {
        CHECK(theta_euler_check(N));
    }
}

TEST_CASE("pure F multiplicities") {
    CHECK(f_part_multiplicity(MorClass::identity(2, 6), 0) == LaurentPoly::one());

    // F^{(r+a)} E^{(a)} has no (r, 0) component.
    MorClass pure(8, 2, 2);
    pure.add_term(3, 3, LaurentPoly::one());
    CHECK(f_part_multiplicity(pure, 0).is_zero());

    for (int N = 2; N <= 8; ++N) {
        for (int p = 0; 2 * p <= N; ++p) {
            const int lambda = N - 2 * p;
            const MorClass f_gen = generator(GenKind::F, p, N, N);
            for (const auto& [sign, theta_s] : theta_terms(N, lambda)) {
                const MorClass c = compose(theta_s, f_gen);
                const int s = theta_s.terms().begin()->first.second;
                LaurentPoly expect = LaurentPoly::q_power(s) *
                                     qbinom(lambda + p + s, s) *
                                     qbinom(lambda + p, p - s);
                if (!symbol_in_window(N, N, lambda + p, 0)) {
                    expect = LaurentPoly::zero();
                }
                CHECK(f_part_multiplicity(c, lambda + p) == expect);
            }
        }
    }
}

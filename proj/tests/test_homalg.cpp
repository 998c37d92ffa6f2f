#include "doctest.h"

#include <algorithm>
#include <map>
#include <vector>

#include "catsl2/homalg.hpp"
#include "catsl2/morclass.hpp"
#include "catsl2/qcore.hpp"

using namespace catsl2;

namespace {

LaurentPoly shift_sum(const std::vector<int>& shifts) {
    LaurentPoly out = LaurentPoly::zero();
    for (int j : shifts) out = out + LaurentPoly::q_power(-j);
    return out;
}

}  // namespace

TEST_CASE("rational matrix algebra") {
    RatMat m(2, 3);
    m.at(0, 0) = 1;
    m.at(0, 1) = 2;
    m.at(0, 2) = 3;
    m.at(1, 0) = 2;
    m.at(1, 1) = 4;
    m.at(1, 2) = 6;
    CHECK(m.rank() == 1);

    const auto rr = m.rref();
    CHECK(rr.pivot_cols == std::vector<int>{0});
    CHECK(rr.mat.at(0, 1) == Rat(2));
    CHECK(rr.mat.at(1, 2) == Rat(0));

    const auto kernel = m.kernel_basis();
    REQUIRE(kernel.size() == 2);
    for (const auto& v : kernel) {
        for (int r = 0; r < m.rows(); ++r) {
            Rat acc = 0;
            for (int c = 0; c < m.cols(); ++c) acc += m.at(r, c) * v[static_cast<size_t>(c)];
            CHECK(acc == Rat(0));
        }
    }

    RatMat inv_test(2, 2);
    inv_test.at(0, 0) = 2;
    inv_test.at(0, 1) = 1;
    inv_test.at(1, 0) = 5;
    inv_test.at(1, 1) = 3;
    CHECK(inv_test * inv_test.inverse() == RatMat::identity(2));
    CHECK(inv_test.inverse() * inv_test == RatMat::identity(2));

    RatMat singular(2, 2);
    singular.at(0, 0) = 1;
    singular.at(1, 0) = 1;
    CHECK_THROWS_AS((void)singular.inverse(), std::logic_error);
}

TEST_CASE("koszul complex is exact in positive strands") {
    for (int dim = 1; dim <= 4; ++dim) {
        std::vector<int> degrees;
        for (int i = 0; i < dim; ++i) degrees.push_back(2 * i);
        for (int l = 1; l <= dim; ++l) {
            const GradedComplex complex = build_koszul(degrees, l);
            complex.validate();
            CHECK(complex.length() == l);
            CHECK(complex.is_exact());
        }
    }

    // Strand zero is a single copy of the ground field.
    const GradedComplex trivial = build_koszul({0, 2}, 0);
    CHECK(trivial.homology(0).total_dim() == 1);

    // Irregular generator degrees change nothing.
    const GradedComplex lopsided = build_koszul({1, 3, 4}, 2);
    lopsided.validate();
    CHECK(lopsided.is_exact());

    CHECK_THROWS_AS((void)build_koszul({0, 2}, 3), std::invalid_argument);
}

TEST_CASE("modified koszul homology sits at the top in one degree") {
    for (int lambda = 0; lambda + 0 <= 6; ++lambda) {
        for (int p = 0; lambda + 2 * p <= 6; ++p) {
            const GradedComplex complex = build_modified_koszul(lambda, p);
            complex.validate();
            CHECK(complex.length() == p);
            for (int s = 0; s < p; ++s) CHECK(complex.homology(s).is_zero());
            const GradedVS h = complex.homology(p);
            CHECK(h.total_dim() == 1);
            CHECK(h.dim(2 * (p + 1) * (lambda + p)) == 1);
        }
    }

    // lambda = 0, p = 1 pinned: objects k{2} <- k{2} + k{4}, one surviving
    // class e_1 (x) v in degree 4.
    const GradedComplex small = build_modified_koszul(0, 1);
    CHECK(small.object(0).dims == std::map<int, int>{{2, 1}});
    CHECK(small.object(1).dims == std::map<int, int>{{2, 1}, {4, 1}});
    CHECK(small.diff_block(1, 2).at(0, 0) == Rat(1));
    CHECK(small.homology(1).dims == std::map<int, int>{{4, 1}});
    CHECK(small.object(1).labels.at(4) == std::vector<std::string>{"s{1}|w{}"});
}

TEST_CASE("theta highest weight complex is exact") {
    for (int lambda = 0; lambda <= 6; ++lambda) {
        for (int p = 0; lambda + 2 * p <= 6; ++p) {
            const int N = lambda + 2 * p;
            const ThetaHwComplex thc = theta_hw_complex(N, lambda, p);
            CHECK(thc.sigma == p * (lambda + p - 1) + 2 * (lambda + p));
            CHECK(thc.extension_degree == p * (lambda + p + 1));
            CHECK(thc.exact);
            CHECK(thc.complex.length() == p + 1);
        }
    }

    const ThetaHwComplex small = theta_hw_complex(2, 0, 1);
    CHECK(small.sigma == 2);
    CHECK(small.complex.object(0).dims == std::map<int, int>{{0, 1}});
    CHECK(small.complex.object(1).dims == std::map<int, int>{{0, 1}, {2, 1}});
    CHECK(small.complex.object(2).dims == std::map<int, int>{{2, 1}});

    CHECK_THROWS_AS((void)theta_hw_complex(3, 1, 2), std::invalid_argument);
    CHECK_THROWS_AS((void)theta_hw_complex(2, -1, 1), std::invalid_argument);
}

TEST_CASE("symwedge bijection is degree preserving") {
    for (int lambda = 0; lambda <= 4; ++lambda) {
        for (int p = 0; p <= 3; ++p) {
            const SymwedgeReport report = symwedge_bijection_check(lambda, p);
            CHECK(report.bijective);
            CHECK(report.constant_offset);
            CHECK(report.offset == -p * (lambda + p - 1));
        }
    }
}

TEST_CASE("transition degrees") {
    for (int lambda = 0; lambda <= 5; ++lambda) {
        for (int p = 0; p <= 4; ++p) {
            CHECK(phi_degree(lambda, p, 0, 0) == -p * (lambda + p - 1));
            // The top class lives where the companion of Sym^p lands.
            CHECK(companion_degree(lambda, p, 2 * p * (lambda + p)) == p * (lambda + p + 1));
        }
    }
    CHECK(phi_degree(1, 2, 1, 4) == -1);
    CHECK(phi_degree(0, 1, 1, 2) == 1);
}

TEST_CASE("test ring arithmetic") {
    const TestRing ring({1, 2}, 5);
    const RElem x = ring.monomial({1, 0}, 1);
    const RElem y = ring.monomial({0, 1}, 1);
    CHECK(ring.is_homogeneous(x, 1));
    CHECK(ring.is_homogeneous(y, 2));

    const RElem xy = ring.mul(x, y);
    CHECK(ring.is_homogeneous(xy, 3));
    CHECK(ring.mul(xy, xy).is_zero());  // degree 6 > bound

    const RElem mix = ring.add(ring.constant(Rat(3, 2)), x);
    CHECK(!ring.is_scalar(mix));
    CHECK(ring.scalar_part(mix) == Rat(3, 2));
    CHECK(ring.sub(mix, mix).is_zero());
    CHECK(ring.is_scalar(ring.zero()));
}

TEST_CASE("q complex validation") {
    const TestRing ring({1, 2}, 12);

    QComplex good{ring, {{3}, {3}}, {RMat(1, 1)}};
    good.diffs[0].at(0, 0) = ring.one();
    good.validate();
    CHECK(good.graded_dim(0) == LaurentPoly::q_power(-3));

    QComplex down{ring, {{0}, {1}}, {RMat(1, 1)}};
    down.diffs[0].at(0, 0) = ring.one();
    CHECK_THROWS_AS(down.validate(), std::invalid_argument);

    QComplex inhom{ring, {{2}, {0}}, {RMat(1, 1)}};
    inhom.diffs[0].at(0, 0) = ring.one();  // needs degree 2
    CHECK_THROWS_AS(inhom.validate(), std::invalid_argument);

    QComplex notdd{ring, {{0}, {0}, {0}}, {RMat(1, 1), RMat(1, 1)}};
    notdd.diffs[0].at(0, 0) = ring.one();
    notdd.diffs[1].at(0, 0) = ring.one();
    CHECK_THROWS_AS(notdd.validate(), std::invalid_argument);

    const TestRing narrow({1, 2}, 2);
    QComplex wide{narrow, {{0, 5}}, {}};
    CHECK_THROWS_AS(wide.validate(), std::invalid_argument);
}

TEST_CASE("gaussian convolution cancels exact complexes") {
    const TestRing ring({1, 2}, 12);
    QComplex pair{ring, {{3}, {3}}, {RMat(1, 1)}};
    pair.diffs[0].at(0, 0) = ring.one();
    const ReductionReport rep = gaussian_convolve(pair);
    CHECK(rep.final_is_zero);
    REQUIRE(rep.steps.size() == 1);
    CHECK(rep.steps[0].leftover_shifts.empty());
    CHECK(rep.steps[0].residual_shifts.empty());
    CHECK(rep.cone_euler.back().is_zero());

    for (std::uint64_t seed = 1; seed <= 15; ++seed) {
        RandomComplexPlan plan;
        plan.length = 1 + static_cast<int>(seed % 4);
        plan.max_pairs_per_gap = 3;
        plan.shift_max = 6;
        const QComplex qc = random_qcomplex(seed, plan);
        qc.validate();
        CHECK(qc.scalar_homology().empty());
        const ReductionReport r = gaussian_convolve(qc);
        CHECK(r.final_is_zero);
        CHECK(r.cone_euler.back().is_zero());

        // The cone Euler characteristics obey the defining recurrence.
        LaurentPoly prev = LaurentPoly::zero();
        for (size_t i = 0; i < r.cone_euler.size(); ++i) {
            CHECK(r.cone_euler[i] == qc.graded_dim(static_cast<int>(i)) - prev);
            prev = r.cone_euler[i];
        }
    }

    // Same seed, same complex.
    RandomComplexPlan plan;
    plan.length = 3;
    const QComplex a = random_qcomplex(77, plan);
    const QComplex b = random_qcomplex(77, plan);
    CHECK(a.shifts == b.shifts);
    for (size_t g = 0; g < a.diffs.size(); ++g) CHECK(a.diffs[g].a == b.diffs[g].a);
}

TEST_CASE("gaussian convolution reports planned homology") {
    for (std::uint64_t seed = 100; seed < 108; ++seed) {
        RandomComplexPlan plan;
        plan.length = 3;
        plan.planned_homology = {{2}, {}, {0, 4}, {}};
        const QComplex qc = random_qcomplex(seed, plan);
        qc.validate();

        const ReductionReport rep = gaussian_convolve(qc);
        CHECK(!rep.final_is_zero);

        std::map<int, std::vector<int>> expected;
        for (int pos = 0; pos <= plan.length; ++pos) {
            auto v = plan.planned_homology[static_cast<size_t>(pos)];
            if (!v.empty()) {
                std::sort(v.begin(), v.end());
                expected[pos] = v;
            }
        }
        std::map<int, std::vector<int>> got = rep.final_components;
        for (auto& [pos, v] : got) std::sort(v.begin(), v.end());
        CHECK(got == expected);

        // Agreement with the scalar shadow's homology, shift by shift.
        const auto shadow = qc.scalar_homology();
        std::map<int, std::map<int, int>> from_report;
        for (const auto& [pos, v] : rep.final_components) {
            for (int j : v) ++from_report[pos][j];
        }
        CHECK(shadow == from_report);

        // Euler characteristic of the final convolution matches the
        // alternating sum over the surviving components.
        LaurentPoly expect_euler = LaurentPoly::zero();
        const int top = plan.length;
        for (const auto& [pos, v] : rep.final_components) {
            const LaurentPoly contrib = shift_sum(v);
            expect_euler =
                (top - pos) % 2 == 0 ? expect_euler + contrib : expect_euler - contrib;
        }
        CHECK(rep.cone_euler.back() == expect_euler);
    }

    const TestRing ring({1, 2}, 12);
    const QComplex lone{ring, {{2, 2}}, {}};
    const ReductionReport rep = gaussian_convolve(lone);
    CHECK(rep.final_components == std::map<int, std::vector<int>>{{0, {2, 2}}});
    CHECK(!rep.final_is_zero);
}

TEST_CASE("graded dimension bridge") {
    for (int lambda = 0; lambda <= 6; ++lambda) {
        for (int p = 0; lambda + 2 * p <= 6; ++p) {
            const int N = lambda + 2 * p;
            const GradedComplex complex = build_modified_koszul(lambda, p);
            const int sigma = p * (lambda + p - 1) + 2 * (lambda + p);
            const MorClass f_gen = generator(GenKind::F, p, N, N);
            for (const auto& [sign, theta_s] : theta_terms(N, lambda)) {
                const int s = theta_s.terms().begin()->first.second;
                const LaurentPoly lhs = f_part_multiplicity(compose(theta_s, f_gen), lambda + p);
                const LaurentPoly rhs = complex.object(s).graded_dimension().shifted(-sigma);
                CHECK(lhs == rhs);
            }
        }
    }
}

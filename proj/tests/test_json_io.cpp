#include "doctest.h"

#include <stdexcept>

#include "catsl2/json_io.hpp"

using namespace catsl2;

TEST_CASE("laurent polynomial json round trip") {
    const LaurentPoly samples[] = {
        LaurentPoly::zero(),
        LaurentPoly::one(),
        qint(5),
        qint_signed(-4),
        qbinom(6, 3),
        qbinom(8, 4) - qbinom(8, 3).shifted(-7),
    };
    for (const LaurentPoly& p : samples) {
        const Json j = laurent_to_json(p);
        CHECK(laurent_from_json(j) == p);
        // Byte-identical output for equal values.
        CHECK(laurent_to_json(laurent_from_json(j)).dump() == j.dump());
    }

    const Json j = laurent_to_json(qint(3));
    CHECK(j.dump() == "[[-2,1],[0,1],[2,1]]");

    CHECK_THROWS_AS((void)laurent_from_json(Json::object()), std::invalid_argument);
    CHECK_THROWS_AS((void)laurent_from_json(Json::parse("[[0,1],[0,2]]")), std::invalid_argument);
    CHECK_THROWS_AS((void)laurent_from_json(Json::parse("[[2,1],[0,1]]")), std::invalid_argument);
    CHECK_THROWS_AS((void)laurent_from_json(Json::parse("[[0,0]]")), std::invalid_argument);
    CHECK_THROWS_AS((void)laurent_from_json(Json::parse("[[0]]")), std::invalid_argument);

    const LaurentPoly huge =
        LaurentPoly::monomial(0, Int("123456789012345678901234567890"));
    CHECK_THROWS_AS((void)laurent_to_json(huge), std::range_error);
}

TEST_CASE("multivariate polynomial json round trip") {
    const MultiPoly samples[] = {
        MultiPoly::zero(3),
        MultiPoly::one(2),
        staircase_monomial(4),
        demazure(1, staircase_monomial(3)),
        MultiPoly::monomial({2, 0, 1}, -7) + MultiPoly::monomial({0, 1, 0}, 3),
    };
    for (const MultiPoly& f : samples) {
        const Json j = multi_poly_to_json(f);
        CHECK(multi_poly_from_json(j, f.nvars()) == f);
    }

    CHECK(multi_poly_to_json(MultiPoly::zero(5)).dump() == "[]");
    CHECK_THROWS_AS((void)multi_poly_from_json(Json::parse("[{\"exponents\":[1],\"coeff\":1}]"), 2),
                    std::invalid_argument);
    CHECK_THROWS_AS((void)multi_poly_from_json(Json::parse("[{\"exponents\":[1,0],\"coeff\":0}]"), 2),
                    std::invalid_argument);
}

TEST_CASE("weight operator json round trip") {
    for (int N = 1; N <= 6; ++N) {
        for (int lambda = N % 2; lambda <= N; lambda += 2) {
            const WeightOperator op = t_block(N, lambda);
            const Json j = weight_operator_to_json(op);
            const WeightOperator back = weight_operator_from_json(j);
            CHECK(back.N == op.N);
            CHECK(back.source_weight == op.source_weight);
            CHECK(back.target_weight == op.target_weight);
            CHECK(back.entries == op.entries);
            CHECK(weight_operator_to_json(back).dump() == j.dump());
        }
    }
    CHECK_THROWS_AS((void)weight_operator_from_json(Json::array()), std::invalid_argument);
}

TEST_CASE("morphism class json round trip") {
    for (const auto& [s, term] : theta_terms(6, 2)) {
        (void)s;
        const Json j = mor_class_to_json(term);
        CHECK(mor_class_from_json(j) == term);
        CHECK(mor_class_to_json(mor_class_from_json(j)).dump() == j.dump());
    }
    const MorClass zero = MorClass::zero(4, 0, 2);
    CHECK(mor_class_from_json(mor_class_to_json(zero)) == zero);
    CHECK_THROWS_AS((void)mor_class_from_json(Json::parse("{\"N\":2}")), std::invalid_argument);
}

TEST_CASE("graded complex json round trip") {
    const GradedComplex samples[] = {
        build_koszul({0, 2, 4}, 2),
        build_modified_koszul(1, 2),
        theta_hw_complex(4, 2, 1).complex,
    };
    for (const GradedComplex& c : samples) {
        const Json j = graded_complex_to_json(c);
        const GradedComplex back = graded_complex_from_json(j);
        // from_json revalidates; equal serialization means equal complexes.
        CHECK(graded_complex_to_json(back).dump() == j.dump());
        CHECK(back.length() == c.length());
        for (int k = 0; k <= c.length(); ++k) {
            CHECK(back.object(k).dims == c.object(k).dims);
            CHECK(back.homology(k).dims == c.homology(k).dims);
        }
    }
    CHECK_THROWS_AS((void)graded_complex_from_json(Json::parse("{\"objects\":[]}")),
                    std::invalid_argument);
}

TEST_CASE("report json payloads") {
    const ConvolutionReport report = check_convolution_conditions(8, 2);
    const Json j = convolution_report_to_json(report);
    CHECK(j["N"] == 8);
    CHECK(j["lambda"] == 2);
    CHECK(j["pass"] == true);
    CHECK(j["rows"].size() == report.rows.size());
    for (const Json& row : j["rows"]) {
        CHECK(row["gap_ok"] == true);
        CHECK(row["d_max"].get<long long>() < row["d_min"].get<long long>());
    }

    const CanonicalLedger ledger = canonical_ledger(6, 2, 1);
    const Json jl = canonical_ledger_to_json(ledger);
    CHECK(jl["v_exponent"] == 4);
    CHECK(jl["v_second_exponent"] == 4);
    CHECK(jl["matches_symmetric_statement"] == true);
    CHECK(jl["matches_final_display"] == false);
    CHECK(jl["result"]["generators"].size() == 5);
    CHECK(jl["result"]["exponents"][BundleExpr::kAmbient] == 0);
}

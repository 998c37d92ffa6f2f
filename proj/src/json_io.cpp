#include "catsl2/json_io.hpp"

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <utility>
#include <vector>

namespace catsl2 {
namespace {

std::int64_t to_int64(const Int& c, const char* what) {
    static const Int lo = std::numeric_limits<std::int64_t>::min();
    static const Int hi = std::numeric_limits<std::int64_t>::max();
    if (c < lo || c > hi) {
        throw std::range_error(std::string(what) + ": coefficient exceeds 64 bits");
    }
    return c.convert_to<std::int64_t>();
}

[[noreturn]] void malformed(const char* what) {
    throw std::invalid_argument(std::string(what) + ": malformed JSON");
}

void require(bool ok, const char* what) {
    if (!ok) malformed(what);
}

}  // namespace

// ---- Laurent polynomials --------------------------------------------------

Json laurent_to_json(const LaurentPoly& p) {
    Json arr = Json::array();
    for (const auto& [exp, coeff] : p.terms()) {
        arr.push_back(Json::array({exp, to_int64(coeff, "laurent_to_json")}));
    }
    return arr;
}

LaurentPoly laurent_from_json(const Json& j) {
    constexpr const char* kWhat = "laurent_from_json";
    require(j.is_array(), kWhat);
    LaurentPoly p;
    bool first = true;
    int prev_exp = 0;
    for (const Json& pair : j) {
        require(pair.is_array() && pair.size() == 2, kWhat);
        require(pair[0].is_number_integer() && pair[1].is_number_integer(), kWhat);
        const int exp = pair[0].get<int>();
        const std::int64_t coeff = pair[1].get<std::int64_t>();
        require(coeff != 0, kWhat);
        require(first || exp > prev_exp, kWhat);
        first = false;
        prev_exp = exp;
        p += LaurentPoly::monomial(exp, Int(coeff));
    }
    return p;
}

// ---- Multivariate polynomials ----------------------------------------------

Json multi_poly_to_json(const MultiPoly& f) {
    Json arr = Json::array();
    for (const auto& [exps, coeff] : f.terms()) {
        Json term;
        term["exponents"] = exps;
        term["coeff"] = to_int64(coeff, "multi_poly_to_json");
        arr.push_back(std::move(term));
    }
    return arr;
}

MultiPoly multi_poly_from_json(const Json& j, int nvars) {
    constexpr const char* kWhat = "multi_poly_from_json";
    require(j.is_array(), kWhat);
    MultiPoly f(nvars);
    for (const Json& term : j) {
        require(term.is_object() && term.contains("exponents") && term.contains("coeff"), kWhat);
        const Json& je = term["exponents"];
        require(je.is_array() && static_cast<int>(je.size()) == nvars, kWhat);
        std::vector<int> exps;
        exps.reserve(je.size());
        for (const Json& e : je) {
            require(e.is_number_integer() && e.get<int>() >= 0, kWhat);
            exps.push_back(e.get<int>());
        }
        require(term["coeff"].is_number_integer(), kWhat);
        const std::int64_t coeff = term["coeff"].get<std::int64_t>();
        require(coeff != 0, kWhat);
        f += MultiPoly::monomial(std::move(exps), Int(coeff));
    }
    return f;
}

// ---- Weight-space operators -------------------------------------------------

Json weight_operator_to_json(const WeightOperator& op) {
    Json rows = Json::array();
    for (const auto& row : op.entries) {
        Json jr = Json::array();
        for (const LaurentPoly& entry : row) jr.push_back(laurent_to_json(entry));
        rows.push_back(std::move(jr));
    }
    Json j;
    j["N"] = op.N;
    j["source_weight"] = op.source_weight;
    j["target_weight"] = op.target_weight;
    j["entries"] = std::move(rows);
    return j;
}

WeightOperator weight_operator_from_json(const Json& j) {
    constexpr const char* kWhat = "weight_operator_from_json";
    require(j.is_object() && j.contains("N") && j.contains("source_weight") &&
                j.contains("target_weight") && j.contains("entries"),
            kWhat);
    WeightOperator op;
    op.N = j["N"].get<int>();
    op.source_weight = j["source_weight"].get<int>();
    op.target_weight = j["target_weight"].get<int>();
    require(j["entries"].is_array(), kWhat);
    for (const Json& jr : j["entries"]) {
        require(jr.is_array(), kWhat);
        std::vector<LaurentPoly> row;
        row.reserve(jr.size());
        for (const Json& entry : jr) row.push_back(laurent_from_json(entry));
        op.entries.push_back(std::move(row));
    }
    op.validate();
    return op;
}

// ---- Morphism classes --------------------------------------------------------

Json mor_class_to_json(const MorClass& c) {
    Json terms = Json::array();
    for (const auto& [symbol, poly] : c.terms()) {
        Json term;
        term["a"] = symbol.first;
        term["b"] = symbol.second;
        term["poly"] = laurent_to_json(poly);
        terms.push_back(std::move(term));
    }
    Json j;
    j["N"] = c.N();
    j["mu"] = c.mu();
    j["target_weight"] = c.target_weight();
    j["terms"] = std::move(terms);
    return j;
}

MorClass mor_class_from_json(const Json& j) {
    constexpr const char* kWhat = "mor_class_from_json";
    require(j.is_object() && j.contains("N") && j.contains("mu") &&
                j.contains("target_weight") && j.contains("terms"),
            kWhat);
    MorClass c(j["N"].get<int>(), j["mu"].get<int>(), j["target_weight"].get<int>());
    require(j["terms"].is_array(), kWhat);
    for (const Json& term : j["terms"]) {
        require(term.is_object() && term.contains("a") && term.contains("b") &&
                    term.contains("poly"),
                kWhat);
        c.add_term(term["a"].get<int>(), term["b"].get<int>(),
                   laurent_from_json(term["poly"]));
    }
    return c;
}

// ---- Graded complexes ----------------------------------------------------------

Json graded_vs_to_json(const GradedVS& v) {
    Json dims = Json::array();
    for (const auto& [degree, dim] : v.dims) dims.push_back(Json::array({degree, dim}));
    Json labels = Json::array();
    for (const auto& [degree, names] : v.labels) {
        labels.push_back(Json::array({degree, names}));
    }
    Json j;
    j["dims"] = std::move(dims);
    j["labels"] = std::move(labels);
    return j;
}

GradedVS graded_vs_from_json(const Json& j) {
    constexpr const char* kWhat = "graded_vs_from_json";
    require(j.is_object() && j.contains("dims") && j.contains("labels"), kWhat);
    GradedVS v;
    require(j["dims"].is_array(), kWhat);
    for (const Json& pair : j["dims"]) {
        require(pair.is_array() && pair.size() == 2, kWhat);
        v.dims[pair[0].get<int>()] = pair[1].get<int>();
    }
    require(j["labels"].is_array(), kWhat);
    for (const Json& pair : j["labels"]) {
        require(pair.is_array() && pair.size() == 2 && pair[1].is_array(), kWhat);
        v.labels[pair[0].get<int>()] = pair[1].get<std::vector<std::string>>();
    }
    v.validate();
    return v;
}

Json graded_complex_to_json(const GradedComplex& c) {
    Json objects = Json::array();
    for (int k = 0; k <= c.length(); ++k) objects.push_back(graded_vs_to_json(c.object(k)));

    Json differentials = Json::array();
    for (int k = 1; k <= c.length(); ++k) {
        Json blocks = Json::array();
        // d is degree-preserving, so only degrees present on both ends matter.
        for (const auto& [degree, dim] : c.object(k).dims) {
            (void)dim;
            if (c.object(k - 1).dim(degree) == 0) continue;
            const RatMat block = c.diff_block(k, degree);
            Json entries = Json::array();
            for (int r = 0; r < block.rows(); ++r) {
                for (int col = 0; col < block.cols(); ++col) {
                    if (block.at(r, col) == 0) continue;
                    entries.push_back(Json::array({r, col, block.at(r, col).str()}));
                }
            }
            if (entries.empty()) continue;
            Json jb;
            jb["degree"] = degree;
            jb["entries"] = std::move(entries);
            blocks.push_back(std::move(jb));
        }
        differentials.push_back(std::move(blocks));
    }

    Json j;
    j["objects"] = std::move(objects);
    j["differentials"] = std::move(differentials);
    return j;
}

GradedComplex graded_complex_from_json(const Json& j) {
    constexpr const char* kWhat = "graded_complex_from_json";
    require(j.is_object() && j.contains("objects") && j.contains("differentials"), kWhat);
    require(j["objects"].is_array() && !j["objects"].empty(), kWhat);
    std::vector<GradedVS> objects;
    for (const Json& jo : j["objects"]) objects.push_back(graded_vs_from_json(jo));
    GradedComplex c(std::move(objects));

    const Json& diffs = j["differentials"];
    require(diffs.is_array() && static_cast<int>(diffs.size()) == c.length(), kWhat);
    for (int k = 1; k <= c.length(); ++k) {
        const Json& blocks = diffs[static_cast<size_t>(k - 1)];
        require(blocks.is_array(), kWhat);
        for (const Json& jb : blocks) {
            require(jb.is_object() && jb.contains("degree") && jb.contains("entries"), kWhat);
            const int degree = jb["degree"].get<int>();
            RatMat block(c.object(k - 1).dim(degree), c.object(k).dim(degree));
            require(jb["entries"].is_array(), kWhat);
            for (const Json& entry : jb["entries"]) {
                require(entry.is_array() && entry.size() == 3 && entry[2].is_string(), kWhat);
                const int r = entry[0].get<int>();
                const int col = entry[1].get<int>();
                require(r >= 0 && r < block.rows() && col >= 0 && col < block.cols(), kWhat);
                block.at(r, col) = Rat(entry[2].get<std::string>());
            }
            c.set_diff_block(k, degree, std::move(block));
        }
    }
    c.validate();
    return c;
}

// ---- Reports ----------------------------------------------------------------------

Json gap_report_to_json(const GapReport& row) {
    Json j;
    j["cond"] = row.cond;
    j["lambda"] = row.lambda;
    j["s"] = row.s;
    j["k"] = row.k;
    j["j"] = row.j;
    j["a"] = row.a;
    j["b"] = row.b;
    j["d_max"] = row.d_max;
    j["d_min"] = row.d_min;
    j["gap_ok"] = row.gap_ok;
    return j;
}

Json convolution_report_to_json(const ConvolutionReport& report) {
    Json rows = Json::array();
    for (const GapReport& row : report.rows) rows.push_back(gap_report_to_json(row));
    Json j;
    j["N"] = report.N;
    j["lambda"] = report.lambda;
    j["pass"] = report.pass;
    j["rows"] = std::move(rows);
    return j;
}

Json bundle_expr_to_json(const BundleExpr& e) {
    static const std::vector<std::string> kNames = {"det(V')", "det(V)", "det(V'')",
                                                    "det(Vt)", "det(amb)"};
    Json exps = Json::array();
    for (int i = 0; i < BundleExpr::kNumSymbols; ++i) {
        exps.push_back(e.exponent(static_cast<BundleExpr::Symbol>(i)));
    }
    Json j;
    j["generators"] = kNames;
    j["exponents"] = std::move(exps);
    return j;
}

Json canonical_ledger_to_json(const CanonicalLedger& ledger) {
    Json j;
    j["N"] = ledger.N;
    j["k"] = ledger.k;
    j["s"] = ledger.s;
    j["result"] = bundle_expr_to_json(ledger.result);
    j["v_exponent"] = ledger.v_exponent;
    j["v_second_exponent"] = ledger.v_second_exponent;
    j["matches_symmetric_statement"] = ledger.matches_symmetric_statement;
    j["matches_final_display"] = ledger.matches_final_display;
    return j;
}

}  // namespace catsl2

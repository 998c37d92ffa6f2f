#include "catsl2/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <tuple>
#include <utility>

#include "catsl2/geomdim.hpp"
#include "catsl2/homalg.hpp"
#include "catsl2/homvanish.hpp"
#include "catsl2/morclass.hpp"
#include "catsl2/nilhecke.hpp"
#include "catsl2/qcore.hpp"
#include "catsl2/uqsl2.hpp"

namespace catsl2 {
namespace {

template <typename... Args>
std::string cat(Args&&... args) {
    std::ostringstream os;
    (os << ... << args);
    return os.str();
}

CheckResult passed(std::string suite, std::string name, std::string detail) {
    return {std::move(suite), std::move(name), true, std::move(detail)};
}

CheckResult failed(std::string suite, std::string name, std::string detail) {
    return {std::move(suite), std::move(name), false, std::move(detail)};
}

// Plain binomial triangle for cross-checking evaluations at q = 1.
std::vector<std::vector<Int>> pascal(int max_n) {
    std::vector<std::vector<Int>> c(static_cast<size_t>(max_n) + 1);
    for (int n = 0; n <= max_n; ++n) {
        c[n].assign(static_cast<size_t>(n) + 1, Int(1));
        for (int k = 1; k < n; ++k) c[n][k] = c[n - 1][k - 1] + c[n - 1][k];
    }
    return c;
}

}  // namespace

namespace checks {

// ---- qcore ------------------------------------------------------------------

CheckResult telescoping(int max_s, int max_lambda) {
    const std::string suite = "qcore";
    const std::string name = "telescoping identity";
    for (int s = 0; s <= max_s; ++s) {
        for (int lambda = 0; lambda <= max_lambda; ++lambda) {
            const LaurentPoly lhs =
                qint(lambda + s + 1).shifted(s) - qint(lambda + s + 2).shifted(s + 1);
            if (lhs != -LaurentPoly::q_power(2 * s + lambda + 2)) {
                return failed(suite, name, cat("first failure at s=", s, " lambda=", lambda));
            }
        }
    }
    return passed(suite, name,
                  cat("q^s[l+s+1] - q^{s+1}[l+s+2] = -q^{2s+l+2} for 0<=s<=", max_s,
                      ", 0<=lambda<=", max_lambda));
}

CheckResult binomial_symmetry(int max_n) {
    const std::string suite = "qcore";
    const std::string name = "binomial symmetry";
    const auto c = pascal(max_n);
    for (int n = 0; n <= max_n; ++n) {
        for (int k = 0; k <= n; ++k) {
            const LaurentPoly b = qbinom(n, k);
            const bool ok = b == qbinom(n, n - k) && b.is_bar_invariant() &&
                            b.has_nonnegative_coeffs() && b.eval_at_one() == c[n][k];
            if (!ok) return failed(suite, name, cat("first failure at n=", n, " k=", k));
        }
    }
    return passed(suite, name,
                  cat("symmetry, bar invariance, positivity, q=1 evaluation for n<=", max_n));
}

CheckResult binomial_product_form(int min_n, int max_n, int max_k) {
    const std::string suite = "qcore";
    const std::string name = "binomial product form";
    for (int n = min_n; n <= max_n; ++n) {
        for (int k = 0; k <= max_k; ++k) {
            LaurentPoly num = LaurentPoly::one();
            LaurentPoly den = LaurentPoly::one();
            for (int i = 1; i <= k; ++i) {
                num *= qint_signed(n - i + 1);
                den *= qint(i);
            }
            if (qbinom_signed(n, k) != LaurentPoly::divide_exact(num, den)) {
                return failed(suite, name, cat("first failure at n=", n, " k=", k));
            }
        }
    }
    return passed(suite, name,
                  cat("division route equals the product of quantum integers for ", min_n,
                      "<=n<=", max_n, ", k<=", max_k));
}

CheckResult grassmannian_dims(int max_n) {
    const std::string suite = "qcore";
    const std::string name = "grassmannian graded dimension";
    const auto c = pascal(max_n);
    for (int n = 0; n <= max_n; ++n) {
        for (int k = 0; k <= n; ++k) {
            const GradedDim g = graded_dim_grassmannian(k, n);
            bool ok = g.poly() == qbinom(n, k) && g.total() == c[n][k];
            if (ok && !g.poly().is_zero()) {
                const int top = k * (n - k);
                ok = g.poly().max_exp() == top && g.poly().min_exp() == -top;
                for (const auto& [exp, coeff] : g.poly().terms()) {
                    (void)coeff;
                    ok = ok && (top - exp) % 2 == 0;
                }
            }
            if (!ok) return failed(suite, name, cat("first failure at n=", n, " k=", k));
        }
    }
    return passed(suite, name, cat("equals the binomial with support -k(n-k)..k(n-k) step 2, n<=", max_n));
}

// ---- nilhecke ------------------------------------------------------------------

CheckResult nh_relations(int max_n, int max_deg) {
    const std::string suite = "nilhecke";
    const std::string name = "operator relations";
    for (int n = 2; n <= max_n; ++n) {
        if (!relations_check(n, max_deg)) {
            return failed(suite, name, cat("relation family failed at n=", n, " deg<=", max_deg));
        }
    }
    return passed(suite, name,
                  cat("all seven families on monomials of degree <= ", max_deg, " for n<=", max_n));
}

CheckResult nh_word_independence(int max_n, int max_deg) {
    const std::string suite = "nilhecke";
    const std::string name = "reduced word independence";
    for (int n = 2; n <= max_n; ++n) {
        if (!reduced_word_independence_check(n, max_deg)) {
            return failed(suite, name, cat("failed at n=", n, " deg<=", max_deg));
        }
    }
    return passed(suite, name, cat("all reduced words agree for n<=", max_n, ", deg<=", max_deg));
}

CheckResult nh_staircase_sign(int max_n) {
    const std::string suite = "nilhecke";
    const std::string name = "staircase conjugation sign";
    for (int n = 1; n <= max_n; ++n) {
        const int sign = staircase_idempotent_check(n);
        if (sign != 1) return failed(suite, name, cat("sign ", sign, " at n=", n));
    }
    return passed(suite, name, cat("longest-word conjugate of the staircase has sign +1 for n<=", max_n));
}

CheckResult nh_symmetric_lemmas(int max_n, int sym_deg, int max_deg) {
    const std::string suite = "nilhecke";
    const std::string name = "symmetric function lemmas";
    for (int n = 2; n <= max_n; ++n) {
        if (!symmetric_lemmas_check(n, sym_deg, max_deg)) {
            return failed(suite, name, cat("failed at n=", n));
        }
    }
    return passed(suite, name,
                  cat("commutation and annihilation for symmetric degree <= ", sym_deg,
                      ", n<=", max_n));
}

CheckResult nh_degree_lowering(int max_n, int max_deg) {
    const std::string suite = "nilhecke";
    const std::string name = "degree lowering";
    for (int n = 2; n <= max_n; ++n) {
        if (!degree_lowering_check(n, max_deg)) {
            return failed(suite, name, cat("failed at n=", n));
        }
    }
    return passed(suite, name, cat("each generator lowers degree by 1, n<=", max_n));
}

CheckResult nh_telescoping_ops(int max_n, int max_a, int max_deg) {
    const std::string suite = "nilhecke";
    const std::string name = "telescoping operator identity";
    for (int n = 2; n <= max_n; ++n) {
        for (int i = 1; i < n; ++i) {
            for (int a = 1; a <= max_a; ++a) {
                if (!telescoping_identity_check(i, a, n, max_deg)) {
                    return failed(suite, name, cat("failed at i=", i, " a=", a, " n=", n));
                }
            }
        }
    }
    return passed(suite, name, cat("power-sum telescoping for a<=", max_a, ", n<=", max_n));
}

// ---- uqsl2 ------------------------------------------------------------------------

CheckResult rep_serre(int max_n) {
    const std::string suite = "uqsl2";
    const std::string name = "commutator relation";
    for (int N = 1; N <= max_n; ++N) {
        if (!serre_relation_check(N)) return failed(suite, name, cat("failed at N=", N));
    }
    return passed(suite, name, cat("(ef - fe) b_j = [N-2j] b_j on V(N), N<=", max_n));
}

CheckResult rep_intertwiner(int max_n) {
    const std::string suite = "uqsl2";
    const std::string name = "intertwiner relation";
    for (int N = 1; N <= max_n; ++N) {
        if (!t_intertwiner_check(N)) return failed(suite, name, cat("failed at N=", N));
    }
    return passed(suite, name, cat("t f = -q^2 k^{-1} e t on all admissible weights, N<=", max_n));
}

CheckResult rep_block_determinant(int max_n) {
    const std::string suite = "uqsl2";
    const std::string name = "block determinant";
    for (int N = 1; N <= max_n; ++N) {
        if (!t_block_determinant_check(N)) return failed(suite, name, cat("failed at N=", N));
    }
    return passed(suite, name, cat("every weight block has determinant a signed q-power, N<=", max_n));
}

CheckResult rep_weight_negation(int max_n) {
    const std::string suite = "uqsl2";
    const std::string name = "weight negation";
    for (int N = 1; N <= max_n; ++N) {
        if (!t_weight_negation_check(N)) return failed(suite, name, cat("failed at N=", N));
    }
    return passed(suite, name, cat("weight(t v) = -weight(v), N<=", max_n));
}

CheckResult rep_divided_power_commutation(int max_n, int max_ab) {
    const std::string suite = "uqsl2";
    const std::string name = "divided power commutation";
    for (int N = 1; N <= max_n; ++N) {
        if (!lusztig_commutation_check(N, max_ab, max_ab)) {
            return failed(suite, name, cat("failed at N=", N));
        }
    }
    return passed(suite, name,
                  cat("e^{(b)} f^{(a)} expansion with signed binomials for a,b<=", max_ab,
                      ", N<=", max_n));
}

CheckResult rep_lowest_from_highest(int max_n, int max_p) {
    const std::string suite = "uqsl2";
    const std::string name = "lowest from highest";
    for (int N = 1; N <= max_n; ++N) {
        for (int mu = N % 2; mu <= N; mu += 2) {
            if (!lowest_from_highest_check(N, mu, max_p)) {
                return failed(suite, name, cat("failed at N=", N, " mu=", mu));
            }
        }
    }
    return passed(suite, name, cat("vanishing beyond the top divided power, N<=", max_n));
}

CheckResult rep_highest_weight_image(int max_n) {
    const std::string suite = "uqsl2";
    const std::string name = "highest weight image";
    for (int N = 1; N <= max_n; ++N) {
        for (int p = 0; 2 * p <= N; ++p) {
            const HighestWeightImage h = highest_weight_image(N, p);
            const int want_sign = (p % 2 == 0) ? 1 : -1;
            if (h.sign != want_sign || h.q_exponent != p * (N - p + 1)) {
                return failed(suite, name,
                              cat("t f^{(p)} b_0 = ", h.sign, " q^", h.q_exponent, " b_{N-p} at N=",
                                  N, " p=", p, ", expected sign ", want_sign, " exponent ",
                                  p * (N - p + 1)));
            }
        }
    }
    return passed(suite, name, cat("sign (-1)^p and exponent p(N-p+1), N<=", max_n));
}

// ---- morclass -------------------------------------------------------------------------

CheckResult euler_characteristic_match(int max_n) {
    const std::string suite = "morclass";
    const std::string name = "euler characteristic";
    for (int N = 0; N <= max_n; ++N) {
        if (!theta_euler_check(N)) return failed(suite, name, cat("failed at N=", N));
    }
    return passed(suite, name,
                  cat("alternating sum of the ladder terms equals the reflection block, N<=", max_n));
}

CheckResult word_oracle_equivalence(int max_n, int max_r, int max_len) {
    const std::string suite = "morclass";
    const std::string name = "word oracle equivalence";
    std::vector<Gen> alphabet;
    for (int r = 1; r <= max_r; ++r) {
        alphabet.push_back(Gen::E(r));
        alphabet.push_back(Gen::F(r));
    }
    const int nletters = static_cast<int>(alphabet.size());
    for (int N = 1; N <= max_n; ++N) {
        for (int mu = -N; mu <= N; mu += 2) {
            for (int len = 1; len <= max_len; ++len) {
                std::vector<int> idx(static_cast<size_t>(len), 0);
                for (;;) {
                    MorWord word;
                    word.reserve(static_cast<size_t>(len));
                    for (int i : idx) word.push_back(alphabet[static_cast<size_t>(i)]);
                    const MorClass c = normalize_word(word, mu, N);
                    if (evaluate(c, N).entries != word_matrix_oracle(word, mu, N).entries) {
                        std::ostringstream os;
                        os << "mismatch at N=" << N << " mu=" << mu << " word=";
                        for (const Gen& g : word) {
                            os << (g.kind == GenKind::E ? "E" : "F") << g.r;
                        }
                        return failed(suite, name, os.str());
                    }
                    int pos = len - 1;
                    while (pos >= 0 && ++idx[static_cast<size_t>(pos)] == nletters) {
                        idx[static_cast<size_t>(pos)] = 0;
                        --pos;
                    }
                    if (pos < 0) break;
                }
            }
        }
    }
    return passed(suite, name,
                  cat("normalize-then-evaluate equals direct composition for words of length <= ",
                      max_len, ", orders <= ", max_r, ", N<=", max_n));
}

CheckResult composition_associativity(int max_n, int max_r) {
    const std::string suite = "morclass";
    const std::string name = "composition associativity";
    std::vector<Gen> alphabet;
    for (int r = 1; r <= max_r; ++r) {
        alphabet.push_back(Gen::E(r));
        alphabet.push_back(Gen::F(r));
    }
    for (int N = 1; N <= max_n; ++N) {
        for (int mu = -N; mu <= N; ++mu) {
            for (const Gen& g3 : alphabet) {
                const MorClass c3 = generator(g3.kind, g3.r, mu, N);
                if (std::abs(c3.target_weight()) > N) continue;
                for (const Gen& g2 : alphabet) {
                    const MorClass c2 = generator(g2.kind, g2.r, c3.target_weight(), N);
                    if (std::abs(c2.target_weight()) > N) continue;
                    for (const Gen& g1 : alphabet) {
                        const MorClass c1 = generator(g1.kind, g1.r, c2.target_weight(), N);
                        const bool ok =
                            compose(compose(c1, c2), c3) == compose(c1, compose(c2, c3)) &&
                            compose(g1.kind, g1.r, c2) == compose(c1, c2);
                        if (!ok) {
                            return failed(suite, name, cat("failed at N=", N, " mu=", mu));
                        }
                    }
                }
            }
        }
    }
    return passed(suite, name, cat("generator triples associate for N<=", max_n));
}

CheckResult theta_term_shape(int max_n) {
    const std::string suite = "morclass";
    const std::string name = "ladder term shape";
    for (int N = 0; N <= max_n; ++N) {
        for (int lambda = N % 2; lambda <= N; lambda += 2) {
            const auto terms = theta_terms(N, lambda);
            bool ok = static_cast<int>(terms.size()) == (N - lambda) / 2 + 1;
            for (int s = 0; ok && s < static_cast<int>(terms.size()); ++s) {
                const auto& [sign, c] = terms[static_cast<size_t>(s)];
                ok = sign == ((s % 2 == 0) ? 1 : -1) && c.mu() == lambda &&
                     c.target_weight() == -lambda && c.terms().size() == 1 &&
                     c.terms().begin()->first == std::make_pair(lambda + s, s) &&
                     c.terms().begin()->second == LaurentPoly::q_power(s) &&
                     has_nonnegative_multiplicities(c) && !c.saw_negative_commutation();
            }
            if (!ok) return failed(suite, name, cat("failed at N=", N, " lambda=", lambda));
        }
    }
    return passed(suite, name,
                  cat("term s is (-1)^s q^s F^{(lambda+s)} E^{(s)}, count (N-lambda)/2+1, N<=", max_n));
}

// ---- homalg -------------------------------------------------------------------------------

CheckResult koszul_exactness(int max_dim) {
    const std::string suite = "homalg";
    const std::string name = "koszul exactness";
    for (int dim = 1; dim <= max_dim; ++dim) {
        std::vector<int> even, mixed;
        for (int i = 0; i < dim; ++i) {
            even.push_back(2 * i);
            mixed.push_back(i);
        }
        for (const auto& degrees : {even, mixed}) {
            const GradedComplex trivial = build_koszul(degrees, 0);
            if (!(trivial.homology(0).total_dim() == 1 && trivial.homology(0).dim(0) == 1)) {
                return failed(suite, name, cat("l=0 homology wrong at dim=", dim));
            }
            for (int l = 1; l <= dim; ++l) {
                const GradedComplex c = build_koszul(degrees, l);
                c.validate();
                if (!c.is_exact()) {
                    return failed(suite, name, cat("not exact at dim=", dim, " l=", l));
                }
            }
        }
    }
    return passed(suite, name, cat("exact in every positive strand for dim <= ", max_dim));
}

CheckResult modified_koszul_homology(int bound) {
    const std::string suite = "homalg";
    const std::string name = "modified koszul homology";
    for (int lambda = 0; lambda <= bound; ++lambda) {
        for (int p = 0; lambda + 2 * p <= bound; ++p) {
            const GradedComplex c = build_modified_koszul(lambda, p);
            c.validate();
            for (int k = 0; k <= c.length(); ++k) {
                const GradedVS h = c.homology(k);
                const bool ok = (k == p)
                                    ? (h.total_dim() == 1 &&
                                       h.dim(2 * (p + 1) * (lambda + p)) == 1)
                                    : h.is_zero();
                if (!ok) {
                    return failed(suite, name,
                                  cat("homology wrong at lambda=", lambda, " p=", p, " k=", k));
                }
            }
        }
    }
    return passed(suite, name,
                  cat("one class at position p in degree 2(p+1)(lambda+p), lambda+2p <= ", bound));
}

CheckResult theta_hw_exactness(int bound) {
    const std::string suite = "homalg";
    const std::string name = "highest weight complex";
    for (int lambda = 0; lambda <= bound; ++lambda) {
        for (int p = 0; lambda + 2 * p <= bound; ++p) {
            const ThetaHwComplex t = theta_hw_complex(lambda + 2 * p, lambda, p);
            t.complex.validate();
            const int want_sigma = p * (lambda + p - 1) + 2 * (lambda + p);
            const int want_ext = p * (lambda + p + 1);
            const GradedVS& ext = t.complex.object(p + 1);
            const bool ok = t.exact && t.sigma == want_sigma && t.extension_degree == want_ext &&
                            ext.total_dim() == 1 && ext.dim(want_ext) == 1;
            if (!ok) {
                return failed(suite, name, cat("failed at lambda=", lambda, " p=", p));
            }
        }
    }
    return passed(suite, name,
                  cat("exact with the extension object in bracket -p(lambda+p+1) relative to the "
                      "common shift, lambda+2p <= ",
                      bound));
}

namespace {

// Shared by both random-convolution checks.
bool euler_recurrence_holds(const QComplex& qc, const ReductionReport& rep) {
    if (rep.cone_euler.size() != qc.shifts.size()) return false;
    LaurentPoly prev;
    for (size_t i = 0; i < rep.cone_euler.size(); ++i) {
        if (rep.cone_euler[i] != qc.graded_dim(static_cast<int>(i)) - prev) return false;
        prev = rep.cone_euler[i];
    }
    return true;
}

}  // namespace

CheckResult random_exact_convolutions(std::uint64_t seed, int count) {
    const std::string suite = "homalg";
    const std::string name = "random exact convolution";
    for (int i = 0; i < count; ++i) {
        RandomComplexPlan plan;
        plan.length = 1 + i % 6;
        plan.max_pairs_per_gap = 2;
        const std::uint64_t case_seed = seed + static_cast<std::uint64_t>(i);
        const QComplex qc = random_qcomplex(case_seed, plan);
        qc.validate();
        const ReductionReport rep = gaussian_convolve(qc);
        const bool ok = rep.final_is_zero && rep.final_components.empty() &&
                        qc.scalar_homology().empty() && euler_recurrence_holds(qc, rep);
        if (!ok) {
            return failed(suite, name,
                          cat("failed at case ", i, "; reproducer seed=", case_seed,
                              " length=", plan.length));
        }
    }
    return passed(suite, name,
                  cat(count, " seeded exact complexes of length <= 6 reduce to zero, base seed=",
                      seed));
}

CheckResult random_planned_convolutions(std::uint64_t seed, int count) {
    const std::string suite = "homalg";
    const std::string name = "random planned homology";
    for (int i = 0; i < count; ++i) {
        const std::uint64_t case_seed = seed + 0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(i + 1);
        Rng rng(case_seed);
        RandomComplexPlan plan;
        plan.length = 2 + rng.uniform(0, 3);
        plan.max_pairs_per_gap = 2;
        plan.planned_homology.assign(static_cast<size_t>(plan.length) + 1, {});
        const int carriers = rng.uniform(1, 2);
        for (int t = 0; t < carriers; ++t) {
            auto& slots = plan.planned_homology[static_cast<size_t>(rng.uniform(0, plan.length))];
            const int extra = rng.uniform(1, 2);
            for (int u = 0; u < extra; ++u) slots.push_back(rng.uniform(0, 6));
        }
        const QComplex qc = random_qcomplex(case_seed, plan);
        qc.validate();
        const ReductionReport rep = gaussian_convolve(qc);

        std::map<int, std::map<int, int>> got;
        for (const auto& [position, shifts] : rep.final_components) {
            for (int shift : shifts) ++got[position][shift];
        }
        const bool ok = !rep.final_is_zero && got == qc.scalar_homology() &&
                        euler_recurrence_holds(qc, rep);
        if (!ok) {
            return failed(suite, name,
                          cat("failed at case ", i, "; reproducer seed=", case_seed,
                              " length=", plan.length));
        }
    }
    return passed(suite, name,
                  cat(count, " seeded non-exact complexes reduce to their scalar homology, "
                             "base seed=",
                      seed));
}

CheckResult symwedge_offsets(int max_lambda, int max_p) {
    const std::string suite = "homalg";
    const std::string name = "symwedge bijection";
    for (int lambda = 0; lambda <= max_lambda; ++lambda) {
        for (int p = 0; p <= max_p; ++p) {
            const SymwedgeReport rep = symwedge_bijection_check(lambda, p);
            const bool ok =
                rep.bijective && rep.constant_offset && rep.offset == -p * (lambda + p - 1);
            if (!ok) return failed(suite, name, cat("failed at lambda=", lambda, " p=", p));
        }
    }
    return passed(suite, name,
                  cat("basis bijection with constant offset -p(lambda+p-1), lambda<=", max_lambda,
                      ", p<=", max_p));
}

CheckResult graded_dim_bridge(int bound) {
    const std::string suite = "homalg";
    const std::string name = "graded dimension bridge";
    for (int lambda = 0; lambda <= bound; ++lambda) {
        for (int p = 0; lambda + 2 * p <= bound; ++p) {
            const int N = lambda + 2 * p;
            const GradedComplex complex = build_modified_koszul(lambda, p);
            const int sigma = p * (lambda + p - 1) + 2 * (lambda + p);
            const MorClass f_gen = generator(GenKind::F, p, N, N);
            for (const auto& [sign, theta_s] : theta_terms(N, lambda)) {
                (void)sign;
                const int s = theta_s.terms().begin()->first.second;
                const LaurentPoly lhs =
                    f_part_multiplicity(compose(theta_s, f_gen), lambda + p);
                const LaurentPoly rhs =
                    complex.object(s).graded_dimension().shifted(-sigma);
                if (lhs != rhs) {
                    return failed(suite, name,
                                  cat("mismatch at lambda=", lambda, " p=", p, " s=", s,
                                      " (shift ", sigma, ")"));
                }
            }
        }
    }
    return passed(suite, name,
                  cat("pure-symbol multiplicities match the strand dimensions under the shift "
                      "p(lambda+p-1)+2(lambda+p), lambda+2p <= ",
                      bound));
}

// ---- homvanish ----------------------------------------------------------------------------------

CheckResult degree_gap_sweep(int max_n) {
    const std::string suite = "homvanish";
    const std::string name = "degree gap sweep";
    long long rows = 0;
    for (int N = 0; N <= max_n; ++N) {
        for (int lambda = N % 2; lambda <= N; lambda += 2) {
            const ConvolutionReport rep = check_convolution_conditions(N, lambda);
            if (!rep.pass) return failed(suite, name, cat("gap failed at N=", N, " lambda=", lambda));
            for (const GapReport& row : rep.rows) {
                const long long margin = row.d_min - row.d_max;
                const bool ok = row.gap_ok && margin >= 1 &&
                                margin == gap_quadratic(row.cond, row.a, row.b, row.k, row.j);
                if (!ok) {
                    return failed(suite, name,
                                  cat("closed form disagrees at N=", N, " lambda=", lambda,
                                      " s=", row.s, " k=", row.k, " j=", row.j));
                }
                ++rows;
            }
        }
    }
    return passed(suite, name,
                  cat("brute-force bounds and closed-form margins agree on ", rows,
                      " rows, N<=", max_n));
}

CheckResult discriminant_negativity(int max_k) {
    const std::string suite = "homvanish";
    const std::string name = "discriminant negativity";
    for (int k = 2; k <= max_k; ++k) {
        const auto [d1, d2] = discriminants(k);
        bool ok = d1 == -4LL * k * k + 8 && d2 == -4LL * k * k + 16 && d1 < 0;
        if (k >= 3) ok = ok && d2 < 0;
        if (!ok) return failed(suite, name, cat("failed at k=", k));
    }
    return passed(suite, name,
                  cat("-4k^2+8 < 0 for k>=2 and -4k^2+16 < 0 for k>=3, up to k=", max_k));
}

CheckResult no_f_part_contradiction(int sweep) {
    const std::string suite = "homvanish";
    const std::string name = "summand bound contradiction";
    for (int lambda = -sweep; lambda <= sweep; ++lambda) {
        for (int r = -sweep; r <= sweep; ++r) {
            for (int a = 1; a <= sweep; ++a) {
                const NoFPartBounds b = no_f_part_bounds(lambda, r, a);
                const long long bound = static_cast<long long>(a) * (lambda + r + a);
                const bool ok = b.upper == -bound && b.lower == bound &&
                                b.contradiction == (lambda + r + a > 0);
                if (!ok) {
                    return failed(suite, name,
                                  cat("failed at lambda=", lambda, " r=", r, " a=", a));
                }
            }
        }
    }
    return passed(suite, name,
                  cat("bounds contradict exactly when lambda+r+a > 0, |lambda|,|r|,a <= ", sweep));
}

// ---- geomdim ---------------------------------------------------------------------------------------

CheckResult cotangent_dims(int max_n) {
    const std::string suite = "geomdim";
    const std::string name = "cotangent dimension";
    for (int N = 0; N <= max_n; ++N) {
        for (int k = 0; k <= N; ++k) {
            const bool ok = dim_cotangent(k, N) == 2LL * k * (N - k) &&
                            dim_cotangent(k, N) == dim_cotangent(N - k, N);
            if (!ok) return failed(suite, name, cat("failed at k=", k, " N=", N));
        }
    }
    return passed(suite, name, cat("2k(N-k) with the k <-> N-k symmetry, N<=", max_n));
}

CheckResult correspondence_half_sum(int max_n) {
    const std::string suite = "geomdim";
    const std::string name = "correspondence half sum";
    for (int N = 0; N <= max_n; ++N) {
        for (int k2 = 0; k2 <= N; ++k2) {
            for (int k1 = 0; k1 <= k2; ++k1) {
                const long long d = dim_correspondence(k1, k2, N);
                const bool ok = 2 * d == dim_cotangent(k1, N) + dim_cotangent(k2, N) &&
                                d == dim_correspondence_fibration(k1, k2, N);
                if (!ok) {
                    return failed(suite, name, cat("failed at k1=", k1, " k2=", k2, " N=", N));
                }
            }
        }
    }
    return passed(suite, name,
                  cat("equals the half sum of cotangent dimensions and the fibration count, N<=",
                      max_n));
}

CheckResult canonical_ledger_sweep(int max_half) {
    const std::string suite = "geomdim";
    const std::string name = "canonical bundle ledger";
    for (int N = 0; N <= 2 * max_half; ++N) {
        for (int k = 0; 2 * k <= N && k <= max_half; ++k) {
            for (int s = 0; s <= k; ++s) {
                const CanonicalLedger led = canonical_ledger(N, k, s);
                const long long want = N - 2 * k + 2 * s;
                const bool ok = led.result.exponent(BundleExpr::kVPrime) == 0 &&
                                led.result.exponent(BundleExpr::kVTilde) == 0 &&
                                led.result.exponent(BundleExpr::kAmbient) == 0 &&
                                led.v_exponent == want && led.v_second_exponent == want &&
                                led.matches_symmetric_statement &&
                                led.matches_final_display == (s == 0);
                if (!ok) {
                    return failed(suite, name, cat("failed at N=", N, " k=", k, " s=", s));
                }
            }
        }
    }
    return passed(suite, name,
                  cat("auxiliary lines cancel; the symmetric printed form det(V)^{N-2k+2s} "
                      "det(V'')^{N-2k+2s} holds everywhere, the other printed form only at s=0; "
                      "N/2 <= ",
                      max_half));
}

}  // namespace checks

// ---- suite registry ------------------------------------------------------------

namespace {

struct Case {
    std::string suite;
    std::string name;
    std::function<CheckResult()> fn;
};

void add_qcore(std::vector<Case>& cases, const VerifyOptions& o) {
    cases.push_back({"qcore", "telescoping identity",
                     [o] { return checks::telescoping(o.qcore_max, o.qcore_max); }});
    cases.push_back({"qcore", "binomial symmetry", [] { return checks::binomial_symmetry(16); }});
    cases.push_back(
        {"qcore", "binomial product form", [] { return checks::binomial_product_form(-8, 8, 8); }});
    cases.push_back(
        {"qcore", "grassmannian graded dimension", [] { return checks::grassmannian_dims(12); }});
}

void add_nilhecke(std::vector<Case>& cases, const VerifyOptions& o) {
    cases.push_back({"nilhecke", "operator relations",
                     [o] { return checks::nh_relations(o.nilhecke_n, o.nilhecke_deg); }});
    cases.push_back({"nilhecke", "reduced word independence",
                     [o] { return checks::nh_word_independence(o.word_n, o.word_deg); }});
    cases.push_back(
        {"nilhecke", "staircase conjugation sign", [o] { return checks::nh_staircase_sign(o.word_n); }});
    cases.push_back({"nilhecke", "symmetric function lemmas", [o] {
                         return checks::nh_symmetric_lemmas(o.word_n, o.sym_deg, o.sym_deg);
                     }});
    cases.push_back({"nilhecke", "degree lowering",
                     [o] { return checks::nh_degree_lowering(o.nilhecke_n, o.nilhecke_deg); }});
    cases.push_back({"nilhecke", "telescoping operator identity",
                     [] { return checks::nh_telescoping_ops(3, 4, 5); }});
}

void add_uqsl2(std::vector<Case>& cases, const VerifyOptions& o) {
    cases.push_back({"uqsl2", "commutator relation", [o] { return checks::rep_serre(o.rep_max_n); }});
    cases.push_back(
        {"uqsl2", "intertwiner relation", [o] { return checks::rep_intertwiner(o.rep_max_n); }});
    cases.push_back(
        {"uqsl2", "block determinant", [o] { return checks::rep_block_determinant(o.rep_max_n); }});
    cases.push_back(
        {"uqsl2", "weight negation", [o] { return checks::rep_weight_negation(o.rep_max_n); }});
    cases.push_back({"uqsl2", "divided power commutation",
                     [o] { return checks::rep_divided_power_commutation(o.rep_max_n, 3); }});
    cases.push_back({"uqsl2", "lowest from highest",
                     [o] { return checks::rep_lowest_from_highest(o.rep_max_n, 3); }});
    cases.push_back({"uqsl2", "highest weight image",
                     [o] { return checks::rep_highest_weight_image(o.rep_max_n); }});
}

void add_morclass(std::vector<Case>& cases, const VerifyOptions& o) {
    cases.push_back({"morclass", "euler characteristic",
                     [o] { return checks::euler_characteristic_match(o.euler_max_n); }});
    cases.push_back({"morclass", "word oracle equivalence", [o] {
                         return checks::word_oracle_equivalence(o.oracle_max_n, o.oracle_max_r,
                                                                o.oracle_max_len);
                     }});
    cases.push_back({"morclass", "composition associativity",
                     [] { return checks::composition_associativity(5, 3); }});
    cases.push_back(
        {"morclass", "ladder term shape", [o] { return checks::theta_term_shape(o.euler_max_n); }});
}

void add_homalg(std::vector<Case>& cases, const VerifyOptions& o) {
    cases.push_back(
        {"homalg", "koszul exactness", [o] { return checks::koszul_exactness(o.koszul_dim); }});
    cases.push_back({"homalg", "modified koszul homology",
                     [o] { return checks::modified_koszul_homology(o.koszul_bound); }});
    cases.push_back({"homalg", "highest weight complex",
                     [o] { return checks::theta_hw_exactness(o.theta_hw_bound); }});
    cases.push_back({"homalg", "random exact convolution", [o] {
                         return checks::random_exact_convolutions(o.seed, o.random_exact);
                     }});
    cases.push_back({"homalg", "random planned homology", [o] {
                         return checks::random_planned_convolutions(o.seed, o.random_planned);
                     }});
    cases.push_back({"homalg", "symwedge bijection", [] { return checks::symwedge_offsets(6, 3); }});
    cases.push_back({"homalg", "graded dimension bridge",
                     [o] { return checks::graded_dim_bridge(o.bridge_bound); }});
}

void add_homvanish(std::vector<Case>& cases, const VerifyOptions& o) {
    cases.push_back(
        {"homvanish", "degree gap sweep", [o] { return checks::degree_gap_sweep(o.gap_max_n); }});
    cases.push_back({"homvanish", "discriminant negativity",
                     [o] { return checks::discriminant_negativity(o.gap_max_n); }});
    cases.push_back({"homvanish", "summand bound contradiction",
                     [o] { return checks::no_f_part_contradiction(o.bounds_sweep); }});
}

void add_geomdim(std::vector<Case>& cases, const VerifyOptions& o) {
    cases.push_back(
        {"geomdim", "cotangent dimension", [o] { return checks::cotangent_dims(o.geom_max_n); }});
    cases.push_back({"geomdim", "correspondence half sum",
                     [o] { return checks::correspondence_half_sum(o.geom_max_n); }});
    cases.push_back({"geomdim", "canonical bundle ledger",
                     [o] { return checks::canonical_ledger_sweep(o.ledger_max_half); }});
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {
        "qcore", "nilhecke", "uqsl2", "morclass", "homalg", "homvanish", "geomdim"};
    return names;
}

bool is_suite_name(const std::string& name) {
    if (name == "all") return true;
    const auto& names = suite_names();
    return std::find(names.begin(), names.end(), name) != names.end();
}

std::vector<CheckResult> run_suite(const std::string& suite, const VerifyOptions& options) {
    if (!is_suite_name(suite)) {
        throw std::invalid_argument("run_suite: unknown suite '" + suite + "'");
    }
    std::vector<Case> cases;
    const bool all = suite == "all";
    if (all || suite == "qcore") add_qcore(cases, options);
    if (all || suite == "nilhecke") add_nilhecke(cases, options);
    if (all || suite == "uqsl2") add_uqsl2(cases, options);
    if (all || suite == "morclass") add_morclass(cases, options);
    if (all || suite == "homalg") add_homalg(cases, options);
    if (all || suite == "homvanish") add_homvanish(cases, options);
    if (all || suite == "geomdim") add_geomdim(cases, options);

    std::vector<CheckResult> results(cases.size());
    std::atomic<size_t> next{0};
    int jobs = options.jobs > 0 ? options.jobs
                                : static_cast<int>(std::thread::hardware_concurrency());
    if (jobs < 1) jobs = 1;
    jobs = static_cast<int>(std::min<size_t>(static_cast<size_t>(jobs), cases.size()));

    const auto worker = [&cases, &results, &next] {
        for (size_t i; (i = next.fetch_add(1)) < cases.size();) {
            try {
                results[i] = cases[i].fn();
            } catch (const std::exception& e) {
                results[i] = {cases[i].suite, cases[i].name, false,
                              std::string("exception: ") + e.what()};
            }
        }
    };
    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<size_t>(jobs));
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (std::thread& t : pool) t.join();
    }

    std::sort(results.begin(), results.end(), [](const CheckResult& a, const CheckResult& b) {
        return std::tie(a.suite, a.name) < std::tie(b.suite, b.name);
    });
    return results;
}

bool all_passed(const std::vector<CheckResult>& results) {
    return std::all_of(results.begin(), results.end(),
                       [](const CheckResult& r) { return r.pass; });
}

}  // namespace catsl2

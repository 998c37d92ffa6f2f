#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace catsl2 {

// Outcome of one verification case. `name` is unique within its suite;
// `detail` records the swept bounds, key measured values and seeds, and on
// failure the first failing parameter tuple as a reproducer.
struct CheckResult {
    std::string suite;
    std::string name;
    bool pass = false;
    std::string detail;
};

// Sweep bounds for the verification suites. The defaults are the acceptance
// bounds; lowering them gives a quicker smoke run.
struct VerifyOptions {
    int qcore_max = 50;         // telescoping sweep bound on s and lambda
    int nilhecke_n = 5;         // strands for the relation sweep
    int nilhecke_deg = 8;       // monomial degree for operator equality
    int word_n = 4;             // strands for word independence / staircase
    int word_deg = 6;           // monomial degree for the word sweeps
    int sym_deg = 6;            // symmetric-polynomial degree
    int rep_max_n = 12;         // V(N) bound for the weight-operator suite
    int euler_max_n = 12;       // Euler-characteristic bound
    int oracle_max_n = 10;      // window bound for the word oracle
    int oracle_max_r = 3;       // divided-power order bound
    int oracle_max_len = 4;     // word length bound
    int koszul_dim = 5;         // full Koszul exactness dimension bound
    int koszul_bound = 10;      // lambda + 2p bound for the modified complex
    int theta_hw_bound = 10;    // lambda + 2p bound for the extended complex
    int random_exact = 200;     // random exact convolution count
    int random_planned = 50;    // random non-exact control count
    int bridge_bound = 8;       // lambda + 2p bound for the graded-dim bridge
    int gap_max_n = 30;         // degree-gap sweep bound
    int bounds_sweep = 15;      // no-f-part contradiction sweep bound
    int geom_max_n = 20;        // dimension-formula sweep bound
    int ledger_max_half = 10;   // canonical-ledger bound on N/2
    std::uint64_t seed = 7;     // base seed for the randomized cases
    int jobs = 0;               // worker threads; 0 = hardware concurrency
};

// Suite names in report order; run_suite also accepts "all".
[[nodiscard]] const std::vector<std::string>& suite_names();
[[nodiscard]] bool is_suite_name(const std::string& name);

// Runs one suite (or "all"). Independent cases are dispatched to a pool of
// options.jobs workers; the returned report is sorted by (suite, name) and
// is deterministic for a fixed options value.
[[nodiscard]] std::vector<CheckResult> run_suite(const std::string& suite,
                                                 const VerifyOptions& options);

[[nodiscard]] bool all_passed(const std::vector<CheckResult>& results);

// Individual checks, shared by the suite runner and the acceptance driver.
// Each performs one full sweep at the given bounds.
namespace checks {

// qcore
[[nodiscard]] CheckResult telescoping(int max_s, int max_lambda);
[[nodiscard]] CheckResult binomial_symmetry(int max_n);
[[nodiscard]] CheckResult binomial_product_form(int min_n, int max_n, int max_k);
[[nodiscard]] CheckResult grassmannian_dims(int max_n);

// nilhecke
[[nodiscard]] CheckResult nh_relations(int max_n, int max_deg);
[[nodiscard]] CheckResult nh_word_independence(int max_n, int max_deg);
[[nodiscard]] CheckResult nh_staircase_sign(int max_n);
[[nodiscard]] CheckResult nh_symmetric_lemmas(int max_n, int sym_deg, int max_deg);
[[nodiscard]] CheckResult nh_degree_lowering(int max_n, int max_deg);
[[nodiscard]] CheckResult nh_telescoping_ops(int max_n, int max_a, int max_deg);

// uqsl2
[[nodiscard]] CheckResult rep_serre(int max_n);
[[nodiscard]] CheckResult rep_intertwiner(int max_n);
[[nodiscard]] CheckResult rep_block_determinant(int max_n);
[[nodiscard]] CheckResult rep_weight_negation(int max_n);
[[nodiscard]] CheckResult rep_divided_power_commutation(int max_n, int max_ab);
[[nodiscard]] CheckResult rep_lowest_from_highest(int max_n, int max_p);
[[nodiscard]] CheckResult rep_highest_weight_image(int max_n);

// morclass
[[nodiscard]] CheckResult euler_characteristic_match(int max_n);
[[nodiscard]] CheckResult word_oracle_equivalence(int max_n, int max_r, int max_len);
[[nodiscard]] CheckResult composition_associativity(int max_n, int max_r);
[[nodiscard]] CheckResult theta_term_shape(int max_n);

// homalg
[[nodiscard]] CheckResult koszul_exactness(int max_dim);
[[nodiscard]] CheckResult modified_koszul_homology(int bound);
[[nodiscard]] CheckResult theta_hw_exactness(int bound);
[[nodiscard]] CheckResult random_exact_convolutions(std::uint64_t seed, int count);
[[nodiscard]] CheckResult random_planned_convolutions(std::uint64_t seed, int count);
[[nodiscard]] CheckResult symwedge_offsets(int max_lambda, int max_p);
[[nodiscard]] CheckResult graded_dim_bridge(int bound);

// homvanish
[[nodiscard]] CheckResult degree_gap_sweep(int max_n);
[[nodiscard]] CheckResult discriminant_negativity(int max_k);
[[nodiscard]] CheckResult no_f_part_contradiction(int sweep);

// geomdim
[[nodiscard]] CheckResult cotangent_dims(int max_n);
[[nodiscard]] CheckResult correspondence_half_sum(int max_n);
[[nodiscard]] CheckResult canonical_ledger_sweep(int max_half);

}  // namespace checks

}  // namespace catsl2

#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "catsl2/qcore.hpp"

namespace catsl2 {

using Rat = boost::multiprecision::cpp_rational;

// ---------------------------------------------------------------------------
// Exact rational matrices
// ---------------------------------------------------------------------------

class RatMat {
public:
    RatMat() = default;
    RatMat(int rows, int cols) : rows_(rows), cols_(cols), a_(size(), Rat(0)) {}

    static RatMat identity(int n);

    [[nodiscard]] int rows() const { return rows_; }
    [[nodiscard]] int cols() const { return cols_; }
    Rat& at(int r, int c) { return a_[index(r, c)]; }
    [[nodiscard]] const Rat& at(int r, int c) const { return a_[index(r, c)]; }

    [[nodiscard]] bool is_zero() const;
    friend RatMat operator*(const RatMat& lhs, const RatMat& rhs);
    bool operator==(const RatMat& rhs) const = default;

    [[nodiscard]] int rank() const;

    // Reduced row echelon form together with the pivot column indices.
    struct Rref;
    [[nodiscard]] Rref rref() const;

    // Columns spanning the kernel, one per free column, in column order.
    [[nodiscard]] std::vector<std::vector<Rat>> kernel_basis() const;

    // Inverse of a square invertible matrix; throws std::logic_error else.
    [[nodiscard]] RatMat inverse() const;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Rat> a_;

    [[nodiscard]] size_t size() const {
        return static_cast<size_t>(rows_) * static_cast<size_t>(cols_);
    }
    [[nodiscard]] size_t index(int r, int c) const {
        return static_cast<size_t>(r) * static_cast<size_t>(cols_) +
               static_cast<size_t>(c);
    }
};

struct RatMat::Rref {
    RatMat mat;
    std::vector<int> pivot_cols;
};

// ---------------------------------------------------------------------------
// Graded vector spaces and complexes
// ---------------------------------------------------------------------------

struct GradedVS {
    std::map<int, int> dims;                            // degree -> dim > 0
    std::map<int, std::vector<std::string>> labels;     // optional, per degree

    [[nodiscard]] int dim(int degree) const;
    [[nodiscard]] int total_dim() const;
    [[nodiscard]] bool is_zero() const { return dims.empty(); }
    [[nodiscard]] LaurentPoly graded_dimension() const;
    void validate() const;  // throws std::logic_error on label mismatch
};

// Chain complex of graded vector spaces, positions 0..n, with differentials
// d_k: object(k) -> object(k-1) stored as one rational block per degree.
// Invariant: d has degree 0 and d.d = 0, checked by validate().
class GradedComplex {
public:
    explicit GradedComplex(std::vector<GradedVS> objects);

    [[nodiscard]] int length() const { return static_cast<int>(objects_.size()) - 1; }
    [[nodiscard]] const GradedVS& object(int position) const;

    // Block of d: object(position) -> object(position-1) in the given degree;
    // implicit zero blocks are materialized with the right shape.
    [[nodiscard]] RatMat diff_block(int position, int degree) const;
    void set_diff_block(int position, int degree, RatMat block);

    void validate() const;  // shapes, degree preservation, d.d = 0

    [[nodiscard]] GradedVS homology(int position) const;
    [[nodiscard]] bool is_exact() const;  // homology zero at every position

private:
    std::vector<GradedVS> objects_;
    std::vector<std::map<int, RatMat>> diffs_;  // diffs_[k]: position k+1 -> k
};

// Koszul complex C_s = Sym^s M (x) Wedge^{l-s} M, s = l..0, for M with the
// given basis degrees; d moves one Sym factor into the leftmost wedge slot.
// Basis labels read "s{a1 a2}|w{b1 b2}" over generator indices. Requires
// 0 <= l <= dim M.
[[nodiscard]] GradedComplex build_koszul(const std::vector<int>& degrees, int l);

// Modified complex C'_s = Sym^s M (x) Wedge^{p-s} Mbar ^ v for
// M = k^{lambda+p+1} with deg e_i = 2i, v = e_{lambda+p}, s = p..0. The
// trailing wedge factor v is implicit in the labels.
[[nodiscard]] GradedComplex build_modified_koszul(int lambda, int p);

// Label of the Sym/wedge basis element as used by the builders.
[[nodiscard]] std::string koszul_label(const std::vector<int>& sym,
                                       const std::vector<int>& wedge);

// Extended complex k<-p(lambda+p+1)> -> C'_p<sigma> -> ... -> C'_0<sigma>
// with sigma = p(lambda+p-1) + 2(lambda+p); the extension map sends the
// generator to the top homology class. Requires lambda >= 0, p >= 0 and
// lambda + 2p = N.
struct ThetaHwComplex {
    GradedComplex complex;
    bool exact;
    int sigma;
    int extension_degree;  // p(lambda+p+1)
};
[[nodiscard]] ThetaHwComplex theta_hw_complex(int N, int lambda, int p);

// deg(phi_s(f)) = f_deg - p(lambda+p-1) - s(s+1)/2.
[[nodiscard]] int phi_degree(int lambda, int p, int s, int f_deg);
// deg(g) = f_deg - p(lambda+p-1).
[[nodiscard]] int companion_degree(int lambda, int p, int f_deg);

// Explicit basis bijection from C'_s to monomial labels (symmetric part in
// x_1..x_s, strict part in x_{s+1}..x_p): checks bijectivity per s and that
// the degree offset after the sigma shift is one constant for all s.
struct SymwedgeReport {
    bool bijective;
    bool constant_offset;
    int offset;  // deg in C'_s<sigma> minus monomial degree
};
[[nodiscard]] SymwedgeReport symwedge_bijection_check(int lambda, int p);

// ---------------------------------------------------------------------------
// Truncated graded test ring
// ---------------------------------------------------------------------------

// Element of a free commutative ring over the rationals with graded
// generators, truncated above the ring's degree bound. Keys are exponent
// vectors over the generators.
struct RElem {
    std::map<std::vector<int>, Rat> terms;

    [[nodiscard]] bool is_zero() const { return terms.empty(); }
    bool operator==(const RElem& rhs) const = default;
};

class TestRing {
public:
    TestRing(std::vector<int> gen_degrees, int degree_bound);

    [[nodiscard]] int num_gens() const { return static_cast<int>(gen_degrees_.size()); }
    [[nodiscard]] const std::vector<int>& gen_degrees() const { return gen_degrees_; }
    [[nodiscard]] int degree_bound() const { return bound_; }

    [[nodiscard]] RElem zero() const { return {}; }
    [[nodiscard]] RElem one() const { return constant(1); }
    [[nodiscard]] RElem constant(const Rat& c) const;
    [[nodiscard]] RElem monomial(const std::vector<int>& exps, const Rat& c) const;

    [[nodiscard]] int monomial_degree(const std::vector<int>& exps) const;

    [[nodiscard]] RElem add(const RElem& a, const RElem& b) const;
    [[nodiscard]] RElem sub(const RElem& a, const RElem& b) const;
    [[nodiscard]] RElem neg(const RElem& a) const;
    [[nodiscard]] RElem mul(const RElem& a, const RElem& b) const;

    // True when every monomial has exactly the stated degree.
    [[nodiscard]] bool is_homogeneous(const RElem& a, int degree) const;
    [[nodiscard]] bool is_scalar(const RElem& a) const;
    [[nodiscard]] Rat scalar_part(const RElem& a) const;

private:
    std::vector<int> gen_degrees_;
    int bound_;
};

// Matrix over the test ring; entries owned densely.
struct RMat {
    int rows = 0;
    int cols = 0;
    std::vector<RElem> a;

    RMat() = default;
    RMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

    RElem& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
    [[nodiscard]] const RElem& at(int r, int c) const {
        return a[static_cast<size_t>(r) * cols + c];
    }
    [[nodiscard]] bool is_zero() const;
};

[[nodiscard]] RMat rmat_mul(const TestRing& ring, const RMat& lhs, const RMat& rhs);
[[nodiscard]] RMat rmat_sub(const TestRing& ring, const RMat& lhs, const RMat& rhs);
[[nodiscard]] RMat rmat_from_rat(const TestRing& ring, const RatMat& m);

// ---------------------------------------------------------------------------
// Q-decorated complexes and Gaussian convolution
// ---------------------------------------------------------------------------

// Complex whose position-i object is a direct sum of shifted copies of a
// fixed object Q, one slot per listed shift. A differential entry from a
// source slot of shift j to a target slot of shift j' is a homogeneous ring
// element of degree j' - j; negative-degree entries vanish and degree-0
// entries are scalars. diffs[k] maps position k+1 to position k.
struct QComplex {
    TestRing ring;
    std::vector<std::vector<int>> shifts;
    std::vector<RMat> diffs;

    // Throws std::invalid_argument with a diagnostic on any violation:
    // shape mismatch, nonhomogeneous entry, negative-degree entry, ring
    // bound below the shift span, or d.d != 0.
    void validate() const;

    [[nodiscard]] LaurentPoly graded_dim(int position) const;

    // Homology of the scalar shadow (V, M): position -> shift -> dim > 0.
    [[nodiscard]] std::map<int, std::map<int, int>> scalar_homology() const;
};

// One bottom-up elimination step: at `position`, the matched invertible part
// cancels, `residual_shifts` stay behind (empty iff the scalar shadow is
// exact there) and `leftover_shifts` form the new bottom at position + 1.
struct ReductionStep {
    int position;
    std::vector<int> leftover_shifts;
    std::vector<int> residual_shifts;
};

struct ReductionReport {
    std::vector<ReductionStep> steps;
    std::map<int, std::vector<int>> final_components;  // position -> shifts
    bool final_is_zero = false;
    // Graded Euler characteristics of the partial convolutions B_i; they
    // satisfy cone_euler[i] = graded_dim(A_i) - cone_euler[i-1].
    std::vector<LaurentPoly> cone_euler;
};

// Reduces the complex from the bottom by Gaussian elimination of the
// degree-0 blocks, certifying invertibility of the cancelled part through
// upper-triangularity. The final object is zero iff the scalar shadow is
// exact; otherwise its graded dims equal the shadow's homology.
[[nodiscard]] ReductionReport gaussian_convolve(const QComplex& qc);

// ---------------------------------------------------------------------------
// Seeded random complexes
// ---------------------------------------------------------------------------

// Deterministic across platforms: rejection sampling on raw mt19937_64 words.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    [[nodiscard]] int uniform(int lo, int hi);  // inclusive bounds
    [[nodiscard]] Rat small_nonzero_scalar();

private:
    std::mt19937_64 eng_;
};

struct RandomComplexPlan {
    int length = 3;                 // positions 0..length
    int min_pairs_per_gap = 1;
    int max_pairs_per_gap = 3;
    int shift_min = 0;
    int shift_max = 6;
    // Extra unmatched slots per position; these become the planned homology
    // of the scalar shadow. Empty (or all-empty) plans give exact complexes.
    std::vector<std::vector<int>> planned_homology;
};

// Canonical matched-pair complex with the planned homology slots, conjugated
// position by position with random invertible degree-0-diagonal plus
// positive-degree upper parts.
[[nodiscard]] QComplex random_qcomplex(std::uint64_t seed, const RandomComplexPlan& plan);

}  // namespace catsl2

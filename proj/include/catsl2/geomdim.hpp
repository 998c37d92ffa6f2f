#pragma once

#include <array>
#include <string>

namespace catsl2 {

// dim T*G(k, N) = 2k(N-k).
[[nodiscard]] long long dim_cotangent(int k, int N);

// Dimension of the two-step correspondence with subspace dimensions
// k1 <= k2: N(k1+k2) - k1^2 - k2^2. Equals the half-sum of the two cotangent
// dimensions.
[[nodiscard]] long long dim_correspondence(int k1, int k2, int N);

// dim Fl(k1, k2; N) = k1(k2-k1) + k2(N-k2).
[[nodiscard]] long long dim_flag(int k1, int k2, int N);

// Independent oracle: the correspondence fibres over the flag variety with
// affine fibre Hom(C^N/V, V') of dimension k1(N-k2).
[[nodiscard]] long long dim_correspondence_fibration(int k1, int k2, int N);

// The fibre product over the closed orbit stratum splits into k+1
// equi-dimensional components.
[[nodiscard]] int component_count(int k);

// Formal exponent vector over the five determinant-line symbols. Tensor
// product adds exponents; det of a quotient expands as the difference; the
// ambient factor is trivial and killed by normalized().
class BundleExpr {
public:
    enum Symbol { kVPrime = 0, kV = 1, kVSecond = 2, kVTilde = 3, kAmbient = 4 };
    static constexpr int kNumSymbols = 5;

    BundleExpr() = default;

    [[nodiscard]] static BundleExpr symbol(Symbol which, long long exponent);
    [[nodiscard]] static BundleExpr quotient(Symbol num, Symbol den, long long exponent);

    [[nodiscard]] long long exponent(Symbol which) const {
        return exps_[static_cast<size_t>(which)];
    }
    [[nodiscard]] bool is_trivial() const;

    friend BundleExpr operator*(const BundleExpr& lhs, const BundleExpr& rhs);
    bool operator==(const BundleExpr& rhs) const = default;

    [[nodiscard]] BundleExpr normalized() const;  // drop the ambient factor

    [[nodiscard]] std::string str() const;

private:
    std::array<long long, kNumSymbols> exps_{};
};

// Exponent bookkeeping for the canonical bundle of the correspondence
// resolution: the four relative factors are tensored, the quotients expanded
// and the trivial ambient factor dropped. The V' and Vtilde coefficients must
// cancel on the nose; the surviving exponents are compared against the two
// printed candidate forms.
struct CanonicalLedger {
    int N;
    int k;
    int s;
    BundleExpr result;
    long long v_exponent;
    long long v_second_exponent;
    bool matches_symmetric_statement;  // both exponents equal N-2k+2s
    bool matches_final_display;        // v: N-2k+s, v'': N-2k+2s
};
[[nodiscard]] CanonicalLedger canonical_ledger(int N, int k, int s);

}  // namespace catsl2

#include "catsl2/geomdim.hpp"

#include <sstream>
#include <stdexcept>

namespace catsl2 {

long long dim_cotangent(int k, int N) {
    if (k < 0 || k > N) throw std::invalid_argument("dim_cotangent: need 0 <= k <= N");
    return 2LL * k * (N - k);
}

long long dim_correspondence(int k1, int k2, int N) {
    if (k1 < 0 || k1 > k2 || k2 > N) {
        throw std::invalid_argument("dim_correspondence: need 0 <= k1 <= k2 <= N");
    }
    return static_cast<long long>(N) * (k1 + k2) - static_cast<long long>(k1) * k1 -
           static_cast<long long>(k2) * k2;
}

long long dim_flag(int k1, int k2, int N) {
    if (k1 < 0 || k1 > k2 || k2 > N) {
        throw std::invalid_argument("dim_flag: need 0 <= k1 <= k2 <= N");
    }
    return static_cast<long long>(k1) * (k2 - k1) + static_cast<long long>(k2) * (N - k2);
}

long long dim_correspondence_fibration(int k1, int k2, int N) {
    return dim_flag(k1, k2, N) + static_cast<long long>(k1) * (N - k2);
}

int component_count(int k) {
    if (k < 0) throw std::invalid_argument("component_count: negative k");
    return k + 1;
}

// ---------------------------------------------------------------------------
// BundleExpr
// ---------------------------------------------------------------------------

BundleExpr BundleExpr::symbol(Symbol which, long long exponent) {
    BundleExpr out;
    out.exps_[static_cast<size_t>(which)] = exponent;
    return out;
}

BundleExpr BundleExpr::quotient(Symbol num, Symbol den, long long exponent) {
    BundleExpr out;
    out.exps_[static_cast<size_t>(num)] += exponent;
    out.exps_[static_cast<size_t>(den)] -= exponent;
    return out;
}

bool BundleExpr::is_trivial() const {
    for (long long e : exps_) {
        if (e != 0) return false;
    }
    return true;
}

BundleExpr operator*(const BundleExpr& lhs, const BundleExpr& rhs) {
    BundleExpr out = lhs;
    for (size_t i = 0; i < BundleExpr::kNumSymbols; ++i) out.exps_[i] += rhs.exps_[i];
    return out;
}

BundleExpr BundleExpr::normalized() const {
    BundleExpr out = *this;
    out.exps_[static_cast<size_t>(kAmbient)] = 0;
    return out;
}

std::string BundleExpr::str() const {
    static const char* names[kNumSymbols] = {"det(V')", "det(V)", "det(V'')", "det(Vt)",
                                             "det(amb)"};
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < kNumSymbols; ++i) {
        if (exps_[i] == 0) continue;
        if (!first) os << " ";
        os << names[i] << "^" << exps_[i];
        first = false;
    }
    return first ? "1" : os.str();
}

// ---------------------------------------------------------------------------
// Canonical ledger
// ---------------------------------------------------------------------------

CanonicalLedger canonical_ledger(int N, int k, int s) {
    if (s < 0 || s > k || 2 * k > N) {
        throw std::invalid_argument("canonical_ledger: need 0 <= s <= k <= N/2");
    }
    using B = BundleExpr;
    const long long m = N - 2LL * k;

    // Relative factor of the two Grassmannian bundle directions.
    const B grass = B::quotient(B::kV, B::kVPrime, m + s) * B::quotient(B::kVTilde, B::kV, -s) *
                    B::quotient(B::kVSecond, B::kVPrime, s) *
                    B::quotient(B::kVTilde, B::kVSecond, -m - s);
    // The two cut-out sections.
    const B sections = B::quotient(B::kAmbient, B::kVTilde, -m - 2 * s) *
                       B::quotient(B::kVTilde, B::kVPrime, static_cast<long long>(k) - s);
    // Base with trivial canonical bundle, written through the last factor.
    const B base = B::quotient(B::kVTilde, B::kVPrime, -(static_cast<long long>(k) - s)) *
                   B::symbol(B::kVPrime, m + 2 * s);

    const B result = (grass * sections * base).normalized();
    if (result.exponent(B::kVPrime) != 0 || result.exponent(B::kVTilde) != 0) {
        throw std::logic_error("canonical_ledger: auxiliary factors failed to cancel");
    }

    const long long ev = result.exponent(B::kV);
    const long long evv = result.exponent(B::kVSecond);
    return CanonicalLedger{N,
                           k,
                           s,
                           result,
                           ev,
                           evv,
                           ev == m + 2 * s && evv == m + 2 * s,
                           ev == m + s && evv == m + 2 * s};
}

}  // namespace catsl2

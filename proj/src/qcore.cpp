#include "catsl2/qcore.hpp"

#include <sstream>
#include <stdexcept>
#include <vector>

namespace catsl2 {

LaurentPoly LaurentPoly::constant(Int c) {
    return monomial(0, std::move(c));
}

LaurentPoly LaurentPoly::monomial(int exp, Int coeff) {
    LaurentPoly p;
    if (coeff != 0) p.coeffs_[exp] = std::move(coeff);
    return p;
}

Int LaurentPoly::coeff(int exp) const {
    auto it = coeffs_.find(exp);
    return it == coeffs_.end() ? Int(0) : it->second;
}

int LaurentPoly::min_exp() const {
    if (coeffs_.empty()) throw std::logic_error("min_exp of zero polynomial");
    return coeffs_.begin()->first;
}

int LaurentPoly::max_exp() const {
    if (coeffs_.empty()) throw std::logic_error("max_exp of zero polynomial");
    return coeffs_.rbegin()->first;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (const auto& [e, c] : coeffs_) r.coeffs_[e] = -c;
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
    for (const auto& [e, c] : rhs.coeffs_) {
        auto it = coeffs_.find(e);
        if (it == coeffs_.end()) {
            coeffs_[e] = c;
        } else {
            it->second += c;
            if (it->second == 0) coeffs_.erase(it);
        }
    }
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
    for (const auto& [e, c] : rhs.coeffs_) {
        auto it = coeffs_.find(e);
        if (it == coeffs_.end()) {
            coeffs_[e] = -c;
        } else {
            it->second -= c;
            if (it->second == 0) coeffs_.erase(it);
        }
    }
    return *this;
}

LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs) {
    LaurentPoly r;
    for (const auto& [e1, c1] : lhs.coeffs_) {
        for (const auto& [e2, c2] : rhs.coeffs_) {
            Int& slot = r.coeffs_[e1 + e2];
            slot += c1 * c2;
            if (slot == 0) r.coeffs_.erase(e1 + e2);
        }
    }
    return r;
}

LaurentPoly LaurentPoly::scaled(const Int& c) const {
    LaurentPoly r;
    if (c == 0) return r;
    for (const auto& [e, v] : coeffs_) r.coeffs_[e] = v * c;
    return r;
}

LaurentPoly LaurentPoly::shifted(int exp) const {
    LaurentPoly r;
    for (const auto& [e, v] : coeffs_) r.coeffs_[e + exp] = v;
    return r;
}

LaurentPoly LaurentPoly::bar() const {
    LaurentPoly r;
    for (const auto& [e, v] : coeffs_) r.coeffs_[-e] = v;
    return r;
}

bool LaurentPoly::has_nonnegative_coeffs() const {
    for (const auto& [e, v] : coeffs_) {
        if (v < 0) return false;
    }
    return true;
}

Int LaurentPoly::eval_at_one() const {
    Int s = 0;
    for (const auto& [e, v] : coeffs_) s += v;
    return s;
}

bool LaurentPoly::is_signed_q_power() const {
    if (coeffs_.size() != 1) return false;
    const Int& c = coeffs_.begin()->second;
    return c == 1 || c == -1;
}

LaurentPoly LaurentPoly::divide_exact(const LaurentPoly& num, const LaurentPoly& den) {
    if (den.is_zero()) throw std::logic_error("division by zero polynomial");
    if (num.is_zero()) return zero();

    // Long division on exponent-shifted ordinary polynomials; every partial
    // quotient coefficient must divide exactly over ZZ.
    const int num_lo = num.min_exp();
    const int den_lo = den.min_exp();
    const int den_hi = den.max_exp();
    const Int den_lead = den.coeffs_.rbegin()->second;

    LaurentPoly rem = num;
    LaurentPoly quot;
    while (!rem.is_zero() && rem.max_exp() >= den_hi + (rem.min_exp() - den_lo)) {
        const int rem_hi = rem.max_exp();
        const Int rem_lead = rem.coeffs_.rbegin()->second;
        if (rem_lead % den_lead != 0) throw std::logic_error("non-exact polynomial division");
        const int shift = rem_hi - den_hi;
        LaurentPoly t = monomial(shift, rem_lead / den_lead);
        quot += t;
        rem -= t * den;
        if (!rem.is_zero() && rem.max_exp() >= rem_hi) {
            throw std::logic_error("non-exact polynomial division (no degree drop)");
        }
    }
    if (!rem.is_zero()) throw std::logic_error("non-exact polynomial division (nonzero remainder)");
    (void)num_lo;
    return quot;
}

std::string LaurentPoly::str() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : coeffs_) {
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        first = false;
        Int a = c < 0 ? Int(-c) : c;
        const bool unit = (a == 1);
        if (!unit || e == 0) os << a.str();
        if (e != 0) {
            if (!unit) os << "*";
            os << "q";
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

GradedDim::GradedDim(LaurentPoly p) : poly_(std::move(p)) {
    if (!poly_.has_nonnegative_coeffs()) {
        throw std::invalid_argument("graded dimension must have nonnegative coefficients");
    }
}

LaurentPoly qint(int k) {
    if (k < 0) throw std::invalid_argument("qint: negative argument");
    LaurentPoly r;
    for (int e = -(k - 1); e <= k - 1; e += 2) r += LaurentPoly::q_power(e);
    return r;
}

LaurentPoly qint_signed(int k) {
    return k >= 0 ? qint(k) : -qint(-k);
}

LaurentPoly qbinom(int n, int k) {
    if (n < 0) throw std::invalid_argument("qbinom: negative upper index");
    if (k < 0 || k > n) return LaurentPoly::zero();
    LaurentPoly num = LaurentPoly::one();
    LaurentPoly den = LaurentPoly::one();
    for (int i = 1; i <= k; ++i) {
        num *= qint(n - k + i);
        den *= qint(i);
    }
    return LaurentPoly::divide_exact(num, den);
}

LaurentPoly qbinom_signed(int n, int k) {
    if (n >= 0) return qbinom(n, k);
    if (k < 0) return LaurentPoly::zero();
    LaurentPoly r = qbinom(k - n - 1, k);
    return (k % 2 == 0) ? r : -r;
}

GradedDim graded_dim_grassmannian(int k, int n) {
    if (k < 0 || k > n) throw std::invalid_argument("graded_dim_grassmannian: requires 0 <= k <= n");
    return GradedDim(qbinom(n, k));
}

Int eval_at_one(const LaurentPoly& p) {
    return p.eval_at_one();
}

}  // namespace catsl2

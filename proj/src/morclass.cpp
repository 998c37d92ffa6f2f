#include "catsl2/morclass.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace catsl2 {

bool symbol_in_window(int mu, int N, int a, int b) {
    const int mid = mu + 2 * b;
    const int tgt = mid - 2 * a;
    return std::abs(mu) <= N && std::abs(mid) <= N && std::abs(tgt) <= N;
}

MorClass MorClass::identity(int source_weight, int window) {
    MorClass c(window, source_weight, source_weight);
    c.add_term(0, 0, LaurentPoly::one());
    return c;
}

void MorClass::add_term(int a, int b, const LaurentPoly& poly) {
    if (a < 0 || b < 0) {
        throw std::logic_error("negative divided power in a canonical symbol");
    }
    if (mu_ + 2 * b - 2 * a != target_) {
        throw std::logic_error("canonical symbol target mismatch");
    }
    if (poly.is_zero() || !symbol_in_window(mu_, n_, a, b)) {
        return;
    }
    const std::pair<int, int> key{a, b};
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, poly);
        return;
    }
    it->second += poly;
    if (it->second.is_zero()) {
        terms_.erase(it);
    }
}

std::string MorClass::str() const {
    if (terms_.empty()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (const auto& [ab, m] : terms_) {
        if (!first) {
            os << " + ";
        }
        first = false;
        os << "(" << m.str() << ")*F(" << ab.first << ")E(" << ab.second << ")";
    }
    return os.str();
}

MorClass generator(GenKind kind, int r, int mu, int N) {
    if (std::abs(mu) > N) {
        throw std::invalid_argument("generator source weight outside window");
    }
    if (r < 0) {
        throw std::invalid_argument("divided power must be nonnegative");
    }
    const int target = kind == GenKind::E ? mu + 2 * r : mu - 2 * r;
    MorClass c(N, mu, target);
    if (kind == GenKind::E) {
        c.add_term(0, r, LaurentPoly::one());
    } else {
        c.add_term(r, 0, LaurentPoly::one());
    }
    return c;
}

MorClass compose(GenKind kind, int r, const MorClass& c) {
    const int tau = c.target_weight();
    const int target = kind == GenKind::E ? tau + 2 * r : tau - 2 * r;
    if (std::abs(tau) > c.N()) {
        // The chain already left the window; stay zero but keep chaining.
        return MorClass::zero(c.N(), c.mu(), target);
    }
    return compose(generator(kind, r, tau, c.N()), c);
}

MorClass compose(const MorClass& left, const MorClass& right) {
    if (left.N() != right.N()) {
        throw std::invalid_argument("window mismatch");
    }
    if (left.mu() != right.target_weight()) {
        throw std::invalid_argument("weight mismatch in composition");
    }
    MorClass out(right.N(), right.mu(), left.target_weight());
    if (left.saw_negative_commutation() || right.saw_negative_commutation()) {
        out.mark_negative_commutation();
    }
    for (const auto& [ab2, m2] : right.terms()) {
        const auto [a2, b2] = ab2;
        for (const auto& [ab1, m1] : left.terms()) {
            const auto [a1, b1] = ab1;
            // E^{(b1)} F^{(a2)} expands over the weight at which F^{(a2)}
            // starts; then the outer F's and inner E's merge.
            const int top = right.mu() + 2 * b2 - a2 + b1;
            const LaurentPoly m12 = m1 * m2;
            for (int j = 0; j <= std::min(a2, b1); ++j) {
                if (j >= 1 && top < 0) {
                    out.mark_negative_commutation();
                }
                const int a = a1 + a2 - j;
                const int b = b1 + b2 - j;
                out.add_term(a, b,
                             m12 * qbinom_signed(top, j) * qbinom(a, a1) * qbinom(b, b2));
            }
        }
    }
    return out;
}

MorClass normalize_word(const MorWord& word, int mu, int N) {
    if (std::abs(mu) > N) {
        throw std::invalid_argument("source weight outside window");
    }
    MorClass c = MorClass::identity(mu, N);
    for (const Gen& g : word) {
        c = compose(g.kind, g.r, c);
    }
    return c;
}

bool has_nonnegative_multiplicities(const MorClass& c) {
    for (const auto& [ab, m] : c.terms()) {
        if (!m.has_nonnegative_coeffs()) {
            return false;
        }
    }
    return true;
}

WeightOperator evaluate(const MorClass& c, int N) {
    if (c.N() != N) {
        throw std::invalid_argument("window of the class must equal N");
    }
    WeightOperator op;
    op.N = N;
    op.source_weight = c.mu();
    op.target_weight = c.target_weight();
    const int cols = weight_space_dim(N, c.mu());
    const int rows = std::abs(c.target_weight()) <= N
                         ? weight_space_dim(N, c.target_weight())
                         : 0;
    op.entries.assign(static_cast<size_t>(rows),
                      std::vector<LaurentPoly>(static_cast<size_t>(cols)));
    if (rows == 1 && cols == 1) {
        const int j = weight_space_index(N, c.mu());
        ModuleElement v = ModuleElement::zero(N);
        for (const auto& [ab, m] : c.terms()) {
            v += act_f_div(ab.first, act_e_div(ab.second, ModuleElement::basis(N, j)))
                     .scaled(m);
        }
        op.entries[0][0] = v.coeff(weight_space_index(N, c.target_weight()));
    }
    op.validate();
    return op;
}

WeightOperator word_matrix_oracle(const MorWord& word, int mu, int N) {
    int tau = mu;
    for (const Gen& g : word) {
        tau += g.kind == GenKind::E ? 2 * g.r : -2 * g.r;
    }
    WeightOperator op;
    op.N = N;
    op.source_weight = mu;
    op.target_weight = tau;
    const int cols = weight_space_dim(N, mu);
    const int rows = std::abs(tau) <= N ? weight_space_dim(N, tau) : 0;
    op.entries.assign(static_cast<size_t>(rows),
                      std::vector<LaurentPoly>(static_cast<size_t>(cols)));
    if (cols == 1 && rows == 1) {
        ModuleElement v = ModuleElement::basis(N, weight_space_index(N, mu));
        for (const Gen& g : word) {
            v = g.kind == GenKind::E ? act_e_div(g.r, v) : act_f_div(g.r, v);
        }
        op.entries[0][0] = v.coeff(weight_space_index(N, tau));
    }
    return op;
}

std::vector<std::pair<int, MorClass>> theta_terms(int N, int lambda) {
    if (lambda < 0) {
        throw std::invalid_argument("theta terms need lambda >= 0");
    }
    if ((N - lambda) % 2 != 0 || lambda > N) {
        throw std::invalid_argument("lambda must be a weight of V(N)");
    }
    std::vector<std::pair<int, MorClass>> out;
    for (int s = 0; 2 * s <= N - lambda; ++s) {
        MorClass c(N, lambda, -lambda);
        c.add_term(lambda + s, s, LaurentPoly::q_power(s));
        out.emplace_back(s % 2 == 0 ? 1 : -1, std::move(c));
    }
    return out;
}

WeightOperator euler_characteristic(int N, int lambda) {
    WeightOperator op;
    op.N = N;
    op.source_weight = lambda;
    op.target_weight = -lambda;
    op.entries.assign(1, std::vector<LaurentPoly>(1));
    for (const auto& [sign, cls] : theta_terms(N, lambda)) {
        const WeightOperator part = evaluate(cls, N);
        LaurentPoly e = part.entries[0][0];
        if (sign < 0) {
            e = -e;
        }
        op.entries[0][0] += e;
    }
    op.validate();
    return op;
}

bool theta_euler_check(int N) {
    for (int lambda = N % 2; lambda <= N; lambda += 2) {
        const WeightOperator lhs = euler_characteristic(N, lambda);
        const WeightOperator rhs = t_block(N, lambda);
        if (!(lhs.entries == rhs.entries)) {
            return false;
        }
    }
    return true;
}

LaurentPoly f_part_multiplicity(const MorClass& c, int a) {
    auto it = c.terms().find({a, 0});
    return it == c.terms().end() ? LaurentPoly::zero() : it->second;
}

}  // namespace catsl2

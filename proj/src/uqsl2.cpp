#include "catsl2/uqsl2.hpp"

#include <sstream>
#include <stdexcept>

namespace catsl2 {

// ---------------------------------------------------------------------------
// ModuleElement
// ---------------------------------------------------------------------------

ModuleElement::ModuleElement(int highest_weight) : n_(highest_weight) {
    if (highest_weight < 0) {
        throw std::invalid_argument("highest weight must be nonnegative");
    }
}

ModuleElement ModuleElement::basis(int highest_weight, int j) {
    ModuleElement v(highest_weight);
    if (j < 0 || j > highest_weight) {
        throw std::invalid_argument("basis index out of range");
    }
    v.coords_.emplace(j, LaurentPoly::one());
    return v;
}

LaurentPoly ModuleElement::coeff(int j) const {
    auto it = coords_.find(j);
    return it == coords_.end() ? LaurentPoly::zero() : it->second;
}

void ModuleElement::add_term(int j, const LaurentPoly& c) {
    if (j < 0 || j > n_) {
        throw std::invalid_argument("basis index out of range");
    }
    if (c.is_zero()) {
        return;
    }
    auto it = coords_.find(j);
    if (it == coords_.end()) {
        coords_.emplace(j, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) {
        coords_.erase(it);
    }
}

ModuleElement ModuleElement::operator-() const {
    ModuleElement out(n_);
    for (const auto& [j, c] : coords_) {
        out.coords_.emplace(j, -c);
    }
    return out;
}

ModuleElement& ModuleElement::operator+=(const ModuleElement& rhs) {
    if (n_ != rhs.n_) {
        throw std::invalid_argument("module mismatch");
    }
    for (const auto& [j, c] : rhs.coords_) {
        add_term(j, c);
    }
    return *this;
}

ModuleElement& ModuleElement::operator-=(const ModuleElement& rhs) {
    if (n_ != rhs.n_) {
        throw std::invalid_argument("module mismatch");
    }
    for (const auto& [j, c] : rhs.coords_) {
        add_term(j, -c);
    }
    return *this;
}

ModuleElement ModuleElement::scaled(const LaurentPoly& c) const {
    ModuleElement out(n_);
    if (c.is_zero()) {
        return out;
    }
    for (const auto& [j, coeff] : coords_) {
        out.coords_.emplace(j, coeff * c);
    }
    return out;
}

int ModuleElement::weight() const {
    if (coords_.size() != 1) {
        throw std::logic_error("weight of a zero or nonhomogeneous element");
    }
    return n_ - 2 * coords_.begin()->first;
}

std::string ModuleElement::str() const {
    if (coords_.empty()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (const auto& [j, c] : coords_) {
        if (!first) {
            os << " + ";
        }
        first = false;
        os << "(" << c.str() << ")*b" << j;
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Divided-power actions
// ---------------------------------------------------------------------------

ModuleElement act_f_div(int r, const ModuleElement& v) {
    if (r < 0) {
        throw std::invalid_argument("divided power must be nonnegative");
    }
    ModuleElement out(v.N());
    for (const auto& [j, c] : v.coords()) {
        if (j + r > v.N()) {
            continue;
        }
        out.add_term(j + r, c * qbinom(j + r, r));
    }
    return out;
}

ModuleElement act_e_div(int r, const ModuleElement& v) {
    if (r < 0) {
        throw std::invalid_argument("divided power must be nonnegative");
    }
    ModuleElement out(v.N());
    for (const auto& [j, c] : v.coords()) {
        if (j - r < 0) {
            continue;
        }
        out.add_term(j - r, c * qbinom(v.N() - j + r, r));
    }
    return out;
}

ModuleElement act_k(int sign, const ModuleElement& v) {
    if (sign != 1 && sign != -1) {
        throw std::invalid_argument("k exponent must be +1 or -1");
    }
    ModuleElement out(v.N());
    for (const auto& [j, c] : v.coords()) {
        out.add_term(j, c * LaurentPoly::q_power(sign * (v.N() - 2 * j)));
    }
    return out;
}

ModuleElement t_action(const ModuleElement& v, int lambda) {
    if (lambda < 0) {
        throw std::invalid_argument("t is defined on nonnegative weights only");
    }
    for (const auto& [j, c] : v.coords()) {
        if (v.N() - 2 * j != lambda) {
            throw std::invalid_argument("input is not homogeneous of the stated weight");
        }
    }
    ModuleElement out(v.N());
    const int s_max = (v.N() - lambda) / 2;
    for (int s = 0; s <= s_max; ++s) {
        ModuleElement term = act_f_div(lambda + s, act_e_div(s, v));
        LaurentPoly c = LaurentPoly::q_power(s);
        if (s % 2 == 1) {
            c = -c;
        }
        out += term.scaled(c);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Weight-space matrices
// ---------------------------------------------------------------------------

void WeightOperator::validate() const {
    const size_t rows = static_cast<size_t>(weight_space_dim(N, target_weight));
    const size_t cols = static_cast<size_t>(weight_space_dim(N, source_weight));
    if (entries.size() != rows) {
        throw std::logic_error("weight operator row count mismatch");
    }
    for (const auto& row : entries) {
        if (row.size() != cols) {
            throw std::logic_error("weight operator column count mismatch");
        }
    }
}

int weight_space_dim(int N, int lambda) {
    if (lambda > N || lambda < -N) {
        return 0;
    }
    return (N - lambda) % 2 == 0 ? 1 : 0;
}

int weight_space_index(int N, int lambda) {
    if (weight_space_dim(N, lambda) == 0) {
        throw std::invalid_argument("empty weight space");
    }
    return (N - lambda) / 2;
}

WeightOperator t_block(int N, int lambda) {
    if (lambda < 0) {
        throw std::invalid_argument("t blocks start at nonnegative weights");
    }
    WeightOperator op;
    op.N = N;
    op.source_weight = lambda;
    op.target_weight = -lambda;
    if (weight_space_dim(N, lambda) == 0) {
        op.validate();
        return op;
    }
    const int j = weight_space_index(N, lambda);
    const ModuleElement image = t_action(ModuleElement::basis(N, j), lambda);
    op.entries = {{image.coeff(weight_space_index(N, -lambda))}};
    op.validate();
    return op;
}

std::vector<ModuleElement> t_matrix_columns(int N) {
    std::vector<ModuleElement> cols;
    for (int j = 0; 2 * j <= N; ++j) {
        cols.push_back(t_action(ModuleElement::basis(N, j), N - 2 * j));
    }
    return cols;
}

HighestWeightImage highest_weight_image(int N, int p) {
    if (p < 0 || N - 2 * p < 0) {
        throw std::invalid_argument("need 0 <= p <= N/2");
    }
    const int lambda = N - 2 * p;
    const ModuleElement image =
        t_action(act_f_div(p, ModuleElement::basis(N, 0)), lambda);
    if (image.coords().size() != 1 || image.coords().begin()->first != N - p) {
        throw std::logic_error("highest-weight image is not a multiple of b_{N-p}");
    }
    const LaurentPoly& c = image.coords().begin()->second;
    if (!c.is_signed_q_power()) {
        throw std::logic_error("highest-weight image coefficient is not a signed q power");
    }
    const int m = c.min_exp();
    return {c.coeff(m) > 0 ? 1 : -1, m};
}

// ---------------------------------------------------------------------------
// Property checks
// ---------------------------------------------------------------------------

bool serre_relation_check(int N) {
    for (int j = 0; j <= N; ++j) {
        const ModuleElement b = ModuleElement::basis(N, j);
        const ModuleElement lhs =
            act_e_div(1, act_f_div(1, b)) - act_f_div(1, act_e_div(1, b));
        const ModuleElement rhs = b.scaled(qint_signed(N - 2 * j));
        if (!(lhs == rhs)) {
            return false;
        }
    }
    return true;
}

bool t_intertwiner_check(int N) {
    for (int j = 0; j <= N; ++j) {
        const int mu = N - 2 * j;
        if (mu < 2) {
            continue;
        }
        const ModuleElement b = ModuleElement::basis(N, j);
        const ModuleElement lhs = t_action(act_f_div(1, b), mu - 2);
        ModuleElement rhs = act_k(-1, act_e_div(1, t_action(b, mu)));
        rhs = rhs.scaled(-LaurentPoly::q_power(2));
        if (!(lhs == rhs)) {
            return false;
        }
    }
    return true;
}

bool t_block_determinant_check(int N) {
    for (int lambda = N % 2; lambda <= N; lambda += 2) {
        const WeightOperator op = t_block(N, lambda);
        if (op.entries.empty()) {
            continue;
        }
        // Blocks are 1x1; the determinant is the single entry.
        if (!op.entries[0][0].is_signed_q_power()) {
            return false;
        }
    }
    return true;
}

bool t_weight_negation_check(int N) {
    for (int j = 0; 2 * j <= N; ++j) {
        const int lambda = N - 2 * j;
        const ModuleElement image = t_action(ModuleElement::basis(N, j), lambda);
        if (image.is_zero() || !image.is_homogeneous() || image.weight() != -lambda) {
            return false;
        }
    }
    return true;
}

bool lusztig_commutation_check(int N, int max_a, int max_b) {
    for (int a = 0; a <= max_a; ++a) {
        for (int b = 0; b <= max_b; ++b) {
            for (int j = 0; j <= N; ++j) {
                const ModuleElement v = ModuleElement::basis(N, j);
                const int lambda = N - 2 * j;
                const ModuleElement lhs = act_e_div(b, act_f_div(a, v));
                ModuleElement rhs(N);
                for (int i = 0; i <= std::min(a, b); ++i) {
                    const ModuleElement term =
                        act_f_div(a - i, act_e_div(b - i, v));
                    rhs += term.scaled(qbinom_signed(lambda - a + b, i));
                }
                if (!(lhs == rhs)) {
                    return false;
                }
            }
        }
    }
    return true;
}

bool lowest_from_highest_check(int N, int mu, int p) {
    if (mu < 0) {
        throw std::invalid_argument("mu must be nonnegative");
    }
    for (int j = 0; j <= N; ++j) {
        const ModuleElement b = ModuleElement::basis(N, j);
        if (act_e_div(1, b).is_zero() && N - 2 * j == mu) {
            const ModuleElement low = act_f_div(mu, b);
            for (int r = 1; r <= p; ++r) {
                if (!act_f_div(r, low).is_zero()) {
                    return false;
                }
            }
        }
        if (act_f_div(1, b).is_zero() && N - 2 * j == -mu) {
            const ModuleElement high = act_e_div(mu, b);
            for (int r = 1; r <= p; ++r) {
                if (!act_e_div(r, high).is_zero()) {
                    return false;
                }
            }
        }
    }
    return true;
}

}  // namespace catsl2

#include "catsl2/nilhecke.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace catsl2 {

namespace {

void check_var_index(int nvars, int i) {
    if (i < 1 || i > nvars) {
        throw std::invalid_argument("variable index out of range");
    }
}

void check_demazure_index(int nvars, int i) {
    if (i < 1 || i + 1 > nvars) {
        throw std::invalid_argument("Demazure index out of range");
    }
}

void check_same_nvars(const MultiPoly& a, const MultiPoly& b) {
    if (a.nvars() != b.nvars()) {
        throw std::invalid_argument("variable count mismatch");
    }
}

}  // namespace

// ---------------------------------------------------------------------------
// MultiPoly
// ---------------------------------------------------------------------------

MultiPoly MultiPoly::variable(int nvars, int i) {
    check_var_index(nvars, i);
    std::vector<int> exps(nvars, 0);
    exps[i - 1] = 1;
    return monomial(std::move(exps), 1);
}

MultiPoly MultiPoly::monomial(std::vector<int> exps, Int coeff) {
    MultiPoly p(static_cast<int>(exps.size()));
    if (coeff != 0) {
        p.terms_.emplace(std::move(exps), std::move(coeff));
    }
    return p;
}

void MultiPoly::add_term(const std::vector<int>& exps, const Int& c) {
    if (c == 0) {
        return;
    }
    auto it = terms_.find(exps);
    if (it == terms_.end()) {
        terms_.emplace(exps, c);
        return;
    }
    it->second += c;
    if (it->second == 0) {
        terms_.erase(it);
    }
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly out(nvars_);
    for (const auto& [e, c] : terms_) {
        out.terms_.emplace(e, -c);
    }
    return out;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& rhs) {
    check_same_nvars(*this, rhs);
    for (const auto& [e, c] : rhs.terms_) {
        add_term(e, c);
    }
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& rhs) {
    check_same_nvars(*this, rhs);
    for (const auto& [e, c] : rhs.terms_) {
        add_term(e, -c);
    }
    return *this;
}

MultiPoly operator*(const MultiPoly& lhs, const MultiPoly& rhs) {
    check_same_nvars(lhs, rhs);
    MultiPoly out(lhs.nvars_);
    std::vector<int> e(static_cast<size_t>(lhs.nvars_));
    for (const auto& [ea, ca] : lhs.terms_) {
        for (const auto& [eb, cb] : rhs.terms_) {
            for (size_t k = 0; k < e.size(); ++k) {
                e[k] = ea[k] + eb[k];
            }
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

MultiPoly MultiPoly::swap_adjacent(int i) const {
    check_demazure_index(nvars_, i);
    MultiPoly out(nvars_);
    for (const auto& [e, c] : terms_) {
        std::vector<int> se = e;
        std::swap(se[i - 1], se[i]);
        out.terms_.emplace(std::move(se), c);
    }
    return out;
}

int MultiPoly::total_degree() const {
    int deg = -1;
    for (const auto& [e, c] : terms_) {
        deg = std::max(deg, std::accumulate(e.begin(), e.end(), 0));
    }
    return deg;
}

bool MultiPoly::is_homogeneous() const {
    int deg = -1;
    for (const auto& [e, c] : terms_) {
        int d = std::accumulate(e.begin(), e.end(), 0);
        if (deg == -1) {
            deg = d;
        } else if (d != deg) {
            return false;
        }
    }
    return true;
}

std::string MultiPoly::str() const {
    if (terms_.empty()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& e = it->first;
        Int a = it->second;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) {
                a = -a;
            }
        }
        first = false;
        bool any_var = std::any_of(e.begin(), e.end(), [](int k) { return k != 0; });
        if (a != 1 || !any_var) {
            os << a;
        }
        bool lead = (a == 1);
        for (size_t k = 0; k < e.size(); ++k) {
            if (e[k] == 0) {
                continue;
            }
            if (!lead) {
                os << "*";
            }
            lead = false;
            os << "x" << (k + 1);
            if (e[k] != 1) {
                os << "^" << e[k];
            }
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Demazure operator
// ---------------------------------------------------------------------------

MultiPoly demazure(int i, const MultiPoly& f) {
    check_demazure_index(f.nvars(), i);
    MultiPoly out(f.nvars());
    std::vector<int> e;
    for (const auto& [exps, c] : f.terms()) {
        const int a = exps[i - 1];
        const int b = exps[i];
        if (a == b) {
            continue;
        }
        e = exps;
        if (a > b) {
            // (x_i^a x_{i+1}^b - x_i^b x_{i+1}^a)/(x_i - x_{i+1})
            //   = x_i^b x_{i+1}^b * sum_{u+v=a-b-1} x_i^u x_{i+1}^v
            for (int u = 0; u <= a - b - 1; ++u) {
                e[i - 1] = b + u;
                e[i] = a - 1 - u;
                out.add_term(e, c);
            }
        } else {
            for (int u = 0; u <= b - a - 1; ++u) {
                e[i - 1] = a + u;
                e[i] = b - 1 - u;
                out.add_term(e, -c);
            }
        }
    }
    return out;
}

MultiPoly demazure_by_division(int i, const MultiPoly& f) {
    check_demazure_index(f.nvars(), i);
    const int n = f.nvars();
    MultiPoly g = f - f.swap_adjacent(i);
    MultiPoly divisor = MultiPoly::variable(n, i) - MultiPoly::variable(n, i + 1);
    MultiPoly q(n);
    // Monomial order: exponent of x_i first, full lex as tiebreak. The
    // divisor's leading monomial is x_i, so standard division applies.
    auto less = [i](const std::vector<int>& a, const std::vector<int>& b) {
        if (a[i - 1] != b[i - 1]) {
            return a[i - 1] < b[i - 1];
        }
        return a < b;
    };
    while (!g.is_zero()) {
        auto lead = g.terms().begin();
        for (auto it = std::next(g.terms().begin()); it != g.terms().end(); ++it) {
            if (less(lead->first, it->first)) {
                lead = it;
            }
        }
        if (lead->first[i - 1] == 0) {
            throw std::logic_error("Demazure division has nonzero remainder");
        }
        std::vector<int> e = lead->first;
        e[i - 1] -= 1;
        MultiPoly qt = MultiPoly::monomial(std::move(e), lead->second);
        q += qt;
        g -= qt * divisor;
    }
    return q;
}

// ---------------------------------------------------------------------------
// Operator words
// ---------------------------------------------------------------------------

MultiPoly apply_gen(const NhGen& g, const MultiPoly& f) {
    if (g.kind == NhGen::Kind::X) {
        return MultiPoly::variable(f.nvars(), g.index) * f;
    }
    return demazure(g.index, f);
}

MultiPoly apply_word(const NhWord& w, const MultiPoly& f) {
    MultiPoly out = f;
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        out = apply_gen(*it, out);
    }
    return out;
}

MultiPoly apply_op(const NhOpExpr& op, const MultiPoly& f) {
    MultiPoly out(f.nvars());
    for (const auto& [c, w] : op.terms) {
        MultiPoly part = apply_word(w, f);
        for (const auto& [e, pc] : part.terms()) {
            out += MultiPoly::monomial(e, pc * c);
        }
    }
    return out;
}

bool ops_equal(const NhOpExpr& a, const NhOpExpr& b, int nvars, int max_deg) {
    for (const MultiPoly& m : spanning_monomials(nvars, max_deg)) {
        if (!(apply_op(a, m) == apply_op(b, m))) {
            return false;
        }
    }
    return true;
}

std::vector<MultiPoly> spanning_monomials(int nvars, int max_deg) {
    std::vector<MultiPoly> out;
    std::vector<int> exps(static_cast<size_t>(nvars), 0);
    auto rec = [&](auto&& self, int pos, int remaining) -> void {
        if (pos == nvars) {
            out.push_back(MultiPoly::monomial(exps, 1));
            return;
        }
        for (int d = 0; d <= remaining; ++d) {
            exps[static_cast<size_t>(pos)] = d;
            self(self, pos + 1, remaining - d);
        }
        exps[static_cast<size_t>(pos)] = 0;
    };
    rec(rec, 0, max_deg);
    return out;
}

// ---------------------------------------------------------------------------
// Permutations and t_w
// ---------------------------------------------------------------------------

Perm identity_perm(int n) {
    Perm w(static_cast<size_t>(n));
    std::iota(w.begin(), w.end(), 0);
    return w;
}

Perm longest_perm(int n) {
    Perm w(static_cast<size_t>(n));
    for (int k = 0; k < n; ++k) {
        w[static_cast<size_t>(k)] = n - 1 - k;
    }
    return w;
}

int perm_length(const Perm& w) {
    int len = 0;
    for (size_t i = 0; i < w.size(); ++i) {
        for (size_t j = i + 1; j < w.size(); ++j) {
            if (w[i] > w[j]) {
                ++len;
            }
        }
    }
    return len;
}

bool has_left_descent(const Perm& w, int i) {
    // Letter i is a left descent iff value i-1 appears after value i.
    size_t pos_lo = 0;
    size_t pos_hi = 0;
    for (size_t k = 0; k < w.size(); ++k) {
        if (w[k] == i - 1) {
            pos_lo = k;
        } else if (w[k] == i) {
            pos_hi = k;
        }
    }
    return pos_lo > pos_hi;
}

Perm left_mul_s(int i, const Perm& w) {
    Perm out = w;
    for (auto& v : out) {
        if (v == i - 1) {
            v = i;
        } else if (v == i) {
            v = i - 1;
        }
    }
    return out;
}

std::vector<int> lex_least_reduced_word(Perm w) {
    const int n = static_cast<int>(w.size());
    std::vector<int> word;
    int len = perm_length(w);
    while (len > 0) {
        for (int i = 1; i < n; ++i) {
            if (has_left_descent(w, i)) {
                word.push_back(i);
                w = left_mul_s(i, w);
                --len;
                break;
            }
        }
    }
    return word;
}

std::vector<std::vector<int>> all_reduced_words(const Perm& w) {
    std::map<Perm, std::vector<std::vector<int>>> memo;
    auto rec = [&](auto&& self, const Perm& u) -> const std::vector<std::vector<int>>& {
        auto it = memo.find(u);
        if (it != memo.end()) {
            return it->second;
        }
        std::vector<std::vector<int>> words;
        if (perm_length(u) == 0) {
            words.push_back({});
        } else {
            const int n = static_cast<int>(u.size());
            for (int i = 1; i < n; ++i) {
                if (!has_left_descent(u, i)) {
                    continue;
                }
                for (const auto& tail : self(self, left_mul_s(i, u))) {
                    std::vector<int> word;
                    word.reserve(tail.size() + 1);
                    word.push_back(i);
                    word.insert(word.end(), tail.begin(), tail.end());
                    words.push_back(std::move(word));
                }
            }
        }
        return memo.emplace(u, std::move(words)).first->second;
    };
    return rec(rec, w);
}

MultiPoly apply_t_word(const std::vector<int>& letters, const MultiPoly& f) {
    MultiPoly out = f;
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
        out = demazure(*it, out);
    }
    return out;
}

MultiPoly t_w(const Perm& w, const MultiPoly& f) {
    return apply_t_word(lex_least_reduced_word(w), f);
}

MultiPoly staircase_monomial(int n) {
    std::vector<int> exps(static_cast<size_t>(n), 0);
    for (int k = 0; k < n - 1; ++k) {
        exps[static_cast<size_t>(k)] = n - 1 - k;
    }
    return MultiPoly::monomial(std::move(exps), 1);
}

// ---------------------------------------------------------------------------
// Structural checks
// ---------------------------------------------------------------------------

int staircase_idempotent_check(int n, int max_deg) {
    if (n < 1) {
        throw std::invalid_argument("staircase check needs n >= 1");
    }
    const Perm w0 = longest_perm(n);
    const std::vector<int> word = lex_least_reduced_word(w0);
    const MultiPoly delta = staircase_monomial(n);
    // Degree l(w0) inputs are needed for t_{w0} to be visibly nonzero.
    const int span = std::max(max_deg, perm_length(w0) + 2);

    int sign = 0;
    bool saw_nonzero = false;
    for (const MultiPoly& m : spanning_monomials(n, span)) {
        MultiPoly inner = apply_t_word(word, m);
        MultiPoly lhs = apply_t_word(word, delta * inner);
        if (inner.is_zero()) {
            if (!lhs.is_zero()) {
                throw std::logic_error("staircase check: lhs nonzero where t_{w0} vanishes");
            }
            continue;
        }
        saw_nonzero = true;
        if (lhs == inner) {
            if (sign == -1) {
                throw std::logic_error("staircase check: inconsistent sign");
            }
            sign = 1;
        } else if (lhs == -inner) {
            if (sign == 1) {
                throw std::logic_error("staircase check: inconsistent sign");
            }
            sign = -1;
        } else {
            throw std::logic_error("staircase check: lhs is not a sign multiple");
        }
    }
    if (!saw_nonzero || sign == 0) {
        throw std::logic_error("staircase check: t_{w0} vanished on the whole span");
    }
    return sign;
}

bool telescoping_identity_check(int i, int a, int n, int max_deg) {
    check_demazure_index(n, i);
    if (a < 1) {
        throw std::invalid_argument("telescoping check needs a >= 1");
    }
    NhWord lhs_word(static_cast<size_t>(a), NhGen::X(i + 1));
    lhs_word.push_back(NhGen::T(i));
    NhOpExpr lhs = NhOpExpr::word(std::move(lhs_word));

    NhOpExpr rhs;
    NhWord first{NhGen::T(i)};
    first.insert(first.end(), static_cast<size_t>(a), NhGen::X(i));
    rhs.terms.emplace_back(Int(1), std::move(first));
    for (int j = 0; j <= a - 1; ++j) {
        NhWord w(static_cast<size_t>(j), NhGen::X(i));
        w.insert(w.end(), static_cast<size_t>(a - 1 - j), NhGen::X(i + 1));
        rhs.terms.emplace_back(Int(-1), std::move(w));
    }
    return ops_equal(lhs, rhs, n, max_deg);
}

bool relations_check(int n, int max_deg) {
    auto word2 = [](NhGen g, NhGen h) { return NhOpExpr::word({g, h}); };

    // x_i x_j = x_j x_i
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            if (!ops_equal(word2(NhGen::X(i), NhGen::X(j)),
                           word2(NhGen::X(j), NhGen::X(i)), n, max_deg)) {
                return false;
            }
        }
    }
    for (int i = 1; i < n; ++i) {
        // x_i t_i = t_i x_{i+1} + 1
        NhOpExpr rhs = word2(NhGen::T(i), NhGen::X(i + 1));
        rhs.terms.emplace_back(Int(1), NhWord{});
        if (!ops_equal(word2(NhGen::X(i), NhGen::T(i)), rhs, n, max_deg)) {
            return false;
        }
        // x_{i+1} t_i = t_i x_i - 1
        NhOpExpr rhs2 = word2(NhGen::T(i), NhGen::X(i));
        rhs2.terms.emplace_back(Int(-1), NhWord{});
        if (!ops_equal(word2(NhGen::X(i + 1), NhGen::T(i)), rhs2, n, max_deg)) {
            return false;
        }
        // t_i x_j = x_j t_i for j outside {i, i+1}
        for (int j = 1; j <= n; ++j) {
            if (j == i || j == i + 1) {
                continue;
            }
            if (!ops_equal(word2(NhGen::T(i), NhGen::X(j)),
                           word2(NhGen::X(j), NhGen::T(i)), n, max_deg)) {
                return false;
            }
        }
        // t_i^2 = 0
        if (!ops_equal(word2(NhGen::T(i), NhGen::T(i)), NhOpExpr{}, n, max_deg)) {
            return false;
        }
    }
    // t_i t_{i+1} t_i = t_{i+1} t_i t_{i+1}
    for (int i = 1; i + 1 < n; ++i) {
        NhOpExpr lhs = NhOpExpr::word({NhGen::T(i), NhGen::T(i + 1), NhGen::T(i)});
        NhOpExpr rhs = NhOpExpr::word({NhGen::T(i + 1), NhGen::T(i), NhGen::T(i + 1)});
        if (!ops_equal(lhs, rhs, n, max_deg)) {
            return false;
        }
    }
    // t_i t_j = t_j t_i for |i - j| >= 2
    for (int i = 1; i < n; ++i) {
        for (int j = i + 2; j < n; ++j) {
            if (!ops_equal(word2(NhGen::T(i), NhGen::T(j)),
                           word2(NhGen::T(j), NhGen::T(i)), n, max_deg)) {
                return false;
            }
        }
    }
    return true;
}

namespace {

std::vector<Perm> all_perms(int n) {
    Perm w = identity_perm(n);
    std::vector<Perm> out;
    do {
        out.push_back(w);
    } while (std::next_permutation(w.begin(), w.end()));
    return out;
}

}  // namespace

bool reduced_word_independence_check(int n, int max_deg) {
    const std::vector<MultiPoly> span = spanning_monomials(n, max_deg);
    for (const Perm& w : all_perms(n)) {
        const auto words = all_reduced_words(w);
        if (words.empty()) {
            return false;
        }
        const int len = perm_length(w);
        for (const auto& word : words) {
            if (static_cast<int>(word.size()) != len) {
                return false;
            }
        }
        for (const MultiPoly& m : span) {
            const MultiPoly ref = apply_t_word(words.front(), m);
            for (size_t k = 1; k < words.size(); ++k) {
                if (!(apply_t_word(words[k], m) == ref)) {
                    return false;
                }
            }
        }
    }
    return true;
}

bool symmetric_lemmas_check(int n, int sym_deg, int max_deg) {
    const std::vector<int> w0_word = lex_least_reduced_word(longest_perm(n));
    const std::vector<MultiPoly> span = spanning_monomials(n, max_deg);
    std::vector<MultiPoly> t_w0_of_span;
    t_w0_of_span.reserve(span.size());
    for (const MultiPoly& g : span) {
        t_w0_of_span.push_back(apply_t_word(w0_word, g));
    }
    for (int i = 1; i < n; ++i) {
        for (const MultiPoly& m : spanning_monomials(n, sym_deg)) {
            const MultiPoly f = m + m.swap_adjacent(i);
            for (size_t k = 0; k < span.size(); ++k) {
                const MultiPoly& g = span[k];
                // t_i (f g) = f t_i(g)
                if (!(demazure(i, f * g) == f * demazure(i, g))) {
                    return false;
                }
                // t_i (f t_i(g)) = 0
                if (!demazure(i, f * demazure(i, g)).is_zero()) {
                    return false;
                }
                // t_{w0} (f t_{w0}(g)) = 0
                if (!apply_t_word(w0_word, f * t_w0_of_span[k]).is_zero()) {
                    return false;
                }
            }
        }
    }
    return true;
}

bool degree_lowering_check(int n, int max_deg) {
    const std::vector<int> w0_word = lex_least_reduced_word(longest_perm(n));
    const int len = static_cast<int>(w0_word.size());
    bool saw_nonzero = false;
    for (const MultiPoly& m : spanning_monomials(n, max_deg)) {
        const int d = m.total_degree();
        const MultiPoly out = apply_t_word(w0_word, m);
        if (d < len) {
            if (!out.is_zero()) {
                return false;
            }
            continue;
        }
        if (out.is_zero()) {
            continue;
        }
        saw_nonzero = true;
        if (!out.is_homogeneous() || out.total_degree() != d - len) {
            return false;
        }
    }
    return max_deg < len || saw_nonzero;
}

}  // namespace catsl2

#include "catsl2/homalg.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace catsl2 {

// ---------------------------------------------------------------------------
// RatMat
// ---------------------------------------------------------------------------

RatMat RatMat::identity(int n) {
    RatMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

bool RatMat::is_zero() const {
    for (const Rat& x : a_) {
        if (x != 0) return false;
    }
    return true;
}

RatMat operator*(const RatMat& lhs, const RatMat& rhs) {
    if (lhs.cols_ != rhs.rows_) throw std::logic_error("RatMat: shape mismatch in product");
    RatMat out(lhs.rows_, rhs.cols_);
    for (int r = 0; r < lhs.rows_; ++r) {
        for (int k = 0; k < lhs.cols_; ++k) {
            const Rat& x = lhs.at(r, k);
            if (x == 0) continue;
            for (int c = 0; c < rhs.cols_; ++c) {
                if (rhs.at(k, c) == 0) continue;
                out.at(r, c) += x * rhs.at(k, c);
            }
        }
    }
    return out;
}

RatMat::Rref RatMat::rref() const {
    Rref out{*this, {}};
    RatMat& m = out.mat;
    int r = 0;
    for (int c = 0; c < cols_ && r < rows_; ++c) {
        int pivot = -1;
        for (int i = r; i < rows_; ++i) {
            if (m.at(i, c) != 0) {
                pivot = i;
                break;
            }
        }
        if (pivot < 0) continue;
        if (pivot != r) {
            for (int j = 0; j < cols_; ++j) std::swap(m.at(pivot, j), m.at(r, j));
        }
        const Rat inv = Rat(1) / m.at(r, c);
        for (int j = 0; j < cols_; ++j) m.at(r, j) *= inv;
        for (int i = 0; i < rows_; ++i) {
            if (i == r || m.at(i, c) == 0) continue;
            const Rat f = m.at(i, c);
            for (int j = 0; j < cols_; ++j) m.at(i, j) -= f * m.at(r, j);
        }
        out.pivot_cols.push_back(c);
        ++r;
    }
    return out;
}

int RatMat::rank() const { return static_cast<int>(rref().pivot_cols.size()); }

std::vector<std::vector<Rat>> RatMat::kernel_basis() const {
    const Rref rr = rref();
    std::vector<bool> is_pivot(cols_, false);
    for (int c : rr.pivot_cols) is_pivot[c] = true;
    std::vector<std::vector<Rat>> basis;
    for (int j = 0; j < cols_; ++j) {
        if (is_pivot[j]) continue;
        std::vector<Rat> v(cols_, Rat(0));
        v[j] = 1;
        for (size_t i = 0; i < rr.pivot_cols.size(); ++i) {
            v[rr.pivot_cols[i]] = -rr.mat.at(static_cast<int>(i), j);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

RatMat RatMat::inverse() const {
    if (rows_ != cols_) throw std::logic_error("RatMat: inverse of nonsquare matrix");
    RatMat m = *this;
    RatMat inv = identity(rows_);
    for (int c = 0; c < cols_; ++c) {
        int pivot = -1;
        for (int i = c; i < rows_; ++i) {
            if (m.at(i, c) != 0) {
                pivot = i;
                break;
            }
        }
        if (pivot < 0) throw std::logic_error("RatMat: inverse of singular matrix");
        if (pivot != c) {
            for (int j = 0; j < cols_; ++j) {
                std::swap(m.at(pivot, j), m.at(c, j));
                std::swap(inv.at(pivot, j), inv.at(c, j));
            }
        }
        const Rat scale = Rat(1) / m.at(c, c);
        for (int j = 0; j < cols_; ++j) {
            m.at(c, j) *= scale;
            inv.at(c, j) *= scale;
        }
        for (int i = 0; i < rows_; ++i) {
            if (i == c || m.at(i, c) == 0) continue;
            const Rat f = m.at(i, c);
            for (int j = 0; j < cols_; ++j) {
                m.at(i, j) -= f * m.at(c, j);
                inv.at(i, j) -= f * inv.at(c, j);
            }
        }
    }
    return inv;
}

// ---------------------------------------------------------------------------
// GradedVS / GradedComplex
// ---------------------------------------------------------------------------

int GradedVS::dim(int degree) const {
    auto it = dims.find(degree);
    return it == dims.end() ? 0 : it->second;
}

int GradedVS::total_dim() const {
    int out = 0;
    for (const auto& [deg, d] : dims) out += d;
    return out;
}

LaurentPoly GradedVS::graded_dimension() const {
    LaurentPoly out = LaurentPoly::zero();
    for (const auto& [deg, d] : dims) {
        out = out + LaurentPoly::q_power(deg).scaled(Int(d));
    }
    return out;
}

void GradedVS::validate() const {
    for (const auto& [deg, d] : dims) {
        if (d <= 0) throw std::logic_error("GradedVS: nonpositive dimension entry");
    }
    for (const auto& [deg, names] : labels) {
        if (static_cast<int>(names.size()) != dim(deg)) {
            throw std::logic_error("GradedVS: label count does not match dimension");
        }
    }
}

GradedComplex::GradedComplex(std::vector<GradedVS> objects) : objects_(std::move(objects)) {
    if (objects_.empty()) throw std::invalid_argument("GradedComplex: no objects");
    diffs_.resize(objects_.size() - 1);
}

const GradedVS& GradedComplex::object(int position) const {
    if (position < 0 || position >= static_cast<int>(objects_.size())) {
        throw std::out_of_range("GradedComplex: position out of range");
    }
    return objects_[static_cast<size_t>(position)];
}

RatMat GradedComplex::diff_block(int position, int degree) const {
    const int rows = object(position - 1).dim(degree);
    const int cols = object(position).dim(degree);
    const auto& blocks = diffs_[static_cast<size_t>(position - 1)];
    auto it = blocks.find(degree);
    if (it == blocks.end()) return RatMat(rows, cols);
    return it->second;
}

void GradedComplex::set_diff_block(int position, int degree, RatMat block) {
    if (position < 1 || position > length()) {
        throw std::out_of_range("GradedComplex: differential position out of range");
    }
    if (block.rows() != object(position - 1).dim(degree) ||
        block.cols() != object(position).dim(degree)) {
        throw std::logic_error("GradedComplex: differential block shape mismatch");
    }
    diffs_[static_cast<size_t>(position - 1)][degree] = std::move(block);
}

void GradedComplex::validate() const {
    for (const auto& obj : objects_) obj.validate();
    for (int k = 1; k <= length(); ++k) {
        for (const auto& [deg, block] : diffs_[static_cast<size_t>(k - 1)]) {
            if (block.rows() != object(k - 1).dim(deg) || block.cols() != object(k).dim(deg)) {
                throw std::logic_error("GradedComplex: differential block shape mismatch");
            }
        }
    }
    for (int k = 2; k <= length(); ++k) {
        for (const auto& [deg, d] : object(k).dims) {
            if (!(diff_block(k - 1, deg) * diff_block(k, deg)).is_zero()) {
                throw std::logic_error("GradedComplex: d.d != 0");
            }
        }
    }
}

GradedVS GradedComplex::homology(int position) const {
    GradedVS h;
    for (const auto& [deg, d] : object(position).dims) {
        int rank_out = 0;
        int rank_in = 0;
        if (position >= 1) rank_out = diff_block(position, deg).rank();
        if (position + 1 <= length()) rank_in = diff_block(position + 1, deg).rank();
        const int hd = d - rank_out - rank_in;
        if (hd < 0) throw std::logic_error("GradedComplex: negative homology dimension");
        if (hd > 0) h.dims[deg] = hd;
    }
    return h;
}

bool GradedComplex::is_exact() const {
    for (int pos = 0; pos <= length(); ++pos) {
        if (!homology(pos).is_zero()) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Koszul builders
// ---------------------------------------------------------------------------

namespace {

// Nondecreasing sequences over 0..maxval of the given size, lex order.
std::vector<std::vector<int>> multisets_upto(int maxval, int size) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int lo) -> void {
        if (static_cast<int>(cur.size()) == size) {
            out.push_back(cur);
            return;
        }
        for (int v = lo; v <= maxval; ++v) {
            cur.push_back(v);
            self(self, v);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

// Strictly increasing sequences over 0..maxval of the given size, lex order.
std::vector<std::vector<int>> subsets_upto(int maxval, int size) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int lo) -> void {
        if (static_cast<int>(cur.size()) == size) {
            out.push_back(cur);
            return;
        }
        for (int v = lo; v <= maxval; ++v) {
            cur.push_back(v);
            self(self, v + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

struct KoszulBasisElem {
    std::vector<int> sym;
    std::vector<int> wedge;
    int degree = 0;
};

struct KoszulPosition {
    std::vector<KoszulBasisElem> elems;
    // (sym, wedge) -> (degree, index within the degree block)
    std::map<std::pair<std::vector<int>, std::vector<int>>, std::pair<int, int>> index;
    GradedVS object;
};

// Shared builder. In the modified variant the wedge ranges over generators
// below skip_gen and every element carries an implicit trailing wedge factor
// e_{skip_gen}; moving e_{skip_gen} out of the Sym part is then forbidden.
GradedComplex build_koszul_impl(const std::vector<int>& degrees, int l, bool modified) {
    const int dim_m = static_cast<int>(degrees.size());
    if (l < 0) throw std::invalid_argument("build_koszul: negative homological length");
    if (!modified && l > dim_m) {
        throw std::invalid_argument("build_koszul: length exceeds the space dimension");
    }
    const int skip_gen = modified ? dim_m - 1 : -1;
    const int wedge_max = modified ? dim_m - 2 : dim_m - 1;
    const int extra_degree = modified ? degrees[static_cast<size_t>(skip_gen)] : 0;
    const int top = modified ? l - 1 : l;

    std::vector<KoszulPosition> positions(static_cast<size_t>(top) + 1);
    for (int s = 0; s <= top; ++s) {
        KoszulPosition& pos = positions[static_cast<size_t>(s)];
        const int wedge_size = modified ? (l - 1 - s) : (l - s);
        for (const auto& sym : multisets_upto(dim_m - 1, s)) {
            for (const auto& wedge : subsets_upto(wedge_max, wedge_size)) {
                int deg = extra_degree;
                for (int v : sym) deg += degrees[static_cast<size_t>(v)];
                for (int v : wedge) deg += degrees[static_cast<size_t>(v)];
                const int idx = pos.object.dim(deg);
                pos.object.dims[deg] = idx + 1;
                pos.object.labels[deg].push_back(koszul_label(sym, wedge));
                pos.index[{sym, wedge}] = {deg, idx};
                pos.elems.push_back({sym, wedge, deg});
            }
        }
    }

    std::vector<GradedVS> objects;
    objects.reserve(positions.size());
    for (const auto& pos : positions) objects.push_back(pos.object);
    GradedComplex complex(std::move(objects));

    for (int s = 1; s <= top; ++s) {
        const KoszulPosition& src = positions[static_cast<size_t>(s)];
        const KoszulPosition& tgt = positions[static_cast<size_t>(s - 1)];
        std::map<int, RatMat> blocks;
        for (size_t src_idx = 0; src_idx < src.elems.size(); ++src_idx) {
            const KoszulBasisElem& e = src.elems[src_idx];
            const auto [deg, col] = src.index.at({e.sym, e.wedge});
            for (size_t k = 0; k < e.sym.size(); ++k) {
                const int val = e.sym[static_cast<size_t>(k)];
                if (val == skip_gen) continue;
                if (std::find(e.wedge.begin(), e.wedge.end(), val) != e.wedge.end()) continue;
                std::vector<int> sym2 = e.sym;
                sym2.erase(sym2.begin() + static_cast<std::ptrdiff_t>(k));
                std::vector<int> wedge2 = e.wedge;
                const auto ins = std::lower_bound(wedge2.begin(), wedge2.end(), val);
                const int crossings = static_cast<int>(wedge2.end() - ins);
                wedge2.insert(ins, val);
                // Sign counts wedge factors the new one moves past from the
                // right; inserting in sorted position crosses the larger ones.
                const int sign = (crossings % 2 == 0) ? 1 : -1;
                const auto [tdeg, row] = tgt.index.at({sym2, wedge2});
                if (tdeg != deg) throw std::logic_error("build_koszul: degree drift");
                auto it = blocks.find(deg);
                if (it == blocks.end()) {
                    it = blocks.emplace(deg, RatMat(tgt.object.dim(deg), src.object.dim(deg))).first;
                }
                it->second.at(row, col) += sign;
            }
        }
        for (auto& [deg, block] : blocks) complex.set_diff_block(s, deg, std::move(block));
    }
    return complex;
}

}  // namespace

std::string koszul_label(const std::vector<int>& sym, const std::vector<int>& wedge) {
    std::ostringstream os;
    os << "s{";
    for (size_t i = 0; i < sym.size(); ++i) os << (i ? " " : "") << sym[i];
    os << "}|w{";
    for (size_t i = 0; i < wedge.size(); ++i) os << (i ? " " : "") << wedge[i];
    os << "}";
    return os.str();
}

GradedComplex build_koszul(const std::vector<int>& degrees, int l) {
    return build_koszul_impl(degrees, l, false);
}

GradedComplex build_modified_koszul(int lambda, int p) {
    if (lambda < 0 || p < 0) {
        throw std::invalid_argument("build_modified_koszul: negative parameter");
    }
    std::vector<int> degrees(static_cast<size_t>(lambda + p) + 1);
    for (int i = 0; i <= lambda + p; ++i) degrees[static_cast<size_t>(i)] = 2 * i;
    return build_koszul_impl(degrees, p + 1, true);
}

// ---------------------------------------------------------------------------
// Theta highest-weight complex
// ---------------------------------------------------------------------------

ThetaHwComplex theta_hw_complex(int N, int lambda, int p) {
    if (lambda < 0 || p < 0 || lambda + 2 * p != N) {
        throw std::invalid_argument("theta_hw_complex: need lambda, p >= 0 with lambda + 2p = N");
    }
    const GradedComplex base = build_modified_koszul(lambda, p);
    const int sigma = p * (lambda + p - 1) + 2 * (lambda + p);
    const int extension_degree = p * (lambda + p + 1);

    std::vector<GradedVS> objects;
    for (int s = 0; s <= base.length(); ++s) {
        GradedVS shifted;
        for (const auto& [deg, d] : base.object(s).dims) shifted.dims[deg - sigma] = d;
        for (const auto& [deg, names] : base.object(s).labels) shifted.labels[deg - sigma] = names;
        objects.push_back(std::move(shifted));
    }
    GradedVS ext;
    ext.dims[extension_degree] = 1;
    ext.labels[extension_degree] = {"ext"};
    objects.push_back(std::move(ext));

    GradedComplex complex(std::move(objects));
    for (int s = 1; s <= base.length(); ++s) {
        for (const auto& [deg, d] : base.object(s).dims) {
            if (base.object(s - 1).dim(deg) == 0) continue;
            complex.set_diff_block(s, deg - sigma, base.diff_block(s, deg));
        }
    }

    // Extension map: the generator hits the class v^p (x) v.
    const std::string class_label = koszul_label(std::vector<int>(static_cast<size_t>(p), lambda + p), {});
    const auto& obj_labels = complex.object(p).labels;
    const auto lit = obj_labels.find(extension_degree);
    if (lit == obj_labels.end()) throw std::logic_error("theta_hw_complex: missing top class");
    const auto& names = lit->second;
    const auto where = std::find(names.begin(), names.end(), class_label);
    if (where == names.end()) throw std::logic_error("theta_hw_complex: missing top class");
    RatMat ext_block(complex.object(p).dim(extension_degree), 1);
    ext_block.at(static_cast<int>(where - names.begin()), 0) = 1;
    complex.set_diff_block(p + 1, extension_degree, std::move(ext_block));

    complex.validate();
    const bool exact = complex.is_exact();
    return ThetaHwComplex{std::move(complex), exact, sigma, extension_degree};
}

int phi_degree(int lambda, int p, int s, int f_deg) {
    return f_deg - p * (lambda + p - 1) - s * (s + 1) / 2;
}

int companion_degree(int lambda, int p, int f_deg) {
    return f_deg - p * (lambda + p - 1);
}

SymwedgeReport symwedge_bijection_check(int lambda, int p) {
    const GradedComplex complex = build_modified_koszul(lambda, p);
    const int sigma = p * (lambda + p - 1) + 2 * (lambda + p);
    const int expected_offset = -p * (lambda + p - 1);
    SymwedgeReport report{true, true, expected_offset};
    for (int s = 0; s <= p; ++s) {
        // Independent enumeration of the monomial side: a symmetric multiset
        // in x_1..x_s with exponents <= lambda+p and a strict exponent set in
        // x_{s+1}..x_p with exponents < lambda+p.
        int count = 0;
        for (const auto& sym : multisets_upto(lambda + p, s)) {
            for (const auto& wedge : subsets_upto(lambda + p - 1, p - s)) {
                ++count;
                int monomial_deg = 0;
                for (int v : sym) monomial_deg += 2 * v;
                for (int v : wedge) monomial_deg += 2 * v;
                const std::string label = koszul_label(sym, wedge);
                // Locate the label in the complex and compare degrees.
                int complex_deg = monomial_deg + 2 * (lambda + p);
                const auto& obj = complex.object(s);
                auto it = obj.labels.find(complex_deg);
                const bool found =
                    it != obj.labels.end() &&
                    std::find(it->second.begin(), it->second.end(), label) != it->second.end();
                if (!found) report.bijective = false;
                const int offset = (complex_deg - sigma) - monomial_deg;
                if (offset != expected_offset) report.constant_offset = false;
            }
        }
        if (count != complex.object(s).total_dim()) report.bijective = false;
    }
    return report;
}

// ---------------------------------------------------------------------------
// TestRing
// ---------------------------------------------------------------------------

TestRing::TestRing(std::vector<int> gen_degrees, int degree_bound)
    : gen_degrees_(std::move(gen_degrees)), bound_(degree_bound) {
    for (int d : gen_degrees_) {
        if (d <= 0) throw std::invalid_argument("TestRing: generator degrees must be positive");
    }
    if (bound_ < 0) throw std::invalid_argument("TestRing: negative degree bound");
}

RElem TestRing::constant(const Rat& c) const {
    if (c == 0) return {};
    RElem out;
    out.terms[std::vector<int>(gen_degrees_.size(), 0)] = c;
    return out;
}

int TestRing::monomial_degree(const std::vector<int>& exps) const {
    if (exps.size() != gen_degrees_.size()) {
        throw std::logic_error("TestRing: exponent vector length mismatch");
    }
    int deg = 0;
    for (size_t i = 0; i < exps.size(); ++i) {
        if (exps[i] < 0) throw std::logic_error("TestRing: negative exponent");
        deg += exps[i] * gen_degrees_[i];
    }
    return deg;
}

RElem TestRing::monomial(const std::vector<int>& exps, const Rat& c) const {
    if (c == 0 || monomial_degree(exps) > bound_) return {};
    RElem out;
    out.terms[exps] = c;
    return out;
}

RElem TestRing::add(const RElem& a, const RElem& b) const {
    RElem out = a;
    for (const auto& [exps, c] : b.terms) {
        auto [it, inserted] = out.terms.emplace(exps, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) out.terms.erase(it);
        }
    }
    return out;
}

RElem TestRing::neg(const RElem& a) const {
    RElem out = a;
    for (auto& [exps, c] : out.terms) c = -c;
    return out;
}

RElem TestRing::sub(const RElem& a, const RElem& b) const { return add(a, neg(b)); }

RElem TestRing::mul(const RElem& a, const RElem& b) const {
    RElem out;
    for (const auto& [ea, ca] : a.terms) {
        for (const auto& [eb, cb] : b.terms) {
            std::vector<int> exps(ea.size());
            for (size_t i = 0; i < ea.size(); ++i) exps[i] = ea[i] + eb[i];
            if (monomial_degree(exps) > bound_) continue;
            auto [it, inserted] = out.terms.emplace(std::move(exps), ca * cb);
            if (!inserted) {
                it->second += ca * cb;
                if (it->second == 0) out.terms.erase(it);
            }
        }
    }
    return out;
}

bool TestRing::is_homogeneous(const RElem& a, int degree) const {
    for (const auto& [exps, c] : a.terms) {
        if (monomial_degree(exps) != degree) return false;
    }
    return true;
}

bool TestRing::is_scalar(const RElem& a) const { return is_homogeneous(a, 0); }

Rat TestRing::scalar_part(const RElem& a) const {
    auto it = a.terms.find(std::vector<int>(gen_degrees_.size(), 0));
    return it == a.terms.end() ? Rat(0) : it->second;
}

// ---------------------------------------------------------------------------
// RMat helpers
// ---------------------------------------------------------------------------

bool RMat::is_zero() const {
    for (const RElem& x : a) {
        if (!x.is_zero()) return false;
    }
    return true;
}

RMat rmat_mul(const TestRing& ring, const RMat& lhs, const RMat& rhs) {
    if (lhs.cols != rhs.rows) throw std::logic_error("RMat: shape mismatch in product");
    RMat out(lhs.rows, rhs.cols);
    for (int r = 0; r < lhs.rows; ++r) {
        for (int k = 0; k < lhs.cols; ++k) {
            const RElem& x = lhs.at(r, k);
            if (x.is_zero()) continue;
            for (int c = 0; c < rhs.cols; ++c) {
                if (rhs.at(k, c).is_zero()) continue;
                out.at(r, c) = ring.add(out.at(r, c), ring.mul(x, rhs.at(k, c)));
            }
        }
    }
    return out;
}

RMat rmat_sub(const TestRing& ring, const RMat& lhs, const RMat& rhs) {
    if (lhs.rows != rhs.rows || lhs.cols != rhs.cols) {
        throw std::logic_error("RMat: shape mismatch in difference");
    }
    RMat out(lhs.rows, lhs.cols);
    for (size_t i = 0; i < out.a.size(); ++i) out.a[i] = ring.sub(lhs.a[i], rhs.a[i]);
    return out;
}

RMat rmat_from_rat(const TestRing& ring, const RatMat& m) {
    RMat out(m.rows(), m.cols());
    for (int r = 0; r < m.rows(); ++r) {
        for (int c = 0; c < m.cols(); ++c) {
            if (m.at(r, c) != 0) out.at(r, c) = ring.constant(m.at(r, c));
        }
    }
    return out;
}

namespace {

RMat rmat_add(const TestRing& ring, const RMat& lhs, const RMat& rhs) {
    return rmat_sub(ring, lhs, rmat_sub(ring, RMat(rhs.rows, rhs.cols), rhs));
}

RMat rmat_slice(const RMat& m, int r0, int nrows, int c0, int ncols) {
    RMat out(nrows, ncols);
    for (int r = 0; r < nrows; ++r) {
        for (int c = 0; c < ncols; ++c) out.at(r, c) = m.at(r0 + r, c0 + c);
    }
    return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// QComplex
// ---------------------------------------------------------------------------

void QComplex::validate() const {
    if (shifts.empty()) throw std::invalid_argument("QComplex: no positions");
    if (diffs.size() + 1 != shifts.size()) {
        throw std::invalid_argument("QComplex: differential count mismatch");
    }
    bool any = false;
    int lo = 0;
    int hi = 0;
    for (const auto& pos : shifts) {
        for (int j : pos) {
            if (!any) {
                lo = hi = j;
                any = true;
            }
            lo = std::min(lo, j);
            hi = std::max(hi, j);
        }
    }
    if (any && ring.degree_bound() < hi - lo) {
        throw std::invalid_argument("QComplex: ring bound below the shift span");
    }
    for (size_t k = 0; k < diffs.size(); ++k) {
        const RMat& d = diffs[k];
        const auto& tgt = shifts[k];
        const auto& src = shifts[k + 1];
        if (d.rows != static_cast<int>(tgt.size()) || d.cols != static_cast<int>(src.size())) {
            std::ostringstream os;
            os << "QComplex: differential " << k << " has shape " << d.rows << "x" << d.cols
               << ", expected " << tgt.size() << "x" << src.size();
            throw std::invalid_argument(os.str());
        }
        for (int t = 0; t < d.rows; ++t) {
            for (int s = 0; s < d.cols; ++s) {
                const int deg = tgt[static_cast<size_t>(t)] - src[static_cast<size_t>(s)];
                const RElem& e = d.at(t, s);
                if (deg < 0 && !e.is_zero()) {
                    std::ostringstream os;
                    os << "QComplex: differential " << k << " entry (" << t << "," << s
                       << ") maps down in shift but is nonzero";
                    throw std::invalid_argument(os.str());
                }
                if (deg >= 0 && !ring.is_homogeneous(e, deg)) {
                    std::ostringstream os;
                    os << "QComplex: differential " << k << " entry (" << t << "," << s
                       << ") is not homogeneous of degree " << deg;
                    throw std::invalid_argument(os.str());
                }
            }
        }
    }
    for (size_t k = 0; k + 1 < diffs.size(); ++k) {
        if (!rmat_mul(ring, diffs[k], diffs[k + 1]).is_zero()) {
            std::ostringstream os;
            os << "QComplex: d.d != 0 at positions " << k + 2 << " -> " << k;
            throw std::invalid_argument(os.str());
        }
    }
}

LaurentPoly QComplex::graded_dim(int position) const {
    LaurentPoly out = LaurentPoly::zero();
    for (int j : shifts[static_cast<size_t>(position)]) out = out + LaurentPoly::q_power(-j);
    return out;
}

std::map<int, std::map<int, int>> QComplex::scalar_homology() const {
    const int top = static_cast<int>(shifts.size()) - 1;
    // Scalar shadows of the differentials.
    std::vector<RatMat> shadow;
    shadow.reserve(diffs.size());
    for (const RMat& d : diffs) {
        RatMat m(d.rows, d.cols);
        for (int r = 0; r < d.rows; ++r) {
            for (int c = 0; c < d.cols; ++c) m.at(r, c) = ring.scalar_part(d.at(r, c));
        }
        shadow.push_back(std::move(m));
    }
    std::map<int, std::map<int, int>> out;
    for (int pos = 0; pos <= top; ++pos) {
        std::map<int, std::vector<int>> slots;
        for (size_t i = 0; i < shifts[static_cast<size_t>(pos)].size(); ++i) {
            slots[shifts[static_cast<size_t>(pos)][i]].push_back(static_cast<int>(i));
        }
        for (const auto& [j, idx] : slots) {
            auto restrict_block = [&](int gap, const std::vector<int>& rows,
                                      const std::vector<int>& cols) {
                RatMat m(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
                for (size_t r = 0; r < rows.size(); ++r) {
                    for (size_t c = 0; c < cols.size(); ++c) {
                        m.at(static_cast<int>(r), static_cast<int>(c)) =
                            shadow[static_cast<size_t>(gap)].at(rows[r], cols[c]);
                    }
                }
                return m;
            };
            auto indices_at = [&](int position, int shift) {
                std::vector<int> v;
                const auto& sh = shifts[static_cast<size_t>(position)];
                for (size_t i = 0; i < sh.size(); ++i) {
                    if (sh[i] == shift) v.push_back(static_cast<int>(i));
                }
                return v;
            };
            int rank_out = 0;
            int rank_in = 0;
            if (pos >= 1) rank_out = restrict_block(pos - 1, indices_at(pos - 1, j), idx).rank();
            if (pos < top) rank_in = restrict_block(pos, idx, indices_at(pos + 1, j)).rank();
            const int h = static_cast<int>(idx.size()) - rank_out - rank_in;
            if (h < 0) throw std::logic_error("QComplex: negative scalar homology dimension");
            if (h > 0) out[pos][j] = h;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Gaussian convolution
// ---------------------------------------------------------------------------

namespace {

// Shift of the support of a rational column vector over slots with the given
// shifts; throws if the support mixes shifts.
int pure_shift(const std::vector<Rat>& v, const std::vector<int>& slot_shifts, int fallback) {
    int shift = 0;
    bool seen = false;
    for (size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) continue;
        if (!seen) {
            shift = slot_shifts[i];
            seen = true;
        } else if (slot_shifts[i] != shift) {
            throw std::logic_error("gaussian_convolve: base change mixes shifts");
        }
    }
    return seen ? shift : fallback;
}

RatMat columns_to_mat(const std::vector<std::vector<Rat>>& cols, int rows) {
    RatMat m(rows, static_cast<int>(cols.size()));
    for (size_t c = 0; c < cols.size(); ++c) {
        for (int r = 0; r < rows; ++r) m.at(r, static_cast<int>(c)) = cols[c][static_cast<size_t>(r)];
    }
    return m;
}

void assert_homogeneous(const TestRing& ring, const RMat& m, const std::vector<int>& tgt,
                        const std::vector<int>& src, const char* what) {
    for (int t = 0; t < m.rows; ++t) {
        for (int s = 0; s < m.cols; ++s) {
            const int deg = tgt[static_cast<size_t>(t)] - src[static_cast<size_t>(s)];
            const RElem& e = m.at(t, s);
            if (deg < 0 ? !e.is_zero() : !ring.is_homogeneous(e, deg)) {
                throw std::logic_error(std::string("gaussian_convolve: ") + what +
                                       " lost homogeneity");
            }
        }
    }
}

}  // namespace

ReductionReport gaussian_convolve(const QComplex& qc) {
    qc.validate();
    const TestRing& ring = qc.ring;
    const int top = static_cast<int>(qc.shifts.size()) - 1;

    ReductionReport report;
    report.cone_euler.resize(static_cast<size_t>(top) + 1);
    LaurentPoly prev = LaurentPoly::zero();
    for (int i = 0; i <= top; ++i) {
        const LaurentPoly cur = qc.graded_dim(i) - prev;
        report.cone_euler[static_cast<size_t>(i)] = cur;
        prev = cur;
    }

    std::vector<int> bottom = qc.shifts[0];
    RMat incoming = top >= 1 ? qc.diffs[0] : RMat(static_cast<int>(bottom.size()), 0);

    for (int pos = 0; pos < top; ++pos) {
        const std::vector<int>& src_shifts = qc.shifts[static_cast<size_t>(pos) + 1];
        const int rows = static_cast<int>(bottom.size());
        const int cols = static_cast<int>(src_shifts.size());

        RatMat m(rows, cols);
        for (int t = 0; t < rows; ++t) {
            for (int s = 0; s < cols; ++s) m.at(t, s) = ring.scalar_part(incoming.at(t, s));
        }

        const auto rr = m.rref();
        const std::vector<int>& pivots = rr.pivot_cols;
        const auto kernel = m.kernel_basis();
        const int w = static_cast<int>(kernel.size());
        const int u = static_cast<int>(pivots.size());

        // Source base change: kernel vectors first, then the pivot slots.
        std::vector<std::vector<Rat>> src_cols = kernel;
        for (int c : pivots) {
            std::vector<Rat> e(static_cast<size_t>(cols), Rat(0));
            e[static_cast<size_t>(c)] = 1;
            src_cols.push_back(std::move(e));
        }
        std::vector<int> new_src_shifts;
        for (const auto& v : src_cols) new_src_shifts.push_back(pure_shift(v, src_shifts, 0));

        // Target base change: image columns first, then a greedy unit-vector
        // complement of the image.
        std::vector<std::vector<Rat>> tgt_cols;
        for (int c : pivots) {
            std::vector<Rat> img(static_cast<size_t>(rows), Rat(0));
            for (int r = 0; r < rows; ++r) img[static_cast<size_t>(r)] = m.at(r, c);
            tgt_cols.push_back(std::move(img));
        }
        std::vector<int> h_slots;
        for (int h = 0; h < rows; ++h) {
            std::vector<Rat> e(static_cast<size_t>(rows), Rat(0));
            e[static_cast<size_t>(h)] = 1;
            tgt_cols.push_back(e);
            if (columns_to_mat(tgt_cols, rows).rank() == static_cast<int>(tgt_cols.size())) {
                h_slots.push_back(h);
            } else {
                tgt_cols.pop_back();
            }
        }
        const int hdim = static_cast<int>(h_slots.size());
        if (u + hdim != rows) throw std::logic_error("gaussian_convolve: target basis incomplete");
        std::vector<int> new_tgt_shifts;
        for (const auto& v : tgt_cols) new_tgt_shifts.push_back(pure_shift(v, bottom, 0));

        const RatMat t_src = columns_to_mat(src_cols, cols);
        const RatMat t_tgt = columns_to_mat(tgt_cols, rows);
        const RatMat t_src_inv = t_src.inverse();
        const RatMat t_tgt_inv = t_tgt.inverse();

        const RMat phi = rmat_mul(ring, rmat_mul(ring, rmat_from_rat(ring, t_tgt_inv), incoming),
                                  rmat_from_rat(ring, t_src));
        assert_homogeneous(ring, phi, new_tgt_shifts, new_src_shifts, "transformed differential");

        const RMat blk_a = rmat_slice(phi, 0, u, 0, w);
        const RMat alpha = rmat_slice(phi, 0, u, w, u);
        const RMat blk_c = rmat_slice(phi, u, hdim, 0, w);
        const RMat blk_d = rmat_slice(phi, u, hdim, w, u);

        // The scalar shadow of phi must be [[0, I], [0, 0]] by construction.
        for (int r = 0; r < u; ++r) {
            for (int c = 0; c < u; ++c) {
                if (ring.scalar_part(alpha.at(r, c)) != Rat(r == c ? 1 : 0)) {
                    throw std::logic_error("gaussian_convolve: cancelled block is not unital");
                }
            }
        }
        for (const RMat* blk : {&blk_a, &blk_c, &blk_d}) {
            for (const RElem& e : blk->a) {
                if (ring.scalar_part(e) != 0) {
                    throw std::logic_error("gaussian_convolve: stray scalar part");
                }
            }
        }

        // Inverse of the unital block by a finite geometric series.
        const RMat id_u = rmat_from_rat(ring, RatMat::identity(u));
        const RMat nu = rmat_sub(ring, id_u, alpha);
        RMat alpha_inv = id_u;
        RMat power = id_u;
        for (int k = 1; k <= ring.degree_bound() + 1; ++k) {
            power = rmat_mul(ring, power, nu);
            if (power.is_zero()) break;
            alpha_inv = rmat_add(ring, alpha_inv, power);
        }
        if (!power.is_zero()) throw std::logic_error("gaussian_convolve: series did not terminate");

        const RMat g =
            rmat_sub(ring, blk_c, rmat_mul(ring, blk_d, rmat_mul(ring, alpha_inv, blk_a)));

        std::vector<int> leftover(new_src_shifts.begin(), new_src_shifts.begin() + w);
        std::vector<int> residual;
        for (int h : h_slots) residual.push_back(bottom[static_cast<size_t>(h)]);
        report.steps.push_back({pos, leftover, residual});
        if (!residual.empty()) report.final_components[pos] = residual;

        if (pos + 1 < top) {
            const RMat psi = rmat_mul(ring, rmat_from_rat(ring, t_src_inv),
                                      qc.diffs[static_cast<size_t>(pos) + 1]);
            const RMat psi_w = rmat_slice(psi, 0, w, 0, psi.cols);
            const RMat psi_u = rmat_slice(psi, w, u, 0, psi.cols);
            // d.d = 0 in the new coordinates pins the pivot component and
            // kills g against the surviving incoming part.
            if (!rmat_add(ring, rmat_mul(ring, alpha, psi_u), rmat_mul(ring, blk_a, psi_w))
                     .is_zero()) {
                throw std::logic_error("gaussian_convolve: pivot component mismatch");
            }
            if (!rmat_mul(ring, g, psi_w).is_zero()) {
                throw std::logic_error("gaussian_convolve: residual differential persists");
            }
            assert_homogeneous(ring, psi_w, leftover, qc.shifts[static_cast<size_t>(pos) + 2],
                               "reduced incoming differential");
            incoming = psi_w;
        }
        bottom = std::move(leftover);
    }

    if (!bottom.empty()) report.final_components[top] = bottom;
    report.final_is_zero = report.final_components.empty();
    return report;
}

// ---------------------------------------------------------------------------
// Seeded random complexes
// ---------------------------------------------------------------------------

int Rng::uniform(int lo, int hi) {
    if (lo > hi) throw std::invalid_argument("Rng: empty range");
    const std::uint64_t r = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() / r * r;
    std::uint64_t v = eng_();
    while (v >= limit) v = eng_();
    return lo + static_cast<int>(v % r);
}

Rat Rng::small_nonzero_scalar() {
    const int mag = uniform(1, 3);
    return uniform(0, 1) ? Rat(mag) : Rat(-mag);
}

QComplex random_qcomplex(std::uint64_t seed, const RandomComplexPlan& plan) {
    if (plan.length < 0) throw std::invalid_argument("random_qcomplex: negative length");
    if (plan.min_pairs_per_gap < 0 || plan.min_pairs_per_gap > plan.max_pairs_per_gap) {
        throw std::invalid_argument("random_qcomplex: bad pair bounds");
    }
    if (plan.shift_min > plan.shift_max) {
        throw std::invalid_argument("random_qcomplex: bad shift bounds");
    }
    if (!plan.planned_homology.empty() &&
        static_cast<int>(plan.planned_homology.size()) != plan.length + 1) {
        throw std::invalid_argument("random_qcomplex: planned homology length mismatch");
    }

    Rng rng(seed);
    const int L = plan.length;

    std::vector<std::vector<int>> pairs(static_cast<size_t>(std::max(L, 0)));
    for (int g = 0; g < L; ++g) {
        const int n = rng.uniform(plan.min_pairs_per_gap, plan.max_pairs_per_gap);
        for (int k = 0; k < n; ++k) {
            pairs[static_cast<size_t>(g)].push_back(rng.uniform(plan.shift_min, plan.shift_max));
        }
    }
    std::vector<std::vector<int>> extra(static_cast<size_t>(L) + 1);
    if (!plan.planned_homology.empty()) extra = plan.planned_homology;

    // Slot layout at position i: targets of gap i, then sources of gap i-1,
    // then the unmatched slots.
    std::vector<std::vector<int>> shifts(static_cast<size_t>(L) + 1);
    for (int i = 0; i <= L; ++i) {
        auto& s = shifts[static_cast<size_t>(i)];
        if (i < L) s.insert(s.end(), pairs[static_cast<size_t>(i)].begin(),
                            pairs[static_cast<size_t>(i)].end());
        if (i > 0) s.insert(s.end(), pairs[static_cast<size_t>(i) - 1].begin(),
                            pairs[static_cast<size_t>(i) - 1].end());
        s.insert(s.end(), extra[static_cast<size_t>(i)].begin(), extra[static_cast<size_t>(i)].end());
    }

    bool any = false;
    int lo = 0;
    int hi = 0;
    for (const auto& s : shifts) {
        for (int j : s) {
            if (!any) {
                lo = hi = j;
                any = true;
            }
            lo = std::min(lo, j);
            hi = std::max(hi, j);
        }
    }
    const TestRing ring({1, 2}, std::max(12, hi - lo));

    std::vector<RMat> diffs;
    for (int g = 0; g < L; ++g) {
        RMat d(static_cast<int>(shifts[static_cast<size_t>(g)].size()),
               static_cast<int>(shifts[static_cast<size_t>(g) + 1].size()));
        const int src_offset = (g + 1 < L) ? static_cast<int>(pairs[static_cast<size_t>(g) + 1].size()) : 0;
        for (int k = 0; k < static_cast<int>(pairs[static_cast<size_t>(g)].size()); ++k) {
            d.at(k, src_offset + k) = ring.one();
        }
        diffs.push_back(std::move(d));
    }

    // Conjugate each position by an invertible degree-0 map: diagonal scalars
    // times unipotent with entries raising the shift.
    std::vector<RMat> p_mats, p_invs;
    for (int i = 0; i <= L; ++i) {
        const auto& s = shifts[static_cast<size_t>(i)];
        const int n = static_cast<int>(s.size());
        std::vector<Rat> diag(static_cast<size_t>(n));
        for (int t = 0; t < n; ++t) diag[static_cast<size_t>(t)] = rng.small_nonzero_scalar();
        RMat smat(n, n);
        for (int t = 0; t < n; ++t) {
            for (int c = 0; c < n; ++c) {
                const int delta = s[static_cast<size_t>(t)] - s[static_cast<size_t>(c)];
                if (t == c || delta <= 0 || rng.uniform(0, 1) == 0) continue;
                const int b = rng.uniform(0, delta / 2);
                smat.at(t, c) = ring.monomial({delta - 2 * b, b}, rng.small_nonzero_scalar());
            }
        }
        RMat p(n, n);
        RMat id = rmat_from_rat(ring, RatMat::identity(n));
        RMat ipluss = rmat_add(ring, id, smat);
        for (int t = 0; t < n; ++t) {
            for (int c = 0; c < n; ++c) {
                p.at(t, c) = ring.mul(ring.constant(diag[static_cast<size_t>(t)]), ipluss.at(t, c));
            }
        }
        // (I + S)^{-1} D^{-1}; S is nilpotent because its entries strictly
        // raise the shift.
        RMat series = id;
        RMat power = id;
        for (int k = 1; k <= n; ++k) {
            power = rmat_mul(ring, power, smat);
            if (power.is_zero()) break;
            if (k % 2 == 1) {
                series = rmat_sub(ring, series, power);
            } else {
                series = rmat_add(ring, series, power);
            }
        }
        RMat pinv(n, n);
        for (int t = 0; t < n; ++t) {
            for (int c = 0; c < n; ++c) {
                pinv.at(t, c) =
                    ring.mul(series.at(t, c), ring.constant(Rat(1) / diag[static_cast<size_t>(c)]));
            }
        }
        p_mats.push_back(std::move(p));
        p_invs.push_back(std::move(pinv));
    }

    for (int g = 0; g < L; ++g) {
        diffs[static_cast<size_t>(g)] =
            rmat_mul(ring, rmat_mul(ring, p_mats[static_cast<size_t>(g)], diffs[static_cast<size_t>(g)]),
                     p_invs[static_cast<size_t>(g) + 1]);
    }

    return QComplex{ring, std::move(shifts), std::move(diffs)};
}

}  // namespace catsl2

#include <gerstlab/linalg.hpp>

#include <algorithm>

namespace gerstlab {

size_t tuple_count(int dim, int arity) {
    size_t n = 1;
    for (int i = 0; i < arity; ++i) n *= static_cast<size_t>(dim);
    return n;
}

size_t tuple_flat(const std::vector<int>& tuple, int dim) {
    size_t f = 0;
    for (int t : tuple) f = f * dim + static_cast<size_t>(t);
    return f;
}

std::vector<int> tuple_unflat(size_t flat, int dim, int arity) {
    std::vector<int> t(arity);
    for (int i = arity - 1; i >= 0; --i) {
        t[i] = static_cast<int>(flat % dim);
        flat /= dim;
    }
    return t;
}

bool tuple_next(std::vector<int>& tuple, int dim) {
    for (int i = static_cast<int>(tuple.size()) - 1; i >= 0; --i) {
        if (++tuple[i] < dim) return true;
        tuple[i] = 0;
    }
    return false;
}


bool is_zero_vec(const Vec& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

Vec operator+(const Vec& a, const Vec& b) {
    Vec r(a);
    for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

Vec operator-(const Vec& a, const Vec& b) {
    Vec r(a);
    for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

Vec operator*(const Rational& c, const Vec& v) {
    Vec r(v);
    for (auto& x : r) x *= c;
    return r;
}

GradedSpace::GradedSpace(std::vector<std::string> labels, std::vector<int> degrees)
    : labels_(std::move(labels)), degrees_(std::move(degrees)) {
    if (labels_.size() != degrees_.size()) throw input_error("GradedSpace: labels/degrees length mismatch");
    for (int i = 0; i < dim(); ++i) {
        if (!index_.emplace(labels_[i], i).second)
            throw input_error("GradedSpace: duplicate basis label '" + labels_[i] + "'");
    }
}

int GradedSpace::index_of(const std::string& label) const {
    auto it = index_.find(label);
    if (it == index_.end()) throw input_error("GradedSpace: unknown label '" + label + "'");
    return it->second;
}

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Rational(1);
    return m;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

Matrix Matrix::mul(const Matrix& o) const {
    if (cols_ != o.rows_) throw input_error("Matrix: dimension mismatch in mul");
    Matrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Rational& x = at(i, k);
            if (x.is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j) {
                if (o.at(k, j).is_zero()) continue;
                r.at(i, j) += x * o.at(k, j);
            }
        }
    return r;
}

Vec Matrix::apply(const Vec& v) const {
    if (static_cast<int>(v.size()) != cols_) throw input_error("Matrix: dimension mismatch in apply");
    Vec r(rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero() && !v[j].is_zero()) r[i] += at(i, j) * v[j];
    return r;
}

bool Matrix::is_zero() const {
    for (const auto& x : a_)
        if (!x.is_zero()) return false;
    return true;
}

LinearMap::LinearMap(GradedSpace dom, GradedSpace cod, Matrix m, int shift)
    : domain(std::move(dom)), codomain(std::move(cod)), mat(std::move(m)), degree_shift(shift) {
    if (mat.rows() != codomain.dim() || mat.cols() != domain.dim())
        throw input_error("LinearMap: matrix dimensions do not match spaces");
}

int koszul_sign(const std::vector<int>& perm, const std::vector<int>& degrees) {
    const size_t n = perm.size();
    if (degrees.size() != n) throw input_error("koszul_sign: length mismatch");
    std::vector<char> seen(n, 0);
    for (int p : perm) {
        if (p < 0 || static_cast<size_t>(p) >= n || seen[p]) throw input_error("koszul_sign: not a permutation");
        seen[p] = 1;
    }
    long e = 0;
    // perm[i] = original index placed at position i; an inversion means the
    // element originally on the left ends up on the right of the other.
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            if (perm[i] > perm[j]) e += static_cast<long>(degrees[perm[i]]) * degrees[perm[j]];
    return sign_pow(e);
}

namespace {

// Fraction-free row echelon on a denominator-cleared copy. Returns pivot
// columns; `ech` receives the eliminated rational rows (still exact).
struct Echelon {
    std::vector<int> pivot_cols;
    std::vector<Vec> rows;  // echelon rows, one per pivot
};

Echelon echelon_form(const Matrix& m) {
    const int R = m.rows(), C = m.cols();
    // Clear denominators per row so Bareiss runs on integral data. Entries stay
    // integral through the elimination; exact divisions keep growth polynomial.
    std::vector<Vec> a(R, Vec(C));
    for (int i = 0; i < R; ++i) {
        for (int j = 0; j < C; ++j) a[i][j] = m.at(i, j);
        Rational scale(1);
        for (int j = 0; j < C; ++j) {
            Rational y = a[i][j] * scale;
            if (!y.is_integer()) scale *= y.denominator();
        }
        if (!(scale == Rational(1)))
            for (int j = 0; j < C; ++j) a[i][j] *= scale;
    }

    Echelon e;
    Rational prev_pivot(1);
    int row = 0;
    for (int col = 0; col < C && row < R; ++col) {
        int pr = -1;
        for (int i = row; i < R; ++i)
            if (!a[i][col].is_zero()) {
                pr = i;
                break;
            }
        if (pr < 0) continue;
        std::swap(a[pr], a[row]);
        const Rational pivot = a[row][col];
        for (int i = row + 1; i < R; ++i) {
            if (a[i][col].is_zero()) {
                // still divide through to keep Bareiss invariant sizes bounded
                for (int j = col; j < C; ++j) a[i][j] = (a[i][j] * pivot) / prev_pivot;
            } else {
                const Rational f = a[i][col];
                for (int j = col; j < C; ++j) a[i][j] = (a[i][j] * pivot - f * a[row][j]) / prev_pivot;
            }
        }
        e.pivot_cols.push_back(col);
        prev_pivot = pivot;
        ++row;
    }
    e.rows.assign(a.begin(), a.begin() + row);
    return e;
}

}  // namespace

int rank(const Matrix& m) { return static_cast<int>(echelon_form(m).pivot_cols.size()); }

RankKernel rank_kernel(const Matrix& m) {
    const int C = m.cols();
    Echelon e = echelon_form(m);
    RankKernel rk;
    rk.rank = static_cast<int>(e.pivot_cols.size());

    std::vector<char> is_pivot(C, 0);
    for (int c : e.pivot_cols) is_pivot[c] = 1;

    for (int fc = 0; fc < C; ++fc) {
        if (is_pivot[fc]) continue;
        Vec x(C);
        x[fc] = Rational(1);
        // back-substitute pivots from the bottom up
        for (int r = rk.rank - 1; r >= 0; --r) {
            const int pc = e.pivot_cols[r];
            Rational s;
            for (int j = pc + 1; j < C; ++j)
                if (!e.rows[r][j].is_zero() && !x[j].is_zero()) s += e.rows[r][j] * x[j];
            x[pc] = -s / e.rows[r][pc];
        }
        rk.kernel_basis.push_back(std::move(x));
    }
    return rk;
}

std::optional<Vec> solve(const Matrix& m, const Vec& rhs) {
    if (static_cast<int>(rhs.size()) != m.rows()) throw input_error("solve: rhs dimension mismatch");
    const int R = m.rows(), C = m.cols();
    Matrix aug(R, C + 1);
    for (int i = 0; i < R; ++i) {
        for (int j = 0; j < C; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, C) = rhs[i];
    }
    Echelon e = echelon_form(aug);
    // inconsistent iff some pivot sits in the augmented column
    for (int c : e.pivot_cols)
        if (c == C) return std::nullopt;

    Vec x(C);
    for (int r = static_cast<int>(e.pivot_cols.size()) - 1; r >= 0; --r) {
        const int pc = e.pivot_cols[r];
        Rational s = e.rows[r][C];
        for (int j = pc + 1; j < C; ++j)
            if (!e.rows[r][j].is_zero() && !x[j].is_zero()) s -= e.rows[r][j] * x[j];
        x[pc] = s / e.rows[r][pc];
    }
    return x;
}

std::optional<Vec> solve(const LinearMap& m, const Vec& rhs) { return solve(m.mat, rhs); }

Cohomology cohomology_at(const Matrix& d_in, const Matrix& d_out) {
    if (d_in.rows() != d_out.cols()) throw input_error("cohomology_at: middle dimensions disagree");
    // precondition d_out . d_in = 0, reported with the offending basis vector
    Matrix comp = d_out.mul(d_in);
    for (int j = 0; j < comp.cols(); ++j)
        for (int i = 0; i < comp.rows(); ++i)
            if (!comp.at(i, j).is_zero())
                throw input_error("cohomology_at: d_out∘d_in != 0 on basis vector " + std::to_string(j));

    RankKernel kout = rank_kernel(d_out);
    const int rin = rank(d_in);
    Cohomology h;
    h.dimension = static_cast<int>(kout.kernel_basis.size()) - rin;

    // independent re-verification through the transposed matrices
    const int rin_t = rank(d_in.transpose());
    const int rout_t = rank(d_out.transpose());
    const int ker_dim_t = d_out.cols() - rout_t;
    if (rin_t != rin || ker_dim_t != static_cast<int>(kout.kernel_basis.size()))
        throw std::logic_error("cohomology_at: transpose-rank cross-check failed");

    // representatives: kernel vectors extending a basis of im(d_in)
    const int mid = d_in.rows();
    std::vector<Vec> span;
    for (int j = 0; j < d_in.cols(); ++j) {
        Vec col(mid);
        for (int i = 0; i < mid; ++i) col[i] = d_in.at(i, j);
        if (!is_zero_vec(col)) span.push_back(std::move(col));
    }
    auto current_rank = [&span, mid]() {
        Matrix s(static_cast<int>(span.size()), mid);
        for (size_t i = 0; i < span.size(); ++i)
            for (int j = 0; j < mid; ++j) s.at(static_cast<int>(i), j) = span[i][j];
        return rank(s);
    };
    int r = current_rank();
    for (const Vec& k : kout.kernel_basis) {
        if (static_cast<int>(h.representatives.size()) == h.dimension) break;
        span.push_back(k);
        int r2 = current_rank();
        if (r2 > r) {
            h.representatives.push_back(k);
            r = r2;
        } else {
            span.pop_back();
        }
    }
    if (static_cast<int>(h.representatives.size()) != h.dimension)
        throw std::logic_error("cohomology_at: representative extraction failed");
    return h;
}

Cohomology cohomology_at(const LinearMap& d_in, const LinearMap& d_out) {
    return cohomology_at(d_in.mat, d_out.mat);
}

}  // namespace gerstlab

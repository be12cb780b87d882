#include <gerstlab/cochain.hpp>

#include <algorithm>

namespace gerstlab {

Cochain::Cochain(const Algebra& A, int arity)
    : A_(&A), arity_(arity), table_(tuple_count(A.dim(), arity), Vec(A.dim())) {
    if (arity < 0) throw input_error("Cochain: negative arity");
}

Cochain Cochain::basis_cochain(const Algebra& A, const std::vector<int>& tuple, int out) {
    Cochain c(A, static_cast<int>(tuple.size()));
    c.entry_mut(tuple)[out] = Rational(1);
    return c;
}

Cochain Cochain::multiplication(const Algebra& A) {
    Cochain m(A, 2);
    const int d = A.dim();
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            Vec& out = m.entry_mut({i, j});
            const int s = sign_pow(A.degree(i));
            for (const auto& [k, c] : A.mul_basis(i, j)) out[k] += Rational(s) * c;
        }
    return m;
}

bool Cochain::is_zero() const {
    for (const auto& v : table_)
        if (!is_zero_vec(v)) return false;
    return true;
}

std::optional<int> Cochain::internal_degree() const {
    const int d = A_->dim();
    std::optional<int> deg;
    std::vector<int> t(arity_, 0);
    size_t f = 0;
    do {
        int in = 0;
        for (int i : t) in += A_->degree(i);
        for (int k = 0; k < d; ++k) {
            if (table_[f][k].is_zero()) continue;
            int dk = A_->degree(k) - in;
            if (!deg)
                deg = dk;
            else if (*deg != dk)
                return std::nullopt;
        }
        ++f;
    } while (tuple_next(t, d));
    return deg ? deg : std::optional<int>(0);
}

std::vector<std::pair<int, Cochain>> Cochain::homogeneous_components() const {
    if (A_->ungraded()) return {{0, *this}};
    const int d = A_->dim();
    std::vector<std::pair<int, Cochain>> comps;
    auto part = [&](int deg) -> Cochain& {
        for (auto& [g, c] : comps)
            if (g == deg) return c;
        comps.emplace_back(deg, Cochain(*A_, arity_));
        return comps.back().second;
    };
    std::vector<int> t(arity_, 0);
    size_t f = 0;
    do {
        int in = 0;
        for (int i : t) in += A_->degree(i);
        for (int k = 0; k < d; ++k) {
            if (table_[f][k].is_zero()) continue;
            part(A_->degree(k) - in).entry_mut_flat(f)[k] = table_[f][k];
        }
        ++f;
    } while (tuple_next(t, d));
    if (comps.empty()) comps.emplace_back(0, Cochain(*A_, arity_));
    return comps;
}

Cochain operator+(const Cochain& a, const Cochain& b) {
    if (a.A_ != b.A_ || a.arity_ != b.arity_) throw input_error("Cochain: +/- mismatch");
    Cochain r(a);
    for (size_t f = 0; f < r.table_.size(); ++f)
        for (size_t k = 0; k < r.table_[f].size(); ++k) r.table_[f][k] += b.table_[f][k];
    return r;
}

Cochain operator-(const Cochain& a, const Cochain& b) {
    if (a.A_ != b.A_ || a.arity_ != b.arity_) throw input_error("Cochain: +/- mismatch");
    Cochain r(a);
    for (size_t f = 0; f < r.table_.size(); ++f)
        for (size_t k = 0; k < r.table_[f].size(); ++k) r.table_[f][k] -= b.table_[f][k];
    return r;
}

Cochain operator*(const Rational& c, const Cochain& a) {
    Cochain r(a);
    for (auto& v : r.table_)
        for (auto& x : v) x *= c;
    return r;
}

bool operator==(const Cochain& a, const Cochain& b) {
    return a.A_ == b.A_ && a.arity_ == b.arity_ && a.table_ == b.table_;
}

namespace {

// next combination s_1 < ... < s_m out of {0..n-1}
bool comb_next(std::vector<int>& s, int n) {
    const int m = static_cast<int>(s.size());
    for (int i = m - 1; i >= 0; --i) {
        if (s[i] < n - (m - i)) {
            ++s[i];
            for (int j = i + 1; j < m; ++j) s[j] = s[j - 1] + 1;
            return true;
        }
    }
    return false;
}

}  // namespace

Cochain brace(const Cochain& D0, const std::vector<Cochain>& args) {
    const Algebra& A = D0.algebra();
    for (const auto& a : args)
        if (&a.algebra() != &A) throw input_error("brace: cochains over different algebras");
    const int d = A.dim();
    const int m = static_cast<int>(args.size());
    const int n0 = D0.arity();

    int n_res = n0 - m;
    for (const auto& a : args) n_res += a.arity();
    if (m > n0) return Cochain(A, std::max(n_res, 0));

    Cochain res(A, n_res);
    std::vector<int> slots(m);
    for (int i = 0; i < m; ++i) slots[i] = i;

    std::vector<int> t(n_res, 0);
    std::vector<int> d0_tuple(n0);
    std::vector<Vec> ins_vec(m);        // evaluated + sign-twisted inserted values
    std::vector<int> ins_slot_pos(m);   // their positions in d0_tuple

    do {  // slot combinations
        std::fill(t.begin(), t.end(), 0);
        do {  // result tuples
            int ptr = 0;
            long prefix_shift = 0;  // sum of (deg a_j - 1) over consumed original args
            bool dead = false;
            int next_ins = 0;
            for (int s = 0; s < n0; ++s) {
                if (next_ins < m && slots[next_ins] == s) {
                    const Cochain& Dp = args[next_ins];
                    const int ap = Dp.arity();
                    std::vector<int> sub(t.begin() + ptr, t.begin() + ptr + ap);
                    int in_deg = 0;
                    for (int i : sub) in_deg += A.degree(i);
                    const Vec& w = Dp.entry(sub);
                    Vec tw(d);
                    bool nonzero = false;
                    for (int k = 0; k < d; ++k) {
                        if (w[k].is_zero()) continue;
                        nonzero = true;
                        // shifted total degree of this homogeneous piece of Dp
                        const long norm = ap + (A.degree(k) - in_deg) - 1;
                        tw[k] = Rational(sign_pow(norm * prefix_shift)) * w[k];
                    }
                    if (!nonzero) {
                        dead = true;
                        break;
                    }
                    ins_vec[next_ins] = std::move(tw);
                    ins_slot_pos[next_ins] = s;
                    for (int i : sub) prefix_shift += A.degree(i) - 1;
                    ptr += ap;
                    ++next_ins;
                } else {
                    d0_tuple[s] = t[ptr];
                    prefix_shift += A.degree(t[ptr]) - 1;
                    ++ptr;
                }
            }
            if (dead) continue;

            Vec& out = res.entry_mut(t);
            if (m == 0) {
                const Vec& v = D0.entry(d0_tuple);
                for (int k = 0; k < d; ++k)
                    if (!v[k].is_zero()) out[k] += v[k];
                continue;
            }
            // multilinear expansion over components of the inserted vectors
            std::vector<int> choice(m, 0);
            bool more = true;
            while (more) {
                Rational coeff(1);
                bool zero = false;
                for (int p = 0; p < m; ++p) {
                    const Rational& c = ins_vec[p][choice[p]];
                    if (c.is_zero()) {
                        zero = true;
                        break;
                    }
                    coeff *= c;
                    d0_tuple[ins_slot_pos[p]] = choice[p];
                }
                if (!zero) {
                    const Vec& v = D0.entry(d0_tuple);
                    for (int k = 0; k < d; ++k)
                        if (!v[k].is_zero()) out[k] += coeff * v[k];
                }
                more = false;
                for (int i = m - 1; i >= 0; --i) {
                    if (++choice[i] < d) {
                        more = true;
                        break;
                    }
                    choice[i] = 0;
                }
            }
        } while (tuple_next(t, d));
    } while (comb_next(slots, n0));

    return res;
}

Cochain cup(const Cochain& D, const Cochain& E) {
    if (&D.algebra() != &E.algebra()) throw input_error("cup: cochains over different algebras");
    const Cochain m = Cochain::multiplication(D.algebra());
    Cochain r(D.algebra(), D.arity() + E.arity());
    for (const auto& [deg, comp] : D.homogeneous_components()) {
        const long total = D.arity() + deg;
        r = r + Rational(sign_pow(total)) * brace(m, {comp, E});
    }
    return r;
}

Cochain gerst_bracket(const Cochain& D, const Cochain& E) {
    if (&D.algebra() != &E.algebra()) throw input_error("gerst_bracket: cochains over different algebras");
    const int ra = std::max(D.arity() + E.arity() - 1, 0);
    Cochain r(D.algebra(), ra);
    for (const auto& [dd, Dc] : D.homogeneous_components())
        for (const auto& [de, Ec] : E.homogeneous_components()) {
            const long sd = D.arity() + dd - 1, se = E.arity() + de - 1;
            r = r + brace(Dc, {Ec}) - Rational(sign_pow(sd * se)) * brace(Ec, {Dc});
        }
    return r;
}

Cochain hoch_delta(const Cochain& D) { return gerst_bracket(Cochain::multiplication(D.algebra()), D); }

Matrix hoch_delta_matrix(const Algebra& A, int n) {
    const int d = A.dim();
    const size_t cn = tuple_count(d, n) * d;
    const size_t cn1 = tuple_count(d, n + 1) * d;
    Matrix M(static_cast<int>(cn1), static_cast<int>(cn));
    std::vector<int> t(n, 0);
    size_t col = 0;
    do {
        for (int out = 0; out < d; ++out, ++col) {
            Cochain e = Cochain::basis_cochain(A, t, out);
            Cochain de = hoch_delta(e);
            for (size_t f = 0; f < de.table_size(); ++f) {
                const Vec& v = de.entry_flat(f);
                for (int k = 0; k < d; ++k)
                    if (!v[k].is_zero()) M.at(static_cast<int>(f * d + k), static_cast<int>(col)) = v[k];
            }
        }
    } while (tuple_next(t, d));
    return M;
}

std::vector<CohomologyDegree> hochschild_cohomology(const Algebra& A, int n_max) {
    if (n_max < 0) throw input_error("hochschild_cohomology: n_max < 0");
    const int d = A.dim();
    std::vector<CohomologyDegree> out;
    Matrix prev(static_cast<int>(tuple_count(d, 0) * d), 0);  // zero map into C^0
    for (int n = 0; n <= n_max; ++n) {
        Matrix dn = hoch_delta_matrix(A, n);
        Cohomology h = cohomology_at(prev, dn);
        CohomologyDegree cd;
        cd.n = n;
        cd.dimension = h.dimension;
        for (const Vec& rep : h.representatives) {
            Cochain c(A, n);
            for (size_t f = 0; f < tuple_count(d, n); ++f)
                for (int k = 0; k < d; ++k) {
                    const Rational& x = rep[f * d + k];
                    if (!x.is_zero()) c.entry_mut_flat(f)[k] = x;
                }
            cd.representatives.push_back(std::move(c));
        }
        out.push_back(std::move(cd));
        prev = std::move(dn);
    }
    return out;
}

}  // namespace gerstlab

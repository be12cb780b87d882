#include <gerstlab/hopf.hpp>

#include <algorithm>

namespace gerstlab {

FinBialgebra exterior_hopf() {
    FinBialgebra H;
    H.space = GradedSpace({"1", "th"}, {0, 1});
    H.mul.assign(2, std::vector<SparseVec>(2));
    H.mul[0][0] = {{0, Rational(1)}};
    H.mul[0][1] = {{1, Rational(1)}};
    H.mul[1][0] = {{1, Rational(1)}};
    // th*th = 0
    H.comul.assign(2, {});
    H.comul[0] = {{0, 0, Rational(1)}};
    H.comul[1] = {{1, 0, Rational(1)}, {0, 1, Rational(1)}};
    H.unit = {Rational(1), Rational(0)};
    H.counit = {Rational(1), Rational(0)};
    return H;
}

namespace {

using Tensor = std::map<std::vector<int>, Rational>;

void tadd(Tensor& t, const std::vector<int>& w, const Rational& c) {
    if (c.is_zero()) return;
    auto it = t.find(w);
    if (it == t.end())
        t.emplace(w, c);
    else {
        it->second += c;
        if (it->second.is_zero()) t.erase(it);
    }
}

// iterated coproduct of a basis element into n legs (n >= 1)
Tensor iterated_coproduct(const FinBialgebra& H, int x, int n) {
    Tensor t;
    if (n == 1) {
        tadd(t, {x}, Rational(1));
        return t;
    }
    // expand the leftmost leg
    Tensor prev = iterated_coproduct(H, x, n - 1);
    Tensor out;
    for (const auto& [w, c] : prev) {
        for (const auto& [a, b, cc] : H.comul[w[0]]) {
            std::vector<int> nw{a, b};
            nw.insert(nw.end(), w.begin() + 1, w.end());
            tadd(out, nw, c * cc);
        }
    }
    return out;
}

int deg_of(const FinBialgebra& H, int i) { return H.space.degree(i); }

// left outer action h ⇀ (k_1..k_q): legs of Δ^{(q-1)}h multiply componentwise
Tensor left_action(const FinBialgebra& H, int h, const std::vector<int>& k) {
    const int q = static_cast<int>(k.size());
    Tensor out;
    if (q == 0) {
        if (!H.counit[h].is_zero()) tadd(out, {}, H.counit[h]);
        return out;
    }
    Tensor legs = iterated_coproduct(H, h, q);
    for (const auto& [w, c] : legs) {
        // Koszul: leg i crosses k_1..k_{i-1}
        long sgn = 0;
        {
            long acc = 0;
            for (int i = 0; i < q; ++i) {
                sgn += static_cast<long>(deg_of(H, w[i])) * acc;
                acc += deg_of(H, k[i]);
            }
        }
        // multiply legwise: expand products
        std::vector<std::pair<std::vector<int>, Rational>> words{{{}, Rational(sign_pow(sgn)) * c}};
        for (int i = 0; i < q; ++i) {
            std::vector<std::pair<std::vector<int>, Rational>> next;
            for (const auto& [pw, pc] : words)
                for (const auto& [m, mc] : H.mul[w[i]][k[i]]) {
                    auto nw = pw;
                    nw.push_back(m);
                    next.emplace_back(std::move(nw), pc * mc);
                }
            words = std::move(next);
        }
        for (const auto& [nw, nc] : words) tadd(out, nw, nc);
    }
    return out;
}

// right outer action (k_1..k_q) ↼ h
Tensor right_action(const FinBialgebra& H, const std::vector<int>& k, int h) {
    const int q = static_cast<int>(k.size());
    Tensor out;
    if (q == 0) {
        if (!H.counit[h].is_zero()) tadd(out, {}, H.counit[h]);
        return out;
    }
    Tensor legs = iterated_coproduct(H, h, q);
    for (const auto& [w, c] : legs) {
        // leg i crosses k_{i+1}..k_q on its way in from the right
        long sgn = 0;
        {
            long acc = 0;
            for (int i = q - 1; i >= 0; --i) {
                sgn += static_cast<long>(deg_of(H, w[i])) * acc;
                acc += deg_of(H, k[i]);
            }
        }
        std::vector<std::pair<std::vector<int>, Rational>> words{{{}, Rational(sign_pow(sgn)) * c}};
        for (int i = 0; i < q; ++i) {
            std::vector<std::pair<std::vector<int>, Rational>> next;
            for (const auto& [pw, pc] : words)
                for (const auto& [m, mc] : H.mul[k[i]][w[i]]) {
                    auto nw = pw;
                    nw.push_back(m);
                    next.emplace_back(std::move(nw), pc * mc);
                }
            words = std::move(next);
        }
        for (const auto& [nw, nc] : words) tadd(out, nw, nc);
    }
    return out;
}

Tensor apply_cell(const HopfCell& c, const std::vector<int>& tuple) {
    auto it = c.entries.find(tuple);
    if (it == c.entries.end()) return {};
    Tensor t;
    for (const auto& [w, coeff] : it->second) t.emplace(w, coeff);
    return t;
}

void cell_add(HopfCell& c, const std::vector<int>& tuple, const Tensor& t, const Rational& scale) {
    if (scale.is_zero()) return;
    for (const auto& [w, coeff] : t) {
        auto& slot = c.entries[tuple];
        auto it = slot.find(w);
        if (it == slot.end())
            slot.emplace(w, scale * coeff);
        else {
            it->second += scale * coeff;
            if (it->second.is_zero()) slot.erase(it);
        }
        if (slot.empty()) c.entries.erase(tuple);
    }
}

}  // namespace

ValidationReport validate_bialgebra(const FinBialgebra& H) {
    ValidationReport rep;
    const int d = H.dim();
    auto mulv = [&](const Vec& a, const Vec& b) {
        Vec r(d);
        for (int i = 0; i < d; ++i) {
            if (a[i].is_zero()) continue;
            for (int j = 0; j < d; ++j) {
                if (b[j].is_zero()) continue;
                for (const auto& [k, c] : H.mul[i][j]) r[k] += a[i] * b[j] * c;
            }
        }
        return r;
    };
    // associativity and unit
    for (int i = 0; i < d; ++i) {
        Vec ei(d);
        ei[i] = Rational(1);
        if (!(mulv(H.unit, ei) == ei) || !(mulv(ei, H.unit) == ei)) rep.fail("unit law fails");
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k) {
                Vec ej(d), ek(d);
                ej[j] = Rational(1);
                ek[k] = Rational(1);
                if (!(mulv(mulv(ei, ej), ek) == mulv(ei, mulv(ej, ek)))) rep.fail("associativity fails");
            }
    }
    // coassociativity
    for (int x = 0; x < d; ++x) {
        Tensor l = iterated_coproduct(H, x, 3);
        // right expansion: expand the rightmost leg of Δ
        Tensor r;
        for (const auto& [a, b, c] : H.comul[x])
            for (const auto& [b1, b2, c2] : H.comul[b]) tadd(r, {a, b1, b2}, c * c2);
        if (!(l == r)) rep.fail("coassociativity fails at " + std::to_string(x));
        // counit laws
        Vec left(d), right(d);
        for (const auto& [a, b, c] : H.comul[x]) {
            left[b] += H.counit[a] * c;
            right[a] += H.counit[b] * c;
        }
        Vec ex(d);
        ex[x] = Rational(1);
        if (!(left == ex) || !(right == ex)) rep.fail("counit law fails at " + std::to_string(x));
    }
    // coproduct is an algebra morphism (with the graded twist on H⊗H)
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            Tensor lhs;
            for (const auto& [k, c] : H.mul[i][j])
                for (const auto& [a, b, c2] : H.comul[k]) tadd(lhs, {a, b}, c * c2);
            Tensor rhs;
            for (const auto& [a1, b1, c1] : H.comul[i])
                for (const auto& [a2, b2, c2] : H.comul[j]) {
                    const int s = sign_pow(static_cast<long>(deg_of(H, b1)) * deg_of(H, a2));
                    for (const auto& [m1, mc1] : H.mul[a1][a2])
                        for (const auto& [m2, mc2] : H.mul[b1][b2])
                            tadd(rhs, {m1, m2}, Rational(s) * c1 * c2 * mc1 * mc2);
                }
            if (!(lhs == rhs)) rep.fail("coproduct not an algebra morphism at (" + std::to_string(i) + "," +
                                        std::to_string(j) + ")");
        }
    return rep;
}

HopfCell hopf_zero(int p, int q) {
    HopfCell c;
    c.p = p;
    c.q = q;
    return c;
}

HopfCell hopf_add(const HopfCell& a, const HopfCell& b) {
    if (a.p != b.p || a.q != b.q) throw input_error("hopf_add: bidegree mismatch");
    HopfCell r(a);
    for (const auto& [t, vals] : b.entries)
        for (const auto& [w, c] : vals) {
            auto& slot = r.entries[t];
            auto it = slot.find(w);
            if (it == slot.end())
                slot.emplace(w, c);
            else {
                it->second += c;
                if (it->second.is_zero()) slot.erase(it);
            }
            if (slot.empty()) r.entries.erase(t);
        }
    return r;
}

HopfCell hopf_scale(const Rational& c, const HopfCell& a) {
    HopfCell r = hopf_zero(a.p, a.q);
    if (c.is_zero()) return r;
    for (const auto& [t, vals] : a.entries)
        for (const auto& [w, x] : vals) r.entries[t].emplace(w, c * x);
    return r;
}

bool hopf_equal(const HopfCell& a, const HopfCell& b) {
    return a.p == b.p && a.q == b.q && a.entries == b.entries;
}

std::optional<int> hopf_cell_degree(const FinBialgebra& H, const HopfCell& c) {
    std::optional<int> deg;
    for (const auto& [t, vals] : c.entries) {
        int din = 0;
        for (int i : t) din += deg_of(H, i);
        for (const auto& [w, x] : vals) {
            (void)x;
            int dout = 0;
            for (int i : w) dout += deg_of(H, i);
            int total = c.p + c.q - 2 + (dout - din);
            if (!deg)
                deg = total;
            else if (*deg != total)
                return std::nullopt;
        }
    }
    return deg ? deg : std::optional<int>(2);
}

HopfCell hopf_d_alg(const FinBialgebra& H, const HopfCell& c) {
    const int d = H.dim();
    const int p = c.p;
    HopfCell out = hopf_zero(p + 1, c.q);
    std::vector<int> t(p + 1, 0);
    do {
        // h_0 ⇀ D(h_1..h_p), h_0 crossing D in the graded case
        {
            std::vector<int> rest(t.begin() + 1, t.end());
            Tensor Dv = apply_cell(c, rest);
            Tensor acc;
            for (const auto& [w, coeff] : Dv) {
                Tensor a = left_action(H, t[0], w);
                for (const auto& [nw, nc] : a) tadd(acc, nw, coeff * nc);
            }
            cell_add(out, t, acc, Rational(1));
        }
        // middle merges; the faces do not permute arguments, so the signs are
        // the plain simplicial ones
        for (int i = 1; i <= p; ++i) {
            for (const auto& [m, mc] : H.mul[t[i - 1]][t[i]]) {
                std::vector<int> tup;
                for (int l = 0; l < i - 1; ++l) tup.push_back(t[l]);
                tup.push_back(m);
                for (int l = i + 1; l <= p; ++l) tup.push_back(t[l]);
                Tensor Dv = apply_cell(c, tup);
                cell_add(out, t, Dv, Rational(sign_pow(i)) * mc);
            }
        }
        // D(h_0..h_{p-1}) ↼ h_p, h_p crossing the inputs in the graded case
        {
            std::vector<int> rest(t.begin(), t.end() - 1);
            Tensor Dv = apply_cell(c, rest);
            Tensor acc;
            for (const auto& [w, coeff] : Dv) {
                Tensor a = right_action(H, w, t[p]);
                for (const auto& [nw, nc] : a) tadd(acc, nw, coeff * nc);
            }
            cell_add(out, t, acc, Rational(sign_pow(p + 1)));
        }
    } while (tuple_next(t, d));
    return out;
}

namespace {

// dual bialgebra: multiplication = coproduct transpose, coproduct =
// multiplication transpose; degrees negated
FinBialgebra dual_bialgebra(const FinBialgebra& H) {
    const int d = H.dim();
    FinBialgebra D;
    std::vector<std::string> labels;
    std::vector<int> degs;
    for (int i = 0; i < d; ++i) {
        labels.push_back(H.space.label(i) + "^");
        degs.push_back(-H.space.degree(i));
    }
    D.space = GradedSpace(labels, degs);
    D.mul.assign(d, std::vector<SparseVec>(d));
    D.comul.assign(d, {});
    for (int x = 0; x < d; ++x)
        for (const auto& [a, b, c] : H.comul[x]) D.mul[a][b].emplace_back(x, c);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (const auto& [k, c] : H.mul[i][j]) D.comul[k].emplace_back(i, j, c);
    D.unit = H.counit;
    D.counit = H.unit;
    D.differential = H.differential;
    return D;
}

// no-crossing pairing sign of a tuple against its dual tuple
int tuple_pair_sign(const FinBialgebra& H, const std::vector<int>& t) {
    long e = 0;
    for (size_t i = 0; i < t.size(); ++i)
        for (size_t j = i + 1; j < t.size(); ++j)
            e += static_cast<long>(deg_of(H, t[i])) * deg_of(H, t[j]);
    return sign_pow(e);
}

HopfCell transpose_cell(const FinBialgebra& H, const HopfCell& c) {
    HopfCell t = hopf_zero(c.q, c.p);
    for (const auto& [in, vals] : c.entries)
        for (const auto& [out, coeff] : vals) {
            Rational s(tuple_pair_sign(H, in) * tuple_pair_sign(H, out));
            auto& slot = t.entries[out];
            auto it = slot.find(in);
            if (it == slot.end())
                slot.emplace(in, s * coeff);
            else
                it->second += s * coeff;
        }
    return t;
}

}  // namespace

HopfCell hopf_d_coalg(const FinBialgebra& H, const HopfCell& c) {
    FinBialgebra D = dual_bialgebra(H);
    HopfCell tc = transpose_cell(H, c);
    HopfCell dtc = hopf_d_alg(D, tc);
    HopfCell back = transpose_cell(D, dtc);
    return back;
}

HopfCell hopf_d_delta(const FinBialgebra& H, const HopfCell& c) {
    HopfCell out = hopf_zero(c.p, c.q);
    if (H.differential.empty()) return out;
    const int d = H.dim();
    auto dd = hopf_cell_degree(H, c);
    const long cdeg = dd ? *dd : 0;
    std::vector<int> t(c.p, 0);
    do {
        // delta applied to the output legs
        Tensor Dv = apply_cell(c, t);
        Tensor acc;
        for (const auto& [w, coeff] : Dv) {
            long pre = 0;
            for (size_t i = 0; i < w.size(); ++i) {
                for (const auto& [k, cc] : H.differential[w[i]]) {
                    auto nw = w;
                    nw[i] = k;
                    tadd(acc, nw, Rational(sign_pow(pre)) * coeff * cc);
                }
                pre += deg_of(H, w[i]);
            }
        }
        cell_add(out, t, acc, Rational(1));
        // minus (-1)^{|D|} D(delta on inputs)
        long pre = 0;
        for (int i = 0; i < c.p; ++i) {
            for (const auto& [k, cc] : H.differential[t[i]]) {
                auto nt = t;
                nt[i] = k;
                Tensor Dv2 = apply_cell(c, nt);
                cell_add(out, t, Dv2, Rational(-sign_pow(cdeg + pre)) * cc);
            }
            pre += deg_of(H, t[i]);
        }
    } while (tuple_next(t, d));
    return out;
}

}  // namespace gerstlab

#include <gerstlab/chains.hpp>

#include <algorithm>

namespace gerstlab {

void ChainElement::add_term(const std::vector<int>& word, const Rational& c) {
    if (static_cast<int>(word.size()) != degree_ + 1) throw input_error("ChainElement: word length mismatch");
    if (c.is_zero()) return;
    auto it = terms_.find(word);
    if (it == terms_.end())
        terms_.emplace(word, c);
    else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

ChainElement operator+(const ChainElement& a, const ChainElement& b) {
    if (a.A_ != b.A_ || a.degree_ != b.degree_) throw input_error("ChainElement: +/- mismatch");
    ChainElement r(a);
    for (const auto& [w, c] : b.terms_) r.add_term(w, c);
    return r;
}

ChainElement operator-(const ChainElement& a, const ChainElement& b) {
    if (a.A_ != b.A_ || a.degree_ != b.degree_) throw input_error("ChainElement: +/- mismatch");
    ChainElement r(a);
    for (const auto& [w, c] : b.terms_) r.add_term(w, -c);
    return r;
}

ChainElement operator*(const Rational& c, const ChainElement& a) {
    ChainElement r(a.algebra(), a.degree());
    if (c.is_zero()) return r;
    for (const auto& [w, x] : a.terms()) r.add_term(w, c * x);
    return r;
}

bool operator==(const ChainElement& a, const ChainElement& b) {
    return a.A_ == b.A_ && a.degree_ == b.degree_ && a.terms_ == b.terms_;
}

namespace {

// index of the first nonzero unit coordinate; the interior-slot projection
// kills e_{i0} in favour of the other basis directions
int unit_support(const Algebra& A) {
    for (int i = 0; i < A.dim(); ++i)
        if (!A.unit()[i].is_zero()) return i;
    throw input_error("Algebra: zero unit");
}

// pi(e_j) as a sparse vector; pi(unit) = 0, identity on e_j (j != i0)
SparseVec unit_proj(const Algebra& A, int j) {
    const int i0 = unit_support(A);
    if (j != i0) return {{j, Rational(1)}};
    SparseVec out;
    const Rational& u0 = A.unit()[i0];
    for (int k = 0; k < A.dim(); ++k) {
        if (k == i0) continue;
        const Rational& uk = A.unit()[k];
        if (!uk.is_zero()) out.emplace_back(k, -(uk / u0));
    }
    return out;
}

long eta(const Algebra& A, int basis) { return static_cast<long>(A.degree(basis)) - 1; }

}  // namespace

ChainElement boundary_b(const ChainElement& c) {
    const Algebra& A = c.algebra();
    const int n = c.degree();
    if (n == 0) return ChainElement(A, 0);  // b vanishes on degree 0
    ChainElement r(A, std::max(n - 1, 0));
    for (const auto& [w, coeff] : c.terms()) {
        long prefix = 0;
        for (int i = 0; i < n; ++i) {
            // merge slots i, i+1 with the multiplication twist (-1)^{|a_i|}
            const int s = sign_pow(prefix + A.degree(w[i]));
            for (const auto& [k, mc] : A.mul_basis(w[i], w[i + 1])) {
                std::vector<int> nw;
                nw.reserve(n);
                nw.insert(nw.end(), w.begin(), w.begin() + i);
                nw.push_back(k);
                nw.insert(nw.end(), w.begin() + i + 2, w.end());
                r.add_term(nw, Rational(s) * mc * coeff);
            }
            prefix += eta(A, w[i]);
        }
        // wrap: a_n rotates to the front and merges with a_0
        const int s = sign_pow(eta(A, w[n]) * prefix + A.degree(w[n]));
        for (const auto& [k, mc] : A.mul_basis(w[n], w[0])) {
            std::vector<int> nw;
            nw.reserve(n);
            nw.push_back(k);
            nw.insert(nw.end(), w.begin() + 1, w.begin() + n);
            r.add_term(nw, Rational(s) * mc * coeff);
        }
    }
    return r;
}

ChainElement normalize_project(const ChainElement& c) {
    const Algebra& A = c.algebra();
    ChainElement r(A, c.degree());
    for (const auto& [w, coeff] : c.terms()) {
        // expand interior slots through pi; slot 0 is untouched
        std::vector<std::pair<std::vector<int>, Rational>> acc{{{w[0]}, coeff}};
        bool dead = false;
        for (size_t j = 1; j < w.size() && !dead; ++j) {
            SparseVec img = unit_proj(A, w[j]);
            if (img.empty()) {
                dead = true;
                break;
            }
            std::vector<std::pair<std::vector<int>, Rational>> next;
            for (const auto& [pw, pc] : acc)
                for (const auto& [k, kc] : img) {
                    auto nw = pw;
                    nw.push_back(k);
                    next.emplace_back(std::move(nw), pc * kc);
                }
            acc = std::move(next);
        }
        if (dead) continue;
        for (const auto& [nw, nc] : acc) r.add_term(nw, nc);
    }
    return r;
}

ChainElement boundary_b_normalized(const ChainElement& c) {
    if (c.degree() == 0) return ChainElement(c.algebra(), 0);
    return normalize_project(boundary_b(c));
}

ChainElement connes_B(const ChainElement& c) {
    const Algebra& A = c.algebra();
    const int n = c.degree();
    ChainElement proj = normalize_project(c);
    ChainElement out(A, n + 1);
    for (const auto& [w, coeff] : proj.terms()) {
        long total_eta = 0;
        for (int j = 0; j <= n; ++j) total_eta += eta(A, w[j]);
        long prefix = 0;
        for (int i = 0; i <= n; ++i) {
            // 1 ⊗ a_i ⊗ ... ⊗ a_n ⊗ a_0 ⊗ ... ⊗ a_{i-1}
            const int s = sign_pow(prefix * (total_eta - prefix));
            for (int k = 0; k < A.dim(); ++k) {
                const Rational& uk = A.unit()[k];
                if (uk.is_zero()) continue;
                std::vector<int> nw;
                nw.reserve(n + 2);
                nw.push_back(k);
                nw.insert(nw.end(), w.begin() + i, w.end());
                nw.insert(nw.end(), w.begin(), w.begin() + i);
                out.add_term(nw, Rational(s) * uk * coeff);
            }
            prefix += eta(A, w[i]);
        }
    }
    return normalize_project(out);
}

ChainElement contraction_iD(const Cochain& D, const ChainElement& c) {
    if (&D.algebra() != &c.algebra()) throw input_error("contraction_iD: algebra mismatch");
    const Algebra& A = c.algebra();
    const int n = c.degree(), dd = D.arity();
    if (dd > n) return ChainElement(A, std::max(n - dd, 0));
    ChainElement r(A, n - dd);
    for (const auto& [w, coeff] : c.terms()) {
        std::vector<int> sub(w.begin() + 1, w.begin() + 1 + dd);
        const Vec& v = D.entry(sub);
        for (int k = 0; k < A.dim(); ++k) {
            if (v[k].is_zero()) continue;
            for (const auto& [p, pc] : A.mul_basis(w[0], k)) {
                std::vector<int> nw;
                nw.reserve(n - dd + 1);
                nw.push_back(p);
                nw.insert(nw.end(), w.begin() + 1 + dd, w.end());
                r.add_term(nw, v[k] * pc * coeff);
            }
        }
    }
    return r;
}

ChainElement lie_LD(const Cochain& D, const ChainElement& c) {
    if (&D.algebra() != &c.algebra()) throw input_error("lie_LD: algebra mismatch");
    const Algebra& A = c.algebra();
    const int n = c.degree(), dd = D.arity();
    if (dd > n + 1) return ChainElement(A, std::max(n - dd + 1, 0));
    ChainElement r(A, n - dd + 1);
    for (const auto& [w, coeff] : c.terms()) {
        long prefix = 0;
        for (int s = 0; s <= n; ++s) {
            if (s + dd <= n + 1) {
                // straight window a_s .. a_{s+dd-1}
                std::vector<int> sub(w.begin() + s, w.begin() + s + dd);
                int in_deg = 0;
                for (int i : sub) in_deg += A.degree(i);
                const Vec& v = D.entry(sub);
                for (int k = 0; k < A.dim(); ++k) {
                    if (v[k].is_zero()) continue;
                    const long norm = dd + (A.degree(k) - in_deg) - 1;
                    const int sg = sign_pow(norm * prefix);
                    std::vector<int> nw;
                    nw.reserve(n - dd + 2);
                    nw.insert(nw.end(), w.begin(), w.begin() + s);
                    nw.push_back(k);
                    nw.insert(nw.end(), w.begin() + s + dd, w.end());
                    r.add_term(nw, Rational(sg) * v[k] * coeff);
                }
            } else {
                // wrap window a_s .. a_n, a_0 .. a_{e-1}
                const int e = dd - (n + 1 - s);
                std::vector<int> sub(w.begin() + s, w.end());
                sub.insert(sub.end(), w.begin(), w.begin() + e);
                long suffix = 0;
                for (int j = s; j <= n; ++j) suffix += eta(A, w[j]);
                const int rot = sign_pow(suffix * prefix);
                const Vec& v = D.entry(sub);
                for (int k = 0; k < A.dim(); ++k) {
                    if (v[k].is_zero()) continue;
                    std::vector<int> nw;
                    nw.reserve(n - dd + 2);
                    nw.push_back(k);
                    nw.insert(nw.end(), w.begin() + e, w.begin() + s);
                    r.add_term(nw, Rational(rot) * v[k] * coeff);
                }
            }
            prefix += eta(A, w[s]);
        }
    }
    return r;
}

NegativeCyclicWindow negative_cyclic_window(const Algebra& A, int n_max, int u_max) {
    if (u_max < 1) throw input_error("negative_cyclic_window: u_max < 1");
    if (n_max < 0) throw input_error("negative_cyclic_window: n_max < 0");
    const int d = A.dim();
    const int i0 = unit_support(A);
    const int n_int = n_max;

    // normalized basis per chain degree: slot 0 free, interior slots avoid i0
    auto basis_of = [&](int n) {
        std::vector<std::vector<int>> words;
        std::vector<int> w(n + 1, 0);
        while (true) {
            bool ok = true;
            for (size_t j = 1; j < w.size(); ++j)
                if (w[j] == i0) ok = false;
            if (ok) words.push_back(w);
            int i = n;
            for (; i >= 0; --i) {
                if (++w[i] < d) break;
                w[i] = 0;
            }
            if (i < 0) break;
        }
        return words;
    };

    std::vector<std::vector<std::vector<int>>> bases;
    std::vector<std::map<std::vector<int>, int>> word_index;
    for (int n = 0; n <= n_int; ++n) {
        bases.push_back(basis_of(n));
        word_index.emplace_back();
        for (size_t i = 0; i < bases[n].size(); ++i) word_index[n].emplace(bases[n][i], static_cast<int>(i));
    }

    struct Cell {
        int i, n, word;
    };
    auto cells_of = [&](int k) {
        std::vector<Cell> cells;
        for (int i = 0; i < u_max; ++i) {
            const int n = k + 2 * i;
            if (n < 0 || n > n_int) continue;
            for (size_t w = 0; w < bases[n].size(); ++w) cells.push_back({i, n, static_cast<int>(w)});
        }
        return cells;
    };

    const int k_min = -2 * (u_max - 1), k_max_int = n_int;
    std::map<int, std::vector<Cell>> cells;
    std::map<int, std::map<std::tuple<int, int, int>, int>> cell_index;
    for (int k = k_min; k <= k_max_int; ++k) {
        cells[k] = cells_of(k);
        for (size_t c = 0; c < cells[k].size(); ++c)
            cell_index[k][{cells[k][c].i, cells[k][c].n, cells[k][c].word}] = static_cast<int>(c);
    }

    std::map<int, Matrix> diff;  // d_k : degree k -> degree k-1
    for (int k = k_min; k <= k_max_int; ++k) {
        const auto& src = cells[k];
        const auto& dst = cells.count(k - 1) ? cells[k - 1] : std::vector<Cell>{};
        Matrix M(static_cast<int>(dst.size()), static_cast<int>(src.size()));
        for (size_t c = 0; c < src.size(); ++c) {
            const Cell& cell = src[c];
            ChainElement x(A, cell.n);
            x.add_term(bases[cell.n][cell.word], Rational(1));
            if (cell.n > 0 && k - 1 >= k_min) {
                ChainElement bx = boundary_b_normalized(x);
                for (const auto& [w, cf] : bx.terms()) {
                    auto it = cell_index[k - 1].find({cell.i, cell.n - 1, word_index[cell.n - 1].at(w)});
                    if (it != cell_index[k - 1].end()) M.at(it->second, static_cast<int>(c)) += cf;
                }
            }
            if (cell.i + 1 < u_max && cell.n + 1 <= n_int && k - 1 >= k_min) {
                ChainElement Bx = connes_B(x);
                for (const auto& [w, cf] : Bx.terms()) {
                    auto it = cell_index[k - 1].find({cell.i + 1, cell.n + 1, word_index[cell.n + 1].at(w)});
                    if (it != cell_index[k - 1].end()) M.at(it->second, static_cast<int>(c)) += cf;
                }
            }
        }
        diff.emplace(k, std::move(M));
    }

    NegativeCyclicWindow out;
    out.u_max = u_max;
    out.n_max = n_max;
    out.square_zero = true;
    // (b+uB)^2 = 0 on every cell whose two-step paths stay inside the window;
    // B raises the chain degree, so cells at the very top edge are excluded
    std::map<int, std::vector<char>> complete;
    for (int k = k_min; k <= k_max_int; ++k) {
        complete[k].assign(cells[k].size(), 0);
        for (size_t c = 0; c < cells[k].size(); ++c)
            if (cells[k][c].i + 1 >= u_max || cells[k][c].n + 1 <= n_int) complete[k][c] = 1;
    }
    for (int k = k_min + 1; k <= k_max_int; ++k) {
        Matrix sq = diff.at(k - 1).mul(diff.at(k));
        for (size_t c = 0; c < cells[k].size(); ++c) {
            if (!complete[k][c]) continue;
            for (int r = 0; r < sq.rows(); ++r)
                if (!sq.at(r, static_cast<int>(c)).is_zero()) out.square_zero = false;
        }
    }

    // homology is reported at spots where the truncated window composes to zero
    for (int k = k_min; k < k_max_int; ++k) {
        if (!diff.at(k).mul(diff.at(k + 1)).is_zero()) continue;
        Cohomology h = cohomology_at(diff.at(k + 1), diff.at(k));
        out.homology_dims.emplace_back(k, h.dimension);
    }
    return out;
}

}  // namespace gerstlab

#include <gerstlab/mdc.hpp>

#include <algorithm>
#include <functional>

namespace gerstlab {

void MultiDiffCochain::add_term(const std::vector<int>& slot_orders, const Poly& coeff) {
    if (static_cast<int>(slot_orders.size()) != arity * nvars)
        throw input_error("MultiDiffCochain: slot orders length mismatch");
    if (coeff.is_zero()) return;
    auto it = terms.find(slot_orders);
    if (it == terms.end())
        terms.emplace(slot_orders, coeff);
    else {
        it->second = it->second + coeff;
        if (it->second.is_zero()) terms.erase(it);
    }
}

Poly MultiDiffCochain::evaluate(const std::vector<Poly>& args) const {
    if (static_cast<int>(args.size()) != arity) throw input_error("MultiDiffCochain: wrong argument count");
    Poly out(nvars);
    for (const auto& [key, coeff] : terms) {
        Poly prod = coeff;
        for (int s = 0; s < arity && !prod.is_zero(); ++s) {
            Poly a = args[s];
            for (int v = 0; v < nvars; ++v)
                for (int r = 0; r < key[s * nvars + v]; ++r) a = a.derivative(v);
            prod = prod * a;
        }
        out = out + prod;
    }
    return out;
}

bool operator==(const MultiDiffCochain& a, const MultiDiffCochain& b) {
    return a.nvars == b.nvars && a.arity == b.arity && a.terms == b.terms;
}

MultiDiffCochain operator+(const MultiDiffCochain& a, const MultiDiffCochain& b) {
    if (a.nvars != b.nvars || a.arity != b.arity) throw input_error("MultiDiffCochain: +/- mismatch");
    MultiDiffCochain r(a);
    for (const auto& [k, p] : b.terms) r.add_term(k, p);
    return r;
}

MultiDiffCochain operator-(const MultiDiffCochain& a, const MultiDiffCochain& b) {
    return a + (Rational(-1) * b);
}

MultiDiffCochain operator*(const Rational& c, const MultiDiffCochain& a) {
    MultiDiffCochain r(a.nvars, a.arity);
    for (const auto& [k, p] : a.terms) r.add_term(k, c * p);
    return r;
}

MultiDiffCochain mdc_multiplication(int nvars) {
    MultiDiffCochain m(nvars, 2);
    m.add_term(std::vector<int>(2 * nvars, 0), Poly::constant(nvars, Rational(1)));
    return m;
}

namespace {

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

// all ways to split multi-index alpha into `parts` ordered nonnegative pieces,
// with the multinomial coefficient of the split
void decompose(const std::vector<int>& alpha, int parts,
               const std::function<void(const std::vector<std::vector<int>>&, const Rational&)>& emit) {
    const int nv = static_cast<int>(alpha.size());
    std::vector<std::vector<int>> cur(parts, std::vector<int>(nv, 0));
    // per-variable compositions, recursively
    std::function<void(int, Rational)> go = [&](int v, Rational coeff) {
        if (v == nv) {
            emit(cur, coeff);
            return;
        }
        // compositions of alpha[v] into `parts` parts with multinomial weights
        std::vector<int> comp(parts, 0);
        std::function<void(int, int, Rational)> comps = [&](int pos, int left, Rational c) {
            if (pos == parts - 1) {
                comp[pos] = left;
                // multinomial alpha[v]! / prod comp!
                Rational mult(1);
                long num = alpha[v];
                for (int p = 0; p < parts; ++p) {
                    for (int t = 1; t <= comp[p]; ++t) {
                        mult *= Rational(num) / Rational(t);
                        --num;
                    }
                }
                for (int p = 0; p < parts; ++p) cur[p][v] = comp[p];
                go(v + 1, c * mult);
                return;
            }
            for (int take = 0; take <= left; ++take) {
                comp[pos] = take;
                comps(pos + 1, left - take, c);
            }
        };
        comps(0, alpha[v], Rational(1));
    };
    go(0, Rational(1));
}

}  // namespace

MultiDiffCochain brace_mdc(const MultiDiffCochain& D0, const std::vector<MultiDiffCochain>& args) {
    const int nv = D0.nvars;
    for (const auto& a : args)
        if (a.nvars != nv) throw input_error("brace_mdc: nvars mismatch");
    const int m = static_cast<int>(args.size());
    const int n0 = D0.arity;
    int n_res = n0 - m;
    for (const auto& a : args) n_res += a.arity;
    if (m > n0) return MultiDiffCochain(nv, std::max(n_res, 0));

    MultiDiffCochain res(nv, n_res);
    std::vector<int> slots(m);
    for (int i = 0; i < m; ++i) slots[i] = i;

    do {
        // Getzler-Jones sign over the ungraded polynomial algebra:
        // (-1)^{sum_p (arity_p - 1) * (original args before slot of p)}
        long sgn_exp = 0;
        {
            int before = 0, next = 0;
            for (int s = 0; s < n0; ++s) {
                if (next < m && slots[next] == s) {
                    sgn_exp += static_cast<long>(args[next].arity - 1) * before;
                    before += args[next].arity;
                    ++next;
                } else {
                    ++before;
                }
            }
        }
        const Rational outer_sign(sign_pow(sgn_exp));

        for (const auto& [key0, coeff0] : D0.terms) {
            // expand each inserted slot via Leibniz; recursion over insertions
            struct Slot {
                bool inserted;
                int arg_index;               // for inserted
                std::vector<int> alpha;      // D0's derivative on this slot
            };
            std::vector<Slot> layout(n0);
            {
                int next = 0;
                for (int s = 0; s < n0; ++s) {
                    layout[s].alpha.assign(key0.begin() + s * nv, key0.begin() + (s + 1) * nv);
                    if (next < m && slots[next] == s) {
                        layout[s].inserted = true;
                        layout[s].arg_index = next++;
                    } else {
                        layout[s].inserted = false;
                    }
                }
            }
            std::vector<int> out_key;
            out_key.reserve(static_cast<size_t>(n_res) * nv);
            std::function<void(int, Poly)> walk = [&](int s, Poly acc) {
                if (acc.is_zero()) return;
                if (s == n0) {
                    res.add_term(out_key, outer_sign * acc);
                    return;
                }
                const Slot& sl = layout[s];
                if (!sl.inserted) {
                    for (int v = 0; v < nv; ++v) out_key.push_back(sl.alpha[v]);
                    walk(s + 1, acc);
                    out_key.resize(out_key.size() - nv);
                    return;
                }
                const MultiDiffCochain& E = args[sl.arg_index];
                for (const auto& [keyE, coeffE] : E.terms) {
                    // distribute alpha over (coefficient of E) and E's slots
                    decompose(sl.alpha, E.arity + 1,
                              [&](const std::vector<std::vector<int>>& parts, const Rational& mult) {
                                  Poly g = coeffE;
                                  for (int v = 0; v < nv; ++v)
                                      for (int r = 0; r < parts[0][v]; ++r) g = g.derivative(v);
                                  if (g.is_zero()) return;
                                  const size_t base = out_key.size();
                                  for (int es = 0; es < E.arity; ++es)
                                      for (int v = 0; v < nv; ++v)
                                          out_key.push_back(keyE[es * nv + v] + parts[es + 1][v]);
                                  walk(s + 1, mult * (acc * g));
                                  out_key.resize(base);
                              });
                }
            };
            walk(0, coeff0);
        }
    } while (comb_next(slots, n0));
    return res;
}

MultiDiffCochain mdc_cup(const MultiDiffCochain& D, const MultiDiffCochain& E) {
    return Rational(sign_pow(D.arity)) * brace_mdc(mdc_multiplication(D.nvars), {D, E});
}

MultiDiffCochain mdc_bracket(const MultiDiffCochain& D, const MultiDiffCochain& E) {
    return brace_mdc(D, {E}) -
           Rational(sign_pow(static_cast<long>(D.arity - 1) * (E.arity - 1))) * brace_mdc(E, {D});
}

MultiDiffCochain mdc_delta(const MultiDiffCochain& D) { return mdc_bracket(mdc_multiplication(D.nvars), D); }

MultiDiffCochain hkr(const Polyvector& pi) {
    const int nv = pi.nvars;
    const int k = pi.degree;
    if (k < 0) return MultiDiffCochain(nv, 0);  // zero object in formal negative degree
    MultiDiffCochain out(nv, k);
    // 1/k!
    Rational norm(1);
    for (int t = 2; t <= k; ++t) norm /= Rational(t);
    std::vector<int> perm(k);
    for (const auto& [idx, coeff] : pi.comps) {
        for (int i = 0; i < k; ++i) perm[i] = i;
        do {
            long inv = 0;
            for (int i = 0; i < k; ++i)
                for (int j = i + 1; j < k; ++j)
                    if (perm[i] > perm[j]) ++inv;
            std::vector<int> key(static_cast<size_t>(k) * nv, 0);
            for (int s = 0; s < k; ++s) key[static_cast<size_t>(s) * nv + idx[perm[s]]] = 1;
            out.add_term(key, Rational(sign_pow(inv)) * norm * coeff);
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return out;
}

HkrCompatReport hkr_bracket_compat(const Polyvector& pi, const Polyvector& phi, int coeff_degree_cap, int order_cap) {
    HkrCompatReport rep;
    rep.coeff_degree_cap = coeff_degree_cap;
    rep.order_cap = order_cap;
    const int nv = pi.nvars;
    // the Schouten orientation pinned by the contraction/Lie-derivative suite
    // translates to the Gerstenhaber side through sigma = (-1)^{(|pi|+1)(|phi|+1)}
    const Rational sigma(sign_pow(static_cast<long>(pi.degree + 1) * (phi.degree + 1)));
    MultiDiffCochain defect = hkr(schouten(pi, phi)) - sigma * mdc_bracket(hkr(pi), hkr(phi));
    if (defect.is_zero()) {
        rep.status = HkrCompatReport::Status::zero_defect;
        rep.witness = MultiDiffCochain(nv, std::max(defect.arity - 1, 0));
        return rep;
    }
    const int wa = defect.arity - 1;
    if (wa < 0) {
        rep.status = HkrCompatReport::Status::inconclusive;
        return rep;
    }

    // witness basis: slot orders with |order| <= order_cap per slot, coefficient
    // monomials of total degree <= coeff_degree_cap
    std::vector<std::vector<int>> slot_orders;  // per-slot multi-indices
    {
        std::vector<int> a(nv, 0);
        std::function<void(int, int)> gen = [&](int v, int left) {
            if (v == nv) {
                slot_orders.push_back(a);
                return;
            }
            for (int t = 0; t <= left; ++t) {
                a[v] = t;
                gen(v + 1, left - t);
            }
            a[v] = 0;
        };
        gen(0, order_cap);
    }
    std::vector<std::vector<int>> monos;
    {
        std::vector<int> e(nv, 0);
        std::function<void(int, int)> gen = [&](int v, int left) {
            if (v == nv) {
                monos.push_back(e);
                return;
            }
            for (int t = 0; t <= left; ++t) {
                e[v] = t;
                gen(v + 1, left - t);
            }
            e[v] = 0;
        };
        gen(0, coeff_degree_cap);
    }

    struct BasisElt {
        std::vector<int> key;
        std::vector<int> mono;
    };
    std::vector<BasisElt> basis;
    {
        std::vector<int> key;
        std::function<void(int)> gen = [&](int s) {
            if (s == wa) {
                for (const auto& mo : monos) basis.push_back({key, mo});
                return;
            }
            for (const auto& so : slot_orders) {
                key.insert(key.end(), so.begin(), so.end());
                gen(s + 1);
                key.resize(key.size() - nv);
            }
        };
        gen(0);
    }

    // rows: union of (key, monomial) support of delta(basis) and of the defect
    std::map<std::pair<std::vector<int>, std::vector<int>>, int> row_index;
    auto row_of = [&](const std::vector<int>& key, const std::vector<int>& mono) {
        auto it = row_index.find({key, mono});
        if (it != row_index.end()) return it->second;
        int idx = static_cast<int>(row_index.size());
        row_index.emplace(std::make_pair(key, mono), idx);
        return idx;
    };
    std::vector<std::map<int, Rational>> cols;
    for (const auto& be : basis) {
        MultiDiffCochain w(nv, wa);
        Poly mono(nv);
        mono.add_term(be.mono, Rational(1));
        w.add_term(be.key, mono);
        MultiDiffCochain dw = mdc_delta(w);
        std::map<int, Rational> col;
        for (const auto& [key, p] : dw.terms)
            for (const auto& [e, c] : p.terms()) col[row_of(key, e)] = c;
        cols.push_back(std::move(col));
    }
    std::map<int, Rational> rhs_col;
    for (const auto& [key, p] : defect.terms)
        for (const auto& [e, c] : p.terms()) rhs_col[row_of(key, e)] = c;

    const int R = static_cast<int>(row_index.size());
    Matrix M(R, static_cast<int>(basis.size()));
    for (size_t j = 0; j < cols.size(); ++j)
        for (const auto& [r, c] : cols[j]) M.at(r, static_cast<int>(j)) = c;
    Vec rhs(R);
    for (const auto& [r, c] : rhs_col) rhs[r] = c;

    auto sol = solve(M, rhs);
    if (!sol) {
        rep.status = HkrCompatReport::Status::inconclusive;
        return rep;
    }
    rep.status = HkrCompatReport::Status::solved;
    rep.witness = MultiDiffCochain(nv, wa);
    for (size_t j = 0; j < basis.size(); ++j) {
        if ((*sol)[j].is_zero()) continue;
        Poly mono(nv);
        mono.add_term(basis[j].mono, (*sol)[j]);
        rep.witness.add_term(basis[j].key, mono);
    }
    return rep;
}

}  // namespace gerstlab

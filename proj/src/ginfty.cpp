#include <gerstlab/ginfty.hpp>

#include <algorithm>
#include <functional>

namespace gerstlab {

namespace {

std::string shape_str(const std::vector<int>& s) {
    std::string r = "(";
    for (size_t i = 0; i < s.size(); ++i) {
        if (i) r += ",";
        r += std::to_string(s[i]);
    }
    return r + ")";
}

}  // namespace

GinftyEngine::GinftyEngine(GradedSpace A, int weight_cap) : A_(std::move(A)), W_(weight_cap) {
    std::vector<std::string> vlabels;
    std::vector<int> vdeg;
    for (int i = 0; i < A_.dim(); ++i) {
        vlabels.push_back(A_.label(i) + "'");
        vdeg.push_back(1 - A_.degree(i));
    }
    free_ = std::make_shared<FreeLie>(GradedSpace(vlabels, vdeg), W_);
    lambda_ = std::make_shared<LambdaLie>(lie_data_from_free(*free_), W_);
}

Rational GinftyEngine::pair_monomial_tuple(int mono, const std::vector<int>& shape,
                                           const std::vector<int>& tuple) const {
    const auto& factors = lambda_->monomial(mono);
    const int n = static_cast<int>(shape.size());
    if (static_cast<int>(factors.size()) != n) return Rational(0);

    // block boundaries in the flat tuple
    std::vector<int> off(n + 1, 0);
    for (int j = 0; j < n; ++j) off[j + 1] = off[j] + shape[j];
    // shifted degree sums per block
    std::vector<long> blockdeg(n, 0);
    for (int j = 0; j < n; ++j)
        for (int t = off[j]; t < off[j + 1]; ++t) blockdeg[j] += A_.degree(tuple[t]) - 1;

    // pair one Lie factor against one block
    auto pair_lie = [&](int word_idx, int j) {
        Rational acc;
        const FreeLie& F = *free_;
        if (F.weight(word_idx) != shape[j]) return acc;
        for (const auto& [w, c] : F.expansion(word_idx)) {
            bool match = true;
            for (int t = 0; t < shape[j]; ++t)
                if (w[t] != tuple[off[j] + t]) {
                    match = false;
                    break;
                }
            if (match) acc += c;
        }
        return acc;
    };

    // sum over assignments of factors to blocks
    Rational total;
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::sort(perm.begin(), perm.end());
    do {
        bool shapes_ok = true;
        for (int j = 0; j < n; ++j)
            if (free_->weight(factors[perm[j]]) != shape[j]) {
                shapes_ok = false;
                break;
            }
        if (!shapes_ok) continue;
        // Koszul sign of reordering the factors into (perm[0], perm[1], ...)
        std::vector<int> degs(n);
        for (int i = 0; i < n; ++i) degs[i] = lambda_->lambda_degree_gen(factors[i]);
        const int eps_lambda = koszul_sign(perm, degs);
        // no-crossing evaluation sign across blocks
        long cross = 0;
        for (int j = 0; j < n; ++j)
            for (int i = j + 1; i < n; ++i)
                cross += static_cast<long>(free_->degree(factors[perm[i]])) * blockdeg[j];
        Rational prod(eps_lambda * sign_pow(cross));
        for (int j = 0; j < n && !prod.is_zero(); ++j) prod *= pair_lie(factors[perm[j]], j);
        total += prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

const GinftyEngine::ShapePairing& GinftyEngine::pairing(const std::vector<int>& shape) const {
    auto it = pairings_.find(shape);
    if (it != pairings_.end()) return it->second;

    ShapePairing sp;
    sp.shape = shape;
    int K = 0;
    for (int k : shape) K += k;
    std::vector<int> t(K, 0);
    do {
        sp.tuples.push_back(t);
    } while (tuple_next(t, A_.dim()));
    for (int m = 0; m < lambda_->dim(); ++m) {
        const auto& factors = lambda_->monomial(m);
        if (static_cast<int>(factors.size()) != static_cast<int>(shape.size())) continue;
        std::vector<int> wts;
        for (int f : factors) wts.push_back(free_->weight(f));
        std::sort(wts.begin(), wts.end());
        if (wts == shape) sp.monomials.push_back(m);
    }
    Matrix P(static_cast<int>(sp.tuples.size()), static_cast<int>(sp.monomials.size()));
    for (size_t r = 0; r < sp.tuples.size(); ++r)
        for (size_t c = 0; c < sp.monomials.size(); ++c)
            P.at(static_cast<int>(r), static_cast<int>(c)) = pair_monomial_tuple(sp.monomials[c], shape, sp.tuples[r]);
    sp.P = std::move(P);
    return pairings_.emplace(shape, std::move(sp)).first->second;
}

ValidationReport GinftyEngine::validate_ops(const GinftyStructure& G, int op_degree) const {
    ValidationReport rep;
    for (const auto& op : G.ops) {
        int K = 0, n = static_cast<int>(op.blocks.size());
        for (int k : op.blocks) {
            if (k < 1) rep.fail("block of size < 1 in " + shape_str(op.blocks));
            K += k;
        }
        const int want = 2 + op_degree - n - K;
        for (const auto& [t, out] : op.entries) {
            if (static_cast<int>(t.size()) != K) {
                rep.fail("entry tuple length mismatch in " + shape_str(op.blocks));
                continue;
            }
            int din = 0;
            for (int i : t) din += A_.degree(i);
            for (int k = 0; k < A_.dim(); ++k)
                if (!out[k].is_zero() && A_.degree(k) - din != want)
                    rep.fail("degree rule violated at " + shape_str(op.blocks));
        }
        // Harrison condition: each block annihilates (p,q)-shuffles
        auto entry_of = [&](const std::vector<int>& t) -> Vec {
            auto it = op.entries.find(t);
            if (it == op.entries.end()) return Vec(A_.dim());
            return it->second;
        };
        std::vector<int> off(n + 1, 0);
        for (int j = 0; j < n; ++j) off[j + 1] = off[j] + op.blocks[j];
        for (int j = 0; j < n; ++j) {
            const int k = op.blocks[j];
            if (k < 2) continue;
            std::vector<int> t(K, 0);
            do {
                for (int p = 1; p < k; ++p) {
                    // sum over (p, k-p) shuffles of the block with Koszul signs
                    Vec acc(A_.dim());
                    std::vector<int> sel(p);
                    for (int i = 0; i < p; ++i) sel[i] = i;
                    auto comb_next_local = [&](std::vector<int>& s, int nn) {
                        const int m = static_cast<int>(s.size());
                        for (int i = m - 1; i >= 0; --i) {
                            if (s[i] < nn - (m - i)) {
                                ++s[i];
                                for (int jj = i + 1; jj < m; ++jj) s[jj] = s[jj - 1] + 1;
                                return true;
                            }
                        }
                        return false;
                    };
                    do {
                        // positions `sel` receive the first p letters, in order
                        std::vector<int> perm(k);  // perm[pos] = source letter index
                        {
                            std::vector<char> used(k, 0);
                            for (int i = 0; i < p; ++i) {
                                perm[sel[i]] = i;
                                used[sel[i]] = 1;
                            }
                            int src = p;
                            for (int pos = 0; pos < k; ++pos)
                                if (!used[pos]) perm[pos] = src++;
                        }
                        std::vector<int> degs(k);
                        for (int i = 0; i < k; ++i) degs[i] = A_.degree(t[off[j] + i]) - 1;
                        const int sg = koszul_sign(perm, degs);
                        std::vector<int> t2(t);
                        for (int pos = 0; pos < k; ++pos) t2[off[j] + pos] = t[off[j] + perm[pos]];
                        Vec e = entry_of(t2);
                        for (int kk = 0; kk < A_.dim(); ++kk) acc[kk] += Rational(sg) * e[kk];
                    } while (comb_next_local(sel, k));
                    if (!is_zero_vec(acc)) {
                        rep.fail("Harrison condition fails in " + shape_str(op.blocks));
                        p = k;
                    }
                }
            } while (tuple_next(t, A_.dim()) && rep.ok);
            if (!rep.ok) break;
        }
    }
    return rep;
}

Derivation GinftyEngine::derivation_from_mops(const GinftyStructure& G, int op_degree) const {
    ValidationReport val = validate_ops(G, op_degree);
    if (!val.ok) throw input_error("derivation_from_mops: " + val.violations.front());

    std::vector<LambdaLie::Elt> v_values(free_->dim());
    const int d = A_.dim();
    for (const auto& op : G.ops) {
        const ShapePairing& sp = pairing(op.blocks);
        for (int gamma = 0; gamma < d; ++gamma) {
            Vec rhs(sp.tuples.size());
            bool any = false;
            for (size_t r = 0; r < sp.tuples.size(); ++r) {
                auto it = op.entries.find(sp.tuples[r]);
                if (it == op.entries.end()) continue;
                rhs[r] = it->second[gamma];
                if (!rhs[r].is_zero()) any = true;
            }
            if (!any) continue;
            auto sol = solve(sp.P, rhs);
            if (!sol)
                throw input_error("derivation_from_mops: inconsistent table for shape " + shape_str(op.blocks));
            for (size_t c = 0; c < sp.monomials.size(); ++c)
                if (!(*sol)[c].is_zero())
                    v_values[gamma] = LambdaLie::add(v_values[gamma], {{sp.monomials[c], (*sol)[c]}});
        }
    }
    auto full = bracket_extend(v_values, op_degree);
    Derivation der;
    der.L = lambda_.get();
    der.degree = op_degree;
    der.gen_values = std::move(full);
    return der;
}

std::vector<LambdaLie::Elt> GinftyEngine::bracket_extend(const std::vector<LambdaLie::Elt>& v_values,
                                                         int op_degree) const {
    // value on a Lie word [u,v]: [Du, v] + (-1)^{|D| deg_g(u)} [u, Dv]
    std::vector<LambdaLie::Elt> out(free_->dim());
    std::function<LambdaLie::Elt(const std::vector<int>&)> value_of_word =
        [&](const std::vector<int>& w) -> LambdaLie::Elt {
        if (w.size() == 1) return v_values[w[0]];
        // standard factorization: longest proper Lyndon suffix
        auto is_lyndon = [](const std::vector<int>& x) {
            for (size_t i = 1; i < x.size(); ++i) {
                std::vector<int> s(x.begin() + i, x.end());
                if (!(x < s)) return false;
            }
            return true;
        };
        size_t split = 1;
        for (size_t i = 1; i < w.size(); ++i) {
            std::vector<int> s(w.begin() + i, w.end());
            if (is_lyndon(s)) {
                split = i;
                break;
            }
        }
        std::vector<int> u(w.begin(), w.begin() + split), v(w.begin() + split, w.end());
        LambdaLie::Elt du = value_of_word(u), dv = value_of_word(v);
        int udeg = 0, vdeg = 0;
        for (int l : u) udeg += free_->generators().degree(l);
        for (int l : v) vdeg += free_->generators().degree(l);
        // find the basis elements for u and v
        auto gen_elt = [&](const std::vector<int>& word) -> LambdaLie::Elt {
            for (int i = 0; i < free_->dim(); ++i)
                if (!free_->word(i).square && free_->word(i).letters == word) return lambda_->gen(i);
            throw std::logic_error("bracket_extend: factor word not in basis");
        };
        LambdaLie::Elt ue = gen_elt(u), ve = gen_elt(v);
        LambdaLie::Elt t1 = lambda_->bracket(du, ve);
        LambdaLie::Elt t2 = lambda_->bracket(ue, dv);
        return LambdaLie::add(t1, LambdaLie::scale(Rational(sign_pow(static_cast<long>(op_degree) * udeg)), t2));
    };
    for (int i = 0; i < free_->dim(); ++i) {
        const auto& bw = free_->word(i);
        if (!bw.square) {
            out[i] = value_of_word(bw.letters);
        } else {
            // [w, w] for odd w
            LambdaLie::Elt dw = value_of_word(bw.letters);
            int wdeg = 0;
            for (int l : bw.letters) wdeg += free_->generators().degree(l);
            LambdaLie::Elt we;
            for (int k = 0; k < free_->dim(); ++k)
                if (!free_->word(k).square && free_->word(k).letters == bw.letters) we = lambda_->gen(k);
            LambdaLie::Elt t1 = lambda_->bracket(dw, we);
            LambdaLie::Elt t2 = lambda_->bracket(we, dw);
            out[i] = LambdaLie::add(t1, LambdaLie::scale(Rational(sign_pow(static_cast<long>(op_degree) * wdeg)), t2));
        }
    }
    return out;
}

GinftyStructure GinftyEngine::mops_from_derivation(const std::vector<LambdaLie::Elt>& v_values,
                                                   int op_degree) const {
    (void)op_degree;
    GinftyStructure G;
    G.space = A_;
    // shapes: ascending partitions with total weight <= cap
    std::vector<std::vector<int>> shapes;
    std::vector<int> cur;
    std::function<void(int, int)> gen = [&](int minpart, int left) {
        if (!cur.empty()) shapes.push_back(cur);
        for (int k = minpart; k <= left; ++k) {
            cur.push_back(k);
            gen(k, left - k);
            cur.pop_back();
        }
    };
    gen(1, W_);

    const int d = A_.dim();
    for (const auto& shape : shapes) {
        const ShapePairing& sp = pairing(shape);
        GinftyOp op;
        op.blocks = shape;
        for (size_t r = 0; r < sp.tuples.size(); ++r) {
            Vec out(d);
            bool any = false;
            for (int gamma = 0; gamma < d; ++gamma) {
                Rational acc;
                for (size_t c = 0; c < sp.monomials.size(); ++c) {
                    auto it = v_values[gamma].find(sp.monomials[c]);
                    if (it != v_values[gamma].end())
                        acc += it->second * sp.P.at(static_cast<int>(r), static_cast<int>(c));
                }
                if (!acc.is_zero()) {
                    out[gamma] = acc;
                    any = true;
                }
            }
            if (any) op.entries.emplace(sp.tuples[r], std::move(out));
        }
        if (!op.entries.empty()) G.ops.push_back(std::move(op));
    }
    return G;
}

GerstFixture gerstenhaber_fixture(const LieData& g, int lambda_cap) {
    GerstFixture fx;
    fx.algebra = std::make_shared<LambdaLie>(g, lambda_cap);
    const LambdaLie& L = *fx.algebra;
    std::vector<std::string> labels;
    std::vector<int> degrees;
    for (int m = 0; m < L.dim(); ++m) {
        labels.push_back(L.monomial_label(m));
        degrees.push_back(L.degree(m));
    }
    fx.space = GradedSpace(labels, degrees);

    // tables of an honest Gerstenhaber algebra:
    //   m_2(a,b) = (-1)^{|a|} ab,  m_{1,1}(a,b) = (-1)^{|a|-1}[a,b]
    GinftyOp m2, m11;
    m2.blocks = {2};
    m11.blocks = {1, 1};
    const int D = L.dim();
    for (int a = 0; a < D; ++a)
        for (int b = 0; b < D; ++b) {
            LambdaLie::Elt ea{{a, Rational(1)}}, eb{{b, Rational(1)}};
            Vec prod(D), brkt(D);
            for (const auto& [m, c] : L.mul(ea, eb)) prod[m] = Rational(sign_pow(L.degree(a))) * c;
            for (const auto& [m, c] : L.bracket(ea, eb)) brkt[m] = Rational(sign_pow(L.degree(a) - 1)) * c;
            if (!is_zero_vec(prod)) m2.entries.emplace(std::vector<int>{a, b}, prod);
            if (!is_zero_vec(brkt)) m11.entries.emplace(std::vector<int>{a, b}, brkt);
        }
    fx.G.space = fx.space;
    if (!m2.entries.empty()) fx.G.ops.push_back(std::move(m2));
    if (!m11.entries.empty()) fx.G.ops.push_back(std::move(m11));
    return fx;
}

CanonicalDeformation canonical_deformation(const GinftyEngine& eng, const GinftyStructure& G) {
    CanonicalDeformation out;
    const GradedSpace& A = eng.base();
    const int d = A.dim();
    Derivation partial = eng.derivation_from_mops(G, 1);
    LambdaOperator pop = partial.as_operator();
    LambdaOperator dlie = delta_lie_operator(eng.lambda());

    // D = [∂, Δ_Lie] (anticommutator of odd operators); on generators Δ_Lie
    // vanishes, so D(w) = Δ_Lie(∂w)
    std::vector<LambdaLie::Elt> D_values(eng.free_lie().dim());
    for (int i = 0; i < eng.free_lie().dim(); ++i) D_values[i] = eng.lambda().delta_lie(partial.gen_values[i]);
    Derivation Dder = extend_derivation(eng.lambda(), 0, D_values);

    LambdaOperator anti = op_add(compose(pop, dlie), compose(dlie, pop));
    LambdaOperator Dop = Dder.as_operator();
    out.D_is_derivation = true;
    for (int m = 0; m < eng.lambda().dim(); ++m)
        if (!(Dop.images[m] == anti.images[m])) out.D_is_derivation = false;

    // Λ(Lie V)[ε] = Λ(Lie(V) ⊕ kε): append ε as an odd central generator
    const FreeLie& F = eng.free_lie();
    LieData gext = lie_data_from_free(F);
    const int eps = gext.dim();
    gext.labels.push_back("eps");
    gext.degree.push_back(0);  // λ-degree 1
    gext.weight.push_back(0);
    auto base_bracket = gext.bracket;
    gext.bracket = [base_bracket, eps](int i, int j) -> SparseVec {
        if (i == eps || j == eps) return {};
        return base_bracket(i, j);
    };
    out.lambda_eps = std::make_shared<LambdaLie>(gext, eng.weight_cap());
    out.eps_gen = eps;
    const LambdaLie& Le = *out.lambda_eps;

    // transport an element of Λ(Lie V) into the extended algebra
    auto iota = [&](const LambdaLie::Elt& x) {
        LambdaLie::Elt r;
        for (const auto& [m, c] : x) {
            int idx = Le.monomial_index(eng.lambda().monomial(m));
            if (idx >= 0) r = LambdaLie::add(r, LambdaLie::Elt{{idx, c}});
        }
        return r;
    };

    // ∂_can(w) = ∂w + ε·D(w), ∂_can(ε) = 0
    std::vector<LambdaLie::Elt> can_values(gext.dim());
    LambdaLie::Elt eps_elt = Le.gen(eps);
    for (int i = 0; i < F.dim(); ++i)
        can_values[i] = LambdaLie::add(iota(partial.gen_values[i]), Le.mul(eps_elt, iota(D_values[i])));
    out.partial_can = extend_derivation(Le, 1, can_values);

    out.square_zero = check_square_zero(out.partial_can).ok;

    // tables over A[ε]
    std::vector<std::string> labels;
    std::vector<int> degrees;
    for (int i = 0; i < d; ++i) {
        labels.push_back(A.label(i));
        degrees.push_back(A.degree(i));
    }
    for (int i = 0; i < d; ++i) {
        labels.push_back("eps*" + A.label(i));
        degrees.push_back(A.degree(i) + 1);
    }
    out.space_eps = GradedSpace(labels, degrees);

    GinftyStructure m_D = eng.mops_from_derivation(
        [&] {
            std::vector<LambdaLie::Elt> v(eng.free_lie().dim());
            for (int i = 0; i < d; ++i) v[i] = D_values[i];
            return v;
        }(),
        0);

    GinftyStructure Geps;
    Geps.space = out.space_eps;
    auto find_op = [](GinftyStructure& S, const std::vector<int>& blocks) -> GinftyOp& {
        for (auto& op : S.ops)
            if (op.blocks == blocks) return op;
        S.ops.push_back(GinftyOp{blocks, {}});
        return S.ops.back();
    };
    auto add_entry = [&](GinftyOp& op, const std::vector<int>& t, int outidx, const Rational& c) {
        if (c.is_zero()) return;
        auto it = op.entries.find(t);
        if (it == op.entries.end()) {
            Vec v(2 * d);
            v[outidx] = c;
            op.entries.emplace(t, std::move(v));
        } else {
            it->second[outidx] += c;
        }
    };

    auto emit = [&](const GinftyStructure& S, bool to_eps_output) {
        for (const auto& op : S.ops) {
            GinftyOp& target = find_op(Geps, op.blocks);
            const int K = static_cast<int>(op.entries.empty() ? 0 : op.entries.begin()->first.size());
            std::vector<int> block_of(K), block_start(K);
            {
                int pos = 0, bi = 0;
                for (int kb : op.blocks) {
                    for (int r = 0; r < kb; ++r) {
                        block_of[pos] = bi;
                        block_start[pos] = pos - r;
                        ++pos;
                    }
                    ++bi;
                }
            }
            for (const auto& [t, outv] : op.entries) {
                for (int k = 0; k < d; ++k) {
                    if (outv[k].is_zero()) continue;
                    add_entry(target, t, to_eps_output ? d + k : k, outv[k]);
                }
                if (!to_eps_output) {
                    // ε enters from the left as an odd symbol: it crosses whole
                    // Λ-factors at their λ-parity and the letters of its own
                    // block at shifted degree
                    for (int p = 0; p < K; ++p) {
                        long shift = 0;
                        {
                            int pos = 0;
                            for (size_t bi = 0; bi < op.blocks.size(); ++bi) {
                                const int kb = op.blocks[bi];
                                if (static_cast<int>(bi) < block_of[p]) {
                                    long sgn = kb + 1;
                                    for (int r = 0; r < kb; ++r) sgn += A.degree(t[pos + r]);
                                    shift += sgn;
                                }
                                pos += kb;
                            }
                        }
                        for (int q = block_start[p]; q < p; ++q) shift += A.degree(t[q]) - 1;
                        std::vector<int> te(t);
                        te[p] = d + t[p];
                        for (int k = 0; k < d; ++k)
                            if (!outv[k].is_zero())
                                add_entry(target, te, d + k, Rational(sign_pow(shift)) * outv[k]);
                    }
                }
            }
        }
    };
    emit(G, false);
    emit(m_D, true);
    out.G_eps = std::move(Geps);
    return out;
}

BVInfinityCandidate canonical_bv_candidate(const CanonicalDeformation& cd) {
    const LambdaLie& L = *cd.lambda_eps;
    BVInfinityCandidate c;
    c.L = &L;
    c.partial = cd.partial_can.as_operator();
    // Δ_1 = Δ_Lie + ∂/∂ε; the ε-derivative is the odd derivation ε -> -1
    std::vector<LambdaLie::Elt> eps_values(L.lie().dim());
    eps_values[cd.eps_gen] = LambdaLie::Elt{{L.unit_index(), Rational(-1)}};
    Derivation deps = extend_derivation(L, -1, eps_values);
    LambdaOperator d1 = op_add(delta_lie_operator(L), deps.as_operator());
    c.comps.emplace_back(1, std::move(d1));
    return c;
}

BVValidationReport validate_bvinfty(const BVInfinityCandidate& c, int order_sample_cap) {
    BVValidationReport rep;
    const LambdaLie& L = *c.L;
    LambdaOperator delta = c.partial;
    for (const auto& [i, op] : c.comps) {
        if (i < 1 || i % 2 == 0) {
            rep.ok = false;
            rep.notes.push_back("component index " + std::to_string(i) + " not an odd positive integer");
            return rep;
        }
        delta = op_add(delta, op);
    }

    // 1. Δ^2 = 0 and Δ_i(1) = 0
    LambdaOperator sq = compose(delta, delta);
    if (!sq.is_zero()) {
        rep.square_zero = false;
        rep.ok = false;
        rep.notes.push_back("Δ² != 0");
    }
    LambdaLie::Elt one{{L.unit_index(), Rational(1)}};
    for (const auto& [i, op] : c.comps)
        if (!op.apply(one).empty()) {
            rep.kills_unit = false;
            rep.ok = false;
            rep.notes.push_back("Δ_" + std::to_string(i) + "(1) != 0");
        }

    // 2. Δ_1 - Δ_Lie is a differential operator of order 1
    LambdaOperator dlie = delta_lie_operator(L);
    LambdaOperator d1(L, -1);
    bool have_d1 = false;
    for (const auto& [i, op] : c.comps)
        if (i == 1) {
            d1 = op;
            have_d1 = true;
        }
    if (!have_d1) d1 = LambdaOperator(L, -1);
    LambdaOperator diff = op_add(d1, op_scale(Rational(-1), dlie));
    if (!operator_order_leq(diff, 1, order_sample_cap)) {
        rep.delta1_order = false;
        rep.ok = false;
        rep.notes.push_back("Δ_1 - Δ_Lie not of order 1");
    }

    // 3. Δ_{2i-1} of order i for i > 1
    for (const auto& [k, op] : c.comps) {
        if (k == 1) continue;
        const int i = (k + 1) / 2;
        if (!operator_order_leq(op, i, order_sample_cap)) {
            rep.higher_orders = false;
            rep.ok = false;
            rep.notes.push_back("Δ_" + std::to_string(k) + " not of order " + std::to_string(i));
        }
    }

    // 4. filtration: images never drop below the source weight
    auto preserves = [&](const LambdaOperator& op) {
        for (int m = 0; m < L.dim(); ++m)
            for (const auto& [im, cc] : op.images[m]) {
                (void)cc;
                if (L.weight(im) < L.weight(m)) return false;
            }
        return true;
    };
    if (!preserves(c.partial)) {
        rep.filtration = false;
        rep.ok = false;
        rep.notes.push_back("∂ does not preserve the filtration");
    }
    for (const auto& [i, op] : c.comps)
        if (!preserves(op)) {
            rep.filtration = false;
            rep.ok = false;
            rep.notes.push_back("Δ_" + std::to_string(i) + " does not preserve the filtration");
        }
    return rep;
}

namespace {

// operator between two spaces, for relative differential-operator orders
struct CrossOperator {
    const LambdaLie* src = nullptr;
    const LambdaLie* dst = nullptr;
    int degree = 0;
    std::vector<LambdaLie::Elt> images;

    bool is_zero() const {
        for (const auto& im : images)
            if (!im.empty()) return false;
        return true;
    }
    LambdaLie::Elt apply(const LambdaLie::Elt& x) const {
        LambdaLie::Elt r;
        for (const auto& [m, c] : x) r = LambdaLie::add(r, LambdaLie::scale(c, images[m]));
        return r;
    }
};

// x -> T(a x) - (-1)^{|T||a|} f(a) T(x)
CrossOperator relative_commutator(const CrossOperator& T, const LambdaLie::Elt& a, int adeg,
                                  const LambdaLie::Elt& fa) {
    CrossOperator r;
    r.src = T.src;
    r.dst = T.dst;
    r.degree = T.degree + adeg;
    r.images.resize(T.src->dim());
    for (int m = 0; m < T.src->dim(); ++m) {
        LambdaLie::Elt ax = T.src->mul(a, LambdaLie::Elt{{m, Rational(1)}});
        LambdaLie::Elt t1 = T.apply(ax);
        LambdaLie::Elt t2 = T.dst->mul(fa, T.images[m]);
        r.images[m] = LambdaLie::add(
            t1, LambdaLie::scale(Rational(-sign_pow(static_cast<long>(T.degree) * adeg)), t2));
    }
    return r;
}

bool relative_order_leq(const CrossOperator& T, int k, const std::vector<LambdaLie::Elt>& gens_src,
                        const std::vector<int>& gen_degs, const std::vector<LambdaLie::Elt>& f0_gens) {
    if (T.is_zero()) return true;
    if (k < 0) return false;
    for (size_t g = 0; g < gens_src.size(); ++g) {
        CrossOperator c = relative_commutator(T, gens_src[g], gen_degs[g], f0_gens[g]);
        if (!relative_order_leq(c, k - 1, gens_src, gen_degs, f0_gens)) return false;
    }
    return true;
}

}  // namespace

BVMorphismReport validate_bv_morphism(const BVMorphismCandidate& c, const LambdaOperator& delta_source,
                                      const LambdaOperator& delta_target) {
    BVMorphismReport rep;
    const LambdaLie& S = *c.source;
    const LambdaLie& T = *c.target;

    // build F_0 on all monomials as an algebra morphism
    CrossOperator F0;
    F0.src = &S;
    F0.dst = &T;
    F0.degree = 0;
    F0.images.resize(S.dim());
    for (int m = 0; m < S.dim(); ++m) {
        const auto& mono = S.monomial(m);
        LambdaLie::Elt acc{{T.unit_index(), Rational(1)}};
        for (int gi : mono) acc = T.mul(acc, c.f0_gen_values[gi]);
        F0.images[m] = std::move(acc);
    }

    // 2. F_0 respects product (by construction) and bracket (checked)
    for (int i = 0; i < S.lie().dim() && rep.f0_morphism; ++i)
        for (int j = 0; j < S.lie().dim(); ++j) {
            LambdaLie::Elt lhs = F0.apply(S.bracket(S.gen(i), S.gen(j)));
            LambdaLie::Elt rhs = T.bracket(c.f0_gen_values[i], c.f0_gen_values[j]);
            if (!(lhs == rhs)) {
                rep.f0_morphism = false;
                rep.ok = false;
                rep.notes.push_back("F_0 does not respect the bracket");
                break;
            }
        }

    std::vector<LambdaLie::Elt> gens_src;
    std::vector<int> gen_degs;
    std::vector<LambdaLie::Elt> f0_gens;
    for (int gi = 0; gi < S.lie().dim(); ++gi) {
        gens_src.push_back(S.gen(gi));
        gen_degs.push_back(S.lambda_degree_gen(gi));
        f0_gens.push_back(c.f0_gen_values[gi]);
    }

    CrossOperator F = F0;
    for (const auto& [i, images] : c.higher) {
        CrossOperator Fi;
        Fi.src = &S;
        Fi.dst = &T;
        Fi.degree = -2 * i;
        Fi.images = images;
        // 3. order i with respect to F_0, kills 1
        LambdaLie::Elt one{{S.unit_index(), Rational(1)}};
        if (!Fi.apply(one).empty()) {
            rep.kills_unit = false;
            rep.ok = false;
            rep.notes.push_back("F_" + std::to_string(2 * i) + "(1) != 0");
        }
        if (!relative_order_leq(Fi, i, gens_src, gen_degs, f0_gens)) {
            rep.orders = false;
            rep.ok = false;
            rep.notes.push_back("F_" + std::to_string(2 * i) + " not of order " + std::to_string(i));
        }
        for (int m = 0; m < S.dim(); ++m) F.images[m] = LambdaLie::add(F.images[m], images[m]);
    }

    // 4. filtration
    for (int m = 0; m < S.dim(); ++m)
        for (const auto& [im, cc] : F.images[m]) {
            (void)cc;
            if (T.weight(im) < S.weight(m)) {
                rep.filtration = false;
                rep.ok = false;
                rep.notes.push_back("filtration violated");
                m = S.dim();
                break;
            }
        }

    // intertwining F Δ = Δ' F
    for (int m = 0; m < S.dim(); ++m) {
        LambdaLie::Elt lhs = F.apply(delta_source.images[m]);
        LambdaLie::Elt rhs = delta_target.apply(F.images[m]);
        if (!(lhs == rhs)) {
            rep.intertwines = false;
            rep.ok = false;
            rep.notes.push_back("F does not intertwine the BV operators");
            break;
        }
    }
    return rep;
}

}  // namespace gerstlab

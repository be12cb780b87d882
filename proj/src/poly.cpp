#include <gerstlab/poly.hpp>

#include <algorithm>
#include <functional>
#include <random>

namespace gerstlab {

Poly Poly::constant(int nvars, const Rational& c) {
    Poly p(nvars);
    p.add_term(std::vector<int>(nvars, 0), c);
    return p;
}

Poly Poly::variable(int nvars, int i) {
    Poly p(nvars);
    std::vector<int> e(nvars, 0);
    e.at(i) = 1;
    p.add_term(e, Rational(1));
    return p;
}

void Poly::add_term(const std::vector<int>& exps, const Rational& c) {
    if (static_cast<int>(exps.size()) != nvars_) throw input_error("Poly: exponent length mismatch");
    if (c.is_zero()) return;
    auto it = terms_.find(exps);
    if (it == terms_.end())
        terms_.emplace(exps, c);
    else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Poly Poly::derivative(int i) const {
    Poly r(nvars_);
    for (const auto& [e, c] : terms_) {
        if (e[i] == 0) continue;
        auto e2 = e;
        --e2[i];
        r.add_term(e2, Rational(e[i]) * c);
    }
    return r;
}

Poly operator+(const Poly& a, const Poly& b) {
    if (a.nvars_ != b.nvars_) throw input_error("Poly: nvars mismatch");
    Poly r(a);
    for (const auto& [e, c] : b.terms_) r.add_term(e, c);
    return r;
}

Poly operator-(const Poly& a, const Poly& b) {
    if (a.nvars_ != b.nvars_) throw input_error("Poly: nvars mismatch");
    Poly r(a);
    for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
    return r;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.nvars_ != b.nvars_) throw input_error("Poly: nvars mismatch");
    Poly r(a.nvars_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            std::vector<int> e(a.nvars_);
            for (int i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    return r;
}

Poly operator*(const Rational& c, const Poly& a) {
    Poly r(a.nvars_);
    for (const auto& [e, x] : a.terms_) r.add_term(e, c * x);
    return r;
}

void ExteriorCore::add(const std::vector<int>& idx, const Poly& p) {
    if (static_cast<int>(idx.size()) != degree) throw input_error("ExteriorCore: index tuple length mismatch");
    for (size_t i = 1; i < idx.size(); ++i)
        if (idx[i - 1] >= idx[i]) throw input_error("ExteriorCore: indices must strictly increase");
    if (!idx.empty() && (idx.front() < 0 || idx.back() >= nvars)) throw input_error("ExteriorCore: index out of range");
    if (p.is_zero()) return;
    auto it = comps.find(idx);
    if (it == comps.end())
        comps.emplace(idx, p);
    else {
        it->second = it->second + p;
        if (it->second.is_zero()) comps.erase(it);
    }
}

VolumeForm::VolumeForm(int nvars) : form(nvars, nvars) {
    std::vector<int> all(nvars);
    for (int i = 0; i < nvars; ++i) all[i] = i;
    form.add(all, Poly::constant(nvars, Rational(1)));
}

bool operator==(const Polyvector& a, const Polyvector& b) {
    return a.nvars == b.nvars && a.degree == b.degree && a.comps == b.comps;
}
bool operator==(const DiffForm& a, const DiffForm& b) {
    return a.nvars == b.nvars && a.degree == b.degree && a.comps == b.comps;
}

namespace {

template <class T>
T add_impl(const T& a, const T& b) {
    if (a.nvars != b.nvars || a.degree != b.degree) throw input_error("exterior +/-: mismatch");
    T r(a);
    for (const auto& [i, p] : b.comps) r.add(i, p);
    return r;
}

template <class T>
T scale_impl(const Rational& c, const T& a) {
    T r(a.nvars, a.degree);
    for (const auto& [i, p] : a.comps) r.add(i, c * p);
    return r;
}

// merge two strictly increasing tuples; sign counts transpositions (all odd
// generators). Returns false on a repeated index.
bool merge_tuples(const std::vector<int>& a, const std::vector<int>& b, std::vector<int>& out, int& sign) {
    out.clear();
    out.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    long swaps = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) return false;
        if (a[i] < b[j])
            out.push_back(a[i++]);
        else {
            swaps += static_cast<long>(a.size() - i);
            out.push_back(b[j++]);
        }
    }
    while (i < a.size()) out.push_back(a[i++]);
    while (j < b.size()) out.push_back(b[j++]);
    sign = sign_pow(swaps);
    return true;
}

template <class T>
T wedge_impl(const T& a, const T& b) {
    if (a.nvars != b.nvars) throw input_error("wedge: nvars mismatch");
    T r(a.nvars, a.degree + b.degree);
    if (a.degree + b.degree > a.nvars) return r;
    std::vector<int> idx;
    int sg;
    for (const auto& [ia, pa] : a.comps)
        for (const auto& [ib, pb] : b.comps)
            if (merge_tuples(ia, ib, idx, sg)) r.add(idx, Rational(sg) * (pa * pb));
    return r;
}

// left derivative with respect to generator i: θ_S -> ±θ_{S\i}
bool theta_derivative(const std::vector<int>& idx, int i, std::vector<int>& out, int& sign) {
    auto it = std::find(idx.begin(), idx.end(), i);
    if (it == idx.end()) return false;
    sign = sign_pow(static_cast<long>(it - idx.begin()));
    out.clear();
    out.reserve(idx.size() - 1);
    for (int x : idx)
        if (x != i) out.push_back(x);
    return true;
}

}  // namespace

Polyvector operator+(const Polyvector& a, const Polyvector& b) { return add_impl(a, b); }
Polyvector operator-(const Polyvector& a, const Polyvector& b) { return add_impl(a, scale_impl(Rational(-1), b)); }
Polyvector operator*(const Rational& c, const Polyvector& a) { return scale_impl(c, a); }
DiffForm operator+(const DiffForm& a, const DiffForm& b) { return add_impl(a, b); }
DiffForm operator-(const DiffForm& a, const DiffForm& b) { return add_impl(a, scale_impl(Rational(-1), b)); }
DiffForm operator*(const Rational& c, const DiffForm& a) { return scale_impl(c, a); }

Polyvector wedge(const Polyvector& a, const Polyvector& b) { return wedge_impl(a, b); }
DiffForm wedge(const DiffForm& a, const DiffForm& b) { return wedge_impl(a, b); }

Polyvector schouten(const Polyvector& a, const Polyvector& b) {
    if (a.nvars != b.nvars) throw input_error("schouten: nvars mismatch");
    const int n = a.nvars;
    Polyvector r(n, a.degree + b.degree - 1);
    if (a.degree + b.degree - 1 < 0 || a.degree + b.degree - 1 > n) return r;
    // {a,b} = -sum_i [ (-1)^{|a|} (∂a/∂θ_i)(∂b/∂x_i) + (∂a/∂x_i)(∂b/∂θ_i) ]
    // the unique orientation satisfying the contraction/Lie-derivative identity
    // package, graded Jacobi, Leibniz and [d/dx, x^2] = 2x simultaneously
    const int s1 = -sign_pow(a.degree);
    std::vector<int> rest;
    int sg;
    for (int i = 0; i < n; ++i) {
        for (const auto& [ia, pa] : a.comps) {
            if (!theta_derivative(ia, i, rest, sg)) continue;
            for (const auto& [ib, pb] : b.comps) {
                std::vector<int> idx;
                int sg2;
                if (!merge_tuples(rest, ib, idx, sg2)) continue;
                r.add(idx, Rational(s1 * sg * sg2) * (pa * pb.derivative(i)));
            }
        }
        for (const auto& [ib, pb] : b.comps) {
            if (!theta_derivative(ib, i, rest, sg)) continue;
            for (const auto& [ia, pa] : a.comps) {
                std::vector<int> idx;
                int sg2;
                if (!merge_tuples(ia, rest, idx, sg2)) continue;
                r.add(idx, Rational(-sg * sg2) * (pa.derivative(i) * pb));
            }
        }
    }
    return r;
}

DiffForm contraction(const Polyvector& pi, const DiffForm& alpha) {
    if (pi.nvars != alpha.nvars) throw input_error("contraction: nvars mismatch");
    const int n = pi.nvars;
    DiffForm r(n, alpha.degree - pi.degree);
    if (alpha.degree - pi.degree < 0) return r;
    std::vector<int> rest, cur;
    int sg;
    for (const auto& [ip, pp] : pi.comps) {
        for (const auto& [ia, pa] : alpha.comps) {
            // apply ∂_{ξ_{i_k}} ... then ∂_{ξ_{i_1}} (last slot first)
            cur = ia;
            int total = 1;
            bool dead = false;
            for (auto it = ip.rbegin(); it != ip.rend(); ++it) {
                if (!theta_derivative(cur, *it, rest, sg)) {
                    dead = true;
                    break;
                }
                total *= sg;
                cur = rest;
            }
            if (dead) continue;
            r.add(cur, Rational(total) * (pp * pa));
        }
    }
    return r;
}

DiffForm de_rham(const DiffForm& alpha) {
    const int n = alpha.nvars;
    DiffForm r(n, alpha.degree + 1);
    if (alpha.degree + 1 > n) return r;
    std::vector<int> idx;
    int sg;
    for (const auto& [ia, pa] : alpha.comps)
        for (int i = 0; i < n; ++i) {
            Poly d = pa.derivative(i);
            if (d.is_zero()) continue;
            if (!merge_tuples({i}, ia, idx, sg)) continue;
            r.add(idx, Rational(sg) * d);
        }
    return r;
}

DiffForm lie_derivative(const Polyvector& pi, const DiffForm& alpha) {
    DiffForm a = de_rham(contraction(pi, alpha));
    DiffForm b = contraction(pi, de_rham(alpha));
    return a - Rational(sign_pow(pi.degree)) * b;
}

Polyvector divergence(const Polyvector& pi, const VolumeForm& omega) {
    if (pi.nvars != omega.form.nvars) throw input_error("divergence: nvars mismatch");
    const int n = pi.nvars;
    for (const auto& [i, p] : omega.form.comps)
        if (!p.is_constant()) throw input_error("divergence: non-constant volume coefficient unsupported");

    // I(pi) = i_pi Omega, invertible componentwise on the monomial basis
    DiffForm I = contraction(pi, omega.form);
    DiffForm dI = de_rham(I);
    // invert I: each θ_S maps to ± dx_{S^c}; build the correspondence once
    Polyvector out(n, pi.degree - 1);
    if (pi.degree == 0) return out;
    // basis polyvectors of degree pi.degree - 1
    std::vector<std::vector<int>> tuples;
    std::vector<int> cur;
    std::function<void(int)> gen = [&](int start) {
        if (static_cast<int>(cur.size()) == pi.degree - 1) {
            tuples.push_back(cur);
            return;
        }
        for (int i = start; i < n; ++i) {
            cur.push_back(i);
            gen(i + 1);
            cur.pop_back();
        }
    };
    gen(0);
    for (const auto& S : tuples) {
        Polyvector theta(n, pi.degree - 1);
        theta.add(S, Poly::constant(n, Rational(1)));
        DiffForm img = contraction(theta, omega.form);
        // img = c * dx_T for a single T; match against dI
        if (img.comps.size() != 1) throw std::logic_error("divergence: contraction image not a monomial");
        const auto& [T, cpoly] = *img.comps.begin();
        Rational c = cpoly.terms().begin()->second;
        auto it = dI.comps.find(T);
        if (it == dI.comps.end()) continue;
        out.add(S, c.inv() * it->second);
    }
    return out;
}

PolyIdentityReport check_cartan_identities(const std::vector<Polyvector>& samples_pi,
                                           const std::vector<Polyvector>& samples_phi,
                                           const std::vector<DiffForm>& samples_alpha) {
    PolyIdentityReport rep;
    for (const auto& pi : samples_pi)
        for (const auto& phi : samples_phi)
            for (const auto& al : samples_alpha) {
                const long kp = pi.degree, kf = phi.degree;
                // (0.1a) [L_pi, L_phi] = L_{[pi,phi]}  with |L_pi| = 1 - k
                DiffForm lhs = lie_derivative(pi, lie_derivative(phi, al)) -
                               Rational(sign_pow((1 + kp) * (1 + kf))) *
                                   lie_derivative(phi, lie_derivative(pi, al));
                if (!(lhs == lie_derivative(schouten(pi, phi), al))) rep.fail("[L,L] = L_[,] fails");
                // (0.1b) [i_pi, L_phi] = i_{[pi,phi]}  with |i_pi| = -k
                DiffForm lhs2 = contraction(pi, lie_derivative(phi, al)) -
                                Rational(sign_pow(kp * (1 + kf))) * lie_derivative(phi, contraction(pi, al));
                if (!(lhs2 == contraction(schouten(pi, phi), al))) rep.fail("[i,L] = i_[,] fails");
                // (0.1c) [i_pi, i_phi] = 0
                DiffForm lhs3 = contraction(pi, contraction(phi, al)) -
                                Rational(sign_pow(kp * kf)) * contraction(phi, contraction(pi, al));
                if (!lhs3.is_zero()) rep.fail("[i,i] = 0 fails");
                // (0.2a) i_{pi∧phi} = i_pi i_phi
                if (!(contraction(wedge(pi, phi), al) == contraction(pi, contraction(phi, al))))
                    rep.fail("i_{pi phi} = i_pi i_phi fails");
                // (0.2b) L_{pi∧phi} = L_pi i_phi + (-1)^{|pi|} i_pi L_phi
                DiffForm rhs = lie_derivative(pi, contraction(phi, al)) +
                               Rational(sign_pow(kp)) * contraction(pi, lie_derivative(phi, al));
                if (!(lie_derivative(wedge(pi, phi), al) == rhs)) rep.fail("L_{pi phi} expansion fails");
            }
    // d^2 = 0
    for (const auto& al : samples_alpha)
        if (!de_rham(de_rham(al)).is_zero()) rep.fail("d^2 != 0");
    return rep;
}

PolyIdentityReport check_bv_package(const std::vector<Polyvector>& samples, const VolumeForm& omega) {
    PolyIdentityReport rep;
    for (const auto& a : samples) {
        Polyvector da = divergence(a, omega);
        if (da.degree >= 1) {
            if (!divergence(da, omega).is_zero()) rep.fail("divergence^2 != 0");
        }
        for (const auto& b : samples) {
            if (a.degree + b.degree > a.nvars) continue;
            // Delta(ab) = Delta(a) b + (-1)^{|a|} a Delta(b) - (-1)^{|a|} [a,b]
            // (in the bracket orientation pinned by the identity suite)
            Polyvector lhs = divergence(wedge(a, b), omega);
            Polyvector rhs = wedge(divergence(a, omega), b) +
                             Rational(sign_pow(a.degree)) * wedge(a, divergence(b, omega)) -
                             Rational(sign_pow(a.degree)) * schouten(a, b);
            if (!(lhs == rhs)) rep.fail("BV identity fails");
        }
    }
    return rep;
}

PolyIdentityReport eps_module_check(const std::vector<Polyvector>& pis, const std::vector<Polyvector>& phis,
                                    const std::vector<DiffForm>& alphas) {
    PolyIdentityReport rep;
    // unit acts as the identity: (1 + ε0) ⋆ α = α
    for (const auto& al : alphas) {
        Polyvector unit(al.nvars, 0);
        unit.add({}, Poly::constant(al.nvars, Rational(1)));
        DiffForm star = Rational(sign_pow(unit.degree)) * contraction(unit, al);
        if (!(star == al)) rep.fail("unit does not act identically");
    }
    // associativity (u⋆v)⋆α = u⋆(v⋆α) for u,v ε-free reduces to (0.2a) with the
    // (-1)^{|π|} twists; Jacobi and Leibniz reduce to the same identity package.
    for (const auto& pi : pis)
        for (const auto& phi : phis)
            for (const auto& al : alphas) {
                const long kp = pi.degree, kf = phi.degree;
                DiffForm lhs = Rational(sign_pow(kp + kf)) * contraction(wedge(pi, phi), al);
                DiffForm rhs = Rational(sign_pow(kp)) * contraction(pi, Rational(sign_pow(kf)) * contraction(phi, al));
                if (!(lhs == rhs)) rep.fail("star associativity fails");
                // {π, φ⋆α} = {π,φ}⋆α + (-1)^{(|π|-1)|φ|} φ⋆{π,α}
                DiffForm l2 = lie_derivative(pi, Rational(sign_pow(kf)) * contraction(phi, al));
                Polyvector br = schouten(pi, phi);
                DiffForm r2 = Rational(sign_pow(br.degree)) * contraction(br, al) +
                              Rational(sign_pow((kp + 1) * kf)) *
                                  (Rational(sign_pow(kf)) * contraction(phi, lie_derivative(pi, al)));
                if (!(l2 == r2)) rep.fail("module Leibniz fails");
                // {π, {φ, α}} = {{π,φ},α} + (-1)^{(|π|-1)(|φ|-1)} {φ,{π,α}}
                DiffForm l3 = lie_derivative(pi, lie_derivative(phi, al));
                DiffForm r3 = lie_derivative(br, al) +
                              Rational(sign_pow((kp + 1) * (kf + 1))) * lie_derivative(phi, lie_derivative(pi, al));
                if (!(l3 == r3)) rep.fail("module Jacobi fails");
                // ε-instances: {επ, {φ,α}} etc. reduce to (0.1b)
                DiffForm l4 = contraction(pi, lie_derivative(phi, al));
                DiffForm r4 = contraction(br, al) +
                              Rational(sign_pow(kp * (kf + 1))) * lie_derivative(phi, contraction(pi, al));
                if (!(l4 == r4)) rep.fail("epsilon Jacobi fails");
            }
    return rep;
}

PolyIdentityReport bv_module_check(int n_vars, int samples, unsigned seed, bool inject_sign_error) {
    PolyIdentityReport rep;
    if (n_vars < 1) throw input_error("bv_module_check: n_vars < 1");
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> cf(-2, 2);
    VolumeForm omega(n_vars);

    auto rand_poly = [&](int maxdeg) {
        Poly p(n_vars);
        std::vector<int> e(n_vars, 0);
        for (int t = 0; t < 3; ++t) {
            for (int i = 0; i < n_vars; ++i) e[i] = static_cast<int>(rng() % (maxdeg + 1));
            p.add_term(e, Rational(cf(rng)));
        }
        return p;
    };
    auto rand_pv = [&](int k) {
        Polyvector v(n_vars, k);
        std::vector<int> idx;
        std::function<void(int)> gen = [&](int start) {
            if (static_cast<int>(idx.size()) == k) {
                v.add(idx, rand_poly(2));
                return;
            }
            for (int i = start; i < n_vars; ++i) {
                idx.push_back(i);
                gen(i + 1);
                idx.pop_back();
            }
        };
        gen(0);
        return v;
    };
    auto rand_form = [&](int k) {
        DiffForm v(n_vars, k);
        std::vector<int> idx;
        std::function<void(int)> gen = [&](int start) {
            if (static_cast<int>(idx.size()) == k) {
                v.add(idx, rand_poly(2));
                return;
            }
            for (int i = start; i < n_vars; ++i) {
                idx.push_back(i);
                gen(i + 1);
                idx.pop_back();
            }
        };
        gen(0);
        return v;
    };

    // the BV-module identity of the pair (∂/∂ε on Γ[ε], d on Ω): for a = π
    // (ε-free) and m = α:  d(a ⋆ α) = (∂_ε a) ⋆ α + (-1)^{|a|} a ⋆ dα + (-1)^{|a|} {a, α}
    for (int s = 0; s < samples; ++s) {
        int kp = static_cast<int>(rng() % (n_vars + 1));
        int ka = static_cast<int>(rng() % (n_vars + 1));
        Polyvector pi = rand_pv(kp);
        DiffForm al = rand_form(ka);
        DiffForm lhs = de_rham(Rational(sign_pow(kp)) * contraction(pi, al));
        DiffForm rhs = Rational(sign_pow(kp)) * (Rational(sign_pow(kp)) * contraction(pi, de_rham(al))) +
                       Rational(sign_pow(kp)) * lie_derivative(pi, al);
        if (inject_sign_error) rhs = rhs + Rational(2) * lie_derivative(pi, al);
        if (!(lhs == rhs)) {
            rep.fail("BV module identity fails at sample " + std::to_string(s));
        }
        // for a = επ: both sides must cancel:  0 = π⋆α - (-1)^{|επ|}... reduces to
        // (-1)^{|π|} i_π α + (-1)^{|π|+1} i_π α = 0, checked via the ⋆/bracket data
        DiffForm l2 = Rational(sign_pow(kp)) * contraction(pi, al);
        DiffForm r2 = Rational(sign_pow(kp)) * contraction(pi, al);
        if (!(l2 == r2)) rep.fail("epsilon BV module identity fails");
        // d^2 = 0 and ∂_ε^2 = 0 on the samples
        if (!de_rham(de_rham(al)).is_zero()) rep.fail("d^2 != 0");
    }
    return rep;
}

}  // namespace gerstlab

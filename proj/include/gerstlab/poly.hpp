#pragma once
#include <gerstlab/linalg.hpp>

#include <map>
#include <string>
#include <vector>

namespace gerstlab {

// Sparse multivariate polynomial over Q.
class Poly {
  public:
    explicit Poly(int nvars = 0) : nvars_(nvars) {}
    static Poly constant(int nvars, const Rational& c);
    static Poly variable(int nvars, int i);

    int nvars() const { return nvars_; }
    const std::map<std::vector<int>, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == std::vector<int>(nvars_, 0)); }

    void add_term(const std::vector<int>& exps, const Rational& c);
    Poly derivative(int i) const;

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const Rational& c, const Poly& a);
    friend bool operator==(const Poly& a, const Poly& b) { return a.nvars_ == b.nvars_ && a.terms_ == b.terms_; }

  private:
    int nvars_;
    std::map<std::vector<int>, Rational> terms_;
};

// Shared exterior-object core: sparse map from strictly increasing index
// tuples to polynomial coefficients.
struct ExteriorCore {
    int nvars = 0;
    int degree = 0;  // exterior degree
    std::map<std::vector<int>, Poly> comps;

    void add(const std::vector<int>& idx, const Poly& p);
    bool is_zero() const { return comps.empty(); }
};

// Polyvector field with polynomial coefficients (odd generators θ_i = ∂_i).
struct Polyvector : ExteriorCore {
    Polyvector(int nv = 0, int k = 0) { nvars = nv, degree = k; }
};

// Differential form with polynomial coefficients (odd generators dx_i).
struct DiffForm : ExteriorCore {
    DiffForm(int nv = 0, int k = 0) { nvars = nv, degree = k; }
};

struct VolumeForm {
    DiffForm form;  // top degree, constant invertible coefficient
    explicit VolumeForm(int nvars);
};

bool operator==(const Polyvector& a, const Polyvector& b);
bool operator==(const DiffForm& a, const DiffForm& b);

Polyvector operator+(const Polyvector& a, const Polyvector& b);
Polyvector operator-(const Polyvector& a, const Polyvector& b);
Polyvector operator*(const Rational& c, const Polyvector& a);
DiffForm operator+(const DiffForm& a, const DiffForm& b);
DiffForm operator-(const DiffForm& a, const DiffForm& b);
DiffForm operator*(const Rational& c, const DiffForm& a);

Polyvector wedge(const Polyvector& a, const Polyvector& b);
DiffForm wedge(const DiffForm& a, const DiffForm& b);

// Schouten-Nijenhuis bracket; restricts to the Lie bracket on vector fields
// and to the directional derivative against functions.
Polyvector schouten(const Polyvector& a, const Polyvector& b);

// Contraction; the last θ-slot acts first.
DiffForm contraction(const Polyvector& pi, const DiffForm& alpha);
DiffForm de_rham(const DiffForm& alpha);
// L_pi = d i_pi - (-1)^k i_pi d
DiffForm lie_derivative(const Polyvector& pi, const DiffForm& alpha);

// divergence through the pipeline I^{-1} d I, I(pi) = i_pi Omega
Polyvector divergence(const Polyvector& pi, const VolumeForm& omega);

// the contraction/Lie-derivative identity package and the BV package,
// verified exactly on given inputs
struct PolyIdentityReport {
    bool ok = true;
    std::vector<std::string> violations;
    void fail(std::string w) {
        ok = false;
        violations.push_back(std::move(w));
    }
};

PolyIdentityReport check_cartan_identities(const std::vector<Polyvector>& samples_pi,
                                           const std::vector<Polyvector>& samples_phi,
                                           const std::vector<DiffForm>& samples_alpha);
PolyIdentityReport check_bv_package(const std::vector<Polyvector>& samples, const VolumeForm& omega);

// module checks: the Γ[ε]-module structure on forms and the BV
// module over (Γ[ε], ∂/∂ε).
PolyIdentityReport eps_module_check(const std::vector<Polyvector>& pis, const std::vector<Polyvector>& phis,
                                    const std::vector<DiffForm>& alphas);
PolyIdentityReport bv_module_check(int n_vars, int samples, unsigned seed = 12345, bool inject_sign_error = false);

}  // namespace gerstlab

#pragma once
#include <gerstlab/cochain.hpp>

#include <map>
#include <vector>

namespace gerstlab {

// Element of A^{tensor (n+1)}: a formal combination of basis words a_0 ⊗ ... ⊗ a_n.
class ChainElement {
  public:
    ChainElement(const Algebra& A, int degree) : A_(&A), degree_(degree) {
        if (degree < 0) throw input_error("ChainElement: negative degree");
    }

    const Algebra& algebra() const { return *A_; }
    int degree() const { return degree_; }
    const std::map<std::vector<int>, Rational>& terms() const { return terms_; }

    void add_term(const std::vector<int>& word, const Rational& c);
    bool is_zero() const { return terms_.empty(); }

    friend ChainElement operator+(const ChainElement& a, const ChainElement& b);
    friend ChainElement operator-(const ChainElement& a, const ChainElement& b);
    friend ChainElement operator*(const Rational& c, const ChainElement& a);
    friend bool operator==(const ChainElement& a, const ChainElement& b);

  private:
    const Algebra* A_;
    int degree_;
    std::map<std::vector<int>, Rational> terms_;
};

// Hochschild boundary on plain tensors; lowers degree by 1.
ChainElement boundary_b(const ChainElement& c);

// Slotwise unit-killing projection onto the normalized model (slots >= 1).
ChainElement normalize_project(const ChainElement& c);

// Normalized Connes differential B = P ∘ sN ∘ P; raises degree by 1.
ChainElement connes_B(const ChainElement& c);

// Normalized boundary P ∘ b, the differential paired with B in the mixed complex.
ChainElement boundary_b_normalized(const ChainElement& c);

// Contraction i_D: lowers chain degree by arity(D).
ChainElement contraction_iD(const Cochain& D, const ChainElement& c);

// Lie action L_D: lowers chain degree by arity(D) - 1.
ChainElement lie_LD(const Cochain& D, const ChainElement& c);

struct NegativeCyclicWindow {
    int u_max = 1;
    int n_max = 0;
    bool square_zero = true;                         // (b + uB)^2 == 0 on the window
    std::vector<std::pair<int, int>> homology_dims;  // (total degree, dim), deg u = -2
};

// Truncated negative cyclic complex (C̄_*(A)[u]/(u^{u_max}), b + uB).
NegativeCyclicWindow negative_cyclic_window(const Algebra& A, int n_max, int u_max);

}  // namespace gerstlab

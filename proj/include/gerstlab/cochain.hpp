#pragma once
#include <gerstlab/algebra.hpp>

#include <cstddef>
#include <optional>
#include <vector>

namespace gerstlab {

// Multilinear map A^{tensor n} -> A, stored as a dense table over basis tuples.
// The total degree of a homogeneous cochain is arity + internal degree.
class Cochain {
  public:
    Cochain(const Algebra& A, int arity);
    static Cochain basis_cochain(const Algebra& A, const std::vector<int>& tuple, int out);
    // the two-cochain m(a,b) = (-1)^{|a|} ab generating cup, bracket and delta
    static Cochain multiplication(const Algebra& A);

    const Algebra& algebra() const { return *A_; }
    int arity() const { return arity_; }
    size_t table_size() const { return table_.size(); }
    const Vec& entry(const std::vector<int>& tuple) const { return table_[tuple_flat(tuple, A_->dim())]; }
    const Vec& entry_flat(size_t f) const { return table_[f]; }
    Vec& entry_mut(const std::vector<int>& tuple) { return table_[tuple_flat(tuple, A_->dim())]; }
    Vec& entry_mut_flat(size_t f) { return table_[f]; }

    bool is_zero() const;
    // internal degree when homogeneous (zero cochains report degree 0)
    std::optional<int> internal_degree() const;
    std::vector<std::pair<int, Cochain>> homogeneous_components() const;

    friend Cochain operator+(const Cochain& a, const Cochain& b);
    friend Cochain operator-(const Cochain& a, const Cochain& b);
    friend Cochain operator*(const Rational& c, const Cochain& a);
    friend bool operator==(const Cochain& a, const Cochain& b);

  private:
    const Algebra* A_;
    int arity_;
    std::vector<Vec> table_;
};

// D0{D1,...,Dm}: sum over order-preserving insertions with Getzler-Jones signs.
Cochain brace(const Cochain& D0, const std::vector<Cochain>& args);

Cochain cup(const Cochain& D, const Cochain& E);           // (-1)^{|D|} m{D,E}
Cochain gerst_bracket(const Cochain& D, const Cochain& E); // D{E} - (-1)^{(|D|-1)(|E|-1)} E{D}
Cochain hoch_delta(const Cochain& D);                      // [m, D]

struct CohomologyDegree {
    int n = 0;
    int dimension = 0;
    std::vector<Cochain> representatives;
};

// HH^n(A,A) for n = 0..n_max with cocycle representatives.
std::vector<CohomologyDegree> hochschild_cohomology(const Algebra& A, int n_max);

// delta_n as a matrix C^n -> C^{n+1} over the basis-cochain bases.
Matrix hoch_delta_matrix(const Algebra& A, int n);

}  // namespace gerstlab

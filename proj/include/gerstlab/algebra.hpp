#pragma once
#include <gerstlab/linalg.hpp>

#include <optional>
#include <string>
#include <vector>

namespace gerstlab {

// Finite-dimensional graded associative algebra given by structure constants,
// with a distinguished unit and an optional trace functional.
class Algebra {
  public:
    Algebra(GradedSpace space, const std::vector<std::tuple<int, int, int, Rational>>& triples, Vec unit,
            std::optional<Vec> trace = std::nullopt);

    int dim() const { return space_.dim(); }
    int degree(int i) const { return space_.degree(i); }
    const GradedSpace& space() const { return space_; }
    const Vec& unit() const { return unit_; }
    bool has_trace() const { return trace_.has_value(); }
    const Vec& trace_vector() const { return *trace_; }

    const SparseVec& mul_basis(int i, int j) const { return table_[static_cast<size_t>(i) * dim() + j]; }
    Vec mul(const Vec& a, const Vec& b) const;
    Rational trace_of(const Vec& a) const;

    // Associativity, unit laws, grading compatibility, trace symmetry.
    ValidationReport validate() const;

    bool ungraded() const { return ungraded_; }

  private:
    GradedSpace space_;
    std::vector<SparseVec> table_;
    Vec unit_;
    std::optional<Vec> trace_;
    bool ungraded_;
};

// Shipped test algebras.
Algebra dual_numbers();        // Q[x]/(x^2)
Algebra ground_field();        // Q
Algebra q_times_q();           // Q x Q
Algebra upper_triangular2();   // 2x2 upper triangular matrices
Algebra m2_with_trace();       // M_2(Q) with matrix trace
Algebra exterior_1_graded();   // Q[t]/(t^2), deg t = -1 (a genuinely graded sample)

}  // namespace gerstlab

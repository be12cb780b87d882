#pragma once
#include <gerstlab/chains.hpp>

#include <map>
#include <memory>

namespace gerstlab {

// R = A ∔ A* with the square-zero bimodule product; A* carries weight -1.
struct SquareZeroExtension {
    std::shared_ptr<Algebra> R;
    std::vector<int> weight;  // per R-basis element: 0 on A, -1 on A*
    int dimA = 0;
};

SquareZeroExtension square_zero_extension(const Algebra& A);

// weight of a basis cochain (inputs `tuple`, output `out`) of C(R,R)
int cochain_weight(const SquareZeroExtension& ext, const std::vector<int>& tuple, int out);

struct GradingSplitReport {
    bool ok = true;
    std::vector<std::string> violations;

    bool weights_bounded_below = true;     // no component of weight < -1
    bool delta_preserves_weight = true;
    bool braces_preserve_weight = true;
    bool delta_matches_b_transpose = true; // on weight -1, through the diagonal iso
    bool split_exact = true;
    // the explicit identification C^n(R,R)^{-1} ≅ C_n(A,A)^*: a sign per chain word
    std::map<int, std::vector<int>> iso_signs;  // arity -> signs

    void fail(std::string what) {
        ok = false;
        violations.push_back(std::move(what));
    }
};

// Verifies the weight structure of C(R,R) up to the given arity: the grading of
// the brace operations, the identification of the weight -1 part with the dual
// chain complex, and the split exact sequence over the weight 0 part.
GradingSplitReport grading_split(const Algebra& A, int arity_max);

// ---- trace-adjoint machinery ----

// Gram matrix <a,b> = Tr(ab) over the basis; must be invertible for the rest.
Matrix trace_gram(const Algebra& A);

// The unique D* with Tr(a_0 D(a_1..a_m)) = Tr(a_m D*(a_0..a_{m-1})).
Cochain trace_adjoint(const Cochain& D);

// J(D)(a_0 ⊗ ... ⊗ a_n) = Tr(a_0 D(a_1..a_n)), as a dense functional over words.
Vec j_map(const Cochain& D);

// B_0 = J^{-1} ∘ B^T ∘ J; satisfies B_0^2 = 0.
Cochain b0(const Cochain& D);

}  // namespace gerstlab

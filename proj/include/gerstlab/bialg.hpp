#pragma once
#include <gerstlab/lambda_lie.hpp>

#include <memory>

namespace gerstlab {

// Graded Lie bialgebra by structure constants, with optional differential and
// filtration labels.
struct LieBialgebra {
    GradedSpace space;
    // bracket[i][j] -> g; cobracket[i] -> Λ²g as (a < b, coeff) triples
    std::vector<std::vector<SparseVec>> bracket;
    std::vector<std::vector<std::tuple<int, int, Rational>>> cobracket;
    std::vector<SparseVec> differential;  // empty = no differential
    std::vector<int> filtration;          // empty = all 1

    int dim() const { return space.dim(); }
};

LieBialgebra two_dim_bialgebra();  // [x,y] = y, nu(x) = 0, nu(y) = x∧y

ValidationReport validate_lie_bialgebra(const LieBialgebra& g);

// Workspace: Λ(g) together with the three deformation-complex differentials.
class DefComplex {
  public:
    DefComplex(LieBialgebra g, int lambda_cap = 0);

    const LieBialgebra& bialgebra() const { return g_; }
    const LambdaLie& lambda() const { return *L_; }

    // a cell Hom(Λ^p g, Λ^q g): values on the Λ^p monomial basis
    struct Cell {
        int p = 1, q = 1;
        std::map<int, LambdaLie::Elt> values;  // key: Λ^p monomial index
        bool is_zero() const;
    };

    Cell zero_cell(int p, int q) const;
    std::vector<int> monomials_of_length(int p) const;
    // total degree |D| = 2p - 2 + homogeneity degree
    std::optional<int> cell_degree(const Cell& c) const;

    Cell add(const Cell& a, const Cell& b) const;
    Cell scale(const Rational& r, const Cell& a) const;
    bool equal(const Cell& a, const Cell& b) const;

    // the three differentials
    Cell d_lie(const Cell& c) const;    // p -> p+1
    Cell d_colie(const Cell& c) const;  // q -> q+1
    Cell d_delta(const Cell& c) const;  // bidegree preserved

    // operator interpretation
    LambdaOperator pure_order_extend(const Cell& c) const;
    std::vector<Cell> pure_components(const LambdaOperator& op, int max_order) const;
    Cell poisson_bracket(const Cell& P, const Cell& Q) const;

    // the distinguished operators: delta, coLie derivation, Delta_Lie
    LambdaOperator delta_operator() const;
    LambdaOperator colie_operator() const;
    LambdaOperator delta_lie_op() const;

    // does the cell's extension preserve the filtration?
    bool filtered(const Cell& c) const;

    ValidationReport lemma51_check(const std::vector<Cell>& samples) const;

  private:
    LieBialgebra g_;
    std::shared_ptr<LambdaLie> L_;
    std::vector<LambdaLie::Elt> cobracket_values_;
};

struct ObstructionStep {
    int step = 0;
    DefComplex::Cell obstruction;   // c_p
    bool solvable = false;
    DefComplex::Cell solution;      // X with {Δ(0), X} = c_p when solvable
};

struct ObstructionReport {
    bool delta0_square_zero = true;
    std::vector<ObstructionStep> steps;
    bool fully_solved = false;
};

// Obstruction chain: extend Δ(0) = δ + ∂^coLie step by step, reporting each
// obstruction cochain and its solvability inside the filtered complex.
ObstructionReport obstruction_sequence(const DefComplex& dc, const std::vector<DefComplex::Cell>& initial,
                                       int p_max);

// The cobracket followed by the bracket, as a C^{0,0} cell.
DefComplex::Cell canonical_derivation_cell(const DefComplex& dc);

}  // namespace gerstlab

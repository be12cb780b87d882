#pragma once
#include <gerstlab/free_lie.hpp>

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace gerstlab {

// A graded Lie algebra presented on a finite basis, with filtration weights.
struct LieData {
    std::vector<std::string> labels;
    std::vector<int> degree;  // g-degrees
    std::vector<int> weight;  // filtration weight, >= 1
    std::function<SparseVec(int, int)> bracket;
    int dim() const { return static_cast<int>(degree.size()); }
};

LieData lie_data_from_free(const FreeLie& L);

// Weight-truncated graded-commutative algebra Λ(g) = S(g[-1]) with the
// Gerstenhaber bracket extending the Lie bracket, and the BV operator
// Δ_Lie determined by Δ(v∧w) = [v,w].
class LambdaLie {
  public:
    using Elt = std::map<int, Rational>;  // sparse over the monomial basis

    LambdaLie(LieData g, int weight_cap);

    const LieData& lie() const { return g_; }
    int weight_cap() const { return cap_; }
    int dim() const { return static_cast<int>(monomials_.size()); }
    const std::vector<int>& monomial(int m) const { return monomials_[m]; }
    int monomial_index(const std::vector<int>& mono) const;
    std::string monomial_label(int m) const;

    int lambda_degree_gen(int gi) const { return g_.degree[gi] + 1; }
    int degree(int m) const;   // Λ-degree of a monomial
    int weight(int m) const;   // total filtration weight
    int unit_index() const { return unit_; }

    Elt gen(int gi) const;
    Elt mul(const Elt& a, const Elt& b) const;
    Elt bracket(const Elt& a, const Elt& b) const;
    Elt delta_lie(const Elt& a) const;
    static Elt scale(const Rational& c, const Elt& a);
    static Elt add(const Elt& a, const Elt& b);
    static bool is_zero(const Elt& a) { return a.empty(); }

    // Λ-degree when homogeneous
    std::optional<int> elt_degree(const Elt& a) const;

  private:
    LieData g_;
    int cap_;
    std::vector<std::vector<int>> monomials_;  // sorted generator multisets
    std::map<std::vector<int>, int> index_;
    int unit_ = 0;
    Elt mul_monomials(const std::vector<int>& a, const std::vector<int>& b) const;
    Elt bracket_mono(const std::vector<int>& a, const std::vector<int>& b) const;
    mutable std::map<std::pair<int, int>, Elt> bracket_cache_;
};

// A linear operator on the truncated Λ(g), stored by images of basis monomials.
struct LambdaOperator {
    const LambdaLie* L = nullptr;
    int degree = 0;  // Λ-degree shift, used for graded commutators
    std::vector<LambdaLie::Elt> images;

    LambdaOperator() = default;
    LambdaOperator(const LambdaLie& l, int deg) : L(&l), degree(deg), images(l.dim()) {}

    LambdaLie::Elt apply(const LambdaLie::Elt& x) const;
    bool is_zero() const;
};

LambdaOperator compose(const LambdaOperator& a, const LambdaOperator& b);
LambdaOperator op_add(const LambdaOperator& a, const LambdaOperator& b);
LambdaOperator op_scale(const Rational& c, const LambdaOperator& a);
// graded commutator a b - (-1)^{|a||b|} b a
LambdaOperator graded_commutator(const LambdaOperator& a, const LambdaOperator& b);
// left multiplication by a (possibly inhomogeneous treats as given degree)
LambdaOperator multiplication_operator(const LambdaLie& L, const LambdaLie::Elt& a, int deg);
LambdaOperator delta_lie_operator(const LambdaLie& L);

// Derivation data: values on the generators of g, extended by the product
// Leibniz rule; optionally built from values on free-Lie generators through
// the bracket Leibniz rule.
struct Derivation {
    const LambdaLie* L = nullptr;
    int degree = 1;
    std::vector<LambdaLie::Elt> gen_values;  // one per g-basis element

    LambdaOperator as_operator() const;
};

// extends values given on all g-generators (product derivation)
Derivation extend_derivation(const LambdaLie& L, int degree, std::vector<LambdaLie::Elt> values);

// checks D[u,v] = [Du,v] + (-1)^{|D|(|u|-1)} [u,Dv] on generator pairs
bool is_bracket_derivation(const Derivation& D);

struct SquareZeroReport {
    bool ok = true;
    std::string witness;  // generator label where D^2 != 0
};
SquareZeroReport check_square_zero(const Derivation& D);

// Grothendieck inductive order of a homogeneous operator, checked against the
// algebra generators (sampled pairs when `sample_cap` > 0 bounds the work).
bool operator_order_leq(const LambdaOperator& op, int k, int sample_cap = 0, unsigned seed = 1);

}  // namespace gerstlab

#pragma once
#include <gerstlab/lambda_lie.hpp>

#include <memory>

namespace gerstlab {

// One operation m_{k_1..k_n}: a multilinear table over the base space,
// inputs flattened block by block.
struct GinftyOp {
    std::vector<int> blocks;                  // k_1 <= ... <= k_n after canonicalization
    std::map<std::vector<int>, Vec> entries;  // tuple (length sum k_i) -> output vector
};

struct GinftyStructure {
    GradedSpace space;
    std::vector<GinftyOp> ops;
};

// Workspace for one base space at one truncation weight: V = A[1]*, the free
// Lie algebra on V and the completed (truncated) Λ(Lie V).
class GinftyEngine {
  public:
    GinftyEngine(GradedSpace A, int weight_cap);

    const GradedSpace& base() const { return A_; }
    int weight_cap() const { return W_; }
    const FreeLie& free_lie() const { return *free_; }
    const LambdaLie& lambda() const { return *lambda_; }

    // m-ops -> generator values of the derivation on V (validates degree rule,
    // Harrison condition and block symmetry on the way in)
    Derivation derivation_from_mops(const GinftyStructure& G, int op_degree = 1) const;
    // generator values on V -> m-op tables (all shapes of weight <= cap)
    GinftyStructure mops_from_derivation(const std::vector<LambdaLie::Elt>& v_values, int op_degree = 1) const;

    // extends values on V to all Lie-word generators by the bracket Leibniz rule
    std::vector<LambdaLie::Elt> bracket_extend(const std::vector<LambdaLie::Elt>& v_values, int op_degree) const;

    ValidationReport validate_ops(const GinftyStructure& G, int op_degree = 1) const;

    int v_index_of_base(int alpha) const { return alpha; }  // V basis parallels A basis

  private:
    GradedSpace A_;
    int W_;
    std::shared_ptr<FreeLie> free_;
    std::shared_ptr<LambdaLie> lambda_;

    struct ShapePairing {
        std::vector<int> shape;                    // ascending block sizes
        std::vector<std::vector<int>> tuples;      // flat input tuples over A
        std::vector<int> monomials;                // Λ-monomial indices of this shape
        Matrix P;                                  // tuples x monomials
    };
    mutable std::map<std::vector<int>, ShapePairing> pairings_;
    const ShapePairing& pairing(const std::vector<int>& shape) const;
    Rational pair_monomial_tuple(int mono, const std::vector<int>& shape, const std::vector<int>& tuple) const;
};

// the G-infinity structure of an honest Gerstenhaber algebra,
// here Λ(g) for a finite-dimensional Lie algebra g.
struct GerstFixture {
    std::shared_ptr<LambdaLie> algebra;  // the Gerstenhaber algebra itself
    GradedSpace space;                   // its underlying graded space
    GinftyStructure G;                   // ops m_2, m_{1,1}
};
GerstFixture gerstenhaber_fixture(const LieData& g, int lambda_cap);

// canonical deformation data over A[eps]; the operator-level objects live on
// Λ(Lie V)[ε] realized as Λ(Lie(V) ⊕ kε) with ε an odd central generator
struct CanonicalDeformation {
    GradedSpace space_eps;     // A ⊕ εA
    GinftyStructure G_eps;     // the deformed operations (k[ε]-multilinear tables)
    bool D_is_derivation = true;
    bool square_zero = true;   // ∂_can² = 0 at the truncation
    std::shared_ptr<LambdaLie> lambda_eps;
    int eps_gen = -1;          // index of ε among the extended generators
    Derivation partial_can;    // ∂ + εD on Λ(Lie V)[ε]
};
CanonicalDeformation canonical_deformation(const GinftyEngine& eng, const GinftyStructure& G);

// 1 - εΔ intertwines the canonical and trivial deformations.
// Runs over an abstract Gerstenhaber algebra given by callbacks.
template <class Elt>
struct GerstOps {
    std::function<Elt(const Elt&, const Elt&)> mul;
    std::function<Elt(const Elt&, const Elt&)> bracket;
    std::function<Elt(const Elt&)> delta;          // BV operator
    std::function<Elt(const Elt&, const Elt&)> sub;
    std::function<Elt(const Rational&, const Elt&)> scale;
    std::function<bool(const Elt&)> is_zero;
    std::function<int(const Elt&)> degree;         // of homogeneous elements
};

struct EpsIsoReport {
    bool bv_ok = true;        // Δ satisfies the BV identity on the samples
    bool intertwines = true;  // (1-εΔ)(a ⋆ b) = (1-εΔ)a ·_triv (1-εΔ)b
    bool ok() const { return bv_ok && intertwines; }
};

template <class Elt>
EpsIsoReport eps_isomorphism(const GerstOps<Elt>& ops, const std::vector<Elt>& samples) {
    EpsIsoReport rep;
    for (const auto& a : samples)
        for (const auto& b : samples) {
            const long da = ops.degree(a);
            // BV identity in the bracket orientation of this engine:
            // Δ(ab) = Δ(a)b + (-1)^{|a|} a Δ(b) - (-1)^{|a|} [a,b]
            Elt lhs = ops.delta(ops.mul(a, b));
            Elt rhs = ops.mul(ops.delta(a), b);
            rhs = ops.sub(rhs, ops.scale(Rational(-sign_pow(da)), ops.mul(a, ops.delta(b))));
            rhs = ops.sub(rhs, ops.scale(Rational(sign_pow(da)), ops.bracket(a, b)));
            if (!ops.is_zero(ops.sub(lhs, rhs))) rep.bv_ok = false;

            // (1-εΔ): trivial -> canonical; the ε-component of
            // F(a·b) = F(a) ⋆ F(b) reads
            //   Δ(ab) + (-1)^{|a|}[a,b] = Δ(a)b + (-1)^{|a|} a Δ(b)
            Elt l1 = ops.delta(ops.mul(a, b));
            l1 = ops.sub(l1, ops.scale(Rational(-sign_pow(da)), ops.bracket(a, b)));
            Elt r1 = ops.mul(ops.delta(a), b);
            r1 = ops.sub(r1, ops.scale(Rational(-sign_pow(da)), ops.mul(a, ops.delta(b))));
            if (!ops.is_zero(ops.sub(l1, r1))) rep.intertwines = false;
        }
    return rep;
}

// BV-infinity validation for a candidate Δ = ∂ + Δ_1 + Δ_3 + ...
struct BVInfinityCandidate {
    const LambdaLie* L = nullptr;
    LambdaOperator partial;                             // the G∞ derivation ∂
    std::vector<std::pair<int, LambdaOperator>> comps;  // (i odd, Δ_i of degree -i)
};

// the canonical operator Δ_can = ∂_can + Δ_Lie + ∂/∂ε as a BV∞ candidate on
// Λ(Lie V)[ε]
BVInfinityCandidate canonical_bv_candidate(const CanonicalDeformation& cd);

struct BVValidationReport {
    bool ok = true;
    bool square_zero = true;
    bool delta1_order = true;   // Δ_1 - Δ_Lie of order 1
    bool higher_orders = true;  // Δ_{2i-1} of order i
    bool kills_unit = true;
    bool filtration = true;
    std::vector<std::string> notes;
};

BVValidationReport validate_bvinfty(const BVInfinityCandidate& c, int order_sample_cap = 0);

// morphism data between two truncated Λ(Lie(·)) algebras
struct BVMorphismCandidate {
    const LambdaLie* source = nullptr;  // Λ(Lie(B[1]*))
    const LambdaLie* target = nullptr;
    // F_0 on generators of the source g, extended as an algebra morphism
    std::vector<LambdaLie::Elt> f0_gen_values;
    // higher components as full operators (degree -2i)
    std::vector<std::pair<int, std::vector<LambdaLie::Elt>>> higher;  // (i, images per source monomial)
};

struct BVMorphismReport {
    bool ok = true;
    bool f0_morphism = true;
    bool orders = true;
    bool kills_unit = true;
    bool filtration = true;
    bool intertwines = true;
    std::vector<std::string> notes;
};

BVMorphismReport validate_bv_morphism(const BVMorphismCandidate& c, const LambdaOperator& delta_source,
                                      const LambdaOperator& delta_target);

}  // namespace gerstlab

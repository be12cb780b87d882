#pragma once
#include <gerstlab/linalg.hpp>

#include <map>
#include <vector>

namespace gerstlab {

// Finite-dimensional graded bialgebra by structure constants.
struct FinBialgebra {
    GradedSpace space;
    std::vector<std::vector<SparseVec>> mul;                        // product table
    std::vector<std::vector<std::tuple<int, int, Rational>>> comul; // coproduct per basis element
    Vec unit;
    Vec counit;                                                     // counit functional
    std::vector<SparseVec> differential;                            // optional

    int dim() const { return space.dim(); }
};

// exterior algebra on one odd primitive generator
FinBialgebra exterior_hopf();

ValidationReport validate_bialgebra(const FinBialgebra& H);

// cell Hom(H^{⊗p}, H^{⊗q}); |D| = p + q - 2 + homogeneity
struct HopfCell {
    int p = 1, q = 1;
    // input tuple -> sparse combination of output tuples
    std::map<std::vector<int>, std::map<std::vector<int>, Rational>> entries;
    bool is_zero() const { return entries.empty(); }
};

HopfCell hopf_zero(int p, int q);
HopfCell hopf_add(const HopfCell& a, const HopfCell& b);
HopfCell hopf_scale(const Rational& c, const HopfCell& a);
bool hopf_equal(const HopfCell& a, const HopfCell& b);
std::optional<int> hopf_cell_degree(const FinBialgebra& H, const HopfCell& c);

// Gerstenhaber–Schack style differentials: the Hochschild differential with
// coefficients in H^{⊗q} under the outer action, and its coalgebra dual.
HopfCell hopf_d_alg(const FinBialgebra& H, const HopfCell& c);
HopfCell hopf_d_coalg(const FinBialgebra& H, const HopfCell& c);
HopfCell hopf_d_delta(const FinBialgebra& H, const HopfCell& c);

}  // namespace gerstlab

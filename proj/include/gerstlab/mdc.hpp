#pragma once
#include <gerstlab/poly.hpp>

namespace gerstlab {

// Multidifferential Hochschild cochain on Q[x_1..x_n]: a finite sum of terms
// (polynomial coefficient) * (per-slot iterated partial derivatives), stored
// in normal form keyed by the concatenated slot multi-indices.
struct MultiDiffCochain {
    int nvars = 0;
    int arity = 0;
    std::map<std::vector<int>, Poly> terms;  // key length = arity * nvars

    MultiDiffCochain(int nv = 0, int m = 0) : nvars(nv), arity(m) {}

    void add_term(const std::vector<int>& slot_orders, const Poly& coeff);
    bool is_zero() const { return terms.empty(); }
    Poly evaluate(const std::vector<Poly>& args) const;
};

bool operator==(const MultiDiffCochain& a, const MultiDiffCochain& b);
MultiDiffCochain operator+(const MultiDiffCochain& a, const MultiDiffCochain& b);
MultiDiffCochain operator-(const MultiDiffCochain& a, const MultiDiffCochain& b);
MultiDiffCochain operator*(const Rational& c, const MultiDiffCochain& a);

// the multiplication two-cochain m(a,b) = ab
MultiDiffCochain mdc_multiplication(int nvars);

MultiDiffCochain brace_mdc(const MultiDiffCochain& D0, const std::vector<MultiDiffCochain>& args);
MultiDiffCochain mdc_cup(const MultiDiffCochain& D, const MultiDiffCochain& E);
MultiDiffCochain mdc_bracket(const MultiDiffCochain& D, const MultiDiffCochain& E);
MultiDiffCochain mdc_delta(const MultiDiffCochain& D);

// full antisymmetrization with 1/k! normalization; first-order in every slot
MultiDiffCochain hkr(const Polyvector& pi);

struct HkrCompatReport {
    enum class Status { solved, zero_defect, inconclusive };
    Status status = Status::zero_defect;
    MultiDiffCochain witness;  // hkr([pi,phi]) - [hkr pi, hkr phi] = delta(witness)
    int coeff_degree_cap = 0;
    int order_cap = 0;
};

// Searches a bounded window of multidifferential cochains for a coboundary
// witness of the bracket-compatibility defect.
HkrCompatReport hkr_bracket_compat(const Polyvector& pi, const Polyvector& phi, int coeff_degree_cap = 4,
                                   int order_cap = 2);

}  // namespace gerstlab

#pragma once
#include <gerstlab/cochain.hpp>

#include <map>
#include <memory>
#include <vector>

namespace gerstlab {

// The arity-truncated quotient of the Hochschild cochain dg algebra: letters
// are basis cochains of arity <= cap, with cup, delta and braces computed in
// the quotient (the high-arity part is a two-sided dg ideal).
class CochainLetters {
  public:
    CochainLetters(const Algebra& A, int arity_cap);

    const Algebra& algebra() const { return *A_; }
    int arity_cap() const { return cap_; }
    int count() const { return static_cast<int>(letters_.size()); }
    int arity(int l) const { return letters_[l].first; }
    int total_degree(int l) const;  // = arity for an ungraded base algebra
    Cochain to_cochain(int l) const;
    // expand a cochain over the letter basis, dropping arities beyond the cap
    SparseVec from_cochain(const Cochain& c) const;

    SparseVec cup_letters(int a, int b) const;
    SparseVec delta_letter(int a) const;
    SparseVec brace_letters(int d0, const std::vector<int>& args) const;

  private:
    const Algebra* A_;
    int cap_;
    std::vector<std::pair<int, size_t>> letters_;  // (arity, flat index of (tuple,out))
    mutable std::map<std::vector<int>, SparseVec> brace_cache_;
};

// Element of the cobar construction T(C[1]): a combination of tensor words of
// letters, with word length bounded by the truncation.
struct CobarWord {
    const CochainLetters* C = nullptr;
    std::map<std::vector<int>, Rational> terms;

    bool is_zero() const { return terms.empty(); }
    void add(const std::vector<int>& word, const Rational& c);
};

CobarWord cobar_zero(const CochainLetters& C);
CobarWord cobar_single(const CochainLetters& C, const std::vector<int>& word, const Rational& c = Rational(1));
CobarWord cobar_add(const CobarWord& a, const CobarWord& b);
CobarWord cobar_scale(const Rational& c, const CobarWord& a);
bool cobar_equal(const CobarWord& a, const CobarWord& b);

// deconcatenation coproduct: list of (prefix, suffix) splittings per term
std::vector<std::tuple<std::vector<int>, std::vector<int>, Rational>> cobar_comul(const CobarWord& x);

// the cobar differential (cup of neighbours + internal delta)
CobarWord cobar_d(const CobarWord& x, int length_cap);

// the B-infinity product: the coalgebra-map extension of the brace projection
CobarWord binfty_product(const CobarWord& x, const CobarWord& y, int length_cap);

// the explicit antipode
CobarWord antipode(const CobarWord& x, int length_cap);

struct CobarReport {
    bool ok = true;
    bool coassociative = true;
    bool d_square_zero = true;
    bool comul_multiplicative = true;
    bool d_derivation = true;
    bool filtration = true;
    bool antipode_ok = true;
    bool unit_ok = true;
    bool associative = true;
    std::vector<std::string> notes;
};

// the full cobar/B-infinity verification battery on words of length <= L
CobarReport validate_binfty(const Algebra& A, int arity_cap, int L, int pair_budget = 400, unsigned seed = 5);

}  // namespace gerstlab

#pragma once
#include <gerstlab/linalg.hpp>

#include <map>
#include <vector>

namespace gerstlab {

// Weight-truncated free graded Lie algebra on a graded generator space, with a
// super-Lyndon basis: standard bracketings of Lyndon words, plus [w,w] for
// Lyndon words of odd degree.
class FreeLie {
  public:
    struct BasisWord {
        std::vector<int> letters;  // Lyndon word
        bool square = false;       // the element [b(w), b(w)]
    };

    FreeLie(GradedSpace generators, int weight_cap);

    const GradedSpace& generators() const { return gens_; }
    int weight_cap() const { return cap_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    const BasisWord& word(int i) const { return basis_[i]; }
    int weight(int i) const { return weight_[i]; }
    int degree(int i) const { return degree_[i]; }
    std::string label(int i) const;

    // expansion of basis element i in the tensor algebra T(V)
    const std::map<std::vector<int>, Rational>& expansion(int i) const { return expansion_[i]; }

    // bracket of two basis elements expanded over the basis; empty when the
    // combined weight exceeds the cap
    SparseVec bracket(int i, int j) const;

    // dims per weight 1..cap
    std::vector<int> dims_by_weight() const;

  private:
    GradedSpace gens_;
    int cap_;
    std::vector<BasisWord> basis_;
    std::vector<int> weight_, degree_;
    std::vector<std::map<std::vector<int>, Rational>> expansion_;
    // per weight: word list, index, and an echelon solve context (lazy)
    struct WeightBlock {
        std::vector<int> members;                       // basis indices
        std::vector<std::vector<int>> words;            // tensor words of this weight
        std::map<std::vector<int>, int> word_index;
        Matrix expansions;                              // rows = words, cols = members
    };
    std::map<int, WeightBlock> blocks_;
    mutable std::map<std::pair<int, int>, SparseVec> bracket_cache_;

    std::map<std::vector<int>, Rational> tensor_bracket(const std::map<std::vector<int>, Rational>& x,
                                                        const std::map<std::vector<int>, Rational>& y) const;
    std::map<std::vector<int>, Rational> expand_standard_bracketing(const std::vector<int>& w) const;
    int word_degree(const std::vector<int>& w) const;
};

}  // namespace gerstlab

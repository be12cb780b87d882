#include <gerstlab/free_lie.hpp>

#include <algorithm>
#include <functional>

namespace gerstlab {

namespace {

bool is_lyndon(const std::vector<int>& w) {
    // strictly smaller than every proper suffix
    const size_t n = w.size();
    for (size_t i = 1; i < n; ++i) {
        std::vector<int> suffix(w.begin() + i, w.end());
        if (!(w < suffix)) return false;
    }
    return true;
}

// standard factorization w = uv with v the longest proper Lyndon suffix
size_t standard_split(const std::vector<int>& w) {
    for (size_t i = 1; i < w.size(); ++i) {
        std::vector<int> suffix(w.begin() + i, w.end());
        if (is_lyndon(suffix)) return i;
    }
    throw std::logic_error("standard_split: not reached");
}

}  // namespace

int FreeLie::word_degree(const std::vector<int>& w) const {
    int d = 0;
    for (int l : w) d += gens_.degree(l);
    return d;
}

std::map<std::vector<int>, Rational> FreeLie::tensor_bracket(const std::map<std::vector<int>, Rational>& x,
                                                             const std::map<std::vector<int>, Rational>& y) const {
    std::map<std::vector<int>, Rational> out;
    auto add = [&](const std::vector<int>& w, const Rational& c) {
        if (c.is_zero()) return;
        auto it = out.find(w);
        if (it == out.end())
            out.emplace(w, c);
        else {
            it->second += c;
            if (it->second.is_zero()) out.erase(it);
        }
    };
    for (const auto& [wx, cx] : x)
        for (const auto& [wy, cy] : y) {
            std::vector<int> xy(wx);
            xy.insert(xy.end(), wy.begin(), wy.end());
            add(xy, cx * cy);
            std::vector<int> yx(wy);
            yx.insert(yx.end(), wx.begin(), wx.end());
            const long s = static_cast<long>(word_degree(wx)) * word_degree(wy);
            add(yx, Rational(-sign_pow(s)) * cx * cy);
        }
    return out;
}

std::map<std::vector<int>, Rational> FreeLie::expand_standard_bracketing(const std::vector<int>& w) const {
    if (w.size() == 1) return {{w, Rational(1)}};
    const size_t s = standard_split(w);
    std::vector<int> u(w.begin(), w.begin() + s), v(w.begin() + s, w.end());
    return tensor_bracket(expand_standard_bracketing(u), expand_standard_bracketing(v));
}

FreeLie::FreeLie(GradedSpace generators, int weight_cap) : gens_(std::move(generators)), cap_(weight_cap) {
    if (cap_ < 1) throw input_error("FreeLie: weight cap must be >= 1");
    const int g = gens_.dim();

    // Lyndon words by weight
    std::vector<std::vector<int>> lyndon;
    std::vector<int> w;
    std::function<void(int)> gen = [&](int depth) {
        if (depth > 0 && is_lyndon(w)) lyndon.push_back(w);
        if (depth == cap_) return;
        for (int l = 0; l < g; ++l) {
            w.push_back(l);
            gen(depth + 1);
            w.pop_back();
        }
    };
    gen(0);
    std::stable_sort(lyndon.begin(), lyndon.end(),
                     [](const auto& a, const auto& b) { return a.size() < b.size(); });

    for (const auto& lw : lyndon) {
        BasisWord bw{lw, false};
        auto exp = expand_standard_bracketing(lw);
        basis_.push_back(bw);
        weight_.push_back(static_cast<int>(lw.size()));
        degree_.push_back(word_degree(lw));
        expansion_.push_back(exp);
        // squares of odd elements
        if (word_degree(lw) % 2 != 0 && 2 * static_cast<int>(lw.size()) <= cap_) {
            BasisWord sq{lw, true};
            basis_.push_back(sq);
            weight_.push_back(2 * static_cast<int>(lw.size()));
            degree_.push_back(2 * word_degree(lw));
            expansion_.push_back(tensor_bracket(exp, exp));
        }
    }
    // reorder by weight, keeping the relative order stable
    {
        std::vector<int> perm(basis_.size());
        for (size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
        std::stable_sort(perm.begin(), perm.end(), [&](int a, int b) { return weight_[a] < weight_[b]; });
        std::vector<BasisWord> b2;
        std::vector<int> w2, d2;
        std::vector<std::map<std::vector<int>, Rational>> e2;
        for (int p : perm) {
            b2.push_back(basis_[p]);
            w2.push_back(weight_[p]);
            d2.push_back(degree_[p]);
            e2.push_back(expansion_[p]);
        }
        basis_ = std::move(b2);
        weight_ = std::move(w2);
        degree_ = std::move(d2);
        expansion_ = std::move(e2);
    }

    // per-weight expansion matrices for bracket re-expression
    for (int i = 0; i < dim(); ++i) blocks_[weight_[i]].members.push_back(i);
    for (auto& [wt, blk] : blocks_) {
        std::map<std::vector<int>, int> widx;
        for (int m : blk.members)
            for (const auto& [word, c] : expansion_[m]) {
                (void)c;
                if (!widx.count(word)) {
                    widx.emplace(word, static_cast<int>(blk.words.size()));
                    blk.words.push_back(word);
                }
            }
        blk.word_index = std::move(widx);
        Matrix M(static_cast<int>(blk.words.size()), static_cast<int>(blk.members.size()));
        for (size_t c = 0; c < blk.members.size(); ++c)
            for (const auto& [word, coeff] : expansion_[blk.members[c]])
                M.at(blk.word_index.at(word), static_cast<int>(c)) = coeff;
        blk.expansions = std::move(M);
        // basis must be independent
        if (rank(blk.expansions) != static_cast<int>(blk.members.size()))
            throw std::logic_error("FreeLie: super-Lyndon expansions dependent at weight " + std::to_string(wt));
    }
}

std::string FreeLie::label(int i) const {
    const BasisWord& bw = basis_[i];
    std::string s;
    auto render = [&](const std::vector<int>& w) {
        std::string r;
        for (int l : w) {
            if (!r.empty()) r += ',';
            r += gens_.label(l);
        }
        return "[" + r + "]";
    };
    s = (bw.letters.size() == 1 && !bw.square) ? gens_.label(bw.letters[0]) : render(bw.letters);
    if (bw.square) s = "[" + s + "," + s + "]";
    return s;
}

SparseVec FreeLie::bracket(int i, int j) const {
    auto key = std::make_pair(i, j);
    auto it = bracket_cache_.find(key);
    if (it != bracket_cache_.end()) return it->second;
    SparseVec out;
    const int wt = weight_[i] + weight_[j];
    if (wt <= cap_) {
        auto t = tensor_bracket(expansion_[i], expansion_[j]);
        if (!t.empty()) {
            const WeightBlock& blk = blocks_.at(wt);
            Vec rhs(blk.words.size());
            for (const auto& [word, c] : t) {
                auto wi = blk.word_index.find(word);
                if (wi == blk.word_index.end()) throw std::logic_error("FreeLie: bracket leaves the spanned space");
                rhs[wi->second] = c;
            }
            auto sol = solve(blk.expansions, rhs);
            if (!sol) throw std::logic_error("FreeLie: bracket not expressible in the basis");
            for (size_t c = 0; c < blk.members.size(); ++c)
                if (!(*sol)[c].is_zero()) out.emplace_back(blk.members[c], (*sol)[c]);
        }
    }
    bracket_cache_.emplace(key, out);
    return out;
}

std::vector<int> FreeLie::dims_by_weight() const {
    std::vector<int> dims(cap_, 0);
    for (int i = 0; i < dim(); ++i) ++dims[weight_[i] - 1];
    return dims;
}

}  // namespace gerstlab

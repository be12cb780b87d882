#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <gerstlab/free_lie.hpp>

using namespace gerstlab;

namespace {

// PBW oracle: prod_k (1+t^k)^{o_k} (1-t^k)^{-e_k} = 1/(1 - g t)  mod t^{W+1},
// where o_k / e_k count odd/even basis elements of weight k.
bool pbw_series_matches(const FreeLie& L) {
    const int W = L.weight_cap();
    const int g = L.generators().dim();
    std::vector<Rational> series(W + 1);
    series[0] = Rational(1);
    auto mul_by = [&](const std::vector<Rational>& f) {
        std::vector<Rational> out(W + 1);
        for (int i = 0; i <= W; ++i)
            for (int j = 0; i + j <= W; ++j) out[i + j] += series[i] * f[j];
        series = std::move(out);
    };
    std::vector<int> o(W + 1, 0), e(W + 1, 0);
    for (int i = 0; i < L.dim(); ++i) (L.degree(i) % 2 != 0 ? o : e)[L.weight(i)]++;
    for (int k = 1; k <= W; ++k) {
        for (int r = 0; r < o[k]; ++r) {
            std::vector<Rational> f(W + 1);
            f[0] = Rational(1);
            if (k <= W) f[k] = Rational(1);
            mul_by(f);
        }
        for (int r = 0; r < e[k]; ++r) {
            // 1/(1-t^k) = 1 + t^k + t^{2k} + ...
            std::vector<Rational> f(W + 1);
            for (int p = 0; p * k <= W; ++p) f[p * k] = Rational(1);
            mul_by(f);
        }
    }
    for (int n = 0; n <= W; ++n) {
        Rational want(1);
        for (int t = 0; t < n; ++t) want *= Rational(g);
        if (series[n] != want) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("one even generator") {
    FreeLie L(GradedSpace({"x"}, {0}), 4);
    CHECK(L.dims_by_weight() == std::vector<int>{1, 0, 0, 0});
    CHECK(pbw_series_matches(L));
}

TEST_CASE("one odd generator") {
    FreeLie L(GradedSpace({"th"}, {1}), 4);
    // [th,th] != 0, [th,[th,th]] = 0
    CHECK(L.dims_by_weight() == std::vector<int>{1, 1, 0, 0});
    CHECK(pbw_series_matches(L));
    // bracket of the generator with itself is the square basis element
    auto b = L.bracket(0, 0);
    REQUIRE(b.size() == 1);
    CHECK(b[0].first == 1);
    CHECK(b[0].second == Rational(1));
}

TEST_CASE("two even generators match Witt numbers") {
    FreeLie L(GradedSpace({"x", "y"}, {0, 0}), 4);
    CHECK(L.dims_by_weight() == std::vector<int>{2, 1, 2, 3});
    CHECK(pbw_series_matches(L));
}

TEST_CASE("mixed parity generators satisfy PBW count") {
    FreeLie L(GradedSpace({"a", "b"}, {0, 1}), 4);
    CHECK(pbw_series_matches(L));
    FreeLie L2(GradedSpace({"a", "b", "c"}, {1, 1, 2}), 3);
    CHECK(pbw_series_matches(L2));
}

TEST_CASE("graded antisymmetry and Jacobi in the basis") {
    FreeLie L(GradedSpace({"a", "b"}, {0, 1}), 4);
    auto normalized = [](SparseVec v) {
        std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        std::erase_if(v, [](const auto& p) { return p.second.is_zero(); });
        return v;
    };
    for (int i = 0; i < L.dim(); ++i)
        for (int j = 0; j < L.dim(); ++j) {
            if (L.weight(i) + L.weight(j) > L.weight_cap()) continue;
            // antisymmetry
            SparseVec ij = L.bracket(i, j), ji = L.bracket(j, i);
            for (auto& [k, c] : ji) c = Rational(-sign_pow(static_cast<long>(L.degree(i)) * L.degree(j))) * c;
            CHECK(normalized(ij) == normalized(ji));
            for (int k = 0; k < L.dim(); ++k) {
                if (L.weight(i) + L.weight(j) + L.weight(k) > L.weight_cap()) continue;
                // [i,[j,k]] = [[i,j],k] + (-1)^{|i||j|}[j,[i,k]]
                SparseVec lhs;
                for (const auto& [m, c] : L.bracket(j, k))
                    for (const auto& [r, d] : L.bracket(i, m)) lhs.emplace_back(r, c * d);
                SparseVec r1;
                for (const auto& [m, c] : L.bracket(i, j))
                    for (const auto& [r, d] : L.bracket(m, k)) r1.emplace_back(r, c * d);
                const Rational s(sign_pow(static_cast<long>(L.degree(i)) * L.degree(j)));
                for (const auto& [m, c] : L.bracket(i, k))
                    for (const auto& [r, d] : L.bracket(j, m)) r1.emplace_back(r, s * c * d);
                // collapse duplicates
                auto collapse = [&](SparseVec v) {
                    std::map<int, Rational> acc;
                    for (auto& [k2, c] : v) acc[k2] += c;
                    SparseVec o;
                    for (auto& [k2, c] : acc)
                        if (!c.is_zero()) o.emplace_back(k2, c);
                    return o;
                };
                CHECK(collapse(lhs) == collapse(r1));
            }
        }
}

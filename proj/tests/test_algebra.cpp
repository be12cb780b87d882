#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <gerstlab/algebra.hpp>

using namespace gerstlab;

TEST_CASE("fixture algebras validate") {
    for (const Algebra& A : {dual_numbers(), ground_field(), q_times_q(), upper_triangular2(), m2_with_trace(),
                             exterior_1_graded()}) {
        auto rep = A.validate();
        if (!rep.ok)
            for (const auto& v : rep.violations) MESSAGE(v);
        CHECK(rep.ok);
    }
}

TEST_CASE("dual numbers multiply as Q[x]/(x^2)") {
    Algebra A = dual_numbers();
    Vec x{Rational(0), Rational(1)};
    CHECK(is_zero_vec(A.mul(x, x)));
    Vec one{Rational(1), Rational(0)};
    CHECK(A.mul(one, x) == x);
}

TEST_CASE("M2 trace is symmetric and nondegenerate on basis") {
    Algebra A = m2_with_trace();
    CHECK(A.validate().ok);
    Vec e12{Rational(0), Rational(1), Rational(0), Rational(0)};
    Vec e21{Rational(0), Rational(0), Rational(1), Rational(0)};
    CHECK(A.trace_of(A.mul(e12, e21)) == Rational(1));
    CHECK(A.trace_of(e12) == Rational(0));
}

TEST_CASE("corrupted structure constants are caught") {
    // e12*e21 = e22 instead of e11 breaks associativity
    GradedSpace s({"e11", "e12", "e21", "e22"}, {0, 0, 0, 0});
    auto idx = [](int i, int j) { return (i - 1) * 2 + (j - 1); };
    std::vector<std::tuple<int, int, int, Rational>> t;
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j)
            for (int k = 1; k <= 2; ++k)
                for (int l = 1; l <= 2; ++l)
                    if (j == k) t.emplace_back(idx(i, j), idx(k, l), idx(i, l), Rational(1));
    std::erase_if(t, [&](const auto& tr) {
        return std::get<0>(tr) == idx(1, 2) && std::get<1>(tr) == idx(2, 1);
    });
    t.emplace_back(idx(1, 2), idx(2, 1), idx(2, 2), Rational(1));
    Algebra bad(s, t, Vec{Rational(1), Rational(0), Rational(0), Rational(1)});
    CHECK_FALSE(bad.validate().ok);
}

TEST_CASE("graded sample validates with signs") {
    Algebra A = exterior_1_graded();
    CHECK(A.validate().ok);
    CHECK_FALSE(A.ungraded());
}

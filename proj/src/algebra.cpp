#include <gerstlab/algebra.hpp>

#include <algorithm>

namespace gerstlab {

Algebra::Algebra(GradedSpace space, const std::vector<std::tuple<int, int, int, Rational>>& triples, Vec unit,
                 std::optional<Vec> trace)
    : space_(std::move(space)), table_(static_cast<size_t>(space_.dim()) * space_.dim()), unit_(std::move(unit)),
      trace_(std::move(trace)) {
    const int d = dim();
    if (static_cast<int>(unit_.size()) != d) throw input_error("Algebra: unit dimension mismatch");
    if (trace_ && static_cast<int>(trace_->size()) != d) throw input_error("Algebra: trace dimension mismatch");
    for (const auto& [i, j, k, c] : triples) {
        if (i < 0 || i >= d || j < 0 || j >= d || k < 0 || k >= d)
            throw input_error("Algebra: structure constant index out of range");
        if (c.is_zero()) continue;
        auto& cell = table_[static_cast<size_t>(i) * d + j];
        auto it = std::find_if(cell.begin(), cell.end(), [k = k](const auto& p) { return p.first == k; });
        if (it == cell.end())
            cell.emplace_back(k, c);
        else {
            it->second += c;
            if (it->second.is_zero()) cell.erase(it);
        }
    }
    for (auto& cell : table_)
        std::sort(cell.begin(), cell.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    ungraded_ = true;
    for (int i = 0; i < d; ++i)
        if (space_.degree(i) != 0) ungraded_ = false;
}

Vec Algebra::mul(const Vec& a, const Vec& b) const {
    const int d = dim();
    Vec r(d);
    for (int i = 0; i < d; ++i) {
        if (a[i].is_zero()) continue;
        for (int j = 0; j < d; ++j) {
            if (b[j].is_zero()) continue;
            const Rational c = a[i] * b[j];
            for (const auto& [k, s] : mul_basis(i, j)) r[k] += c * s;
        }
    }
    return r;
}

Rational Algebra::trace_of(const Vec& a) const {
    if (!trace_) throw input_error("Algebra: no trace given");
    Rational t;
    for (int i = 0; i < dim(); ++i)
        if (!a[i].is_zero()) t += a[i] * (*trace_)[i];
    return t;
}

ValidationReport Algebra::validate() const {
    ValidationReport rep;
    const int d = dim();
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            // grading: nonzero components of e_i e_j sit in degree deg i + deg j
            for (const auto& [k, c] : mul_basis(i, j)) {
                (void)c;
                if (space_.degree(k) != space_.degree(i) + space_.degree(j))
                    rep.fail("grading violated at e_" + std::to_string(i) + " * e_" + std::to_string(j));
            }
            for (int k = 0; k < d; ++k) {
                Vec ei(d), ej(d), ek(d);
                ei[i] = Rational(1);
                ej[j] = Rational(1);
                ek[k] = Rational(1);
                if (mul(mul(ei, ej), ek) != mul(ei, mul(ej, ek)))
                    rep.fail("associativity fails at (" + std::to_string(i) + "," + std::to_string(j) + "," +
                             std::to_string(k) + ")");
            }
        }
        Vec ei(d);
        ei[i] = Rational(1);
        if (mul(unit_, ei) != ei || mul(ei, unit_) != ei) rep.fail("unit law fails at e_" + std::to_string(i));
    }
    if (trace_) {
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) {
                Vec ei(d), ej(d);
                ei[i] = Rational(1);
                ej[j] = Rational(1);
                Rational lhs = trace_of(mul(ei, ej));
                Rational rhs =
                    Rational(sign_pow(static_cast<long>(space_.degree(i)) * space_.degree(j))) * trace_of(mul(ej, ei));
                if (lhs != rhs)
                    rep.fail("trace symmetry fails at (" + std::to_string(i) + "," + std::to_string(j) + ")");
            }
    }
    return rep;
}

namespace {
using T = std::tuple<int, int, int, Rational>;
}

Algebra dual_numbers() {
    GradedSpace s({"1", "x"}, {0, 0});
    std::vector<T> t{{0, 0, 0, Rational(1)}, {0, 1, 1, Rational(1)}, {1, 0, 1, Rational(1)}};
    return Algebra(s, t, Vec{Rational(1), Rational(0)});
}

Algebra ground_field() {
    GradedSpace s({"1"}, {0});
    return Algebra(s, {T{0, 0, 0, Rational(1)}}, Vec{Rational(1)});
}

Algebra q_times_q() {
    GradedSpace s({"e1", "e2"}, {0, 0});
    std::vector<T> t{{0, 0, 0, Rational(1)}, {1, 1, 1, Rational(1)}};
    return Algebra(s, t, Vec{Rational(1), Rational(1)});
}

Algebra upper_triangular2() {
    // basis e11, e22, e12
    GradedSpace s({"e11", "e22", "e12"}, {0, 0, 0});
    std::vector<T> t{{0, 0, 0, Rational(1)}, {1, 1, 1, Rational(1)}, {0, 2, 2, Rational(1)}, {2, 1, 2, Rational(1)}};
    return Algebra(s, t, Vec{Rational(1), Rational(1), Rational(0)});
}

Algebra m2_with_trace() {
    // basis e11, e12, e21, e22; e_{ij} e_{kl} = delta_{jk} e_{il}
    GradedSpace s({"e11", "e12", "e21", "e22"}, {0, 0, 0, 0});
    auto idx = [](int i, int j) { return (i - 1) * 2 + (j - 1); };
    std::vector<T> t;
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j)
            for (int k = 1; k <= 2; ++k)
                for (int l = 1; l <= 2; ++l)
                    if (j == k) t.emplace_back(idx(i, j), idx(k, l), idx(i, l), Rational(1));
    Vec unit{Rational(1), Rational(0), Rational(0), Rational(1)};
    Vec trace{Rational(1), Rational(0), Rational(0), Rational(1)};
    return Algebra(s, t, unit, trace);
}

Algebra exterior_1_graded() {
    GradedSpace s({"1", "t"}, {0, -1});
    std::vector<T> t{{0, 0, 0, Rational(1)}, {0, 1, 1, Rational(1)}, {1, 0, 1, Rational(1)}};
    return Algebra(s, t, Vec{Rational(1), Rational(0)});
}

}  // namespace gerstlab

#pragma once
#include <gmp.h>

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

namespace gerstlab {

struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Exact rational scalar. Invariants: reduced, denominator > 0, no rounding ever.
class Rational {
  public:
    Rational() { mpq_init(q_); }
    Rational(long n) {
        mpq_init(q_);
        mpq_set_si(q_, n, 1);
    }
    Rational(int n) : Rational(static_cast<long>(n)) {}
    Rational(long num, long den) {
        if (den == 0) throw input_error("Rational: zero denominator");
        mpq_init(q_);
        mpq_set_si(q_, num, 1);
        mpq_t d;
        mpq_init(d);
        mpq_set_si(d, den, 1);
        mpq_div(q_, q_, d);
        mpq_clear(d);
    }
    Rational(const Rational& o) {
        mpq_init(q_);
        mpq_set(q_, o.q_);
    }
    Rational(Rational&& o) noexcept {
        mpq_init(q_);
        mpq_swap(q_, o.q_);
    }
    Rational& operator=(const Rational& o) {
        if (this != &o) mpq_set(q_, o.q_);
        return *this;
    }
    Rational& operator=(Rational&& o) noexcept {
        mpq_swap(q_, o.q_);
        return *this;
    }
    ~Rational() { mpq_clear(q_); }

    // Accepts "p", "-p", "p/q"; whitespace rejected. Result is canonicalized.
    static Rational parse(const std::string& s) {
        if (s.empty()) throw input_error("Rational: empty string");
        Rational r;
        if (mpq_set_str(r.q_, s.c_str(), 10) != 0)
            throw input_error("Rational: cannot parse '" + s + "'");
        if (mpz_sgn(mpq_denref(r.q_)) == 0)
            throw input_error("Rational: zero denominator in '" + s + "'");
        mpq_canonicalize(r.q_);
        return r;
    }

    // "p/q" with q > 1, otherwise "p".
    std::string str() const {
        char* c = mpq_get_str(nullptr, 10, q_);
        std::string s(c);
        void (*freefunc)(void*, size_t);
        mp_get_memory_functions(nullptr, nullptr, &freefunc);
        freefunc(c, s.size() + 1);
        return s;
    }

    bool is_zero() const { return mpq_sgn(q_) == 0; }
    int sign() const { return mpq_sgn(q_); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        Rational r;
        mpq_add(r.q_, a.q_, b.q_);
        return r;
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        Rational r;
        mpq_sub(r.q_, a.q_, b.q_);
        return r;
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        Rational r;
        mpq_mul(r.q_, a.q_, b.q_);
        return r;
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw input_error("Rational: division by zero");
        Rational r;
        mpq_div(r.q_, a.q_, b.q_);
        return r;
    }
    Rational operator-() const {
        Rational r;
        mpq_neg(r.q_, q_);
        return r;
    }
    Rational& operator+=(const Rational& b) {
        mpq_add(q_, q_, b.q_);
        return *this;
    }
    Rational& operator-=(const Rational& b) {
        mpq_sub(q_, q_, b.q_);
        return *this;
    }
    Rational& operator*=(const Rational& b) {
        mpq_mul(q_, q_, b.q_);
        return *this;
    }
    Rational& operator/=(const Rational& b) {
        if (b.is_zero()) throw input_error("Rational: division by zero");
        mpq_div(q_, q_, b.q_);
        return *this;
    }
    friend bool operator==(const Rational& a, const Rational& b) { return mpq_equal(a.q_, b.q_) != 0; }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) { return mpq_cmp(a.q_, b.q_) < 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return mpq_cmp(a.q_, b.q_) > 0; }

    Rational abs() const {
        Rational r;
        mpq_abs(r.q_, q_);
        return r;
    }
    Rational inv() const {
        if (is_zero()) throw input_error("Rational: inverse of zero");
        Rational r;
        mpq_inv(r.q_, q_);
        return r;
    }

    // Numerator / denominator as decimal strings (denominator always positive).
    std::string num_str() const {
        char* c = mpz_get_str(nullptr, 10, mpq_numref(q_));
        std::string s(c);
        void (*freefunc)(void*, size_t);
        mp_get_memory_functions(nullptr, nullptr, &freefunc);
        freefunc(c, s.size() + 1);
        return s;
    }
    bool is_integer() const { return mpz_cmp_ui(mpq_denref(q_), 1) == 0; }

    Rational denominator() const {
        Rational r;
        mpq_set_z(r.q_, mpq_denref(q_));
        return r;
    }

    const mpq_t& raw() const { return q_; }

  private:
    mpq_t q_;
};

inline std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

// Parity-of-an-exponent helper used all over the graded formulas.
inline int sign_pow(long e) { return (e % 2 == 0) ? 1 : -1; }

}  // namespace gerstlab

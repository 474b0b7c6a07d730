#pragma once
// bigint.hpp - exact arbitrary-precision integers and rationals on top of GMP.
//
// Int wraps mpz_t, Rat wraps mpq_t, both with value semantics. Rat is kept
// canonical (lowest terms, positive denominator) by mpq_canonicalize.

#include <gmp.h>

#include <iostream>
#include <stdexcept>
#include <string>
#include <utility>

namespace tmh {

class Int {
  public:
    Int() { mpz_init(z_); }
    Int(long long v) { mpz_init_set_si(z_, static_cast<long>(v)); }  // NOLINT(google-explicit-constructor)
    Int(long v) : Int(static_cast<long long>(v)) {}
    Int(int v) : Int(static_cast<long long>(v)) {}
    explicit Int(const std::string& s) {
        if (mpz_init_set_str(z_, s.c_str(), 10) != 0) {
            mpz_clear(z_);
            throw std::invalid_argument("Int: cannot parse \"" + s + "\"");
        }
    }
    Int(const Int& o) { mpz_init_set(z_, o.z_); }
    Int(Int&& o) noexcept {
        mpz_init(z_);
        mpz_swap(z_, o.z_);
    }
    Int& operator=(const Int& o) {
        mpz_set(z_, o.z_);
        return *this;
    }
    Int& operator=(Int&& o) noexcept {
        mpz_swap(z_, o.z_);
        return *this;
    }
    ~Int() { mpz_clear(z_); }

    mpz_srcptr raw() const { return z_; }
    mpz_ptr raw() { return z_; }

    int sign() const { return mpz_sgn(z_); }
    bool is_zero() const { return mpz_sgn(z_) == 0; }
    bool is_odd() const { return mpz_odd_p(z_) != 0; }
    bool is_even() const { return mpz_even_p(z_) != 0; }

    bool fits_long() const { return mpz_fits_slong_p(z_) != 0; }
    long to_long() const {
        if (!fits_long()) throw std::overflow_error("Int: value does not fit in long");
        return mpz_get_si(z_);
    }

    std::string str() const {
        char* s = mpz_get_str(nullptr, 10, z_);
        std::string out(s);
        void (*freefn)(void*, size_t);
        mp_get_memory_functions(nullptr, nullptr, &freefn);
        freefn(s, out.size() + 1);
        return out;
    }

    Int& operator+=(const Int& o) { mpz_add(z_, z_, o.z_); return *this; }
    Int& operator-=(const Int& o) { mpz_sub(z_, z_, o.z_); return *this; }
    Int& operator*=(const Int& o) { mpz_mul(z_, z_, o.z_); return *this; }

    friend Int operator+(Int a, const Int& b) { a += b; return a; }
    friend Int operator-(Int a, const Int& b) { a -= b; return a; }
    friend Int operator*(Int a, const Int& b) { a *= b; return a; }
    friend Int operator-(const Int& a) {
        Int r;
        mpz_neg(r.z_, a.z_);
        return r;
    }

    // floor division / shift, used by the dyadic reductions
    Int fdiv_2exp(unsigned bits) const {
        Int r;
        mpz_fdiv_q_2exp(r.z_, z_, bits);
        return r;
    }

    Int abs() const {
        Int r;
        mpz_abs(r.z_, z_);
        return r;
    }

    friend bool operator==(const Int& a, const Int& b) { return mpz_cmp(a.z_, b.z_) == 0; }
    friend bool operator!=(const Int& a, const Int& b) { return !(a == b); }
    friend bool operator<(const Int& a, const Int& b) { return mpz_cmp(a.z_, b.z_) < 0; }
    friend bool operator<=(const Int& a, const Int& b) { return mpz_cmp(a.z_, b.z_) <= 0; }
    friend bool operator>(const Int& a, const Int& b) { return mpz_cmp(a.z_, b.z_) > 0; }
    friend bool operator>=(const Int& a, const Int& b) { return mpz_cmp(a.z_, b.z_) >= 0; }

    static Int factorial(unsigned long n) {
        Int r;
        mpz_fac_ui(r.z_, n);
        return r;
    }
    static Int pow_ui(const Int& base, unsigned long e) {
        Int r;
        mpz_pow_ui(r.z_, base.z_, e);
        return r;
    }
    // binom(n, k) for nonnegative n,k
    static Int binomial(unsigned long n, unsigned long k) {
        Int r;
        mpz_bin_uiui(r.z_, n, k);
        return r;
    }
    // binom(top, k) with arbitrary integer top (falling-factorial extension)
    static Int binomial_top(const Int& top, unsigned long k) {
        Int r;
        mpz_bin_ui(r.z_, top.z_, k);
        return r;
    }

    friend std::ostream& operator<<(std::ostream& os, const Int& v) { return os << v.str(); }

  private:
    mpz_t z_;
};

class Rat {
  public:
    Rat() { mpq_init(q_); }
    Rat(long long v) {  // NOLINT(google-explicit-constructor)
        mpq_init(q_);
        mpq_set_si(q_, static_cast<long>(v), 1);
    }
    Rat(long v) : Rat(static_cast<long long>(v)) {}
    Rat(int v) : Rat(static_cast<long long>(v)) {}
    Rat(long long num, long long den) {
        if (den == 0) throw std::invalid_argument("Rat: zero denominator");
        mpq_init(q_);
        mpq_set_si(q_, static_cast<long>(num), 1);
        mpq_t d;
        mpq_init(d);
        mpq_set_si(d, static_cast<long>(den), 1);
        mpq_div(q_, q_, d);
        mpq_clear(d);
    }
    explicit Rat(const Int& v) {
        mpq_init(q_);
        mpq_set_z(q_, v.raw());
    }
    Rat(const Int& num, const Int& den) {
        if (den.is_zero()) throw std::invalid_argument("Rat: zero denominator");
        mpq_init(q_);
        mpz_set(mpq_numref(q_), num.raw());
        mpz_set(mpq_denref(q_), den.raw());
        mpq_canonicalize(q_);
    }
    Rat(const Rat& o) {
        mpq_init(q_);
        mpq_set(q_, o.q_);
    }
    Rat(Rat&& o) noexcept {
        mpq_init(q_);
        mpq_swap(q_, o.q_);
    }
    Rat& operator=(const Rat& o) {
        mpq_set(q_, o.q_);
        return *this;
    }
    Rat& operator=(Rat&& o) noexcept {
        mpq_swap(q_, o.q_);
        return *this;
    }
    ~Rat() { mpq_clear(q_); }

    mpq_srcptr raw() const { return q_; }

    int sign() const { return mpq_sgn(q_); }
    bool is_zero() const { return mpq_sgn(q_) == 0; }
    bool is_integer() const { return mpz_cmp_ui(mpq_denref(q_), 1) == 0; }

    Int numerator() const {
        Int r;
        mpz_set(r.raw(), mpq_numref(q_));
        return r;
    }
    Int denominator() const {
        Int r;
        mpz_set(r.raw(), mpq_denref(q_));
        return r;
    }
    // exact conversion; throws if not an integer
    Int to_int() const {
        if (!is_integer()) throw std::domain_error("Rat: " + str() + " is not an integer");
        return numerator();
    }

    std::string str() const {
        char* s = mpq_get_str(nullptr, 10, q_);
        std::string out(s);
        void (*freefn)(void*, size_t);
        mp_get_memory_functions(nullptr, nullptr, &freefn);
        freefn(s, out.size() + 1);
        return out;
    }

    Rat& operator+=(const Rat& o) { mpq_add(q_, q_, o.q_); return *this; }
    Rat& operator-=(const Rat& o) { mpq_sub(q_, q_, o.q_); return *this; }
    Rat& operator*=(const Rat& o) { mpq_mul(q_, q_, o.q_); return *this; }
    Rat& operator/=(const Rat& o) {
        if (o.is_zero()) throw std::invalid_argument("Rat: division by zero");
        mpq_div(q_, q_, o.q_);
        return *this;
    }

    friend Rat operator+(Rat a, const Rat& b) { a += b; return a; }
    friend Rat operator-(Rat a, const Rat& b) { a -= b; return a; }
    friend Rat operator*(Rat a, const Rat& b) { a *= b; return a; }
    friend Rat operator/(Rat a, const Rat& b) { a /= b; return a; }
    friend Rat operator-(const Rat& a) {
        Rat r;
        mpq_neg(r.q_, a.q_);
        return r;
    }

    friend bool operator==(const Rat& a, const Rat& b) { return mpq_equal(a.q_, b.q_) != 0; }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b) { return mpq_cmp(a.q_, b.q_) < 0; }
    friend bool operator>(const Rat& a, const Rat& b) { return mpq_cmp(a.q_, b.q_) > 0; }

    friend std::ostream& operator<<(std::ostream& os, const Rat& v) { return os << v.str(); }

  private:
    mpq_t q_;
};

}  // namespace tmh

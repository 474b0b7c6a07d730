#include "tmh/combinatorics.hpp"

#include <cassert>
#include <stdexcept>

namespace tmh {

Int DyadicExpansion::value() const {
    Int v = 0;
    for (size_t i = bits.size(); i-- > 0;) {
        v += v;
        if (bits[i]) v += 1;
    }
    return v;
}

DyadicExpansion dyadic(const Int& n) {
    if (n.sign() < 0) throw std::domain_error("dyadic: negative argument");
    DyadicExpansion e;
    size_t nbits = mpz_sizeinbase(n.raw(), 2);
    if (n.is_zero()) return e;
    e.bits.resize(nbits);
    for (size_t i = 0; i < nbits; ++i) e.bits[i] = static_cast<uint8_t>(mpz_tstbit(n.raw(), i));
    return e;
}

bool dyadic_disjoint(const Int& x, const Int& y) {
    DyadicExpansion a = dyadic(x), b = dyadic(y);
    size_t top = std::max(a.bits.size(), b.bits.size());
    for (size_t i = 0; i < top; ++i)
        if (a.digit(i) + b.digit(i) > 1) return false;
    return true;
}

Rat binom_general(const Rat& x, unsigned long n) {
    Rat acc = 1;
    for (unsigned long t = 0; t < n; ++t) acc *= x - Rat(static_cast<long>(t));
    return acc / Rat(Int::factorial(n));
}

Int binom_nk(unsigned long n, const Int& k) {
    return Int::binomial_top(k + Int(static_cast<long>(n)), n);
}

namespace {

// Lucas condition for binom(m, n) with m >= 0, n >= 0:
// odd iff every digit of n is <= the matching digit of m.
int lucas_digits(const Int& n, const Int& m) {
    DyadicExpansion dn = dyadic(n), dm = dyadic(m);
    size_t top = std::max(dn.bits.size(), dm.bits.size());
    for (size_t i = 0; i < top; ++i)
        if (dn.digit(i) > dm.digit(i)) return 0;
    return 1;
}

}  // namespace

int binom_mod2_lucas(unsigned long n, const Int& k) {
    Int nn(static_cast<long>(n));
    Int m = nn + k;
    if (m.sign() >= 0) return lucas_digits(nn, m);  // covers k >= 0 and the zero band
    // k < -n: binom(n+k, n) = (-1)^n binom(-k-1, n); sign is irrelevant mod 2
    Int top = -k - Int(1);
    return lucas_digits(nn, top);
}

bool binom_odd_iff(unsigned long n, const Int& k) {
    Int nn(static_cast<long>(n));
    if (k.sign() >= 0) return dyadic_disjoint(nn, k);
    if ((nn + k).sign() >= 0) return false;  // -n <= k <= -1
    return dyadic_disjoint(-k - Int(1) - nn, nn);
}

int binom_mod2_reduced(const Int& m, const Int& n) {
    if (m.sign() < 0 || n.sign() < 0) throw std::domain_error("binom_mod2_reduced: negative argument");
    Int a = m, b = n;
    for (;;) {
        if (a.is_odd() && b.is_odd()) return 0;
        if (a.fdiv_2exp(1).is_odd() && b.fdiv_2exp(1).is_odd()) return 0;
        a = a.fdiv_2exp(2);
        b = b.fdiv_2exp(2);
        if (a.is_zero() && b.is_zero()) return 1;
    }
}

int parity_reduction_mult4(unsigned long m, unsigned long n) {
    return binom_mod2_lucas(m, Int(static_cast<long>(n / 4)));
}

int parity_reduction_mult4p1(unsigned long m, unsigned long n) {
    if (n % 2 == 1) return 0;
    return binom_mod2_lucas(m, Int(static_cast<long>(n / 4)));
}

Rat a_number(unsigned long n, long l) {
    if (l < 0 || l > static_cast<long>(n)) return Rat(0);
    // rows grown on demand; per-thread so concurrent callers never share state
    thread_local std::vector<std::vector<Rat>> rows{{Rat(1)}};
    while (rows.size() <= n) {
        const unsigned long r = rows.size();
        const std::vector<Rat>& prev = rows[r - 1];
        std::vector<Rat> row(r + 1, Rat(0));
        for (unsigned long j = 1; j <= r; ++j) {
            Rat up = (j < prev.size()) ? prev[j] : Rat(0);
            row[j] = Rat(static_cast<long>(j), static_cast<long>(r)) * (up + prev[j - 1]);
        }
        rows.push_back(std::move(row));
    }
    return rows[n][static_cast<size_t>(l)];
}

Rat a_number_explicit(unsigned long n, long l) {
    if (l < 0 || l > static_cast<long>(n)) return Rat(0);
    Int sum = 0;
    for (long m = 0; m <= l; ++m) {
        Int term = Int::binomial(static_cast<unsigned long>(l), static_cast<unsigned long>(m)) *
                   Int::pow_ui(Int(m), n);
        if ((l - m) % 2 != 0) term = -term;
        sum += term;
    }
    return Rat(sum, Int::factorial(n));
}

Int stirling2(unsigned long n, unsigned long l) {
    if (l > n) return Int(0);
    thread_local std::vector<std::vector<Int>> rows{{Int(1)}};
    while (rows.size() <= n) {
        const unsigned long r = rows.size();
        const std::vector<Int>& prev = rows[r - 1];
        std::vector<Int> row(r + 1, Int(0));
        for (unsigned long j = 1; j <= r; ++j) {
            Int up = (j < prev.size()) ? prev[j] : Int(0);
            row[j] = Int(static_cast<long>(j)) * up + prev[j - 1];
        }
        rows.push_back(std::move(row));
    }
    return rows[n][l];
}

Int bell(unsigned long n) {
    Int sum = 0;
    for (unsigned long l = 0; l <= n; ++l) sum += stirling2(n, l);
    return sum;
}

Rat bernoulli0(unsigned long n) {
    Rat sum = 0;
    Rat nfact(Int::factorial(n));
    for (unsigned long l = 0; l <= n; ++l) {
        Rat term = nfact / Rat(static_cast<long>(l + 1)) * a_number(n, static_cast<long>(l));
        if (l % 2 != 0) term = -term;
        sum += term;
    }
    return sum;
}

Rat divided_difference_power(unsigned long n, unsigned long l) {
    Int sum = 0;
    for (unsigned long m = 0; m <= l; ++m) {
        Int term = Int::binomial(l, m) * Int::pow_ui(Int(static_cast<long>(m)), n);
        if ((l - m) % 2 != 0) term = -term;
        sum += term;
    }
    return Rat(sum, Int::factorial(l));
}

}  // namespace tmh

#pragma once
// combinatorics.hpp - exact binomial coefficients, the triangle A(n,l),
// dyadic (base-2) digit machinery and mod-2 binomial reductions.

#include <cstdint>
#include <vector>

#include "tmh/bigint.hpp"

namespace tmh {

// Base-2 digits of a nonnegative integer, least significant first.
// Empty for 0; otherwise the top bit is 1.
struct DyadicExpansion {
    std::vector<uint8_t> bits;

    Int value() const;
    uint8_t digit(size_t i) const { return i < bits.size() ? bits[i] : 0; }
};

DyadicExpansion dyadic(const Int& n);

// a_i(x) + a_i(y) <= 1 for every digit, i.e. the binary supports are disjoint.
bool dyadic_disjoint(const Int& x, const Int& y);

// Generalized binomial coefficient x(x-1)...(x-n+1)/n! for rational x.
Rat binom_general(const Rat& x, unsigned long n);

// binom(n+k, n) for n >= 0 and any integer k. Always an integer;
// zero exactly on the band -n <= k <= -1 (a zero factor in the product).
Int binom_nk(unsigned long n, const Int& k);

// binom(top, n) with arbitrary integer top (falling-factorial extension).
inline Int binom_top(const Int& top, unsigned long n) { return Int::binomial_top(top, n); }

// binom(n+k, n) mod 2 by Lucas' theorem on base-2 digits.
// For k < -n the reflection binom(n+k,n) = (-1)^n binom(-k-1,n) is used first.
int binom_mod2_lucas(unsigned long n, const Int& k);

// True iff binom(n+k, n) is odd, decided by digit-disjointness tests alone:
// k >= 0 needs bits(n), bits(k) disjoint; -n <= k <= -1 is never odd;
// k < -n needs bits(-k-1-n), bits(n) disjoint.
bool binom_odd_iff(unsigned long n, const Int& k);

// binom(m+n, n) mod 2 via the quarter-shift recursion: even when n*m or
// floor(n/2)*floor(m/2) is odd, else recurse on (floor(m/4), floor(n/4)).
int binom_mod2_reduced(const Int& m, const Int& n);

// Parity of binom(4m+n, 4m), reduced to binom(m + floor(n/4), m) mod 2.
int parity_reduction_mult4(unsigned long m, unsigned long n);

// Parity of binom(4m+1+n, 4m+1): 0 for odd n, binom(m + floor(n/4), m) mod 2 otherwise.
int parity_reduction_mult4p1(unsigned long m, unsigned long n);

// The rational triangle A(n,l): A(0,0) = 1, zero outside 0 <= l <= n, and
// A(n,l) = (l/n) * (A(n-1,l) + A(n-1,l-1)). Memoized per thread.
Rat a_number(unsigned long n, long l);

// Same numbers by the direct alternating sum (1/n!) sum_m (-1)^(l-m) binom(l,m) m^n.
// Slower; kept as an independent cross-check path.
Rat a_number_explicit(unsigned long n, long l);

// Stirling numbers of the second kind by their own recurrence
// S(n,l) = l*S(n-1,l) + S(n-1,l-1).
Int stirling2(unsigned long n, unsigned long l);

// Bell numbers as Stirling row sums.
Int bell(unsigned long n);

// Bernoulli numbers B_n(0), generated by x/(e^x - 1), via the alternating
// A(n,l) sum: B_n(0) = n! * sum_l (-1)^l A(n,l)/(l+1).
Rat bernoulli0(unsigned long n);

// l-th divided difference of x^n at the nodes 0,1,...,l.
Rat divided_difference_power(unsigned long n, unsigned long l);

}  // namespace tmh

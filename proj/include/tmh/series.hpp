#pragma once
// series.hpp - truncated power series over exact rationals: the one-variable
// Todd and A-hat expansions, two-variable truncated products, and the pairing
// against the fundamental class of the projective bundle V.
//
// A two-variable series lives under two caps: u-degree <= ucap (u^{ucap+1}
// vanishes in H*(V)) and total degree <= dcap (only total degree n1+n2 is ever
// paired). Nothing above the caps is stored or computed.

#include <span>
#include <vector>

#include "tmh/bigint.hpp"
#include "tmh/twist_spec.hpp"

namespace tmh {

// Polynomial truncation of a one-variable power series; coeffs[m] is the
// coefficient of x^m, m = 0..degree.
struct UniSeries {
    std::vector<Rat> coeffs;

    explicit UniSeries(unsigned degree = 0) : coeffs(degree + 1, Rat(0)) {}
    unsigned degree() const { return static_cast<unsigned>(coeffs.size()) - 1; }
    const Rat& operator[](unsigned m) const { return coeffs[m]; }
    Rat& operator[](unsigned m) { return coeffs[m]; }
};

UniSeries uni_mul(const UniSeries& a, const UniSeries& b, unsigned degree);
UniSeries uni_pow(const UniSeries& a, unsigned long e, unsigned degree);
// multiplicative inverse; requires a[0] != 0
UniSeries uni_reciprocal(const UniSeries& a);
// e^{c x} truncated
UniSeries exp_series(const Rat& c, unsigned degree);

// Todd series x/(1 - e^{-x}), coefficient m is B_m(1)/m!.
UniSeries todd_series(unsigned degree);

// A-hat series Q(x) = e^{-x/2} x/(1 - e^{-x}) = (x/2)/sinh(x/2); even in x.
UniSeries q_series(unsigned degree);

struct BiSeries {
    unsigned ucap;  // max stored u-degree
    unsigned dcap;  // max stored total degree
    // table[a][b] is the coefficient of u^a v^b, for a <= ucap, a + b <= dcap
    std::vector<std::vector<Rat>> table;

    BiSeries(unsigned ucap_, unsigned dcap_);
    static BiSeries one(unsigned ucap, unsigned dcap);

    const Rat& coeff(unsigned a, unsigned b) const;
    void add_to(unsigned a, unsigned b, const Rat& v);
};

// s(cu*u + cv*v) truncated to the caps, each power expanded binomially
BiSeries substitute_linear(const UniSeries& s, const Rat& cu, const Rat& cv, unsigned ucap,
                           unsigned dcap);

BiSeries bi_mul(const BiSeries& p, const BiSeries& q);
BiSeries bi_pow(const BiSeries& p, unsigned long e);

// Complete homogeneous symmetric polynomial h_k of the twist entries.
Int beta(unsigned long k, std::span<const long long> twists);

// The numbers beta_0..beta_{n1} = <u^{n1-k} v^{n2+k}, [V]>, precomputed for
// one bundle; beta_0 = 1.
struct FundamentalClassPairing {
    int n1;
    int n2;
    std::vector<Int> betas;

    FundamentalClassPairing(int n1_, int n2_, std::span<const long long> twists);

    // <p, [V]> = sum_a coeff(a, n1+n2-a) * beta_{n1-a}; monomials of total
    // degree != n1+n2 pair to zero, u-degrees above n1 are already absent.
    Rat pair(const BiSeries& p) const;
};

Rat pair_with_fundamental_class(const BiSeries& p, int n1, int n2,
                                std::span<const long long> twists);

// <Q(u)^{n1+1} Q(v) prod_j Q(v - i_j u) e^{sign(d1 u + d2 v)/2}, [V]>,
// evaluated by expanding every factor under caps (n1, n1+n2). This is the
// series-side route; it must agree exactly with the closed form f_closed
// at sign = +1.
Rat genus_pairing(const TwistSpec& spec, int sign);

struct ChernEulerData {
    long long c1_u;    // coefficient of u in c1(V)
    long long c1_v;    // coefficient of v in c1(V)
    long long euler;   // Euler characteristic of V
};

// c1(V) = (n1+1-sigma1) u + (n2+1) v and chi(V) = (n1+1)(n2+1).
ChernEulerData chern_and_euler(int n1, int n2, std::span<const long long> twists);

}  // namespace tmh

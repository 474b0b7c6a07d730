#include "tmh/series.hpp"

#include <stdexcept>

namespace tmh {

UniSeries uni_mul(const UniSeries& a, const UniSeries& b, unsigned degree) {
    UniSeries out(degree);
    for (unsigned i = 0; i <= a.degree() && i <= degree; ++i) {
        if (a[i].is_zero()) continue;
        for (unsigned j = 0; j <= b.degree() && i + j <= degree; ++j) {
            if (b[j].is_zero()) continue;
            out[i + j] += a[i] * b[j];
        }
    }
    return out;
}

UniSeries uni_pow(const UniSeries& a, unsigned long e, unsigned degree) {
    UniSeries out(degree);
    out[0] = 1;
    for (unsigned long t = 0; t < e; ++t) out = uni_mul(out, a, degree);
    return out;
}

UniSeries uni_reciprocal(const UniSeries& a) {
    if (a[0].is_zero()) throw std::domain_error("uni_reciprocal: constant term is zero");
    const unsigned D = a.degree();
    UniSeries out(D);
    out[0] = Rat(1) / a[0];
    for (unsigned m = 1; m <= D; ++m) {
        Rat acc = 0;
        for (unsigned j = 1; j <= m; ++j) acc += a[j] * out[m - j];
        out[m] = -acc / a[0];
    }
    return out;
}

UniSeries exp_series(const Rat& c, unsigned degree) {
    UniSeries out(degree);
    out[0] = 1;
    for (unsigned m = 1; m <= degree; ++m) out[m] = out[m - 1] * c / Rat(static_cast<long>(m));
    return out;
}

UniSeries todd_series(unsigned degree) {
    // (1 - e^{-x})/x has coefficients (-1)^m/(m+1)!; invert it
    UniSeries g(degree);
    Rat term = 1;
    for (unsigned m = 0; m <= degree; ++m) {
        g[m] = (m % 2 == 0) ? term : -term;
        term /= Rat(static_cast<long>(m + 2));
    }
    return uni_reciprocal(g);
}

UniSeries q_series(unsigned degree) {
    return uni_mul(exp_series(Rat(-1, 2), degree), todd_series(degree), degree);
}

BiSeries::BiSeries(unsigned ucap_, unsigned dcap_) : ucap(ucap_), dcap(dcap_) {
    table.resize(ucap + 1);
    for (unsigned a = 0; a <= ucap; ++a)
        table[a].assign(a <= dcap ? dcap - a + 1 : 0, Rat(0));
}

BiSeries BiSeries::one(unsigned ucap, unsigned dcap) {
    BiSeries p(ucap, dcap);
    p.table[0][0] = 1;
    return p;
}

const Rat& BiSeries::coeff(unsigned a, unsigned b) const {
    static const Rat zero(0);
    if (a > ucap || a + b > dcap) return zero;
    return table[a][b];
}

void BiSeries::add_to(unsigned a, unsigned b, const Rat& v) {
    if (a > ucap || a + b > dcap) return;
    table[a][b] += v;
}

BiSeries substitute_linear(const UniSeries& s, const Rat& cu, const Rat& cv, unsigned ucap,
                           unsigned dcap) {
    BiSeries out(ucap, dcap);
    const unsigned top = std::min(s.degree(), dcap);
    std::vector<Rat> cu_pow(top + 1, Rat(1)), cv_pow(top + 1, Rat(1));
    for (unsigned t = 1; t <= top; ++t) {
        cu_pow[t] = cu_pow[t - 1] * cu;
        cv_pow[t] = cv_pow[t - 1] * cv;
    }
    for (unsigned m = 0; m <= top; ++m) {
        if (s[m].is_zero()) continue;
        for (unsigned a = 0; a <= m && a <= ucap; ++a) {
            Rat c = s[m] * Rat(Int::binomial(m, a)) * cu_pow[a] * cv_pow[m - a];
            if (!c.is_zero()) out.add_to(a, m - a, c);
        }
    }
    return out;
}

BiSeries bi_mul(const BiSeries& p, const BiSeries& q) {
    if (p.ucap != q.ucap || p.dcap != q.dcap)
        throw std::invalid_argument("bi_mul: mismatched caps");
    BiSeries out(p.ucap, p.dcap);
    for (unsigned a1 = 0; a1 <= p.ucap; ++a1)
        for (unsigned b1 = 0; a1 + b1 <= p.dcap; ++b1) {
            const Rat& x = p.table[a1][b1];
            if (x.is_zero()) continue;
            for (unsigned a2 = 0; a1 + a2 <= q.ucap; ++a2)
                for (unsigned b2 = 0; a1 + b1 + a2 + b2 <= q.dcap; ++b2) {
                    const Rat& y = q.table[a2][b2];
                    if (y.is_zero()) continue;
                    out.table[a1 + a2][b1 + b2] += x * y;
                }
        }
    return out;
}

BiSeries bi_pow(const BiSeries& p, unsigned long e) {
    BiSeries out = BiSeries::one(p.ucap, p.dcap);
    for (unsigned long t = 0; t < e; ++t) out = bi_mul(out, p);
    return out;
}

Int beta(unsigned long k, std::span<const long long> twists) {
    // h_j(x_1..x_m) = h_j(x_1..x_{m-1}) + x_m h_{j-1}(x_1..x_m)
    std::vector<Int> h(k + 1, Int(0));
    h[0] = 1;
    for (long long v : twists) {
        Int x(v);
        for (unsigned long j = 1; j <= k; ++j) h[j] += x * h[j - 1];
    }
    return h[k];
}

FundamentalClassPairing::FundamentalClassPairing(int n1_, int n2_,
                                                 std::span<const long long> twists)
    : n1(n1_), n2(n2_) {
    betas.reserve(n1 + 1);
    for (int k = 0; k <= n1; ++k) betas.push_back(beta(static_cast<unsigned long>(k), twists));
}

Rat FundamentalClassPairing::pair(const BiSeries& p) const {
    const unsigned total = static_cast<unsigned>(n1 + n2);
    if (p.ucap < static_cast<unsigned>(n1) || p.dcap < total)
        throw std::invalid_argument("pair: caps too small for this bundle");
    Rat acc = 0;
    for (int a = 0; a <= n1; ++a) {
        const Rat& c = p.coeff(static_cast<unsigned>(a), total - static_cast<unsigned>(a));
        if (!c.is_zero()) acc += c * Rat(betas[static_cast<size_t>(n1 - a)]);
    }
    return acc;
}

Rat pair_with_fundamental_class(const BiSeries& p, int n1, int n2,
                                std::span<const long long> twists) {
    return FundamentalClassPairing(n1, n2, twists).pair(p);
}

Rat genus_pairing(const TwistSpec& spec, int sign) {
    const unsigned U = static_cast<unsigned>(spec.n1);
    const unsigned D = static_cast<unsigned>(spec.n1 + spec.n2);
    UniSeries q = q_series(D);

    // Q(u)^{n1+1} only matters up to u-degree n1
    UniSeries qu(U);
    for (unsigned m = 0; m <= U; ++m) qu[m] = q[m];
    BiSeries acc = substitute_linear(uni_pow(qu, static_cast<unsigned long>(spec.n1) + 1, U),
                                     Rat(1), Rat(0), U, D);

    acc = bi_mul(acc, substitute_linear(q, Rat(0), Rat(1), U, D));
    for (long long ij : spec.twists)
        acc = bi_mul(acc, substitute_linear(q, Rat(-ij), Rat(1), U, D));

    const long s = sign >= 0 ? 1 : -1;
    acc = bi_mul(acc, substitute_linear(exp_series(Rat(1), D), Rat(s * spec.d1, 2),
                                        Rat(s * spec.d2, 2), U, D));

    return pair_with_fundamental_class(acc, spec.n1, spec.n2, spec.twists);
}

ChernEulerData chern_and_euler(int n1, int n2, std::span<const long long> twists) {
    long long sigma1 = 0;
    for (long long v : twists) sigma1 += v;
    return {n1 + 1 - sigma1, static_cast<long long>(n2) + 1,
            static_cast<long long>(n1 + 1) * (n2 + 1)};
}

}  // namespace tmh

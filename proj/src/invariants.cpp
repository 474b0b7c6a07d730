#include "tmh/invariants.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

#include "tmh/combinatorics.hpp"

namespace tmh {

SpinData spin_check(const TwistSpec& spec) {
    spec.validate();
    const long long s1 = spec.sigma1();
    const bool ok1 = (spec.d1 - (spec.n1 + 1 - s1)) % 2 == 0;
    const bool ok2 = (spec.d2 - (spec.n2 + 1)) % 2 == 0;
    if (!ok1 || !ok2) return {};
    return {true, (spec.d1 - spec.n1 - 1 + s1) / 2, (spec.d2 - spec.n2 - 1) / 2};
}

namespace {

// r-subsets of {0..m-1}, lexicographic
template <class F>
void for_each_subset(int m, int r, std::vector<int>& buf, int start, F&& fn) {
    if (static_cast<int>(buf.size()) == r) {
        fn();
        return;
    }
    for (int i = start; i <= m - (r - static_cast<int>(buf.size())); ++i) {
        buf.push_back(i);
        for_each_subset(m, r, buf, i + 1, fn);
        buf.pop_back();
    }
}

// vectors (l_1..l_r) with every l_j >= 1 and sum <= budget, lexicographic
template <class F>
void for_each_composition(int r, int budget, std::vector<int>& buf, F&& fn) {
    if (static_cast<int>(buf.size()) == r) {
        fn();
        return;
    }
    const int reserve = r - static_cast<int>(buf.size()) - 1;
    for (int l = 1; l + reserve <= budget; ++l) {
        buf.push_back(l);
        for_each_composition(r, budget - l, buf, fn);
        buf.pop_back();
    }
}

int parity_of(const Rat& r, const char* where) {
    if (!r.is_integer())
        throw IntegralityViolation(std::string(where) + ": expected an integer, got " + r.str());
    return r.numerator().is_odd() ? 1 : 0;
}

}  // namespace

Rat f_closed(const TwistSpec& spec) {
    spec.validate();
    const int n1 = spec.n1;
    const int n2 = spec.n2;
    const Rat x0(spec.d1 + n1 - 1 + spec.sigma1(), 2);
    const Rat y0(spec.d2 + n2 - 1, 2);

    // Positions with zero twist contribute nothing: their inner m-sum is an
    // alternating binomial sum of a constant, which vanishes for l_j >= 1.
    std::vector<long long> nz;
    for (long long v : spec.twists)
        if (v != 0) nz.push_back(v);

    Rat total = binom_general(x0, static_cast<unsigned long>(n1)) *
                binom_general(y0, static_cast<unsigned long>(n2));

    const int rmax = std::min<int>(n1, static_cast<int>(nz.size()));
    std::vector<int> subset, comp;
    for (int r = 1; r <= rmax; ++r) {
        for_each_subset(static_cast<int>(nz.size()), r, subset, 0, [&] {
            for_each_composition(r, n1, comp, [&] {
                const int L = std::accumulate(comp.begin(), comp.end(), 0);
                // depends only on (r, L); factored out of the m-sums
                Rat d2bin = binom_general(y0 + Rat(static_cast<long>(L - r)),
                                          static_cast<unsigned long>(n2 + L));
                if (d2bin.is_zero()) return;

                Rat msum = 0;
                std::vector<int> m(r, 0);
                for (;;) {
                    long long shift = 0;
                    int msz = 0;
                    Int multi = 1;
                    for (int j = 0; j < r; ++j) {
                        shift += nz[static_cast<size_t>(subset[j])] * m[j];
                        msz += m[j];
                        multi *= Int::binomial(static_cast<unsigned long>(comp[j]),
                                               static_cast<unsigned long>(m[j]));
                    }
                    Rat term = Rat(multi) * binom_general(x0 - Rat(shift),
                                                          static_cast<unsigned long>(n1));
                    msum += (msz % 2 != 0) ? -term : term;

                    int pos = r - 1;
                    while (pos >= 0 && m[pos] == comp[pos]) m[pos--] = 0;
                    if (pos < 0) break;
                    ++m[pos];
                }
                total += msum * d2bin;
            });
        });
    }
    return total;
}

Int a_hat(const TwistSpec& spec) {
    spec.validate();
    if ((spec.n1 + spec.n2) % 2 == 0) return Int(0);  // dim not divisible by 4
    Rat diff = f_closed(spec) - f_closed(spec.negated());
    if (!diff.is_integer())
        throw IntegralityViolation("a_hat: fractional value " + diff.str() + " for " +
                                   spec.str() + " (non-spin input)");
    return diff.numerator();
}

KOClass alpha(const TwistSpec& spec) {
    SpinData sd = spin_check(spec);
    if (!sd.is_spin)
        throw NotSpinError("alpha: " + spec.str() + " has no induced spin structure");
    switch (spec.dim_real() % 8) {
        case 0:
            return {0, KOGroup::Z, a_hat(spec)};
        case 4: {
            Int v = a_hat(spec);
            if (v.is_odd())
                throw IntegralityViolation("alpha: odd A-hat " + v.str() +
                                           " in dimension 4 mod 8 for " + spec.str());
            return {4, KOGroup::Z, v.fdiv_2exp(1)};
        }
        case 2: {
            Rat f = f_closed(spec);
            return {2, KOGroup::Z2, Int(parity_of(f, "alpha") ? 1L : 0L)};
        }
        default:
            return {6, KOGroup::Trivial, Int(0)};
    }
}

int alpha_closed_n1_1(const TwistSpec& spec) {
    spec.validate();
    if (spec.n1 != 1 || spec.n2 % 4 != 1)
        throw WrongShapeError("alpha_closed_n1_1 needs n1 = 1 and n2 = 1 mod 4");
    SpinData sd = spin_check(spec);
    if (!sd.is_spin) throw NotSpinError("alpha_closed_n1_1: " + spec.str() + " is not spin");
    const Int n2k2 = Int(spec.n2) + Int(sd.k2);
    Int t = Int(sd.k1 + 1) * binom_top(n2k2, static_cast<unsigned long>(spec.n2)) +
            Int(spec.sigma1()) * binom_top(n2k2, static_cast<unsigned long>(spec.n2) + 1);
    return t.is_odd() ? 1 : 0;
}

int alpha_closed_n1_2(const TwistSpec& spec) {
    spec.validate();
    if (spec.n1 != 2 || spec.n2 % 4 != 0)
        throw WrongShapeError("alpha_closed_n1_2 needs n1 = 2 and n2 = 0 mod 4");
    SpinData sd = spin_check(spec);
    if (!sd.is_spin) throw NotSpinError("alpha_closed_n1_2: " + spec.str() + " is not spin");
    const unsigned long n2 = static_cast<unsigned long>(spec.n2);
    const Int s1(spec.sigma1()), s2(spec.sigma2()), k1(sd.k1);
    const Int n2k2 = Int(spec.n2) + Int(sd.k2);
    const Int q = s1 * s1 - Int(2) * s2;

    Rat t = Rat(binom_top(k1 + Int(2), 2) * binom_top(n2k2, n2));
    t += (Rat(-q, Int(2)) + Rat((Int(2) * k1 + Int(3)) * s1, Int(2))) *
         Rat(binom_top(n2k2, n2 + 1));
    t += Rat(q * binom_top(n2k2 + Int(1), n2 + 2));
    t += Rat(s2 * binom_top(n2k2, n2 + 2));
    return parity_of(t, "alpha_closed_n1_2");
}

PscVerdict psc_verdict(const TwistSpec& spec) {
    SpinData sd = spin_check(spec);
    if (!sd.is_spin || spec.dim_real() < 5) return PscVerdict::Inapplicable;
    return alpha(spec).is_zero() ? PscVerdict::Exists : PscVerdict::Obstructed;
}

namespace {

bool even_ll(long long v) { return v % 2 == 0; }

}  // namespace

bool psc_dyadic_n1_1(const TwistSpec& spec) {
    spec.validate();
    if (spec.n1 != 1 || spec.n2 % 4 != 1)
        throw WrongShapeError("psc_dyadic_n1_1 needs n1 = 1 and n1+n2 = 2 mod 4");
    SpinData sd = spin_check(spec);
    if (!sd.is_spin) throw NotSpinError("psc_dyadic_n1_1: " + spec.str() + " is not spin");

    const long long k1 = sd.k1, k2 = sd.k2, s1 = spec.sigma1();
    const Int n2q(spec.n2 / 4);
    if (k2 >= 0) {
        if (!dyadic_disjoint(Int(k2 / 4), n2q)) return false;
        switch (k2 % 4) {
            case 0: return even_ll(k1);
            case 1: return !even_ll(s1);
            case 2: return even_ll(k1 + s1);
            default: return false;
        }
    }
    if (k2 >= -spec.n2) return false;  // alpha vanishes on the middle band
    const long long kk = -k2 - 1 - spec.n2;
    if (!dyadic_disjoint(Int(kk / 4), n2q)) return false;
    switch ((-k2) % 4) {
        case 0: return even_ll(k1);
        case 2: return even_ll(k1 + s1);
        case 3: return !even_ll(s1);
        default: return false;
    }
}

bool psc_dyadic_n1_2(const TwistSpec& spec) {
    spec.validate();
    if (spec.n1 != 2 || spec.n2 % 4 != 0)
        throw WrongShapeError("psc_dyadic_n1_2 needs n1 = 2 and n1+n2 = 2 mod 4");
    SpinData sd = spin_check(spec);
    if (!sd.is_spin) throw NotSpinError("psc_dyadic_n1_2: " + spec.str() + " is not spin");

    const Int k1(sd.k1), s1(spec.sigma1()), s2(spec.sigma2());
    const long long k2 = sd.k2;
    const Int n2q(spec.n2 / 4);
    const Rat bin(binom_top(k1 + Int(2), 2));
    const Int q = s1 * s1 - Int(2) * s2;

    const auto k1_mod4_01 = [&] {
        long long r = ((sd.k1 % 4) + 4) % 4;
        return r == 0 || r == 1;
    };

    if (k2 >= 0) {
        if (!dyadic_disjoint(Int(k2 / 4), n2q)) return false;
        switch (k2 % 4) {
            case 0:
                return k1_mod4_01();
            case 1:
                return parity_of(bin + Rat(q, Int(2)) +
                                     Rat((Int(2) * k1 + Int(3)) * s1, Int(2)),
                                 "psc_dyadic_n1_2") == 1;
            case 2:
                return parity_of(bin + Rat(s1 * s1 - s2), "psc_dyadic_n1_2") == 1;
            default:
                return parity_of(bin + Rat(s1 * (Int(2) * k1 + Int(3) - s1), Int(2)),
                                 "psc_dyadic_n1_2") == 1;
        }
    }
    if (k2 == -spec.n2 - 1) {
        Rat t = Rat((k1 + Int(1)) * (k1 + Int(2)), Int(2)) +
                Rat(s1 * (s1 - Int(2) * k1 - Int(3)), Int(2));
        return parity_of(t, "psc_dyadic_n1_2") == 1;
    }
    if (k2 > -spec.n2 - 1) return false;  // middle band: PSC always exists
    const long long kk = -k2 - 1 - spec.n2;
    if (!dyadic_disjoint(Int(kk / 4), n2q)) return false;
    switch ((-k2) % 4) {
        case 0:
            return k1_mod4_01();
        case 1:
            return parity_of(bin + Rat(s1 * (s1 - Int(2) * k1 - Int(3)), Int(2)),
                             "psc_dyadic_n1_2") == 1;
        case 2:
            return parity_of(bin + Rat(s1 * s1 - s2), "psc_dyadic_n1_2") == 1;
        default:
            // coefficient on sigma1 here is (2k1+3+sigma1)/2, the mirror of the
            // k2 >= 0, k2 = 1 mod 4 case
            return parity_of(bin + Rat((Int(2) * k1 + Int(3) + s1) * s1, Int(2)) - Rat(s2),
                             "psc_dyadic_n1_2") == 1;
    }
}

bool circle_action_obstruction(const TwistSpec& spec) {
    SpinData sd = spin_check(spec);
    if (!sd.is_spin) return false;
    return !a_hat(spec).is_zero();
}

InvariantReport report(const TwistSpec& spec) {
    spec.validate();
    InvariantReport r;
    r.spec = spec;
    r.dim_real = spec.dim_real();
    r.spin = spin_check(spec);
    r.a_hat = a_hat(spec);
    r.alpha_defined = r.spin.is_spin;
    if (r.alpha_defined) r.alpha = alpha(spec);
    r.psc = psc_verdict(spec);
    r.no_circle_action = r.spin.is_spin && !r.a_hat.is_zero();
    r.simply_connected_assumed = true;
    r.dim_ge_5 = r.dim_real >= 5;
    return r;
}

}  // namespace tmh

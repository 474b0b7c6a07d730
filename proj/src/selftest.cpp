#include "tmh/selftest.hpp"

#include <atomic>
#include <mutex>
#include <random>
#include <thread>

#include "tmh/combinatorics.hpp"
#include "tmh/invariants.hpp"
#include "tmh/series.hpp"
#include "tmh/sweep.hpp"

namespace tmh {

namespace {

OracleScanResult compare_list(const std::vector<TwistSpec>& specs, unsigned jobs,
                              size_t corrupt_index) {
    OracleScanResult res;
    res.checked = specs.size();
    if (specs.empty()) return res;
    if (jobs == 0) jobs = 1;
    jobs = std::min<unsigned>(jobs, static_cast<unsigned>(specs.size()));

    std::atomic<size_t> next{0};
    std::atomic<uint64_t> failed{0};
    std::atomic<size_t> first_bad{specs.size()};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
        try {
            for (;;) {
                size_t i = next.fetch_add(1);
                if (i >= specs.size()) return;
                Rat closed = f_closed(specs[i]);
                if (i == corrupt_index) closed += Rat(1);
                if (closed != genus_pairing(specs[i], +1)) {
                    failed.fetch_add(1);
                    size_t cur = first_bad.load();
                    while (i < cur && !first_bad.compare_exchange_weak(cur, i)) {
                    }
                }
            }
        } catch (...) {
            std::lock_guard<std::mutex> lock(error_mutex);
            if (!error) error = std::current_exception();
        }
    };
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    if (error) std::rethrow_exception(error);
    res.failed = failed.load();
    if (first_bad.load() < specs.size()) res.first_failure = specs[first_bad.load()];
    return res;
}

}  // namespace

OracleScanResult oracle_scan_spin_grid(int max_n1, int max_n2, long long twist_bound,
                                       int max_nonzero, long long max_k, unsigned jobs,
                                       bool corrupt) {
    std::vector<TwistSpec> specs;
    TwistGenerator gen{max_nonzero, twist_bound};
    for (int n1 = 1; n1 <= max_n1; ++n1)
        for (int n2 = 1; n2 <= max_n2; ++n2)
            for (const auto& tv : generate_twist_vectors(n2, gen)) {
                long long s1 = 0;
                for (long long v : tv) s1 += v;
                for (long long k1 = -max_k; k1 <= max_k; ++k1)
                    for (long long k2 = -max_k; k2 <= max_k; ++k2)
                        specs.push_back(
                            {n1, n2, tv, 2 * k1 + n1 + 1 - s1, 2 * k2 + n2 + 1});
            }
    return compare_list(specs, jobs, corrupt ? specs.size() / 2 : specs.size());
}

OracleScanResult oracle_scan_random_nonspin(int max_n1, int max_n2, long long twist_bound,
                                            int max_nonzero, long long d_bound, int samples,
                                            uint64_t seed, unsigned jobs) {
    std::mt19937_64 rng(seed);
    auto rand_in = [&](long long lo, long long hi) {
        return std::uniform_int_distribution<long long>(lo, hi)(rng);
    };
    std::vector<TwistSpec> specs;
    while (static_cast<int>(specs.size()) < samples) {
        TwistSpec s;
        s.n1 = static_cast<int>(rand_in(1, max_n1));
        s.n2 = static_cast<int>(rand_in(1, max_n2));
        s.twists.assign(static_cast<size_t>(s.n2), 0);
        int count = static_cast<int>(rand_in(0, std::min(max_nonzero, s.n2)));
        for (int t = 0; t < count; ++t) {
            size_t pos = static_cast<size_t>(rand_in(0, s.n2 - 1));
            long long v = rand_in(1, twist_bound);
            s.twists[pos] = rand_in(0, 1) ? v : -v;
        }
        s.d1 = rand_in(-d_bound, d_bound);
        s.d2 = rand_in(-d_bound, d_bound);
        if (spin_check(s).is_spin) continue;
        specs.push_back(std::move(s));
    }
    return compare_list(specs, jobs, specs.size());
}

namespace {

void record(std::vector<IdentityCheck>& out, const std::string& name, bool ok,
            const std::string& detail) {
    out.push_back({name, ok, ok ? "" : detail});
}

}  // namespace

std::vector<IdentityCheck> a_number_identity_checks(unsigned depth) {
    std::vector<IdentityCheck> out;
    const unsigned N = depth;

    {
        bool ok = true;
        std::string detail;
        for (unsigned n = 0; n <= N && ok; ++n)
            for (long l = -1; l <= static_cast<long>(n) + 1 && ok; ++l)
                if (a_number(n, l) != a_number_explicit(n, l)) {
                    ok = false;
                    detail = "n=" + std::to_string(n) + " l=" + std::to_string(l);
                }
        record(out, "A(n,l) recurrence == alternating sum", ok, detail);
    }
    {
        bool ok = true;
        std::string detail;
        for (unsigned n = 0; n <= N && ok; ++n)
            for (unsigned l = 0; l <= n && ok; ++l) {
                Rat lhs = a_number(n, static_cast<long>(l));
                Rat rhs = Rat(Int::factorial(l), Int::factorial(n)) * Rat(stirling2(n, l));
                if (lhs != rhs) {
                    ok = false;
                    detail = "n=" + std::to_string(n) + " l=" + std::to_string(l);
                }
            }
        record(out, "A(n,l) == l!/n! S(n,l)", ok, detail);
    }
    {
        // coefficients of (e^x - 1)^l against column l of the triangle
        bool ok = true;
        std::string detail;
        UniSeries em1 = exp_series(Rat(1), N);
        em1[0] = 0;
        for (unsigned l = 0; l <= std::min(N, 6u) && ok; ++l) {
            UniSeries p = uni_pow(em1, l, N);
            for (unsigned n = 0; n <= N && ok; ++n)
                if (p[n] != a_number(n, static_cast<long>(l))) {
                    ok = false;
                    detail = "l=" + std::to_string(l) + " coefficient " + std::to_string(n);
                }
        }
        record(out, "sum_n A(n,l) x^n == (e^x - 1)^l", ok, detail);
    }
    {
        bool ok = true;
        std::string detail;
        for (unsigned n = 0; n <= N && ok; ++n) {
            Rat sum = 0;
            for (unsigned l = 0; l <= n; ++l)
                sum += Rat(Int::factorial(n), Int::factorial(l)) *
                       a_number(n, static_cast<long>(l));
            if (sum != Rat(bell(n))) {
                ok = false;
                detail = "n=" + std::to_string(n);
            }
        }
        record(out, "Bell numbers == sum_l n!/l! A(n,l)", ok, detail);
    }
    {
        // reciprocal of (e^x - 1)/x, an independent route to x/(e^x - 1)
        bool ok = true;
        std::string detail;
        UniSeries g(N);
        Rat term = 1;
        for (unsigned m = 0; m <= N; ++m) {
            g[m] = term;
            term /= Rat(static_cast<long>(m + 2));
        }
        UniSeries inv = uni_reciprocal(g);
        Rat fact = 1;
        for (unsigned n = 0; n <= N && ok; ++n) {
            if (n > 0) fact *= Rat(static_cast<long>(n));
            if (bernoulli0(n) != inv[n] * fact) {
                ok = false;
                detail = "n=" + std::to_string(n);
            }
        }
        record(out, "Bernoulli B_n(0) == series inversion of (e^x - 1)/x", ok, detail);
    }
    {
        bool ok = true;
        std::string detail;
        for (unsigned n = 0; n <= N && ok; ++n)
            for (unsigned l = 0; l <= N && ok; ++l) {
                Rat lhs = divided_difference_power(n, l);
                Rat rhs = Rat(Int::factorial(n), Int::factorial(l)) *
                          a_number(n, static_cast<long>(l));
                if (lhs != rhs) {
                    ok = false;
                    detail = "n=" + std::to_string(n) + " l=" + std::to_string(l);
                }
            }
        record(out, "divided differences of x^n == n!/l! A(n,l)", ok, detail);
    }
    return out;
}

std::vector<IdentityCheck> parity_identity_checks(unsigned lucas_bound, unsigned reduction_bound,
                                                  unsigned odd_iff_nmax, long odd_iff_kmax) {
    std::vector<IdentityCheck> out;
    {
        bool ok = true;
        std::string detail;
        for (unsigned long n = 0; n <= lucas_bound && ok; ++n)
            for (unsigned long m = 0; m <= lucas_bound && ok; ++m) {
                int direct = binom_nk(n, Int(static_cast<long>(m))).is_odd() ? 1 : 0;
                if (binom_mod2_lucas(n, Int(static_cast<long>(m))) != direct) {
                    ok = false;
                    detail = "n=" + std::to_string(n) + " m=" + std::to_string(m);
                }
            }
        record(out, "Lucas digit parity == big-integer parity", ok, detail);
    }
    {
        bool ok = true;
        std::string detail;
        for (unsigned long m = 0; m <= reduction_bound && ok; ++m)
            for (unsigned long n = 0; n <= reduction_bound && ok; ++n) {
                int direct =
                    Int::binomial(4 * m + n, 4 * m).is_odd() ? 1 : 0;
                if (parity_reduction_mult4(m, n) != direct) {
                    ok = false;
                    detail = "m=" + std::to_string(m) + " n=" + std::to_string(n);
                }
            }
        record(out, "binom(4m+n, 4m) parity reduction", ok, detail);
    }
    {
        bool ok = true;
        std::string detail;
        for (unsigned long m = 0; m <= reduction_bound && ok; ++m)
            for (unsigned long n = 0; n <= reduction_bound && ok; ++n) {
                int direct = Int::binomial(4 * m + 1 + n, 4 * m + 1).is_odd() ? 1 : 0;
                if (parity_reduction_mult4p1(m, n) != direct) {
                    ok = false;
                    detail = "m=" + std::to_string(m) + " n=" + std::to_string(n);
                }
            }
        record(out, "binom(4m+1+n, 4m+1) parity reduction", ok, detail);
    }
    {
        bool ok = true;
        std::string detail;
        for (unsigned long m = 0; m <= reduction_bound && ok; ++m)
            for (unsigned long n = 0; n <= reduction_bound && ok; ++n) {
                int direct = Int::binomial(m + n, n).is_odd() ? 1 : 0;
                if (binom_mod2_reduced(Int(static_cast<long>(m)), Int(static_cast<long>(n))) !=
                    direct) {
                    ok = false;
                    detail = "m=" + std::to_string(m) + " n=" + std::to_string(n);
                }
            }
        record(out, "fold recursion == direct parity", ok, detail);
    }
    {
        bool ok = true;
        std::string detail;
        for (unsigned long n = 0; n <= odd_iff_nmax && ok; ++n)
            for (long k = -odd_iff_kmax; k <= odd_iff_kmax && ok; ++k) {
                bool it = binom_odd_iff(n, Int(k));
                if (it != (binom_mod2_lucas(n, Int(k)) == 1)) {
                    ok = false;
                    detail = "n=" + std::to_string(n) + " k=" + std::to_string(k);
                }
            }
        record(out, "digit disjointness test == Lucas parity", ok, detail);
    }
    return out;
}

}  // namespace tmh

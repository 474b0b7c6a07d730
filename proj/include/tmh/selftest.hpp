#pragma once
// selftest.hpp - machine-checkable identities: the closed form against the
// series pairing oracle over parameter grids, and the combinatorial
// cross-identities behind the A(n,l) triangle and the mod-2 reductions.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tmh/twist_spec.hpp"

namespace tmh {

struct OracleScanResult {
    uint64_t checked = 0;
    uint64_t failed = 0;
    std::optional<TwistSpec> first_failure;
};

// Spin grid: n1 <= max_n1, n2 <= max_n2, twist vectors with at most
// max_nonzero nonzero entries bounded by twist_bound, |k1|,|k2| <= max_k.
// Checks f_closed(spec) == genus_pairing(spec, +1) exactly.
// corrupt injects one wrong comparison (harness testing aid).
OracleScanResult oracle_scan_spin_grid(int max_n1, int max_n2, long long twist_bound,
                                       int max_nonzero, long long max_k, unsigned jobs,
                                       bool corrupt = false);

// Same comparison on `samples` non-spin specs with integer degrees drawn
// uniformly from |d| <= d_bound (deterministic for a fixed seed).
OracleScanResult oracle_scan_random_nonspin(int max_n1, int max_n2, long long twist_bound,
                                            int max_nonzero, long long d_bound, int samples,
                                            uint64_t seed, unsigned jobs);

struct IdentityCheck {
    std::string name;
    bool passed = false;
    std::string detail;  // first mismatch, when failed
};

// Exact identities of the A(n,l) triangle (recurrence vs alternating sum,
// Stirling scaling, generating function, Bell sums, Bernoulli inversion,
// divided differences), all to the given depth.
std::vector<IdentityCheck> a_number_identity_checks(unsigned depth);

// Mod-2 identities: Lucas vs big-integer parity up to lucas_bound, the
// quarter-shift and fold reductions up to reduction_bound, and the digit
// disjointness test against Lucas for n <= odd_iff_nmax, |k| <= odd_iff_kmax.
std::vector<IdentityCheck> parity_identity_checks(unsigned lucas_bound, unsigned reduction_bound,
                                                  unsigned odd_iff_nmax, long odd_iff_kmax);

}  // namespace tmh

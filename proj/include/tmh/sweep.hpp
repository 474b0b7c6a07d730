#pragma once
// sweep.hpp - deterministic grid enumeration and parallel evaluation.
//
// Specs are enumerated in lexicographic order (n1, n2, twist vector, d1, d2)
// and results are emitted in that order no matter how many worker threads run.

#include <cstdint>
#include <optional>
#include <vector>

#include "tmh/invariants.hpp"
#include "tmh/twist_spec.hpp"

namespace tmh {

struct TwistGenerator {
    int max_nonzero = 2;
    long long bound = 2;  // |i_j| <= bound
};

struct SweepRange {
    int n1_lo = 1, n1_hi = 1;
    int n2_lo = 1, n2_hi = 1;
    // explicit twist vectors (must match n2; only valid for a single-n2 range),
    // otherwise generated from the generator bounds
    std::vector<std::vector<long long>> explicit_twists;
    TwistGenerator generator;
    long long d1_lo = 0, d1_hi = 0;
    long long d2_lo = 0, d2_hi = 0;
    bool spin_only = false;
};

// All twist vectors of length n2 with at most max_nonzero nonzero entries and
// |i_j| <= bound, sorted lexicographically.
std::vector<std::vector<long long>> generate_twist_vectors(int n2, const TwistGenerator& gen);

std::vector<TwistSpec> enumerate_specs(const SweepRange& range);

struct OutputRecord {
    InvariantReport report;
    long long elapsed_us = 0;
};

// Evaluates report() for every spec on `jobs` threads; results keep spec order.
std::vector<OutputRecord> run_sweep(const std::vector<TwistSpec>& specs, unsigned jobs);

}  // namespace tmh

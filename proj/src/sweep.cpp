#include "tmh/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace tmh {

std::vector<std::vector<long long>> generate_twist_vectors(int n2, const TwistGenerator& gen) {
    if (gen.max_nonzero < 0 || gen.bound < 0)
        throw std::invalid_argument("twist generator bounds must be nonnegative");
    std::vector<std::vector<long long>> out;
    std::vector<int> positions;
    std::vector<long long> values;

    auto emit = [&] {
        std::vector<long long> v(static_cast<size_t>(n2), 0);
        for (size_t t = 0; t < positions.size(); ++t)
            v[static_cast<size_t>(positions[t])] = values[t];
        out.push_back(std::move(v));
    };

    // choose nonzero positions, then nonzero values for each
    auto fill_values = [&](auto&& self, size_t t) -> void {
        if (t == positions.size()) {
            emit();
            return;
        }
        for (long long v = -gen.bound; v <= gen.bound; ++v) {
            if (v == 0) continue;
            values[t] = v;
            self(self, t + 1);
        }
    };
    auto choose = [&](auto&& self, int start, int left) -> void {
        if (left == 0) {
            values.assign(positions.size(), 0);
            fill_values(fill_values, 0);
            return;
        }
        for (int i = start; i <= n2 - left; ++i) {
            positions.push_back(i);
            self(self, i + 1, left - 1);
            positions.pop_back();
        }
    };
    for (int c = 0; c <= std::min(gen.max_nonzero, n2); ++c) choose(choose, 0, c);

    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<TwistSpec> enumerate_specs(const SweepRange& range) {
    std::vector<TwistSpec> specs;
    for (int n1 = range.n1_lo; n1 <= range.n1_hi; ++n1)
        for (int n2 = range.n2_lo; n2 <= range.n2_hi; ++n2) {
            std::vector<std::vector<long long>> twists;
            if (!range.explicit_twists.empty()) {
                for (const auto& t : range.explicit_twists) {
                    if (t.size() != static_cast<size_t>(n2))
                        throw std::invalid_argument(
                            "explicit twist vector length " + std::to_string(t.size()) +
                            " does not match n2 = " + std::to_string(n2));
                    twists.push_back(t);
                }
                std::sort(twists.begin(), twists.end());
                twists.erase(std::unique(twists.begin(), twists.end()), twists.end());
            } else {
                twists = generate_twist_vectors(n2, range.generator);
            }
            for (const auto& tv : twists)
                for (long long d1 = range.d1_lo; d1 <= range.d1_hi; ++d1)
                    for (long long d2 = range.d2_lo; d2 <= range.d2_hi; ++d2) {
                        TwistSpec s{n1, n2, tv, d1, d2};
                        if (range.spin_only && !spin_check(s).is_spin) continue;
                        specs.push_back(std::move(s));
                    }
        }
    return specs;
}

std::vector<OutputRecord> run_sweep(const std::vector<TwistSpec>& specs, unsigned jobs) {
    if (jobs == 0) jobs = 1;
    std::vector<OutputRecord> out(specs.size());
    if (specs.empty()) return out;
    jobs = std::min<unsigned>(jobs, static_cast<unsigned>(specs.size()));

    std::atomic<size_t> next{0};
    std::atomic<bool> stop{false};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
        try {
            for (;;) {
                size_t i = next.fetch_add(1);
                if (i >= specs.size() || stop.load()) return;
                auto t0 = std::chrono::steady_clock::now();
                out[i].report = report(specs[i]);
                auto t1 = std::chrono::steady_clock::now();
                out[i].elapsed_us =
                    std::chrono::duration_cast<std::chrono::microseconds>(t1 - t0).count();
            }
        } catch (...) {
            std::lock_guard<std::mutex> lock(error_mutex);
            if (!error) error = std::current_exception();
            stop.store(true);
        }
    };
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(jobs);
        for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    if (error) std::rethrow_exception(error);
    return out;
}

}  // namespace tmh

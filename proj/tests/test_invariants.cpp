#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "tmh/combinatorics.hpp"
#include "tmh/invariants.hpp"
#include "tmh/series.hpp"
#include "tmh/sweep.hpp"

using namespace tmh;

TEST_CASE("spin condition") {
    {
        SpinData s = spin_check({1, 1, {0}, 2, 2});
        CHECK(s.is_spin);
        CHECK(s.k1 == 0);
        CHECK(s.k2 == 0);
    }
    CHECK_FALSE(spin_check({1, 1, {0}, 1, 1}).is_spin);
    {
        SpinData s = spin_check({2, 3, {2, 0, 0}, 1, 4});
        CHECK(s.is_spin);
        CHECK(s.k1 == 0);
        CHECK(s.k2 == 0);
    }
    // d = 2k + (shift) reconstruction
    for (long long k1 = -3; k1 <= 3; ++k1)
        for (long long k2 = -3; k2 <= 3; ++k2) {
            TwistSpec s{2, 2, {1, -1}, 2 * k1 + 3 - 0, 2 * k2 + 3};
            SpinData sd = spin_check(s);
            CHECK(sd.is_spin);
            CHECK(sd.k1 == k1);
            CHECK(sd.k2 == k2);
        }
}

TEST_CASE("closed form F: reference values") {
    CHECK(f_closed({1, 1, {0}, 2, 2}) == Rat(1));
    CHECK(f_closed({2, 3, {2, 0, 0}, 1, 4}) == genus_pairing({2, 3, {2, 0, 0}, 1, 4}, +1));
    // untwisted factorization over spin degrees
    for (int n1 = 1; n1 <= 3; ++n1)
        for (int n2 = 1; n2 <= 3; ++n2)
            for (long long k1 = -2; k1 <= 2; ++k1)
                for (long long k2 = -2; k2 <= 2; ++k2) {
                    TwistSpec s{n1, n2, std::vector<long long>(n2, 0), 2 * k1 + n1 + 1,
                                2 * k2 + n2 + 1};
                    CHECK(f_closed(s) == Rat(binom_nk(n1, Int(k1)) * binom_nk(n2, Int(k2))));
                }
}

TEST_CASE("closed form F vanishes for even n2, d2 = 1") {
    for (int n1 = 1; n1 <= 3; ++n1)
        for (int n2 = 2; n2 <= 4; n2 += 2)
            for (const auto& tw : generate_twist_vectors(n2, {2, 2}))
                for (long long d1 = -3; d1 <= 3; ++d1)
                    CHECK(f_closed({n1, n2, tw, d1, 1}).is_zero());
}

TEST_CASE("closed form F is symmetric in the twist vector") {
    std::vector<long long> tw{2, -1, 0};
    std::sort(tw.begin(), tw.end());
    TwistSpec base{3, 3, tw, 2, 1};
    Rat ref = f_closed(base);
    do {
        CHECK(f_closed({3, 3, tw, 2, 1}) == ref);
    } while (std::next_permutation(tw.begin(), tw.end()));
}

TEST_CASE("A-hat genus") {
    CHECK(a_hat({1, 2, {0, 0}, 1, 1}) == Int(0));
    CHECK(a_hat({2, 3, {2, 0, 0}, 1, 4}) == Int(2));
    CHECK(a_hat({1, 2, {0, 0}, 4, 7}) == Int(24));
    // dimension convention: zero when n1+n2 is even
    CHECK(a_hat({1, 1, {2}, 3, 5}) == Int(0));
    CHECK(a_hat({2, 2, {1, 1}, 1, 1}) == Int(0));
}

TEST_CASE("A-hat of a non-spin 4-manifold can be fractional") {
    // F(1,2) - F(-1,-2) = 3/8 here; the integer-valued contract must refuse
    TwistSpec s{1, 2, {0, 0}, 1, 2};
    CHECK_FALSE(spin_check(s).is_spin);
    Rat diff = f_closed(s) - f_closed(s.negated());
    CHECK(diff == Rat(3, 8));
    CHECK_THROWS_AS(a_hat(s), IntegralityViolation);
}

TEST_CASE("A-hat against the untwisted product formula") {
    for (int n1 = 1; n1 <= 3; ++n1)
        for (int n2 = 1; n2 <= 4; ++n2) {
            if ((n1 + n2) % 2 == 0) continue;
            for (long long k1 = -3; k1 <= 3; ++k1)
                for (long long k2 = -3; k2 <= 3; ++k2) {
                    TwistSpec s{n1, n2, std::vector<long long>(n2, 0), 2 * k1 + n1 + 1,
                                2 * k2 + n2 + 1};
                    CHECK(a_hat(s) ==
                          Int(2) * binom_nk(n1, Int(k1)) * binom_nk(n2, Int(k2)));
                }
        }
}

TEST_CASE("A-hat of the quadratic twisted family") {
    for (int n2 = 1; n2 <= 5; n2 += 2)
        for (long long j = -6; j <= 6; j += 2) {
            std::vector<long long> tw(n2, 0);
            tw[0] = j;
            Int expected((j / 2) * (j / 2 + 1));
            CHECK(a_hat({2, n2, tw, 1, n2 + 1}) == expected);
            bool nonzero = (j != 0 && j != -2);
            CHECK(!a_hat({2, n2, tw, 1, n2 + 1}).is_zero() == nonzero);
        }
}

TEST_CASE("alpha invariant across the KO groups") {
    {
        KOClass a = alpha({1, 1, {0}, 2, 2});  // dim 2
        CHECK(a.n_mod_8 == 2);
        CHECK(a.group == KOGroup::Z2);
        CHECK(a.value == Int(1));
    }
    {
        KOClass a = alpha({2, 3, {2, 0, 0}, 1, 4});  // dim 8
        CHECK(a.n_mod_8 == 0);
        CHECK(a.group == KOGroup::Z);
        CHECK(a.value == Int(2));
    }
    {
        KOClass a = alpha({1, 2, {0, 0}, 4, 7});  // dim 4: half of A-hat = 24
        CHECK(a.n_mod_8 == 4);
        CHECK(a.group == KOGroup::Z);
        CHECK(a.value == Int(12));
    }
    {
        KOClass a = alpha({1, 3, {0, 0, 0}, 2, 4});  // dim 6: trivial group
        CHECK(a.n_mod_8 == 6);
        CHECK(a.group == KOGroup::Trivial);
        CHECK(a.is_zero());
    }
    CHECK_THROWS_AS(alpha({1, 1, {0}, 1, 1}), NotSpinError);
}

TEST_CASE("closed alpha forms on their shapes") {
    {
        // n1 = 1, n2 = 5, untwisted, k1 = k2 = 0
        TwistSpec s{1, 5, {0, 0, 0, 0, 0}, 2, 6};
        CHECK(alpha_closed_n1_1(s) == 1);
        CHECK(alpha(s).value == Int(1));
    }
    {
        // k1 odd, sigma1 = 0 kills both terms
        TwistSpec s{1, 5, {0, 0, 0, 0, 0}, 4, 6};  // k1 = 1
        CHECK(alpha_closed_n1_1(s) == 0);
    }
    {
        TwistSpec s{2, 4, {0, 0, 0, 0}, 3, 5};  // n1 = 2, k1 = k2 = 0
        CHECK(alpha_closed_n1_2(s) == 1);
        CHECK(alpha(s).value == Int(1));
    }
    CHECK_THROWS_AS(alpha_closed_n1_1({2, 4, {0, 0, 0, 0}, 3, 5}), WrongShapeError);
    CHECK_THROWS_AS(alpha_closed_n1_2({1, 5, {0, 0, 0, 0, 0}, 2, 6}), WrongShapeError);
    CHECK_THROWS_AS(alpha_closed_n1_1({1, 5, {0, 0, 0, 0, 0}, 1, 6}), NotSpinError);

    // against the general alpha bit over a small spin grid
    for (long long k1 = -3; k1 <= 3; ++k1)
        for (long long k2 = -3; k2 <= 3; ++k2)
            for (const auto& tw : generate_twist_vectors(5, {2, 1})) {
                long long s1 = 0;
                for (long long v : tw) s1 += v;
                TwistSpec s{1, 5, tw, 2 * k1 + 2 - s1, 2 * k2 + 6};
                CHECK(alpha_closed_n1_1(s) == (alpha(s).value.is_zero() ? 0 : 1));
            }
    for (long long k1 = -3; k1 <= 3; ++k1)
        for (long long k2 = -3; k2 <= 3; ++k2)
            for (const auto& tw : generate_twist_vectors(4, {2, 1})) {
                long long s1 = 0;
                for (long long v : tw) s1 += v;
                TwistSpec s{2, 4, tw, 2 * k1 + 3 - s1, 2 * k2 + 5};
                CHECK(alpha_closed_n1_2(s) == (alpha(s).value.is_zero() ? 0 : 1));
            }
}

TEST_CASE("positive scalar curvature verdicts") {
    CHECK(psc_verdict({1, 1, {0}, 2, 2}) == PscVerdict::Inapplicable);  // dim 2
    CHECK(psc_verdict({1, 1, {0}, 1, 1}) == PscVerdict::Inapplicable);  // not spin
    CHECK(psc_verdict({2, 2, {1, 1}, 1, 1}) == PscVerdict::Exists);     // degree (1,1)
    CHECK(psc_verdict({1, 5, {0, 0, 0, 0, 0}, 2, 6}) == PscVerdict::Obstructed);
}

TEST_CASE("dyadic PSC classifiers") {
    CHECK(psc_dyadic_n1_1({1, 5, {0, 0, 0, 0, 0}, 2, 6}));  // k2 = 0, k1 even
    // middle band -n2 <= k2 < 0: PSC always exists
    for (long long k2 = -5; k2 <= -1; ++k2)
        CHECK_FALSE(psc_dyadic_n1_1({1, 5, {0, 0, 0, 0, 0}, 2, 2 * k2 + 6}));
    CHECK_THROWS_AS(psc_dyadic_n1_1({2, 4, {0, 0, 0, 0}, 1, 5}), WrongShapeError);

    CHECK(psc_dyadic_n1_2({2, 4, {0, 0, 0, 0}, 3, 5}));                // k1 = 0, k2 = 0
    CHECK_FALSE(psc_dyadic_n1_2({2, 4, {0, 0, 0, 0}, 7, 5}));          // k1 = 2 mod 4
    CHECK_THROWS_AS(psc_dyadic_n1_2({1, 5, {0, 0, 0, 0, 0}, 2, 6}), WrongShapeError);

    // classifiers agree with the alpha-based verdict on a small spin grid
    for (long long k1 = -4; k1 <= 4; ++k1)
        for (long long k2 = -9; k2 <= 6; ++k2)
            for (const auto& tw : generate_twist_vectors(5, {2, 1})) {
                long long s1 = 0;
                for (long long v : tw) s1 += v;
                TwistSpec s{1, 5, tw, 2 * k1 + 2 - s1, 2 * k2 + 6};
                CHECK(psc_dyadic_n1_1(s) == (psc_verdict(s) == PscVerdict::Obstructed));
            }
    for (long long k1 = -4; k1 <= 4; ++k1)
        for (long long k2 = -9; k2 <= 6; ++k2)
            for (const auto& tw : generate_twist_vectors(4, {2, 1})) {
                long long s1 = 0;
                for (long long v : tw) s1 += v;
                TwistSpec s{2, 4, tw, 2 * k1 + 3 - s1, 2 * k2 + 5};
                CHECK(psc_dyadic_n1_2(s) == (psc_verdict(s) == PscVerdict::Obstructed));
            }
}

TEST_CASE("circle action obstruction") {
    CHECK(circle_action_obstruction({2, 3, {2, 0, 0}, 1, 4}));
    CHECK_FALSE(circle_action_obstruction({1, 2, {0, 0}, 1, 1}));  // not spin
    for (long long d1 = -3; d1 <= 3; ++d1)
        CHECK_FALSE(circle_action_obstruction({2, 2, {1, 1}, d1, 1}));  // n2 even, d2 = 1
}

TEST_CASE("aggregated report") {
    {
        InvariantReport r = report({1, 2, {0, 0}, 1, 1});
        CHECK_FALSE(r.spin.is_spin);
        CHECK(r.a_hat == Int(0));
        CHECK_FALSE(r.alpha_defined);
        CHECK(r.psc == PscVerdict::Inapplicable);
        CHECK_FALSE(r.no_circle_action);
    }
    {
        InvariantReport r = report({2, 3, {2, 0, 0}, 1, 4});
        CHECK(r.spin.is_spin);
        CHECK(r.spin.k1 == 0);
        CHECK(r.spin.k2 == 0);
        CHECK(r.dim_real == 8);
        CHECK(r.a_hat == Int(2));
        CHECK(r.alpha_defined);
        CHECK(r.alpha.group == KOGroup::Z);
        CHECK(r.alpha.value == Int(2));
        CHECK(r.psc == PscVerdict::Obstructed);
        CHECK(r.no_circle_action);
        CHECK(r.dim_ge_5);
    }
    {
        InvariantReport r = report({1, 1, {0}, 2, 2});
        CHECK(r.spin.is_spin);
        CHECK(r.dim_real == 2);
        CHECK(r.psc == PscVerdict::Inapplicable);
        CHECK(r.alpha.group == KOGroup::Z2);
        CHECK(r.alpha.value == Int(1));
        CHECK_FALSE(r.dim_ge_5);
        CHECK(r.simply_connected_assumed);
    }
    // report never claims an obstruction without spin + nonzero alpha
    for (const auto& tw : generate_twist_vectors(2, {2, 1}))
        for (long long d1 = -2; d1 <= 2; ++d1)
            for (long long d2 = -2; d2 <= 2; ++d2) {
                TwistSpec s{2, 2, tw, d1, d2};
                InvariantReport r = report(s);
                if (r.psc == PscVerdict::Obstructed) {
                    CHECK(r.spin.is_spin);
                    CHECK(r.alpha_defined);
                    CHECK_FALSE(r.alpha.is_zero());
                }
                if (r.no_circle_action) {
                    CHECK(r.spin.is_spin);
                    CHECK_FALSE(r.a_hat.is_zero());
                }
            }
}

TEST_CASE("closed form equals the pairing oracle on a small grid") {
    for (int n1 = 1; n1 <= 2; ++n1)
        for (int n2 = 1; n2 <= 3; ++n2)
            for (const auto& tw : generate_twist_vectors(n2, {2, 1})) {
                long long s1 = 0;
                for (long long v : tw) s1 += v;
                for (long long k1 = -2; k1 <= 2; ++k1)
                    for (long long k2 = -2; k2 <= 2; ++k2) {
                        TwistSpec s{n1, n2, tw, 2 * k1 + n1 + 1 - s1, 2 * k2 + n2 + 1};
                        CHECK(f_closed(s) == genus_pairing(s, +1));
                    }
            }
    // a few non-spin degree pairs as well
    for (long long d1 = -2; d1 <= 2; ++d1)
        for (long long d2 = -2; d2 <= 2; ++d2) {
            TwistSpec s{2, 2, {1, -2}, d1, d2};
            CHECK(f_closed(s) == genus_pairing(s, +1));
        }
}

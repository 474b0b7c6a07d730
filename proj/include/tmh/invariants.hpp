#pragma once
// invariants.hpp - the headline quantities of a twisted Milnor hypersurface:
// spin condition, the closed-form characteristic number F, the A-hat genus,
// the alpha invariant in KO-theory, positive-scalar-curvature verdicts and
// the circle-action obstruction.

#include <stdexcept>

#include "tmh/bigint.hpp"
#include "tmh/twist_spec.hpp"

namespace tmh {

// A quantity that must be an integer came out fractional. For spin inputs
// this signals a bug; for non-spin inputs of odd n1+n2 the A-hat difference
// can be legitimately fractional and callers should expect this error.
struct IntegralityViolation : std::domain_error {
    using std::domain_error::domain_error;
};

// alpha requested for a hypersurface without the induced spin structure.
struct NotSpinError : std::domain_error {
    using std::domain_error::domain_error;
};

// A closed-form shortcut was called outside the (n1, n2 mod 4) shape it covers.
struct WrongShapeError : std::domain_error {
    using std::domain_error::domain_error;
};

struct SpinData {
    bool is_spin = false;
    // valid only when is_spin: d1 = 2 k1 + n1 + 1 - sigma1, d2 = 2 k2 + n2 + 1
    long long k1 = 0;
    long long k2 = 0;
};

enum class KOGroup { Z, Z2, Trivial };

// An element of KO_n(pt), tagged with n mod 8. The group is determined by
// n mod 8 (Z for 0,4; Z2 for 1,2; trivial otherwise). `value` holds the
// integer for Z, the bit for Z2, and is unused for the trivial group.
struct KOClass {
    int n_mod_8 = 0;
    KOGroup group = KOGroup::Trivial;
    Int value = 0;

    bool is_zero() const { return group == KOGroup::Trivial || value.is_zero(); }
};

enum class PscVerdict { Exists, Obstructed, Inapplicable };

struct InvariantReport {
    TwistSpec spec;
    int dim_real = 0;
    SpinData spin;
    Int a_hat = 0;
    bool alpha_defined = false;  // alpha needs the induced spin structure
    KOClass alpha;
    PscVerdict psc = PscVerdict::Inapplicable;
    bool no_circle_action = false;
    bool simply_connected_assumed = true;
    bool dim_ge_5 = false;
};

// Spin iff d1 == n1+1-sigma1 and d2 == n2+1 mod 2; then k1, k2 are the
// half-shifts making the degrees land on the spin lattice.
SpinData spin_check(const TwistSpec& spec);

// The closed-form sum F_{n1,n2,I}(d1,d2): over subsets of nonzero twist
// positions, compositions l_j >= 1 with sum <= n1, and inner alternating
// m-sums; binomial tops may be half-integers, so the value is rational.
Rat f_closed(const TwistSpec& spec);

// A-hat genus: F(d1,d2) - F(-d1,-d2) when n1+n2 is odd (real dimension
// divisible by 4), else 0 by the dimension convention. Throws
// IntegralityViolation when the difference is fractional (possible only
// for non-spin inputs).
Int a_hat(const TwistSpec& spec);

// The alpha invariant of a spin twisted Milnor hypersurface, as an element
// of KO_{dim}(pt). Throws NotSpinError for non-spin inputs.
KOClass alpha(const TwistSpec& spec);

// Closed-form alpha bit for n1 = 1, n2 = 1 mod 4:
//   (k1+1) binom(n2+k2, n2) + sigma1 binom(n2+k2, n2+1)   mod 2.
int alpha_closed_n1_1(const TwistSpec& spec);

// Closed-form alpha bit for n1 = 2, n2 = 0 mod 4 (quadratic twist data).
int alpha_closed_n1_2(const TwistSpec& spec);

// Stolz: a simply connected closed spin manifold of dim >= 5 admits positive
// scalar curvature iff alpha vanishes. Inapplicable when not spin or dim < 5.
PscVerdict psc_verdict(const TwistSpec& spec);

// Dyadic-digit classifiers deciding "no PSC metric" directly from residues
// of k1, k2, sigma1, sigma2 and digit-disjointness tests; restricted to the
// shapes of the two closed forms above. True means PSC is obstructed.
bool psc_dyadic_n1_1(const TwistSpec& spec);
bool psc_dyadic_n1_2(const TwistSpec& spec);

// Atiyah-Hirzebruch vanishing: a spin manifold with A-hat != 0 admits no
// nontrivial circle action.
bool circle_action_obstruction(const TwistSpec& spec);

InvariantReport report(const TwistSpec& spec);

}  // namespace tmh

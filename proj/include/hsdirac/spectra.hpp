#pragma once

#include "hsdirac/rational.hpp"
#include "hsdirac/weight.hpp"

#include <string>
#include <vector>

namespace hsdirac {

// K-type families of sections of E^{j,j} over S^n, as Spin(n+1) weights:
//   A: ((2l+1)/2, 3/2 x (j-1), 1/2, ...)
//   B: ((2l+1)/2, 3/2 x j,     1/2, ...)
// with the last entry signed for odd n. The Dirac K-types are B with j = 0.
enum class KTypeFamily { A, B };

struct KTypeLabel {
    KTypeFamily family = KTypeFamily::B;
    int j = 0;
    long l = 0;
    int sign = 0;  // ±1 for odd n; 0 for even n (the K-type carries both signs)
    Weight weight;
};

enum class BranchTag { DiracLike, Reduced };

struct SpectrumEntry {
    Rational eigenvalue;
    BigInt multiplicity;  // per eigenvalue (one sign)
    KTypeLabel ktype;
    BranchTag tag = BranchTag::DiracLike;
};

/// Which K-type family each eigenvalue branch sits on. `Validated` is the
/// pairing confirmed by Weyl dimensions (|μ| = n/2 + l on B); `Swapped` is the
/// reverse and exists only as a negative control.
enum class Pairing { Validated, Swapped };

const char* to_string(KTypeFamily f);
const char* to_string(BranchTag t);
const char* to_string(Pairing p);

/// Spin(n+1) weight of a K-type. Throws OutOfRange for invalid (j, l).
Weight ktype_weight(int n, KTypeFamily family, int j, long l, int sign);

/// Z(α) = prod_{a=1}^{[(n+1)/2]} ((n+1)/2 - a + α_a): each Gamma pair
/// Γ(x+1)/Γ(x) of the eigenvalue-ratio formula telescoped to x. Eigenvalue
/// ratios between K-types of one operator equal Z(α)/Z(α').
/// Throws PoleArgument if some x is a nonpositive integer.
Rational z_function(int n, const Weight& alpha);

/// Ratio of the two Gamma products for α and α'.
Rational z_ratio(int n, const Weight& alpha, const Weight& alpha_prime);

/// Dirac operator on S^n: ±(n/2 + l), multiplicity 2^[n/2] C(l+n-1, l), l = 0..l_max.
std::vector<SpectrumEntry> dirac_spectrum(int n, long l_max);

/// Multiplicity formulas of the higher spin spectrum as exact rationals, valid
/// for any j >= 0 and l >= 1. At j = 0 the reduced formula has the factor j
/// in its numerator and is reported as 0 even where its denominator vanishes.
Rational dirac_like_multiplicity(int n, int j, long l);
Rational reduced_multiplicity(int n, int j, long l);

/// |μ| of the two branches.
Rational dirac_like_eigenvalue(int n, long l);
Rational reduced_eigenvalue(int n, int j, long l);

/// Higher spin Dirac operator D_{λ_j} on S^n, 0 < j < n/2, l = 1..l_max.
/// Sorted by (|μ|, + before -).
std::vector<SpectrumEntry> higher_spin_spectrum(int n, int j, long l_max, Pairing pairing = Pairing::Validated);

/// Spectrum for any 0 <= j < n/2 (j = 0 is the Dirac operator).
std::vector<SpectrumEntry> spectrum(int n, int j, long l_max, Pairing pairing = Pairing::Validated);

/// Factor carrying a D̃_j eigenvalue on the shared K-type (B at level j = A at
/// level j+1) to the D̃_{j+1} eigenvalue: -(n-2j-2)/(n-2j). At j = 0 this is
/// the twistor factor -(n-2)/n. Requires 0 <= j < n/2 - 1.
Rational transfer_factor(int n, int j);

/// Z(α_j(+,l)) divided by (n/2+l) 2^{-(n-1)/2} n!! (n/2-j)^{-1}, for odd n and
/// 1 <= j < n/2 (A-type K-weight). Diagnostic only: independent of l.
Rational normalization_constant_diagnostic(int n, int j, long l);

struct ConsistencyFailure {
    std::string where;
    std::string expected;
    std::string got;
};

struct ConsistencyReport {
    int n = 0;
    long cases_checked = 0;
    std::vector<ConsistencyFailure> failures;
    Pairing pairing = Pairing::Validated;

    [[nodiscard]] bool passed() const { return failures.empty(); }
};

/// Cross-checks the closed-form spectra for j = 0..j_max (clamped to j < n/2)
/// and l up to l_max against Weyl dimensions, Z-function ratios, the branch
/// ratio and the transfer factor. Levels are checked concurrently; the
/// failure list order does not depend on scheduling.
ConsistencyReport verify_consistency(int n, int j_max, long l_max, Pairing pairing = Pairing::Validated);

/// Single-threaded reference for verify_consistency.
ConsistencyReport verify_consistency_serial(int n, int j_max, long l_max, Pairing pairing = Pairing::Validated);

}  // namespace hsdirac

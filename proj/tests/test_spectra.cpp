#include "doctest.h"

#include "hsdirac/errors.hpp"
#include "hsdirac/rep_theory.hpp"
#include "hsdirac/spectra.hpp"

#include <map>

using namespace hsdirac;

namespace {

// Γ(x) for x in ½Z_{>0}, as c·√π^p with p ∈ {0,1}. Test-only, exact.
struct GammaValue {
    Rational c;
    int sqrt_pi = 0;
};

GammaValue gamma_half(const HalfInt& x) {
    REQUIRE((x.sign() > 0 || !x.is_integer()));
    if (x.sign() < 0) {
        auto g = gamma_half(x + HalfInt::from_int(1));
        g.c /= x.to_rational();
        return g;
    }
    if (x.is_integer()) {
        Rational f(1);
        for (long m = 1; m < x.doubled().get_si() / 2; ++m) f *= Rational(m);
        return {f, 0};
    }
    // Γ(m + 1/2) = (2m)! / (4^m m!) √π
    const long m = (x.doubled().get_si() - 1) / 2;
    Rational f(1);
    for (long t = 0; t < m; ++t) f *= Rational(2 * t + 1, 2);
    return {f, 1};
}

// Eigenvalue ratio μ(α)/μ(α') read directly off the Gamma-product formula.
Rational gamma_ratio(int n, const Weight& alpha, const Weight& alpha_p) {
    Rational r(1);
    int pi_balance = 0;
    const HalfInt top = HalfInt::from_doubled(n + 3);
    const HalfInt bot = HalfInt::from_doubled(n + 1);
    for (int a = 1; a <= (n + 1) / 2; ++a) {
        const HalfInt sa = HalfInt::from_int(a);
        const auto g1 = gamma_half(top - sa + alpha[a - 1]);
        const auto g2 = gamma_half(bot - sa + alpha_p[a - 1]);
        const auto g3 = gamma_half(bot - sa + alpha[a - 1]);
        const auto g4 = gamma_half(top - sa + alpha_p[a - 1]);
        r *= g1.c * g2.c / (g3.c * g4.c);
        pi_balance += g1.sqrt_pi + g2.sqrt_pi - g3.sqrt_pi - g4.sqrt_pi;
    }
    REQUIRE(pi_balance == 0);
    return r;
}

// Integer-only evaluation of the two multiplicity closed forms.
BigInt mult_dirac_like(int n, int j, long l) {
    const BigInt num = pow2(n / 2) * binomial(n + 1, j + 1) * binomial(l + n, l - 1) * BigInt(n - 2 * j) * (j + 1);
    const BigInt den = BigInt(l + j) * (l + n - j);
    REQUIRE(num % den == 0);
    return num / den;
}

BigInt mult_reduced(int n, int j, long l) {
    const BigInt num = pow2(n / 2) * binomial(n + 1, j) * binomial(l + n, l - 1) * BigInt(n - 2 * j + 2) * j;
    const BigInt den = BigInt(l + j - 1) * (l + n - j + 1);
    REQUIRE(num % den == 0);
    return num / den;
}

const SpectrumEntry& entry(const std::vector<SpectrumEntry>& s, long l, BranchTag t, int sign) {
    for (const auto& e : s)
        if (e.ktype.l == l && e.tag == t && e.eigenvalue.sign() == sign) return e;
    FAIL("entry not found");
    return s.front();
}

}  // namespace

TEST_CASE("z_function examples") {
    CHECK(z_function(4, Weight::parse(GroupId(5), "3/2,3/2")) == Rational(6));
    CHECK(z_function(4, Weight::parse(GroupId(5), "3/2,1/2")) == Rational(3));
    for (long l = 0; l <= 6; ++l) {
        const Weight a = ktype_weight(3, KTypeFamily::B, 0, l, 1);
        CHECK(z_function(3, a) == Rational(2 * l + 3, 2) * Rational(1, 2));
    }
    // (3/2,-1/2) over Spin(4): (5/2)(-1/2)
    CHECK(z_function(3, Weight::parse(GroupId(4), "3/2,-1/2")) == Rational(-5, 4));
}

TEST_CASE("z_function rejects poles and non-dominant weights") {
    CHECK_THROWS_AS(z_function(3, Weight::parse(GroupId(4), "1/2,-3/2")), NotDominant);
    // Spin(4) weight (0,0) at n=3: last factor (n+1)/2 - 2 + 0 = 0
    CHECK_THROWS_AS(z_function(3, Weight::parse(GroupId(4), "0,0")), PoleArgument);
}

TEST_CASE("Z ratios match the Gamma-product formula") {
    for (int n = 3; n <= 9; ++n)
        for (int j = 0; 2 * j < n; ++j)
            for (long l = 1; l <= 5; ++l)
                for (long l2 = 1; l2 <= 5; ++l2) {
                    const int s = n % 2 ? 1 : 0;
                    const Weight a = ktype_weight(n, KTypeFamily::B, j, l, s);
                    const Weight b = j > 0 ? ktype_weight(n, KTypeFamily::A, j, l2, s)
                                           : ktype_weight(n, KTypeFamily::B, 0, l2, n % 2 ? -1 : 0);
                    CHECK(z_ratio(n, a, b) == gamma_ratio(n, a, b));
                }
}

TEST_CASE("ktype weights") {
    CHECK(ktype_weight(4, KTypeFamily::B, 1, 1, 0).to_string() == "3/2,3/2");
    CHECK(ktype_weight(4, KTypeFamily::A, 1, 1, 0).to_string() == "3/2,1/2");
    CHECK(ktype_weight(5, KTypeFamily::B, 2, 3, 1).to_string() == "7/2,3/2,3/2");
    CHECK(ktype_weight(5, KTypeFamily::B, 2, 3, -1).to_string() == "7/2,3/2,-3/2");
    CHECK(ktype_weight(7, KTypeFamily::A, 2, 1, -1).to_string() == "3/2,3/2,1/2,-1/2");
    CHECK_THROWS_AS(ktype_weight(4, KTypeFamily::A, 0, 1, 0), OutOfRange);
    CHECK_THROWS_AS(ktype_weight(3, KTypeFamily::B, 1, 1, 0), OutOfRange);
}

TEST_CASE("Dirac spectrum examples") {
    const auto s3 = dirac_spectrum(3, 1);
    REQUIRE(s3.size() == 4);
    CHECK(s3[0].eigenvalue == Rational(3, 2));
    CHECK(s3[0].multiplicity == 2);
    CHECK(s3[1].eigenvalue == Rational(-3, 2));
    CHECK(s3[1].multiplicity == 2);
    CHECK(s3[2].eigenvalue == Rational(5, 2));
    CHECK(s3[2].multiplicity == 6);

    const auto s4 = dirac_spectrum(4, 1);
    CHECK(s4[2].eigenvalue == Rational(3));
    CHECK(s4[2].multiplicity == 16);
    CHECK(s4[3].eigenvalue == Rational(-3));
}

TEST_CASE("higher spin spectrum examples") {
    const auto s = higher_spin_spectrum(4, 1, 1);
    REQUIRE(s.size() == 4);
    CHECK(entry(s, 1, BranchTag::DiracLike, 1).eigenvalue == Rational(3));
    CHECK(entry(s, 1, BranchTag::DiracLike, 1).multiplicity == 20);
    CHECK(entry(s, 1, BranchTag::Reduced, 1).eigenvalue == Rational(3, 2));
    CHECK(entry(s, 1, BranchTag::Reduced, 1).multiplicity == 16);
    CHECK(weyl_dim(entry(s, 1, BranchTag::DiracLike, 1).ktype.weight) == 20);
    CHECK(weyl_dim(entry(s, 1, BranchTag::Reduced, -1).ktype.weight) == 16);
    // sorted by |μ|, + before -
    CHECK(s[0].eigenvalue == Rational(3, 2));
    CHECK(s[1].eigenvalue == Rational(-3, 2));

    const auto t = higher_spin_spectrum(3, 1, 1);
    CHECK(entry(t, 1, BranchTag::DiracLike, -1).eigenvalue == Rational(-5, 2));
    CHECK(entry(t, 1, BranchTag::DiracLike, -1).multiplicity == 4);
    CHECK(entry(t, 1, BranchTag::Reduced, 1).eigenvalue == Rational(5, 6));
    CHECK(entry(t, 1, BranchTag::Reduced, 1).multiplicity == 6);
    // odd n: +μ sits on the +1/2 K-type
    CHECK(entry(t, 1, BranchTag::Reduced, 1).ktype.weight.to_string() == "3/2,1/2");
    CHECK(entry(t, 1, BranchTag::Reduced, -1).ktype.weight.to_string() == "3/2,-1/2");
}

TEST_CASE("higher spin spectrum argument checks") {
    CHECK_THROWS_AS(higher_spin_spectrum(4, 0, 3), OutOfRange);
    CHECK_THROWS_AS(higher_spin_spectrum(4, 2, 3), OutOfRange);
    CHECK_THROWS_AS(higher_spin_spectrum(5, 1, 0), OutOfRange);
    CHECK_THROWS_AS(spectrum(5, 3, 2), OutOfRange);
    CHECK(spectrum(5, 0, 2).size() == dirac_spectrum(5, 2).size());
}

TEST_CASE("multiplicities agree with integer evaluation of the closed forms") {
    for (int n = 3; n <= 11; ++n)
        for (int j = 1; 2 * j < n; ++j) {
            const auto s = higher_spin_spectrum(n, j, 12);
            for (long l = 1; l <= 12; ++l) {
                CHECK(entry(s, l, BranchTag::DiracLike, 1).multiplicity == mult_dirac_like(n, j, l));
                CHECK(entry(s, l, BranchTag::Reduced, 1).multiplicity == mult_reduced(n, j, l));
            }
        }
}

TEST_CASE("j = 0 degenerates to the Dirac operator") {
    for (int n = 3; n <= 9; ++n)
        for (long l = 1; l <= 12; ++l) {
            CHECK(reduced_multiplicity(n, 0, l) == Rational(0));
            CHECK(dirac_like_multiplicity(n, 0, l) == Rational(pow2(n / 2) * binomial(l + n - 1, l)));
        }
}

TEST_CASE("spectrum properties: symmetry, positivity, linear growth") {
    for (int n = 2; n <= 10; ++n)
        for (int j = 0; 2 * j < n; ++j) {
            const long l_max = 10;
            const auto s = spectrum(n, j, l_max);
            std::map<Rational, BigInt> by_value;
            for (const auto& e : s) {
                CHECK(e.multiplicity > 0);
                by_value[e.eigenvalue] += e.multiplicity;
            }
            for (const auto& [mu, m] : by_value) {
                const auto it = by_value.find(-mu);
                REQUIRE(it != by_value.end());
                CHECK(it->second == m);
            }
            const long l0 = j == 0 ? 0 : 1;
            for (long l = l0 + 1; l <= l_max; ++l) {
                const auto d1 = entry(s, l, BranchTag::DiracLike, 1).eigenvalue -
                                entry(s, l - 1, BranchTag::DiracLike, 1).eigenvalue;
                CHECK(d1 == Rational(1));
                if (j > 0) {
                    const auto d2 = entry(s, l, BranchTag::Reduced, 1).eigenvalue -
                                    entry(s, l - 1, BranchTag::Reduced, 1).eigenvalue;
                    CHECK(d2 == Rational(n - 2 * j, n - 2 * j + 2));
                }
            }
        }
}

TEST_CASE("Z ratios are transitive across K-types of one operator") {
    for (int n = 3; n <= 8; ++n)
        for (int j = 1; 2 * j < n; ++j) {
            const auto s = higher_spin_spectrum(n, j, 4);
            for (const auto& a : s)
                for (const auto& b : s)
                    for (const auto& c : s) {
                        if (a.eigenvalue.sign() != b.eigenvalue.sign() || b.eigenvalue.sign() != c.eigenvalue.sign())
                            continue;
                        const Rational ab = z_ratio(n, a.ktype.weight, b.ktype.weight);
                        const Rational bc = z_ratio(n, b.ktype.weight, c.ktype.weight);
                        CHECK(ab * bc == z_ratio(n, a.ktype.weight, c.ktype.weight));
                        CHECK(ab == a.eigenvalue / b.eigenvalue);
                    }
        }
}

TEST_CASE("transfer factor") {
    for (int n = 3; n <= 12; ++n) CHECK(transfer_factor(n, 0) == -Rational(n - 2, n));
    CHECK(transfer_factor(6, 1) == Rational(-1, 2));
    CHECK(transfer_factor(4, 0) == Rational(-1, 2));
    CHECK_THROWS_AS(transfer_factor(4, 1), OutOfRange);
    CHECK_THROWS_AS(transfer_factor(5, -1), OutOfRange);
    // the reduced eigenvalue on the shared K-type at level j+1
    for (int n = 5; n <= 11; ++n)
        for (int j = 0; 2 * j < n - 2; ++j)
            for (long l = 1; l <= 6; ++l)
                CHECK(dirac_like_eigenvalue(n, l) * transfer_factor(n, j).abs() == reduced_eigenvalue(n, j + 1, l));
}

TEST_CASE("normalization diagnostic is a constant in l") {
    CHECK(normalization_constant_diagnostic(3, 0, 1) == Rational(1, 2));
    for (int n = 3; n <= 9; n += 2)
        for (int j = 0; 2 * j < n; ++j) {
            const Rational c = normalization_constant_diagnostic(n, j, 1);
            for (long l = 2; l <= 8; ++l) CHECK(normalization_constant_diagnostic(n, j, l) == c);
        }
    CHECK_THROWS_AS(normalization_constant_diagnostic(4, 1, 1), OutOfRange);
}

TEST_CASE("consistency reports") {
    for (int n = 2; n <= 9; ++n) {
        const auto rep = verify_consistency(n, n, 10);
        CHECK(rep.passed());
        CHECK(rep.cases_checked > 0);
        for (const auto& f : rep.failures) MESSAGE(f.where << " expected " << f.expected << " got " << f.got);
    }
}

TEST_CASE("parallel and serial verification produce identical reports") {
    for (int n : {3, 4, 7}) {
        for (Pairing p : {Pairing::Validated, Pairing::Swapped}) {
            const auto a = verify_consistency(n, n, 8, p);
            const auto b = verify_consistency_serial(n, n, 8, p);
            CHECK(a.cases_checked == b.cases_checked);
            REQUIRE(a.failures.size() == b.failures.size());
            for (std::size_t i = 0; i < a.failures.size(); ++i) CHECK(a.failures[i].where == b.failures[i].where);
        }
    }
}

TEST_CASE("swapped pairing fails at every (j, l) with j > 0") {
    for (int n = 3; n <= 9; ++n) {
        const long l_max = 8;
        const auto rep = verify_consistency(n, n, l_max, Pairing::Swapped);
        CHECK_FALSE(rep.passed());
        for (int j = 1; 2 * j < n; ++j)
            for (long l = 1; l <= l_max; ++l) {
                const std::string key = "n=" + std::to_string(n) + " j=" + std::to_string(j) + " l=" + std::to_string(l) + " ";
                bool hit = false;
                for (const auto& f : rep.failures) hit = hit || (f.where + " ").find(key) != std::string::npos;
                CHECK_MESSAGE(hit, key);
            }
    }
    // n=6, j=2, l=1: both K-types have dimension 112, so only the Z ratios catch it
    const auto rep = verify_consistency(6, 2, 1, Pairing::Swapped);
    bool z_hit = false;
    for (const auto& f : rep.failures) {
        if (f.where.find("n=6 j=2 l=1 ") == std::string::npos) continue;
        CHECK(f.where.rfind("multiplicity", 0) != 0);
        z_hit = z_hit || f.where.rfind("Z ratio", 0) == 0;
    }
    CHECK(z_hit);
}

#include "hsdirac/spectra.hpp"

#include "hsdirac/errors.hpp"
#include "hsdirac/rep_theory.hpp"

#include <algorithm>
#include <functional>

namespace hsdirac {

const char* to_string(KTypeFamily f) { return f == KTypeFamily::A ? "A" : "B"; }
const char* to_string(BranchTag t) { return t == BranchTag::DiracLike ? "dirac-like" : "reduced"; }
const char* to_string(Pairing p) {
    return p == Pairing::Validated ? "|mu|=n/2+l on B-type, reduced on A-type"
                                   : "swapped: |mu|=n/2+l on A-type, reduced on B-type";
}

namespace {

void require_valid_j(int n, int j, bool allow_zero) {
    if (j < (allow_zero ? 0 : 1) || 2 * j >= n) {
        throw OutOfRange("ladder index j=" + std::to_string(j) + " must satisfy " + (allow_zero ? "0" : "0 <") +
                         " " + (allow_zero ? "<= " : "") + "j < n/2 for n=" + std::to_string(n));
    }
}

Rational sphere_shift(int n, long l) { return Rational(n + 2 * l, 2); }

// (|μ| ascending, + before -)
void sort_spectrum(std::vector<SpectrumEntry>& s) {
    std::stable_sort(s.begin(), s.end(), [](const SpectrumEntry& a, const SpectrumEntry& b) {
        const auto aa = a.eigenvalue.abs();
        const auto ab = b.eigenvalue.abs();
        if (aa != ab) return aa < ab;
        return a.eigenvalue.sign() > b.eigenvalue.sign();
    });
}

BigInt require_integer(const Rational& r, const std::string& what) {
    if (!r.is_integer() || r.sign() <= 0) {
        throw NonIntegerMultiplicity(what + " evaluated to " + r.to_string());
    }
    return r.numerator();
}

void push_pair(std::vector<SpectrumEntry>& out, int n, const Rational& magnitude, const BigInt& mult,
               KTypeFamily family, int j, long l, BranchTag tag) {
    for (int s : {1, -1}) {
        const int label_sign = n % 2 ? s : 0;
        out.push_back({s > 0 ? magnitude : -magnitude, mult,
                       KTypeLabel{family, j, l, label_sign, ktype_weight(n, family, j, l, label_sign)}, tag});
    }
}

}  // namespace

Weight ktype_weight(int n, KTypeFamily family, int j, long l, int sign) {
    const GroupId k_group(n + 1);
    const int rank = k_group.rank();
    const int threes = family == KTypeFamily::A ? j - 1 : j;
    if (threes < 0 || 1 + threes > rank) {
        throw OutOfRange(std::string("no ") + to_string(family) + "-type K-weight for n=" + std::to_string(n) +
                         ", j=" + std::to_string(j));
    }
    if (l < 0 || (threes > 0 && l < 1)) throw OutOfRange("K-type level l=" + std::to_string(l) + " out of range");
    std::vector<HalfInt> e(rank, HalfInt::from_doubled(1));
    e[0] = HalfInt::from_doubled(BigInt(2 * l + 1));
    for (int i = 1; i <= threes; ++i) e[i] = HalfInt::from_doubled(3);
    if (n % 2 == 1) {
        if (sign != 1 && sign != -1) throw OutOfRange("odd n needs a K-type sign of ±1");
        if (sign < 0) e.back() = -e.back();
    }
    return {k_group, std::move(e)};
}

Rational z_function(int n, const Weight& alpha) {
    if (alpha.group().n() != n + 1) {
        throw OutOfRange("z_function: weight belongs to " + alpha.group().name() + ", expected Spin(" +
                         std::to_string(n + 1) + ")");
    }
    require_dominant(alpha, "z_function");
    Rational z = 1;
    for (std::size_t a = 1; a <= alpha.size(); ++a) {
        const Rational x = Rational(n + 1, 2) - Rational(static_cast<long>(a)) + alpha[a - 1].to_rational();
        if (x.is_integer() && x.sign() <= 0) {
            throw PoleArgument("z_function: Gamma argument " + x.to_string() + " at a=" + std::to_string(a) +
                               " for (" + alpha.to_string() + ")");
        }
        z *= x;
    }
    return z;
}

Rational z_ratio(int n, const Weight& alpha, const Weight& alpha_prime) {
    return z_function(n, alpha) / z_function(n, alpha_prime);
}

std::vector<SpectrumEntry> dirac_spectrum(int n, long l_max) {
    if (n < 2) throw OutOfRange("dirac_spectrum: n must be >= 2");
    if (l_max < 0) throw OutOfRange("dirac_spectrum: l_max must be >= 0");
    const BigInt s = spinor_dim(GroupId(n));
    std::vector<SpectrumEntry> out;
    for (long l = 0; l <= l_max; ++l) {
        push_pair(out, n, sphere_shift(n, l), s * binomial(l + n - 1, l), KTypeFamily::B, 0, l,
                  BranchTag::DiracLike);
    }
    sort_spectrum(out);
    return out;
}

Rational dirac_like_eigenvalue(int n, long l) { return sphere_shift(n, l); }

Rational reduced_eigenvalue(int n, int j, long l) { return Rational(n - 2 * j, n - 2 * j + 2) * sphere_shift(n, l); }

Rational dirac_like_multiplicity(int n, int j, long l) {
    const Rational num =
        Rational(spinor_dim(GroupId(n)) * binomial(n + 1, j + 1) * binomial(l + n, l - 1) * (n - 2 * j) * (j + 1));
    const Rational den = Rational((l + j) * (l + n - j));
    if (num.is_zero()) return 0;
    if (den.is_zero()) throw PoleArgument("dirac_like_multiplicity: vanishing denominator");
    return num / den;
}

Rational reduced_multiplicity(int n, int j, long l) {
    const Rational num =
        Rational(spinor_dim(GroupId(n)) * binomial(n + 1, j) * binomial(l + n, l - 1) * (n - 2 * j + 2) * j);
    const Rational den = Rational((l + j - 1) * (l + n - j + 1));
    if (num.is_zero()) return 0;
    if (den.is_zero()) throw PoleArgument("reduced_multiplicity: vanishing denominator");
    return num / den;
}

std::vector<SpectrumEntry> higher_spin_spectrum(int n, int j, long l_max, Pairing pairing) {
    require_valid_j(n, j, false);
    if (l_max < 1) throw OutOfRange("higher_spin_spectrum: l_max must be >= 1");
    const KTypeFamily dirac_like_family = pairing == Pairing::Validated ? KTypeFamily::B : KTypeFamily::A;
    const KTypeFamily reduced_family = pairing == Pairing::Validated ? KTypeFamily::A : KTypeFamily::B;
    std::vector<SpectrumEntry> out;
    for (long l = 1; l <= l_max; ++l) {
        const std::string where = " (n=" + std::to_string(n) + ", j=" + std::to_string(j) + ", l=" +
                                  std::to_string(l) + ")";
        push_pair(out, n, dirac_like_eigenvalue(n, l),
                  require_integer(dirac_like_multiplicity(n, j, l), "dirac-like multiplicity" + where),
                  dirac_like_family, j, l, BranchTag::DiracLike);
        push_pair(out, n, reduced_eigenvalue(n, j, l),
                  require_integer(reduced_multiplicity(n, j, l), "reduced multiplicity" + where), reduced_family, j,
                  l, BranchTag::Reduced);
    }
    sort_spectrum(out);
    return out;
}

std::vector<SpectrumEntry> spectrum(int n, int j, long l_max, Pairing pairing) {
    require_valid_j(n, j, true);
    return j == 0 ? dirac_spectrum(n, l_max) : higher_spin_spectrum(n, j, l_max, pairing);
}

Rational transfer_factor(int n, int j) {
    if (j < 0 || 2 * j >= n - 2) {
        throw OutOfRange("transfer_factor: need 0 <= j < n/2 - 1, got n=" + std::to_string(n) +
                         ", j=" + std::to_string(j));
    }
    return -Rational(n - 2 * j - 2, n - 2 * j);
}

Rational normalization_constant_diagnostic(int n, int j, long l) {
    if (n % 2 == 0) throw OutOfRange("normalization_constant_diagnostic: defined for odd n only");
    require_valid_j(n, j, true);
    const Weight alpha = j == 0 ? ktype_weight(n, KTypeFamily::B, 0, l, 1) : ktype_weight(n, KTypeFamily::A, j, l, 1);
    const Rational closed = sphere_shift(n, l) * Rational(BigInt(double_factorial(n)), pow2((n - 1) / 2)) *
                            Rational(2, n - 2 * j);
    return z_function(n, alpha) / closed;
}

// ---------------------------------------------------------------------------

namespace {

struct TaskResult {
    long cases = 0;
    std::vector<ConsistencyFailure> failures;

    void expect(bool ok, std::string where, std::string expected, std::string got) {
        ++cases;
        if (!ok) failures.push_back({std::move(where), std::move(expected), std::move(got)});
    }
};

using Task = std::function<void(TaskResult&)>;

std::string tag(int n, int j, long l) {
    return "n=" + std::to_string(n) + " j=" + std::to_string(j) + " l=" + std::to_string(l);
}

std::string entry_tag(int n, const SpectrumEntry& e) {
    return tag(n, e.ktype.j, e.ktype.l) + " mu=" + e.eigenvalue.to_string() + " K=(" + e.ktype.weight.to_string() +
           ")";
}

const SpectrumEntry* find_entry(const std::vector<SpectrumEntry>& s, long l, BranchTag t, int sign) {
    for (const auto& e : s)
        if (e.ktype.l == l && e.tag == t && e.eigenvalue.sign() == sign) return &e;
    return nullptr;
}

std::vector<Task> build_tasks(int n, int j_max, long l_max, Pairing pairing,
                              std::vector<std::vector<SpectrumEntry>>& spectra) {
    std::vector<Task> tasks;
    const int j_top = std::min(j_max, (n - 1) / 2);
    for (int j = 0; j <= j_top; ++j) spectra.push_back(spectrum(n, j, j == 0 ? l_max : std::max(1L, l_max), pairing));

    for (int j = 0; j <= j_top; ++j) {
        const auto& s = spectra[static_cast<std::size_t>(j)];
        for (std::size_t i = 0; i < s.size(); ++i) {
            // (a) multiplicity against the Weyl dimension of the paired K-type,
            // (b) Z ratios against eigenvalue ratios for same-sign pairs.
            tasks.push_back([&s, i, n](TaskResult& r) {
                const auto& e = s[i];
                const BigInt d = weyl_dim(e.ktype.weight);
                r.expect(d == e.multiplicity, "multiplicity " + entry_tag(n, e), d.get_str(), e.multiplicity.get_str());
                for (std::size_t i2 = i + 1; i2 < s.size(); ++i2) {
                    const auto& f = s[i2];
                    if (f.eigenvalue.sign() != e.eigenvalue.sign()) continue;
                    const Rational want = e.eigenvalue / f.eigenvalue;
                    const Rational got = z_ratio(n, e.ktype.weight, f.ktype.weight);
                    r.expect(want == got, "Z ratio " + entry_tag(n, e) + " vs " + entry_tag(n, f), want.to_string(),
                             got.to_string());
                }
            });
        }
        // (c) both signs together fill the isotypic components, (d) branch ratio.
        tasks.push_back([&s, n, j, l_max](TaskResult& r) {
            for (long l = (j == 0 ? 0 : 1); l <= l_max; ++l) {
                for (BranchTag t : {BranchTag::DiracLike, BranchTag::Reduced}) {
                    if (j == 0 && t == BranchTag::Reduced) continue;
                    const auto* plus = find_entry(s, l, t, 1);
                    const auto* minus = find_entry(s, l, t, -1);
                    if (!plus || !minus) {
                        r.expect(false, "missing entries " + tag(n, j, l), "both signs", "absent");
                        continue;
                    }
                    const BigInt total = plus->multiplicity + minus->multiplicity;
                    BigInt iso = 0;
                    if (n % 2) {
                        iso = weyl_dim(ktype_weight(n, plus->ktype.family, j, l, 1)) +
                              weyl_dim(ktype_weight(n, plus->ktype.family, j, l, -1));
                    } else {
                        iso = 2 * weyl_dim(ktype_weight(n, plus->ktype.family, j, l, 0));
                    }
                    r.expect(total == iso, std::string("isotypic total ") + to_string(t) + " " + tag(n, j, l),
                             iso.get_str(), total.get_str());
                }
                if (j > 0) {
                    const auto* m1 = find_entry(s, l, BranchTag::DiracLike, 1);
                    const auto* m2 = find_entry(s, l, BranchTag::Reduced, 1);
                    if (m1 && m2) {
                        const Rational want(n - 2 * j, n - 2 * j + 2);
                        const Rational got = m2->eigenvalue / m1->eigenvalue;
                        r.expect(want == got, "branch ratio " + tag(n, j, l), want.to_string(), got.to_string());
                    }
                }
            }
        });
    }

    // (e) transfer along the ladder on the shared K-type.
    tasks.push_back([&spectra, n, j_top, l_max](TaskResult& r) {
        if (n < 3) return;
        const Rational want = -Rational(n - 2, n);
        const Rational got = transfer_factor(n, 0);
        r.expect(want == got, "transfer factor n=" + std::to_string(n) + " j=0", want.to_string(), got.to_string());
        for (int j = 0; j + 1 <= j_top; ++j) {
            const Rational f = transfer_factor(n, j);
            const auto& lower = spectra[static_cast<std::size_t>(j)];
            const auto& upper = spectra[static_cast<std::size_t>(j + 1)];
            for (long l = 1; l <= l_max; ++l) {
                const Weight shared = ktype_weight(n, KTypeFamily::B, j, l, n % 2 ? 1 : 0);
                const SpectrumEntry* from = nullptr;
                const SpectrumEntry* to = nullptr;
                for (const auto& e : lower)
                    if (e.ktype.weight == shared && e.eigenvalue.sign() > 0) from = &e;
                for (const auto& e : upper)
                    if (e.ktype.weight == shared && e.eigenvalue.sign() > 0) to = &e;
                if (!from || !to) {
                    r.expect(false, "transfer " + tag(n, j, l), "shared K-type (" + shared.to_string() + ")",
                             "absent");
                    continue;
                }
                const Rational want_mu = f.abs() * from->eigenvalue;
                r.expect(want_mu == to->eigenvalue, "transfer " + tag(n, j, l), want_mu.to_string(),
                         to->eigenvalue.to_string());
            }
        }
    });
    return tasks;
}

ConsistencyReport collect(int n, Pairing pairing, std::vector<TaskResult>& results) {
    ConsistencyReport rep;
    rep.n = n;
    rep.pairing = pairing;
    for (auto& r : results) {
        rep.cases_checked += r.cases;
        for (auto& f : r.failures) rep.failures.push_back(std::move(f));
    }
    return rep;
}

}  // namespace

ConsistencyReport verify_consistency(int n, int j_max, long l_max, Pairing pairing) {
    std::vector<std::vector<SpectrumEntry>> spectra;
    const auto tasks = build_tasks(n, j_max, l_max, pairing, spectra);
    std::vector<TaskResult> results(tasks.size());
    const auto count = static_cast<long>(tasks.size());
#pragma omp parallel for schedule(dynamic, 1)
    for (long t = 0; t < count; ++t) tasks[static_cast<std::size_t>(t)](results[static_cast<std::size_t>(t)]);
    return collect(n, pairing, results);
}

ConsistencyReport verify_consistency_serial(int n, int j_max, long l_max, Pairing pairing) {
    std::vector<std::vector<SpectrumEntry>> spectra;
    const auto tasks = build_tasks(n, j_max, l_max, pairing, spectra);
    std::vector<TaskResult> results(tasks.size());
    for (std::size_t t = 0; t < tasks.size(); ++t) tasks[t](results[t]);
    return collect(n, pairing, results);
}

}  // namespace hsdirac

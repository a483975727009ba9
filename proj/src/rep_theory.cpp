#include "hsdirac/rep_theory.hpp"

#include "hsdirac/errors.hpp"

#include <algorithm>
#include <functional>

namespace hsdirac {

namespace {

HalfInt half(long doubled) { return HalfInt::from_doubled(BigInt(doubled)); }

// Enumerates all vectors with entries in [lo_i, hi_i] (doubled coordinates,
// step 2), highest first.
void enumerate_box(const std::vector<BigInt>& lo, const std::vector<BigInt>& hi,
                   const std::function<void(const std::vector<BigInt>&)>& emit) {
    std::vector<BigInt> cur(lo.size());
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == lo.size()) {
            emit(cur);
            return;
        }
        for (BigInt x = hi[i]; x >= lo[i]; x -= 2) {
            cur[i] = x;
            rec(i + 1);
        }
    };
    rec(0);
}

Weight weight_from_doubled(const GroupId& g, const std::vector<BigInt>& d) {
    std::vector<HalfInt> e;
    e.reserve(d.size());
    for (const auto& x : d) e.push_back(HalfInt::from_doubled(x));
    return {g, std::move(e)};
}

}  // namespace

std::vector<HalfInt> rho(const GroupId& group) {
    const int k = group.rank();
    std::vector<HalfInt> r;
    r.reserve(k);
    for (int i = 0; i < k; ++i) {
        // B_k: k - i - 1/2, D_k: k - i - 1 (0-based i)
        r.push_back(group.is_odd() ? half(2 * (k - i) - 1) : half(2 * (k - i - 1)));
    }
    return r;
}

BigInt weyl_dim(const Weight& w) {
    require_dominant(w, "weyl_dim");
    const auto r = rho(w.group());
    const std::size_t k = r.size();
    std::vector<BigInt> v(k);
    std::vector<BigInt> rr(k);
    for (std::size_t i = 0; i < k; ++i) {
        v[i] = w[i].doubled() + r[i].doubled();
        rr[i] = r[i].doubled();
    }
    BigInt num = 1;
    BigInt den = 1;
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i + 1; j < k; ++j) {
            num *= (v[i] - v[j]) * (v[i] + v[j]);
            den *= (rr[i] - rr[j]) * (rr[i] + rr[j]);
        }
        if (w.group().is_odd()) {
            num *= v[i];
            den *= rr[i];
        }
    }
    if (num % den != 0) throw DimensionMismatch("weyl_dim: non-integral dimension for (" + w.to_string() + ")");
    return num / den;
}

Rational casimir_scalar(const Weight& w) {
    require_dominant(w, "casimir_scalar");
    const auto r = rho(w.group());
    Rational s = 0;
    for (std::size_t i = 0; i < r.size(); ++i) {
        const Rational l = w[i].to_rational();
        s += l * (l + 2 * r[i].to_rational());
    }
    return s;
}

bool interlaces(const Weight& alpha, const Weight& lam) {
    if (alpha.group().n() != lam.group().n() + 1) return false;
    if (alpha.is_integral() != lam.is_integral()) return false;
    const std::size_t k = lam.size();
    for (std::size_t i = 0; i < k; ++i) {
        if (lam[i] > alpha[i]) return false;
        if (i + 1 < k) {
            if (lam[i] < alpha[i + 1]) return false;
        } else if (lam.group().is_odd()) {
            // α_1 ≥ λ_1 ≥ ... ≥ α_k ≥ λ_k ≥ |α_{k+1}|
            if (lam[i] < alpha[i + 1].abs()) return false;
        } else {
            // α_1 ≥ λ_1 ≥ ... ≥ α_k ≥ |λ_k|
            if (lam[i].abs() > alpha[i]) return false;
        }
    }
    return true;
}

std::vector<Weight> branch_down(const Weight& alpha) {
    require_dominant(alpha, "branch_down");
    const GroupId sub(alpha.group().n() - 1);
    const std::size_t k = sub.rank();
    std::vector<BigInt> lo(k);
    std::vector<BigInt> hi(k);
    for (std::size_t i = 0; i < k; ++i) {
        hi[i] = alpha[i].doubled();
        if (i + 1 < k) {
            lo[i] = alpha[i + 1].doubled();
        } else if (sub.is_odd()) {
            lo[i] = alpha[i + 1].abs().doubled();
        } else {
            lo[i] = -alpha[i].doubled();
        }
    }
    std::vector<Weight> out;
    enumerate_box(lo, hi, [&](const std::vector<BigInt>& d) { out.push_back(weight_from_doubled(sub, d)); });
    return out;
}

std::vector<Weight> branch_up(const Weight& lam, const HalfInt& a1_max) {
    require_dominant(lam, "branch_up");
    const GroupId up(lam.group().n() + 1);
    const std::size_t k = up.rank();
    const std::size_t kl = lam.size();
    std::vector<BigInt> lo(k);
    std::vector<BigInt> hi(k);
    for (std::size_t i = 0; i < k; ++i) {
        if (i == 0) {
            hi[0] = a1_max.doubled();
            if (a1_max.is_integer() != lam.is_integral()) hi[0] -= 1;
        } else {
            hi[i] = lam[i - 1].doubled();
        }
        if (i < kl) {
            // the last α entry of B_k sits above |λ_k|
            lo[i] = (i + 1 == kl && lam.group().is_even()) ? lam[i].abs().doubled() : lam[i].doubled();
        } else {
            lo[i] = -lam[i - 1].doubled();  // α_{k+1} ∈ [-λ_k, λ_k]
        }
        if (hi[i] < lo[i]) return {};
    }
    std::vector<Weight> out;
    enumerate_box(lo, hi, [&](const std::vector<BigInt>& d) { out.push_back(weight_from_doubled(up, d)); });
    return out;
}

BigInt DecompositionReport::component_dim_sum() const {
    BigInt s = 0;
    for (const auto& c : components) s += c.dimension * c.multiplicity;
    return s;
}

namespace {

void check_report(DecompositionReport& rep, const char* what) {
    if (rep.component_dim_sum() != rep.left_dim * rep.right_dim) {
        throw DimensionMismatch(std::string(what) + ": component dimensions sum to " +
                                rep.component_dim_sum().get_str() + ", expected " +
                                BigInt(rep.left_dim * rep.right_dim).get_str());
    }
    rep.checked = true;
}

}  // namespace

DecompositionReport tensor_vector(const Weight& lam) {
    require_dominant(lam, "tensor_vector");
    const GroupId& g = lam.group();
    DecompositionReport rep;
    rep.left_dim = weyl_dim(lam);
    rep.right_dim = g.n();
    std::vector<Weight> comps;
    for (std::size_t i = 0; i < lam.size(); ++i) {
        for (long s : {2L, -2L}) {
            auto e = lam.entries();
            e[i] += half(s);
            Weight cand(g, std::move(e));
            if (cand.is_dominant()) comps.push_back(std::move(cand));
        }
    }
    if (g.is_odd() && lam.entries().back().sign() > 0) comps.push_back(lam);
    std::sort(comps.begin(), comps.end(), std::greater<>());
    for (auto& c : comps) {
        BigInt d = weyl_dim(c);
        rep.components.push_back({std::move(c), std::move(d), 1, false});
    }
    if (!rep.components.empty()) {
        // The Cartan component is λ + e_1.
        auto top = lam.entries();
        top[0] += half(2);
        for (auto& c : rep.components) c.cartan = c.weight.entries() == top;
    }
    check_report(rep, "tensor_vector");
    return rep;
}

std::vector<std::vector<HalfInt>> vector_rep_weights(const GroupId& group) {
    const int k = group.rank();
    std::vector<std::vector<HalfInt>> out;
    for (int i = 0; i < k; ++i) {
        for (long s : {2L, -2L}) {
            std::vector<HalfInt> w(k, half(0));
            w[i] = half(s);
            out.push_back(std::move(w));
        }
    }
    if (group.is_odd()) out.emplace_back(k, half(0));
    return out;
}

std::vector<std::vector<HalfInt>> spinor_rep_weights(const GroupId& group) {
    const int k = group.rank();
    std::vector<std::vector<HalfInt>> out;
    for (unsigned long mask = 0; mask < (1UL << k); ++mask) {
        std::vector<HalfInt> w(k);
        for (int i = 0; i < k; ++i) w[i] = half((mask >> i) & 1UL ? -1 : 1);
        out.push_back(std::move(w));
    }
    return out;
}

std::optional<std::pair<std::vector<HalfInt>, int>> reflect_to_dominant(const GroupId& group,
                                                                        std::vector<HalfInt> v) {
    const std::size_t k = v.size();
    if (group.is_even() && k == 1) return std::make_pair(std::move(v), 1);  // Spin(2): trivial Weyl group
    int sign = 1;
    int negatives = 0;
    for (auto& x : v) {
        if (x.sign() < 0) {
            x = -x;
            ++negatives;
        }
    }
    // insertion sort, descending, tracking the permutation sign
    for (std::size_t i = 1; i < k; ++i) {
        for (std::size_t j = i; j > 0 && v[j - 1] < v[j]; --j) {
            std::swap(v[j - 1], v[j]);
            sign = -sign;
        }
    }
    for (std::size_t i = 0; i + 1 < k; ++i)
        if (v[i] == v[i + 1]) return std::nullopt;
    if (group.is_odd()) {
        if (v.back().sign() == 0) return std::nullopt;
        if (negatives % 2) sign = -sign;
    } else if (negatives % 2 && v.back().sign() != 0) {
        // W(D_k) only flips signs in pairs; the leftover flip lands on the smallest entry.
        v.back() = -v.back();
    }
    return std::make_pair(std::move(v), sign);
}

std::map<Weight, long> klimyk_decompose(const Weight& lam, std::span<const std::vector<HalfInt>> weights_of_v) {
    const GroupId& g = lam.group();
    const auto r = rho(g);
    std::map<Weight, long> acc;
    for (const auto& mu : weights_of_v) {
        std::vector<HalfInt> v(lam.size());
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = lam[i] + mu[i] + r[i];
        auto reflected = reflect_to_dominant(g, std::move(v));
        if (!reflected) continue;
        auto& [dom, sign] = *reflected;
        for (std::size_t i = 0; i < dom.size(); ++i) dom[i] -= r[i];
        acc[Weight(g, std::move(dom))] += sign;
    }
    std::erase_if(acc, [](const auto& kv) { return kv.second == 0; });
    return acc;
}

std::vector<Weight> spinor_weights(const GroupId& group) {
    const int k = group.rank();
    std::vector<HalfInt> plus(k, half(1));
    if (group.is_odd()) return {Weight(group, plus)};
    auto minus = plus;
    minus.back() = half(-1);
    return {Weight(group, plus), Weight(group, minus)};
}

BigInt spinor_dim(const GroupId& group) { return pow2(static_cast<unsigned long>(group.rank())); }

DecompositionReport tensor_spinor(const Weight& lam_prime) {
    require_dominant(lam_prime, "tensor_spinor");
    const GroupId& g = lam_prime.group();
    DecompositionReport rep;
    rep.left_dim = spinor_dim(g);
    rep.right_dim = weyl_dim(lam_prime);
    const auto sw = spinor_rep_weights(g);
    const auto parts = klimyk_decompose(lam_prime, sw);

    std::vector<std::vector<HalfInt>> cartan;
    for (const auto& s : spinor_weights(g)) {
        auto e = lam_prime.entries();
        for (std::size_t i = 0; i < e.size(); ++i) e[i] += s[i];
        cartan.push_back(std::move(e));
    }
    for (auto it = parts.rbegin(); it != parts.rend(); ++it) {
        if (it->second < 0) {
            throw DimensionMismatch("tensor_spinor: negative multiplicity for (" + it->first.to_string() + ")");
        }
        const bool is_cartan = std::find(cartan.begin(), cartan.end(), it->first.entries()) != cartan.end();
        rep.components.push_back({it->first, weyl_dim(it->first), it->second, is_cartan});
    }
    check_report(rep, "tensor_spinor");
    return rep;
}

Weight ladder_weight(const GroupId& group, int j, bool negative_last) {
    const int k = group.rank();
    if (j < 0 || j > k) throw OutOfRange("ladder index j=" + std::to_string(j) + " out of range for " + group.name());
    std::vector<HalfInt> e(k, half(1));
    for (int i = 0; i < j; ++i) e[i] = half(3);
    if (negative_last) {
        if (group.is_odd()) throw OutOfRange("sign variants exist only for even n");
        e.back() = -e.back();
    }
    return {group, std::move(e)};
}

std::vector<FormComponent> spinor_form_components(const GroupId& group, int k_form) {
    const int n = group.n();
    if (k_form < 0 || k_form > n) {
        throw OutOfRange("k_form=" + std::to_string(k_form) + " out of range 0.." + std::to_string(n));
    }
    const int jmax = std::min(k_form, n - k_form);
    std::vector<FormComponent> out;
    BigInt total = 0;
    for (int j = 0; j <= jmax; ++j) {
        FormComponent c;
        c.j = j;
        c.weights.push_back(ladder_weight(group, j));
        if (group.is_even()) c.weights.push_back(ladder_weight(group, j, true));
        c.dimension = 0;
        for (const auto& w : c.weights) c.dimension += weyl_dim(w);
        total += c.dimension;
        out.push_back(std::move(c));
    }
    const BigInt expected = binomial(n, k_form) * spinor_dim(group);
    if (total != expected) {
        throw DimensionMismatch("spinor_form_components: dimensions sum to " + total.get_str() + ", expected " +
                                expected.get_str());
    }
    return out;
}

}  // namespace hsdirac

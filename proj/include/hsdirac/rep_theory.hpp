#pragma once

#include "hsdirac/rational.hpp"
#include "hsdirac/weight.hpp"

#include <map>
#include <optional>
#include <span>
#include <vector>

namespace hsdirac {

/// Half-sum of positive roots. B_k: (k-1/2, ..., 1/2); D_k: (k-1, ..., 1, 0).
std::vector<HalfInt> rho(const GroupId& group);

/// Weyl dimension formula over the positive roots e_i ± e_j (and e_i for B_k).
BigInt weyl_dim(const Weight& w);

/// <λ, λ + 2ρ> in the Euclidean pairing on the e_i basis.
Rational casimir_scalar(const Weight& w);

/// All λ over Spin(n) with α ↓ λ, where α is a weight of Spin(n+1).
/// Ordered lexicographically descending.
std::vector<Weight> branch_down(const Weight& alpha);

/// All dominant α over Spin(n+1) with α ↓ λ and α_1 <= a1_max. Ordered
/// lexicographically descending. Empty when a1_max < λ_1.
std::vector<Weight> branch_up(const Weight& lam, const HalfInt& a1_max);

/// Interlacing relation α ↓ λ.
bool interlaces(const Weight& alpha, const Weight& lam);

struct DecompositionComponent {
    Weight weight;
    BigInt dimension;
    long multiplicity = 1;
    bool cartan = false;  // highest component, λ + (highest weight of the other factor)
};

struct DecompositionReport {
    BigInt left_dim;
    BigInt right_dim;
    std::vector<DecompositionComponent> components;
    bool checked = false;

    [[nodiscard]] BigInt component_dim_sum() const;
};

/// V_λ ⊗ C^n: components λ ± e_i that are dominant, plus λ itself for odd n
/// when λ_k > 0. Throws DimensionMismatch if n·dim λ differs from the sum.
DecompositionReport tensor_vector(const Weight& lam);

/// S ⊗ V_λ' by the Racah–Klimyk signed shift rule over all weights of S.
/// Cartan components λ' + σ (both chiralities for even n) are flagged.
DecompositionReport tensor_spinor(const Weight& lam_prime);

/// Generic Racah–Klimyk rule: multiplicities of V_λ ⊗ V, where V is given by
/// its weights (with repetition). Returns dominant weight -> signed count;
/// zero counts are removed.
std::map<Weight, long> klimyk_decompose(const Weight& lam, std::span<const std::vector<HalfInt>> weights_of_v);

/// Weights of the vector representation C^n (±e_i, plus 0 for odd n).
std::vector<std::vector<HalfInt>> vector_rep_weights(const GroupId& group);

/// Weights of the full spinor representation S (all sign patterns of ±1/2).
std::vector<std::vector<HalfInt>> spinor_rep_weights(const GroupId& group);

/// Reflects v into the dominant chamber by the Weyl group. Returns the image
/// and det(w), or nullopt if v lies on a wall.
std::optional<std::pair<std::vector<HalfInt>, int>> reflect_to_dominant(const GroupId& group,
                                                                        std::vector<HalfInt> v);

/// λ_j: 3/2 in the first j slots, 1/2 elsewhere; `negative_last` flips the
/// sign of the last entry (even n only).
Weight ladder_weight(const GroupId& group, int j, bool negative_last = false);

/// Spinor representation S as weights: one for odd n, σ^± for even n.
std::vector<Weight> spinor_weights(const GroupId& group);

struct FormComponent {
    int j = 0;
    std::vector<Weight> weights;  // λ_j, or λ_j^+ and λ_j^- for even n
    BigInt dimension;
};

/// Irreducible pieces E^{k,j} of Λ^k C^n ⊗ S. For k <= n/2 the index j runs
/// over 0..k, for k > n/2 over 0..n-k. Checks Σ dim = C(n,k) dim S.
/// Throws OutOfRange unless 0 <= k_form <= n.
std::vector<FormComponent> spinor_form_components(const GroupId& group, int k_form);

BigInt spinor_dim(const GroupId& group);

}  // namespace hsdirac

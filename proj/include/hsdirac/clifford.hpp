#pragma once

#include "hsdirac/matrix.hpp"
#include "hsdirac/rep_theory.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hsdirac {

inline constexpr int kDefaultCliffordCap = 6;

/// Complex Clifford module of R^n with e_i e_j + e_j e_i = -2 δ_ij.
///
/// Built from Pauli matrices: with m = n/2, the Hermitian generators are
///   γ_{2p-1} = σ3^{⊗(p-1)} ⊗ σ1 ⊗ 1^{⊗(m-p)},  γ_{2p} = σ3^{⊗(p-1)} ⊗ σ2 ⊗ 1^{⊗(m-p)},
/// plus γ_n = σ3^{⊗m} when n is odd, and e_i = i γ_i. For even n the
/// chirality σ3^{⊗m} is diagonal, squares to 1 and anticommutes with every e_i.
struct CliffordRep {
    int n = 0;
    std::size_t dim_s = 0;
    std::vector<ExactMatrix> gammas;
    std::optional<ExactMatrix> chirality;
};

/// Throws OutOfRange for n < 2 and CapExceeded for n > cap.
CliffordRep gamma_matrices(int n, int cap = kDefaultCliffordCap);

/// Basis of Λ^k C^n ⊗ S: lexicographically ordered k-subsets of {0..n-1},
/// each paired with every spinor index; index = subset_position * dim_s + s.
class FormSpinorSpace {
public:
    FormSpinorSpace(int n, int k_form, std::size_t dim_s);

    [[nodiscard]] int n() const { return n_; }
    [[nodiscard]] int k_form() const { return k_; }
    [[nodiscard]] std::size_t dim_s() const { return dim_s_; }
    [[nodiscard]] std::size_t subset_count() const { return subsets_.size(); }
    [[nodiscard]] std::size_t dimension() const { return subsets_.size() * dim_s_; }
    [[nodiscard]] const std::vector<int>& subset(std::size_t pos) const { return subsets_[pos]; }
    /// Position of a sorted subset, or -1 if it is not a k-subset.
    [[nodiscard]] long position(const std::vector<int>& sorted_subset) const;
    [[nodiscard]] std::size_t index(std::size_t subset_pos, std::size_t spinor) const {
        return subset_pos * dim_s_ + spinor;
    }

private:
    int n_;
    int k_;
    std::size_t dim_s_;
    std::vector<std::vector<int>> subsets_;
    std::map<unsigned long, std::size_t> by_mask_;
};

/// Generators L_ab (a < b, lexicographic) of so(n) on Λ^k ⊗ S: the form part
/// sends e_a -> e_b, e_b -> -e_a; the spin part is e_a e_b / 2. They satisfy
/// [L_ab, L_ac] = L_bc.
std::vector<ExactMatrix> so_action(const CliffordRep& rep, int k_form);

/// -Σ_{a<b} L_ab². Acts on S as casimir_scalar(σ).
ExactMatrix casimir_matrix(const CliffordRep& rep, int k_form);

/// Y(ω ⊗ s) = -Σ_i ι(e_i) ω ⊗ e_i s, mapping Λ^k ⊗ S to Λ^{k-1} ⊗ S.
ExactMatrix y_matrix(const CliffordRep& rep, int k_form);

/// ε(e_i) ⊗ 1, exterior multiplication Λ^k ⊗ S -> Λ^{k+1} ⊗ S.
ExactMatrix exterior_matrix(const CliffordRep& rep, int k_form, int i);

struct EkjProjector {
    int j = 0;
    Rational casimir;
    ExactMatrix projector;
    std::size_t rank = 0;
    BigInt predicted_dim;
};

/// Projectors onto E^{k,j} as Lagrange polynomials in the Casimir matrix,
/// using the Casimir scalars of the predicted components as eigenvalues.
/// Throws DegenerateCasimir on coinciding predictions, AnnihilationFailure
/// if the predictions do not annihilate the Casimir.
std::vector<EkjProjector> ekj_projectors(const CliffordRep& rep, int k_form);

/// Caches per-k matrices for one Clifford module. Not thread-safe.
class CliffordWorkspace {
public:
    explicit CliffordWorkspace(CliffordRep rep) : rep_(std::move(rep)) {}

    [[nodiscard]] const CliffordRep& rep() const { return rep_; }
    [[nodiscard]] int n() const { return rep_.n; }
    const std::vector<EkjProjector>& projectors(int k_form);
    const ExactMatrix& projector(int k_form, int j);
    const ExactMatrix& casimir(int k_form);
    /// P_{k,j} x, evaluated as the Lagrange product of sparse shifted Casimirs
    /// applied to x (same value as projector(k, j) * x).
    ExactMatrix project(int k_form, int j, const ExactMatrix& x);
    const ExactMatrix& y(int k_form);
    const std::vector<ExactMatrix>& generators(int k_form);

private:
    CliffordRep rep_;
    std::map<int, std::vector<EkjProjector>> projectors_;
    std::map<int, ExactMatrix> casimir_;
    std::map<int, ExactMatrix> y_;
    std::map<int, std::vector<ExactMatrix>> generators_;
};

/// True iff P_{j+1,j+1} (ε(e_i) ⊗ 1) P_{j,j} ≠ 0 for some i. Requires
/// 0 <= j <= n/2 - 1.
bool symbol_nontrivial(CliffordWorkspace& ws, int j);
bool symbol_nontrivial(const CliffordRep& rep, int j);

/// True iff P_{k+1,j_to} (ε(e_i) ⊗ 1) P_{k,j_from} = 0 for every i.
bool exterior_component_vanishes(CliffordWorkspace& ws, int k_form, int j_from, int j_to);

struct OracleCheck {
    std::string name;
    int n = 0;
    int k_form = -1;
    int j = -1;
    bool passed = false;
    std::string detail;
};

/// Every algebraic check of the oracle for Spin(n), in a fixed order.
std::vector<OracleCheck> run_clifford_checks(int n, int cap = kDefaultCliffordCap);

}  // namespace hsdirac

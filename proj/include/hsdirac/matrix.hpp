#pragma once

#include "hsdirac/rational.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace hsdirac {

using ExactVector = std::vector<ComplexRational>;

/// Dense row-major matrix over Q(i).
class ExactMatrix {
public:
    ExactMatrix() = default;
    ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static ExactMatrix identity(std::size_t n);
    static ExactMatrix zero(std::size_t rows, std::size_t cols) { return {rows, cols}; }
    static ExactMatrix diagonal(std::span<const Rational> entries);

    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }
    [[nodiscard]] bool is_square() const { return rows_ == cols_; }

    ComplexRational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const ComplexRational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    [[nodiscard]] bool is_zero() const;
    [[nodiscard]] std::size_t nonzeros() const;
    [[nodiscard]] ComplexRational trace() const;
    [[nodiscard]] ExactMatrix adjoint() const;
    [[nodiscard]] ExactMatrix transpose() const;
    [[nodiscard]] ExactVector column(std::size_t c) const;

    ExactMatrix& operator+=(const ExactMatrix& o);
    ExactMatrix& operator-=(const ExactMatrix& o);
    ExactMatrix& operator*=(const ComplexRational& s);
    /// this += s * I
    ExactMatrix& add_scalar(const ComplexRational& s);

    friend ExactMatrix operator+(ExactMatrix a, const ExactMatrix& b) { return a += b; }
    friend ExactMatrix operator-(ExactMatrix a, const ExactMatrix& b) { return a -= b; }
    friend ExactMatrix operator*(ExactMatrix a, const ComplexRational& s) { return a *= s; }
    friend ExactMatrix operator*(const ComplexRational& s, ExactMatrix a) { return a *= s; }
    friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    [[nodiscard]] std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<ComplexRational> data_;
};

// Products. `multiply` splits output rows across OpenMP threads; the serial
// variant is the reference it is tested against. Both skip zero entries of
// the left factor, so put the sparser operand on the left.
ExactMatrix multiply(const ExactMatrix& a, const ExactMatrix& b);
ExactMatrix multiply_serial(const ExactMatrix& a, const ExactMatrix& b);
ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
ExactVector apply(const ExactMatrix& a, const ExactVector& x);

/// Kronecker product a ⊗ b.
ExactMatrix kron(const ExactMatrix& a, const ExactMatrix& b);

/// [a, b] = ab - ba
ExactMatrix commutator(const ExactMatrix& a, const ExactMatrix& b);

struct RankKernel {
    std::size_t rank = 0;
    std::vector<ExactVector> kernel_basis;
};

/// Rank and a kernel basis via fraction-free (Bareiss) elimination. Rows are
/// first scaled into Gaussian integers so every intermediate division is exact.
/// Row updates inside each elimination step run under OpenMP.
RankKernel rank_and_kernel(const ExactMatrix& m);
std::size_t bareiss_rank(const ExactMatrix& m);
std::size_t bareiss_rank_serial(const ExactMatrix& m);

/// Reduced row echelon form over Q(i) (plain Gauss-Jordan, serial). Kept as an
/// independent route for rank.
ExactMatrix rref(const ExactMatrix& m, std::vector<std::size_t>* pivot_columns = nullptr);
std::size_t rref_rank(const ExactMatrix& m);

/// Spectral projectors P_i = prod_{j != i} (m - c_j I) / (c_i - c_j). Throws
/// AnnihilationFailure unless prod_i (m - c_i I) == 0, and std::invalid_argument
/// if the eigenvalues are not pairwise distinct.
std::vector<ExactMatrix> lagrange_projectors(const ExactMatrix& m, std::span<const Rational> eigenvalues);

}  // namespace hsdirac

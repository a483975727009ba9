#include "hsdirac/matrix.hpp"

#include "hsdirac/errors.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hsdirac {

ExactMatrix ExactMatrix::identity(std::size_t n) {
    ExactMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

ExactMatrix ExactMatrix::diagonal(std::span<const Rational> entries) {
    ExactMatrix m(entries.size(), entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
    return m;
}

bool ExactMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const ComplexRational& z) { return z.is_zero(); });
}

std::size_t ExactMatrix::nonzeros() const {
    return static_cast<std::size_t>(
        std::count_if(data_.begin(), data_.end(), [](const ComplexRational& z) { return !z.is_zero(); }));
}

ComplexRational ExactMatrix::trace() const {
    ComplexRational t;
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
    return t;
}

ExactMatrix ExactMatrix::adjoint() const {
    ExactMatrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j).conj();
    return r;
}

ExactMatrix ExactMatrix::transpose() const {
    ExactMatrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
}

ExactVector ExactMatrix::column(std::size_t c) const {
    ExactVector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, c);
    return v;
}

ExactMatrix& ExactMatrix::operator+=(const ExactMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("ExactMatrix: shape mismatch in +");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
}

ExactMatrix& ExactMatrix::operator-=(const ExactMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("ExactMatrix: shape mismatch in -");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
}

ExactMatrix& ExactMatrix::operator*=(const ComplexRational& s) {
    for (auto& z : data_)
        if (!z.is_zero()) z *= s;
    return *this;
}

ExactMatrix& ExactMatrix::add_scalar(const ComplexRational& s) {
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) (*this)(i, i) += s;
    return *this;
}

std::string ExactMatrix::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < rows_; ++i) {
        os << '[';
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j);
        os << "]\n";
    }
    return os.str();
}

namespace {

void multiply_row(const ExactMatrix& a, const ExactMatrix& b, ExactMatrix& c, std::size_t i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
        const ComplexRational& aik = a(i, k);
        if (aik.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols(); ++j) {
            const ComplexRational& bkj = b(k, j);
            if (!bkj.is_zero()) c(i, j).add_product(aik, bkj);
        }
    }
}

void check_product_shape(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("ExactMatrix: shape mismatch in *");
}

}  // namespace

ExactMatrix multiply(const ExactMatrix& a, const ExactMatrix& b) {
    check_product_shape(a, b);
    // Work is nnz(left) * cols(right); when the right factor is the sparse one,
    // evaluate (b^T a^T)^T instead.
    if (b.nonzeros() * a.rows() < a.nonzeros() * b.cols()) return multiply(b.transpose(), a.transpose()).transpose();
    ExactMatrix c(a.rows(), b.cols());
    const auto rows = static_cast<long>(a.rows());
#pragma omp parallel for schedule(dynamic, 4)
    for (long i = 0; i < rows; ++i) multiply_row(a, b, c, static_cast<std::size_t>(i));
    return c;
}

ExactMatrix multiply_serial(const ExactMatrix& a, const ExactMatrix& b) {
    check_product_shape(a, b);
    ExactMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) multiply_row(a, b, c, i);
    return c;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) { return multiply(a, b); }

ExactVector apply(const ExactMatrix& a, const ExactVector& x) {
    if (a.cols() != x.size()) throw std::invalid_argument("ExactMatrix: shape mismatch in apply");
    ExactVector y(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k)
            if (!a(i, k).is_zero() && !x[k].is_zero()) y[i].add_product(a(i, k), x[k]);
    return y;
}

ExactMatrix kron(const ExactMatrix& a, const ExactMatrix& b) {
    ExactMatrix r(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (a(i, j).is_zero()) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    if (!b(k, l).is_zero()) r(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
        }
    return r;
}

ExactMatrix commutator(const ExactMatrix& a, const ExactMatrix& b) { return a * b - b * a; }

// ---------------------------------------------------------------------------
// Fraction-free elimination over the Gaussian integers.

namespace {

struct GaussInt {
    BigInt re = 0;
    BigInt im = 0;
    [[nodiscard]] bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
};

// out = a*b - c*d
void mul_sub(GaussInt& out, const GaussInt& a, const GaussInt& b, const GaussInt& c, const GaussInt& d) {
    BigInt re = a.re * b.re - a.im * b.im - c.re * d.re + c.im * d.im;
    BigInt im = a.re * b.im + a.im * b.re - c.re * d.im - c.im * d.re;
    out.re = std::move(re);
    out.im = std::move(im);
}

// x /= d, where d divides x exactly in Z[i].
void divexact(GaussInt& x, const GaussInt& d) {
    if (sgn(d.im) == 0) {
        if (d.re == 1) return;
        mpz_divexact(x.re.get_mpz_t(), x.re.get_mpz_t(), d.re.get_mpz_t());
        mpz_divexact(x.im.get_mpz_t(), x.im.get_mpz_t(), d.re.get_mpz_t());
        return;
    }
    const BigInt n = d.re * d.re + d.im * d.im;
    BigInt re = x.re * d.re + x.im * d.im;
    BigInt im = x.im * d.re - x.re * d.im;
    mpz_divexact(x.re.get_mpz_t(), re.get_mpz_t(), n.get_mpz_t());
    mpz_divexact(x.im.get_mpz_t(), im.get_mpz_t(), n.get_mpz_t());
}

using GaussMatrix = std::vector<std::vector<GaussInt>>;

GaussMatrix to_gaussian(const ExactMatrix& m) {
    GaussMatrix g(m.rows(), std::vector<GaussInt>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        BigInt l = 1;
        for (std::size_t j = 0; j < m.cols(); ++j) {
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).re().raw().get_den_mpz_t());
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).im().raw().get_den_mpz_t());
        }
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const auto& z = m(i, j);
            g[i][j].re = z.re().numerator() * (l / z.re().denominator());
            g[i][j].im = z.im().numerator() * (l / z.im().denominator());
        }
    }
    return g;
}

struct Echelon {
    GaussMatrix rows;  // the first `pivots.size()` rows are in echelon form
    std::vector<std::size_t> pivots;
};

template <bool Parallel>
Echelon bareiss_echelon(const ExactMatrix& m) {
    Echelon e{to_gaussian(m), {}};
    auto& a = e.rows;
    const std::size_t nrows = m.rows();
    const std::size_t ncols = m.cols();
    GaussInt prev{1, 0};
    std::size_t r = 0;
    for (std::size_t c = 0; c < ncols && r < nrows; ++c) {
        std::size_t p = r;
        while (p < nrows && a[p][c].is_zero()) ++p;
        if (p == nrows) continue;
        std::swap(a[r], a[p]);
        const GaussInt pivot = a[r][c];
        const auto first = static_cast<long>(r + 1);
        const auto last = static_cast<long>(nrows);
        auto update = [&](long li) {
            auto& row = a[static_cast<std::size_t>(li)];
            if (row[c].is_zero()) {
                // Zero multiplier: the update reduces to scaling by pivot/prev.
                for (std::size_t j = c + 1; j < ncols; ++j) {
                    if (row[j].is_zero()) continue;
                    mul_sub(row[j], pivot, row[j], GaussInt{}, GaussInt{});
                    divexact(row[j], prev);
                }
                return;
            }
            const GaussInt factor = row[c];
            for (std::size_t j = c + 1; j < ncols; ++j) {
                mul_sub(row[j], pivot, row[j], factor, a[r][j]);
                divexact(row[j], prev);
            }
            row[c] = GaussInt{};
        };
        if constexpr (Parallel) {
#pragma omp parallel for schedule(dynamic, 1)
            for (long i = first; i < last; ++i) update(i);
        } else {
            for (long i = first; i < last; ++i) update(i);
        }
        prev = pivot;
        e.pivots.push_back(c);
        ++r;
    }
    return e;
}

ComplexRational to_complex(const GaussInt& g) { return {Rational(g.re), Rational(g.im)}; }

}  // namespace

RankKernel rank_and_kernel(const ExactMatrix& m) {
    const Echelon e = bareiss_echelon<true>(m);
    RankKernel out;
    out.rank = e.pivots.size();
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : e.pivots) is_pivot[c] = true;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        ExactVector x(m.cols());
        x[f] = 1;
        for (std::size_t r = out.rank; r-- > 0;) {
            const std::size_t pc = e.pivots[r];
            ComplexRational s;
            for (std::size_t j = pc + 1; j < m.cols(); ++j) {
                if (x[j].is_zero() || e.rows[r][j].is_zero()) continue;
                s.add_product(to_complex(e.rows[r][j]), x[j]);
            }
            x[pc] = -s / to_complex(e.rows[r][pc]);
        }
        out.kernel_basis.push_back(std::move(x));
    }
    return out;
}

std::size_t bareiss_rank(const ExactMatrix& m) { return bareiss_echelon<true>(m).pivots.size(); }

std::size_t bareiss_rank_serial(const ExactMatrix& m) { return bareiss_echelon<false>(m).pivots.size(); }

ExactMatrix rref(const ExactMatrix& m, std::vector<std::size_t>* pivot_columns) {
    ExactMatrix a = m;
    std::size_t r = 0;
    if (pivot_columns) pivot_columns->clear();
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t p = r;
        while (p < a.rows() && a(p, c).is_zero()) ++p;
        if (p == a.rows()) continue;
        if (p != r)
            for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
        const ComplexRational inv = a(r, c).inverse();
        for (std::size_t j = c; j < a.cols(); ++j)
            if (!a(r, j).is_zero()) a(r, j) *= inv;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == r || a(i, c).is_zero()) continue;
            const ComplexRational f = -a(i, c);
            for (std::size_t j = c; j < a.cols(); ++j)
                if (!a(r, j).is_zero()) a(i, j).add_product(f, a(r, j));
        }
        if (pivot_columns) pivot_columns->push_back(c);
        ++r;
    }
    return a;
}

std::size_t rref_rank(const ExactMatrix& m) {
    std::vector<std::size_t> pivots;
    rref(m, &pivots);
    return pivots.size();
}

std::vector<ExactMatrix> lagrange_projectors(const ExactMatrix& m, std::span<const Rational> eigenvalues) {
    if (!m.is_square()) throw std::invalid_argument("lagrange_projectors: matrix is not square");
    if (eigenvalues.empty()) throw std::invalid_argument("lagrange_projectors: empty eigenvalue list");
    for (std::size_t i = 0; i < eigenvalues.size(); ++i)
        for (std::size_t j = i + 1; j < eigenvalues.size(); ++j)
            if (eigenvalues[i] == eigenvalues[j])
                throw std::invalid_argument("lagrange_projectors: eigenvalues are not pairwise distinct");

    const std::size_t n = m.rows();
    auto shifted = [&](const Rational& c) {
        ExactMatrix s = m;
        s.add_scalar(-c);
        return s;
    };

    // Accumulate by left-multiplying the (sparse) shifted factors.
    auto product_except = [&](std::size_t skip) {
        ExactMatrix acc;
        bool started = false;
        for (std::size_t j = 0; j < eigenvalues.size(); ++j) {
            if (j == skip) continue;
            acc = started ? multiply(shifted(eigenvalues[j]), acc) : shifted(eigenvalues[j]);
            started = true;
        }
        return started ? acc : ExactMatrix::identity(n);
    };

    std::vector<ExactMatrix> out;
    out.reserve(eigenvalues.size());
    for (std::size_t i = 0; i < eigenvalues.size(); ++i) {
        ExactMatrix p = product_except(i);
        if (i == 0 && !multiply(shifted(eigenvalues[0]), p).is_zero()) {
            throw AnnihilationFailure("lagrange_projectors: prod (m - c_i I) != 0; predicted eigenvalue list is wrong");
        }
        Rational denom = 1;
        for (std::size_t j = 0; j < eigenvalues.size(); ++j)
            if (j != i) denom *= eigenvalues[i] - eigenvalues[j];
        p *= ComplexRational(denom.inverse());
        out.push_back(std::move(p));
    }
    return out;
}

}  // namespace hsdirac

#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace nhs {

using cplx = std::complex<double>;
using CVector = std::vector<cplx>;

/// Dense row-major complex matrix.
///
/// Element access through operator() is 0-based. Operations that take
/// site or row/column indices as part of their public contract
/// (minor_det, inverse_element_cofactor) are 1-based and convert once.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols);
    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries);

    /// Builds from nested rows; all rows must have equal length.
    static ComplexMatrix from_rows(std::initializer_list<std::initializer_list<cplx>> rows);
    static ComplexMatrix identity(std::size_t n);
    static ComplexMatrix diagonal(std::span<const cplx> d);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool square() const noexcept { return rows_ == cols_; }
    bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

    cplx& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const cplx& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<const cplx> entries() const noexcept { return data_; }
    std::span<cplx> entries() noexcept { return data_; }

    bool all_finite() const noexcept;

    ComplexMatrix adjoint() const;
    ComplexMatrix transpose() const;
    ComplexMatrix conj() const;

    /// Copies the block of size (nr, nc) starting at (r0, c0).
    ComplexMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
    void set_block(std::size_t r0, std::size_t c0, const ComplexMatrix& b);

    /// Maximum absolute row sum.
    double norm_inf() const noexcept;

    friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<cplx> data_;
};

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(cplx s, const ComplexMatrix& a);
CVector operator*(const ComplexMatrix& a, std::span<const cplx> x);

/// max_ij |a_ij - b_ij|; dimensions must agree.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);
double max_abs(std::span<const cplx> v) noexcept;

/// LU factorization with partial pivoting, P·A = L·U packed in one matrix.
class LuDecomposition {
public:
    /// Factorizes A. Never throws on singular input; query singular().
    explicit LuDecomposition(const ComplexMatrix& a);

    std::size_t size() const noexcept { return lu_.rows(); }

    /// True when some pivot fell below 1e-13 times the largest row norm of A.
    bool singular() const noexcept { return singular_; }

    /// Product of pivots times the permutation sign. Exact zero is not
    /// guaranteed for singular input; tiny pivots carry through.
    cplx determinant() const noexcept;

    /// Solves A·x = b. Throws SingularMatrix when singular().
    CVector solve(std::span<const cplx> b) const;

private:
    ComplexMatrix lu_;
    std::vector<std::size_t> perm_;
    int sign_ = 1;
    bool singular_ = false;
};

/// Relative pivot threshold used by LuDecomposition.
inline constexpr double kPivotTolerance = 1e-13;

CVector lu_solve(const ComplexMatrix& a, std::span<const cplx> b);
cplx det(const ComplexMatrix& a);
ComplexMatrix inverse(const ComplexMatrix& a);

/// Determinant of A with 1-based row i and column j deleted.
cplx minor_det(const ComplexMatrix& a, std::size_t i, std::size_t j);

/// (A^{-1})_ij from cofactors: (-1)^{i+j} det(M_ji) / det(A), 1-based.
///
/// Shares no solve path with inverse(); each minor is factorized on its own.
cplx inverse_element_cofactor(const ComplexMatrix& a, std::size_t i, std::size_t j);

/// max_ij |A_ij - conj(A_ji)|.
double hermiticity_defect(const ComplexMatrix& a);

}  // namespace nhs

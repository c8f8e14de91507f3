#include "nhscatter/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "nhscatter/error.hpp"

namespace nhs {

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows_ * cols_) {
        throw DimensionMismatch("ComplexMatrix: " + std::to_string(data_.size()) +
                                " entries for a " + std::to_string(rows_) + "x" +
                                std::to_string(cols_) + " matrix");
    }
}

ComplexMatrix ComplexMatrix::from_rows(std::initializer_list<std::initializer_list<cplx>> rows) {
    const std::size_t nr = rows.size();
    const std::size_t nc = nr == 0 ? 0 : rows.begin()->size();
    std::vector<cplx> data;
    data.reserve(nr * nc);
    for (const auto& row : rows) {
        if (row.size() != nc) throw DimensionMismatch("ComplexMatrix::from_rows: ragged rows");
        data.insert(data.end(), row.begin(), row.end());
    }
    return ComplexMatrix(nr, nc, std::move(data));
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const cplx> d) {
    ComplexMatrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
}

bool ComplexMatrix::all_finite() const noexcept {
    return std::all_of(data_.begin(), data_.end(), [](const cplx& z) {
        return std::isfinite(z.real()) && std::isfinite(z.imag());
    });
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) out(c, r) = std::conj((*this)(r, c));
    return out;
}

ComplexMatrix ComplexMatrix::transpose() const {
    ComplexMatrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
    return out;
}

ComplexMatrix ComplexMatrix::conj() const {
    ComplexMatrix out = *this;
    for (auto& z : out.data_) z = std::conj(z);
    return out;
}

ComplexMatrix ComplexMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr,
                                   std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) throw IndexOutOfRange("ComplexMatrix::block");
    ComplexMatrix out(nr, nc);
    for (std::size_t r = 0; r < nr; ++r)
        for (std::size_t c = 0; c < nc; ++c) out(r, c) = (*this)(r0 + r, c0 + c);
    return out;
}

void ComplexMatrix::set_block(std::size_t r0, std::size_t c0, const ComplexMatrix& b) {
    if (r0 + b.rows() > rows_ || c0 + b.cols() > cols_)
        throw IndexOutOfRange("ComplexMatrix::set_block");
    for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c) (*this)(r0 + r, c0 + c) = b(r, c);
}

double ComplexMatrix::norm_inf() const noexcept {
    double best = 0.0;
    for (std::size_t r = 0; r < rows_; ++r) {
        double s = 0.0;
        for (std::size_t c = 0; c < cols_; ++c) s += std::abs((*this)(r, c));
        best = std::max(best, s);
    }
    return best;
}

namespace {

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b, const char* what) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionMismatch(std::string(what) + ": shape mismatch");
}

void require_square(const ComplexMatrix& a, const char* what) {
    if (!a.square()) throw DimensionMismatch(std::string(what) + ": matrix is not square");
}

}  // namespace

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_shape(a, b, "operator+");
    ComplexMatrix out = a;
    auto dst = out.entries();
    auto src = b.entries();
    for (std::size_t i = 0; i < dst.size(); ++i) dst[i] += src[i];
    return out;
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_shape(a, b, "operator-");
    ComplexMatrix out = a;
    auto dst = out.entries();
    auto src = b.entries();
    for (std::size_t i = 0; i < dst.size(); ++i) dst[i] -= src[i];
    return out;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols() != b.rows()) throw DimensionMismatch("operator*: inner dimensions differ");
    ComplexMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const cplx aik = a(i, k);
            if (aik == cplx{}) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
        }
    return out;
}

ComplexMatrix operator*(cplx s, const ComplexMatrix& a) {
    ComplexMatrix out = a;
    for (auto& z : out.entries()) z *= s;
    return out;
}

CVector operator*(const ComplexMatrix& a, std::span<const cplx> x) {
    if (a.cols() != x.size()) throw DimensionMismatch("matrix-vector product: length mismatch");
    CVector y(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        cplx s{};
        for (std::size_t j = 0; j < a.cols(); ++j) s += a(i, j) * x[j];
        y[i] = s;
    }
    return y;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_shape(a, b, "max_abs_diff");
    double best = 0.0;
    auto ea = a.entries();
    auto eb = b.entries();
    for (std::size_t i = 0; i < ea.size(); ++i) best = std::max(best, std::abs(ea[i] - eb[i]));
    return best;
}

double max_abs(std::span<const cplx> v) noexcept {
    double best = 0.0;
    for (const auto& z : v) best = std::max(best, std::abs(z));
    return best;
}

LuDecomposition::LuDecomposition(const ComplexMatrix& a) : lu_(a) {
    require_square(a, "LuDecomposition");
    const std::size_t n = a.rows();
    perm_.resize(n);
    for (std::size_t i = 0; i < n; ++i) perm_[i] = i;

    const double threshold = kPivotTolerance * a.norm_inf();

    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        double best = std::abs(lu_(k, k));
        for (std::size_t i = k + 1; i < n; ++i) {
            const double v = std::abs(lu_(i, k));
            if (v > best) {
                best = v;
                p = i;
            }
        }
        if (best < threshold || best == 0.0) singular_ = true;
        if (p != k) {
            for (std::size_t c = 0; c < n; ++c) std::swap(lu_(k, c), lu_(p, c));
            std::swap(perm_[k], perm_[p]);
            sign_ = -sign_;
        }
        if (best == 0.0) continue;  // column already eliminated
        const cplx pivot = lu_(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            const cplx f = lu_(i, k) / pivot;
            lu_(i, k) = f;
            if (f == cplx{}) continue;
            for (std::size_t c = k + 1; c < n; ++c) lu_(i, c) -= f * lu_(k, c);
        }
    }
}

cplx LuDecomposition::determinant() const noexcept {
    cplx d = static_cast<double>(sign_);
    for (std::size_t i = 0; i < lu_.rows(); ++i) d *= lu_(i, i);
    return d;
}

CVector LuDecomposition::solve(std::span<const cplx> b) const {
    const std::size_t n = size();
    if (b.size() != n) throw DimensionMismatch("lu_solve: right-hand side length mismatch");
    if (singular_) throw SingularMatrix("lu_solve: pivot below relative tolerance");

    CVector x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = b[perm_[i]];
    for (std::size_t i = 0; i < n; ++i) {
        cplx s = x[i];
        for (std::size_t j = 0; j < i; ++j) s -= lu_(i, j) * x[j];
        x[i] = s;
    }
    for (std::size_t ii = n; ii-- > 0;) {
        cplx s = x[ii];
        for (std::size_t j = ii + 1; j < n; ++j) s -= lu_(ii, j) * x[j];
        x[ii] = s / lu_(ii, ii);
    }
    return x;
}

CVector lu_solve(const ComplexMatrix& a, std::span<const cplx> b) {
    require_square(a, "lu_solve");
    return LuDecomposition(a).solve(b);
}

cplx det(const ComplexMatrix& a) {
    require_square(a, "det");
    if (a.rows() == 0) return 1.0;
    return LuDecomposition(a).determinant();
}

ComplexMatrix inverse(const ComplexMatrix& a) {
    require_square(a, "inverse");
    const LuDecomposition lu(a);
    if (lu.singular()) throw SingularMatrix("inverse: matrix is singular");
    const std::size_t n = a.rows();
    ComplexMatrix out(n, n);
    CVector e(n);
    for (std::size_t c = 0; c < n; ++c) {
        std::fill(e.begin(), e.end(), cplx{});
        e[c] = 1.0;
        const CVector col = lu.solve(e);
        for (std::size_t r = 0; r < n; ++r) out(r, c) = col[r];
    }
    return out;
}

cplx minor_det(const ComplexMatrix& a, std::size_t i, std::size_t j) {
    require_square(a, "minor_det");
    const std::size_t n = a.rows();
    if (n < 2) throw IndexOutOfRange("minor_det: matrix must be at least 2x2");
    if (i < 1 || i > n || j < 1 || j > n)
        throw IndexOutOfRange("minor_det: index (" + std::to_string(i) + ", " + std::to_string(j) +
                              ") outside [1, " + std::to_string(n) + "]");
    const std::size_t skip_r = i - 1;
    const std::size_t skip_c = j - 1;
    ComplexMatrix m(n - 1, n - 1);
    for (std::size_t r = 0, mr = 0; r < n; ++r) {
        if (r == skip_r) continue;
        for (std::size_t c = 0, mc = 0; c < n; ++c) {
            if (c == skip_c) continue;
            m(mr, mc++) = a(r, c);
        }
        ++mr;
    }
    return det(m);
}

cplx inverse_element_cofactor(const ComplexMatrix& a, std::size_t i, std::size_t j) {
    require_square(a, "inverse_element_cofactor");
    const std::size_t n = a.rows();
    if (i < 1 || i > n || j < 1 || j > n)
        throw IndexOutOfRange("inverse_element_cofactor: index outside [1, " + std::to_string(n) +
                              "]");
    const LuDecomposition lu(a);
    if (lu.singular()) throw SingularMatrix("inverse_element_cofactor: matrix is singular");
    if (n == 1) return 1.0 / a(0, 0);
    const double sign = ((i + j) % 2 == 0) ? 1.0 : -1.0;
    return sign * minor_det(a, j, i) / lu.determinant();
}

double hermiticity_defect(const ComplexMatrix& a) {
    require_square(a, "hermiticity_defect");
    double best = 0.0;
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = r; c < a.cols(); ++c)
            best = std::max(best, std::abs(a(r, c) - std::conj(a(c, r))));
    return best;
}

}  // namespace nhs

#pragma once

// Small dense complex linear algebra. Gate matrices in this project stay at
// 16x16 (two 2-qubit mode blocks), so everything here is written for clarity
// over asymptotics: row-major storage, naive O(n^3) products, cyclic Jacobi
// for Hermitian eigenvalues.

#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace graysim {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    cplx& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const cplx& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    Matrix& operator+=(const Matrix& o) {
        require_same_shape(o);
        for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
        return *this;
    }
    Matrix& operator-=(const Matrix& o) {
        require_same_shape(o);
        for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
        return *this;
    }
    Matrix& operator*=(cplx s) {
        for (auto& v : data_) v *= s;
        return *this;
    }

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(cplx s, Matrix a) { return a *= s; }
    friend Matrix operator*(Matrix a, cplx s) { return a *= s; }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix product: shape mismatch");
        Matrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const cplx aik = a(i, k);
                if (aik == cplx{}) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
            }
        return c;
    }

    std::vector<cplx> apply(const std::vector<cplx>& v) const {
        if (cols_ != v.size()) throw std::invalid_argument("Matrix apply: shape mismatch");
        std::vector<cplx> out(rows_);
        for (std::size_t i = 0; i < rows_; ++i) {
            cplx acc = 0.0;
            for (std::size_t j = 0; j < cols_; ++j) acc += (*this)(i, j) * v[j];
            out[i] = acc;
        }
        return out;
    }

    Matrix adjoint() const {
        Matrix m(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) m(j, i) = std::conj((*this)(i, j));
        return m;
    }

    cplx trace() const {
        cplx t = 0.0;
        for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
        return t;
    }

    double max_abs() const {
        double m = 0.0;
        for (const auto& v : data_) m = std::max(m, std::abs(v));
        return m;
    }

    double frobenius_norm() const {
        double s = 0.0;
        for (const auto& v : data_) s += std::norm(v);
        return std::sqrt(s);
    }

    bool is_identity(double tol) const {
        if (rows_ != cols_) return false;
        Matrix d = *this - identity(rows_);
        return d.max_abs() <= tol;
    }

    bool is_unitary(double tol) const {
        if (rows_ != cols_) return false;
        return (adjoint() * (*this)).is_identity(tol);
    }

    bool is_hermitian(double tol) const {
        if (rows_ != cols_) return false;
        Matrix d = *this - adjoint();
        return d.max_abs() <= tol;
    }

    static Matrix kron(const Matrix& a, const Matrix& b) {
        Matrix c(a.rows_ * b.rows_, a.cols_ * b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t j = 0; j < a.cols_; ++j) {
                const cplx aij = a(i, j);
                if (aij == cplx{}) continue;
                for (std::size_t k = 0; k < b.rows_; ++k)
                    for (std::size_t l = 0; l < b.cols_; ++l)
                        c(i * b.rows_ + k, j * b.cols_ + l) = aij * b(k, l);
            }
        return c;
    }

private:
    void require_same_shape(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument("Matrix shape mismatch");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<cplx> data_;
};

// e^A by scaling-and-squaring with a Taylor series on the scaled block.
// Inputs here are i*lambda*H with modest norms, so a handful of squarings
// keeps the series in its fast-convergence regime.
inline Matrix expm(const Matrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("expm: square matrix required");
    if (a.rows() > 4096) throw std::invalid_argument("expm: matrix too large");

    double norm = 0.0;  // infinity norm
    for (std::size_t i = 0; i < a.rows(); ++i) {
        double rowsum = 0.0;
        for (std::size_t j = 0; j < a.cols(); ++j) rowsum += std::abs(a(i, j));
        norm = std::max(norm, rowsum);
    }
    int squarings = 0;
    while (norm > 0.5 && squarings < 40) {
        norm /= 2.0;
        ++squarings;
    }

    Matrix b = a;
    b *= std::ldexp(1.0, -squarings);

    Matrix result = Matrix::identity(a.rows());
    Matrix term = Matrix::identity(a.rows());
    for (int k = 1; k <= 64; ++k) {
        term = term * b;
        term *= cplx(1.0 / k, 0.0);
        result += term;
        if (term.max_abs() < 1e-22) break;
    }
    for (int i = 0; i < squarings; ++i) result = result * result;
    return result;
}

// Eigenvalues of a Hermitian matrix via cyclic Jacobi with complex rotations.
inline std::vector<double> hermitian_eigenvalues(Matrix a, double tol = 1e-14) {
    const std::size_t n = a.rows();
    if (n != a.cols()) throw std::invalid_argument("hermitian_eigenvalues: square matrix required");
    if (!a.is_hermitian(1e-9)) throw std::invalid_argument("hermitian_eigenvalues: matrix not Hermitian");

    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) off += std::norm(a(p, q));
        if (std::sqrt(off) <= tol) break;

        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const cplx apq = a(p, q);
                if (std::abs(apq) < 1e-300) continue;
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const cplx phase = apq / std::abs(apq);
                const double tau = (aqq - app) / (2.0 * std::abs(apq));
                const double t = (tau >= 0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;

                // Columns then rows: A <- J^dag A J with
                //   J(p,p)=c, J(p,q)=s*phase, J(q,p)=-s*conj(phase), J(q,q)=c.
                for (std::size_t k = 0; k < n; ++k) {
                    const cplx akp = a(k, p);
                    const cplx akq = a(k, q);
                    a(k, p) = c * akp - s * std::conj(phase) * akq;
                    a(k, q) = s * phase * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const cplx apk = a(p, k);
                    const cplx aqk = a(q, k);
                    a(p, k) = c * apk - s * phase * aqk;
                    a(q, k) = s * std::conj(phase) * apk + c * aqk;
                }
            }
        }
    }

    std::vector<double> eig(n);
    for (std::size_t i = 0; i < n; ++i) eig[i] = a(i, i).real();
    return eig;
}

// Spectral (operator 2-) norm.
inline double spectral_norm(const Matrix& a) {
    Matrix g = a.adjoint() * a;
    double lmax = 0.0;
    for (double e : hermitian_eigenvalues(g)) lmax = std::max(lmax, e);
    return std::sqrt(std::max(0.0, lmax));
}

inline double vector_norm(const std::vector<cplx>& v) {
    double s = 0.0;
    for (const auto& x : v) s += std::norm(x);
    return std::sqrt(s);
}

inline cplx inner_product(const std::vector<cplx>& a, const std::vector<cplx>& b) {
    if (a.size() != b.size()) throw std::invalid_argument("inner_product: size mismatch");
    cplx acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) acc += std::conj(a[i]) * b[i];
    return acc;
}

// |<a|b>|^2 for normalized vectors: global-phase-insensitive overlap.
inline double fidelity(const std::vector<cplx>& a, const std::vector<cplx>& b) {
    return std::norm(inner_product(a, b));
}

}  // namespace graysim

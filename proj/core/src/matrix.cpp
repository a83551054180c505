#include "nlg/matrix.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>

namespace nlg {

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1.0;
    return m;
}

Matrix Matrix::from_rows(std::initializer_list<std::initializer_list<cx>> rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r ? rows.begin()->size() : 0;
    Matrix m(r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != c)
            throw ShapeError("from_rows: ragged rows");
        std::size_t j = 0;
        for (cx v : row)
            m(i, j++) = v;
        ++i;
    }
    return m;
}

Matrix Matrix::column(const std::vector<cx>& v) {
    Matrix m(v.size(), 1);
    for (std::size_t i = 0; i < v.size(); ++i)
        m(i, 0) = v[i];
    return m;
}

Matrix Matrix::dyad(std::size_t n, std::size_t ket, std::size_t bra) {
    Matrix m(n, n);
    m(ket, bra) = 1.0;
    return m;
}

Matrix Matrix::diagonal(const std::vector<cx>& d) {
    Matrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i)
        m(i, i) = d[i];
    return m;
}

Matrix Matrix::dagger() const {
    Matrix m(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            m(j, i) = std::conj((*this)(i, j));
    return m;
}

Matrix Matrix::conjugate() const {
    Matrix m(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i)
        m.data_[i] = std::conj(data_[i]);
    return m;
}

Matrix Matrix::transpose() const {
    Matrix m(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            m(j, i) = (*this)(i, j);
    return m;
}

Matrix& Matrix::operator+=(const Matrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw ShapeError("matrix add: shape mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i)
        data_[i] += o.data_[i];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw ShapeError("matrix sub: shape mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i)
        data_[i] -= o.data_[i];
    return *this;
}

Matrix& Matrix::operator*=(cx s) {
    for (auto& v : data_)
        v *= s;
    return *this;
}

cx Matrix::trace() const {
    if (!square())
        throw ShapeError("trace: non-square matrix");
    cx t = 0.0;
    for (std::size_t i = 0; i < rows_; ++i)
        t += (*this)(i, i);
    return t;
}

double Matrix::max_abs() const {
    double m = 0.0;
    for (const auto& v : data_)
        m = std::max(m, std::abs(v));
    return m;
}

double Matrix::frobenius_norm() const {
    double s = 0.0;
    for (const auto& v : data_)
        s += std::norm(v);
    return std::sqrt(s);
}

bool Matrix::all_finite() const {
    for (const auto& v : data_)
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            return false;
    return true;
}

std::vector<cx> Matrix::apply(const std::vector<cx>& v) const {
    if (v.size() != cols_)
        throw ShapeError("apply: vector length mismatch");
    std::vector<cx> out(rows_, 0.0);
    for (std::size_t i = 0; i < rows_; ++i) {
        cx acc = 0.0;
        const cx* row = data_.data() + i * cols_;
        for (std::size_t j = 0; j < cols_; ++j)
            acc += row[j] * v[j];
        out[i] = acc;
    }
    return out;
}

Matrix operator+(Matrix a, const Matrix& b) {
    a += b;
    return a;
}

Matrix operator-(Matrix a, const Matrix& b) {
    a -= b;
    return a;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows())
        throw ShapeError("matrix mul: inner dimension mismatch");
    Matrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const cx aik = a(i, k);
            if (aik == cx(0.0))
                continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                c(i, j) += aik * b(k, j);
        }
    }
    return c;
}

Matrix operator*(cx s, Matrix m) {
    m *= s;
    return m;
}

Matrix operator*(double s, Matrix m) {
    m *= cx(s);
    return m;
}

Matrix tensor_product(const Matrix& a, const Matrix& b) {
    Matrix c(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const cx aij = a(i, j);
            if (aij == cx(0.0))
                continue;
            for (std::size_t p = 0; p < b.rows(); ++p)
                for (std::size_t q = 0; q < b.cols(); ++q)
                    c(i * b.rows() + p, j * b.cols() + q) = aij * b(p, q);
        }
    return c;
}

double unitarity_residual(const Matrix& m) {
    if (!m.square())
        throw ShapeError("unitarity_residual: non-square matrix");
    Matrix g = m.dagger() * m;
    for (std::size_t i = 0; i < g.rows(); ++i)
        g(i, i) -= 1.0;
    return g.max_abs();
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw ShapeError("max_abs_diff: shape mismatch");
    double m = 0.0;
    for (std::size_t i = 0; i < a.data().size(); ++i)
        m = std::max(m, std::abs(a.data()[i] - b.data()[i]));
    return m;
}

cx alignment_phase(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw ShapeError("alignment_phase: shape mismatch");
    cx overlap = 0.0;
    for (std::size_t i = 0; i < a.data().size(); ++i)
        overlap += std::conj(b.data()[i]) * a.data()[i];
    const double mag = std::abs(overlap);
    return mag > 0.0 ? overlap / mag : cx(1.0);
}

double phase_aligned_diff(const Matrix& a, const Matrix& b) {
    const cx z = alignment_phase(a, b);
    double m = 0.0;
    for (std::size_t i = 0; i < a.data().size(); ++i)
        m = std::max(m, std::abs(a.data()[i] - z * b.data()[i]));
    return m;
}

cx root_of_unity(long long k, long long n) {
    if (n <= 0)
        throw ShapeError("root_of_unity: n must be positive");
    k %= n;
    if (k < 0)
        k += n;
    if (k == 0)
        return 1.0;
    if (2 * k == n)
        return -1.0;
    if (4 * k == n)
        return cx(0.0, 1.0);
    if (4 * k == 3 * n)
        return cx(0.0, -1.0);
    const double theta = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
    return cx(std::cos(theta), std::sin(theta));
}

std::string to_string(cx z) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g%+.12gi", z.real(), z.imag());
    return buf;
}

std::string to_string(const Matrix& m) {
    std::string out;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j)
                out += "  ";
            out += to_string(m(i, j));
        }
        out += '\n';
    }
    return out;
}

} // namespace nlg

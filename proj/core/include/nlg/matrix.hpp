#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace nlg {

using cx = std::complex<double>;

struct ShapeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct LookupError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Dense row-major complex matrix. Sizes in this library stay small
/// (<= ~256x256), so everything is plain O(n^3) with no blocking.
class Matrix {
  public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(std::size_t n);
    static Matrix from_rows(std::initializer_list<std::initializer_list<cx>> rows);
    /// Column vector from amplitudes.
    static Matrix column(const std::vector<cx>& v);
    /// Dyad |ket><bra| on an n-dimensional space (0-based indices).
    static Matrix dyad(std::size_t n, std::size_t ket, std::size_t bra);
    static Matrix diagonal(const std::vector<cx>& d);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }
    bool empty() const { return data_.empty(); }

    cx& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const cx& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    const std::vector<cx>& data() const { return data_; }
    std::vector<cx>& data() { return data_; }

    Matrix dagger() const;
    Matrix conjugate() const;
    Matrix transpose() const;

    Matrix& operator+=(const Matrix& o);
    Matrix& operator-=(const Matrix& o);
    Matrix& operator*=(cx s);

    cx trace() const;
    double max_abs() const;
    double frobenius_norm() const;
    bool all_finite() const;

    std::vector<cx> apply(const std::vector<cx>& v) const;

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<cx> data_;
};

Matrix operator+(Matrix a, const Matrix& b);
Matrix operator-(Matrix a, const Matrix& b);
Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator*(cx s, Matrix m);
Matrix operator*(double s, Matrix m);

/// Kronecker product; entry ((i,p),(j,q)) = a(i,j) b(p,q), b-indices innermost.
Matrix tensor_product(const Matrix& a, const Matrix& b);

/// max-abs entry of m^dag m - I; zero iff m is exactly unitary.
double unitarity_residual(const Matrix& m);

double max_abs_diff(const Matrix& a, const Matrix& b);

/// Unit phase z minimizing the Frobenius distance ||a - z b||; returns 1 when
/// the overlap tr(b^dag a) vanishes.
cx alignment_phase(const Matrix& a, const Matrix& b);

/// max-abs entry of a - z b with z the alignment phase ("equal up to global
/// phase" comparisons).
double phase_aligned_diff(const Matrix& a, const Matrix& b);

/// e^{2 pi i k / n} with the exponent reduced mod n first.
cx root_of_unity(long long k, long long n);

/// Fixed-point "a+bi" rendering with 12 significant digits, one row per line.
std::string to_string(const Matrix& m);
std::string to_string(cx z);

} // namespace nlg

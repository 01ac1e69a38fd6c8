#ifndef RATSURF_EXACT_HPP
#define RATSURF_EXACT_HPP

// Exact integer/rational linear algebra and polynomials used by the lattice layer.

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "ratsurf/errors.hpp"

namespace ratsurf {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Dense row-major matrix over an exact ring.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  static Matrix from_columns(const std::vector<std::vector<T>>& cols) {
    if (cols.empty()) return {};
    Matrix m(cols.front().size(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (cols[j].size() != m.rows_) throw InvalidArgument("from_columns: ragged input");
      for (std::size_t i = 0; i < m.rows_; ++i) m(i, j) = cols[j][i];
    }
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<T> column(std::size_t j) const {
    std::vector<T> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  std::vector<T> apply(const std::vector<T>& v) const {
    if (v.size() != cols_) throw InvalidArgument("matrix-vector size mismatch");
    std::vector<T> out(rows_, T(0));
    for (std::size_t i = 0; i < rows_; ++i) {
      T acc(0);
      for (std::size_t j = 0; j < cols_; ++j)
        if ((*this)(i, j) != 0 && v[j] != 0) acc += (*this)(i, j) * v[j];
      out[i] = acc;
    }
    return out;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw InvalidArgument("matrix product size mismatch");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t l = 0; l < a.cols_; ++l) {
        const T& ail = a(i, l);
        if (ail == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          if (b(l, j) != 0) c(i, j) += ail * b(l, j);
      }
    return c;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InvalidArgument("matrix sum size mismatch");
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
    return a;
  }

  friend Matrix operator-(Matrix a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InvalidArgument("matrix difference size mismatch");
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
    return a;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const T& x) { return x == 0; });
  }

  Matrix power(unsigned e) const {
    Matrix result = identity(rows_), base = *this;
    while (e) {
      if (e & 1u) result = result * base;
      e >>= 1u;
      if (e) base = base * base;
    }
    return result;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;
using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

RatMatrix to_rational(const IntMatrix& m);
RatVector to_rational(const IntVector& v);

/// Bilinear pairing u^T Q v.
template <class T>
T pairing(const std::vector<T>& u, const Matrix<T>& q, const std::vector<T>& v) {
  const auto qv = q.apply(v);
  T acc(0);
  for (std::size_t i = 0; i < u.size(); ++i) acc += u[i] * qv[i];
  return acc;
}

/// Gram matrix B^T Q B for the columns of B.
template <class T>
Matrix<T> gram(const Matrix<T>& basis, const Matrix<T>& q) {
  return basis.transpose() * q * basis;
}

/// Leading principal minors via Bareiss fraction-free elimination. Entry i is det of the
/// (i+1)x(i+1) leading block. Throws DegenerateError if a leading minor vanishes before the end.
std::vector<Integer> leading_principal_minors(const IntMatrix& m);

Integer determinant(const IntMatrix& m);

/// Exact inverse over the rationals; throws DegenerateError on a singular matrix.
RatMatrix inverse(const RatMatrix& m);

/// Exact solve of A x = b (A square, nonsingular).
RatVector solve(const RatMatrix& a, const RatVector& b);

/// Polynomial with coefficients stored lowest degree first; always trimmed.
template <class T>
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<T> c) : c_(std::move(c)) { trim(); }
  Poly(std::initializer_list<T> c) : c_(c) { trim(); }

  static Poly monomial(const T& coeff, std::size_t degree) {
    std::vector<T> c(degree + 1, T(0));
    c[degree] = coeff;
    return Poly(std::move(c));
  }

  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  const std::vector<T>& coeffs() const noexcept { return c_; }
  T coeff(std::size_t i) const { return i < c_.size() ? c_[i] : T(0); }
  T leading() const { return c_.empty() ? T(0) : c_.back(); }

  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<T> c(std::max(a.c_.size(), b.c_.size()), T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return Poly(std::move(c));
  }
  friend Poly operator-(const Poly& a, const Poly& b) {
    std::vector<T> c(std::max(a.c_.size(), b.c_.size()), T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
    return Poly(std::move(c));
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<T> c(a.c_.size() + b.c_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return Poly(std::move(c));
  }
  Poly operator-() const {
    auto c = c_;
    for (auto& x : c) x = -x;
    return Poly(std::move(c));
  }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  Poly derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<T> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * T(static_cast<long>(i));
    return Poly(std::move(d));
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<T> c_;
};

using IntPoly = Poly<Integer>;
using RatPoly = Poly<Rational>;

RatPoly to_rational(const IntPoly& p);

/// Division with remainder. Over the integers the divisor must be monic (or +-1 leading).
struct IntDivision {
  IntPoly quotient, remainder;
};
IntDivision divide(const IntPoly& num, const IntPoly& den);

struct RatDivision {
  RatPoly quotient, remainder;
};
RatDivision divide(const RatPoly& num, const RatPoly& den);

/// Monic gcd over Q.
RatPoly gcd(RatPoly a, RatPoly b);

/// Squarefree part (monic, over Q) of a nonzero polynomial.
RatPoly squarefree_part(const RatPoly& p);

/// Characteristic polynomial det(xI - M) by the division-free Berkowitz algorithm.
IntPoly char_poly(const IntMatrix& m);
RatPoly char_poly(const RatMatrix& m);

/// d-th cyclotomic polynomial.
IntPoly cyclotomic(unsigned d);

/// Human readable form, e.g. "x^3 - 2x^2 - 2x + 1".
std::string to_string(const IntPoly& p, const std::string& var = "x");
std::string to_string(const Rational& r);

/// Sign changes in the coefficient sequence (Descartes bound on positive real roots).
int sign_changes(const IntPoly& p);

}  // namespace ratsurf

#endif  // RATSURF_EXACT_HPP

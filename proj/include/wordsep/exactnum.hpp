#pragma once

// Scalar backends and small dense linear algebra.
//
// Two backends carry every machine in the library: exact rationals (GMP)
// and IEEE complex doubles. Plain doubles are supported for real-valued
// float work. Matrices are dense and row-major; nothing here is sized for
// more than a few hundred states.

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "wordsep/error.hpp"

namespace wordsep {

using Integer = mpz_class;
using Rational = mpq_class;
using Complex = std::complex<double>;

template <class S>
struct scalar_traits;

template <>
struct scalar_traits<Rational> {
  using real_type = Rational;
  static constexpr bool exact = true;
  static constexpr const char* name = "rational";
  static Rational conj(const Rational& x) { return x; }
  static Rational abs(const Rational& x) { return Rational(::abs(x)); }
  static Rational abs2(const Rational& x) { return Rational(x * x); }
  static double to_double(const Rational& x) { return x.get_d(); }
  static bool finite(const Rational&) { return true; }
};

template <>
struct scalar_traits<double> {
  using real_type = double;
  static constexpr bool exact = false;
  static constexpr const char* name = "float";
  static double conj(double x) { return x; }
  static double abs(double x) { return std::abs(x); }
  static double abs2(double x) { return x * x; }
  static double to_double(double x) { return x; }
  static bool finite(double x) { return std::isfinite(x); }
};

template <>
struct scalar_traits<Complex> {
  using real_type = double;
  static constexpr bool exact = false;
  static constexpr const char* name = "complex";
  static Complex conj(const Complex& x) { return std::conj(x); }
  static double abs(const Complex& x) { return std::abs(x); }
  static double abs2(const Complex& x) { return std::norm(x); }
  static double to_double(const Complex& x) { return x.real(); }
  static bool finite(const Complex& x) {
    return std::isfinite(x.real()) && std::isfinite(x.imag());
  }
};

template <class S>
using real_t = typename scalar_traits<S>::real_type;

template <class S>
inline constexpr bool is_exact_v = scalar_traits<S>::exact;

template <class S>
using Vector = std::vector<S>;

template <class S>
class Matrix {
 public:
  Matrix() = default;

  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, S(0)) {}

  Matrix(std::size_t rows, std::size_t cols, std::vector<S> row_major)
      : rows_(rows), cols_(cols), data_(std::move(row_major)) {
    if (data_.size() != rows_ * cols_) {
      throw DimensionError("matrix: " + std::to_string(data_.size()) +
                           " entries for a " + std::to_string(rows_) + "x" +
                           std::to_string(cols_) + " matrix");
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = S(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  S& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const S& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  const std::vector<S>& data() const { return data_; }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<S> data_;
};

namespace detail {

inline void require(bool ok, const char* what) {
  if (!ok) throw DimensionError(what);
}

}  // namespace detail

template <class S>
Vector<S> mat_vec(const Matrix<S>& m, std::span<const S> v) {
  detail::require(m.cols() == v.size(), "mat_vec: columns != vector length");
  Vector<S> out(m.rows(), S(0));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    S acc(0);
    for (std::size_t j = 0; j < m.cols(); ++j) acc += m(i, j) * v[j];
    out[i] = acc;
  }
  return out;
}

template <class S>
Vector<S> mat_vec(const Matrix<S>& m, const Vector<S>& v) {
  return mat_vec(m, std::span<const S>(v));
}

template <class S>
Matrix<S> mat_mul(const Matrix<S>& a, const Matrix<S>& b) {
  detail::require(a.cols() == b.rows(), "mat_mul: inner dimensions differ");
  Matrix<S> out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const S& aik = a(i, k);
      if (aik == S(0)) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

// Kronecker product; the left operand indexes the outermost block.
template <class S>
Matrix<S> tensor(const Matrix<S>& a, const Matrix<S>& b) {
  Matrix<S> out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return out;
}

template <class S>
Vector<S> tensor_vec(const Vector<S>& u, const Vector<S>& v) {
  Vector<S> out;
  out.reserve(u.size() * v.size());
  for (const S& x : u)
    for (const S& y : v) out.push_back(x * y);
  return out;
}

template <class S>
Matrix<S> adjoint(const Matrix<S>& m) {
  Matrix<S> out(m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      out(j, i) = scalar_traits<S>::conj(m(i, j));
  return out;
}

template <class S>
Matrix<S> transpose(const Matrix<S>& m) {
  Matrix<S> out(m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(j, i) = m(i, j);
  return out;
}

template <class S>
real_t<S> l1_norm(const Vector<S>& v) {
  real_t<S> acc(0);
  for (const S& x : v) acc += scalar_traits<S>::abs(x);
  return acc;
}

template <class S>
real_t<S> l2_norm_sq(const Vector<S>& v) {
  real_t<S> acc(0);
  for (const S& x : v) acc += scalar_traits<S>::abs2(x);
  return acc;
}

// <u|v>, conjugate-linear in the first argument.
template <class S>
S inner(const Vector<S>& u, const Vector<S>& v) {
  detail::require(u.size() == v.size(), "inner: length mismatch");
  S acc(0);
  for (std::size_t i = 0; i < u.size(); ++i)
    acc += scalar_traits<S>::conj(u[i]) * v[i];
  return acc;
}

template <class S>
S entry_sum(const Vector<S>& v) {
  S acc(0);
  for (const S& x : v) acc += x;
  return acc;
}

template <class S>
double max_abs_diff(const Vector<S>& u, const Vector<S>& v) {
  detail::require(u.size() == v.size(), "max_abs_diff: length mismatch");
  double worst = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    S d = u[i] - v[i];
    worst = std::max(worst,
                     scalar_traits<S>::to_double(scalar_traits<S>::abs(d)));
  }
  return worst;
}

// Max-entry deviation of M^dagger M from the identity, compared against tol.
// Exact backends compute the deviation exactly, so tol = 0 means equality.
template <class S>
bool is_unitary(const Matrix<S>& m, double tol) {
  if (!m.square()) return false;
  const Matrix<S> g = mat_mul(adjoint(m), m);
  for (std::size_t i = 0; i < g.rows(); ++i) {
    for (std::size_t j = 0; j < g.cols(); ++j) {
      const S expected = i == j ? S(1) : S(0);
      const S d = g(i, j) - expected;
      if constexpr (is_exact_v<S>) {
        if (scalar_traits<S>::abs(d) > Rational(tol)) return false;
      } else {
        if (!scalar_traits<S>::finite(g(i, j)) ||
            scalar_traits<S>::abs(d) > tol)
          return false;
      }
    }
  }
  return true;
}

// Every column sums to 1. Exact on the rational backend.
template <class S>
bool is_affine(const Matrix<S>& m, double tol = 0.0) {
  if (!m.square()) return false;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    S acc(0);
    for (std::size_t i = 0; i < m.rows(); ++i) acc += m(i, j);
    const S d = acc - S(1);
    if constexpr (is_exact_v<S>) {
      if (scalar_traits<S>::abs(d) > Rational(tol)) return false;
    } else {
      if (scalar_traits<S>::abs(d) > tol) return false;
    }
  }
  return true;
}

template <class S>
bool is_affine_state(const Vector<S>& v) {
  return entry_sum(v) == S(1);
}

// num / den in lowest terms with a positive denominator.
inline Rational fraction(const Integer& num, const Integer& den) {
  if (den == 0) throw InvalidArgument("fraction: zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline Complex to_complex(const Rational& r) { return Complex(r.get_d(), 0.0); }

template <class From>
Matrix<Complex> to_complex(const Matrix<From>& m) {
  std::vector<Complex> data;
  data.reserve(m.rows() * m.cols());
  for (const From& x : m.data()) {
    if constexpr (std::is_same_v<From, Rational>)
      data.push_back(to_complex(x));
    else
      data.emplace_back(x);
  }
  return Matrix<Complex>(m.rows(), m.cols(), std::move(data));
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

inline std::string to_string(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

inline std::string to_string(const Complex& z) {
  return to_string(z.real()) + (z.imag() < 0 ? "" : "+") + to_string(z.imag()) + "i";
}

// Parses "p/q" or "p" into a canonical rational.
inline Rational parse_rational(const std::string& text) {
  Rational r;
  if (r.set_str(text, 10) != 0) throw InvalidArgument("bad rational: " + text);
  if (r.get_den() == 0) throw InvalidArgument("zero denominator: " + text);
  r.canonicalize();
  return r;
}

}  // namespace wordsep

#include "qgraph/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>

#include "qgraph/errors.hpp"

namespace qgraph {

void SymmetricMatrix::set(std::size_t i, std::size_t j, double value) {
  a_[i * n_ + j] = value;
  a_[j * n_ + i] = value;
}

void SymmetricMatrix::add(std::size_t i, std::size_t j, double value) {
  a_[i * n_ + j] += value;
  if (i != j) a_[j * n_ + i] = a_[i * n_ + j];
}

double SymmetricMatrix::trace() const {
  double t = 0.0;
  for (std::size_t i = 0; i < n_; ++i) t += a_[i * n_ + i];
  return t;
}

double SymmetricMatrix::frobenius_norm() const {
  double s = 0.0;
  for (double x : a_) s += x * x;
  return std::sqrt(s);
}

void HermitianMatrix::set(std::size_t i, std::size_t j, std::complex<double> z) {
  if (i == j) {
    a_[i * n_ + i] = z.real();
    return;
  }
  a_[i * n_ + j] = z;
  a_[j * n_ + i] = std::conj(z);
}

void HermitianMatrix::add(std::size_t i, std::size_t j, std::complex<double> z) {
  set(i, j, a_[i * n_ + j] + z);
}

SymmetricMatrix HermitianMatrix::real_embedding() const {
  SymmetricMatrix s(2 * n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i; j < n_; ++j) {
      const auto z = a_[i * n_ + j];
      s.set(i, j, z.real());
      s.set(n_ + i, n_ + j, z.real());
      // lower-left block B, upper-right block -B = B^T since B is antisymmetric
      s.set(n_ + i, j, z.imag());
      if (i != j) s.set(n_ + j, i, -z.imag());
    }
  }
  return s;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

std::vector<double> EigenDecomposition::vector(std::size_t k) const {
  const std::size_t n = order();
  std::vector<double> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = vectors[i * n + k];
  return v;
}

// ---------------------------------------------------------------------------
// Jacobi

namespace {

constexpr int kMaxSweeps = 100;
constexpr double kJacobiRelTol = 1e-13;

EigenDecomposition jacobi_impl(const SymmetricMatrix& m, bool want_vectors) {
  const std::size_t n = m.order();
  EigenDecomposition out;
  if (n == 0) return out;

  std::vector<double> a(m.data().begin(), m.data().end());
  std::vector<double> v;
  if (want_vectors) {
    v.assign(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) v[i * n + i] = 1.0;
  }
  const double norm = m.frobenius_norm();
  auto off_norm = [&] {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j) s += a[i * n + j] * a[i * n + j];
    return std::sqrt(s);
  };

  int sweep = 0;
  while (off_norm() > kJacobiRelTol * norm) {
    if (++sweep > kMaxSweeps) throw NumericalError("Jacobi eigensolver did not converge");
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a[p * n + q];
        if (apq == 0.0) continue;
        const double app = a[p * n + p];
        const double aqq = a[q * n + q];
        const double theta = (aqq - app) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a[k * n + p];
          const double akq = a[k * n + q];
          a[k * n + p] = c * akp - s * akq;
          a[k * n + q] = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a[p * n + k];
          const double aqk = a[q * n + k];
          a[p * n + k] = c * apk - s * aqk;
          a[q * n + k] = s * apk + c * aqk;
        }
        a[p * n + q] = 0.0;
        a[q * n + p] = 0.0;
        if (want_vectors) {
          for (std::size_t k = 0; k < n; ++k) {
            const double vkp = v[k * n + p];
            const double vkq = v[k * n + q];
            v[k * n + p] = c * vkp - s * vkq;
            v[k * n + q] = s * vkp + c * vkq;
          }
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return a[i * n + i] < a[j * n + j]; });
  out.values.resize(n);
  for (std::size_t k = 0; k < n; ++k) out.values[k] = a[order[k] * n + order[k]];
  if (want_vectors) {
    out.vectors.resize(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) out.vectors[i * n + k] = v[i * n + order[k]];
  }
  return out;
}

}  // namespace

std::vector<double> jacobi_eigenvalues(const SymmetricMatrix& m) { return jacobi_impl(m, false).values; }

EigenDecomposition jacobi_eigen(const SymmetricMatrix& m) { return jacobi_impl(m, true); }

std::vector<double> hermitian_eigenvalues(const HermitianMatrix& m) {
  const std::vector<double> doubled = jacobi_eigenvalues(m.real_embedding());
  std::vector<double> values;
  values.reserve(m.order());
  for (std::size_t k = 0; k + 1 < doubled.size(); k += 2) {
    const double a = doubled[k];
    const double b = doubled[k + 1];
    if (std::abs(a - b) > 1e-8 * std::max(1.0, std::abs(a)))
      throw NumericalError("Hermitian embedding eigenvalues do not pair up");
    values.push_back(0.5 * (a + b));
  }
  return values;
}

// ---------------------------------------------------------------------------
// Exact linear algebra

namespace {

using i128 = __int128;

/// Fraction-free Bareiss elimination on an integer copy; nullopt on overflow.
std::optional<std::size_t> bareiss_rank(const RationalMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::int64_t> a(rows * cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      if (!m(i, j).is_integer()) return std::nullopt;
      a[i * cols + j] = m(i, j).num();
    }

  std::size_t rank = 0;
  std::int64_t prev = 1;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot * cols + col] == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank)
      for (std::size_t j = 0; j < cols; ++j) std::swap(a[pivot * cols + j], a[rank * cols + j]);
    const std::int64_t p = a[rank * cols + col];
    for (std::size_t i = rank + 1; i < rows; ++i) {
      const std::int64_t f = a[i * cols + col];
      for (std::size_t j = col; j < cols; ++j) {
        const i128 numer = static_cast<i128>(a[i * cols + j]) * p - static_cast<i128>(f) * a[rank * cols + j];
        if (numer % prev != 0) return std::nullopt;
        const i128 value = numer / prev;
        if (value > std::numeric_limits<std::int64_t>::max() || value < std::numeric_limits<std::int64_t>::min())
          return std::nullopt;
        a[i * cols + j] = static_cast<std::int64_t>(value);
      }
    }
    prev = p;
    ++rank;
  }
  return rank;
}

/// In-place reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(RationalMatrix& a) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < a.rows() && a(pivot, col).is_zero()) ++pivot;
    if (pivot == a.rows()) continue;
    if (pivot != row)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(pivot, j), a(row, j));
    const Rational inv = Rational(1) / a(row, col);
    for (std::size_t j = col; j < a.cols(); ++j) a(row, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == row || a(i, col).is_zero()) continue;
      const Rational f = a(i, col);
      for (std::size_t j = col; j < a.cols(); ++j) a(i, j) -= f * a(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::size_t rational_rank(const RationalMatrix& m) {
  if (auto r = bareiss_rank(m)) return *r;
  RationalMatrix copy = m;
  return rref(copy).size();
}

std::vector<std::vector<Rational>> rational_nullspace(const RationalMatrix& m) {
  RationalMatrix a = m;
  const std::vector<std::size_t> pivots = rref(a);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : pivots) is_pivot[p] = true;

  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> x(m.cols(), Rational(0));
    x[free] = Rational(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = -a(r, free);
    basis.push_back(std::move(x));
  }
  return basis;
}

// ---------------------------------------------------------------------------

std::size_t Spectrum::total() const {
  std::size_t t = 0;
  for (const auto& v : values) t += v.multiplicity;
  return t;
}

std::vector<double> Spectrum::expanded() const {
  std::vector<double> out;
  for (const auto& v : values) out.insert(out.end(), v.multiplicity, v.value);
  return out;
}

std::size_t Spectrum::multiplicity_of(double x) const {
  for (const auto& v : values)
    if (std::abs(v.value - x) <= tolerance * std::max(1.0, std::abs(x))) return v.multiplicity;
  return 0;
}

Spectrum group_multiplicities(std::span<const double> ascending, double tol) {
  Spectrum s;
  s.tolerance = tol;
  std::size_t start = 0;
  for (std::size_t i = 1; i <= ascending.size(); ++i) {
    const bool split = i == ascending.size() ||
                       ascending[i] - ascending[i - 1] > tol * std::max(1.0, std::abs(ascending[i]));
    if (!split) continue;
    double sum = 0.0;
    for (std::size_t k = start; k < i; ++k) sum += ascending[k];
    s.values.push_back({sum / static_cast<double>(i - start), i - start});
    start = i;
  }
  return s;
}

}  // namespace qgraph

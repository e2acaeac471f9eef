#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "qgraph/rational.hpp"

namespace qgraph {

inline constexpr double kMultiplicityTolerance = 1e-8;

/// Dense real symmetric matrix. Entries are written pairwise, so a(i,j) and
/// a(j,i) are the same stored value bit for bit.
class SymmetricMatrix {
 public:
  SymmetricMatrix() = default;
  explicit SymmetricMatrix(std::size_t order) : n_(order), a_(order * order, 0.0) {}

  std::size_t order() const { return n_; }
  double operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
  void set(std::size_t i, std::size_t j, double value);
  void add(std::size_t i, std::size_t j, double value);

  double trace() const;
  double frobenius_norm() const;
  /// Row-major storage.
  std::span<const double> data() const { return a_; }

 private:
  std::size_t n_ = 0;
  std::vector<double> a_;
};

/// Dense complex Hermitian matrix, a(i,j) == conj(a(j,i)) by construction.
class HermitianMatrix {
 public:
  HermitianMatrix() = default;
  explicit HermitianMatrix(std::size_t order) : n_(order), a_(order * order) {}

  std::size_t order() const { return n_; }
  std::complex<double> operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
  /// Sets a(i,j)=z and a(j,i)=conj(z). On the diagonal only the real part is kept.
  void set(std::size_t i, std::size_t j, std::complex<double> z);
  void add(std::size_t i, std::size_t j, std::complex<double> z);

  /// The 2n×2n real symmetric matrix [[A, -B], [B, A]] for H = A + iB.
  SymmetricMatrix real_embedding() const;

 private:
  std::size_t n_ = 0;
  std::vector<std::complex<double>> a_;
};

class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
  RationalMatrix transpose() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> a_;
};

struct EigenDecomposition {
  std::vector<double> values;   // ascending
  std::vector<double> vectors;  // n×n row-major, column k belongs to values[k]

  std::size_t order() const { return values.size(); }
  std::vector<double> vector(std::size_t k) const;
};

/// Cyclic Jacobi. Stops when the off-diagonal Frobenius norm drops below
/// 1e-13·‖M‖_F; throws NumericalError after 100 sweeps. Order 0 is allowed
/// and yields no eigenvalues.
std::vector<double> jacobi_eigenvalues(const SymmetricMatrix& m);
EigenDecomposition jacobi_eigen(const SymmetricMatrix& m);

/// Eigenvalues of a Hermitian matrix via its real 2n×2n embedding, whose
/// spectrum is that of H with every multiplicity doubled. Throws
/// NumericalError if the embedding's eigenvalues do not pair up within 1e-8.
std::vector<double> hermitian_eigenvalues(const HermitianMatrix& m);

/// Exact rank over ℚ. Integer matrices go through fraction-free Bareiss
/// elimination; anything else (or an overflow there) uses rational pivoting.
std::size_t rational_rank(const RationalMatrix& m);

/// Basis of the right kernel {x : Mx = 0} in reduced form: one vector per
/// free column, with a 1 in that column.
std::vector<std::vector<Rational>> rational_nullspace(const RationalMatrix& m);

struct SpectralValue {
  double value = 0.0;
  std::size_t multiplicity = 0;
};

/// Ascending distinct eigenvalues with multiplicities.
struct Spectrum {
  std::vector<SpectralValue> values;
  double tolerance = kMultiplicityTolerance;

  bool empty() const { return values.empty(); }
  /// Σ multiplicities.
  std::size_t total() const;
  /// Each value repeated according to its multiplicity.
  std::vector<double> expanded() const;
  /// Multiplicity of the group containing x (0 if none).
  std::size_t multiplicity_of(double x) const;
};

/// Merge consecutive values closer than tol·max(1,|value|); the group value
/// is the mean. Input must be ascending.
Spectrum group_multiplicities(std::span<const double> ascending, double tol = kMultiplicityTolerance);

}  // namespace qgraph

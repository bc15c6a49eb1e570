// Dense complex linear algebra used throughout the library.
//
// All matrices are small (dimension well below 128), so every routine favors
// robustness over speed. ComplexMatrix is a plain Eigen dynamic matrix; the
// functions below validate their inputs and throw InvalidInput on contract
// violations.
#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace majunc {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

class InvalidInput : public std::invalid_argument {
 public:
  explicit InvalidInput(const std::string& what) : std::invalid_argument(what) {}
};

class NotPsd : public InvalidInput {
 public:
  explicit NotPsd(const std::string& what) : InvalidInput(what) {}
};

inline constexpr double kHermitianTolerance = 1e-10;
inline constexpr double kPsdClampTolerance = 1e-10;

// Shape of a matrix partitioned into square blocks of side block_dim.
struct BlockIndex {
  std::size_t block_rows = 0;
  std::size_t block_cols = 0;
  std::size_t block_dim = 0;

  bool matches(const ComplexMatrix& m) const {
    return static_cast<std::size_t>(m.rows()) == block_rows * block_dim &&
           static_cast<std::size_t>(m.cols()) == block_cols * block_dim;
  }
};

struct HermitianEigen {
  std::vector<double> values;  // descending
  ComplexMatrix vectors;       // column i pairs with values[i]
};

// Throws InvalidInput when m is empty or holds a NaN/Inf entry.
void require_valid(const ComplexMatrix& m, const char* what);

// Singular values in nonincreasing order; min(rows, cols) of them.
std::vector<double> singular_values(const ComplexMatrix& m);

// Largest singular value.
double spectral_norm(const ComplexMatrix& m);

// max_ij |H - H^dagger|_ij
double hermitian_asymmetry(const ComplexMatrix& h);

// Eigen-decomposition of a Hermitian matrix. Eigenvalues descending,
// eigenvectors orthonormal.
HermitianEigen hermitian_eig(const ComplexMatrix& h);

// Principal square root of a positive semidefinite matrix. Eigenvalues in
// [-1e-10, 0) are clamped to zero; anything more negative throws NotPsd.
ComplexMatrix psd_sqrt(const ComplexMatrix& h);

// Hilbert-Schmidt product trace(X^dagger Y).
Complex hs_inner(const ComplexMatrix& x, const ComplexMatrix& y);

ComplexMatrix stack_vertical(std::span<const ComplexMatrix> blocks);

// Submatrix made of the blocks at (row_set x col_set), in ascending index
// order. Indices are 0-based block indices.
ComplexMatrix block_submatrix(const ComplexMatrix& m, const BlockIndex& idx,
                              std::span<const std::size_t> row_set,
                              std::span<const std::size_t> col_set);

// Max entrywise |U^dagger U - I|; square matrices only.
double unitarity_defect(const ComplexMatrix& u);

// Max entrywise |E^dagger E - I| for a matrix whose columns should be
// orthonormal.
double orthonormality_defect(const ComplexMatrix& columns);

double max_abs_difference(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace majunc

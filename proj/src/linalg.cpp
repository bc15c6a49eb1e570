#include "majunc/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace majunc {

void require_valid(const ComplexMatrix& m, const char* what) {
  if (m.rows() == 0 || m.cols() == 0) {
    throw InvalidInput(std::string(what) + ": matrix has a zero dimension");
  }
  if (!m.allFinite()) {
    throw InvalidInput(std::string(what) + ": matrix has non-finite entries");
  }
}

std::vector<double> singular_values(const ComplexMatrix& m) {
  require_valid(m, "singular_values");
  Eigen::JacobiSVD<ComplexMatrix> svd(m);
  const auto& sv = svd.singularValues();
  std::vector<double> out(sv.data(), sv.data() + sv.size());
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

double spectral_norm(const ComplexMatrix& m) {
  return singular_values(m).front();
}

double hermitian_asymmetry(const ComplexMatrix& h) {
  if (h.rows() != h.cols()) {
    throw InvalidInput("hermitian_asymmetry: matrix is not square");
  }
  return (h - h.adjoint()).cwiseAbs().maxCoeff();
}

HermitianEigen hermitian_eig(const ComplexMatrix& h) {
  require_valid(h, "hermitian_eig");
  const double asym = hermitian_asymmetry(h);
  if (asym > kHermitianTolerance) {
    std::ostringstream msg;
    msg << "hermitian_eig: matrix is not Hermitian (max asymmetry " << asym << ")";
    throw InvalidInput(msg.str());
  }
  // Symmetrize so the solver sees an exactly Hermitian input.
  const ComplexMatrix sym = 0.5 * (h + h.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym);
  if (solver.info() != Eigen::Success) {
    throw InvalidInput("hermitian_eig: eigensolver did not converge");
  }
  const auto n = sym.rows();
  HermitianEigen out;
  out.values.resize(static_cast<std::size_t>(n));
  out.vectors.resize(n, n);
  // Eigen returns ascending order.
  for (Eigen::Index i = 0; i < n; ++i) {
    out.values[static_cast<std::size_t>(i)] = solver.eigenvalues()(n - 1 - i);
    out.vectors.col(i) = solver.eigenvectors().col(n - 1 - i);
  }
  return out;
}

ComplexMatrix psd_sqrt(const ComplexMatrix& h) {
  const HermitianEigen eig = hermitian_eig(h);
  const auto n = h.rows();
  Eigen::VectorXd roots(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double lambda = eig.values[static_cast<std::size_t>(i)];
    if (lambda < -kPsdClampTolerance) {
      std::ostringstream msg;
      msg << "psd_sqrt: matrix is not positive semidefinite (eigenvalue " << lambda << ")";
      throw NotPsd(msg.str());
    }
    roots(i) = std::sqrt(std::max(lambda, 0.0));
  }
  const ComplexMatrix& v = eig.vectors;
  ComplexMatrix root = v * roots.cast<Complex>().asDiagonal() * v.adjoint();
  return 0.5 * (root + root.adjoint());
}

Complex hs_inner(const ComplexMatrix& x, const ComplexMatrix& y) {
  if (x.rows() != y.rows() || x.cols() != y.cols()) {
    throw InvalidInput("hs_inner: shape mismatch");
  }
  return (x.adjoint() * y).trace();
}

ComplexMatrix stack_vertical(std::span<const ComplexMatrix> blocks) {
  if (blocks.empty()) {
    throw InvalidInput("stack_vertical: no blocks");
  }
  const auto cols = blocks.front().cols();
  Eigen::Index rows = 0;
  for (const auto& b : blocks) {
    if (b.cols() != cols) {
      throw InvalidInput("stack_vertical: blocks have different column counts");
    }
    rows += b.rows();
  }
  ComplexMatrix out(rows, cols);
  Eigen::Index offset = 0;
  for (const auto& b : blocks) {
    out.middleRows(offset, b.rows()) = b;
    offset += b.rows();
  }
  return out;
}

namespace {

std::vector<std::size_t> sorted_checked(std::span<const std::size_t> set, std::size_t limit,
                                        const char* which) {
  if (set.empty()) {
    throw InvalidInput(std::string("block_submatrix: empty ") + which + " set");
  }
  std::vector<std::size_t> out(set.begin(), set.end());
  std::sort(out.begin(), out.end());
  if (std::adjacent_find(out.begin(), out.end()) != out.end()) {
    throw InvalidInput(std::string("block_submatrix: repeated ") + which + " index");
  }
  if (out.back() >= limit) {
    throw InvalidInput(std::string("block_submatrix: ") + which + " index out of range");
  }
  return out;
}

}  // namespace

ComplexMatrix block_submatrix(const ComplexMatrix& m, const BlockIndex& idx,
                              std::span<const std::size_t> row_set,
                              std::span<const std::size_t> col_set) {
  if (idx.block_dim == 0 || !idx.matches(m)) {
    throw InvalidInput("block_submatrix: block index does not match matrix shape");
  }
  const auto rows = sorted_checked(row_set, idx.block_rows, "row");
  const auto cols = sorted_checked(col_set, idx.block_cols, "column");
  const auto d = static_cast<Eigen::Index>(idx.block_dim);
  ComplexMatrix out(static_cast<Eigen::Index>(rows.size()) * d,
                    static_cast<Eigen::Index>(cols.size()) * d);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < cols.size(); ++c) {
      out.block(static_cast<Eigen::Index>(r) * d, static_cast<Eigen::Index>(c) * d, d, d) =
          m.block(static_cast<Eigen::Index>(rows[r]) * d, static_cast<Eigen::Index>(cols[c]) * d,
                  d, d);
    }
  }
  return out;
}

double unitarity_defect(const ComplexMatrix& u) {
  if (u.rows() != u.cols()) {
    throw InvalidInput("unitarity_defect: matrix is not square");
  }
  return orthonormality_defect(u);
}

double orthonormality_defect(const ComplexMatrix& columns) {
  const ComplexMatrix gram = columns.adjoint() * columns;
  return (gram - ComplexMatrix::Identity(gram.rows(), gram.cols())).cwiseAbs().maxCoeff();
}

double max_abs_difference(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw InvalidInput("max_abs_difference: shape mismatch");
  }
  return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace majunc

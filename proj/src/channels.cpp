#include "majunc/channels.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

namespace majunc {

KrausSet::KrausSet(std::vector<ComplexMatrix> operators) : operators_(std::move(operators)) {
  if (operators_.empty()) {
    throw InvalidInput("KrausSet: at least one operator is required");
  }
  const auto& first = operators_.front();
  if (first.rows() != first.cols()) {
    throw InvalidInput("KrausSet: operators must be square");
  }
  for (const auto& a : operators_) {
    require_valid(a, "KrausSet");
    if (a.rows() != first.rows() || a.cols() != first.cols()) {
      throw InvalidInput("KrausSet: operators have different shapes");
    }
  }
  dim_ = static_cast<std::size_t>(first.rows());
}

KrausSet KrausSet::tpcp(std::vector<ComplexMatrix> operators, double tol) {
  KrausSet k(std::move(operators));
  const TpcpReport report = validate_tpcp(k, tol);
  if (!report.pass) {
    std::ostringstream msg;
    msg << "KrausSet: not trace preserving (max deviation " << report.max_deviation << ")";
    throw InvalidInput(msg.str());
  }
  return k;
}

DensityMatrix::DensityMatrix(ComplexMatrix matrix) : matrix_(std::move(matrix)) {
  require_valid(matrix_, "DensityMatrix");
  if (matrix_.rows() != matrix_.cols()) {
    throw InvalidInput("DensityMatrix: matrix is not square");
  }
  const double asym = hermitian_asymmetry(matrix_);
  if (asym > kHermitianTolerance) {
    std::ostringstream msg;
    msg << "DensityMatrix: not Hermitian (max asymmetry " << asym << ")";
    throw InvalidInput(msg.str());
  }
  const Complex tr = matrix_.trace();
  if (std::abs(tr - Complex(1.0)) > 1e-10) {
    std::ostringstream msg;
    msg << "DensityMatrix: trace " << tr.real() << " is not 1";
    throw InvalidInput(msg.str());
  }
  const double lowest = hermitian_eig(matrix_).values.back();
  if (lowest < -kPsdClampTolerance) {
    std::ostringstream msg;
    msg << "DensityMatrix: negative eigenvalue " << lowest;
    throw InvalidInput(msg.str());
  }
  matrix_ = 0.5 * (matrix_ + matrix_.adjoint());
}

DensityMatrix DensityMatrix::pure(const ComplexVector& psi) {
  const double n = psi.norm();
  if (psi.size() == 0 || !(n > 0.0)) {
    throw InvalidInput("DensityMatrix::pure: zero vector");
  }
  const ComplexVector unit = psi / n;
  return DensityMatrix(unit * unit.adjoint());
}

DensityMatrix DensityMatrix::maximally_mixed(std::size_t dim) {
  const auto n = static_cast<Eigen::Index>(dim);
  return DensityMatrix(ComplexMatrix::Identity(n, n) / static_cast<double>(dim));
}

TpcpReport validate_tpcp(const KrausSet& k, double tol) {
  const auto d = static_cast<Eigen::Index>(k.dim());
  ComplexMatrix sum = ComplexMatrix::Zero(d, d);
  for (const auto& a : k.operators()) {
    sum += a.adjoint() * a;
  }
  TpcpReport report;
  report.max_deviation = (sum - ComplexMatrix::Identity(d, d)).cwiseAbs().maxCoeff();
  report.pass = report.max_deviation <= tol;
  return report;
}

KrausSet pad(const KrausSet& k, std::size_t n) {
  if (n < k.count()) {
    throw InvalidInput("pad: target count is smaller than the current count");
  }
  std::vector<ComplexMatrix> ops = k.operators();
  const auto d = static_cast<Eigen::Index>(k.dim());
  ops.resize(n, ComplexMatrix::Zero(d, d));
  return KrausSet(std::move(ops));
}

namespace {

void require_same_dim(const KrausSet& k, const DensityMatrix& rho, const char* what) {
  if (k.dim_in() != rho.dim()) {
    throw InvalidInput(std::string(what) + ": state dimension does not match channel");
  }
}

}  // namespace

DensityMatrix apply(const KrausSet& k, const DensityMatrix& rho) {
  require_same_dim(k, rho, "apply");
  const auto d = static_cast<Eigen::Index>(k.dim_out());
  ComplexMatrix out = ComplexMatrix::Zero(d, d);
  for (const auto& a : k.operators()) {
    out += a * rho.matrix() * a.adjoint();
  }
  return DensityMatrix(std::move(out));
}

ProbVector probabilities(const KrausSet& k, const DensityMatrix& rho) {
  require_same_dim(k, rho, "probabilities");
  ProbVector p;
  p.reserve(k.count());
  for (const auto& a : k.operators()) {
    const double v = (a.adjoint() * a * rho.matrix()).trace().real();
    p.push_back(std::clamp(v, 0.0, 1.0));
  }
  return p;
}

KrausSet remix(const KrausSet& k, const ComplexMatrix& gamma) {
  const auto n = static_cast<Eigen::Index>(k.count());
  if (gamma.rows() != n || gamma.cols() != n) {
    throw InvalidInput("remix: mixing matrix size does not match operator count");
  }
  const double defect = unitarity_defect(gamma);
  if (defect > 1e-10) {
    std::ostringstream msg;
    msg << "remix: mixing matrix is not unitary (defect " << defect << ")";
    throw InvalidInput(msg.str());
  }
  const auto d = static_cast<Eigen::Index>(k.dim());
  std::vector<ComplexMatrix> ops(k.count(), ComplexMatrix::Zero(d, d));
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      ops[static_cast<std::size_t>(i)] += gamma(i, j) * k[static_cast<std::size_t>(j)];
    }
  }
  return KrausSet(std::move(ops));
}

std::vector<ComplexMatrix> povm(const KrausSet& k) {
  std::vector<ComplexMatrix> out;
  out.reserve(k.count());
  for (const auto& a : k.operators()) {
    ComplexMatrix e = a.adjoint() * a;
    out.push_back(0.5 * (e + e.adjoint()));
  }
  return out;
}

namespace {

ComplexMatrix gaussian_matrix(Eigen::Index rows, Eigen::Index cols, std::mt19937_64& gen) {
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexMatrix g(rows, cols);
  // Fill in row-major order so the sample does not depend on storage layout.
  for (Eigen::Index r = 0; r < rows; ++r) {
    for (Eigen::Index c = 0; c < cols; ++c) {
      const double re = normal(gen);
      const double im = normal(gen);
      g(r, c) = Complex(re, im);
    }
  }
  return g;
}

// Orthonormalizes the columns of a tall matrix, fixing the phase so that R has
// a positive diagonal (this makes square outputs Haar distributed).
ComplexMatrix orthonormal_columns(const ComplexMatrix& g) {
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(g.rows(), g.cols());
  const ComplexMatrix& r = qr.matrixQR();
  for (Eigen::Index i = 0; i < g.cols(); ++i) {
    const Complex diag = r(i, i);
    if (std::abs(diag) > 0.0) {
      q.col(i) *= diag / std::abs(diag);
    }
  }
  return q;
}

}  // namespace

DensityMatrix random_density(std::size_t dim, std::uint64_t seed) {
  if (dim == 0) {
    throw InvalidInput("random_density: dimension must be positive");
  }
  std::mt19937_64 gen(seed);
  const auto n = static_cast<Eigen::Index>(dim);
  const ComplexMatrix g = gaussian_matrix(n, n, gen);
  ComplexMatrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  return DensityMatrix(0.5 * (rho + rho.adjoint()));
}

KrausSet random_kraus_set(std::size_t dim, std::size_t count, std::uint64_t seed) {
  if (dim == 0 || count == 0) {
    throw InvalidInput("random_kraus_set: dimension and count must be positive");
  }
  std::mt19937_64 gen(seed);
  const auto d = static_cast<Eigen::Index>(dim);
  const auto n = static_cast<Eigen::Index>(count);
  const ComplexMatrix v = orthonormal_columns(gaussian_matrix(n * d, d, gen));
  std::vector<ComplexMatrix> ops;
  ops.reserve(count);
  for (Eigen::Index i = 0; i < n; ++i) {
    ops.push_back(v.middleRows(i * d, d));
  }
  return KrausSet::tpcp(std::move(ops));
}

ComplexMatrix random_unitary(std::size_t dim, std::uint64_t seed) {
  if (dim == 0) {
    throw InvalidInput("random_unitary: dimension must be positive");
  }
  std::mt19937_64 gen(seed);
  const auto d = static_cast<Eigen::Index>(dim);
  return orthonormal_columns(gaussian_matrix(d, d, gen));
}

ComplexVector random_pure_state(std::size_t dim, std::uint64_t seed) {
  if (dim == 0) {
    throw InvalidInput("random_pure_state: dimension must be positive");
  }
  std::mt19937_64 gen(seed);
  ComplexVector psi = gaussian_matrix(static_cast<Eigen::Index>(dim), 1, gen).col(0);
  return psi / psi.norm();
}

}  // namespace majunc

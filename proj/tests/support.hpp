// Fixtures and independent oracles shared by the test binaries.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "majunc/channels.hpp"
#include "majunc/linalg.hpp"
#include "majunc/qubit.hpp"

namespace majunc::testing {

inline const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

inline ComplexMatrix diag2(double a, double b) {
  ComplexMatrix m = ComplexMatrix::Zero(2, 2);
  m(0, 0) = a;
  m(1, 1) = b;
  return m;
}

inline KrausSet z_projectors() { return KrausSet::tpcp({diag2(1, 0), diag2(0, 1)}); }

inline KrausSet x_projectors() {
  return qubit::projective_basis(qubit::BlochVector{1.0, 0.0, 0.0});
}

inline KrausSet half_identity_pair() {
  const ComplexMatrix h = ComplexMatrix::Identity(2, 2) * kInvSqrt2;
  return KrausSet::tpcp({h, h});
}

// Four single-qubit Kraus operators:
// A1 = [[0, sqrt a], [0, 0]], A2 = [[0, 0], [sqrt b, 0]],
// A3 = diag(0, sqrt(1-a)), A4 = diag(sqrt(1-b), 0).
inline KrausSet four_kraus(double a, double b) {
  ComplexMatrix a1 = ComplexMatrix::Zero(2, 2);
  a1(0, 1) = std::sqrt(a);
  ComplexMatrix a2 = ComplexMatrix::Zero(2, 2);
  a2(1, 0) = std::sqrt(b);
  return KrausSet::tpcp({a1, a2, diag2(0, std::sqrt(1 - a)), diag2(std::sqrt(1 - b), 0)});
}

// Largest singular value as sqrt of the top eigenvalue of Z^dagger Z, via a
// different Eigen solver path than the library's SVD.
inline double oracle_norm(const ComplexMatrix& z) {
  const ComplexMatrix g = z.adjoint() * z;
  Eigen::ComplexEigenSolver<ComplexMatrix> solver(g);
  double top = 0.0;
  for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
    top = std::max(top, solver.eigenvalues()(i).real());
  }
  return std::sqrt(std::max(top, 0.0));
}

// All k-element subsets of {0..n-1} in lexicographic order.
inline std::vector<std::vector<std::size_t>> subsets_of_size(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k), true);
  do {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < n; ++i) {
      if (pick[i]) s.push_back(i);
    }
    out.push_back(std::move(s));
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return out;
}

inline std::vector<std::vector<std::size_t>> nonempty_subsets(std::size_t n) {
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t k = 1; k <= n; ++k) {
    auto part = subsets_of_size(n, k);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

// Brute-force c_k: builds each block submatrix by explicit index copying.
inline std::vector<double> oracle_ck(const ComplexMatrix& x, std::size_t block_rows,
                                     std::size_t block_cols, std::size_t d) {
  std::vector<double> c(block_rows + block_cols - 1, 0.0);
  for (const auto& rows : nonempty_subsets(block_rows)) {
    for (const auto& cols : nonempty_subsets(block_cols)) {
      ComplexMatrix z(static_cast<Eigen::Index>(rows.size() * d),
                      static_cast<Eigen::Index>(cols.size() * d));
      for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c2 = 0; c2 < cols.size(); ++c2)
          for (std::size_t u = 0; u < d; ++u)
            for (std::size_t v = 0; v < d; ++v)
              z(static_cast<Eigen::Index>(r * d + u), static_cast<Eigen::Index>(c2 * d + v)) =
                  x(static_cast<Eigen::Index>(rows[r] * d + u),
                    static_cast<Eigen::Index>(cols[c2] * d + v));
      const std::size_t k = rows.size() + cols.size() - 1;
      c[k - 1] = std::max(c[k - 1], oracle_norm(z));
    }
  }
  return c;
}

inline ComplexMatrix random_complex(std::size_t rows, std::size_t cols, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::normal_distribution<double> normal;
  ComplexMatrix m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c) m(r, c) = Complex(normal(gen), normal(gen));
  return m;
}

inline std::vector<double> direct_sum(const std::vector<double>& p, const std::vector<double>& q) {
  std::vector<double> out(p);
  out.insert(out.end(), q.begin(), q.end());
  return out;
}

inline std::vector<double> tensor(const std::vector<double>& p, const std::vector<double>& q) {
  std::vector<double> out;
  for (double x : p)
    for (double y : q) out.push_back(x * y);
  return out;
}

inline double binary_shannon_nats(double x) {
  double h = 0.0;
  if (x > 0) h -= x * std::log(x);
  if (x < 1) h -= (1 - x) * std::log(1 - x);
  return h;
}

}  // namespace majunc::testing

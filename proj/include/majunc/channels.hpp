// Quantum operations in operator-sum form.
#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "majunc/linalg.hpp"

namespace majunc {

inline constexpr double kTpcpTolerance = 1e-9;

using ProbVector = std::vector<double>;

// Ordered list of equally shaped square Kraus operators. Construction only
// checks shape; trace preservation is checked by validate_tpcp or enforced by
// KrausSet::tpcp.
class KrausSet {
 public:
  explicit KrausSet(std::vector<ComplexMatrix> operators);

  // Throws InvalidInput unless sum_i A_i^dagger A_i = I within tol.
  static KrausSet tpcp(std::vector<ComplexMatrix> operators, double tol = kTpcpTolerance);

  std::size_t dim() const { return dim_; }
  std::size_t dim_in() const { return dim_; }
  std::size_t dim_out() const { return dim_; }
  std::size_t count() const { return operators_.size(); }
  const std::vector<ComplexMatrix>& operators() const { return operators_; }
  const ComplexMatrix& operator[](std::size_t i) const { return operators_[i]; }

 private:
  std::vector<ComplexMatrix> operators_;
  std::size_t dim_ = 0;
};

class DensityMatrix {
 public:
  explicit DensityMatrix(ComplexMatrix matrix);

  // Rank-one projector onto the normalized vector psi.
  static DensityMatrix pure(const ComplexVector& psi);
  static DensityMatrix maximally_mixed(std::size_t dim);

  std::size_t dim() const { return static_cast<std::size_t>(matrix_.rows()); }
  const ComplexMatrix& matrix() const { return matrix_; }

 private:
  ComplexMatrix matrix_;
};

struct TpcpReport {
  bool pass = false;
  double max_deviation = 0.0;
};

TpcpReport validate_tpcp(const KrausSet& k, double tol = kTpcpTolerance);

// Appends zero operators until the set has n members.
KrausSet pad(const KrausSet& k, std::size_t n);

DensityMatrix apply(const KrausSet& k, const DensityMatrix& rho);

// p_i = trace(A_i^dagger A_i rho), clamped into [0, 1].
ProbVector probabilities(const KrausSet& k, const DensityMatrix& rho);

// Unitary mixing of the operators: A'_i = sum_j gamma_ij A_j.
KrausSet remix(const KrausSet& k, const ComplexMatrix& gamma);

// E_i = A_i^dagger A_i
std::vector<ComplexMatrix> povm(const KrausSet& k);

// Seeded samplers. The same (arguments, seed) always yields identical bits
// on a given toolchain.
DensityMatrix random_density(std::size_t dim, std::uint64_t seed);
KrausSet random_kraus_set(std::size_t dim, std::size_t count, std::uint64_t seed);
ComplexMatrix random_unitary(std::size_t dim, std::uint64_t seed);
ComplexVector random_pure_state(std::size_t dim, std::uint64_t seed);

}  // namespace majunc

// Majorization machinery for pairs of quantum operations.
//
// The central objects are norm sequences: for a block matrix X, c_k is the
// largest spectral norm over all block submatrices with r block rows and r'
// block columns such that r + r' = k + 1. Differences of such a sequence give
// a majorizing vector for the measurement statistics of the two operations.
#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "majunc/channels.hpp"
#include "majunc/linalg.hpp"

namespace majunc {

// Value at which a norm sequence counts as having reached 1.
inline constexpr double kReachedOneTolerance = 1e-12;

enum class SequenceKind {
  TwoOperation,           // c_k of the cross Gram block matrix
  Unitary,                // s_k of a unitary overlap matrix
  SingleOperation,        // subset sums of A_i^dagger A_i
  SingleOperationBlocks,  // block submatrices of C C^dagger for one operation
};

struct NormSequence {
  std::vector<double> values;  // values[k - 1] holds c_k
  SequenceKind kind = SequenceKind::TwoOperation;
};

enum class OmegaFlavor { DirectSum, Tensor, SingleOperation };

// Entries in construction order (successive differences), not sorted.
struct MajorizingVector {
  std::vector<double> entries;
  OmegaFlavor flavor = OmegaFlavor::DirectSum;
};

struct CrossGram {
  ComplexMatrix matrix;
  BlockIndex index;
};

// Cross Gram block matrix X_ij = A_i B_j^dagger. Both sets are zero padded to
// a common count first.
CrossGram cross_gram(const KrausSet& a, const KrausSet& b);

// c_k for k = 1 .. block_rows + block_cols - 1 by exhaustive enumeration of
// block row/column subsets.
NormSequence ck_sequence(const ComplexMatrix& x, const BlockIndex& idx);

// Drops every value after the first one that reaches 1.
NormSequence truncated(NormSequence seq);

// (c_1, c_2 - c_1, ..., c_L - c_{L-1}) with L the first index where c_L
// reaches 1.
MajorizingVector direct_sum_omega(const NormSequence& c);

// Same construction applied to t_k = (1 + c_k)^2 / 4.
MajorizingVector tensor_omega(const NormSequence& c);

struct MajorizationCheck {
  bool holds = false;
  // slack[k] = sum of the k+1 largest y minus sum of the k+1 largest x.
  std::vector<double> slack;
  double min_slack = 0.0;
  double total_difference = 0.0;  // |sum x - sum y|
};

// x is majorized by y (x < y), both padded with zeros to a common length.
MajorizationCheck majorizes(std::span<const double> y, std::span<const double> x,
                            double tol);

struct ExtremumReport {
  double achieved_max = 0.0;  // max over states of the partial probability sum
  double bound = 0.0;         // 1 + ||C_AI C_BJ^dagger||
  double saturation_gap = 0.0;
  ComplexVector maximizer;  // state attaining achieved_max
};

// Maximum over input states of sum_{i in I} p_i + sum_{j in J} q_j together
// with its norm bound. Index sets are 0-based.
ExtremumReport partial_sum_extremum(const KrausSet& a, const KrausSet& b,
                                    std::span<const std::size_t> rows,
                                    std::span<const std::size_t> cols);

// ||C_AI C_BJ^dagger|| for 0-based index sets; C stacks the chosen operators.
double column_product_norm(const KrausSet& a, const KrausSet& b,
                           std::span<const std::size_t> rows,
                           std::span<const std::size_t> cols);

// c~_k = max over k-element subsets S of ||sum_{i in S} A_i^dagger A_i||,
// k = 1 .. count.
NormSequence single_op_ck(const KrausSet& k);

// Literal block variant: c_k sequence of the block matrix with blocks
// A_i A_j^dagger. Reported for comparison only; it is not majorizing in
// general.
NormSequence single_op_ck_blocks(const KrausSet& k);

enum class SingleOpVariant { SubsetSum, Blocks };

MajorizingVector single_op_omega(const KrausSet& k,
                                 SingleOpVariant variant = SingleOpVariant::SubsetSum);

// s_k of a unitary matrix over scalar-entry submatrices, truncated after the
// first value that reaches 1.
NormSequence unitary_sk(const ComplexMatrix& w);

// W_ij = <e_i|f_j> for bases given as orthonormal columns.
ComplexMatrix overlap_unitary(const ComplexMatrix& e, const ComplexMatrix& f);

// Rank-one projectors onto the columns of e.
KrausSet projectors_from_basis(const ComplexMatrix& e);

}  // namespace majunc

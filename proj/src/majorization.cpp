#include "majunc/majorization.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <sstream>

namespace majunc {

namespace {

constexpr std::size_t kMaxEnumeratedBlocks = 20;

std::vector<std::size_t> mask_indices(std::uint32_t mask) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; mask != 0; ++i, mask >>= 1U) {
    if ((mask & 1U) != 0U) {
      out.push_back(i);
    }
  }
  return out;
}

ComplexMatrix stacked_subset(const KrausSet& k, std::span<const std::size_t> set) {
  std::vector<ComplexMatrix> blocks;
  blocks.reserve(set.size());
  for (const std::size_t i : set) {
    if (i >= k.count()) {
      throw InvalidInput("operator index out of range");
    }
    blocks.push_back(k[i]);
  }
  return stack_vertical(blocks);
}

// Successive differences of transform(c_k), stopping at the first c_k that
// reaches 1.
MajorizingVector differences(const NormSequence& c, OmegaFlavor flavor,
                             const std::function<double(double)>& transform) {
  MajorizingVector out;
  out.flavor = flavor;
  double previous = 0.0;
  for (const double value : c.values) {
    const double t = transform(value);
    out.entries.push_back(std::max(t - previous, 0.0));
    previous = t;
    if (value >= 1.0 - kReachedOneTolerance) {
      break;
    }
  }
  return out;
}

}  // namespace

CrossGram cross_gram(const KrausSet& a, const KrausSet& b) {
  if (a.dim() != b.dim()) {
    throw InvalidInput("cross_gram: channels act on different dimensions");
  }
  const std::size_t n = std::max(a.count(), b.count());
  const KrausSet pa = pad(a, n);
  const KrausSet pb = pad(b, n);
  const auto d = static_cast<Eigen::Index>(a.dim());
  CrossGram out;
  out.index = BlockIndex{n, n, a.dim()};
  out.matrix.resize(static_cast<Eigen::Index>(n) * d, static_cast<Eigen::Index>(n) * d);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      out.matrix.block(static_cast<Eigen::Index>(i) * d, static_cast<Eigen::Index>(j) * d, d, d) =
          pa[i] * pb[j].adjoint();
    }
  }
  return out;
}

NormSequence ck_sequence(const ComplexMatrix& x, const BlockIndex& idx) {
  if (idx.block_rows == 0 || idx.block_cols == 0 || idx.block_dim == 0 || !idx.matches(x)) {
    throw InvalidInput("ck_sequence: block index does not match matrix shape");
  }
  if (idx.block_rows > kMaxEnumeratedBlocks || idx.block_cols > kMaxEnumeratedBlocks) {
    throw InvalidInput("ck_sequence: too many blocks for exhaustive enumeration");
  }
  const std::uint32_t row_masks = (1U << idx.block_rows) - 1U;
  const std::uint32_t col_masks = (1U << idx.block_cols) - 1U;
  std::vector<std::vector<std::size_t>> col_sets;
  col_sets.reserve(col_masks);
  for (std::uint32_t cm = 1; cm <= col_masks; ++cm) {
    col_sets.push_back(mask_indices(cm));
  }

  NormSequence seq;
  seq.values.assign(idx.block_rows + idx.block_cols - 1, 0.0);
  for (std::uint32_t rm = 1; rm <= row_masks; ++rm) {
    const auto rows = mask_indices(rm);
    for (const auto& cols : col_sets) {
      const std::size_t k = rows.size() + cols.size() - 1;
      const double norm = spectral_norm(block_submatrix(x, idx, rows, cols));
      seq.values[k - 1] = std::max(seq.values[k - 1], norm);
    }
  }
  return seq;
}

NormSequence truncated(NormSequence seq) {
  const auto it = std::find_if(seq.values.begin(), seq.values.end(),
                               [](double v) { return v >= 1.0 - kReachedOneTolerance; });
  if (it != seq.values.end()) {
    seq.values.erase(std::next(it), seq.values.end());
  }
  return seq;
}

MajorizingVector direct_sum_omega(const NormSequence& c) {
  return differences(c, OmegaFlavor::DirectSum, [](double v) { return v; });
}

MajorizingVector tensor_omega(const NormSequence& c) {
  return differences(c, OmegaFlavor::Tensor,
                     [](double v) { return (1.0 + v) * (1.0 + v) / 4.0; });
}

MajorizationCheck majorizes(std::span<const double> y, std::span<const double> x, double tol) {
  const std::size_t n = std::max(x.size(), y.size());
  std::vector<double> xs(n, 0.0);
  std::vector<double> ys(n, 0.0);
  std::copy(x.begin(), x.end(), xs.begin());
  std::copy(y.begin(), y.end(), ys.begin());
  std::sort(xs.begin(), xs.end(), std::greater<>());
  std::sort(ys.begin(), ys.end(), std::greater<>());

  MajorizationCheck out;
  out.slack.resize(n);
  double sx = 0.0;
  double sy = 0.0;
  out.min_slack = n == 0 ? 0.0 : std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < n; ++k) {
    sx += xs[k];
    sy += ys[k];
    out.slack[k] = sy - sx;
    out.min_slack = std::min(out.min_slack, out.slack[k]);
  }
  out.total_difference = std::abs(sx - sy);
  const bool nonnegative = (n == 0 || (xs.back() >= -tol && ys.back() >= -tol));
  out.holds = nonnegative && out.min_slack >= -tol && out.total_difference <= tol;
  return out;
}

double column_product_norm(const KrausSet& a, const KrausSet& b,
                           std::span<const std::size_t> rows,
                           std::span<const std::size_t> cols) {
  if (a.dim() != b.dim()) {
    throw InvalidInput("column_product_norm: channels act on different dimensions");
  }
  if (rows.empty() || cols.empty()) {
    throw InvalidInput("column_product_norm: index sets must be nonempty");
  }
  return spectral_norm(stacked_subset(a, rows) * stacked_subset(b, cols).adjoint());
}

ExtremumReport partial_sum_extremum(const KrausSet& a, const KrausSet& b,
                                    std::span<const std::size_t> rows,
                                    std::span<const std::size_t> cols) {
  if (rows.empty() || cols.empty()) {
    throw InvalidInput("partial_sum_extremum: index sets must be nonempty");
  }
  if (a.dim() != b.dim()) {
    throw InvalidInput("partial_sum_extremum: channels act on different dimensions");
  }
  const ComplexMatrix ca = stacked_subset(a, rows);
  const ComplexMatrix cb = stacked_subset(b, cols);
  ComplexMatrix g(ca.rows() + cb.rows(), ca.cols());
  g << ca, cb;
  const HermitianEigen eig = hermitian_eig(g.adjoint() * g);

  ExtremumReport out;
  out.achieved_max = eig.values.front();
  out.bound = 1.0 + spectral_norm(ca * cb.adjoint());
  out.saturation_gap = out.bound - out.achieved_max;
  out.maximizer = eig.vectors.col(0);
  return out;
}

NormSequence single_op_ck(const KrausSet& k) {
  const std::size_t n = k.count();
  if (n > kMaxEnumeratedBlocks) {
    throw InvalidInput("single_op_ck: too many operators for exhaustive enumeration");
  }
  const std::vector<ComplexMatrix> effects = povm(k);
  const auto d = static_cast<Eigen::Index>(k.dim());
  NormSequence seq;
  seq.kind = SequenceKind::SingleOperation;
  seq.values.assign(n, 0.0);
  for (std::uint32_t mask = 1; mask < (1U << n); ++mask) {
    ComplexMatrix sum = ComplexMatrix::Zero(d, d);
    for (const std::size_t i : mask_indices(mask)) {
      sum += effects[i];
    }
    const auto size = static_cast<std::size_t>(std::popcount(mask));
    seq.values[size - 1] = std::max(seq.values[size - 1], spectral_norm(sum));
  }
  return seq;
}

NormSequence single_op_ck_blocks(const KrausSet& k) {
  CrossGram gram = cross_gram(k, k);
  NormSequence seq = ck_sequence(gram.matrix, gram.index);
  seq.kind = SequenceKind::SingleOperationBlocks;
  return seq;
}

MajorizingVector single_op_omega(const KrausSet& k, SingleOpVariant variant) {
  const NormSequence c =
      variant == SingleOpVariant::SubsetSum ? single_op_ck(k) : single_op_ck_blocks(k);
  return differences(c, OmegaFlavor::SingleOperation, [](double v) { return v; });
}

NormSequence unitary_sk(const ComplexMatrix& w) {
  require_valid(w, "unitary_sk");
  if (w.rows() != w.cols()) {
    throw InvalidInput("unitary_sk: matrix is not square");
  }
  const double defect = unitarity_defect(w);
  if (defect > 1e-9) {
    std::ostringstream msg;
    msg << "unitary_sk: matrix is not unitary (defect " << defect << ")";
    throw InvalidInput(msg.str());
  }
  const auto d = static_cast<std::size_t>(w.rows());
  NormSequence seq = truncated(ck_sequence(w, BlockIndex{d, d, 1}));
  seq.kind = SequenceKind::Unitary;
  return seq;
}

namespace {

void require_basis(const ComplexMatrix& e, const char* what) {
  require_valid(e, what);
  if (e.rows() != e.cols()) {
    throw InvalidInput(std::string(what) + ": a basis needs as many vectors as the dimension");
  }
  const double defect = orthonormality_defect(e);
  if (defect > 1e-9) {
    std::ostringstream msg;
    msg << what << ": vectors are not orthonormal (defect " << defect << ")";
    throw InvalidInput(msg.str());
  }
}

}  // namespace

ComplexMatrix overlap_unitary(const ComplexMatrix& e, const ComplexMatrix& f) {
  require_basis(e, "overlap_unitary");
  require_basis(f, "overlap_unitary");
  if (e.rows() != f.rows()) {
    throw InvalidInput("overlap_unitary: bases live in different dimensions");
  }
  return e.adjoint() * f;
}

KrausSet projectors_from_basis(const ComplexMatrix& e) {
  require_basis(e, "projectors_from_basis");
  std::vector<ComplexMatrix> ops;
  ops.reserve(static_cast<std::size_t>(e.cols()));
  for (Eigen::Index i = 0; i < e.cols(); ++i) {
    ops.push_back(e.col(i) * e.col(i).adjoint());
  }
  return KrausSet::tpcp(std::move(ops));
}

}  // namespace majunc

#include "majunc/qubit.hpp"

#include <algorithm>
#include <cmath>

#include "majunc/entropy.hpp"

namespace majunc::qubit {

double BlochVector::norm() const { return std::sqrt(x * x + y * y + z * z); }

double BlochVector::dot(const BlochVector& other) const {
  return x * other.x + y * other.y + z * other.z;
}

ComplexMatrix pauli_x() {
  ComplexMatrix m(2, 2);
  m << 0.0, 1.0, 1.0, 0.0;
  return m;
}

ComplexMatrix pauli_y() {
  ComplexMatrix m(2, 2);
  m << 0.0, Complex(0.0, -1.0), Complex(0.0, 1.0), 0.0;
  return m;
}

ComplexMatrix pauli_z() {
  ComplexMatrix m(2, 2);
  m << 1.0, 0.0, 0.0, -1.0;
  return m;
}

ComplexMatrix bloch_operator(const BlochVector& v) {
  return v.x * pauli_x() + v.y * pauli_y() + v.z * pauli_z();
}

namespace {

ComplexMatrix half_shifted(const BlochVector& v, double sign) {
  return 0.5 * (ComplexMatrix::Identity(2, 2) + sign * bloch_operator(v));
}

}  // namespace

KrausSet bloch_pair_channel(const BlochVector& v) {
  if (!(v.norm() <= 1.0 + 1e-12)) {
    throw InvalidInput("bloch_pair_channel: Bloch vector longer than 1");
  }
  return KrausSet::tpcp({psd_sqrt(half_shifted(v, 1.0)), psd_sqrt(half_shifted(v, -1.0))});
}

NormSequence closed_form_ck(const BlochVector& a, const BlochVector& b) {
  const double la = std::min(a.norm(), 1.0);
  const double lb = std::min(b.norm(), 1.0);
  const double overlap = std::abs(a.dot(b));
  const double radicand = (1.0 + overlap) * (1.0 + overlap) - (1.0 - la * la) * (1.0 - lb * lb);
  const double c1 = 0.5 * std::sqrt(1.0 + overlap + std::sqrt(std::max(radicand, 0.0)));
  const double c2 = std::sqrt((1.0 + std::max(la, lb)) / 2.0);
  return NormSequence{{c1, c2, 1.0}, SequenceKind::TwoOperation};
}

KrausSet projective_basis(const BlochVector& m) {
  if (std::abs(m.norm() - 1.0) > 1e-9) {
    throw InvalidInput("projective_basis: Bloch vector must have unit length");
  }
  return KrausSet::tpcp({half_shifted(m, 1.0), half_shifted(m, -1.0)});
}

std::pair<BlochVector, BlochVector> equal_length_pair(double length, double angle) {
  return {BlochVector{0.0, 0.0, length},
          BlochVector{length * std::sin(angle), 0.0, length * std::cos(angle)}};
}

std::vector<CurveRow> figure_curve(double angle, double alpha, const std::vector<double>& b_grid) {
  std::vector<CurveRow> rows;
  rows.reserve(b_grid.size());
  for (const double b : b_grid) {
    if (!(b >= 0.0 && b <= 1.0)) {
      throw InvalidInput("figure_curve: grid values must lie in [0, 1]");
    }
    const auto [va, vb] = equal_length_pair(b, angle);
    const NormSequence c = closed_form_ck(va, vb);
    const MajorizingVector omega = direct_sum_omega(c);
    CurveRow row;
    row.b = b;
    row.majorization_bound = alpha <= 1.0 + kShannonWindow
                                 ? renyi(omega.entries, alpha, LogBase::Two)
                                 : renyi_direct_sum_gt1(omega.entries, alpha, LogBase::Two);
    row.mu_bound = std::max(-2.0 * std::log2(c.values.front()), 0.0);
    rows.push_back(row);
  }
  return rows;
}

std::vector<double> uniform_grid(std::size_t n) {
  if (n < 2) {
    throw InvalidInput("uniform_grid: need at least two points");
  }
  std::vector<double> grid(n);
  for (std::size_t i = 0; i < n; ++i) {
    grid[i] = static_cast<double>(i) / static_cast<double>(n - 1);
  }
  return grid;
}

}  // namespace majunc::qubit

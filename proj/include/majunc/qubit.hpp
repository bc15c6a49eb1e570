// Single-qubit closed forms: two-outcome channels parameterized by a Bloch
// vector, their norm sequences, and the bound curves plotted against the
// Bloch length.
#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "majunc/channels.hpp"
#include "majunc/majorization.hpp"

namespace majunc::qubit {

struct BlochVector {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  double norm() const;
  double dot(const BlochVector& other) const;
};

ComplexMatrix pauli_x();
ComplexMatrix pauli_y();
ComplexMatrix pauli_z();

// v . sigma
ComplexMatrix bloch_operator(const BlochVector& v);

// Two Kraus operators A_+- = sqrt((I +- v.sigma) / 2), the positive
// representative of the pair.
KrausSet bloch_pair_channel(const BlochVector& v);

// c_1, c_2, c_3 from the closed-form expressions.
NormSequence closed_form_ck(const BlochVector& a, const BlochVector& b);

// {(I + m.sigma)/2, (I - m.sigma)/2} for a unit vector m.
KrausSet projective_basis(const BlochVector& m);

// a along z, b in the x-z plane at `angle` from a, both of the given length.
std::pair<BlochVector, BlochVector> equal_length_pair(double length, double angle);

struct CurveRow {
  double b = 0.0;
  double majorization_bound = 0.0;  // bits
  double mu_bound = 0.0;            // bits
};

// Direct-sum bound (the alpha > 1 variant when alpha > 1) and the
// Maassen-Uffink-type bound -2 log2 c_1, per grid point, in grid order.
std::vector<CurveRow> figure_curve(double angle, double alpha, const std::vector<double>& b_grid);

// n points evenly spaced over [0, 1], endpoints included.
std::vector<double> uniform_grid(std::size_t n);

}  // namespace majunc::qubit

#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "majunc/channels.hpp"
#include "majunc/qubit.hpp"
#include "support.hpp"

using namespace majunc;
using namespace majunc::testing;

namespace {

DensityMatrix plus_state() {
  ComplexVector psi(2);
  psi << kInvSqrt2, kInvSqrt2;
  return DensityMatrix::pure(psi);
}

DensityMatrix zero_state() {
  ComplexVector psi(2);
  psi << 1.0, 0.0;
  return DensityMatrix::pure(psi);
}

}  // namespace

TEST_CASE("trace preservation check") {
  auto r = validate_tpcp(KrausSet({ComplexMatrix::Identity(2, 2)}));
  CHECK(r.pass);
  CHECK(r.max_deviation == 0.0);

  CHECK(validate_tpcp(half_identity_pair()).pass);

  r = validate_tpcp(KrausSet({ComplexMatrix::Identity(2, 2), ComplexMatrix::Identity(2, 2)}));
  CHECK_FALSE(r.pass);
  CHECK(r.max_deviation == doctest::Approx(1.0));

  CHECK_THROWS_AS(KrausSet({ComplexMatrix::Identity(2, 2), ComplexMatrix::Identity(3, 3)}),
                  InvalidInput);
  CHECK_THROWS_AS(KrausSet(std::vector<ComplexMatrix>{}), InvalidInput);
  CHECK_THROWS_AS(KrausSet::tpcp({ComplexMatrix::Identity(2, 2), ComplexMatrix::Identity(2, 2)}),
                  InvalidInput);
}

TEST_CASE("density matrix validation") {
  CHECK_THROWS_AS(DensityMatrix(diag2(1, 1)), InvalidInput);
  CHECK_THROWS_AS(DensityMatrix(diag2(1.5, -0.5)), InvalidInput);
  ComplexMatrix skew = diag2(0.5, 0.5);
  skew(0, 1) = 0.1;
  CHECK_THROWS_AS(DensityMatrix{skew}, InvalidInput);
  CHECK_NOTHROW(DensityMatrix::maximally_mixed(3));
}

TEST_CASE("padding with zero operators") {
  const KrausSet id({ComplexMatrix::Identity(2, 2)});
  const KrausSet padded = pad(id, 2);
  REQUIRE(padded.count() == 2);
  CHECK(padded[1].cwiseAbs().maxCoeff() == 0.0);
  CHECK(pad(z_projectors(), 2).count() == 2);
  CHECK_THROWS_AS(pad(z_projectors(), 1), InvalidInput);

  const KrausSet k = random_kraus_set(3, 2, 4);
  const DensityMatrix rho = random_density(3, 5);
  const auto p = probabilities(k, rho);
  const auto pp = probabilities(pad(k, 4), rho);
  REQUIRE(pp.size() == 4);
  CHECK(pp[0] == p[0]);
  CHECK(pp[1] == p[1]);
  CHECK(pp[2] == 0.0);
  CHECK(pp[3] == 0.0);
}

TEST_CASE("channel application") {
  const DensityMatrix rho = random_density(2, 1);
  CHECK(max_abs_difference(apply(KrausSet({ComplexMatrix::Identity(2, 2)}), rho).matrix(),
                           rho.matrix()) < 1e-15);

  CHECK(max_abs_difference(apply(z_projectors(), plus_state()).matrix(),
                           ComplexMatrix::Identity(2, 2) / 2.0) < 1e-15);

  const KrausSet depolarizing = four_kraus(0.5, 0.5);
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    CHECK(max_abs_difference(apply(depolarizing, random_density(2, seed)).matrix(),
                             ComplexMatrix::Identity(2, 2) / 2.0) < 1e-12);
  }

  const KrausSet k = random_kraus_set(3, 3, 77);
  CHECK(std::abs(apply(k, random_density(3, 8)).matrix().trace().real() - 1.0) < 1e-9);
  CHECK_THROWS_AS(apply(k, rho), InvalidInput);
}

TEST_CASE("outcome probabilities") {
  auto p = probabilities(z_projectors(), DensityMatrix::maximally_mixed(2));
  CHECK(p[0] == doctest::Approx(0.5));
  CHECK(p[1] == doctest::Approx(0.5));

  p = probabilities(z_projectors(), zero_state());
  CHECK(p[0] == doctest::Approx(1.0));
  CHECK(p[1] == doctest::Approx(0.0));

  p = probabilities(qubit::bloch_pair_channel({0, 0, 0.5}), DensityMatrix::maximally_mixed(2));
  CHECK(p[0] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(p[1] == doctest::Approx(0.5).epsilon(1e-12));

  CHECK_THROWS_AS(probabilities(z_projectors(), DensityMatrix::maximally_mixed(3)), InvalidInput);
}

TEST_CASE("probabilities decompose over the spectral decomposition of the state") {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const std::size_t d = 2 + seed % 3;
    const KrausSet k = random_kraus_set(d, 1 + seed % 4, seed);
    const DensityMatrix rho = random_density(d, seed + 1000);
    const auto p = probabilities(k, rho);
    double total = 0.0;
    for (double v : p) total += v;
    CHECK(std::abs(total - 1.0) < 1e-9);

    const auto eig = hermitian_eig(rho.matrix());
    std::vector<double> mixed(k.count(), 0.0);
    for (std::size_t l = 0; l < d; ++l) {
      const auto pure = probabilities(
          k, DensityMatrix::pure(eig.vectors.col(static_cast<Eigen::Index>(l))));
      for (std::size_t i = 0; i < k.count(); ++i) mixed[i] += eig.values[l] * pure[i];
    }
    for (std::size_t i = 0; i < k.count(); ++i) CHECK(std::abs(mixed[i] - p[i]) < 1e-9);
  }
}

TEST_CASE("probabilities follow a reordering of the operators") {
  const KrausSet k = random_kraus_set(3, 4, 31);
  const DensityMatrix rho = random_density(3, 32);
  const auto p = probabilities(k, rho);
  std::vector<ComplexMatrix> reversed(k.operators().rbegin(), k.operators().rend());
  const auto pr = probabilities(KrausSet(reversed), rho);
  for (std::size_t i = 0; i < p.size(); ++i) CHECK(std::abs(pr[i] - p[p.size() - 1 - i]) < 1e-15);
}

TEST_CASE("unitary remixing of the Kraus operators") {
  const KrausSet z = z_projectors();
  const KrausSet same = remix(z, ComplexMatrix::Identity(2, 2));
  CHECK(max_abs_difference(same[0], z[0]) == 0.0);

  ComplexMatrix swap(2, 2);
  swap << 0, 1, 1, 0;
  const KrausSet swapped = remix(z, swap);
  CHECK(max_abs_difference(swapped[0], z[1]) == 0.0);
  CHECK(max_abs_difference(swapped[1], z[0]) == 0.0);

  ComplexMatrix hadamard(2, 2);
  hadamard << 1, 1, 1, -1;
  hadamard *= kInvSqrt2;
  const KrausSet mixed = remix(z, hadamard);
  CHECK(max_abs_difference(mixed[0], ComplexMatrix::Identity(2, 2) * kInvSqrt2) < 1e-15);
  CHECK(max_abs_difference(mixed[1], qubit::pauli_z() * kInvSqrt2) < 1e-15);
  const DensityMatrix rho = random_density(2, 3);
  CHECK(max_abs_difference(apply(mixed, rho).matrix(), apply(z, rho).matrix()) < 1e-12);

  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const KrausSet k = random_kraus_set(3, 3, seed);
    const KrausSet r = remix(k, random_unitary(3, seed + 50));
    CHECK(validate_tpcp(r).pass);
    const DensityMatrix s = random_density(3, seed + 99);
    CHECK(max_abs_difference(apply(r, s).matrix(), apply(k, s).matrix()) <= 1e-9);
  }

  CHECK_THROWS_AS(remix(z, 2.0 * ComplexMatrix::Identity(2, 2)), InvalidInput);
  CHECK_THROWS_AS(remix(z, ComplexMatrix::Identity(3, 3)), InvalidInput);
}

TEST_CASE("POVM elements") {
  const auto single = povm(KrausSet({ComplexMatrix::Identity(2, 2)}));
  CHECK(max_abs_difference(single[0], ComplexMatrix::Identity(2, 2)) == 0.0);

  const qubit::BlochVector v{0.3, -0.2, 0.5};
  const auto bloch = povm(qubit::bloch_pair_channel(v));
  const ComplexMatrix plus = 0.5 * (ComplexMatrix::Identity(2, 2) + qubit::bloch_operator(v));
  const ComplexMatrix minus = 0.5 * (ComplexMatrix::Identity(2, 2) - qubit::bloch_operator(v));
  CHECK(max_abs_difference(bloch[0], plus) < 1e-12);
  CHECK(max_abs_difference(bloch[1], minus) < 1e-12);

  const auto e = povm(four_kraus(0.3, 0.6));
  CHECK(max_abs_difference(e[0], diag2(0, 0.3)) < 1e-15);
  CHECK(max_abs_difference(e[1], diag2(0.6, 0)) < 1e-15);
  CHECK(max_abs_difference(e[2], diag2(0, 0.7)) < 1e-15);
  CHECK(max_abs_difference(e[3], diag2(0.4, 0)) < 1e-15);

  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto elems = povm(random_kraus_set(3, 3, seed));
    ComplexMatrix sum = ComplexMatrix::Zero(3, 3);
    for (const auto& m : elems) {
      CHECK(hermitian_asymmetry(m) < 1e-12);
      CHECK(hermitian_eig(m).values.back() > -1e-12);
      sum += m;
    }
    CHECK(max_abs_difference(sum, ComplexMatrix::Identity(3, 3)) < 1e-9);
  }
}

TEST_CASE("seeded random states") {
  CHECK(std::abs(random_density(1, 5).matrix()(0, 0) - Complex(1.0)) < 1e-15);
  const DensityMatrix a = random_density(4, 42);
  const DensityMatrix b = random_density(4, 42);
  CHECK(a.matrix() == b.matrix());
  CHECK(std::abs(a.matrix().trace().real() - 1.0) < 1e-12);
  CHECK_FALSE(random_density(4, 43).matrix() == a.matrix());
}

TEST_CASE("seeded random Kraus sets") {
  const KrausSet single = random_kraus_set(3, 1, 8);
  CHECK(single.count() == 1);
  CHECK(unitarity_defect(single[0]) < 1e-12);

  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    CHECK(validate_tpcp(random_kraus_set(1 + seed % 4, 1 + seed % 5, seed), 1e-9).pass);
  }
  const KrausSet a = random_kraus_set(2, 3, 99);
  const KrausSet b = random_kraus_set(2, 3, 99);
  for (std::size_t i = 0; i < 3; ++i) CHECK(a[i] == b[i]);
}

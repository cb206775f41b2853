// Copyright 2026 The gso authors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

using namespace gso;
using test::max_abs_diff;

TEST_CASE("symplectic form structure") {
  const Matrix s1 = symplectic_form(1);
  Matrix expected(2, 2);
  expected << 0, 1, -1, 0;
  CHECK(max_abs_diff(s1, expected) == 0.0);

  const Matrix s2 = symplectic_form(2);
  CHECK(max_abs_diff(s2.topLeftCorner(2, 2), expected) == 0.0);
  CHECK(max_abs_diff(s2.bottomRightCorner(2, 2), expected) == 0.0);
  CHECK(s2.topRightCorner(2, 2).cwiseAbs().maxCoeff() == 0.0);

  for (int n : {1, 2, 3, 5}) {
    const Matrix s = symplectic_form(n);
    CHECK(max_abs_diff(s * s, -Matrix::Identity(2 * n, 2 * n)) == 0.0);
    CHECK(max_abs_diff(s.transpose(), -s) == 0.0);
    CHECK(max_abs_diff(s.transpose() * s, Matrix::Identity(2 * n, 2 * n)) == 0.0);
  }
  CHECK_THROWS_AS(symplectic_form(0), std::invalid_argument);
}

TEST_CASE("squeezing is the smallest eigenvalue") {
  CHECK(squeezing(CovMatrix::vacuum(3)) == doctest::Approx(1.0).epsilon(1e-14));

  Matrix d(2, 2);
  d << 0.5, 0, 0, 2.0;
  CHECK(squeezing(CovMatrix(1, d)) == doctest::Approx(0.5).epsilon(1e-14));

  Rng rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const PassiveOp r = haar_passive(1, rng);
    Matrix g(2, 2);
    g << 0.3, 0, 0, 4.0;
    const CovMatrix rotated = apply_passive(CovMatrix(1, g), r);
    CHECK(squeezing(rotated) == doctest::Approx(0.3).epsilon(1e-12));
  }
}

TEST_CASE("smallest eigenpair: values, residuals, deterministic sign") {
  Matrix d(2, 2);
  d << 2, 0, 0, 5;
  const EigPair p = smallest_eigenpair(d);
  CHECK(p.value == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(std::abs(p.vector(0)) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(p.vector(0) > 0.0);  // sign rule: largest-magnitude component positive

  // Degenerate input still yields a deterministic unit vector.
  const EigPair tie1 = smallest_eigenpair(Matrix::Identity(4, 4));
  const EigPair tie2 = smallest_eigenpair(Matrix::Identity(4, 4));
  CHECK(tie1.vector == tie2.vector);
  CHECK(tie1.vector.norm() == doctest::Approx(1.0).epsilon(1e-14));

  Rng rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + static_cast<int>(rng.uniform() * 5);
    Matrix a(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) a(i, j) = rng.normal();
    const Matrix sym = symmetrized(a);
    const EigPair q = smallest_eigenpair(sym);
    CHECK((sym * q.vector - q.value * q.vector).norm() <= 1e-12 * norm_scale(sym));
    CHECK(q.vector.norm() == doctest::Approx(1.0).epsilon(1e-12));
    int imax = 0;
    q.vector.cwiseAbs().maxCoeff(&imax);
    CHECK(q.vector(imax) > 0.0);
  }

  Matrix skewed(2, 2);
  skewed << 0, 1, 0, 0;
  CHECK_THROWS_AS(smallest_eigenpair(skewed), std::invalid_argument);
}

TEST_CASE("covariance matrix validity") {
  CHECK(static_cast<bool>(is_valid_cm(Matrix::Identity(2, 2))));
  // Vacuum saturates the uncertainty relation: min eigenvalue of gamma + i sigma is 0.
  CHECK(is_valid_cm(Matrix::Identity(2, 2)).min_eigenvalue ==
        doctest::Approx(0.0).epsilon(1e-12));

  Matrix too_small = 0.5 * Matrix::Identity(2, 2);
  const Validity bad = is_valid_cm(too_small);
  CHECK_FALSE(bad.ok);
  CHECK(bad.min_eigenvalue < -0.4);  // 0.5 I + i sigma has eigenvalue -0.5

  Matrix pure(2, 2);
  pure << 0.5, 0, 0, 2.0;
  CHECK(static_cast<bool>(is_valid_cm(pure)));

  Matrix asym(2, 2);
  asym << 1.0, 0.5, -0.5, 1.0;
  CHECK_FALSE(is_valid_cm(asym).ok);

  CHECK_THROWS_AS(is_valid_cm(Matrix::Identity(3, 3)), std::invalid_argument);
}

TEST_CASE("passivity check distinguishes orthogonal from symplectic") {
  CHECK(static_cast<bool>(is_passive(Matrix::Identity(4, 4))));

  // A reflection is orthogonal but flips the symplectic form.
  Matrix reflect(2, 2);
  reflect << 1, 0, 0, -1;
  const Validity v = is_passive(reflect);
  CHECK_FALSE(v.ok);
  CHECK(v.detail == "not symplectic");

  Matrix stretch(2, 2);
  stretch << 2, 0, 0, 0.5;  // symplectic but not orthogonal
  CHECK_FALSE(is_passive(stretch).ok);
}

TEST_CASE("apply_passive conjugates and preserves spectra") {
  Matrix g(2, 2);
  g << 0.5, 0, 0, 2.0;
  const CovMatrix gamma(1, g);
  CHECK(max_abs_diff(apply_passive(gamma, PassiveOp::identity(1)).m, g) == 0.0);

  const CovMatrix swapped = apply_passive(gamma, rotation_single_mode(M_PI / 2));
  Matrix expected(2, 2);
  expected << 2.0, 0, 0, 0.5;
  CHECK(max_abs_diff(swapped.m, expected) <= 1e-15);

  Rng rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 1 + static_cast<int>(rng.uniform() * 3);
    const CovMatrix state = random_cm(n, rng);
    const PassiveOp k = haar_passive(n, rng);
    const CovMatrix moved = apply_passive(state, k);
    Eigen::SelfAdjointEigenSolver<Matrix> ea(state.m, Eigen::EigenvaluesOnly);
    Eigen::SelfAdjointEigenSolver<Matrix> eb(moved.m, Eigen::EigenvaluesOnly);
    CHECK((ea.eigenvalues() - eb.eigenvalues()).cwiseAbs().maxCoeff() <= 1e-12);
    CHECK(std::abs(squeezing(moved) - squeezing(state)) <= 1e-10);
  }
}

TEST_CASE("passive_mapping sends u to v exactly and lands in the passive group") {
  // u = v: the construction collapses to the identity.
  Vector u(2);
  u << 1.0, 0.0;
  const PassiveOp self = passive_mapping(u, u);
  CHECK((self.m * u - u).norm() <= 1e-14);
  CHECK(static_cast<bool>(is_passive(self.m)));

  // Single mode, e1 to e2: a quarter rotation up to sign.
  Vector e1(2), e2(2);
  e1 << 1, 0;
  e2 << 0, 1;
  const PassiveOp quarter = passive_mapping(e1, e2);
  CHECK((quarter.m * e1 - e2).norm() <= 1e-14);
  CHECK(static_cast<bool>(is_passive(quarter.m)));

  Rng rng(19);
  int checked = 0;
  for (int n : {1, 2, 3, 4}) {
    for (int trial = 0; trial < 250; ++trial) {
      Vector a(2 * n), b(2 * n);
      for (int i = 0; i < 2 * n; ++i) {
        a(i) = rng.normal();
        b(i) = rng.normal();
      }
      a.normalize();
      b.normalize();
      const PassiveOp k = passive_mapping(a, b);
      CHECK((k.m * a - b).norm() <= 1e-10);
      const Validity v = is_passive(k.m);
      CHECK(v.ok);
      CHECK(v.deviation <= 1e-10);
      ++checked;
    }
  }
  CHECK(checked == 1000);

  Vector not_unit(2);
  not_unit << 2.0, 0.0;
  CHECK_THROWS_AS(passive_mapping(not_unit, e1), std::invalid_argument);
}

TEST_CASE("every realified unitary has determinant one") {
  Rng rng(23);
  for (int n : {1, 2, 3}) {
    for (int trial = 0; trial < 20; ++trial) {
      const PassiveOp k = haar_passive(n, rng);
      CHECK(k.m.determinant() == doctest::Approx(1.0).epsilon(1e-9));
    }
  }
}

TEST_CASE("single-mode rotations and their angle") {
  CHECK(max_abs_diff(rotation_single_mode(0.0).m, Matrix::Identity(2, 2)) == 0.0);

  Matrix g(2, 2);
  g << 0.4, 0, 0, 3.0;
  const CovMatrix swapped = apply_passive(CovMatrix(1, g), rotation_single_mode(M_PI / 2));
  CHECK(swapped.m(0, 0) == doctest::Approx(3.0).epsilon(1e-14));
  CHECK(swapped.m(1, 1) == doctest::Approx(0.4).epsilon(1e-14));

  CHECK(angle_of(rotation_single_mode(1.234)) == doctest::Approx(1.234).epsilon(1e-12));
  CHECK(angle_of(rotation_single_mode(5.5)) == doctest::Approx(5.5).epsilon(1e-12));
  CHECK_THROWS_AS(angle_of(PassiveOp::identity(2)), std::invalid_argument);
}

TEST_CASE("symplectic eigenvalues") {
  const Vector vac = symplectic_eigenvalues(Matrix::Identity(6, 6));
  for (int i = 0; i < vac.size(); ++i) CHECK(vac(i) == doctest::Approx(1.0).epsilon(1e-12));

  Matrix pure(2, 2);
  pure << 0.5, 0, 0, 2.0;
  const Vector one = symplectic_eigenvalues(pure);
  CHECK(one.size() == 1);
  CHECK(one(0) == doctest::Approx(1.0).epsilon(1e-12));

  const Vector thermal = symplectic_eigenvalues(2.0 * Matrix::Identity(4, 4));
  CHECK(thermal.size() == 2);
  CHECK(thermal(0) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(thermal(1) == doctest::Approx(2.0).epsilon(1e-12));

  CHECK_THROWS_AS(symplectic_eigenvalues(Matrix::Zero(2, 2)), std::invalid_argument);

  // Invariance under symplectic congruence, passive or not.
  Rng rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 1 + static_cast<int>(rng.uniform() * 3);
    const CovMatrix g = random_cm(n, rng);
    const Matrix s = random_symplectic(n, rng, 0.7);
    const Vector before = symplectic_eigenvalues(g.m);
    const Vector after = symplectic_eigenvalues(symmetrized(s.transpose() * g.m * s));
    CHECK((before - after).cwiseAbs().maxCoeff() <= 1e-9 * norm_scale(g.m));
  }
}

TEST_CASE("validity criteria cross-check: uncertainty relation vs symplectic spectrum") {
  Rng rng(37);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 1 + static_cast<int>(rng.uniform() * 2);
    // Mix of valid states and slightly deflated (invalid) ones.
    CovMatrix g = random_cm(n, rng);
    if (trial % 3 == 0) g = CovMatrix(n, Matrix(0.8 * g.m));
    const bool by_uncertainty = is_valid_cm(g.m).ok;
    const Vector nus = symplectic_eigenvalues(g.m);
    const bool by_spectrum = nus(0) >= 1.0 - 1e-9;
    CHECK(by_uncertainty == by_spectrum);
  }
}

TEST_CASE("realification conventions") {
  // -i I realifies to the symplectic form itself.
  ComplexMatrix minus_i = ComplexMatrix::Zero(2, 2);
  minus_i(0, 0) = std::complex<double>(0, -1);
  minus_i(1, 1) = std::complex<double>(0, -1);
  CHECK(max_abs_diff(realify(minus_i), symplectic_form(2)) == 0.0);

  // Realified action agrees with complex action.
  Rng rng(41);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 1 + static_cast<int>(rng.uniform() * 3);
    const ComplexMatrix u = haar_unitary(n, rng);
    Vector x(2 * n);
    for (int i = 0; i < 2 * n; ++i) x(i) = rng.normal();
    const ComplexVector via_complex = u * complexify(x);
    const ComplexVector via_real = complexify(realify(u) * x);
    CHECK((via_complex - via_real).norm() <= 1e-12);
  }
}

TEST_CASE("partial transpose of the second half of the modes") {
  Rng rng(43);
  const CovMatrix g = random_cm(2, rng);
  const Matrix pt = partial_transpose_second_half(g.m);
  // Involution.
  CHECK(max_abs_diff(partial_transpose_second_half(pt), g.m) == 0.0);
  // Only entries coupling P2 to anything else change sign.
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      const bool flips = (i == 3) != (j == 3);
      CHECK(pt(i, j) == (flips ? -g.m(i, j) : g.m(i, j)));
    }
  }
  CHECK_THROWS_AS(partial_transpose_second_half(Matrix::Identity(2, 2)),
                  std::invalid_argument);
}

TEST_CASE("generators produce valid objects and deterministic streams") {
  Rng a1 = fork_rng(5, 100);
  Rng a2 = fork_rng(5, 100);
  Rng b = fork_rng(5, 101);
  CHECK(a1() == a2());
  CHECK(a1() != b());

  Rng rng(47);
  for (int trial = 0; trial < 15; ++trial) {
    const int n = 1 + static_cast<int>(rng.uniform() * 3);
    CHECK(static_cast<bool>(is_passive(haar_passive(n, rng).m)));

    const Matrix s = random_symplectic(n, rng);
    const Matrix sigma = symplectic_form(n);
    CHECK(max_abs_diff(s.transpose() * sigma * s, sigma) <= 1e-10);

    CHECK(static_cast<bool>(is_valid_cm(random_cm(n, rng).m)));

    const double target = 0.2 + 0.6 * rng.uniform();
    const CovMatrix pinned = random_cm_with_squeezing(n, target, rng);
    CHECK(static_cast<bool>(is_valid_cm(pinned.m)));
    CHECK(squeezing(pinned) == doctest::Approx(target).epsilon(1e-12));
  }
}

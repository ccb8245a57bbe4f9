#include <doctest.h>

#include "sudec/matcore.hpp"

#include <random>

using namespace sudec;

namespace {

std::mt19937 rng(12345);

Mat random_matrix(int n) {
  std::normal_distribution<double> g;
  Mat m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = Complex(g(rng), g(rng));
  return m;
}

Mat random_hermitian(int n) {
  Mat m = random_matrix(n);
  return Mat((m + Mat(m.adjoint())) / 2.0);
}

Mat random_unitary(int n) {
  Eigen::HouseholderQR<Mat> qr(random_matrix(n));
  Mat q = qr.householderQ();
  return q;
}

}  // namespace

TEST_CASE("kron identity and diag cases") {
  CHECK((kron(identity(2), identity(3)) - identity(6)).norm() == doctest::Approx(0.0));
  Mat d2(2, 2);
  d2 << 1, 0, 0, -1;
  Mat expect = Mat::Zero(4, 4);
  expect.diagonal() << 1, -1, -1, 1;
  CHECK((kron(d2, d2) - expect).norm() == doctest::Approx(0.0));
}

TEST_CASE("kron quadruple-loop oracle on random 2x2") {
  Mat a = random_matrix(2), b = random_matrix(2);
  Mat k = kron(a, b);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int p = 0; p < 2; ++p)
        for (int q = 0; q < 2; ++q)
          CHECK(std::abs(k(2 * i + p, 2 * j + q) - a(i, j) * b(p, q)) < 1e-14);
}

TEST_CASE("kron associativity on integer inputs") {
  Mat a(2, 2), b(2, 2), c(2, 2);
  a << 1, 2, 3, 4;
  b << 0, 1, -1, 2;
  c << 5, -2, 1, 1;
  CHECK((kron(kron(a, b), c) - kron(a, kron(b, c))).norm() == 0.0);
}

TEST_CASE("expm_skew basics") {
  Mat h = random_hermitian(3);
  CHECK((expm_skew(h, 0.0) - identity(3)).norm() < 1e-14);

  Mat d(2, 2);
  d << 1, 0, 0, 2;
  Mat u = expm_skew(d, M_PI);
  CHECK(std::abs(u(0, 0) - std::exp(Complex(0, -M_PI))) < 1e-14);
  CHECK(std::abs(u(1, 1) - std::exp(Complex(0, -2 * M_PI))) < 1e-14);

  CHECK_THROWS_AS(expm_skew(random_matrix(3), 1.0), NonHermitianInput);
}

TEST_CASE("expm_skew against truncated Taylor series") {
  Mat h = pauli(1) * 0.7 + pauli(3) * 0.3;
  double t = 0.9;
  Mat series = Mat::Zero(2, 2);
  Mat term = identity(2);
  for (int k = 0; k < 20; ++k) {
    series += term;
    term = Mat(term * (Complex(0, -t) * h) / (k + 1.0));
  }
  CHECK((expm_skew(h, t) - series).norm() < 1e-9);
}

TEST_CASE("expm_skew group property and unitarity") {
  Mat h = random_hermitian(4);
  Mat u = expm_skew(h, 0.4) * expm_skew(h, 0.6);
  CHECK((u - expm_skew(h, 1.0)).norm() < 1e-9);
  CHECK(is_unitary(expm_skew(h, 123.4), 1e-10));
}

TEST_CASE("eig_unitary identity and reconstruction") {
  auto eig = eig_unitary(identity(3));
  for (double th : eig.phases) CHECK(std::abs(th) < 1e-12);

  Mat u = random_unitary(5);
  auto e = eig_unitary(u);
  Mat d = Mat::Zero(5, 5);
  for (int k = 0; k < 5; ++k) d(k, k) = std::exp(Complex(0, e.phases[static_cast<size_t>(k)]));
  CHECK((e.vectors * d * e.vectors.adjoint() - u).norm() < 1e-9);
  CHECK(is_unitary(e.vectors, 1e-10));
  for (double th : e.phases) {
    CHECK(th > -M_PI - 1e-12);
    CHECK(th <= M_PI + 1e-12);
  }
}

TEST_CASE("eig_unitary conjugation invariance of the phase multiset") {
  Mat a3 = Mat::Zero(3, 3);
  a3(0, 0) = 1;
  a3(1, 1) = std::exp(Complex(0, 2 * M_PI / 3));
  a3(2, 2) = std::exp(Complex(0, -2 * M_PI / 3));
  Mat v = random_unitary(3);
  auto sorted_phases = [](const Mat& u) {
    auto p = eig_unitary(u).phases;
    std::sort(p.begin(), p.end());
    return p;
  };
  auto pa = sorted_phases(a3);
  auto pb = sorted_phases(Mat(v * a3 * v.adjoint()));
  for (size_t i = 0; i < 3; ++i) CHECK(std::abs(pa[i] - pb[i]) < 1e-9);
  std::vector<double> expect{-2 * M_PI / 3, 0.0, 2 * M_PI / 3};
  for (size_t i = 0; i < 3; ++i) CHECK(std::abs(pa[i] - expect[i]) < 1e-12);
}

TEST_CASE("sym_power identity dimension") {
  Mat s = sym_power(identity(3), 4);
  CHECK(s.rows() == sym_dim(3, 4));
  CHECK((s - identity(s.rows())).norm() < 1e-12);
}

TEST_CASE("sym_power of a z-rotation is the spin-j phase ladder") {
  double theta = 0.77;
  Mat u = su2_rotation({0, 0, 1}, theta);
  int two_j = 5;
  Mat s = sym_power(u, two_j);
  // Ascending lex basis (k1,k2) = (idx, n-idx): m = (k1-k2)/2 runs -j..j.
  for (int idx = 0; idx <= two_j; ++idx) {
    double m = -(two_j / 2.0) + idx;
    CHECK(std::abs(s(idx, idx) - std::exp(Complex(0, -theta * m))) < 1e-12);
  }
}

TEST_CASE("sym_power trace equals complete homogeneous polynomial of eigenvalues") {
  for (int n = 0; n <= 6; ++n) {
    Mat u = random_unitary(3);
    auto lam = unitary_eigenvalues(u);
    // Brute-force monomial expansion of h_n over 3 eigenvalues.
    Complex h = 0;
    for (int a = 0; a <= n; ++a)
      for (int b = 0; a + b <= n; ++b) {
        int c = n - a - b;
        h += std::pow(lam[0], a) * std::pow(lam[1], b) * std::pow(lam[2], c);
      }
    CHECK(std::abs(sym_power(u, n).trace() - h) < 1e-9 * sym_dim(3, n));
  }
}

TEST_CASE("sym_power is a homomorphism and preserves unitarity") {
  Mat a = random_unitary(3), b = random_unitary(3);
  Mat sa = sym_power(a, 3), sb = sym_power(b, 3);
  CHECK((sym_power(Mat(a * b), 3) - sa * sb).norm() < 1e-9);
  CHECK(is_unitary(sa, 1e-10));
}

TEST_CASE("collective_op matches the derivative of sym_power") {
  Mat h = random_hermitian(3);
  int n = 4;
  Mat big = collective_op(h, n);
  CHECK(is_hermitian(big, 1e-10));
  Mat u = expm_skew(h, 0.3);
  CHECK((sym_power(u, n) - expm_skew(big, 0.3)).norm() < 1e-9);
}

TEST_CASE("equal_up_to_phase") {
  Mat u = random_unitary(3);
  Complex w = std::exp(Complex(0, 2 * M_PI / 3));
  CHECK(equal_up_to_phase(Mat(w * u), u, 1e-9));
  Mat d = identity(3);
  d(2, 2) = -1;
  CHECK_FALSE(equal_up_to_phase(identity(3), d, 1e-9));
  CHECK(equal_up_to_phase(Mat(w * identity(3)), identity(3), 1e-9));
}

TEST_CASE("principal_log_generator round trip") {
  Mat u = random_unitary(4);
  Mat h = principal_log_generator(u);
  CHECK(is_hermitian(h, 1e-9));
  CHECK((expm_skew(h, 1.0) - u).norm() < 1e-9);
}

TEST_CASE("spin operators obey su(2) commutation") {
  for (int two_j : {1, 2, 4}) {
    auto [sx, sy, sz] = spin_ops(two_j);
    Mat comm = sx * sy - sy * sx;
    CHECK((comm - Complex(0, 1) * sz).norm() < 1e-12);
    double j = two_j / 2.0;
    Mat casimir = sx * sx + sy * sy + sz * sz;
    CHECK((casimir - j * (j + 1) * identity(two_j + 1)).norm() < 1e-12);
  }
}

TEST_CASE("gell-mann normalization") {
  for (int a = 1; a <= 8; ++a) {
    for (int b = 1; b <= 8; ++b) {
      Complex tr = (gell_mann(a) * gell_mann(b)).trace();
      CHECK(std::abs(tr - (a == b ? 2.0 : 0.0)) < 1e-12);
    }
    CHECK(std::abs(gell_mann(a).trace()) < 1e-12);
  }
}

TEST_CASE("su2_lift reproduces the rotation on spin-1") {
  Eigen::Vector3d axis(0.3, -1.2, 0.5);
  double th = 1.1;
  Mat r = so3_rotation(axis, th);
  Mat u = su2_lift(r);
  CHECK(is_unitary(u, 1e-12));
  // The lift acts on vectors through the adjoint action: U sigma.v U^dag = sigma.(Rv).
  Eigen::Vector3d v(1, 2, -1);
  Mat sv = v(0) * pauli(1) + v(1) * pauli(2) + v(2) * pauli(3);
  Eigen::Vector3d rv = r.real() * v;
  Mat srv = rv(0) * pauli(1) + rv(1) * pauli(2) + rv(2) * pauli(3);
  CHECK((u * sv * u.adjoint() - srv).norm() < 1e-10);
  CHECK(std::abs(rotation_angle(r) - th) < 1e-12);
}

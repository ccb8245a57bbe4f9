#include "sudec/matcore.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <numeric>
#include <unordered_map>

namespace sudec {

namespace {

constexpr Complex kI{0.0, 1.0};

// Packs a multi-index into an int64 key (8 bits per slot, enough for n <= 255).
long pack_index(const std::vector<int>& k) {
  long key = 0;
  for (int v : k) key = (key << 8) | v;
  return key;
}

}  // namespace

UnitaryMatrix::UnitaryMatrix(Mat u, double tol) : u_(std::move(u)) {
  if (u_.rows() != u_.cols() || !is_unitary(u_, tol))
    throw NotUnitary("matrix is not unitary within tolerance");
}

HermitianMatrix::HermitianMatrix(Mat h, double tol) : h_(std::move(h)) {
  if (h_.rows() != h_.cols() || !is_hermitian(h_, tol))
    throw NonHermitianInput("matrix is not Hermitian within tolerance");
}

double frobenius(const Mat& m) { return m.norm(); }

bool is_unitary(const Mat& u, double tol) {
  if (u.rows() != u.cols()) return false;
  Mat d = u.adjoint() * u - Mat::Identity(u.rows(), u.cols());
  return d.norm() <= tol * static_cast<double>(u.rows());
}

bool is_hermitian(const Mat& h, double tol) {
  if (h.rows() != h.cols()) return false;
  return (h - Mat(h.adjoint())).norm() <= tol * static_cast<double>(h.rows());
}

Mat identity(Eigen::Index n) { return Mat::Identity(n, n); }

Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Mat kron_power(const Mat& a, int n) {
  Mat out = Mat::Identity(1, 1);
  for (int i = 0; i < n; ++i) out = kron(out, a);
  return out;
}

Mat expm_skew(const Mat& h, double t) {
  if (h.rows() != h.cols()) throw NonHermitianInput("expm_skew: matrix not square");
  if (!is_hermitian(h, 1e-10))
    throw NonHermitianInput("expm_skew: matrix not Hermitian within tolerance");
  Eigen::SelfAdjointEigenSolver<Mat> es(h);
  Vec phases(h.rows());
  for (Eigen::Index k = 0; k < h.rows(); ++k)
    phases(k) = std::exp(-kI * t * es.eigenvalues()(k));
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

UnitaryEig eig_unitary(const Mat& u) {
  // Schur of a normal matrix: T is diagonal up to roundoff, Q exactly unitary.
  Eigen::ComplexSchur<Mat> schur(u, /*computeU=*/true);
  UnitaryEig out;
  out.vectors = schur.matrixU();
  out.phases.resize(static_cast<size_t>(u.rows()));
  for (Eigen::Index k = 0; k < u.rows(); ++k)
    out.phases[static_cast<size_t>(k)] = std::arg(schur.matrixT()(k, k));
  return out;
}

std::vector<Complex> unitary_eigenvalues(const Mat& u) {
  auto eig = eig_unitary(u);
  std::vector<Complex> vals;
  vals.reserve(eig.phases.size());
  for (double th : eig.phases) vals.push_back(std::exp(kI * th));
  return vals;
}

std::vector<std::vector<int>> sym_basis(int d, int n) {
  std::vector<std::vector<int>> basis;
  std::vector<int> k(static_cast<size_t>(d), 0);
  // Ascending lexicographic enumeration of compositions of n into d parts.
  std::function<void(int, int)> rec = [&](int pos, int rem) {
    if (pos == d - 1) {
      k[static_cast<size_t>(pos)] = rem;
      basis.push_back(k);
      return;
    }
    for (int v = 0; v <= rem; ++v) {
      k[static_cast<size_t>(pos)] = v;
      rec(pos + 1, rem - v);
    }
  };
  rec(0, n);
  return basis;
}

long sym_dim(int d, int n) {
  long num = 1, den = 1;
  for (int i = 1; i < d; ++i) {
    num *= n + i;
    den *= i;
  }
  return num / den;
}

Mat sym_power(const Mat& m, int n) {
  const int d = static_cast<int>(m.rows());
  auto basis = sym_basis(d, n);
  const size_t dim = basis.size();
  std::unordered_map<long, size_t> rank;
  for (size_t i = 0; i < dim; ++i) rank[pack_index(basis[i])] = i;

  std::vector<double> log_fact(static_cast<size_t>(n) + 1, 0.0);
  for (int i = 2; i <= n; ++i)
    log_fact[static_cast<size_t>(i)] = log_fact[static_cast<size_t>(i) - 1] + std::log(i);
  auto log_multi = [&](const std::vector<int>& k) {
    double s = 0;
    for (int v : k) s += log_fact[static_cast<size_t>(v)];
    return s;  // log(k!)
  };

  Mat out = Mat::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (size_t col = 0; col < dim; ++col) {
    // Expand prod_i (sum_j m(j,i) x_j)^{k_i} term by term.
    std::unordered_map<long, Complex> poly;
    std::vector<int> zero(static_cast<size_t>(d), 0);
    poly[pack_index(zero)] = 1.0;
    std::vector<int> idx(static_cast<size_t>(d));
    for (int i = 0; i < d; ++i) {
      for (int rep = 0; rep < basis[col][static_cast<size_t>(i)]; ++rep) {
        std::unordered_map<long, Complex> next;
        for (const auto& [key, c] : poly) {
          long rem = key;
          for (int q = d - 1; q >= 0; --q) {
            idx[static_cast<size_t>(q)] = static_cast<int>(rem & 0xff);
            rem >>= 8;
          }
          for (int j = 0; j < d; ++j) {
            if (m(j, i) == 0.0) continue;
            idx[static_cast<size_t>(j)]++;
            next[pack_index(idx)] += c * m(j, i);
            idx[static_cast<size_t>(j)]--;
          }
        }
        poly.swap(next);
      }
    }
    const double lcol = log_multi(basis[col]);
    for (const auto& [key, c] : poly) {
      size_t row = rank.at(key);
      double scale = std::exp(0.5 * (log_multi(basis[row]) - lcol));
      out(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) = c * scale;
    }
  }
  return out;
}

Mat collective_op(const Mat& a, int n) {
  const int d = static_cast<int>(a.rows());
  auto basis = sym_basis(d, n);
  const size_t dim = basis.size();
  std::unordered_map<long, size_t> rank;
  for (size_t i = 0; i < dim; ++i) rank[pack_index(basis[i])] = i;

  Mat out = Mat::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (size_t col = 0; col < dim; ++col) {
    const auto& k = basis[col];
    Complex diag = 0;
    for (int i = 0; i < d; ++i) diag += a(i, i) * static_cast<double>(k[static_cast<size_t>(i)]);
    out(static_cast<Eigen::Index>(col), static_cast<Eigen::Index>(col)) = diag;
    for (int i = 0; i < d; ++i) {
      for (int j = 0; j < d; ++j) {
        if (i == j || k[static_cast<size_t>(j)] == 0 || a(i, j) == 0.0) continue;
        auto kp = k;
        kp[static_cast<size_t>(j)]--;
        kp[static_cast<size_t>(i)]++;
        double amp = std::sqrt(static_cast<double>(k[static_cast<size_t>(j)]) *
                               (static_cast<double>(k[static_cast<size_t>(i)]) + 1.0));
        out(static_cast<Eigen::Index>(rank.at(pack_index(kp))),
            static_cast<Eigen::Index>(col)) += a(i, j) * amp;
      }
    }
  }
  return out;
}

bool equal_up_to_phase(const Mat& a, const Mat& b, double tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionMismatch("equal_up_to_phase: shape mismatch");
  Eigen::Index bi = 0, bj = 0;
  double best = -1;
  for (Eigen::Index i = 0; i < b.rows(); ++i)
    for (Eigen::Index j = 0; j < b.cols(); ++j)
      if (std::abs(b(i, j)) > best) {
        best = std::abs(b(i, j));
        bi = i;
        bj = j;
      }
  if (best <= 0) return a.norm() <= tol;
  Complex ratio = a(bi, bj) / b(bi, bj);
  double mag = std::abs(ratio);
  if (mag == 0.0) return false;
  Complex phase = ratio / mag;
  return (a - phase * b).norm() <= tol;
}

Mat principal_log_generator(const Mat& u) {
  auto eig = eig_unitary(u);
  Mat h = Mat::Zero(u.rows(), u.cols());
  for (Eigen::Index k = 0; k < u.rows(); ++k) {
    // u = exp(-iH): eigenvalue e^{i theta} corresponds to H-eigenvalue -theta.
    h -= eig.phases[static_cast<size_t>(k)] * eig.vectors.col(k) * eig.vectors.col(k).adjoint();
  }
  return Mat((h + Mat(h.adjoint())) / 2.0);
}

Mat pauli(int i) {
  Mat m = Mat::Zero(2, 2);
  switch (i) {
    case 1: m << 0, 1, 1, 0; break;
    case 2: m << 0, -kI, kI, 0; break;
    case 3: m << 1, 0, 0, -1; break;
    default: throw std::invalid_argument("pauli: index must be 1..3");
  }
  return m;
}

Mat gell_mann(int a) {
  Mat m = Mat::Zero(3, 3);
  const double s3 = 1.0 / std::sqrt(3.0);
  switch (a) {
    case 1: m(0, 1) = m(1, 0) = 1; break;
    case 2: m(0, 1) = -kI; m(1, 0) = kI; break;
    case 3: m(0, 0) = 1; m(1, 1) = -1; break;
    case 4: m(0, 2) = m(2, 0) = 1; break;
    case 5: m(0, 2) = -kI; m(2, 0) = kI; break;
    case 6: m(1, 2) = m(2, 1) = 1; break;
    case 7: m(1, 2) = -kI; m(2, 1) = kI; break;
    case 8: m(0, 0) = s3; m(1, 1) = s3; m(2, 2) = -2 * s3; break;
    default: throw std::invalid_argument("gell_mann: index must be 1..8");
  }
  return m;
}

std::array<Mat, 3> spin_ops(int two_j) {
  const int dim = two_j + 1;
  const double j = two_j / 2.0;
  Mat sz = Mat::Zero(dim, dim), sp = Mat::Zero(dim, dim);
  for (int k = 0; k < dim; ++k) {
    double m = j - k;  // basis ordered |j>, |j-1>, ..., |-j>
    sz(k, k) = m;
    if (k + 1 < dim) {
      double mlow = j - (k + 1);
      sp(k, k + 1) = std::sqrt(j * (j + 1) - mlow * (mlow + 1));
    }
  }
  Mat sm = sp.adjoint();
  Mat sx = (sp + sm) / 2.0;
  Mat sy = (sp - sm) / (2.0 * kI);
  return {sx, sy, sz};
}

Mat su2_rotation(const Eigen::Vector3d& axis, double theta) {
  Eigen::Vector3d n = axis.normalized();
  Mat gen = (n(0) * pauli(1) + n(1) * pauli(2) + n(2) * pauli(3)) / 2.0;
  return expm_skew(gen, theta);
}

Mat so3_rotation(const Eigen::Vector3d& axis, double theta) {
  Eigen::Matrix3d r = Eigen::AngleAxisd(theta, axis.normalized()).toRotationMatrix();
  return r.cast<Complex>();
}

double rotation_angle(const Mat& rotation) {
  double c = (rotation.trace().real() - 1.0) / 2.0;
  return std::acos(std::clamp(c, -1.0, 1.0));
}

Mat su2_lift(const Mat& rotation) {
  Eigen::Matrix3d r = rotation.real();
  Eigen::AngleAxisd aa(r);
  return su2_rotation(aa.axis(), aa.angle());
}

}  // namespace sudec

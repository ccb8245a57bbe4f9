#pragma once

#include <Eigen/Dense>
#include <array>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace sudec {

using Complex = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;
using RealVec = Eigen::VectorXd;

inline constexpr double kDefaultTol = 1e-9;

struct NonHermitianInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotUnitary : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DimensionMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Square matrix checked to be unitary on construction (||U^dag U - 1||_F <= tol * dim).
class UnitaryMatrix {
public:
  explicit UnitaryMatrix(Mat u, double tol = 1e-10);
  const Mat& mat() const { return u_; }
  Eigen::Index dim() const { return u_.rows(); }

private:
  Mat u_;
};

/// Square matrix checked to be Hermitian on construction (||H - H^dag||_F <= tol * dim).
class HermitianMatrix {
public:
  explicit HermitianMatrix(Mat h, double tol = 1e-10);
  const Mat& mat() const { return h_; }
  Eigen::Index dim() const { return h_.rows(); }

private:
  Mat h_;
};

double frobenius(const Mat& m);
bool is_unitary(const Mat& u, double tol = 1e-10);
bool is_hermitian(const Mat& h, double tol = 1e-10);

Mat identity(Eigen::Index n);

/// Kronecker product, row-major index convention: (ab)(ik,jl) = a(i,j) b(k,l).
Mat kron(const Mat& a, const Mat& b);

/// n-fold Kronecker power.
Mat kron_power(const Mat& a, int n);

/// exp(-i t H) for Hermitian H, via eigendecomposition. Eigenvalues are mapped
/// to exact unit-modulus phases so the result stays unitary under long products.
Mat expm_skew(const Mat& h, double t);

/// Eigendecomposition of a unitary. Phases lie in (-pi, pi], eigenvectors are
/// orthonormal columns (Schur of a normal matrix), and V diag(e^{i theta}) V^dag
/// reconstructs the input.
struct UnitaryEig {
  std::vector<double> phases;
  Mat vectors;
};
UnitaryEig eig_unitary(const Mat& u);

/// Eigenvalues of a unitary as complex numbers (unit modulus), unordered.
std::vector<Complex> unitary_eigenvalues(const Mat& u);

/// Multi-indices (k_1,...,k_d) with sum n, in ascending lexicographic order.
/// This is the basis ordering used by sym_power and collective_op.
std::vector<std::vector<int>> sym_basis(int d, int n);

/// Dimension of the degree-n symmetric subspace of C^d: C(n+d-1, d-1).
long sym_dim(int d, int n);

/// Induced action of a d x d matrix on the degree-n symmetric subspace, in the
/// monomial basis x^k sqrt(n!/k!) ordered by sym_basis. Maps unitaries to
/// unitaries and is a homomorphism: sym_power(ab, n) = sym_power(a, n) sym_power(b, n).
Mat sym_power(const Mat& m, int n);

/// One-body collective operator induced on the degree-n symmetric subspace,
/// i.e. the derivative of sym_power(exp(-i t A), n) at t = 0 divided by -i.
Mat collective_op(const Mat& a, int n);

/// True iff a = e^{i phi} b for some phase, within Frobenius tolerance tol.
/// The candidate phase is read off the largest-magnitude entry of b.
bool equal_up_to_phase(const Mat& a, const Mat& b, double tol = kDefaultTol);

/// Principal logarithm generator of a unitary: returns Hermitian H with
/// u = exp(-i H) and eigenphases of H in (-pi, pi].
Mat principal_log_generator(const Mat& u);

// Operator zoo ---------------------------------------------------------------

/// Pauli matrices; index 1..3 = x, y, z.
Mat pauli(int i);

/// Gell-Mann matrices lambda_1..lambda_8, normalized Tr[l_a l_b] = 2 delta_ab.
Mat gell_mann(int a);

/// Spin operators (Sx, Sy, Sz) for spin j (dimension 2j+1), hbar = 1.
/// two_j is 2j, so half-integer spins are representable.
std::array<Mat, 3> spin_ops(int two_j);

/// SU(2) element exp(-i theta n.sigma/2); axis is normalized internally.
Mat su2_rotation(const Eigen::Vector3d& axis, double theta);

/// SO(3) rotation matrix for angle theta about axis (3x3 real orthogonal, as complex).
Mat so3_rotation(const Eigen::Vector3d& axis, double theta);

/// An SU(2) lift of a 3x3 rotation matrix (defined up to sign; either choice
/// induces the same operators on integer-spin representations).
Mat su2_lift(const Mat& rotation);

/// Rotation angle in [0, pi] of a 3x3 rotation matrix, from its trace.
double rotation_angle(const Mat& rotation);

}  // namespace sudec

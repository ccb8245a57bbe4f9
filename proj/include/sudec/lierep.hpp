#pragma once

#include "sudec/matcore.hpp"

#include <map>
#include <set>
#include <vector>

namespace sudec {

/// Label of an SU(d) irrep by its d-1 non-negative Dynkin coefficients.
/// For SU(2) the single coefficient is 2L (twice the spin).
struct DynkinLabel {
  int d = 2;
  std::vector<int> coeffs;

  DynkinLabel() = default;
  DynkinLabel(int d_, std::vector<int> coeffs_);

  bool operator==(const DynkinLabel& o) const { return d == o.d && coeffs == o.coeffs; }
  bool operator<(const DynkinLabel& o) const;
  std::string str() const;

  /// Partition (lambda_1 >= ... >= lambda_d = 0) with lambda_i = sum_{k>=i} coeffs_k.
  std::vector<int> partition() const;
  static DynkinLabel from_partition(int d, std::vector<int> lambda);
};

DynkinLabel dual(const DynkinLabel& a);
DynkinLabel trivial_label(int d);
DynkinLabel adjoint_label(int d);

/// Multiset of irrep labels with positive multiplicities, kept sorted by label.
struct IrrepDecomposition {
  std::vector<std::pair<DynkinLabel, int>> terms;

  void add(const DynkinLabel& l, int mult = 1);
  int multiplicity(const DynkinLabel& l) const;
  std::set<DynkinLabel> labels() const;
  long total_dimension() const;
};

/// Dimension of the irrep (Weyl dimension formula).
long weyl_dimension(const DynkinLabel& label);

/// Character of the irrep at a group element with the given eigenphases,
/// evaluated as a Schur polynomial of (e^{i theta_1}, ..., e^{i theta_d}) via
/// the Jacobi-Trudi determinant in complete homogeneous symmetric polynomials.
/// Degenerate eigenphases are handled without special-casing.
Complex irrep_character(const DynkinLabel& label, const std::vector<double>& eigenphases);

/// Complete homogeneous symmetric polynomial h_n evaluated at the given points.
Complex complete_homogeneous(int n, const std::vector<Complex>& xs);

/// SU(2) spin-L character at rotation angle theta: sin((2L+1)theta/2)/sin(theta/2),
/// evaluated as 1 + 2 sum_m cos(m theta) so the removable singularities are exact.
double su2_character(int L, double theta);

/// Littlewood-Richardson decomposition of a (x) b for SU(d).
IrrepDecomposition tensor_decompose(const DynkinLabel& a, const DynkinLabel& b);

/// Labels appearing in the K-fold tensor power of the adjoint irrep of SU(d),
/// multiplicities discarded.
std::set<DynkinLabel> adjoint_power_labels(int d, int K);

/// Checks the closed-form decomposition of adj (x) adj for SU(d), d >= 5:
/// trivial + adj^2 + (0,1,0..,1,0) + (2,0..,1,0) + (0,1,..0,2) + (2,0..,2).
bool verify_qudit_formula(int d);

/// Integer spins L appearing in the operator space of nspins spin-j particles:
/// {0, ..., 2*nspins*j}. two_j is 2j.
std::set<int> su2_operator_space_labels(int two_j, int nspins);

}  // namespace sudec

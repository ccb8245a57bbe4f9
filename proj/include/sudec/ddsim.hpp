#pragma once

#include "sudec/cayley.hpp"
#include "sudec/group.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace sudec {

/// Deterministic PRNG for model sampling (stable across platforms/stdlibs).
class ModelRng {
public:
  explicit ModelRng(uint64_t seed) : state_(seed + 0x9e3779b97f4a7c15ULL) {}
  uint64_t next();
  double uniform();             // [0, 1)
  double uniform_symmetric();   // [-1/2, 1/2]
  double gaussian();

private:
  uint64_t state_;
  bool have_spare_ = false;
  double spare_ = 0;
};

struct DisorderTerm {
  int site;
  double delta;
  Eigen::VectorXd direction;  // unit vector, 8 entries (qutrit) or 3 (spin)
};
struct PairCouplingTerm {
  int site_i, site_j;
  double gamma;
  Eigen::MatrixXd matrix;  // unit Frobenius norm, traceless when anisotropic
};
struct SecularDipolarTerm {
  int site_i, site_j;
  double coupling;
};
struct RwaDisorderTerm {
  int site;
  double delta_z;
};

struct HamiltonianModel {
  int n_sites = 0;
  int local_dim = 3;
  bool anisotropic = false;
  std::vector<DisorderTerm> disorder;
  std::vector<PairCouplingTerm> pairs;
  std::vector<SecularDipolarTerm> secular;
  std::vector<RwaDisorderTerm> rwa_disorder;
};

/// Operator acting as op on one site of an n-site register.
Mat embed_site(const Mat& op, int site, int n_sites, int local_dim);

/// Disorder part Delta * sum_i delta_i n_i . lambda^(i) of the random model.
Mat assemble_disorder(const HamiltonianModel& model, double delta_scale);
/// Pair part Gamma * sum_{i<j} gamma_ij lambda^(i) . M_ij lambda^(j).
Mat assemble_pairs(const HamiltonianModel& model, double gamma_scale);

struct RandomHamiltonian {
  HamiltonianModel model;
  Mat matrix;
};

/// Random qutrit-register Hamiltonian: on-site disorder along uniform unit
/// 8-vectors plus pairwise couplings through unit-Frobenius random 8x8
/// matrices (traceless when anisotropic). delta_i, gamma_ij ~ U[-1/2, 1/2].
/// Same seed, same model, bit for bit.
RandomHamiltonian build_random_hamiltonian(int n_sites, double delta_scale, double gamma_scale,
                                           bool anisotropic, uint64_t seed);

/// Two-site secular dipolar term of spin-1 systems with large zero-field
/// splitting, assembled from the Gell-Mann expansion; couplings[k] pairs with
/// the k-th (i < j) pair in lexicographic order.
Mat build_secular_dipolar(int n_sites, const std::vector<double>& couplings);
/// Single-pair version on sites (i, j) of an n-site register.
Mat secular_dipolar_pair(int n_sites, int site_i, int site_j, double coupling);

/// Rotating-frame disorder sum_i delta_i S_z^(i), S_z = diag(1, 0, -1).
Mat build_rwa_disorder(int n_sites, const std::vector<double>& deltas_z);

enum class Su2Kind { exchange, secular_dipolar, bilinear };

/// Two-site spin operators on an n-site spin-j register (two_j = 2j):
/// exchange S.S, secular dipolar 3 SzSz - S.S, or a plain bilinear S_a S_b
/// (axes 0..2 = x, y, z, used only by the bilinear kind).
Mat build_su2_hamiltonian(Su2Kind kind, int two_j, int n_sites, int site_i, int site_j,
                          int axis_a = 2, int axis_b = 2);

/// Per-site representation assignment: site i transforms pulses as
/// Q_i^dag u Q_i, conjugated entrywise when the dual flag is set.
struct RepAssignment {
  int n_sites = 1;
  std::vector<Mat> conjugators;  // empty, or one per site (identity if empty)
  std::vector<char> dual;        // empty, or one flag per site

  static RepAssignment plain(int n_sites);
};

/// Full-register pulse from a single-site pulse under the assignment.
Mat apply_rep_assignment(const Mat& pulse, const RepAssignment& a);

/// RepMap adapter for symmetrize / first_order_average.
RepMap assignment_rep(const RepAssignment& a);

/// Exact sequence evolution: ... pi(P_2) e^{-i tau H} pi(P_1) e^{-i tau H},
/// ideal instantaneous pulses lifted through the assignment.
Mat evolve_sequence(const Mat& h, const PulseSequence& seq, const RepAssignment& a, double tau);

/// Phase-blind Hilbert-Schmidt distance sqrt(1 - |Tr U target^dag| / d).
double distance_to_identity(const Mat& u);
double distance_to_target(const Mat& u, const Mat& target);

struct DegenerateWindow : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Least-squares slope of log D against log tau. Requires >= 4 points with
/// all distances above 1e-13.
double slope_estimate(const std::vector<double>& tau_values,
                      const std::vector<double>& distances);

enum class ModelKind { random_pair, nv_secular };

struct SweepGrid {
  std::vector<double> tau_delta_values;
  std::vector<double> tau_gamma_values;
  int n_hamiltonians = 100;
  uint64_t seed = 1;
  int workers = 1;  // samples are independent; results reduce in sample order
};

struct SweepRow {
  std::string sequence_label;
  double tau_delta;
  double tau_gamma;
  double mean_distance;
  int n_samples;
  uint64_t seed;
};

struct LabeledSequence {
  std::string label;
  PulseSequence sequence;
  // Non-cyclic sequences are benchmarked against their net propagator instead
  // of the identity; leave empty for cyclic sequences.
  std::optional<Mat> target;
};

/// Mean distance to identity over seeded Hamiltonians, for every grid point
/// and sequence. A "NoDD" row records free evolution for the duration of the
/// shortest sequence. Deterministic under (grid, seed).
std::vector<SweepRow> sweep(const SweepGrid& grid, const std::vector<LabeledSequence>& sequences,
                            ModelKind model_kind, int n_sites);

std::string sweep_to_csv(const std::vector<SweepRow>& rows);

}  // namespace sudec

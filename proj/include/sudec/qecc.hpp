#pragma once

#include "sudec/group.hpp"

#include <optional>
#include <string>
#include <vector>

namespace sudec {

struct RankMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct UnknownKind : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NoRefinement : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NonIdempotent : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Representation space a code lives in: a single spin-j (integer j, carried
/// by SO(3)-realized groups), the symmetric subspace of N qudits, or the full
/// register (characters only).
struct AmbientSpace {
  enum class Kind { spin, symmetric_qudits, full_register };
  Kind kind = Kind::spin;
  int j = 0;       // spin kind
  int d = 3;       // qudit kinds
  int n_qudits = 0;

  static AmbientSpace spin(int j);
  static AmbientSpace symmetric(int d, int n_qudits);
  static AmbientSpace full_register(int d, int n_qudits);
  long dimension() const;
};

/// Action of a group element's defining matrix on the ambient space.
/// spin: sym_power of an SU(2) lift (3x3 rotations in, integer j only);
/// symmetric_qudits: sym_power of the d x d matrix.
Mat ambient_action(const Mat& element, const AmbientSpace& a);

/// Character of the ambient representation at a group element.
Complex space_character(const AmbientSpace& a, const Mat& element);

/// Per-class ambient characters for a group (inputs to rep_multiplicity).
std::vector<Complex> space_class_characters(const FiniteGroup& g, const AmbientSpace& a);

struct ScanRow {
  int parameter;        // j or N
  int character_index;  // index into one_dim_characters(g)
  int multiplicity;
};

/// Multiplicities of every 1D irrep of g across a parameter range of ambients
/// (spin j = lo..hi or N = lo..hi qudits).
std::vector<ScanRow> multiplicity_scan(const FiniteGroup& g, AmbientSpace::Kind kind, int lo,
                                       int hi);

/// Projector (1/|g|) sum conj(chi(g)) pi(g) onto the chi-sector of the ambient.
/// Hermitian and idempotent; trace = multiplicity.
Mat codespace_projector(const FiniteGroup& g, const OneDimCharacter& chi,
                        const AmbientSpace& a);

struct CodeSpace {
  AmbientSpace ambient;
  OneDimCharacter character;
  Mat codewords;  // dimension x k, orthonormal columns
  std::vector<int> refined_sectors;  // set by refine_basis

  int k() const { return static_cast<int>(codewords.cols()); }
};

/// Orthonormal basis of the near-unit eigenspace of an (idempotent) sector
/// projector. Throws RankMismatch unless exactly k_expected eigenvalues are
/// within 1e-6 of 1, and NonIdempotent if the projector fails P^2 = P.
CodeSpace extract_codewords(const Mat& projector, int k_expected, const FiniteGroup& g,
                            const OneDimCharacter& chi, const AmbientSpace& a);

/// Convenience: projector + extraction + symmetry-residual verification.
CodeSpace build_codespace(const FiniteGroup& g, const OneDimCharacter& chi,
                          const AmbientSpace& a, int k_expected);

/// Largest residual max_g || pi(g) |psi> - chi(g) |psi> II over codewords.
double codeword_symmetry_residual(const CodeSpace& code, const FiniteGroup& g);

enum class ErrorKind {
  spin_linear,          // Jz, J+, J- on the ambient spin
  dephasing,            // Jz
  dipolar_disorder_rwa, // Jz, J+, J-, and the z-axis dipolar quadrupole
  qutrit_single,        // the eight collective Gell-Mann operators
  qutrit_dephasing,     // collective lambda_3, lambda_8
};

/// Error operators on the ambient space, identity first.
std::vector<Mat> error_set(ErrorKind kind, const AmbientSpace& a);

enum class KlMode { detect, correct };

struct KLReport {
  KlMode mode;
  double max_offdiag = 0;      // relative to ||F||_F, worst operator
  double max_diag_spread = 0;  // relative to ||F||_F, worst operator
  bool pass = false;
  struct PerOperator {
    double offdiag;
    double diag_spread;
    double norm;
  };
  std::vector<PerOperator> per_operator;
};

/// Knill-Laflamme check: every F in the error set (detect) or in the product
/// set {E_p^dag E_q} (correct) must act on the codespace as a scalar within
/// 1e-8 ||F||_F.
KLReport kl_check(const CodeSpace& code, const std::vector<Mat>& errors, KlMode mode);

/// Logical action of a candidate unitary: the k x k matrix L with
/// candidate * codewords = codewords * L, if the codespace is preserved.
std::optional<Mat> logical_gate_check(const CodeSpace& code, const Mat& candidate);

/// Rotates the codeword basis so each codeword lies in a 1D sector of the
/// larger group (the code group's characters must refine accordingly).
CodeSpace refine_basis(const CodeSpace& code, const FiniteGroup& larger);

std::string kl_report_to_json(const KLReport& report, const std::string& group,
                              const std::string& ambient, int character_index, int k);

}  // namespace sudec

#pragma once

#include "sudec/lierep.hpp"
#include "sudec/matcore.hpp"

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace sudec {

struct OrderExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct UnknownGroup : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NoCenter : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NonIntegerMultiplicity : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotSubgroup : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotNormal : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class GroupMode { exact, projective };

/// Maps a group element's defining d x d unitary to its action on a target space.
using RepMap = std::function<Mat(const Mat&)>;

RepMap defining_rep();
RepMap tensor_power_rep(int nsites);
RepMap sym_power_rep(int degree);
/// Spin-L action of a 3x3 rotation matrix, via an SU(2) lift (integer L only).
RepMap spin_rep(int L);

/// Finite matrix subgroup of U(d), closed under products and inverses.
/// Elements are stored in BFS discovery order; index 0 is the identity.
/// In projective mode, elements are phase-canonicalized representatives and
/// no two stored elements agree up to a global phase.
class FiniteGroup {
public:
  int dim() const { return d_; }
  GroupMode mode() const { return mode_; }
  int order() const { return static_cast<int>(elements_.size()); }
  const Mat& element(int i) const { return elements_[static_cast<size_t>(i)]; }
  const std::vector<Mat>& elements() const { return elements_; }
  int identity_index() const { return 0; }
  const std::vector<int>& generator_indices() const { return generator_indices_; }
  std::string name() const { return name_; }
  void set_name(std::string n) { name_ = std::move(n); }

  /// Index of an element equal (up to phase, in projective mode) to u; -1 if absent.
  int find(const Mat& u) const;
  bool contains(const Mat& u) const { return find(u) >= 0; }

  /// Index arithmetic. The multiplication table is built lazily on first use;
  /// call prepare() before sharing the group across threads.
  int multiply(int i, int j) const;
  int inverse(int i) const;

  /// Conjugacy classes as index lists, ordered by smallest member.
  const std::vector<std::vector<int>>& conjugacy_classes() const;
  int class_of(int element) const;

  /// Eigenphases of each element's defining matrix, cached.
  const std::vector<double>& eigenphases(int i) const;

  /// True iff all elements are real within 1e-9 (SO(3) point-group catalog entries).
  bool is_real_orthogonal() const { return real_orthogonal_; }

  /// Forces construction of mult table, inverses, classes and eigenphase cache.
  void prepare() const;

  friend FiniteGroup generate_group(const std::vector<Mat>& generators, GroupMode mode,
                                    int max_order);

private:
  int d_ = 0;
  GroupMode mode_ = GroupMode::exact;
  std::string name_;
  std::vector<Mat> elements_;
  std::vector<int> generator_indices_;
  bool real_orthogonal_ = false;

  // Two-level hash: entries quantized at 1e-6 (after phase canonicalization in
  // projective mode) bucket candidates, then verified at 1e-9 Frobenius.
  std::unordered_map<std::string, std::vector<int>> buckets_;

  mutable std::vector<std::vector<int>> mult_;
  mutable std::vector<int> inv_;
  mutable std::vector<std::vector<int>> classes_;
  mutable std::vector<int> class_of_;
  mutable std::vector<std::vector<double>> phases_;

  void build_tables() const;
};

/// Canonical phase for projective hashing: rotates u so its largest-magnitude
/// entry (first in row-major order among near-maximal ones) is real positive.
Mat canonical_phase(const Mat& u);

/// Breadth-first closure of the generating set. Deterministic element order.
FiniteGroup generate_group(const std::vector<Mat>& generators,
                           GroupMode mode = GroupMode::exact, int max_order = 5000);

/// True iff the scalar matrices xi_d^k 1 (k = 1..d-1) all belong to g.
bool contains_center(const FiniteGroup& g);

/// Re-closes g's generators in projective mode; order |g|/d when the center is
/// a subgroup of g. Throws NoCenter when the center is absent.
FiniteGroup quotient_by_center(const FiniteGroup& g);

/// Multiplicity of the trivial irrep of g in the SU(d) irrep with the given
/// label, via the character sum (1/|g|) sum_g chi(g). Throws
/// NonIntegerMultiplicity if the sum is not an integer within 1e-6.
/// SO(3)-realized groups (3x3 rotations) accept SU(2) labels (coeff = 2L).
int trivial_multiplicity(const FiniteGroup& g, const DynkinLabel& label);

struct AccessRow {
  DynkinLabel label;
  int multiplicity;
  bool accessible;  // multiplicity > 0
};
std::vector<AccessRow> accessibility_scan(const FiniteGroup& g,
                                          const std::vector<DynkinLabel>& labels);

/// One-dimensional character: one unit-modulus value per conjugacy class.
struct OneDimCharacter {
  std::vector<Complex> class_values;
  Complex value_at(const FiniteGroup& g, int element) const {
    return class_values[static_cast<size_t>(g.class_of(element))];
  }
};

/// All homomorphisms g -> U(1), computed through the commutator subgroup and
/// the character group of the abelian quotient. Count equals |g/[g,g]|.
/// The trivial character comes first; the rest are ordered canonically.
std::vector<OneDimCharacter> one_dim_characters(const FiniteGroup& g);

/// Multiplicity of a 1D irrep in a space with the given per-class characters:
/// (1/|g|) sum_classes |class| conj(chi_irrep) chi_space, with integrality check.
int rep_multiplicity(const FiniteGroup& g, const std::vector<Complex>& chi_space,
                     const OneDimCharacter& chi_irrep);

/// Group average (1/|g|) sum pi(g)^dag op pi(g).
Mat symmetrize(const Mat& op, const FiniteGroup& g, const RepMap& rep);
/// Same, with the represented elements precomputed by the caller.
Mat symmetrize(const Mat& op, const std::vector<Mat>& represented);

/// Represent every element of g through rep (cached building block for scans).
std::vector<Mat> represent_all(const FiniteGroup& g, const RepMap& rep);

/// True iff |k| * |s| = |g| and the products k*s are pairwise distinct elements
/// of g (i.e. g = K S with unique factorization). Throws NotSubgroup if k or s
/// has an element outside g.
bool verify_factorization(const FiniteGroup& g, const FiniteGroup& k,
                          const std::vector<Mat>& s);

/// Coset structure of g modulo a normal subgroup k.
struct QuotientGroup {
  std::vector<std::vector<int>> cosets;  // element indices of g, coset 0 = k
  std::vector<int> representatives;      // one element index per coset
  std::vector<std::vector<int>> mult;    // coset multiplication table
  int order() const { return static_cast<int>(cosets.size()); }
  int coset_inverse(int c) const;
  int coset_order(int c) const;
};

/// Throws NotNormal unless g k g^-1 = k for all generators of g.
QuotientGroup quotient_group(const FiniteGroup& g, const FiniteGroup& k);

/// True iff pi(e)^dag op pi(e) = op within 1e-8 relative for every listed element.
bool is_symmetry_of(const Mat& op, const std::vector<Mat>& elements, const RepMap& rep);

/// JSON round-trip for groups: {name, d, mode, order, generators, classes}.
std::string group_to_json(const FiniteGroup& g);
FiniteGroup group_from_json(const std::string& text, int max_order = 5000);

}  // namespace sudec

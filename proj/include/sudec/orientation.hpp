#pragma once

#include "sudec/group.hpp"
#include "sudec/matcore.hpp"

#include <string>
#include <vector>

namespace sudec {

struct EmptyCatalog : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A change of orientation of a finite subgroup inside SU(3): elements are
/// conjugated as g -> (U P)^dag g (U P), with P the column permutation of the
/// Weyl move applied to the conjugator U.
struct Orientation {
  Mat conjugator;
  std::vector<int> weyl_perm;  // column i of U P is column weyl_perm[i] of U
  std::string description;

  Mat full_conjugator() const;
};

Orientation identity_orientation(int d = 3);

/// Column permutation matrix with (P)_{perm[j], j} = 1.
Mat permutation_matrix(const std::vector<int>& perm);

std::vector<Mat> conjugate_generators(const std::vector<Mat>& gens, const Orientation& o);

/// The unitary built from the eigenvectors of the generator X, satisfying
/// U^dag X U = diag(-i, i, 1).
Mat diagonalizer_of_X();

/// The six Weyl-move orientations of the X-diagonalizing frame, and the
/// reduced set of three modulo the column swap (13) that the rotating-frame
/// Hamiltonians are blind to.
std::vector<Orientation> weyl_orientations();
std::vector<Orientation> reduced_weyl_orientations();

/// Generators of the octahedral subgroup of Sigma(168) that factorizes it as
/// Delta(24) <Y>. Built by intertwining the reference octahedral pair with a
/// matching pair inside <Y, Z>; the conjugator is w1 w2 with w1 a fixed word
/// in the Sigma(168) generators and w2 circulant.
struct Delta24Embedding {
  std::vector<Mat> generators;  // the two conjugated octahedral generators
  Mat conjugator;               // w with generators[i] = w M_i w^dag
  Mat w1, w2;                   // conjugator = w1 w2, w2 = x + y E + z E^2
};
Delta24Embedding delta24_embedding();

/// Reference octahedral generator pair used by the embedding.
std::pair<Mat, Mat> octahedral_reference_pair();

/// True iff the [1,3] / [3,1] matrix elements vanish: |h(0,2)| <= 1e-9 ||h||_F.
/// Hamiltonians with this property act trivially on the |1> <-> |-1> transition.
bool forbidden_entry_check(const Mat& h);

/// Pulse-frame conjugators that clear the [1,3] entry of the X-frame pulse
/// generators, at the closed-form parameter values. Family "P" rotates in the
/// (1,2) plane, family "Pprime" in the (2,3) plane; both leave H_X's zero
/// [1,3] entry intact. Conjugation convention: H -> P H P^dag.
Mat pulse_frame_P();
Mat pulse_frame_Pprime();

/// Closed-form generating Hamiltonians of the pulses C, V, E (pulse = exp(-iH)).
Mat pulse_generator_C();
Mat pulse_generator_V();
Mat pulse_generator_E();

/// Rotating-frame Hamiltonian of a pulse driving both allowed transitions.
struct DoubleDrivingPulse {
  double omega_a = 0;     // Rabi amplitude of the |1><->|0> drive
  double omega_b = 0;     // Rabi amplitude of the |-1><->|0> drive
  double phi_a = 0;
  double phi_b = 0;
  double detuning_a = 0;  // omega_10 - omega_a
  double detuning_b = 0;  // omega_-10 - omega_b
};
Mat double_driving_hamiltonian(const DoubleDrivingPulse& p);

enum class OrientationCriterion { symmetry, pulse_simplification };

struct RankedOrientation {
  Orientation orientation;
  double score;  // symmetry: count passing (higher first); pulse: max |[1,3]| (lower first)
};

/// Ranks the catalog orientations (X-diagonalizer x Weyl moves, plus the two
/// pulse-frame families) for the given generators. symmetry: counts generators
/// whose conjugate leaves every target invariant. pulse_simplification: max
/// forbidden-entry magnitude of the conjugated generators' log-Hamiltonians.
std::vector<RankedOrientation> orientation_search(const std::vector<Mat>& gens,
                                                  const std::vector<Mat>& target_ops,
                                                  OrientationCriterion criterion);
std::vector<RankedOrientation> orientation_search(const std::vector<Mat>& gens,
                                                  const std::vector<Mat>& target_ops,
                                                  OrientationCriterion criterion,
                                                  const std::vector<Orientation>& catalog);

/// The standard search catalog.
std::vector<Orientation> orientation_catalog();

/// Extends a group JSON envelope with an {conjugator, permutation} field.
std::string group_json_with_orientation(const FiniteGroup& g, const Orientation& o);
Orientation orientation_from_group_json(const std::string& text);

}  // namespace sudec

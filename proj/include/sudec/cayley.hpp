#pragma once

#include "sudec/group.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace sudec {

struct NotGenerating : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Directed colored Cayley graph of a group under a generating subset:
/// edge i -> j with color c iff element_j = generator_c * element_i.
struct CayleyGraph {
  std::shared_ptr<const FiniteGroup> group;
  std::vector<int> generator_indices;          // element indices inside group
  struct Edge {
    int from, to, color;
  };
  std::vector<Edge> edges;                     // |Gamma| * |G| edges
  std::vector<std::vector<int>> out_edges;     // per-vertex edge ids

  int vertices() const { return group->order(); }
};

CayleyGraph build_cayley(std::shared_ptr<const FiniteGroup> g,
                         const std::vector<int>& generator_indices);

/// Hierholzer circuit visiting every edge exactly once, starting and ending at
/// start. The seed shuffles the per-vertex out-edge order, giving the random
/// Eulerian circuits used for sequence generation.
std::vector<int> eulerian_circuit(const CayleyGraph& graph, int start, uint64_t seed);

/// Backtracking Hamiltonian circuit search with least-constrained vertex
/// ordering. Exiting on budget is reported distinctly from an exhausted search:
/// neither outcome claims the circuit does not exist.
struct HamiltonianResult {
  std::optional<std::vector<int>> path;  // vertex order, length |G|
  bool budget_exhausted = false;
};
HamiltonianResult hamiltonian_circuit(const CayleyGraph& graph, int start,
                                      long budget = 10'000'000);

enum class SequenceKind { eulerian, hamiltonian, literal, nested };

struct Pulse {
  std::string label;
  Mat unitary;
  int merged = 1;  // primitive pulses composed into this one
};

/// Equidistant pulse sequence: N repetitions of (wait tau, pulse).
struct PulseSequence {
  std::vector<Pulse> pulses;
  double tau = 0;
  SequenceKind kind = SequenceKind::literal;
  std::string group_name;

  int intervals() const { return static_cast<int>(pulses.size()); }
  int primitive_count() const;
  Eigen::Index dim() const { return pulses.empty() ? 0 : pulses.front().unitary.rows(); }
};

/// Pulse sequence from an Eulerian edge circuit: pulse k is the generator
/// coloring edge k.
PulseSequence emit_sequence(const std::vector<int>& euler_edges, const CayleyGraph& graph,
                            double tau);

/// Pulse sequence from a Hamiltonian vertex circuit: pulse k maps vertex k-1
/// to vertex k, with a final edge closing the cycle.
PulseSequence emit_sequence_hamiltonian(const std::vector<int>& vertex_path,
                                        const CayleyGraph& graph, double tau);

PulseSequence literal_sequence(const std::vector<std::pair<std::string, Mat>>& pulses,
                               double tau);

/// Replaces each waiting interval of the outer sequence by one full cycle of
/// the inner sequence; the outer pulse is composed with the abutting inner
/// pulse, so the result has |outer| * |inner| intervals while primitive_count
/// bookkeeping retains |outer| * (|inner| + 1) pulse events.
PulseSequence nest_sequences(const PulseSequence& outer, const PulseSequence& inner);

/// Toggling-frame propagators U_1 = 1, U_k = P_{k-1} ... P_1 (length N).
std::vector<Mat> toggling_propagators(const PulseSequence& seq);

/// Ordered product P_N ... P_1 (the sequence's net unitary).
Mat net_unitary(const PulseSequence& seq);

/// First-order average Hamiltonian (1/N) sum_k pi(U_k)^dag H pi(U_k), with rep
/// lifting the single-site propagators to the operator space of h.
Mat first_order_average(const PulseSequence& seq, const Mat& h, const RepMap& rep);

/// Finite-duration error Hamiltonian (1/tau_p) int_0^tau_p P(t)^dag H P(t) dt
/// with P(t) = exp(-i (t/tau_p) * pulse_generator), by the midpoint rule.
Mat finite_duration_error(const Mat& h, const Mat& pulse_generator, double tau_p, int steps);

/// Sequence JSON: {kind, tau, group, pulses: [{label, unitary: [[re,im],...]}]}.
std::string sequence_to_json(const PulseSequence& seq);
PulseSequence sequence_from_json(const std::string& text);

}  // namespace sudec

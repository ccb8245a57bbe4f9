#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace sudec {

struct CriterionResult {
  int number;
  std::string name;
  bool pass;
  std::vector<std::string> notes;
};

struct AcceptanceOptions {
  int sweep_samples = 100;  // Hamiltonians per grid point in the scaling study
  uint64_t seed = 2026;
};

CriterionResult check_table3_grid();                   // 1
CriterionResult check_su2_ladder();                    // 2
CriterionResult check_tensor_decompositions();         // 3
CriterionResult check_operator_decoupling();           // 4
CriterionResult check_sequence_scaling(const AcceptanceOptions& opt);  // 5
CriterionResult check_sequence_symmetrizer_equivalence();              // 6
CriterionResult check_factorizations();                // 7
CriterionResult check_pulse_simplification();          // 8
CriterionResult check_qecc_suite();                    // 9
CriterionResult check_mixed_representation();          // 10

std::vector<CriterionResult> run_acceptance(const std::string& suite,
                                            const AcceptanceOptions& opt);

}  // namespace sudec

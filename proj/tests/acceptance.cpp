// Acceptance suite: runs every verification criterion at its stated tolerance
// and prints one line per criterion. Sample count for the scaling study can be
// overridden through SUDEC_ACCEPT_SAMPLES (default 100).

#include "sudec/verify.hpp"

#include <cstdlib>
#include <iostream>

int main() {
  sudec::AcceptanceOptions opt;
  if (const char* env = std::getenv("SUDEC_ACCEPT_SAMPLES")) opt.sweep_samples = std::atoi(env);
  auto results = sudec::run_acceptance("all", opt);
  bool all = true;
  for (const auto& r : results) {
    std::cout << "criterion " << r.number << " [" << (r.pass ? "PASS" : "FAIL") << "] " << r.name
              << "\n";
    for (const auto& note : r.notes) std::cout << "    " << note << "\n";
    all = all && r.pass;
  }
  std::cout << (all ? "ACCEPTANCE: ALL CRITERIA PASS" : "ACCEPTANCE: FAILURES PRESENT") << "\n";
  return all ? 0 : 1;
}

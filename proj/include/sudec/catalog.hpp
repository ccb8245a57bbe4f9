#pragma once

#include "sudec/group.hpp"

#include <optional>
#include <string>
#include <vector>

namespace sudec {

/// Exact generator matrices for the built-in group catalog.
/// SU(3) entries: Delta3n2, Delta6n2 (parametrized by n), Sigma60, Sigma168,
/// Sigma36x3, Sigma72x3, Sigma216x3, Sigma360x3.
/// SO(3) point groups as 3x3 rotation matrices: D2, D3, Dn (parametrized),
/// T, O, I, plus the tilted entries D2teddy / Tteddy (C3 axis on z) and
/// Tc5z / Oc5z (tetrahedral subgroup of the icosahedral group whose C5 axis
/// is z, extended to an octahedral group for Oc5z).
/// Convenience aliases: Delta12, Delta27, Delta24, Delta54.
std::vector<Mat> builtin_generators(const std::string& name, std::optional<int> n = {});

/// Generates the named group and labels it. max_order 0 picks a default
/// large enough for the whole catalog.
FiniteGroup catalog_group(const std::string& name, std::optional<int> n = {},
                          int max_order = 0);

/// Names accepted by builtin_generators.
std::vector<std::string> catalog_names();

// Individual generator matrices from the standard SU(3) subgroup presentation.
Mat mat_A(int n);
Mat mat_B();
Mat mat_C();
Mat mat_D();
Mat mat_E();
Mat mat_F();
Mat mat_V();
Mat mat_W();
Mat mat_X();
Mat mat_Y();
Mat mat_Z();

}  // namespace sudec

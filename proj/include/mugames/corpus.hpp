#pragma once

#include <string>
#include <vector>

namespace mugames {

struct NamedFormula {
    std::string name;
    std::string text;
};

/// Test formulas with indices up to {0,1,2}, including the alternating
/// three-binder formula that collapses to `mu X. []X`.
const std::vector<NamedFormula>& bundled_formulas();

namespace samples {

/// mu X. nu Y. ([]Y & mu Z. [](X | Z)), index {0,1}.
inline const char* const kAlternating = "mu X. nu Y. ([]Y & mu Z. [](X | Z))";
inline const char* const kAlternatingCollapsed = "mu X. []X";

/// Three-level formula whose games are described by a {1,2} formula, with the
/// free slot instantiated as nu W. (A & []W).
inline const char* const kThreeLevel =
    "mu X. nu Y. mu Z. (A & <>Y) | (B & <>(Z & nu W. (A & []W))) | (C & []X)";
inline const char* const kThreeLevelWin =
    "mu X. ((E_1 & <>X) | (O_1 & []X) | (E_2 & <>X) | (O_2 & []X) | (E_3 & <>X) | (O_3 & []X))"
    " | nu X_2. mu X_1. ((E_2 & <>X_2) | (O_2 & []X_2) | (E_1 & <>X_1) | (O_1 & []X_1))";
inline const char* const kThreeLevelTidied =
    "mu X. (A & <>X) | (B & <>(X & nu W. (A & []W))) | (C & []X)"
    " | nu Y. mu Z. (A & <>Y) | (B & <>(Z & nu W. (A & []W))) | (C & []ff)";

/// Semantically modal formulas and their modal depths.
inline const char* const kModalZero = "mu X. <>X";
inline const char* const kModalOne = "(mu X. (P | <>X)) & []ff";

}  // namespace samples

}  // namespace mugames

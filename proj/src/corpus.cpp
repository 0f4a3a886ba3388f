#include "mugames/corpus.hpp"

namespace mugames {

const std::vector<NamedFormula>& bundled_formulas() {
    static const std::vector<NamedFormula> formulas = {
        {"atom", "P"},
        {"modal", "<>P & []Q"},
        {"never", "mu X. <>X"},
        {"always", "nu X. (P & []X)"},
        {"reach", "mu X. (P | <>X)"},
        {"path", "nu X. (P & <>X)"},
        {"alternating", samples::kAlternating},
        {"infinitely-often", "nu Y. mu X. ((P & <>Y) | <>X)"},
        {"finitely-often", "mu X. nu Y. ((P & <>X) | (~P & <>Y))"},
        {"three-level", "nu X. mu Y. nu Z. ((P & <>X) | (Q & <>Y) | <>Z)"},
        {"inevitable", "mu X. ((Q & []X) | P)"},
        {"reach-not", "(mu X. (P | <>X)) & ~Q"},
    };
    return formulas;
}

}  // namespace mugames

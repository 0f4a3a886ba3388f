#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "mugames/formula.hpp"
#include "mugames/priority.hpp"
#include "mugames/semantics.hpp"
#include "mugames/structure.hpp"

namespace mugames {

struct ProductResult {
    Formula formula;
    /// Inherited assignment: each fresh W gets the priority of its Win variable.
    PriorityAssignment omega;
    std::size_t steps = 0;
};

/// Ψ × Win. `psi` must be guarded; `win` may only use the arena labels E_i,
/// O_i, M and E_X (X a variable of Ψ), possibly negated.
/// Throws Error for other Win propositions, when the step budget runs out, or
/// when the inherited assignment fails to be order-preserving.
/// A budget of 0 picks |Ψ| · |Win| · 2^|Var(Win)| · 64.
ProductResult product(const Formula& psi, const PriorityAssignment& omega_psi, const Formula& win,
                      const PriorityAssignment& omega_win, std::size_t budget = 0);
ProductResult product(const Formula& psi, const Formula& win);

/// Drops binders whose variable does not occur in their body; folds tt/ff.
Formula cleanup(const Formula& f);

struct SimplifyReport {
    Formula input;
    Formula output;
    IndexClass old_index;
    IndexClass new_index;
    std::optional<Interval> win_index;
    std::size_t corpus_size = 0;
    CheckReport check;

    bool equivalent() const { return check.passed(); }
    /// Structured text, starting with a schema line.
    std::string to_string() const;
};

/// cleanup(Ψ × Win) checked against Ψ on `corpus`.
SimplifyReport simplify(const Formula& psi, const Formula& win, const std::vector<Structure>& corpus);

}  // namespace mugames

#pragma once

#include <map>
#include <string>
#include <vector>

#include "mugames/arena.hpp"
#include "mugames/formula.hpp"
#include "mugames/priority.hpp"
#include "mugames/structure.hpp"

namespace mugames {

/// γ_q X_q ... γ_m X_m. ⋁_{i ∈ I} (E_i & <>X_i) | (O_i & []X_i), γ_i = μ for odd i.
Formula parity_formula(const Interval& I);

/// Bounded_{p,m} with one clause group per priority of `I`. Bounded_{0,b} = ff.
Formula bounded_formula(unsigned p, unsigned m, const Interval& I);

/// Largest number of positions on a modality-free segment of a model-checking
/// game of `f`. A segment starts at the root or below a modality and ends at the
/// first modal subformula or at a leaf; a variable continues into its binding
/// formula. Throws Error for unguarded formulas (the bound would be infinite).
unsigned segment_bound(const Formula& f);

/// The n-bounded game: positions (v, c). Entering an M position with c = 0 is
/// a loss for its owner, with c > 0 the counter drops by one.
/// Throws Error unless every cycle reachable from the initial position meets M.
Arena bounded_game(const Arena& a, unsigned n);

/// Verdicts for the μ-variables of a formula: true when the closure sentence of
/// the μ-subformula is satisfiable.
using Verdicts = std::map<std::string, bool>;

/// Bounded model search over `corpus` for every μ-subformula of `f`.
/// A `false` verdict means "no model found up to the bound".
Verdicts search_verdicts(const Formula& f, const std::vector<Structure>& corpus);

/// The ν-only interpreting formula for a disjunctive formula that is
/// semantically Π1:
///   νY. (E_e & <>Y) | (E_o & <>Y) | (O_e & []Y) | (O_o & []Y)
/// where E_e is the disjunction of the even E_i and so on. The clause of an
/// unsatisfiable μ-variable X becomes `E_X & ff` with provenance labels, or
/// `E_i & ff` without them (only possible when every variable of priority i
/// is such a variable and i is not the minimal priority).
/// Throws Error for non-disjunctive input, a missing verdict, or when the
/// replacement needs provenance labels that were not requested.
Formula pi1_interpreter(const Formula& f, const Verdicts& verdicts, bool provenance = false);

}  // namespace mugames

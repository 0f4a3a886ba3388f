#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mugames/arena.hpp"
#include "mugames/formula.hpp"
#include "mugames/priority.hpp"
#include "mugames/structure.hpp"

namespace mugames {

/// States satisfying `f`, computed by nested Knaster–Tarski iteration on the
/// finite graph. Independent of the game machinery; used as an oracle.
std::vector<bool> evaluate(const Structure& t, const Formula& f);

/// `evaluate` at the root.
bool satisfies(const Structure& t, const Formula& f);

/// Game-based verdict: Even wins t × f from the initial position.
/// Unguarded formulas are guarded first.
bool holds(const Structure& t, const Formula& f);

/// Game verdicts for one formula over many structures; guarding and the
/// priority assignment are done once.
class GameChecker {
public:
    explicit GameChecker(const Formula& f);

    bool operator()(const Structure& t) const;
    Arena game(const Structure& t) const;

    const Formula& formula() const { return formula_; }
    const PriorityAssignment& priorities() const { return omega_; }

private:
    Formula formula_;
    PriorityAssignment omega_;
};

/// Verdict of Φ on the encoded model-checking game of Ψ over t.
bool holds_on_game(const Structure& t, const Formula& psi, const Formula& phi, bool provenance = false);

struct Counterexample {
    std::size_t index = 0;  // position in the corpus
    Structure structure;
    bool expected = false;  // verdict of the reference formula
    bool actual = false;
};

struct CheckReport {
    std::size_t checked = 0;
    std::optional<Counterexample> counterexample;

    bool passed() const { return !counterexample; }
};

/// Compares holds(t, a) with holds(t, b) on every corpus structure.
CheckReport check_equivalent(const Formula& a, const Formula& b, const std::vector<Structure>& corpus);

/// Compares holds(t, psi) with holds_on_game(t, psi, phi) on every corpus structure.
CheckReport check_interprets(const Formula& psi, const Formula& phi, const std::vector<Structure>& corpus,
                             bool provenance = false);

struct Agreement {
    bool expected = false;  // holds(t, psi)
    bool actual = false;    // holds_on_game(t, psi, phi)
};

/// Per-structure verdicts of the interpretation check, without stopping early.
std::vector<Agreement> interpretation_table(const Formula& psi, const Formula& phi,
                                            const std::vector<Structure>& corpus, bool provenance = false);

/// The sentence obtained from the subformula at `id` by substituting, for each
/// free variable, its binding fixpoint formula (repeatedly, outermost last).
Formula closure(const Formula& f, NodeId id);

}  // namespace mugames

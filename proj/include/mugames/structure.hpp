#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "mugames/formula.hpp"

namespace mugames {

using StateId = std::uint32_t;

/// A finite pointed labelled graph. It stands for the regular tree obtained by
/// unravelling it from the root; model checking on the graph agrees with the
/// tree semantics.
class Structure {
public:
    struct State {
        std::string name;
        std::set<std::string> labels;
        std::vector<StateId> successors;

        friend bool operator==(const State&, const State&) = default;
    };

    Structure() = default;

    StateId add_state(std::string name, std::set<std::string> labels = {});
    void add_edge(StateId from, StateId to);
    void set_root(StateId root) { root_ = root; }

    StateId root() const { return root_; }
    std::size_t size() const { return states_.size(); }
    const State& state(StateId s) const { return states_.at(s); }
    const std::vector<State>& states() const { return states_; }
    bool holds(StateId s, const std::string& proposition) const;

    /// Throws Error unless the root exists and every state is reachable from it.
    void validate() const;
    bool is_acyclic() const;
    /// Longest path from the root, in edges. Only meaningful for acyclic structures.
    std::size_t depth() const;

    /// Breadth-first renumbering from the root; ties among successors are broken
    /// by label set, then by original order.
    Structure canonicalized() const;

    friend bool operator==(const Structure&, const Structure&) = default;

private:
    std::vector<State> states_;
    StateId root_ = 0;
};

/// Reads the line format `node <id> [l1,l2]`, `edge <src> <dst>`, `root <id>`.
Structure load_structure(std::string_view text);
std::string store_structure(const Structure& s);

/// Unravelling of `t` cut at depth `depth`: a finite tree, states named by path.
Structure truncate(const Structure& t, std::size_t depth);

/// All rooted, reachable structures with 1..max_nodes states over `alphabet`,
/// one representative per isomorphism class, ordered by size then canonical code.
std::vector<Structure> enumerate_structures(std::size_t max_nodes, const std::vector<std::string>& alphabet);

/// `count` reachable structures of 1..max_nodes states; deterministic in `seed`.
std::vector<Structure> sample_structures(std::size_t max_nodes, const std::vector<std::string>& alphabet,
                                         std::uint64_t seed, std::size_t count);

/// Exhaustive enumeration followed by seeded samples; the default test corpus.
struct CorpusSpec {
    std::size_t max_nodes = 3;
    std::size_t samples = 200;
    std::size_t sample_max_nodes = 8;
    std::uint64_t seed = 0;
};

std::vector<Structure> build_corpus(const std::vector<std::string>& alphabet, const CorpusSpec& spec = {});

/// Propositions occurring in a formula, sorted.
std::vector<std::string> alphabet_of(const Formula& f);

}  // namespace mugames

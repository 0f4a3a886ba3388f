#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mugames/formula.hpp"
#include "mugames/priority.hpp"
#include "mugames/structure.hpp"

namespace mugames {

enum class Player : std::uint8_t { Even = 0, Odd = 1 };

inline Player opponent(Player p) { return p == Player::Even ? Player::Odd : Player::Even; }
inline Player parity_winner(unsigned priority) { return priority % 2 == 0 ? Player::Even : Player::Odd; }
const char* to_string(Player p);

using PosId = std::uint32_t;
inline constexpr PosId kNoPos = std::numeric_limits<PosId>::max();

struct Position {
    Player owner = Player::Even;
    unsigned priority = 0;
    std::vector<PosId> successors;
    std::string label;
    bool modal = false;         // stems from a <> or [] subformula
    std::string variable;       // fixpoint variable for (s, X) positions, else empty
    StateId state = ~0u;        // provenance when built as a model-checking game
    NodeId subformula = kNoNode;
};

/// A parity game arena. Positions without successors are lost by their owner.
class Arena {
public:
    PosId add_position(Player owner, unsigned priority, std::string label = {});
    void add_edge(PosId from, PosId to);
    void set_initial(PosId v) { initial_ = v; }

    PosId initial() const { return initial_; }
    std::size_t size() const { return positions_.size(); }
    const Position& position(PosId v) const { return positions_.at(v); }
    Position& position(PosId v) { return positions_.at(v); }
    const std::vector<Position>& positions() const { return positions_; }

    /// Smallest interval containing every priority (lower end rounded down to 0 or 1).
    Interval index() const;
    /// Throws Error if the initial position is missing or an edge dangles.
    void validate() const;

private:
    std::vector<Position> positions_;
    PosId initial_ = 0;
};

/// The model-checking game t × f. Only positions reachable from (root, f) are built.
/// Literals and tt/ff are terminal: a true literal and tt belong to Odd, a false
/// literal and ff to Even. Conjunctions and boxes belong to Odd, the rest to Even.
/// Variable positions carry the variable's priority, all others the minimal one.
/// Labels read `<state>:<subformula id>`.
Arena mc_game(const Structure& t, const Formula& f, const PriorityAssignment& omega);
Arena mc_game(const Structure& t, const Formula& f);

/// Labels each position with E_i / O_i by owner and priority, M on modal
/// positions and, with provenance, E_X on positions of variable X.
Structure encode(const Arena& a, bool with_provenance = false);

/// Line format: `init <id>` then `<id> <priority> <owner> <succ,...> "<label>" [M]`.
/// An empty successor list is written as `-`; a trailing `var=<X>` records the
/// fixpoint variable of the position.
Arena load_arena(std::string_view text);
std::string store_arena(const Arena& a);

}  // namespace mugames

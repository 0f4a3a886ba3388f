#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mugames/arena.hpp"

namespace mugames {

/// Positional strategy of one player: chosen successor per position, kNoPos where undefined.
struct Strategy {
    Player player = Player::Even;
    std::vector<PosId> choice;

    PosId at(PosId v) const { return v < choice.size() ? choice[v] : kNoPos; }
};

struct Solution {
    std::vector<Player> winner;  // per position
    Strategy even;               // defined on Even's non-terminal positions of Even's region
    Strategy odd;

    Player winner_at(PosId v) const { return winner.at(v); }
    const Strategy& strategy(Player p) const { return p == Player::Even ? even : odd; }
};

/// Zielonka's recursive algorithm. Terminal positions are lost by their owner.
Solution solve(const Arena& a);

/// Winner from the initial position.
Player initial_winner(const Arena& a);

/// True iff the winners from the two initial positions coincide.
bool arena_eq_winner(const Arena& a, const Arena& b);

/// An ultimately periodic play; `cycle` is empty when the play ends in a terminal position.
struct Lasso {
    std::vector<PosId> prefix;
    std::vector<PosId> cycle;

    bool finite() const { return cycle.empty(); }
};

/// Highest priority on the cycle; nullopt for finite plays.
std::optional<unsigned> dominant(const Lasso& l, const Arena& a);

/// Winner of a play: the owner of a final terminal position loses, otherwise
/// the parity of the dominant priority decides.
Player lasso_winner(const Lasso& l, const Arena& a);

/// The unique play induced by two positional strategies from `start`
/// (the initial position by default). Throws Error if a reached position has
/// no choice although it has successors.
Lasso play(const Arena& a, const Strategy& even, const Strategy& odd, PosId start = kNoPos);

/// Lines `<position> -> <successor>`.
std::string store_strategy(const Strategy& s);

}  // namespace mugames

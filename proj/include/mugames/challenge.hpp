#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mugames/arena.hpp"
#include "mugames/priority.hpp"

namespace mugames {

enum class ChallengeVariant { Sigma2, General };

/// Challenge and counter matrix. Rows are target levels, columns input
/// priorities. The Σ2 game has a single row (level 0) whose columns are the
/// even priorities of the padded index; the general game has rows I_o and
/// columns J_o.
class ChallengeConfig {
public:
    ChallengeConfig() = default;
    ChallengeConfig(std::vector<unsigned> rows, std::vector<unsigned> columns, unsigned n);

    /// Σ2 configuration for input index `J`; the index is padded to an even top.
    static ChallengeConfig sigma2(const Interval& J, unsigned n);
    /// General configuration for input index `J` and target index `I`.
    static ChallengeConfig general(const Interval& J, const Interval& I, unsigned n);

    const std::vector<unsigned>& rows() const { return rows_; }
    const std::vector<unsigned>& columns() const { return columns_; }
    unsigned bound() const { return n_; }

    bool has(unsigned row, unsigned column) const;
    bool is_open(unsigned row, unsigned column) const;
    unsigned counter(unsigned row, unsigned column) const;
    void set(unsigned row, unsigned column, bool open, unsigned counter);

    /// Open challenges in a row form an upward-closed set of columns, and
    /// counters lie in [0, n].
    bool valid() const;
    /// Least column with an open challenge (any row).
    std::optional<unsigned> priority() const;
    /// Highest row with an open challenge.
    std::optional<unsigned> level() const;

    /// One row per line: `i: j=open/2 k=met/3`.
    std::string to_string() const;

    friend bool operator==(const ChallengeConfig&, const ChallengeConfig&) = default;
    friend auto operator<=>(const ChallengeConfig&, const ChallengeConfig&) = default;

private:
    std::size_t slot(unsigned row, unsigned column) const;

    std::vector<unsigned> rows_;
    std::vector<unsigned> columns_;
    std::vector<char> open_;
    std::vector<unsigned> counter_;
    unsigned n_ = 0;
};

/// First-round action. Σ2: `open i`. General: `reset k` or `open i p`
/// (level i, up to priority p).
struct ChallengeAction {
    enum class Kind { Reset, Open } kind = Kind::Open;
    unsigned level = 0;
    unsigned priority = 0;

    std::string to_string(ChallengeVariant v) const;
};

/// Σ2 opening of the i-challenge. Throws Error when the counter is zero, the
/// challenge is already open or a higher challenge is still met.
ChallengeConfig sigma2_open(const ChallengeConfig& cfg, unsigned i);
/// Σ2 update on arriving at priority j: an open j-challenge is met and every
/// lower challenge is reset to (met, n).
ChallengeConfig sigma2_arrive(const ChallengeConfig& cfg, unsigned j);
/// Both rounds of one Σ2 step.
ChallengeConfig challenge_step_sigma2(const ChallengeConfig& cfg, const std::vector<unsigned>& openings,
                                      unsigned arriving);

/// General first-round action. A k-reset sets rows i <= k to (met, n); an
/// opening at level i up to p opens every met column j >= p of row i and
/// decrements its counter. Throws Error when k or i is not a row, or a counter
/// that would be decremented is zero.
ChallengeConfig general_action(const ChallengeConfig& cfg, const ChallengeAction& a);

struct GeneralStep {
    ChallengeConfig config;
    bool odd_wins = false;  // some c_{i,p} = 0 on arrival
};

/// General second-round update on arriving at priority p.
GeneralStep general_arrive(const ChallengeConfig& cfg, unsigned p);
GeneralStep challenge_step_general(const ChallengeConfig& cfg, const std::vector<ChallengeAction>& actions,
                                   unsigned arriving);

/// One step of a scripted play: first-round actions then a move.
struct ScriptStep {
    std::vector<ChallengeAction> actions;
    PosId move = kNoPos;
    std::size_t line = 0;
};

/// Lines `reset k`, `open i [p]` and `move <position>`; `#` starts a comment.
/// Actions accumulate until the next `move`.
std::vector<ScriptStep> parse_challenge_script(std::string_view text);

struct ChallengeReport {
    Player winner = Player::Even;
    std::optional<unsigned> dominant;
    bool immediate = false;  // Odd won on a zero counter
    bool terminal = false;   // underlying play reached a terminal position
    std::size_t cycle_start = 0;
    std::vector<std::string> trace;

    std::string to_string() const;
};

/// Replays `steps` from the initial position with the initial configuration
/// (all met, counters n). A play that neither ends nor closes a cycle (the
/// final game configuration equal to an earlier one) is rejected.
/// Σ2: Odd wins an infinite play iff the dominant d is odd and the
/// (d+1)-challenge is open throughout the cycle. General: Even wins iff d is
/// even and some a_{i,d+1} is open throughout the cycle.
/// `target` is the target index of the general game and ignored for Σ2.
ChallengeReport adjudicate_challenge(const Arena& a, const std::vector<ScriptStep>& steps, ChallengeVariant v,
                                     unsigned n, const Interval& target = {0, 1});

/// Winner of the challenge game by exhaustive search over positional
/// strategies on the (position × configuration) product, with at most one
/// first-round action per step. Exact only under that restriction; returns
/// nullopt when the search space exceeds `budget` strategy pairs.
std::optional<Player> solve_challenge_bounded(const Arena& a, ChallengeVariant v, unsigned n,
                                              const Interval& target = {0, 1}, std::size_t budget = 1'000'000);

}  // namespace mugames

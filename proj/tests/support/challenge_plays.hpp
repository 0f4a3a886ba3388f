#pragma once

// Hand-traced challenge-game plays shared by the unit tests and the
// acceptance binary. Configurations are written column=state/counter.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "mugames/challenge.hpp"

namespace mugames::plays {

// Σ2 arenas. Index {1} and {1,2} pad to columns {0,2}; {1,2,3} gives {0,2,4}.
inline const char* const kOnes = "init a\na 1 0 b \"a\"\nb 1 0 a \"b\"\n";
inline const char* const kOneTwo = "init a\na 1 0 b \"a\"\nb 2 0 a \"b\"\n";
inline const char* const kThreeTwo = "init a\na 3 0 b \"a\"\nb 2 0 a \"b\"\n";
inline const char* const kZeroOne = "init a\na 0 0 b \"a\"\nb 1 0 a \"b\"\n";
inline const char* const kOddStuck = "init a\na 1 0 b \"a\"\nb 1 1 - \"b\"\n";
inline const char* const kEvenStuck = "init a\na 1 0 b \"a\"\nb 1 0 - \"b\"\n";

// General arenas, index {1,2,3}: columns {1,3}.
inline const char* const kLoop = "init a\na 2 0 b \"a\"\nb 1 0 a \"b\"\nc 3 0 c \"c\"\n";
inline const char* const kBranch = "init a\na 2 0 b,c \"a\"\nb 1 0 a \"b\"\nc 3 0 a \"c\"\n";
inline const char* const kOddEnd = "init a\na 1 0 b \"a\"\nb 2 1 - \"b\"\nc 3 0 c \"c\"\n";
inline const char* const kEvenEnd = "init a\na 1 0 b \"a\"\nb 2 0 - \"b\"\nc 3 0 c \"c\"\n";

enum class Ending { Cycle, Terminal, Immediate };

struct Play {
    const char* name;
    const char* arena;
    const char* script;
    ChallengeVariant variant;
    unsigned n;
    Interval target;
    Player winner;
    Ending ending;
    std::optional<unsigned> dominant;  // cycles only
    std::size_t cycle_start = 0;       // cycles only
};

inline const std::vector<Play>& sigma2_plays() {
    using P = Player;
    constexpr auto S = ChallengeVariant::Sigma2;
    static const std::vector<Play> v = {
        {"no challenge on an odd cycle", kOnes, "move 1\nmove 0\n", S, 2, {0, 1}, P::Even, Ending::Cycle, 1, 0},
        // 2=open/1 from step 1; priority 1 never meets it
        {"2 held open on an odd cycle", kOnes, "open 2\nmove 1\nmove 0\nmove 1\n", S, 2, {0, 1}, P::Odd, Ending::Cycle,
         1, 1},
        // step 2: 0=open/1 2=open/1, unchanged afterwards
        {"0 opened as well", kOnes, "open 2\nmove 1\nopen 0\nmove 0\nmove 1\nmove 0\n", S, 2, {0, 1}, P::Odd,
         Ending::Cycle, 1, 2},
        // step 1: 2=met/1; step 3: 2=met/0; no further opening possible
        {"met until the counter runs out", kOneTwo, "open 2\nmove 1\nmove 0\nopen 2\nmove 1\nmove 0\nmove 1\n", S, 2,
         {0, 1}, P::Even, Ending::Cycle, 2, 3},
        {"even cycle", kOneTwo, "move 1\nmove 0\n", S, 2, {0, 1}, P::Even, Ending::Cycle, 2, 0},
        {"Odd stuck", kOddStuck, "move 1\n", S, 2, {0, 1}, P::Even, Ending::Terminal, std::nullopt, 0},
        {"Even stuck", kEvenStuck, "open 2\nmove 1\n", S, 2, {0, 1}, P::Odd, Ending::Terminal, std::nullopt, 0},
        // 4=open/0 throughout; arrivals at 2 and 3 leave it open
        {"4 held open on a 3-cycle", kThreeTwo, "open 4\nmove 1\nmove 0\nmove 1\n", S, 1, {0, 1}, P::Odd,
         Ending::Cycle, 3, 1},
        {"3-cycle without challenges", kThreeTwo, "move 1\nmove 0\n", S, 1, {0, 1}, P::Even, Ending::Cycle, 3, 0},
        // 4=open/0 2=open/0; arrival at 2: 2=met/0, 0=met/1; 4 stays open
        {"meeting 2 keeps 4 open", kThreeTwo, "open 4\nopen 2\nmove 1\nmove 0\nmove 1\n", S, 1, {0, 1}, P::Odd,
         Ending::Cycle, 3, 1},
        {"single-use counter on an odd cycle", kOnes, "open 2\nmove 1\nmove 0\nmove 1\n", S, 1, {0, 1}, P::Odd,
         Ending::Cycle, 1, 1},
        {"priority 0 does not meet 2", kZeroOne, "open 2\nmove 1\nmove 0\nmove 1\n", S, 2, {0, 1}, P::Odd,
         Ending::Cycle, 1, 1},
        {"cycle through the initial configuration", kZeroOne, "move 1\nmove 0\n", S, 2, {0, 1}, P::Even,
         Ending::Cycle, 1, 0},
    };
    return v;
}

inline const std::vector<Play>& general_plays() {
    using P = Player;
    constexpr auto G = ChallengeVariant::General;
    static const std::vector<Play> v = {
        {"no challenge on an even cycle", kLoop, "move 1\nmove 0\n", G, 2, {0, 1}, P::Odd, Ending::Cycle, 2, 0},
        // row 1: 3=open/1 throughout
        {"3 held open", kLoop, "open 1 3\nmove 1\nmove 0\nmove 1\n", G, 2, {0, 1}, P::Even, Ending::Cycle, 2, 1},
        // alternates between 3=open/1 and all met
        {"reset inside the cycle", kLoop, "open 1 3\nmove 1\nreset 1\nmove 0\nopen 1 3\nmove 1\n", G, 2, {0, 1},
         P::Odd, Ending::Cycle, 2, 1},
        // 3=open/0, then priority 3 arrives
        {"exhausted challenge met", kBranch, "open 1 3\nmove 2\n", G, 1, {0, 1}, P::Odd, Ending::Immediate,
         std::nullopt, 0},
        // step 1: 3=met/1; step 2: 1=met/2; step 3: 3=open/0 then met
        {"second meeting exhausts", kBranch, "open 1 3\nmove 2\nmove 0\nopen 1 3\nmove 2\n", G, 2, {0, 1}, P::Odd,
         Ending::Immediate, std::nullopt, 0},
        {"staying away from 3", kBranch, "open 1 3\nmove 1\nmove 0\nmove 1\n", G, 2, {0, 1}, P::Even, Ending::Cycle,
         2, 1},
        {"odd dominant", kBranch, "move 2\nmove 0\nmove 2\n", G, 2, {0, 1}, P::Odd, Ending::Cycle, 3, 1},
        {"Odd stuck", kOddEnd, "move 1\n", G, 2, {0, 1}, P::Even, Ending::Terminal, std::nullopt, 0},
        {"Even stuck", kEvenEnd, "open 1 3\nmove 1\n", G, 2, {0, 1}, P::Odd, Ending::Terminal, std::nullopt, 0},
        {"level-3 challenge", kLoop, "open 3 3\nmove 1\nmove 0\nmove 1\n", G, 2, {1, 3}, P::Even, Ending::Cycle, 2,
         1},
        {"1-reset leaves level 3", kLoop, "open 3 3\nmove 1\nreset 1\nmove 0\nmove 1\n", G, 2, {1, 3}, P::Even,
         Ending::Cycle, 2, 1},
        // step 2 resets everything; b,a then repeats without challenges
        {"3-reset clears all levels", kLoop, "open 1 3\nmove 1\nreset 3\nmove 0\nmove 1\nmove 0\n", G, 2, {1, 3},
         P::Odd, Ending::Cycle, 2, 2},
        // 1 and 3 opened; arrival at 1: 1=met/1; arrival at 2: 1=met/2; 3 stays open
        {"opening from priority 1", kLoop, "open 1 1\nmove 1\nmove 0\nmove 1\nmove 0\n", G, 2, {0, 1}, P::Even,
         Ending::Cycle, 2, 2},
    };
    return v;
}

// Replays a play through the step functions, checking validity after every
// step, then compares the adjudication with the traced outcome. Returns an
// empty string on agreement, otherwise a description of the first mismatch.
inline std::string check_play(const Play& p) {
    const Arena a = load_arena(p.arena);
    const auto steps = parse_challenge_script(p.script);
    const bool s2 = p.variant == ChallengeVariant::Sigma2;
    ChallengeConfig cfg = s2 ? ChallengeConfig::sigma2(a.index(), p.n) : ChallengeConfig::general(a.index(), p.target, p.n);
    if (!cfg.valid()) return "invalid initial configuration";
    for (std::size_t k = 0; k < steps.size(); ++k) {
        const unsigned prio = a.position(steps[k].move).priority;
        if (s2) {
            std::vector<unsigned> opens;
            for (const auto& act : steps[k].actions) opens.push_back(act.priority);
            cfg = challenge_step_sigma2(cfg, opens, prio);
        } else {
            const GeneralStep g = challenge_step_general(cfg, steps[k].actions, prio);
            cfg = g.config;
            if (g.odd_wins) break;
        }
        if (!cfg.valid()) return "invalid configuration after step " + std::to_string(k + 1);
    }
    const ChallengeReport r = adjudicate_challenge(a, steps, p.variant, p.n, p.target);
    if (r.winner != p.winner) return "winner differs";
    const Ending e = r.immediate ? Ending::Immediate : r.terminal ? Ending::Terminal : Ending::Cycle;
    if (e != p.ending) return "ending differs";
    if (e == Ending::Cycle) {
        if (r.dominant != p.dominant) return "dominant priority differs";
        if (r.cycle_start != p.cycle_start) return "cycle start differs";
    }
    return {};
}

}  // namespace mugames::plays

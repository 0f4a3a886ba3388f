#include <doctest.h>

#include <random>

#include "../support/oracle.hpp"
#include "mugames/solver.hpp"

using namespace mugames;

namespace {

Arena two_cycle(unsigned p0, unsigned p1, Player o0 = Player::Even, Player o1 = Player::Even) {
    Arena a;
    a.add_position(o0, p0);
    a.add_position(o1, p1);
    a.add_edge(0, 1);
    a.add_edge(1, 0);
    return a;
}

Strategy random_strategy(const Arena& a, Player p, std::mt19937_64& rng) {
    Strategy s{p, std::vector<PosId>(a.size(), kNoPos)};
    for (PosId v = 0; v < a.size(); ++v) {
        const auto& succ = a.position(v).successors;
        if (a.position(v).owner != p || succ.empty()) continue;
        s.choice[v] = succ[std::uniform_int_distribution<std::size_t>(0, succ.size() - 1)(rng)];
    }
    return s;
}

}  // namespace

TEST_CASE("cycles are decided by the dominant priority") {
    CHECK(initial_winner(two_cycle(0, 1)) == Player::Odd);
    CHECK(initial_winner(two_cycle(2, 1)) == Player::Even);
    CHECK(initial_winner(two_cycle(0, 0)) == Player::Even);
    CHECK(initial_winner(two_cycle(3, 2)) == Player::Odd);
}

TEST_CASE("dead ends are lost by their owner") {
    Arena a;
    a.add_position(Player::Even, 0);
    CHECK(initial_winner(a) == Player::Odd);
    Arena b;
    b.add_position(Player::Odd, 1);
    CHECK(initial_winner(b) == Player::Even);
}

TEST_CASE("choice between a good and a bad cycle") {
    // 0 (Even) -> 1 (prio 1 self-loop) or 2 (prio 2 self-loop)
    Arena a;
    a.add_position(Player::Even, 0);
    a.add_position(Player::Even, 1);
    a.add_position(Player::Even, 2);
    a.add_edge(0, 1);
    a.add_edge(0, 2);
    a.add_edge(1, 1);
    a.add_edge(2, 2);
    const Solution s = solve(a);
    CHECK(s.winner == std::vector<Player>{Player::Even, Player::Odd, Player::Even});
    CHECK(s.even.at(0) == 2);
    CHECK(s.even.at(1) == kNoPos);  // position 1 is lost
    a.position(0).owner = Player::Odd;
    CHECK(solve(a).winner_at(0) == Player::Odd);
    CHECK(solve(a).odd.at(0) == 1);
}

TEST_CASE("plays and lassos") {
    Arena a = two_cycle(2, 1);
    a.add_position(Player::Odd, 0);
    a.add_edge(1, 2);
    Strategy even{Player::Even, {1, 0, kNoPos}};
    Strategy odd{Player::Odd, {kNoPos, kNoPos, kNoPos}};
    const Lasso l = play(a, even, odd);
    CHECK(l.prefix.empty());
    CHECK(l.cycle == std::vector<PosId>{0, 1});
    CHECK(dominant(l, a) == 2u);
    CHECK(lasso_winner(l, a) == Player::Even);

    Strategy to_end{Player::Even, {1, 2, kNoPos}};
    const Lasso f = play(a, to_end, odd);
    CHECK(f.finite());
    CHECK(f.prefix == std::vector<PosId>{0, 1, 2});
    CHECK_FALSE(dominant(f, a).has_value());
    CHECK(lasso_winner(f, a) == Player::Even);  // Odd is stuck

    Strategy undefined{Player::Even, {kNoPos, 0, kNoPos}};
    CHECK_THROWS_AS(play(a, undefined, odd), Error);
    Strategy non_edge{Player::Even, {0, 0, kNoPos}};
    CHECK_THROWS_AS(play(a, non_edge, odd), Error);
    CHECK(store_strategy(to_end) == "0 -> 1\n1 -> 2\n");
}

TEST_CASE("arena equivalence by initial winner") {
    CHECK(arena_eq_winner(two_cycle(2, 1), two_cycle(0, 0)));
    CHECK_FALSE(arena_eq_winner(two_cycle(2, 1), two_cycle(0, 1)));
}

TEST_CASE("exhaustive oracle on arenas with up to three positions") {
    std::size_t count = 0, mismatches = 0;
    for (unsigned n = 1; n <= 3; ++n)
        oracle::for_each_arena(n, 2, [&](const oracle::TinyArena& t) {
            ++count;
            if (solve(t.to_arena()).winner != oracle::brute_force_winners(t)) ++mismatches;
        });
    CHECK(count == 6 * 2 + 21 * 16 + 56 * 512);
    CHECK(mismatches == 0);
}

TEST_CASE("oracle on seeded random arenas") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 150; ++i) {
        const auto t = oracle::random_arena(rng, 7, 4);
        CAPTURE(i);
        CHECK(solve(t.to_arena()).winner == oracle::brute_force_winners(t));
    }
}

TEST_CASE("winning strategies survive random counter-strategies") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 60; ++i) {
        const auto t = oracle::random_arena(rng, 8, 3);
        const Arena a = t.to_arena();
        const Solution s = solve(a);
        for (int k = 0; k < 200; ++k) {
            const Strategy even_counter = random_strategy(a, Player::Even, rng);
            const Strategy odd_counter = random_strategy(a, Player::Odd, rng);
            for (PosId v = 0; v < a.size(); ++v) {
                const Player w = s.winner_at(v);
                // the winner's strategy is total on its region; fill the rest arbitrarily
                Strategy mine = s.strategy(w);
                const Strategy& filler = w == Player::Even ? even_counter : odd_counter;
                for (PosId u = 0; u < a.size(); ++u)
                    if (mine.at(u) == kNoPos) mine.choice[u] = filler.at(u);
                const Lasso l = w == Player::Even ? play(a, mine, odd_counter, v) : play(a, even_counter, mine, v);
                CHECK(lasso_winner(l, a) == w);
                for (PosId u : l.prefix) CHECK(s.winner_at(u) == w);
                for (PosId u : l.cycle) CHECK(s.winner_at(u) == w);
            }
        }
    }
}

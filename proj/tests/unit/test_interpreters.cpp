#include <doctest.h>

#include "mugames/corpus.hpp"
#include "mugames/interpreters.hpp"
#include "mugames/semantics.hpp"
#include "mugames/solver.hpp"

using namespace mugames;

TEST_CASE("parity formulas") {
    CHECK(parity_formula({0, 0}).to_string() == "nu X_0. E_0 & <>X_0 | O_0 & []X_0");
    CHECK(parity_formula({1, 1}).to_string() == "mu X_1. E_1 & <>X_1 | O_1 & []X_1");
    CHECK(parity_formula({0, 1}).to_string() ==
          "mu X_1. nu X_0. E_0 & <>X_0 | (O_0 & []X_0 | (E_1 & <>X_1 | O_1 & []X_1))");
    CHECK(parity_formula({1, 2}).to_string() ==
          "nu X_2. mu X_1. E_1 & <>X_1 | (O_1 & []X_1 | (E_2 & <>X_2 | O_2 & []X_2))");
    for (Interval I : {Interval{0, 0}, Interval{0, 1}, Interval{1, 2}, Interval{0, 2}, Interval{1, 3}}) {
        CAPTURE(I.to_string());
        const Formula f = parity_formula(I);
        CHECK(f.is_guarded());
        CHECK(assign_priorities(f).index() == I);
    }
}

TEST_CASE("parity formulas decide parity games") {
    // the formula holds on the encoding exactly when Even wins
    Arena a;
    a.add_position(Player::Even, 1);
    a.add_position(Player::Odd, 2);
    a.add_position(Player::Even, 1);
    a.add_edge(0, 1);
    a.add_edge(0, 2);
    a.add_edge(1, 0);
    a.add_edge(2, 2);
    CHECK(holds(encode(a), parity_formula({1, 2})) == (initial_winner(a) == Player::Even));
    a.position(1).priority = 1;
    CHECK(holds(encode(a), parity_formula({1, 2})) == (initial_winner(a) == Player::Even));
}

TEST_CASE("segment bounds") {
    CHECK(segment_bound(parse("P")) == 1);
    CHECK(segment_bound(parse("<>P")) == 1);
    CHECK(segment_bound(parse(samples::kModalZero)) == 2);
    CHECK(segment_bound(parse(samples::kModalOne)) == 4);
    CHECK(segment_bound(parse("nu X. P & []X")) == 3);
    CHECK(segment_bound(parse(samples::kAlternating)) == 6);
    CHECK_THROWS_AS(segment_bound(parse("mu X. X")), Error);
}

TEST_CASE("bounded formulas") {
    CHECK(bounded_formula(0, 3, {0, 1}).to_string() == "ff");
    CHECK(bounded_formula(1, 0, {1, 1}).to_string() ==
          "E_1 & (~M & <>ff) | (E_1 & (M & ff) | (O_1 & (~M & []ff) | O_1 & (M & tt)))");
    const Formula b = bounded_formula(2, 1, {0, 1});
    CHECK_FALSE(b.has_fixpoints());
    CHECK(b.modal_depth() == 4);  // p * (m + 1): a marked step restarts the segment
}

TEST_CASE("bounded games") {
    const Arena a = load_arena("init a\na 1 0 b \"a\"\nb 1 0 a \"b\" M\n");
    const Arena g0 = bounded_game(a, 0);
    CHECK(g0.size() == 2);
    CHECK(g0.position(1).successors.empty());
    CHECK(g0.position(1).label == "b#0");
    const Arena g2 = bounded_game(a, 2);
    CHECK(g2.size() == 6);
    CHECK(g2.position(0).label == "a#2");
    CHECK(initial_winner(g2) == Player::Odd);  // Even runs out of moves
    CHECK_THROWS_AS(bounded_game(load_arena("init a\na 1 0 a \"a\"\n"), 1), Error);
}

TEST_CASE("truncation and bounded games agree for modal formulas") {
    const auto corpus = build_corpus({"P"}, {2, 40, 6, 0});
    struct Case {
        const char* text;
        unsigned depth;
    } cases[] = {{samples::kModalZero, 0}, {samples::kModalOne, 1}};
    for (const auto& c : cases) {
        CAPTURE(c.text);
        const Formula f = parse(c.text);
        const Formula b = bounded_formula(segment_bound(f), c.depth, *assign_priorities(f).index());
        for (const auto& t : corpus) {
            const Arena a = mc_game(t, f);
            const bool w = initial_winner(a) == Player::Even;
            CHECK(holds(truncate(t, c.depth), f) == w);
            CHECK((initial_winner(bounded_game(a, c.depth)) == Player::Even) == w);
            CHECK(holds(encode(a), b) == w);
        }
    }
}

TEST_CASE("model search verdicts") {
    const Formula f = parse("nu X. (P & <>X) | mu Y. (Q & <>Y)");
    const auto corpus = build_corpus(alphabet_of(f), {2, 20, 5, 0});
    const Verdicts v = search_verdicts(f, corpus);
    CHECK(v == Verdicts{{"Y", false}});
    const Formula g = parse("mu Y. (Q | <>Y)");
    CHECK(search_verdicts(g, corpus) == Verdicts{{"Y", true}});
}

TEST_CASE("Pi1 template") {
    CHECK(pi1_interpreter(parse("nu X. []X"), {}).to_string() == "nu Y. E_0 & <>Y | O_0 & []Y");
    CHECK(pi1_interpreter(parse("nu X. (P & []X)"), {}).to_string() == "nu Y. E_0 & <>Y | O_0 & []Y");

    const Formula f = parse("nu X. (P & <>X) | mu Y. (Q & <>Y)");
    const Verdicts dead{{"Y", false}};
    CHECK(pi1_interpreter(f, dead).to_string() == "nu Y. E_0 & <>Y | (O_0 & []Y | (O_1 & []Y | E_1 & ff))");
    CHECK(pi1_interpreter(f, dead, true).to_string() ==
          "nu Y. E_0 & (~E_Y & <>Y) | (E_1 & (~E_Y & <>Y) | (O_0 & []Y | (O_1 & []Y | E_Y & ff)))");
    CHECK_THROWS_AS(pi1_interpreter(f, {}), Error);
    CHECK_THROWS_AS(pi1_interpreter(parse("nu X. <>X | mu Y. (<>Y & []ff)"), {{"Y", false}}), Error);

    const auto corpus = build_corpus(alphabet_of(f), {2, 30, 5, 0});
    CHECK(check_interprets(f, pi1_interpreter(f, dead), corpus).passed());
    CHECK(check_interprets(f, pi1_interpreter(f, dead, true), corpus, true).passed());
    CHECK(index_class(pi1_interpreter(f, dead)).to_string() == "{0} Π1");
}

#include <doctest.h>

#include "../support/challenge_plays.hpp"

using namespace mugames;

using namespace mugames::plays;

TEST_CASE("configuration basics") {
    const ChallengeConfig s = ChallengeConfig::sigma2({1, 1}, 2);
    CHECK(s.columns() == std::vector<unsigned>{0, 2});
    CHECK(s.rows() == std::vector<unsigned>{0});
    CHECK(ChallengeConfig::sigma2({1, 3}, 2).columns() == std::vector<unsigned>{0, 2, 4});
    CHECK(ChallengeConfig::sigma2({0, 2}, 2).columns() == std::vector<unsigned>{0, 2});
    const ChallengeConfig g = ChallengeConfig::general({1, 3}, {1, 3}, 2);
    CHECK(g.rows() == std::vector<unsigned>{1, 3});
    CHECK(g.columns() == std::vector<unsigned>{1, 3});
    CHECK_FALSE(g.priority().has_value());
    CHECK(g.to_string() == "1: 1=met/2 3=met/2\n3: 1=met/2 3=met/2\n");

    ChallengeConfig c = g;
    c.set(1, 1, true, 1);
    CHECK_FALSE(c.valid());  // opened out of order
    c.set(1, 3, true, 1);
    CHECK(c.valid());
    CHECK(c.priority() == 1u);
    CHECK(c.level() == 1u);
    c.set(3, 3, true, 0);
    CHECK(c.level() == 3u);
    CHECK(c.priority() == 1u);
    c.set(3, 3, true, 3);
    CHECK_FALSE(c.valid());  // counter above the bound
}

TEST_CASE("Sigma2 rules") {
    ChallengeConfig c = ChallengeConfig::sigma2({1, 3}, 1);
    CHECK_THROWS_AS(sigma2_open(c, 2), Error);  // 4 must be open first
    CHECK_THROWS_AS(sigma2_open(c, 3), Error);  // no 3-challenge
    c = sigma2_open(c, 4);
    CHECK(c.is_open(0, 4));
    CHECK(c.counter(0, 4) == 0);
    CHECK_THROWS_AS(sigma2_open(c, 4), Error);  // already open
    c = sigma2_open(c, 2);
    c = sigma2_arrive(c, 3);  // odd priority: no change
    CHECK(c.is_open(0, 2));
    c = sigma2_arrive(c, 2);  // met; lower challenges reset
    CHECK_FALSE(c.is_open(0, 2));
    CHECK(c.counter(0, 2) == 0);
    CHECK(c.is_open(0, 4));
    CHECK(c.counter(0, 0) == 1);
    CHECK_THROWS_AS(sigma2_open(c, 2), Error);  // counter exhausted
}

TEST_CASE("general rules") {
    ChallengeConfig c = ChallengeConfig::general({1, 3}, {1, 3}, 2);
    c = general_action(c, {ChallengeAction::Kind::Open, 1, 1});
    CHECK(c.is_open(1, 1));
    CHECK(c.is_open(1, 3));
    CHECK(c.counter(1, 3) == 1);
    c = general_action(c, {ChallengeAction::Kind::Open, 3, 3});
    CHECK(c.is_open(3, 3));
    CHECK_FALSE(c.is_open(3, 1));
    const ChallengeConfig r1 = general_action(c, {ChallengeAction::Kind::Reset, 1, 0});
    CHECK_FALSE(r1.is_open(1, 3));
    CHECK(r1.counter(1, 3) == 2);
    CHECK(r1.is_open(3, 3));
    const ChallengeConfig r3 = general_action(c, {ChallengeAction::Kind::Reset, 3, 0});
    CHECK(r3 == ChallengeConfig::general({1, 3}, {1, 3}, 2));
    CHECK_THROWS_AS(general_action(c, {ChallengeAction::Kind::Reset, 2, 0}), Error);
    CHECK_THROWS_AS(general_action(c, {ChallengeAction::Kind::Open, 2, 1}), Error);

    const GeneralStep at2 = general_arrive(c, 2);
    CHECK_FALSE(at2.odd_wins);
    CHECK_FALSE(at2.config.is_open(1, 1));
    CHECK(at2.config.counter(1, 1) == 2);
    CHECK(at2.config.is_open(1, 3));
    const GeneralStep at3 = general_arrive(c, 3);
    CHECK_FALSE(at3.odd_wins);  // counters 1 and 2
    CHECK_FALSE(at3.config.is_open(1, 3));
    CHECK(at3.config.counter(1, 3) == 1);
    ChallengeConfig z = ChallengeConfig::general({1, 3}, {0, 1}, 1);
    z = general_action(z, {ChallengeAction::Kind::Open, 1, 3});
    CHECK(general_arrive(z, 3).odd_wins);
}

TEST_CASE("script parsing") {
    const auto steps = parse_challenge_script("# opening\nopen 2\nopen 0 # both\nmove 1\n\nreset 1\nopen 1 3\nmove 0\n");
    REQUIRE(steps.size() == 2);
    CHECK(steps[0].actions.size() == 2);
    CHECK(steps[0].move == 1);
    CHECK(steps[0].line == 4);
    CHECK(steps[1].actions[0].kind == ChallengeAction::Kind::Reset);
    CHECK(steps[1].actions[1].level == 1);
    CHECK(steps[1].actions[1].priority == 3);
    CHECK_THROWS_AS(parse_challenge_script("open\nmove 1\n"), ParseError);
    CHECK_THROWS_AS(parse_challenge_script("move x\n"), ParseError);
    CHECK_THROWS_AS(parse_challenge_script("open 2\n"), ParseError);
    CHECK_THROWS_AS(parse_challenge_script("jump 1\n"), ParseError);
}

TEST_CASE("Sigma2 scripted plays") {
    CHECK(sigma2_plays().size() >= 12);
    for (const auto& p : sigma2_plays()) {
        CAPTURE(p.name);
        CHECK(check_play(p) == "");
    }
}

TEST_CASE("Sigma2 scripts that break the rules") {
    const Arena three = load_arena(kThreeTwo);
    CHECK_THROWS_AS(adjudicate_challenge(three, parse_challenge_script("open 2\nmove 1\n"), ChallengeVariant::Sigma2, 1),
                    ParseError);
    const Arena ones = load_arena(kOneTwo);
    // third opening with counter 0
    CHECK_THROWS_AS(adjudicate_challenge(ones,
                                         parse_challenge_script("open 2\nmove 1\nmove 0\nopen 2\nmove 1\nmove 0\n"
                                                                "open 2\nmove 1\n"),
                                         ChallengeVariant::Sigma2, 2),
                    ParseError);
    CHECK_THROWS_AS(adjudicate_challenge(ones, parse_challenge_script("reset 1\nmove 1\n"), ChallengeVariant::Sigma2, 2),
                    ParseError);
    CHECK_THROWS_AS(adjudicate_challenge(ones, parse_challenge_script("move 0\n"), ChallengeVariant::Sigma2, 2),
                    ParseError);  // no edge a -> a
    CHECK_THROWS_AS(adjudicate_challenge(load_arena(kOddStuck), parse_challenge_script("move 1\nmove 0\n"),
                                         ChallengeVariant::Sigma2, 2),
                    ParseError);  // play already over
    CHECK_THROWS_AS(adjudicate_challenge(ones, parse_challenge_script("open 2\nmove 1\nmove 0\n"),
                                         ChallengeVariant::Sigma2, 2),
                    Error);  // neither ends nor closes
}

TEST_CASE("general scripted plays") {
    CHECK(general_plays().size() >= 12);
    for (const auto& p : general_plays()) {
        CAPTURE(p.name);
        CHECK(check_play(p) == "");
    }
}

TEST_CASE("a wrong trace is detected") {
    Play p = general_plays()[1];
    p.winner = Player::Odd;
    CHECK(check_play(p) == "winner differs");
    p = sigma2_plays()[2];
    p.cycle_start = 1;
    CHECK(check_play(p) == "cycle start differs");
}

TEST_CASE("general scripts that break the rules") {
    const Arena a = load_arena(kLoop);
    auto adjudicate = [&](const char* script) {
        return adjudicate_challenge(a, parse_challenge_script(script), ChallengeVariant::General, 2);
    };
    CHECK_THROWS_AS(adjudicate("reset 3\nmove 1\n"), ParseError);  // row 3 absent for target {0,1}
    CHECK_THROWS_AS(adjudicate("open 3\nmove 1\n"), ParseError);   // level 0 absent
    CHECK_THROWS_AS(adjudicate("open 2 3\nmove 1\n"), ParseError);
    CHECK_NOTHROW(adjudicate("open 1 3\nopen 1 3\nmove 1\nmove 0\nmove 1\n"));  // already open: no-op
}

TEST_CASE("bounded challenge solver") {
    // Sigma2: Odd opens 2 and keeps it open on the odd loop
    CHECK(solve_challenge_bounded(load_arena(kOnes), ChallengeVariant::Sigma2, 2) == Player::Odd);
    // each opening is met at b, so Odd runs out of counter
    CHECK(solve_challenge_bounded(load_arena(kOneTwo), ChallengeVariant::Sigma2, 2) == Player::Even);
    // general: Even holds the 3-challenge open on the even loop
    CHECK(solve_challenge_bounded(load_arena(kLoop), ChallengeVariant::General, 2) == Player::Even);
    CHECK(solve_challenge_bounded(load_arena(kEvenEnd), ChallengeVariant::General, 2) == Player::Odd);
    CHECK_FALSE(solve_challenge_bounded(load_arena(kBranch), ChallengeVariant::General, 3, {1, 3}, 10).has_value());
}

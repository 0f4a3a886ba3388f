#include <doctest.h>

#include "mugames/corpus.hpp"
#include "mugames/interpreters.hpp"
#include "mugames/product.hpp"

using namespace mugames;

namespace {

std::vector<Structure> small_corpus(const Formula& f) { return build_corpus(alphabet_of(f), {2, 40, 5, 3}); }

}  // namespace

TEST_CASE("cleanup") {
    CHECK(cleanup(parse("mu X. P")).to_string() == "P");
    CHECK(cleanup(parse("nu X. mu Y. <>X")).to_string() == "nu X. <>X");
    CHECK(cleanup(parse("P & tt")).to_string() == "P");
    CHECK(cleanup(parse("P | tt")).to_string() == "tt");
    CHECK(cleanup(parse("<>ff | Q")).to_string() == "Q");
}

TEST_CASE("product with the parity formula of its own index") {
    for (const auto& nf : bundled_formulas()) {
        CAPTURE(nf.name);
        const Formula psi = guard(parse(nf.text));
        const auto omega = assign_priorities(psi);
        if (!omega.index()) continue;
        const Formula win = parity_formula(*omega.index());
        const ProductResult r = product(psi, win);
        CHECK(is_order_preserving(r.formula, r.omega));
        // inherited priorities stay inside the index of Win
        const auto idx = r.omega.index();
        if (idx) {
            CHECK(omega.index()->contains(idx->lo));
            CHECK(omega.index()->contains(idx->hi));
        }
        CHECK(check_equivalent(psi, r.formula, small_corpus(psi)).passed());
    }
}

TEST_CASE("collapsing the alternating formula") {
    const Formula psi = parse(samples::kAlternating);
    // Even wins these games only by driving Odd into a dead end
    const Formula win = parse("mu X. (E_0 & <>X) | (O_0 & []X) | (E_1 & <>X) | (O_1 & []X)");
    const SimplifyReport r = simplify(psi, win, small_corpus(psi));
    CHECK(r.equivalent());
    CHECK(r.new_index.to_string() == "{1} Σ1");
    CHECK(check_equivalent(r.output, parse(samples::kAlternatingCollapsed), enumerate_structures(3, {})).passed());
    CHECK(r.to_string().rfind("mugames-simplify 1\n", 0) == 0);
}

TEST_CASE("a wrong Win is caught") {
    const Formula psi = parse(samples::kAlternating);
    const SimplifyReport r = simplify(psi, parse("ff"), small_corpus(psi));
    REQUIRE_FALSE(r.equivalent());
    const auto& c = *r.check.counterexample;
    CHECK(c.expected == holds(c.structure, psi));
    CHECK_FALSE(c.actual);
}

TEST_CASE("Win must speak about arena labels") {
    const Formula psi = parse("mu X. P | <>X");
    CHECK_THROWS_AS(product(psi, parse("nu Y. P & <>Y")), Error);
    CHECK_NOTHROW(product(psi, parse("nu Y. (E_1 | ~M) & <>Y")));
    CHECK_THROWS_AS(product(psi, parse("nu Y. E_Z & <>Y")), Error);  // Z is not a variable of Ψ
    CHECK_NOTHROW(product(psi, parse("nu Y. E_X & <>Y")));
}

TEST_CASE("step budget") {
    const Formula psi = parse(samples::kAlternating);
    const Formula win = parity_formula({0, 1});
    CHECK_THROWS_AS(product(psi, assign_priorities(psi), win, assign_priorities(win), 2), Error);
    CHECK(product(psi, win).steps > 2);
}

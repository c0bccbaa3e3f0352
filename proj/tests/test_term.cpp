#include <doctest.h>

#include <cstdint>
#include <string>
#include <vector>

#include "octoramsey/term.hpp"

using namespace octoramsey;

namespace {

Assignment units_assignment(std::initializer_list<std::pair<std::uint32_t, int>> pairs) {
    Assignment mu;
    for (const auto& [n, j] : pairs) mu[n] = SignedUnit{+1, j};
    return mu;
}

// Independent Catalan numbers via the convolution recurrence.
std::vector<std::size_t> catalan_upto(std::size_t n) {
    std::vector<std::size_t> c{1};
    for (std::size_t m = 1; m <= n; ++m) {
        std::size_t sum = 0;
        for (std::size_t i = 0; i < m; ++i) sum += c[i] * c[m - 1 - i];
        c.push_back(sum);
    }
    return c;
}

// Leaves for roundtrip stress: alternate between variables and units.
Term mixed_leaf(std::size_t i) {
    if (i % 2 == 0) return Term::var(static_cast<std::uint32_t>(10 * i + 3));
    return Term::unit(static_cast<int>(i % 8));
}

}  // namespace

TEST_SUITE("term") {

TEST_CASE("parse shapes") {
    const Term t = parse("(e1(e2e3))");
    REQUIRE(t.is_pair());
    CHECK(t.left().is_unit());
    CHECK(t.left().unit_index() == 1);
    REQUIRE(t.right().is_pair());
    CHECK(t.right().left().unit_index() == 2);
    CHECK(t.right().right().unit_index() == 3);

    const Term v = parse("x0");
    REQUIRE(v.is_var());
    CHECK(v.var_index() == 0);

    CHECK(parse(" ( x12 e7 ) ") == Term::pair(Term::var(12), Term::unit(7)));
}

TEST_CASE("parse errors carry offsets") {
    CHECK_THROWS_AS(parse("(x0x1"), SyntaxError);
    try {
        parse("(x0x1");
    } catch (const SyntaxError& e) {
        CHECK(e.offset() == 0);  // the unmatched open bracket
    }
    CHECK_THROWS_AS(parse("e8"), SyntaxError);
    CHECK_THROWS_AS(parse("x0 x1"), SyntaxError);   // trailing input
    CHECK_THROWS_AS(parse("(x0x1))"), SyntaxError); // trailing bracket
    CHECK_THROWS_AS(parse(""), SyntaxError);
    CHECK_THROWS_AS(parse("(x0)"), SyntaxError);    // pairs need two subterms
    CHECK_THROWS_AS(parse("y0"), SyntaxError);
}

TEST_CASE("render") {
    CHECK(render(Term::pair(Term::var(0), Term::pair(Term::var(1), Term::var(2)))) ==
          "(x0(x1x2))");
    CHECK(render(Term::unit(7)) == "e7");
    CHECK(render(parse("( x0 ( x1 x2 ) )")) == "(x0(x1x2))");
}

TEST_CASE("roundtrip over all terms of up to 9 leaves") {
    for (std::size_t n = 1; n <= 9; ++n) {
        std::vector<Term> leaves;
        for (std::size_t i = 0; i < n; ++i) leaves.push_back(mixed_leaf(i));
        for (const Term& t : enumerate_bracketings(leaves)) {
            CHECK(parse(render(t)) == t);
        }
    }
}

TEST_CASE("unit evaluation") {
    CHECK(eval_units(parse("(e1(e2e3))")) == SignedUnit{-1, 0});
    CHECK(eval_units(parse("e5")) == SignedUnit{+1, 5});
    CHECK(eval_units(parse("((e5e6)e7)")) == SignedUnit{+1, 4});
    CHECK_THROWS_AS(eval_units(parse("(e1x0)")), NotGround);
}

TEST_CASE("assigned evaluation") {
    const Assignment mu = units_assignment({{0, 5}, {1, 6}, {2, 7}});
    CHECK(eval_assigned(parse("(x0(x1x2))"), mu) == SignedUnit{-1, 4});
    CHECK(eval_assigned(parse("((x0x1)x2)"), mu) == SignedUnit{+1, 4});
    CHECK(eval_assigned(parse("x3"), units_assignment({{3, 2}})) == SignedUnit{+1, 2});
    CHECK_THROWS_AS(eval_assigned(parse("x9"), mu), UnboundVariable);
}

TEST_CASE("assigned evaluation equals substitution followed by unit evaluation") {
    for (std::size_t n = 1; n <= 4; ++n) {
        std::vector<std::uint32_t> indices;
        for (std::size_t i = 0; i < n; ++i) indices.push_back(static_cast<std::uint32_t>(i));
        for (const Term& t : enumerate_orderly(indices)) {
            std::vector<int> alpha(n, 0);
            for (;;) {
                Assignment mu;
                for (std::size_t i = 0; i < n; ++i)
                    mu[static_cast<std::uint32_t>(i)] = SignedUnit{+1, alpha[i]};
                CHECK(eval_assigned(t, mu) == eval_units(substitute(t, mu)));
                std::size_t i = n;
                while (i > 0 && alpha[i - 1] == 7) alpha[--i] = 0;
                if (i == 0) break;
                ++alpha[i - 1];
            }
        }
    }
}

TEST_CASE("orderliness and precedence") {
    CHECK(is_orderly(parse("(x0(x1x2))")));
    CHECK_FALSE(is_orderly(parse("(x2x1)")));
    CHECK(precedes(parse("(x0x1)"), parse("x2")));
    CHECK_FALSE(precedes(parse("x2"), parse("(x0x1)")));
    CHECK(var_indices(parse("((x3x5)x9)")) == std::vector<std::uint32_t>{3, 5, 9});
    CHECK_THROWS_AS(var_indices(parse("(x0e1)")), NotVariableTerm);
    CHECK_THROWS_AS(is_orderly(parse("e1")), NotVariableTerm);
}

TEST_CASE("orderly enumeration") {
    const std::vector<std::uint32_t> single{0};
    const auto one = enumerate_orderly(single);
    REQUIRE(one.size() == 1);
    CHECK(render(one[0]) == "x0");

    const std::vector<std::uint32_t> three{0, 1, 2};
    const auto two = enumerate_orderly(three);
    REQUIRE(two.size() == 2);
    CHECK(render(two[0]) == "(x0(x1x2))");
    CHECK(render(two[1]) == "((x0x1)x2)");

    const auto catalan = catalan_upto(8);
    for (std::size_t n = 1; n <= 9; ++n) {
        std::vector<std::uint32_t> indices;
        for (std::size_t i = 0; i < n; ++i) indices.push_back(static_cast<std::uint32_t>(2 * i));
        const auto all = enumerate_orderly(indices);
        CHECK(all.size() == catalan[n - 1]);
        for (const Term& t : all) CHECK(is_orderly(t));
    }
}

TEST_CASE("enumeration rejects bad index lists") {
    CHECK_THROWS_AS(enumerate_orderly(std::vector<std::uint32_t>{}), EmptyIndexList);
    CHECK_THROWS_AS(enumerate_orderly(std::vector<std::uint32_t>{1, 1}), NonIncreasingIndices);
    CHECK_THROWS_AS(enumerate_orderly(std::vector<std::uint32_t>{2, 1}), NonIncreasingIndices);
}

}  // TEST_SUITE

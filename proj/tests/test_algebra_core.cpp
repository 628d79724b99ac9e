#include "gt/lie.hpp"
#include "gt/linalg.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace gt;

TEST_CASE("product truncates above the bound") {
    AlphabetPtr al = testing::letters(2);
    TensorElement a = TensorElement::letter(al, 2, 0), b = TensorElement::letter(al, 2, 1);
    TensorElement ab = product(a, b);
    CHECK(ab.coeff({0, 1}) == 1);
    CHECK(product(ab, a).is_zero());
}

TEST_CASE("mixed alphabets are rejected") {
    TensorElement a = TensorElement::letter(testing::letters(2), 3, 0);
    TensorElement b = TensorElement::letter(testing::letters(3), 3, 0);
    CHECK_THROWS_AS(a + b, ContextMismatch);
    TensorElement c = TensorElement::letter(testing::letters(2), 4, 0);
    CHECK_THROWS_AS(a + c, ContextMismatch);
}

TEST_CASE("Hopf identities on random elements") {
    std::mt19937 rng(11);
    AlphabetPtr al = testing::letters(3);
    const int N = 5;
    for (int trial = 0; trial < 20; ++trial) {
        TensorElement a = testing::random_element(rng, al, N, 3, 4, true);
        TensorElement b = testing::random_element(rng, al, N, 3, 4, true);
        // Delta is multiplicative
        CHECK(coproduct(product(a, b)) == coproduct(a).multiply(coproduct(b)));
        // S is an antihomomorphism and m(S (x) id)Delta = eps
        CHECK(antipode(product(a, b)) == product(antipode(b), antipode(a)));
        TensorSquare d = coproduct(a);
        TensorSquare sd(al, N);
        for (const auto& [k, c] : d.terms())
            for (const auto& [w, s] : antipode(TensorElement::word(al, N, k.first)).terms()) sd.add(w, k.second, c * s);
        CHECK(sd.multiply_legs() == TensorElement::unit(al, N, counit(a)));
        CHECK(coassoc_left(a) == coassoc_right(a));
        CHECK(d.left_contract_counit() == a);
        CHECK(d.right_contract_counit() == a);
    }
}

TEST_CASE("exp of a primitive is group-like and invertible") {
    AlphabetPtr al = testing::letters(2);
    const int N = 5;
    TensorElement x = TensorElement::letter(al, N, 0) + lie_bracket(TensorElement::letter(al, N, 0), TensorElement::letter(al, N, 1));
    CHECK(is_primitive(x));
    TensorElement e = exp_truncated(x);
    CHECK(is_group_like(e));
    CHECK(product(e, inverse_unipotent(e)) == TensorElement::unit(al, N));
    CHECK(inverse_unipotent(e) == exp_truncated(-x));
}

TEST_CASE("words and weighted degrees") {
    AlphabetPtr al = make_alphabet({"x", "z"}, {1, 2});
    CHECK(words_of_degree(*al, 1).size() == 1);
    CHECK(words_of_degree(*al, 2).size() == 2);
    CHECK(words_of_degree(*al, 3).size() == 3);
    CHECK(words_of_degree(*al, 4).size() == 5);
}

TEST_CASE("free Lie dimensions match Lyndon counts") {
    AlphabetPtr al = make_alphabet({"x", "y", "z"}, {1, 1, 2});
    std::vector<long long> dims = free_lie_dimensions(*al, 7);
    for (int d = 1; d <= 7; ++d) CHECK(dims[static_cast<std::size_t>(d)] == static_cast<long long>(lyndon_words(*al, d).size()));
    AlphabetPtr two = testing::letters(2);
    std::vector<long long> w = free_lie_dimensions(*two, 6);
    CHECK(w == std::vector<long long>{0, 2, 1, 2, 3, 6, 9});
}

TEST_CASE("Lyndon coordinates round trip") {
    AlphabetPtr al = testing::letters(3);
    LyndonExpander ex(al, 5);
    std::map<Word, Rational> coords{{{0, 1}, 2}, {{0, 0, 1}, Rational(-1, 3)}, {{0, 1, 2, 2}, 5}};
    TensorElement lie = ex.from_coordinates(coords);
    CHECK(ex.coordinates(lie) == coords);
    CHECK(standard_factorization({0, 0, 1}) == std::pair<Word, Word>{{0}, {0, 1}});
}

TEST_CASE("echelon rank and nullspace") {
    Echelon e(3);
    CHECK(e.insert(RatRow{{0, 1}, {1, 2}}));
    CHECK(e.insert(RatRow{{1, 1}, {2, 1}}));
    CHECK_FALSE(e.insert(RatRow{{0, 2}, {1, 5}, {2, 1}}));
    CHECK(e.rank() == 2);
    auto ns = e.nullspace();
    REQUIRE(ns.size() == 1);
    CHECK(ns[0][0] + 2 * ns[0][1] == 0);
    CHECK(ns[0][1] + ns[0][2] == 0);
}

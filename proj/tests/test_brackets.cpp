#include "gt/brackets.hpp"
#include "gt/surface.hpp"
#include "gt/sweep.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace gt;

TEST_CASE("Leibniz-form double bracket matches the Sweedler expansion") {
    std::mt19937 rng(23);
    AlphabetPtr al = testing::letters(2);
    const int N = 5;
    for (int trial = 0; trial < 8; ++trial) {
        FoxPairing rho = testing::random_pairing(rng, al, N);
        TensorElement a = testing::random_element(rng, al, N, 3, 3), b = testing::random_element(rng, al, N, 2, 3);
        CHECK(double_bracket_fast(rho, a, b) == double_bracket(rho, a, b));
    }
}

TEST_CASE("cyclic words") {
    CHECK(canonical_rotation({2, 0, 1}) == Word{0, 1, 2});
    CHECK(canonical_rotation({1, 0, 1, 0}) == Word{0, 1, 0, 1});
    AlphabetPtr al = testing::letters(2);
    // necklaces on two letters: 2, 3, 4, 6
    CHECK(cyclic_words_of_degree(*al, 1).size() == 2);
    CHECK(cyclic_words_of_degree(*al, 2).size() == 3);
    CHECK(cyclic_words_of_degree(*al, 3).size() == 4);
    CHECK(cyclic_words_of_degree(*al, 4).size() == 6);
    TensorElement ab = TensorElement::word(al, 3, {0, 1}), ba = TensorElement::word(al, 3, {1, 0});
    CHECK(cyclic_project(ab - ba).is_zero());
}

TEST_CASE("bracket of x1 and y1 on the torus with one boundary") {
    SurfaceContext ctx = SurfaceContext::make(1, 1, 4);
    CyclicElement x(ctx.alphabet, 4), y(ctx.alphabet, 4);
    x.add({ctx.x(1)}, 1);
    y.add({ctx.y(1)}, 1);
    CyclicElement expected(ctx.alphabet, 4);
    expected.add({}, 1);
    CHECK(bracket_cyclic(make_rho_G(ctx), x, y) == expected);
}

TEST_CASE("bracket is antisymmetric and exact pairings give zero") {
    std::mt19937 rng(29);
    AlphabetPtr al = testing::letters(2);
    const int N = 4;
    FoxPairing rho = testing::random_pairing(rng, al, N);
    std::vector<Word> W = cyclic_words_up_to_degree(*al, 3);
    LetterBrackets kappa(rho);
    auto table = bracket_sweep(kappa, W, W, N, false);
    (void)table;
    FoxDerivative l = testing::random_fox(rng, Side::Left, al, N), r = testing::random_fox(rng, Side::Right, al, N);
    LetterBrackets tau(make_exact_pairing(l, r));
    for (const CyclicElement& e : bracket_sweep(tau, W, W, N, false)) CHECK(e.is_zero());
    Cobracket delta(make_exact_qder(l, r));
    for (const CyclicSquare& c : cobracket_sweep(delta, W, false)) CHECK(c.is_zero());
}

TEST_CASE("parallel and serial sweeps agree") {
    SurfaceContext ctx = SurfaceContext::make(1, 1, 5);
    LetterBrackets kappa(make_rho_G(ctx));
    std::vector<Word> W = cyclic_words_up_to_degree(*ctx.alphabet, 3);
    CHECK(bracket_sweep(kappa, W, W, 5, true) == bracket_sweep(kappa, W, W, 5, false));
    Cobracket delta(make_q_framing(ctx, Framing::parse("rot:2", 1)));
    CHECK(cobracket_sweep(delta, W, true) == cobracket_sweep(delta, W, false));
}

TEST_CASE("cobracket is antisymmetric") {
    SurfaceContext ctx = SurfaceContext::make(1, 1, 5);
    Cobracket delta(make_q_framing(ctx, Framing::adapted(1)));
    for (const Word& w : cyclic_words_up_to_degree(*ctx.alphabet, 4)) {
        CyclicSquare c = delta.on_word(w);
        CHECK((c + c.swapped()).is_zero());
    }
}

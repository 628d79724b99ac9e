#include "gt/fox.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace gt;

TEST_CASE("table evaluation agrees with the recursive evaluator") {
    std::mt19937 rng(3);
    AlphabetPtr al = testing::letters(3);
    const int N = 5;
    for (int trial = 0; trial < 10; ++trial) {
        FoxDerivative l = testing::random_fox(rng, Side::Left, al, N), r = testing::random_fox(rng, Side::Right, al, N);
        FoxPairing rho = testing::random_pairing(rng, al, N);
        QuasiDerivation q = testing::random_qder(rng, rho);
        TensorElement a = testing::random_element(rng, al, N, 3, 3, true);
        TensorElement b = testing::random_element(rng, al, N, 2, 3, true);
        CHECK(l.eval(a) == fox_eval_recursive(l, a));
        CHECK(r.eval(a) == fox_eval_recursive(r, a));
        CHECK(rho.eval(a, b) == pairing_eval_recursive(rho, a, b));
        CHECK(q.eval(a) == qder_eval_recursive(q, a));
    }
}

TEST_CASE("Leibniz laws") {
    std::mt19937 rng(5);
    AlphabetPtr al = testing::letters(2);
    const int N = 5;
    FoxDerivative l = testing::random_fox(rng, Side::Left, al, N), r = testing::random_fox(rng, Side::Right, al, N);
    FoxPairing rho = testing::random_pairing(rng, al, N);
    QuasiDerivation q = testing::random_qder(rng, rho);
    for (int trial = 0; trial < 10; ++trial) {
        TensorElement a = testing::random_element(rng, al, N, 2, 3), b = testing::random_element(rng, al, N, 2, 3);
        TensorElement ab = product(a, b);
        CHECK(l.eval(ab) == counit(b) * l.eval(a) + product(a, l.eval(b)));
        CHECK(r.eval(ab) == product(r.eval(a), b) + counit(a) * r.eval(b));
        CHECK(q.eval(ab) == product(q.eval(a), b) + product(a, q.eval(b)) - rho.eval(a, b));
    }
}

TEST_CASE("transposes swap sides") {
    std::mt19937 rng(9);
    AlphabetPtr al = testing::letters(2);
    const int N = 4;
    FoxDerivative l = testing::random_fox(rng, Side::Left, al, N);
    FoxDerivative lt = transpose_fox(l);
    CHECK(lt.side() == Side::Right);
    TensorElement a = testing::random_element(rng, al, N, 3, 3);
    CHECK(lt.eval(a) == antipode(l.eval(antipode(a))));
    CHECK(transpose_fox(lt).eval(a) == l.eval(a));
    FoxPairing rho = testing::random_pairing(rng, al, N);
    CHECK(transpose_pairing(transpose_pairing(rho)).eval(a, a) == rho.eval(a, a));
}

TEST_CASE("incomplete tables throw") {
    AlphabetPtr al = testing::letters(2);
    FoxDerivative d(Side::Left, al, 3);
    d.set(0, TensorElement::unit(al, 3));
    CHECK_THROWS_AS(d.eval(TensorElement::letter(al, 3, 1)), IncompleteTable);
}

TEST_CASE("the distinguished derivative is D") {
    std::mt19937 rng(2);
    AlphabetPtr al = testing::letters(3);
    TensorElement a = testing::random_element(rng, al, 4, 3, 5);
    CHECK(FoxDerivative::distinguished(Side::Left, al, 4).eval(a) == augmentation_part(a));
    CHECK(FoxDerivative::distinguished(Side::Right, al, 4).eval(a) == augmentation_part(a));
}

TEST_CASE("exact quasi-derivation carries +tau") {
    std::mt19937 rng(17);
    AlphabetPtr al = testing::letters(2);
    const int N = 4;
    FoxDerivative l = testing::random_fox(rng, Side::Left, al, N), r = testing::random_fox(rng, Side::Right, al, N);
    QuasiDerivation mu = make_exact_qder(l, r);
    CHECK(mu.is_exact());
    FoxPairing tau = make_exact_pairing(l, r);
    for (int trial = 0; trial < 5; ++trial) {
        TensorElement a = testing::random_element(rng, al, N, 2, 3), b = testing::random_element(rng, al, N, 2, 3);
        CHECK(mu.eval(a) == l.eval(a) + r.eval(a));
        CHECK(mu.eval(product(a, b)) == product(mu.eval(a), b) + product(a, mu.eval(b)) - tau.eval(a, b));
    }
}

TEST_CASE("two-sided derivatives are multiples of D") {
    for (int n : {2, 3}) {
        auto sols = solve_two_sided_derivatives(testing::letters(n), 4);
        REQUIRE(sols.size() == 1);
        // each generator maps to the same multiple of itself
        const auto& t = sols[0];
        Rational c = t[0].coeff({0});
        CHECK(c != 0);
        for (int g = 0; g < n; ++g)
            CHECK(t[static_cast<std::size_t>(g)] == c * TensorElement::letter(testing::letters(n), 4, static_cast<Letter>(g)));
    }
}

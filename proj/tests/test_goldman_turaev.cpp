#include "gt/surface.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace gt;

TEST_CASE("framing parsing") {
    CHECK(Framing::parse("adapted", 2).rot == std::vector<int>{-1, -1});
    CHECK(Framing::parse("rot:(1, -2)", 2).rot == std::vector<int>{1, -2});
    CHECK_THROWS_AS(Framing::parse("rot:1", 2), std::invalid_argument);
    CHECK(Framing::parse("rot:3", 1).r_value(0) == 4);
}

TEST_CASE("the surface pairing is antisymmetric under transpose") {
    SurfaceContext ctx = SurfaceContext::make(1, 2, 4);
    FoxPairing rho = make_rho_G(ctx), t = transpose_pairing(rho);
    for (Letter a = 0; a < ctx.alphabet->size(); ++a)
        for (Letter b = 0; b < ctx.alphabet->size(); ++b) CHECK(t.value(a, b) == -rho.value(a, b));
}

TEST_CASE("double bracket table on generators") {
    for (auto [g, n] : {std::pair{0, 3}, {2, 1}}) {
        SurfaceContext ctx = SurfaceContext::make(g, n, 4);
        CHECK(kappa_table(ctx) == kappa_reference(ctx));
    }
}

TEST_CASE("bialgebra axioms on the torus with one boundary") {
    SurfaceContext ctx = SurfaceContext::make(1, 1, 4);
    for (bool parallel : {true, false}) {
        BialgebraReport rep = verify_bialgebra(ctx, Framing::parse("rot:2", 1), 4, parallel);
        CHECK(rep.checks.size() == 5);
        for (const auto& c : rep.checks) CHECK_MESSAGE(c.pass, c.check, ": ", c.witness);
    }
}

TEST_CASE("a non-framing quasi-derivation breaks the bialgebra") {
    SurfaceContext ctx = SurfaceContext::make(1, 1, 6);
    QuasiDerivation q = make_q_framing(ctx, Framing::adapted(1));
    q.set(ctx.x(1), product(ctx.el(ctx.x(1)), ctx.el(ctx.y(1))));
    CHECK_FALSE(verify_bialgebra(make_rho_G(ctx), q, 3).pass());
}

TEST_CASE("cobracket matches the closed-form oracle") {
    SurfaceContext ctx = SurfaceContext::make(0, 3, 4);
    Framing fr = Framing::parse("rot:0,1,-1", 3);
    QuasiDerivation q = make_q_framing(ctx, fr);
    for (const Word& w : words_up_to_degree(*ctx.alphabet, 4)) {
        if (w.empty()) continue;
        CHECK(project_left_cyclic(dq_map(q, TensorElement::word(ctx.alphabet, 4, w))) == mu_r_oracle(ctx, fr, w));
    }
}

TEST_CASE("Bernoulli numbers and the inner element") {
    std::vector<Rational> B = bernoulli_numbers(6);
    CHECK(B[0] == 1);
    CHECK(B[1] == Rational(-1, 2));
    CHECK(B[2] == Rational(1, 6));
    CHECK(B[3] == 0);
    CHECK(B[4] == Rational(-1, 30));
    SurfaceContext ctx = SurfaceContext::make(1, 1, 4);
    BernoulliResult b = bernoulli_phi(ctx, 4);
    CHECK(b.coefficients[0] == Rational(-1, 2));
    CHECK(b.coefficients[1] == Rational(1, 12));
    CHECK(b.coefficients[2] == 0);
}

TEST_CASE("conjugation defect is exact and closes the square") {
    SurfaceContext ctx = SurfaceContext::make(1, 1, 5);
    TensorElement x = exp_truncated(ctx.el(ctx.y(1)) + ctx.el(ctx.z(1)));
    ConjugationResult r = conjugation_defect(x, make_rho_G(ctx), 3);
    CHECK_MESSAGE(r.commutes, r.witness);
    CHECK(r.rho_h.is_exact());
    CHECK_THROWS_AS(conjugation_defect(ctx.one() + ctx.el(ctx.x(1)) + ctx.el(ctx.y(1)), make_rho_G(ctx), 3),
                    NotGroupLike);
}

TEST_CASE("conjugation gives a Fox-pairing morphism") {
    SurfaceContext ctx = SurfaceContext::make(1, 1, 5);
    FoxPairing rho = make_rho_G(ctx);
    QuasiDerivation q = make_q_framing(ctx, Framing::adapted(1));
    ConjugationMorphism m = conjugation_morphism(exp_truncated(ctx.el(ctx.x(1))), q, rho);
    CheckResult r = check_fox_morphism(m.h, m.left, m.right, q, rho, q, rho, 3);
    CHECK_MESSAGE(r.ok, r.witness);
}

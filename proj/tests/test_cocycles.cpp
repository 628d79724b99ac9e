#include "gt/cocycles.hpp"
#include "gt/surface.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace gt;

namespace {
PairElement pair_of(const TensorElement& x, const TensorElement& y) { return {x, y}; }
}  // namespace

TEST_CASE("pair action is a Lie action") {
    AlphabetPtr al = testing::letters(2);
    const int N = 5;
    TensorElement a = TensorElement::letter(al, N, 0), b = TensorElement::letter(al, N, 1);
    PairElement u = pair_of(a, b), v = pair_of(lie_bracket(a, b), a);
    TensorElement m = TensorElement::word(al, N, {1, 0});
    TensorElement lhs = pair_action(pair_bracket(u, v), m);
    TensorElement rhs = pair_action(u, pair_action(v, m)) - pair_action(v, pair_action(u, m));
    CHECK(lhs == rhs);
}

TEST_CASE("c_rho is alternating") {
    SurfaceContext ctx = SurfaceContext::make(1, 1, 4);
    FoxPairing rho = make_rho_G(ctx);
    PairElement u = pair_of(ctx.el(ctx.x(1)), ctx.el(ctx.y(1))), v = pair_of(ctx.el(ctx.y(1)), ctx.el(ctx.z(1)));
    CHECK(c_rho(rho, u, v) == -c_rho(rho, v, u));
    CHECK(c_rho(rho, u, u).is_zero());
}

TEST_CASE("relative cocycle of a surface is closed") {
    for (auto [g, n] : {std::pair{0, 2}, {1, 1}}) {
        SurfaceContext ctx = SurfaceContext::make(g, n, 4);
        FoxPairing rho = make_rho_G(ctx);
        RelativeCocycle z = e_functor(make_q_framing(ctx, Framing::adapted(n)), rho, 4);
        CheckResult r = check_relative_closed(z, 4);
        CHECK_MESSAGE(r.ok, r.witness);
    }
}

TEST_CASE("a quasi-derivation for the wrong pairing is rejected") {
    SurfaceContext ctx = SurfaceContext::make(1, 1, 4);
    QuasiDerivation q = make_q_framing(ctx, Framing::adapted(1));
    CHECK_THROWS_AS(e_functor(q, FoxPairing::zero(ctx.alphabet, 4), 3), IncompatiblePair);
}

TEST_CASE("extension bracket satisfies Jacobi") {
    SurfaceContext ctx = SurfaceContext::make(1, 1, 5);
    CheckResult r = check_extension_jacobi(make_rho_G(ctx), 5);
    CHECK_MESSAGE(r.ok, r.witness);
    CHECK_THROWS_AS(check_extension_jacobi(make_rho_G(ctx), 6), ContextMismatch);
}

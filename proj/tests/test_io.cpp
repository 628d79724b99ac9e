#include "gt/io.hpp"
#include "gt/surface.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace gt;

TEST_CASE("formatting") {
    SurfaceContext ctx = SurfaceContext::make(1, 1, 4);
    TensorElement e = parse_element("3/2*x1.y1 - z1", ctx.alphabet, 4);
    CHECK(format_element(e) == "3/2*x1.y1 - z1");
    CHECK(format_element(TensorElement(ctx.alphabet, 4)) == "0");
    CHECK(format_word(*ctx.alphabet, {}) == "1");
    CHECK(format_rational(Rational(-3, 6)) == "-1/2");
}

TEST_CASE("parser operators") {
    SurfaceContext ctx = SurfaceContext::make(1, 1, 4);
    const AlphabetPtr& al = ctx.alphabet;
    TensorElement x = ctx.el(ctx.x(1)), y = ctx.el(ctx.y(1));
    CHECK(parse_element("br(x1, y1)", al, 4) == lie_bracket(x, y));
    CHECK(parse_element("(x1 + y1)*(x1 - y1)", al, 4) == product(x + y, x - y));
    CHECK(parse_element("exp(x1)", al, 4) == exp_truncated(x));
    CHECK(parse_element("2", al, 4) == TensorElement::unit(al, 4, 2));
    CyclicElement c = parse_cyclic("|x1.y1| - |y1.x1|", al, 4);
    CHECK(c.is_zero());
}

TEST_CASE("syntax errors report offsets") {
    SurfaceContext ctx = SurfaceContext::make(1, 1, 4);
    try {
        parse_element("q1*", ctx.alphabet, 4);
        FAIL("expected an error");
    } catch (const UnknownGenerator& e) {
        CHECK(e.offset == 0);
    } catch (const ParseError& e) {
        CHECK(e.offset == 3);
    }
    try {
        parse_element("x1*", ctx.alphabet, 4);
        FAIL("expected an error");
    } catch (const ParseError& e) {
        CHECK(e.offset == 3);
        CHECK(std::string(e.what()) == "syntax error at offset 3: unexpected end of input");
    }
    CHECK_THROWS_AS(parse_element("x1 + w2", ctx.alphabet, 4), UnknownGenerator);
}

TEST_CASE("text and JSON round trips") {
    SurfaceContext ctx = SurfaceContext::make(1, 2, 6);
    std::mt19937 rng(41);
    for (int i = 0; i < 50; ++i) {
        TensorElement e = testing::random_element(rng, ctx.alphabet, 6, 6, 1 + i % 5, true);
        CHECK(parse_element(format_element(e), ctx.alphabet, 6) == e);
        CHECK(element_from_json(to_json(e), ctx.alphabet) == e);
        CyclicElement c = cyclic_project(e);
        CHECK(parse_cyclic(format_cyclic(c), ctx.alphabet, 6) == c);
        CHECK(cyclic_from_json(to_json(c), ctx.alphabet) == c);
    }
}

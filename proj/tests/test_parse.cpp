#include <doctest.h>

#include "sullivan/parse.hpp"
#include "support/random_elements.hpp"

using namespace sullivan;

namespace {

Element mono(std::initializer_list<std::size_t> idx, Rational c = 1) {
    std::vector<std::size_t> v(idx);
    return {Monomial::from_indices(v), c};
}

template <typename F>
ParseError parse_error(F&& f) {
    try {
        f();
    } catch (const ParseError& e) {
        return e;
    }
    FAIL("expected ParseError");
    return {0, 0, ""};
}

}  // namespace

TEST_CASE("built-in heisenberg model") {
    const Dga h = load_model("heisenberg");
    CHECK(h.names() == std::vector<std::string>{"x", "y", "w"});
    CHECK(h.generator_differential(2) == mono({0, 1}));
    CHECK(h.generator_differential(0).is_zero());
    CHECK(parse_model("# Heisenberg\ngenerator x\ngenerator y\ngenerator w\n\nd w = x^y  # the only relation\n")
              .generator_differential(2) == h.generator_differential(2));
}

TEST_CASE("model parsing") {
    CHECK(parse_model("").num_generators() == 0);
    CHECK(parse_model("generator a b\r\nd b = 0\r\n").num_generators() == 2);

    try {
        (void)parse_model("generator x y w\nd w = x\n");
        FAIL("expected ValidationError");
    } catch (const ValidationError& e) {
        CHECK(e.kind() == ViolationKind::NonHomogeneousDifferential);
        CHECK(e.generator() == "w");
    }
    try {
        (void)parse_model("generator a b c e\nd a = c^e\nd e = a^b\n");
        FAIL("expected ValidationError");
    } catch (const ValidationError& e) {
        CHECK(e.kind() == ViolationKind::DifferentialSquaredNonzero);
        CHECK(e.generator() == "a");
    }

    auto e = parse_error([] { (void)parse_model("generator x\nd x = y^x\n"); });
    CHECK(e.line() == 2);
    CHECK(e.column() == 7);

    e = parse_error([] { (void)parse_model("generator x\nfoo x\n"); });
    CHECK(e.line() == 2);
    CHECK(e.column() == 1);

    e = parse_error([] { (void)parse_model("generator x\nd w = x^x\ngenerator w\n"); });
    CHECK(e.line() == 2);
    CHECK(e.column() == 3);

    e = parse_error([] { (void)parse_model("generator x y\ngenerator  y\n"); });
    CHECK(e.line() == 2);
    CHECK(e.column() == 12);

    CHECK_THROWS_AS((void)parse_model("generator x y w\nd w = x^y\nd w = 0\n"), ParseError);
    CHECK_THROWS_AS((void)parse_model("generator d\n"), ParseError);
    CHECK_THROWS_AS((void)parse_model("generator 1x\n"), ParseError);
    CHECK_THROWS_AS((void)parse_model("generator\n"), ParseError);
    CHECK_THROWS_AS((void)parse_model("generator x y w\nd w x^y\n"), ParseError);
    CHECK_THROWS_AS((void)parse_model("generator x y w\nd w = x^y +\n"), ParseError);
    CHECK_THROWS_AS((void)load_model("/nonexistent/model.txt"), InputError);

    std::string many = "generator";
    for (int i = 0; i < 65; ++i) many += " g" + std::to_string(i);
    CHECK_THROWS_AS((void)parse_model(many), ValidationError);
}

TEST_CASE("element parsing") {
    const Dga h = Dga::heisenberg();
    CHECK(parse_element(h, "x^y") == mono({0, 1}));
    CHECK(parse_element(h, "3/2 x^y - y^w") == mono({0, 1}, Rational(3, 2)) - mono({1, 2}));
    CHECK(parse_element(h, "y^x") == -mono({0, 1}));
    CHECK(parse_element(h, "x^x").is_zero());
    CHECK(parse_element(h, "-2x + 3y") == mono({0}, -2) + mono({1}, 3));
    CHECK(parse_element(h, "  x ^ y ^ w ") == mono({0, 1, 2}));
    CHECK(parse_element(h, "5").degree() == 0);
    CHECK(parse_element(h, "0").is_zero());
    CHECK(parse_element(h, "x - x").is_zero());

    auto e = parse_error([&] { (void)parse_element(h, "x + z"); });
    CHECK(e.column() == 5);
    CHECK_THROWS_AS((void)parse_element(h, ""), ParseError);
    CHECK_THROWS_AS((void)parse_element(h, "x^"), ParseError);
    CHECK_THROWS_AS((void)parse_element(h, "1/0 x"), ParseError);
    CHECK_THROWS_AS((void)parse_element(h, "x y"), ParseError);
    CHECK_THROWS_AS((void)parse_element(h, "2/ x"), ParseError);
}

TEST_CASE("format and parse round trip") {
    for (const Dga& dga : {Dga::heisenberg(), testing::heisenberg5()}) {
        testing::Gen gen(31);
        for (int trial = 0; trial < 200; ++trial) {
            const Element e = gen.mixed(dga);
            CHECK(parse_element(dga, dga.format(e)) == e);
        }
    }
}

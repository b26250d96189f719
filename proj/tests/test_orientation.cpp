#include <doctest.h>

#include "sullivan/orientation.hpp"
#include "support/random_elements.hpp"

using namespace sullivan;

namespace {

const CohomologyRing& heis() {
    static const CohomologyRing ring(Dga::heisenberg());
    return ring;
}

Element mono(std::initializer_list<std::size_t> idx, Rational c = 1) {
    std::vector<std::size_t> v(idx);
    return {Monomial::from_indices(v), c};
}

CohomologyClass h1(Rational a, Rational b) { return heis().class_from_coords(1, {std::move(a), std::move(b)}); }

const CohomologyClass X = h1(1, 0);
const CohomologyClass Y = h1(0, 1);

}  // namespace

TEST_CASE("pairing examples") {
    const auto base = pairing(heis(), X, Y);
    CHECK(base.r == Rational(1));
    CHECK(base.h3_class.coords == Vector{1});
    CHECK(base.primitive_used == Element::generator(2));
    CHECK(base.x_lift == Element::generator(0));
    CHECK(heis().dga().differential(base.primitive_used) == wedge(base.x_lift, base.y_lift));

    const auto degenerate = pairing(heis(), X, X);
    CHECK(degenerate.r == Rational(0));
    CHECK(degenerate.primitive_used.is_zero());

    const auto scaled = pairing(heis(), h1(2, 0), h1(0, 3));
    CHECK(scaled.r == Rational(36));
    CHECK(scaled.primitive_used == Element::generator(2) * Rational(6));
}

TEST_CASE("pairing matches the closed form for hand-picked bases") {
    // x0^ y0^ = det A x^y, w0 = det A w, so r = det(A)^2.
    const std::vector<BasisChange> cases = {
        {1, 0, 0, 1}, {1, 1, 0, 1}, {2, 0, 0, 3}, {0, 1, 1, 0}, {Rational(1, 2), Rational(-3, 7), 5, Rational(2, 9)}};
    for (const auto& a : cases) {
        const auto [x0, y0] = apply_basis_change(heis(), a);
        CHECK(pairing(heis(), x0, y0).r == a.det() * a.det());
    }
}

TEST_CASE("verify_det_squared examples") {
    const auto identity = verify_det_squared(heis(), {1, 0, 0, 1});
    CHECK(identity.lhs == Rational(1));
    CHECK(identity.rhs == Rational(1));
    CHECK(identity.equal);

    const auto shear = verify_det_squared(heis(), {1, 1, 0, 1});
    CHECK(shear.lhs == Rational(1));
    CHECK(shear.equal);

    const auto diag = verify_det_squared(heis(), {2, 0, 0, 3});
    CHECK(diag.lhs == Rational(36));
    CHECK(diag.rhs == Rational(36));
    CHECK(diag.equal);

    const auto singular = verify_det_squared(heis(), {1, 2, 2, 4});
    CHECK(singular.lhs == Rational(0));
    CHECK(singular.equal);
}

TEST_CASE("positive_generator") {
    const auto g = positive_generator(heis(), X, Y);
    CHECK(g.r == Rational(1));
    CHECK(g.generator == heis().reference_top_class());

    CHECK(positive_generator(heis(), Y, X).r == Rational(1));
    CHECK_THROWS_AS(positive_generator(heis(), X, h1(2, 0)), DegenerateBasis);
    CHECK_THROWS_AS(positive_generator(heis(), X, heis().zero_class(1)), DegenerateBasis);
}

TEST_CASE("primitive shifts by 1-cocycles do not change the pairing class") {
    testing::Gen gen(3);
    for (int trial = 0; trial < 50; ++trial) {
        const CohomologyClass x0 = gen.cohomology_class(heis(), 1);
        const CohomologyClass y0 = gen.cohomology_class(heis(), 1);
        const auto base = pairing(heis(), x0, y0);
        const Element shift = Element::generator(0) * gen.rational() + Element::generator(1) * gen.rational();
        CHECK(pairing_with_primitive(heis(), x0, y0, base.primitive_used + shift) == base.h3_class);
    }
    CHECK_THROWS_AS(pairing_with_primitive(heis(), X, Y, Element::generator(0)), std::invalid_argument);
}

TEST_CASE("massey_triple examples") {
    const auto yxy = massey_triple(heis(), Y, X, Y);
    CHECK(yxy.u == -Element::generator(2));
    CHECK(yxy.v == Element::generator(2));
    CHECK(yxy.representative.degree == 2);
    CHECK(yxy.representative == heis().class_of(mono({1, 2}, 2)));
    CHECK(yxy.indeterminacy.dim() == 0);

    const auto zero = massey_triple(heis(), heis().zero_class(1), X, Y);
    CHECK(zero.representative.is_zero());

    const auto xyx = massey_triple(heis(), X, Y, X);
    CHECK(xyx.u == Element::generator(2));
    CHECK(xyx.v == -Element::generator(2));
    CHECK(xyx.representative == heis().class_of(mono({0, 2}, -2)));
}

TEST_CASE("massey_relation_check examples") {
    const auto base = massey_relation_check(heis(), X, Y);
    CHECK(base.equal);
    CHECK(base.lhs == heis().reference_top_class());
    CHECK(base.rhs == heis().reference_top_class());

    const auto degenerate = massey_relation_check(heis(), X, X);
    CHECK(degenerate.equal);
    CHECK(degenerate.lhs.is_zero());
    CHECK(degenerate.rhs.is_zero());

    const auto shear = massey_relation_check(heis(), h1(1, 1), Y);
    CHECK(shear.equal);
    CHECK(shear.lhs == heis().reference_top_class());
}

TEST_CASE("the alternate Massey sign breaks the relation") {
    CHECK(massey_triple(heis(), Y, X, Y, MasseyConvention::kAlternate).representative.is_zero());
    CHECK_FALSE(massey_relation_check(heis(), X, Y, MasseyConvention::kAlternate).equal);
}

TEST_CASE("massey indeterminacy vanishes for every Heisenberg degree-1 triple") {
    testing::Gen gen(19);
    for (int trial = 0; trial < 50; ++trial) {
        const auto a = gen.cohomology_class(heis(), 1);
        const auto b = gen.cohomology_class(heis(), 1);
        const auto c = gen.cohomology_class(heis(), 1);
        const auto t = massey_triple(heis(), a, b, c);
        CHECK(t.indeterminacy.dim() == 0);
        CHECK(t.indeterminacy.ambient_dim() == 2);
        CHECK(heis().dga().differential(t.u) == wedge(a.representative, b.representative));
        CHECK(heis().dga().differential(t.v) == wedge(b.representative, c.representative));
    }
}

TEST_CASE("relation holds for singular and random pairs") {
    testing::Gen gen(29);
    for (int trial = 0; trial < 50; ++trial) {
        const CohomologyClass x0 = gen.cohomology_class(heis(), 1);
        const CohomologyClass y0 = gen.coin() ? heis().scale(x0, gen.rational()) : gen.cohomology_class(heis(), 1);
        CHECK(massey_relation_check(heis(), x0, y0).equal);
    }
}

TEST_CASE("general models") {
    // Heisenberg x S^1: four generators, so r against a top wedge is undefined.
    const CohomologyRing hs(testing::heisenberg_times_circle());
    const auto p = pairing(hs, hs.class_of(Element::generator(0)), hs.class_of(Element::generator(1)));
    CHECK_FALSE(p.r.has_value());
    CHECK(p.h3_class == hs.class_of(mono({0, 1, 2})));
    CHECK_THROWS_AS(verify_det_squared(hs, {1, 0, 0, 1}), DomainError);

    // Torus: x cup y != 0 obstructs the pairing and the Massey product.
    const CohomologyRing torus(parse_model("generator a b c\n"));
    const auto a = torus.class_of(Element::generator(0));
    const auto b = torus.class_of(Element::generator(1));
    CHECK_THROWS_AS(pairing(torus, a, b), CupObstruction);
    CHECK_THROWS_AS(massey_triple(torus, a, b, a), CupObstruction);
    // a cup a = 0 so <a, a> is defined, and zero.
    CHECK(pairing(torus, a, a).h3_class.is_zero());

    // Filiform: <u, v, u> is defined; indeterminacy is u cup H^1 + H^1 cup u.
    const CohomologyRing f(testing::filiform4());
    const auto u = f.class_of(Element::generator(0));
    const auto v = f.class_of(Element::generator(1));
    const auto t = massey_triple(f, u, v, u);
    CHECK(f.dga().differential(t.u) == wedge(Element::generator(0), Element::generator(1)));
    CHECK(t.indeterminacy.ambient_dim() == f.betti(2));
}

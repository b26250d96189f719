#include <doctest.h>

#include "sullivan/cohomology.hpp"
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

const Element x = Element::generator(0);
const Element y = Element::generator(1);
const Element w = Element::generator(2);

}  // namespace

TEST_CASE("cocycles and coboundaries of the Heisenberg model") {
    CHECK(heis().cocycles(1) == Subspace::span(3, {{1, 0, 0}, {0, 1, 0}}));
    CHECK(heis().coboundaries(1).dim() == 0);

    CHECK(heis().cocycles(2) == Subspace::full(3));
    CHECK(heis().coboundaries(2) == Subspace::span(3, {{1, 0, 0}}));

    CHECK(heis().cocycles(0) == Subspace::full(1));
    CHECK(heis().coboundaries(0).dim() == 0);

    for (int k = 0; k <= 3; ++k) CHECK(heis().cocycles(k).contains(heis().coboundaries(k)));
}

TEST_CASE("betti numbers") {
    CHECK(heis().betti_numbers() == std::vector<std::size_t>{1, 2, 2, 1});
    // Oracle values: sympy ranks of the differential matrices, cross-checked
    // by Kunneth (Heisenberg x S^1) and Euler characteristic zero.
    CHECK(CohomologyRing(testing::heisenberg_times_circle()).betti_numbers() == std::vector<std::size_t>{1, 3, 4, 3, 1});
    CHECK(CohomologyRing(testing::filiform4()).betti_numbers() == std::vector<std::size_t>{1, 2, 2, 2, 1});
    CHECK(CohomologyRing(testing::heisenberg5()).betti_numbers() == std::vector<std::size_t>{1, 4, 5, 5, 4, 1});
    CHECK(CohomologyRing(parse_model("generator a b c\n")).betti_numbers() == std::vector<std::size_t>{1, 3, 3, 1});
    CHECK(CohomologyRing(parse_model("")).betti_numbers() == std::vector<std::size_t>{1});
    CHECK_THROWS_AS((void)heis().betti(4), std::out_of_range);
}

TEST_CASE("representatives are cocycles projecting to unit coordinates") {
    for (const Dga& dga : {Dga::heisenberg(), testing::filiform4(), testing::heisenberg5()}) {
        const CohomologyRing ring(dga);
        for (int k = 0; k <= ring.top_degree(); ++k) {
            const auto& reps = ring.representatives(k);
            REQUIRE(reps.size() == ring.betti(k));
            for (std::size_t i = 0; i < reps.size(); ++i) {
                CHECK(ring.is_cocycle(reps[i]));
                Vector unit(reps.size());
                unit[i] = 1;
                CHECK(ring.class_of(reps[i], k).coords == unit);
            }
        }
    }
    CHECK(heis().representatives(1) == std::vector<Element>{x, y});
    CHECK(heis().representatives(2) == std::vector<Element>{mono({0, 2}), mono({1, 2})});
    CHECK(heis().representatives(3) == std::vector<Element>{mono({0, 1, 2})});
}

TEST_CASE("class_of") {
    CHECK(heis().class_of(mono({0, 1})).is_zero());
    CHECK(heis().class_of(Element{}, 2).is_zero());
    CHECK(heis().class_of(Element{}, 1) == heis().zero_class(1));
    CHECK(heis().class_of(mono({1, 2}, 3) + mono({0, 1}, 7)).coords == Vector{0, 3});

    try {
        (void)heis().class_of(w);
        FAIL("expected NotACocycle");
    } catch (const NotACocycle& e) {
        CHECK(e.differential() == "x^y");
    }
    CHECK_THROWS_AS((void)heis().class_of(Element{}), std::invalid_argument);
    CHECK_THROWS_AS((void)heis().class_of(x + mono({0, 1})), std::invalid_argument);
}

TEST_CASE("cup product") {
    const auto cx = heis().class_of(x);
    const auto cy = heis().class_of(y);
    CHECK(heis().cup(cx, cy).is_zero());
    CHECK(heis().cup(cx, heis().zero_class(2)).is_zero());
    const auto top = heis().cup(cx, heis().class_of(mono({1, 2})));
    CHECK(top.degree == 3);
    CHECK(top.coords == Vector{1});
    CHECK(top == heis().reference_top_class());
}

TEST_CASE("lift_to_cocycle") {
    CHECK(heis().lift_to_cocycle(heis().basis_class(1, 0)) == x);
    CHECK(heis().lift_to_cocycle(heis().zero_class(1)).is_zero());
    CHECK(heis().lift_to_cocycle(heis().class_from_coords(1, {2, -3})) == x * Rational(2) - y * Rational(3));
    CHECK_THROWS_AS((void)heis().lift_to_cocycle(heis().zero_class(2)), std::invalid_argument);

    // The differential vanishes on constants, so B^1 = 0 in every exterior model.
    const CohomologyRing f(testing::filiform4());
    CHECK(f.coboundaries(1).dim() == 0);
}

TEST_CASE("primitive") {
    CHECK(heis().primitive(mono({0, 1}), 2) == w);
    CHECK(heis().primitive(Element{}, 2).is_zero());
    CHECK(heis().primitive(mono({0, 1}, Rational(-7, 3)), 2) == w * Rational(-7, 3));
    CHECK_THROWS_AS((void)heis().primitive(mono({0, 2}), 2), NotExact);
    CHECK_THROWS_AS((void)heis().primitive(w, 1), NotExact);
}

TEST_CASE("cohomology properties on random cocycles") {
    for (const Dga& dga : {Dga::heisenberg(), testing::filiform4(), testing::heisenberg5()}) {
        const CohomologyRing ring(dga);
        testing::Gen gen(23);
        for (int trial = 0; trial < 100; ++trial) {
            const int p = static_cast<int>(gen.uniform(1, ring.top_degree()));
            const int q = static_cast<int>(gen.uniform(0, ring.top_degree() - p));
            const Element a = gen.cocycle(ring, p);
            const Element shifted = a + dga.differential(gen.homogeneous(dga, p - 1));
            const CohomologyClass v = gen.cohomology_class(ring, q);

            const CohomologyClass u = ring.class_of(a, p);
            CHECK(ring.class_of(shifted, p) == u);
            CHECK(ring.class_of(wedge(shifted, v.representative), p + q) == ring.cup(u, v));
            CHECK(ring.cup(u, v) == ring.scale(ring.cup(v, u), (p * q) % 2 == 0 ? 1 : -1));
        }
    }
}

TEST_CASE("every cup of degree-1 Heisenberg classes vanishes") {
    testing::Gen gen(5);
    for (int trial = 0; trial < 100; ++trial)
        CHECK(heis().cup(gen.cohomology_class(heis(), 1), gen.cohomology_class(heis(), 1)).is_zero());
}

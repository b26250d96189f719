#include "sullivan/orientation.hpp"

#include <stdexcept>

namespace sullivan {

namespace {

void require_degree_one(const CohomologyClass& u, const char* op) {
    if (u.degree != 1) throw std::invalid_argument(std::string(op) + ": expected a degree-1 class");
}

void require_cup_zero(const CohomologyRing& ring, const CohomologyClass& a, const CohomologyClass& b) {
    const CohomologyClass product = ring.cup(a, b);
    if (!product.is_zero()) throw CupObstruction(ring.format(a), ring.format(b), ring.format(product));
}

Subspace cup_image(const CohomologyRing& ring, const CohomologyClass& a, const CohomologyClass& c, int target) {
    const int n = ring.top_degree();
    const std::size_t dim = target >= 0 && target <= n ? ring.betti(target) : 0;
    std::vector<Vector> spanning;
    // a cup H^{target - deg a}
    if (const int k = target - a.degree; k >= 0 && k <= n)
        for (std::size_t i = 0; i < ring.betti(k); ++i) spanning.push_back(ring.cup(a, ring.basis_class(k, i)).coords);
    // H^{target - deg c} cup c
    if (const int k = target - c.degree; k >= 0 && k <= n)
        for (std::size_t i = 0; i < ring.betti(k); ++i) spanning.push_back(ring.cup(ring.basis_class(k, i), c).coords);
    return Subspace::span(dim, spanning);
}

}  // namespace

const char* describe(MasseyConvention convention) {
    switch (convention) {
        case MasseyConvention::kPinned: return "u^c + (-1)^(deg a + 1) a^v";
        case MasseyConvention::kAlternate: return "u^c + (-1)^(deg a) a^v";
    }
    return "unknown";
}

std::optional<Rational> coefficient_against(const CohomologyClass& c, const CohomologyClass& ref) {
    if (c.degree != ref.degree || c.coords.size() != ref.coords.size()) return std::nullopt;
    std::optional<Rational> ratio;
    for (std::size_t i = 0; i < ref.coords.size(); ++i) {
        if (!ref.coords[i].is_zero()) {
            ratio = c.coords[i] / ref.coords[i];
            break;
        }
    }
    if (!ratio) return std::nullopt;
    for (std::size_t i = 0; i < ref.coords.size(); ++i)
        if (c.coords[i] != *ratio * ref.coords[i]) return std::nullopt;
    return ratio;
}

PairingResult pairing(const CohomologyRing& ring, const CohomologyClass& x0, const CohomologyClass& y0) {
    require_degree_one(x0, "pairing");
    require_degree_one(y0, "pairing");
    require_cup_zero(ring, x0, y0);

    PairingResult out{.h3_class = {}, .r = std::nullopt, .x_lift = ring.lift_to_cocycle(x0),
                      .y_lift = ring.lift_to_cocycle(y0), .primitive_used = {}};
    const Element product = wedge(out.x_lift, out.y_lift);
    out.primitive_used = ring.primitive(product, 2);
    out.h3_class = ring.class_of(wedge(product, out.primitive_used), 3);
    if (ring.top_degree() == 3) out.r = coefficient_against(out.h3_class, ring.reference_top_class());
    return out;
}

CohomologyClass pairing_with_primitive(const CohomologyRing& ring, const CohomologyClass& x0,
                                       const CohomologyClass& y0, const Element& w0) {
    require_degree_one(x0, "pairing_with_primitive");
    require_degree_one(y0, "pairing_with_primitive");
    const Element product = wedge(ring.lift_to_cocycle(x0), ring.lift_to_cocycle(y0));
    if (ring.dga().differential(w0) != product)
        throw std::invalid_argument("pairing_with_primitive: d(" + ring.dga().format(w0) + ") != " +
                                    ring.dga().format(product));
    return ring.class_of(wedge(product, w0), 3);
}

std::pair<CohomologyClass, CohomologyClass> apply_basis_change(const CohomologyRing& ring, const BasisChange& change) {
    if (ring.betti(1) != 2) throw DomainError("basis change needs b1 = 2, got " + std::to_string(ring.betti(1)));
    return {ring.class_from_coords(1, {change.a, change.b}), ring.class_from_coords(1, {change.c, change.d})};
}

ScalarCheck verify_det_squared(const CohomologyRing& ring, const BasisChange& change) {
    const auto [x0, y0] = apply_basis_change(ring, change);
    const auto changed = pairing(ring, x0, y0);
    const auto base = pairing(ring, ring.basis_class(1, 0), ring.basis_class(1, 1));
    if (!changed.r || !base.r) throw DomainError("verify_det_squared: pairing coefficient r is undefined");
    const Rational det = change.det();
    ScalarCheck out{*changed.r, det * det * *base.r, false};
    out.equal = out.lhs == out.rhs;
    return out;
}

OrientedGenerator positive_generator(const CohomologyRing& ring, const CohomologyClass& x0, const CohomologyClass& y0) {
    require_degree_one(x0, "positive_generator");
    require_degree_one(y0, "positive_generator");
    if (rank(Matrix(ring.betti(1), {x0.coords, y0.coords})) < 2)
        throw DegenerateBasis(ring.format(x0), ring.format(y0));

    auto result = pairing(ring, x0, y0);
    if (!result.r) throw DomainError("positive_generator: pairing coefficient r is undefined for this model");
    if (result.r->is_zero()) throw DegenerateBasis(ring.format(x0), ring.format(y0));
    return {std::move(result.h3_class), *result.r};
}

MasseyTriple massey_triple(const CohomologyRing& ring, const CohomologyClass& a, const CohomologyClass& b,
                           const CohomologyClass& c, MasseyConvention convention) {
    require_cup_zero(ring, a, b);
    require_cup_zero(ring, b, c);

    const auto cocycle = [&](const CohomologyClass& k) {
        return k.degree == 1 ? ring.lift_to_cocycle(k) : k.representative;
    };
    const Element a_hat = cocycle(a);
    const Element b_hat = cocycle(b);
    const Element c_hat = cocycle(c);

    MasseyTriple out{.representative = {}, .indeterminacy = Subspace::zero(0),
                     .u = ring.primitive(wedge(a_hat, b_hat), a.degree + b.degree),
                     .v = ring.primitive(wedge(b_hat, c_hat), b.degree + c.degree)};

    const bool odd = a.degree % 2 != 0;
    const int sign = convention == MasseyConvention::kPinned ? (odd ? 1 : -1) : (odd ? -1 : 1);
    const int degree = a.degree + b.degree + c.degree - 1;
    out.representative = ring.class_of(wedge(out.u, c_hat) + wedge(a_hat, out.v) * Rational(sign), degree);
    out.indeterminacy = cup_image(ring, a, c, degree);
    return out;
}

ClassCheck massey_relation_check(const CohomologyRing& ring, const CohomologyClass& x0, const CohomologyClass& y0,
                                 MasseyConvention convention) {
    require_degree_one(x0, "massey_relation_check");
    require_degree_one(y0, "massey_relation_check");
    CohomologyClass lhs = pairing(ring, x0, y0).h3_class;
    const MasseyTriple triple = massey_triple(ring, y0, x0, y0, convention);
    CohomologyClass rhs = ring.scale(ring.cup(x0, triple.representative), Rational(1, 2));
    const bool equal = lhs == rhs;
    return {std::move(lhs), std::move(rhs), equal};
}

}  // namespace sullivan

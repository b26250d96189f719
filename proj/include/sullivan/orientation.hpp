#pragma once

// The H^1 x H^1 -> H^3 pairing <x0, y0> = [x0^ * y0^ * w0^] with d w0^ = x0^ * y0^,
// the orientation it induces, and Massey triple products.

#include <optional>

#include "sullivan/cohomology.hpp"

namespace sullivan {

struct PairingResult {
    CohomologyClass h3_class;
    /// h3_class = r * [wedge of all generators]. Present only for 3-generator
    /// models whose top class is nonzero.
    std::optional<Rational> r;
    Element x_lift;
    Element y_lift;
    Element primitive_used;
};

/// x0 = a x + b y, y0 = c x + d y in the H^1 basis.
struct BasisChange {
    Rational a, b, c, d;

    [[nodiscard]] Rational det() const { return a * d - b * c; }
};

/// Sign convention for the second term of a Massey representative
/// u^c + s a^v, where d u = a^b and d v = b^c.
enum class MasseyConvention {
    kPinned,     ///< s = (-1)^(deg a + 1)
    kAlternate,  ///< s = (-1)^(deg a)
};

const char* describe(MasseyConvention convention);

struct MasseyTriple {
    CohomologyClass representative;
    /// cup(a, H^*) + cup(H^*, c), as a subspace of representative-degree coordinates.
    Subspace indeterminacy;
    Element u;  ///< d u = a^ * b^
    Element v;  ///< d v = b^ * c^
};

struct ScalarCheck {
    Rational lhs;
    Rational rhs;
    bool equal = false;
};

struct ClassCheck {
    CohomologyClass lhs;
    CohomologyClass rhs;
    bool equal = false;
};

/// Some r with c = r * ref, or nullopt when ref is zero or c is not on its line.
std::optional<Rational> coefficient_against(const CohomologyClass& c, const CohomologyClass& ref);

/// Throws CupObstruction when x0 cup y0 != 0, NonUniqueLift when B^1 != 0.
PairingResult pairing(const CohomologyRing& ring, const CohomologyClass& x0, const CohomologyClass& y0);

/// The pairing class computed with a caller-supplied primitive. Throws
/// std::invalid_argument unless d(w0) equals the wedge of the two lifts.
CohomologyClass pairing_with_primitive(const CohomologyRing& ring, const CohomologyClass& x0,
                                       const CohomologyClass& y0, const Element& w0);

/// lhs = r of <a x + b y, c x + d y>, rhs = det(A)^2 * r of <x, y>, where x, y
/// is the H^1 basis. Throws DomainError unless b1 = 2 and r is defined.
ScalarCheck verify_det_squared(const CohomologyRing& ring, const BasisChange& change);

struct OrientedGenerator {
    CohomologyClass generator;
    Rational r;
};

/// <x0, y0> for an independent pair. Throws DegenerateBasis for dependent
/// inputs (or a vanishing pairing), DomainError when r is undefined.
OrientedGenerator positive_generator(const CohomologyRing& ring, const CohomologyClass& x0, const CohomologyClass& y0);

/// Throws CupObstruction unless a cup b = 0 and b cup c = 0.
MasseyTriple massey_triple(const CohomologyRing& ring, const CohomologyClass& a, const CohomologyClass& b,
                           const CohomologyClass& c, MasseyConvention convention = MasseyConvention::kPinned);

/// lhs = <x0, y0>, rhs = 1/2 x0 cup <y0, x0, y0>.
ClassCheck massey_relation_check(const CohomologyRing& ring, const CohomologyClass& x0, const CohomologyClass& y0,
                                 MasseyConvention convention = MasseyConvention::kPinned);

/// The H^1 classes a x + b y and c x + d y. Throws DomainError unless b1 = 2.
std::pair<CohomologyClass, CohomologyClass> apply_basis_change(const CohomologyRing& ring, const BasisChange& change);

}  // namespace sullivan

#pragma once

#include <optional>
#include <vector>

#include "sullivan/dga.hpp"
#include "sullivan/linalg.hpp"

namespace sullivan {

struct CohomologyClass {
    int degree = 0;
    Vector coords;           ///< coordinates in the H^degree quotient basis
    Element representative;  ///< a cocycle projecting to coords

    [[nodiscard]] bool is_zero() const { return sullivan::is_zero(coords); }

    /// Classes are equal when degrees and coordinates agree; representatives may differ.
    friend bool operator==(const CohomologyClass& a, const CohomologyClass& b) {
        return a.degree == b.degree && a.coords == b.coords;
    }
};

/// Cocycles, coboundaries and H^k for every degree of an exterior DGA.
///
/// Vectors in degree k are coordinates in Dga::basis_monomials(k). H^k is the
/// quotient of Z^k, written in the coordinates of its RREF basis, by B^k; the
/// quotient basis vectors lift to cocycle representatives.
class CohomologyRing {
public:
    explicit CohomologyRing(Dga dga);

    [[nodiscard]] const Dga& dga() const { return dga_; }
    [[nodiscard]] int top_degree() const { return static_cast<int>(dga_.num_generators()); }

    [[nodiscard]] const Subspace& cocycles(int k) const { return degree(k).cocycles; }
    [[nodiscard]] const Subspace& coboundaries(int k) const { return degree(k).coboundaries; }
    [[nodiscard]] const QuotientSpace& quotient_space(int k) const { return degree(k).cohomology; }
    [[nodiscard]] std::size_t betti(int k) const { return degree(k).cohomology.dim(); }
    [[nodiscard]] std::vector<std::size_t> betti_numbers() const;

    /// Canonical cocycle representative of each H^k basis vector.
    [[nodiscard]] const std::vector<Element>& representatives(int k) const { return degree(k).representatives; }

    [[nodiscard]] bool is_cocycle(const Element& a) const { return dga_.differential(a).is_zero(); }

    /// Throws NotACocycle (carrying d(a)) and std::invalid_argument when a is
    /// not homogeneous of degree k.
    [[nodiscard]] CohomologyClass class_of(const Element& a, int k) const;
    /// Degree taken from a; throws std::invalid_argument for the zero element.
    [[nodiscard]] CohomologyClass class_of(const Element& a) const;

    /// Class with the given coordinates and its canonical representative.
    [[nodiscard]] CohomologyClass class_from_coords(int k, Vector coords) const;
    [[nodiscard]] CohomologyClass zero_class(int k) const;
    /// The i-th H^k basis class.
    [[nodiscard]] CohomologyClass basis_class(int k, std::size_t i) const;

    [[nodiscard]] CohomologyClass cup(const CohomologyClass& u, const CohomologyClass& v) const;
    [[nodiscard]] CohomologyClass scale(const CohomologyClass& u, const Rational& s) const;
    [[nodiscard]] CohomologyClass add(const CohomologyClass& u, const CohomologyClass& v) const;

    /// Unique cocycle representing a degree-1 class. Throws NonUniqueLift if B^1 != 0.
    [[nodiscard]] Element lift_to_cocycle(const CohomologyClass& u) const;

    /// Some w with d(w) = beta, free variables zero. Throws NotExact.
    [[nodiscard]] Element primitive(const Element& beta, int k) const;

    /// Class of the wedge of all generators (degree n).
    [[nodiscard]] CohomologyClass reference_top_class() const;

    /// Coordinates formatted as `(c0, c1, ...)`.
    [[nodiscard]] std::string format_coords(const CohomologyClass& u) const;
    /// `[rep]` with the canonical representative of u's coordinates.
    [[nodiscard]] std::string format(const CohomologyClass& u) const;

private:
    struct Degree {
        Subspace cocycles;
        Subspace coboundaries;
        QuotientSpace cohomology;
        std::vector<Element> representatives;
        Matrix differential_in;  ///< d: C^{k-1} -> C^k
    };

    [[nodiscard]] const Degree& degree(int k) const;

    Dga dga_;
    std::vector<Degree> degrees_;
};

}  // namespace sullivan

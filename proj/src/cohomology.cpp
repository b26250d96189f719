#include "sullivan/cohomology.hpp"

#include <sstream>
#include <stdexcept>
#include <string>

namespace sullivan {

CohomologyRing::CohomologyRing(Dga dga) : dga_(std::move(dga)) {
    const int n = top_degree();
    degrees_.reserve(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) {
        const std::size_t dim = dga_.dimension(k);
        Subspace z = kernel(dga_.differential_matrix(k));
        Matrix d_in = k == 0 ? Matrix(dim, 0) : dga_.differential_matrix(k - 1);
        Subspace b = Subspace::column_space(d_in);

        // B^k in the coordinates of Z^k's RREF basis.
        std::vector<Vector> b_in_z;
        for (std::size_t i = 0; i < b.dim(); ++i) b_in_z.push_back(*z.coordinates(b.basis().row(i)));
        QuotientSpace h = quotient(z.dim(), Subspace::span(z.dim(), b_in_z));

        std::vector<Element> reps;
        for (auto col : h.complement_columns()) reps.push_back(dga_.from_vector(z.basis().row(col), k));

        degrees_.push_back(Degree{std::move(z), std::move(b), std::move(h), std::move(reps), std::move(d_in)});
    }
}

const CohomologyRing::Degree& CohomologyRing::degree(int k) const {
    if (k < 0 || k > top_degree())
        throw std::out_of_range("degree " + std::to_string(k) + " outside 0.." + std::to_string(top_degree()));
    return degrees_[static_cast<std::size_t>(k)];
}

std::vector<std::size_t> CohomologyRing::betti_numbers() const {
    std::vector<std::size_t> out;
    for (int k = 0; k <= top_degree(); ++k) out.push_back(betti(k));
    return out;
}

CohomologyClass CohomologyRing::class_of(const Element& a, int k) const {
    const Vector v = dga_.to_vector(a, k);
    const Degree& deg = degree(k);
    if (Element da = dga_.differential(a); !da.is_zero()) throw NotACocycle(dga_.format(a), dga_.format(da));
    const auto z_coords = deg.cocycles.coordinates(v);
    return {k, deg.cohomology.project(*z_coords), a};
}

CohomologyClass CohomologyRing::class_of(const Element& a) const {
    const auto k = a.degree();
    if (!k) {
        if (a.is_zero()) throw std::invalid_argument("class_of: the zero element needs an explicit degree");
        throw std::invalid_argument("class_of: " + dga_.format(a) + " is not homogeneous");
    }
    return class_of(a, *k);
}

CohomologyClass CohomologyRing::class_from_coords(int k, Vector coords) const {
    const auto& reps = representatives(k);
    if (coords.size() != reps.size())
        throw std::invalid_argument("class_from_coords: " + std::to_string(coords.size()) +
                                    " coordinates for H^" + std::to_string(k) + " of dimension " +
                                    std::to_string(reps.size()));
    Element rep;
    for (std::size_t i = 0; i < reps.size(); ++i) rep += reps[i] * coords[i];
    return {k, std::move(coords), std::move(rep)};
}

CohomologyClass CohomologyRing::zero_class(int k) const { return class_from_coords(k, Vector(betti(k))); }

CohomologyClass CohomologyRing::basis_class(int k, std::size_t i) const {
    Vector coords(betti(k));
    coords.at(i) = 1;
    return class_from_coords(k, std::move(coords));
}

CohomologyClass CohomologyRing::cup(const CohomologyClass& u, const CohomologyClass& v) const {
    const int k = u.degree + v.degree;
    if (k > top_degree()) return {k, {}, Element{}};
    return class_of(wedge(u.representative, v.representative), k);
}

CohomologyClass CohomologyRing::scale(const CohomologyClass& u, const Rational& s) const {
    Vector coords = u.coords;
    for (auto& c : coords) c *= s;
    return {u.degree, std::move(coords), u.representative * s};
}

CohomologyClass CohomologyRing::add(const CohomologyClass& u, const CohomologyClass& v) const {
    if (u.degree != v.degree) throw std::invalid_argument("add: classes of different degree");
    Vector coords = u.coords;
    for (std::size_t i = 0; i < coords.size(); ++i) coords[i] += v.coords[i];
    return {u.degree, std::move(coords), u.representative + v.representative};
}

Element CohomologyRing::lift_to_cocycle(const CohomologyClass& u) const {
    if (u.degree != 1) throw std::invalid_argument("lift_to_cocycle: expected a degree-1 class");
    if (const auto dim_b = coboundaries(1).dim(); dim_b != 0) throw NonUniqueLift(dim_b);
    return class_from_coords(1, u.coords).representative;
}

Element CohomologyRing::primitive(const Element& beta, int k) const {
    if (k < 1) throw std::invalid_argument("primitive: degree must be at least 1");
    const Vector v = dga_.to_vector(beta, k);
    const auto w = solve(degree(k).differential_in, v);
    if (!w) throw NotExact(dga_.format(beta));
    return dga_.from_vector(*w, k - 1);
}

CohomologyClass CohomologyRing::reference_top_class() const { return class_of(dga_.top_monomial(), top_degree()); }

std::string CohomologyRing::format_coords(const CohomologyClass& u) const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < u.coords.size(); ++i) os << (i ? ", " : "") << u.coords[i];
    os << ')';
    return os.str();
}

std::string CohomologyRing::format(const CohomologyClass& u) const {
    if (u.degree > top_degree() || u.is_zero()) return "[0]";
    return "[" + dga_.format(class_from_coords(u.degree, u.coords).representative) + "]";
}

}  // namespace sullivan

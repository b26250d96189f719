#pragma once

// Exterior differential graded algebras on degree-1 generators.

#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sullivan/errors.hpp"
#include "sullivan/linalg.hpp"
#include "sullivan/rational.hpp"

namespace sullivan {

inline constexpr std::size_t kMaxGenerators = 64;

/// Wedge of distinct degree-1 generators in increasing index order. Stored as
/// a bit mask; ordered by degree, then lexicographically by index list.
class Monomial {
public:
    constexpr Monomial() = default;
    static constexpr Monomial unit() { return {}; }
    static Monomial generator(std::size_t index);
    /// Indices must be strictly increasing; throws std::invalid_argument otherwise.
    static Monomial from_indices(std::span<const std::size_t> indices);
    static constexpr Monomial from_mask(std::uint64_t mask) {
        Monomial m;
        m.mask_ = mask;
        return m;
    }

    [[nodiscard]] constexpr std::uint64_t mask() const { return mask_; }
    [[nodiscard]] constexpr int degree() const { return std::popcount(mask_); }
    [[nodiscard]] std::vector<std::size_t> indices() const;
    [[nodiscard]] constexpr bool contains(std::size_t index) const { return (mask_ >> index) & 1U; }

    friend constexpr bool operator==(Monomial, Monomial) = default;
    friend bool operator<(Monomial a, Monomial b);

private:
    std::uint64_t mask_ = 0;
};

/// Sign and product of two monomials; nullopt when they share a generator.
std::optional<std::pair<int, Monomial>> multiply(Monomial a, Monomial b);

/// Finite rational combination of monomials. No zero coefficients are stored.
class Element {
public:
    using Terms = std::map<Monomial, Rational>;

    Element() = default;
    Element(Monomial m, Rational coefficient);

    static Element scalar(Rational value) { return {Monomial::unit(), std::move(value)}; }
    static Element generator(std::size_t index) { return {Monomial::generator(index), 1}; }

    [[nodiscard]] const Terms& terms() const { return terms_; }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] Rational coefficient(Monomial m) const;
    [[nodiscard]] bool is_homogeneous(int degree) const;
    /// Common degree of all terms; nullopt for zero or mixed elements.
    [[nodiscard]] std::optional<int> degree() const;
    /// Largest generator index used plus one (0 for constants).
    [[nodiscard]] std::size_t generator_bound() const;

    Element& add_term(Monomial m, const Rational& coefficient);
    Element& operator+=(const Element& rhs);
    Element& operator-=(const Element& rhs);
    Element& operator*=(const Rational& scale);

    friend Element operator+(Element lhs, const Element& rhs) { return lhs += rhs; }
    friend Element operator-(Element lhs, const Element& rhs) { return lhs -= rhs; }
    friend Element operator*(Element lhs, const Rational& s) { return lhs *= s; }
    friend Element operator*(const Rational& s, Element rhs) { return rhs *= s; }
    friend Element operator-(Element e) { return e *= Rational(-1); }

    friend bool operator==(const Element&, const Element&) = default;

private:
    Terms terms_;
};

Element wedge(const Element& a, const Element& b);

/// Leibniz extension of generator images `images[i] = d(g_i)` to any element.
Element extend_differential(std::span<const Element> images, const Element& a);

/// Raw model data before validation.
struct Presentation {
    std::vector<std::string> generators;
    std::vector<Element> differentials;  ///< one per generator; zero means d g = 0
};

struct Violation {
    ViolationKind kind;
    std::size_t generator;
    std::string detail;
};

/// First violation found in generator order, or nullopt when the data defines
/// a DGA: unique names, at most kMaxGenerators, homogeneous degree-2 images on
/// declared generators, and d(d g) = 0 for every generator.
std::optional<Violation> validate(const Presentation& p);

/// Validated exterior DGA. Immutable.
class Dga {
public:
    /// Throws ValidationError on the first violation.
    explicit Dga(Presentation p);

    /// Generators x, y, w with d w = x^y.
    static Dga heisenberg();

    [[nodiscard]] std::size_t num_generators() const { return names_.size(); }
    [[nodiscard]] const std::vector<std::string>& names() const { return names_; }
    [[nodiscard]] const std::string& name(std::size_t index) const { return names_.at(index); }
    [[nodiscard]] std::optional<std::size_t> index_of(const std::string& name) const;
    [[nodiscard]] const Element& generator_differential(std::size_t index) const { return diff_.at(index); }

    [[nodiscard]] Element generator(const std::string& name) const;
    [[nodiscard]] Element differential(const Element& a) const;

    /// All C(n, k) degree-k monomials in lexicographic order.
    [[nodiscard]] std::vector<Monomial> basis_monomials(int k) const;
    [[nodiscard]] std::size_t dimension(int k) const;
    /// Position of m in basis_monomials(m.degree()).
    [[nodiscard]] std::size_t index_in_basis(Monomial m) const;

    /// Throws std::invalid_argument if a is not homogeneous of degree k.
    [[nodiscard]] Vector to_vector(const Element& a, int k) const;
    [[nodiscard]] Element from_vector(std::span<const Rational> v, int k) const;

    /// Matrix of d: C^k -> C^{k+1} in the lexicographic bases.
    [[nodiscard]] Matrix differential_matrix(int k) const;

    /// Wedge of all generators in declaration order.
    [[nodiscard]] Element top_monomial() const;

    /// Readable form using generator names, e.g. `3/2 x^y - y^w`.
    [[nodiscard]] std::string format(const Element& a) const;
    [[nodiscard]] std::string format(Monomial m) const;

private:
    std::vector<std::string> names_;
    std::vector<Element> diff_;
};

std::size_t binomial(std::size_t n, std::size_t k);

}  // namespace sullivan

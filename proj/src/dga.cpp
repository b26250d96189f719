#include "sullivan/dga.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

namespace sullivan {

const char* to_string(ViolationKind kind) {
    switch (kind) {
        case ViolationKind::NonHomogeneousDifferential: return "NonHomogeneousDifferential";
        case ViolationKind::DifferentialSquaredNonzero: return "DifferentialSquaredNonzero";
        case ViolationKind::UnknownGenerator: return "UnknownGenerator";
        case ViolationKind::DuplicateGenerator: return "DuplicateGenerator";
        case ViolationKind::TooManyGenerators: return "TooManyGenerators";
    }
    return "UnknownViolation";
}

// ---------------------------------------------------------------- Monomial

Monomial Monomial::generator(std::size_t index) {
    if (index >= kMaxGenerators) throw std::invalid_argument("generator index out of range");
    return from_mask(std::uint64_t{1} << index);
}

Monomial Monomial::from_indices(std::span<const std::size_t> indices) {
    std::uint64_t mask = 0;
    for (std::size_t i = 0; i < indices.size(); ++i) {
        if (indices[i] >= kMaxGenerators) throw std::invalid_argument("generator index out of range");
        if (i > 0 && indices[i] <= indices[i - 1])
            throw std::invalid_argument("monomial indices must be strictly increasing");
        mask |= std::uint64_t{1} << indices[i];
    }
    return from_mask(mask);
}

std::vector<std::size_t> Monomial::indices() const {
    std::vector<std::size_t> out;
    for (std::uint64_t m = mask_; m != 0; m &= m - 1) out.push_back(static_cast<std::size_t>(std::countr_zero(m)));
    return out;
}

bool operator<(Monomial a, Monomial b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    const std::uint64_t diff = a.mask() ^ b.mask();
    if (diff == 0) return false;
    // The smallest index in the symmetric difference decides the lexicographic order.
    return (a.mask() & (diff & -diff)) != 0;
}

std::optional<std::pair<int, Monomial>> multiply(Monomial a, Monomial b) {
    if ((a.mask() & b.mask()) != 0) return std::nullopt;
    // Parity of the merge permutation: pairs (i in a, j in b) with i > j.
    int inversions = 0;
    for (std::uint64_t m = b.mask(); m != 0; m &= m - 1) {
        const int j = std::countr_zero(m);
        inversions += j == 63 ? 0 : std::popcount(a.mask() >> (j + 1));
    }
    return std::pair{inversions % 2 == 0 ? 1 : -1, Monomial::from_mask(a.mask() | b.mask())};
}

// ---------------------------------------------------------------- Element

Element::Element(Monomial m, Rational coefficient) {
    if (!coefficient.is_zero()) terms_.emplace(m, std::move(coefficient));
}

Rational Element::coefficient(Monomial m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational{} : it->second;
}

bool Element::is_homogeneous(int degree) const {
    for (const auto& [m, c] : terms_)
        if (m.degree() != degree) return false;
    return true;
}

std::optional<int> Element::degree() const {
    if (terms_.empty()) return std::nullopt;
    const int d = terms_.begin()->first.degree();
    if (!is_homogeneous(d)) return std::nullopt;
    return d;
}

std::size_t Element::generator_bound() const {
    std::uint64_t all = 0;
    for (const auto& [m, c] : terms_) all |= m.mask();
    return all == 0 ? 0 : static_cast<std::size_t>(64 - std::countl_zero(all));
}

Element& Element::add_term(Monomial m, const Rational& coefficient) {
    if (coefficient.is_zero()) return *this;
    auto [it, inserted] = terms_.try_emplace(m, coefficient);
    if (!inserted) {
        it->second += coefficient;
        if (it->second.is_zero()) terms_.erase(it);
    }
    return *this;
}

Element& Element::operator+=(const Element& rhs) {
    for (const auto& [m, c] : rhs.terms_) add_term(m, c);
    return *this;
}

Element& Element::operator-=(const Element& rhs) {
    for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
    return *this;
}

Element& Element::operator*=(const Rational& scale) {
    if (scale.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, c] : terms_) c *= scale;
    return *this;
}

Element wedge(const Element& a, const Element& b) {
    Element out;
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms())
            if (auto product = multiply(ma, mb)) out.add_term(product->second, product->first * (ca * cb));
    return out;
}

Element extend_differential(std::span<const Element> images, const Element& a) {
    Element out;
    for (const auto& [m, c] : a.terms()) {
        // d(g_1 ... g_k) = sum_j (-1)^(j-1) g_1 ... d(g_j) ... g_k
        const auto idx = m.indices();
        std::uint64_t left = 0;
        for (std::size_t j = 0; j < idx.size(); ++j) {
            const std::uint64_t bit = std::uint64_t{1} << idx[j];
            if (idx[j] >= images.size()) throw std::invalid_argument("element uses an undeclared generator");
            const Element& dg = images[idx[j]];
            if (!dg.is_zero()) {
                const std::uint64_t right = m.mask() & ~left & ~bit;
                Element term = wedge(wedge(Element(Monomial::from_mask(left), c), dg),
                                     Element(Monomial::from_mask(right), 1));
                if (j % 2 == 1) term *= Rational(-1);
                out += term;
            }
            left |= bit;
        }
    }
    return out;
}

// ---------------------------------------------------------------- Dga

std::optional<Violation> validate(const Presentation& p) {
    const std::size_t n = p.generators.size();
    if (n > kMaxGenerators)
        return Violation{ViolationKind::TooManyGenerators, kMaxGenerators,
                         "at most " + std::to_string(kMaxGenerators) + " generators are supported"};
    std::set<std::string> seen;
    for (std::size_t i = 0; i < n; ++i)
        if (!seen.insert(p.generators[i]).second)
            return Violation{ViolationKind::DuplicateGenerator, i, "declared twice"};
    if (p.differentials.size() != n)
        return Violation{ViolationKind::UnknownGenerator, std::min(n, p.differentials.size()),
                         "expected one differential per generator"};

    for (std::size_t i = 0; i < n; ++i) {
        const Element& dg = p.differentials[i];
        if (dg.generator_bound() > n)
            return Violation{ViolationKind::UnknownGenerator, i, "differential uses an undeclared generator"};
        if (!dg.is_homogeneous(2))
            return Violation{ViolationKind::NonHomogeneousDifferential, i,
                             "differential image must be homogeneous of degree 2"};
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (!extend_differential(p.differentials, p.differentials[i]).is_zero())
            return Violation{ViolationKind::DifferentialSquaredNonzero, i, "d(d g) is nonzero"};
    }
    return std::nullopt;
}

Dga::Dga(Presentation p) {
    if (auto v = validate(p)) {
        const std::string name = v->generator < p.generators.size() ? p.generators[v->generator] : "?";
        throw ValidationError(v->kind, name, v->detail);
    }
    names_ = std::move(p.generators);
    diff_ = std::move(p.differentials);
}

Dga Dga::heisenberg() {
    Presentation p;
    p.generators = {"x", "y", "w"};
    p.differentials = {Element{}, Element{}, Element(Monomial::from_mask(0b011), 1)};
    return Dga(std::move(p));
}

std::optional<std::size_t> Dga::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return i;
    return std::nullopt;
}

Element Dga::generator(const std::string& name) const {
    auto i = index_of(name);
    if (!i) throw std::invalid_argument("unknown generator '" + name + "'");
    return Element::generator(*i);
}

Element Dga::differential(const Element& a) const {
    if (a.generator_bound() > names_.size()) throw std::invalid_argument("element uses an undeclared generator");
    return extend_differential(diff_, a);
}

std::size_t binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    std::size_t r = 1;
    for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

std::vector<Monomial> Dga::basis_monomials(int k) const {
    const std::size_t n = names_.size();
    if (k < 0 || static_cast<std::size_t>(k) > n) return {};
    std::vector<Monomial> out;
    out.reserve(binomial(n, static_cast<std::size_t>(k)));
    std::vector<std::size_t> c(static_cast<std::size_t>(k));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = i;
    while (true) {
        out.push_back(Monomial::from_indices(c));
        // Advance to the next k-subset in lexicographic order.
        std::size_t i = c.size();
        while (i > 0 && c[i - 1] == n - c.size() + i - 1) --i;
        if (i == 0) break;
        ++c[i - 1];
        for (std::size_t j = i; j < c.size(); ++j) c[j] = c[j - 1] + 1;
    }
    return out;
}

std::size_t Dga::dimension(int k) const {
    if (k < 0) return 0;
    return binomial(names_.size(), static_cast<std::size_t>(k));
}

std::size_t Dga::index_in_basis(Monomial m) const {
    const std::size_t n = names_.size();
    const auto c = m.indices();
    const std::size_t k = c.size();
    std::size_t rank = 0;
    std::size_t next = 0;
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = next; j < c[i]; ++j) rank += binomial(n - 1 - j, k - 1 - i);
        next = c[i] + 1;
    }
    return rank;
}

Vector Dga::to_vector(const Element& a, int k) const {
    if (!a.is_homogeneous(k))
        throw std::invalid_argument("to_vector: " + format(a) + " is not homogeneous of degree " + std::to_string(k));
    if (a.generator_bound() > names_.size()) throw std::invalid_argument("element uses an undeclared generator");
    Vector v(dimension(k));
    for (const auto& [m, c] : a.terms()) v[index_in_basis(m)] = c;
    return v;
}

Element Dga::from_vector(std::span<const Rational> v, int k) const {
    const auto basis = basis_monomials(k);
    if (v.size() != basis.size())
        throw std::invalid_argument("from_vector: length " + std::to_string(v.size()) + " but degree " +
                                    std::to_string(k) + " has dimension " + std::to_string(basis.size()));
    Element out;
    for (std::size_t i = 0; i < basis.size(); ++i) out.add_term(basis[i], v[i]);
    return out;
}

Matrix Dga::differential_matrix(int k) const {
    const auto source = basis_monomials(k);
    Matrix m(dimension(k + 1), source.size());
    for (std::size_t col = 0; col < source.size(); ++col) {
        const Element image = differential(Element(source[col], 1));
        for (const auto& [mono, c] : image.terms()) m(index_in_basis(mono), col) = c;
    }
    return m;
}

Element Dga::top_monomial() const {
    const std::size_t n = names_.size();
    const std::uint64_t mask = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    return {Monomial::from_mask(mask), 1};
}

std::string Dga::format(Monomial m) const {
    if (m.degree() == 0) return "1";
    std::string out;
    for (auto i : m.indices()) {
        if (!out.empty()) out += '^';
        out += i < names_.size() ? names_[i] : "g" + std::to_string(i);
    }
    return out;
}

std::string Dga::format(const Element& a) const {
    if (a.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : a.terms()) {
        const bool negative = c.sign() < 0;
        if (first)
            os << (negative ? "-" : "");
        else
            os << (negative ? " - " : " + ");
        const Rational magnitude = c.abs();
        if (m.degree() == 0)
            os << magnitude;
        else if (magnitude == Rational(1))
            os << format(m);
        else
            os << magnitude << ' ' << format(m);
        first = false;
    }
    return os.str();
}

}  // namespace sullivan

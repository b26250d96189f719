#include "sullivan/verify.hpp"

#include <limits>
#include <sstream>

namespace sullivan {

std::int64_t TrialRng::uniform(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
    std::uint64_t draw = 0;
    do {
        draw = engine_();
    } while (draw >= limit);
    return lo + static_cast<std::int64_t>(draw % span);
}

Rational TrialRng::rational() {
    const auto num = uniform(-10, 10);
    const auto den = uniform(1, 10);
    return {num, den};
}

BasisChange TrialRng::basis_change() {
    BasisChange out;
    out.a = rational();
    out.b = rational();
    out.c = rational();
    out.d = rational();
    return out;
}

BasisChange TrialRng::singular_basis_change() {
    BasisChange out;
    out.a = rational();
    out.b = rational();
    const Rational lambda = rational();
    out.c = lambda * out.a;
    out.d = lambda * out.b;
    return out;
}

BasisChange TrialRng::nonsingular_basis_change() {
    while (true) {
        BasisChange out = basis_change();
        if (!out.det().is_zero()) return out;
    }
}

std::uint64_t suite_seed(std::uint64_t seed, std::uint64_t suite) {
    // splitmix64 finalizer
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (suite + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

namespace {

std::string format_change(const BasisChange& a) {
    std::ostringstream os;
    os << "A = [[" << a.a << ", " << a.b << "], [" << a.c << ", " << a.d << "]]";
    return os.str();
}

}  // namespace

std::vector<BasisChange> det_squared_changes(std::size_t trials, std::uint64_t seed) {
    TrialRng rng(suite_seed(seed, 0));
    std::vector<BasisChange> out;
    out.reserve(trials);
    for (std::size_t t = 0; t < trials; ++t)
        out.push_back(t % 10 == 0 ? rng.singular_basis_change() : rng.basis_change());
    return out;
}

SuiteResult run_det_squared(const CohomologyRing& ring, std::size_t trials, std::uint64_t seed) {
    SuiteResult result{"det_squared", trials, 0, std::nullopt};
    const auto changes = det_squared_changes(trials, seed);
    for (std::size_t t = 0; t < trials; ++t) {
        const BasisChange& change = changes[t];
        const ScalarCheck check = verify_det_squared(ring, change);
        if (check.equal)
            ++result.passed;
        else if (!result.first_failure)
            result.first_failure = "trial " + std::to_string(t) + ": " + format_change(change) + ", lhs " +
                                   check.lhs.to_string() + " != rhs " + check.rhs.to_string();
    }
    return result;
}

SuiteResult run_primitive_independence(const CohomologyRing& ring, std::size_t trials, std::uint64_t seed) {
    SuiteResult result{"primitive_independence", trials, 0, std::nullopt};
    TrialRng rng(suite_seed(seed, 1));
    const Subspace& z1 = ring.cocycles(1);
    for (std::size_t t = 0; t < trials; ++t) {
        const BasisChange change = rng.basis_change();
        const auto [x0, y0] = apply_basis_change(ring, change);
        const PairingResult canonical = pairing(ring, x0, y0);

        Element shift;
        for (std::size_t i = 0; i < z1.dim(); ++i)
            shift += ring.dga().from_vector(z1.basis().row(i), 1) * rng.rational();
        const CohomologyClass shifted = pairing_with_primitive(ring, x0, y0, canonical.primitive_used + shift);

        if (shifted == canonical.h3_class)
            ++result.passed;
        else if (!result.first_failure)
            result.first_failure = "trial " + std::to_string(t) + ": " + format_change(change) + ", shift " +
                                   ring.dga().format(shift) + " moved " + ring.format(canonical.h3_class) +
                                   " to " + ring.format(shifted);
    }
    return result;
}

SuiteResult run_massey_relation(const CohomologyRing& ring, std::size_t trials, std::uint64_t seed,
                                MasseyConvention convention) {
    SuiteResult result{"massey_relation", trials, 0, std::nullopt};
    TrialRng rng(suite_seed(seed, 2));
    for (std::size_t t = 0; t < trials; ++t) {
        const BasisChange change = rng.nonsingular_basis_change();
        const auto [x0, y0] = apply_basis_change(ring, change);
        const ClassCheck check = massey_relation_check(ring, x0, y0, convention);
        if (check.equal)
            ++result.passed;
        else if (!result.first_failure)
            result.first_failure = "trial " + std::to_string(t) + ": " + format_change(change) + ", " +
                                   ring.format(check.lhs) + " != " + ring.format(check.rhs);
    }
    return result;
}

bool VerifyReport::all_passed() const {
    for (const auto& s : suites)
        if (!s.all_passed()) return false;
    return true;
}

std::string VerifyReport::to_string() const {
    std::ostringstream os;
    os << "seed " << seed << ", " << trials << " trials per suite\n";
    for (const auto& s : suites) {
        os << s.name << ": " << s.passed << "/" << s.trials << (s.all_passed() ? " pass" : " FAIL") << '\n';
        if (s.first_failure) os << "  first counterexample: " << *s.first_failure << '\n';
    }
    os << "massey_convention: " << describe(MasseyConvention::kPinned) << ", factor 1/2\n";
    return os.str();
}

VerifyReport run_verify(const CohomologyRing& ring, std::size_t trials, std::uint64_t seed) {
    VerifyReport report{trials, seed, {}};
    report.suites.push_back(run_det_squared(ring, trials, seed));
    report.suites.push_back(run_primitive_independence(ring, trials, seed));
    report.suites.push_back(run_massey_relation(ring, trials, seed));
    return report;
}

}  // namespace sullivan

#pragma once

// Seeded random trials for the det(A)^2 scaling law, primitive independence
// and the Massey relation. Reports are a pure function of (model, trials, seed).

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "sullivan/orientation.hpp"

namespace sullivan {

/// Deterministic source of small random rationals. Bounded integers come from
/// rejection sampling on std::mt19937_64, whose output sequence is fixed by
/// the standard.
class TrialRng {
public:
    explicit TrialRng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform in [lo, hi].
    std::int64_t uniform(std::int64_t lo, std::int64_t hi);
    /// Numerator in [-10, 10], denominator in [1, 10].
    Rational rational();
    BasisChange basis_change();
    /// Second row a rational multiple (possibly zero) of the first.
    BasisChange singular_basis_change();
    BasisChange nonsingular_basis_change();

private:
    std::mt19937_64 engine_;
};

struct SuiteResult {
    std::string name;
    std::size_t trials = 0;
    std::size_t passed = 0;
    std::optional<std::string> first_failure;

    [[nodiscard]] bool all_passed() const { return passed == trials; }
};

/// Basis changes used by run_det_squared; every 10th is singular.
std::vector<BasisChange> det_squared_changes(std::size_t trials, std::uint64_t seed);

SuiteResult run_det_squared(const CohomologyRing& ring, std::size_t trials, std::uint64_t seed);
/// Shifts the canonical primitive by a random 1-cocycle and compares classes.
SuiteResult run_primitive_independence(const CohomologyRing& ring, std::size_t trials, std::uint64_t seed);
/// Random independent pairs.
SuiteResult run_massey_relation(const CohomologyRing& ring, std::size_t trials, std::uint64_t seed,
                                MasseyConvention convention = MasseyConvention::kPinned);

struct VerifyReport {
    std::size_t trials = 0;
    std::uint64_t seed = 0;
    std::vector<SuiteResult> suites;

    [[nodiscard]] bool all_passed() const;
    [[nodiscard]] std::string to_string() const;
};

VerifyReport run_verify(const CohomologyRing& ring, std::size_t trials, std::uint64_t seed);

/// Per-suite seeds so suites do not depend on each other's trial counts.
std::uint64_t suite_seed(std::uint64_t seed, std::uint64_t suite);

}  // namespace sullivan

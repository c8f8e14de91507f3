#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace nhs {

/// One measured quantity: the worst value over a suite and where it occurred.
struct CheckResult {
    std::string name;
    double worst = 0.0;
    double tolerance = 0.0;
    /// Informational checks report a value without asserting it.
    bool informational = false;
    std::string worst_at;
    std::size_t samples = 0;
    std::size_t failures = 0;  // evaluations that threw instead of producing a value

    bool passed() const noexcept { return informational || (failures == 0 && worst <= tolerance); }
    void record(double value, const std::string& where);
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckResult> checks;

    bool passed() const noexcept;
    /// The failing check with the largest worst/tolerance ratio, if any.
    const CheckResult* worst_offender() const noexcept;
};

enum class Suite { conservation, appendix, ptfold, all };
Suite parse_suite(std::string_view name);

struct VerifyOptions {
    std::size_t trials = 500;
    std::uint64_t seed = 1;
    std::size_t momenta_per_center = 10;
    /// Replace every center by [[H_A, H_AB], [+H_AB^dagger, H_B + i g]]:
    /// the conservation suite must then fail.
    bool negative_control = false;
};

/// |1 - |r|^2 - |t|^2| for both solvers, formula/direct agreement, the
/// reality of a and c, b~ = conj(b), and the substituted-back residual.
SuiteReport run_conservation_suite(const VerifyOptions& opts);

/// Reality of det(Delta), conjugate symmetry of the A-block of Delta^{-1}
/// through both the LU and the cofactor route, agreement of those routes,
/// and det(M_ij) = conj(det(M_ji)).
SuiteReport run_appendix_suite(const VerifyOptions& opts);

/// Similarity exactness of both folds, PT symmetry of assembled graphs,
/// structural validity of folded centers and end-to-end conservation.
SuiteReport run_ptfold_suite(const VerifyOptions& opts);

std::vector<SuiteReport> run_suites(Suite suite, const VerifyOptions& opts);

}  // namespace nhs

#ifndef ICEKERNEL_VERIFY_HPP
#define ICEKERNEL_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace icekernel {

/// One verification item.  `pass` is authoritative: most checks pass when
/// residual <= tolerance, but sensitivity controls invert the comparison
/// (the detail string says so), and exact checks report residual 0 or 1
/// against tolerance 0.
struct CheckResult {
    std::string name;
    double residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    std::string detail;
};

/// Knobs shared by all suites.  tol == 0 keeps each check's built-in
/// tolerance; a positive value overrides every inexact check (exact
/// integer/polynomial checks ignore it).  max_order == 0 keeps the
/// per-suite defaults.  exact_regime switches the slice-chain check from
/// machine doubles to the cyclotomic field.
struct VerifyOptions {
    std::uint64_t seed = 1;
    double tol = 0.0;
    int max_order = 0;
    int brute_cap = 7;
    bool exact_regime = false;
};

std::vector<CheckResult> verify_determinants(const VerifyOptions& opts);
std::vector<CheckResult> verify_fourier(const VerifyOptions& opts);
std::vector<CheckResult> verify_recurrences(const VerifyOptions& opts);
std::vector<CheckResult> verify_refined(const VerifyOptions& opts);

/// Dispatch by suite name; "all" concatenates the four suites in the order
/// above.  Throws Error on an unknown name.
std::vector<CheckResult> verify_suite(const std::string& suite, const VerifyOptions& opts);

/// True iff every item passed.
bool all_passed(const std::vector<CheckResult>& results);

}  // namespace icekernel

#endif

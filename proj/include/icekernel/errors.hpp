#ifndef ICEKERNEL_ERRORS_HPP
#define ICEKERNEL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace icekernel {

/// Base class for all icekernel error conditions.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A factorial was requested for a negative argument.  For the closed-form
/// refined counts this signals a degenerate instance outside the formula's
/// domain rather than a plain usage error.
struct NegativeFactorial : Error {
    using Error::Error;
};

/// Laurent division left a remainder above the accepted floor.  The callers
/// rely on identities that guarantee exact divisibility, so this means the
/// identity failed (or a convention is wrong), not that the input is merely
/// inconvenient.
struct InexactDivision : Error {
    using Error::Error;
};

/// Spectral parameters coincide (mod pi) where a determinant representation
/// needs them distinct.
struct SingularConfiguration : Error {
    using Error::Error;
};

/// A matrix entry denominator sin(eta/2 +- (x-y)) vanished.
struct PoleInEntries : Error {
    using Error::Error;
};

/// A power-determinant ratio that must be real (after phase normalization)
/// came out with a large imaginary part.
struct NonRealResult : Error {
    using Error::Error;
};

/// Enumeration was requested beyond the configured brute-force cap.
struct OrderTooLarge : Error {
    using Error::Error;
};

/// Half-turn classes exist only for even order.
struct OddOrderForHalfTurn : Error {
    using Error::Error;
};

/// Matrix fails the alternating-sign constraints.
struct InvalidAsm : Error {
    using Error::Error;
};

/// Closed-form refined count requested where the formula degenerates
/// (half-turn order 2); use the enumeration table instead.
struct DegenerateOrder : Error {
    using Error::Error;
};

/// An exact ratio that must produce an integer count did not.
struct NonIntegerResult : Error {
    using Error::Error;
};

/// All resampling attempts hit a pole of the sampled function.
struct SamplingSingularity : Error {
    using Error::Error;
};

/// Least-squares fit of a proportionality constant had nothing to fit
/// against (the reference function vanishes on all samples).
struct DegenerateFit : Error {
    using Error::Error;
};

/// The probe point of the constant-extraction formula hit a pole.
struct ProbePole : Error {
    using Error::Error;
};

/// An exact polynomial identity left a nonzero residual.
struct IdentityFailed : Error {
    using Error::Error;
};

}  // namespace icekernel

#endif

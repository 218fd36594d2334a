#ifndef ICEKERNEL_SPECTRAL_HPP
#define ICEKERNEL_SPECTRAL_HPP

#include <random>
#include <vector>

#include "icekernel/errors.hpp"

namespace icekernel {

inline constexpr double kCriticalEta = 2.0943951023931953;  // 2*pi/3

/// Crossing parameter plus the flattened list u_0..u_{2n-1} of spectral
/// parameters.  The row and column parameters are views into that list:
/// x_1 = u_0, x_{i+1} = u_i (i = 1..n-1), y_j = u_{n+j-1} (j = 1..n).
struct SpectralConfig {
    double eta = kCriticalEta;
    std::vector<double> u;

    int order() const { return static_cast<int>(u.size()) / 2; }

    double x(int i) const { return u[static_cast<std::size_t>(i - 1)]; }  // 1-based
    double y(int j) const {
        return u[static_cast<std::size_t>(order() + j - 1)];  // 1-based
    }

    /// All parameters equal (useful only for weight evaluation; the
    /// determinant representations are singular here).
    static SpectralConfig homogeneous(int n, double eta_val, double value = 0.0) {
        SpectralConfig c;
        c.eta = eta_val;
        c.u.assign(static_cast<std::size_t>(2 * n), value);
        return c;
    }
};

void require_order(const SpectralConfig& cfg);  // throws Error on odd/empty u

/// Uniform double in [0,1) built from the top 53 bits of the generator, so
/// the stream is identical across platforms and standard libraries.
inline double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Random configuration with parameters in [-0.4, 0.4], pairwise separation
/// >= min_sep and every weight denominator |sin(eta/2 +- (x-y))| >= 1e-4.
/// Tighter separations keep more of the space but condition the determinant
/// representations badly; tests that pin tolerances near 1e-10 should ask
/// for a few times 1e-2.
SpectralConfig random_admissible(int n, double eta, std::mt19937_64& rng,
                                 double min_sep = 1e-3);

}  // namespace icekernel

#endif

#include "icekernel/fourier.hpp"

#include <algorithm>
#include <cmath>

#include "icekernel/ik.hpp"
#include "icekernel/spectral.hpp"

namespace icekernel {

FourierSupportSpec FourierSupportSpec::for_f(int order) {
    if (order < 1) throw Error("support spec needs a positive order");
    FourierSupportSpec s;
    s.order = order;
    for (int k = 1; k <= 3 * order - 1; ++k) {
        if (k % 3 == 0) continue;
        s.exponents.push_back(3 * order - 2 * k);
    }
    return s;
}

FourierSupportSpec FourierSupportSpec::for_g(int order) {
    if (order < 1) throw Error("support spec needs a positive order");
    FourierSupportSpec s;
    s.order = order;
    for (int k = 1; k <= 3 * order; ++k) {
        if (k % 3 == 2) continue;
        s.exponents.push_back(3 * order - 2 * k + 1);
    }
    return s;
}

bool FourierSupportSpec::contains(int e) const {
    return std::find(exponents.begin(), exponents.end(), e) != exponents.end();
}

int FourierSupportSpec::max_exponent() const {
    if (exponents.empty()) throw Error("empty support spec");
    return exponents.front();
}

bool FourierSupportSpec::is_negation_closed() const {
    return std::all_of(exponents.begin(), exponents.end(),
                       [this](int e) { return contains(-e); });
}

namespace {

constexpr double kTwoPi = 6.283185307179586476925287;

CPoly sampled_poly(const std::vector<double>& fixed, double eta, bool companion) {
    if (fixed.empty() || fixed.size() % 2 == 0)
        throw Error("pole-cleared sampling needs an odd count (2n-1) of fixed parameters");
    const int n = static_cast<int>(fixed.size() + 1) / 2;
    const int nsamp = 8 * n + 2;     // > 2*(3n+1), so no mode below aliases
    const int max_mode = 3 * n + 1;  // keep a margin beyond the predicted support

    // Poles of the determinant formula as a function of the free variable:
    // the fixed row parameters (pair-difference denominator) and the column
    // parameters shifted by +-eta/2 (weight denominators).  Sample grids
    // must keep clear of all of them (mod pi) or accuracy collapses.
    std::vector<double> centers(fixed.begin(), fixed.begin() + (n - 1));
    for (int j = 0; j < n; ++j) {
        const double yj = fixed[static_cast<std::size_t>(n - 1 + j)];
        centers.push_back(yj - eta / 2);
        centers.push_back(yj + eta / 2);
    }

    for (int attempt = 0; attempt < 5; ++attempt) {
        const double phase = 0.123 + 0.0137 * attempt;
        bool ok = true;
        std::vector<std::complex<double>> samples(static_cast<std::size_t>(nsamp));
        for (int m = 0; m < nsamp && ok; ++m) {
            const double u = phase + kTwoPi * m / nsamp;
            for (double c : centers) {
                if (std::abs(std::sin(u - c)) < 1e-3) {
                    ok = false;
                    break;
                }
            }
            if (!ok) break;

            SpectralConfig cfg;
            cfg.eta = eta;
            cfg.u.reserve(fixed.size() + 1);
            cfg.u.push_back(u);
            cfg.u.insert(cfg.u.end(), fixed.begin(), fixed.end());
            double z;
            try {
                z = companion ? kuperberg_companion(cfg) : ik_determinant(cfg);
            } catch (const PoleInEntries&) {
                ok = false;
                break;
            } catch (const SingularConfiguration&) {
                ok = false;
                break;
            }
            double prod = 1.0;
            for (double ui : fixed) prod *= std::sin(u - ui);
            samples[static_cast<std::size_t>(m)] = z * prod;
        }
        if (!ok) continue;

        // Inverse discrete transform; exact for any mode with |e| < nsamp/2
        // even though the grid is phase-shifted.  Coefficients are recorded
        // unpruned out to max_mode so callers can inspect the leakage at
        // modes the support spec excludes.
        CPoly p;
        for (int e = -max_mode; e <= max_mode; ++e) {
            std::complex<double> acc(0.0, 0.0);
            for (int m = 0; m < nsamp; ++m) {
                const double u = phase + kTwoPi * m / nsamp;
                acc += samples[static_cast<std::size_t>(m)] * std::polar(1.0, -e * u);
            }
            p.set(e, acc / static_cast<double>(nsamp));
        }
        return p;
    }
    throw SamplingSingularity("no admissible sample grid after phase shifts");
}

CPoly divided_poly(const std::vector<double>& fixed, double eta, bool companion) {
    CPoly p = sampled_poly(fixed, eta, companion);
    p.prune(1e-10 * std::max(1.0, p.max_abs()));  // sampling noise would pollute the division
    for (double ui : fixed) p = laurent_div_exact(p, sin_u_minus(ui), 1e-6);
    return p;
}

}  // namespace

CPoly f_poly(const std::vector<double>& fixed, double eta) {
    return sampled_poly(fixed, eta, false);
}

CPoly g_poly(const std::vector<double>& fixed, double eta) {
    return sampled_poly(fixed, eta, true);
}

CPoly z_poly_in_u(const std::vector<double>& fixed, double eta) {
    return divided_poly(fixed, eta, false);
}

CPoly v_poly_in_u(const std::vector<double>& fixed, double eta) {
    return divided_poly(fixed, eta, true);
}

}  // namespace icekernel

#include "icekernel/spectral.hpp"

#include <cmath>

namespace icekernel {

void require_order(const SpectralConfig& cfg) {
    if (cfg.u.empty() || cfg.u.size() % 2 != 0)
        throw Error("spectral configuration needs an even, positive number of parameters");
}

SpectralConfig random_admissible(int n, double eta, std::mt19937_64& rng, double min_sep) {
    if (n < 1) throw Error("random_admissible: order must be positive");
    SpectralConfig cfg;
    cfg.eta = eta;
    for (int attempt = 0; attempt < 10000; ++attempt) {
        cfg.u.clear();
        for (int k = 0; k < 2 * n; ++k) cfg.u.push_back(-0.4 + 0.8 * uniform01(rng));

        bool ok = true;
        for (std::size_t i = 0; i < cfg.u.size() && ok; ++i)
            for (std::size_t j = i + 1; j < cfg.u.size() && ok; ++j)
                ok = std::abs(cfg.u[i] - cfg.u[j]) >= min_sep;
        for (int i = 1; i <= n && ok; ++i)
            for (int j = 1; j <= n && ok; ++j) {
                const double d = cfg.x(i) - cfg.y(j);
                ok = std::abs(std::sin(eta / 2 + d)) >= 1e-4 &&
                     std::abs(std::sin(eta / 2 - d)) >= 1e-4;
            }
        if (ok) return cfg;
    }
    throw Error("random_admissible: could not draw an admissible configuration");
}

}  // namespace icekernel

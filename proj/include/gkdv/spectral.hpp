#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "gkdv/fft.hpp"
#include "gkdv/field.hpp"
#include "gkdv/grid.hpp"

namespace gkdv::spectral {

// FFT realization of the multiplier operators D_x^s, d/dx, D_x^{-1} and the
// Airy group exp(-t d^3/dx^3) on the 2R-periodic truncation of the line.
//
// Conventions:
//  - angular wavenumbers kappa_m = pi*m/R, m = -N/2..N/2-1;
//  - the Nyquist mode m = -N/2 has no conjugate partner, so odd-order symbols
//    (odd derivatives, the kappa^3 exponent of the Airy group) are zeroed
//    there; this keeps every multiplier conjugate-symmetric and hence keeps
//    real fields real. With the zeroed generator the Airy multiplier at the
//    Nyquist bin is exactly 1, so the group stays unitary and the group law
//    holds on all of the grid.

inline std::function<void(const std::string&)>& diagnostic_sink() {
    static std::function<void(const std::string&)> sink = [](const std::string& msg) {
        std::cerr << "gkdv: " << msg << '\n';
    };
    return sink;
}

/// kappa^3 symbol with the Nyquist entry zeroed (generator of the Airy group).
inline std::vector<double> kappa_cubed(const SpectralGrid& g) {
    std::vector<double> k3(g.n_points);
    for (int b = 0; b < g.n_points; ++b) {
        const double k = g.wavenumber(b);
        k3[b] = (g.mode(b) == -g.n_points / 2) ? 0.0 : k * k * k;
    }
    return k3;
}

inline std::vector<cdouble> multiplier_fractional(const SpectralGrid& g, double s) {
    std::vector<cdouble> m(g.n_points);
    for (int b = 0; b < g.n_points; ++b) {
        const double k = std::abs(g.wavenumber(b));
        if (s == 0.0)
            m[b] = 1.0;  // identity, including the zero mode
        else if (k == 0.0)
            m[b] = 0.0;  // |kappa|^s vanishes for s > 0 and is projected out for s < 0
        else
            m[b] = std::pow(k, s);
    }
    return m;
}

inline std::vector<cdouble> multiplier_derivative(const SpectralGrid& g, int order) {
    if (order < 1 || order > 3) throw std::invalid_argument("spatial_derivative: order must be 1..3");
    std::vector<cdouble> m(g.n_points);
    for (int b = 0; b < g.n_points; ++b) {
        if (order % 2 == 1 && g.mode(b) == -g.n_points / 2) {
            m[b] = 0.0;  // Nyquist zeroed for odd orders (realness)
            continue;
        }
        const cdouble ik{0.0, g.wavenumber(b)};
        cdouble p{1.0, 0.0};
        for (int i = 0; i < order; ++i) p *= ik;
        m[b] = p;
    }
    return m;
}

inline std::vector<cdouble> multiplier_inverse(const SpectralGrid& g) {
    std::vector<cdouble> m(g.n_points);
    for (int b = 0; b < g.n_points; ++b) {
        const double k = std::abs(g.wavenumber(b));
        m[b] = (k == 0.0) ? 0.0 : 1.0 / k;
    }
    return m;
}

inline std::vector<cdouble> multiplier_airy(const SpectralGrid& g, double t) {
    const std::vector<double> k3 = kappa_cubed(g);
    std::vector<cdouble> m(g.n_points);
    for (int b = 0; b < g.n_points; ++b) m[b] = std::polar(1.0, k3[b] * t);
    return m;
}

inline Field apply_multiplier(const Field& f, const std::vector<cdouble>& m) {
    std::vector<cdouble> spec = fft::forward(f.values);
    for (std::size_t b = 0; b < spec.size(); ++b) spec[b] *= m[b];
    fft::inverse_inplace(spec);
    return Field(f.grid, std::move(spec));
}

inline void require_finite(const Field& f, const char* op) {
    if (!f.all_finite()) throw std::invalid_argument(std::string(op) + ": non-finite values in field");
}

/// Riesz fractional derivative D_x^s = |kappa|^s. For s < 0 the zero mode is
/// projected out (mean-free convention); s = 0 is the exact identity.
inline Field fractional_derivative(const Field& f, double s) {
    require_finite(f, "fractional_derivative");
    if (s == 0.0) return f;
    return apply_multiplier(f, multiplier_fractional(f.grid, s));
}

/// d^order/dx^order via (i*kappa)^order, order in 1..3.
inline Field spatial_derivative(const Field& f, int order) {
    require_finite(f, "spatial_derivative");
    return apply_multiplier(f, multiplier_derivative(f.grid, order));
}

/// D_x^{-1} = |kappa|^{-1} with the zero mode dropped. Exact only on
/// mean-free inputs; a diagnostic is emitted when discarded mass is visible.
inline Field inverse_derivative(const Field& f) {
    require_finite(f, "inverse_derivative");
    const double mean = std::abs(f.mean_real());
    const double scale = f.max_abs();
    if (scale > 0.0 && mean > 1e-6 * scale)
        diagnostic_sink()("inverse_derivative: input has non-negligible mean (" +
                          std::to_string(mean) + "); zero mode discarded");
    return apply_multiplier(f, multiplier_inverse(f.grid));
}

/// Airy group e^{-t d^3/dx^3}: solution at time t of v_t + v_xxx = 0 with
/// v(0) = f, realized as the unimodular multiplier e^{i kappa^3 t}.
inline Field airy_group(const Field& f, double t) {
    require_finite(f, "airy_group");
    if (!std::isfinite(t)) throw std::invalid_argument("airy_group: non-finite time");
    return apply_multiplier(f, multiplier_airy(f.grid, t));
}

}  // namespace gkdv::spectral

#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace gkdv {

/// Uniform periodic spatial grid on [-R, R).
///
/// Points are x_j = -R + j*dx, j = 0..N-1, with dx = 2R/N; the right endpoint
/// is identified with the left one. Wavenumbers follow the angular convention
/// kappa_m = pi*m/R for m = -N/2..N/2-1.
struct SpectralGrid {
    double half_width = 0.0;  // R
    int n_points = 0;         // N, even, >= 2

    SpectralGrid() = default;
    SpectralGrid(double R, int N) : half_width(R), n_points(N) {
        if (!(R > 0.0)) throw std::invalid_argument("SpectralGrid: R must be positive");
        if (N < 2 || N % 2 != 0) throw std::invalid_argument("SpectralGrid: N must be even and >= 2");
    }

    double spacing() const { return 2.0 * half_width / n_points; }

    double point(int j) const { return -half_width + j * spacing(); }

    std::vector<double> points() const {
        std::vector<double> xs(n_points);
        for (int j = 0; j < n_points; ++j) xs[j] = point(j);
        return xs;
    }

    /// Signed mode index of FFT bin b (m = b for b < N/2, m = b - N otherwise).
    int mode(int b) const { return b < n_points / 2 ? b : b - n_points; }

    /// Angular wavenumber of FFT bin b.
    double wavenumber(int b) const { return std::numbers::pi * mode(b) / half_width; }

    bool operator==(const SpectralGrid&) const = default;
};

/// Uniform time grid on [-T, T], both endpoints included (midpoint 0 if M = 1).
struct TimeGrid {
    double half_span = 0.0;  // T
    int n_points = 0;        // M >= 1

    TimeGrid() = default;
    TimeGrid(double T, int M) : half_span(T), n_points(M) {
        if (!(T >= 0.0)) throw std::invalid_argument("TimeGrid: T must be non-negative");
        if (M < 1) throw std::invalid_argument("TimeGrid: M must be >= 1");
    }

    double point(int l) const {
        if (n_points == 1) return 0.0;
        return -half_span + l * (2.0 * half_span / (n_points - 1));
    }

    std::vector<double> points() const {
        std::vector<double> ts(n_points);
        for (int l = 0; l < n_points; ++l) ts[l] = point(l);
        return ts;
    }

    bool operator==(const TimeGrid&) const = default;
};

}  // namespace gkdv

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "gkdv/grid.hpp"

namespace gkdv {

using cdouble = std::complex<double>;

/// Complex-valued samples over a SpectralGrid. Real fields carry zero
/// (or negligible) imaginary parts; all spectral operators preserve realness.
struct Field {
    SpectralGrid grid;
    std::vector<cdouble> values;

    Field() = default;
    explicit Field(const SpectralGrid& g) : grid(g), values(g.n_points, cdouble{0.0, 0.0}) {}
    Field(const SpectralGrid& g, std::vector<cdouble> v) : grid(g), values(std::move(v)) {
        if (static_cast<int>(values.size()) != g.n_points)
            throw std::invalid_argument("Field: values length does not match grid");
    }

    int size() const { return grid.n_points; }

    /// Sample a real-valued function of x.
    template <class F>
    static Field sample(const SpectralGrid& g, F&& f) {
        Field out(g);
        for (int j = 0; j < g.n_points; ++j) out.values[j] = cdouble{f(g.point(j)), 0.0};
        return out;
    }

    double max_abs() const {
        double m = 0.0;
        for (const auto& v : values) m = std::max(m, std::abs(v));
        return m;
    }

    double max_abs_imag() const {
        double m = 0.0;
        for (const auto& v : values) m = std::max(m, std::abs(v.imag()));
        return m;
    }

    double mean_real() const {
        double s = 0.0;
        for (const auto& v : values) s += v.real();
        return values.empty() ? 0.0 : s / static_cast<double>(values.size());
    }

    /// Discrete L2 norm (1/N-normalized, matching the quadrature convention).
    double l2_norm() const {
        double s = 0.0;
        for (const auto& v : values) s += std::norm(v);
        return values.empty() ? 0.0 : std::sqrt(s / static_cast<double>(values.size()));
    }

    bool all_finite() const {
        return std::all_of(values.begin(), values.end(), [](const cdouble& v) {
            return std::isfinite(v.real()) && std::isfinite(v.imag());
        });
    }

    std::vector<double> real_part() const {
        std::vector<double> r(values.size());
        for (std::size_t i = 0; i < values.size(); ++i) r[i] = values[i].real();
        return r;
    }
};

namespace io {

// Flat binary layout: header {N: u64 LE, R: f64 LE} followed by N (re, im)
// f64 LE pairs. Extension ".field".

inline void write_field(std::ostream& os, const Field& f) {
    const std::uint64_t n = static_cast<std::uint64_t>(f.grid.n_points);
    const double r = f.grid.half_width;
    os.write(reinterpret_cast<const char*>(&n), sizeof(n));
    os.write(reinterpret_cast<const char*>(&r), sizeof(r));
    for (const auto& v : f.values) {
        const double re = v.real(), im = v.imag();
        os.write(reinterpret_cast<const char*>(&re), sizeof(re));
        os.write(reinterpret_cast<const char*>(&im), sizeof(im));
    }
}

inline Field read_field(std::istream& is) {
    std::uint64_t n = 0;
    double r = 0.0;
    is.read(reinterpret_cast<char*>(&n), sizeof(n));
    is.read(reinterpret_cast<char*>(&r), sizeof(r));
    if (!is) throw std::runtime_error("read_field: truncated header");
    Field f(SpectralGrid(r, static_cast<int>(n)));
    for (auto& v : f.values) {
        double re = 0.0, im = 0.0;
        is.read(reinterpret_cast<char*>(&re), sizeof(re));
        is.read(reinterpret_cast<char*>(&im), sizeof(im));
        v = cdouble{re, im};
    }
    if (!is) throw std::runtime_error("read_field: truncated payload");
    return f;
}

inline void save_field(const std::string& path, const Field& f) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("save_field: cannot open " + path);
    write_field(os, f);
}

inline Field load_field(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::runtime_error("load_field: cannot open " + path);
    return read_field(is);
}

}  // namespace io
}  // namespace gkdv

#pragma once

#include <complex>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include <fftw3.h>

namespace gkdv::fft {

using cdouble = std::complex<double>;

namespace detail {

// FFTW planning is not thread-safe; execution on plan-owned buffers is fine
// as long as each plan (and its buffers) stays on one thread. Plans are
// cached per thread and per size.
inline std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
}

struct PlanPair {
    int n = 0;
    fftw_complex* in = nullptr;
    fftw_complex* out = nullptr;
    fftw_plan forward = nullptr;
    fftw_plan inverse = nullptr;

    explicit PlanPair(int n_) : n(n_) {
        in = fftw_alloc_complex(n);
        out = fftw_alloc_complex(n);
        std::lock_guard<std::mutex> lock(planner_mutex());
        forward = fftw_plan_dft_1d(n, in, out, FFTW_FORWARD, FFTW_ESTIMATE);
        inverse = fftw_plan_dft_1d(n, in, out, FFTW_BACKWARD, FFTW_ESTIMATE);
    }
    ~PlanPair() {
        std::lock_guard<std::mutex> lock(planner_mutex());
        fftw_destroy_plan(forward);
        fftw_destroy_plan(inverse);
        fftw_free(in);
        fftw_free(out);
    }
    PlanPair(const PlanPair&) = delete;
    PlanPair& operator=(const PlanPair&) = delete;
};

inline PlanPair& plans_for(int n) {
    thread_local std::map<int, std::unique_ptr<PlanPair>> cache;
    auto& slot = cache[n];
    if (!slot) slot = std::make_unique<PlanPair>(n);
    return *slot;
}

inline void execute(const cdouble* src, cdouble* dst, int n, bool forward_dir) {
    PlanPair& p = plans_for(n);
    auto* in = reinterpret_cast<cdouble*>(p.in);
    std::copy(src, src + n, in);
    fftw_execute(forward_dir ? p.forward : p.inverse);
    auto* out = reinterpret_cast<cdouble*>(p.out);
    if (forward_dir) {
        std::copy(out, out + n, dst);
    } else {
        const double scale = 1.0 / n;
        for (int i = 0; i < n; ++i) dst[i] = out[i] * scale;
    }
}

}  // namespace detail

/// Unnormalized forward DFT: F_k = sum_j f_j exp(-2*pi*i*j*k/n).
inline std::vector<cdouble> forward(const std::vector<cdouble>& f) {
    std::vector<cdouble> out(f.size());
    if (!f.empty()) detail::execute(f.data(), out.data(), static_cast<int>(f.size()), true);
    return out;
}

/// Inverse DFT with 1/n normalization; inverse(forward(f)) == f.
inline std::vector<cdouble> inverse(const std::vector<cdouble>& F) {
    std::vector<cdouble> out(F.size());
    if (!F.empty()) detail::execute(F.data(), out.data(), static_cast<int>(F.size()), false);
    return out;
}

inline void forward_inplace(std::vector<cdouble>& f) {
    if (!f.empty()) detail::execute(f.data(), f.data(), static_cast<int>(f.size()), true);
}

inline void inverse_inplace(std::vector<cdouble>& F) {
    if (!F.empty()) detail::execute(F.data(), F.data(), static_cast<int>(F.size()), false);
}

}  // namespace gkdv::fft

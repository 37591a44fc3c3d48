#include "nls/fft.hpp"

#include <fftw3.h>

#include <cstring>
#include <map>
#include <memory>
#include <mutex>

namespace nls {

namespace {

// FFTW's planner is not thread-safe; executing distinct plans is. Plans are
// cached per thread and each owns its own in-place buffer, so concurrent
// trajectories never share transform state. FFTW_ESTIMATE keeps plan choice
// (and hence floating-point summation order) reproducible run to run.
std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
}

struct Plan2D {
    int m = 0;
    fftw_complex* buf = nullptr;
    fftw_plan fwd = nullptr; // sign -i
    fftw_plan bwd = nullptr; // sign +i

    explicit Plan2D(int m_) : m(m_) {
        std::lock_guard<std::mutex> lock(planner_mutex());
        buf = fftw_alloc_complex(static_cast<size_t>(m) * m);
        fwd = fftw_plan_dft_2d(m, m, buf, buf, FFTW_FORWARD, FFTW_ESTIMATE);
        bwd = fftw_plan_dft_2d(m, m, buf, buf, FFTW_BACKWARD, FFTW_ESTIMATE);
    }
    ~Plan2D() {
        std::lock_guard<std::mutex> lock(planner_mutex());
        fftw_destroy_plan(fwd);
        fftw_destroy_plan(bwd);
        fftw_free(buf);
    }
    Plan2D(const Plan2D&) = delete;
    Plan2D& operator=(const Plan2D&) = delete;
};

struct Plan1D {
    int n = 0;
    fftw_complex* buf = nullptr;
    fftw_plan fwd = nullptr;
    fftw_plan bwd = nullptr;

    explicit Plan1D(int n_) : n(n_) {
        std::lock_guard<std::mutex> lock(planner_mutex());
        buf = fftw_alloc_complex(static_cast<size_t>(n));
        fwd = fftw_plan_dft_1d(n, buf, buf, FFTW_FORWARD, FFTW_ESTIMATE);
        bwd = fftw_plan_dft_1d(n, buf, buf, FFTW_BACKWARD, FFTW_ESTIMATE);
    }
    ~Plan1D() {
        std::lock_guard<std::mutex> lock(planner_mutex());
        fftw_destroy_plan(fwd);
        fftw_destroy_plan(bwd);
        fftw_free(buf);
    }
    Plan1D(const Plan1D&) = delete;
    Plan1D& operator=(const Plan1D&) = delete;
};

Plan2D& plan2d_for(int m) {
    thread_local std::map<int, std::unique_ptr<Plan2D>> cache;
    auto& slot = cache[m];
    if (!slot) slot = std::make_unique<Plan2D>(m);
    return *slot;
}

Plan1D& plan1d_for(int n) {
    thread_local std::map<int, std::unique_ptr<Plan1D>> cache;
    auto& slot = cache[n];
    if (!slot) slot = std::make_unique<Plan1D>(n);
    return *slot;
}

} // namespace

PhysicalField to_physical(const SpectralField& f) {
    const int m = f.grid.size();
    auto& plan = plan2d_for(m);
    std::memcpy(plan.buf, f.coeffs.data(), sizeof(Complex) * f.coeffs.size());
    fftw_execute(plan.bwd); // e^{+i<k,x>} synthesis, no scaling
    PhysicalField out(f.grid);
    std::memcpy(out.samples.data(), plan.buf, sizeof(Complex) * out.samples.size());
    return out;
}

SpectralField from_physical(const PhysicalField& p) {
    const int m = p.grid.size();
    auto& plan = plan2d_for(m);
    std::memcpy(plan.buf, p.samples.data(), sizeof(Complex) * p.samples.size());
    fftw_execute(plan.fwd);
    SpectralField out(p.grid);
    const double scale = 1.0 / (static_cast<double>(m) * m);
    const Complex* src = reinterpret_cast<const Complex*>(plan.buf);
    for (size_t i = 0; i < out.coeffs.size(); ++i) out.coeffs[i] = src[i] * scale;
    return out;
}

namespace fft {

void transform_rows(Complex* data, int n, long count, bool backward) {
    auto& plan = plan1d_for(n);
    for (long r = 0; r < count; ++r) {
        std::memcpy(plan.buf, data + r * n, sizeof(Complex) * n);
        fftw_execute(backward ? plan.bwd : plan.fwd);
        std::memcpy(data + r * n, plan.buf, sizeof(Complex) * n);
    }
}

} // namespace fft

} // namespace nls

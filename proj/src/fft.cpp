#include "hstokes/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>

namespace hstokes {
namespace fft {

namespace {

struct PlanKey {
    std::vector<int> shape;
    int axes_mode;   // 0 = all axes, 1 = leading axes batched over last, 2 = rows
    int sign;
    bool operator<(const PlanKey& o) const {
        if (shape != o.shape) return shape < o.shape;
        if (axes_mode != o.axes_mode) return axes_mode < o.axes_mode;
        return sign < o.sign;
    }
};

std::mutex g_mutex;
std::map<PlanKey, fftw_plan> g_plans;

fftw_complex* fc(cplx* p) { return reinterpret_cast<fftw_complex*>(p); }

fftw_plan get_plan(const PlanKey& key) {
    std::lock_guard<std::mutex> lock(g_mutex);
    auto it = g_plans.find(key);
    if (it != g_plans.end()) return it->second;

    std::vector<cplx> scratch;
    fftw_plan plan = nullptr;
    const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
    if (key.axes_mode == 0) {
        std::size_t total = 1;
        for (int m : key.shape) total *= static_cast<std::size_t>(m);
        scratch.resize(total);
        plan = fftw_plan_dft(static_cast<int>(key.shape.size()),
                             key.shape.data(), fc(scratch.data()),
                             fc(scratch.data()), key.sign, flags);
    } else if (key.axes_mode == 1) {
        const int rank = static_cast<int>(key.shape.size()) - 1;
        const int last = key.shape.back();
        std::size_t total = static_cast<std::size_t>(last);
        for (int d = 0; d < rank; ++d) total *= key.shape[d];
        scratch.resize(total);
        plan = fftw_plan_many_dft(rank, key.shape.data(), last,
                                  fc(scratch.data()), nullptr, last, 1,
                                  fc(scratch.data()), nullptr, last, 1,
                                  key.sign, flags);
    } else {
        const int m = key.shape[1];
        const int batch = key.shape[0];
        scratch.resize(static_cast<std::size_t>(m) * batch);
        plan = fftw_plan_many_dft(1, &m, batch, fc(scratch.data()), nullptr, 1,
                                  m, fc(scratch.data()), nullptr, 1, m,
                                  key.sign, flags);
    }
    g_plans.emplace(key, plan);
    return plan;
}

void run(const PlanKey& key, const cplx* in, cplx* out) {
    fftw_plan plan = get_plan(key);
    fftw_execute_dft(plan, fc(const_cast<cplx*>(in)), fc(out));
}

} // namespace

void forward(const Lattice& lat, const double* in, cplx* out) {
    const std::size_t n = lat.size();
    std::vector<cplx> tmp(n);
    for (std::size_t i = 0; i < n; ++i) tmp[i] = in[i];
    run({lat.shape, 0, FFTW_FORWARD}, tmp.data(), out);
}

void forward(const Lattice& lat, const cplx* in, cplx* out) {
    run({lat.shape, 0, FFTW_FORWARD}, in, out);
}

void inverse(const Lattice& lat, cplx* inout) {
    run({lat.shape, 0, FFTW_BACKWARD}, inout, inout);
    const double s = 1.0 / static_cast<double>(lat.size());
    const std::size_t n = lat.size();
    for (std::size_t i = 0; i < n; ++i) inout[i] *= s;
}

SpectralField forward(const Lattice& lat, const std::vector<double>& f) {
    SpectralField s;
    s.lat = lat;
    s.c.resize(lat.size());
    forward(lat, f.data(), s.c.data());
    return s;
}

std::vector<double> inverse_real(const SpectralField& s, double* imag_resid) {
    std::vector<cplx> tmp = s.c;
    inverse(s.lat, tmp.data());
    std::vector<double> out(tmp.size());
    double resid = 0.0;
    for (std::size_t i = 0; i < tmp.size(); ++i) {
        out[i] = tmp[i].real();
        double im = std::abs(tmp[i].imag());
        if (im > resid) resid = im;
    }
    if (imag_resid) *imag_resid = resid;
    return out;
}

void forward_tangential(const Lattice& lat, const cplx* in, cplx* out) {
    run({lat.shape, 1, FFTW_FORWARD}, in, out);
}

void inverse_tangential(const Lattice& lat, cplx* inout) {
    run({lat.shape, 1, FFTW_BACKWARD}, inout, inout);
    std::size_t m = 1;
    for (int d = 0; d + 1 < lat.rank(); ++d) m *= lat.shape[d];
    const double s = 1.0 / static_cast<double>(m);
    const std::size_t n = lat.size();
    for (std::size_t i = 0; i < n; ++i) inout[i] *= s;
}

void forward_rows(int batch, int m, cplx* inout) {
    run({{batch, m}, 2, FFTW_FORWARD}, inout, inout);
}

void inverse_rows(int batch, int m, cplx* inout) {
    run({{batch, m}, 2, FFTW_BACKWARD}, inout, inout);
    const double s = 1.0 / m;
    const std::size_t n = static_cast<std::size_t>(batch) * m;
    for (std::size_t i = 0; i < n; ++i) inout[i] *= s;
}

} // namespace fft
} // namespace hstokes

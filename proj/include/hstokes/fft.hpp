#pragma once

#include <complex>
#include <vector>

#include "hstokes/field.hpp"

namespace hstokes {

using cplx = std::complex<double>;

// Spectral coefficients of a real lattice field, unnormalized FFTW forward
// convention: c[k] = sum_x f(x) e^{-i xi_k . x_grid}.  Inverse transforms
// divide by the number of transformed samples.
struct SpectralField {
    Lattice lat;
    std::vector<cplx> c;

    std::size_t size() const { return c.size(); }
};

// Plan-cached complex FFTs.  Plans are created once per (shape, axes,
// direction) and executed via the new-array interface, so concurrent
// transforms on distinct buffers are safe.
namespace fft {

// All axes of the lattice.
void forward(const Lattice& lat, const double* in, cplx* out);
void forward(const Lattice& lat, const cplx* in, cplx* out);
void inverse(const Lattice& lat, cplx* inout);   // normalized

SpectralField forward(const Lattice& lat, const std::vector<double>& f);
// Returns the real part; if imag_resid is given, stores the max |Im| found.
std::vector<double> inverse_real(const SpectralField& s,
                                 double* imag_resid = nullptr);

// Transform over the leading rank-1 axes only; the last axis indexes
// independent columns (used by slice-wise tangential operators).
void forward_tangential(const Lattice& lat, const cplx* in, cplx* out);
void inverse_tangential(const Lattice& lat, cplx* inout);   // normalized

// Batched 1-d transform along contiguous rows of length m.
void forward_rows(int batch, int m, cplx* inout);
void inverse_rows(int batch, int m, cplx* inout);   // normalized

} // namespace fft

} // namespace hstokes

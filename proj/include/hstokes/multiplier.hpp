#pragma once

#include <functional>
#include <string>

#include "hstokes/fft.hpp"

namespace hstokes {

enum class ZeroModePolicy : std::uint8_t { zero, preserve };

// Fourier multiplier m(xi) acting on the doubled periodic box.  eval may
// return a non-finite value on its singular set; what happens then is
// decided by the policy at the zero mode and is an error elsewhere.
struct MultiplierSymbol {
    std::string name;
    std::function<cplx(const double* xi, int rank)> eval;
    ZeroModePolicy policy = ZeroModePolicy::preserve;
};

// inverse-FFT(m . FFT(f)), real part returned.  For symbols with Hermitian
// symmetry the imaginary residue is at rounding level; it is reported so
// callers can enforce their tolerance.
ScalarField apply_multiplier(const ScalarField& f, const MultiplierSymbol& m,
                             double* imag_resid = nullptr);

// Spectral-level application, used by the composed operator pipelines.
void apply_multiplier(SpectralField& s, const MultiplierSymbol& m);
std::vector<cplx> multiplier_table(const Lattice& lat,
                                   const MultiplierSymbol& m);

// Stock symbols.  Zero modes of the homogeneous ones (including the whole
// tangential-zero line of |xi'|^-1 kernels) are set to zero.
namespace symbols {

MultiplierSymbol identity();
MultiplierSymbol heat(double t);                       // e^{-t|xi|^2}
MultiplierSymbol riesz_full(int axis);                 // -i xi_i / |xi|
MultiplierSymbol riesz_tan(int axis);                  // -i xi_i / |xi'|
MultiplierSymbol inv_neg_laplace();                    // -1 / |xi|^2
MultiplierSymbol laplace();                            // -|xi|^2
MultiplierSymbol derivative(int axis);                 // i xi_i
MultiplierSymbol tangential_newtonian();               // -1 / (2 |xi'|)
MultiplierSymbol sobolev(double alpha, bool homogeneous);
MultiplierSymbol ukai_composite();   // (R'.S)(R'.S + R_n) as one symbol
MultiplierSymbol hilbert(double sign_factor = 1.0);    // -i sign(tau) (1-d)
// Riemann-Liouville symbol (a - i b sign(tau)) |tau|^{-sigma}; conjugated
// variant gives the right-sided operator.
MultiplierSymbol riemann_liouville(double sigma, double a, double b,
                                   bool conjugate);

} // namespace symbols

} // namespace hstokes

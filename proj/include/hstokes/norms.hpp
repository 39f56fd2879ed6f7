#pragma once

#include "hstokes/dyadic.hpp"

namespace hstokes {

// alpha / p / q exponent bundle.  Half-space fields are measured through an
// extension: the ",0" zero-trace classes use the zero extension, everything
// else the even one.
struct NormSpec {
    double alpha = 0.0;
    double p = 2.0;
    double q = 2.0;
    bool homogeneous = false;
    bool zero_class = false;
};

double lattice_lp(const Lattice& lat, const std::vector<double>& a, double p);

// Dyadic-shell Besov norm.  The inhomogeneous variant adds the low-pass
// block anchored at unit scale.
double besov_lattice(const Lattice& lat, const std::vector<double>& a,
                     const NormSpec& spec, const DyadicPartition& part);
double besov_norm(const ScalarField& f, const NormSpec& spec,
                  const DyadicPartition& part);
double besov_norm(const BoundaryField& f, const NormSpec& spec,
                  const DyadicPartition& part);

// Difference-quotient characterization (homogeneous, 0 < alpha < 1), used
// as a cross-check oracle:
//   ( sum_{0<|h|<=R} vol_h |h|^{-n-alpha q} ||f(.+h)-f||_p^q )^{1/q}
// scaled by the Gagliardo constant so the p = q = 2 case reproduces the
// Plancherel value exactly in the continuum limit.
double besov_norm_differences(const ScalarField& f, double alpha, double p,
                              double q, double cutoff = 0.0);
double besov_differences_lattice(const Lattice& lat,
                                 const std::vector<double>& a, double alpha,
                                 double p, double q, double cutoff);

// A(n,alpha) = int 2(1-cos z_1)/|z|^{n+2 alpha} dz
//            = 2 pi^{n/2} Gamma(1-alpha) / (alpha 4^alpha Gamma(n/2+alpha)).
double gagliardo_constant(int n, double alpha);

// Bessel/Riesz potential norm || (1 or |xi|^2)^{alpha/2} f ||_Lp, measured
// on the input's own domain (full box, or half box after extension).
double sobolev_norm(const ScalarField& f, double alpha, double p,
                    bool homogeneous, bool zero_class = false);
// Direct spectral sum for the p = 2 homogeneous case (Plancherel route).
double plancherel_sobolev(const ScalarField& f, double alpha);

// ( int ||D_t^{alpha/2} u||_Lp^q + ||u||_{H^alpha_p}^q dt )^{1/q}; the first
// two time samples are excluded from the accumulation (the causal left-zero
// convention makes D^sigma singular at t = 0 for data not vanishing there).
double mixed_aniso_norm(const ScalarSeries& u, double alpha, double p,
                        double q, bool homogeneous, bool zero_class = false);
double mixed_aniso_norm(const VectorSeries& u, double alpha, double p,
                        double q, bool homogeneous, bool zero_class = false);

// Computable stand-in for the dual-space norms of order (alpha-2) in space
// and alpha/2-1 in time: zero extension in space, odd periodization over
// [0, 2T) in time, one combined smoothing symbol
//   W(xi,tau) = ( |xi|^{2(2-alpha)} + |tau|^{2-alpha} )^{-1/2}
// (identity when alpha = 2), then L^q_t L^p_x.  Exactly the dual norm at
// p = q = 2 by Plancherel, an equivalent proxy otherwise.
double negative_norm_proxy(const ScalarSeries& f, double alpha, double p,
                           double q);
double negative_norm_proxy(const VectorSeries& f, double alpha, double p,
                           double q);
// Same quantity as a direct spectral sum (p = q = 2 only); oracle route.
double negative_norm_proxy_spectral(const ScalarSeries& f, double alpha);

} // namespace hstokes

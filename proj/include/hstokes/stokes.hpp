#pragma once

#include "hstokes/forcing.hpp"
#include "hstokes/transforms.hpp"

namespace hstokes {

struct StokesSolution {
    VectorSeries v;
    ScalarSeries p;
    std::string provenance;   // forced | initial | combined
    GridSpec grid;
    TimeSpec time;
};

struct SolveOptions {
    double correction_factor = 1.0;   // test hook: scales the gradient-part
                                      // constant of the forced solve
    double div_tol = 1e-8;
    double trace_tol = 1e-8;
};

// Heat part of the forced solution: component-wise zero-boundary volume
// heat potential (odd-image kernel).
VectorSeries velocity_part_u(const VectorSeries& f);

// Gradient part: w solves Delta w = div F, w = 0 on {x_n = 0}, with
// F_j = (1/2) Ustar f_j (j < n) and F_n the tangential Newtonian trace
// convolution of sum_j d_j Ustar f_j, Ustar the reflected heat potential.
// Solved as a box-periodic particular solution plus the harmonic lift of
// its boundary trace, which keeps the assembled no-slip exact.
ScalarSeries velocity_part_w(const VectorSeries& f);

// p1 = 2 sum_j P_{x_n} d_j U f_j,  p2 = 2 sum_j P_{x_n} R'_j U2 f_j with
// U f_j / U2 f_j the boundary traces of the direct heat potential and of
// minus its normal derivative.
std::pair<ScalarSeries, ScalarSeries> pressure_forced(const VectorSeries& f);

// Splitting p2 = Q + d_t P available when div f = 0:
//   Q_hat = 2 |xi'| e^{-x_n |xi'|} (U f_n)_hat,
//   P_hat = (2/|xi'|) e^{-x_n |xi'|} (U f_n)_hat.
std::pair<ScalarSeries, ScalarSeries> pressure_p2_split(const VectorSeries& f);

StokesSolution solve_forced(const ForcingSpec& f, const SolveOptions& opt = {});

// Initial-value problem solved by the Riesz-operator representation
// (Ukai's formula): V1/V2 data combinations, zero-boundary heat flow,
// the composed Riesz symbol U, and a Poisson-extended pressure.
ScalarField ukai_V1(const VectorField& v0);
std::vector<ScalarField> ukai_V2(const VectorField& v0);
ScalarField ukai_U(const ScalarField& g);

StokesSolution solve_initial(const VectorField& v0, const TimeSpec& time,
                             const SolveOptions& opt = {});

StokesSolution solve_full(const ForcingSpec& f, const VectorField& v0,
                          const SolveOptions& opt = {});

// div T = grad pi + w with pi the zero-boundary solution of
// Delta pi = -d_i d_j T_ij per slice and w divergence-free.
std::pair<ScalarSeries, VectorSeries> helmholtz_split(
    const std::vector<ScalarSeries>& tensor);

} // namespace hstokes

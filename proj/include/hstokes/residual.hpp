#pragma once

#include "hstokes/stokes.hpp"

namespace hstokes {

// Finite-difference diagnostics of a solution: centered differences in t
// and x, momentum taken over interior points and t in [2 dt, T - dt].
// Each figure is reported relative to a scale that stays fixed under
// refinement so convergence orders read off directly.
struct ResidualRecord {
    double momentum_l2 = 0.0;    // ||v_t - Lap v + grad p - f|| / data scale
    double momentum_max = 0.0;
    double divergence_l2 = 0.0;  // ||div v|| / ||grad v||
    double divergence_max = 0.0;
    double boundary_rel = 0.0;   // max |v| on {x_n=0} / max |v|
    double initial_rel = 0.0;    // ||v(0) - v0||_2 / ||v0||_2
    double pressure_harmonic = 0.0;   // ||Lap p|| / ||grad p||
    double data_scale = 0.0;
};

ResidualRecord pde_residual(const StokesSolution& sol,
                            const VectorSeries* f = nullptr,
                            const VectorField* v0 = nullptr);

struct ResidualGate {
    double momentum = 0.0, divergence = 0.0, boundary = 0.0, initial = 0.0,
           harmonic = 0.0;
    static ResidualGate thresholds(const GridSpec& g, const TimeSpec& t);
    // empty string when the record passes, else the failed figures
    std::string check(const ResidualRecord& r) const;
};

} // namespace hstokes

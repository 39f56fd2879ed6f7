#pragma once

#include <cstdint>
#include <string>

#include "hstokes/fft.hpp"

namespace hstokes {

// Data-generation family shared by forcing, initial data and synthetic
// velocity ensembles.  Fields are built as the spectral curl of an
// enveloped band-limited random potential, so their doubled-box divergence
// vanishes to rounding by construction.
struct FieldFamily {
    std::string family = "bandlimited";   // bandlimited | boundary | zero
    double bandwidth = 2.5;               // max |xi| of potential modes
    double amplitude = 1.0;
    double min_tan_freq = 0.0;            // drop 0 < |xi'| < this from the potential
    int time_waves = 2;                   // temporal richness of the forcing
};

// Smooth plateau envelope (erf transitions) confining data to the interior
// of the half-space box; the boundary family hugs {x_n = 0} at distance
// delta = 4 h, scaled with refinement.
class Envelope {
public:
    Envelope(const GridSpec& grid, const FieldFamily& fam);
    double operator()(const double* x, int n) const;
    double lo(int axis) const { return lo_[axis]; }
    double hi(int axis) const { return hi_[axis]; }
    double scale(int axis) const { return s_[axis]; }

private:
    std::vector<double> lo_, hi_, s_;
};

struct ForcingSpec {
    VectorSeries f;                        // direct form, half-space snapshots
    std::vector<ScalarSeries> tensor;      // optional n*n components, row-major

    bool has_tensor() const { return !tensor.empty(); }
};

// Static doubled-box field, spectrally divergence-free, supported in the
// envelope plateau; deterministic in seed.
VectorField random_static_divfree(std::uint64_t seed, const GridSpec& grid,
                                  const FieldFamily& fam);

// Forcing history f(t) = ramp(t) (r(t) X + s(t) Y) from two static
// divergence-free fields; optionally also returns the potential tensor F
// with div F = f (spectral differentiation identity).
ForcingSpec random_divfree_forcing(std::uint64_t seed, const GridSpec& grid,
                                   const TimeSpec& time, const FieldFamily& fam,
                                   bool with_tensor = false);

// Divergence-free, zero-trace initial data, unit L^2.
VectorField random_divfree_initial(std::uint64_t seed, const GridSpec& grid,
                                   const FieldFamily& fam);

// Zero-trace divergence-free velocity-like history (product-estimate
// ensembles).
VectorSeries random_velocity_series(std::uint64_t seed, const GridSpec& grid,
                                    const TimeSpec& time,
                                    const FieldFamily& fam);

// || xi . f_hat || / || |xi| |f_hat| || of the zero extension: relative
// spectral divergence, scale invariant.
double divergence_rel(const VectorField& f);

} // namespace hstokes

#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "hstokes/grid.hpp"

namespace hstokes {

// Row-major periodic sample lattice.  period[d] is the spatial period of
// axis d; frequencies are 2*pi*k/period with k in wrap-around (fftfreq)
// order.  This is the shape the spectral engine works on; fields convert
// to it via their extension mode.
struct Lattice {
    std::vector<int> shape;
    std::vector<double> period;

    int rank() const { return static_cast<int>(shape.size()); }
    std::size_t size() const {
        std::size_t s = 1;
        for (int m : shape) s *= static_cast<std::size_t>(m);
        return s;
    }
    double cell_volume() const {
        double v = 1.0;
        for (int d = 0; d < rank(); ++d) v *= period[d] / shape[d];
        return v;
    }
    double freq(int axis, int index) const;       // angular frequency of a mode
    int freq_index(int axis, int index) const;    // signed mode number
    bool operator==(const Lattice& o) const {
        return shape == o.shape && period == o.period;
    }
};

enum class Extent : std::uint8_t { half, full };
enum class ExtendMode : std::uint8_t { odd, even, zero };

// Real scalar samples over the half-space box or over the doubled periodic
// box, normal axis last.  Immutable by convention once built: every
// operation returns a new field.
class ScalarField {
public:
    ScalarField() = default;
    ScalarField(const GridSpec& grid, Extent extent, double fill = 0.0);
    ScalarField(const GridSpec& grid, Extent extent, std::vector<double> samples);

    const GridSpec& grid() const { return grid_; }
    Extent extent() const { return extent_; }
    const std::vector<double>& samples() const { return a_; }
    std::vector<double>& samples() { return a_; }
    std::size_t size() const { return a_.size(); }
    double operator[](std::size_t i) const { return a_[i]; }
    double& operator[](std::size_t i) { return a_[i]; }

    std::vector<int> shape() const;               // per-axis counts, normal last
    Lattice lattice() const;                      // doubled-box lattice (full extent only)
    std::size_t normal_count() const;
    std::size_t tangential_count() const;         // product of tangential sizes

    static std::size_t expected_size(const GridSpec& g, Extent e);

private:
    GridSpec grid_{};
    Extent extent_ = Extent::half;
    std::vector<double> a_;
};

// Samples over the tangential grid on {x_n = 0}.
class BoundaryField {
public:
    BoundaryField() = default;
    BoundaryField(const GridSpec& grid, double fill = 0.0);
    BoundaryField(const GridSpec& grid, std::vector<double> samples);

    const GridSpec& grid() const { return grid_; }
    const std::vector<double>& samples() const { return a_; }
    std::vector<double>& samples() { return a_; }
    std::size_t size() const { return a_.size(); }
    Lattice lattice() const;

private:
    GridSpec grid_{};
    std::vector<double> a_;
};

struct VectorField {
    std::vector<ScalarField> comp;   // n components on one grid

    VectorField() = default;
    VectorField(const GridSpec& grid, Extent extent);
    const GridSpec& grid() const { return comp.at(0).grid(); }
    Extent extent() const { return comp.at(0).extent(); }
    int dim() const { return static_cast<int>(comp.size()); }
};

struct ScalarSeries {
    TimeSpec time;
    std::vector<ScalarField> snap;   // N_t + 1 snapshots, snap[k] at t = k*dt

    int steps() const { return time.N_t; }
};

struct VectorSeries {
    TimeSpec time;
    std::vector<VectorField> snap;

    int steps() const { return time.N_t; }
};

// Extension of a half-space field onto the doubled periodic box.  The odd
// mode forces 0 on {x_n = 0} and on the seam {x_n = +-L_nrm}.
ScalarField extend(const ScalarField& f, ExtendMode mode);
// Reflection x_n -> -x_n on the doubled box (an involution).
ScalarField reflect(const ScalarField& f);
// Section of a full field back onto the half-space samples.
ScalarField restrict_half(const ScalarField& f);

VectorField extend(const VectorField& f, ExtendMode mode);
VectorField restrict_half(const VectorField& f);

// Trace on {x_n = 0}.
BoundaryField boundary_trace(const ScalarField& f);

// Discrete L^p norm, cell-volume weighted.  p = infinity is the max norm.
double lp_norm(const ScalarField& f, double p);
double lp_norm(const VectorField& f, double p);   // pointwise euclidean magnitude
double max_abs(const ScalarField& f);
double max_abs(const VectorField& f);

// In-place linear algebra helpers used throughout.
void axpy(double a, const ScalarField& x, ScalarField& y);
void scale(ScalarField& x, double a);

} // namespace hstokes
